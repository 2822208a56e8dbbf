mod common;

use num_bigint::BigInt;
use orbifold_vertex::group::Group;
use orbifold_vertex::qseries::pochhammer;
use orbifold_vertex::rpc::interlacing_families;
use orbifold_vertex::vertex::{self, Legs};
use orbifold_vertex::{Monomial, Partition, Series};
use proptest::prelude::*;

use common::{checks, partition, positive_monomial, series, unit_series};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn series_form_a_ring(a in series(6), b in series(6), c in series(6)) {
        checks::ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn inversion_is_an_involution(f in unit_series(6)) {
        let inv = f.invert().unwrap();
        prop_assert_eq!(f.mul(&inv).unwrap(), Series::one(4, 6));
        prop_assert_eq!(inv.invert().unwrap(), f);
    }

    #[test]
    fn charge_is_zero(nu in partition(10)) {
        checks::charge_zero(&nu)?;
    }

    #[test]
    fn interlacing_matches_column_criterion(a in partition(8), b in partition(8)) {
        checks::interlacing_by_columns(&a, &b)?;
    }

    #[test]
    fn conjugation_reflects_diagonals(nu in partition(12), k in -6i64..=6) {
        let conj = nu.conjugate();
        prop_assert_eq!(conj.conjugate(), nu.clone());
        prop_assert_eq!(nu.diagonal_count(k), conj.diagonal_count(-k));
        prop_assert_eq!(conj.size(), nu.size());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn macmahon_shift_identity(x in positive_monomial(3)) {
        checks::macmahon_shift(&x, 8)?;
    }

    #[test]
    fn pochhammer_is_invertible(a in positive_monomial(3)) {
        let q = Monomial::new(vec![1; 4]);
        let poch = pochhammer(&a, &q, 8).unwrap();
        prop_assert_eq!(poch.mul(&poch.invert().unwrap()).unwrap(), Series::one(4, 8));
    }

    #[test]
    fn realize_then_restrict_is_identity(leg in partition(4), l in 0u32..3, pick in any::<prop::sample::Index>()) {
        let families = interlacing_families(&leg, 4);
        let family = &families[pick.index(families.len())];
        checks::restrict_realize(family, &leg, l)?;
    }

    #[test]
    fn zn_vertices_count_configurations(n in 2u32..=4, leg in partition(3)) {
        let enumerated = vertex::enumerate_3d(&leg, Group::Zn(n), 5).unwrap();
        prop_assert!(enumerated.is_nonnegative());
        prop_assert_eq!(enumerated.constant_term(), BigInt::from(1));
        let closed = vertex::vertex_closed_zn(n, &Legs::third(leg.clone()), 5).unwrap();
        prop_assert_eq!(closed, enumerated, "n={} leg={}", n, leg);
    }
}

#[test]
fn staircase_diagonals_follow_the_closed_form() {
    for m in 0..=8u32 {
        let nu = Partition::staircase(m);
        let m = i64::from(m);
        for k in -(m + 2)..=(m + 2) {
            let expected = if k.abs() < m { (m - k.abs() + 1) / 2 } else { 0 };
            assert_eq!(i64::from(nu.diagonal_count(k)), expected, "m={m} k={k}");
        }
    }
}

#[test]
fn z2z2_vertices_are_nonnegative() {
    for leg in Partition::up_to_size(3) {
        let v = vertex::enumerate_3d(&leg, Group::Z2xZ2, 5).unwrap();
        assert!(v.is_nonnegative(), "{leg}");
        assert_eq!(v.constant_term(), BigInt::from(1));
    }
}
