#![allow(dead_code)]

use num_bigint::BigInt;
use orbifold_vertex::{Monomial, Partition, Series};
use proptest::prelude::*;

pub const ARITY: usize = 4;

pub fn p(rows: &[u32]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

/// Exponent vectors of total degree at most `cutoff`.
pub fn monomial(cutoff: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=cutoff, ARITY)
        .prop_filter("degree within cutoff", move |e| e.iter().sum::<u32>() <= cutoff)
        .prop_map(Monomial::new)
}

/// Sparse series with small signed coefficients.
pub fn series(cutoff: u32) -> impl Strategy<Value = Series> {
    proptest::collection::vec((monomial(cutoff), -4i64..=4), 0..6)
        .prop_map(move |terms| Series::from_terms(ARITY, cutoff, terms.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

/// Series with constant term 1, hence invertible.
pub fn unit_series(cutoff: u32) -> impl Strategy<Value = Series> {
    series(cutoff).prop_map(move |s| {
        let fixed = Series::one(ARITY, cutoff).sub(&Series::one(ARITY, cutoff).scale(&s.constant_term())).unwrap();
        s.add(&fixed).unwrap()
    })
}

/// Partitions with at most `max_size` boxes.
pub fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_size.max(1), 0..=max_size as usize)
        .prop_map(|mut rows| {
            rows.sort_unstable_by(|a, b| b.cmp(a));
            rows
        })
        .prop_filter("size within bound", move |rows| rows.iter().sum::<u32>() <= max_size)
        .prop_map(|rows| Partition::new(rows).unwrap())
}

/// Monomials of positive degree in the four color variables.
pub fn positive_monomial(max_degree: u32) -> impl Strategy<Value = Monomial> {
    monomial(max_degree).prop_filter("positive degree", |m| m.degree() > 0)
}

pub mod checks {
    use std::collections::BTreeMap;

    use orbifold_vertex::partition::{interlaces, InterlaceKind, InterlaceTag, Sign};
    use orbifold_vertex::pyramid::Frame;
    use orbifold_vertex::qseries::LaurentMonomial;
    use orbifold_vertex::qseries::{macmahon, pochhammer};
    use orbifold_vertex::rpc::{realize, restrict};
    use orbifold_vertex::{Monomial, Partition, Series};
    use proptest::prelude::*;

    pub fn ring_axioms(a: &Series, b: &Series, c: &Series) -> Result<(), TestCaseError> {
        let arity = a.arity();
        let cutoff = a.cutoff();
        let zero = Series::zero(arity, cutoff);
        let one = Series::one(arity, cutoff);
        prop_assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
        prop_assert_eq!(a.add(&b.add(c).unwrap()).unwrap(), a.add(b).unwrap().add(c).unwrap());
        prop_assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
        prop_assert_eq!(a.mul(&b.mul(c).unwrap()).unwrap(), a.mul(b).unwrap().mul(c).unwrap());
        prop_assert_eq!(a.mul(&b.add(c).unwrap()).unwrap(), a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), zero);
        Ok(())
    }

    /// `M(x) = M(x/q) · (x; q)_∞` with `q` the product of all four colors.
    pub fn macmahon_shift(x: &Monomial, cutoff: u32) -> Result<(), TestCaseError> {
        let q = Monomial::new(vec![1; x.arity()]);
        let lx = LaurentMonomial::from(x);
        let lhs = macmahon(&lx, &q, cutoff).unwrap();
        let shifted = macmahon(&lx.mul_mono(&q, -1), &q, cutoff).unwrap();
        let rhs = shifted.mul(&pochhammer(x, &q, cutoff).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs, "x = {:?}", x);
        Ok(())
    }

    /// The edge sequence has as many `+1` at `t ≥ 0` as `-1` at `t < 0`.
    pub fn charge_zero(nu: &Partition) -> Result<(), TestCaseError> {
        let (plus, minus) = nu.edge_sequence().charges();
        prop_assert_eq!(plus, minus, "{}", nu);
        Ok(())
    }

    /// `a ≻ b` exactly when conjugate rows differ by 0 or 1.
    pub fn interlacing_by_columns(a: &Partition, b: &Partition) -> Result<(), TestCaseError> {
        let direct = interlaces(a, b, InterlaceKind::new(InterlaceTag::Row, Sign::Minus));
        let (ac, bc) = (a.conjugate(), b.conjugate());
        let n = ac.len().max(bc.len());
        let by_columns = (0..n).all(|i| {
            let d = i64::from(ac.row(i)) - i64::from(bc.row(i));
            d == 0 || d == 1
        });
        prop_assert_eq!(direct, by_columns, "{} vs {}", a, b);
        Ok(())
    }

    pub fn restrict_realize(family: &BTreeMap<i64, Partition>, leg: &Partition, l: u32) -> Result<(), TestCaseError> {
        for frame in [Frame::Antidiagonal, Frame::Diagonal] {
            let pyramid = realize(family, leg, l, frame).unwrap();
            let back = restrict(&pyramid, leg, l, frame).unwrap();
            prop_assert_eq!(&back.slices, family, "{} l={} {:?}", leg, l, frame);
        }
        Ok(())
    }
}
