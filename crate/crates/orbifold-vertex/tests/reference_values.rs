//! Frozen reference coefficients checked against every pipeline that can
//! produce them.

use num_bigint::BigInt;
use orbifold_vertex::fock::{vertex_by_transfer, TransferMode};
use orbifold_vertex::group::Group;
use orbifold_vertex::pyramid::{pyramid_series, Frame};
use orbifold_vertex::rpc::generating_function;
use orbifold_vertex::vertex;
use orbifold_vertex::{Monomial, Partition, Series};
use serde::Deserialize;

#[derive(Deserialize)]
struct Reference {
    cutoff: u32,
    cases: Vec<Case>,
}

#[derive(Deserialize)]
struct Case {
    kind: String,
    leg: Vec<u32>,
    frame: Option<Frame>,
    by_degree: Vec<i64>,
    term_count: Option<usize>,
    coefficients: Vec<Coefficient>,
}

#[derive(Deserialize)]
struct Coefficient {
    exp: Vec<u32>,
    coef: i64,
}

fn reference() -> Reference {
    serde_json::from_str(include_str!("data/reference.json")).unwrap()
}

fn pipelines(case: &Case, cutoff: u32) -> Vec<(&'static str, Series)> {
    let leg = Partition::new(case.leg.clone()).unwrap();
    let staircase = leg.is_staircase();
    let mut out = Vec::new();
    match case.kind.as_str() {
        "z2z2_vertex" => {
            out.push(("enumeration", vertex::enumerate_3d(&leg, Group::Z2xZ2, cutoff).unwrap()));
            out.push(("transfer", vertex_by_transfer(Group::Z2xZ2, &leg, TransferMode::Standard, cutoff).unwrap()));
            match staircase {
                Some(0) => out.push(("closed", vertex::closed_z2z2_nolegs(cutoff).unwrap())),
                Some(m) => out.push(("closed", vertex::one_leg_z2z2_check(m, cutoff).unwrap().rhs)),
                None => {}
            }
        }
        "z4_vertex" => {
            out.push(("enumeration", vertex::enumerate_3d(&leg, Group::Zn(4), cutoff).unwrap()));
            out.push(("transfer", vertex_by_transfer(Group::Zn(4), &leg, TransferMode::Standard, cutoff).unwrap()));
            out.push(("closed", vertex::vertex_closed_zn(4, &vertex::Legs::third(leg), cutoff).unwrap()));
        }
        "pyramids" => {
            out.push(("enumeration", pyramid_series(cutoff)));
            out.push(("closed", vertex::z_pyramid_closed(cutoff).unwrap()));
            out.push(("interlacing families", generating_function(&leg, 0, Frame::Antidiagonal, cutoff)));
            out.push(("transfer", vertex_by_transfer(Group::Z2xZ2, &leg, TransferMode::RpcAntidiag, cutoff).unwrap()));
        }
        "restricted" => {
            let frame = case.frame.unwrap();
            let mode = match frame {
                Frame::Antidiagonal => TransferMode::RpcAntidiag,
                Frame::Diagonal => TransferMode::RpcDiag,
            };
            out.push(("interlacing families", generating_function(&leg, 0, frame, cutoff)));
            out.push(("transfer", vertex_by_transfer(Group::Z2xZ2, &leg, mode, cutoff).unwrap()));
            if let Some(m) = staircase {
                out.push(("closed", vertex::restricted_closed(m, cutoff).unwrap()));
            }
        }
        other => panic!("unknown case kind {other}"),
    }
    out
}

#[test]
fn every_pipeline_matches_the_reference() {
    let data = reference();
    let mut checked = 0;
    for case in &data.cases {
        for (name, series) in pipelines(case, data.cutoff) {
            let label = format!("{} {:?} {:?} via {name}", case.kind, case.leg, case.frame);
            let sums: Vec<BigInt> = case.by_degree.iter().map(|&c| BigInt::from(c)).collect();
            assert_eq!(series.degree_sums(), sums, "{label}");
            if let Some(n) = case.term_count {
                assert_eq!(series.len(), n, "{label}");
            }
            for c in &case.coefficients {
                assert_eq!(
                    series.coefficient(&Monomial::new(c.exp.clone())),
                    BigInt::from(c.coef),
                    "{label} at {:?}",
                    c.exp
                );
            }
            checked += 1;
        }
    }
    assert!(checked >= 40, "only {checked} pipeline runs");
}

#[test]
fn reference_covers_both_frames() {
    let data = reference();
    let frames: Vec<Frame> = data.cases.iter().filter_map(|c| c.frame).collect();
    assert!(frames.contains(&Frame::Antidiagonal) && frames.contains(&Frame::Diagonal));
}

#[test]
fn two_box_configurations_of_the_empty_vertex() {
    // The origin is colored q0 and its three neighbours qa, qb, qc.
    let v = vertex::closed_z2z2_nolegs(4).unwrap();
    for exp in [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]] {
        assert_eq!(v.coeff(&exp), BigInt::from(1), "{exp:?}");
    }
    assert_eq!(v.coeff(&[2, 0, 0, 0]), BigInt::from(0));
    assert_eq!(v.coeff(&[0, 1, 0, 0]), BigInt::from(0));
}
