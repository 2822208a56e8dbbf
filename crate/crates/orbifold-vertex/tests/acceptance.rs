//! End-to-end acceptance checks. Runs with its own harness and prints one
//! `PASS`/`FAIL` line per criterion. Every comparison is exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use orbifold_vertex::fock::{exchange_relations, exponential_vacuum_relations_hold, vertex_by_transfer, TransferMode};
use orbifold_vertex::group::Group;
use orbifold_vertex::pyramid::{enumerate_pyramids, pyramid_series, Frame, PyramidPartition};
use orbifold_vertex::rpc::{generating_function, interlacing_families, realize, restrict, uniqueness_scan};
use orbifold_vertex::vertex::{self, Legs};
use orbifold_vertex::{Partition, Series};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use common::{checks, p};

/// Truncation degree for every series comparison.
const DEGREE: u32 = 6;
/// Allowed coefficient difference in every comparison.
const TOLERANCE: u32 = 0;

type Outcome = Result<Vec<String>, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn same(label: &str, lhs: &Series, rhs: &Series) -> Result<String, String> {
    assert_eq!(TOLERANCE, 0);
    match lhs.first_difference(rhs) {
        None => Ok(format!("{label}: {} terms agree", lhs.len())),
        Some((m, a, b)) => Err(format!("{label}: differ at {:?}: {a} vs {b}", m.exps())),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn zero_leg_z2z2() -> Outcome {
    let empty = Partition::empty();
    let closed = vertex::closed_z2z2_nolegs(DEGREE).map_err(err)?;
    let enumerated = vertex::enumerate_3d(&empty, Group::Z2xZ2, DEGREE).map_err(err)?;
    let transfer = vertex_by_transfer(Group::Z2xZ2, &empty, TransferMode::Standard, DEGREE).map_err(err)?;
    Ok(vec![same("enumeration vs closed", &enumerated, &closed)?, same("transfer vs closed", &transfer, &closed)?])
}

fn zero_leg_z4() -> Outcome {
    let closed = vertex::zn_nolegs(4, DEGREE).map_err(err)?;
    let transfer =
        vertex_by_transfer(Group::Zn(4), &Partition::empty(), TransferMode::Standard, DEGREE).map_err(err)?;
    Ok(vec![same("transfer vs closed", &transfer, &closed)?])
}

fn identity_family(make: fn(u32, u32) -> orbifold_vertex::Result<vertex::IdentityCheck>, ms: &[u32]) -> Outcome {
    ms.iter()
        .map(|&m| {
            let check = make(m, DEGREE).map_err(err)?;
            same(&check.name, &check.lhs, &check.rhs)
        })
        .collect()
}

fn one_leg_staircase() -> Outcome {
    identity_family(vertex::one_leg_z2z2_check, &[1, 2, 3, 4])
}

fn z2z2_vs_z4() -> Outcome {
    identity_family(vertex::z2z2_z4_check, &[1, 2, 3, 4])
}

fn uniqueness() -> Outcome {
    let mut lines = Vec::new();
    let rows = uniqueness_scan(6, &[0, 1], Some(10)).map_err(err)?;
    for row in &rows {
        if row.complements_equal != row.staircase {
            return Err(format!(
                "{} l={}: equal={} staircase={}",
                row.leg, row.shift, row.complements_equal, row.staircase
            ));
        }
    }
    let equal: Vec<String> =
        rows.iter().filter(|r| r.complements_equal && r.shift == 0).map(|r| r.leg.to_string()).collect();
    lines.push(format!("{} legs scanned, equal exactly for {}", rows.len() / 2, equal.join(" ")));

    let pyramids = enumerate_pyramids(8);
    for leg in [p(&[1]), p(&[2]), p(&[2, 1]), p(&[3, 1])] {
        let mut candidates: Vec<PyramidPartition> = pyramids.clone();
        for family in interlacing_families(&leg, 4) {
            for frame in [Frame::Antidiagonal, Frame::Diagonal] {
                candidates.push(realize(&family, &leg, 0, frame).map_err(err)?);
            }
        }
        let mut meeting = 0;
        let mut differing = Vec::new();
        for pp in &candidates {
            let anti = restrict(pp, &leg, 0, Frame::Antidiagonal).map_err(err)?;
            let diag = restrict(pp, &leg, 0, Frame::Diagonal).map_err(err)?;
            if anti.brick_count() + diag.brick_count() > 0 {
                meeting += 1;
            }
            if anti.positions() != diag.positions() {
                differing.push(pp.brick_count());
            }
        }
        let staircase = leg.is_staircase().is_some();
        match (staircase, differing.iter().min()) {
            (true, None) => lines.push(format!(
                "{leg}: restrictions agree on all {} pyramids, {meeting} of which meet the region",
                candidates.len()
            )),
            (false, Some(n)) => lines.push(format!(
                "{leg}: restrictions differ on {} of {} pyramids, smallest has {n} bricks",
                differing.len(),
                candidates.len()
            )),
            (true, Some(n)) => {
                return Err(format!("{leg}: staircase restrictions differ on a pyramid with {n} bricks"))
            }
            (false, None) => return Err(format!("{leg}: no pyramid separates the two restrictions")),
        }
        if staircase && meeting == 0 {
            return Err(format!("{leg}: no pyramid meets the region"));
        }
    }
    Ok(lines)
}

fn restricted_pyramids() -> Outcome {
    let mut lines = Vec::new();
    for m in 1..=3 {
        let nu = Partition::staircase(m);
        let plus = generating_function(&nu, 0, Frame::Antidiagonal, DEGREE);
        let minus = generating_function(&nu, 0, Frame::Diagonal, DEGREE);
        lines.push(same(&format!("m={m} frames"), &plus, &minus)?);
    }
    let two = p(&[2]);
    let plus = generating_function(&two, 0, Frame::Antidiagonal, DEGREE);
    let minus = generating_function(&two, 0, Frame::Diagonal, DEGREE);
    match plus.first_difference(&minus) {
        Some((m, a, b)) => {
            lines.push(format!("(2): coefficient of {:?} is {a} antidiagonal vs {b} diagonal", m.exps()))
        }
        None => return Err("(2): frames agree".into()),
    }
    for leg in [Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1])] {
        for frame in [Frame::Antidiagonal, Frame::Diagonal] {
            let base = generating_function(&leg, 0, frame, DEGREE);
            for l in 1..=2 {
                same(&format!("{leg} {frame:?} l={l}"), &generating_function(&leg, l, frame, DEGREE), &base)?;
            }
        }
    }
    lines.push("independent of l in {0,1,2} for 6 legs, both frames".into());
    Ok(lines)
}

fn pyramid_baseline() -> Outcome {
    let closed = vertex::z_pyramid_closed(DEGREE).map_err(err)?;
    let mut lines = vec![same("enumerated pyramids vs closed", &pyramid_series(DEGREE), &closed)?];
    for m in 1..=2 {
        let nu = Partition::staircase(m);
        let closed = vertex::restricted_closed(m, DEGREE).map_err(err)?;
        let enumerated = generating_function(&nu, 0, Frame::Antidiagonal, DEGREE);
        lines.push(same(&format!("m={m} restricted closed form"), &enumerated, &closed)?);
    }
    Ok(lines)
}

fn operator_identities() -> Outcome {
    let relations = exchange_relations(DEGREE).map_err(err)?;
    for r in &relations {
        if let Some(ket) = r.first_failure(4).map_err(err)? {
            return Err(format!("{} fails on |{ket}>", r.name));
        }
    }
    if !exponential_vacuum_relations_hold(4, DEGREE).map_err(err)? {
        return Err("vacuum relations for E fail".into());
    }
    Ok(vec![format!(
        "{} relations and the two vacuum relations hold on all kets with at most 4 boxes",
        relations.len()
    )])
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn properties() -> Outcome {
    let mut lines = Vec::new();
    let triples = (common::series(DEGREE), common::series(DEGREE), common::series(DEGREE));
    runner(100).run(&triples, |(a, b, c)| checks::ring_axioms(&a, &b, &c)).map_err(err)?;
    lines.push("ring axioms on 100 random triples".into());

    let xs = [[0, 1, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], [1, 1, 0, 0], [0, 2, 0, 1]];
    for x in xs {
        checks::macmahon_shift(&orbifold_vertex::Monomial::new(x.to_vec()), 8).map_err(err)?;
    }
    lines.push(format!("MacMahon shift identity for {} arguments", xs.len()));

    let legs = Partition::up_to_size(10);
    for nu in &legs {
        checks::charge_zero(nu).map_err(err)?;
    }
    lines.push(format!("charge zero for {} partitions", legs.len()));

    let small = Partition::up_to_size(8);
    for a in &small {
        for b in &small {
            checks::interlacing_by_columns(a, b).map_err(err)?;
        }
    }
    lines.push(format!("interlacing criterion on {} pairs", small.len() * small.len()));

    let mut families = 0;
    for leg in [Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1])] {
        for family in interlacing_families(&leg, 4) {
            for l in 0..2 {
                checks::restrict_realize(&family, &leg, l).map_err(err)?;
            }
            families += 1;
        }
    }
    lines.push(format!("restrict after realize on {families} families"));

    let mut vertices = vec![
        vertex::closed_z2z2_nolegs(DEGREE).map_err(err)?,
        vertex::zn_nolegs(4, DEGREE).map_err(err)?,
        vertex::z_pyramid_closed(DEGREE).map_err(err)?,
    ];
    for m in 1..=4 {
        vertices.push(vertex::enumerate_3d(&Partition::staircase(m), Group::Z2xZ2, DEGREE).map_err(err)?);
        vertices.push(vertex::one_leg_zn_staircase(m, DEGREE).map_err(err)?);
    }
    for n in 2..=4 {
        for nu in Partition::up_to_size(3) {
            vertices.push(vertex::vertex_closed_zn(n, &Legs::third(nu), DEGREE).map_err(err)?);
        }
    }
    if let Some(i) = vertices.iter().position(|v| !v.is_nonnegative()) {
        return Err(format!("vertex #{i} has a negative coefficient"));
    }
    lines.push(format!("nonnegative coefficients in {} vertex series", vertices.len()));
    Ok(lines)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("zero-leg Z2xZ2 triple agreement", zero_leg_z2z2),
        ("zero-leg Z4 transfer vs closed form", zero_leg_z4),
        ("one-leg staircase product formula", one_leg_staircase),
        ("Z2xZ2 vs Z4 one-leg relation", z2z2_vs_z4),
        ("staircase uniqueness", uniqueness),
        ("restricted pyramid identities", restricted_pyramids),
        ("pyramid baseline and restricted closed forms", pyramid_baseline),
        ("operator identities", operator_identities),
        ("property suite", properties),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(lines) => {
                println!("criterion {}: PASS  {name} ({secs:.2}s)", idx + 1);
                for line in lines {
                    println!("    {line}");
                }
            }
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s)", idx + 1);
                println!("    {reason}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
