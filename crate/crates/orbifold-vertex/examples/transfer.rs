//! Vertex operators on the partition basis: commutation relations, vacuum
//! expectations, and vertices as windowed operator products.

use orbifold_vertex::fock::{
    apply, evaluate_product, exchange_relations, vertex_by_transfer, Argument, Operator, TransferMode, TransferState,
};
use orbifold_vertex::group::Group;
use orbifold_vertex::{Partition, Result};

fn main() -> Result<()> {
    // Γ_-(q) adds horizontal strips weighted by q per box.
    let q = Argument::var(1, 0);
    let raised = apply(&Operator::GammaMinus(q.clone()), &TransferState::vacuum(1, 3))?;
    for (p, amp) in raised.amplitudes() {
        println!("coefficient of |{p}> in Γ-(q)|∅>: {amp}");
    }

    // <∅| Γ+(q) Γ-(q) |∅> = 1 / (1 - q²).
    let pairing = evaluate_product(&[Operator::GammaPlus(q.clone()), Operator::GammaMinus(q)], 1, 8)?;
    println!("<Γ+(q) Γ-(q)> = {pairing}");

    for relation in exchange_relations(4)? {
        println!("{:<16} holds on |λ| ≤ 2: {}", relation.name, relation.holds(2)?);
    }

    let leg: Partition = "2,1".parse()?;
    for (group, mode) in [
        (Group::Z2xZ2, TransferMode::Standard),
        (Group::Zn(3), TransferMode::Standard),
        (Group::Z2xZ2, TransferMode::RpcDiag),
    ] {
        let series = vertex_by_transfer(group, &leg, mode, 5)?;
        println!("{group:?} {mode:?}: {:?}", series.degree_sums());
    }
    Ok(())
}
