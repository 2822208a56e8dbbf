//! Partitions, their edge sequences, diagonals and interlacing relations.

use orbifold_vertex::partition::interlaces;
use orbifold_vertex::{Cell, InterlaceKind, InterlaceTag, Partition, Result, Sign};

fn main() -> Result<()> {
    let nu: Partition = "4,2,1".parse()?;
    println!("ν = {nu}, |ν| = {}, ν' = {}", nu.size(), nu.conjugate());

    let edges: String = (-5..5).map(|t| if nu.edge_value(t) == Sign::Plus { '+' } else { '-' }).collect();
    println!("edge sequence on -5..5: {edges}");
    println!("charges (+ at t≥0, - at t<0): {:?}", nu.edge_sequence().charges());

    for k in -3..=3 {
        println!(
            "content {k:>2}: {} cells, {} with content ≡ {k} (mod 2)",
            nu.diagonal_count(k),
            nu.residue_count(k, 2)?
        );
    }
    println!("hook of (0,0): {:?}", nu.hook(Cell::new(0, 0))?);

    let a: Partition = "3,1".parse()?;
    let b: Partition = "2".parse()?;
    let row = InterlaceKind::new(InterlaceTag::Row, Sign::Minus);
    let column = InterlaceKind::new(InterlaceTag::Column, Sign::Minus);
    println!("{a} ≻ {b}: {}", interlaces(&a, &b, row));
    println!("{a} ≻' {b}: {}", interlaces(&a, &b, column));

    let staircases: Vec<String> =
        Partition::up_to_size(6).iter().filter(|p| p.is_staircase().is_some()).map(ToString::to_string).collect();
    println!("staircases up to size 6: {}", staircases.join(" "));
    Ok(())
}
