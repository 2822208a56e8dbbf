//! One-leg orbifold vertices by direct enumeration of 3D partitions and by
//! closed-form products.

use orbifold_vertex::group::Group;
use orbifold_vertex::vertex::{
    closed_z2z2_nolegs, enumerate_3d, enumerate_legged, one_leg_zn_staircase, vertex_closed_zn, Legs,
};
use orbifold_vertex::{Partition, Result};

fn main() -> Result<()> {
    let degree = 6;
    let empty = Partition::empty();

    let enumerated = enumerate_3d(&empty, Group::Z2xZ2, degree)?;
    println!("Z2xZ2, no legs: {:?}", enumerated.degree_sums());
    println!("  matches the product formula: {}", enumerated == closed_z2z2_nolegs(degree)?);

    for n in 2..=4 {
        let leg: Partition = "2,1".parse()?;
        let enumerated = enumerate_3d(&leg, Group::zn(n)?, degree)?;
        let closed = vertex_closed_zn(n, &Legs::third(leg), degree)?;
        println!("Z{n}, leg (2,1): {:?}, closed form agrees: {}", enumerated.degree_sums(), enumerated == closed);
    }

    let staircase = one_leg_zn_staircase(3, degree)?;
    println!("Z4, staircase (3,2,1) by the branch formula: {:?}", staircase.degree_sums());

    // The leg may sit along any of the three axes.
    let first = enumerate_legged(&Legs::new("2".parse()?, empty.clone(), empty), Group::Z2xZ2, 4)?;
    println!("Z2xZ2 with leg (2) on the first axis: {first}");
    Ok(())
}
