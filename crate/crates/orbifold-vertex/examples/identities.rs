//! Series identities relating the Z2xZ2 vertex, the Z4 vertex and restricted
//! pyramid partitions, checked for the first few staircase legs.

use orbifold_vertex::vertex::{
    one_leg_z2z2_check, symmetry_check, z2z2_rpc_plus_check, z2z2_z4_check, z4_rpc_minus_check, Legs,
};
use orbifold_vertex::{Partition, Result};

fn main() -> Result<()> {
    let degree = 5;
    for m in 1..=3 {
        for check in [
            one_leg_z2z2_check(m, degree)?,
            z2z2_z4_check(m, degree)?,
            z2z2_rpc_plus_check(m, degree)?,
            z4_rpc_minus_check(m, degree)?,
        ] {
            let verdict = match check.first_difference() {
                None => "holds".to_string(),
                Some((mono, a, b)) => format!("fails at {:?}: {a} vs {b}", mono.exps()),
            };
            println!("{:<50} {verdict}", check.name);
        }
    }
    let leg: Partition = "2,1".parse()?;
    println!("cyclic leg symmetry for (2,1): {}", symmetry_check(&Legs::third(leg), 4)?);
    Ok(())
}
