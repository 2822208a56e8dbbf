//! Restricting pyramid partitions to the region cut out by a leg, rebuilding
//! a pyramid from a restricted family, and the staircase uniqueness scan.

use orbifold_vertex::pyramid::{enumerate_pyramids, Frame};
use orbifold_vertex::rpc::{generating_function, interlacing_families, realize, restrict, uniqueness_scan};
use orbifold_vertex::vertex::restricted_closed;
use orbifold_vertex::{Partition, Result};

fn main() -> Result<()> {
    let leg = Partition::staircase(2);

    // A pyramid built so that its restriction is a given family.
    let family = interlacing_families(&leg, 3)
        .into_iter()
        .max_by_key(|f| f.values().map(Partition::size).sum::<u32>())
        .expect("nonempty");
    let pyramid = realize(&family, &leg, 0, Frame::Antidiagonal)?;
    let anti = restrict(&pyramid, &leg, 0, Frame::Antidiagonal)?;
    let diag = restrict(&pyramid, &leg, 0, Frame::Diagonal)?;
    println!("ν={leg}: {} of {} bricks lie in the region", anti.brick_count(), pyramid.brick_count());
    println!("restriction recovers the family: {}", anti.slices == family);
    println!("both frames keep the same bricks: {}", anti.positions() == diag.positions());

    // Small pyramids never reach the region of a larger leg.
    let reaching = enumerate_pyramids(6)
        .iter()
        .filter(|p| restrict(p, &leg, 0, Frame::Diagonal).is_ok_and(|r| r.brick_count() > 0))
        .count();
    println!("pyramids with at most 6 bricks meeting the region: {reaching}");

    for frame in [Frame::Antidiagonal, Frame::Diagonal] {
        let z = generating_function(&leg, 0, frame, 6);
        println!("{frame:?}: {:?}", z.degree_sums());
    }
    println!(
        "closed form agrees: {}",
        generating_function(&leg, 0, Frame::Antidiagonal, 6) == restricted_closed(2, 6)?
    );

    let equal: Vec<String> = uniqueness_scan(5, &[0], None)?
        .into_iter()
        .filter(|row| row.complements_equal)
        .map(|row| row.leg.to_string())
        .collect();
    println!("legs up to size 5 whose two regions coincide: {}", equal.join(" "));
    Ok(())
}
