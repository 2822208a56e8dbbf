//! Pyramid partitions in both slice frames and their colored generating function.

use orbifold_vertex::pyramid::{antidiagonal_slices, color_weight, enumerate_pyramids, pyramid_series};
use orbifold_vertex::vertex::z_pyramid_closed;
use orbifold_vertex::Result;

fn main() -> Result<()> {
    let pyramids = enumerate_pyramids(4);
    println!("{} pyramid partitions with at most 4 bricks", pyramids.len());

    let largest = pyramids.iter().max_by_key(|p| p.brick_count()).expect("nonempty");
    println!("diagonal slices of one with {} bricks:", largest.brick_count());
    for (k, slice) in largest.slices() {
        println!("  {k:>2}: {slice}");
    }
    println!("the same in antidiagonal slices:");
    for (k, slice) in antidiagonal_slices(largest)? {
        println!("  {k:>2}: {slice}");
    }
    println!("color weight: {:?}", color_weight(largest).exps());

    let enumerated = pyramid_series(6);
    let closed = z_pyramid_closed(6)?;
    println!("counts by size: {:?}", enumerated.degree_sums());
    println!("enumeration equals product formula: {}", enumerated == closed);
    Ok(())
}
