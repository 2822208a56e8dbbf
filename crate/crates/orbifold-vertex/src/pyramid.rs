//! Pyramid partitions stored as interlacing families of diagonal slices.
//!
//! A brick is addressed by a frame (diagonal or antidiagonal), a slice index
//! and a `(row, col)` cell of that slice's Young diagram. Each address also has
//! a position `(x, y, z)` in the brick stack: diagonal slices collect the
//! bricks with `x - y = k`, antidiagonal ones those with `x + y = k`, and `z`
//! is the depth below the top brick.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{interlaces, InterlaceKind, InterlaceTag, Partition, Sign};
use crate::qseries::{Monomial, Series};

/// Which family of slices a brick address refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    Diagonal,
    Antidiagonal,
}

impl Frame {
    pub fn other(self) -> Frame {
        match self {
            Frame::Diagonal => Frame::Antidiagonal,
            Frame::Antidiagonal => Frame::Diagonal,
        }
    }
}

/// The four brick colors; `slot` is the series variable index `(q0, qa, qb, qc)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Zero,
    A,
    B,
    C,
}

impl Color {
    pub fn slot(self) -> usize {
        match self {
            Color::Zero => 0,
            Color::A => 1,
            Color::B => 2,
            Color::C => 3,
        }
    }

    /// Color of diagonal slice `k`.
    pub fn of_diagonal(k: i64) -> Color {
        match k.rem_euclid(4) {
            0 => Color::Zero,
            1 => Color::B,
            2 => Color::C,
            _ => Color::A,
        }
    }
}

/// A brick address.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Brick {
    pub frame: Frame,
    pub slice: i64,
    pub row: u32,
    pub col: u32,
}

impl Brick {
    pub fn new(frame: Frame, slice: i64, row: u32, col: u32) -> Self {
        Brick { frame, slice, row, col }
    }

    pub fn diagonal(slice: i64, row: u32, col: u32) -> Self {
        Brick::new(Frame::Diagonal, slice, row, col)
    }

    pub fn antidiagonal(slice: i64, row: u32, col: u32) -> Self {
        Brick::new(Frame::Antidiagonal, slice, row, col)
    }

    /// Position `(x, y, z)` of the brick in the stack.
    pub fn position(&self) -> (i64, i64, i64) {
        let (bx, by, bz) = slice_origin(self.frame, self.slice);
        let (r, c) = (i64::from(self.row), i64::from(self.col));
        let h = 2 * (r + c);
        match self.frame {
            Frame::Diagonal => (bx + r - c, by + r - c, bz + h),
            Frame::Antidiagonal => (bx + r - c, by - r + c, bz + h),
        }
    }

    /// The address of the brick at `pos` in `frame`, if a brick sits there.
    pub fn from_position(frame: Frame, pos: (i64, i64, i64)) -> Option<Brick> {
        let (x, y, z) = pos;
        let slice = match frame {
            Frame::Diagonal => x - y,
            Frame::Antidiagonal => x + y,
        };
        let (bx, by, bz) = slice_origin(frame, slice);
        let (dx, dy, dz) = (x - bx, y - by, z - bz);
        let consistent = match frame {
            Frame::Diagonal => dx == dy,
            Frame::Antidiagonal => dx == -dy,
        };
        if !consistent || dz < 0 || dz % 2 != 0 {
            return None;
        }
        let h = dz / 2;
        if (h + dx) % 2 != 0 {
            return None;
        }
        let (r, c) = ((h + dx) / 2, (h - dx) / 2);
        if r < 0 || c < 0 {
            return None;
        }
        Some(Brick::new(frame, slice, r as u32, c as u32))
    }
}

/// Position of cell `(0, 0)` of slice `k`.
fn slice_origin(frame: Frame, k: i64) -> (i64, i64, i64) {
    let flip = match frame {
        Frame::Diagonal => -1,
        Frame::Antidiagonal => 1,
    };
    if k % 2 == 0 {
        let h = k / 2;
        (h, flip * h, 2 * h.abs())
    } else {
        let h = (k + 1) / 2;
        if h <= 0 {
            (h - 1, flip * h, 1 - 2 * h)
        } else {
            (h, flip * (h - 1), 2 * h - 1)
        }
    }
}

/// The same brick addressed in the other frame.
pub fn convert_frame(b: Brick) -> Brick {
    match b.frame {
        Frame::Antidiagonal => antidiagonal_to_diagonal(b.slice, b.row, b.col),
        Frame::Diagonal => Brick::from_position(Frame::Antidiagonal, b.position())
            .expect("every diagonal brick has an antidiagonal address"),
    }
}

/// Piecewise address map from antidiagonal slice `s` cell `(i, j)` to the diagonal frame.
fn antidiagonal_to_diagonal(s: i64, i: u32, j: u32) -> Brick {
    let (i, j) = (i64::from(i), i64::from(j));
    let even = s % 2 == 0;
    let k = if even { s / 2 } else { (s + 1) / 2 };
    let (slice, row, col) = match (k <= 0, even) {
        (true, true) if j >= i => (-2 * (j - i), i, i - k),
        (true, true) => (2 * (i - j), j, j - k),
        (true, false) if j >= i => (-2 * (j - i) - 1, i, i - k),
        (true, false) => (2 * (i - j) - 1, j, j - k + 1),
        (false, true) if j >= i => (-2 * (j - i), i + k, i),
        (false, true) => (2 * (i - j), j + k, j),
        (false, false) if j > i => (-2 * (j - i - 1) - 1, i + k, i),
        (false, false) => (2 * (i - j + 1) - 1, j + k - 1, j),
    };
    Brick::diagonal(slice, row as u32, col as u32)
}

/// Color of a brick.
pub fn color(b: Brick) -> Color {
    match b.frame {
        Frame::Diagonal => Color::of_diagonal(b.slice),
        Frame::Antidiagonal => Color::of_diagonal(convert_frame(b).slice),
    }
}

/// The relation between slices `k` and `k + 1` in a valid chain
/// `… ≺ π_{-2} ≺ π_{-1} ≺' π_0 ≻ π_1 ≻' π_2 ≻ …`.
pub fn chain_kind(k: i64) -> InterlaceKind {
    let tag = if k.rem_euclid(2) == 0 { InterlaceTag::Row } else { InterlaceTag::Column };
    let direction = if k >= 0 { Sign::Minus } else { Sign::Plus };
    InterlaceKind::new(tag, direction)
}

/// A finite pyramid partition, stored by its nonempty diagonal slices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PyramidPartition {
    slices: BTreeMap<i64, Partition>,
}

impl PyramidPartition {
    /// Wraps a slice map, dropping empty slices. Validity is not checked.
    pub fn from_slices(slices: BTreeMap<i64, Partition>) -> Self {
        PyramidPartition { slices: slices.into_iter().filter(|(_, p)| !p.is_empty()).collect() }
    }

    pub fn empty() -> Self {
        PyramidPartition::default()
    }

    pub fn slices(&self) -> &BTreeMap<i64, Partition> {
        &self.slices
    }

    /// Slice `k` (empty when absent).
    pub fn slice(&self, k: i64) -> Partition {
        self.slices.get(&k).cloned().unwrap_or_default()
    }

    pub fn brick_count(&self) -> u32 {
        self.slices.values().map(Partition::size).sum()
    }

    /// All bricks, in diagonal addresses.
    pub fn bricks(&self) -> impl Iterator<Item = Brick> + '_ {
        self.slices.iter().flat_map(|(&k, p)| p.cells().map(move |c| Brick::diagonal(k, c.j, c.i)))
    }

    /// Positions of all bricks.
    pub fn positions(&self) -> BTreeSet<(i64, i64, i64)> {
        self.bricks().map(|b| b.position()).collect()
    }

    /// Slice range that must be checked: the support plus one slice on each side of 0.
    fn span(&self) -> (i64, i64) {
        let lo = self.slices.keys().next().copied().unwrap_or(0).min(0);
        let hi = self.slices.keys().next_back().copied().unwrap_or(0).max(0);
        (lo - 1, hi)
    }

    fn with_cell(&self, k: i64, row: usize) -> PyramidPartition {
        let mut rows = self.slice(k).rows().to_vec();
        if row == rows.len() {
            rows.push(1);
        } else {
            rows[row] += 1;
        }
        let mut slices = self.slices.clone();
        slices.insert(k, Partition::from_sorted(rows));
        PyramidPartition { slices }
    }

    /// Pyramid partitions obtained by adding one brick.
    pub fn children(&self) -> Vec<PyramidPartition> {
        let (lo, hi) = self.span();
        let mut out = Vec::new();
        for k in lo..=hi + 1 {
            let p = self.slice(k);
            for row in 0..=p.len() {
                if row > 0 && p.row(row - 1) == p.row(row) {
                    continue;
                }
                let next = self.with_cell(k, row);
                let ok = interlaces(&next.slice(k - 1), &next.slice(k), chain_kind(k - 1))
                    && interlaces(&next.slice(k), &next.slice(k + 1), chain_kind(k));
                if ok {
                    out.push(next);
                }
            }
        }
        out
    }
}

/// `true` iff the diagonal slices satisfy the interlacing chain.
pub fn validate(p: &PyramidPartition) -> bool {
    let (lo, hi) = p.span();
    (lo..=hi).all(|k| interlaces(&p.slice(k), &p.slice(k + 1), chain_kind(k)))
}

/// Builds the partition whose cells are `cells` (`(row, col)`), if they form one.
fn shape_from_cells(cells: &BTreeSet<(u32, u32)>) -> Option<Partition> {
    let mut rows: Vec<u32> = Vec::new();
    for &(r, c) in cells {
        let r = r as usize;
        if rows.len() <= r {
            rows.resize(r + 1, 0);
        }
        if rows[r] != c {
            return None;
        }
        rows[r] += 1;
    }
    Partition::new(rows).ok().filter(|p| p.size() as usize == cells.len() && !p.rows().contains(&0))
}

/// Groups bricks of `frame` by slice and checks that each slice is a Young diagram.
pub fn slices_from_bricks(bricks: impl IntoIterator<Item = Brick>) -> Option<BTreeMap<i64, Partition>> {
    let mut groups: BTreeMap<i64, BTreeSet<(u32, u32)>> = BTreeMap::new();
    for b in bricks {
        groups.entry(b.slice).or_default().insert((b.row, b.col));
    }
    groups.into_iter().map(|(k, cells)| shape_from_cells(&cells).map(|p| (k, p))).collect()
}

/// The antidiagonal slices of a valid pyramid partition.
pub fn antidiagonal_slices(p: &PyramidPartition) -> Result<BTreeMap<i64, Partition>> {
    if !validate(p) {
        return Err(Error::InterlacingViolated);
    }
    slices_from_bricks(p.bricks().map(convert_frame)).ok_or(Error::InterlacingViolated)
}

/// Every pyramid partition with at most `max_bricks` bricks, graded by size
/// and sorted within each grade.
pub fn enumerate_pyramids(max_bricks: u32) -> Vec<PyramidPartition> {
    let mut out = vec![PyramidPartition::empty()];
    let mut level = vec![PyramidPartition::empty()];
    for _ in 0..max_bricks {
        let next: HashSet<PyramidPartition> = level.par_iter().flat_map_iter(|p| p.children()).collect();
        let mut next: Vec<PyramidPartition> = next.into_iter().collect();
        next.sort();
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// `∏ q_g^{#bricks of color g}` as a four-variable monomial.
pub fn color_weight(p: &PyramidPartition) -> Monomial {
    let mut exps = vec![0u32; 4];
    for (&k, slice) in p.slices() {
        exps[Color::of_diagonal(k).slot()] += slice.size();
    }
    Monomial::new(exps)
}

/// Generating function of pyramid partitions with at most `cutoff` bricks.
pub fn pyramid_series(cutoff: u32) -> Series {
    let mut out = Series::zero(4, cutoff);
    for p in enumerate_pyramids(cutoff) {
        out.add_term(color_weight(&p), BigInt::one());
    }
    out
}
