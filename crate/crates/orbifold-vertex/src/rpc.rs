//! Restricted pyramid configurations.
//!
//! A leg partition `ν` and a shift `l` cut every slice of a pyramid partition
//! down to a quadrant whose corner depends on the slice index. The corner
//! offsets come from four running sums over the edge sequence of `ν'`
//! ([`CornerTable`]). Restricting in the diagonal or the antidiagonal frame
//! gives two classes of configurations; both are described by slice families
//! with the interlacing property of the second kind for `ν`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{interlaces, InterlaceKind, InterlaceTag, Partition};
use crate::pyramid::{
    antidiagonal_slices, color, convert_frame, slices_from_bricks, validate, Brick, Frame, PyramidPartition,
};
use crate::qseries::{Monomial, Series};

/// Running sums over the edge sequence of `ν'` that fix the region corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerTable {
    base: Partition,
    sums: [Vec<u32>; 4],
    row_depth: u32,
    col_depth: u32,
    stable_index: i64,
}

impl CornerTable {
    pub fn new(leg: &Partition) -> Self {
        let conj = leg.conjugate();
        let edge = |t: i64| i64::from(conj.edge_value(t).value());
        let len = conj.edge_sequence().stable_radius() + 2;
        let prefix = |from: i64, step: &dyn Fn(i64) -> i64| -> Vec<u32> {
            let mut acc = 0;
            (0..=len)
                .map(|t| {
                    if t >= from {
                        acc += step(t) as u32;
                    }
                    acc
                })
                .collect()
        };
        let sums = [
            prefix(0, &|t| (edge(2 * t) + 1) / 2),
            prefix(0, &|t| (edge(2 * t + 1) + 1) / 2),
            prefix(1, &|t| (1 - edge(-2 * t)) / 2),
            prefix(1, &|t| (1 - edge(-2 * t + 1)) / 2),
        ];
        let last = |v: &Vec<u32>| *v.last().unwrap();
        let row_depth = last(&sums[1]).max(last(&sums[3]));
        let col_depth = last(&sums[0]).max(last(&sums[2]));
        let stable_index =
            (0..sums[0].len()).find(|&t| sums.iter().all(|v| v[t..].iter().all(|&x| x == v[t]))).unwrap_or(0) as i64;
        CornerTable { base: leg.clone(), sums, row_depth, col_depth, stable_index }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    fn value(&self, which: usize, t: i64) -> u32 {
        let v = &self.sums[which];
        if t < 0 {
            return 0;
        }
        v[(t as usize).min(v.len() - 1)]
    }

    /// `Σ_{0≤u≤t} (ν'(2u)+1)/2`.
    pub fn plus_even(&self, t: i64) -> u32 {
        self.value(0, t)
    }

    /// `Σ_{0≤u≤t} (ν'(2u+1)+1)/2`.
    pub fn plus_odd(&self, t: i64) -> u32 {
        self.value(1, t)
    }

    /// `Σ_{1≤u≤t} (1-ν'(-2u))/2`.
    pub fn minus_even(&self, t: i64) -> u32 {
        self.value(2, t)
    }

    /// `Σ_{1≤u≤t} (1-ν'(-2u+1))/2`.
    pub fn minus_odd(&self, t: i64) -> u32 {
        self.value(3, t)
    }

    pub fn row_depth(&self) -> u32 {
        self.row_depth
    }

    pub fn col_depth(&self) -> u32 {
        self.col_depth
    }

    /// Index from which all four sums are constant.
    pub fn stable_index(&self) -> i64 {
        self.stable_index
    }

    /// Row offset of the corner of slice `s` (without shift).
    fn row_corner(&self, s: i64) -> u32 {
        let k = slice_pair(s);
        if k <= 0 {
            self.row_depth - self.plus_odd(-k - 1)
        } else {
            self.row_depth - self.minus_odd(k)
        }
    }

    /// Column offset of the corner of slice `s` (without shift).
    fn col_corner(&self, s: i64) -> u32 {
        let k = slice_pair(s);
        let even = s.rem_euclid(2) == 0;
        match (k <= 0, even) {
            (true, true) => self.col_depth - self.plus_even(-k - 1),
            (true, false) => self.col_depth - self.plus_even(-k),
            (false, true) => self.col_depth - self.minus_even(k),
            (false, false) => self.col_depth - self.minus_even(k - 1),
        }
    }

    /// Corner `(row, col)` of the region of slice `s` with shift `l`.
    pub fn corner(&self, l: u32, s: i64) -> (u32, u32) {
        (self.row_corner(s) + l, self.col_corner(s) + l)
    }
}

/// Slices `2k` and `2k - 1` share the pair index `k`.
fn slice_pair(s: i64) -> i64 {
    if s.rem_euclid(2) == 0 {
        s / 2
    } else {
        (s + 1) / 2
    }
}

/// The quadrant of slice `slice` kept by a restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub frame: Frame,
    pub slice: i64,
    pub row_min: u32,
    pub col_min: u32,
    pub shift: u32,
}

impl RegionSpec {
    pub fn contains(&self, row: u32, col: u32) -> bool {
        row >= self.row_min && col >= self.col_min
    }
}

pub fn region(leg: &Partition, l: u32, frame: Frame, slice: i64) -> RegionSpec {
    let (row_min, col_min) = CornerTable::new(leg).corner(l, slice);
    RegionSpec { frame, slice, row_min, col_min, shift: l }
}

/// A restricted configuration: slices re-based at their region corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedConfig {
    #[serde(skip)]
    pub source: Option<PyramidPartition>,
    pub slices: BTreeMap<i64, Partition>,
    pub leg: Partition,
    pub shift: u32,
    pub frame: Frame,
}

impl RestrictedConfig {
    pub fn brick_count(&self) -> u32 {
        self.slices.values().map(Partition::size).sum()
    }

    /// Bricks at their absolute addresses in the configuration frame.
    pub fn bricks(&self) -> Vec<Brick> {
        absolute_bricks(&self.slices, &CornerTable::new(&self.leg), self.shift, self.frame)
    }

    /// Physical positions of the bricks.
    pub fn positions(&self) -> BTreeSet<(i64, i64, i64)> {
        self.bricks().into_iter().map(|b| b.position()).collect()
    }

    /// Color monomial in `(q0, qa, qb, qc)`.
    pub fn weight(&self) -> Monomial {
        weight_of(&self.bricks())
    }
}

fn absolute_bricks(slices: &BTreeMap<i64, Partition>, table: &CornerTable, l: u32, frame: Frame) -> Vec<Brick> {
    slices
        .iter()
        .flat_map(|(&s, p)| {
            let (r0, c0) = table.corner(l, s);
            p.cells().map(move |c| Brick::new(frame, s, c.j + r0, c.i + c0))
        })
        .collect()
}

fn weight_of(bricks: &[Brick]) -> Monomial {
    let mut exps = vec![0u32; 4];
    for &b in bricks {
        exps[color(b).slot()] += 1;
    }
    Monomial::new(exps)
}

/// The part of `slice` inside the quadrant `row ≥ r0, col ≥ c0`, re-based at the corner.
fn clip(slice: &Partition, r0: u32, c0: u32) -> Partition {
    let rows = slice.rows().iter().skip(r0 as usize).map(|&w| w.saturating_sub(c0)).collect();
    Partition::new(rows).expect("clipped rows stay weakly decreasing")
}

fn frame_slices(p: &PyramidPartition, frame: Frame) -> Result<BTreeMap<i64, Partition>> {
    match frame {
        Frame::Diagonal => {
            if validate(p) {
                Ok(p.slices().clone())
            } else {
                Err(Error::InterlacingViolated)
            }
        }
        Frame::Antidiagonal => antidiagonal_slices(p),
    }
}

/// Intersects every slice of `p` in `frame` with its region.
pub fn restrict(p: &PyramidPartition, leg: &Partition, l: u32, frame: Frame) -> Result<RestrictedConfig> {
    let table = CornerTable::new(leg);
    let slices = frame_slices(p, frame)?
        .into_iter()
        .filter_map(|(s, slice)| {
            let (r0, c0) = table.corner(l, s);
            let clipped = clip(&slice, r0, c0);
            (!clipped.is_empty()).then_some((s, clipped))
        })
        .collect();
    Ok(RestrictedConfig { source: Some(p.clone()), slices, leg: leg.clone(), shift: l, frame })
}

/// Which interlacing pattern of type `ν` is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InterlacingType {
    /// Every step is a row interlacing.
    First,
    /// Column steps into even slices, row steps into odd ones.
    Second,
}

/// Relation between `η_s` and `η_{s-1}`.
fn step_kind(conj: &Partition, s: i64, kind: InterlacingType) -> InterlaceKind {
    let tag = match kind {
        InterlacingType::Second if s.rem_euclid(2) == 0 => InterlaceTag::Column,
        _ => InterlaceTag::Row,
    };
    InterlaceKind::new(tag, conj.edge_value(-s))
}

/// Slice indices outside which every step relation forces emptiness.
fn active_range(conj: &Partition, slices: &BTreeMap<i64, Partition>) -> (i64, i64) {
    let r = conj.edge_sequence().stable_radius() + 1;
    let lo = slices.keys().next().copied().unwrap_or(0).min(-r);
    let hi = slices.keys().next_back().copied().unwrap_or(0).max(r);
    (lo - 1, hi + 1)
}

fn get(slices: &BTreeMap<i64, Partition>, s: i64) -> Partition {
    slices.get(&s).cloned().unwrap_or_default()
}

fn step_holds(conj: &Partition, slices: &BTreeMap<i64, Partition>, s: i64, kind: InterlacingType) -> bool {
    interlaces(&get(slices, s), &get(slices, s - 1), step_kind(conj, s, kind))
}

/// Tests the interlacing property of the given type for `ν` on a finitely supported family.
pub fn check_type_interlacing(slices: &BTreeMap<i64, Partition>, leg: &Partition, kind: InterlacingType) -> bool {
    let conj = leg.conjugate();
    let (lo, hi) = active_range(&conj, slices);
    (lo..=hi + 1).all(|s| step_holds(&conj, slices, s, kind))
}

/// Builds a pyramid partition whose restriction in `frame` is `slices`.
///
/// Each slice is padded by an L-shaped block that fills the complement of
/// its region, and extra staircase layers around the support make the
/// padded family interlace like a pyramid partition.
pub fn realize(slices: &BTreeMap<i64, Partition>, leg: &Partition, l: u32, frame: Frame) -> Result<PyramidPartition> {
    if !check_type_interlacing(slices, leg, InterlacingType::Second) {
        return Err(Error::InterlacingViolated);
    }
    let slices: BTreeMap<i64, Partition> =
        slices.iter().filter(|(_, p)| !p.is_empty()).map(|(&s, p)| (s, p.clone())).collect();
    let table = CornerTable::new(leg);
    let conj = leg.conjugate();
    let support = slices.keys().map(|s| s.abs() + 1).max().unwrap_or(0);
    let edge_bound = i64::from(conj.row(0)).max(i64::from(leg.row(0)) + 1);
    let mut span = support.max(edge_bound).max(2);
    span += span % 2;
    let half = span / 2;
    let depth = slices.values().map(|p| p.len() as i64).max().unwrap_or(0);
    let width = slices.values().map(|p| i64::from(p.row(0))).max().unwrap_or(0);
    let l = i64::from(l);
    let hat = |v: u32| i64::from(v) + l;
    let (row_depth, col_depth) = (i64::from(table.row_depth()), i64::from(table.col_depth()));
    // Stable corner values far out on either side.
    let left_rows = hat(0) + row_depth - i64::from(table.plus_odd(half - 1));
    let left_cols = hat(0) + col_depth - i64::from(table.plus_even(half - 1));
    let right_rows = hat(0) + row_depth - i64::from(table.minus_odd(half));
    let right_cols = hat(0) + col_depth - i64::from(table.minus_even(half));

    // Rows `< r0` have width `c0 + width`; the next `depth` rows carry `c0 + η`.
    let padded = |s: i64| -> Vec<i64> {
        let (r0, c0) = table.corner(l as u32, s);
        let (r0, c0) = (i64::from(r0), i64::from(c0));
        let eta = get(&slices, s);
        let mut rows = vec![c0 + width; r0 as usize];
        rows.extend((0..depth).map(|i| c0 + i64::from(eta.row(i as usize))));
        rows
    };
    let two_blocks = |r0: i64, w_top: i64, h_bottom: i64, w_bottom: i64| -> Vec<i64> {
        let mut rows = vec![w_top; r0.max(0) as usize];
        rows.extend(std::iter::repeat_n(w_bottom, h_bottom.max(0) as usize));
        rows
    };

    let low_start = -half - width - left_cols;
    let high_end = half + depth + right_rows;
    let mut built: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for k in low_start..=high_end {
        for (s, odd) in [(2 * k, 0), (2 * k - 1, 1)] {
            let rows = if (-half..=0).contains(&k) || (1..=half).contains(&k) {
                padded(s)
            } else if k < -half && k >= -half - width {
                two_blocks(left_rows, left_cols + width + k + half + 1 - odd, depth, left_cols)
            } else if k < -half - width {
                two_blocks(left_rows + depth, left_cols + k + half + width + 1 - odd, 0, 0)
            } else if k > half && k <= half + depth {
                two_blocks(right_rows, right_cols + width, depth - k + half, right_cols)
            } else {
                two_blocks(right_rows - k + half + depth, right_cols + width, 0, 0)
            };
            built.insert(s, rows);
        }
    }

    let bricks: Vec<Brick> = built
        .into_iter()
        .flat_map(|(s, rows)| {
            rows.into_iter()
                .enumerate()
                .flat_map(move |(r, w)| (0..w.max(0)).map(move |c| Brick::new(frame, s, r as u32, c as u32)))
        })
        .collect();
    let diagonal = bricks.into_iter().map(|b| match frame {
        Frame::Diagonal => b,
        Frame::Antidiagonal => convert_frame(b),
    });
    let p = PyramidPartition::from_slices(slices_from_bricks(diagonal).ok_or(Error::InterlacingViolated)?);
    if !validate(&p) {
        return Err(Error::InterlacingViolated);
    }
    Ok(p)
}

/// `true` iff a brick lies outside the region of its slice in `frame`.
fn outside_region(table: &CornerTable, l: u32, b: Brick) -> bool {
    let (r0, c0) = table.corner(l, b.slice);
    b.row < r0 || b.col < c0
}

/// Compares the union of region complements in the two frames on the window
/// `|k| ≤ window`, `row, col ≤ window` of each frame.
pub fn region_complement_equal(leg: &Partition, l: u32, window: u32) -> bool {
    let table = CornerTable::new(leg);
    let w = i64::from(window);
    [Frame::Antidiagonal, Frame::Diagonal].iter().all(|&frame| {
        (-w..=w).all(|s| {
            (0..=window).all(|r| {
                (0..=window).all(|c| {
                    let b = Brick::new(frame, s, r, c);
                    let other =
                        Brick::from_position(frame.other(), b.position()).expect("every position has both addresses");
                    outside_region(&table, l, b) == outside_region(&table, l, other)
                })
            })
        })
    })
}

/// Window used by [`uniqueness_scan`] when none is given.
pub fn default_window(leg: &Partition, l: u32) -> u32 {
    let table = CornerTable::new(leg);
    let m = leg.row(0).max(leg.len() as u32);
    (table.row_depth() + table.col_depth() + l + m + 2).max(10)
}

/// One row of a uniqueness scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessRow {
    pub leg: Partition,
    pub shift: u32,
    pub staircase: bool,
    pub complements_equal: bool,
}

/// Compares the region complements of every leg with at most `max_size` boxes
/// for each shift. Each comparison is repeated on a window two steps larger
/// and must agree.
pub fn uniqueness_scan(max_size: u32, shifts: &[u32], window: Option<u32>) -> Result<Vec<UniquenessRow>> {
    let cases: Vec<(Partition, u32)> =
        Partition::up_to_size(max_size).into_iter().flat_map(|p| shifts.iter().map(move |&l| (p.clone(), l))).collect();
    cases
        .into_par_iter()
        .map(|(leg, l)| {
            let window = window.unwrap_or_else(|| default_window(&leg, l));
            let equal = region_complement_equal(&leg, l, window);
            if equal != region_complement_equal(&leg, l, window + 2) {
                return Err(Error::NonStabilizing(format!("region comparison for {leg}, l={l}")));
            }
            Ok(UniquenessRow { staircase: leg.is_staircase().is_some(), leg, shift: l, complements_equal: equal })
        })
        .collect()
}

/// Parity data fixing the color of the corner brick of antidiagonal slice `k`.
pub fn corner_color_offset(leg: &Partition, k: i64) -> u32 {
    let t = CornerTable::new(leg);
    let total = t.row_depth() + t.col_depth();
    let even = k.rem_euclid(2) == 0;
    let used = match (k <= 0, even) {
        (true, true) => t.plus_even(-k / 2 - 1) + t.plus_odd(-k / 2 - 1),
        (true, false) => t.plus_even(-(k + 1) / 2) + t.plus_odd(-(k + 1) / 2 - 1),
        (false, true) => t.minus_even(k / 2) + t.minus_odd(k / 2),
        (false, false) => t.minus_even((k + 1) / 2 - 1) + t.minus_odd((k + 1) / 2),
    };
    total - used
}

/// Every second-kind `ν`-interlacing family with at most `max_boxes` boxes,
/// graded by size.
pub fn interlacing_families(leg: &Partition, max_boxes: u32) -> Vec<BTreeMap<i64, Partition>> {
    let conj = leg.conjugate();
    let mut out = vec![BTreeMap::new()];
    let mut level = vec![BTreeMap::new()];
    for _ in 0..max_boxes {
        let next: HashSet<BTreeMap<i64, Partition>> = level.par_iter().flat_map_iter(|f| grow(&conj, f)).collect();
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Families obtained by adding one box while keeping the interlacing.
fn grow(conj: &Partition, family: &BTreeMap<i64, Partition>) -> Vec<BTreeMap<i64, Partition>> {
    let (lo, hi) = active_range(conj, family);
    let mut out = Vec::new();
    for s in lo..=hi {
        let slice = get(family, s);
        for row in 0..=slice.len() {
            if row > 0 && slice.row(row - 1) == slice.row(row) {
                continue;
            }
            let mut rows = slice.rows().to_vec();
            if row == rows.len() {
                rows.push(1);
            } else {
                rows[row] += 1;
            }
            let mut next = family.clone();
            next.insert(s, Partition::new(rows).expect("adding at a corner keeps a partition"));
            if step_holds(conj, &next, s, InterlacingType::Second)
                && step_holds(conj, &next, s + 1, InterlacingType::Second)
            {
                out.push(next);
            }
        }
    }
    out
}

/// Generating function of restricted configurations in `frame`, truncated at total degree `cutoff`.
pub fn generating_function(leg: &Partition, l: u32, frame: Frame, cutoff: u32) -> Series {
    let table = CornerTable::new(leg);
    let mut series = Series::zero(4, cutoff);
    for family in interlacing_families(leg, cutoff) {
        let bricks = absolute_bricks(&family, &table, l, frame);
        series.add_term(weight_of(&bricks), BigInt::from(1));
    }
    series
}
