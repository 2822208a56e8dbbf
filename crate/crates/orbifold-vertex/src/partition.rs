//! Integer partitions and the statistics every other module is built on.
//!
//! Cells are addressed as `(i, j)` with `i` the column and `j` the row, so
//! `(i, j)` lies in `λ` iff `i < λ_j` (equivalently `j < λ'_i`). Diagonals and
//! residues are measured by `i - j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing list of nonzero rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition {
    rows: Vec<u32>,
}

/// A cell of a Young diagram: `i` is the column, `j` the row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub i: u32,
    pub j: u32,
}

impl Cell {
    pub fn new(i: u32, j: u32) -> Self {
        Cell { i, j }
    }

    /// Content `i - j`.
    pub fn content(self) -> i64 {
        i64::from(self.i) - i64::from(self.j)
    }
}

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Partition {
    /// Builds a partition from rows, trimming trailing zeros.
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not weakly decreasing")));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    /// Builds a partition from rows that are known to be weakly decreasing.
    pub(crate) fn from_sorted(mut rows: Vec<u32>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition { rows }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(m, m-1, ..., 1)`.
    pub fn staircase(m: u32) -> Self {
        Partition { rows: (1..=m).rev().collect() }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Row `j`, zero beyond the last row.
    pub fn row(&self, j: usize) -> u32 {
        self.rows.get(j).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        let rows = (0..width).map(|c| self.rows.iter().take_while(|&&r| r > c).count() as u32).collect();
        Partition { rows }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.i < self.row(cell.j as usize)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().enumerate().flat_map(|(j, &r)| (0..r).map(move |i| Cell::new(i, j as u32)))
    }

    /// `true` when every cell of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.rows.iter().enumerate().all(|(j, &r)| r <= other.row(j))
    }

    /// Value `±1` of the edge sequence at `t`: `+1` iff `t = λ_j - j - 1` for some `j ≥ 0`.
    pub fn edge_value(&self, t: i64) -> Sign {
        let len = self.rows.len() as i64;
        if t < -len {
            return Sign::Plus;
        }
        let hit = (0..self.rows.len()).any(|j| i64::from(self.rows[j]) - j as i64 - 1 == t);
        if hit {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The edge sequence of this partition.
    pub fn edge_sequence(&self) -> EdgeSequence {
        EdgeSequence { base: self.clone() }
    }

    /// Number of cells with `i - j = k`.
    pub fn diagonal_count(&self, k: i64) -> u32 {
        self.cells().filter(|c| c.content() == k).count() as u32
    }

    /// Number of cells with `i - j ≡ k (mod n)`.
    pub fn residue_count(&self, k: i64, n: u32) -> Result<u32> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let n = i64::from(n);
        let target = k.rem_euclid(n);
        Ok(self.cells().filter(|c| c.content().rem_euclid(n) == target).count() as u32)
    }

    /// The hook of `cell`: the cell, its arm to the right and its leg below.
    pub fn hook(&self, cell: Cell) -> Result<Vec<Cell>> {
        if !self.contains(cell) {
            return Err(Error::CellOutside { i: cell.i, j: cell.j });
        }
        let arm = (cell.i + 1..self.row(cell.j as usize)).map(|i| Cell::new(i, cell.j));
        let col_len = self.rows.iter().take_while(|&&r| r > cell.i).count() as u32;
        let leg = (cell.j + 1..col_len).map(|j| Cell::new(cell.i, j));
        Ok(std::iter::once(cell).chain(arm).chain(leg).collect())
    }

    /// Number of cells of residue `k mod n` in the hook of `cell`.
    pub fn hook_color_count(&self, cell: Cell, k: i64, n: u32) -> Result<u32> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let n = i64::from(n);
        let target = k.rem_euclid(n);
        Ok(self.hook(cell)?.iter().filter(|c| c.content().rem_euclid(n) == target).count() as u32)
    }

    /// `Σ_{(i,j)∈λ} ⌊(i + k)/n⌋`.
    pub fn renormalization_exponent(&self, k: u32, n: u32) -> u64 {
        assert!(n >= 1 && k < n, "renormalization_exponent needs 0 <= k < n");
        self.cells().map(|c| u64::from((c.i + k) / n)).sum()
    }

    /// Returns `m` if this is the staircase `(m, ..., 1)`.
    pub fn is_staircase(&self) -> Option<u32> {
        let m = self.rows.len() as u32;
        self.rows.iter().enumerate().all(|(j, &r)| r == m - j as u32).then_some(m)
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, graded by size.
    pub fn up_to_size(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All `μ ⊇ λ` with `μ / λ` a horizontal strip of at most `max_added` cells,
    /// paired with the strip size.
    pub fn add_horizontal_strips(&self, max_added: u32) -> Vec<(Partition, u32)> {
        let n = self.rows.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n + 1);
        self.extend_rows(0, n, max_added, &mut cur, &mut out);
        out
    }

    fn extend_rows(&self, j: usize, n: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<(Partition, u32)>) {
        if j > n {
            let added = cur.iter().sum::<u32>() - self.size();
            out.push((Partition::from_sorted(cur.clone()), added));
            return;
        }
        let low = self.row(j);
        let high = if j == 0 { low + budget } else { self.row(j - 1).min(low + budget) };
        for v in low..=high {
            cur.push(v);
            self.extend_rows(j + 1, n, budget - (v - low), cur, out);
            cur.pop();
        }
    }

    /// All `μ ⊆ λ` with `λ / μ` a horizontal strip, paired with the strip size.
    pub fn remove_horizontal_strips(&self) -> Vec<(Partition, u32)> {
        let n = self.rows.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(lam: &Partition, j: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<(Partition, u32)>) {
            if j == n {
                let removed = lam.size() - cur.iter().sum::<u32>();
                out.push((Partition::from_sorted(cur.clone()), removed));
                return;
            }
            for v in lam.row(j + 1)..=lam.row(j) {
                cur.push(v);
                rec(lam, j + 1, n, cur, out);
                cur.pop();
            }
        }
        rec(self, 0, n, &mut cur, &mut out);
        out
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (n, r) in self.rows.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// The `±1` edge sequence of a partition, evaluated lazily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSequence {
    pub base: Partition,
}

impl EdgeSequence {
    pub fn value(&self, t: i64) -> Sign {
        self.base.edge_value(t)
    }

    /// Counts `(+1 at t ≥ 0, -1 at t < 0)`; both are finite and equal.
    pub fn charges(&self) -> (usize, usize) {
        let len = self.base.len() as i64;
        let width = i64::from(self.base.row(0));
        let pos = (0..width).filter(|&t| self.value(t) == Sign::Plus).count();
        let neg = (-len - 1..0).filter(|&t| self.value(t) == Sign::Minus).count();
        (pos, neg)
    }

    /// Smallest `t0 ≥ 0` such that the sequence is constant on `t ≥ t0` and on `t < -t0`.
    pub fn stable_radius(&self) -> i64 {
        (self.base.len() as i64).max(i64::from(self.base.row(0)))
    }
}

/// Which shape interlacing is tested: rows (`≺`) or columns (`≺'`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterlaceTag {
    Row,
    Column,
}

/// An interlacing relation `≺≻_τ`: `Plus` means `a ≺ b`, `Minus` means `a ≻ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InterlaceKind {
    pub tag: InterlaceTag,
    pub direction: Sign,
}

impl InterlaceKind {
    pub fn new(tag: InterlaceTag, direction: Sign) -> Self {
        InterlaceKind { tag, direction }
    }
}

/// `big ≻ small`: `big_0 ≥ small_0 ≥ big_1 ≥ small_1 ≥ …`.
fn row_interlaced(big: &Partition, small: &Partition) -> bool {
    let n = big.len().max(small.len());
    (0..=n).all(|j| big.row(j) >= small.row(j) && small.row(j) >= big.row(j + 1))
}

/// Tests `a ≺≻_τ b` for the given kind.
pub fn interlaces(a: &Partition, b: &Partition, kind: InterlaceKind) -> bool {
    let (big, small) = match kind.direction {
        Sign::Minus => (a, b),
        Sign::Plus => (b, a),
    };
    match kind.tag {
        InterlaceTag::Row => row_interlaced(big, small),
        InterlaceTag::Column => row_interlaced(&big.conjugate(), &small.conjugate()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn construction_rejects_increasing_rows() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 0, 0]).rows(), &[2]);
    }

    #[test]
    fn row_interlacing_examples() {
        let succ = InterlaceKind::new(InterlaceTag::Row, Sign::Minus);
        assert!(interlaces(&p(&[3, 1]), &p(&[2, 1]), succ));
        assert!(interlaces(&p(&[4, 2, 2]), &p(&[4, 2, 2]), succ));
        assert!(!interlaces(&p(&[1]), &p(&[2]), succ));
        let prec = InterlaceKind::new(InterlaceTag::Row, Sign::Plus);
        assert!(interlaces(&p(&[2, 1]), &p(&[3, 1]), prec));
    }

    #[test]
    fn column_interlacing_uses_conjugates() {
        let succ = InterlaceKind::new(InterlaceTag::Column, Sign::Minus);
        assert!(interlaces(&p(&[1, 1]), &p(&[1]), succ));
        assert!(!interlaces(&p(&[2]), &Partition::empty(), succ));
    }

    #[test]
    fn edge_values() {
        let e = Partition::empty();
        assert_eq!(e.edge_value(0), Sign::Minus);
        assert_eq!(e.edge_value(-1), Sign::Plus);
        let one = p(&[1]);
        assert_eq!(one.edge_value(0), Sign::Plus);
        assert_eq!(one.edge_value(-1), Sign::Minus);
        assert_eq!(one.edge_value(-2), Sign::Plus);
        assert_eq!(one.edge_value(1), Sign::Minus);
    }

    #[test]
    fn diagonal_and_residue_counts() {
        assert_eq!(p(&[2, 1]).diagonal_count(0), 1);
        assert_eq!(p(&[3, 1]).diagonal_count(1), 1);
        assert_eq!(Partition::empty().diagonal_count(3), 0);
        assert_eq!(p(&[2, 1]).residue_count(0, 4).unwrap(), 1);
        assert_eq!(p(&[2, 1]).residue_count(3, 4).unwrap(), 1);
        assert_eq!(p(&[2, 1]).residue_count(-1, 4).unwrap(), 1);
        assert_eq!(p(&[2, 1]).residue_count(0, 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn hook_colors() {
        let nu = p(&[2, 1]);
        assert_eq!(p(&[1]).hook_color_count(Cell::new(0, 0), 0, 4).unwrap(), 1);
        let total: u32 = (0..4).map(|k| nu.hook_color_count(Cell::new(0, 0), k, 4).unwrap()).sum();
        assert_eq!(total, 3);
        assert_eq!(nu.hook_color_count(Cell::new(0, 0), 1, 4).unwrap(), 1);
        assert!(nu.hook_color_count(Cell::new(1, 1), 0, 4).is_err());
    }

    #[test]
    fn renormalization_exponents() {
        assert_eq!(Partition::empty().renormalization_exponent(0, 4), 0);
        assert_eq!(p(&[4]).renormalization_exponent(0, 4), 0);
        assert_eq!(p(&[5]).renormalization_exponent(3, 4), 4);
    }

    #[test]
    fn staircases() {
        assert_eq!(p(&[3, 2, 1]).is_staircase(), Some(3));
        assert_eq!(Partition::empty().is_staircase(), Some(0));
        assert_eq!(p(&[2, 2]).is_staircase(), None);
        assert_eq!(Partition::staircase(4), p(&[4, 3, 2, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn strips() {
        let adds = Partition::empty().add_horizontal_strips(2);
        assert_eq!(adds.len(), 3);
        let removes = p(&[2, 1]).remove_horizontal_strips();
        let shapes: Vec<_> = removes.iter().map(|(m, _)| m.clone()).collect();
        assert_eq!(shapes, vec![p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1])]);
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let nu = p(&[3, 2, 1]);
        let s = serde_json::to_string(&nu).unwrap();
        assert_eq!(s, "[3,2,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), nu);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
