//! Vertex operators acting on the partition basis, and truncated evaluation
//! of operator products `⟨∅| A_1 A_2 ⋯ A_r |∅⟩`.
//!
//! Products are evaluated on kets, from the rightmost operator leftwards.
//! A state maps each partition to a truncated series. Raising operators with
//! a degree-zero argument create arbitrarily large partitions, so they must be
//! followed (to their left) by a weight operator: every box present at that
//! point is weighted at least once, which bounds the partitions that can
//! still contribute below the cutoff.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::partition::{Cell, Partition};
use crate::qseries::{Monomial, Series};
use crate::rpc::corner_color_offset;

/// A signed monomial `±m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Argument {
    pub negative: bool,
    pub mono: Monomial,
}

impl Argument {
    pub fn new(negative: bool, mono: Monomial) -> Self {
        Argument { negative, mono }
    }

    pub fn one(arity: usize) -> Self {
        Argument::new(false, Monomial::one(arity))
    }

    pub fn var(arity: usize, slot: usize) -> Self {
        Argument::new(false, Monomial::var(arity, slot))
    }

    /// `self^k` as a coefficient sign and a monomial.
    fn power(&self, k: u32) -> (BigInt, Monomial) {
        let sign = if self.negative && k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        (sign, self.mono.pow(k))
    }
}

/// An operator on the partition basis.
///
/// `EPlus`/`EMinus` carry the square of their argument, so that
/// `E_-(x√(q_g q_h))` is `EMinus(x² q_g q_h)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    /// Removes a horizontal strip: `λ ↦ Σ_{μ≺λ} x^{|λ|-|μ|} μ`.
    GammaPlus(Argument),
    /// Adds a horizontal strip.
    GammaMinus(Argument),
    /// Removes a vertical strip.
    GammaPlusPrime(Argument),
    /// Adds a vertical strip.
    GammaMinusPrime(Argument),
    EPlus(Argument),
    EMinus(Argument),
    /// Multiplies by `q_g^{|λ|}`.
    WeightSingle(usize),
    /// Multiplies by `q_{g}` per cell with `i ≡ j (mod 2)` and `q_{h}` per other cell.
    WeightPair(usize, usize),
}

impl Operator {
    pub fn gamma(raising: bool, primed: bool, x: Argument) -> Operator {
        match (raising, primed) {
            (false, false) => Operator::GammaPlus(x),
            (true, false) => Operator::GammaMinus(x),
            (false, true) => Operator::GammaPlusPrime(x),
            (true, true) => Operator::GammaMinusPrime(x),
        }
    }

    fn is_weight(&self) -> bool {
        matches!(self, Operator::WeightSingle(_) | Operator::WeightPair(..))
    }

    /// Raising operators whose argument has degree 0 need a size cap.
    fn needs_cap(&self) -> bool {
        match self {
            Operator::GammaMinus(x) | Operator::GammaMinusPrime(x) | Operator::EMinus(x) => x.mono.degree() == 0,
            _ => false,
        }
    }
}

/// A vector in the partition basis with truncated-series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferState {
    arity: usize,
    cutoff: u32,
    amplitudes: BTreeMap<Partition, Series>,
}

impl TransferState {
    pub fn vacuum(arity: usize, cutoff: u32) -> Self {
        TransferState::basis(Partition::empty(), arity, cutoff)
    }

    pub fn basis(p: Partition, arity: usize, cutoff: u32) -> Self {
        let mut amplitudes = BTreeMap::new();
        amplitudes.insert(p, Series::one(arity, cutoff));
        TransferState { arity, cutoff, amplitudes }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn amplitudes(&self) -> &BTreeMap<Partition, Series> {
        &self.amplitudes
    }

    pub fn amplitude(&self, p: &Partition) -> Series {
        self.amplitudes.get(p).cloned().unwrap_or_else(|| Series::zero(self.arity, self.cutoff))
    }

    fn empty_like(&self) -> TransferState {
        TransferState { arity: self.arity, cutoff: self.cutoff, amplitudes: BTreeMap::new() }
    }

    fn add(&mut self, p: Partition, s: Series) {
        if s.is_empty() {
            return;
        }
        match self.amplitudes.get_mut(&p) {
            Some(acc) => {
                *acc = acc.add(&s).expect("states share one arity");
                if acc.is_empty() {
                    self.amplitudes.remove(&p);
                }
            }
            None => {
                self.amplitudes.insert(p, s);
            }
        }
    }

    fn from_parts(template: &TransferState, parts: impl IntoIterator<Item = (Partition, Series)>) -> TransferState {
        let mut out = template.empty_like();
        for (p, s) in parts {
            out.add(p, s);
        }
        out
    }

    /// `Σ_λ c_λ λ + Σ_λ d_λ λ`.
    pub fn plus(&self, other: &TransferState) -> TransferState {
        let mut out = self.clone();
        for (p, s) in &other.amplitudes {
            out.add(p.clone(), s.clone());
        }
        out
    }

    /// Multiplies every amplitude by a series.
    pub fn times(&self, s: &Series) -> Result<TransferState> {
        let parts = self.amplitudes.iter().map(|(p, a)| Ok((p.clone(), a.mul(s)?))).collect::<Result<Vec<_>>>()?;
        Ok(TransferState::from_parts(self, parts))
    }

    /// Drops every term whose degree plus partition size exceeds the cutoff.
    pub fn prune(&self) -> TransferState {
        let parts = self.amplitudes.iter().map(|(p, s)| {
            let room = self.cutoff.saturating_sub(p.size());
            let kept = if p.size() > self.cutoff { Series::zero(self.arity, self.cutoff) } else { s.truncate(room) };
            (p.clone(), Series::from_terms(self.arity, self.cutoff, kept.terms().map(|(m, c)| (m.clone(), c.clone()))))
        });
        TransferState::from_parts(self, parts.collect::<Vec<_>>())
    }
}

fn min_degree(s: &Series) -> u32 {
    s.terms().map(|(m, _)| m.degree()).min().unwrap_or(0)
}

/// Partitions reachable by one Γ step, with the number of boxes moved.
fn gamma_partners(p: &Partition, raising: bool, primed: bool, max_added: u32) -> Vec<(Partition, u32)> {
    let base = if primed { p.conjugate() } else { p.clone() };
    let moves = if raising { base.add_horizontal_strips(max_added) } else { base.remove_horizontal_strips() };
    if primed {
        moves.into_iter().map(|(q, d)| (q.conjugate(), d)).collect()
    } else {
        moves
    }
}

/// Positions `λ_j - j` of the first `len` particles of the Maya diagram.
fn maya(p: &Partition, len: usize) -> Vec<i64> {
    (0..len).map(|j| i64::from(p.row(j)) - j as i64).collect()
}

fn from_maya(mut pos: Vec<i64>) -> Partition {
    pos.sort_unstable_by(|a, b| b.cmp(a));
    let rows = pos.iter().enumerate().map(|(j, &x)| (x + j as i64) as u32).collect();
    Partition::new(rows).expect("Maya positions decode to a partition")
}

/// Adds (`add = true`) or removes every border strip of length `n`, with
/// sign `(-1)^{height-1}`.
pub fn border_strips(p: &Partition, n: u32, add: bool) -> Vec<(Partition, i32)> {
    assert!(n >= 1, "strip length must be positive");
    let len = p.len() + n as usize;
    let pos = maya(p, len);
    let floor = -(len as i64);
    let n = i64::from(n);
    let mut out = Vec::new();
    for (idx, &x) in pos.iter().enumerate() {
        let target = if add { x + n } else { x - n };
        if target <= floor || pos.contains(&target) {
            continue;
        }
        let (lo, hi) = if add { (x, target) } else { (target, x) };
        let between = pos.iter().filter(|&&y| y > lo && y < hi).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = pos.clone();
        moved[idx] = target;
        out.push((from_maya(moved), sign));
    }
    out
}

/// Which border-strip operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripAction {
    /// `α_{-n}`.
    Add,
    /// `α_n`.
    Remove,
}

/// Applies `α_{-n}` or `α_n` to a state. Adding is limited to partitions of
/// at most `size_cap` boxes.
pub fn border_strip_apply(action: StripAction, n: u32, state: &TransferState, size_cap: u32) -> TransferState {
    let parts: Vec<(Partition, Series)> = state
        .amplitudes
        .par_iter()
        .flat_map_iter(|(p, s)| {
            let add = action == StripAction::Add;
            let moves = if add && p.size() + n > size_cap { Vec::new() } else { border_strips(p, n, add) };
            moves.into_iter().map(move |(q, sign)| (q, s.scale(&BigInt::from(sign))))
        })
        .collect();
    TransferState::from_parts(state, parts)
}

/// `n!/z_ρ` for every partition `ρ` of `n`.
fn class_weights(n: u32) -> Vec<(Partition, BigInt)> {
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |a, b| a * b);
    Partition::all_of_size(n)
        .into_iter()
        .map(|rho| {
            let mut z = BigInt::one();
            let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
            for &part in rho.rows() {
                *counts.entry(part).or_default() += 1;
            }
            for (part, m) in counts {
                z *= BigInt::from(part).pow(m) * fact(m);
            }
            let w = fact(n) / z;
            (rho, w)
        })
        .collect()
}

/// `exp(Σ_k y^k/k α_{∓2k})` applied to `state`, `y` the squared argument.
fn apply_exponential(y: &Argument, raising: bool, state: &TransferState, size_cap: u32) -> Result<TransferState> {
    let cutoff = state.cutoff;
    let action = if raising { StripAction::Add } else { StripAction::Remove };
    let mut total = state.clone();
    let max_size = state.amplitudes.keys().map(Partition::size).max().unwrap_or(0);
    let min_deg = state.amplitudes.values().map(min_degree).min().unwrap_or(0);
    let mut n = 1u32;
    loop {
        let by_degree = y.mono.degree() > 0 && min_deg + n * y.mono.degree() > cutoff;
        let by_size = if raising { 2 * n > size_cap } else { 2 * n > max_size };
        if by_degree || by_size {
            break;
        }
        let fact = (1..=n).fold(BigInt::one(), |a, b| a * b);
        let mut term = state.empty_like();
        for (rho, w) in class_weights(n) {
            let mut v = state.clone();
            for &part in rho.rows() {
                v = border_strip_apply(action, 2 * part, &v, size_cap);
            }
            term = term.plus(&v.times(&Series::monomial(state.arity, cutoff, Monomial::one(state.arity), w))?);
        }
        let (sign, mono) = y.power(n);
        let parts = term
            .amplitudes
            .into_iter()
            .map(|(p, s)| {
                let divided = exact_divide(&s, &fact)?;
                Ok((p, divided.mul_monomial(&mono, &sign)))
            })
            .collect::<Result<Vec<_>>>()?;
        total = total.plus(&TransferState::from_parts(state, parts));
        n += 1;
    }
    Ok(total)
}

fn exact_divide(s: &Series, d: &BigInt) -> Result<Series> {
    let mut terms = Vec::with_capacity(s.len());
    for (m, c) in s.terms() {
        if !(c % d).is_zero() {
            return Err(Error::Unsupported("exponential term has a non-integral coefficient".into()));
        }
        terms.push((m.clone(), c / d));
    }
    Ok(Series::from_terms(s.arity(), s.cutoff(), terms))
}

/// Applies `op`; raising steps never produce partitions above `size_cap`.
pub fn apply_capped(op: &Operator, state: &TransferState, size_cap: u32) -> Result<TransferState> {
    let cutoff = state.cutoff;
    match op {
        Operator::GammaPlus(x)
        | Operator::GammaMinus(x)
        | Operator::GammaPlusPrime(x)
        | Operator::GammaMinusPrime(x) => {
            let raising = matches!(op, Operator::GammaMinus(_) | Operator::GammaMinusPrime(_));
            let primed = matches!(op, Operator::GammaPlusPrime(_) | Operator::GammaMinusPrime(_));
            let deg = x.mono.degree();
            let parts: Vec<(Partition, Series)> = state
                .amplitudes
                .par_iter()
                .flat_map_iter(|(p, s)| {
                    let mut room = size_cap.saturating_sub(p.size());
                    if let Some(steps) = cutoff.saturating_sub(min_degree(s)).checked_div(deg) {
                        room = room.min(steps);
                    }
                    gamma_partners(p, raising, primed, room).into_iter().map(move |(q, d)| {
                        let (sign, mono) = x.power(d);
                        (q, s.mul_monomial(&mono, &sign))
                    })
                })
                .collect();
            Ok(TransferState::from_parts(state, parts))
        }
        Operator::EPlus(y) => apply_exponential(y, false, state, size_cap),
        Operator::EMinus(y) => apply_exponential(y, true, state, size_cap),
        Operator::WeightSingle(g) => {
            let parts: Vec<_> = state
                .amplitudes
                .iter()
                .map(|(p, s)| {
                    (p.clone(), s.mul_monomial(&Monomial::var(state.arity, *g).pow(p.size()), &BigInt::one()))
                })
                .collect();
            Ok(TransferState::from_parts(state, parts))
        }
        Operator::WeightPair(g, h) => {
            let parts: Vec<_> = state
                .amplitudes
                .iter()
                .map(|(p, s)| {
                    let even = p.cells().filter(|c: &Cell| (c.i + c.j).is_multiple_of(2)).count() as u32;
                    let odd = p.size() - even;
                    let mono = Monomial::var(state.arity, *g).pow(even).mul(&Monomial::var(state.arity, *h).pow(odd));
                    (p.clone(), s.mul_monomial(&mono, &BigInt::one()))
                })
                .collect();
            Ok(TransferState::from_parts(state, parts))
        }
    }
}

/// Applies `op` without a size cap. Raising operators with a degree-zero
/// argument are rejected.
pub fn apply(op: &Operator, state: &TransferState) -> Result<TransferState> {
    if op.needs_cap() {
        return Err(Error::Unsupported("degree-zero raising operator needs a size cap".into()));
    }
    apply_capped(op, state, u32::MAX)
}

/// `⟨∅| ops[0] ops[1] ⋯ |∅⟩` truncated at `cutoff`.
///
/// Whenever the operator to the left of a step is a weight operator, the
/// state is pruned to terms with degree plus size within the cutoff.
pub fn evaluate_product(ops: &[Operator], arity: usize, cutoff: u32) -> Result<Series> {
    let mut state = TransferState::vacuum(arity, cutoff);
    for idx in (0..ops.len()).rev() {
        let op = &ops[idx];
        let next_weighs = idx > 0 && ops[idx - 1].is_weight();
        if op.needs_cap() && !next_weighs {
            return Err(Error::Unsupported(
                "degree-zero raising operator must be followed by a weight operator".into(),
            ));
        }
        let cap = if next_weighs { cutoff } else { u32::MAX };
        state = apply_capped(op, &state, cap)?;
        if next_weighs {
            state = state.prune();
        }
    }
    Ok(state.amplitude(&Partition::empty()))
}

/// Which product expression is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferMode {
    /// The vertex with one leg.
    Standard,
    /// Restricted configurations in the antidiagonal frame.
    RpcAntidiag,
    /// Restricted configurations in the diagonal frame.
    RpcDiag,
}

impl std::str::FromStr for TransferMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(TransferMode::Standard),
            "rpc_antidiag" | "antidiagonal" => Ok(TransferMode::RpcAntidiag),
            "rpc_diag" | "diagonal" => Ok(TransferMode::RpcDiag),
            _ => Err(Error::Unsupported(format!("unknown transfer mode `{s}`"))),
        }
    }
}

const Q0: usize = 0;
const QA: usize = 1;
const QB: usize = 2;
const QC: usize = 3;

/// Checkerboard weight for slice `k` of the `Z2×Z2` vertex.
fn vertex_weight(leg: &Partition, k: i64) -> Operator {
    let odd_count = leg.diagonal_count(k) % 2 == 1;
    if k.rem_euclid(2) == 0 {
        if odd_count {
            Operator::WeightPair(QC, Q0)
        } else {
            Operator::WeightPair(Q0, QC)
        }
    } else if (k > 0) != odd_count {
        Operator::WeightPair(QA, QB)
    } else {
        Operator::WeightPair(QB, QA)
    }
}

/// Checkerboard weight for antidiagonal slice `k` of a restricted configuration.
fn antidiagonal_weight(leg: &Partition, k: i64) -> Operator {
    let odd = corner_color_offset(leg, k) % 2 == 1;
    if k.rem_euclid(2) == 0 {
        if odd {
            Operator::WeightPair(QC, Q0)
        } else {
            Operator::WeightPair(Q0, QC)
        }
    } else if (k > 0) != odd {
        Operator::WeightPair(QB, QA)
    } else {
        Operator::WeightPair(QA, QB)
    }
}

/// Single-color weight of diagonal slice `k` of a restricted configuration.
fn diagonal_weight(k: i64) -> Operator {
    Operator::WeightSingle(match k.rem_euclid(4) {
        0 => Q0,
        1 => QB,
        2 => QC,
        _ => QA,
    })
}

/// The operator list for slices `-window..=window`, left to right.
fn vertex_ops(group: Group, leg: &Partition, mode: TransferMode, window: i64) -> Result<Vec<Operator>> {
    let conj = leg.conjugate();
    let arity = group.arity();
    let mut ops = Vec::with_capacity(2 * (2 * window as usize + 1));
    for t in -window..=window {
        let raising = conj.edge_value(t).value() < 0;
        let (weight, primed) = match (mode, group) {
            (TransferMode::Standard, Group::Z2xZ2) => (vertex_weight(leg, -t), false),
            (TransferMode::Standard, Group::Zn(n)) => {
                (Operator::WeightSingle((-t).rem_euclid(i64::from(n)) as usize), false)
            }
            (TransferMode::RpcAntidiag, Group::Z2xZ2) => (antidiagonal_weight(leg, -t), t.rem_euclid(2) == 0),
            (TransferMode::RpcDiag, Group::Z2xZ2) => (diagonal_weight(-t), t.rem_euclid(2) == 0),
            (_, Group::Zn(_)) => {
                return Err(Error::Unsupported("restricted configurations are colored by Z2×Z2".into()));
            }
        };
        ops.push(weight);
        ops.push(Operator::gamma(raising, primed, Argument::one(arity)));
    }
    Ok(ops)
}

/// Window half-width used for a leg and cutoff.
pub fn default_window(leg: &Partition, cutoff: u32) -> i64 {
    i64::from(cutoff) + leg.conjugate().edge_sequence().stable_radius() + 4
}

/// The one-leg vertex (or a restricted-configuration generating function)
/// as a windowed operator product. The product is evaluated on two windows
/// that differ by two slices on each side; they must agree.
pub fn vertex_by_transfer(group: Group, leg: &Partition, mode: TransferMode, cutoff: u32) -> Result<Series> {
    let window = default_window(leg, cutoff);
    let arity = group.arity();
    let eval = |w: i64| -> Result<Series> { evaluate_product(&vertex_ops(group, leg, mode, w)?, arity, cutoff) };
    let (small, large) = rayon::join(|| eval(window), || eval(window + 2));
    let (small, large) = (small?, large?);
    if small != large {
        return Err(Error::NonStabilizing(format!("window {window} vs {}", window + 2)));
    }
    Ok(small)
}

/// Applies `word[0] word[1] ⋯ word[r-1]` to a ket, rightmost operator first.
pub fn apply_word(word: &[Operator], state: &TransferState) -> Result<TransferState> {
    word.iter().rev().try_fold(state.clone(), |acc, op| apply(op, &acc))
}

/// A commutation relation `lhs = scalar · rhs` between operator words.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Vec<Operator>,
    pub rhs: Vec<Operator>,
    pub scalar: Series,
}

impl Relation {
    /// The first basis ket with at most `max_size` boxes on which the two
    /// sides differ.
    pub fn first_failure(&self, max_size: u32) -> Result<Option<Partition>> {
        let arity = self.scalar.arity();
        let cutoff = self.scalar.cutoff();
        for p in Partition::up_to_size(max_size) {
            let ket = TransferState::basis(p.clone(), arity, cutoff);
            let left = apply_word(&self.lhs, &ket)?;
            let right = apply_word(&self.rhs, &ket)?.times(&self.scalar)?;
            if left != right {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    pub fn holds(&self, max_size: u32) -> Result<bool> {
        Ok(self.first_failure(max_size)?.is_none())
    }
}

/// Slots of the two free arguments in [`exchange_relations`].
pub const ARG_X: usize = 4;
pub const ARG_Y: usize = 5;

/// The commutation relations between `Γ`, `Γ'`, `E` and the weight
/// operators, over six variables: the four colors followed by two free
/// arguments `x` and `y`. The vacuum relations for `E_±` are included as
/// one-sided words compared on the vacuum component.
pub fn exchange_relations(cutoff: u32) -> Result<Vec<Relation>> {
    const ARITY: usize = 6;
    let x = Argument::var(ARITY, ARG_X);
    let y = Argument::var(ARITY, ARG_Y);
    let sq = |a: &Argument| Argument::new(false, a.mono.pow(2));
    let times = |a: &Argument, slots: &[usize]| Argument::new(false, a.mono.mul(&Monomial::product_of(ARITY, slots)));
    let one = Series::one(ARITY, cutoff);
    let xy = Monomial::product_of(ARITY, &[ARG_X, ARG_Y]);
    let one_plus_xy = one.add(&Series::monomial(ARITY, cutoff, xy.clone(), BigInt::one()))?;
    let one_minus_xy = one.sub(&Series::monomial(ARITY, cutoff, xy.clone(), BigInt::one()))?;
    let one_minus_xy2 = one.sub(&Series::monomial(ARITY, cutoff, xy.pow(2), BigInt::one()))?;
    let inv_xy = one_minus_xy.invert()?;
    let inv_xy2 = one_minus_xy2.invert()?;

    use Operator::*;
    let rel = |name: &str, lhs: Vec<Operator>, rhs: Vec<Operator>, scalar: &Series| Relation {
        name: name.to_string(),
        lhs,
        rhs,
        scalar: scalar.clone(),
    };
    let mut out = vec![
        rel(
            "G+ G'-",
            vec![GammaPlus(x.clone()), GammaMinusPrime(y.clone())],
            vec![GammaMinusPrime(y.clone()), GammaPlus(x.clone())],
            &one_plus_xy,
        ),
        rel(
            "G'+ G-",
            vec![GammaPlusPrime(x.clone()), GammaMinus(y.clone())],
            vec![GammaMinus(y.clone()), GammaPlusPrime(x.clone())],
            &one_plus_xy,
        ),
        rel(
            "G+ G-",
            vec![GammaPlus(x.clone()), GammaMinus(y.clone())],
            vec![GammaMinus(y.clone()), GammaPlus(x.clone())],
            &inv_xy,
        ),
        rel(
            "G'+ G'-",
            vec![GammaPlusPrime(x.clone()), GammaMinusPrime(y.clone())],
            vec![GammaMinusPrime(y.clone()), GammaPlusPrime(x.clone())],
            &inv_xy,
        ),
        rel("G+ = G'+ E+", vec![GammaPlus(x.clone())], vec![GammaPlusPrime(x.clone()), EPlus(sq(&x))], &one),
        rel("G- = G'- E-", vec![GammaMinus(x.clone())], vec![GammaMinusPrime(x.clone()), EMinus(sq(&x))], &one),
        rel("E+ G+", vec![EPlus(sq(&x)), GammaPlus(y.clone())], vec![GammaPlus(y.clone()), EPlus(sq(&x))], &one),
        rel("E- G-", vec![EMinus(sq(&x)), GammaMinus(y.clone())], vec![GammaMinus(y.clone()), EMinus(sq(&x))], &one),
        rel(
            "E+ G'+",
            vec![EPlus(sq(&x)), GammaPlusPrime(y.clone())],
            vec![GammaPlusPrime(y.clone()), EPlus(sq(&x))],
            &one,
        ),
        rel(
            "E- G'-",
            vec![EMinus(sq(&x)), GammaMinusPrime(y.clone())],
            vec![GammaMinusPrime(y.clone()), EMinus(sq(&x))],
            &one,
        ),
        rel("E+ G-", vec![EPlus(sq(&x)), GammaMinus(y.clone())], vec![GammaMinus(y.clone()), EPlus(sq(&x))], &inv_xy2),
        rel("G+ E-", vec![GammaPlus(x.clone()), EMinus(sq(&y))], vec![EMinus(sq(&y)), GammaPlus(x.clone())], &inv_xy2),
        rel(
            "G'+ E-",
            vec![GammaPlusPrime(x.clone()), EMinus(sq(&y))],
            vec![EMinus(sq(&y)), GammaPlusPrime(x.clone())],
            &one_minus_xy2,
        ),
    ];
    for (g, h) in [(Q0, QC), (QC, Q0), (QA, QB), (QB, QA)] {
        let shifted = times(&sq(&x), &[g, h]);
        out.push(rel(
            &format!("E- Qpair({g},{h})"),
            vec![EMinus(shifted.clone()), WeightPair(g, h)],
            vec![WeightPair(g, h), EMinus(sq(&x))],
            &one,
        ));
        out.push(rel(
            &format!("Qpair({g},{h}) E+"),
            vec![WeightPair(g, h), EPlus(shifted)],
            vec![EPlus(sq(&x)), WeightPair(g, h)],
            &one,
        ));
    }
    for g in [Q0, QA, QB, QC] {
        let shifted = times(&sq(&x), &[g, g]);
        out.push(rel(
            &format!("E- Qsingle({g})"),
            vec![EMinus(shifted.clone()), WeightSingle(g)],
            vec![WeightSingle(g), EMinus(sq(&x))],
            &one,
        ));
        out.push(rel(
            &format!("Qsingle({g}) E+"),
            vec![WeightSingle(g), EPlus(shifted)],
            vec![EPlus(sq(&x)), WeightSingle(g)],
            &one,
        ));
    }
    Ok(out)
}

/// `⟨∅|E_-(x)|λ⟩ = δ_{λ∅}` and `E_+(x)|∅⟩ = |∅⟩` for every `|λ| ≤ max_size`.
pub fn exponential_vacuum_relations_hold(max_size: u32, cutoff: u32) -> Result<bool> {
    const ARITY: usize = 6;
    let x2 = Argument::new(false, Monomial::var(ARITY, ARG_X).pow(2));
    let vacuum = TransferState::vacuum(ARITY, cutoff);
    if apply(&Operator::EPlus(x2.clone()), &vacuum)? != vacuum {
        return Ok(false);
    }
    for p in Partition::up_to_size(max_size) {
        let ket = TransferState::basis(p.clone(), ARITY, cutoff);
        let image = apply(&Operator::EMinus(x2.clone()), &ket)?;
        let expected = if p.is_empty() { Series::one(ARITY, cutoff) } else { Series::zero(ARITY, cutoff) };
        if image.amplitude(&Partition::empty()) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
