//! Donaldson–Thomas vertices: brute-force enumeration of colored 3D partitions,
//! skew Schur specializations and the closed product formulas.
//!
//! Series for `Z2×Z2` use the slots `(q0, qa, qb, qc)`; series for `Z/n` use
//! `(q̃0, …, q̃_{n-1})`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::partition::{Cell, Partition};
use crate::pyramid::Frame;
use crate::qseries::{LaurentMonomial, MacMahon, Monomial, ProductBuilder, Series};
use crate::rpc;

/// Box coloring of `(Z≥0)³`; see [`Group::color`].
pub type ColorMap = Group;

pub const Q0: usize = 0;
pub const QA: usize = 1;
pub const QB: usize = 2;
pub const QC: usize = 3;

/// A box `(i, j, k)` of the positive octant.
pub type Box3 = [u32; 3];

/// The three asymptotic legs `(λ, μ, ν)`, along the `i`, `j` and `k` axes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Legs {
    pub first: Partition,
    pub second: Partition,
    pub third: Partition,
}

impl Legs {
    pub fn none() -> Self {
        Legs::default()
    }

    /// Only the third leg, along the `k` axis.
    pub fn third(nu: Partition) -> Self {
        Legs { third: nu, ..Legs::default() }
    }

    pub fn new(first: Partition, second: Partition, third: Partition) -> Self {
        Legs { first, second, third }
    }

    /// `(λ, μ, ν) ↦ (ν, λ, μ)`.
    pub fn rotated(&self) -> Self {
        Legs { first: self.third.clone(), second: self.first.clone(), third: self.second.clone() }
    }

    pub fn nonempty_count(&self) -> usize {
        [&self.first, &self.second, &self.third].iter().filter(|p| !p.is_empty()).count()
    }

    /// Number of legs containing the box.
    pub fn multiplicity(&self, [i, j, k]: Box3) -> u32 {
        let first = self.first.contains(Cell::new(j, k));
        let second = self.second.contains(Cell::new(k, i));
        let third = self.third.contains(Cell::new(i, j));
        u32::from(first) + u32::from(second) + u32::from(third)
    }

    fn contains(&self, b: Box3) -> bool {
        self.multiplicity(b) > 0
    }

    /// Boxes at the foot of each leg that can be added with no other extra box.
    fn foot_corners(&self) -> Vec<Box3> {
        let mut out = Vec::new();
        for c in outer_corners(&self.first) {
            out.push([0, c.i, c.j]);
        }
        for c in outer_corners(&self.second) {
            out.push([c.j, 0, c.i]);
        }
        for c in outer_corners(&self.third) {
            out.push([c.i, c.j, 0]);
        }
        out
    }
}

/// Cells that can be added to the diagram.
fn outer_corners(p: &Partition) -> Vec<Cell> {
    (0..=p.len()).filter(|&j| j == 0 || p.row(j - 1) > p.row(j)).map(|j| Cell::new(p.row(j), j as u32)).collect()
}

/// A 3D partition with prescribed legs: the legs plus finitely many extra boxes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeggedPartition3D {
    pub legs: Legs,
    pub extra: BTreeSet<Box3>,
}

impl LeggedPartition3D {
    pub fn new(legs: Legs, extra: BTreeSet<Box3>) -> Result<Self> {
        let p = LeggedPartition3D { legs, extra };
        if let Some(&[i, j, _]) = p.extra.iter().find(|&&b| p.legs.contains(b) || !p.supported(b)) {
            return Err(Error::CellOutside { i, j });
        }
        Ok(p)
    }

    fn present(&self, b: [i64; 3]) -> bool {
        if b.iter().any(|&x| x < 0) {
            return true;
        }
        let b = b.map(|x| x as u32);
        self.legs.contains(b) || self.extra.contains(&b)
    }

    /// All three coordinate predecessors are present.
    fn supported(&self, [i, j, k]: Box3) -> bool {
        let (i, j, k) = (i64::from(i), i64::from(j), i64::from(k));
        self.present([i - 1, j, k]) && self.present([i, j - 1, k]) && self.present([i, j, k - 1])
    }

    /// Boxes whose addition keeps an order ideal.
    pub fn addable(&self) -> Vec<Box3> {
        let mut cand: BTreeSet<Box3> = BTreeSet::new();
        cand.insert([0, 0, 0]);
        for &[i, j, k] in &self.extra {
            cand.insert([i + 1, j, k]);
            cand.insert([i, j + 1, k]);
            cand.insert([i, j, k + 1]);
        }
        cand.extend(self.legs.foot_corners());
        cand.into_iter().filter(|&b| !self.legs.contains(b) && !self.extra.contains(&b) && self.supported(b)).collect()
    }

    /// Colored renormalized volume: leg boxes weigh 0, extra boxes 1.
    pub fn weight(&self, colors: ColorMap) -> Monomial {
        let mut exps = vec![0u32; colors.arity()];
        for &[i, j, k] in &self.extra {
            exps[colors.color(i, j, k)] += 1;
        }
        Monomial::new(exps)
    }
}

/// `V_{∅∅ν}` by enumerating every configuration with at most `cutoff` extra boxes.
pub fn enumerate_3d(leg: &Partition, colors: ColorMap, cutoff: u32) -> Result<Series> {
    enumerate_legged(&Legs::third(leg.clone()), colors, cutoff)
}

/// Enumeration with the leg in any position. Several nonempty legs give a
/// Laurent series and are not supported.
pub fn enumerate_legged(legs: &Legs, colors: ColorMap, cutoff: u32) -> Result<Series> {
    if legs.nonempty_count() > 1 {
        return Err(Error::Unsupported("enumeration with more than one leg".to_string()));
    }
    let arity = colors.arity();
    let mut out = Series::zero(arity, cutoff);
    let mut level: Vec<Vec<Box3>> = vec![Vec::new()];
    for size in 0..=cutoff {
        let configs: Vec<LeggedPartition3D> = level
            .iter()
            .map(|extra| LeggedPartition3D { legs: legs.clone(), extra: extra.iter().copied().collect() })
            .collect();
        for p in &configs {
            out.add_term(p.weight(colors), BigInt::one());
        }
        if size == cutoff {
            break;
        }
        let next: HashSet<Vec<Box3>> = configs
            .par_iter()
            .flat_map_iter(|p| {
                p.addable().into_iter().map(move |b| {
                    let mut extra: Vec<Box3> = p.extra.iter().copied().collect();
                    let at = extra.binary_search(&b).unwrap_err();
                    extra.insert(at, b);
                    extra
                })
            })
            .collect();
        level = next.into_iter().collect();
        level.sort();
    }
    Ok(out)
}

/// `h_0, …, h_top` of a specialized variable list, as truncated series.
fn complete_homogeneous(variables: &[LaurentMonomial], arity: usize, top: usize, cutoff: u32) -> Result<Vec<Series>> {
    let mut h: Vec<Series> =
        (0..=top).map(|r| if r == 0 { Series::one(arity, cutoff) } else { Series::zero(arity, cutoff) }).collect();
    for x in variables {
        if x.arity() != arity {
            return Err(Error::ArityMismatch(arity, x.arity()));
        }
        let mono = x
            .to_monomial()
            .ok_or_else(|| Error::NonConvergent(format!("variable with negative exponent {:?}", x.exps)))?;
        if mono.degree() == 0 && x.negative {
            return Err(Error::NonConvergent("degree-0 variable other than 1".to_string()));
        }
        if mono.degree() > cutoff {
            continue;
        }
        let coef = if x.negative { -BigInt::one() } else { BigInt::one() };
        let mut next = h.clone();
        for r in 1..=top {
            let mut power = Monomial::one(arity);
            let mut c = BigInt::one();
            for k in 1..=r {
                power = power.mul(&mono);
                c *= &coef;
                if power.degree() > cutoff {
                    break;
                }
                next[r] = next[r].add(&h[r - k].mul_monomial(&power, &c))?;
            }
        }
        h = next;
    }
    Ok(h)
}

fn determinant(m: &[Vec<Series>], arity: usize, cutoff: u32) -> Result<Series> {
    fn expand(m: &[Vec<Series>], row: usize, used: &mut Vec<bool>, arity: usize, cutoff: u32) -> Result<Series> {
        if row == m.len() {
            return Ok(Series::one(arity, cutoff));
        }
        let mut acc = Series::zero(arity, cutoff);
        let mut sign = true;
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_empty() {
                used[col] = true;
                let minor = expand(m, row + 1, used, arity, cutoff)?;
                used[col] = false;
                let term = entry.mul(&minor)?;
                acc = if sign { acc.add(&term)? } else { acc.sub(&term)? };
            }
            sign = !sign;
        }
        Ok(acc)
    }
    expand(m, 0, &mut vec![false; m.len()], arity, cutoff)
}

/// `s_{μ/η}` at the given variables (all further variables zero), by the
/// Jacobi–Trudi determinant in complete homogeneous functions.
///
/// Variables must be monomials of positive degree or exactly `1`. Returns zero
/// when `η ⊄ μ`.
pub fn skew_schur_specialized(
    mu: &Partition,
    eta: &Partition,
    variables: &[LaurentMonomial],
    arity: usize,
    cutoff: u32,
) -> Result<Series> {
    if !eta.is_subset_of(mu) {
        return Ok(Series::zero(arity, cutoff));
    }
    if eta == mu {
        return Ok(Series::one(arity, cutoff));
    }
    let len = mu.len();
    let top = (mu.row(0) as usize) + len;
    let h = complete_homogeneous(variables, arity, top, cutoff)?;
    let matrix: Vec<Vec<Series>> = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| {
                    let idx = i64::from(mu.row(i)) - i64::from(eta.row(j)) - i as i64 + j as i64;
                    if idx < 0 {
                        Series::zero(arity, cutoff)
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix, arity, cutoff)
}

/// The principal sequence `𝐪̃_t = q̃_1⋯q̃_t` (`t > 0`), `1` (`t = 0`),
/// `(q̃_0 q̃_{-1}⋯q̃_{t+1})^{-1}` (`t < 0`), indices mod `n`.
pub fn principal_variable(n: u32, t: i64) -> LaurentMonomial {
    let mut exps = vec![0i64; n as usize];
    let n = i64::from(n);
    if t > 0 {
        for s in 1..=t {
            exps[s.rem_euclid(n) as usize] += 1;
        }
    } else {
        for s in (t + 1)..=0 {
            exps[s.rem_euclid(n) as usize] -= 1;
        }
    }
    LaurentMonomial { negative: false, exps }
}

/// The sequence `𝐪̃_{i - shape_i}` for `i ≥ 0`, cut once degrees pass the cutoff.
pub fn shifted_variables(n: u32, shape: &Partition, cutoff: u32) -> Vec<LaurentMonomial> {
    let mut out = Vec::new();
    let mut i = 0usize;
    loop {
        let t = i as i64 - i64::from(shape.row(i));
        if i >= shape.len() && t > i64::from(cutoff) {
            break;
        }
        out.push(principal_variable(n, t));
        i += 1;
    }
    out
}

fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn grow(outer: &Partition, j: usize, cap: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if j == outer.len() {
            out.push(Partition::new(rows.clone()).expect("weakly decreasing"));
            return;
        }
        for r in 0..=cap.min(outer.row(j)) {
            rows.push(r);
            grow(outer, j + 1, r, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    grow(outer, 0, outer.row(0), &mut Vec::new(), &mut out);
    out
}

fn monomial_of(exps: &[i64]) -> Monomial {
    Monomial::new(exps.iter().map(|&e| e as u32).collect())
}

/// Multiplies by the Laurent monomial `shift`, keeping total degree ≤ `cutoff`.
/// The input must be valid up to degree `cutoff` plus the negative part of `shift`.
fn apply_shift(series: &Series, shift: &[i64], cutoff: u32) -> Result<Series> {
    let mut out = Series::zero(series.arity(), cutoff);
    for (m, c) in series.terms() {
        let exps: Vec<i64> = m.exps().iter().zip(shift).map(|(&e, &s)| i64::from(e) + s).collect();
        let degree: i64 = exps.iter().sum();
        if degree > i64::from(cutoff) {
            continue;
        }
        if exps.iter().any(|&e| e < 0) {
            return Err(Error::NonConvergent(format!("negative exponent {exps:?} in the vertex")));
        }
        out.add_term(monomial_of(&exps), c.clone());
    }
    Ok(out)
}

fn unit_q(arity: usize) -> Monomial {
    Monomial::new(vec![1; arity])
}

fn laurent(arity: usize, slots: &[usize]) -> LaurentMonomial {
    LaurentMonomial::from(&Monomial::product_of(arity, slots))
}

/// `M(1, q)^n ∏_{0<a≤b<n} M̃(q̃_a⋯q̃_b, q)`.
fn zn_nolegs_product(n: u32, cutoff: u32) -> Result<ProductBuilder> {
    let arity = n as usize;
    let q = unit_q(arity);
    let mut b = ProductBuilder::new(arity, cutoff);
    b.macmahon(&LaurentMonomial::one(arity), &q, i64::from(n))?;
    for lo in 1..arity {
        for hi in lo..arity {
            let slots: Vec<usize> = (lo..=hi).collect();
            b.family(MacMahon::Tilde, &laurent(arity, &slots), &q, 1)?;
        }
    }
    Ok(b)
}

/// `V^{Z/n}_{∅∅∅}`.
pub fn zn_nolegs(n: u32, cutoff: u32) -> Result<Series> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(zn_nolegs_product(n, cutoff)?.expand())
}

/// `V^{Z/n}_{λμν}` by the product formula with hook and renormalization factors
/// and the finite sum over partitions `η ⊂ λ′ ∩ μ`.
pub fn vertex_closed_zn(n: u32, legs: &Legs, cutoff: u32) -> Result<Series> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let arity = n as usize;
    let bar: Vec<usize> = (0..arity).map(|k| (arity - k) % arity).collect();
    let lambda_t = legs.first.conjugate();
    let mu = &legs.second;
    let nu = &legs.third;

    let common = Partition::new((0..mu.len()).map(|j| mu.row(j).min(lambda_t.row(j))).collect())?;
    let mut shift = vec![0i64; arity];
    let mu_t = mu.conjugate();
    for k in 0..n {
        shift[k as usize] -= legs.first.renormalization_exponent(k, n) as i64;
        shift[bar[k as usize]] -= mu_t.renormalization_exponent(k, n) as i64;
    }
    shift[0] -= i64::from(common.size());
    let lift: i64 = shift.iter().filter(|&&s| s < 0).map(|s| -s).sum();
    let work = cutoff + lift as u32;

    let mut product = zn_nolegs_product(n, work)?;
    for cell in nu.cells() {
        let mut exps = vec![0u32; arity];
        for (k, e) in exps.iter_mut().enumerate() {
            *e = nu.hook_color_count(cell, k as i64, n)?;
        }
        product.factor(&LaurentMonomial::from(&Monomial::new(exps)), -1)?;
    }
    let counts: Vec<i64> = (0..n).map(|k| i64::from(nu.residue_count(i64::from(k), n).unwrap_or(0))).collect();
    let base = zn_nolegs_product(n, work)?;
    for k in 0..arity {
        let e = -2 * counts[k] + counts[(k + 1) % arity] + counts[(k + arity - 1) % arity];
        if e != 0 {
            let targets: Vec<Monomial> = (0..arity).map(|t| Monomial::var(arity, (k + t) % arity)).collect();
            product.absorb(&base.substitute(&targets)?, e);
        }
    }

    let vars_left = shifted_variables(n, &nu.conjugate(), work);
    let vars_right = shifted_variables(n, nu, work);
    let mut eta_sum = Series::zero(arity, work);
    for eta in sub_partitions(&common) {
        let left = skew_schur_specialized(&lambda_t, &eta, &vars_left, arity, work)?.permute(&bar)?;
        let right = skew_schur_specialized(mu, &eta, &vars_right, arity, work)?;
        let lift_eta = Monomial::new((0..arity).map(|s| if s == 0 { common.size() - eta.size() } else { 0 }).collect());
        eta_sum = eta_sum.add(&left.mul(&right)?.mul_monomial(&lift_eta, &BigInt::one()))?;
    }
    let full = product.expand().mul(&eta_sum)?;
    apply_shift(&full, &shift, cutoff)
}

/// `⌊(m+1)/2⌋` and `2{m/2}`.
fn branch_args(m: u32) -> (i64, u32) {
    (i64::from(m.div_ceil(2)), m % 2)
}

/// Whether `m ≡ 0, 3 (mod 4)`.
fn first_branch(m: u32) -> bool {
    matches!(m % 4, 0 | 3)
}

/// `V^{Z4}_{∅∅ν}` for the staircase `ν = (m, m-1, …, 1)` by the branch formulas.
pub fn one_leg_zn_staircase(m: u32, cutoff: u32) -> Result<Series> {
    let (f, s) = branch_args(m);
    let q = unit_q(4);
    // Built in (q0, qa, qb, qc) with q̃ = (q0, qb, qc, qa), then renamed.
    let mut b = ProductBuilder::new(4, cutoff);
    let nolegs = zn_nolegs_product(4, cutoff)?;
    let special = if first_branch(m) {
        b.absorb(&nolegs.substitute(&slots_to_monos(&[Q0, QB, QC, QA]))?, 1);
        QC
    } else {
        b.absorb(&nolegs.substitute(&slots_to_monos(&[QC, QA, Q0, QB]))?, 1);
        Q0
    };
    if m > 0 {
        b.family(MacMahon::tilde_branch(1 - s, f), &laurent(4, &[special]), &q, 1)?;
        for x in [vec![QA], vec![QB], vec![QA, QB, special]] {
            b.family(MacMahon::tilde_branch(s, f), &laurent(4, &x), &q, 1)?;
        }
    }
    b.expand().permute(&[0, 3, 1, 2])
}

fn slots_to_monos(slots: &[usize]) -> Vec<Monomial> {
    slots.iter().map(|&s| Monomial::var(4, s)).collect()
}

fn z2z2_nolegs_product(cutoff: u32, with_ab: bool) -> Result<ProductBuilder> {
    let q = unit_q(4);
    let mut b = ProductBuilder::new(4, cutoff);
    b.macmahon(&LaurentMonomial::one(4), &q, 4)?;
    if with_ab {
        b.family(MacMahon::Tilde, &laurent(4, &[QA, QB]), &q, 1)?;
    }
    for x in [[QA, QC], [QB, QC]] {
        b.family(MacMahon::Tilde, &laurent(4, &x), &q, 1)?;
    }
    for x in [vec![QA], vec![QB], vec![QC], vec![QA, QB, QC]] {
        b.family(MacMahon::Tilde, &laurent(4, &x).negated(), &q, -1)?;
    }
    Ok(b)
}

/// `V^{Z2×Z2}_{∅∅∅}`.
pub fn closed_z2z2_nolegs(cutoff: u32) -> Result<Series> {
    Ok(z2z2_nolegs_product(cutoff, true)?.expand())
}

/// The pyramid partition generating function as a product.
pub fn z_pyramid_closed(cutoff: u32) -> Result<Series> {
    Ok(z2z2_nolegs_product(cutoff, false)?.expand())
}

/// Which variables play the roles of `(qa, qb, qc)`.
pub type Roles = [usize; 3];

pub const STANDARD_ROLES: Roles = [QA, QB, QC];

/// Correction factor turning the zero-leg `Z2×Z2` vertex into the one-leg vertex for the staircase of size `m`.
pub fn staircase_leg_factor(roles: Roles, m: u32, cutoff: u32) -> Result<Series> {
    Ok(staircase_leg_product(roles, m, cutoff)?.expand())
}

fn staircase_leg_product([a, b, c]: Roles, m: u32, cutoff: u32) -> Result<ProductBuilder> {
    let (f, s) = branch_args(m);
    let q = unit_q(4);
    let mut p = ProductBuilder::new(4, cutoff);
    p.family(MacMahon::tilde_branch(s, 2 * f), &laurent(4, &[a, b]), &q, 1)?;
    p.family(MacMahon::tilde_branch(1 - s, f), &laurent(4, &[c]).negated(), &q, -1)?;
    for x in [vec![a], vec![b], vec![a, b, c]] {
        p.family(MacMahon::tilde_branch(s, f), &laurent(4, &x).negated(), &q, -1)?;
    }
    Ok(p)
}

/// Ratio between the `Z2×Z2` and the reordered `Z4` one-leg staircase vertices.
pub fn z4_comparison_factor(roles: Roles, m: u32, cutoff: u32) -> Result<Series> {
    let [a, b, c] = roles;
    let (f, s) = branch_args(m);
    let q = unit_q(4);
    let mut p = ProductBuilder::new(4, cutoff);
    for x in [vec![a], vec![b], vec![c], vec![a, b, c]] {
        p.family(MacMahon::Hat, &laurent(4, &x), &q, 1)?;
    }
    p.family(MacMahon::Tilde, &laurent(4, &[a, b]), &q, 1)?;
    p.family(MacMahon::tilde_branch(s, 2 * f), &laurent(4, &[a, b]), &q, 1)?;
    for (x, branch) in [(vec![a], s), (vec![b], s), (vec![c], 1 - s), (vec![a, b, c], s)] {
        p.family(MacMahon::hat_branch(branch, f), &laurent(4, &x), &q, -1)?;
    }
    Ok(p.expand())
}

/// Variable order in which the `Z4` vertex is read inside the `Z2×Z2` relation.
pub fn z4_reading(m: u32) -> [usize; 4] {
    if first_branch(m) {
        [Q0, QB, QC, QA]
    } else {
        [QC, QB, Q0, QA]
    }
}

/// Generating function of restricted pyramid configurations for the staircase
/// leg of size `m`, as a correction to the pyramid generating function.
pub fn restricted_closed(m: u32, cutoff: u32) -> Result<Series> {
    let (f, s) = branch_args(m);
    let q = unit_q(4);
    let c = if first_branch(m) { QC } else { Q0 };
    let mut p = ProductBuilder::new(4, cutoff);
    p.macmahon(&LaurentMonomial::one(4), &q, 4)?;
    for x in [[QA, c], [QB, c]] {
        p.family(MacMahon::Tilde, &laurent(4, &x), &q, 1)?;
    }
    for x in [vec![QA], vec![QB], vec![c], vec![QA, QB, c]] {
        p.family(MacMahon::Tilde, &laurent(4, &x).negated(), &q, -1)?;
    }
    if m > 0 {
        p.family(MacMahon::tilde_branch(1 - s, f), &laurent(4, &[c]).negated(), &q, -1)?;
        for x in [vec![QA], vec![QB], vec![QA, QB, c]] {
            p.family(MacMahon::tilde_branch(s, f), &laurent(4, &x).negated(), &q, -1)?;
        }
    }
    Ok(p.expand())
}

/// Two sides of a series identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: Series,
    pub rhs: Series,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// First differing monomial with both coefficients.
    pub fn first_difference(&self) -> Option<(Monomial, BigInt, BigInt)> {
        self.lhs.first_difference(&self.rhs)
    }
}

fn identity(name: String, lhs: Series, rhs: Series) -> IdentityCheck {
    IdentityCheck { name, lhs, rhs }
}

/// `V^{Z2×Z2}_{∅∅ν} = V^{Z2×Z2}_{∅∅∅} · staircase_leg_factor(m)` for the staircase of size `m`.
pub fn one_leg_z2z2_check(m: u32, cutoff: u32) -> Result<IdentityCheck> {
    let lhs = enumerate_3d(&Partition::staircase(m), Group::Z2xZ2, cutoff)?;
    let mut p = z2z2_nolegs_product(cutoff, true)?;
    p.absorb(&staircase_leg_product(STANDARD_ROLES, m, cutoff)?, 1);
    Ok(identity(format!("z2z2 one-leg staircase m={m}"), lhs, p.expand()))
}

/// `V^{Z2×Z2}_{∅∅ν} = V^{Z4}_{∅∅ν}(reordered) · z4_comparison_factor(m)`, with the `Z4` side from the
/// general closed form.
pub fn z2z2_z4_check(m: u32, cutoff: u32) -> Result<IdentityCheck> {
    let nu = Partition::staircase(m);
    let lhs = enumerate_3d(&nu, Group::Z2xZ2, cutoff)?;
    let z4 = vertex_closed_zn(4, &Legs::third(nu), cutoff)?;
    let rhs = z4.substitute(&slots_to_monos(&z4_reading(m)))?.mul(&z4_comparison_factor(STANDARD_ROLES, m, cutoff)?)?;
    Ok(identity(format!("z2z2 vs z4 staircase m={m}"), lhs, rhs))
}

/// `V^{Z2×Z2}_{∅∅ν} = M̃(qa qb) M̃_s(qa qb; 2f) · Z_anti(ν)` with the branch swap, where `Z_anti` counts antidiagonal restricted configurations.
pub fn z2z2_rpc_plus_check(m: u32, cutoff: u32) -> Result<IdentityCheck> {
    let (f, s) = branch_args(m);
    let nu = Partition::staircase(m);
    let lhs = enumerate_3d(&nu, Group::Z2xZ2, cutoff)?;
    let swap: [usize; 4] = if first_branch(m) { [Q0, QB, QA, QC] } else { [QC, QA, QB, Q0] };
    let z = rpc::generating_function(&nu, 0, Frame::Antidiagonal, cutoff).permute(&swap)?;
    let q = unit_q(4);
    let mut p = ProductBuilder::new(4, cutoff);
    p.family(MacMahon::Tilde, &laurent(4, &[QA, QB]), &q, 1)?;
    p.family(MacMahon::tilde_branch(s, 2 * f), &laurent(4, &[QA, QB]), &q, 1)?;
    let rhs = p.expand().mul(&z)?;
    Ok(identity(format!("z2z2 vs antidiagonal restricted pyramids m={m}"), lhs, rhs))
}

/// Diagonal restricted configurations `Z_diag(ν)` in terms of `V^{Z4}_{∅∅ν}(q0, qb, qc, qa)`.
pub fn z4_rpc_minus_check(m: u32, cutoff: u32) -> Result<IdentityCheck> {
    let (f, s) = branch_args(m);
    let nu = Partition::staircase(m);
    let lhs = rpc::generating_function(&nu, 0, Frame::Diagonal, cutoff);
    let z4 = vertex_closed_zn(4, &Legs::third(nu), cutoff)?.substitute(&slots_to_monos(&[Q0, QB, QC, QA]))?;
    let c = if first_branch(m) { QC } else { Q0 };
    let q = unit_q(4);
    let mut p = ProductBuilder::new(4, cutoff);
    for x in [vec![QA], vec![QB], vec![c], vec![QA, QB, c]] {
        p.family(MacMahon::Hat, &laurent(4, &x), &q, 1)?;
    }
    for (x, branch) in [(vec![QA], s), (vec![QB], s), (vec![c], 1 - s), (vec![QA, QB, c], s)] {
        p.family(MacMahon::hat_branch(branch, f), &laurent(4, &x), &q, -1)?;
    }
    let rhs = z4.mul(&p.expand())?;
    Ok(identity(format!("diagonal restricted pyramids vs z4 m={m}"), lhs, rhs))
}

/// Cyclic leg symmetry `V_{λμν}(q0,qa,qb,qc) = V_{νλμ}(q0,qc,qa,qb) = V_{μνλ}(q0,qb,qc,qa)`,
/// checked by enumeration.
pub fn symmetry_check(legs: &Legs, cutoff: u32) -> Result<bool> {
    let base = enumerate_legged(legs, Group::Z2xZ2, cutoff)?;
    let once = legs.rotated();
    let twice = once.rotated();
    let v1 = enumerate_legged(&once, Group::Z2xZ2, cutoff)?.substitute(&slots_to_monos(&[Q0, QC, QA, QB]))?;
    let v2 = enumerate_legged(&twice, Group::Z2xZ2, cutoff)?.substitute(&slots_to_monos(&[Q0, QB, QC, QA]))?;
    Ok(base == v1 && base == v2)
}

/// Sum of coefficients, a quick fingerprint.
pub fn total(series: &Series) -> BigInt {
    series.terms().fold(BigInt::zero(), |acc, (_, c)| acc + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn sums(s: &Series) -> Vec<i64> {
        s.degree_sums().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_enumerations() {
        let s = enumerate_3d(&Partition::empty(), Group::Z2xZ2, 1).unwrap();
        assert_eq!(s, Series::from_terms(4, 1, [(Monomial::one(4), 1.into()), (Monomial::var(4, Q0), 1.into())]));
        let s = enumerate_3d(&Partition::empty(), Group::Z2xZ2, 2).unwrap();
        for slot in [QA, QB, QC] {
            assert_eq!(s.coefficient(&Monomial::product_of(4, &[Q0, slot])), BigInt::one());
        }
        assert_eq!(s.coeff(&[2, 0, 0, 0]), BigInt::zero());
        assert_eq!(enumerate_3d(&p(&[1]), Group::Z2xZ2, 0).unwrap(), Series::one(4, 0));
    }

    #[test]
    fn plane_partitions_count() {
        let s = enumerate_3d(&Partition::empty(), Group::Zn(1), 6).unwrap();
        assert_eq!(sums(&s), [1, 1, 3, 6, 13, 24, 48]);
    }

    #[test]
    fn addable_respects_the_leg() {
        let legs = Legs::third(p(&[2, 1]));
        let pp = LeggedPartition3D::new(legs, BTreeSet::new()).unwrap();
        assert_eq!(pp.addable(), vec![[0, 2, 0], [1, 1, 0], [2, 0, 0]]);
        assert!(LeggedPartition3D::new(Legs::third(p(&[1])), [[0, 0, 1]].into()).is_err());
    }

    #[test]
    fn multiple_legs_unsupported() {
        let legs = Legs::new(p(&[1]), Partition::empty(), p(&[1]));
        assert!(enumerate_legged(&legs, Group::Z2xZ2, 2).is_err());
    }

    #[test]
    fn skew_schur_examples() {
        let x = |s| LaurentMonomial::from(&Monomial::var(2, s));
        let vars = [x(0), x(1)];
        let one = skew_schur_specialized(&p(&[2, 1]), &p(&[2, 1]), &vars, 2, 4).unwrap();
        assert_eq!(one, Series::one(2, 4));
        let h1 = skew_schur_specialized(&p(&[1]), &Partition::empty(), &vars, 2, 4).unwrap();
        assert_eq!(
            h1.to_string(),
            Series::from_terms(2, 4, [(Monomial::var(2, 0), 1.into()), (Monomial::var(2, 1), 1.into())]).to_string()
        );
        let e2 = skew_schur_specialized(&p(&[1, 1]), &Partition::empty(), &vars, 2, 4).unwrap();
        assert_eq!(e2, Series::monomial(2, 4, Monomial::new(vec![1, 1]), 1.into()));
        let zero = skew_schur_specialized(&p(&[1]), &p(&[2]), &vars, 2, 4).unwrap();
        assert!(zero.is_empty());
    }

    #[test]
    fn skew_schur_rejects_bad_constants() {
        let minus_one = LaurentMonomial::one(1).negated();
        assert!(skew_schur_specialized(&p(&[1]), &Partition::empty(), &[minus_one], 1, 3).is_err());
        let one = LaurentMonomial::one(1);
        let s = skew_schur_specialized(&p(&[2]), &Partition::empty(), &[one.clone(), one], 1, 3).unwrap();
        assert_eq!(s.constant_term(), BigInt::from(3));
    }

    #[test]
    fn principal_sequence() {
        assert_eq!(principal_variable(4, 2).exps, vec![0, 1, 1, 0]);
        assert_eq!(principal_variable(4, 0).exps, vec![0; 4]);
        assert_eq!(principal_variable(4, -2).exps, vec![-1, 0, 0, -1]);
        let v = shifted_variables(3, &Partition::empty(), 2);
        assert_eq!(v.len(), 3);
    }

    #[test]
    fn z2z2_nolegs_matches_enumeration() {
        let d = 5;
        assert_eq!(closed_z2z2_nolegs(d).unwrap(), enumerate_3d(&Partition::empty(), Group::Z2xZ2, d).unwrap());
    }

    #[test]
    fn zn_hook_factor() {
        let s = vertex_closed_zn(4, &Legs::third(p(&[1])), 3).unwrap();
        let base = zn_nolegs(4, 3).unwrap();
        let mut o = ProductBuilder::new(4, 3);
        o.absorb(&zn_nolegs_product(4, 3).unwrap(), -2);
        for k in [1usize, 3] {
            let t: Vec<Monomial> = (0..4).map(|s| Monomial::var(4, (k + s) % 4)).collect();
            o.absorb(&zn_nolegs_product(4, 3).unwrap().substitute(&t).unwrap(), 1);
        }
        o.factor(&laurent(4, &[0]), -1).unwrap();
        assert_eq!(s, base.mul(&o.expand()).unwrap());
    }

    #[test]
    fn zn_closed_matches_enumeration() {
        let d = 5;
        for n in [2u32, 3, 4] {
            for nu in [p(&[]), p(&[1]), p(&[2, 1]), p(&[2])] {
                let closed = vertex_closed_zn(n, &Legs::third(nu.clone()), d).unwrap();
                let direct = enumerate_3d(&nu, Group::Zn(n), d).unwrap();
                assert_eq!(closed, direct, "n={n} nu={nu}");
            }
        }
    }

    #[test]
    fn staircase_branches_match_general_formula() {
        let d = 5;
        for m in 0..=3 {
            let general = vertex_closed_zn(4, &Legs::third(Partition::staircase(m)), d).unwrap();
            assert_eq!(one_leg_zn_staircase(m, d).unwrap(), general, "m={m}");
        }
    }

    #[test]
    fn constant_terms_are_one() {
        for m in 1..=4 {
            assert_eq!(z4_comparison_factor(STANDARD_ROLES, m, 3).unwrap().constant_term(), BigInt::one());
            assert_eq!(staircase_leg_factor(STANDARD_ROLES, m, 3).unwrap().constant_term(), BigInt::one());
        }
    }

    #[test]
    fn one_leg_identities() {
        for m in 1..=2 {
            assert!(one_leg_z2z2_check(m, 4).unwrap().holds(), "staircase_leg_factor m={m}");
            assert!(z2z2_z4_check(m, 4).unwrap().holds(), "z4_comparison_factor m={m}");
        }
    }

    #[test]
    fn restricted_closed_without_leg_is_pyramids() {
        assert_eq!(restricted_closed(0, 5).unwrap(), z_pyramid_closed(5).unwrap());
        let z = z_pyramid_closed(6).unwrap();
        assert_eq!(sums(&z), [1, 1, 2, 5, 10, 18, 32]);
    }

    #[test]
    fn restricted_closed_matches_enumeration() {
        let d = 4;
        for m in 1..=2 {
            let rp = rpc::generating_function(&Partition::staircase(m), 0, Frame::Antidiagonal, d);
            assert_eq!(restricted_closed(m, d).unwrap(), rp, "m={m}");
        }
    }

    #[test]
    fn rpc_identities() {
        for m in 1..=2 {
            assert!(z2z2_rpc_plus_check(m, 4).unwrap().holds(), "plus m={m}");
            assert!(z4_rpc_minus_check(m, 4).unwrap().holds(), "minus m={m}");
        }
    }

    #[test]
    fn leg_symmetry() {
        assert!(symmetry_check(&Legs::none(), 4).unwrap());
        assert!(symmetry_check(&Legs::third(p(&[1])), 4).unwrap());
        assert!(symmetry_check(&Legs::third(p(&[2, 1])), 4).unwrap());
    }

    #[test]
    fn closed_form_with_other_legs() {
        let d = 4;
        for n in [2u32, 3] {
            for leg in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
                for legs in [Legs::new(leg.clone(), p(&[]), p(&[])), Legs::new(p(&[]), leg.clone(), p(&[]))] {
                    let direct = enumerate_legged(&legs, Group::Zn(n), d).unwrap();
                    let closed = vertex_closed_zn(n, &legs, d).unwrap();
                    assert_eq!(closed, direct, "n={n} legs={legs:?}");
                }
            }
        }
    }
}
