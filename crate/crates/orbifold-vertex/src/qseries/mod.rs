//! Exact multivariate power series truncated by total degree.
//!
//! A [`Series`] stores big-integer coefficients keyed by exponent vectors of a
//! fixed arity. Every term has total degree at most the cutoff; products,
//! inverses and powers are exact up to that cutoff.

mod product;

pub use product::{Factor, LaurentMonomial, MacMahon, ProductBuilder};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Variable names used for the four `Z2×Z2` colors, in slot order.
pub const Z2Z2_VARS: [&str; 4] = ["q0", "qa", "qb", "qc"];

/// An exponent vector with nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// The constant monomial `1`.
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The variable in `slot`.
    pub fn var(arity: usize, slot: usize) -> Self {
        let mut e = vec![0; arity];
        e[slot] = 1;
        Monomial(e)
    }

    /// Product of the variables in `slots` (with repetition).
    pub fn product_of(arity: usize, slots: &[usize]) -> Self {
        let mut e = vec![0; arity];
        for &s in slots {
            e[s] += 1;
        }
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    /// `self / other` when it stays a monomial.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    /// Renders with the given variable names, e.g. `q0^2*qa`.
    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Default variable names for a given arity: the `Z2×Z2` names for four
/// variables, `q0..q{n-1}` otherwise.
pub fn default_names(arity: usize) -> Vec<String> {
    if arity == 4 {
        Z2Z2_VARS.iter().map(|s| s.to_string()).collect()
    } else {
        (0..arity).map(|i| format!("q{i}")).collect()
    }
}

/// A truncated power series in `arity` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    arity: usize,
    cutoff: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Series {
    pub fn zero(arity: usize, cutoff: u32) -> Self {
        Series { arity, cutoff, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize, cutoff: u32) -> Self {
        Series::monomial(arity, cutoff, Monomial::one(arity), BigInt::one())
    }

    /// `coef · mono`, or zero if `mono` exceeds the cutoff.
    pub fn monomial(arity: usize, cutoff: u32, mono: Monomial, coef: BigInt) -> Self {
        assert_eq!(mono.arity(), arity, "monomial arity");
        let mut s = Series::zero(arity, cutoff);
        s.add_term(mono, coef);
        s
    }

    /// Builds a series from `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(arity: usize, cutoff: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut s = Series::zero(arity, cutoff);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial with exponents `exps`.
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.coefficient(&Monomial::new(exps.to_vec()))
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one(self.arity))
    }

    /// Adds `coef · mono` in place, dropping it above the cutoff.
    pub fn add_term(&mut self, mono: Monomial, coef: BigInt) {
        debug_assert_eq!(mono.arity(), self.arity);
        if coef.is_zero() || mono.degree() > self.cutoff {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Series) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    /// Sum, truncated at the smaller cutoff.
    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let mut out = self.truncate(self.cutoff.min(other.cutoff));
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            arity: self.arity,
            cutoff: self.cutoff,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Series {
        let mut out = Series::zero(self.arity, self.cutoff);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Product, truncated at the smaller cutoff.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = Series::zero(self.arity, cutoff);
        let rhs: Vec<(&Monomial, u32, &BigInt)> = other.terms.iter().map(|(m, c)| (m, m.degree(), c)).collect();
        for (a, ca) in &self.terms {
            let da = a.degree();
            for &(b, db, cb) in &rhs {
                if da + db <= cutoff {
                    out.add_term(a.mul(b), ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by `coef · mono`.
    pub fn mul_monomial(&self, mono: &Monomial, coef: &BigInt) -> Series {
        let mut out = Series::zero(self.arity, self.cutoff);
        for (m, c) in &self.terms {
            out.add_term(m.mul(mono), c * coef);
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn invert(&self) -> Result<Series> {
        let c0 = self.constant_term();
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant);
        }
        // self = c0 (1 - g); inverse = c0 Σ g^k, with g of positive degree.
        let unit = Series::one(self.arity, self.cutoff);
        let g = unit.sub(&self.scale(&c0))?;
        let mut acc = unit.clone();
        for _ in 0..self.cutoff {
            acc = unit.add(&g.mul(&acc)?)?;
        }
        Ok(acc.scale(&c0))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Series::one(self.arity, self.cutoff);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Drops all terms above `cutoff` (which may only lower the cutoff).
    pub fn truncate(&self, cutoff: u32) -> Series {
        let cutoff = cutoff.min(self.cutoff);
        Series {
            arity: self.arity,
            cutoff,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cutoff)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces variable `s` by the monomial `targets[s]` of a new arity.
    /// Targets must have positive degree, so degrees never drop.
    pub fn substitute(&self, targets: &[Monomial]) -> Result<Series> {
        if targets.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, targets.len()));
        }
        let new_arity = targets.first().map_or(0, Monomial::arity);
        if let Some(bad) = targets.iter().find(|t| t.degree() == 0 || t.arity() != new_arity) {
            return Err(Error::NonConvergent(format!("substitution target {:?}", bad.exps())));
        }
        let mut out = Series::zero(new_arity, self.cutoff);
        for (m, c) in &self.terms {
            let mut img = Monomial::one(new_arity);
            for (slot, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    img = img.mul(&targets[slot].pow(e));
                }
            }
            out.add_term(img, c.clone());
        }
        Ok(out)
    }

    /// Permutes variables: slot `s` goes to slot `perm[s]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Series> {
        let targets: Vec<Monomial> = perm.iter().map(|&p| Monomial::var(self.arity, p)).collect();
        self.substitute(&targets)
    }

    /// Divides by a monomial, failing if any term would get a negative exponent.
    /// The cutoff drops by the monomial's degree.
    pub fn div_monomial(&self, mono: &Monomial) -> Result<Series> {
        let cutoff = self
            .cutoff
            .checked_sub(mono.degree())
            .ok_or_else(|| Error::NonConvergent("monomial shift exceeds the cutoff".to_string()))?;
        let mut out = Series::zero(self.arity, cutoff);
        for (m, c) in &self.terms {
            let q = m
                .checked_div(mono)
                .ok_or_else(|| Error::NonConvergent(format!("negative exponent after shifting {:?}", m.exps())))?;
            out.add_term(q, c.clone());
        }
        Ok(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The smallest monomial (lex order) where the two series differ, with both
    /// coefficients. Series are compared up to the smaller cutoff.
    pub fn first_difference(&self, other: &Series) -> Option<(Monomial, BigInt, BigInt)> {
        let cutoff = self.cutoff.min(other.cutoff);
        let a = self.truncate(cutoff);
        let b = other.truncate(cutoff);
        let keys: std::collections::BTreeSet<Monomial> = a.terms.keys().chain(b.terms.keys()).cloned().collect();
        keys.into_iter().find_map(|m| {
            let (x, y) = (a.coefficient(&m), b.coefficient(&m));
            (x != y).then_some((m, x, y))
        })
    }

    /// Sum of coefficients in each total degree `0..=cutoff`.
    pub fn degree_sums(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.cutoff as usize + 1];
        for (m, c) in &self.terms {
            out[m.degree() as usize] += c;
        }
        out
    }

    /// Serializable form with the given variable names.
    pub fn to_record(&self, names: &[String]) -> SeriesRecord {
        SeriesRecord {
            cutoff: self.cutoff,
            vars: names.to_vec(),
            terms: self.terms.iter().map(|(m, c)| TermRecord { exp: m.exps().to_vec(), coef: c.to_string() }).collect(),
        }
    }

    /// JSON value with default variable names.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_record(&default_names(self.arity))).expect("series serializes")
    }

    /// CSV rows `vars...,coef` with a header line.
    pub fn to_csv(&self, names: &[String]) -> String {
        let mut out = names.join(",");
        out.push_str(",coef\n");
        for (m, c) in &self.terms {
            let exps: Vec<String> = m.exps().iter().map(u32::to_string).collect();
            out.push_str(&exps.join(","));
            out.push(',');
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.arity);
        if self.terms.is_empty() {
            return write!(f, "0 + O(deg {})", self.cutoff + 1);
        }
        let mut ordered: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| m.degree());
        for (n, (m, c)) in ordered.into_iter().enumerate() {
            let body = m.display_with(&names);
            let sign = if c.is_negative() {
                " - "
            } else if n > 0 {
                " + "
            } else {
                ""
            };
            let mag = c.abs();
            if n == 0 && c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "{sign}")?;
            }
            if body == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        write!(f, " + O(deg {})", self.cutoff + 1)
    }
}

/// JSON shape of a series.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesRecord {
    pub cutoff: u32,
    pub vars: Vec<String>,
    pub terms: Vec<TermRecord>,
}

/// One JSON term: exponent vector and exact decimal coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct TermRecord {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// `(a; q)_∞ = ∏_{k≥0} (1 - a q^k)`, truncated.
pub fn pochhammer(a: &Monomial, q: &Monomial, cutoff: u32) -> Result<Series> {
    let mut b = ProductBuilder::new(a.arity(), cutoff);
    b.pochhammer(&LaurentMonomial::from(a), q, 1)?;
    Ok(b.expand())
}

/// `M(x, q) = ∏_{n≥1} (1 - x q^n)^{-n}`, truncated.
pub fn macmahon(x: &LaurentMonomial, q: &Monomial, cutoff: u32) -> Result<Series> {
    let mut b = ProductBuilder::new(q.arity(), cutoff);
    b.macmahon(x, q, 1)?;
    Ok(b.expand())
}

/// Any member of the MacMahon family evaluated at `x`.
pub fn macmahon_family(kind: MacMahon, x: &LaurentMonomial, q: &Monomial, cutoff: u32) -> Result<Series> {
    let mut b = ProductBuilder::new(q.arity(), cutoff);
    b.family(kind, x, q, 1)?;
    Ok(b.expand())
}
