//! Infinite products `∏ (1 - s·m)^e` and the MacMahon family built from them.
//!
//! Arguments such as `x^{-1} q^n` are combined as signed integer exponent
//! vectors first; a factor is accepted only once its monomial has nonnegative
//! exponents and positive degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Series};
use crate::error::{Error, Result};

/// A signed monomial whose exponents may be negative before combination.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMonomial {
    pub negative: bool,
    pub exps: Vec<i64>,
}

impl LaurentMonomial {
    pub fn one(arity: usize) -> Self {
        LaurentMonomial { negative: false, exps: vec![0; arity] }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    /// `-x`.
    pub fn negated(&self) -> Self {
        LaurentMonomial { negative: !self.negative, exps: self.exps.clone() }
    }

    /// `x^{-1}` (the sign is kept, since `(-x)^{-1} = -x^{-1}`).
    pub fn inverse(&self) -> Self {
        LaurentMonomial { negative: self.negative, exps: self.exps.iter().map(|e| -e).collect() }
    }

    pub fn mul(&self, other: &LaurentMonomial) -> Self {
        LaurentMonomial {
            negative: self.negative ^ other.negative,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Monomial, power: i64) -> Self {
        LaurentMonomial {
            negative: self.negative,
            exps: self.exps.iter().zip(m.exps()).map(|(a, &b)| a + power * i64::from(b)).collect(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    /// The underlying monomial if every exponent is nonnegative.
    pub fn to_monomial(&self) -> Option<Monomial> {
        self.exps.iter().map(|&e| u32::try_from(e).ok()).collect::<Option<Vec<_>>>().map(Monomial::new)
    }
}

impl From<&Monomial> for LaurentMonomial {
    fn from(m: &Monomial) -> Self {
        LaurentMonomial { negative: false, exps: m.exps().iter().map(|&e| i64::from(e)).collect() }
    }
}

/// One factor `(1 - s·m)` with `s = -1` when `negative` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub negative: bool,
    pub mono: Monomial,
}

/// Named members of the MacMahon family; `l` is the shift parameter and `y`
/// the second argument where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MacMahon {
    /// `M(x)`
    M,
    /// `M(x) M(x^{-1})`
    Tilde,
    /// `(M̃(x) M̃(-x))^{-1}`
    Hat,
    /// `M(x q^l) / (M(x) (q x^{-1}; q)_∞^l)`
    Tilde0(i64),
    /// `M(x^{-1} q^l) / (M(x^{-1}) (x; q)_∞^l)`
    Tilde1(i64),
    /// `M̃_0(x; l) M̃_0(-x; l)`
    Hat0(i64),
    /// `M̃_1(x; l) M̃_1(-x; l)`
    Hat1(i64),
    /// `M(x) M(-x)`
    M0,
    /// `M(x) / M(x y)`
    M1(LaurentMonomial),
    /// `M(x q^l) / (M(x) (x; q)_∞^l)`
    M2(i64),
    /// `M_1(x, y) M_1(-x, y)`
    Hat1Xy(LaurentMonomial),
    /// `M_2(x; l) M_2(-x; l)`
    Hat2(i64),
}

impl MacMahon {
    /// `M̃_s` for a branch selector `s ∈ {0, 1}`.
    pub fn tilde_branch(s: u32, l: i64) -> Self {
        if s == 0 {
            MacMahon::Tilde0(l)
        } else {
            MacMahon::Tilde1(l)
        }
    }

    /// `M̂_s` for a branch selector `s ∈ {0, 1}`.
    pub fn hat_branch(s: u32, l: i64) -> Self {
        if s == 0 {
            MacMahon::Hat0(l)
        } else {
            MacMahon::Hat1(l)
        }
    }
}

/// Accumulates a product of factors `(1 - s·m)^e` and expands it once.
#[derive(Clone, Debug)]
pub struct ProductBuilder {
    arity: usize,
    cutoff: u32,
    factors: BTreeMap<Factor, i64>,
}

impl ProductBuilder {
    pub fn new(arity: usize, cutoff: u32) -> Self {
        ProductBuilder { arity, cutoff, factors: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Multiplies by `(1 - x)^power`; `x` must be a genuine monomial of positive degree.
    pub fn factor(&mut self, x: &LaurentMonomial, power: i64) -> Result<&mut Self> {
        let mono = x
            .to_monomial()
            .ok_or_else(|| Error::NonConvergent(format!("factor with negative exponent {:?}", x.exps)))?;
        if mono.degree() == 0 {
            return Err(Error::NonConvergent("factor with a degree-0 monomial".to_string()));
        }
        if mono.degree() <= self.cutoff && power != 0 {
            let key = Factor { negative: x.negative, mono };
            let e = self.factors.entry(key).or_insert(0);
            *e += power;
        }
        Ok(self)
    }

    /// Iterates `x q^n` for `n ≥ start` until the degree passes the cutoff.
    fn progression(
        &mut self,
        x: &LaurentMonomial,
        q: &Monomial,
        start: i64,
        mut power: impl FnMut(i64) -> i64,
    ) -> Result<()> {
        if q.degree() == 0 {
            return Err(Error::NonConvergent("product base q has degree 0".to_string()));
        }
        let mut n = start;
        loop {
            let term = x.mul_mono(q, n);
            if term.degree() > i64::from(self.cutoff) && term.exps.iter().all(|&e| e >= 0) {
                return Ok(());
            }
            self.factor(&term, power(n))?;
            n += 1;
        }
    }

    /// Multiplies by `(x; q)_∞^power`.
    pub fn pochhammer(&mut self, x: &LaurentMonomial, q: &Monomial, power: i64) -> Result<&mut Self> {
        self.progression(x, q, 0, |_| power)?;
        Ok(self)
    }

    /// Multiplies by `M(x, q)^power`.
    pub fn macmahon(&mut self, x: &LaurentMonomial, q: &Monomial, power: i64) -> Result<&mut Self> {
        self.progression(x, q, 1, |n| -n * power)?;
        Ok(self)
    }

    /// Multiplies by a family member raised to `power`.
    pub fn family(&mut self, kind: MacMahon, x: &LaurentMonomial, q: &Monomial, power: i64) -> Result<&mut Self> {
        match kind {
            MacMahon::M => {
                self.macmahon(x, q, power)?;
            }
            MacMahon::Tilde => {
                self.macmahon(x, q, power)?;
                self.macmahon(&x.inverse(), q, power)?;
            }
            MacMahon::Hat => {
                self.family(MacMahon::Tilde, x, q, -power)?;
                self.family(MacMahon::Tilde, &x.negated(), q, -power)?;
            }
            MacMahon::Tilde0(l) => {
                self.macmahon(&x.mul_mono(q, l), q, power)?;
                self.macmahon(x, q, -power)?;
                let qx = LaurentMonomial::from(q).mul(&x.inverse());
                self.pochhammer(&qx, q, -l * power)?;
            }
            MacMahon::Tilde1(l) => {
                let inv = x.inverse();
                self.macmahon(&inv.mul_mono(q, l), q, power)?;
                self.macmahon(&inv, q, -power)?;
                self.pochhammer(x, q, -l * power)?;
            }
            MacMahon::Hat0(l) => {
                self.family(MacMahon::Tilde0(l), x, q, power)?;
                self.family(MacMahon::Tilde0(l), &x.negated(), q, power)?;
            }
            MacMahon::Hat1(l) => {
                self.family(MacMahon::Tilde1(l), x, q, power)?;
                self.family(MacMahon::Tilde1(l), &x.negated(), q, power)?;
            }
            MacMahon::M0 => {
                self.macmahon(x, q, power)?;
                self.macmahon(&x.negated(), q, power)?;
            }
            MacMahon::M1(y) => {
                self.macmahon(x, q, power)?;
                self.macmahon(&x.mul(&y), q, -power)?;
            }
            MacMahon::M2(l) => {
                self.macmahon(&x.mul_mono(q, l), q, power)?;
                self.macmahon(x, q, -power)?;
                self.pochhammer(x, q, -l * power)?;
            }
            MacMahon::Hat1Xy(y) => {
                self.family(MacMahon::M1(y.clone()), x, q, power)?;
                self.family(MacMahon::M1(y), &x.negated(), q, power)?;
            }
            MacMahon::Hat2(l) => {
                self.family(MacMahon::M2(l), x, q, power)?;
                self.family(MacMahon::M2(l), &x.negated(), q, power)?;
            }
        }
        Ok(self)
    }

    /// Multiplies in everything accumulated by `other`, raised to `power`.
    pub fn absorb(&mut self, other: &ProductBuilder, power: i64) -> &mut Self {
        assert_eq!(self.arity, other.arity, "product arity");
        for (f, e) in &other.factors {
            *self.factors.entry(f.clone()).or_insert(0) += e * power;
        }
        self
    }

    /// Applies a variable substitution to every factor monomial.
    pub fn substitute(&self, targets: &[Monomial]) -> Result<ProductBuilder> {
        let arity = targets.first().map_or(0, Monomial::arity);
        let mut out = ProductBuilder::new(arity, self.cutoff);
        for (f, &e) in &self.factors {
            let mut img = LaurentMonomial::one(arity);
            for (slot, &k) in f.mono.exps().iter().enumerate() {
                img = img.mul_mono(&targets[slot], i64::from(k));
            }
            img.negative = f.negative;
            out.factor(&img, e)?;
        }
        Ok(out)
    }

    /// The accumulated factors with their nonzero exponents.
    pub fn factors(&self) -> impl Iterator<Item = (&Factor, i64)> {
        self.factors.iter().filter(|(_, &e)| e != 0).map(|(f, &e)| (f, e))
    }

    /// Expands the product as a truncated series.
    pub fn expand(&self) -> Series {
        let mut acc = Series::one(self.arity, self.cutoff);
        for (f, e) in self.factors() {
            let part = expand_factor(f, e, self.arity, self.cutoff);
            acc = acc.mul(&part).expect("same arity");
        }
        acc
    }
}

/// `(1 - s·m)^e` by the (negative) binomial series.
fn expand_factor(f: &Factor, e: i64, arity: usize, cutoff: u32) -> Series {
    let d = f.mono.degree();
    let mut out = Series::zero(arity, cutoff);
    let mut coef = BigInt::one();
    let mut k: u32 = 0;
    // (1 + y)^e with y = -s·m: coefficient of y^k is C(e, k), generalized.
    let y_sign: i64 = if f.negative { 1 } else { -1 };
    while k * d <= cutoff {
        let signed = if y_sign < 0 && k % 2 == 1 { -coef.clone() } else { coef.clone() };
        out.add_term(f.mono.pow(k), signed);
        coef = coef * BigInt::from(e - i64::from(k)) / BigInt::from(i64::from(k) + 1);
        if coef == BigInt::from(0) {
            break;
        }
        k += 1;
    }
    out
}
