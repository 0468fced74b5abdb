use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::Coefficient;
use super::BigRat;
use crate::error::{Error, Result};
use crate::partitions::moebius;

/// Exponent vector `(m_1, ..., m_N)`, stored 0-based.
pub type Monomial = Vec<u32>;

/// `Σ i·m_i` with 1-based `i`: variable `x_i` has weight `i`.
pub fn weight(m: &[u32]) -> u32 {
    m.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
}

/// All exponent vectors in `nvars` variables of weight at most `bound`,
/// ordered by weight, then lexicographically.
pub fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    fn rec(i: usize, budget: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let w = i as u32 + 1;
        for e in 0..=budget / w {
            cur[i] = e;
            rec(i + 1, budget - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, bound, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
    out
}

fn sub_monomial(m: &[u32], l: &[u32]) -> Option<Monomial> {
    m.iter().zip(l).map(|(&a, &b)| a.checked_sub(b)).collect()
}

/// Sparse power series in `x_1, ..., x_N`, truncated at weighted degree `bound`.
///
/// Only monomials of weight `<= bound` with nonzero coefficients are stored.
/// Binary operators panic on mismatched variable counts; the `try_*` methods
/// report it as an error instead.
#[derive(Clone, PartialEq)]
pub struct MultiSeries<C> {
    nvars: usize,
    bound: u32,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> MultiSeries<C> {
    pub fn zero(nvars: usize, bound: u32) -> Self {
        MultiSeries { nvars, bound, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, bound: u32, c: C) -> Self {
        let mut s = Self::zero(nvars, bound);
        s.add_term(vec![0; nvars], c);
        s
    }

    pub fn one(nvars: usize, bound: u32) -> Self {
        Self::constant(nvars, bound, C::one())
    }

    /// The variable `x_{i+1}`.
    pub fn variable(nvars: usize, bound: u32, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(nvars, bound, m, C::one())
    }

    pub fn monomial(nvars: usize, bound: u32, m: Monomial, c: C) -> Self {
        let mut s = Self::zero(nvars, bound);
        s.add_term(m, c);
        s
    }

    pub fn from_terms(nvars: usize, bound: u32, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut s = Self::zero(nvars, bound);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    /// Accumulate `c·x^m`, dropping it if it exceeds the bound.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.len(), self.nvars, "monomial length");
        if c.is_zero() || weight(&m) > self.bound {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u32]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn truncate(&self, bound: u32) -> Self {
        Self::from_terms(
            self.nvars,
            bound,
            self.terms.iter().filter(|(m, _)| weight(m) <= bound).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        Self::from_terms(self.nvars, self.bound, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn scale(&self, r: &BigRat) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.clone() * k.clone())
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.truncate(self.bound.min(other.bound));
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let bound = self.bound.min(other.bound);
        let mut right: Vec<(u32, &Monomial, &C)> = other.terms.iter().map(|(m, c)| (weight(m), m, c)).collect();
        right.sort_by_key(|t| t.0);
        let mut out = Self::zero(self.nvars, bound);
        for (ma, ca) in &self.terms {
            let wa = weight(ma);
            if wa > bound {
                continue;
            }
            for (wb, mb, cb) in &right {
                if wa + wb > bound {
                    break;
                }
                let m = ma.iter().zip(mb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(m, ca.clone() * (*cb).clone());
            }
        }
        Ok(out)
    }

    fn support_without_constant(&self) -> Vec<(&Monomial, u32, &C)> {
        self.terms
            .iter()
            .filter_map(|(m, c)| {
                let w = weight(m);
                (w > 0).then_some((m, w, c))
            })
            .collect()
    }

    fn require_constant(&self, expected: C, label: &str) -> Result<()> {
        let c0 = self.constant_term();
        if c0 != expected {
            return Err(Error::ConstantTerm { expected: label.to_string(), found: format!("{c0:?}") });
        }
        Ok(())
    }

    /// Formal logarithm; needs constant term 1.
    ///
    /// Uses the weight-grading derivation `E`: `E(F) = F·E(log F)`.
    pub fn log(&self) -> Result<Self> {
        self.require_constant(C::one(), "1")?;
        let support = self.support_without_constant();
        let mut out: HashMap<Monomial, C> = HashMap::new();
        for m in monomials_up_to(self.nvars, self.bound).into_iter().skip(1) {
            let wm = weight(&m);
            let mut acc = C::zero();
            for &(l, _, fl) in &support {
                if l == &m {
                    continue;
                }
                if let Some(k) = sub_monomial(&m, l) {
                    if let Some(lk) = out.get(&k) {
                        acc = acc + lk.scale(&BigRat::from_integer(weight(&k).into())) * fl.clone();
                    }
                }
            }
            let val = self.coefficient(&m) - acc.scale(&BigRat::new(One::one(), wm.into()));
            if !val.is_zero() {
                out.insert(m, val);
            }
        }
        Ok(Self::from_terms(self.nvars, self.bound, out))
    }

    /// Formal exponential; needs constant term 0.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant(C::zero(), "0")?;
        let support = self.support_without_constant();
        let mut out: HashMap<Monomial, C> = HashMap::new();
        let mons = monomials_up_to(self.nvars, self.bound);
        out.insert(mons[0].clone(), C::one());
        for m in mons.into_iter().skip(1) {
            let wm = weight(&m);
            let mut acc = C::zero();
            for &(l, wl, hl) in &support {
                if let Some(k) = sub_monomial(&m, l) {
                    if let Some(gk) = out.get(&k) {
                        acc = acc + hl.scale(&BigRat::from_integer(wl.into())) * gk.clone();
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(m, acc.scale(&BigRat::new(One::one(), wm.into())));
            }
        }
        Ok(Self::from_terms(self.nvars, self.bound, out))
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let inv0 =
            c0.checked_inv().ok_or(Error::ConstantTerm { expected: "invertible".into(), found: format!("{c0:?}") })?;
        let support = self.support_without_constant();
        let mut out: HashMap<Monomial, C> = HashMap::new();
        let mons = monomials_up_to(self.nvars, self.bound);
        out.insert(mons[0].clone(), inv0.clone());
        for m in mons.into_iter().skip(1) {
            let mut acc = C::zero();
            for &(l, _, fl) in &support {
                if let Some(k) = sub_monomial(&m, l) {
                    if let Some(gk) = out.get(&k) {
                        acc = acc + fl.clone() * gk.clone();
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(m, -(acc * inv0.clone()));
            }
        }
        Ok(Self::from_terms(self.nvars, self.bound, out))
    }

    /// `self^e` for rational `e`, i.e. `exp(e·log self)`.
    ///
    /// Any constant term is allowed for positive integer `e`; otherwise the
    /// constant term must be 1.
    pub fn pow(&self, e: &BigRat) -> Result<Self> {
        if e.is_integer() && e.is_positive() {
            if self.constant_term() != C::one() {
                let n = e.to_integer().to_u64().ok_or_else(|| Error::TooLarge("exponent".into()))?;
                return Ok(self.pow_by_squaring(n));
            }
        } else {
            self.require_constant(C::one(), "1")?;
        }
        // J.C.P. Miller recurrence: F·E(G) = e·E(F)·G for G = F^e, F_0 = 1.
        let support = self.support_without_constant();
        let mut out: HashMap<Monomial, C> = HashMap::new();
        let mons = monomials_up_to(self.nvars, self.bound);
        out.insert(mons[0].clone(), C::one());
        for m in mons.into_iter().skip(1) {
            let wm = weight(&m);
            let mut acc = C::zero();
            for &(l, wl, fl) in &support {
                if let Some(k) = sub_monomial(&m, l) {
                    if let Some(gk) = out.get(&k) {
                        let factor = e * BigRat::from_integer(wl.into()) - BigRat::from_integer(weight(&k).into());
                        if !factor.is_zero() {
                            acc = acc + (fl.clone() * gk.clone()).scale(&factor);
                        }
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(m, acc.scale(&BigRat::new(One::one(), wm.into())));
            }
        }
        Ok(Self::from_terms(self.nvars, self.bound, out))
    }

    pub fn pow_int(&self, e: i64) -> Result<Self> {
        self.pow(&BigRat::from_integer(e.into()))
    }

    fn pow_by_squaring(&self, mut n: u64) -> Self {
        let mut acc = Self::one(self.nvars, self.bound);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `x^m ↦ x^{d·m}` together with the coefficient Adams operation.
    pub fn adams(&self, d: u32) -> Self {
        assert!(d >= 1, "Adams operation needs d >= 1");
        Self::from_terms(
            self.nvars,
            self.bound,
            self.terms
                .iter()
                .filter(|(m, _)| weight(m) * d <= self.bound)
                .map(|(m, c)| (m.iter().map(|e| e * d).collect(), c.adams(d))),
        )
    }

    /// Plethystic logarithm `Σ_d μ(d)/d · ψ_d(log F)`; needs constant term 1.
    ///
    /// Only `d <= bound` contributes since `ψ_d` multiplies weights by `d`.
    pub fn plethystic_log(&self) -> Result<Self> {
        let log = self.log()?;
        let mut out = Self::zero(self.nvars, self.bound);
        for d in 1..=self.bound.max(1) {
            let mu = moebius(d as u64);
            if mu == 0 {
                continue;
            }
            let psi = log.adams(d).scale(&BigRat::new(mu.into(), d.into()));
            out = &out + &psi;
        }
        Ok(out)
    }

    /// Specialise `x_i ↦ T^i`, giving a one-variable series in `T`.
    pub fn specialize_weighted(&self) -> Self {
        Self::from_terms(1, self.bound, self.terms.iter().map(|(m, c)| (vec![weight(m)], c.clone())))
    }

    /// Coefficients of a one-variable series, `[c_0, ..., c_bound]`.
    pub fn univariate_coeffs(&self) -> Vec<C> {
        assert_eq!(self.nvars, 1, "univariate_coeffs on a multivariate series");
        (0..=self.bound).map(|k| self.coefficient(&[k])).collect()
    }

    /// Sum over all monomials of weight exactly `w`.
    pub fn weight_component(&self, w: u32) -> C {
        self.terms.iter().filter(|(m, _)| weight(m) == w).fold(C::zero(), |acc, (_, c)| acc + c.clone())
    }

    /// First monomial (in weight order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, C, C)> {
        let bound = self.bound.min(other.bound);
        let mut keys: Vec<&Monomial> =
            self.terms.keys().chain(other.terms.keys()).filter(|m| weight(m) <= bound).collect();
        keys.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coefficient(m), other.coefficient(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }
}

impl MultiSeries<BigRat> {
    /// Series with rational coefficients from `(exponents, numerator, denominator)` triples.
    pub fn from_rat_terms(nvars: usize, bound: u32, terms: &[(&[u32], i64, i64)]) -> Self {
        Self::from_terms(
            nvars,
            bound,
            terms.iter().map(|(m, n, d)| (m.to_vec(), BigRat::new((*n).into(), (*d).into()))),
        )
    }
}

impl<C: Coefficient> fmt::Debug for MultiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiSeries[N={}, W={}](", self.nvars, self.bound)?;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            for (j, e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", j + 1)?,
                    _ => write!(f, "*x{}^{e}", j + 1)?,
                }
            }
        }
        write!(f, ")")
    }
}

impl<'a, C: Coefficient> Add<&'a MultiSeries<C>> for &'a MultiSeries<C> {
    type Output = MultiSeries<C>;
    fn add(self, rhs: &MultiSeries<C>) -> MultiSeries<C> {
        self.try_add(rhs).expect("series arithmetic")
    }
}

impl<'a, C: Coefficient> Sub<&'a MultiSeries<C>> for &'a MultiSeries<C> {
    type Output = MultiSeries<C>;
    fn sub(self, rhs: &MultiSeries<C>) -> MultiSeries<C> {
        self.try_sub(rhs).expect("series arithmetic")
    }
}

impl<'a, C: Coefficient> Mul<&'a MultiSeries<C>> for &'a MultiSeries<C> {
    type Output = MultiSeries<C>;
    fn mul(self, rhs: &MultiSeries<C>) -> MultiSeries<C> {
        self.try_mul(rhs).expect("series arithmetic")
    }
}

impl<C: Coefficient> Neg for &MultiSeries<C> {
    type Output = MultiSeries<C>;
    fn neg(self) -> MultiSeries<C> {
        self.map_coeffs(|c| -c.clone())
    }
}
