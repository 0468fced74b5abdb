//! Closed formula for `A_λ(1)` and its dependence on `ρ = 2g - 2`.
//!
//! With `m` the multiplicities of `λ` and `N` its largest part,
//!
//! ```text
//! A_λ(1) = 1/ρ Σ_{d | m} μ(d)/d² · 1/(P_1(m/d) P_N(m/d)) · Π_i binom(ρ P_i(m/d) - 1 + m_i/d, m_i/d)
//! ```
//!
//! Evaluating the same sum over `Q[ρ]` gives a polynomial of degree
//! `num_parts(λ) - 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{gen_binomial, BigRat, QPoly, Ring};
use crate::partitions::{common_divisors, divisors, moebius, p_stat, MultVector, Partition};

/// Which statistic stands in for the overloaded "length" of `λ` in the
/// `P_N` factor. Only [`LengthReading::LargestPart`] reproduces `A_{(n)}(1) = 1`;
/// the other is kept for auditing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthReading {
    #[default]
    LargestPart,
    NumParts,
}

impl LengthReading {
    fn index(self, lambda: &Partition) -> usize {
        match self {
            LengthReading::LargestPart => lambda.largest_part() as usize,
            LengthReading::NumParts => lambda.num_parts(),
        }
    }
}

/// Polynomial in the formal variable `ρ`, ascending coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RhoPolynomial(QPoly);

impl RhoPolynomial {
    pub fn coeffs(&self) -> &[BigRat] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.0.leading()
    }

    pub fn eval(&self, rho: &BigRat) -> BigRat {
        self.0.eval(rho)
    }

    pub fn render(&self) -> String {
        self.0.render("ρ")
    }
}

impl fmt::Debug for RhoPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RhoPolynomial({})", self.render())
    }
}

fn require_nonempty(lambda: &Partition) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::invalid("closed form needs a nonempty partition"));
    }
    Ok(())
}

fn int<R: Ring>(n: u64) -> R {
    R::from_rat(BigRat::from_integer(n.into()))
}

/// `ρ·A_λ(1)` as an element of any ring containing `ρ`.
fn rho_times_value<R: Ring>(rho: &R, lambda: &Partition, reading: LengthReading) -> Result<R> {
    let m = lambda.to_mult();
    let top = reading.index(lambda);
    let mut sum = R::zero();
    for d in common_divisors(&m)? {
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let md = m.divide(d);
        let outer = BigRat::new(mu.into(), BigInt::from(d as u64 * d as u64))
            / BigRat::from_integer((p_stat(1, &md) * p_stat(top, &md)).into());
        let mut term = R::from_rat(outer);
        for i in 1..=md.largest_part() {
            let k = md.get(i);
            if k == 0 {
                continue;
            }
            let t = rho.clone() * int::<R>(p_stat(i, &md)) - R::one() + int::<R>(k as u64);
            term = term * gen_binomial(&t, k);
        }
        sum = sum + term;
    }
    Ok(sum)
}

/// `A_λ(1)` at an integer `ρ >= 1`.
///
/// For even `ρ` (an actual genus) the value must be a non-negative integer and
/// anything else is reported as [`Error::NotIntegral`]. Odd `ρ` returns the
/// rational value of the formula unchecked.
pub fn a_one(rho: u32, lambda: &Partition) -> Result<BigRat> {
    let v = a_one_with(rho, lambda, LengthReading::LargestPart)?;
    if rho.is_multiple_of(2) && (!v.is_integer() || v.is_negative()) {
        return Err(Error::NotIntegral(format!("A_{lambda:?}(1) = {v} at ρ = {rho}")));
    }
    Ok(v)
}

pub fn a_one_with(rho: u32, lambda: &Partition, reading: LengthReading) -> Result<BigRat> {
    require_nonempty(lambda)?;
    if rho == 0 {
        return Err(Error::invalid("ρ must be positive (the closed form carries a 1/ρ factor)"));
    }
    let r = BigRat::from_integer(rho.into());
    Ok(rho_times_value(&r, lambda, reading)? / r)
}

/// `A_λ(1)` as a polynomial in `ρ`.
pub fn a_one_rho_poly(lambda: &Partition) -> Result<RhoPolynomial> {
    a_one_rho_poly_with(lambda, LengthReading::LargestPart)
}

pub fn a_one_rho_poly_with(lambda: &Partition, reading: LengthReading) -> Result<RhoPolynomial> {
    require_nonempty(lambda)?;
    let numerator = rho_times_value(&QPoly::from_ints(&[0, 1]), lambda, reading)?;
    if !numerator.coeff(0).is_zero() {
        return Err(Error::Inconsistent(format!(
            "ρ·A_{lambda:?}(1) = {} is not divisible by ρ",
            numerator.render("ρ")
        )));
    }
    Ok(RhoPolynomial(QPoly::new(numerator.coeffs().iter().skip(1).cloned().collect())))
}

/// `1/(P_1(m) P_N(m)) · Π_i P_i(m)^{m_i} / m_i!`, the top coefficient in `ρ`.
pub fn leading_term(lambda: &Partition) -> Result<BigRat> {
    leading_term_with(lambda, LengthReading::LargestPart)
}

pub fn leading_term_with(lambda: &Partition, reading: LengthReading) -> Result<BigRat> {
    require_nonempty(lambda)?;
    let m: MultVector = lambda.to_mult();
    let top = reading.index(lambda);
    let mut v = BigRat::one() / BigRat::from_integer((p_stat(1, &m) * p_stat(top, &m)).into());
    for i in 1..=m.largest_part() {
        let k = m.get(i);
        let p = BigInt::from(p_stat(i, &m));
        let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
        v *= BigRat::new(num_traits::pow(p, k as usize), fact);
    }
    Ok(v)
}

/// `A_{(1^n)}(1) = 1/n² Σ_{d | n} μ(n/d) · 1/ρ · binom(ρd + d - 1, d)`.
pub fn a_one_column(rho: u32, n: u32) -> Result<BigRat> {
    if rho == 0 || n == 0 {
        return Err(Error::invalid("a_one_column needs ρ >= 1 and n >= 1"));
    }
    let r = BigRat::from_integer(rho.into());
    let mut sum = BigRat::zero();
    for d in divisors(n) {
        let mu = moebius((n / d) as u64);
        if mu == 0 {
            continue;
        }
        let top = BigRat::from_integer(((rho + 1) * d - 1).into());
        sum += BigRat::from_integer(mu.into()) * gen_binomial(&top, d) / &r;
    }
    Ok(sum / BigRat::from_integer((n as u64 * n as u64).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn values_at_rho_two() {
        assert_eq!(a_one(2, &part("1,1,1")).unwrap(), rat(3, 1));
        assert_eq!(a_one(2, &part("2,1")).unwrap(), rat(2, 1));
        assert_eq!(a_one(2, &part("1,1")).unwrap(), rat(1, 1));
        for rho in 1..=6 {
            for n in 1..=5 {
                assert_eq!(a_one(rho, &Partition::row(n)).unwrap(), rat(1, 1));
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(a_one(0, &part("1")).is_err());
        assert!(a_one(2, &Partition::empty()).is_err());
        assert!(a_one_column(0, 2).is_err());
    }

    #[test]
    fn column_formula() {
        assert_eq!(a_one_column(2, 2).unwrap(), rat(1, 1));
        assert_eq!(a_one_column(2, 1).unwrap(), rat(1, 1));
        assert_eq!(a_one_column(2, 3).unwrap(), rat(3, 1));
        // odd ρ carries no integrality
        assert_eq!(a_one_column(1, 2).unwrap(), rat(1, 2));
    }

    #[test]
    fn rho_polynomials() {
        let p = a_one_rho_poly(&part("3")).unwrap();
        assert_eq!(p.coeffs(), &[rat(1, 1)]);
        let p = a_one_rho_poly(&part("1,1")).unwrap();
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.leading(), Some(&rat(1, 2)));
        let p = a_one_rho_poly(&part("1,1,1")).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.leading(), Some(&rat(1, 2)));
    }

    #[test]
    fn leading_terms() {
        assert_eq!(leading_term(&part("3")).unwrap(), rat(1, 1));
        assert_eq!(leading_term(&part("2,1")).unwrap(), rat(1, 1));
        assert_eq!(leading_term(&Partition::column(4)).unwrap(), rat(16, 24));
    }

    #[test]
    fn num_parts_reading_breaks_rows() {
        // with P_{num_parts}, A_(3)(1) is no longer 1
        assert_ne!(a_one_with(2, &part("3"), LengthReading::NumParts).unwrap(), rat(1, 1));
    }
}
