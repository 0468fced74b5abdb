use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{gen_binomial, BigRat, QPoly};

/// Coefficients in `T` of the root `z(T)` of `T z^a + z - 1 = 0` and of two
/// series built from it, each listed from `T⁰` up to the requested order.
#[derive(Clone, Debug, PartialEq)]
pub struct LandenSeries {
    pub z: Vec<BigRat>,
    /// `log z`, constant term 0.
    pub log_z: Vec<BigRat>,
    /// `c₋₁(T) = Li₂(1 - z) + a·log²z / 2`, constant term 0.
    pub c_minus1: Vec<BigRat>,
}

fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

fn alt(n: u32) -> BigRat {
    if n.is_multiple_of(2) {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

pub fn landen_series(a: &BigRat, order: u32) -> Result<LandenSeries> {
    if a.is_zero() {
        return Err(Error::invalid("the log z series needs a != 0"));
    }
    let mut z = Vec::with_capacity(order as usize + 1);
    let mut log_z = vec![BigRat::zero()];
    let mut c_minus1 = vec![BigRat::zero()];
    for n in 0..=order {
        let nn = int(n.into());
        let den = (a - BigRat::one()) * &nn + BigRat::one();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let binom = gen_binomial(&(a * &nn), n);
        z.push(&binom * alt(n) / den);
        if n > 0 {
            let base = &binom / a / &nn;
            // (-T)^n in log z; (-1)^{n-1} Tⁿ in c₋₁
            log_z.push(&base * alt(n));
            c_minus1.push(-(base * alt(n)) / &nn);
        }
    }
    Ok(LandenSeries { z, log_z, c_minus1 })
}

/// `z^s = 1 + s Σ_{n≥1} binom(s - 1 + an, n) (-T)ⁿ / ((a-1)n + s)`.
pub fn landen_z_power(a: &BigRat, s: &BigRat, order: u32) -> Result<Vec<BigRat>> {
    let mut out = vec![BigRat::one()];
    for n in 1..=order {
        let nn = int(n.into());
        let den = (a - BigRat::one()) * &nn + s;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        out.push(s * gen_binomial(&(s - BigRat::one() + a * &nn), n) * alt(n) / den);
    }
    Ok(out)
}

/// Termwise `T·dc₋₁/dT = -log z`.
pub fn derivative_identity_check(a: &BigRat, order: u32) -> Result<bool> {
    let s = landen_series(a, order)?;
    Ok((1..=order as usize).all(|n| &s.c_minus1[n] * int(n as i64) == -&s.log_z[n]))
}

/// For `n = 1..=order`, the limit as `a → ∞` of the coefficient of `Uⁿ` in
/// `a(z - 1)` with `T = -U/a`, namely `lim a^{1-n} binom(an, n) / ((a-1)n + 1)`.
pub fn polya_limits(order: u32) -> Result<Vec<BigRat>> {
    if order > 12 {
        return Err(Error::TooLarge(format!("order {order} > 12")));
    }
    (1..=order)
        .map(|n| {
            let nn = int(n.into());
            // numerator a·Π_{j<n}(na - j)/n!, denominator aⁿ((n)a - n + 1), as polynomials in a
            let mut num = QPoly::monomial(BigRat::one(), 1);
            for j in 0..n {
                num = &num * &QPoly::new(vec![int(-i64::from(j)), nn.clone()]);
            }
            let fact = (1..=n).fold(BigRat::one(), |acc, k| acc * int(k.into()));
            let num = num.scale(&fact.recip());
            let den = &QPoly::monomial(BigRat::one(), n as usize) * &QPoly::new(vec![BigRat::one() - &nn, nn.clone()]);
            if num.degree() != den.degree() {
                return Err(Error::Inconsistent(format!("degree mismatch at n = {n}")));
            }
            Ok(num.leading().unwrap() / den.leading().unwrap())
        })
        .collect()
}

/// The limits from [`polya_limits`] equal `n^{n-1}/n!`, the coefficients of
/// the tree function `w(U)` with `U e^w = w`.
pub fn polya_limit_check(order: u32) -> Result<bool> {
    let limits = polya_limits(order)?;
    Ok(limits.iter().zip(1u32..).all(|(l, n)| {
        let nn = int(n.into());
        let fact = (1..=n).fold(BigRat::one(), |acc, k| acc * int(k.into()));
        *l == num_traits::pow(nn, n as usize - 1) / fact && !l.is_negative()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn ints(v: &[i64]) -> Vec<BigRat> {
        v.iter().map(|&k| int(k)).collect()
    }

    #[test]
    fn catalan_and_negative_a() {
        assert_eq!(landen_series(&int(2), 6).unwrap().z, ints(&[1, -1, 2, -5, 14, -42, 132]));
        assert_eq!(landen_series(&int(-2), 3).unwrap().z, ints(&[1, -1, -2, -7]));
        // a = 1/2 hits (a-1)n + 1 = 0 at n = 2
        assert_eq!(landen_series(&rat(1, 2), 3), Err(Error::DivisionByZero));
    }

    #[test]
    fn power_series_agree() {
        let a = int(3);
        let s = landen_series(&a, 8).unwrap();
        assert_eq!(landen_z_power(&a, &int(1), 8).unwrap(), s.z);
        assert_eq!(landen_z_power(&a, &int(0), 4).unwrap(), ints(&[1, 0, 0, 0, 0]));
        // z² from z·z
        let sq = landen_z_power(&a, &int(2), 6).unwrap();
        for n in 0..=6 {
            let conv: BigRat = (0..=n).map(|k| &s.z[k] * &s.z[n - k]).sum();
            assert_eq!(sq[n], conv);
        }
    }

    #[test]
    fn derivative_identity() {
        for a in [int(2), int(3), int(-2), rat(5, 2)] {
            assert!(derivative_identity_check(&a, 20).unwrap());
        }
    }

    #[test]
    fn partial_sums_approach_root() {
        for a in [2.0, 3.0] {
            let s = landen_series(&int(a as i64), 12).unwrap();
            let t = 0.125f64;
            let root = super::super::trinomial_root(a, t).unwrap();
            let vals: Vec<f64> = s.z.iter().map(|c| num_traits::ToPrimitive::to_f64(c).unwrap()).collect();
            let partial: f64 = vals[..12].iter().enumerate().map(|(n, c)| c * t.powi(n as i32)).sum();
            let omitted = (vals[12] * t.powi(12)).abs();
            assert!((partial - root).abs() < omitted, "a={a}");
        }
    }

    #[test]
    fn c_minus1_series_value() {
        // a = 2, small T: compare with the closed form
        let s = landen_series(&int(2), 30).unwrap();
        let t = 0.1f64;
        let sum: f64 = s
            .c_minus1
            .iter()
            .enumerate()
            .map(|(n, c)| num_traits::ToPrimitive::to_f64(c).unwrap() * t.powi(n as i32))
            .sum();
        let (cm1, _) = super::super::c_constants(2.0, t).unwrap();
        assert!((sum - cm1).abs() < 1e-12);
    }

    #[test]
    fn polya() {
        assert_eq!(polya_limits(3).unwrap(), vec![int(1), int(1), rat(3, 2)]);
        assert!(polya_limit_check(12).unwrap());
        assert!(polya_limits(13).is_err());
    }
}
