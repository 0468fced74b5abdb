use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::qpoly::{by_value_ops, QPoly};
use super::ring::{Coefficient, Field, Ring};
use super::BigRat;
use crate::error::{Error, Result};

/// Rational function in `q` over the rationals, kept reduced.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic, so structural
/// equality is equality of functions and `den == 1` detects polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lc = den.leading().expect("nonzero denominator").recip();
        QRational { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRational { num: p, den: QPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRational) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Exact value at `q0`; errors if the reduced denominator vanishes there.
    pub fn eval_at(&self, q0: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// `q ↦ q^d`. Coprimality survives the substitution, so no re-reduction.
    pub fn compose_pow(&self, d: u32) -> Self {
        QRational { num: self.num.compose_pow(d), den: self.den.compose_pow(d) }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRational { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.render(var)
        } else {
            format!("({}) / ({})", self.num.render(var), self.den.render(var))
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({})", self.render("q"))
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let left = rhs.den.exact_div(&g).expect("gcd divides");
        let right = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &left) + &(&rhs.num * &right);
        QRational::reduce(num, &self.den * &left)
    }
}

impl<'a> Sub<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        // cross-cancel before multiplying; the result is then already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().expect("nonzero").recip();
        QRational { num: num.scale(&lc), den: den.scale(&lc) }
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -&self.num, den: self.den.clone() }
    }
}

by_value_ops!(QRational);

impl Ring for QRational {
    fn from_rat(r: BigRat) -> Self {
        QRational::constant(r)
    }
    fn scale(&self, r: &BigRat) -> Self {
        QRational::scale(self, r)
    }
}

impl Field for QRational {
    fn checked_inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Coefficient for QRational {
    fn adams(&self, d: u32) -> Self {
        self.compose_pow(d)
    }
}

impl QRational {
    /// `q^k` as a rational function.
    pub fn q_pow(k: usize) -> Self {
        Self::from_poly(QPoly::q_pow(k))
    }

    /// `1/(1 - q^k)` helper used in tests and examples.
    pub fn one_minus_q_pow_inv(k: usize) -> Self {
        let mut c = vec![BigRat::zero(); k + 1];
        c[0] = BigRat::one();
        c[k] = -BigRat::one();
        Self::new(QPoly::one(), QPoly::new(c)).expect("nonzero")
    }
}

impl num_traits::Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
}

impl num_traits::One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> QRational {
        QRational::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let a = rf(&[1], &[1, -1]);
        assert_eq!(&a + &a, rf(&[2], &[1, -1]));
        assert_eq!(rf(&[1, 0, -1], &[1, -1]), QRational::from_poly(p(&[1, 1])));
        // (q - 1) * q/(q - 1) = q
        let prod = &QRational::from_poly(p(&[-1, 1])) * &rf(&[0, 1], &[-1, 1]);
        assert_eq!(prod, QRational::q_pow(1));
        assert!(prod.is_polynomial());
        assert_eq!(a.checked_div(&QRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form_is_monic() {
        let a = rf(&[2], &[2, -2]);
        assert_eq!(a.den(), &p(&[-1, 1]));
        assert_eq!(a.num(), &p(&[-1]));
    }

    #[test]
    fn evaluation() {
        let a = QRational::from_poly(p(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1]));
        assert_eq!(a.eval_at(&rat(1, 1)).unwrap(), rat(3, 1));
        assert!(matches!(rf(&[0, 1], &[-1, 1]).eval_at(&rat(1, 1)), Err(Error::Pole(_))));
        assert_eq!(rf(&[1, 0, 0, -1], &[1, -1]).eval_at(&rat(1, 1)).unwrap(), rat(3, 1));
    }

    #[test]
    fn adams_substitution() {
        let a = QRational::one_minus_q_pow_inv(1);
        assert_eq!(a.compose_pow(2), QRational::one_minus_q_pow_inv(2));
    }
}
