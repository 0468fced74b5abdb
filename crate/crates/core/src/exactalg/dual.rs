use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::qpoly::by_value_ops;
use super::ring::{Field, Ring};
use super::BigRat;

/// `re + eps·ε` with `ε² = 0`; carries exact first derivatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualPoly {
    pub re: BigRat,
    pub eps: BigRat,
}

impl DualPoly {
    pub fn new(re: BigRat, eps: BigRat) -> Self {
        DualPoly { re, eps }
    }

    /// The infinitesimal direction: `x + ε`.
    pub fn variable(x: BigRat) -> Self {
        DualPoly { re: x, eps: BigRat::from_integer(1.into()) }
    }
}

impl fmt::Debug for DualPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.re, self.eps)
    }
}

impl<'a> Add<&'a DualPoly> for &'a DualPoly {
    type Output = DualPoly;
    fn add(self, rhs: &DualPoly) -> DualPoly {
        DualPoly { re: &self.re + &rhs.re, eps: &self.eps + &rhs.eps }
    }
}

impl<'a> Sub<&'a DualPoly> for &'a DualPoly {
    type Output = DualPoly;
    fn sub(self, rhs: &DualPoly) -> DualPoly {
        DualPoly { re: &self.re - &rhs.re, eps: &self.eps - &rhs.eps }
    }
}

impl<'a> Mul<&'a DualPoly> for &'a DualPoly {
    type Output = DualPoly;
    fn mul(self, rhs: &DualPoly) -> DualPoly {
        DualPoly { re: &self.re * &rhs.re, eps: &self.re * &rhs.eps + &self.eps * &rhs.re }
    }
}

impl Neg for &DualPoly {
    type Output = DualPoly;
    fn neg(self) -> DualPoly {
        DualPoly { re: -&self.re, eps: -&self.eps }
    }
}

by_value_ops!(DualPoly);

impl Ring for DualPoly {
    fn from_rat(r: BigRat) -> Self {
        DualPoly { re: r, eps: BigRat::zero() }
    }
}

impl Field for DualPoly {
    fn checked_inv(&self) -> Option<Self> {
        if self.re.is_zero() {
            return None;
        }
        let inv = self.re.recip();
        let eps = -(&self.eps * &inv * &inv);
        Some(DualPoly { re: inv, eps })
    }
}

impl num_traits::Zero for DualPoly {
    fn zero() -> Self {
        DualPoly { re: BigRat::zero(), eps: BigRat::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }
}

impl num_traits::One for DualPoly {
    fn one() -> Self {
        DualPoly::from_rat(BigRat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{gen_binomial, rat};

    #[test]
    fn derivative_of_reciprocal() {
        // d/ds 1/(s + 3) at s = 0 is -1/9
        let s = DualPoly::variable(rat(0, 1));
        let v = (s + DualPoly::from_int(3)).checked_inv().unwrap();
        assert_eq!(v, DualPoly::new(rat(1, 3), rat(-1, 9)));
        assert!(DualPoly::variable(rat(0, 1)).checked_inv().is_none());
    }

    #[test]
    fn binomial_derivative() {
        // d/ds binom(s + 4, 2) at s = 0 = (2*4 - 1)/2
        let s = DualPoly::variable(rat(0, 1));
        let b = gen_binomial(&(s + DualPoly::from_int(4)), 2);
        assert_eq!(b, DualPoly::new(rat(6, 1), rat(7, 2)));
    }
}
