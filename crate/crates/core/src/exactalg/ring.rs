use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BigRat;

/// Commutative ring containing the rationals.
///
/// Arithmetic goes through the by-value `std::ops` traits; generic code
/// clones where it needs to.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: BigRat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n, 1))
    }

    fn scale(&self, r: &BigRat) -> Self {
        self.clone() * Self::from_rat(r.clone())
    }
}

/// A ring in which some elements can be inverted.
pub trait Field: Ring {
    /// `None` when the element is not invertible.
    fn checked_inv(&self) -> Option<Self>;
}

/// Coefficient ring of a [`MultiSeries`](super::MultiSeries).
pub trait Coefficient: Field + Send + Sync + std::fmt::Display {
    /// Adams operation on coefficients: `f(q) ↦ f(q^d)`; identity on scalars.
    fn adams(&self, d: u32) -> Self;
}

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for BigRat {
    fn from_rat(r: BigRat) -> Self {
        r
    }
    fn scale(&self, r: &BigRat) -> Self {
        self * r
    }
}

impl Field for BigRat {
    fn checked_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coefficient for BigRat {
    fn adams(&self, _d: u32) -> Self {
        self.clone()
    }
}

/// Generalised binomial coefficient `t (t-1) ... (t-k+1) / k!`.
pub fn gen_binomial<R: Ring>(t: &R, k: u32) -> R {
    let mut acc = R::one();
    let mut factorial = BigInt::one();
    for j in 0..k {
        acc = acc * (t.clone() - R::from_int(j as i64));
        factorial *= BigInt::from(j + 1);
    }
    acc.scale(&BigRat::new(BigInt::one(), factorial))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(gen_binomial(&rat(-2, 1), 1), rat(-2, 1));
        assert_eq!(gen_binomial(&rat(8, 1), 3), rat(56, 1));
        assert_eq!(gen_binomial(&rat(7, 3), 0), rat(1, 1));
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        // k larger than a non-negative integer top vanishes
        assert_eq!(gen_binomial(&rat(2, 1), 5), rat(0, 1));
    }
}
