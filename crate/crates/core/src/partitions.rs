//! Partitions, multiplicity vectors and the tadpole pairing.
//!
//! A partition `λ = (1^{m_1} 2^{m_2} ... N^{m_N})` is carried either as its
//! parts or as its multiplicity vector `m`. The vector's canonical length is
//! the largest part `N`; `num_parts` is `Σ m_i`. Neither is called "length".

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{BigRat, QPoly, QRational};

/// Parts in weakly decreasing order, all positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts parts in any order and sorts them.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`
    pub fn row(n: u32) -> Self {
        Partition(vec![n])
    }

    /// `(1^n)`
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn largest_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest_part();
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// `nλ = (nλ_1, nλ_2, ...)`
    pub fn scaled(&self, n: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * n).collect())
    }

    pub fn to_mult(&self) -> MultVector {
        let mut m = vec![0; self.largest_part() as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        MultVector(m)
    }

    /// All partitions of `n`, in ascending lexicographic order of parts.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=rest.min(max) {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All nonempty partitions with `1 <= |λ| <= n`, ordered by size then parts.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (1..=n).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// Parses `"2,1"`; parts must already be in descending order.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("partition parts must be descending: {s:?}")));
        }
        Partition::new(parts)
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::invalid(format!("not a non-negative integer: {t:?}"))))
        .collect()
}

/// Multiplicities `(m_1, ..., m_N)` with `m_N > 0` unless empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultVector(Vec<u32>);

impl MultVector {
    /// Trailing zeros are trimmed to the canonical length.
    pub fn new(mut m: Vec<u32>) -> Self {
        while m.last() == Some(&0) {
            m.pop();
        }
        MultVector(m)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `m_i` with 1-based `i`; zero beyond the stored length.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// The largest part `N`.
    pub fn largest_part(&self) -> usize {
        self.0.len()
    }

    pub fn num_parts(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weight(&self) -> u32 {
        crate::exactalg::weight(&self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-padded to exactly `n` entries; `n` must not cut nonzero entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.0.len(), "padding would drop nonzero multiplicities");
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32 + 1, c as usize));
        }
        Partition(parts)
    }

    /// `m[n]`: the multiplicity vector of `nλ`, with `m_i` moved to slot `n·i`.
    pub fn dilate(&self, n: u32) -> MultVector {
        let mut v = vec![0; self.0.len() * n as usize];
        for (i, &c) in self.0.iter().enumerate() {
            v[(i + 1) * n as usize - 1] = c;
        }
        MultVector::new(v)
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &c| g.gcd(&c))
    }

    /// `m/d`; `d` must divide every entry.
    pub fn divide(&self, d: u32) -> MultVector {
        assert!(d > 0 && self.0.iter().all(|c| c % d == 0), "{d} does not divide {self:?}");
        MultVector(self.0.iter().map(|c| c / d).collect())
    }
}

impl From<&Partition> for MultVector {
    fn from(p: &Partition) -> Self {
        p.to_mult()
    }
}

impl fmt::Debug for MultVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "m={}", s.join(","))
    }
}

/// Parses `"m=1,1"` (the `m=` prefix is optional).
impl FromStr for MultVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix("m=").unwrap_or(s.trim());
        Ok(MultVector::new(parse_list(body)?))
    }
}

/// `ᵗm·H_N·m` with `H_N = (min(i, j))`.
pub fn pairing(m: &MultVector) -> u64 {
    let v = m.as_slice();
    let mut total = 0u64;
    for (i, &a) in v.iter().enumerate() {
        for (j, &b) in v.iter().enumerate() {
            total += (i.min(j) as u64 + 1) * a as u64 * b as u64;
        }
    }
    total
}

/// `P_i(m) = Σ_j min(i, j)·m_j`, `i >= 1`.
pub fn p_stat(i: usize, m: &MultVector) -> u64 {
    m.as_slice().iter().enumerate().map(|(j, &c)| (i.min(j + 1)) as u64 * c as u64).sum()
}

pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1, "Möbius function needs n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Positive divisors of `gcd(m_1, ..., m_N)`: the index set of `Σ_{d | m}`.
pub fn common_divisors(m: &MultVector) -> Result<Vec<u32>> {
    if m.is_zero() {
        return Err(Error::invalid("common divisors of the zero vector"));
    }
    Ok(divisors(m.gcd()))
}

/// `1 / Π_i (q^{-1})_{m_i}` with `(u)_k = Π_{j=1}^k (1 - u^j)`.
///
/// Each factor `1/(1 - q^{-j})` is written as `q^j/(q^j - 1)`.
pub fn b_lambda_inv(m: &MultVector) -> QRational {
    let mut q_exp = 0usize;
    let mut den = QPoly::one();
    for &k in m.as_slice() {
        for j in 1..=k as usize {
            q_exp += j;
            let mut c = vec![BigRat::zero(); j + 1];
            c[0] = BigRat::from_integer((-1).into());
            c[j] = BigRat::from_integer(1.into());
            den = &den * &QPoly::new(c);
        }
    }
    QRational::new(QPoly::q_pow(q_exp), den).expect("nonzero denominator")
}

/// The tadpole matrix `H_N = (min(i, j))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TadpoleMatrix {
    pub n: usize,
}

impl TadpoleMatrix {
    pub fn new(n: usize) -> Self {
        TadpoleMatrix { n }
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        (i.min(j) + 1) as i64
    }

    pub fn entries(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Cartan matrix of the tadpole: tridiagonal, `2` on the diagonal except a
    /// final `1`, `-1` off the diagonal.
    pub fn inverse(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut inv = vec![vec![0; n]; n];
        for i in 0..n {
            inv[i][i] = if i + 1 == n { 1 } else { 2 };
            if i + 1 < n {
                inv[i][i + 1] = -1;
                inv[i + 1][i] = -1;
            }
        }
        inv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, QPoly};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn multiplicity_round_trip() {
        assert_eq!(part("2,1").to_mult(), MultVector::new(vec![1, 1]));
        assert_eq!(part("1,1,1").to_mult(), MultVector::new(vec![3]));
        assert_eq!(part("3").to_mult(), MultVector::new(vec![0, 0, 1]));
        for p in Partition::all_up_to(7) {
            assert_eq!(p.to_mult().to_partition(), p);
            assert_eq!(p.to_mult().weight(), p.size());
        }
    }

    #[test]
    fn parsing() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("m=1,1".parse::<MultVector>().unwrap(), MultVector::new(vec![1, 1]));
        assert_eq!("0,0,1,0".parse::<MultVector>().unwrap().largest_part(), 3);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&MultVector::new(vec![1, 1])), 5);
        assert_eq!(pairing(&MultVector::new(vec![3])), 9);
        assert_eq!(pairing(&MultVector::new(vec![0, 0, 1])), 3);
    }

    #[test]
    fn p_stat_examples() {
        assert_eq!(p_stat(1, &MultVector::new(vec![3])), 3);
        assert_eq!(p_stat(2, &MultVector::new(vec![1, 1, 1])), 5);
        assert_eq!(p_stat(2, &MultVector::new(vec![1, 1])), 3);
        // constant beyond the largest part
        let m = MultVector::new(vec![2, 0, 1]);
        assert_eq!(p_stat(3, &m), p_stat(7, &m));
    }

    #[test]
    fn number_theory() {
        assert_eq!((moebius(1), moebius(3), moebius(4), moebius(6), moebius(30)), (1, -1, 0, 1, -1));
        assert_eq!(common_divisors(&MultVector::new(vec![3])).unwrap(), vec![1, 3]);
        assert_eq!(common_divisors(&MultVector::new(vec![1, 1])).unwrap(), vec![1]);
        assert_eq!(common_divisors(&MultVector::new(vec![2, 0, 4])).unwrap(), vec![1, 2]);
        assert!(common_divisors(&MultVector::new(vec![])).is_err());
    }

    #[test]
    fn b_lambda_examples() {
        let p = QPoly::from_ints;
        assert_eq!(b_lambda_inv(&MultVector::new(vec![1])), QRational::new(p(&[0, 1]), p(&[-1, 1])).unwrap());
        assert_eq!(b_lambda_inv(&MultVector::new(vec![])), QRational::one());
        let expected = QRational::new(p(&[0, 0, 0, 1]), &p(&[-1, 1]) * &p(&[-1, 0, 1])).unwrap();
        assert_eq!(b_lambda_inv(&MultVector::new(vec![2])), expected);
        // 1/(1 - q^-1) at q = 2 is 2
        assert_eq!(b_lambda_inv(&MultVector::new(vec![1])).eval_at(&rat(2, 1)).unwrap(), rat(2, 1));
    }

    #[test]
    fn conjugate_and_dilate() {
        assert_eq!(part("3").conjugate(), part("1,1,1"));
        assert_eq!(part("4,2,1").conjugate(), part("3,2,1,1"));
        assert_eq!(MultVector::new(vec![1, 1]).dilate(2), part("4,2").to_mult());
    }
}
