use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{BigRat, Ring};
use crate::partitions::TadpoleMatrix;

/// Symmetric rational `N×N` matrix of exponents `a_ij`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    n: usize,
    entries: Vec<BigRat>,
}

impl ExponentMatrix {
    pub fn new(rows: Vec<Vec<BigRat>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("exponent matrix must be square and nonempty"));
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::invalid(format!("exponent matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(ExponentMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&a| BigRat::from_integer(a.into())).collect()).collect())
    }

    /// `factor · H_N`; `factor = -ρ` gives the Hua exponents.
    pub fn scaled_tadpole(n: usize, factor: i64) -> Self {
        let h = TadpoleMatrix::new(n);
        let rows =
            (0..n).map(|i| (0..n).map(|j| BigRat::from_integer((factor * h.entry(i, j)).into())).collect()).collect();
        Self::new(rows).expect("tadpole matrix is symmetric")
    }

    pub fn tadpole(n: usize) -> Self {
        Self::scaled_tadpole(n, 1)
    }

    /// Symmetric matrix with entries `k/2`, `|k| <= 6`.
    pub fn random_symmetric(n: usize, rng: &mut impl rand::Rng) -> Self {
        let mut rows = vec![vec![BigRat::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v = BigRat::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=2).into());
                rows[i][j] = v.clone();
                rows[j][i] = v;
            }
        }
        Self::new(rows).expect("symmetric by construction")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_ij`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &BigRat {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigRat>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn det(&self) -> BigRat {
        det(&self.rows())
    }

    /// Determinant of the principal submatrix on `keep`; 1 when `keep` is empty.
    pub fn principal_minor(&self, keep: &[usize]) -> BigRat {
        det(&keep.iter().map(|&i| keep.iter().map(|&j| self.get(i, j).clone()).collect()).collect::<Vec<_>>())
    }

    /// `P^A_i(m) = Σ_j a_ji m_j` for every `i`.
    pub fn pa_stat(&self, m: &[u32]) -> Vec<BigRat> {
        assert_eq!(m.len(), self.n, "exponent vector length");
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(BigRat::zero(), |acc, j| acc + self.get(j, i) * BigRat::from_integer(m[j].into()))
            })
            .collect()
    }
}

impl fmt::Debug for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")).collect();
        write!(f, "[[{}]]", rows.join("], ["))
    }
}

/// Determinant over the rationals by fraction-exact Gaussian elimination.
pub fn det(rows: &[Vec<BigRat>]) -> BigRat {
    let n = rows.len();
    let mut a: Vec<Vec<BigRat>> = rows.to_vec();
    let mut d = BigRat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRat::zero();
        };
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        let p = a[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    d
}

/// Determinant over any commutative ring by cofactor expansion along the first row.
pub fn det_generic<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    match n {
        0 => R::one(),
        1 => rows[0][0].clone(),
        _ => {
            let mut acc = R::zero();
            for col in 0..n {
                if rows[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = rows[0][col].clone() * det_generic(&minor);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}
