use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::matrix::{det, ExponentMatrix};
use super::trees::tau_tree;
use crate::error::{Error, Result};
use crate::exactalg::{BigRat, DualPoly, Field};

/// All subsets of `{0, ..., n-1}`, each sorted, ordered by bitmask.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect()).collect()
}

/// `det(diag(x) - A) = Σ_I (-1)^{N-#I} D_I x^I`, with `D_I` striking the rows
/// and columns in `I`, checked at `trials` seeded random rational points.
pub fn minors_expansion_check(a: &ExponentMatrix, trials: usize, seed: u64) -> bool {
    use rand::Rng as _;
    let n = a.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<usize> = (0..n).collect();
    (0..trials).all(|_| {
        let x: Vec<BigRat> =
            (0..n).map(|_| BigRat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())).collect();
        let lhs = det(&(0..n)
            .map(|i| (0..n).map(|j| if i == j { &x[i] - a.get(i, j) } else { -a.get(i, j) }).collect())
            .collect::<Vec<_>>());
        let rhs = subsets(n).into_iter().fold(BigRat::zero(), |acc, struck| {
            let keep: Vec<usize> = all.iter().copied().filter(|i| !struck.contains(i)).collect();
            let mut term = a.principal_minor(&keep);
            for &i in &struck {
                term *= &x[i];
            }
            if (n - struck.len()).is_multiple_of(2) {
                acc + term
            } else {
                acc - term
            }
        });
        lhs == rhs
    })
}

/// `R(m; s) = Σ_I (-1)^{#I} D_{Ī} Π_{i∈I} m_i / (s_i + P_i(m))`.
///
/// Generic over the scalar so that dual numbers in `s` yield exact first
/// derivatives.
pub fn r_function<F: Field>(a: &ExponentMatrix, m: &[u32], s: &[F]) -> Result<F> {
    let n = a.n();
    assert_eq!(m.len(), n, "exponent vector length");
    assert_eq!(s.len(), n, "one s per variable");
    let p = a.pa_stat(m);
    let mut factors = Vec::with_capacity(n);
    for i in 0..n {
        if m[i] == 0 {
            factors.push(None);
            continue;
        }
        let den = s[i].clone() + F::from_rat(p[i].clone());
        let inv =
            den.checked_inv().ok_or_else(|| Error::Pole(format!("s_{} = -P_{}(m) at m = {m:?}", i + 1, i + 1)))?;
        factors.push(Some(inv * F::from_int(m[i] as i64)));
    }
    let mut acc = F::zero();
    for subset in subsets(n) {
        let Some(prod) = subset
            .iter()
            .try_fold(F::from_rat(a.principal_minor(&subset)), |acc, &i| factors[i].as_ref().map(|f| acc * f.clone()))
        else {
            continue;
        };
        acc = if subset.len() % 2 == 0 { acc + prod } else { acc - prod };
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PartRCheck {
    Passed,
    Failed {
        index: usize,
        derivative: String,
        tree_form: String,
    },
    /// Some `P^A_i(m)` vanishes, so the identity is not defined there.
    Skipped {
        reason: String,
    },
}

impl PartRCheck {
    pub fn is_ok(&self) -> bool {
        !matches!(self, PartRCheck::Failed { .. })
    }
}

/// `∂R/∂s_i (m; 0) = m_i τ(m) / Π_j P_j(m)` for every `i`.
pub fn part_r_check(a: &ExponentMatrix, m: &[u32]) -> Result<PartRCheck> {
    let n = a.n();
    let p = a.pa_stat(m);
    if let Some(i) = p.iter().position(|v| v.is_zero()) {
        return Ok(PartRCheck::Skipped { reason: format!("P_{}(m) = 0 at m = {m:?}", i + 1) });
    }
    let tau = tau_tree(a, m)?;
    let prod_p = p.iter().fold(BigRat::one(), |acc, v| acc * v);
    for i in 0..n {
        let s: Vec<DualPoly> =
            (0..n).map(|j| if j == i { DualPoly::variable(BigRat::zero()) } else { DualPoly::zero() }).collect();
        let derivative = r_function(a, m, &s)?.eps;
        let tree_form = BigRat::from_integer(m[i].into()) * &tau / &prod_p;
        if derivative != tree_form {
            return Ok(PartRCheck::Failed {
                index: i + 1,
                derivative: derivative.to_string(),
                tree_form: tree_form.to_string(),
            });
        }
    }
    Ok(PartRCheck::Passed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn minors_small_cases() {
        let a = ExponentMatrix::from_ints(&[&[5]]).unwrap();
        assert!(minors_expansion_check(&a, 5, 1));
        assert!(minors_expansion_check(&ExponentMatrix::tadpole(2), 3, 7));
        let mut rng = ChaCha8Rng::seed_from_u64(super::super::DEFAULT_SEED);
        let a = ExponentMatrix::random_symmetric(4, &mut rng);
        assert!(minors_expansion_check(&a, 10, super::super::DEFAULT_SEED));
    }

    #[test]
    fn minors_hand_example() {
        // det(diag(1, 1) - H_2) = det [[0, -1], [-1, -1]] = -1
        let a = ExponentMatrix::tadpole(2);
        let x = [rat(1, 1), rat(1, 1)];
        let expansion = a.det() - a.principal_minor(&[1]) * &x[0] - a.principal_minor(&[0]) * &x[1] + &x[0] * &x[1];
        assert_eq!(expansion, rat(-1, 1));
    }

    #[test]
    fn r_at_zero() {
        let a = ExponentMatrix::tadpole(3);
        let zero = vec![BigRat::zero(); 3];
        assert_eq!(r_function(&a, &[0, 0, 0], &zero).unwrap(), rat(1, 1));
        for m in [[1, 0, 0], [1, 1, 1], [2, 0, 3], [0, 2, 1]] {
            assert_eq!(r_function(&a, &m, &zero).unwrap(), rat(0, 1));
        }
        // pole: s_1 = -P_1(m)
        let s = vec![rat(-1, 1), rat(0, 1), rat(0, 1)];
        assert!(matches!(r_function(&a, &[1, 0, 0], &s), Err(Error::Pole(_))));
    }

    #[test]
    fn part_r_examples() {
        assert_eq!(part_r_check(&ExponentMatrix::tadpole(2), &[1, 1]).unwrap(), PartRCheck::Passed);
        assert_eq!(part_r_check(&ExponentMatrix::tadpole(3), &[2, 1, 1]).unwrap(), PartRCheck::Passed);
        let a = ExponentMatrix::from_ints(&[&[2, -1, 3], &[-1, 1, 2], &[3, 2, -4]]).unwrap();
        assert_eq!(part_r_check(&a, &[1, 1, 1]).unwrap(), PartRCheck::Passed);
        let one = ExponentMatrix::from_ints(&[&[-4]]).unwrap();
        assert_eq!(part_r_check(&one, &[3]).unwrap(), PartRCheck::Passed);
        let degenerate = ExponentMatrix::from_ints(&[&[1, -1], &[-1, 1]]).unwrap();
        assert!(matches!(part_r_check(&degenerate, &[1, 1]).unwrap(), PartRCheck::Skipped { .. }));
    }
}
