use num_traits::{One, Zero};

use super::matrix::ExponentMatrix;
use super::subsets::{r_function, subsets};
use crate::error::Result;
use crate::exactalg::{gen_binomial, monomials_up_to, BigRat, MultiSeries};

type Series = MultiSeries<BigRat>;

/// Power-series solution of `1 - z_i = x_i Π_j z_j^{a_ij}` with `z_i(0) = 1`.
#[derive(Clone, Debug)]
pub struct SaddleSolution {
    pub a: ExponentMatrix,
    pub bound: u32,
    pub z: Vec<Series>,
}

impl SaddleSolution {
    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// `Π_j z_j^{a_ij}`
    fn monomial_in_z(&self, i: usize) -> Result<Series> {
        monomial_in_z(&self.a, &self.z, i, self.bound)
    }

    /// `F_i = x_i f_i = -x_i Π_j z_j^{a_ij}`
    pub fn f_diag(&self, i: usize) -> Result<Series> {
        let x = Series::variable(self.n(), self.bound, i);
        Ok(-&(&x * &self.monomial_in_z(i)?))
    }

    /// `1 - z_i - x_i Π_j z_j^{a_ij}` for every `i`; identically zero for a solution.
    pub fn residuals(&self) -> Result<Vec<Series>> {
        let one = Series::one(self.n(), self.bound);
        (0..self.n()).map(|i| Ok(&(&one - &self.z[i]) + &self.f_diag(i)?)).collect()
    }
}

fn monomial_in_z(a: &ExponentMatrix, z: &[Series], i: usize, bound: u32) -> Result<Series> {
    let mut acc = Series::one(a.n(), bound);
    for (j, zj) in z.iter().enumerate() {
        let e = a.get(i, j);
        if !e.is_zero() {
            acc = &acc * &zj.pow(e)?;
        }
    }
    Ok(acc)
}

/// Weight-graded fixed point `z_i ← 1 - x_i Π_j z_j^{a_ij}`; each pass fixes
/// one more weight level, so `bound + 1` passes are exact.
pub fn solve_saddle(a: &ExponentMatrix, bound: u32) -> Result<SaddleSolution> {
    let n = a.n();
    let one = Series::one(n, bound);
    let mut z = vec![one.clone(); n];
    for _ in 0..=bound {
        let next = (0..n)
            .map(|i| {
                let x = Series::variable(n, bound, i);
                Ok(&one - &(&x * &monomial_in_z(a, &z, i, bound)?))
            })
            .collect::<Result<Vec<_>>>()?;
        if next == z {
            break;
        }
        z = next;
    }
    Ok(SaddleSolution { a: a.clone(), bound, z })
}

fn sign(m: &[u32]) -> BigRat {
    if m.iter().sum::<u32>() % 2 == 0 {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

/// `D = Σ_m (-1)^{|m|} Π_i binom(P_i(m), m_i) x^m`
pub fn big_d(a: &ExponentMatrix, bound: u32) -> Series {
    z_power_numerator(a, &vec![BigRat::zero(); a.n()], bound)
}

/// `Σ_m (-1)^{|m|} Π_i binom(s_i + P_i(m), m_i) x^m`
fn z_power_numerator(a: &ExponentMatrix, s: &[BigRat], bound: u32) -> Series {
    let n = a.n();
    Series::from_terms(
        n,
        bound,
        monomials_up_to(n, bound).into_iter().map(|m| {
            let p = a.pa_stat(&m);
            let c = (0..n).fold(sign(&m), |acc, i| acc * gen_binomial(&(&s[i] + &p[i]), m[i]));
            (m, c)
        }),
    )
}

/// `D` from the Jacobian: the inverse of `det(I - F A Z^{-1})`.
pub fn big_d_det_form(sol: &SaddleSolution) -> Result<Series> {
    let n = sol.n();
    let one = Series::one(n, sol.bound);
    let f: Vec<Series> = (0..n).map(|i| sol.f_diag(i)).collect::<Result<_>>()?;
    let z_inv: Vec<Series> = sol.z.iter().map(|z| z.inverse()).collect::<Result<_>>()?;
    let rows: Vec<Vec<Series>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = (&f[i] * &z_inv[j]).scale(sol.a.get(i, j));
                    if i == j {
                        &one - &entry
                    } else {
                        -&entry
                    }
                })
                .collect()
        })
        .collect();
    det_series(&rows, n, sol.bound).inverse()
}

fn det_series(rows: &[Vec<Series>], n: usize, bound: u32) -> Series {
    match rows.len() {
        0 => Series::one(n, bound),
        1 => rows[0][0].clone(),
        k => (0..k).fold(Series::zero(n, bound), |acc, col| {
            let minor: Vec<Vec<Series>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &rows[0][col] * &det_series(&minor, n, bound);
            if col % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        }),
    }
}

/// `D^{-1} = Σ_I (-1)^{#I} D_{Ī} Π_{i∈I} x_i f_i / z_i`, with `D_{Ī}` the
/// principal minor of `A` on `I`.
pub fn big_d_subset_inverse(sol: &SaddleSolution) -> Result<Series> {
    let n = sol.n();
    let ratio: Vec<Series> = (0..n).map(|i| Ok(&sol.f_diag(i)? * &sol.z[i].inverse()?)).collect::<Result<_>>()?;
    let mut acc = Series::zero(n, sol.bound);
    for subset in subsets(n) {
        let minor = sol.a.principal_minor(&subset);
        if minor.is_zero() {
            continue;
        }
        let mut term = Series::constant(n, sol.bound, minor);
        for &i in &subset {
            term = &term * &ratio[i];
        }
        acc = if subset.len() % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// `z_1^{s_1}···z_N^{s_N}` through Lagrange inversion, divided by `D`.
pub fn z_monomial_expansion(a: &ExponentMatrix, s: &[BigRat], bound: u32) -> Result<Series> {
    assert_eq!(s.len(), a.n(), "one exponent per variable");
    let numerator = z_power_numerator(a, s, bound);
    Ok(&numerator * &big_d(a, bound).inverse()?)
}

/// `Π_i z_i^{s_i}` straight from the solved series.
pub fn z_monomial_direct(sol: &SaddleSolution, s: &[BigRat]) -> Result<Series> {
    let mut acc = Series::one(sol.n(), sol.bound);
    for (z, e) in sol.z.iter().zip(s) {
        acc = &acc * &z.pow(e)?;
    }
    Ok(acc)
}

/// `Σ_m (-1)^{|m|} Σ_I (-1)^{#I} D_{Ī} Π_i binom(s_i + P_i(m) - δ_{I,i}, m_i - δ_{I,i}) x^m`,
/// the pole-free form of the `R(m; s)` expansion of `z^s`.
pub fn final_display_series(a: &ExponentMatrix, s: &[BigRat], bound: u32) -> Series {
    let n = a.n();
    let subsets = subsets(n);
    let minors: Vec<BigRat> = subsets.iter().map(|i| a.principal_minor(i)).collect();
    Series::from_terms(
        n,
        bound,
        monomials_up_to(n, bound).into_iter().map(|m| {
            let p = a.pa_stat(&m);
            let mut c = BigRat::zero();
            for (subset, minor) in subsets.iter().zip(&minors) {
                if minor.is_zero() || subset.iter().any(|&i| m[i] == 0) {
                    continue;
                }
                let mut term = minor.clone();
                for i in 0..n {
                    let top = &s[i] + &p[i];
                    term *= if subset.contains(&i) {
                        gen_binomial(&(top - BigRat::one()), m[i] - 1)
                    } else {
                        gen_binomial(&top, m[i])
                    };
                }
                c = if subset.len() % 2 == 0 { c + term } else { c - term };
            }
            (m.clone(), sign(&m) * c)
        }),
    )
}

/// `Σ_m (-1)^{|m|} Π_i binom(s_i + P_i(m), m_i) R(m; s) x^m`; needs `s` away
/// from the poles `s_i = -P_i(m)`.
pub fn r_form_series(a: &ExponentMatrix, s: &[BigRat], bound: u32) -> Result<Series> {
    let n = a.n();
    let mut terms = Vec::new();
    for m in monomials_up_to(n, bound) {
        let p = a.pa_stat(&m);
        let binoms = (0..n).fold(sign(&m), |acc, i| acc * gen_binomial(&(&s[i] + &p[i]), m[i]));
        terms.push((m.clone(), binoms * r_function(a, &m, s)?));
    }
    Ok(Series::from_terms(n, bound, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn uni(bound: u32, coeffs: &[i64]) -> Series {
        Series::from_terms(1, bound, coeffs.iter().enumerate().map(|(k, &c)| (vec![k as u32], rat(c, 1))))
    }

    #[test]
    fn one_variable_solutions() {
        let sol = solve_saddle(&ExponentMatrix::from_ints(&[&[-2]]).unwrap(), 3).unwrap();
        assert_eq!(sol.z[0], uni(3, &[1, -1, -2, -7]));
        let sol = solve_saddle(&ExponentMatrix::from_ints(&[&[2]]).unwrap(), 3).unwrap();
        assert_eq!(sol.z[0], uni(3, &[1, -1, 2, -5]));
        assert!(sol.residuals().unwrap().iter().all(Series::is_zero));
    }

    #[test]
    fn d_one_variable() {
        let a = ExponentMatrix::from_ints(&[&[2]]).unwrap();
        assert_eq!(big_d(&a, 3), uni(3, &[1, -2, 6, -20]));
        assert_eq!(big_d(&ExponentMatrix::from_ints(&[&[0]]).unwrap(), 4), uni(4, &[1]));
        let sol = solve_saddle(&a, 5).unwrap();
        assert_eq!(big_d_det_form(&sol).unwrap(), big_d(&a, 5));
        // D·(z + a(1 - z)) = z
        let one = Series::one(1, 5);
        let lhs = &big_d(&a, 5) * &(&sol.z[0] + &(&one - &sol.z[0]).scale(&rat(2, 1)));
        assert_eq!(lhs, sol.z[0]);
    }

    #[test]
    fn z_power_catalan() {
        let a = ExponentMatrix::from_ints(&[&[2]]).unwrap();
        let z = z_monomial_expansion(&a, &[rat(1, 1)], 6).unwrap();
        assert_eq!(z, uni(6, &[1, -1, 2, -5, 14, -42, 132]));
        let trivial = z_monomial_expansion(&ExponentMatrix::tadpole(2), &[rat(0, 1), rat(0, 1)], 4).unwrap();
        assert_eq!(trivial, Series::one(2, 4));
    }

    #[test]
    fn two_variable_expansion() {
        let a = ExponentMatrix::tadpole(2);
        let sol = solve_saddle(&a, 5).unwrap();
        let s = [rat(1, 1), rat(1, 1)];
        assert_eq!(z_monomial_expansion(&a, &s, 5).unwrap(), z_monomial_direct(&sol, &s).unwrap());
        assert_eq!(final_display_series(&a, &s, 5), z_monomial_direct(&sol, &s).unwrap());
    }
}
