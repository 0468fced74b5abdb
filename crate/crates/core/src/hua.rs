//! Truncated Hua series and the refined polynomials `A_λ(q)`.
//!
//! `Hua_N(x; q) = Σ_m q^{(g-1)·ᵗm H_N m} / (q^{-1})_m · x^m`, and `A_λ(q)` is
//! the coefficient of `x^m` in `(q - 1)·Log Hua_N(x; q)`, independent of `N`
//! once `N` reaches the largest part of `λ`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{monomials_up_to, BigRat, MultiSeries, QPoly, QRational};
use crate::partitions::{b_lambda_inv, pairing, MultVector, Partition};

/// Largest weight bound / variable count accepted by the series path.
pub const MAX_BOUND: u32 = 10;

#[derive(Clone, Debug)]
pub struct HuaSeries {
    pub g: u32,
    pub nvars: usize,
    pub bound: u32,
    pub series: MultiSeries<QRational>,
}

/// `q^{(g-1)·ᵗm H m} / (q^{-1})_m`
pub fn hua_coefficient(g: u32, m: &MultVector) -> QRational {
    let shift = (g as u64 - 1) * pairing(m);
    &QRational::q_pow(shift as usize) * &b_lambda_inv(m)
}

fn check_genus(g: u32) -> Result<()> {
    if g == 0 {
        return Err(Error::invalid("genus must be at least 1"));
    }
    Ok(())
}

pub fn build_hua(g: u32, nvars: usize, bound: u32) -> Result<HuaSeries> {
    check_genus(g)?;
    if nvars == 0 || bound == 0 {
        return Err(Error::invalid("N and W must be at least 1"));
    }
    if bound > MAX_BOUND || nvars > MAX_BOUND as usize {
        return Err(Error::TooLarge(format!("N = {nvars}, W = {bound} (limit {MAX_BOUND})")));
    }
    let series = MultiSeries::from_terms(
        nvars,
        bound,
        monomials_up_to(nvars, bound).into_iter().map(|m| {
            let c = hua_coefficient(g, &MultVector::new(m.clone()));
            (m, c)
        }),
    );
    Ok(HuaSeries { g, nvars, bound, series })
}

fn q_minus_one() -> QRational {
    QRational::from_poly(QPoly::from_ints(&[-1, 1]))
}

/// `(q - 1)·Log F`
fn kac_log(f: &MultiSeries<QRational>) -> Result<MultiSeries<QRational>> {
    Ok(f.plethystic_log()?.mul_coeff(&q_minus_one()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RefinedEntry {
    pub partition: Partition,
    pub value: QRational,
}

impl RefinedEntry {
    pub fn is_polynomial(&self) -> bool {
        self.value.is_polynomial()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.value.as_poly().is_some_and(QPoly::is_nonnegative)
    }

    /// `A_λ(1)`, evaluated after reduction.
    pub fn at_one(&self) -> Result<BigRat> {
        self.value.eval_at(&BigRat::one())
    }
}

/// All `A_λ(q)` with `1 <= |λ| <= bound` at a fixed genus, plus the totals `A_n(q)`.
#[derive(Clone, Debug)]
pub struct RefinedTable {
    pub g: u32,
    pub bound: u32,
    entries: BTreeMap<(u32, Partition), QRational>,
    totals: Vec<QRational>,
}

impl RefinedTable {
    /// Rows ordered by `|λ|`, then by parts.
    pub fn entries(&self) -> impl Iterator<Item = RefinedEntry> + '_ {
        self.entries.iter().map(|((_, p), v)| RefinedEntry { partition: p.clone(), value: v.clone() })
    }

    pub fn get(&self, lambda: &Partition) -> Option<&QRational> {
        self.entries.get(&(lambda.size(), lambda.clone()))
    }

    pub fn entry(&self, lambda: &Partition) -> Option<RefinedEntry> {
        self.get(lambda).map(|v| RefinedEntry { partition: lambda.clone(), value: v.clone() })
    }

    /// `A_n(q)` from the one-variable Hua series.
    pub fn total(&self, n: u32) -> Option<&QRational> {
        self.totals.get(n as usize)
    }

    pub fn a_at_one(&self, lambda: &Partition) -> Result<BigRat> {
        self.get(lambda)
            .ok_or_else(|| Error::invalid(format!("partition {lambda:?} outside the table")))?
            .eval_at(&BigRat::one())
    }
}

/// Computes every `A_λ(q)` with `|λ| <= bound` and checks that they sum to the
/// `A_n(q)` obtained from the one-variable specialisation `x_i = T^i`.
pub fn refine(g: u32, bound: u32) -> Result<RefinedTable> {
    let hua = build_hua(g, bound as usize, bound)?;
    let univariate = hua.series.specialize_weighted();
    let (multi, uni) = rayon::join(|| kac_log(&hua.series), || kac_log(&univariate));
    let (multi, uni) = (multi?, uni?);

    let mut entries = BTreeMap::new();
    for lambda in Partition::all_up_to(bound) {
        let m = lambda.to_mult().padded(bound as usize);
        entries.insert((lambda.size(), lambda), multi.coefficient(&m));
    }
    let totals = uni.univariate_coeffs();
    for n in 1..=bound {
        let sum = entries
            .range((n, Partition::empty())..(n + 1, Partition::empty()))
            .fold(QRational::zero(), |acc, (_, v)| &acc + v);
        if sum != totals[n as usize] {
            return Err(Error::Inconsistent(format!(
                "Σ_{{|λ|={n}}} A_λ = {sum} but A_{n} = {} (g = {g})",
                totals[n as usize]
            )));
        }
    }
    Ok(RefinedTable { g, bound, entries, totals })
}

/// `A_λ(q)` computed from `Hua_N` with `N = nvars` and weight bound `|λ|`.
pub fn refined_entry(g: u32, lambda: &Partition, nvars: usize) -> Result<QRational> {
    if lambda.is_empty() {
        return Err(Error::invalid("A_λ needs a nonempty partition"));
    }
    if nvars < lambda.largest_part() as usize {
        return Err(Error::invalid(format!("N = {nvars} is below the largest part of {lambda:?}")));
    }
    let hua = build_hua(g, nvars, lambda.size())?;
    Ok(kac_log(&hua.series)?.coefficient(&lambda.to_mult().padded(nvars)))
}

/// `A_λ` agrees when computed with `N = largest_part(λ)` and `N + extra`.
pub fn check_n_independence(g: u32, lambda: &Partition, extra: usize) -> Result<bool> {
    let n = lambda.largest_part() as usize;
    Ok(refined_entry(g, lambda, n)? == refined_entry(g, lambda, n + extra)?)
}

/// `A_{nλ}` at genus `g` equals `A_λ` at genus `n(g-1)+1`.
pub fn check_scaling(g: u32, lambda: &Partition, n: u32) -> Result<bool> {
    check_genus(g)?;
    if n == 0 {
        return Err(Error::invalid("scaling factor must be positive"));
    }
    let scaled = lambda.scaled(n);
    let lhs = refined_entry(g, &scaled, scaled.largest_part() as usize)?;
    let rhs = refined_entry(n * (g - 1) + 1, lambda, lambda.largest_part() as usize)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> QRational {
        QRational::from_poly(QPoly::from_ints(c))
    }

    #[test]
    fn hua_coefficients() {
        let h = build_hua(2, 1, 1).unwrap();
        assert_eq!(h.series.constant_term(), QRational::one());
        let expected = QRational::new(QPoly::from_ints(&[0, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(h.series.coefficient(&[1]), expected);
        let h = build_hua(1, 1, 1).unwrap();
        let expected = QRational::new(QPoly::from_ints(&[0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(h.series.coefficient(&[1]), expected);
        assert!(build_hua(0, 1, 1).is_err());
        assert!(matches!(build_hua(2, 3, 11), Err(Error::TooLarge(_))));
    }

    #[test]
    fn genus_two_degree_three() {
        let t = refine(2, 3).unwrap();
        assert_eq!(t.get(&part("1,1,1")).unwrap(), &poly(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1]));
        assert_eq!(t.get(&part("2,1")).unwrap(), &poly(&[0, 0, 0, 0, 0, 1, 1]));
        assert_eq!(t.get(&part("3")).unwrap(), &poly(&[0, 0, 0, 0, 1]));
        assert_eq!(t.total(3).unwrap(), &poly(&[0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1]));
    }

    #[test]
    fn single_box_is_q_to_the_g() {
        for g in 1..=4 {
            let t = refine(g, 1).unwrap();
            assert_eq!(t.get(&part("1")).unwrap(), &QRational::q_pow(g as usize));
        }
    }

    #[test]
    fn n_independence_examples() {
        assert!(check_n_independence(2, &part("2,1"), 1).unwrap());
        assert!(check_n_independence(1, &part("1,1"), 2).unwrap());
        assert!(check_n_independence(3, &part("3"), 1).unwrap());
    }

    #[test]
    fn scaling_examples() {
        assert!(check_scaling(2, &part("1"), 3).unwrap());
        assert_eq!(refined_entry(2, &part("3"), 3).unwrap(), QRational::q_pow(4));
        assert!(check_scaling(2, &part("1,1"), 2).unwrap());
        assert!(check_scaling(1, &part("2,1"), 2).unwrap());
    }
}
