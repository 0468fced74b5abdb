//! Identity suites behind `kacpoly verify`.
//!
//! Every check produces an [`IdentityCheck`]; failures carry a witness or a
//! detail string with both sides of the identity. The per-identity functions
//! are public so callers can run any subset.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{
    c_constants, derivative_identity_check, dilog, landen_series, polya_limit_check, verify_asymptotics,
};
use crate::closedform::{a_one, a_one_column, a_one_rho_poly, leading_term};
use crate::error::{Error, Result};
use crate::exactalg::{monomials_up_to, rat, BigRat, MultiSeries};
use crate::hua::{check_n_independence, check_scaling, refine, RefinedTable};
use crate::inversion::{
    big_d, big_d_det_form, big_d_subset_inverse, final_display_series, lemma_tau_check, minors_expansion_check,
    part_r_check, r_form_series, r_function, solve_saddle, z_monomial_direct, z_monomial_expansion, z_product_check,
    ExponentMatrix, PartRCheck, DEFAULT_SEED,
};
use crate::partitions::Partition;
use crate::report::IdentityCheck;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Hua,
    Closedform,
    Inversion,
    Asymptotics,
    All,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Hua, Suite::Closedform, Suite::Inversion, Suite::Asymptotics];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hua => "hua",
            Suite::Closedform => "closedform",
            Suite::Inversion => "inversion",
            Suite::Asymptotics => "asymptotics",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Hua, Suite::Closedform, Suite::Inversion, Suite::Asymptotics, Suite::All]
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

/// Sizes used by the suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Largest `|λ|` in the Hua and closed-form suites.
    pub max_size: u32,
    /// Weight bound for the inversion identities.
    pub series_bound: u32,
    /// Largest number of variables for the inversion identities.
    pub max_vars: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: DEFAULT_SEED, max_size: 6, series_bound: 5, max_vars: 3 }
    }
}

impl VerifyOptions {
    pub fn validate(&self) -> Result<()> {
        if !(1..=crate::hua::MAX_BOUND).contains(&self.max_size) {
            return Err(Error::invalid(format!("max_size must be in 1..={}", crate::hua::MAX_BOUND)));
        }
        if !(1..=8).contains(&self.series_bound) {
            return Err(Error::invalid("series_bound must be in 1..=8"));
        }
        if !(1..=4).contains(&self.max_vars) {
            return Err(Error::invalid("max_vars must be in 1..=4"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<IdentityCheck>) -> Self {
        SuiteReport { suite, passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub options: VerifyOptions,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// Runs one suite, or all four for [`Suite::All`].
pub fn run(suite: Suite, options: &VerifyOptions) -> Result<VerifyReport> {
    options.validate()?;
    let wanted: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let suites = wanted
        .into_iter()
        .map(|s| {
            let checks = match s {
                Suite::Hua => hua_suite(options)?,
                Suite::Closedform => closedform_suite(options)?,
                Suite::Inversion => inversion_suite(options)?,
                Suite::Asymptotics => asymptotics_suite()?,
                Suite::All => unreachable!(),
            };
            Ok(SuiteReport::new(s, checks))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { options: options.clone(), passed: suites.iter().all(|s| s.passed), suites })
}

fn hua_suite(o: &VerifyOptions) -> Result<Vec<IdentityCheck>> {
    let tables = tables(&[1, 2, 3], o.max_size)?;
    let mut out = positivity_survey(&tables);
    out.extend(single_row(&tables, 6));
    out.extend(scaling(&[1, 2], o.max_size.min(3), 2)?);
    out.extend(n_independence(2, o.max_size.min(4))?);
    Ok(out)
}

fn closedform_suite(o: &VerifyOptions) -> Result<Vec<IdentityCheck>> {
    let tables = tables(&[2, 3], o.max_size)?;
    let mut out = theorem_vs_series(&tables)?;
    out.extend(column_formula(8, &[1, 2, 3, 4])?);
    out.extend(corollary(o.max_size)?);
    Ok(out)
}

fn inversion_suite(o: &VerifyOptions) -> Result<Vec<IdentityCheck>> {
    let mut out = inversion_identities(o.max_vars, o.series_bound, o.seed)?;
    out.extend(minors_lemma(o.max_vars.max(4), o.seed));
    out.extend(lemma_tau(5, &[1, 2, 3])?);
    out.extend(z_products(&[(2, 1), (2, 2), (3, 1), (2, 3)], 6)?);
    Ok(out)
}

fn asymptotics_suite() -> Result<Vec<IdentityCheck>> {
    let mut out = asymptotic_fits(&[(2.0, 1.0), (3.0, 0.5), (1.0, 1.0)], 1e-6)?;
    out.push(pi_squared_over_15(1e-9)?);
    out.push(dilog_reflection(1e-10)?);
    out.extend(landen_checks(20)?);
    Ok(out)
}

/// Refined tables `g -> A_λ(q), |λ| <= size`, computed in parallel.
pub fn tables(genera: &[u32], size: u32) -> Result<BTreeMap<u32, RefinedTable>> {
    genera.par_iter().map(|&g| refine(g, size).map(|t| (g, t))).collect()
}

fn lambda_name(lambda: &Partition) -> String {
    format!("({lambda})")
}

/// Every `A_λ(q)` is a polynomial with nonnegative coefficients.
pub fn positivity_survey(tables: &BTreeMap<u32, RefinedTable>) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for (g, table) in tables {
        for entry in table.entries() {
            let name = format!("positivity g={g} λ={}", lambda_name(&entry.partition));
            out.push(if entry.is_polynomial() && entry.is_nonnegative() {
                IdentityCheck::new(name, true)
            } else {
                IdentityCheck::failed(name, format!("A_λ(q) = {}", entry.value))
            });
        }
    }
    out
}

/// `A_{(n)}(q) = q^{n(g-1)+1}`.
pub fn single_row(tables: &BTreeMap<u32, RefinedTable>, max_n: u32) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for (g, table) in tables {
        for n in 1..=max_n.min(table.bound) {
            let expected = crate::QRational::q_pow((n * (g - 1) + 1) as usize);
            let got = table.get(&Partition::row(n)).cloned().unwrap_or_else(crate::QRational::zero);
            let name = format!("single row g={g} n={n}");
            out.push(if got == expected {
                IdentityCheck::new(name, true)
            } else {
                IdentityCheck::failed(name, format!("{got} != {expected}"))
            });
        }
    }
    out
}

/// `A_{nλ}` at genus `g` equals `A_λ` at genus `n(g-1)+1`, for `2 <= n <= max_factor`.
pub fn scaling(genera: &[u32], max_size: u32, max_factor: u32) -> Result<Vec<IdentityCheck>> {
    let cases: Vec<(u32, Partition, u32)> = genera
        .iter()
        .flat_map(|&g| {
            Partition::all_up_to(max_size)
                .into_iter()
                .filter(|l| !l.is_empty())
                .flat_map(move |l| (2..=max_factor).map(move |n| (g, l.clone(), n)))
        })
        .collect();
    cases
        .par_iter()
        .map(|(g, l, n)| {
            let ok = check_scaling(*g, l, *n)?;
            Ok(IdentityCheck::new(format!("scaling g={g} λ={} n={n}", lambda_name(l)), ok))
        })
        .collect()
}

/// `A_λ` does not depend on the number of variables beyond the largest part.
pub fn n_independence(g: u32, max_size: u32) -> Result<Vec<IdentityCheck>> {
    Partition::all_up_to(max_size)
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|l| {
            let ok = check_n_independence(g, &l, 1)?;
            Ok(IdentityCheck::new(format!("N-independence g={g} λ={}", lambda_name(&l)), ok))
        })
        .collect()
}

/// The closed formula at `ρ = 2g - 2` against `A_λ(1)` from the series.
pub fn theorem_vs_series(tables: &BTreeMap<u32, RefinedTable>) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for (g, table) in tables {
        if *g < 2 {
            return Err(Error::invalid("the closed formula needs g >= 2"));
        }
        for entry in table.entries() {
            let series = entry.at_one()?;
            let closed = a_one(2 * g - 2, &entry.partition)?;
            let name = format!("closed form vs series g={g} λ={}", lambda_name(&entry.partition));
            out.push(if series == closed {
                IdentityCheck::new(name, true)
            } else {
                IdentityCheck::failed(name, format!("series {series}, closed form {closed}"))
            });
        }
    }
    Ok(out)
}

/// The column formula for `A_{(1^n)}(1)` against the general closed formula.
pub fn column_formula(max_n: u32, rhos: &[u32]) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for &rho in rhos {
        for n in 1..=max_n {
            let column = a_one_column(rho, n)?;
            let general = a_one(rho, &Partition::column(n))?;
            let name = format!("column formula ρ={rho} n={n}");
            out.push(if column == general {
                IdentityCheck::new(name, true)
            } else {
                IdentityCheck::failed(name, format!("{column} != {general}"))
            });
        }
    }
    Ok(out)
}

fn factorial(n: u32) -> BigRat {
    (1..=n).fold(BigRat::one(), |acc, k| acc * rat(k.into(), 1))
}

/// Degree `num_parts(λ) - 1` and the leading coefficient of `A_λ(1)` as a
/// polynomial in `ρ`; for columns the leading coefficient is `n^{n-2}/n!`.
pub fn corollary(max_size: u32) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for lambda in Partition::all_up_to(max_size).into_iter().filter(|l| !l.is_empty()) {
        let poly = a_one_rho_poly(&lambda)?;
        let lead = leading_term(&lambda)?;
        let degree_ok = poly.degree() == Some(lambda.num_parts() - 1);
        let lead_ok = poly.leading() == Some(&lead);
        let name = format!("ρ-degree and leading term λ={}", lambda_name(&lambda));
        out.push(if degree_ok && lead_ok {
            IdentityCheck::new(name, true)
        } else {
            IdentityCheck::failed(name, format!("{} vs leading term {lead}", poly.render()))
        });
    }
    for n in 1..=max_size {
        let lead = leading_term(&Partition::column(n))?;
        let expected = rat(n.into(), 1).pow(n as i32 - 2) / factorial(n);
        let name = format!("column leading term n={n}");
        out.push(if lead == expected {
            IdentityCheck::new(name, true)
        } else {
            IdentityCheck::failed(name, format!("{lead} != {expected}"))
        });
    }
    Ok(out)
}

/// The exponent matrices the inversion identities run on: `H_N`, `-2H_N`,
/// `-4H_N` and one seeded random symmetric matrix per `N`.
pub fn test_matrices(max_vars: usize, seed: u64) -> Vec<(String, ExponentMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=max_vars {
        out.push((format!("H_{n}"), ExponentMatrix::tadpole(n)));
        out.push((format!("-2H_{n}"), ExponentMatrix::scaled_tadpole(n, -2)));
        out.push((format!("-4H_{n}"), ExponentMatrix::scaled_tadpole(n, -4)));
        let random = ExponentMatrix::random_symmetric(n, &mut rng);
        out.push((format!("random_{n}{random:?}"), random));
    }
    out
}

fn exponent_vectors(n: usize) -> Vec<(String, Vec<BigRat>)> {
    let pick = |vals: &[(i64, i64)]| -> Vec<BigRat> {
        (0..n).map(|i| rat(vals[i % vals.len()].0, vals[i % vals.len()].1)).collect()
    };
    vec![
        ("s=1".to_string(), pick(&[(1, 1)])),
        ("s=(2,-1,3)".to_string(), pick(&[(2, 1), (-1, 1), (3, 1)])),
        ("s=1/2".to_string(), pick(&[(1, 2)])),
        ("s=(-3/2,1/2,5/2)".to_string(), pick(&[(-3, 2), (1, 2), (5, 2)])),
    ]
}

/// For every test matrix: the three forms of `D` agree, the `z^s` expansions
/// match the solved series, and `R(m; s)` vanishes at `s = 0` with the tree
/// formula for its first derivatives.
pub fn inversion_identities(max_vars: usize, bound: u32, seed: u64) -> Result<Vec<IdentityCheck>> {
    test_matrices(max_vars, seed)
        .par_iter()
        .map(|(label, a)| identities_for(label, a, bound))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn identities_for(label: &str, a: &ExponentMatrix, bound: u32) -> Result<Vec<IdentityCheck>> {
    let n = a.n();
    let sol = solve_saddle(a, bound)?;
    let mut out = Vec::new();
    let zero = MultiSeries::zero(n, bound);
    for (i, r) in sol.residuals()?.iter().enumerate() {
        out.push(IdentityCheck::compare_series(format!("saddle residual {label} i={}", i + 1), r, &zero));
    }
    let d = big_d(a, bound);
    out.push(IdentityCheck::compare_series(format!("D series = det form {label}"), &d, &big_d_det_form(&sol)?));
    out.push(IdentityCheck::compare_series(
        format!("D^-1 = subset form {label}"),
        &d.inverse()?,
        &big_d_subset_inverse(&sol)?,
    ));
    for (s_label, s) in exponent_vectors(n) {
        let direct = z_monomial_direct(&sol, &s)?;
        out.push(IdentityCheck::compare_series(
            format!("z^s expansion {label} {s_label}"),
            &z_monomial_expansion(a, &s, bound)?,
            &direct,
        ));
        out.push(IdentityCheck::compare_series(
            format!("z^s pole-free form {label} {s_label}"),
            &final_display_series(a, &s, bound),
            &direct,
        ));
    }
    // thirds stay clear of the poles s_i = -P_i(m), which lie in (1/2)Z
    let s: Vec<BigRat> = (0..n).map(|i| rat(if i % 2 == 0 { 1 } else { -2 }, 3)).collect();
    out.push(IdentityCheck::compare_series(
        format!("z^s R-form {label} s=(1/3,-2/3,..)"),
        &r_form_series(a, &s, bound)?,
        &z_monomial_direct(&sol, &s)?,
    ));

    let zeros = vec![BigRat::zero(); n];
    let (mut r_bad, mut r_skipped, mut part_bad, mut part_skipped) = (Vec::new(), 0usize, Vec::new(), 0usize);
    for m in monomials_up_to(n, bound).into_iter().skip(1) {
        match r_function(a, &m, &zeros) {
            Ok(v) if v.is_zero() => {}
            Ok(v) => r_bad.push(format!("m={m:?}: {v}")),
            Err(Error::Pole(_)) => r_skipped += 1,
            Err(e) => return Err(e),
        }
        match part_r_check(a, &m)? {
            PartRCheck::Passed => {}
            PartRCheck::Skipped { .. } => part_skipped += 1,
            PartRCheck::Failed { index, derivative, tree_form } => {
                part_bad.push(format!("m={m:?} i={index}: {derivative} vs {tree_form}"))
            }
        }
    }
    let summarize = |name: String, bad: Vec<String>, skipped: usize| {
        let check =
            if bad.is_empty() { IdentityCheck::new(name, true) } else { IdentityCheck::failed(name, bad.join("; ")) };
        if skipped > 0 && check.passed {
            check.with_detail(format!("{skipped} exponent vectors skipped (P_i(m) = 0)"))
        } else {
            check
        }
    };
    out.push(summarize(format!("R(m;0) = 0 {label}"), r_bad, r_skipped));
    out.push(summarize(format!("dR/ds tree formula {label}"), part_bad, part_skipped));
    Ok(out)
}

/// `det(diag(x) - A)` as a signed sum of principal minors.
pub fn minors_lemma(max_vars: usize, seed: u64) -> Vec<IdentityCheck> {
    test_matrices(max_vars, seed)
        .into_iter()
        .map(|(label, a)| IdentityCheck::new(format!("minors expansion {label}"), minors_expansion_check(&a, 8, seed)))
        .collect()
}

/// `τ(H_N, m) = P_2(m)···P_{N-1}(m)` for `N <= max_vars`, `m ∈ values^N`.
pub fn lemma_tau(max_vars: usize, values: &[u32]) -> Result<Vec<IdentityCheck>> {
    (1..=max_vars)
        .map(|n| {
            Ok(IdentityCheck::new(format!("tree sum for H_{n}, m in {values:?}^{n}"), lemma_tau_check(n, values)?))
        })
        .collect()
}

/// The product formula for `z_i` with `A = -ρ H_N`, for each `(g, N)`.
pub fn z_products(cases: &[(u32, usize)], bound: u32) -> Result<Vec<IdentityCheck>> {
    cases.par_iter().map(|&(g, n)| z_product_check(g, n, bound)).collect()
}

pub fn asymptotic_fits(cases: &[(f64, f64)], tol: f64) -> Result<Vec<IdentityCheck>> {
    cases
        .iter()
        .map(|&(a, t)| {
            let r = verify_asymptotics(a, t)?;
            let check = IdentityCheck::new(format!("asymptotic fit a={a} T={t}"), r.passed(tol));
            Ok(check.with_detail(format!("c-1 residual {:.3e}, c0 residual {:.3e}", r.residuals[0], r.residuals[1])))
        })
        .collect()
}

pub fn pi_squared_over_15(tol: f64) -> Result<IdentityCheck> {
    let (cm1, _) = c_constants(2.0, 1.0)?;
    let err = (cm1 - std::f64::consts::PI.powi(2) / 15.0).abs();
    Ok(IdentityCheck::new("c-1(a=2, T=1) = π²/15", err < tol).with_detail(format!("error {err:.3e}")))
}

/// `Li₂(x) + Li₂(1-x) = π²/6 - log x log(1-x)` on a grid in `(0, 1)`.
pub fn dilog_reflection(tol: f64) -> Result<IdentityCheck> {
    let mut worst = 0f64;
    for k in 1..50 {
        let x = k as f64 / 50.0;
        let lhs = dilog(x)? + dilog(1.0 - x)?;
        let rhs = std::f64::consts::PI.powi(2) / 6.0 - x.ln() * (1.0 - x).ln();
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(IdentityCheck::new("dilog reflection", worst < tol).with_detail(format!("max error {worst:.3e}")))
}

/// Landen series against the saddle solver and the Catalan numbers, plus the
/// derivative identity and the tree-function limit.
pub fn landen_checks(order: u32) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let sol = solve_saddle(&ExponentMatrix::from_ints(&[&[-2]])?, 6)?;
    let saddle: Vec<BigRat> = (0..=6).map(|k| sol.z[0].coefficient(&[k])).collect();
    let landen = landen_series(&rat(-2, 1), 6)?.z;
    out.push(if landen == saddle {
        IdentityCheck::new("Landen a=-2 vs saddle solver", true)
    } else {
        IdentityCheck::failed("Landen a=-2 vs saddle solver", format!("{landen:?} vs {saddle:?}"))
    });
    let catalan: Vec<BigRat> = [1, -1, 2, -5, 14, -42, 132].iter().map(|&c| rat(c, 1)).collect();
    out.push(IdentityCheck::new("Landen a=2 signed Catalan", landen_series(&rat(2, 1), 6)?.z == catalan));
    for a in [rat(2, 1), rat(3, 1), rat(-2, 1), rat(5, 2)] {
        out.push(IdentityCheck::new(
            format!("T dc-1/dT = -log z, a={a}, order {order}"),
            derivative_identity_check(&a, order)?,
        ));
    }
    out.push(IdentityCheck::new("tree-function limit to order 12", polya_limit_check(12)?));
    Ok(out)
}
