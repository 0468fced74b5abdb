//! One pass/fail line per acceptance criterion. Exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use kacpoly::inversion::DEFAULT_SEED;
use kacpoly::report::IdentityCheck;
use kacpoly::verify::{
    asymptotic_fits, column_formula, corollary, inversion_identities, landen_checks, lemma_tau, pi_squared_over_15,
    positivity_survey, scaling, single_row, tables, theorem_vs_series, z_products,
};
use kacpoly::Result;

struct Outcome {
    passed: bool,
    summary: String,
}

fn from_checks(checks: Vec<IdentityCheck>) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| match (&c.witness, &c.detail) {
            (Some(w), _) => format!("{} at x^{:?}: {} vs {}", c.name, w.monomial, w.left, w.right),
            (None, Some(d)) => format!("{}: {d}", c.name),
            (None, None) => c.name.clone(),
        })
        .collect();
    Outcome {
        passed: failed.is_empty(),
        summary: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            format!("{} of {} failed: {}", failed.len(), checks.len(), failed.join("; "))
        },
    }
}

fn table_reproduction() -> Result<Outcome> {
    let out = Command::new(env!("CARGO_BIN_EXE_kacpoly"))
        .args(["table", "--g", "2", "--nmax", "3"])
        .output()
        .expect("run kacpoly");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let expected = [
        "A_(1,1,1)(q) = q^10 + q^8 + q^7",
        "A_(2,1)(q) = q^6 + q^5",
        "A_(3)(q) = q^4",
        "A_3(q) = q^10 + q^8 + q^7 + q^6 + q^5 + q^4",
    ];
    let missing: Vec<&str> = expected.iter().copied().filter(|line| !stdout.lines().any(|l| l == *line)).collect();
    Ok(Outcome {
        passed: out.status.success() && missing.is_empty(),
        summary: if missing.is_empty() { "4 lines matched".into() } else { format!("missing {missing:?}") },
    })
}

fn closed_form_vs_series() -> Result<Outcome> {
    Ok(from_checks(theorem_vs_series(&tables(&[2, 3], 6)?)?))
}

fn column() -> Result<Outcome> {
    Ok(from_checks(column_formula(8, &[1, 2, 3, 4])?))
}

fn scaling_law() -> Result<Outcome> {
    let mut checks = scaling(&[1, 2], 3, 2)?;
    checks.extend(single_row(&tables(&[1, 2, 3], 6)?, 6));
    Ok(from_checks(checks))
}

fn leading_coefficient() -> Result<Outcome> {
    Ok(from_checks(corollary(6)?))
}

fn positivity() -> Result<Outcome> {
    Ok(from_checks(positivity_survey(&tables(&[1, 2, 3], 6)?)))
}

fn inversion_suite() -> Result<Outcome> {
    Ok(from_checks(inversion_identities(3, 5, DEFAULT_SEED)?))
}

fn tree_lemma() -> Result<Outcome> {
    Ok(from_checks(lemma_tau(5, &[1, 2, 3])?))
}

fn z_product() -> Result<Outcome> {
    Ok(from_checks(z_products(&[(2, 1), (2, 2), (3, 1), (2, 3)], 6)?))
}

fn asymptotics() -> Result<Outcome> {
    let mut checks = asymptotic_fits(&[(2.0, 1.0), (3.0, 0.5), (1.0, 1.0)], 1e-6)?;
    checks.push(pi_squared_over_15(1e-9)?);
    let mut outcome = from_checks(checks.clone());
    let details: Vec<String> = checks.iter().filter_map(|c| c.detail.clone()).collect();
    outcome.summary = format!("{}; {}", outcome.summary, details.join("; "));
    Ok(outcome)
}

fn landen() -> Result<Outcome> {
    Ok(from_checks(landen_checks(20)?))
}

type Criterion = (u32, &'static str, Option<Duration>, fn() -> Result<Outcome>);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "g=2 table up to |λ|=3, exact lines", Some(Duration::from_secs(5)), table_reproduction),
        (2, "closed formula vs series, |λ|<=6, g in {2,3}", Some(Duration::from_secs(120)), closed_form_vs_series),
        (3, "column formula vs closed formula, n<=8, ρ in 1..=4", None, column),
        (4, "scaling law and single-row polynomials", None, scaling_law),
        (5, "ρ-degree and leading coefficient, |λ|<=6", None, leading_coefficient),
        (6, "polynomiality and nonnegativity, g in {1,2,3}, |λ|<=6", None, positivity),
        (7, "inversion identities, N<=3, weight 5", Some(Duration::from_secs(120)), inversion_suite),
        (8, "tree sum for H_N, N<=5, m in {1,2,3}^N", None, tree_lemma),
        (9, "product formula for z_i to weight 6", None, z_product),
        (10, "asymptotic constants within 1e-6, π²/15 within 1e-9", Some(Duration::from_secs(60)), asymptotics),
        (11, "Landen series vs saddle solver and Catalan signs; derivative identity to order 20", None, landen),
    ];
    let mut failures = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (passed, summary) = match result {
            Ok(o) => (o.passed, o.summary),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = limit.is_none_or(|l| elapsed < l);
        let passed = passed && in_time;
        if !passed {
            failures += 1;
        }
        let timing = match limit {
            Some(l) => format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2}s", elapsed.as_secs_f64()),
        };
        println!("criterion {id:>2} {}: {name} [{timing}] {summary}", if passed { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} passed, {failures} failed", 11 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
