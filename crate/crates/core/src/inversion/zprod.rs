use super::matrix::ExponentMatrix;
use super::saddle::solve_saddle;
use crate::error::{Error, Result};
use crate::exactalg::{monomials_up_to, BigRat, MultiSeries};
use crate::hua::refine;
use crate::partitions::MultVector;
use crate::report::IdentityCheck;

/// `z_i = Π_m (1 - x^m)^{m_i A_m(1)}` for `A = -ρ H_N`, with `A_m(1)` taken
/// from the Hua-series path, exact to weight `bound`.
pub fn z_product_check(g: u32, n: usize, bound: u32) -> Result<IdentityCheck> {
    if g == 0 || n == 0 {
        return Err(Error::invalid("z-product check needs g >= 1 and N >= 1"));
    }
    let rho = 2 * g as i64 - 2;
    let sol = solve_saddle(&ExponentMatrix::scaled_tadpole(n, -rho), bound)?;
    let table = refine(g, bound)?;

    let mut factors = Vec::new();
    for m in monomials_up_to(n, bound).into_iter().skip(1) {
        let lambda = MultVector::new(m.clone()).to_partition();
        let a1 = table.a_at_one(&lambda)?;
        let one_minus =
            &MultiSeries::one(n, bound) - &MultiSeries::monomial(n, bound, m.clone(), BigRat::from_integer(1.into()));
        factors.push((m, a1, one_minus));
    }

    let name = format!("z_product(g={g}, N={n}, W={bound})");
    for i in 0..n {
        let mut rhs = MultiSeries::one(n, bound);
        for (m, a1, one_minus) in &factors {
            let e = a1 * BigRat::from_integer(m[i].into());
            if e != BigRat::from_integer(0.into()) {
                rhs = &rhs * &one_minus.pow(&e)?;
            }
        }
        let check = IdentityCheck::compare_series(format!("{name} z_{}", i + 1), &sol.z[i], &rhs);
        if !check.passed {
            return Ok(IdentityCheck { name, ..check });
        }
    }
    Ok(IdentityCheck::new(name, true))
}
