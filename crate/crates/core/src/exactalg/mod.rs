//! Exact arithmetic kernel.
//!
//! Scalars are [`BigRat`]. On top of them sit univariate polynomials
//! ([`QPoly`]), reduced rational functions ([`QRational`]), first-order dual
//! numbers ([`DualPoly`]) and sparse multivariate power series truncated by
//! weighted degree ([`MultiSeries`]).

mod dual;
mod qpoly;
mod ratfun;
mod ring;
mod series;

pub use dual::DualPoly;
pub use qpoly::QPoly;
pub use ratfun::QRational;
pub use ring::{gen_binomial, rat, Coefficient, Field, Ring};
pub use series::{monomials_up_to, weight, Monomial, MultiSeries};

pub type BigRat = num_rational::BigRational;
