//! The one-variable q-series `Σ q^{an²/2} Tⁿ / (q)_n` near `q = 1`.
//!
//! [`verify_asymptotics`] compares a least-squares fit of its logarithm
//! against the dilogarithm closed forms for `c₋₁` and `c₀`. The exact side
//! ([`landen_series`], [`polya_limits`]) works with the trinomial root as a
//! power series in `T`.

mod landen;
mod numeric;

pub use landen::{
    derivative_identity_check, landen_series, landen_z_power, polya_limit_check, polya_limits, LandenSeries,
};
pub use numeric::{c_constants, dilog, qseries_logsum, trinomial_root, verify_asymptotics, AsymReport, FIT_EXPONENTS};
