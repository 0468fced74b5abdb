//! Refined Kac polynomials of the one-vertex, `g`-loop quiver.
//!
//! The crate computes the refined polynomials `A_λ(q)` from the plethystic
//! logarithm of a truncated multivariate Hua series and evaluates the closed
//! formula for `A_λ(1)`. The [`inversion`] and [`asymptotics`] modules check
//! the identities that link the two.
//!
//! Everything on the exact side is computed over arbitrary-precision
//! rationals. Floating point only appears in [`asymptotics`].

#![allow(clippy::needless_range_loop)]

pub mod asymptotics;
pub mod closedform;
pub mod error;
pub mod exactalg;
pub mod hua;
pub mod inversion;
pub mod partitions;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{BigRat, DualPoly, MultiSeries, QPoly, QRational};
pub use partitions::{MultVector, Partition};
