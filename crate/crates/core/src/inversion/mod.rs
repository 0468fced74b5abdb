//! Multivariate Lagrange inversion for the saddle-point system
//! `1 - z_i = x_i Π_j z_j^{a_ij}` with a symmetric exponent matrix `A`.
//!
//! Everything here is exact over the rationals; `q` plays no role.

mod matrix;
mod saddle;
mod subsets;
mod trees;
mod zprod;

pub use matrix::{det, det_generic, ExponentMatrix};
pub use saddle::{
    big_d, big_d_det_form, big_d_subset_inverse, final_display_series, r_form_series, solve_saddle, z_monomial_direct,
    z_monomial_expansion, SaddleSolution,
};
pub use subsets::{minors_expansion_check, part_r_check, r_function, subsets, PartRCheck};
pub use trees::{lemma_tau_check, prufer_trees, tau_tree, MAX_TREE_VERTICES};
pub use zprod::z_product_check;

/// Seed used by every pseudo-random check unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 42;
