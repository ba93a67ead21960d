//! Exact linear algebra over `Q`, `F_p` and `Q[x_ab]`, and the generic flags
//! built from it.
//!
//! All matrices are 1-indexed and every elimination uses unit pivots only, so
//! the same code answers membership questions identically in the coordinates
//! when run over polynomials.

mod bk;
mod bruhat;
mod flag;
mod matrix;
mod poly;
mod scalar;

pub use bk::{
    bk_generator, bk_keys, bk_symbolic, difference_residual, dw_flag, generic_coordinates, generic_flag,
    generic_hess_flag, hess_zero_coordinates,
};
pub use bruhat::{bn_split, bruhat_canonical_form, factor_unipotent, project_cell, UnipotentFactors, UnipotentPattern};
pub use flag::{hessenberg_space_contains, nilpotent_matrix, verify_flag_membership, Flag};
pub use matrix::{Echelon, ExactMatrix};
pub use poly::{Monomial, Poly, Var};
pub use scalar::{FiniteField, Fp, Scalar, ScalarDomain, SUPPORTED_PRIMES};
