//! Affine pavings of type A Hessenberg varieties `Hess(X_λ, h)` with `h(i) < i`,
//! the Springer fiber being the case `h = (0, 1, …, n-1)`.
//!
//! The crate is split into:
//!
//! * [`combinatorics`]: compositions, Hessenberg functions, permutations and tableaux.
//! * [`paving`]: the cells of the paving, their dimensions, Poincaré polynomials,
//!   the zero-dimensional cell and inversion profiles.
//! * [`exactla`]: exact matrices over rationals, prime fields and multivariate
//!   polynomials; the generic flags parametrizing each cell.
//! * [`oracle`]: brute-force point counts over small prime fields.
//! * [`verify`]: invariant suites that tie the above together.
//! * [`cli`]: report generation behind the `hesspave` binary.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactla;
pub mod oracle;
pub mod paving;
pub mod verify;

pub use combinatorics::{BoxPosition, Composition, HessenbergFunction, Permutation, Tableau};
pub use error::{Error, Result};
pub use paving::{CellDescriptor, InversionProfile, InversionSet, PoincareData};
