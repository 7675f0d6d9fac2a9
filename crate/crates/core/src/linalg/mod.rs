//! Exact integer linear algebra: sparse matrices, Smith normal form, and
//! homology of free complexes with integer and `Z/m` coefficients.

mod complex;
mod fp;
mod group;
mod integer;
mod smith;
mod sparse;

pub use complex::{
    cohomology_at, cohomology_mod, compose_check, dual_cohomology_at, dual_cohomology_mod, fp_homology_dim, homology_at, homology_mod, ChainComplex,
    CochainComplex,
};
pub use fp::{fp_rank, is_prime};
pub use group::AbelianGroupPresentation;
pub use integer::Integer;
pub use smith::{smith_normal_form, smith_normal_form_with, PivotPolicy, SmithForm};
pub use sparse::SparseIntMatrix;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("cannot multiply {left:?} by {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("boundary out of degree {degree} has shape {found:?}, expected {expected:?}")]
    BoundaryShape { degree: usize, expected: (usize, usize), found: (usize, usize) },
    #[error("{dims} chain groups need {} boundaries, got {boundaries}", .dims.saturating_sub(1))]
    DegreeCount { dims: usize, boundaries: usize },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}
