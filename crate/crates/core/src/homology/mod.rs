//! The rack complex `CR`, the degenerate subcomplex `CD` and the quandle
//! complex `CQ = CR / CD` of a finite rack, with their homology, cohomology,
//! 2-cocycles and the Quillen cohomology of the theories of racks and
//! quandles with trivial coefficients.

mod basis;
pub(crate) mod boundary;
mod bundle;
mod cocycles;
mod quillen;

use std::fmt;
use std::str::FromStr;

pub use basis::{BasisKind, TupleBasis};
pub use boundary::{
    degenerate_boundary_matrix, degenerate_inclusion, degenerate_support_check, quandle_boundary_matrix,
    rack_boundary_matrix,
};
pub use bundle::{
    degenerate_homology, quandle_cohomology, quandle_homology, rack_cohomology, rack_homology, CoefficientSpec,
    RackComplexBundle, Theory,
};
pub use cocycles::{is_two_cocycle, principal_coboundary, two_cocycles, CocycleBasis};
pub use quillen::quillen_cohomology;

use crate::algebra::AxiomViolation;
use crate::linalg::LinalgError;

/// An algebraic theory whose Quillen cohomology is computed: racks or quandles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraicTheory {
    Rack,
    Quandle,
}

impl AlgebraicTheory {
    /// The complex whose cohomology this theory uses.
    pub fn complex(self) -> Theory {
        match self {
            AlgebraicTheory::Rack => Theory::Rack,
            AlgebraicTheory::Quandle => Theory::Quandle,
        }
    }
}

impl fmt::Display for AlgebraicTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.complex().fmt(f)
    }
}

impl FromStr for AlgebraicTheory {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rack" => Ok(AlgebraicTheory::Rack),
            "quandle" => Ok(AlgebraicTheory::Quandle),
            other => Err(HomologyError::Parse(format!("unknown theory {other:?}, expected rack or quandle"))),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("not a quandle: {}", .0.iter().take(5).map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    NotAQuandle(Vec<AxiomViolation>),
    #[error("degree {degree} exceeds the maximum degree {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
