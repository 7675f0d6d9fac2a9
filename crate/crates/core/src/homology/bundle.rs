use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::algebra::{validate_quandle, AxiomViolation, FiniteQuandle, FiniteRack};
use crate::linalg::{
    dual_cohomology_at, dual_cohomology_mod, homology_at, homology_mod, AbelianGroupPresentation, ChainComplex,
    LinalgError,
};

use super::basis::{BasisKind, TupleBasis};
use super::boundary::{boundary_between, FaceSigns};
use super::HomologyError;

/// Which of the three complexes of a rack.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    /// The full rack complex on all tuples.
    Rack,
    /// The quotient by degenerate tuples; quandles only.
    Quandle,
    /// The degenerate subcomplex; quandles only.
    Degenerate,
}

impl Theory {
    pub const ALL: [Theory; 3] = [Theory::Rack, Theory::Quandle, Theory::Degenerate];

    fn basis_kind(self) -> BasisKind {
        match self {
            Theory::Rack => BasisKind::Full,
            Theory::Quandle => BasisKind::Nondegenerate,
            Theory::Degenerate => BasisKind::Degenerate,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Theory::Rack => "rack",
            Theory::Quandle => "quandle",
            Theory::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rack" => Ok(Theory::Rack),
            "quandle" => Ok(Theory::Quandle),
            "degenerate" => Ok(Theory::Degenerate),
            other => Err(HomologyError::Parse(format!("unknown theory {other:?}"))),
        }
    }
}

/// Coefficients: the integers or a finite cyclic group `Z/m` with `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientSpec {
    Integers,
    Cyclic(u64),
}

impl CoefficientSpec {
    pub fn cyclic(m: u64) -> Result<Self, HomologyError> {
        if m < 2 {
            return Err(LinalgError::InvalidModulus(m).into());
        }
        Ok(CoefficientSpec::Cyclic(m))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            CoefficientSpec::Integers => None,
            CoefficientSpec::Cyclic(m) => Some(m),
        }
    }

    /// The coefficient group itself, as a presentation.
    pub fn group(self) -> AbelianGroupPresentation {
        match self {
            CoefficientSpec::Integers => AbelianGroupPresentation::free(1),
            CoefficientSpec::Cyclic(m) => AbelianGroupPresentation::cyclic_power(&m.into(), 1),
        }
    }
}

impl fmt::Display for CoefficientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSpec::Integers => write!(f, "Z"),
            CoefficientSpec::Cyclic(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for CoefficientSpec {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Z" {
            return Ok(CoefficientSpec::Integers);
        }
        let m = s
            .strip_prefix("Z/")
            .and_then(|m| m.parse::<u64>().ok())
            .ok_or_else(|| HomologyError::Parse(format!("coefficients must be Z or Z/m, got {s:?}")))?;
        CoefficientSpec::cyclic(m)
    }
}

#[derive(Debug)]
struct BuiltComplex {
    bases: Vec<TupleBasis>,
    complex: ChainComplex,
}

/// The rack complex of one rack together with, for quandles, its degenerate
/// subcomplex and quandle quotient, all in lexicographic tuple bases.
///
/// Chain groups are built through degree `max_degree + 1`, so homology and
/// cohomology are exact in degrees `0..=max_degree`. Each complex is built on
/// first use and may be shared across threads.
#[derive(Debug)]
pub struct RackComplexBundle {
    rack: FiniteRack,
    quandle: Result<FiniteQuandle, Vec<AxiomViolation>>,
    max_degree: usize,
    built: [OnceLock<BuiltComplex>; 3],
}

impl RackComplexBundle {
    pub fn new(rack: FiniteRack, max_degree: usize) -> Self {
        let quandle = validate_quandle(rack.clone());
        RackComplexBundle { rack, quandle, max_degree, built: Default::default() }
    }

    pub fn for_quandle(quandle: FiniteQuandle, max_degree: usize) -> Self {
        let rack = quandle.as_rack().clone();
        RackComplexBundle { rack, quandle: Ok(quandle), max_degree, built: Default::default() }
    }

    pub fn rack(&self) -> &FiniteRack {
        &self.rack
    }

    pub fn quandle(&self) -> Option<&FiniteQuandle> {
        self.quandle.as_ref().ok()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn require(&self, theory: Theory) -> Result<(), HomologyError> {
        match (&self.quandle, theory) {
            (_, Theory::Rack) | (Ok(_), _) => Ok(()),
            (Err(violations), _) => Err(HomologyError::NotAQuandle(violations.clone())),
        }
    }

    fn built(&self, theory: Theory) -> Result<&BuiltComplex, HomologyError> {
        self.require(theory)?;
        Ok(self.built[theory.slot()].get_or_init(|| self.build(theory)))
    }

    fn build(&self, theory: Theory) -> BuiltComplex {
        let top = self.max_degree + 1;
        let kind = theory.basis_kind();
        let bases: Vec<TupleBasis> =
            (0..=top).into_par_iter().map(|n| TupleBasis::new(self.rack.size(), n, kind)).collect();
        let boundaries = (1..=top)
            .into_par_iter()
            .map(|n| boundary_between(&self.rack, &bases[n], &bases[n - 1], FaceSigns::default()))
            .collect();
        let dims = bases.iter().map(TupleBasis::len).collect();
        let complex = ChainComplex::new(dims, boundaries).expect("tuple bases give consistent shapes");
        BuiltComplex { bases, complex }
    }

    pub fn complex(&self, theory: Theory) -> Result<&ChainComplex, HomologyError> {
        Ok(&self.built(theory)?.complex)
    }

    pub fn bases(&self, theory: Theory) -> Result<&[TupleBasis], HomologyError> {
        Ok(&self.built(theory)?.bases)
    }

    fn check_degree(&self, n: usize) -> Result<(), HomologyError> {
        if n > self.max_degree {
            return Err(HomologyError::DegreeOutOfRange { degree: n, max: self.max_degree });
        }
        Ok(())
    }

    pub fn homology_at(
        &self,
        theory: Theory,
        n: usize,
        coeff: CoefficientSpec,
    ) -> Result<AbelianGroupPresentation, HomologyError> {
        self.check_degree(n)?;
        let c = self.complex(theory)?;
        Ok(match coeff {
            CoefficientSpec::Integers => homology_at(c, n),
            CoefficientSpec::Cyclic(m) => homology_mod(c, n, m)?,
        })
    }

    pub fn cohomology_at(
        &self,
        theory: Theory,
        n: usize,
        coeff: CoefficientSpec,
    ) -> Result<AbelianGroupPresentation, HomologyError> {
        self.check_degree(n)?;
        // Cohomology of Hom(C, A) comes from the Smith forms of C.
        let c = self.complex(theory)?;
        Ok(match coeff {
            CoefficientSpec::Integers => dual_cohomology_at(c, n),
            CoefficientSpec::Cyclic(m) => dual_cohomology_mod(c, n, m)?,
        })
    }

    /// Homology in degrees `0..=max_degree`.
    pub fn homology(
        &self,
        theory: Theory,
        coeff: CoefficientSpec,
    ) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
        self.complex(theory)?.prepare();
        (0..=self.max_degree).map(|n| self.homology_at(theory, n, coeff)).collect()
    }

    /// Cohomology in degrees `0..=max_degree`.
    pub fn cohomology(
        &self,
        theory: Theory,
        coeff: CoefficientSpec,
    ) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
        self.complex(theory)?.prepare();
        (0..=self.max_degree).map(|n| self.cohomology_at(theory, n, coeff)).collect()
    }
}

/// `HR_n(X; A)` for `n = 0..=max_degree`.
pub fn rack_homology(
    rack: &FiniteRack,
    max_degree: usize,
    coeff: CoefficientSpec,
) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
    RackComplexBundle::new(rack.clone(), max_degree).homology(Theory::Rack, coeff)
}

/// `HQ_n(X; A)` for `n = 0..=max_degree`.
pub fn quandle_homology(
    quandle: &FiniteQuandle,
    max_degree: usize,
    coeff: CoefficientSpec,
) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
    RackComplexBundle::for_quandle(quandle.clone(), max_degree).homology(Theory::Quandle, coeff)
}

/// Homology of the degenerate subcomplex for `n = 0..=max_degree`.
pub fn degenerate_homology(
    quandle: &FiniteQuandle,
    max_degree: usize,
    coeff: CoefficientSpec,
) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
    RackComplexBundle::for_quandle(quandle.clone(), max_degree).homology(Theory::Degenerate, coeff)
}

/// `HR^n(X; A)` for `n = 0..=max_degree`.
pub fn rack_cohomology(
    rack: &FiniteRack,
    max_degree: usize,
    coeff: CoefficientSpec,
) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
    RackComplexBundle::new(rack.clone(), max_degree).cohomology(Theory::Rack, coeff)
}

/// `HQ^n(X; A)` for `n = 0..=max_degree`.
pub fn quandle_cohomology(
    quandle: &FiniteQuandle,
    max_degree: usize,
    coeff: CoefficientSpec,
) -> Result<Vec<AbelianGroupPresentation>, HomologyError> {
    RackComplexBundle::for_quandle(quandle.clone(), max_degree).cohomology(Theory::Quandle, coeff)
}
