//! Quillen cohomology with coefficients in the trivial Beck module `A × X`.
//!
//! For both racks and quandles, `D^n(X; A)` is the cohomology of the theory's
//! complex one degree up: `D^n(X; A) = HR^{n+1}(X; A)` for racks and
//! `HQ^{n+1}(X; A)` for quandles. No resolution is built.

use crate::algebra::{validate_quandle, FiniteRack};
use crate::linalg::AbelianGroupPresentation;

use super::{AlgebraicTheory, CoefficientSpec, HomologyError, RackComplexBundle};

impl RackComplexBundle {
    /// `D^n(X; A)`; needs `n + 1 <= max_degree`.
    pub fn quillen_cohomology(
        &self,
        theory: AlgebraicTheory,
        n: usize,
        coeff: CoefficientSpec,
    ) -> Result<AbelianGroupPresentation, HomologyError> {
        self.cohomology_at(theory.complex(), n + 1, coeff)
    }
}

/// `D^n(X; A)` for the theory of racks or of quandles.
pub fn quillen_cohomology(
    rack: &FiniteRack,
    theory: AlgebraicTheory,
    n: usize,
    coeff: CoefficientSpec,
) -> Result<AbelianGroupPresentation, HomologyError> {
    let bundle = match theory {
        AlgebraicTheory::Rack => RackComplexBundle::new(rack.clone(), n + 1),
        AlgebraicTheory::Quandle => {
            let quandle = validate_quandle(rack.clone()).map_err(HomologyError::NotAQuandle)?;
            RackComplexBundle::for_quandle(quandle, n + 1)
        }
    };
    bundle.quillen_cohomology(theory, n, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_dihedral, make_trivial};
    use crate::homology::Theory;

    #[test]
    fn point() {
        let p = make_trivial(1);
        let d0 = quillen_cohomology(p.as_rack(), AlgebraicTheory::Quandle, 0, CoefficientSpec::Cyclic(2)).unwrap();
        assert_eq!(d0.order(), Some(2u32.into()));
        // The point has no nondegenerate tuples above degree one.
        for n in 1..3 {
            assert!(quillen_cohomology(p.as_rack(), AlgebraicTheory::Quandle, n, CoefficientSpec::Integers)
                .unwrap()
                .is_trivial());
        }
    }

    #[test]
    fn shift_matches_cohomology() {
        let q = make_dihedral(3);
        let bundle = RackComplexBundle::for_quandle(q.clone(), 3);
        for n in 0..3 {
            for coeff in [CoefficientSpec::Integers, CoefficientSpec::Cyclic(3)] {
                let d = quillen_cohomology(q.as_rack(), AlgebraicTheory::Quandle, n, coeff).unwrap();
                assert_eq!(d, bundle.cohomology_at(Theory::Quandle, n + 1, coeff).unwrap());
            }
        }
    }

    #[test]
    fn quandle_theory_rejects_racks() {
        let swap = FiniteRack::from_rows(vec![vec![1, 0], vec![1, 0]]).unwrap();
        assert!(matches!(
            quillen_cohomology(&swap, AlgebraicTheory::Quandle, 0, CoefficientSpec::Integers),
            Err(HomologyError::NotAQuandle(_))
        ));
        assert!(quillen_cohomology(&swap, AlgebraicTheory::Rack, 0, CoefficientSpec::Integers).is_ok());
    }
}
