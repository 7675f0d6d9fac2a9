//! Free chain and cochain complexes of finite rank, and their homology.
//!
//! Complexes are finite: degrees above [`ChainComplex::top_degree`] are zero
//! groups. A complex truncated at degree `N` therefore only reports the true
//! homology of the untruncated object in degrees below `N`; callers that
//! truncate build one degree more than they query.

use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::fp::fp_rank_with_pivots;
use super::smith::smith_with_unit_minor;
use super::{smith_normal_form, AbelianGroupPresentation, LinalgError, PivotPolicy, SmithForm, SparseIntMatrix};

#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `boundaries[n - 1]` is the boundary from degree `n` to degree `n - 1`.
    boundaries: Vec<SparseIntMatrix>,
    /// Smith form of each boundary and the columns of a unimodular minor.
    smith: Vec<OnceLock<(SmithForm, Vec<usize>)>>,
}

impl ChainComplex {
    /// `dims[n]` is the rank in degree `n`; `boundaries[k]` must have shape
    /// `dims[k] x dims[k + 1]`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseIntMatrix>) -> Result<Self, LinalgError> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(LinalgError::DegreeCount { dims: dims.len(), boundaries: boundaries.len() });
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.shape() != (dims[k], dims[k + 1]) {
                return Err(LinalgError::BoundaryShape {
                    degree: k + 1,
                    expected: (dims[k], dims[k + 1]),
                    found: b.shape(),
                });
            }
        }
        let smith = boundaries.iter().map(|_| OnceLock::new()).collect();
        Ok(ChainComplex { dims, boundaries, smith })
    }

    pub fn empty() -> Self {
        ChainComplex { dims: Vec::new(), boundaries: Vec::new(), smith: Vec::new() }
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// The boundary out of degree `n`, absent for `n = 0` and above the top.
    pub fn boundary(&self, n: usize) -> Option<&SparseIntMatrix> {
        n.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    pub fn boundaries(&self) -> &[SparseIntMatrix] {
        &self.boundaries
    }

    /// Smith form of the boundary out of degree `n`, computed once.
    ///
    /// Rows of `∂_n` are first cut down using `∂_{n-1}`: if `∂_{n-1}[R, C]`
    /// is unimodular, the rows of `∂_{n-1}` indexed by `R` give a unimodular
    /// change of basis of `C_{n-1}` that turns the rows `C` of `∂_n` into
    /// zero, because `∂_{n-1} ∂_n = 0`. Dropping them keeps the Smith form
    /// and spares the eliminator the fill-in those rows would collect.
    pub fn smith(&self, n: usize) -> Option<&SmithForm> {
        self.smith_entry(n).map(|(form, _)| form)
    }

    fn smith_entry(&self, n: usize) -> Option<&(SmithForm, Vec<usize>)> {
        let k = n.checked_sub(1)?;
        let b = self.boundaries.get(k)?;
        Some(self.smith[k].get_or_init(|| {
            let dropped = self.smith_entry(n - 1).map_or(&[][..], |(_, cols)| cols.as_slice());
            if dropped.is_empty() {
                return smith_with_unit_minor(b, PivotPolicy::default());
            }
            let mut keep = vec![true; b.rows()];
            for &r in dropped {
                keep[r] = false;
            }
            let rows: Vec<usize> = (0..b.rows()).filter(|&r| keep[r]).collect();
            let cols: Vec<usize> = (0..b.cols()).collect();
            smith_with_unit_minor(&b.submatrix(&rows, &cols), PivotPolicy::default())
        }))
    }

    fn rank(&self, n: usize) -> usize {
        self.smith(n).map_or(0, SmithForm::rank)
    }

    fn torsion_below(&self, n: usize) -> &[BigUint] {
        self.smith(n + 1).map_or(&[], SmithForm::nontrivial_divisors)
    }

    /// Computes every Smith form. Each degree reuses the one below it, so
    /// this runs in degree order.
    pub fn prepare(&self) {
        self.smith(self.boundaries.len());
    }

    /// The dual cochain complex, built from the transposed boundaries.
    pub fn dual(&self) -> CochainComplex {
        let coboundaries = self.boundaries.iter().map(SparseIntMatrix::transpose).collect();
        CochainComplex::from_parts(self.dims.clone(), coboundaries)
    }
}

/// `Hom(C, Z)` of a [`ChainComplex`]: `coboundaries[n]` maps degree `n` to
/// degree `n + 1`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    dims: Vec<usize>,
    coboundaries: Vec<SparseIntMatrix>,
    smith: Vec<OnceLock<SmithForm>>,
}

impl CochainComplex {
    /// `dims[n]` is the rank in degree `n`; `coboundaries[k]` must have shape
    /// `dims[k + 1] x dims[k]`.
    pub fn new(dims: Vec<usize>, coboundaries: Vec<SparseIntMatrix>) -> Result<Self, LinalgError> {
        if coboundaries.len() + 1 != dims.len().max(1) {
            return Err(LinalgError::DegreeCount { dims: dims.len(), boundaries: coboundaries.len() });
        }
        for (k, d) in coboundaries.iter().enumerate() {
            if d.shape() != (dims[k + 1], dims[k]) {
                return Err(LinalgError::BoundaryShape {
                    degree: k,
                    expected: (dims[k + 1], dims[k]),
                    found: d.shape(),
                });
            }
        }
        Ok(Self::from_parts(dims, coboundaries))
    }

    fn from_parts(dims: Vec<usize>, coboundaries: Vec<SparseIntMatrix>) -> Self {
        let smith = coboundaries.iter().map(|_| OnceLock::new()).collect();
        CochainComplex { dims, coboundaries, smith }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    /// The coboundary out of degree `n`.
    pub fn coboundary(&self, n: usize) -> Option<&SparseIntMatrix> {
        self.coboundaries.get(n)
    }

    pub fn smith(&self, n: usize) -> Option<&SmithForm> {
        let b = self.coboundaries.get(n)?;
        Some(self.smith[n].get_or_init(|| smith_normal_form(b)))
    }

    pub fn prepare(&self) {
        (0..self.coboundaries.len()).into_par_iter().for_each(|n| {
            self.smith(n);
        });
    }
}

pub fn homology_at(c: &ChainComplex, n: usize) -> AbelianGroupPresentation {
    let free = c.dim(n) - c.rank(n) - c.rank(n + 1);
    AbelianGroupPresentation::from_cyclic(free, c.torsion_below(n).iter().cloned())
}

/// `H_n(C; Z/m) = H_n(C) (x) Z/m + Tor(H_{n-1}(C), Z/m)`, valid because every
/// chain group is free.
pub fn homology_mod(c: &ChainComplex, n: usize, m: u64) -> Result<AbelianGroupPresentation, LinalgError> {
    let m = modulus(m)?;
    let here = homology_at(c, n).tensor_cyclic(&m);
    let below = match n.checked_sub(1) {
        Some(k) => homology_at(c, k).tor_cyclic(&m),
        None => AbelianGroupPresentation::zero(),
    };
    Ok(here.direct_sum(&below))
}

/// Dimension of `H_n(C; F_p)` by elimination over the prime field.
///
/// As for the integral Smith forms, rows of each boundary that an invertible
/// minor of the boundary below makes redundant are dropped first.
pub fn fp_homology_dim(c: &ChainComplex, n: usize, p: u64) -> Result<usize, LinalgError> {
    let mut ranks = vec![0usize; n + 2];
    let mut dropped: Vec<usize> = Vec::new();
    for k in 1..=n + 1 {
        let Some(b) = c.boundary(k) else { break };
        let b = if dropped.is_empty() {
            b.clone()
        } else {
            let mut keep = vec![true; b.rows()];
            for &r in &dropped {
                keep[r] = false;
            }
            let rows: Vec<usize> = (0..b.rows()).filter(|&r| keep[r]).collect();
            b.submatrix(&rows, &(0..b.cols()).collect::<Vec<_>>())
        };
        let (rank, pivots) = fp_rank_with_pivots(&b, p)?;
        ranks[k] = rank;
        dropped = pivots;
    }
    Ok(c.dim(n) - ranks[n] - ranks[n + 1])
}

pub fn cohomology_at(c: &CochainComplex, n: usize) -> AbelianGroupPresentation {
    let rank = |k: usize| c.smith(k).map_or(0, SmithForm::rank);
    let incoming = n.checked_sub(1).and_then(|k| c.smith(k));
    let free = c.dim(n) - rank(n) - incoming.map_or(0, SmithForm::rank);
    let torsion = incoming.map_or(&[][..], SmithForm::nontrivial_divisors);
    AbelianGroupPresentation::from_cyclic(free, torsion.iter().cloned())
}

/// `H^n(C; Z/m) = H^n(C) (x) Z/m + Tor(H^{n+1}(C), Z/m)` for the free
/// cochain complex `Hom(C, Z)`.
pub fn cohomology_mod(c: &CochainComplex, n: usize, m: u64) -> Result<AbelianGroupPresentation, LinalgError> {
    let m = modulus(m)?;
    let here = cohomology_at(c, n).tensor_cyclic(&m);
    // Only the torsion of H^{n+1} matters, and it is read off the coboundary out of degree n.
    let above = c.smith(n).map_or_else(AbelianGroupPresentation::zero, |s| {
        AbelianGroupPresentation::from_cyclic(0, s.nontrivial_divisors().iter().cloned())
    });
    Ok(here.direct_sum(&above.tor_cyclic(&m)))
}

/// `H^n(Hom(C, Z))` read off the Smith forms of `C` itself. A matrix and its
/// transpose share a Smith form, so this agrees with [`cohomology_at`] on
/// [`ChainComplex::dual`] without a second elimination.
pub fn dual_cohomology_at(c: &ChainComplex, n: usize) -> AbelianGroupPresentation {
    let free = c.dim(n) - c.rank(n) - c.rank(n + 1);
    let torsion = c.smith(n).map_or(&[][..], SmithForm::nontrivial_divisors);
    AbelianGroupPresentation::from_cyclic(free, torsion.iter().cloned())
}

/// [`cohomology_mod`] for the dual of `c`, from the Smith forms of `c`.
pub fn dual_cohomology_mod(c: &ChainComplex, n: usize, m: u64) -> Result<AbelianGroupPresentation, LinalgError> {
    let m = modulus(m)?;
    let here = dual_cohomology_at(c, n).tensor_cyclic(&m);
    let above = AbelianGroupPresentation::from_cyclic(0, c.torsion_below(n).iter().cloned());
    Ok(here.direct_sum(&above.tor_cyclic(&m)))
}

/// True iff consecutive boundaries compose to zero.
pub fn compose_check(c: &ChainComplex) -> bool {
    c.boundaries.windows(2).all(|w| match w[0].mul(&w[1]) {
        Ok(product) => product.is_zero(),
        Err(_) => false,
    })
}

fn modulus(m: u64) -> Result<BigUint, LinalgError> {
    if m < 2 {
        return Err(LinalgError::InvalidModulus(m));
    }
    Ok(BigUint::from(m))
}
