//! Boundary matrices of the rack complex and of its degenerate and quandle
//! parts.
//!
//! For an `n`-tuple the two face maps at position `j` are
//!
//! ```text
//! d⁰_j(x_1, ..., x_n) = (x_1, ..., x_{j-1}, x_{j+1}, ..., x_n)
//! d¹_j(x_1, ..., x_n) = (x_1, ..., x_{j-1}, x_j ▷ x_{j+1}, ..., x_j ▷ x_n)
//! ```
//!
//! and the boundary is `Σ_j (-1)^j (d⁰_j - d¹_j)` for `j = 1..n`. In degree two
//! this is `(x, y) ↦ (x ▷ y) - (y)`; the opposite global sign would give the
//! same homology. At `j = n` both faces agree and cancel, but both are still
//! emitted.

use crate::algebra::{FiniteQuandle, FiniteRack};
use crate::linalg::{Integer, SparseIntMatrix};

use super::basis::{degenerate_codes, encode, BasisKind, TupleBasis};

/// Signs attached to the two face families. Only the unit tests perturb these.
#[derive(Clone, Copy, Debug)]
pub(crate) struct FaceSigns {
    pub(crate) deletion: i64,
    pub(crate) action: i64,
    /// Flip the action face at this position (1-based).
    pub(crate) flip_action_at: Option<usize>,
}

impl Default for FaceSigns {
    fn default() -> Self {
        FaceSigns { deletion: 1, action: -1, flip_action_at: None }
    }
}

/// Faces of one tuple as `(code of face, coefficient)`, for a rack of the
/// given size.
fn faces(rack: &FiniteRack, tuple: &[usize], signs: FaceSigns, out: &mut Vec<(usize, i64)>) {
    let size = rack.size();
    let n = tuple.len();
    let mut face = Vec::with_capacity(n.saturating_sub(1));
    for j in 1..=n {
        let sign = if j % 2 == 0 { 1 } else { -1 };

        face.clear();
        face.extend(tuple[..j - 1].iter().copied());
        face.extend(tuple[j..].iter().copied());
        out.push((encode(&face, size), sign * signs.deletion));

        let acting = tuple[j - 1];
        face.clear();
        face.extend(tuple[..j - 1].iter().copied());
        face.extend(tuple[j..].iter().map(|&y| rack.op(acting, y)));
        let flip = if signs.flip_action_at == Some(j) { -1 } else { 1 };
        out.push((encode(&face, size), sign * signs.action * flip));
    }
}

/// The boundary from `columns` (degree `n`) to `rows` (degree `n - 1`).
/// Faces outside `rows` are dropped.
pub(crate) fn boundary_between(
    rack: &FiniteRack,
    columns: &TupleBasis,
    rows: &TupleBasis,
    signs: FaceSigns,
) -> SparseIntMatrix {
    debug_assert_eq!(columns.degree(), rows.degree() + 1);
    let mut scratch = Vec::new();
    let entries = columns
        .tuples()
        .map(|tuple| {
            scratch.clear();
            faces(rack, &tuple, signs, &mut scratch);
            scratch
                .iter()
                .filter_map(|&(code, v)| rows.index_of_code(code).map(|r| (r, Integer::from(v))))
                .collect()
        })
        .collect();
    SparseIntMatrix::from_columns(rows.len(), entries)
}

/// The rack boundary out of degree `n`, of shape `|X|^(n-1) x |X|^n` in the
/// lexicographic tuple bases. For `n = 0` this is the `0 x 1` zero map.
pub fn rack_boundary_matrix(rack: &FiniteRack, n: usize) -> SparseIntMatrix {
    match n.checked_sub(1) {
        None => SparseIntMatrix::zeros(0, 1),
        Some(below) => boundary_between(
            rack,
            &TupleBasis::new(rack.size(), n, BasisKind::Full),
            &TupleBasis::new(rack.size(), below, BasisKind::Full),
            FaceSigns::default(),
        ),
    }
}

/// The boundary induced on the nondegenerate tuples. Degenerate faces are
/// discarded, which is the projection onto the quotient by the degenerate
/// subcomplex.
pub fn quandle_boundary_matrix(quandle: &FiniteQuandle, n: usize) -> SparseIntMatrix {
    match n.checked_sub(1) {
        None => SparseIntMatrix::zeros(0, 1),
        Some(below) => boundary_between(
            quandle.as_rack(),
            &TupleBasis::new(quandle.size(), n, BasisKind::Nondegenerate),
            &TupleBasis::new(quandle.size(), below, BasisKind::Nondegenerate),
            FaceSigns::default(),
        ),
    }
}

/// The boundary restricted to the degenerate subcomplex.
pub fn degenerate_boundary_matrix(quandle: &FiniteQuandle, n: usize) -> SparseIntMatrix {
    let size = quandle.size();
    match n.checked_sub(1) {
        None => SparseIntMatrix::zeros(0, 0),
        Some(below) => boundary_between(
            quandle.as_rack(),
            &TupleBasis::new(size, n, BasisKind::Degenerate),
            &TupleBasis::new(size, below, BasisKind::Degenerate),
            FaceSigns::default(),
        ),
    }
}

/// Positions of the degenerate tuples in the full lexicographic basis of
/// degree `n`; empty for `n <= 1`.
pub fn degenerate_inclusion(quandle: &FiniteQuandle, n: usize) -> Vec<usize> {
    degenerate_codes(quandle.size(), n)
}

/// Whether the rack boundary of every degenerate `n`-tuple is a combination
/// of degenerate `(n-1)`-tuples. Holds for quandles; fails for general racks.
pub fn degenerate_support_check(rack: &FiniteRack, n: usize) -> bool {
    let Some(below) = n.checked_sub(1) else {
        return true;
    };
    let columns = TupleBasis::new(rack.size(), n, BasisKind::Degenerate);
    let full = TupleBasis::new(rack.size(), below, BasisKind::Full);
    let degenerate_below = TupleBasis::new(rack.size(), below, BasisKind::Degenerate);
    let m = boundary_between(rack, &columns, &full, FaceSigns::default());
    let supported = m.triplets().all(|(r, _, _)| degenerate_below.index_of_code(full.codes()[r]).is_some());
    supported
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_dihedral, make_trivial, FiniteRack};
    use crate::linalg::{compose_check, ChainComplex};

    #[test]
    fn degree_one_is_zero() {
        let q = make_dihedral(5);
        let d1 = rack_boundary_matrix(q.as_rack(), 1);
        assert_eq!(d1.shape(), (1, 5));
        assert!(d1.is_zero());
    }

    #[test]
    fn trivial_rack_has_zero_boundaries() {
        for h in 1..=3 {
            let q = make_trivial(h);
            for n in 1..=4 {
                assert!(rack_boundary_matrix(q.as_rack(), n).is_zero());
                assert!(quandle_boundary_matrix(&q, n).is_zero());
            }
        }
    }

    /// Degree two on dihedral(3): column (0, 1) is e(0▷1) - e(1) = e(2) - e(1).
    #[test]
    fn dihedral_three_pair() {
        let q = make_dihedral(3);
        let d2 = rack_boundary_matrix(q.as_rack(), 2);
        assert_eq!(d2.shape(), (3, 9));
        let col = 1; // (0, 1)
        assert_eq!(d2.get(2, col), Integer::from(1));
        assert_eq!(d2.get(1, col), Integer::from(-1));
        assert_eq!(d2.get(0, col), Integer::ZERO);
        assert_eq!(quandle_boundary_matrix(&q, 2).cols(), 6);
    }

    fn complex(rack: &FiniteRack, top: usize, signs: FaceSigns) -> ChainComplex {
        let bases: Vec<_> = (0..=top).map(|n| TupleBasis::new(rack.size(), n, BasisKind::Full)).collect();
        let boundaries = (1..=top).map(|n| boundary_between(rack, &bases[n], &bases[n - 1], signs)).collect();
        ChainComplex::new(bases.iter().map(TupleBasis::len).collect(), boundaries).unwrap()
    }

    #[test]
    fn boundaries_square_to_zero() {
        let q = make_dihedral(4);
        assert!(compose_check(&complex(q.as_rack(), 4, FaceSigns::default())));
    }

    /// Negative control: a sign error in one action face breaks d∘d = 0.
    #[test]
    fn injected_sign_error_is_caught() {
        let q = make_dihedral(3);
        let broken = FaceSigns { flip_action_at: Some(1), ..FaceSigns::default() };
        assert!(!compose_check(&complex(q.as_rack(), 3, broken)));
        // Flipping the whole action family gives d⁰ + d¹, which is again a differential.
        let summed = FaceSigns { action: 1, ..FaceSigns::default() };
        assert!(compose_check(&complex(q.as_rack(), 3, summed)));
    }

    #[test]
    fn degenerate_support() {
        let q = make_dihedral(3);
        for n in 0..=4 {
            assert!(degenerate_support_check(q.as_rack(), n));
        }
        // The swap rack is not a quandle and its degenerate tuples leak.
        let swap = FiniteRack::from_rows(vec![vec![1, 0], vec![1, 0]]).unwrap();
        assert!(!degenerate_support_check(&swap, 2));
    }

    #[test]
    fn inclusion_sizes() {
        let q = make_trivial(2);
        assert_eq!(degenerate_inclusion(&q, 2), vec![0, 3]);
        assert!(degenerate_inclusion(&q, 1).is_empty());
        let q = make_dihedral(4);
        assert_eq!(degenerate_inclusion(&q, 3).len(), 64 - 4 * 9);
    }
}
