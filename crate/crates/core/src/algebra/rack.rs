use std::fmt;

use super::{AlgebraError, BinaryTable};

/// One failed rack or quandle axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Left translation by `x` hits `value` twice, at `first` and `second`.
    NotPermutation { x: usize, value: usize, first: usize, second: usize },
    /// `x ▷ (y ▷ z) != (x ▷ y) ▷ (x ▷ z)`.
    SelfDistributivity { x: usize, y: usize, z: usize },
    /// `x ▷ x != x`.
    Idempotence { x: usize, image: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::NotPermutation { x, value, first, second } => write!(
                f,
                "row {x} is not a permutation: {x}▷{first} = {x}▷{second} = {value}"
            ),
            AxiomViolation::SelfDistributivity { x, y, z } => {
                write!(f, "self-distributivity fails at (x, y, z) = ({x}, {y}, {z})")
            }
            AxiomViolation::Idempotence { x, image } => write!(f, "{x}▷{x} = {image}, not {x}"),
        }
    }
}

/// A finite rack: every left translation `y ↦ x ▷ y` is an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRack {
    table: BinaryTable,
    /// `inverse[x * size + z]` is the `y` with `x ▷ y = z`.
    inverse: Vec<usize>,
}

/// A rack with `x ▷ x = x` for every `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    rack: FiniteRack,
}

pub fn validate_rack(table: BinaryTable) -> Result<FiniteRack, Vec<AxiomViolation>> {
    let n = table.size();
    let mut violations = Vec::new();
    let mut inverse = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let v = table.get(x, y);
            let slot = &mut inverse[x * n + v];
            if *slot == usize::MAX {
                *slot = y;
            } else {
                violations.push(AxiomViolation::NotPermutation { x, value: v, first: *slot, second: y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = table.get(x, y);
            for z in 0..n {
                if table.get(x, table.get(y, z)) != table.get(xy, table.get(x, z)) {
                    violations.push(AxiomViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(FiniteRack { table, inverse })
    } else {
        Err(violations)
    }
}

pub fn validate_quandle(rack: FiniteRack) -> Result<FiniteQuandle, Vec<AxiomViolation>> {
    let violations: Vec<_> = (0..rack.size())
        .filter_map(|x| {
            let image = rack.op(x, x);
            (image != x).then_some(AxiomViolation::Idempotence { x, image })
        })
        .collect();
    if violations.is_empty() {
        Ok(FiniteQuandle { rack })
    } else {
        Err(violations)
    }
}

impl FiniteRack {
    /// Shape, range and axiom checks in one step.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let table = BinaryTable::new(rows.len(), rows)?;
        validate_rack(table).map_err(AlgebraError::Axioms)
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// The `y` with `x ▷ y = z`.
    #[inline]
    pub fn op_inverse(&self, x: usize, z: usize) -> usize {
        self.inverse[x * self.size() + z]
    }

    pub fn table(&self) -> &BinaryTable {
        &self.table
    }

    /// The isomorphic rack obtained by renaming `x` to `perm[x]`.
    pub fn relabeled(&self, perm: &[usize]) -> FiniteRack {
        let n = self.size();
        assert_eq!(perm.len(), n, "relabeling must cover every element");
        let mut rows = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                rows[perm[x]][perm[y]] = perm[self.op(x, y)];
            }
        }
        FiniteRack::from_rows(rows).expect("relabeling a rack by a bijection gives a rack")
    }

    /// Whether `x ▷ x = x` holds throughout.
    pub fn is_quandle(&self) -> bool {
        (0..self.size()).all(|x| self.op(x, x) == x)
    }
}

impl FiniteQuandle {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        validate_quandle(FiniteRack::from_rows(rows)?).map_err(AlgebraError::Axioms)
    }

    pub fn as_rack(&self) -> &FiniteRack {
        &self.rack
    }

    pub fn into_rack(self) -> FiniteRack {
        self.rack
    }

    pub fn size(&self) -> usize {
        self.rack.size()
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.rack.op(x, y)
    }

    pub fn relabeled(&self, perm: &[usize]) -> FiniteQuandle {
        FiniteQuandle { rack: self.rack.relabeled(perm) }
    }
}

impl AsRef<FiniteRack> for FiniteRack {
    fn as_ref(&self) -> &FiniteRack {
        self
    }
}

impl AsRef<FiniteRack> for FiniteQuandle {
    fn as_ref(&self) -> &FiniteRack {
        &self.rack
    }
}

impl TryFrom<FiniteRack> for FiniteQuandle {
    type Error = Vec<AxiomViolation>;

    fn try_from(rack: FiniteRack) -> Result<Self, Self::Error> {
        validate_quandle(rack)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: Vec<Vec<usize>>) -> BinaryTable {
        BinaryTable::new(rows.len(), rows).unwrap()
    }

    #[test]
    fn trivial_and_empty_tables_are_racks() {
        let trivial = table(vec![vec![0, 1, 2]; 3]);
        assert!(validate_rack(trivial).is_ok());
        assert!(validate_rack(table(vec![])).is_ok());
    }

    /// All 27 triples of the dihedral table on three elements.
    #[test]
    fn dihedral_three_by_hand() {
        let t = table((0..3).map(|x| (0..3).map(|y| (2 * x + 3 - y) % 3).collect()).collect());
        let rack = validate_rack(t).unwrap();
        assert_eq!(rack.table().row(0), &[0, 2, 1]);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(rack.op_inverse(x, rack.op(x, y)), y);
            }
        }
        assert!(validate_quandle(rack).is_ok());
    }

    #[test]
    fn non_permutation_row_is_named() {
        let err = validate_rack(table(vec![vec![0, 1], vec![0, 0]])).unwrap_err();
        assert!(err.contains(&AxiomViolation::NotPermutation { x: 1, value: 0, first: 0, second: 1 }));
    }

    #[test]
    fn self_distributivity_failure() {
        // Rows are permutations, but translation by 0 is not an automorphism.
        let t = table(vec![vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2]]);
        let err = validate_rack(t).unwrap_err();
        assert!(err.iter().all(|v| matches!(v, AxiomViolation::SelfDistributivity { .. })));
        assert!(!err.is_empty());
    }

    #[test]
    fn swap_rack_is_not_a_quandle() {
        let rack = FiniteRack::from_rows(vec![vec![1, 0], vec![1, 0]]).unwrap();
        let err = validate_quandle(rack).unwrap_err();
        assert_eq!(err[0], AxiomViolation::Idempotence { x: 0, image: 1 });
        assert_eq!(err.len(), 2);
    }
}
