//! Finite racks and quandles as validated operation tables.
//!
//! The convention is left-handed throughout: `x ▷ y` is `x` acting on `y`,
//! and `op(x, y)` reads row `x`, column `y`. Elements are `0..size`.

mod families;
mod orbits;
mod rack;
mod table;

use std::fmt;

pub use families::{
    conjugation_q8, conjugation_s3, cyclic_group, make_alexander, make_conjugation, make_dihedral, make_trivial,
    quaternion_group, symmetric_group_s3, validate_group, GroupTable,
};
pub use orbits::{is_homomorphism, orbits, OrbitPartition};
pub use rack::{validate_quandle, validate_rack, AxiomViolation, FiniteQuandle, FiniteRack};
pub use table::BinaryTable;

/// One failed group axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    Associativity { x: usize, y: usize, z: usize },
    NoIdentity,
    Inverse { x: usize },
    InverseMap,
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::Associativity { x, y, z } => write!(f, "({x}·{y})·{z} != {x}·({y}·{z})"),
            GroupViolation::NoIdentity => write!(f, "no two-sided identity"),
            GroupViolation::Inverse { x } => write!(f, "the given inverse of {x} is wrong"),
            GroupViolation::InverseMap => write!(f, "inverse map has the wrong length or range"),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    const SHOWN: usize = 10;
    let mut parts: Vec<String> = items.iter().take(SHOWN).map(T::to_string).collect();
    if items.len() > SHOWN {
        parts.push(format!("and {} more", items.len() - SHOWN));
    }
    parts.join("; ")
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("table declares {expected} rows but has {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("entry op[{row}][{col}] = {value} is not an element of a {size}-element set")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },
    #[error("axioms fail: {}", join(.0))]
    Axioms(Vec<AxiomViolation>),
    #[error("not a group: {}", join(.0))]
    NotAGroup(Vec<GroupViolation>),
    #[error("{t} is not a unit modulo {n}")]
    NotAUnit { t: i64, n: usize },
    #[error("{0}")]
    InvalidParameter(String),
    #[error("map has {found} values but the source has {expected} elements")]
    MapLength { expected: usize, found: usize },
    #[error("f({x}) = {image} is outside a {size}-element target")]
    ImageOutOfRange { x: usize, image: usize, size: usize },
}
