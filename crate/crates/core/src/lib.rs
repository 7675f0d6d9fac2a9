//! Finite racks and quandles, their chain complexes, and exact (co)homology.

pub mod algebra;
pub mod free;
pub mod homology;
pub mod linalg;
pub mod verify;
