//! JSON result documents. Everything except `timing` is a function of the
//! input, so two runs can be compared after dropping that field.

use num_bigint::BigUint;
use rackhom::linalg::AbelianGroupPresentation;
use serde::Serialize;

/// A number that fits in `u64` is written as one; larger values become
/// decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Exact {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for Exact {
    fn from(n: &BigUint) -> Self {
        u64::try_from(n).map_or_else(|_| Exact::Big(n.to_string()), Exact::Small)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Group {
    pub free_rank: usize,
    pub torsion: Vec<Exact>,
    /// `null` for infinite groups.
    pub order: Option<Exact>,
    pub display: String,
}

impl From<&AbelianGroupPresentation> for Group {
    fn from(g: &AbelianGroupPresentation) -> Self {
        Group {
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(Exact::from).collect(),
            order: g.order().as_ref().map(Exact::from),
            display: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub source: String,
    pub size: usize,
    pub convention: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeResult {
    pub degree: usize,
    #[serde(flatten)]
    pub group: Group,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuillenDegree {
    pub degree: usize,
    pub quillen: Group,
    pub cohomology_degree: usize,
    pub cohomology: Group,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Body {
    Degrees { degrees: Vec<DegreeResult> },
    Quillen { degrees: Vec<QuillenDegree> },
    Cocycles {
        degree: usize,
        group: Group,
        /// `representatives[k][x][y] = φ_k(x, y)`.
        representatives: Vec<Vec<Vec<u64>>>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultDocument {
    pub input: Input,
    pub computation: &'static str,
    pub theory: String,
    pub coefficient: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(flatten)]
    pub body: Body,
    pub timing: Timing,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_become_strings() {
        let big = BigUint::from(u64::MAX) + 1u8;
        assert_eq!(serde_json::to_string(&Exact::from(&big)).unwrap(), "\"18446744073709551616\"");
        assert_eq!(serde_json::to_string(&Exact::from(&BigUint::from(9u8))).unwrap(), "9");
    }
}
