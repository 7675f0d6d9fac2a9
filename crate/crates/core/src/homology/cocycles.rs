//! 2-cocycles `φ: X × X → A` solved directly from the cocycle identity
//!
//! ```text
//! φ(x ▷ y, x ▷ z) = φ(y, z) - φ(x, z) + φ(x, y ▷ z)
//! ```
//!
//! modulo the principal coboundaries `φ_f(x, y) = f(y) - f(x ▷ y)`. Pairs are
//! indexed by `x * |X| + y`.

use crate::algebra::{validate_quandle, FiniteRack};
use crate::linalg::{cohomology_at, cohomology_mod, is_prime, AbelianGroupPresentation, CochainComplex, SparseIntMatrix};

use super::{AlgebraicTheory, CoefficientSpec, HomologyError};

/// The second cohomology group seen through explicit cocycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleBasis {
    pub coefficient: CoefficientSpec,
    pub theory: AlgebraicTheory,
    pub group: AbelianGroupPresentation,
    /// For prime moduli: cocycles, indexed by pair, whose classes form a basis
    /// of the group over the prime field. Empty for other coefficients.
    pub representatives: Vec<Vec<u64>>,
}

impl CocycleBasis {
    /// Order of the group, `None` when it is infinite.
    pub fn order(&self) -> Option<num_bigint::BigUint> {
        self.group.order()
    }
}

/// Whether `phi` (values mod `m`, indexed by pair) satisfies the cocycle identity.
pub fn is_two_cocycle(rack: &FiniteRack, phi: &[u64], m: u64) -> bool {
    let h = rack.size();
    assert_eq!(phi.len(), h * h, "a 2-cochain has one value per pair");
    let at = |x: usize, y: usize| phi[x * h + y] % m;
    (0..h).all(|x| {
        (0..h).all(|y| {
            (0..h).all(|z| {
                let lhs = at(rack.op(x, y), rack.op(x, z));
                let rhs = (at(y, z) + (m - at(x, z)) + at(x, rack.op(y, z))) % m;
                lhs == rhs
            })
        })
    })
}

/// `φ_f(x, y) = f(y) - f(x ▷ y)` mod `m`.
pub fn principal_coboundary(rack: &FiniteRack, f: &[u64], m: u64) -> Vec<u64> {
    let h = rack.size();
    assert_eq!(f.len(), h, "a 1-cochain has one value per element");
    let mut phi = Vec::with_capacity(h * h);
    for x in 0..h {
        for y in 0..h {
            phi.push((f[y] % m + m - f[rack.op(x, y)] % m) % m);
        }
    }
    phi
}

/// One row per triple `(x, y, z)`, plus `φ(x, x) = 0` rows for quandles.
fn cocycle_equations(rack: &FiniteRack, theory: AlgebraicTheory) -> SparseIntMatrix {
    let h = rack.size();
    let pair = |x: usize, y: usize| x * h + y;
    let mut triplets = Vec::new();
    let mut row = 0;
    for x in 0..h {
        for y in 0..h {
            for z in 0..h {
                triplets.push((row, pair(rack.op(x, y), rack.op(x, z)), 1i64));
                triplets.push((row, pair(y, z), -1));
                triplets.push((row, pair(x, z), 1));
                triplets.push((row, pair(x, rack.op(y, z)), -1));
                row += 1;
            }
        }
    }
    if theory == AlgebraicTheory::Quandle {
        for x in 0..h {
            triplets.push((row, pair(x, x), 1));
            row += 1;
        }
    }
    SparseIntMatrix::from_triplets(row, h * h, triplets).expect("indices are in range")
}

/// Column `w` is the coboundary of the indicator function of `w`.
fn coboundary_matrix(rack: &FiniteRack) -> SparseIntMatrix {
    let h = rack.size();
    let mut triplets = Vec::new();
    for x in 0..h {
        for y in 0..h {
            triplets.push((x * h + y, y, 1i64));
            triplets.push((x * h + y, rack.op(x, y), -1));
        }
    }
    SparseIntMatrix::from_triplets(h * h, h, triplets).expect("indices are in range")
}

/// Solves for the 2-cocycles of `rack` with coefficients `coeff`.
///
/// The quandle theory requires a quandle and adds `φ(x, x) = 0`. For a prime
/// modulus the result carries explicit representatives computed over the
/// prime field; otherwise only the group is returned.
pub fn two_cocycles(
    rack: &FiniteRack,
    coeff: CoefficientSpec,
    theory: AlgebraicTheory,
) -> Result<CocycleBasis, HomologyError> {
    if theory == AlgebraicTheory::Quandle {
        validate_quandle(rack.clone()).map_err(HomologyError::NotAQuandle)?;
    }
    let h = rack.size();
    let equations = cocycle_equations(rack, theory);
    let coboundaries = coboundary_matrix(rack);

    if let CoefficientSpec::Cyclic(p) = coeff {
        if is_prime(p) {
            let representatives = prime_representatives(&equations, &coboundaries, p);
            let group = AbelianGroupPresentation::cyclic_power(&p.into(), representatives.len());
            return Ok(CocycleBasis { coefficient: coeff, theory, group, representatives });
        }
    }

    let dims = vec![h, h * h, equations.rows()];
    let complex = CochainComplex::new(dims, vec![coboundaries, equations]).expect("shapes agree by construction");
    let group = match coeff {
        CoefficientSpec::Integers => cohomology_at(&complex, 1),
        CoefficientSpec::Cyclic(m) => cohomology_mod(&complex, 1, m)?,
    };
    Ok(CocycleBasis { coefficient: coeff, theory, group, representatives: Vec::new() })
}

fn prime_representatives(equations: &SparseIntMatrix, coboundaries: &SparseIntMatrix, p: u64) -> Vec<Vec<u64>> {
    let unknowns = equations.cols();
    let mut rows = vec![vec![0u64; unknowns]; equations.rows()];
    for (r, c, v) in equations.triplets() {
        rows[r][c] = v.rem_euclid_u64(p);
    }
    let kernel = kernel_mod_p(rows, unknowns, p);

    let mut span = Echelon::new(p);
    for c in 0..coboundaries.cols() {
        let mut v = vec![0u64; unknowns];
        for (r, value) in coboundaries.column(c) {
            v[*r] = value.rem_euclid_u64(p);
        }
        span.insert(v);
    }
    kernel.into_iter().filter(|v| span.insert(v.clone())).collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a is nonzero mod p.
    let (mut base, mut exp, mut acc) = (a as u128 % p as u128, p - 2, 1u128);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Basis of `{v : A v = 0}` over `F_p`, from the reduced row echelon form.
fn kernel_mod_p(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&free| !is_pivot[free])
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = (p - rows[i][free]) % p;
            }
            v
        })
        .collect()
}

/// An incrementally grown echelon basis over `F_p`.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    /// Adds `v` and reports whether it was independent of the rows so far.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let f = v[*pivot];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pivot], p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        self.rows.push((pivot, v));
        true
    }
}
