//! Rank over a prime field, by column reduction on pivot ("lowest") rows.
//!
//! Shares nothing with the integral eliminator so it can serve as a check on
//! homology computed through the universal coefficient formula.

use std::collections::HashMap;

use super::{LinalgError, SparseIntMatrix};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a is nonzero mod p.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

/// Rank of `m` over the field with `p` elements.
pub fn fp_rank(m: &SparseIntMatrix, p: u64) -> Result<usize, LinalgError> {
    fp_rank_with_pivots(m, p).map(|(rank, _)| rank)
}

/// The rank and the columns that survived reduction. Those columns, with
/// their pivot rows, form an invertible minor mod `p`.
pub(crate) fn fp_rank_with_pivots(m: &SparseIntMatrix, p: u64) -> Result<(usize, Vec<usize>), LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    // pivot row -> reduced column, normalized to have 1 at the pivot row
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut pivot_columns = Vec::new();
    // Right to left: on boundary matrices in lexicographic bases this keeps
    // the reduced columns markedly sparser than left to right.
    for c in (0..m.cols()).rev() {
        let mut col: Vec<(usize, u64)> = m
            .column(c)
            .iter()
            .map(|(r, v)| (*r, v.rem_euclid_u64(p)))
            .filter(|(_, v)| *v != 0)
            .collect();
        while let Some(&(low, coeff)) = col.last() {
            match pivots.get(&low) {
                Some(basis) => col = sub_scaled(&col, coeff, basis, p),
                None => {
                    let inv = inverse_mod(coeff, p);
                    for entry in &mut col {
                        entry.1 = (entry.1 as u128 * inv as u128 % p as u128) as u64;
                    }
                    pivots.insert(low, col);
                    pivot_columns.push(c);
                    break;
                }
            }
        }
    }
    Ok((pivots.len(), pivot_columns))
}

/// `a - k * b` over the field, both sorted by row.
fn sub_scaled(a: &[(usize, u64)], k: u64, b: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let neg = |v: u64| (p - (k as u128 * v as u128 % p as u128) as u64) % p;
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = neg(b[j].1);
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = (a[i].1 + neg(b[j].1)) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::smith_normal_form;
    use rand::{Rng, SeedableRng};

    #[test]
    fn primes() {
        let found: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(found, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn examples() {
        let two = SparseIntMatrix::from_triplets(1, 1, [(0, 0, 2)]).unwrap();
        assert_eq!(fp_rank(&two, 2).unwrap(), 0);
        assert_eq!(fp_rank(&two, 3).unwrap(), 1);
        for p in [2, 3, 5, 7] {
            assert_eq!(fp_rank(&SparseIntMatrix::identity(6), p).unwrap(), 6);
        }
        assert!(matches!(fp_rank(&two, 4), Err(LinalgError::NotPrime(4))));
    }

    #[test]
    fn random_ranks_bounded_by_integral_rank() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let m = SparseIntMatrix::from_triplets(
                10,
                10,
                (0..10)
                    .flat_map(|r| (0..10).map(move |c| (r, c)))
                    .map(|(r, c)| (r, c, rng.gen_range(-3i64..=3)))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let form = smith_normal_form(&m);
            for p in [2u64, 3, 5, 7, 11, 101] {
                let rank = fp_rank(&m, p).unwrap();
                // rank mod p drops exactly by the number of divisors p divides
                let dropped = form.divisors().filter(|d| d % p == 0u32.into()).count();
                assert_eq!(rank, form.rank() - dropped);
            }
        }
    }
}
