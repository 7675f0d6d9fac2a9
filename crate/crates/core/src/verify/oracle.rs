//! A deliberately naive reference: dense matrices of big integers, tuples
//! enumerated from scratch, and textbook Smith reduction. It takes a bare
//! operation table and uses nothing else from this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `(free rank, torsion divisors)` per degree.
pub type OracleGroups = Vec<(usize, Vec<BigInt>)>;

/// Homology of the rack (`"rack"`), quandle (`"quandle"`) or degenerate
/// (`"degenerate"`) complex of the table `op` in degrees `0..=top`.
pub fn oracle_homology(op: &[Vec<usize>], kind: &str, top: usize) -> OracleGroups {
    let h = op.len();
    let basis = |n: usize| -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            all = all.iter().flat_map(|t| (0..h).map(move |x| [t.clone(), vec![x]].concat())).collect();
        }
        let degenerate = |t: &Vec<usize>| t.windows(2).any(|w| w[0] == w[1]);
        all.into_iter()
            .filter(|t| match kind {
                "quandle" => !degenerate(t),
                "degenerate" => degenerate(t),
                _ => true,
            })
            .collect()
    };
    // Rank and divisors of the boundary out of degree n.
    let divisors = |n: usize| -> Vec<BigInt> {
        if n == 0 {
            return vec![];
        }
        let (cols, rows) = (basis(n), basis(n - 1));
        let mut a = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
        for (c, t) in cols.iter().enumerate() {
            for j in 0..n {
                let sign = if j % 2 == 0 { -1 } else { 1 };
                let deleted: Vec<usize> = [&t[..j], &t[j + 1..]].concat();
                let acted: Vec<usize> = t[..j].iter().copied().chain(t[j + 1..].iter().map(|&y| op[t[j]][y])).collect();
                for (face, s) in [(deleted, sign), (acted, -sign)] {
                    if let Some(r) = rows.iter().position(|u| *u == face) {
                        a[r][c] += s;
                    }
                }
            }
        }
        dense_smith(a)
    };
    let dims: Vec<usize> = (0..=top + 1).map(|n| basis(n).len()).collect();
    let all: Vec<Vec<BigInt>> = (0..=top + 1).map(divisors).collect();
    (0..=top)
        .map(|n| {
            let free = dims[n] - all[n].len() - all[n + 1].len();
            (free, all[n + 1].iter().filter(|d| **d > BigInt::from(1)).cloned().collect())
        })
        .collect()
}

fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            let Some((i, j)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].abs())
            else {
                return out;
            };
            a.swap(t, i);
            a.iter_mut().for_each(|row| row.swap(t, j));
            let p = a[t][t].clone();
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&p);
                (t..cols).for_each(|k| a[i][k] = &a[i][k] - &q * &a[t][k]);
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&p);
                (t..rows).for_each(|k| a[k][j] = &a[k][j] - &q * &a[k][t]);
            }
            let clean = (t + 1..rows).all(|i| a[i][t].is_zero()) && (t + 1..cols).all(|j| a[t][j].is_zero());
            if !clean {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            match (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p))) {
                Some(i) => (t..cols).for_each(|k| a[t][k] = &a[t][k] + &a[i][k]),
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}
