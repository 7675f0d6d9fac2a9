//! Smith normal form of sparse integer matrices.
//!
//! The eliminator only ever needs the elementary divisors, never the
//! transformation matrices, so it works in place on a column-major copy of
//! the input. Each pivot is driven until it divides the rest of its row and
//! column (Euclidean steps with nearest-integer quotients), then row and
//! column are dropped. The resulting diagonal is brought into a divisibility
//! chain by pairwise gcd/lcm exchange, which needs no factoring.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{Integer, SparseIntMatrix};

/// How the eliminator chooses its next pivot. Results never depend on the
/// policy; only running time and intermediate fill-in do.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotPolicy {
    /// Prefer unit entries in the shortest columns, breaking ties by the
    /// shortest row; fall back to the smallest entry overall.
    #[default]
    Sparse,
    /// Scan columns left to right and take the smallest entry of the first
    /// nonzero one.
    Naive,
}

/// Elementary divisors `d_1 | d_2 | ... | d_rank` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    rank: usize,
    nontrivial: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All divisors in ascending divisibility order, leading ones included.
    pub fn divisors(&self) -> impl Iterator<Item = BigUint> + '_ {
        let ones = self.rank - self.nontrivial.len();
        std::iter::repeat_n(BigUint::one(), ones).chain(self.nontrivial.iter().cloned())
    }

    /// The divisors greater than one.
    pub fn nontrivial_divisors(&self) -> &[BigUint] {
        &self.nontrivial
    }
}

pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithForm {
    smith_normal_form_with(m, PivotPolicy::default())
}

pub fn smith_normal_form_with(m: &SparseIntMatrix, policy: PivotPolicy) -> SmithForm {
    smith_with_unit_minor(m, policy).0
}

/// Also returns columns `C` for which some row set `R` makes `m[R, C]`
/// unimodular: the pivot columns of the leading run of unit pivots, which
/// are plain Schur complement steps on `m`.
pub(crate) fn smith_with_unit_minor(m: &SparseIntMatrix, policy: PivotPolicy) -> (SmithForm, Vec<usize>) {
    let mut elim = Eliminator::new(m);
    let mut diagonal = Vec::new();
    while let Some(pivot) = elim.next_pivot(policy) {
        diagonal.push(elim.reduce(pivot));
    }
    let rank = diagonal.len();
    let nontrivial = divisibility_chain(diagonal.into_iter().filter(|d| !d.is_one()).collect());
    (SmithForm { rank, nontrivial }, elim.unit_columns)
}

/// Rewrites diagonal entries into invariant factors: after the exchange
/// `(a, b) -> (gcd, lcm)` over all pairs `i < j`, each entry divides every
/// later one. Ones are dropped from the result.
pub(crate) fn divisibility_chain(mut diag: Vec<BigUint>) -> Vec<BigUint> {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if !(&diag[j] % &diag[i]).is_zero() {
                let g = diag[i].gcd(&diag[j]);
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    diag.retain(|d| !d.is_one());
    diag
}

struct Eliminator {
    cols: Vec<Vec<(usize, Integer)>>,
    alive: Vec<bool>,
    /// Columns that may hold an entry in each row; stale members are
    /// filtered on use.
    row_cols: Vec<Vec<usize>>,
    queue: BinaryHeap<Reverse<(usize, usize)>>,
    cursor: usize,
    /// True while every pivot so far was a unit needing a single pass.
    schur: bool,
    unit_columns: Vec<usize>,
}

impl Eliminator {
    fn new(m: &SparseIntMatrix) -> Self {
        let cols = m.clone().into_columns();
        let mut row_cols = vec![Vec::new(); m.rows()];
        let mut queue = BinaryHeap::with_capacity(cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, _) in col {
                row_cols[*r].push(c);
            }
            if !col.is_empty() {
                queue.push(Reverse((col.len(), c)));
            }
        }
        let alive = cols.iter().map(|c| !c.is_empty()).collect();
        Eliminator { cols, alive, row_cols, queue, cursor: 0, schur: true, unit_columns: Vec::new() }
    }

    fn entry(&self, c: usize, r: usize) -> Option<&Integer> {
        let col = &self.cols[c];
        col.binary_search_by_key(&r, |(row, _)| *row).ok().map(|i| &col[i].1)
    }

    fn next_pivot(&mut self, policy: PivotPolicy) -> Option<(usize, usize)> {
        match policy {
            PivotPolicy::Sparse => self.sparse_pivot(),
            PivotPolicy::Naive => self.naive_pivot(),
        }
    }

    fn sparse_pivot(&mut self) -> Option<(usize, usize)> {
        while let Some(Reverse((len, c))) = self.queue.pop() {
            if !self.alive[c] || self.cols[c].len() != len {
                continue;
            }
            let unit = self.cols[c]
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(r, _)| self.row_cols[*r].len());
            if let Some((r, _)) = unit {
                return Some((*r, c));
            }
            // No unit here; the column re-enters the queue if it is modified.
        }
        let mut best: Option<(usize, usize, &Integer, usize)> = None;
        for (c, col) in self.cols.iter().enumerate() {
            if !self.alive[c] {
                continue;
            }
            for (r, v) in col {
                let better = match best {
                    None => true,
                    Some((_, _, bv, blen)) => match v.cmp_abs(bv) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => col.len() < blen,
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((*r, c, v, col.len()));
                }
            }
        }
        best.map(|(r, c, _, _)| (r, c))
    }

    fn naive_pivot(&mut self) -> Option<(usize, usize)> {
        while self.cursor < self.cols.len() {
            let c = self.cursor;
            if self.alive[c] && !self.cols[c].is_empty() {
                let (r, _) = self.cols[c]
                    .iter()
                    .min_by(|a, b| a.1.cmp_abs(&b.1))
                    .expect("nonempty column");
                return Some((*r, c));
            }
            self.cursor += 1;
        }
        None
    }

    fn columns_in_row(&mut self, r: usize) -> Vec<usize> {
        let mut members = std::mem::take(&mut self.row_cols[r]);
        members.sort_unstable();
        members.dedup();
        members.retain(|&c| self.alive[c] && self.entry(c, r).is_some());
        self.row_cols[r] = members.clone();
        members
    }

    /// `column[target] -= q * column[source]`
    fn axpy(&mut self, target: usize, q: &Integer, source: usize) {
        let src = std::mem::take(&mut self.cols[source]);
        let tgt = std::mem::take(&mut self.cols[target]);
        let mut out = Vec::with_capacity(tgt.len() + src.len());
        let (mut i, mut j) = (0, 0);
        while i < tgt.len() || j < src.len() {
            let take_t = j >= src.len() || (i < tgt.len() && tgt[i].0 < src[j].0);
            let take_s = i >= tgt.len() || (j < src.len() && src[j].0 < tgt[i].0);
            if take_t {
                out.push(tgt[i].clone());
                i += 1;
            } else if take_s {
                let (r, v) = &src[j];
                out.push((*r, Integer::ZERO.sub_mul(q, v)));
                self.row_cols[*r].push(target);
                j += 1;
            } else {
                let v = tgt[i].1.sub_mul(q, &src[j].1);
                if !v.is_zero() {
                    out.push((tgt[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.cols[source] = src;
        self.cols[target] = out;
    }

    /// Eliminates around the given pivot and returns the absolute value of
    /// the diagonal entry it leaves behind.
    fn reduce(&mut self, (mut r, mut c): (usize, usize)) -> BigUint {
        let mut first_pass = true;
        loop {
            let p = self.entry(c, r).expect("pivot is nonzero").clone();
            if !(first_pass && p.is_unit()) {
                self.schur = false;
            }
            first_pass = false;

            // Column operations clear the pivot row.
            let mut smallest: Option<(usize, Integer)> = None;
            for other in self.columns_in_row(r) {
                if other == c {
                    continue;
                }
                let a = self.entry(other, r).expect("listed member").clone();
                let q = a.div_nearest(&p);
                if !q.is_zero() {
                    self.axpy(other, &q, c);
                    if self.cols[other].is_empty() {
                        self.alive[other] = false;
                    } else {
                        self.queue.push(Reverse((self.cols[other].len(), other)));
                    }
                }
                if let Some(rem) = self.entry(other, r) {
                    if smallest.as_ref().is_none_or(|(_, s)| rem.cmp_abs(s).is_lt()) {
                        smallest = Some((other, rem.clone()));
                    }
                }
            }
            if let Some((other, _)) = smallest {
                c = other;
                continue;
            }

            // The pivot row is now zero outside the pivot, so row operations
            // touch the pivot column only.
            let mut smallest: Option<(usize, Integer)> = None;
            let column = std::mem::take(&mut self.cols[c]);
            let mut reduced = Vec::with_capacity(column.len());
            for (row, b) in column {
                if row == r {
                    reduced.push((row, b));
                    continue;
                }
                let q = b.div_nearest(&p);
                let rem = b.sub_mul(&q, &p);
                if !rem.is_zero() {
                    if smallest.as_ref().is_none_or(|(_, s)| rem.cmp_abs(s).is_lt()) {
                        smallest = Some((row, rem.clone()));
                    }
                    reduced.push((row, rem));
                }
            }
            self.cols[c] = reduced;
            if let Some((row, _)) = smallest {
                r = row;
                continue;
            }

            self.alive[c] = false;
            self.row_cols[r].clear();
            if self.schur {
                self.unit_columns.push(c);
            }
            return p.magnitude();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn snf(rows: usize, cols: usize, entries: &[i64]) -> Vec<u64> {
        let m = SparseIntMatrix::from_triplets(
            rows,
            cols,
            entries.iter().enumerate().map(|(i, &v)| (i / cols, i % cols, v)),
        )
        .unwrap();
        let form = smith_normal_form(&m);
        form.divisors().map(|d| u64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn zero_matrix() {
        assert!(snf(3, 2, &[0; 6]).is_empty());
        assert!(snf(0, 4, &[]).is_empty());
    }

    #[test]
    fn small_examples() {
        assert_eq!(snf(2, 2, &[2, 0, 0, 3]), vec![1, 6]);
        assert_eq!(snf(2, 2, &[2, 4, 6, 8]), vec![2, 4]);
        assert_eq!(snf(1, 1, &[-7]), vec![7]);
        assert_eq!(snf(2, 3, &[2, 4, 4, -6, 6, 12]), vec![2, 6]);
    }

    #[test]
    fn chain_normalization() {
        let chain = divisibility_chain([4u32, 6, 1, 10].map(BigUint::from).to_vec());
        assert_eq!(chain, [2u32, 2, 60].map(BigUint::from).to_vec());
    }

    /// Entries large enough that every product leaves the machine word.
    #[test]
    fn big_entries() {
        let p = BigInt::from(1u64 << 40) * BigInt::from(1u64 << 40) + 1u32;
        let m = SparseIntMatrix::from_triplets(
            2,
            2,
            [
                (0usize, 0usize, Integer::from(p.clone())),
                (1, 1, Integer::from(p.clone() * 3u32)),
            ],
        )
        .unwrap();
        let form = smith_normal_form(&m);
        let d: Vec<BigUint> = form.divisors().collect();
        assert_eq!(d, vec![p.magnitude().clone(), (p * 3u32).magnitude().clone()]);
    }

    /// gcd of all k x k minors, by cofactor expansion.
    fn determinantal_divisors(a: &[Vec<i64>]) -> Vec<BigInt> {
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            if m.is_empty() {
                return BigInt::from(1);
            }
            let n = m.len();
            let mut total = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let (rows, cols) = (a.len(), a[0].len());
        let mut out = Vec::new();
        for k in 1..=rows.min(cols) {
            let mut g = BigInt::zero();
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let m: Vec<Vec<BigInt>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(a[r][c])).collect()).collect();
                    g = num_integer::Integer::gcd(&g, &det(&m));
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(g);
        }
        out
    }

    fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(
                prop_oneof![3 => Just(0i64), 2 => -4i64..=4, 1 => -40i64..=40],
                c,
            ), r)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn divisors_match_minor_gcds(a in matrix_strategy()) {
            let (rows, cols) = (a.len(), a[0].len());
            let m = SparseIntMatrix::from_triplets(
                rows, cols,
                a.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))),
            ).unwrap();
            let form = smith_normal_form(&m);
            let divisors: Vec<BigUint> = form.divisors().collect();
            for w in divisors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
            let minors = determinantal_divisors(&a);
            prop_assert_eq!(minors.len(), form.rank());
            let mut product = BigUint::one();
            for (d, g) in divisors.iter().zip(&minors) {
                product *= d;
                prop_assert_eq!(&product, g.magnitude());
            }
            prop_assert_eq!(smith_normal_form_with(&m, PivotPolicy::Naive), form.clone());
            prop_assert_eq!(smith_normal_form(&m.transpose()), form);
        }
    }
}
