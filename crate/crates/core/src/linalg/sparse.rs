use super::{Integer, LinalgError};

/// A sparse integer matrix stored by columns.
///
/// Each column is a list of `(row, value)` pairs sorted by row with no zero
/// values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Integer)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, Integer::ONE)]).collect();
        SparseIntMatrix { rows: n, cols: n, columns }
    }

    /// Builds a matrix from coordinate triples. Repeated coordinates are
    /// summed and entries that cancel to zero are dropped.
    pub fn from_triplets<I, V>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, V)>,
        V: Into<Integer>,
    {
        let mut columns: Vec<Vec<(usize, Integer)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            columns[c].push((r, v.into()));
        }
        for column in &mut columns {
            *column = collapse(std::mem::take(column));
        }
        Ok(SparseIntMatrix { rows, cols, columns })
    }

    /// Builds a matrix from per-column entry lists, which may be unsorted and
    /// contain repeated rows.
    pub(crate) fn from_columns(rows: usize, columns: Vec<Vec<(usize, Integer)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                debug_assert!(c.iter().all(|(r, _)| *r < rows));
                collapse(c)
            })
            .collect();
        SparseIntMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn column(&self, c: usize) -> &[(usize, Integer)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Integer {
        match self.columns[c].binary_search_by_key(&r, |(row, _)| *row) {
            Ok(i) => self.columns[c][i].1.clone(),
            Err(_) => Integer::ZERO,
        }
    }

    /// Nonzero entries in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Integer)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        let mut columns: Vec<Vec<(usize, Integer)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            columns[r].push((c, v.clone()));
        }
        // Column-major traversal already yields ascending row order per new column.
        SparseIntMatrix { rows: self.cols, cols: self.rows, columns }
    }

    pub fn mul(&self, rhs: &SparseIntMatrix) -> Result<SparseIntMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|rcol| {
                let mut acc = Vec::new();
                for (k, b) in rcol {
                    for (i, a) in &self.columns[*k] {
                        acc.push((*i, a.mul(b)));
                    }
                }
                acc
            })
            .collect();
        Ok(SparseIntMatrix::from_columns(self.rows, columns))
    }

    /// Reindexes rows and columns: entry `(r, c)` moves to
    /// `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseIntMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut columns: Vec<Vec<(usize, Integer)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            columns[col_perm[c]].push((row_perm[r], v.clone()));
        }
        SparseIntMatrix::from_columns(self.rows, columns)
    }

    /// Keeps the listed rows and columns, renumbered in the given order.
    pub fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> SparseIntMatrix {
        let mut row_map = vec![usize::MAX; self.rows];
        for (new, &old) in keep_rows.iter().enumerate() {
            row_map[old] = new;
        }
        let columns = keep_cols
            .iter()
            .map(|&c| {
                self.columns[c]
                    .iter()
                    .filter(|(r, _)| row_map[*r] != usize::MAX)
                    .map(|(r, v)| (row_map[*r], v.clone()))
                    .collect()
            })
            .collect();
        SparseIntMatrix::from_columns(keep_rows.len(), columns)
    }

    pub(crate) fn into_columns(self) -> Vec<Vec<(usize, Integer)>> {
        self.columns
    }
}

fn collapse(mut entries: Vec<(usize, Integer)>) -> Vec<(usize, Integer)> {
    entries.sort_by_key(|(r, _)| *r);
    let mut out: Vec<(usize, Integer)> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((last, acc)) if *last == r => *acc = acc.add(&v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_sum_and_cancel() {
        let m = SparseIntMatrix::from_triplets(2, 2, [(0, 0, 1), (0, 0, -1), (1, 0, 2), (1, 0, 3)])
            .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), Integer::from(5));
        assert_eq!(m.get(0, 0), Integer::ZERO);
    }

    #[test]
    fn out_of_range_is_rejected() {
        let err = SparseIntMatrix::from_triplets(2, 2, [(2, 0, 1)]).unwrap_err();
        assert!(matches!(err, LinalgError::IndexOutOfRange { row: 2, .. }));
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseIntMatrix::from_triplets(2, 3, [(0, 0, 1), (0, 2, 2), (1, 1, 3)]).unwrap();
        let b = a.transpose();
        assert_eq!(b.shape(), (3, 2));
        assert_eq!(b.get(2, 0), Integer::from(2));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.get(0, 0), Integer::from(5));
        assert_eq!(p.get(1, 1), Integer::from(9));
        assert_eq!(p.get(0, 1), Integer::ZERO);
        assert!(a.mul(&a).is_err());
    }
}
