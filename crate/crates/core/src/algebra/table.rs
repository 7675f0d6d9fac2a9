use super::AlgebraError;

/// A square operation table on `{0, ..., size - 1}`; `get(x, y)` is `x ▷ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryTable {
    size: usize,
    op: Vec<usize>,
}

impl BinaryTable {
    /// Checks shape and entry range; says nothing about rack axioms.
    pub fn new(size: usize, rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        if rows.len() != size {
            return Err(AlgebraError::RowCount { expected: size, found: rows.len() });
        }
        let mut op = Vec::with_capacity(size * size);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(AlgebraError::RowLength { row: x, expected: size, found: row.len() });
            }
            if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= size) {
                return Err(AlgebraError::EntryOutOfRange { row: x, col: y, value: v, size });
            }
            op.extend(row);
        }
        Ok(BinaryTable { size, op })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, AlgebraError> {
        Self::new(size, (0..size).map(|x| (0..size).map(|y| f(x, y)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.op[x * self.size + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.op[x * self.size..(x + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|x| self.row(x).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_errors() {
        assert!(matches!(BinaryTable::new(2, vec![vec![0, 1]]), Err(AlgebraError::RowCount { .. })));
        assert!(matches!(
            BinaryTable::new(2, vec![vec![0, 1], vec![0]]),
            Err(AlgebraError::RowLength { row: 1, .. })
        ));
        assert!(matches!(
            BinaryTable::new(2, vec![vec![0, 1], vec![2, 0]]),
            Err(AlgebraError::EntryOutOfRange { row: 1, col: 0, value: 2, .. })
        ));
        assert_eq!(BinaryTable::new(0, vec![]).unwrap().size(), 0);
    }
}
