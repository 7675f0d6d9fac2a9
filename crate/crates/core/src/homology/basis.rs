/// Which tuples of `X^n` a basis keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// Every tuple.
    Full,
    /// Tuples with two equal neighbouring entries.
    Degenerate,
    /// Tuples with no two equal neighbouring entries.
    Nondegenerate,
}

impl BasisKind {
    fn keeps(self, tuple: &[usize]) -> bool {
        let degenerate = tuple.windows(2).any(|w| w[0] == w[1]);
        match self {
            BasisKind::Full => true,
            BasisKind::Degenerate => degenerate,
            BasisKind::Nondegenerate => !degenerate,
        }
    }
}

/// A lexicographically ordered basis of `n`-tuples over `{0, ..., size - 1}`.
///
/// Tuples are addressed by their code, the base-`size` number with the first
/// entry most significant, so the lexicographic order is the code order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleBasis {
    size: usize,
    degree: usize,
    kind: BasisKind,
    codes: Vec<usize>,
    /// code -> position in `codes`, or `u32::MAX` when the tuple is excluded
    position: Vec<u32>,
}

impl TupleBasis {
    pub fn new(size: usize, degree: usize, kind: BasisKind) -> Self {
        let total = size.checked_pow(degree as u32).expect("tuple count overflows");
        assert!(total < u32::MAX as usize, "tuple basis too large to index");
        let mut codes = Vec::new();
        let mut position = vec![u32::MAX; total];
        let mut tuple = vec![0usize; degree];
        for code in 0..total {
            decode_into(code, size, &mut tuple);
            if kind.keeps(&tuple) {
                position[code] = codes.len() as u32;
                codes.push(code);
            }
        }
        TupleBasis { size, degree, kind, codes, position }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn codes(&self) -> &[usize] {
        &self.codes
    }

    pub fn tuple(&self, index: usize) -> Vec<usize> {
        let mut t = vec![0; self.degree];
        decode_into(self.codes[index], self.size, &mut t);
        t
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|i| self.tuple(i))
    }

    pub fn index_of_code(&self, code: usize) -> Option<usize> {
        match self.position.get(code) {
            Some(&p) if p != u32::MAX => Some(p as usize),
            _ => None,
        }
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.degree || tuple.iter().any(|&x| x >= self.size) {
            return None;
        }
        self.index_of_code(encode(tuple, self.size))
    }
}

pub(crate) fn encode(tuple: &[usize], size: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * size + x)
}

pub(crate) fn decode_into(mut code: usize, size: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = code % size;
        code /= size;
    }
}

pub(crate) fn degenerate_codes(size: usize, n: usize) -> Vec<usize> {
    TupleBasis::new(size, n, BasisKind::Degenerate).codes
}
