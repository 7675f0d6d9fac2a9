use std::fmt;

/// A generator `g` or its inverse `g⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word in the free group on generators `0, 1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeGroupWord {
    letters: Vec<Letter>,
}

/// Free reduction with a stack, so the result does not depend on the order
/// in which cancellations are found.
pub fn fg_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> FreeGroupWord {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    FreeGroupWord { letters: out }
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord::default()
    }

    pub fn generator(g: usize) -> Self {
        FreeGroupWord { letters: vec![Letter::new(g)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Highest generator id used, plus one.
    pub fn alphabet_size(&self) -> usize {
        self.letters.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> Self {
        fg_reduce(self.letters.iter().chain(&other.letters).copied())
    }

    /// The word with its trailing letters on generator `g` removed.
    pub fn strip_trailing(&self, g: usize) -> Self {
        let keep = self.letters.iter().rposition(|l| l.generator != g).map_or(0, |i| i + 1);
        FreeGroupWord { letters: self.letters[..keep].to_vec() }
    }

    pub fn ends_with_generator(&self, g: usize) -> bool {
        self.letters.last().is_some_and(|l| l.generator == g)
    }
}

impl FromIterator<Letter> for FreeGroupWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        fg_reduce(iter)
    }
}

impl fmt::Display for FreeGroupWord {
    /// Generators print as `g0`, `g1`, ...; see [`super::Alphabet`] for named output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("g{}{}", l.generator, if l.inverse { "'" } else { "" }))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Every freely reduced word over `generators` generators of length at most
/// `max_len`, shortest first.
pub fn reduced_words(generators: usize, max_len: usize) -> Vec<FreeGroupWord> {
    let mut all = vec![FreeGroupWord::identity()];
    let mut layer = vec![FreeGroupWord::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..generators {
                for l in [Letter::new(g), Letter::inv(g)] {
                    if w.letters.last().is_some_and(|&top| top.cancels(l)) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(FreeGroupWord { letters });
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a() -> Letter {
        Letter::new(0)
    }
    fn b() -> Letter {
        Letter::new(1)
    }

    #[test]
    fn cancellation() {
        assert!(fg_reduce([a(), a().inverted()]).is_empty());
        assert_eq!(fg_reduce([a(), b(), b().inverted(), a()]).letters(), &[a(), a()]);
        assert_eq!(FreeGroupWord::identity().to_string(), "1");
        assert_eq!(fg_reduce([a(), b().inverted()]).to_string(), "g0 g1'");
    }

    #[test]
    fn strip() {
        let w = fg_reduce([b(), a(), a()]);
        assert_eq!(w.strip_trailing(0).letters(), &[b()]);
        assert_eq!(w.strip_trailing(1), w);
        assert!(fg_reduce([a(), a()]).strip_trailing(0).is_empty());
    }

    #[test]
    fn counts_of_reduced_words() {
        // 1 + 4 + 12 + 36 over two generators
        assert_eq!(reduced_words(2, 3).len(), 53);
        assert_eq!(reduced_words(1, 3).len(), 7);
        assert!(reduced_words(2, 4).iter().all(|w| fg_reduce(w.letters().iter().copied()) == *w));
    }

    fn letters() -> impl Strategy<Value = Vec<Letter>> {
        proptest::collection::vec((0usize..3, any::<bool>()).prop_map(|(g, i)| Letter { generator: g, inverse: i }), 0..20)
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_trivial(raw in letters()) {
            let w = fg_reduce(raw);
            prop_assert!(w.mul(&w.inverse()).is_empty());
            prop_assert!(w.inverse().mul(&w).is_empty());
        }

        #[test]
        fn reduction_is_confluent(raw in letters(), split in 0usize..20) {
            // Reducing a prefix first gives the same word.
            let k = split.min(raw.len());
            let head = fg_reduce(raw[..k].iter().copied());
            let tail = fg_reduce(raw[k..].iter().copied());
            prop_assert_eq!(head.mul(&tail), fg_reduce(raw.iter().copied()));
        }

        #[test]
        fn multiplication_is_associative(x in letters(), y in letters(), z in letters()) {
            let (x, y, z) = (fg_reduce(x), fg_reduce(y), fg_reduce(z));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }
}
