//! Free racks and free quandles, element by element.
//!
//! An element of the free rack on a set `S` is a pair `(w, a)` of a reduced
//! word `w` in the free group on `S` and a generator `a`, standing for the
//! conjugate `w a w⁻¹`. The operation is `(w, a) ▷ (v, b) = (w a w⁻¹ v, b)`.
//! In the free quandle `(w a^k, a)` and `(w, a)` agree, so the canonical form
//! strips trailing powers of `a`; distinct canonical elements are distinct
//! conjugates of generators.
//!
//! The free rack on `g` generators has `HR_0 = Z`, `HR_1 = Z^g` and vanishing
//! homology above degree one: its rack space is a wedge of `g` circles. The
//! free quandle on `g` generators has the same quandle homology. Both are
//! infinite, so these values are recorded here rather than computed.

mod element;
mod syntax;
mod word;

use rand::Rng;

pub use element::{
    extend_map, fq_canonicalize, fq_op, fq_op_inverse, fr_op, fr_op_inverse, FormalConjugate, FreeQuandleElement,
    FreeRackElement,
};
pub use syntax::{Alphabet, WordError};
pub use word::{fg_reduce, reduced_words, FreeGroupWord, Letter};

/// A random unreduced letter sequence of length at most `max_len`.
pub fn random_letters<R: Rng + ?Sized>(rng: &mut R, generators: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter { generator: rng.gen_range(0..generators), inverse: rng.gen_bool(0.5) }).collect()
}

/// A random free rack element whose conjugator has at most `max_len` letters
/// before reduction.
pub fn random_rack_element<R: Rng + ?Sized>(rng: &mut R, generators: usize, max_len: usize) -> FreeRackElement {
    let conjugator = fg_reduce(random_letters(rng, generators, max_len));
    FreeRackElement::new(conjugator, rng.gen_range(0..generators))
}
