use std::fmt;

use crate::algebra::{AlgebraError, FiniteRack};

use super::word::{FreeGroupWord, Letter};

/// An element `w ▷ a` of a free rack: the conjugate `w a w⁻¹` of the
/// generator `a` by the word `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeRackElement {
    conjugator: FreeGroupWord,
    generator: usize,
}

/// An element of a free quandle, in canonical form: the conjugator never ends
/// in a power of the generator, since those centralize it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeQuandleElement {
    inner: FreeRackElement,
}

/// Access shared by free rack and free quandle elements.
pub trait FormalConjugate {
    fn conjugator(&self) -> &FreeGroupWord;
    fn generator(&self) -> usize;

    /// `w a w⁻¹` in the free group.
    fn as_group_element(&self) -> FreeGroupWord {
        let w = self.conjugator();
        w.mul(&FreeGroupWord::generator(self.generator())).mul(&w.inverse())
    }
}

impl FreeRackElement {
    pub fn new(conjugator: FreeGroupWord, generator: usize) -> Self {
        FreeRackElement { conjugator, generator }
    }

    /// The generator itself, `(ε, a)`.
    pub fn generator_element(g: usize) -> Self {
        Self::new(FreeGroupWord::identity(), g)
    }

    /// Highest generator id used, plus one.
    pub fn alphabet_size(&self) -> usize {
        self.conjugator.alphabet_size().max(self.generator + 1)
    }
}

impl FormalConjugate for FreeRackElement {
    fn conjugator(&self) -> &FreeGroupWord {
        &self.conjugator
    }

    fn generator(&self) -> usize {
        self.generator
    }
}

impl FreeQuandleElement {
    pub fn generator_element(g: usize) -> Self {
        FreeQuandleElement { inner: FreeRackElement::generator_element(g) }
    }

    pub fn as_rack_element(&self) -> &FreeRackElement {
        &self.inner
    }
}

impl FormalConjugate for FreeQuandleElement {
    fn conjugator(&self) -> &FreeGroupWord {
        &self.inner.conjugator
    }

    fn generator(&self) -> usize {
        self.inner.generator
    }
}

/// `(w, a) ▷ (v, b) = (w a w⁻¹ v, b)`.
pub fn fr_op(x: &FreeRackElement, y: &FreeRackElement) -> FreeRackElement {
    FreeRackElement::new(x.as_group_element().mul(&y.conjugator), y.generator)
}

/// The inverse of left multiplication by `x`: `(w a⁻¹ w⁻¹ v, b)`.
pub fn fr_op_inverse(x: &FreeRackElement, y: &FreeRackElement) -> FreeRackElement {
    let w = &x.conjugator;
    let acting = w.mul(&FreeGroupWord::generator(x.generator).inverse()).mul(&w.inverse());
    FreeRackElement::new(acting.mul(&y.conjugator), y.generator)
}

/// Strips trailing powers of the generator from the conjugator.
pub fn fq_canonicalize(x: &FreeRackElement) -> FreeQuandleElement {
    FreeQuandleElement {
        inner: FreeRackElement::new(x.conjugator.strip_trailing(x.generator), x.generator),
    }
}

/// The free quandle operation, `fq_canonicalize(fr_op(x, y))`.
pub fn fq_op(x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
    fq_canonicalize(&fr_op(&x.inner, &y.inner))
}

/// The inverse of left multiplication in the free quandle.
pub fn fq_op_inverse(x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
    fq_canonicalize(&fr_op_inverse(&x.inner, &y.inner))
}

/// Evaluates `x = w ▷ a` in `target` under `a ↦ assignment[a]`.
///
/// For `w = g_1 ... g_k` this is `L_{g_1}(L_{g_2}(... L_{g_k}(f(a))))` where
/// `L_g` is left multiplication by `f(g)` and `L_{g⁻¹}` its inverse: the last
/// letter of the conjugator acts first. This is the order that makes the map
/// a homomorphism, since `(ε, g) ▷ (v, b) = (g v, b)`. On free quandle
/// elements the value only matches the free quandle structure when `target`
/// is a quandle.
pub fn extend_map<E: FormalConjugate>(assignment: &[usize], target: &FiniteRack, x: &E) -> Result<usize, AlgebraError> {
    let image = |g: usize| -> Result<usize, AlgebraError> {
        let v = *assignment.get(g).ok_or_else(|| {
            AlgebraError::InvalidParameter(format!("generator {g} has no image under the assignment"))
        })?;
        if v >= target.size() {
            return Err(AlgebraError::ImageOutOfRange { x: g, image: v, size: target.size() });
        }
        Ok(v)
    };
    let mut value = image(x.generator())?;
    for &Letter { generator, inverse } in x.conjugator().letters().iter().rev() {
        let acting = image(generator)?;
        value = if inverse { target.op_inverse(acting, value) } else { target.op(acting, value) };
    }
    Ok(value)
}

/// Writes `w ▷ a` as `w : a` with generators `g0`, `g1`, ...
impl fmt::Display for FreeRackElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : g{}", self.conjugator, self.generator)
    }
}

impl fmt::Display for FreeQuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_dihedral;
    use crate::free::fg_reduce;

    fn word(letters: &[(usize, bool)]) -> FreeGroupWord {
        fg_reduce(letters.iter().map(|&(g, inverse)| Letter { generator: g, inverse }))
    }

    const A: usize = 0;
    const B: usize = 1;

    #[test]
    fn rack_operation() {
        let a = FreeRackElement::generator_element(A);
        let b = FreeRackElement::generator_element(B);
        assert_eq!(fr_op(&a, &b), FreeRackElement::new(word(&[(A, false)]), B));
        // Not idempotent: a ▷ a = (a, a).
        let aa = fr_op(&a, &a);
        assert_eq!(aa, FreeRackElement::new(word(&[(A, false)]), A));
        assert_ne!(aa, a);
        assert_eq!(fr_op_inverse(&a, &fr_op(&a, &b)), b);
    }

    #[test]
    fn quandle_operation() {
        let a = FreeQuandleElement::generator_element(A);
        let b = FreeQuandleElement::generator_element(B);
        assert_eq!(fq_op(&a, &a), a);
        assert_eq!(fq_op(&a, &b).as_rack_element(), &FreeRackElement::new(word(&[(A, false)]), B));
    }

    #[test]
    fn canonical_form() {
        let x = FreeRackElement::new(word(&[(A, false)]), A);
        assert_eq!(fq_canonicalize(&x), FreeQuandleElement::generator_element(A));
        let ba = FreeRackElement::new(word(&[(B, false), (A, false)]), A);
        let baa = FreeRackElement::new(word(&[(B, false), (A, false), (A, false)]), A);
        assert_eq!(fq_canonicalize(&ba).conjugator(), &word(&[(B, false)]));
        assert_eq!(fq_canonicalize(&baa), fq_canonicalize(&ba));
        let c = fq_canonicalize(&baa);
        assert_eq!(fq_canonicalize(c.as_rack_element()), c);
    }

    #[test]
    fn evaluation() {
        let d3 = make_dihedral(3);
        let assignment = [0, 1];
        let a = FreeRackElement::generator_element(A);
        let b = FreeRackElement::generator_element(B);
        assert_eq!(extend_map(&assignment, d3.as_rack(), &a).unwrap(), 0);
        assert_eq!(extend_map(&assignment, d3.as_rack(), &fr_op(&a, &b)).unwrap(), 2);
        assert!(extend_map(&[0], d3.as_rack(), &b).is_err());
        assert!(extend_map(&[0, 7], d3.as_rack(), &b).is_err());
    }

    #[test]
    fn evaluation_order_matters() {
        // (a b, a) into dihedral(5) with a -> 0, b -> 1: L_0(L_1(0)) = L_0(2) = 3.
        let d5 = make_dihedral(5);
        let x = FreeRackElement::new(word(&[(A, false), (B, false)]), A);
        assert_eq!(extend_map(&[0, 1], d5.as_rack(), &x).unwrap(), 3);
        let y = FreeRackElement::new(word(&[(B, true)]), A);
        assert_eq!(extend_map(&[0, 1], d5.as_rack(), &y).unwrap(), d5.as_rack().op_inverse(1, 0));
    }
}
