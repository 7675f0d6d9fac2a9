//! Arbitrary-precision integers with an inline machine-word fast path.
//!
//! Boundary matrices of rack complexes are dominated by entries in `{-2..2}`,
//! so almost every operation stays in `i64`. Any operation that would
//! overflow is redone in [`BigInt`], and results that fit back into a word are
//! demoted again, so equal values always have equal representations.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Large(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn normalize(big: BigInt) -> Integer {
        match big.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Large(big),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Large(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    /// True for `1` and `-1`.
    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Large(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Large(BigInt::from(*v).abs()),
            },
            Integer::Large(b) => Integer::normalize(b.abs()),
        }
    }

    pub fn magnitude(&self) -> BigUint {
        match self {
            Integer::Small(v) => BigUint::from(v.unsigned_abs()),
            Integer::Large(b) => b.magnitude().clone(),
        }
    }

    /// Compares absolute values.
    pub fn cmp_abs(&self, other: &Integer) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.magnitude().cmp(&other.magnitude()),
        }
    }

    pub fn neg(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Large(-BigInt::from(*v)),
            },
            Integer::Large(b) => Integer::normalize(-b),
        }
    }

    pub fn add(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(s) = a.checked_add(*b) {
                return Integer::Small(s);
            }
        }
        Integer::normalize(self.to_bigint() + other.to_bigint())
    }

    pub fn sub(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(s) = a.checked_sub(*b) {
                return Integer::Small(s);
            }
        }
        Integer::normalize(self.to_bigint() - other.to_bigint())
    }

    pub fn mul(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(p) = a.checked_mul(*b) {
                return Integer::Small(p);
            }
        }
        Integer::normalize(self.to_bigint() * other.to_bigint())
    }

    /// `self - q * other`, the elimination step.
    pub fn sub_mul(&self, q: &Integer, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(q), Integer::Small(b)) = (self, q, other) {
            if let Some(r) = q.checked_mul(*b).and_then(|p| a.checked_sub(p)) {
                return Integer::Small(r);
            }
        }
        Integer::normalize(self.to_bigint() - q.to_bigint() * other.to_bigint())
    }

    /// Quotient rounded towards zero. Panics on a zero divisor.
    pub fn div_trunc(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(q) = a.checked_div(*b) {
                return Integer::Small(q);
            }
        }
        Integer::normalize(self.to_bigint() / other.to_bigint())
    }

    /// Quotient rounded to the nearest integer, so that the remainder
    /// `self - q * other` has absolute value at most `|other| / 2`.
    pub fn div_nearest(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if *b != 0 && *b != i64::MIN && *a != i64::MIN {
                let (q, r) = (a / b, a % b);
                let q = if 2 * r.unsigned_abs() > b.unsigned_abs() {
                    if (r < 0) == (*b < 0) {
                        q + 1
                    } else {
                        q - 1
                    }
                } else {
                    q
                };
                return Integer::Small(q);
            }
        }
        let (a, b) = (self.to_bigint(), other.to_bigint());
        let (q, r) = a.div_rem(&b);
        let q = if (r.abs() * 2u32) > b.abs() {
            if r.sign() == b.sign() {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        };
        Integer::normalize(q)
    }

    pub fn is_divisible_by(&self, other: &Integer) -> bool {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(r) = a.checked_rem(*b) {
                return r == 0;
            }
        }
        (self.to_bigint() % other.to_bigint()).is_zero()
    }

    pub fn gcd(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            let g = a.unsigned_abs().gcd(&b.unsigned_abs());
            if let Ok(g) = i64::try_from(g) {
                return Integer::Small(g);
            }
        }
        Integer::normalize(self.to_bigint().gcd(&other.to_bigint()))
    }

    /// Residue in `[0, m)`.
    pub fn rem_euclid_u64(&self, m: u64) -> u64 {
        match self {
            Integer::Small(v) => (*v as i128).rem_euclid(m as i128) as u64,
            Integer::Large(b) => {
                let r = b.mod_floor(&BigInt::from(m));
                r.to_u64().expect("residue below modulus")
            }
        }
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer::normalize(v)
    }
}

impl From<BigUint> for Integer {
    fn from(v: BigUint) -> Self {
        Integer::normalize(BigInt::from_biguint(Sign::Plus, v))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Large(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
