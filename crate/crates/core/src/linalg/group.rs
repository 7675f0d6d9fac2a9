use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::smith::divisibility_chain;

/// A finitely generated abelian group `Z^free_rank + Z/t_1 + ... + Z/t_k`
/// with `1 < t_1 | t_2 | ... | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroupPresentation {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianGroupPresentation {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupPresentation { free_rank: rank, torsion: Vec::new() }
    }

    /// `(Z/m)^count`.
    pub fn cyclic_power(m: &BigUint, count: usize) -> Self {
        Self::from_cyclic(0, std::iter::repeat_n(m.clone(), count))
    }

    /// Normalizes an arbitrary direct sum of cyclic groups. Orders of zero
    /// stand for `Z`; orders of one are dropped.
    pub fn from_cyclic<I: IntoIterator<Item = BigUint>>(free_rank: usize, orders: I) -> Self {
        let mut free_rank = free_rank;
        let mut finite = Vec::new();
        for d in orders {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                finite.push(d);
            }
        }
        AbelianGroupPresentation { free_rank, torsion: divisibility_chain(finite) }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of cyclic summands; the dimension when the group is a vector
    /// space over a prime field.
    pub fn length(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Group order, or `None` for infinite groups.
    pub fn order(&self) -> Option<BigUint> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// `G (x) Z/m`.
    pub fn tensor_cyclic(&self, m: &BigUint) -> Self {
        Self::from_cyclic(
            0,
            std::iter::repeat_n(m.clone(), self.free_rank)
                .chain(self.torsion.iter().map(|t| t.gcd(m))),
        )
    }

    /// `Tor(G, Z/m)`, which only sees the torsion of `G`.
    pub fn tor_cyclic(&self, m: &BigUint) -> Self {
        Self::from_cyclic(0, self.torsion.iter().map(|t| t.gcd(m)))
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|u| *u == t).count();
            if run == 1 {
                parts.push(format!("Z/{t}"));
            } else {
                parts.push(format!("(Z/{t})^{run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}
