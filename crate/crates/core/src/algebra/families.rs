//! Standard families of finite quandles.

use num_integer::Integer as _;

use super::{validate_quandle, validate_rack, AlgebraError, BinaryTable, FiniteQuandle, GroupViolation};

fn quandle_from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> FiniteQuandle {
    let table = BinaryTable::from_fn(size, f).expect("family formula stays in range");
    let rack = validate_rack(table).expect("family member satisfies the rack axioms");
    validate_quandle(rack).expect("family member is idempotent")
}

/// `x ▷ y = y` on `h` elements.
pub fn make_trivial(h: usize) -> FiniteQuandle {
    quandle_from_fn(h, |_, y| y)
}

/// `x ▷ y = 2x - y mod n`. `n = 0` gives the empty quandle.
pub fn make_dihedral(n: usize) -> FiniteQuandle {
    quandle_from_fn(n, |x, y| (2 * x + n - y) % n)
}

/// `x ▷ y = t·y + (1 - t)·x mod n` for a unit `t`.
///
/// With `t = -1` this is exactly [`make_dihedral`].
pub fn make_alexander(n: usize, t: i64) -> Result<FiniteQuandle, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("Alexander quandle needs n >= 1".into()));
    }
    let modulus = n as i64;
    let t = t.rem_euclid(modulus);
    if t.gcd(&modulus) != 1 {
        return Err(AlgebraError::NotAUnit { t, n });
    }
    let s = (1 - t).rem_euclid(modulus);
    Ok(quandle_from_fn(n, |x, y| ((t * y as i64 + s * x as i64) % modulus) as usize))
}

/// Checks that `table` is a group with the given inverse map.
pub fn validate_group(table: &BinaryTable, inverse: &[usize]) -> Result<usize, Vec<GroupViolation>> {
    let n = table.size();
    if inverse.len() != n || inverse.iter().any(|&i| i >= n) {
        return Err(vec![GroupViolation::InverseMap]);
    }
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table.get(table.get(x, y), z) != table.get(x, table.get(y, z)) {
                    violations.push(GroupViolation::Associativity { x, y, z });
                }
            }
        }
    }
    let identity = (0..n).find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x));
    match identity {
        None => violations.push(GroupViolation::NoIdentity),
        Some(e) => {
            for x in 0..n {
                if table.get(x, inverse[x]) != e || table.get(inverse[x], x) != e {
                    violations.push(GroupViolation::Inverse { x });
                }
            }
        }
    }
    match (violations.is_empty(), identity) {
        (true, Some(e)) => Ok(e),
        _ => Err(violations),
    }
}

/// `x ▷ y = x y x⁻¹` in a finite group.
pub fn make_conjugation(group_table: &BinaryTable, inverse: &[usize]) -> Result<FiniteQuandle, AlgebraError> {
    validate_group(group_table, inverse).map_err(AlgebraError::NotAGroup)?;
    Ok(quandle_from_fn(group_table.size(), |x, y| {
        group_table.get(group_table.get(x, y), inverse[x])
    }))
}

/// A group as a multiplication table plus inverse map.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub table: BinaryTable,
    pub inverse: Vec<usize>,
}

/// `Z/n` under addition.
pub fn cyclic_group(n: usize) -> GroupTable {
    GroupTable {
        table: BinaryTable::from_fn(n, |x, y| (x + y) % n).expect("in range"),
        inverse: (0..n).map(|x| (n - x) % n).collect(),
    }
}

/// The six permutations of `{0, 1, 2}` in lexicographic order of their
/// images, composed as functions: `(p·q)(i) = p(q(i))`.
pub fn symmetric_group_s3() -> GroupTable {
    let perms: Vec<[usize; 3]> =
        vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation listed");
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let table = BinaryTable::from_fn(6, |a, b| index(compose(perms[a], perms[b]))).expect("closed");
    let inverse = (0..6)
        .map(|a| {
            let p = perms[a];
            let mut inv = [0; 3];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            index(inv)
        })
        .collect();
    GroupTable { table, inverse }
}

/// The quaternion group, elements ordered `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion_group() -> GroupTable {
    // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; element = 2 * unit + (negative as usize)
    fn unit_product(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, u) | (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!("units are 0..4"),
        }
    }
    let table = BinaryTable::from_fn(8, |x, y| {
        let (neg, unit) = unit_product(x / 2, y / 2);
        let negative = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
        2 * unit + negative as usize
    })
    .expect("closed");
    let inverse = (0..8).map(|x| if x < 2 { x } else { x ^ 1 }).collect();
    GroupTable { table, inverse }
}

pub fn conjugation_s3() -> FiniteQuandle {
    let g = symmetric_group_s3();
    make_conjugation(&g.table, &g.inverse).expect("S3 is a group")
}

pub fn conjugation_q8() -> FiniteQuandle {
    let g = quaternion_group();
    make_conjugation(&g.table, &g.inverse).expect("Q8 is a group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::orbits;

    #[test]
    fn trivial_tables() {
        assert_eq!(make_trivial(2).as_rack().table().rows(), vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(make_trivial(0).size(), 0);
        assert_eq!(make_trivial(1).size(), 1);
    }

    #[test]
    fn dihedral_tables() {
        assert_eq!(make_dihedral(3).as_rack().table().row(0), &[0, 2, 1]);
        assert_eq!(make_dihedral(1).size(), 1);
        for n in 1..=12 {
            let q = make_dihedral(n);
            assert!((0..n).all(|x| q.op(x, x) == x));
        }
    }

    #[test]
    fn alexander_examples() {
        let q = make_alexander(5, 2).unwrap();
        assert_eq!(q.op(1, 3), 0);
        assert_eq!(make_alexander(4, 1).unwrap(), make_trivial(4));
        assert_eq!(make_alexander(3, 2).unwrap(), make_dihedral(3));
        for n in 2..=10 {
            assert_eq!(make_alexander(n, -1).unwrap(), make_dihedral(n));
        }
        assert!(matches!(make_alexander(8, 2), Err(AlgebraError::NotAUnit { t: 2, n: 8 })));
        assert!(make_alexander(8, 3).is_ok());
    }

    #[test]
    fn group_tables_validate() {
        for g in [symmetric_group_s3(), quaternion_group(), cyclic_group(5), cyclic_group(1)] {
            assert!(validate_group(&g.table, &g.inverse).is_ok());
        }
        let mut bad = cyclic_group(3);
        bad.inverse[1] = 1;
        assert_eq!(validate_group(&bad.table, &bad.inverse), Err(vec![GroupViolation::Inverse { x: 1 }]));
        let t = BinaryTable::new(2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(make_conjugation(&t, &[0, 0]).is_err());
    }

    #[test]
    fn conjugation_quandles() {
        for n in 1..=6 {
            let g = cyclic_group(n);
            assert_eq!(make_conjugation(&g.table, &g.inverse).unwrap(), make_trivial(n));
        }
        assert_eq!(orbits(conjugation_s3().as_rack()).orbit_count, 3);
        assert_eq!(orbits(conjugation_q8().as_rack()).orbit_count, 5);
    }

    /// Conjugacy classes of S3, by brute force.
    #[test]
    fn s3_classes_by_brute_force() {
        let g = symmetric_group_s3();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for y in 0..6 {
            let mut class: Vec<usize> = (0..6).map(|x| g.table.get(g.table.get(x, y), g.inverse[x])).collect();
            class.sort();
            class.dedup();
            if !classes.contains(&class) {
                classes.push(class);
            }
        }
        assert_eq!(classes.len(), 3);
    }
}
