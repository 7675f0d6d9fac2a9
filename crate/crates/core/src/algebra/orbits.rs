use super::{AlgebraError, FiniteRack};

/// Orbits of a rack under left translations, numbered in order of their
/// least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbit_of: Vec<usize>,
    pub orbit_count: usize,
}

impl OrbitPartition {
    pub fn members(&self, orbit: usize) -> impl Iterator<Item = usize> + '_ {
        self.orbit_of.iter().enumerate().filter(move |(_, &o)| o == orbit).map(|(x, _)| x)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The partition generated by `y ~ x ▷ y`.
pub fn orbits(rack: &FiniteRack) -> OrbitPartition {
    let n = rack.size();
    let mut parent: Vec<usize> = (0..n).collect();
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (find(&mut parent, y), find(&mut parent, rack.op(x, y)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut orbit_of = vec![0; n];
    let mut orbit_count = 0;
    for x in 0..n {
        let root = find(&mut parent, x);
        if label[root] == usize::MAX {
            label[root] = orbit_count;
            orbit_count += 1;
        }
        orbit_of[x] = label[root];
    }
    OrbitPartition { orbit_of, orbit_count }
}

/// Whether `f(x ▷ y) = f(x) ▷ f(y)` for all `x`, `y`.
pub fn is_homomorphism(f: &[usize], src: &FiniteRack, dst: &FiniteRack) -> Result<bool, AlgebraError> {
    if f.len() != src.size() {
        return Err(AlgebraError::MapLength { expected: src.size(), found: f.len() });
    }
    if let Some((x, &image)) = f.iter().enumerate().find(|(_, &v)| v >= dst.size()) {
        return Err(AlgebraError::ImageOutOfRange { x, image, size: dst.size() });
    }
    let n = src.size();
    Ok((0..n).all(|x| (0..n).all(|y| f[src.op(x, y)] == dst.op(f[x], f[y]))))
}
