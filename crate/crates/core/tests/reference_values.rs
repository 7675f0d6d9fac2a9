//! Integral homology tables computed once by an independent program and
//! frozen here.

use num_bigint::BigUint;
use rackhom::algebra::{make_dihedral, make_trivial, FiniteQuandle};
use rackhom::homology::{CoefficientSpec, RackComplexBundle, Theory};
use rackhom::linalg::AbelianGroupPresentation;

fn g(free: usize, torsion: &[u64]) -> AbelianGroupPresentation {
    AbelianGroupPresentation::from_cyclic(free, torsion.iter().map(|&t| BigUint::from(t)))
}

fn check(q: FiniteQuandle, top: usize, theory: Theory, expected: &[AbelianGroupPresentation]) {
    let bundle = RackComplexBundle::for_quandle(q, top);
    let got = bundle.homology(theory, CoefficientSpec::Integers).unwrap();
    assert_eq!(got, expected, "{theory}");
}

#[test]
fn dihedral3() {
    let q = || make_dihedral(3);
    check(q(), 4, Theory::Rack, &[g(1, &[]), g(1, &[]), g(1, &[]), g(1, &[3]), g(1, &[3, 3])]);
    check(q(), 4, Theory::Quandle, &[g(1, &[]), g(1, &[]), g(0, &[]), g(0, &[3]), g(0, &[3])]);
    check(q(), 4, Theory::Degenerate, &[g(0, &[]), g(0, &[]), g(1, &[]), g(1, &[]), g(1, &[3])]);
}

#[test]
fn trivial2() {
    let free = |ranks: &[usize]| ranks.iter().map(|&r| g(r, &[])).collect::<Vec<_>>();
    check(make_trivial(2), 4, Theory::Rack, &free(&[1, 2, 4, 8, 16]));
    check(make_trivial(2), 4, Theory::Quandle, &free(&[1, 2, 2, 2, 2]));
    check(make_trivial(2), 4, Theory::Degenerate, &free(&[0, 0, 2, 6, 14]));
}

#[test]
fn dihedral4() {
    let q = || make_dihedral(4);
    check(q(), 3, Theory::Rack, &[g(1, &[]), g(2, &[]), g(4, &[2, 2]), g(8, &[2; 6])]);
    check(q(), 3, Theory::Quandle, &[g(1, &[]), g(2, &[]), g(2, &[2, 2]), g(2, &[2; 4])]);
    check(q(), 3, Theory::Degenerate, &[g(0, &[]), g(0, &[]), g(2, &[]), g(6, &[2, 2])]);
}

#[test]
fn dihedral5() {
    let q = || make_dihedral(5);
    check(q(), 3, Theory::Rack, &[g(1, &[]), g(1, &[]), g(1, &[]), g(1, &[5])]);
    check(q(), 3, Theory::Quandle, &[g(1, &[]), g(1, &[]), g(0, &[]), g(0, &[5])]);
    check(q(), 3, Theory::Degenerate, &[g(0, &[]), g(0, &[]), g(1, &[]), g(1, &[])]);
}

#[test]
fn dihedral9_through_degree_four() {
    let q = || make_dihedral(9);
    check(q(), 4, Theory::Rack, &[g(1, &[]), g(1, &[]), g(1, &[]), g(1, &[9]), g(1, &[9, 9])]);
    check(q(), 4, Theory::Quandle, &[g(1, &[]), g(1, &[]), g(0, &[]), g(0, &[9]), g(0, &[9])]);
    check(q(), 4, Theory::Degenerate, &[g(0, &[]), g(0, &[]), g(1, &[]), g(1, &[]), g(1, &[9])]);
}
