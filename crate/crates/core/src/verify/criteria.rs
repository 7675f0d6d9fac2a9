use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::algebra::{is_homomorphism, make_trivial, orbits, FiniteRack};
use crate::free::{
    extend_map, fq_canonicalize, fq_op, fq_op_inverse, fr_op, fr_op_inverse, random_rack_element, reduced_words,
    FormalConjugate, FreeGroupWord, FreeRackElement,
};
use crate::homology::{
    degenerate_support_check, quillen_cohomology, rack_homology, two_cocycles, AlgebraicTheory, CoefficientSpec,
    HomologyError, RackComplexBundle, Theory,
};
use crate::linalg::{compose_check, fp_homology_dim, AbelianGroupPresentation};

use super::corpus::Corpus;
use super::oracle::oracle_homology;

/// Time limits, pinned.
pub const TRIVIAL_HOMOLOGY_LIMIT: Duration = Duration::from_secs(10);
pub const LOW_DEGREE_LIMIT: Duration = Duration::from_secs(30);

/// Random samples per free-structure property.
pub const FREE_SAMPLES: usize = 1000;
/// Longest conjugator drawn for the free-structure properties.
pub const FREE_WORD_LENGTH: usize = 8;
/// Conjugator length bound for the two-generator normal form check.
pub const FQ2_CONJUGATOR_LENGTH: usize = 4;
const SEED: u64 = 0x5eed_7ac5;

/// Result of one acceptance check.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} ({}; {:.2?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

/// Collects failures; the first few are kept for the report.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    fn finish(self, id: u8, name: &'static str, start: Instant, limit: Option<Duration>) -> CriterionOutcome {
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let mut detail = format!("{} checks, {} failed", self.checks, self.failures.len());
        if let Some(l) = limit {
            detail.push_str(&format!(", limit {l:?}"));
            if !in_time {
                detail.push_str(" exceeded");
            }
        }
        if let Some(first) = self.failures.first() {
            detail.push_str(&format!("; first: {first}"));
        }
        CriterionOutcome { id, name, passed: self.failures.is_empty() && in_time, detail, elapsed }
    }
}

fn fail(e: HomologyError) -> String {
    format!("error: {e}")
}

fn order_of_power(m: u64, k: usize) -> BigUint {
    BigUint::from(m).pow(k as u32)
}

pub fn trivial_rack_homology() -> CriterionOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for h in 1..=3usize {
        let q = make_trivial(h);
        match rack_homology(q.as_rack(), 4, CoefficientSpec::Integers) {
            Ok(groups) => {
                for (p, g) in groups.iter().enumerate() {
                    let expected = AbelianGroupPresentation::free(h.pow(p as u32));
                    t.check(*g == expected, || format!("trivial({h}) HR_{p} = {g}, expected {expected}"));
                }
            }
            Err(e) => t.check(false, || fail(e)),
        }
    }
    t.finish(1, "trivial rack homology is free of rank h^p", start, Some(TRIVIAL_HOMOLOGY_LIMIT))
}

pub fn low_degree_laws(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let tallies: Vec<Tally> = corpus
        .entries
        .par_iter()
        .map(|entry| {
            let mut t = Tally::default();
            let rack = entry.quandle.as_rack();
            let k = orbits(rack).orbit_count;
            // Degrees 0 and 1 only need a bundle through degree 1.
            let bundle = RackComplexBundle::new(rack.clone(), 1);
            let name = &entry.name;
            let z = CoefficientSpec::Integers;
            match bundle.homology(Theory::Rack, z) {
                Ok(h) => {
                    t.check(h[0] == AbelianGroupPresentation::free(1), || format!("{name}: HR_0 = {}", h[0]));
                    t.check(h[1] == AbelianGroupPresentation::free(k), || format!("{name}: HR_1 = {}, {k} orbits", h[1]));
                }
                Err(e) => t.check(false, || fail(e)),
            }
            for m in 2..=4u64 {
                match bundle.cohomology(Theory::Rack, CoefficientSpec::Cyclic(m)) {
                    Ok(h) => {
                        let (o0, o1) = (h[0].order(), h[1].order());
                        t.check(o0 == Some(BigUint::from(m)), || format!("{name}: |HR^0(Z/{m})| = {o0:?}"));
                        t.check(o1 == Some(order_of_power(m, k)), || format!("{name}: |HR^1(Z/{m})| = {o1:?}"));
                    }
                    Err(e) => t.check(false, || fail(e)),
                }
            }
            t
        })
        .collect();
    let t = tallies.into_iter().fold(Tally::default(), Tally::merge);
    t.finish(2, "degree 0 and 1 (co)homology", start, Some(LOW_DEGREE_LIMIT))
}

pub fn differentials_square_to_zero(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for (entry, bundle) in corpus.iter() {
        for theory in Theory::ALL {
            match bundle.complex(theory) {
                Ok(c) => t.check(compose_check(c), || format!("{}: {theory} boundaries do not compose to 0", entry.name)),
                Err(e) => t.check(false, || fail(e)),
            }
        }
    }
    t.finish(3, "boundaries compose to zero", start, None)
}

pub fn degenerate_subcomplex(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for entry in &corpus.entries {
        for n in 0..=corpus.max_degree {
            let ok = degenerate_support_check(entry.quandle.as_rack(), n);
            t.check(ok, || format!("{}: degenerate {n}-tuples leave the subcomplex", entry.name));
        }
    }
    t.finish(4, "degenerate tuples span a subcomplex", start, None)
}

pub fn splitting(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let coeffs = [CoefficientSpec::Integers, CoefficientSpec::Cyclic(2), CoefficientSpec::Cyclic(3)];
    let prepare: Vec<_> = corpus.bundles.iter().flat_map(|b| Theory::ALL.map(|th| (b, th))).collect();
    prepare.par_iter().for_each(|(b, th)| {
        if let Ok(c) = b.complex(*th) {
            c.prepare();
        }
    });
    let mut t = Tally::default();
    for (entry, bundle) in corpus.iter() {
        for coeff in coeffs {
            let all = (bundle.homology(Theory::Rack, coeff), bundle.homology(Theory::Quandle, coeff), bundle.homology(Theory::Degenerate, coeff));
            match all {
                (Ok(r), Ok(q), Ok(d)) => {
                    for n in 0..r.len() {
                        let sum = q[n].direct_sum(&d[n]);
                        t.check(r[n] == sum, || {
                            format!("{} ({coeff}) degree {n}: HR = {}, HQ + HD = {sum}", entry.name, r[n])
                        });
                    }
                }
                (r, q, d) => {
                    let e = r.err().or(q.err()).or(d.err()).expect("one failed");
                    t.check(false, || fail(e));
                }
            }
        }
    }
    t.finish(5, "HR = HQ + HD", start, None)
}

/// Counts maps `X -> trivial(m)` that are rack morphisms, by enumeration.
pub fn count_morphisms_to_trivial(rack: &FiniteRack, m: usize) -> usize {
    let target = make_trivial(m);
    let n = rack.size();
    let total = m.pow(n as u32);
    let mut f = vec![0usize; n];
    (0..total)
        .filter(|&code| {
            let mut c = code;
            for slot in f.iter_mut() {
                *slot = c % m;
                c /= m;
            }
            is_homomorphism(&f, rack, target.as_rack()).expect("images are in range")
        })
        .count()
}

pub fn quillen_shift(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let coeffs = [CoefficientSpec::Integers, CoefficientSpec::Cyclic(2), CoefficientSpec::Cyclic(3)];
    let jobs: Vec<_> = corpus
        .iter()
        .flat_map(|(e, b)| [AlgebraicTheory::Rack, AlgebraicTheory::Quandle].map(move |th| (e, b, th)))
        .flat_map(|(e, b, th)| (0..corpus.max_degree).flat_map(move |n| coeffs.map(move |c| (e, b, th, n, c))))
        .collect();
    let tallies: Vec<Tally> = jobs
        .par_iter()
        .map(|&(entry, bundle, theory, n, coeff)| {
            let mut t = Tally::default();
            let shifted = quillen_cohomology(entry.quandle.as_rack(), theory, n, coeff);
            let direct = bundle.cohomology_at(theory.complex(), n + 1, coeff);
            match (shifted, direct) {
                (Ok(d), Ok(h)) => t.check(d == h, || format!("{} {theory} D^{n}({coeff}) = {d}, H^{} = {h}", entry.name, n + 1)),
                (Err(e), _) | (_, Err(e)) => t.check(false, || fail(e)),
            }
            t
        })
        .collect();
    let mut t = tallies.into_iter().fold(Tally::default(), Tally::merge);
    for (entry, bundle) in corpus.iter() {
        let rack = entry.quandle.as_rack();
        let k = orbits(rack).orbit_count;
        for m in 2..=4u64 {
            let coeff = CoefficientSpec::Cyclic(m);
            for theory in [AlgebraicTheory::Rack, AlgebraicTheory::Quandle] {
                match bundle.quillen_cohomology(theory, 0, coeff) {
                    Ok(d0) => {
                        let order = d0.order();
                        t.check(order == Some(order_of_power(m, k)), || {
                            format!("{} {theory}: |D^0(Z/{m})| = {order:?}, {k} orbits", entry.name)
                        });
                        if rack.size() <= 5 {
                            let count = count_morphisms_to_trivial(rack, m as usize);
                            t.check(order == Some(BigUint::from(count)), || {
                                format!("{}: {count} morphisms to trivial({m}), |D^0| = {order:?}", entry.name)
                            });
                        }
                    }
                    Err(e) => t.check(false, || fail(e)),
                }
            }
        }
    }
    t.finish(6, "Quillen cohomology is cohomology one degree up", start, None)
}

pub fn cocycles_match_cohomology(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for (entry, bundle) in corpus.iter() {
        let rack = entry.quandle.as_rack();
        for p in [2u64, 3, 5] {
            let coeff = CoefficientSpec::Cyclic(p);
            for theory in [AlgebraicTheory::Rack, AlgebraicTheory::Quandle] {
                match (two_cocycles(rack, coeff, theory), bundle.cohomology_at(theory.complex(), 2, coeff)) {
                    (Ok(basis), Ok(h2)) => {
                        t.check(basis.order() == h2.order(), || {
                            format!("{} {theory} Z/{p}: cocycles give {}, H^2 = {h2}", entry.name, basis.group)
                        });
                        let sound = basis.representatives.iter().all(|phi| crate::homology::is_two_cocycle(rack, phi, p));
                        t.check(sound, || format!("{} {theory} Z/{p}: a representative is not a cocycle", entry.name));
                    }
                    (Err(e), _) | (_, Err(e)) => t.check(false, || fail(e)),
                }
            }
        }
    }
    t.finish(7, "2-cocycles agree with H^2", start, None)
}

pub fn oracle_agreement() -> CriterionOutcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let top = 3;
    for (name, q) in [("dihedral(3)", crate::algebra::make_dihedral(3)), ("trivial(2)", make_trivial(2))] {
        let bundle = RackComplexBundle::for_quandle(q.clone(), top);
        let table = q.as_rack().table().rows();
        for (kind, theory) in [("rack", Theory::Rack), ("quandle", Theory::Quandle), ("degenerate", Theory::Degenerate)] {
            let reference = oracle_homology(&table, kind, top);
            match bundle.homology(theory, CoefficientSpec::Integers) {
                Ok(groups) => {
                    for (n, ((free, torsion), g)) in reference.iter().zip(&groups).enumerate() {
                        let expected =
                            AbelianGroupPresentation::from_cyclic(*free, torsion.iter().map(|d| d.magnitude().clone()));
                        t.check(expected == *g, || format!("{name} {kind} degree {n}: {g}, reference {expected}"));
                    }
                }
                Err(e) => t.check(false, || fail(e)),
            }
        }
    }
    t.finish(8, "agreement with a dense reference", start, None)
}

pub fn free_structures() -> CriterionOutcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut t = Tally::default();

    for _ in 0..FREE_SAMPLES {
        let g = rng.gen_range(1..=3);
        let [x, y, z] = [0; 3].map(|_| random_rack_element(&mut rng, g, FREE_WORD_LENGTH));
        t.check(fr_op_inverse(&x, &fr_op(&x, &y)) == y, || format!("FR: inverse action fails on {x}, {y}"));
        t.check(fr_op(&x, &fr_op_inverse(&x, &y)) == y, || format!("FR: action is not onto at {x}, {y}"));
        let lhs = fr_op(&x, &fr_op(&y, &z));
        let rhs = fr_op(&fr_op(&x, &y), &fr_op(&x, &z));
        t.check(lhs == rhs, || format!("FR: self-distributivity fails on {x}, {y}, {z}"));

        let [qx, qy, qz] = [&x, &y, &z].map(fq_canonicalize);
        t.check(fq_op(&qx, &qx) == qx, || format!("FQ: {qx} is not idempotent"));
        t.check(fq_op_inverse(&qx, &fq_op(&qx, &qy)) == qy, || format!("FQ: inverse action fails on {qx}, {qy}"));
        let lhs = fq_op(&qx, &fq_op(&qy, &qz));
        let rhs = fq_op(&fq_op(&qx, &qy), &fq_op(&qx, &qz));
        t.check(lhs == rhs, || format!("FQ: self-distributivity fails on {qx}, {qy}, {qz}"));
        t.check(fq_canonicalize(qx.as_rack_element()) == qx, || format!("FQ: canonical form of {qx} moves"));
    }
    // The free rack is not a quandle.
    let a = FreeRackElement::generator_element(0);
    t.check(fr_op(&a, &a) != a, || "FR: a ▷ a = a".into());

    // Evaluation into every small corpus quandle ignores the canonical form
    // and is a homomorphism.
    for entry in super::corpus::default_corpus().iter().filter(|e| e.quandle.size() <= 6) {
        let target = entry.quandle.as_rack();
        for _ in 0..FREE_SAMPLES / 4 {
            let g = rng.gen_range(1..=3);
            let assignment: Vec<usize> = (0..g).map(|_| rng.gen_range(0..target.size())).collect();
            let x = random_rack_element(&mut rng, g, FREE_WORD_LENGTH);
            let y = random_rack_element(&mut rng, g, FREE_WORD_LENGTH);
            let eval = |e: &dyn Fn() -> Result<usize, crate::algebra::AlgebraError>| e().ok();
            let fx = eval(&|| extend_map(&assignment, target, &x));
            let fcx = eval(&|| extend_map(&assignment, target, &fq_canonicalize(&x)));
            t.check(fx.is_some() && fx == fcx, || format!("{}: {x} and its canonical form evaluate apart", entry.name));
            let fy = eval(&|| extend_map(&assignment, target, &y));
            let fxy = eval(&|| extend_map(&assignment, target, &fr_op(&x, &y)));
            let expected = fx.zip(fy).map(|(u, v)| target.op(u, v));
            t.check(fxy.is_some() && fxy == expected, || format!("{}: evaluation of {x} ▷ {y} is not multiplicative", entry.name));
        }
    }

    // Two generators: canonical elements up to the length bound are in
    // bijection with the reduced conjugates w g w⁻¹.
    let words = reduced_words(2, FQ2_CONJUGATOR_LENGTH);
    let canonical: Vec<_> = words
        .iter()
        .flat_map(|w| (0..2).map(move |g| (w, g)))
        .filter(|(w, g)| !w.ends_with_generator(*g))
        .map(|(w, g)| fq_canonicalize(&FreeRackElement::new(w.clone(), g)))
        .collect();
    let expected_count = 2 * 3usize.pow(FQ2_CONJUGATOR_LENGTH as u32);
    t.check(canonical.len() == expected_count, || format!("FQ2: {} canonical elements, expected {expected_count}", canonical.len()));
    let mut conjugates: Vec<FreeGroupWord> = canonical.iter().map(|x| x.as_group_element()).collect();
    let lengths_ok = canonical.iter().zip(&conjugates).all(|(x, c)| c.len() == 2 * x.conjugator().len() + 1);
    t.check(lengths_ok, || "FQ2: a conjugate w g w⁻¹ cancels".into());
    conjugates.sort();
    conjugates.dedup();
    t.check(conjugates.len() == canonical.len(), || "FQ2: two canonical elements give the same conjugate".into());
    // Every reduced conjugate of a generator of that length is hit.
    let all_conjugates = reduced_words(2, 2 * FQ2_CONJUGATOR_LENGTH + 1)
        .into_iter()
        .filter(|u| {
            let k = u.len() / 2;
            let l = u.letters();
            u.len() % 2 == 1 && !l[k].inverse && l[..k].iter().rev().zip(&l[k + 1..]).all(|(p, q)| *q == p.inverted())
        })
        .count();
    t.check(all_conjugates == conjugates.len(), || {
        format!("FQ2: {all_conjugates} reduced conjugates, {} canonical elements", conjugates.len())
    });
    t.finish(9, "free rack and free quandle properties", start, None)
}

pub fn prime_field_agreement(corpus: &Corpus) -> CriterionOutcome {
    let start = Instant::now();
    let jobs: Vec<_> = corpus
        .iter()
        .flat_map(|(e, b)| Theory::ALL.map(move |th| (e, b, th)))
        .flat_map(|(e, b, th)| [2u64, 3, 5].map(move |p| (e, b, th, p)))
        .collect();
    let tallies: Vec<Tally> = jobs
        .par_iter()
        .map(|&(entry, bundle, theory, p)| {
            let mut t = Tally::default();
            let Ok(c) = bundle.complex(theory) else {
                t.check(false, || format!("{}: no {theory} complex", entry.name));
                return t;
            };
            for n in 0..=corpus.max_degree {
                let via_integers = bundle.homology_at(theory, n, CoefficientSpec::Cyclic(p));
                let direct = fp_homology_dim(c, n, p);
                match (via_integers, direct) {
                    (Ok(g), Ok(dim)) => {
                        let elementary = g.free_rank() == 0 && g.torsion().iter().all(|d| *d == BigUint::from(p));
                        t.check(elementary && g.length() == dim, || {
                            format!("{} {theory} degree {n} mod {p}: {g} against dimension {dim}", entry.name)
                        });
                    }
                    (Err(e), _) => t.check(false, || fail(e)),
                    (_, Err(e)) => t.check(false, || format!("error: {e}")),
                }
            }
            t
        })
        .collect();
    let t = tallies.into_iter().fold(Tally::default(), Tally::merge);
    t.finish(10, "universal coefficients agree with prime-field elimination", start, None)
}

/// All ten criteria on the default corpus, in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    let corpus = Corpus::default_corpus();
    vec![
        trivial_rack_homology(),
        low_degree_laws(&corpus),
        differentials_square_to_zero(&corpus),
        degenerate_subcomplex(&corpus),
        splitting(&corpus),
        quillen_shift(&corpus),
        cocycles_match_cohomology(&corpus),
        oracle_agreement(),
        free_structures(),
        prime_field_agreement(&corpus),
    ]
}

/// Negative control for criterion 3: builds the rack complex of dihedral(3)
/// with one action face sign flipped and reports whether `compose_check`
/// rejects it.
pub fn sign_error_is_caught() -> bool {
    use crate::homology::boundary::{boundary_between, FaceSigns};
    use crate::homology::{BasisKind, TupleBasis};
    use crate::linalg::ChainComplex;
    let rack = crate::algebra::make_dihedral(3);
    let broken = FaceSigns { flip_action_at: Some(1), ..FaceSigns::default() };
    let bases: Vec<_> = (0..=3).map(|n| TupleBasis::new(3, n, BasisKind::Full)).collect();
    let boundaries = (1..=3).map(|n| boundary_between(rack.as_rack(), &bases[n], &bases[n - 1], broken)).collect();
    let c = ChainComplex::new(bases.iter().map(TupleBasis::len).collect(), boundaries).expect("shapes match");
    !compose_check(&c)
}
