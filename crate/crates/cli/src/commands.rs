use std::path::Path;
use std::time::Instant;

use rackhom::algebra::{
    conjugation_q8, conjugation_s3, make_alexander, make_dihedral, make_trivial, validate_quandle, validate_rack,
    FiniteQuandle, FiniteRack,
};
use rackhom::free::{fq_canonicalize, fq_op, fq_op_inverse, fr_op, fr_op_inverse, Alphabet};
use rackhom::homology::{two_cocycles, AlgebraicTheory, CoefficientSpec, HomologyError, RackComplexBundle, Theory};
use rackhom::verify::{run_all, sign_error_is_caught};

use crate::document::{Body, DegreeResult, Group, Input, QuillenDegree, ResultDocument, Timing};
use crate::rackfile::{diagnostics, load_rack, Convention, RackFile};
use crate::CliError;

fn math(e: HomologyError) -> CliError {
    match e {
        HomologyError::Parse(msg) => CliError::Usage(msg),
        HomologyError::DegreeOutOfRange { .. } => CliError::Usage(e.to_string()),
        other => CliError::Math(other.to_string()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("documents serialize"));
}

/// Refuses computations whose largest chain group, of rank
/// `size^top_degree`, is over the budget.
fn check_budget(size: usize, top_degree: usize, budget: u64) -> Result<(), CliError> {
    let rank = (size as u64).checked_pow(top_degree as u32);
    match rank {
        Some(r) if r <= budget => Ok(()),
        _ => Err(CliError::Usage(format!(
            "degree {top_degree} needs a basis of {size}^{top_degree} tuples, over the budget of {budget}; \
             lower the degree or raise RACKHOM_BASIS_BUDGET"
        ))),
    }
}

fn input(path: &Path, rack: &FiniteRack, convention: Option<Convention>) -> Input {
    let convention = convention
        .or_else(|| RackFile::read(path).ok().and_then(|f| f.convention))
        .unwrap_or_default();
    Input { source: path.display().to_string(), size: rack.size(), convention: convention.to_string() }
}

fn timing(start: Instant) -> Timing {
    Timing { elapsed_seconds: start.elapsed().as_secs_f64() }
}

/// Quandle theories need the input to be a quandle.
fn require_quandle(rack: &FiniteRack, needed: bool) -> Result<(), CliError> {
    if needed {
        validate_quandle(rack.clone()).map_err(|v| CliError::Math(format!("not a quandle\n{}", diagnostics(&v))))?;
    }
    Ok(())
}

pub fn check(path: &Path, convention: Option<Convention>, quandle: bool) -> Result<(), CliError> {
    let table = RackFile::read(path)?.table(convention)?;
    let rack = validate_rack(table)
        .map_err(|v| CliError::Math(format!("{}: rack axioms fail\n{}", path.display(), diagnostics(&v))))?;
    if quandle {
        validate_quandle(rack.clone())
            .map_err(|v| CliError::Math(format!("{}: not a quandle\n{}", path.display(), diagnostics(&v))))?;
        println!("{}: quandle with {} elements", path.display(), rack.size());
    } else {
        println!("{}: rack with {} elements", path.display(), rack.size());
    }
    Ok(())
}

pub fn family(name: &str, params: &[i64]) -> Result<(), CliError> {
    let size = |p: i64| usize::try_from(p).map_err(|_| CliError::Usage(format!("size must be nonnegative, got {p}")));
    let quandle: FiniteQuandle = match (name, params) {
        ("trivial", &[n]) => make_trivial(size(n)?),
        ("dihedral", &[n]) if n >= 1 => make_dihedral(size(n)?),
        ("alexander", &[n, t]) if n >= 1 => make_alexander(size(n)?, t).map_err(|e| CliError::Usage(e.to_string()))?,
        ("conjugation-s3", &[]) => conjugation_s3(),
        ("conjugation-q8", &[]) => conjugation_q8(),
        _ => {
            return Err(CliError::Usage(format!(
                "unknown family {name} {params:?}; expected trivial N, dihedral N, alexander N T, conjugation-s3 or conjugation-q8"
            )))
        }
    };
    let file = RackFile::from_rack(quandle.as_rack());
    println!("{}", serde_json::to_string(&file).expect("rack files serialize"));
    Ok(())
}

pub fn homology(
    path: &Path,
    convention: Option<Convention>,
    theory: Theory,
    max_degree: usize,
    coeff: CoefficientSpec,
    budget: u64,
    cohomology: bool,
) -> Result<(), CliError> {
    let rack = load_rack(path, convention)?;
    require_quandle(&rack, theory != Theory::Rack)?;
    // Degree N needs the boundary out of degree N + 1.
    check_budget(rack.size(), max_degree + 1, budget)?;
    let start = Instant::now();
    let bundle = RackComplexBundle::new(rack.clone(), max_degree);
    let groups = if cohomology { bundle.cohomology(theory, coeff) } else { bundle.homology(theory, coeff) }.map_err(math)?;
    let degrees = groups.iter().enumerate().map(|(degree, g)| DegreeResult { degree, group: Group::from(g) }).collect();
    print_json(&ResultDocument {
        input: input(path, &rack, convention),
        computation: if cohomology { "cohomology" } else { "homology" },
        theory: theory.to_string(),
        coefficient: coeff.to_string(),
        max_degree: Some(max_degree),
        body: Body::Degrees { degrees },
        timing: timing(start),
    });
    Ok(())
}

pub fn cocycles(
    path: &Path,
    convention: Option<Convention>,
    theory: AlgebraicTheory,
    coeff: CoefficientSpec,
    budget: u64,
) -> Result<(), CliError> {
    let rack = load_rack(path, convention)?;
    require_quandle(&rack, theory == AlgebraicTheory::Quandle)?;
    check_budget(rack.size(), 3, budget)?;
    let start = Instant::now();
    let basis = two_cocycles(&rack, coeff, theory).map_err(math)?;
    let h = rack.size();
    let representatives = basis.representatives.iter().map(|phi| phi.chunks(h.max(1)).map(<[u64]>::to_vec).collect()).collect();
    print_json(&ResultDocument {
        input: input(path, &rack, convention),
        computation: "cocycles",
        theory: theory.to_string(),
        coefficient: coeff.to_string(),
        max_degree: None,
        body: Body::Cocycles { degree: 2, group: Group::from(&basis.group), representatives },
        timing: timing(start),
    });
    Ok(())
}

pub fn quillen(
    path: &Path,
    convention: Option<Convention>,
    theory: AlgebraicTheory,
    max_degree: usize,
    coeff: CoefficientSpec,
    budget: u64,
) -> Result<(), CliError> {
    let rack = load_rack(path, convention)?;
    require_quandle(&rack, theory == AlgebraicTheory::Quandle)?;
    check_budget(rack.size(), max_degree + 2, budget)?;
    let start = Instant::now();
    let bundle = RackComplexBundle::new(rack.clone(), max_degree + 1);
    let degrees = (0..=max_degree)
        .map(|n| {
            let d = bundle.quillen_cohomology(theory, n, coeff)?;
            let h = bundle.cohomology_at(theory.complex(), n + 1, coeff)?;
            Ok(QuillenDegree { degree: n, quillen: Group::from(&d), cohomology_degree: n + 1, cohomology: Group::from(&h) })
        })
        .collect::<Result<Vec<_>, HomologyError>>()
        .map_err(math)?;
    print_json(&ResultDocument {
        input: input(path, &rack, convention),
        computation: "quillen",
        theory: theory.to_string(),
        coefficient: coeff.to_string(),
        max_degree: Some(max_degree),
        body: Body::Quillen { degrees },
        timing: timing(start),
    });
    Ok(())
}

pub fn verify_paper() -> Result<(), CliError> {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let control = sign_error_is_caught();
    println!("[{}] control: a flipped face sign is rejected", if control { "PASS" } else { "FAIL" });
    let failed = outcomes.iter().filter(|o| !o.passed).count() + usize::from(!control);
    if failed == 0 {
        println!("all checks passed");
        Ok(())
    } else {
        Err(CliError::Math(format!("{failed} checks failed")))
    }
}

pub fn free_op(x: &str, y: &str, quandle: bool, inverse: bool) -> Result<(), CliError> {
    let mut alphabet = Alphabet::default();
    let bad = |e| CliError::Usage(format!("{e}"));
    let x = alphabet.parse_element_extending(x).map_err(bad)?;
    let y = alphabet.parse_element_extending(y).map_err(bad)?;
    let out = if quandle {
        let (x, y) = (fq_canonicalize(&x), fq_canonicalize(&y));
        let z = if inverse { fq_op_inverse(&x, &y) } else { fq_op(&x, &y) };
        alphabet.format_element(&z)
    } else {
        let z = if inverse { fr_op_inverse(&x, &y) } else { fr_op(&x, &y) };
        alphabet.format_element(&z)
    };
    println!("{out}");
    Ok(())
}
