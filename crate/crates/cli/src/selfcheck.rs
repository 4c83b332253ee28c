//! Seeded randomized consistency checks. Each check draws from its own
//! ChaCha stream, so adding cases to one check does not move the others.

use hypertoric::arrangement::{crepant_resolution_count, Arrangement};
use hypertoric::classify::{self, ClassifyError, DEFAULT_WITNESS_BUDGET};
use hypertoric::hypertoric::HypertoricDatum;
use hypertoric::linalg::{kernel_basis, IntMatrix};
use hypertoric::{sample, Matroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::chi::{self, FieldResult};
use crate::error::{CliError, Severity};
use crate::report::Report;

/// What one case concluded.
enum Case {
    Pass,
    Skip,
    Fail(String),
}

type Check = fn(&mut ChaCha8Rng) -> Result<Case, CliError>;

const CHECKS: [(&str, Check); 4] = [
    ("gale-duality", gale_duality),
    ("gale-round-trip", gale_round_trip),
    ("equivalence-invariance", equivalence_invariance),
    ("chi-methods", chi_methods),
];

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let d = rng.gen_range(1..=4);
    let n = d + rng.gen_range(0..=3);
    sample::random_unimodular(rng, d, n)
}

fn fail_unless(ok: bool, what: impl FnOnce() -> String) -> Case {
    if ok {
        Case::Pass
    } else {
        Case::Fail(what())
    }
}

fn gale_duality(rng: &mut ChaCha8Rng) -> Result<Case, CliError> {
    let a = random_matrix(rng);
    let b = kernel_basis(&a)?;
    let dual = Matroid::from_matrix(&a)?.dual();
    let gale = Matroid::from_matrix(&b.transpose())?;
    Ok(fail_unless(gale.bases() == dual.bases(), || {
        format!("M(B^T) differs from the dual of M(A) for A =\n{a}")
    }))
}

fn gale_round_trip(rng: &mut ChaCha8Rng) -> Result<Case, CliError> {
    let a = random_matrix(rng);
    let h = HypertoricDatum::from_matrix_a(&a)?;
    let back = HypertoricDatum::from_matrix_b(h.original_b())?;
    let iso = classify::isomorphic_data(&h, &back)?;
    Ok(fail_unless(iso.is_some(), || {
        format!("datum rebuilt from B is not isomorphic for A =\n{a}")
    }))
}

fn invariants(h: &HypertoricDatum) -> Result<String, CliError> {
    let mut slices: Vec<usize> = h.codim2_slices().iter().map(|s| s.slice_type()).collect();
    slices.sort_unstable();
    Ok(format!(
        "dim {} W {:?} slices {:?} orbits {:?} class {} resolutions {}",
        h.dimension(),
        h.namikawa_weyl().multiplicities,
        slices,
        h.degree_two_test()?,
        classify::classify(h)?,
        crepant_resolution_count(h)?.count,
    ))
}

fn equivalence_invariance(rng: &mut ChaCha8Rng) -> Result<Case, CliError> {
    let a = random_matrix(rng);
    let (_, _, pad) = sample::random_equivalent(rng, &a);
    let h1 = HypertoricDatum::from_matrix_a(&a)?;
    let h2 = HypertoricDatum::from_matrix_a(&pad)?;
    if classify::isomorphic_data(&h1, &h2)?.is_none() {
        return Ok(Case::Fail(format!("PAD not isomorphic to A =\n{a}")));
    }
    match classify::equivalence_witness(&a, &pad, DEFAULT_WITNESS_BUDGET) {
        Ok(Some(w)) if w.verify(&a, &pad) => {}
        Ok(_) => return Ok(Case::Fail(format!("no valid witness for A =\n{a}"))),
        Err(ClassifyError::BudgetExceeded { .. }) => return Ok(Case::Skip),
        Err(e) => return Err(e.into()),
    }
    let (i1, i2) = (invariants(&h1)?, invariants(&h2)?);
    Ok(fail_unless(i1 == i2, || format!("invariants differ: {i1} vs {i2}")))
}

fn chi_methods(rng: &mut ChaCha8Rng) -> Result<Case, CliError> {
    let d = rng.gen_range(1..=4);
    let m = rng.gen_range(d..=d + 4);
    let mut cols = Vec::new();
    while cols.len() < m {
        let c: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
        if c.iter().any(|&x| x != 0) {
            cols.push(c);
        }
    }
    let rows: Vec<Vec<i64>> = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let a = IntMatrix::from_rows(&rows, m)?;
    let arr = match Arrangement::from_columns(&a) {
        Ok(arr) => arr,
        Err(_) => return Ok(Case::Skip),
    };
    let poset = arr.intersection_poset()?.char_poly();
    if arr.char_poly_deletion_restriction() != poset {
        return Ok(Case::Fail(format!("deletion-restriction differs from the poset for\n{a}")));
    }
    match chi::finite_field(&arr, None, 1) {
        Ok(FieldResult::Interpolated { chi, .. }) => {
            Ok(fail_unless(chi == poset, || format!("finite-field count differs from the poset for\n{a}")))
        }
        Ok(FieldResult::Single { .. }) => unreachable!("no prime was given"),
        Err(e) if e.severity() == Severity::Budget => Ok(Case::Skip),
        Err(e) => Err(e),
    }
}

pub fn run(seed: u64, cases: usize) -> Result<Report, CliError> {
    let mut report = Report::new("selfcheck", json!({ "seed": seed, "cases": cases }));
    report.line("seed", seed);
    let mut docs = Vec::new();
    let mut any_failed = false;
    for (stream, (name, check)) in CHECKS.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64);
        let (mut passed, mut skipped, mut failed) = (0usize, 0usize, 0usize);
        let mut first_failure = None;
        for _ in 0..cases {
            match check(&mut rng)? {
                Case::Pass => passed += 1,
                Case::Skip => skipped += 1,
                Case::Fail(msg) => {
                    failed += 1;
                    first_failure.get_or_insert(msg);
                }
            }
        }
        any_failed |= failed > 0;
        report.line(name, format!("{passed} passed, {skipped} skipped, {failed} failed"));
        if let Some(msg) = &first_failure {
            report.raw(&format!("  first failure: {msg}\n"));
        }
        docs.push(json!({
            "name": name,
            "passed": passed,
            "skipped": skipped,
            "failed": failed,
            "first_failure": first_failure,
        }));
    }
    if any_failed {
        report.exit_code = Severity::Violation.exit_code();
    }
    report.result = json!({ "checks": docs });
    Ok(report)
}
