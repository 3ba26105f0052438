//! `verify`: cross-validate the closed-form classifier against the
//! numerical eigensolver, row by row, in parallel.

use rayon::prelude::*;
use serde::Serialize;
use warped_spectra::classifier::{component_bottom, ComponentKind};
use warped_spectra::model::{DegreePair, WarpedMetric};
use warped_spectra::numerics::{discreteness_test, ess_bottom, ess_bottom_coupled, BottomMethod};
use warped_spectra::reduction::{build_type1, build_type2, build_type3};
use warped_spectra::scalar::Value;
use warped_spectra::Error;

use crate::output::{emit_json, Outcome};
use crate::params::Params;
use crate::reduce::left_coordinate;
use crate::solve::policy_for;

#[derive(Debug, Clone)]
struct Case {
    a: Value,
    b: Value,
    n: u32,
    p: u32,
    kind: ComponentKind,
    lambda: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Serialize)]
struct VerifyRow {
    a: String,
    b: String,
    n: u32,
    p: u32,
    kind: String,
    lambda: f64,
    /// classifier ray start for this component (None = empty / discrete)
    expected: Option<f64>,
    /// numerical estimate (None when the check was symbolic)
    numeric: Option<f64>,
    deviation: Option<f64>,
    status: Status,
    note: String,
}

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    command: &'static str,
    tolerance: f64,
    rows: Vec<VerifyRow>,
    passed: usize,
    failed: usize,
    inconclusive: usize,
    worst_deviation: Option<f64>,
}

/// Built-in sample matrix: every (regime, component) combination the
/// closed-form results cover, at desk scale.
fn default_matrix() -> Vec<Case> {
    let mut cases = Vec::new();
    let v = Value::int;
    // cylindrical metric, shrinking cross-section
    for n in [3u32, 4, 5] {
        for p in [0u32, 1] {
            for kind in [
                ComponentKind::Type1,
                ComponentKind::Type2,
                ComponentKind::Type3,
            ] {
                let lambdas: &[f64] = match kind {
                    ComponentKind::Type3 => &[2.0, 6.0],
                    _ => &[0.0, 2.0, 6.0],
                };
                for &lambda in lambdas {
                    if component_exists(n, p, kind) {
                        cases.push(Case {
                            a: v(-1),
                            b: v(-1),
                            n,
                            p,
                            kind,
                            lambda,
                        });
                    }
                }
            }
        }
    }
    // cylindrical metric, expanding cross-section: discreteness regime
    for (p, kind, lambda) in [
        (0, ComponentKind::Type1, 0.0),
        (1, ComponentKind::Type1, 3.0),
        (1, ComponentKind::Type2, 0.0),
        (1, ComponentKind::Type2, 3.0),
        (1, ComponentKind::Type3, 3.0),
    ] {
        cases.push(Case {
            a: v(-1),
            b: v(1),
            n: 4,
            p,
            kind,
            lambda,
        });
    }
    // radial coordinate regime (complete, non-cylindrical)
    for n in [3u32, 4] {
        for p in [0u32, 1] {
            for kind in [
                ComponentKind::Type1,
                ComponentKind::Type2,
                ComponentKind::Type3,
            ] {
                let lambdas: &[f64] = match kind {
                    ComponentKind::Type3 => &[2.0],
                    _ => &[0.0, 2.0],
                };
                for &lambda in lambdas {
                    if component_exists(n, p, kind) {
                        cases.push(Case {
                            a: v(-2),
                            b: v(-1),
                            n,
                            p,
                            kind,
                            lambda,
                        });
                    }
                }
            }
        }
    }
    // radial regime, growing cross-section warp: discreteness
    for (p, kind, lambda) in [
        (0, ComponentKind::Type1, 2.0),
        (1, ComponentKind::Type2, 2.0),
        (1, ComponentKind::Type3, 2.0),
    ] {
        cases.push(Case {
            a: v(-2),
            b: v(1),
            n: 3,
            p,
            kind,
            lambda,
        });
    }
    cases
}

fn component_exists(n: u32, p: u32, kind: ComponentKind) -> bool {
    match kind {
        ComponentKind::Type1 => p < n,
        ComponentKind::Type2 => p > 0,
        ComponentKind::Type3 => p > 0 && p < n,
    }
}

fn evaluate(case: &Case, c: f64, l_max: Option<f64>, tol: f64) -> VerifyRow {
    let base = |status: Status, expected, numeric, note: String| VerifyRow {
        a: case.a.to_string(),
        b: case.b.to_string(),
        n: case.n,
        p: case.p,
        kind: format!("{:?}", case.kind),
        lambda: case.lambda,
        expected,
        numeric,
        deviation: match (expected, numeric) {
            (Some(e), Some(m)) => Some(f64::abs(e - m)),
            _ => None,
        },
        status,
        note,
    };
    let fail = |msg: String| base(Status::Fail, None, None, msg);

    let metric = match WarpedMetric::exponential(case.a, case.b, c) {
        Ok(m) => m,
        Err(e) => return fail(e.to_string()),
    };
    let deg = match DegreePair::new(case.n, case.p) {
        Ok(d) => d,
        Err(e) => return fail(e.to_string()),
    };
    let expected = match component_bottom(&metric, &deg, case.kind, case.lambda) {
        Ok(v) => v,
        Err(e) => return fail(e.to_string()),
    };

    match expected {
        None => {
            // classifier: this block contributes no essential spectrum;
            // cross-check with the pure-discreteness criterion
            let discrete = match case.kind {
                ComponentKind::Type3 => build_type3(&metric, &deg, case.lambda)
                    .map_err(|e| e.to_string())
                    .and_then(|op| {
                        Ok(
                            discreteness_test(&op.v1, &[0.5]).map_err(|e| e.to_string())?
                                && discreteness_test(&op.v2, &[0.5]).map_err(|e| e.to_string())?,
                        )
                    }),
                _ => scalar_potential(&metric, &deg, case)
                    .and_then(|pot| discreteness_test(&pot, &[0.5]).map_err(|e| e.to_string())),
            };
            match discrete {
                Ok(true) => base(
                    Status::Pass,
                    None,
                    None,
                    "classifier and discreteness criterion both report no essential spectrum"
                        .into(),
                ),
                Ok(false) => base(
                    Status::Fail,
                    None,
                    None,
                    "classifier reports empty essential spectrum but the potential does not \
 diverge"
                        .into(),
                ),
                Err(e) => fail(e),
            }
        }
        Some(value) => {
            let expected_f = value.to_f64();
            let left = match left_coordinate(&metric) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            let policy = policy_for(left, l_max);
            let estimate = match case.kind {
                ComponentKind::Type3 => build_type3(&metric, &deg, case.lambda)
                    .map_err(|e| e.to_string())
                    .and_then(|op| ess_bottom_coupled(&op, &policy).map_err(map_sweep)),
                _ => scalar_potential(&metric, &deg, case).and_then(|pot| {
                    ess_bottom(&pot, BottomMethod::TruncationConvergence, &policy)
                        .map_err(map_sweep)
                }),
            };
            match estimate {
                Ok(est) => {
                    let numeric = est.value.expect("truncation sweep always yields a value");
                    let dev = (numeric - expected_f).abs();
                    let status = if dev <= tol {
                        Status::Pass
                    } else {
                        Status::Fail
                    };
                    base(
                        status,
                        Some(expected_f),
                        Some(numeric),
                        format!("sweep reached L = {:.1}", est.diagnostics.last().unwrap().0),
                    )
                }
                Err(msg) if msg.starts_with("inconclusive") => {
                    base(Status::Inconclusive, Some(expected_f), None, msg)
                }
                Err(msg) => fail(msg),
            }
        }
    }
}

fn scalar_potential(
    metric: &WarpedMetric,
    deg: &DegreePair,
    case: &Case,
) -> Result<warped_spectra::reduction::ScalarPotential, String> {
    match case.kind {
        ComponentKind::Type1 => build_type1(metric, deg, case.lambda),
        ComponentKind::Type2 => build_type2(metric, deg, case.lambda),
        ComponentKind::Type3 => unreachable!("coupled pair handled separately"),
    }
    .map_err(|e| e.to_string())
}

fn map_sweep(e: Error) -> String {
    match e {
        Error::Inconclusive(msg) => format!("inconclusive: {msg}"),
        other => other.to_string(),
    }
}

pub fn run(params: &Params) -> Result<Outcome, String> {
    // explicit (n, p) narrows the matrix to user-supplied cases
    let cases: Vec<Case> = if params.n.is_some() {
        let a = params.require_a()?;
        let b = params.require_b()?;
        let n = params.require_n()?;
        let degrees = params.degrees()?;
        let kinds = match params.kind {
            Some(k) => vec![k],
            None => {
                vec![
                    ComponentKind::Type1,
                    ComponentKind::Type2,
                    ComponentKind::Type3,
                ]
            }
        };
        let lambdas = params
            .lambdas
            .clone()
            .unwrap_or_else(|| vec![0.0, 2.0, 6.0]);
        let mut cases = Vec::new();
        for &p in &degrees {
            for &kind in &kinds {
                if !component_exists(n, p, kind) {
                    continue;
                }
                for &lambda in &lambdas {
                    if kind == ComponentKind::Type3 && lambda <= 0.0 {
                        continue;
                    }
                    cases.push(Case {
                        a,
                        b,
                        n,
                        p,
                        kind,
                        lambda,
                    });
                }
            }
        }
        cases
    } else {
        default_matrix()
    };

    let tol = params.tol;
    let c = params.c;
    let l_max = params.l_max;
    let eval_all = || -> Vec<VerifyRow> {
        cases
            .par_iter()
            .map(|case| evaluate(case, c, l_max, tol))
            .collect()
    };
    let rows = match params.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| e.to_string())?
            .install(eval_all),
        None => eval_all(),
    };

    let passed = rows.iter().filter(|r| r.status == Status::Pass).count();
    let failed = rows.iter().filter(|r| r.status == Status::Fail).count();
    let inconclusive = rows
        .iter()
        .filter(|r| r.status == Status::Inconclusive)
        .count();
    let worst = rows
        .iter()
        .filter_map(|r| r.deviation)
        .fold(None, |acc: Option<f64>, d| {
            Some(acc.map_or(d, |a| a.max(d)))
        });

    if params.json {
        let report = VerifyReport {
            schema: 1,
            command: "verify",
            tolerance: tol,
            rows,
            passed,
            failed,
            inconclusive,
            worst_deviation: worst,
        };
        emit_json(&report, params.out.as_ref())?;
    } else {
        for r in &rows {
            let detail = match (r.expected, r.numeric) {
                (Some(e), Some(m)) => format!("expected {e}, numeric {m}"),
                (Some(e), None) => format!("expected {e}, no numeric value"),
                _ => r.note.clone(),
            };
            println!(
                "a={} b={} n={} p={} {} λ={}: {:?} ({detail})",
                r.a, r.b, r.n, r.p, r.kind, r.lambda, r.status
            );
        }
        println!(
            "{passed} passed, {failed} failed, {inconclusive} inconclusive; worst deviation: {}",
            worst.map_or("n/a".to_string(), |w| format!("{w:.3e}"))
        );
    }

    Ok(if failed > 0 {
        Outcome::VerificationFailure
    } else if inconclusive > 0 {
        Outcome::Inconclusive
    } else {
        Outcome::Success
    })
}
