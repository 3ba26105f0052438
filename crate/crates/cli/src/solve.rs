//! `solve`: numerical spectral data for one reduced operator —
//! bottom-of-essential-spectrum estimates and the pure-discreteness
//! criterion.

use serde::Serialize;
use warped_spectra::classifier::ComponentKind;
use warped_spectra::model::DegreePair;
use warped_spectra::numerics::{
    discreteness_test, ess_bottom, ess_bottom_coupled, BottomMethod, SweepPolicy,
};
use warped_spectra::reduction::{build_type1, build_type2, build_type3};
use warped_spectra::Error;

use crate::output::{emit_json, write_csv, Outcome};
use crate::params::Params;
use crate::reduce::left_coordinate;

#[derive(Serialize)]
struct SolveReport {
    schema: u32,
    command: &'static str,
    a: String,
    b: String,
    n: u32,
    p: u32,
    lambda: f64,
    kind: String,
    /// liminf of the potential (None when the essential spectrum is
    /// empty, absent for the coupled pair)
    bottom_symbolic: Option<Option<f64>>,
    /// truncation-sweep estimate (None when skipped because the
    /// spectrum is purely discrete)
    bottom_numeric: Option<f64>,
    purely_discrete: bool,
    /// (right endpoint, tracked eigenvalue) per sweep level
    diagnostics: Vec<(f64, f64)>,
}

/// Sweep schedule for the given left endpoint, honouring --L-max by
/// capping the number of doublings.
pub fn policy_for(left: f64, l_max: Option<f64>) -> SweepPolicy {
    let mut policy = SweepPolicy {
        left,
        ..SweepPolicy::default()
    };
    if let Some(l) = l_max {
        let span = policy.initial_span;
        let mut levels = 2u32;
        while policy.left + span * (1u64 << (levels + 1)) as f64 <= l && levels < 12 {
            levels += 1;
        }
        policy.levels = levels;
    }
    policy
}

pub fn run(params: &Params) -> Result<Outcome, String> {
    let metric = params.metric()?;
    let n = params.require_n()?;
    let p = params.require_p()?;
    let deg = DegreePair::new(n, p).map_err(|e| e.to_string())?;
    let kind = params.kind.unwrap_or(ComponentKind::Type1);
    let lambda = params
        .lambdas
        .as_ref()
        .and_then(|l| l.first().copied())
        .unwrap_or(0.0);

    let left = left_coordinate(&metric)?;
    let policy = policy_for(left, params.l_max);

    let mut inconclusive = false;
    let (bottom_symbolic, bottom_numeric, purely_discrete, diagnostics) = match kind {
        ComponentKind::Type1 | ComponentKind::Type2 => {
            let pot = match kind {
                ComponentKind::Type1 => build_type1(&metric, &deg, lambda),
                _ => build_type2(&metric, &deg, lambda),
            }
            .map_err(|e| e.to_string())?;
            let sym = ess_bottom(&pot, BottomMethod::PotentialLiminf, &policy)
                .map_err(|e| e.to_string())?;
            let discrete =
                discreteness_test(&pot, &[0.25, 0.5, 0.75]).map_err(|e| e.to_string())?;
            let (num, diag) = if discrete {
                // growing potential: truncation eigenvalues diverge
                (None, Vec::new())
            } else {
                match ess_bottom(&pot, BottomMethod::TruncationConvergence, &policy) {
                    Ok(est) => (est.value, est.diagnostics),
                    Err(Error::Inconclusive(msg)) => {
                        eprintln!("inconclusive sweep: {msg}");
                        inconclusive = true;
                        (None, Vec::new())
                    }
                    Err(e) => return Err(e.to_string()),
                }
            };
            (Some(sym.value), num, discrete, diag)
        }
        ComponentKind::Type3 => {
            let op = build_type3(&metric, &deg, lambda).map_err(|e| e.to_string())?;
            let discrete = discreteness_test(&op.v1, &[0.5]).map_err(|e| e.to_string())?
                && discreteness_test(&op.v2, &[0.5]).map_err(|e| e.to_string())?;
            let (num, diag) = if discrete {
                (None, Vec::new())
            } else {
                match ess_bottom_coupled(&op, &policy) {
                    Ok(est) => (est.value, est.diagnostics),
                    Err(Error::Inconclusive(msg)) => {
                        eprintln!("inconclusive sweep: {msg}");
                        inconclusive = true;
                        (None, Vec::new())
                    }
                    Err(e) => return Err(e.to_string()),
                }
            };
            (None, num, discrete, diag)
        }
    };

    if params.json {
        let report = SolveReport {
            schema: 1,
            command: "solve",
            a: params.require_a()?.to_string(),
            b: params.require_b()?.to_string(),
            n,
            p,
            lambda,
            kind: format!("{kind:?}"),
            bottom_symbolic,
            bottom_numeric,
            purely_discrete,
            diagnostics: diagnostics.clone(),
        };
        emit_json(&report, None)?;
    } else {
        if let Some(sym) = bottom_symbolic {
            match sym {
                Some(v) => println!("bottom of essential spectrum (symbolic liminf): {v}"),
                None => println!("essential spectrum empty (potential grows without bound)"),
            }
        }
        match bottom_numeric {
            Some(v) => println!("bottom of essential spectrum (truncation sweep): {v}"),
            None if purely_discrete => {
                println!("spectrum purely discrete (moving-window integral diverges)")
            }
            None => {}
        }
        println!("purely discrete: {purely_discrete}");
    }

    if let Some(out) = &params.out {
        write_csv(out, &diagnostics)?;
    }
    Ok(if inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Success
    })
}
