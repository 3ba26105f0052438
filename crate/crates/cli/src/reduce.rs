//! `reduce`: print the reduced one-dimensional operator symbolically
//! and, on request, as a plot-ready sampled series.

use serde::Serialize;
use warped_spectra::classifier::ComponentKind;
use warped_spectra::model::{DegreePair, WarpFamily, WarpedMetric};
use warped_spectra::reduction::{build_type1, build_type2, build_type3, r_coordinate};
use warped_spectra::Error;

use crate::output::{emit_json, suffixed, write_csv, Outcome};
use crate::params::Params;

#[derive(Serialize)]
struct ReduceReport {
    schema: u32,
    command: &'static str,
    a: String,
    b: String,
    n: u32,
    p: u32,
    lambda: f64,
    kind: String,
    variable: char,
    potentials: Vec<String>,
}

/// Left endpoint of the operator's natural coordinate: t = c for the
/// cylindrical family, r(c) for the radial one.
pub fn left_coordinate(metric: &WarpedMetric) -> Result<f64, String> {
    if metric.is_cylindrical() || matches!(metric.warp_family, WarpFamily::General { .. }) {
        Ok(metric.c)
    } else {
        r_coordinate(metric, metric.c).map_err(|e| e.to_string())
    }
}

fn sample(eval: &dyn Fn(f64) -> f64, left: f64, span: f64, points: usize) -> Vec<(f64, f64)> {
    (0..points)
        .map(|i| {
            let x = left + span * (i as f64 + 1.0) / points as f64;
            (x, eval(x))
        })
        .collect()
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
    let span = params.l_max.map_or(10.0, |l| (l - left).max(1.0));
    let points = params.grid_points;

    let describe = |e: Error| match e {
        Error::ZeroLambdaCoupling => {
            "the coupled pair is defined only for a nonzero cross-section eigenvalue; \
 pass --lambda > 0"
                .to_string()
        }
        other => other.to_string(),
    };

    let (var, labelled, series): (char, Vec<(String, String)>, Vec<(String, Vec<(f64, f64)>)>) =
        match kind {
            ComponentKind::Type1 | ComponentKind::Type2 => {
                let pot = match kind {
                    ComponentKind::Type1 => build_type1(&metric, &deg, lambda),
                    _ => build_type2(&metric, &deg, lambda),
                }
                .map_err(describe)?;
                let var = pot.potential.var();
                let text = format!("V({var}) = {}", pot.potential);
                let s = sample(&|x| pot.eval(x), left, span, points);
                (var, vec![("V".into(), text)], vec![("V".into(), s)])
            }
            ComponentKind::Type3 => {
                let op = build_type3(&metric, &deg, lambda).map_err(describe)?;
                let var = op.v1.potential.var();
                let texts = vec![
                    ("V1".to_string(), format!("V1({var}) = {}", op.v1.potential)),
                    ("V2".to_string(), format!("V2({var}) = {}", op.v2.potential)),
                    ("W".to_string(), format!("W({var}) = {}", op.coupling)),
                ];
                let series = vec![
                    (
                        "V1".to_string(),
                        sample(&|x| op.v1.eval(x), left, span, points),
                    ),
                    (
                        "V2".to_string(),
                        sample(&|x| op.v2.eval(x), left, span, points),
                    ),
                    (
                        "W".to_string(),
                        sample(&|x| op.coupling_at(x), left, span, points),
                    ),
                ];
                (var, texts, series)
            }
        };

    if params.json {
        let report = ReduceReport {
            schema: 1,
            command: "reduce",
            a: params.require_a()?.to_string(),
            b: params.require_b()?.to_string(),
            n,
            p,
            lambda,
            kind: format!("{kind:?}"),
            variable: var,
            potentials: labelled.iter().map(|(_, text)| text.clone()).collect(),
        };
        emit_json(&report, None)?;
    } else {
        for (_, text) in &labelled {
            println!("{text}");
        }
    }

    if let Some(out) = &params.out {
        if series.len() == 1 {
            write_csv(out, &series[0].1)?;
        } else {
            for (label, data) in &series {
                write_csv(&suffixed(out, &label.to_ascii_lowercase()), data)?;
            }
        }
    }
    Ok(Outcome::Success)
}
