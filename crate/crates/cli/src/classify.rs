//! `classify`: closed-form essential spectrum per degree.

use serde::Serialize;
use warped_spectra::classifier::{classify_general, classify_rotsym, Classification};
use warped_spectra::model::SpectrumDescription;
use warped_spectra::Error;

use crate::output::{emit_json, Outcome};
use crate::params::Params;

#[derive(Serialize)]
struct ClassifyRow {
    p: u32,
    branch: String,
    spectrum: SpectrumDescription,
    display: String,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema: u32,
    command: &'static str,
    a: String,
    b: String,
    n: u32,
    sphere: bool,
    results: Vec<ClassifyRow>,
}

pub fn run(params: &Params) -> Result<Outcome, String> {
    let metric = params.metric()?;
    let n = params.require_n()?;
    let boundary = params.boundary()?;
    let degrees = params.degrees()?;

    let mut rows = Vec::new();
    for p in degrees {
        let deg = warped_spectra::model::DegreePair::new(n, p).map_err(|e| e.to_string())?;
        let cls: Classification = if params.sphere {
            let bd = boundary
                .as_ref()
                .expect("sphere boundary always constructible");
            classify_rotsym(&metric, &deg, bd).map_err(describe)?
        } else {
            let bd = boundary.as_ref().ok_or_else(|| {
                "cross-section data required: pass --sphere or --betti".to_string()
            })?;
            classify_general(&metric, &deg, bd).map_err(describe)?
        };
        rows.push(ClassifyRow {
            p,
            branch: cls.branch.clone(),
            display: format!("{}", cls.spectrum),
            spectrum: cls.spectrum,
        });
    }

    if params.json {
        let report = ClassifyReport {
            schema: 1,
            command: "classify",
            a: params.require_a()?.to_string(),
            b: params.require_b()?.to_string(),
            n,
            sphere: params.sphere,
            results: rows,
        };
        emit_json(&report, params.out.as_ref())?;
    } else {
        for row in &rows {
            println!("p={}: {}  [{}]", row.p, row.display, row.branch);
        }
    }
    Ok(Outcome::Success)
}

fn describe(e: Error) -> String {
    match e {
        Error::MissingEigenvalues { degrees } => format!(
            "cross-section eigenvalue lists needed for degrees {degrees:?} when b = 0; \
 pass --sphere or supply eigenvalue data"
        ),
        other => other.to_string(),
    }
}
