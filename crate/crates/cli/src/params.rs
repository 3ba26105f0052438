//! Flag / config-file merging. Config files are flat UTF-8 `key=value`
//! lines (same keys as the long flags); command-line flags win.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

use warped_spectra::classifier::ComponentKind;
use warped_spectra::model::{BoundaryData, WarpedMetric};
use warped_spectra::scalar::Value;

use crate::CommonArgs;

/// Fully merged invocation parameters, still mostly optional: each
/// command validates the subset it needs.
#[derive(Debug, Clone)]
pub struct Params {
    pub a: Option<Value>,
    pub b: Option<Value>,
    pub c: f64,
    pub n: Option<u32>,
    /// None = all degrees
    pub p: Option<u32>,
    pub lambdas: Option<Vec<f64>>,
    pub sphere: bool,
    pub betti: Option<Vec<u64>>,
    pub kind: Option<ComponentKind>,
    pub grid_points: usize,
    pub l_max: Option<f64>,
    pub tol: f64,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub json: bool,
}

fn load_config(path: &PathBuf) -> Result<HashMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut map = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!(
                "config {} line {}: expected key=value, got {raw:?}",
                path.display(),
                i + 1
            ));
        };
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn parse_value(key: &str, s: &str) -> Result<Value, String> {
    Value::parse(s).ok_or_else(|| format!("{key}: cannot parse {s:?} as a number"))
}

fn parse_list<T: std::str::FromStr>(key: &str, s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| format!("{key}: bad entry {x:?}"))
        })
        .collect()
}

fn parse_kind(s: &str) -> Result<ComponentKind, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "i" | "type1" => Ok(ComponentKind::Type1),
        "2" | "ii" | "type2" => Ok(ComponentKind::Type2),
        "3" | "iii" | "type3" => Ok(ComponentKind::Type3),
        other => Err(format!("type: expected 1, 2 or 3, got {other:?}")),
    }
}

impl Params {
    pub fn merge(args: &CommonArgs) -> Result<Params, String> {
        let file = match &args.config {
            Some(path) => load_config(path)?,
            None => HashMap::new(),
        };
        let pick = |flag: &Option<String>, key: &str| -> Option<String> {
            flag.clone().or_else(|| file.get(key).cloned())
        };
        let pick_bool = |flag: bool, key: &str| -> Result<bool, String> {
            if flag {
                return Ok(true);
            }
            match file.get(key).map(String::as_str) {
                None => Ok(false),
                Some("true" | "1" | "yes") => Ok(true),
                Some("false" | "0" | "no") => Ok(false),
                Some(other) => Err(format!("{key}: expected a boolean, got {other:?}")),
            }
        };

        let a = pick(&args.a, "a")
            .map(|s| parse_value("a", &s))
            .transpose()?;
        let b = pick(&args.b, "b")
            .map(|s| parse_value("b", &s))
            .transpose()?;
        let c = pick(&args.c.map(|v| v.to_string()), "c")
            .map(|s| s.parse::<f64>().map_err(|_| format!("c: bad number {s:?}")))
            .transpose()?
            .unwrap_or(1.0);
        let n = pick(&args.n.map(|v| v.to_string()), "n")
            .map(|s| {
                s.parse::<u32>()
                    .map_err(|_| format!("n: bad integer {s:?}"))
            })
            .transpose()?;
        let p = match pick(&args.p, "p") {
            None => None,
            Some(s) if s.trim().eq_ignore_ascii_case("all") => None,
            Some(s) => Some(
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("p: bad degree {s:?}"))?,
            ),
        };
        let lambdas = pick(&args.lambda, "lambda")
            .map(|s| parse_list::<f64>("lambda", &s))
            .transpose()?;
        let sphere = pick_bool(args.sphere, "sphere")?;
        let betti = pick(&args.betti, "betti")
            .map(|s| parse_list::<u64>("betti", &s))
            .transpose()?;
        let kind = pick(&args.ty, "type").map(|s| parse_kind(&s)).transpose()?;
        let grid_points = pick(&args.grid_points.map(|v| v.to_string()), "grid-points")
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| format!("grid-points: bad integer {s:?}"))
            })
            .transpose()?
            .unwrap_or(200);
        let l_max = pick(&args.l_max.map(|v| v.to_string()), "L-max")
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| format!("L-max: bad number {s:?}"))
            })
            .transpose()?;
        let tol = pick(&args.tol.map(|v| v.to_string()), "tol")
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| format!("tol: bad number {s:?}"))
            })
            .transpose()?
            .unwrap_or(5e-3);
        let jobs = pick(&args.jobs.map(|v| v.to_string()), "jobs")
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| format!("jobs: bad integer {s:?}"))
            })
            .transpose()?;
        let out = args
            .out
            .clone()
            .or_else(|| file.get("out").map(PathBuf::from));
        let json = pick_bool(args.json, "json")?;

        if grid_points == 0 {
            return Err("grid-points must be positive".into());
        }
        if !(tol > 0.0) {
            return Err("tol must be positive".into());
        }
        Ok(Params {
            a,
            b,
            c,
            n,
            p,
            lambdas,
            sphere,
            betti,
            kind,
            grid_points,
            l_max,
            tol,
            jobs,
            out,
            json,
        })
    }

    pub fn require_a(&self) -> Result<Value, String> {
        self.a
            .ok_or_else(|| "missing required parameter a (flag --a or config key a)".into())
    }

    pub fn require_b(&self) -> Result<Value, String> {
        self.b
            .ok_or_else(|| "missing required parameter b (flag --b or config key b)".into())
    }

    pub fn require_n(&self) -> Result<u32, String> {
        self.n
            .ok_or_else(|| "missing required parameter n (flag --n or config key n)".into())
    }

    pub fn require_p(&self) -> Result<u32, String> {
        self.p
            .ok_or_else(|| "missing required parameter p (flag --p or config key p)".into())
    }

    pub fn metric(&self) -> Result<WarpedMetric, String> {
        WarpedMetric::exponential(self.require_a()?, self.require_b()?, self.c)
            .map_err(|e| e.to_string())
    }

    /// Degrees requested: a single p, or 0..=n for `all` (also the
    /// default when p is absent and a dimension is known).
    pub fn degrees(&self) -> Result<Vec<u32>, String> {
        let n = self.require_n()?;
        match self.p {
            Some(p) if p <= n => Ok(vec![p]),
            Some(p) => Err(format!("degree p = {p} exceeds dimension n = {n}")),
            None => Ok((0..=n).collect()),
        }
    }

    /// Cross-section data, when determinable from the inputs.
    pub fn boundary(&self) -> Result<Option<BoundaryData>, String> {
        let n = self.require_n()?;
        if self.sphere {
            return Ok(Some(BoundaryData::sphere_with_eigenvalues(n, 12)));
        }
        match &self.betti {
            Some(betti) => BoundaryData::new(n, betti.clone(), BTreeMap::new(), false)
                .map(Some)
                .map_err(|e| e.to_string()),
            None => Ok(None),
        }
    }
}
