//! Closed-form essential-spectrum classification.
//!
//! A total decision procedure over (metric, degree, boundary data): the
//! sign of b and whether a = −1 or a < −1 select the regime; within a
//! regime the answer is a single ray, an isolated point plus a ray, or
//! the empty set, with ray starts computed exactly for rational (a, b).
//! Where a rule only determines the spectrum away from zero, the result
//! carries `ZeroStatus::Unknown` rather than a guess.

use crate::model::{BoundaryData, DegreePair, SpectrumDescription, WarpedMetric, ZeroStatus};
use crate::scalar::Value;
use crate::Error;
use serde::{Deserialize, Serialize};

/// A spectrum description together with the identifier of the decision
/// branch that produced it (stable, machine-readable).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub spectrum: SpectrumDescription,
    pub branch: String,
}

/// Which reduced component a per-eigenvalue bottom refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    Type1,
    Type2,
    Type3,
}

/// Dimension of the space of L² harmonic p-forms in the rotationally
/// symmetric model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HarmonicDimension {
    Zero,
    OneDimensional,
    InfiniteDimensional,
}

/// Test-build fault hook: returns an offset added to closed-form
/// bottoms so end-to-end verification can prove it detects a wrong
/// constant. Compiled out of release builds.
fn fault_offset() -> f64 {
    if cfg!(debug_assertions) {
        std::env::var("WARPED_SPECTRA_FAULT")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0.0)
    } else {
        0.0
    }
}

fn with_fault(v: Value) -> Value {
    let off = fault_offset();
    if off == 0.0 {
        v
    } else {
        Value::Approx(v.to_f64() + off)
    }
}

/// ((n−2p−1)/2)²·b² — the type-1 ray constant.
fn c1(deg: &DegreePair, b: Value) -> Value {
    Value::rational(deg.m1(), 2).square().mul(b.square())
}

/// ((n−2p+1)/2)²·b² — the type-2 ray constant.
fn c2(deg: &DegreePair, b: Value) -> Value {
    Value::rational(deg.m2(), 2).square().mul(b.square())
}

/// Exactify an eigenvalue read from an f64 list.
fn exactify(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9e15 {
        Value::int(x as i64)
    } else {
        Value::Approx(x)
    }
}

/// Signum of b decided exactly.
fn b_sign(b: Value) -> i8 {
    if b.is_zero() {
        0
    } else if b.is_negative() {
        -1
    } else {
        1
    }
}

/// The minimum cross-section eigenvalue relevant for degree p: the
/// bottom of the full Hodge spectra in degrees p and p−1. In terms of
/// the stored coclosed lists (exact q-eigenvalues coincide with the
/// positive coclosed (q−1)-eigenvalues) this is
///   min{ min coclosed(p), min coclosed(p−1), min positive coclosed(p−2) },
/// each term present only when its degree lies in 0..n−1. Errors when a
/// needed list is absent.
fn lambda_bar(deg: &DegreePair, boundary: &BoundaryData) -> Result<Value, Error> {
    let p = deg.p as i64;
    let n = deg.n as i64;
    // (degree, whether only positive entries count)
    let mut wanted = Vec::new();
    if p < n {
        wanted.push((p, false));
    }
    if p >= 1 {
        wanted.push((p - 1, false));
    }
    if p >= 2 {
        wanted.push((p - 2, true));
    }
    let mut best: Option<f64> = None;
    let mut missing = Vec::new();
    for &(q, positive_only) in &wanted {
        match boundary.eigenvalues(q) {
            Some(list) if !list.is_empty() => {
                let lo = if positive_only {
                    match list.iter().copied().find(|&x| x > 0.0) {
                        Some(x) => x,
                        None => continue,
                    }
                } else {
                    list[0]
                };
                best = Some(best.map_or(lo, |b: f64| b.min(lo)));
            }
            _ => missing.push(q),
        }
    }
    if !missing.is_empty() {
        return Err(Error::MissingEigenvalues { degrees: missing });
    }
    Ok(exactify(best.expect("wanted nonempty for n >= 2")))
}

/// Whether each of the two scalar components exists at this degree:
/// type 1 needs p ≤ n−1, type 2 needs p ≥ 1.
fn has_components(deg: &DegreePair) -> (bool, bool) {
    (deg.p < deg.n, deg.p > 0)
}

/// Betti relevance for the b > 0 dispatch: type 1 survives iff
/// b_p(N) ≠ 0, type 2 iff b_{p−1}(N) ≠ 0 (absent components count as
/// vanishing).
fn betti_flags(deg: &DegreePair, boundary: &BoundaryData) -> (bool, bool) {
    let (t1, t2) = has_components(deg);
    (
        t1 && boundary.betti(deg.p as i64) > 0,
        t2 && boundary.betti(deg.p as i64 - 1) > 0,
    )
}

/// Essential spectrum of the form Laplacian on the end, general
/// cross-section. Dispatch on (a = −1 vs a < −1) × sign(b); b = 0 needs
/// the cross-section eigenvalue lists.
pub fn classify_general(
    metric: &WarpedMetric,
    deg: &DegreePair,
    boundary: &BoundaryData,
) -> Result<Classification, Error> {
    if deg.n != boundary.n {
        return Err(Error::InvalidInput(format!(
            "degree dimension {} does not match boundary dimension {}",
            deg.n, boundary.n
        )));
    }
    let b = metric.b;
    let cylinder = metric.is_cylindrical();
    match (cylinder, b_sign(b)) {
        (true, -1) => {
            // contracting cylinder: ray at the smaller of the two
            // constants; zero resolved only when the ray reaches it
            let start = c1(deg, b).min(c2(deg, b));
            let spectrum = if start.is_zero() {
                SpectrumDescription::ray(start)?
            } else {
                SpectrumDescription::ray_with_zero(start, ZeroStatus::Unknown)?
            };
            Ok(Classification {
                spectrum,
                branch: "a=-1,b<0".into(),
            })
        }
        (_, 0) => {
            let lb = lambda_bar(deg, boundary)?;
            Ok(Classification {
                spectrum: SpectrumDescription::ray(lb)?,
                branch: if cylinder {
                    "a=-1,b=0".into()
                } else {
                    "a<-1,b=0".into()
                },
            })
        }
        (true, _) => {
            // expanding cylinder: survival decided by the Betti numbers;
            // zero is undetermined in every case
            let (f1, f2) = betti_flags(deg, boundary);
            let (spectrum, case) = match (f1, f2) {
                (false, false) => (
                    SpectrumDescription::empty(ZeroStatus::Unknown),
                    "betti=none",
                ),
                (true, false) => (
                    SpectrumDescription::ray_with_zero(c1(deg, b), ZeroStatus::Unknown)?,
                    "betti=p",
                ),
                (false, true) => (
                    SpectrumDescription::ray_with_zero(c2(deg, b), ZeroStatus::Unknown)?,
                    "betti=p-1",
                ),
                (true, true) => (
                    SpectrumDescription::ray_with_zero(
                        c1(deg, b).min(c2(deg, b)),
                        ZeroStatus::Unknown,
                    )?,
                    "betti=both",
                ),
            };
            Ok(Classification {
                spectrum,
                branch: format!("a=-1,b>0,{case}"),
            })
        }
        (false, -1) => Ok(Classification {
            spectrum: SpectrumDescription::ray(Value::zero())?,
            branch: "a<-1,b<0".into(),
        }),
        (false, _) => {
            let (f1, f2) = betti_flags(deg, boundary);
            if f1 || f2 {
                Ok(Classification {
                    spectrum: SpectrumDescription::ray(Value::zero())?,
                    branch: "a<-1,b>0,betti=some".into(),
                })
            } else {
                Ok(Classification {
                    spectrum: SpectrumDescription::empty(ZeroStatus::Unknown),
                    branch: "a<-1,b>0,betti=none".into(),
                })
            }
        }
    }
}

/// Refined classification for the round-sphere cross-section: every
/// zero status is resolved. The boundary must be flagged as a sphere;
/// b = 0 additionally needs its eigenvalue lists.
pub fn classify_rotsym(
    metric: &WarpedMetric,
    deg: &DegreePair,
    boundary: &BoundaryData,
) -> Result<Classification, Error> {
    if !boundary.is_sphere {
        return Err(Error::InvalidInput(
            "refined classification requires a round-sphere cross-section".into(),
        ));
    }
    if deg.n != boundary.n {
        return Err(Error::InvalidInput(format!(
            "degree dimension {} does not match boundary dimension {}",
            deg.n, boundary.n
        )));
    }
    let (n, p) = (deg.n, deg.p);
    let b = metric.b;
    let cylinder = metric.is_cylindrical();
    let middle = p > 1 && p + 1 < n; // 1 < p < n−1
    match (cylinder, b_sign(b)) {
        (true, -1) => {
            if 2 * p == n {
                // middle degree: infinitely many L² harmonic forms give
                // the isolated point 0 below the ray
                let spectrum = SpectrumDescription::point(Value::zero())
                    .union(&SpectrumDescription::ray(c2(deg, b))?);
                Ok(Classification {
                    spectrum,
                    branch: "rotsym:a=-1,b<0,p=n/2".into(),
                })
            } else {
                let start = c1(deg, b).min(c2(deg, b));
                Ok(Classification {
                    spectrum: SpectrumDescription::ray(start)?,
                    branch: "rotsym:a=-1,b<0".into(),
                })
            }
        }
        (_, 0) => {
            let lb = lambda_bar(deg, boundary)?;
            Ok(Classification {
                spectrum: SpectrumDescription::ray(lb)?,
                branch: if cylinder {
                    "rotsym:a=-1,b=0".into()
                } else {
                    "rotsym:a<-1,b=0".into()
                },
            })
        }
        (true, _) => {
            if middle {
                Ok(Classification {
                    spectrum: SpectrumDescription::empty(ZeroStatus::Excluded),
                    branch: "rotsym:a=-1,b>0,inner".into(),
                })
            } else {
                // p ∈ {0, 1, n−1, n}: the surviving harmonic block gives
                // the ray at ((n−1)/2)²b²
                let half = Value::rational(n as i64 - 1, 2);
                Ok(Classification {
                    spectrum: SpectrumDescription::ray(half.square().mul(b.square()))?,
                    branch: "rotsym:a=-1,b>0,edge".into(),
                })
            }
        }
        (false, -1) => Ok(Classification {
            spectrum: SpectrumDescription::ray(Value::zero())?,
            branch: "rotsym:a<-1,b<0".into(),
        }),
        (false, _) => {
            if middle {
                Ok(Classification {
                    spectrum: SpectrumDescription::empty(ZeroStatus::Excluded),
                    branch: "rotsym:a<-1,b>0,inner".into(),
                })
            } else {
                Ok(Classification {
                    spectrum: SpectrumDescription::ray(Value::zero())?,
                    branch: "rotsym:a<-1,b>0,edge".into(),
                })
            }
        }
    }
}

/// Dimension of the L² harmonic p-forms in the rotationally symmetric
/// model: nonzero only at the edge degrees (one-dimensional when b is
/// large enough) and, for even n, at the middle degree (then infinite-
/// dimensional when b < a+1).
pub fn harmonic_classify(metric: &WarpedMetric, deg: &DegreePair) -> HarmonicDimension {
    let (n, p) = (deg.n, deg.p);
    let (a, b) = (metric.a, metric.b);
    if p == 0 || p == n {
        // threshold b > −(a+1)/(n−1), decided exactly
        let threshold = Value::int(-1)
            .mul(a.add(Value::int(1)))
            .div(Value::int(n as i64 - 1));
        if threshold.lt(b) {
            HarmonicDimension::OneDimensional
        } else {
            HarmonicDimension::Zero
        }
    } else if 2 * p == n {
        if b.lt(a.add(Value::int(1))) {
            HarmonicDimension::InfiniteDimensional
        } else {
            HarmonicDimension::Zero
        }
    } else {
        HarmonicDimension::Zero
    }
}

/// Per-component spectra: `None` when the component does not exist at
/// this degree (type 1 absent at p = n, type 2 at p = 0, type 3 outside
/// 1 ≤ p ≤ n−1). Their union reproduces [`classify_general`] away from
/// zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentSpectra {
    pub type1: Option<SpectrumDescription>,
    pub type2: Option<SpectrumDescription>,
    pub type3: Option<SpectrumDescription>,
}

pub fn component_spectra(
    metric: &WarpedMetric,
    deg: &DegreePair,
    boundary: &BoundaryData,
) -> Result<ComponentSpectra, Error> {
    let b = metric.b;
    let cylinder = metric.is_cylindrical();
    let (has1, has2) = has_components(deg);
    let has3 = has1 && has2;
    let (f1, f2) = betti_flags(deg, boundary);

    let (type1, type2, type3) = match (cylinder, b_sign(b)) {
        (true, -1) => (
            has1.then(|| SpectrumDescription::ray(c1(deg, b)))
                .transpose()?,
            has2.then(|| SpectrumDescription::ray(c2(deg, b)))
                .transpose()?,
            has3.then(|| {
                SpectrumDescription::ray_with_zero(c1(deg, b).min(c2(deg, b)), ZeroStatus::Unknown)
            })
            .transpose()?,
        ),
        (_, 0) => {
            let list = |q: i64| -> Result<Option<Value>, Error> {
                match boundary.eigenvalues(q) {
                    Some(l) if !l.is_empty() => Ok(Some(exactify(l[0]))),
                    _ => Err(Error::MissingEigenvalues { degrees: vec![q] }),
                }
            };
            let t1 = if has1 { list(deg.p as i64)? } else { None };
            // type 2 is indexed by closed (p−1)-eigenforms: the harmonic
            // value 0 (when b_{p−1} ≠ 0) together with the exact
            // eigenvalues, which coincide with the positive coclosed
            // (p−2)-eigenvalues
            let t2 = if has2 {
                if boundary.betti(deg.p as i64 - 1) > 0 {
                    Some(Value::zero())
                } else if deg.p >= 2 {
                    let q = deg.p as i64 - 2;
                    match boundary.eigenvalues(q) {
                        Some(l) => l.iter().copied().find(|&x| x > 0.0).map(exactify),
                        None => return Err(Error::MissingEigenvalues { degrees: vec![q] }),
                    }
                } else {
                    None
                }
            } else {
                None
            };
            // coupled blocks exist for the positive eigenvalues only
            let t3 = if has3 {
                boundary
                    .eigenvalues(deg.p as i64 - 1)
                    .and_then(|l| l.iter().copied().find(|&x| x > 0.0))
                    .map(exactify)
            } else {
                None
            };
            let wrap = |has: bool, v: Option<Value>| -> Result<_, Error> {
                Ok(if has {
                    Some(match v {
                        Some(v) => SpectrumDescription::ray(v)?,
                        None => SpectrumDescription::empty(ZeroStatus::Excluded),
                    })
                } else {
                    None
                })
            };
            (wrap(has1, t1)?, wrap(has2, t2)?, wrap(has3, t3)?)
        }
        (true, _) => (
            // growing warp: blocks with positive eigenvalue are
            // discrete; only a surviving harmonic block contributes
            has1.then(|| {
                if f1 {
                    SpectrumDescription::ray(c1(deg, b))
                } else {
                    Ok(SpectrumDescription::empty(ZeroStatus::Excluded))
                }
            })
            .transpose()?,
            has2.then(|| {
                if f2 {
                    SpectrumDescription::ray(c2(deg, b))
                } else {
                    Ok(SpectrumDescription::empty(ZeroStatus::Excluded))
                }
            })
            .transpose()?,
            has3.then(|| SpectrumDescription::empty(ZeroStatus::Unknown)),
        ),
        (false, -1) => (
            has1.then(|| SpectrumDescription::ray(Value::zero()))
                .transpose()?,
            has2.then(|| SpectrumDescription::ray(Value::zero()))
                .transpose()?,
            has3.then(|| SpectrumDescription::ray_with_zero(Value::zero(), ZeroStatus::Unknown))
                .transpose()?,
        ),
        (false, _) => (
            has1.then(|| {
                if f1 {
                    SpectrumDescription::ray(Value::zero())
                } else {
                    Ok(SpectrumDescription::empty(ZeroStatus::Excluded))
                }
            })
            .transpose()?,
            has2.then(|| {
                if f2 {
                    SpectrumDescription::ray(Value::zero())
                } else {
                    Ok(SpectrumDescription::empty(ZeroStatus::Excluded))
                }
            })
            .transpose()?,
            has3.then(|| SpectrumDescription::empty(ZeroStatus::Unknown)),
        ),
    };
    Ok(ComponentSpectra {
        type1,
        type2,
        type3,
    })
}

/// Closed-form bottom of the essential spectrum of one reduced block at
/// a fixed cross-section eigenvalue; `None` when that block's spectrum
/// is purely discrete (empty essential spectrum). This is the value the
/// numerical cross-check targets.
pub fn component_bottom(
    metric: &WarpedMetric,
    deg: &DegreePair,
    kind: ComponentKind,
    lambda: f64,
) -> Result<Option<Value>, Error> {
    if kind == ComponentKind::Type3 && lambda <= 0.0 {
        return Err(Error::ZeroLambdaCoupling);
    }
    let b = metric.b;
    let cylinder = metric.is_cylindrical();
    let bottom = match (cylinder, b_sign(b)) {
        (true, -1) => Some(match kind {
            ComponentKind::Type1 => c1(deg, b),
            ComponentKind::Type2 => c2(deg, b),
            ComponentKind::Type3 => c1(deg, b).min(c2(deg, b)),
        }),
        (_, 0) => Some(exactify(lambda)),
        (true, _) => {
            if lambda > 0.0 {
                None // growing potential: purely discrete
            } else {
                Some(match kind {
                    ComponentKind::Type1 => c1(deg, b),
                    ComponentKind::Type2 => c2(deg, b),
                    ComponentKind::Type3 => unreachable!("type 3 requires lambda > 0"),
                })
            }
        }
        (false, -1) => Some(Value::zero()),
        (false, _) => {
            if lambda > 0.0 {
                None
            } else {
                Some(Value::zero())
            }
        }
    };
    Ok(bottom.map(with_fault))
}
