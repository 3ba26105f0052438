//! Domain types: warped metric, boundary data, and spectrum descriptions.

use crate::scalar::Value;
use crate::symbolic::ExpPoly;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// The pair of warping functions (f, g) of the end metric
/// f(t) dt^2 + g(t) dθ^2 on (c, ∞) × N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum WarpFamily {
    /// f = e^{-2(a+1)t}, g = e^{-2bt}; the standard two-exponent model.
    Exponential,
    /// Arbitrary positive pair from the exponential-polynomial family.
    General { f: ExpPoly, g: ExpPoly },
}

/// Metric data of a warped end: exponents (a, b), left endpoint c,
/// and the warp family. Complete iff a ≤ −1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WarpedMetric {
    pub a: Value,
    pub b: Value,
    pub c: f64,
    pub warp_family: WarpFamily,
}

impl WarpedMetric {
    /// Standard exponential-warp metric. Rejects incomplete metrics (a > −1)
    /// and nonpositive left endpoints.
    pub fn exponential(a: Value, b: Value, c: f64) -> Result<Self, Error> {
        if Value::int(-1).lt(a) {
            return Err(Error::IncompleteMetric { a: a.to_f64() });
        }
        if !(c > 0.0) {
            return Err(Error::InvalidInput(format!(
                "left endpoint c must be positive, got {c}"
            )));
        }
        Ok(WarpedMetric {
            a,
            b,
            c,
            warp_family: WarpFamily::Exponential,
        })
    }

    /// General symbolic warp pair. The pair must be positive on (c, ∞);
    /// only single-term exponentials (necessarily positive) are accepted here.
    pub fn general(a: Value, b: Value, c: f64, f: ExpPoly, g: ExpPoly) -> Result<Self, Error> {
        if Value::int(-1).lt(a) {
            return Err(Error::IncompleteMetric { a: a.to_f64() });
        }
        if !(c > 0.0) {
            return Err(Error::InvalidInput(format!(
                "left endpoint c must be positive, got {c}"
            )));
        }
        for e in [&f, &g] {
            if e.powf(1.0).is_none() {
                return Err(Error::InvalidInput(
                    "general warp functions must be single positive exponential terms".into(),
                ));
            }
        }
        Ok(WarpedMetric {
            a,
            b,
            c,
            warp_family: WarpFamily::General { f, g },
        })
    }

    /// The warp pair as symbolic expressions of t.
    pub fn warp_pair(&self) -> (ExpPoly, ExpPoly) {
        match &self.warp_family {
            WarpFamily::Exponential => (
                ExpPoly::exp(-2.0 * (self.a.to_f64() + 1.0)),
                ExpPoly::exp(-2.0 * self.b.to_f64()),
            ),
            WarpFamily::General { f, g } => (f.clone(), g.clone()),
        }
    }

    /// True when a = −1 exactly (cylindrical f ≡ 1 in the exponential family).
    pub fn is_cylindrical(&self) -> bool {
        self.a == Value::int(-1)
    }
}

/// Dimension n and form degree p, 0 ≤ p ≤ n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePair {
    pub n: u32,
    pub p: u32,
}

impl DegreePair {
    pub fn new(n: u32, p: u32) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "dimension n must be ≥ 2, got {n}"
            )));
        }
        if p > n {
            return Err(Error::InvalidInput(format!(
                "degree p = {p} exceeds dimension n = {n}"
            )));
        }
        Ok(DegreePair { n, p })
    }

    /// n − 2p − 1 as a signed integer.
    pub fn m1(&self) -> i64 {
        self.n as i64 - 2 * self.p as i64 - 1
    }

    /// n − 2p + 1 as a signed integer.
    pub fn m2(&self) -> i64 {
        self.n as i64 - 2 * self.p as i64 + 1
    }
}

/// Spectral data of the cross-section N: dimension, Betti numbers, and
/// (optionally) the coclosed Laplace eigenvalue lists per degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryData {
    pub n: u32,
    pub betti: Vec<u64>,
    /// degree q -> ascending coclosed eigenvalues of the q-form Laplacian on N
    pub eigenvalues_coclosed: BTreeMap<u32, Vec<f64>>,
    pub is_sphere: bool,
}

impl BoundaryData {
    pub fn new(
        n: u32,
        betti: Vec<u64>,
        eigenvalues_coclosed: BTreeMap<u32, Vec<f64>>,
        is_sphere: bool,
    ) -> Result<Self, Error> {
        if betti.len() != n as usize {
            return Err(Error::InvalidInput(format!(
                "expected {} Betti numbers for an (n−1)-dimensional cross-section, got {}",
                n,
                betti.len()
            )));
        }
        for (q, list) in &eigenvalues_coclosed {
            if list.windows(2).any(|w| w[0] > w[1]) || list.iter().any(|&x| x < 0.0) {
                return Err(Error::InvalidInput(format!(
                    "eigenvalue list for degree {q} must be ascending and nonnegative"
                )));
            }
            let has_zero = list.first().is_some_and(|&x| x == 0.0);
            let b = betti.get(*q as usize).copied().unwrap_or(0);
            if has_zero != (b > 0) {
                return Err(Error::InvalidInput(format!(
                    "degree {q}: eigenvalue 0 present iff Betti number positive (betti = {b})"
                )));
            }
        }
        if is_sphere {
            let ok = betti.first() == Some(&1)
                && betti.last() == Some(&1)
                && betti[1..n as usize - 1].iter().all(|&b| b == 0);
            // n = 2: circle has betti = [1, 1]; covered by first/last checks
            if !ok && n > 2 {
                return Err(Error::InvalidInput(
                    "sphere cross-section requires betti = (1, 0, …, 0, 1)".into(),
                ));
            }
        }
        Ok(BoundaryData {
            n,
            betti,
            eigenvalues_coclosed,
            is_sphere,
        })
    }

    /// Round-sphere boundary data with no eigenvalue lists attached.
    pub fn sphere(n: u32) -> Self {
        let mut betti = vec![0u64; n as usize];
        betti[0] = 1;
        betti[n as usize - 1] = 1;
        BoundaryData {
            n,
            betti,
            eigenvalues_coclosed: BTreeMap::new(),
            is_sphere: true,
        }
    }

    /// Round-sphere boundary data with the first `count` coclosed
    /// eigenvalues attached for every degree 0..n−1.
    ///
    /// Coexact q-eigenvalues of the unit round S^{n−1} (dimension
    /// d = n−1): (k+q)(k+d−1−q) for k ≥ 1, plus the harmonic value 0 in
    /// degrees 0 and d. The top degree carries the harmonic form only
    /// (coclosed top forms are the harmonic multiples of the volume
    /// form).
    pub fn sphere_with_eigenvalues(n: u32, count: usize) -> Self {
        let mut data = BoundaryData::sphere(n);
        let d = n as i64 - 1;
        for q in 0..n {
            let qi = q as i64;
            let mut list = Vec::with_capacity(count + 1);
            if q == 0 || q == n - 1 {
                list.push(0.0);
            }
            if qi < d {
                for k in 1..=count as i64 {
                    list.push(((k + qi) * (k + d - 1 - qi)) as f64);
                }
            }
            data.eigenvalues_coclosed.insert(q, list);
        }
        data
    }

    pub fn betti(&self, q: i64) -> u64 {
        if q < 0 || q >= self.n as i64 {
            0
        } else {
            self.betti[q as usize]
        }
    }

    pub fn eigenvalues(&self, q: i64) -> Option<&[f64]> {
        if q < 0 || q >= self.n as i64 {
            return Some(&[]);
        }
        self.eigenvalues_coclosed
            .get(&(q as u32))
            .map(|v| v.as_slice())
    }
}

/// Whether 0 belongs to the essential spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroStatus {
    Included,
    Excluded,
    /// The result determines σ_ess \ {0} only.
    Unknown,
}

impl ZeroStatus {
    /// Join for unions: Included dominates, then Unknown, then Excluded.
    pub fn join(self, other: ZeroStatus) -> ZeroStatus {
        use ZeroStatus::*;
        match (self, other) {
            (Included, _) | (_, Included) => Included,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Excluded,
        }
    }
}

/// An essential-spectrum description: at most one closed half-line
/// [start, ∞), finitely many isolated points below it, and an explicit
/// three-state answer for the point 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDescription {
    rays: Vec<Value>,
    points: Vec<Value>,
    pub zero_status: ZeroStatus,
}

impl SpectrumDescription {
    /// Empty spectrum with the given status for 0.
    pub fn empty(zero_status: ZeroStatus) -> Self {
        SpectrumDescription {
            rays: Vec::new(),
            points: Vec::new(),
            zero_status,
        }
    }

    /// The half-line [start, ∞). Zero is Included iff start = 0,
    /// Excluded otherwise. Negative starts are rejected.
    pub fn ray(start: Value) -> Result<Self, Error> {
        if start.is_negative() {
            return Err(Error::InvalidInput(format!("negative ray start {start}")));
        }
        let zero_status = if start.is_zero() {
            ZeroStatus::Included
        } else {
            ZeroStatus::Excluded
        };
        Ok(SpectrumDescription {
            rays: vec![start],
            points: Vec::new(),
            zero_status,
        })
    }

    /// Ray with an explicitly overridden zero status.
    pub fn ray_with_zero(start: Value, zero_status: ZeroStatus) -> Result<Self, Error> {
        let mut s = SpectrumDescription::ray(start)?;
        s.zero_status = zero_status;
        Ok(s)
    }

    /// A single isolated point.
    pub fn point(x: Value) -> Self {
        let zero_status = if x.is_zero() {
            ZeroStatus::Included
        } else {
            ZeroStatus::Excluded
        };
        SpectrumDescription {
            rays: Vec::new(),
            points: vec![x],
            zero_status,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty() && self.points.is_empty()
    }

    /// Start of the (unique, after normalization) ray, if any.
    pub fn ray_start(&self) -> Option<&Value> {
        self.rays.first()
    }

    pub fn points(&self) -> &[Value] {
        &self.points
    }

    /// Bottom of the described set, if nonempty.
    pub fn bottom(&self) -> Option<Value> {
        self.rays
            .iter()
            .chain(self.points.iter())
            .cloned()
            .reduce(|a, b| a.min(b))
    }

    /// Reduce to normal form: one ray at the minimal start, points only
    /// strictly below the ray start, deduplicated and sorted.
    pub fn normalize(&mut self) {
        if let Some(min) = self.rays.iter().cloned().reduce(|a, b| a.min(b)) {
            self.rays = vec![min];
        }
        self.points
            .sort_by(|x, y| x.to_f64().partial_cmp(&y.to_f64()).unwrap());
        self.points.dedup_by(|x, y| x == y);
        if let Some(start) = self.rays.first().cloned() {
            self.points.retain(|x| x.lt(start));
        }
    }

    /// Union of two normal-form descriptions, in normal form.
    pub fn union(&self, other: &SpectrumDescription) -> SpectrumDescription {
        let mut out = SpectrumDescription {
            rays: self.rays.iter().chain(other.rays.iter()).cloned().collect(),
            points: self
                .points
                .iter()
                .chain(other.points.iter())
                .cloned()
                .collect(),
            zero_status: self.zero_status.join(other.zero_status),
        };
        out.normalize();
        out
    }
}

impl fmt::Display for SpectrumDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")?;
        } else {
            let mut first = true;
            for p in &self.points {
                if !first {
                    write!(f, " ∪ ")?;
                }
                write!(f, "{{{p}}}")?;
                first = false;
            }
            if let Some(start) = self.rays.first() {
                if !first {
                    write!(f, " ∪ ")?;
                }
                write!(f, "[{start}, ∞)")?;
            }
        }
        match self.zero_status {
            ZeroStatus::Included => write!(f, " (zero included)"),
            ZeroStatus::Excluded => write!(f, " (zero excluded)"),
            ZeroStatus::Unknown => write!(f, " (zero unknown)"),
        }
    }
}
