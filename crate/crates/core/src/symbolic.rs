//! Closed symbolic families for the reduced potentials.
//!
//! Everything the reduction produces lives in one of two families:
//! sums of `coeff * t^q * exp(rate*t)` on the half-line in the t
//! coordinate, and sums of `coeff * r^s` in the radial coordinate.
//! Both are closed under the operations the reduction needs (products,
//! derivatives, quotients and real powers of single terms), and both
//! admit an exact limit at +infinity, which is what the essential
//! spectrum and discreteness tests consume.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Behaviour of an expression as the coordinate tends to +infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    Finite(f64),
    PlusInfinity,
    MinusInfinity,
}

impl Limit {
    pub fn is_plus_infinity(self) -> bool {
        matches!(self, Limit::PlusInfinity)
    }
}

/// One term `coeff * t^tpow * exp(rate * t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpTerm {
    pub coeff: f64,
    pub tpow: i32,
    pub rate: f64,
}

/// Finite sum of exponential-polynomial terms in the variable t.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ExpPoly {
    terms: Vec<ExpTerm>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        ExpPoly::term(c, 0, 0.0)
    }

    pub fn one() -> Self {
        ExpPoly::constant(1.0)
    }

    pub fn term(coeff: f64, tpow: i32, rate: f64) -> Self {
        let mut e = ExpPoly {
            terms: vec![ExpTerm { coeff, tpow, rate }],
        };
        e.simplify();
        e
    }

    /// `exp(rate * t)`
    pub fn exp(rate: f64) -> Self {
        ExpPoly::term(1.0, 0, rate)
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the expression is identically 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].coeff == 1.0
            && self.terms[0].tpow == 0
            && self.terms[0].rate == 0.0
    }

    fn simplify(&mut self) {
        self.terms.sort_by(|a, b| {
            (a.rate, a.tpow)
                .partial_cmp(&(b.rate, b.tpow))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut merged: Vec<ExpTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.tpow == t.tpow && last.rate == t.rate => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0.0);
        self.terms = merged;
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        let mut e = ExpPoly { terms };
        e.simplify();
        e
    }

    pub fn scale(&self, c: f64) -> ExpPoly {
        let mut e = ExpPoly {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    coeff: c * t.coeff,
                    ..*t
                })
                .collect(),
        };
        e.simplify();
        e
    }

    pub fn sub(&self, other: &ExpPoly) -> ExpPoly {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(ExpTerm {
                    coeff: a.coeff * b.coeff,
                    tpow: a.tpow + b.tpow,
                    rate: a.rate + b.rate,
                });
            }
        }
        let mut e = ExpPoly { terms };
        e.simplify();
        e
    }

    /// d/dt, exact within the family.
    pub fn derivative(&self) -> ExpPoly {
        let mut terms = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            if t.rate != 0.0 {
                terms.push(ExpTerm {
                    coeff: t.coeff * t.rate,
                    tpow: t.tpow,
                    rate: t.rate,
                });
            }
            if t.tpow != 0 {
                terms.push(ExpTerm {
                    coeff: t.coeff * t.tpow as f64,
                    tpow: t.tpow - 1,
                    rate: t.rate,
                });
            }
        }
        let mut e = ExpPoly { terms };
        e.simplify();
        e
    }

    /// Quotient by a single term; exact, requires the divisor to be a
    /// one-term expression with nonzero coefficient.
    pub fn div_term(&self, divisor: &ExpPoly) -> Option<ExpPoly> {
        let [d] = divisor.terms[..] else { return None };
        if d.coeff == 0.0 {
            return None;
        }
        let mut e = ExpPoly {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    coeff: t.coeff / d.coeff,
                    tpow: t.tpow - d.tpow,
                    rate: t.rate - d.rate,
                })
                .collect(),
        };
        e.simplify();
        Some(e)
    }

    /// Real power of a single pure-exponential term with positive coefficient.
    pub fn powf(&self, exponent: f64) -> Option<ExpPoly> {
        let [t] = self.terms[..] else { return None };
        if t.tpow != 0 || t.coeff <= 0.0 {
            return None;
        }
        Some(ExpPoly::term(t.coeff.powf(exponent), 0, t.rate * exponent))
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|term| term.coeff * t.powi(term.tpow) * (term.rate * t).exp())
            .sum()
    }

    /// Exact limit as t -> +infinity, reading off the dominant term.
    pub fn limit_at_infinity(&self) -> Limit {
        let Some(lead) = self.terms.last() else {
            return Limit::Finite(0.0);
        };
        if lead.rate > 0.0 || (lead.rate == 0.0 && lead.tpow > 0) {
            if lead.coeff > 0.0 {
                Limit::PlusInfinity
            } else {
                Limit::MinusInfinity
            }
        } else if lead.rate == 0.0 && lead.tpow == 0 {
            Limit::Finite(lead.coeff)
        } else {
            Limit::Finite(0.0)
        }
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // constant part first, then decaying/growing terms
        for (i, t) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "{}", if t.coeff < 0.0 { " - " } else { " + " })?;
            } else if t.coeff < 0.0 {
                write!(f, "-")?;
            }
            let c = t.coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if t.tpow != 0 {
                factors.push(if t.tpow == 1 {
                    "t".into()
                } else {
                    format!("t^{}", t.tpow)
                });
            }
            if t.rate != 0.0 {
                factors.push(format!("exp({}t)", fmt_num(t.rate)));
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_num(c))?;
            } else {
                write!(f, "{}·{}", fmt_num(c), factors.join("·"))?;
            }
        }
        Ok(())
    }
}

/// One term `coeff * r^power`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowTerm {
    pub coeff: f64,
    pub power: f64,
}

/// Finite sum of real powers of the radial coordinate.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PowerSum {
    terms: Vec<PowTerm>,
}

impl PowerSum {
    pub fn zero() -> Self {
        PowerSum { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        PowerSum::term(c, 0.0)
    }

    pub fn term(coeff: f64, power: f64) -> Self {
        let mut p = PowerSum {
            terms: vec![PowTerm { coeff, power }],
        };
        p.simplify();
        p
    }

    pub fn terms(&self) -> &[PowTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn simplify(&mut self) {
        self.terms.sort_by(|a, b| {
            a.power
                .partial_cmp(&b.power)
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut merged: Vec<PowTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.power == t.power => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0.0);
        self.terms = merged;
    }

    pub fn add(&self, other: &PowerSum) -> PowerSum {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        let mut p = PowerSum { terms };
        p.simplify();
        p
    }

    pub fn scale(&self, c: f64) -> PowerSum {
        let mut p = PowerSum {
            terms: self
                .terms
                .iter()
                .map(|t| PowTerm {
                    coeff: c * t.coeff,
                    ..*t
                })
                .collect(),
        };
        p.simplify();
        p
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|t| t.coeff * r.powf(t.power)).sum()
    }

    pub fn limit_at_infinity(&self) -> Limit {
        let Some(lead) = self.terms.last() else {
            return Limit::Finite(0.0);
        };
        if lead.power > 0.0 {
            if lead.coeff > 0.0 {
                Limit::PlusInfinity
            } else {
                Limit::MinusInfinity
            }
        } else if lead.power == 0.0 {
            Limit::Finite(lead.coeff)
        } else {
            Limit::Finite(0.0)
        }
    }
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "{}", if t.coeff < 0.0 { " - " } else { " + " })?;
            } else if t.coeff < 0.0 {
                write!(f, "-")?;
            }
            let c = t.coeff.abs();
            if t.power == 0.0 {
                write!(f, "{}", fmt_num(c))?;
            } else {
                write!(f, "{}·r^{}", fmt_num(c), fmt_num(t.power))?;
            }
        }
        Ok(())
    }
}

/// A potential in either coordinate family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum SymExpr {
    /// Exponential-polynomial in the t coordinate.
    T(ExpPoly),
    /// Power sum in the radial coordinate.
    R(PowerSum),
}

impl SymExpr {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            SymExpr::T(e) => e.eval(x),
            SymExpr::R(p) => p.eval(x),
        }
    }

    pub fn limit_at_infinity(&self) -> Limit {
        match self {
            SymExpr::T(e) => e.limit_at_infinity(),
            SymExpr::R(p) => p.limit_at_infinity(),
        }
    }

    /// Name of the independent variable, for display.
    pub fn var(&self) -> char {
        match self {
            SymExpr::T(_) => 't',
            SymExpr::R(_) => 'r',
        }
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymExpr::T(e) => e.fmt(f),
            SymExpr::R(p) => p.fmt(f),
        }
    }
}

fn fmt_num(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}
