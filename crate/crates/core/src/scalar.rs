//! Exact-or-float real values.
//!
//! Ray starts and metric exponents are kept as exact rationals whenever the
//! inputs allow it, so the classifier can emit exact thresholds; everything
//! falls back to `f64` otherwise. Float comparisons use a 1e-12 tolerance.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Comparison tolerance used whenever at least one side is a float.
pub const FLOAT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub enum Value {
    /// Exact rational value.
    Exact(#[serde(with = "ratio_serde")] Ratio<i64>),
    /// Floating-point fallback.
    Approx(f64),
}

mod ratio_serde {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        (*r.numer(), *r.denom()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let (n, den) = <(i64, i64)>::deserialize(d)?;
        if den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Ratio::new(n, den))
    }
}

impl Value {
    pub fn int(v: i64) -> Self {
        Value::Exact(Ratio::from_integer(v))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Value::Exact(Ratio::new(num, den))
    }

    pub fn zero() -> Self {
        Value::int(0)
    }

    /// Parse a decimal or fraction string exactly when possible
    /// ("-1", "0.25", "3/4"), falling back to `Approx` otherwise.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let (n, d) = (
                num.trim().parse::<i64>().ok()?,
                den.trim().parse::<i64>().ok()?,
            );
            if d == 0 {
                return None;
            }
            return Some(Value::Exact(Ratio::new(n, d)));
        }
        if let Ok(i) = s.parse::<i64>() {
            return Some(Value::int(i));
        }
        // finite decimal -> exact rational with power-of-ten denominator
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if !frac_part.is_empty()
                && frac_part.len() <= 9
                && frac_part.chars().all(|c| c.is_ascii_digit())
            {
                let sign = if int_part.starts_with('-') { -1 } else { 1 };
                let digits = int_part.trim_start_matches(['+', '-']);
                let ip = if digits.is_empty() {
                    Ok(0)
                } else {
                    digits.parse::<i64>()
                };
                if let (Ok(ip), Ok(fp)) = (ip, frac_part.parse::<i64>()) {
                    let den = 10i64.pow(frac_part.len() as u32);
                    return Some(Value::Exact(Ratio::new(sign * (ip * den + fp), den)));
                }
            }
        }
        s.parse::<f64>().ok().map(Value::Approx)
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Approx(x) => x,
        }
    }

    pub fn as_exact(self) -> Option<Ratio<i64>> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    pub fn is_zero(self) -> bool {
        match self {
            Value::Exact(r) => r.is_zero(),
            Value::Approx(x) => x.abs() <= FLOAT_TOL,
        }
    }

    pub fn is_negative(self) -> bool {
        match self {
            Value::Exact(r) => r.is_negative(),
            Value::Approx(x) => x < -FLOAT_TOL,
        }
    }

    pub fn abs(self) -> Self {
        match self {
            Value::Exact(r) => Value::Exact(r.abs()),
            Value::Approx(x) => Value::Approx(x.abs()),
        }
    }

    pub fn mul(self, other: Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a * b),
            (a, b) => Value::Approx(a.to_f64() * b.to_f64()),
        }
    }

    pub fn add(self, other: Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            (a, b) => Value::Approx(a.to_f64() + b.to_f64()),
        }
    }

    pub fn sub(self, other: Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a - b),
            (a, b) => Value::Approx(a.to_f64() - b.to_f64()),
        }
    }

    pub fn div(self, other: Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) if !b.is_zero() => Value::Exact(a / b),
            (a, b) => Value::Approx(a.to_f64() / b.to_f64()),
        }
    }

    pub fn square(self) -> Value {
        self.mul(self)
    }

    pub fn min(self, other: Value) -> Value {
        if self.le(other) {
            self
        } else {
            other
        }
    }

    pub fn le(self, other: Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a <= b,
            (a, b) => a.to_f64() <= b.to_f64() + FLOAT_TOL,
        }
    }

    pub fn lt(self, other: Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a < b,
            (a, b) => a.to_f64() < b.to_f64() - FLOAT_TOL,
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            (a, b) => (a.to_f64() - b.to_f64()).abs() <= FLOAT_TOL,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Value::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Approx(x) => write!(f, "{x}"),
        }
    }
}
