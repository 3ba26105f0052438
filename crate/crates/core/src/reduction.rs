//! Construction of the reduced one-dimensional operators.
//!
//! On each invariant subspace the form Laplacian reduces, after a
//! unitary change of dependent variable, to a Sturm–Liouville operator
//! −(1/f · w′)′ + V w on L²(c, ∞) (scalar types) or a symmetric 2×2
//! coupled system. For a = −1 the potential is a constant plus
//! λ·e^{2bt}; for a < −1 the radial substitution r = e^{−(a+1)t}/|a+1|
//! turns it into K/r² plus a power of r.

use crate::model::{DegreePair, WarpFamily, WarpedMetric};
use crate::scalar::Value;
use crate::symbolic::{ExpPoly, PowerSum, SymExpr};
use crate::Error;

/// Which scalar reduction a potential came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorType {
    /// Coclosed tangential forms.
    Type1,
    /// Closed normal forms (the ∧dt part).
    Type2,
}

/// Potential data of a scalar reduced operator
/// −(1/f · w′)′ + V w, acting on L²(dt) (or L²(dr) after the radial
/// substitution, where the principal part is plain −∂²).
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPotential {
    pub potential: SymExpr,
    /// Symbolic 1/f in the principal part; `None` means identically 1.
    pub principal_weight: Option<ExpPoly>,
}

impl ScalarPotential {
    pub fn eval(&self, x: f64) -> f64 {
        self.potential.eval(x)
    }

    pub fn inv_f(&self, x: f64) -> f64 {
        self.principal_weight.as_ref().map_or(1.0, |w| w.eval(x))
    }
}

/// Symmetric 2×2 coupled system: rows −w₁″ + v1·w₁ + coupling·w₂ and
/// −w₂″ + v2·w₂ + coupling·w₁ (the two off-diagonal entries are the
/// same expression by construction).
#[derive(Debug, Clone, PartialEq)]
pub struct CoupledOperator {
    pub v1: ScalarPotential,
    pub v2: ScalarPotential,
    pub coupling: SymExpr,
}

impl CoupledOperator {
    /// The single off-diagonal expression, evaluated.
    pub fn coupling_at(&self, x: f64) -> f64 {
        self.coupling.eval(x)
    }
}

fn check_lambda(lambda: f64) -> Result<(), Error> {
    if lambda < 0.0 || !lambda.is_finite() {
        Err(Error::InvalidInput(format!(
            "cross-section eigenvalue must be >= 0, got {lambda}"
        )))
    } else {
        Ok(())
    }
}

/// The full t-coordinate bracket for either scalar type, valid for any
/// single-exponential warp pair. Exact within the symbolic family.
fn general_bracket(
    f: &ExpPoly,
    g: &ExpPoly,
    ty: OperatorType,
    deg: &DegreePair,
    lambda: f64,
) -> ExpPoly {
    let fp = f.derivative();
    let fpp = fp.derivative();
    let gp = g.derivative();
    let gpp = gp.derivative();
    let gp_over_g = gp.div_term(g).expect("g is a single term");
    let gpp_over_g = gpp.div_term(g).expect("g is a single term");
    let f2 = f.mul(f);
    let f3 = f2.mul(f);

    // m/4 with m = n−2p∓1; the cross and second-derivative terms carry
    // opposite signs between the two types.
    let (m4, cross_sign, gpp_sign) = match ty {
        OperatorType::Type1 => (deg.m1() as f64 / 4.0, -1.0, 1.0),
        OperatorType::Type2 => (deg.m2() as f64 / 4.0, 1.0, -1.0),
    };
    let msq4 = match ty {
        OperatorType::Type1 => deg.m1() as f64 / 4.0 * ((deg.m1() - 4) as f64 / 4.0),
        OperatorType::Type2 => deg.m2() as f64 / 4.0 * ((deg.m2() + 4) as f64 / 4.0),
    };

    let mut v = fp.mul(&fp).div_term(&f3).unwrap().scale(-7.0 / 16.0);
    v = v.add(&fpp.div_term(&f2).unwrap().scale(0.25));
    v = v.add(
        &fp.div_term(&f2)
            .unwrap()
            .mul(&gp_over_g)
            .scale(cross_sign * 0.5 * m4),
    );
    v = v.add(&gp_over_g.mul(&gp_over_g).div_term(f).unwrap().scale(msq4));
    v = v.add(&gpp_over_g.div_term(f).unwrap().scale(gpp_sign * m4));
    if lambda != 0.0 {
        v = v.add(&ExpPoly::one().div_term(g).unwrap().scale(lambda));
    }
    v
}

/// m/2 as an exact value, m = n−2p∓1.
fn half(m: i64) -> Value {
    Value::rational(m, 2)
}

/// The r⁻² constants of the radial form, exact in (a, b) when those are
/// rational: K = (m/2)²·b²/(a+1)² ± (m/2)·b/|a+1| with m = n−2p−1 and a
/// plus sign for type 1, m = n−2p+1 and a minus sign for type 2.
pub fn k_constants(deg: &DegreePair, a: Value, b: Value) -> Result<(Value, Value), Error> {
    if !a.lt(Value::int(-1)) {
        return Err(Error::InvalidInput(format!(
            "radial constants are defined for a < -1 only, got a = {a}"
        )));
    }
    let a1 = a.add(Value::int(1)); // negative
    let abs_a1 = a1.abs();
    let b_sq_over = b.mul(b).div(a1.mul(a1));
    let b_over = b.div(abs_a1);
    let h1 = half(deg.m1());
    let h2 = half(deg.m2());
    let k1 = h1.mul(h1).mul(b_sq_over).add(h1.mul(b_over));
    let k2 = h2.mul(h2).mul(b_sq_over).sub(h2.mul(b_over));
    Ok((k1, k2))
}

/// Radial coordinate r(t) = e^{−(a+1)t}/|a+1|, defined for a < −1.
pub fn r_coordinate(metric: &WarpedMetric, t: f64) -> Result<f64, Error> {
    let a = metric.a.to_f64();
    if a >= -1.0 {
        return Err(Error::InvalidInput(format!(
            "radial coordinate is defined for a < -1 only, got a = {a}"
        )));
    }
    Ok((-(a + 1.0) * t).exp() / (a + 1.0).abs())
}

/// Radial potential K/r² + λ·|a+1|^{−2b/(a+1)}·r^{−2b/(a+1)}.
fn radial_potential(k: f64, a: f64, b: f64, lambda: f64) -> PowerSum {
    let mut v = PowerSum::term(k, -2.0);
    if lambda != 0.0 {
        let s = -2.0 * b / (a + 1.0);
        let abs_a1 = (a + 1.0).abs();
        v = v.add(&PowerSum::term(lambda * abs_a1.powf(s), s));
    }
    v
}

fn build_scalar(
    metric: &WarpedMetric,
    deg: &DegreePair,
    lambda: f64,
    ty: OperatorType,
) -> Result<ScalarPotential, Error> {
    check_lambda(lambda)?;
    match &metric.warp_family {
        WarpFamily::General { f, g } => Ok(ScalarPotential {
            potential: SymExpr::T(general_bracket(f, g, ty, deg, lambda)),
            principal_weight: if f.is_one() {
                None
            } else {
                Some(ExpPoly::one().div_term(f).expect("f is a single term"))
            },
        }),
        WarpFamily::Exponential if metric.is_cylindrical() => {
            // a = −1: V = (m/2)²b² + λ e^{2bt}
            let m = match ty {
                OperatorType::Type1 => deg.m1(),
                OperatorType::Type2 => deg.m2(),
            };
            let c = half(m).square().mul(metric.b.square()).to_f64();
            let mut v = ExpPoly::constant(c);
            if lambda != 0.0 {
                v = v.add(&ExpPoly::term(lambda, 0, 2.0 * metric.b.to_f64()));
            }
            Ok(ScalarPotential {
                potential: SymExpr::T(v),
                principal_weight: None,
            })
        }
        WarpFamily::Exponential => {
            // a < −1: radial form −∂²_r + K/r² + λ-power term
            let (k1, k2) = k_constants(deg, metric.a, metric.b)?;
            let k = match ty {
                OperatorType::Type1 => k1,
                OperatorType::Type2 => k2,
            };
            let v = radial_potential(k.to_f64(), metric.a.to_f64(), metric.b.to_f64(), lambda);
            Ok(ScalarPotential {
                potential: SymExpr::R(v),
                principal_weight: None,
            })
        }
    }
}

/// Reduced operator on coclosed tangential p-forms, indexed by a
/// coclosed eigenvalue λ of the cross-section p-form Laplacian.
pub fn build_type1(
    metric: &WarpedMetric,
    deg: &DegreePair,
    lambda: f64,
) -> Result<ScalarPotential, Error> {
    build_scalar(metric, deg, lambda, OperatorType::Type1)
}

/// Reduced operator on closed normal (p−1)∧dt forms, indexed by a
/// closed eigenvalue λ of the cross-section (p−1)-form Laplacian.
pub fn build_type2(
    metric: &WarpedMetric,
    deg: &DegreePair,
    lambda: f64,
) -> Result<ScalarPotential, Error> {
    build_scalar(metric, deg, lambda, OperatorType::Type2)
}

/// Coupled exact/coexact pair for a nonzero cross-section eigenvalue.
/// λ = 0 is rejected: the construction divides by √λ.
pub fn build_type3(
    metric: &WarpedMetric,
    deg: &DegreePair,
    lambda: f64,
) -> Result<CoupledOperator, Error> {
    check_lambda(lambda)?;
    if lambda == 0.0 {
        return Err(Error::ZeroLambdaCoupling);
    }
    let v1 = build_scalar(metric, deg, lambda, OperatorType::Type1)?;
    let v2 = build_scalar(metric, deg, lambda, OperatorType::Type2)?;
    let coupling = match &metric.warp_family {
        WarpFamily::General { f, g } => {
            // g^{-3/2} f^{-1/2} g' √λ, exact for single-term f, g
            let gp = g.derivative();
            let g32 = g.powf(1.5).expect("g single term");
            let f12 = f.powf(0.5).expect("f single term");
            SymExpr::T(gp.div_term(&g32.mul(&f12)).unwrap().scale(lambda.sqrt()))
        }
        WarpFamily::Exponential if metric.is_cylindrical() => {
            // −2b e^{bt} √λ
            let b = metric.b.to_f64();
            SymExpr::T(ExpPoly::term(-2.0 * b * lambda.sqrt(), 0, b))
        }
        WarpFamily::Exponential => {
            // −2b√λ · (|a+1| r)^{−(a+b+1)/(a+1)}
            let a = metric.a.to_f64();
            let b = metric.b.to_f64();
            let s = -(a + b + 1.0) / (a + 1.0);
            let abs_a1 = (a + 1.0).abs();
            SymExpr::R(PowerSum::term(-2.0 * b * lambda.sqrt() * abs_a1.powf(s), s))
        }
    };
    Ok(CoupledOperator { v1, v2, coupling })
}

/// The operator acting on the fiber coefficient h before the change of
/// dependent variable, together with the L² weight ρ of its natural
/// space. The isometry h ↦ w = √ρ · h carries it onto the
/// [`ScalarPotential`] form; `conjugation_check` validates that algebra
/// numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct PreTransformOperator {
    pub ty: OperatorType,
    /// f^{−1/2} g^{+m/2}
    pub inner: ExpPoly,
    /// f^{−1/2} g^{−m/2}
    pub outer: ExpPoly,
    /// λ/g as a symbolic expression
    pub lambda_over_g: ExpPoly,
    /// weight ρ: g^{m/2} f^{1/2} (type 1) or g^{m/2} f^{−1/2} (type 2)
    pub weight: ExpPoly,
}

impl PreTransformOperator {
    pub fn new(
        metric: &WarpedMetric,
        deg: &DegreePair,
        lambda: f64,
        ty: OperatorType,
    ) -> Result<Self, Error> {
        check_lambda(lambda)?;
        let (f, g) = metric.warp_pair();
        let (m, f_weight_pow) = match ty {
            OperatorType::Type1 => (deg.m1() as f64, 0.5),
            OperatorType::Type2 => (deg.m2() as f64, -0.5),
        };
        let f_inv_half = f.powf(-0.5).ok_or_else(|| {
            Error::InvalidInput("warp function f must be a single positive term".into())
        })?;
        let g_half_m = g.powf(m / 2.0).ok_or_else(|| {
            Error::InvalidInput("warp function g must be a single positive term".into())
        })?;
        let g_neg_half_m = g.powf(-m / 2.0).unwrap();
        Ok(PreTransformOperator {
            ty,
            inner: f_inv_half.mul(&g_half_m),
            outer: f_inv_half.mul(&g_neg_half_m),
            lambda_over_g: ExpPoly::one().div_term(&g).unwrap().scale(lambda),
            weight: g.powf(m / 2.0).unwrap().mul(&f.powf(f_weight_pow).unwrap()),
        })
    }

    /// Apply the operator to a sample function at t, all derivatives by
    /// 4th-order central differences with the given step.
    pub fn apply(&self, h: &dyn Fn(f64) -> f64, t: f64, step: f64) -> f64 {
        match self.ty {
            OperatorType::Type1 => {
                // λ/g·h − outer · d/dt[ inner · h′ ]
                let flux = |x: f64| self.inner.eval(x) * deriv4(h, x, step);
                self.lambda_over_g.eval(t) * h(t) - self.outer.eval(t) * deriv4(&flux, t, step)
            }
            OperatorType::Type2 => {
                // λ/g·h − d/dt[ outer · d/dt( inner · h ) ]
                let prod = |x: f64| self.inner.eval(x) * h(x);
                let flux = |x: f64| self.outer.eval(x) * deriv4(&prod, x, step);
                self.lambda_over_g.eval(t) * h(t) - deriv4(&flux, t, step)
            }
        }
    }
}

/// 4th-order central first derivative.
fn deriv4(f: &dyn Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Smooth compactly supported test function
/// exp(−1/(1−x²)) on |x| < 1, x = (t − center)/width.
#[derive(Debug, Clone, Copy)]
pub struct BumpFunction {
    pub center: f64,
    pub width: f64,
}

impl BumpFunction {
    pub fn eval(&self, t: f64) -> f64 {
        let x = (t - self.center) / self.width;
        if x.abs() >= 1.0 {
            0.0
        } else {
            (-1.0 / (1.0 - x * x)).exp()
        }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.center - self.width, self.center + self.width)
    }
}

/// Evaluate both sides of the unitary equivalence on a grid: apply the
/// pre-transform operator to h, map via w = √ρ·h, compare with the
/// reduced operator −(1/f·w′)′ + V·w applied to w. Returns the maximum
/// absolute residual over the support of the sample.
pub fn conjugation_check(
    pre: &PreTransformOperator,
    reduced: &ScalarPotential,
    sample: &BumpFunction,
    left: f64,
    step: f64,
) -> Result<f64, Error> {
    let (lo, hi) = sample.support();
    // nested 4th-order stencils reach 4 steps outward
    if lo - 4.0 * step <= left {
        return Err(Error::SupportTouchesBoundary { lo, hi });
    }
    let SymExpr::T(v) = &reduced.potential else {
        return Err(Error::InvalidInput(
            "conjugation check needs a t-coordinate reduced potential".into(),
        ));
    };
    let h = |t: f64| sample.eval(t);
    let w = |t: f64| pre.weight.eval(t).sqrt() * h(t);
    let inv_f = |t: f64| reduced.principal_weight.as_ref().map_or(1.0, |p| p.eval(t));
    let flux = move |t: f64| inv_f(t) * deriv4(&w, t, step);
    let mut max_res = 0.0f64;
    let npts = ((hi - lo) / step).ceil() as usize;
    for i in 0..=npts {
        let t = lo + i as f64 * (hi - lo) / npts as f64;
        let lhs = pre.weight.eval(t).sqrt() * pre.apply(&h, t, step);
        let rhs = -deriv4(&flux, t, step) + v.eval(t) * w(t);
        max_res = max_res.max((lhs - rhs).abs());
    }
    Ok(max_res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::WarpedMetric;

    fn exp_metric(a: i64, b: &str) -> WarpedMetric {
        WarpedMetric::exponential(Value::int(a), Value::parse(b).unwrap(), 1.0).unwrap()
    }

    fn deg(n: u32, p: u32) -> DegreePair {
        DegreePair::new(n, p).unwrap()
    }

    #[test]
    fn cylindrical_type1_constants() {
        // n=3, p=0, b=-1: ((3-1)/2)^2 = 1
        let v = build_type1(&exp_metric(-1, "-1"), &deg(3, 0), 0.0).unwrap();
        let SymExpr::T(e) = &v.potential else {
            panic!()
        };
        assert_eq!(*e, ExpPoly::constant(1.0));
        // n=3, p=1: n-2p-1 = 0
        let v = build_type1(&exp_metric(-1, "7"), &deg(3, 1), 0.0).unwrap();
        assert!(matches!(&v.potential, SymExpr::T(e) if e.is_zero()));
    }

    #[test]
    fn cylindrical_type2_constants() {
        // n=3, p=2, b=-1: n-2p+1 = 0
        let v = build_type2(&exp_metric(-1, "-1"), &deg(3, 2), 0.0).unwrap();
        assert!(matches!(&v.potential, SymExpr::T(e) if e.is_zero()));
        // n=4, p=1, b=2: ((4-2+1)/2)^2 · 4 = 9
        let v = build_type2(&exp_metric(-1, "2"), &deg(4, 1), 0.0).unwrap();
        let SymExpr::T(e) = &v.potential else {
            panic!()
        };
        assert_eq!(*e, ExpPoly::constant(9.0));
    }

    #[test]
    fn general_bracket_specializes_to_cylindrical_constant() {
        // f ≡ 1, g = e^{-2bt}: the full bracket collapses to the constant
        for b in [-2.0f64, -0.5, 0.5, 2.0] {
            for (n, p) in [(3u32, 0u32), (5, 2), (8, 3), (4, 4)] {
                let m = WarpedMetric::general(
                    Value::int(-1),
                    Value::Approx(b),
                    1.0,
                    ExpPoly::one(),
                    ExpPoly::exp(-2.0 * b),
                )
                .unwrap();
                let v = build_type1(&m, &deg(n, p), 0.0).unwrap();
                let c = (n as f64 - 2.0 * p as f64 - 1.0).powi(2) / 4.0 * b * b;
                for i in 0..100 {
                    let t = 1.0 + 0.07 * i as f64;
                    assert!((v.eval(t) - c).abs() < 1e-10, "n={n} p={p} b={b} t={t}");
                }
            }
        }
    }

    #[test]
    fn duality_type1_type2() {
        // type-1 constant at degree p equals type-2 constant at degree n−p
        for n in 2..=8u32 {
            for p in 0..=n {
                let d1 = deg(n, p);
                let d2 = deg(n, n - p);
                assert_eq!(d1.m1(), -d2.m2());
                let m = exp_metric(-1, "-3/2");
                let v1 = build_type1(&m, &d1, 5.0).unwrap();
                let v2 = build_type2(&m, &d2, 5.0).unwrap();
                assert_eq!(v1.potential, v2.potential);
            }
        }
    }

    #[test]
    fn radial_coordinate() {
        let m2 = exp_metric(-2, "1");
        assert_eq!(r_coordinate(&m2, 0.0).unwrap(), 1.0);
        assert!((r_coordinate(&m2, 2f64.ln()).unwrap() - 2.0).abs() < 1e-15);
        let m3 = exp_metric(-3, "1");
        assert_eq!(r_coordinate(&m3, 0.0).unwrap(), 0.5);
        assert!(r_coordinate(&exp_metric(-1, "1"), 0.0).is_err());
    }

    #[test]
    fn radial_constants() {
        let a = Value::int(-2);
        let b = Value::int(1);
        let (k1, _) = k_constants(&deg(3, 1), a, b).unwrap();
        assert!(k1.is_zero());
        let (k1, k2) = k_constants(&deg(3, 0), a, b).unwrap();
        assert_eq!(k1, Value::int(2));
        assert_eq!(k2, Value::int(2));
        assert!(k_constants(&deg(3, 0), Value::int(-1), b).is_err());
    }

    #[test]
    fn radial_type1_potential() {
        // n=3, p=0, a=-2, b=1, λ=0: V = 2·r^{-2}
        let v = build_type1(&exp_metric(-2, "1"), &deg(3, 0), 0.0).unwrap();
        assert_eq!(v.potential.to_string(), "2·r^-2");
        // λ=3 adds 3·r^{-2b/(a+1)} = 3·r^2 (|a+1| = 1)
        let v = build_type1(&exp_metric(-2, "1"), &deg(3, 0), 3.0).unwrap();
        assert!((v.eval(2.0) - (2.0 / 4.0 + 3.0 * 4.0)).abs() < 1e-12);
    }

    #[test]
    fn coupled_cylindrical() {
        // a=-1, b=-1, n=3, p=1, λ=4: v1 = 4e^{-2t}, v2 = 1 + 4e^{-2t},
        // coupling = -2b·e^{bt}·√λ = 4e^{-t}
        let op = build_type3(&exp_metric(-1, "-1"), &deg(3, 1), 4.0).unwrap();
        let SymExpr::T(v1) = &op.v1.potential else {
            panic!()
        };
        assert_eq!(*v1, ExpPoly::term(4.0, 0, -2.0));
        let SymExpr::T(v2) = &op.v2.potential else {
            panic!()
        };
        assert_eq!(
            *v2,
            ExpPoly::constant(1.0).add(&ExpPoly::term(4.0, 0, -2.0))
        );
        let SymExpr::T(c) = &op.coupling else {
            panic!()
        };
        assert_eq!(*c, ExpPoly::term(4.0, 0, -1.0));
    }

    #[test]
    fn coupled_requires_positive_lambda() {
        assert!(matches!(
            build_type3(&exp_metric(-1, "-1"), &deg(3, 1), 0.0),
            Err(Error::ZeroLambdaCoupling)
        ));
    }

    #[test]
    fn coupled_radial_value() {
        // a=-2, b=1, n=3, p=1, λ=1: coupling(r) = -2·(r)^0 · r^{-(a+b+1)/(a+1)}
        // exponent = -(−2+1+1)/(−1) = 0, so coupling ≡ -2
        let op = build_type3(&exp_metric(-2, "1"), &deg(3, 1), 1.0).unwrap();
        assert!((op.coupling_at(1.0) + 2.0).abs() < 1e-14);
        assert!((op.coupling_at(5.0) + 2.0).abs() < 1e-14);
    }

    #[test]
    fn general_coupling_matches_cylindrical_closed_form() {
        let b = -1.0;
        let m = WarpedMetric::general(
            Value::int(-1),
            Value::Approx(b),
            1.0,
            ExpPoly::one(),
            ExpPoly::exp(-2.0 * b),
        )
        .unwrap();
        let op = build_type3(&m, &deg(3, 1), 4.0).unwrap();
        for t in [1.0, 2.0, 3.5] {
            assert!((op.coupling_at(t) - 4.0 * (-t).exp()).abs() < 1e-12);
        }
    }

    #[test]
    fn bump_residual_small() {
        let m = exp_metric(-1, "-1");
        let d = deg(3, 0);
        let pre = PreTransformOperator::new(&m, &d, 1.0, OperatorType::Type1).unwrap();
        let red = build_type1(&m, &d, 1.0).unwrap();
        let bump = BumpFunction {
            center: 6.0,
            width: 2.0,
        };
        let res = conjugation_check(&pre, &red, &bump, 1.0, 1e-3).unwrap();
        assert!(res <= 1e-6, "residual {res}");
    }

    #[test]
    fn vanishing_sample_zero_residual() {
        let m = exp_metric(-1, "-1");
        let d = deg(3, 0);
        let pre = PreTransformOperator::new(&m, &d, 1.0, OperatorType::Type1).unwrap();
        // h vanishes identically on the evaluated window
        assert_eq!(pre.apply(&|_| 0.0, 5.0, 1e-3), 0.0);
    }

    #[test]
    fn support_at_boundary_rejected() {
        let m = exp_metric(-1, "-1");
        let d = deg(3, 0);
        let pre = PreTransformOperator::new(&m, &d, 1.0, OperatorType::Type1).unwrap();
        let red = build_type1(&m, &d, 1.0).unwrap();
        let bump = BumpFunction {
            center: 2.0,
            width: 1.5,
        };
        assert!(matches!(
            conjugation_check(&pre, &red, &bump, 1.0, 1e-3),
            Err(Error::SupportTouchesBoundary { .. })
        ));
    }
}
