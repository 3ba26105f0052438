//! Finite-difference cross-checks for the reduced operators.
//!
//! Operators are discretized with the 3-point Laplacian and Dirichlet
//! conditions at both ends (the left end realizes the Friedrichs
//! boundary condition, the right end is an artificial truncation whose
//! eigenvalues decrease monotonically as the interval grows). Low
//! eigenvalues come from Sturm-count bisection on the tridiagonal or
//! interleaved-banded matrix; the bottom of the essential spectrum is
//! estimated either symbolically (liminf of the potential) or by a
//! truncation sweep with Aitken extrapolation.

use crate::reduction::{CoupledOperator, ScalarPotential};
use crate::symbolic::Limit;
use crate::Error;
use serde::{Deserialize, Serialize};

/// Maximum admissible |V| at a node; growth past this is reported as
/// overflow rather than saturated (the growing-potential regime is
/// decided symbolically, not numerically).
pub const POTENTIAL_CAP: f64 = 1e12;

/// Uniform interior grid on (left, right) with Dirichlet ends excluded.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub left: f64,
    pub right: f64,
    pub npoints: usize,
}

impl Grid {
    pub fn new(left: f64, right: f64, npoints: usize) -> Result<Self, Error> {
        if !(left < right) {
            return Err(Error::InvalidInput(format!(
                "empty interval [{left}, {right}]"
            )));
        }
        if npoints < 16 {
            return Err(Error::InvalidInput(format!(
                "need at least 16 grid points, got {npoints}"
            )));
        }
        Ok(Grid {
            left,
            right,
            npoints,
        })
    }

    pub fn step(&self) -> f64 {
        (self.right - self.left) / (self.npoints as f64 + 1.0)
    }

    pub fn node(&self, i: usize) -> f64 {
        self.left + (i as f64 + 1.0) * self.step()
    }
}

/// Symmetric finite-difference matrix with its grid.
#[derive(Debug, Clone, PartialEq)]
pub enum DiscretizedOperator {
    /// Tridiagonal: diag_i = 2/h² + V(x_i), off-diagonal −1/h².
    Scalar {
        diag: Vec<f64>,
        offdiag: f64,
        grid: Grid,
    },
    /// 2×2-block tridiagonal; stored uninterleaved as the two diagonals
    /// plus the nodewise coupling.
    Coupled {
        diag1: Vec<f64>,
        diag2: Vec<f64>,
        coupling: Vec<f64>,
        offdiag: f64,
        grid: Grid,
    },
}

impl DiscretizedOperator {
    pub fn dim(&self) -> usize {
        match self {
            DiscretizedOperator::Scalar { diag, .. } => diag.len(),
            DiscretizedOperator::Coupled { diag1, .. } => 2 * diag1.len(),
        }
    }
}

fn sample_potential(eval: &dyn Fn(f64) -> f64, grid: &Grid) -> Result<Vec<f64>, Error> {
    (0..grid.npoints)
        .map(|i| {
            let x = grid.node(i);
            let v = eval(x);
            if !v.is_finite() || v.abs() > POTENTIAL_CAP {
                Err(Error::Overflow { x, v: v.abs() })
            } else {
                Ok(v)
            }
        })
        .collect()
}

/// 3-point discretization of −w″ + V·w. The potential must carry a
/// trivial principal weight (use the radial form for a < −1).
pub fn discretize(pot: &ScalarPotential, grid: &Grid) -> Result<DiscretizedOperator, Error> {
    if pot.principal_weight.is_some() {
        return Err(Error::InvalidInput(
            "discretization expects a plain −w″ principal part; substitute coordinates first"
                .into(),
        ));
    }
    let h = grid.step();
    let shift = 2.0 / (h * h);
    let diag = sample_potential(&|x| pot.eval(x), grid)?
        .into_iter()
        .map(|v| v + shift)
        .collect();
    Ok(DiscretizedOperator::Scalar {
        diag,
        offdiag: -1.0 / (h * h),
        grid: *grid,
    })
}

/// Discretization of the symmetric coupled pair on a shared grid.
pub fn discretize_coupled(op: &CoupledOperator, grid: &Grid) -> Result<DiscretizedOperator, Error> {
    if op.v1.principal_weight.is_some() || op.v2.principal_weight.is_some() {
        return Err(Error::InvalidInput(
            "discretization expects a plain −w″ principal part; substitute coordinates first"
                .into(),
        ));
    }
    let h = grid.step();
    let shift = 2.0 / (h * h);
    let diag1: Vec<f64> = sample_potential(&|x| op.v1.eval(x), grid)?
        .into_iter()
        .map(|v| v + shift)
        .collect();
    let diag2: Vec<f64> = sample_potential(&|x| op.v2.eval(x), grid)?
        .into_iter()
        .map(|v| v + shift)
        .collect();
    let coupling = sample_potential(&|x| op.coupling.eval(x), grid)?;
    Ok(DiscretizedOperator::Coupled {
        diag1,
        diag2,
        coupling,
        offdiag: -1.0 / (h * h),
        grid: *grid,
    })
}

/// Number of eigenvalues strictly below `sigma`, by counting negative
/// pivots of the LDLᵀ factorization of A − σI (Sylvester inertia).
pub fn count_below(op: &DiscretizedOperator, sigma: f64) -> usize {
    match op {
        DiscretizedOperator::Scalar { diag, offdiag, .. } => {
            // classical Sturm recursion for tridiagonals
            let e2 = offdiag * offdiag;
            let mut count = 0;
            // first pivot has no subdiagonal term: start from an infinite
            // previous pivot so e2 / d vanishes
            let mut d = f64::INFINITY;
            for &a in diag {
                d = a - sigma - e2 / d;
                if d == 0.0 {
                    d = -f64::MIN_POSITIVE;
                }
                if d < 0.0 {
                    count += 1;
                }
            }
            count
        }
        DiscretizedOperator::Coupled {
            diag1,
            diag2,
            coupling,
            offdiag,
            ..
        } => {
            // interleave (w1_i, w2_i): symmetric banded, bandwidth 2.
            // row 2i:   [diag1_i − σ, W_i, e]
            // row 2i+1: [diag2_i − σ, 0,  e]
            let n = diag1.len();
            let dim = 2 * n;
            let mut band = vec![[0.0f64; 3]; dim];
            for i in 0..n {
                band[2 * i] = [diag1[i] - sigma, coupling[i], *offdiag];
                band[2 * i + 1] = [
                    diag2[i] - sigma,
                    0.0,
                    if i + 1 < n { *offdiag } else { 0.0 },
                ];
            }
            banded_negative_pivots(&mut band)
        }
    }
}

/// Negative-pivot count of an in-place banded LDLᵀ elimination
/// (bandwidth 2, row-major upper storage band[i][k] = A[i][i+k]).
fn banded_negative_pivots(band: &mut [[f64; 3]]) -> usize {
    let dim = band.len();
    let mut count = 0;
    for i in 0..dim {
        let mut d = band[i][0];
        if d == 0.0 {
            d = -f64::MIN_POSITIVE;
        }
        if d < 0.0 {
            count += 1;
        }
        for r in 1..3usize {
            if i + r >= dim {
                break;
            }
            let l = band[i][r] / d;
            if l == 0.0 {
                continue;
            }
            for c in r..3usize {
                if i + c >= dim {
                    break;
                }
                band[i + r][c - r] -= l * band[i][c];
            }
        }
    }
    count
}

/// The `count` smallest eigenvalues, each located by bisection on the
/// inertia count to 1e-10 relative width.
pub fn lowest_eigenvalues(op: &DiscretizedOperator, count: usize) -> Result<Vec<f64>, Error> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if count > op.dim() {
        return Err(Error::InvalidInput(format!(
            "asked for {count} eigenvalues of a dimension-{} matrix",
            op.dim()
        )));
    }
    // Gershgorin enclosure of the whole spectrum
    let (mut glo, mut ghi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut enclose = |d: f64, radius: f64| {
        glo = glo.min(d - radius);
        ghi = ghi.max(d + radius);
    };
    match op {
        DiscretizedOperator::Scalar { diag, offdiag, .. } => {
            for &d in diag {
                enclose(d, 2.0 * offdiag.abs());
            }
        }
        DiscretizedOperator::Coupled {
            diag1,
            diag2,
            coupling,
            offdiag,
            ..
        } => {
            for i in 0..diag1.len() {
                let r = 2.0 * offdiag.abs() + coupling[i].abs();
                enclose(diag1[i], r);
                enclose(diag2[i], r);
            }
        }
    }
    let mut out: Vec<f64> = Vec::with_capacity(count);
    for k in 1..=count {
        let (mut lo, mut hi) = (glo, ghi);
        // shrink using already-located eigenvalues
        if let Some(&prev) = out.last() {
            lo = prev - 1e-9 * (1.0 + prev.abs());
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if count_below(op, mid) >= k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-10 * (1.0 + mid.abs()) {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

/// How an essential-spectrum bottom estimate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BottomMethod {
    /// Exact liminf of the symbolic potential.
    PotentialLiminf,
    /// Truncation sweep with Aitken extrapolation.
    TruncationConvergence,
}

/// Bottom-of-essential-spectrum estimate; `value = None` means the
/// essential spectrum is empty (potential grows without bound).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EssBottomEstimate {
    pub value: Option<f64>,
    pub method: BottomMethod,
    /// (right endpoint L, tracked eigenvalue) per sweep level.
    pub diagnostics: Vec<(f64, f64)>,
}

/// Truncation-sweep parameters: right endpoints L_j = left + span·2^j
/// for j = 0..=levels, all sharing one grid step so the grids nest and
/// the tracked eigenvalue decreases monotonically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepPolicy {
    pub left: f64,
    pub initial_span: f64,
    pub levels: u32,
    /// which eigenvalue is tracked (1-based)
    pub k: usize,
    pub target_step: f64,
    /// relative agreement demanded of the last extrapolants
    pub rel_tol: f64,
}

impl Default for SweepPolicy {
    fn default() -> Self {
        SweepPolicy {
            left: 1.0,
            initial_span: 1.0,
            levels: 9,
            k: 1,
            target_step: 0.01,
            // loose enough for potentials with ~1/L truncation error
            // (inverse-square tails), still far below the 5e-3
            // verification tolerance
            rel_tol: 1e-3,
        }
    }
}

/// Shortest decay length of the potential (1/|rate| over exponential
/// terms), used to resolve its variation on the grid.
fn decay_length(pot: &ScalarPotential) -> f64 {
    match &pot.potential {
        crate::symbolic::SymExpr::T(e) => e
            .terms()
            .iter()
            .filter(|t| t.rate != 0.0)
            .map(|t| 1.0 / t.rate.abs())
            .fold(f64::INFINITY, f64::min),
        crate::symbolic::SymExpr::R(_) => f64::INFINITY,
    }
}

fn aitken(seq: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for w in seq.windows(3) {
        let (x0, x1, x2) = (w[0], w[1], w[2]);
        let denom = x2 - 2.0 * x1 + x0;
        if denom.abs() < 1e-14 * (1.0 + x2.abs()) {
            out.push(x2);
        } else {
            out.push(x2 - (x2 - x1) * (x2 - x1) / denom);
        }
    }
    out
}

/// Estimate inf σ_ess of −w″ + V.
pub fn ess_bottom(
    pot: &ScalarPotential,
    method: BottomMethod,
    policy: &SweepPolicy,
) -> Result<EssBottomEstimate, Error> {
    match method {
        BottomMethod::PotentialLiminf => {
            let value = match pot.potential.limit_at_infinity() {
                Limit::PlusInfinity => None,
                Limit::Finite(v) => Some(v),
                Limit::MinusInfinity => {
                    return Err(Error::InvalidInput(
                        "potential unbounded below: bottom of the essential spectrum is -inf"
                            .into(),
                    ))
                }
            };
            Ok(EssBottomEstimate {
                value,
                method,
                diagnostics: Vec::new(),
            })
        }
        BottomMethod::TruncationConvergence => {
            let h_target = policy.target_step.min(decay_length(pot) / 20.0);
            truncation_sweep(policy, h_target, &|grid| discretize(pot, grid))
        }
    }
}

/// Bottom-of-essential-spectrum estimate for the coupled pair by
/// truncation sweep (the only available method: the coupled system has
/// no single scalar potential to take a liminf of).
pub fn ess_bottom_coupled(
    op: &CoupledOperator,
    policy: &SweepPolicy,
) -> Result<EssBottomEstimate, Error> {
    let h_target = policy
        .target_step
        .min(decay_length(&op.v1) / 20.0)
        .min(decay_length(&op.v2) / 20.0);
    truncation_sweep(policy, h_target, &|grid| discretize_coupled(op, grid))
}

/// Shared nested-grid sweep: track the k-th eigenvalue as the right
/// endpoint doubles, Aitken-extrapolate, demand the last extrapolants
/// agree.
fn truncation_sweep(
    policy: &SweepPolicy,
    h_target: f64,
    build: &dyn Fn(&Grid) -> Result<DiscretizedOperator, Error>,
) -> Result<EssBottomEstimate, Error> {
    // one step for the whole sweep, dividing the initial span exactly so
    // the grids nest
    let per_span = (policy.initial_span / h_target).ceil().max(16.0) as usize;
    let step = policy.initial_span / per_span as f64;
    let mut seq = Vec::new();
    let mut diagnostics = Vec::new();
    for j in 0..=policy.levels {
        let span = policy.initial_span * (1u64 << j) as f64;
        let npoints = per_span * (1usize << j) - 1;
        let grid = Grid::new(policy.left, policy.left + span, npoints)?;
        debug_assert!((grid.step() - step).abs() < 1e-12 * step);
        let op = build(&grid)?;
        let ev = lowest_eigenvalues(&op, policy.k)?[policy.k - 1];
        diagnostics.push((grid.right, ev));
        seq.push(ev);
    }
    let extr = aitken(&seq);
    if extr.len() < 3 {
        return Err(Error::Inconclusive(
            "sweep too short for extrapolation (need at least 5 levels)".into(),
        ));
    }
    let tail = &extr[extr.len() - 3..];
    let lo = tail.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = tail.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let value = tail[2];
    if hi - lo > policy.rel_tol * (1.0 + value.abs()) {
        return Err(Error::Inconclusive(format!(
            "extrapolants still spread {:.3e} at L = {:.1}",
            hi - lo,
            diagnostics.last().unwrap().0
        )));
    }
    Ok(EssBottomEstimate {
        value: Some(value),
        method: BottomMethod::TruncationConvergence,
        diagnostics,
    })
}

/// Purely-discrete-spectrum criterion: the moving integral
/// ∫_t^{t+h} V(s) ds must diverge for every window width h in (0,1).
/// For the closed symbolic families this holds exactly when the
/// potential tends to +∞, which is decided symbolically; `h_samples`
/// are validated but do not influence the exact answer.
pub fn discreteness_test(pot: &ScalarPotential, h_samples: &[f64]) -> Result<bool, Error> {
    for &h in h_samples {
        if !(0.0 < h && h < 1.0) {
            return Err(Error::InvalidInput(format!(
                "window width {h} outside (0,1)"
            )));
        }
    }
    Ok(pot.potential.limit_at_infinity().is_plus_infinity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{DegreePair, WarpedMetric};
    use crate::reduction::{build_type1, build_type3};
    use crate::scalar::Value;
    use crate::symbolic::{ExpPoly, SymExpr};
    use nalgebra::DMatrix;

    fn scalar_pot(e: ExpPoly) -> ScalarPotential {
        ScalarPotential {
            potential: SymExpr::T(e),
            principal_weight: None,
        }
    }

    fn to_dense(op: &DiscretizedOperator) -> DMatrix<f64> {
        match op {
            DiscretizedOperator::Scalar { diag, offdiag, .. } => {
                let n = diag.len();
                let mut m = DMatrix::zeros(n, n);
                for i in 0..n {
                    m[(i, i)] = diag[i];
                    if i + 1 < n {
                        m[(i, i + 1)] = *offdiag;
                        m[(i + 1, i)] = *offdiag;
                    }
                }
                m
            }
            DiscretizedOperator::Coupled {
                diag1,
                diag2,
                coupling,
                offdiag,
                ..
            } => {
                let n = diag1.len();
                let mut m = DMatrix::zeros(2 * n, 2 * n);
                for i in 0..n {
                    m[(2 * i, 2 * i)] = diag1[i];
                    m[(2 * i + 1, 2 * i + 1)] = diag2[i];
                    m[(2 * i, 2 * i + 1)] = coupling[i];
                    m[(2 * i + 1, 2 * i)] = coupling[i];
                    if i + 1 < n {
                        m[(2 * i, 2 * i + 2)] = *offdiag;
                        m[(2 * i + 2, 2 * i)] = *offdiag;
                        m[(2 * i + 1, 2 * i + 3)] = *offdiag;
                        m[(2 * i + 3, 2 * i + 1)] = *offdiag;
                    }
                }
                m
            }
        }
    }

    fn dense_eigenvalues(op: &DiscretizedOperator) -> Vec<f64> {
        let mut ev: Vec<f64> = to_dense(op)
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }

    #[test]
    fn discretize_constant_zero() {
        let grid = Grid {
            left: 0.0,
            right: 4.0,
            npoints: 3,
        };
        let op = discretize(&scalar_pot(ExpPoly::zero()), &grid).unwrap();
        let DiscretizedOperator::Scalar { diag, offdiag, .. } = &op else {
            panic!()
        };
        assert_eq!(diag, &vec![2.0, 2.0, 2.0]);
        assert_eq!(*offdiag, -1.0);
    }

    #[test]
    fn constant_shift_identity() {
        let grid = Grid::new(0.0, 4.0, 31).unwrap();
        let op0 = discretize(&scalar_pot(ExpPoly::zero()), &grid).unwrap();
        let op1 = discretize(&scalar_pot(ExpPoly::constant(1.0)), &grid).unwrap();
        let e0 = lowest_eigenvalues(&op0, 3).unwrap();
        let e1 = lowest_eigenvalues(&op1, 3).unwrap();
        for (a, b) in e0.iter().zip(&e1) {
            assert!((a + 1.0 - b).abs() < 1e-9);
        }
    }

    #[test]
    fn exponential_sampling() {
        let grid = Grid {
            left: 0.0,
            right: 4.0,
            npoints: 3,
        };
        let op = discretize(&scalar_pot(ExpPoly::exp(-2.0)), &grid).unwrap();
        let DiscretizedOperator::Scalar { diag, .. } = &op else {
            panic!()
        };
        for (i, d) in diag.iter().enumerate() {
            let t = (i + 1) as f64;
            assert!((d - (2.0 + (-2.0 * t).exp())).abs() < 1e-15);
        }
    }

    #[test]
    fn overflow_reported() {
        let grid = Grid::new(0.0, 40.0, 399).unwrap();
        let pot = scalar_pot(ExpPoly::exp(2.0)); // e^{2t} up to e^80
        assert!(matches!(
            discretize(&pot, &grid),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn analytic_dirichlet_spectrum() {
        // V ≡ 1 on (0, π): eigenvalues 1 + k²
        let grid = Grid::new(0.0, std::f64::consts::PI, 313).unwrap();
        let op = discretize(&scalar_pot(ExpPoly::constant(1.0)), &grid).unwrap();
        let ev = lowest_eigenvalues(&op, 3).unwrap();
        for (k, e) in ev.iter().enumerate() {
            let exact = 1.0 + ((k + 1) as f64).powi(2);
            assert!(
                (e - exact).abs() / exact < 1e-4,
                "k={} discrete {} vs {}",
                k + 1,
                e,
                exact
            );
        }
    }

    #[test]
    fn eigenvalue_convergence_is_second_order() {
        // measured order on the analytic case, three grids
        let exact = 2.0; // V ≡ 1, (0, π), k = 1
        let errs: Vec<f64> = [200usize, 400, 800]
            .iter()
            .map(|&n| {
                let grid = Grid::new(0.0, std::f64::consts::PI, n - 1).unwrap();
                let op = discretize(&scalar_pot(ExpPoly::constant(1.0)), &grid).unwrap();
                (lowest_eigenvalues(&op, 1).unwrap()[0] - exact).abs()
            })
            .collect();
        let order1 = (errs[0] / errs[1]).log2();
        let order2 = (errs[1] / errs[2]).log2();
        assert!((order1 - 2.0).abs() < 0.2, "order {order1}");
        assert!((order2 - 2.0).abs() < 0.2, "order {order2}");
    }

    #[test]
    fn sturm_count_matches_dense() {
        let grid = Grid::new(1.0, 9.0, 23).unwrap();
        let pot = scalar_pot(ExpPoly::constant(0.5).add(&ExpPoly::term(3.0, 0, -1.0)));
        let op = discretize(&pot, &grid).unwrap();
        let dense = dense_eigenvalues(&op);
        for sigma in [0.1, 1.0, 2.5, 7.0, 40.0] {
            let want = dense.iter().filter(|&&e| e < sigma).count();
            assert_eq!(count_below(&op, sigma), want, "sigma={sigma}");
        }
    }

    #[test]
    fn scalar_eigenvalues_match_dense() {
        let grid = Grid::new(1.0, 9.0, 31).unwrap();
        let pot = scalar_pot(ExpPoly::constant(1.0).add(&ExpPoly::term(2.0, 0, -2.0)));
        let op = discretize(&pot, &grid).unwrap();
        let fast = lowest_eigenvalues(&op, 4).unwrap();
        let dense = dense_eigenvalues(&op);
        for (a, b) in fast.iter().zip(&dense) {
            assert!((a - b).abs() < 1e-9 * (1.0 + b.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn coupled_eigenvalues_match_dense() {
        let metric = WarpedMetric::exponential(Value::int(-1), Value::int(-1), 1.0).unwrap();
        let deg = DegreePair::new(3, 1).unwrap();
        let op3 = build_type3(&metric, &deg, 1.0).unwrap();
        let grid = Grid::new(1.0, 7.0, 31).unwrap(); // 64×64 total
        let op = discretize_coupled(&op3, &grid).unwrap();
        let fast = lowest_eigenvalues(&op, 6).unwrap();
        let dense = dense_eigenvalues(&op);
        for (a, b) in fast.iter().zip(&dense) {
            assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn decoupled_block_is_union_of_scalars() {
        // coupling ≡ 0: block spectrum = union of the scalar spectra
        let grid = Grid::new(1.0, 7.0, 23).unwrap();
        let v1 = scalar_pot(ExpPoly::constant(0.0).add(&ExpPoly::term(4.0, 0, -2.0)));
        let v2 = scalar_pot(ExpPoly::constant(1.0).add(&ExpPoly::term(4.0, 0, -2.0)));
        let block = CoupledOperator {
            v1: v1.clone(),
            v2: v2.clone(),
            coupling: SymExpr::T(ExpPoly::zero()),
        };
        let op = discretize_coupled(&block, &grid).unwrap();
        let mut union: Vec<f64> = lowest_eigenvalues(&discretize(&v1, &grid).unwrap(), 4)
            .unwrap()
            .into_iter()
            .chain(lowest_eigenvalues(&discretize(&v2, &grid).unwrap(), 4).unwrap())
            .collect();
        union.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let block_ev = lowest_eigenvalues(&op, 4).unwrap();
        for (a, b) in block_ev.iter().zip(&union) {
            assert!((a - b).abs() < 1e-9 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn equal_diagonal_split() {
        // v1 = v2 = V, coupling W: spectrum = spec(V+W) ∪ spec(V−W)
        let grid = Grid::new(1.0, 7.0, 23).unwrap();
        let v = ExpPoly::constant(1.0).add(&ExpPoly::term(2.0, 0, -2.0));
        let w = ExpPoly::term(3.0, 0, -1.0);
        let block = CoupledOperator {
            v1: scalar_pot(v.clone()),
            v2: scalar_pot(v.clone()),
            coupling: SymExpr::T(w.clone()),
        };
        let op = discretize_coupled(&block, &grid).unwrap();
        let mut union: Vec<f64> =
            lowest_eigenvalues(&discretize(&scalar_pot(v.add(&w)), &grid).unwrap(), 4)
                .unwrap()
                .into_iter()
                .chain(
                    lowest_eigenvalues(&discretize(&scalar_pot(v.sub(&w)), &grid).unwrap(), 4)
                        .unwrap(),
                )
                .collect();
        union.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let block_ev = lowest_eigenvalues(&op, 4).unwrap();
        for (a, b) in block_ev.iter().zip(&union) {
            assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn liminf_bottom() {
        // V = 1 + λe^{-2t}: bottom 1
        let pot = scalar_pot(ExpPoly::constant(1.0).add(&ExpPoly::term(5.0, 0, -2.0)));
        let est = ess_bottom(&pot, BottomMethod::PotentialLiminf, &SweepPolicy::default()).unwrap();
        assert_eq!(est.value, Some(1.0));
        // V = λe^{2t}: empty essential spectrum
        let pot = scalar_pot(ExpPoly::term(5.0, 0, 2.0));
        let est = ess_bottom(&pot, BottomMethod::PotentialLiminf, &SweepPolicy::default()).unwrap();
        assert_eq!(est.value, None);
    }

    #[test]
    fn truncation_sweep_reaches_liminf() {
        // reduced operator n=3, p=0, a=-1, b=-1, λ=2: bottom exactly 1
        let metric = WarpedMetric::exponential(Value::int(-1), Value::int(-1), 1.0).unwrap();
        let pot = build_type1(&metric, &DegreePair::new(3, 0).unwrap(), 2.0).unwrap();
        let policy = SweepPolicy {
            target_step: 0.02,
            ..SweepPolicy::default()
        };
        let est = ess_bottom(&pot, BottomMethod::TruncationConvergence, &policy).unwrap();
        let v = est.value.unwrap();
        assert!((v - 1.0).abs() < 5e-3, "bottom {v}");
        // Dirichlet monotonicity across the sweep
        for pair in est.diagnostics.windows(2) {
            assert!(pair[1].1 <= pair[0].1 + 1e-12);
        }
    }

    #[test]
    fn radial_truncation_bottom_zero() {
        // a=-2, b=-1, n=3, p=0: V = K1/r² + λ r^{-2}·…, decays to 0
        let metric = WarpedMetric::exponential(Value::int(-2), Value::int(-1), 1.0).unwrap();
        let pot = build_type1(&metric, &DegreePair::new(3, 0).unwrap(), 2.0).unwrap();
        let policy = SweepPolicy {
            target_step: 0.02,
            initial_span: 2.0,
            rel_tol: 2e-3,
            ..SweepPolicy::default()
        };
        let est = ess_bottom(&pot, BottomMethod::TruncationConvergence, &policy).unwrap();
        assert!(est.value.unwrap().abs() < 5e-3, "bottom {:?}", est.value);
    }

    #[test]
    fn discreteness_by_growth() {
        let grow = scalar_pot(ExpPoly::constant(1.0).add(&ExpPoly::term(3.0, 0, 2.0)));
        assert!(discreteness_test(&grow, &[0.25, 0.5, 0.9]).unwrap());
        let flat = scalar_pot(ExpPoly::constant(1.0));
        assert!(!discreteness_test(&flat, &[0.5]).unwrap());
        let decay = scalar_pot(ExpPoly::constant(1.0).add(&ExpPoly::term(3.0, 0, -2.0)));
        assert!(!discreteness_test(&decay, &[0.5]).unwrap());
        assert!(discreteness_test(&flat, &[1.5]).is_err());
    }
}
