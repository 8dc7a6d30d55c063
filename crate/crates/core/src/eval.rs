//! Ground-truth evaluators for f(t,a) = t ∫₀¹ (ax)^(-tx) dx, its tail
//! companion f̃(t,a) = t ∫₁^∞ (ax)^(-tx) dx, and the variable-limit
//! integral F(t,λ) = t ∫₀^λ x^(-tx) dx.
//!
//! Three independent routes are provided: the power series Σ tⁿ/nⁿ (a = 1),
//! the incomplete-gamma series in (t/a), and adaptive quadrature. The
//! quadrature handles complex t, both signs of a, and the boundary layers
//! that form at x = 0 and x = 1 for large |t|.

use crate::quad::{adaptive_complex, clean_breakpoints};
use crate::special::{ln_abs_upper_gamma_int, ln_factorial};
use num_complex::Complex64;
use std::f64::consts::{E, PI};
use thiserror::Error;

/// Hard cap on series length.
const SERIES_CAP: u32 = 500;
/// Relative term size at which a series is considered converged.
const SERIES_TERM_CUTOFF: f64 = 1e-16;
/// Cancellation ratio (max |term| / |sum|) that marks a series result as
/// numerically suspect.
const CONDITION_RATIO: f64 = 1e12;
/// Boundary between the log-substituted panel at x → 0 and the direct
/// panels on [X0, 1].
const X0: f64 = 0.1;

/// Argument pair for f: complex t and real nonzero scale a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub t: Complex64,
    pub a: f64,
}

impl EvalPoint {
    pub fn new(t: Complex64, a: f64) -> Self {
        assert!(a != 0.0, "scale parameter a must be nonzero");
        Self { t, a }
    }

    pub fn real(t: f64, a: f64) -> Self {
        Self::new(Complex64::new(t, 0.0), a)
    }
}

/// Tolerances and subdivision limit for the quadrature evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-14, max_subdivisions: 60 }
    }
}

impl QuadratureConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: u32) -> Result<Self, EvalError> {
        if !(rel_tol > 0.0) || !(abs_tol > 0.0) {
            return Err(EvalError::InvalidConfig("tolerances must be positive"));
        }
        if max_subdivisions < 1 {
            return Err(EvalError::InvalidConfig("max_subdivisions must be at least 1"));
        }
        Ok(Self { rel_tol, abs_tol, max_subdivisions })
    }
}

/// Which route produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    GammaSeries,
    ShiftedSeries,
    Quadrature,
    TailQuadrature,
    RangeReduction,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::GammaSeries => "series_general",
            Method::ShiftedSeries => "series_shifted",
            Method::Quadrature => "quadrature",
            Method::TailQuadrature => "f_tilde",
            Method::RangeReduction => "limits",
        }
    }
}

/// A computed value with its provenance and an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodResult {
    pub value: Complex64,
    pub method: Method,
    pub err_estimate: f64,
    /// Set when series cancellation exceeded [`CONDITION_RATIO`]; prefer
    /// the quadrature route in that case.
    pub condition_flag: bool,
}

#[derive(Debug, Clone, Error)]
pub enum EvalError {
    #[error("series did not converge within {terms} terms")]
    SeriesNonConvergence { terms: u32 },
    #[error("quadrature tolerance not met (error estimate {:.3e})", result.err_estimate)]
    ToleranceNotMet { result: MethodResult },
    #[error("the gamma-series route requires a > 0")]
    NonPositiveScale,
    #[error("shift parameter must satisfy d > -1")]
    ShiftOutOfRange,
    #[error("tail integral diverges unless Re(t) > 0 and a > 0")]
    DivergentTail,
    #[error("lambda must be positive")]
    NonPositiveLambda,
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(&'static str),
}

// ---------------------------------------------------------------------------
// Series evaluators
// ---------------------------------------------------------------------------

struct SeriesAccumulator {
    sum: Complex64,
    max_term: f64,
    max_sum: f64,
    last_term: f64,
    /// accumulated rounding bound: Σ |term|·(per-term relative noise)
    noise: f64,
    terms: u32,
}

impl SeriesAccumulator {
    fn new() -> Self {
        Self {
            sum: Complex64::new(0.0, 0.0),
            max_term: 0.0,
            max_sum: 0.0,
            last_term: 0.0,
            noise: 0.0,
            terms: 0,
        }
    }

    /// `ln_scale` bounds the magnitudes of the log-space components a term
    /// was assembled from; rounding in those components turns into a
    /// relative error of about ln_scale·ε on the term itself.
    fn push(&mut self, term: Complex64, ln_scale: f64) {
        self.sum += term;
        self.last_term = term.norm();
        self.max_term = self.max_term.max(self.last_term);
        self.max_sum = self.max_sum.max(self.sum.norm());
        self.noise += (4.0 + ln_scale) * f64::EPSILON * self.last_term;
        self.terms += 1;
    }

    fn converged(&self, t_norm: f64) -> bool {
        self.last_term < SERIES_TERM_CUTOFF * self.max_sum && self.terms as f64 > E * t_norm
    }

    fn result(&self, method: Method) -> MethodResult {
        MethodResult {
            value: self.sum,
            method,
            err_estimate: self.last_term + self.noise,
            condition_flag: self.max_term > CONDITION_RATIO * self.sum.norm().max(f64::MIN_POSITIVE),
        }
    }
}

/// Power series f(t) = Σ_{n≥1} tⁿ/nⁿ (the a = 1 case).
///
/// Summation stops once the term magnitude drops below 1e-16 of the largest
/// partial sum *and* n exceeds e·|t| (the terms peak near n = |t|/e).
pub fn f_series(t: Complex64) -> Result<MethodResult, EvalError> {
    if t.re == 0.0 && t.im == 0.0 {
        return Ok(MethodResult {
            value: t,
            method: Method::Series,
            err_estimate: 0.0,
            condition_flag: false,
        });
    }
    let t_norm = t.norm();
    let mut acc = SeriesAccumulator::new();
    for n in 1..=SERIES_CAP {
        let term = (t / n as f64).powu(n);
        acc.push(term, (n as f64).log2());
        if acc.converged(t_norm) {
            return Ok(acc.result(Method::Series));
        }
    }
    Err(EvalError::SeriesNonConvergence { terms: SERIES_CAP })
}

/// Incomplete-gamma series
/// f(t,a) = (t/a) Σ_{n≥0} (t/a)ⁿ/(n!(n+1)^{n+1}) · Γ(n+1, -(n+1)·ln a),
/// valid for a > 0. Terms are assembled in log-magnitude space since the
/// gamma factors overflow f64 long before the series converges.
pub fn f_series_general(p: EvalPoint) -> Result<MethodResult, EvalError> {
    if p.a <= 0.0 {
        return Err(EvalError::NonPositiveScale);
    }
    if p.t.re == 0.0 && p.t.im == 0.0 {
        return Ok(MethodResult {
            value: p.t,
            method: Method::GammaSeries,
            err_estimate: 0.0,
            condition_flag: false,
        });
    }
    let ta = p.t / p.a;
    let ln_r = ta.norm().ln();
    let theta = ta.arg();
    let ln_a = p.a.ln();
    let t_norm = p.t.norm();
    let real_arg = ta.im == 0.0;

    let mut acc = SeriesAccumulator::new();
    for n in 0..=SERIES_CAP {
        let cutoff = -(n as f64 + 1.0) * ln_a;
        let (ln_g, g_sign) = ln_abs_upper_gamma_int(n, cutoff);
        let power_part = n as f64 * ln_r;
        let weight_part = ln_factorial(n) + (n as f64 + 1.0) * (n as f64 + 1.0).ln();
        let ln_mag = power_part - weight_part + ln_g;
        if ln_mag > 705.0 {
            return Err(EvalError::SeriesNonConvergence { terms: n });
        }
        let ln_scale = power_part.abs() + weight_part + ln_g.abs();
        let mag = g_sign * ln_mag.exp();
        let term = if real_arg {
            // keep real arguments exactly real
            let s = if ta.re < 0.0 && n % 2 == 1 { -mag } else { mag };
            Complex64::new(s, 0.0)
        } else {
            let ph = n as f64 * theta;
            Complex64::new(mag * ph.cos(), mag * ph.sin())
        };
        acc.push(term, ln_scale);
        if acc.converged(t_norm) {
            let mut out = acc.result(Method::GammaSeries);
            out.value *= ta;
            out.err_estimate *= ta.norm();
            return Ok(out);
        }
    }
    Err(EvalError::SeriesNonConvergence { terms: SERIES_CAP })
}

/// Shifted series Σ_{n≥1} t^{n-1}/(n+d)ⁿ = ∫₀¹ x^{d-tx} dx, d > -1.
pub fn f_series_shifted(t: Complex64, d: f64) -> Result<MethodResult, EvalError> {
    if !(d > -1.0) {
        return Err(EvalError::ShiftOutOfRange);
    }
    let t_norm = t.norm();
    let real_arg = t.im == 0.0;
    let (ln_r, theta) = if t_norm == 0.0 { (f64::NEG_INFINITY, 0.0) } else { (t_norm.ln(), t.arg()) };

    let mut acc = SeriesAccumulator::new();
    for n in 1..=SERIES_CAP {
        let ln_mag =
            (n as f64 - 1.0) * ln_r - n as f64 * (n as f64 + d).ln();
        let ln_scale = ((n as f64 - 1.0) * ln_r).abs() + (n as f64 * (n as f64 + d).ln()).abs();
        let mag = if n == 1 && t_norm == 0.0 { (1.0 + d).recip() } else { ln_mag.exp() };
        let term = if real_arg {
            let s = if t.re < 0.0 && n % 2 == 0 { -mag } else { mag };
            Complex64::new(s, 0.0)
        } else {
            let ph = (n as f64 - 1.0) * theta;
            Complex64::new(mag * ph.cos(), mag * ph.sin())
        };
        acc.push(term, ln_scale);
        if t_norm == 0.0 || acc.converged(t_norm) {
            return Ok(acc.result(Method::ShiftedSeries));
        }
    }
    Err(EvalError::SeriesNonConvergence { terms: SERIES_CAP })
}

// ---------------------------------------------------------------------------
// Quadrature evaluators
// ---------------------------------------------------------------------------

/// Complex logarithm factor for the scale: ln(a) for a > 0, and the branch
/// ln|a| - iπ for a < 0 (chosen so that f(t,a<0) decomposes with a
/// +i·sin(πtx) component for real t).
fn log_scale(a: f64) -> Complex64 {
    if a > 0.0 {
        Complex64::new(a.ln(), 0.0)
    } else {
        Complex64::new(a.abs().ln(), -PI)
    }
}

fn oscillation_rate_x(t: Complex64, lambda: Complex64, x: f64) -> f64 {
    (t * (lambda + Complex64::new(x.ln() + 1.0, 0.0))).im.abs()
}

/// Breakpoints for the direct panels on [x_lo, x_hi] of ∫ exp(-t x (λ+ln x)) dx.
fn breakpoints_x(t: Complex64, lambda: Complex64, x_lo: f64, x_hi: f64) -> Vec<f64> {
    let mut pts = vec![x_lo, 0.25 * x_hi, 0.5 * x_hi, 0.75 * x_hi, x_hi];

    // interior maximum of the real exponent (only when it is a maximum)
    if t.re != 0.0 {
        let ln_xs = -1.0 - lambda.re + t.im * lambda.im / t.re;
        if ln_xs.abs() < 600.0 {
            let xs = ln_xs.exp();
            if t.re / xs > 0.0 && xs > x_lo && xs < x_hi {
                let w = (xs / t.re.abs()).sqrt();
                for k in [-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0] {
                    pts.push(xs + k * w);
                }
            }
        }
    }

    // boundary layer at x_hi: exponent changes at rate r per unit x
    let r = (t * (lambda + Complex64::new(x_hi.ln() + 1.0, 0.0))).re.abs();
    if r > 4.0 {
        let mut d = 1.0 / r;
        while d < x_hi - x_lo {
            pts.push(x_hi - d);
            d *= 2.0;
        }
    }

    // oscillation: keep initial panels near one phase period wide
    let span = x_hi - x_lo;
    let min_step = span / 256.0;
    let mut x = x_lo;
    let mut guard = 0;
    while x < x_hi && guard < 300 {
        let rate = oscillation_rate_x(t, lambda, x.max(x_lo));
        let step = (6.0 / (rate + 1e-300)).clamp(min_step, span);
        x += step;
        if x < x_hi {
            pts.push(x);
        }
        guard += 1;
    }

    clean_breakpoints(pts, x_lo, x_hi)
}

/// Breakpoints in y for the substituted panel ∫ exp(t e^{-y}(y-λ) - y) dy on
/// [y0, ymax]: geometric spacing, the transition ridge for Re t < 0, the
/// interior saddle for small scales, and oscillation control near y0.
fn breakpoints_y(t: Complex64, lambda: Complex64, y0: f64, ymax: f64) -> Vec<f64> {
    let mut pts = vec![y0, ymax];
    let mut d = 0.5;
    while y0 + d < ymax {
        pts.push(y0 + d);
        d *= 2.0;
    }

    let t_norm = t.norm();
    if t.re < 0.0 {
        // transition where |t| e^{-y} (y + …) ~ 1
        let mut ytr = (1.0 + t_norm).ln().max(y0);
        for _ in 0..4 {
            ytr = ((1.0 + t_norm) * (ytr + lambda.norm() + 1.0)).ln();
        }
        for k in [-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0] {
            pts.push(ytr + k);
        }
    }
    if t.re > 0.0 {
        // interior saddle of the exponent at y ≈ 1 + Re λ (x = 1/(e a))
        let ys = 1.0 + lambda.re - t.im * lambda.im / t.re;
        if ys > y0 && ys < ymax {
            let w = (1.0 / (t.re.abs() * (-ys).exp() + 1e-300)).sqrt().min(ymax - y0);
            for k in [-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0] {
                pts.push(ys + k * w);
            }
        }
    }

    // oscillation near y0 where e^{-y} is largest
    let min_step = (ymax - y0) / 256.0;
    let mut y = y0;
    let mut guard = 0;
    while y < ymax && guard < 300 {
        let rate = t_norm * (-y).exp() * (1.0 + lambda.norm() + y);
        let step = (6.0 / (rate + 1e-300)).clamp(min_step, ymax - y0);
        y += step;
        if y < ymax {
            pts.push(y);
        }
        guard += 1;
    }

    clean_breakpoints(pts, y0, ymax)
}

/// Upper truncation point for the substituted tail so that the neglected
/// mass is below the absolute tolerance.
fn y_cutoff(t_norm: f64, lambda_norm: f64, abs_tol: f64, y0: f64) -> f64 {
    let target = (0.25 * abs_tol / (1.0 + t_norm)).min(1e-16).max(1e-300);
    let mut y = (-target.ln() + 1.0).max(y0 + 4.0);
    for _ in 0..100 {
        if t_norm * (-y).exp() * (y + lambda_norm + 1.0) <= 0.5 {
            break;
        }
        y += 1.0;
    }
    y.min(750.0)
}

/// Complex exponential that underflows to zero instead of producing
/// spurious NaNs for very negative real parts.
fn exp_guarded(z: Complex64) -> Complex64 {
    if z.re < -745.0 {
        Complex64::new(0.0, 0.0)
    } else {
        Complex64::new(z.re.exp(), 0.0) * Complex64::new(z.im.cos(), z.im.sin())
    }
}

struct QuadParts {
    value: Complex64,
    err: f64,
    converged: bool,
}

/// ∫₀¹ w(x)·exp(-t·x·(λ + ln x)) dx where `weight` supplies w(x); the
/// (0, X0] panel is integrated in y = -ln x to remove the derivative
/// singularity of x·ln x at the origin.
fn integral_unit_interval<W>(t: Complex64, lambda: Complex64, cfg: &QuadratureConfig, weight: W) -> QuadParts
where
    W: Fn(f64) -> Complex64 + Copy,
{
    let fx = move |x: f64| {
        if x <= 0.0 {
            return weight(0.0);
        }
        let l = lambda + Complex64::new(x.ln(), 0.0);
        weight(x) * exp_guarded(-t * l * x)
    };
    let bx = breakpoints_x(t, lambda, X0, 1.0);
    let part_x = adaptive_complex(&fx, &bx, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);

    let y0 = (1.0 / X0).ln();
    let ymax = y_cutoff(t.norm(), lambda.norm(), cfg.abs_tol, y0);
    let fy = move |y: f64| {
        let x = (-y).exp();
        let arg = t * x * (Complex64::new(y, 0.0) - lambda) - Complex64::new(y, 0.0);
        weight(x) * exp_guarded(arg)
    };
    let by = breakpoints_y(t, lambda, y0, ymax);
    let part_y = adaptive_complex(&fy, &by, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);

    QuadParts {
        value: part_x.value + part_y.value,
        err: part_x.err + part_y.err,
        converged: part_x.converged && part_y.converged,
    }
}

fn finish_quadrature(
    t: Complex64,
    parts: QuadParts,
    method: Method,
) -> Result<MethodResult, EvalError> {
    let value = t * parts.value;
    let result = MethodResult {
        value,
        method,
        err_estimate: t.norm() * parts.err + f64::EPSILON * value.norm(),
        condition_flag: false,
    };
    if parts.converged {
        Ok(result)
    } else {
        Err(EvalError::ToleranceNotMet { result })
    }
}

/// Adaptive quadrature of f(t,a) = t ∫₀¹ (ax)^(-tx) dx.
///
/// For a < 0 the branch log(ax) = ln|ax| - iπ is used, which reproduces the
/// cos(πtx) + i·sin(πtx) oscillatory decomposition on the real axis.
pub fn f_quadrature(p: EvalPoint, cfg: &QuadratureConfig) -> Result<MethodResult, EvalError> {
    if p.t.re == 0.0 && p.t.im == 0.0 {
        return Ok(MethodResult {
            value: p.t,
            method: Method::Quadrature,
            err_estimate: 0.0,
            condition_flag: false,
        });
    }
    let lambda = log_scale(p.a);
    let one = |_x: f64| Complex64::new(1.0, 0.0);
    let parts = integral_unit_interval(p.t, lambda, cfg, one);
    finish_quadrature(p.t, parts, Method::Quadrature)
}

/// f together with its t-derivative
/// ∂f/∂t = ∫₀¹ (ax)^(-tx) (1 - t·x·log(ax)) dx (differentiation under the
/// integral), for Newton refinement of zeros.
pub fn f_quadrature_with_derivative(
    p: EvalPoint,
    cfg: &QuadratureConfig,
) -> Result<(MethodResult, Complex64), EvalError> {
    let lambda = log_scale(p.a);
    let t = p.t;
    let one = |_x: f64| Complex64::new(1.0, 0.0);
    let base = integral_unit_interval(t, lambda, cfg, one);
    // weight x·(λ + ln x) for the derivative cross-term
    let wl = move |x: f64| {
        if x <= 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            (lambda + Complex64::new(x.ln(), 0.0)) * x
        }
    };
    let cross = integral_unit_interval(t, lambda, cfg, wl);
    let f = finish_quadrature(t, QuadParts { value: base.value, err: base.err, converged: base.converged && cross.converged }, Method::Quadrature)?;
    let derivative = base.value - t * cross.value;
    Ok((f, derivative))
}

/// Tail integral f̃(t,a) = t ∫₁^∞ (ax)^(-tx) dx, convergent for Re t > 0
/// and a > 0; integrated through the substitution x = 1/(1-u), u ∈ [0,1).
pub fn f_tilde(p: EvalPoint, cfg: &QuadratureConfig) -> Result<MethodResult, EvalError> {
    if !(p.t.re > 0.0) || !(p.a > 0.0) {
        return Err(EvalError::DivergentTail);
    }
    let t = p.t;
    let a = p.a;
    let lambda = log_scale(a);
    let g = move |u: f64| {
        if u >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let x = 1.0 / (1.0 - u);
        let l = lambda + Complex64::new(x.ln(), 0.0);
        let jac = x * x;
        exp_guarded(-t * l * x) * jac
    };

    let mut pts = vec![0.0, 1.0];
    // boundary layer at x = 1 (u = 0)
    let r = (t * (lambda + Complex64::new(1.0, 0.0))).re.abs();
    if r > 4.0 {
        let mut d = 1.0 / r;
        while d < 1.0 {
            pts.push(d);
            d *= 2.0;
        }
    }
    // interior peak at x = 1/(e a) when a < 1/e
    if a < 1.0 / E && t.re > 0.0 {
        let xs = 1.0 / (E * a);
        let us = 1.0 - 1.0 / xs;
        let w = ((E * a / t.re.abs()).sqrt() / (xs * xs)).min(0.25);
        for k in [-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0] {
            pts.push(us + k * w);
        }
    }
    // geometric approach to u = 1
    let mut d = 0.5;
    for _ in 0..45 {
        pts.push(1.0 - d);
        d *= 0.5;
    }
    // oscillation control near u = 0
    let rate0 = (t * (lambda + Complex64::new(1.0, 0.0))).im.abs();
    if rate0 > 24.0 {
        let n = ((rate0 / 6.0) as usize).min(256);
        for k in 1..n {
            pts.push(k as f64 / n as f64);
        }
    }

    let pts = clean_breakpoints(pts, 0.0, 1.0);
    let out = adaptive_complex(&g, &pts, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
    finish_quadrature(t, QuadParts { value: out.value, err: out.err, converged: out.converged }, Method::TailQuadrature)
}

/// Variable-limit integral F(t,λ) = t ∫₀^λ x^(-tx) dx evaluated through the
/// reduction F(t,λ) = f(λt, λ).
pub fn f_limits(t: Complex64, lambda: f64, cfg: &QuadratureConfig) -> Result<MethodResult, EvalError> {
    if !(lambda > 0.0) {
        return Err(EvalError::NonPositiveLambda);
    }
    let inner = f_quadrature(EvalPoint::new(lambda * t, lambda), cfg)?;
    Ok(MethodResult { method: Method::RangeReduction, ..inner })
}

/// F(t,λ) integrated directly on [0, λ] without the variable change; an
/// independent route for testing the reduction identity.
pub fn f_limits_direct(
    t: Complex64,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<MethodResult, EvalError> {
    if !(lambda > 0.0) {
        return Err(EvalError::NonPositiveLambda);
    }
    if t.re == 0.0 && t.im == 0.0 {
        return Ok(MethodResult {
            value: t,
            method: Method::RangeReduction,
            err_estimate: 0.0,
            condition_flag: false,
        });
    }
    let zero_log = Complex64::new(0.0, 0.0);
    let x_lo = (0.1 * lambda).min(0.1);
    let fx = move |x: f64| {
        if x <= 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        exp_guarded(-t * x * x.ln())
    };
    let mut pts = breakpoints_x(t, zero_log, x_lo, lambda);
    // growth layer at the λ end for negative Re t
    let r_end = (t * Complex64::new(lambda.ln() + 1.0, 0.0)).re;
    if r_end < -4.0 {
        let mut d = 1.0 / r_end.abs();
        while d < lambda - x_lo {
            pts.push(lambda - d);
            d *= 2.0;
        }
    }
    let pts = clean_breakpoints(pts, x_lo, lambda);
    let part_x = adaptive_complex(&fx, &pts, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);

    let y0 = (1.0 / x_lo).ln();
    let ymax = y_cutoff(t.norm(), 0.0, cfg.abs_tol, y0);
    let fy = move |y: f64| {
        let x = (-y).exp();
        exp_guarded(t * x * y - Complex64::new(y, 0.0))
    };
    let by = breakpoints_y(t, zero_log, y0, ymax);
    let part_y = adaptive_complex(&fy, &by, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);

    finish_quadrature(
        t,
        QuadParts {
            value: part_x.value + part_y.value,
            err: part_x.err + part_y.err,
            converged: part_x.converged && part_y.converged,
        },
        Method::RangeReduction,
    )
}
