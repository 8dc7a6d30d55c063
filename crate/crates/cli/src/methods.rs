//! Mapping from CLI method names to library evaluations.

use num_complex::Complex64;
use sophomore::asymptotics::{
    approx_auto, approx_calibrated_complex, approx_critical, approx_f_tilde,
    approx_half_derivative, approx_interp_erf, approx_laplace, approx_laplace_bracket,
    approx_laplace_corrected, approx_naive_power, approx_neg_t_combined, approx_neg_t_erfi,
    approx_neg_t_log, approx_small_a, approx_small_a_simplified, approx_weierstrass,
    select_regime,
};
use sophomore::eval::{
    f_quadrature, f_series, f_series_general, f_tilde, EvalPoint, QuadratureConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliMethod {
    Series,
    SeriesGeneral,
    Quadrature,
    FTilde,
    HalfDerivative,
    Laplace,
    LaplaceCorrected,
    LaplaceBracket,
    InterpErf,
    Critical,
    SmallA,
    SmallASimple,
    FTildeSaddle,
    NegTErfi,
    NegTLog,
    NegTCombined,
    Calibrated,
    Weierstrass,
    APow,
    Auto,
}

pub const METHOD_NAMES: &[(&str, CliMethod)] = &[
    ("series", CliMethod::Series),
    ("series_general", CliMethod::SeriesGeneral),
    ("quadrature", CliMethod::Quadrature),
    ("f_tilde", CliMethod::FTilde),
    ("half_derivative", CliMethod::HalfDerivative),
    ("laplace", CliMethod::Laplace),
    ("laplace_corrected", CliMethod::LaplaceCorrected),
    ("laplace_bracket", CliMethod::LaplaceBracket),
    ("interp_erf", CliMethod::InterpErf),
    ("critical", CliMethod::Critical),
    ("small_a", CliMethod::SmallA),
    ("small_a_simple", CliMethod::SmallASimple),
    ("f_tilde_saddle", CliMethod::FTildeSaddle),
    ("neg_t_erfi", CliMethod::NegTErfi),
    ("neg_t_log", CliMethod::NegTLog),
    ("neg_t_combined", CliMethod::NegTCombined),
    ("calibrated", CliMethod::Calibrated),
    ("weierstrass", CliMethod::Weierstrass),
    ("a_pow", CliMethod::APow),
    ("auto", CliMethod::Auto),
];

impl CliMethod {
    pub fn parse(name: &str) -> Result<Self, String> {
        METHOD_NAMES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, m)| *m)
            .ok_or_else(|| {
                let all: Vec<&str> = METHOD_NAMES.iter().map(|(n, _)| *n).collect();
                format!("unknown method `{name}`; available: {}", all.join(", "))
            })
    }

    pub fn name(self) -> &'static str {
        METHOD_NAMES.iter().find(|(_, m)| *m == self).unwrap().0
    }
}

pub struct MethodOutput {
    pub value: Complex64,
    pub err_estimate: f64,
    pub regime: &'static str,
}

/// Evaluate one method at (t, a). Domain errors come back as Err(message)
/// and are rendered as row-level status.
pub fn run_method(
    m: CliMethod,
    t: Complex64,
    a: f64,
    cfg: &QuadratureConfig,
) -> Result<MethodOutput, String> {
    let p = EvalPoint::new(t, a);
    let regime = select_regime(p).tag.name();
    let out = |value: Complex64, err: f64| MethodOutput { value, err_estimate: err, regime };
    match m {
        CliMethod::Series => {
            if a != 1.0 {
                return Err("series requires a = 1".into());
            }
            f_series(t).map(|r| out(r.value, r.err_estimate)).map_err(|e| e.to_string())
        }
        CliMethod::SeriesGeneral => f_series_general(p)
            .map(|r| out(r.value, r.err_estimate))
            .map_err(|e| e.to_string()),
        CliMethod::Quadrature => f_quadrature(p, cfg)
            .map(|r| out(r.value, r.err_estimate))
            .map_err(|e| e.to_string()),
        CliMethod::FTilde => {
            f_tilde(p, cfg).map(|r| out(r.value, r.err_estimate)).map_err(|e| e.to_string())
        }
        CliMethod::HalfDerivative => Ok(out(approx_half_derivative(t).value, 0.0)),
        CliMethod::Laplace => Ok(out(approx_laplace(p).value, 0.0)),
        CliMethod::LaplaceCorrected => Ok(out(approx_laplace_corrected(t / a).value, 0.0)),
        CliMethod::LaplaceBracket => Ok(out(approx_laplace_bracket(t / a).value, 0.0)),
        CliMethod::InterpErf => Ok(out(approx_interp_erf(p).value, 0.0)),
        CliMethod::Critical => {
            if t.im != 0.0 {
                return Err("critical requires real t".into());
            }
            if t.re <= 0.0 {
                return Err("critical requires t > 0".into());
            }
            Ok(out(approx_critical(t.re).value, 0.0))
        }
        CliMethod::SmallA => Ok(out(approx_small_a(p).value, 0.0)),
        CliMethod::SmallASimple => approx_small_a_simplified(p)
            .map(|r| out(r.value, 0.0))
            .map_err(|e| e.to_string()),
        CliMethod::FTildeSaddle => Ok(out(approx_f_tilde(p).value, 0.0)),
        CliMethod::NegTErfi => Ok(out(approx_neg_t_erfi(p).value, 0.0)),
        CliMethod::NegTLog => {
            approx_neg_t_log(p).map(|r| out(r.value, 0.0)).map_err(|e| e.to_string())
        }
        CliMethod::NegTCombined => Ok(out(approx_neg_t_combined(p).value, 0.0)),
        CliMethod::Calibrated => Ok(out(approx_calibrated_complex(p).value, 0.0)),
        CliMethod::Weierstrass => Ok(out(approx_weierstrass(t).value, 0.0)),
        CliMethod::APow => {
            approx_naive_power(p).map(|r| out(r.value, 0.0)).map_err(|e| e.to_string())
        }
        CliMethod::Auto => Ok(out(approx_auto(p).value, 0.0)),
    }
}

pub fn parse_method_list(s: &str) -> Result<Vec<CliMethod>, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(CliMethod::parse(part)?);
    }
    if out.is_empty() {
        return Err("at least one method must be selected".into());
    }
    Ok(out)
}
