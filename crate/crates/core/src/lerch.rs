//! Evaluation of Φ(z, s, a) by the truncated generalized Gauss-Laguerre rule.

use crate::error::{LerchError, Result};
use crate::error_model::{big_e_n, on_cut, plan, LerchParams};
use crate::gamma::gamma_complex;
use crate::quadrature::{gauss_laguerre, gauss_laguerre_truncated, QuadratureRule, N_MAX};
use crate::ComplexScalar;
use num_complex::Complex64;

/// Tightest tolerance the evaluator accepts; smaller requests are clamped.
pub const TOL_FLOOR: f64 = 1e-15;
/// Loosest tolerance; larger requests are clamped.
pub const TOL_CEILING: f64 = 1e-1;

/// |Im a| / Re a above which the complex path flags the oscillation.
const IMAG_A_RATIO_WARN: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Warning {
    /// The tolerance was outside `[TOL_FLOOR, TOL_CEILING]` and was clamped.
    ToleranceClamped { requested: f64, used: f64 },
    /// Result of the complex-parameter path, which has no error estimate.
    Experimental,
    /// `Im s ≠ 0` or `|Im a| ≫ Re a`: the integrand oscillates and the
    /// Laguerre rule may converge slowly or stagnate.
    OscillatoryIntegrand,
}

/// Result of one evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: ComplexScalar,
    /// Order of the full rule.
    pub n: usize,
    /// Nodes actually used.
    pub kn: usize,
    /// A priori estimate `2 ε_n / (Γ(s) a^s)`, NaN when unknown.
    pub est_error: f64,
    pub f_evals: usize,
    pub warnings: Vec<Warning>,
}

/// Complex-parameter input: `Re s > 0`, `Re a > 0`, `z ∉ [1, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexLerchParams {
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
}

impl ComplexLerchParams {
    pub fn new(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar) -> Result<Self> {
        let finite = [z, s, a].iter().all(|c| c.re.is_finite() && c.im.is_finite());
        if !finite {
            return Err(LerchError::invalid("non-finite complex input"));
        }
        if on_cut(z) {
            return Err(LerchError::domain(format!(
                "z = {z} lies on the branch cut [1, inf) of the integral representation"
            )));
        }
        if s.re <= 0.0 {
            return Err(LerchError::domain(format!("Re s must be > 0, got {s}")));
        }
        if a.re <= 0.0 {
            return Err(LerchError::domain(format!("Re a must be > 0, got {a}")));
        }
        Ok(ComplexLerchParams { z, s, a })
    }

    pub fn z(&self) -> ComplexScalar {
        self.z
    }

    pub fn s(&self) -> ComplexScalar {
        self.s
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }
}

/// `f_z(t) = 1 / (1 - z e^{-t/a})`.
pub fn f_z(t: f64, z: ComplexScalar, a: f64) -> ComplexScalar {
    Complex64::new(1.0, 0.0) / (1.0 - z * (-t / a).exp())
}

/// `Σ w_j f_z(t_j)` over every node the rule holds: the Laguerre approximation
/// of `∫ t^{s-1} e^{-t} f_z(t) dt`, not yet divided by `Γ(s) a^s`.
pub fn integral_sum(params: &LerchParams, rule: &QuadratureRule) -> ComplexScalar {
    let (z, a) = (params.z(), params.a());
    rule.iter().map(|(t, w)| w * f_z(t, z, a)).sum()
}

fn normalize_tol(tol: f64, warnings: &mut Vec<Warning>) -> Result<f64> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(LerchError::invalid(format!("tolerance must be finite and > 0, got {tol}")));
    }
    let used = tol.clamp(TOL_FLOOR, TOL_CEILING);
    if used != tol {
        warnings.push(Warning::ToleranceClamped { requested: tol, used });
    }
    Ok(used)
}

/// Φ(z, s, a) to absolute accuracy `tol` (up to the heuristic nature of the estimate).
pub fn evaluate(params: &LerchParams, tol: f64) -> Result<Evaluation> {
    let mut warnings = Vec::new();
    let tol = normalize_tol(tol, &mut warnings)?;
    let (z, s, a) = (params.z(), params.s(), params.a());

    if z == Complex64::new(0.0, 0.0) {
        return Ok(Evaluation {
            value: Complex64::new(a.powf(-s), 0.0),
            n: 0,
            kn: 0,
            est_error: 0.0,
            f_evals: 0,
            warnings,
        });
    }

    let plan = plan(params, tol)?;
    let rule = gauss_laguerre_truncated(s - 1.0, plan.n, plan.kn)?;
    let value = integral_sum(params, &rule) / params.normalization();
    let est_error = 2.0 * big_e_n(params, plan.n as f64 + s / 2.0)?;
    Ok(Evaluation {
        value,
        n: plan.n,
        kn: plan.kn,
        est_error,
        f_evals: rule.len(),
        warnings,
    })
}

/// Polylogarithm `Li_s(z) = z Φ(z, s, 1)`.
pub fn polylog(s: f64, z: ComplexScalar, tol: f64) -> Result<Evaluation> {
    let scale = z.norm().max(1.0);
    let params = LerchParams::new(z, s, 1.0)?;
    let mut inner = evaluate(&params, tol / scale)?;
    inner.value *= z;
    inner.est_error *= z.norm();
    Ok(inner)
}

/// Dirichlet beta `β(s) = 2^{-s} Φ(-1, s, 1/2)`.
pub fn dirichlet_beta(s: f64, tol: f64) -> Result<Evaluation> {
    let params = LerchParams::new(Complex64::new(-1.0, 0.0), s, 0.5)?;
    let prefactor = 2f64.powf(-s);
    let mut inner = evaluate(&params, tol / prefactor)?;
    inner.value *= prefactor;
    inner.est_error *= prefactor;
    Ok(inner)
}

/// Dirichlet eta `η(s) = Φ(-1, s, 1)`.
pub fn dirichlet_eta(s: f64, tol: f64) -> Result<Evaluation> {
    let params = LerchParams::new(Complex64::new(-1.0, 0.0), s, 1.0)?;
    evaluate(&params, tol)
}

/// Experimental path for complex `s` and `a` with a caller-chosen rule order.
///
/// After `x = t / Re a` the integrand is `t^{Re s - 1} e^{-t} h(t)` with
/// `h(t) = e^{i(Im s ln t - (Im a / Re a) t)} / (1 - z e^{-t / Re a})`.
/// No error estimate exists here; `est_error` is NaN.
pub fn evaluate_complex(params: &ComplexLerchParams, n: usize) -> Result<Evaluation> {
    if !(1..=N_MAX).contains(&n) {
        return Err(LerchError::invalid(format!("rule order {n} outside 1..={N_MAX}")));
    }
    let (z, s, a) = (params.z(), params.s(), params.a());
    let rule = gauss_laguerre(s.re - 1.0, n)?;
    let ratio = a.im / a.re;

    let sum: ComplexScalar = rule
        .iter()
        .map(|(t, w)| {
            let phase = Complex64::new(0.0, s.im * t.ln() - ratio * t).exp();
            w * phase / (1.0 - z * (-t / a.re).exp())
        })
        .sum();
    let prefactor = Complex64::new(0.0, -s.im * a.re.ln()).exp()
        / (a.re.powf(s.re) * gamma_complex(s));

    let mut warnings = vec![Warning::Experimental];
    if s.im != 0.0 || ratio.abs() > IMAG_A_RATIO_WARN {
        warnings.push(Warning::OscillatoryIntegrand);
    }
    Ok(Evaluation {
        value: prefactor * sum,
        n,
        kn: n,
        est_error: f64::NAN,
        f_evals: n,
        warnings,
    })
}
