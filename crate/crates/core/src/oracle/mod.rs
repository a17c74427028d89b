//! Reference values for Φ(z, s, a) that share no code with the Laguerre path.

mod adaptive;
mod series;

pub use adaptive::{adaptive_quadrature, adaptive_quadrature_complex, adaptive_quadrature_on, MAX_PANELS};
pub use series::{series_alternating, series_direct, MAX_ALTERNATING_RATIO, MAX_TERMS};

use crate::error::{LerchError, Result};
use crate::ComplexScalar;
use num_complex::Complex64;
use serde::Serialize;
use std::fmt;

/// Tolerance requested from each oracle by [`cross_validate`].
pub const REFERENCE_TOL: f64 = 1e-13;

/// Tolerance for references that judge evaluations at `1e-14`.
pub const STRICT_TOL: f64 = 1e-15;

/// Pairwise agreement required by [`cross_validate`], relative to `max(1, |Φ|)`.
pub const AGREEMENT_TOL: f64 = 1e-11;

/// `|z|` up to which the direct series is the preferred reference.
pub const DIRECT_RADIUS: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    DirectSeries,
    AcceleratedSeries,
    AdaptiveQuadrature,
    ClosedForm,
}

impl fmt::Display for OracleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OracleMethod::DirectSeries => "direct-series",
            OracleMethod::AcceleratedSeries => "accelerated-series",
            OracleMethod::AdaptiveQuadrature => "adaptive-quadrature",
            OracleMethod::ClosedForm => "closed-form",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: ComplexScalar,
    pub method: OracleMethod,
    pub est_accuracy: f64,
}

/// `Φ(0, s, a) = a^{-s}`.
pub fn closed_form_zero(s: f64, a: f64) -> OracleResult {
    OracleResult {
        value: Complex64::new(a.powf(-s), 0.0),
        method: OracleMethod::ClosedForm,
        est_accuracy: 0.0,
    }
}

fn negative_real(z: ComplexScalar) -> Option<f64> {
    (z.im == 0.0 && z.re < 0.0).then_some(-z.re)
}

/// The single most accurate oracle for `(z, s, a)`.
pub fn reference(z: ComplexScalar, s: f64, a: f64, tol: f64) -> Result<OracleResult> {
    if z == Complex64::new(0.0, 0.0) {
        if !(s > 0.0) || !(a > 0.0) {
            return Err(LerchError::domain(format!("need s > 0 and a > 0, got s = {s}, a = {a}")));
        }
        return Ok(closed_form_zero(s, a));
    }
    if z.norm() <= DIRECT_RADIUS {
        return series_direct(z, s, a, tol);
    }
    if let Some(r) = negative_real(z) {
        if r <= MAX_ALTERNATING_RATIO {
            return series_alternating(r, s, a, tol);
        }
    }
    adaptive_quadrature(z, s, a, tol)
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub results: Vec<OracleResult>,
    /// Oracles that applied but failed, with their diagnostic.
    pub failures: Vec<(OracleMethod, String)>,
    /// `(i, j, |v_i - v_j|)` over `results`.
    pub deviations: Vec<(usize, usize, f64)>,
    pub max_deviation: f64,
    pub threshold: f64,
    pub passed: bool,
}

fn direct_series_applies(z: ComplexScalar, s: f64, tol: f64) -> bool {
    let r = z.norm();
    if r <= DIRECT_RADIUS {
        return true;
    }
    if r > 1.0 || z == Complex64::new(1.0, 0.0) {
        return false;
    }
    // Abel tail needs about (2 / (|1 - z| tol))^{1/s} terms
    let needed = ((2.0 / ((1.0 - z).norm() * tol)).ln() / s).exp();
    needed < MAX_TERMS as f64
}

/// Runs every oracle that applies to `(z, s, a)` and compares them pairwise.
pub fn cross_validate(z: ComplexScalar, s: f64, a: f64) -> Result<CrossValidation> {
    if !(s > 0.0) || !(a > 0.0) || !s.is_finite() || !a.is_finite() {
        return Err(LerchError::domain(format!("need s > 0 and a > 0, got s = {s}, a = {a}")));
    }
    if crate::error_model::on_cut(z) {
        return Err(LerchError::domain(format!("z = {z} lies on the cut [1, ∞)")));
    }
    let tol = REFERENCE_TOL;
    let mut attempts: Vec<(OracleMethod, Result<OracleResult>)> = Vec::new();
    if z == Complex64::new(0.0, 0.0) {
        attempts.push((OracleMethod::ClosedForm, Ok(closed_form_zero(s, a))));
    }
    if direct_series_applies(z, s, tol) {
        attempts.push((OracleMethod::DirectSeries, series_direct(z, s, a, tol)));
    }
    if let Some(r) = negative_real(z) {
        if r <= MAX_ALTERNATING_RATIO {
            attempts.push((OracleMethod::AcceleratedSeries, series_alternating(r, s, a, tol)));
        }
    }
    attempts.push((OracleMethod::AdaptiveQuadrature, adaptive_quadrature(z, s, a, tol)));

    let mut results = Vec::new();
    let mut failures = Vec::new();
    for (method, outcome) in attempts {
        match outcome {
            Ok(r) => results.push(r),
            Err(e) => failures.push((method, e.to_string())),
        }
    }
    let scale = results.iter().map(|r| r.value.norm()).fold(1.0, f64::max);
    let threshold = AGREEMENT_TOL * scale;
    let mut deviations = Vec::new();
    let mut max_deviation = 0.0f64;
    for i in 0..results.len() {
        for j in i + 1..results.len() {
            let d = (results[i].value - results[j].value).norm();
            max_deviation = max_deviation.max(d);
            deviations.push((i, j, d));
        }
    }
    let passed = failures.is_empty() && !results.is_empty() && max_deviation <= threshold;
    Ok(CrossValidation {
        results,
        failures,
        deviations,
        max_deviation,
        threshold,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn method_names() {
        assert_eq!(OracleMethod::DirectSeries.to_string(), "direct-series");
        assert_eq!(OracleMethod::ClosedForm.to_string(), "closed-form");
    }

    #[test]
    fn reference_selection() {
        let pick = |z: Complex64| reference(z, 1.5, 1.0, 1e-13).unwrap().method;
        assert_eq!(pick(Complex64::new(0.0, 0.0)), OracleMethod::ClosedForm);
        assert_eq!(pick(Complex64::new(0.5, 0.3)), OracleMethod::DirectSeries);
        assert_eq!(pick(Complex64::new(-1.2, 0.0)), OracleMethod::AcceleratedSeries);
        assert_eq!(pick(Complex64::new(0.0, 5.0)), OracleMethod::AdaptiveQuadrature);
    }

    #[test]
    fn cross_validation_at_zero() {
        let report = cross_validate(Complex64::new(0.0, 0.0), 2.0, 3.0).unwrap();
        assert!(report.passed);
        assert_eq!(report.results[0].value.re, 1.0 / 9.0);
    }

    #[test]
    fn cross_validation_eta_two() {
        let report = cross_validate(Complex64::new(-1.0, 0.0), 2.0, 1.0).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.results.len(), 3);
        for r in &report.results {
            assert!((r.value.re - PI * PI / 12.0).abs() < 1e-12, "{r:?}");
        }
    }

    #[test]
    fn cross_validation_inside_disk() {
        let report = cross_validate(Complex64::new(0.5, 0.0), 1.5, 1.0).unwrap();
        assert!(report.passed);
        assert!(report.max_deviation < 1e-12);
    }

    #[test]
    fn cross_validation_rejects_cut() {
        assert!(cross_validate(Complex64::new(3.0, 0.0), 1.0, 1.0).is_err());
    }
}
