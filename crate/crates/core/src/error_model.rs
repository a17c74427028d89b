//! A priori error model and sizing of the truncated Laguerre rule.
//!
//! For `f_z(t) = 1/(1 - z e^{-t/a})` the poles are `t_k = a(ln|z| + i(arg z + 2kπ))`.
//! The pole `t_0` fixes the parabola `Re sqrt(-w) = ln R_0` through it, and the
//! quadrature error of the integral behaves like
//!
//! ```text
//! ε_n = 4π a^s |z|^{-a} |ln_0 z|^{s-1} exp(-4 sqrt(m) Re sqrt(-t_0)),   m = n + s/2.
//! ```
//!
//! Nodes beyond `g_n(s)` carry weights whose total is below `ε_n / K_z`, where
//! `K_z` bounds `|f_z|` on `[0, ∞)`; they are dropped.

use crate::error::{LerchError, Result};
use crate::gamma::gamma;
use crate::principal_arg;
use crate::quadrature::N_MAX;
use crate::ComplexScalar;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Extra nodes added on top of the asymptotic `k_n`.
pub const DEFAULT_SAFETY: usize = 2;

/// Validated `(z, s, a)` for the real-parameter integral representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchParams {
    z: ComplexScalar,
    s: f64,
    a: f64,
}

impl LerchParams {
    /// Requires `s > 0`, `a > 0` and `z ∉ [1, +∞)`.
    pub fn new(z: ComplexScalar, s: f64, a: f64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite() && s.is_finite() && a.is_finite()) {
            return Err(LerchError::invalid(format!(
                "non-finite input z = {z}, s = {s}, a = {a}"
            )));
        }
        if on_cut(z) {
            return Err(LerchError::domain(format!(
                "z = {z} lies on the branch cut [1, inf) of the integral representation"
            )));
        }
        if s <= 0.0 {
            return Err(LerchError::domain(format!("s must be > 0, got {s}")));
        }
        if a <= 0.0 {
            return Err(LerchError::domain(format!("a must be > 0, got {a}")));
        }
        Ok(LerchParams { z, s, a })
    }

    pub fn z(&self) -> ComplexScalar {
        self.z
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `Γ(s) a^s`, the normalization between the Laguerre integral and Φ.
    pub fn normalization(&self) -> f64 {
        gamma(self.s) * self.a.powf(self.s)
    }
}

pub(crate) fn on_cut(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re >= 1.0
}

/// Everything the algorithm decides before touching any node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizingPlan {
    pub kz: f64,
    pub t0: ComplexScalar,
    pub r0: f64,
    /// Integral-level tolerance `a^s Γ(s) 𝓔 / 2`.
    pub eps_target: f64,
    pub m: f64,
    pub n: usize,
    pub gn: f64,
    pub kn: usize,
    /// `C = 4π a^s |z|^{-a} |ln_0 z|^{s-1}`.
    pub c_amp: f64,
}

/// Rule order chosen for a tolerance: `m` solves `ε_n(m) = eps_target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleSize {
    pub m: f64,
    pub n: usize,
    pub eps_target: f64,
}

fn principal_log(z: ComplexScalar) -> ComplexScalar {
    Complex64::new(z.norm().ln(), principal_arg(z))
}

/// Pole `t_k = a(ln|z| + i(arg z + 2kπ))` of `f_z`, with `arg z ∈ (-π, π]`.
pub fn pole(z: ComplexScalar, a: f64, k: i64) -> Result<ComplexScalar> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(LerchError::invalid("f_z has no poles for z = 0"));
    }
    let ln0 = principal_log(z);
    Ok(a * Complex64::new(ln0.re, ln0.im + 2.0 * PI * k as f64))
}

/// Parabola parameter `R = exp(Re sqrt(-t))` of the parabola through `t`.
pub fn r_zero(t0: ComplexScalar) -> Result<f64> {
    if t0.im == 0.0 && t0.re >= 0.0 {
        return Err(LerchError::invalid(format!(
            "pole {t0} on the nonnegative real axis has no enclosing parabola"
        )));
    }
    Ok((-t0).sqrt().re.exp())
}

/// Bound `K_z ≥ |1/(1 - z e^{-t/a})|` for all real `t ≥ 0`.
pub fn kz(z: ComplexScalar) -> Result<f64> {
    if on_cut(z) {
        return Err(LerchError::invalid(format!("K_z undefined for z = {z} on [1, inf)")));
    }
    let modulus_sq = z.norm_sqr();
    Ok(if z.re <= 0.0 {
        1.0
    } else if z.re <= modulus_sq {
        z.norm() / z.im.abs()
    } else {
        1.0 / (Complex64::new(1.0, 0.0) - z).norm()
    })
}

/// Amplitude `C = 4π a^s |z|^{-a} |ln_0 z|^{s-1}` of the error estimate.
pub fn amplitude(params: &LerchParams) -> Result<f64> {
    let z = params.z();
    if z == Complex64::new(0.0, 0.0) {
        return Err(LerchError::invalid("error estimate undefined at z = 0"));
    }
    let (s, a) = (params.s(), params.a());
    Ok(4.0 * PI * a.powf(s) * z.norm().powf(-a) * principal_log(z).norm().powf(s - 1.0))
}

fn log_r0(params: &LerchParams) -> Result<f64> {
    let t0 = pole(params.z(), params.a(), 0)?;
    Ok(r_zero(t0)?.ln())
}

/// Integral-level estimate `ε_n` at shifted order `m`.
pub fn epsilon_n(params: &LerchParams, m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(LerchError::invalid(format!("m must be > 0, got {m}")));
    }
    let c = amplitude(params)?;
    let l = log_r0(params)?;
    Ok(c * (-4.0 * m.sqrt() * l).exp())
}

/// Φ-level estimate `𝓔_n = ε_n / (Γ(s) a^s)`.
pub fn big_e_n(params: &LerchParams, m: f64) -> Result<f64> {
    Ok(epsilon_n(params, m)? / params.normalization())
}

/// Order `n` for which the estimate meets `tol` (a Φ-level tolerance, halved
/// for the truncation).
pub fn solve_n(params: &LerchParams, tol: f64) -> Result<RuleSize> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(LerchError::invalid(format!("tolerance must be finite and > 0, got {tol}")));
    }
    let s = params.s();
    let eps_target = params.normalization() * tol / 2.0;
    let c = amplitude(params)?;
    let l = log_r0(params)?;
    if c <= eps_target {
        return Ok(RuleSize {
            m: s / 2.0 + 1.0,
            n: 1,
            eps_target,
        });
    }
    let sqrt_m = (c / eps_target).ln() / (4.0 * l);
    let m = sqrt_m * sqrt_m;
    let n_real = (m - s / 2.0).ceil().max(1.0);
    if !(n_real <= N_MAX as f64) {
        return Err(LerchError::SizingOverflow {
            required: n_real,
            limit: N_MAX,
        });
    }
    Ok(RuleSize {
        m,
        n: n_real as usize,
        eps_target,
    })
}

/// Truncation threshold `g_n(s) = -ln(ε / K_z) + (s - 1) ln|1 - s|`, floored at 1.
pub fn gn_threshold(s: f64, eps_target: f64, kz: f64) -> f64 {
    let mut g = -(eps_target / kz).ln();
    if s != 1.0 {
        g += (s - 1.0) * (1.0 - s).abs().ln();
    }
    g.max(1.0)
}

/// Nodes to keep: invert `x_k ≈ k²π²/(4m)` at `x_k = g_n`, add `safety`, cap at `n`.
pub fn solve_kn(m: f64, n: usize, gn: f64, safety: usize) -> usize {
    let k = 2.0 / PI * (m * gn).sqrt();
    // absorb the last-ulp error of the product so exact integers do not round up
    let k_raw = (k * (1.0 - 4.0 * f64::EPSILON)).ceil().max(1.0) as usize;
    n.min(k_raw + safety)
}

/// Asymptotic `k_n ≈ (4/π) m^{3/4} (ln R_0)^{1/2}` and the exponent
/// `d = (2π ln R_0)^{2/3}` in `ε_n ≈ C e^{-d k_n^{2/3}}`.
pub fn kn_decay_diagnostic(m: f64, r0: f64) -> (f64, f64) {
    let l = r0.ln();
    let kn_pred = 4.0 / PI * m.powf(0.75) * l.sqrt();
    let d = (2.0 * PI * l).powf(2.0 / 3.0);
    (kn_pred, d)
}

/// Steps one to five of the truncated Laguerre algorithm.
pub fn plan(params: &LerchParams, tol: f64) -> Result<SizingPlan> {
    plan_with_safety(params, tol, DEFAULT_SAFETY)
}

pub fn plan_with_safety(params: &LerchParams, tol: f64, safety: usize) -> Result<SizingPlan> {
    let size = solve_n(params, tol)?;
    let kz = kz(params.z())?;
    let t0 = pole(params.z(), params.a(), 0)?;
    let r0 = r_zero(t0)?;
    let gn = gn_threshold(params.s(), size.eps_target, kz);
    let kn = solve_kn(size.m, size.n, gn, safety);
    Ok(SizingPlan {
        kz,
        t0,
        r0,
        eps_target: size.eps_target,
        m: size.m,
        n: size.n,
        gn,
        kn,
        c_amp: amplitude(params)?,
    })
}
