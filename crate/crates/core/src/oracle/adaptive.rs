//! Adaptive Gauss-Legendre quadrature of the defining integral
//! `Φ(z, s, a) = 1/Γ(s) ∫₀^∞ x^{s-1} e^{-a x} / (1 - z e^{-x}) dx`.

use super::{OracleMethod, OracleResult};
use crate::error::{LerchError, Result};
use crate::error_model::on_cut;
use crate::gamma::{gamma, gamma_complex};
use crate::ComplexScalar;
use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

const GL_POINTS: usize = 30;
/// Panel budget before reporting no-convergence.
pub const MAX_PANELS: usize = 20_000;
const GRADING_RATIO: f64 = 4.0;
const MAX_GRADING_DEPTH: usize = 40;
const MAX_CUTOFF: f64 = 1.0e5;

fn legendre_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_POINTS;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            dp = if d != 0.0 { d } else { dp };
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        (nodes, weights)
    })
}

// (P_n(x), P_n'(x))
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

struct Integrand {
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
}

impl Integrand {
    fn eval(&self, x: f64) -> ComplexScalar {
        let power = if self.s.im == 0.0 {
            Complex64::new(x.powf(self.s.re - 1.0), 0.0)
        } else {
            let lx = x.ln();
            Complex64::new((self.s.re - 1.0) * lx, self.s.im * lx).exp()
        };
        let damping = if self.a.im == 0.0 {
            Complex64::new((-self.a.re * x).exp(), 0.0)
        } else {
            (-self.a * x).exp()
        };
        power * damping / (1.0 - self.z * (-x).exp())
    }

    // (Σ w f, Σ w |f|) on [lo, hi]
    fn panel_rule(&self, lo: f64, hi: f64) -> (ComplexScalar, f64) {
        let (nodes, weights) = legendre_rule();
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut abs = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            let f = self.eval(mid + half * x);
            sum += f * *w;
            abs += w * f.norm();
        }
        (sum * half, abs * half)
    }
}

struct Panel {
    lo: f64,
    hi: f64,
    value: ComplexScalar,
    err: f64,
    floor: f64,
}

impl Panel {
    fn new(f: &Integrand, lo: f64, hi: f64) -> Self {
        let mid = 0.5 * (lo + hi);
        let (whole, _) = f.panel_rule(lo, hi);
        let (left, abs_l) = f.panel_rule(lo, mid);
        let (right, abs_r) = f.panel_rule(mid, hi);
        let value = left + right;
        Panel {
            lo,
            hi,
            value,
            err: (whole - value).norm(),
            floor: 64.0 * f64::EPSILON * (abs_l + abs_r),
        }
    }

    fn refinable(&self) -> bool {
        self.err > self.floor && self.hi - self.lo > 1e-3 * self.lo.max(f64::MIN_POSITIVE)
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Real-parameter form of [`adaptive_quadrature_complex`].
pub fn adaptive_quadrature(z: ComplexScalar, s: f64, a: f64, tol: f64) -> Result<OracleResult> {
    adaptive_quadrature_complex(z, Complex64::new(s, 0.0), Complex64::new(a, 0.0), tol)
}

/// Reference value for complex `s`, `a` with `Re s > 0`, `Re a > 0`.
pub fn adaptive_quadrature_complex(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    tol: f64,
) -> Result<OracleResult> {
    integrate(z, s, a, tol, None)
}

/// As [`adaptive_quadrature`] but with the upper limit fixed to `upper`
/// instead of chosen from the tail bound.
pub fn adaptive_quadrature_on(
    z: ComplexScalar,
    s: f64,
    a: f64,
    tol: f64,
    upper: f64,
) -> Result<OracleResult> {
    if !(upper >= 1.0 && upper.is_finite()) {
        return Err(LerchError::invalid(format!("upper limit must be >= 1, got {upper}")));
    }
    integrate(z, Complex64::new(s, 0.0), Complex64::new(a, 0.0), tol, Some(upper))
}

fn validate(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar, tol: f64) -> Result<()> {
    let finite = [z.re, z.im, s.re, s.im, a.re, a.im].iter().all(|v| v.is_finite());
    if !finite {
        return Err(LerchError::invalid("parameters must be finite"));
    }
    if !(tol > 0.0) {
        return Err(LerchError::invalid(format!("tolerance must be > 0, got {tol}")));
    }
    if on_cut(z) {
        return Err(LerchError::domain(format!("z = {z} lies on the cut [1, ∞)")));
    }
    if !(s.re > 0.0) || !(a.re > 0.0) {
        return Err(LerchError::domain(format!("need Re s > 0 and Re a > 0, got s = {s}, a = {a}")));
    }
    Ok(())
}

/// Bound on `|∫_T^∞ f|` from `|1/(1 - z e^{-x})| ≤ 1/(1 - |z| e^{-T})` and
/// `Γ(σ, y) ≤ y^{σ-1} e^{-y} / (1 - (σ-1)/y)` for `y > σ - 1`.
fn tail_bound(z: ComplexScalar, sigma: f64, alpha: f64, upper: f64) -> f64 {
    let shrink = z.norm() * (-upper).exp();
    if shrink >= 0.5 {
        return f64::INFINITY;
    }
    let y = alpha * upper;
    let factor = if sigma <= 1.0 {
        1.0
    } else if y > 2.0 * (sigma - 1.0) {
        1.0 / (1.0 - (sigma - 1.0) / y)
    } else {
        return f64::INFINITY;
    };
    let log_bound = (sigma - 1.0) * y.ln() - y - sigma * alpha.ln();
    factor * log_bound.exp() / (1.0 - shrink)
}

fn integrate(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    tol: f64,
    fixed_upper: Option<f64>,
) -> Result<OracleResult> {
    validate(z, s, a, tol)?;
    let norm = if s.im == 0.0 {
        Complex64::new(gamma(s.re), 0.0)
    } else {
        gamma_complex(s)
    };
    let target = tol * norm.norm();
    let (sigma, alpha) = (s.re, a.re);

    let upper = match fixed_upper {
        Some(t) => t,
        None => {
            let mut t = 1.0f64;
            while tail_bound(z, sigma, alpha, t) > 0.25 * target {
                t *= 1.25;
                if t > MAX_CUTOFF {
                    return Err(LerchError::NoConvergence(format!(
                        "no tail cutoff below {MAX_CUTOFF} for s = {s}, a = {a}"
                    )));
                }
            }
            t
        }
    };
    let tail = tail_bound(z, sigma, alpha, upper);
    let tail = if tail.is_finite() { tail } else { 0.0 };

    let f = Integrand { z, s, a };
    let one = Complex64::new(1.0, 0.0);
    let pole_distance = if z == Complex64::new(0.0, 0.0) { 1.0 } else { z.ln().norm() };
    let delta = 1e-10 * 1f64.min(pole_distance).min(1.0 / a.norm());

    // x^{s-1} (g0 + g1 x) on [0, δ]
    let g0 = one / (one - z);
    let g1 = -a / (one - z) - z / ((one - z) * (one - z));
    let dpow = (s * delta.ln()).exp();
    let inner = g0 * dpow / s + g1 * dpow * delta / (s + 1.0);
    let curvature = (a.norm() + 1.0 / pole_distance).powi(2) * g0.norm();
    let inner_err = curvature * delta.powf(sigma + 2.0) / (sigma + 2.0);

    let mut edges = vec![delta];
    let graded_end = upper.min(1.0);
    while *edges.last().unwrap() < graded_end && edges.len() <= MAX_GRADING_DEPTH {
        let next = (edges.last().unwrap() * GRADING_RATIO).min(graded_end);
        edges.push(next);
    }
    *edges.last_mut().unwrap() = graded_end;
    let mut lo = graded_end;
    while lo < upper {
        let hi = (lo + 2.0).min(upper);
        edges.push(hi);
        lo = hi;
    }

    let mut heap: BinaryHeap<Panel> = edges.windows(2).map(|w| Panel::new(&f, w[0], w[1])).collect();
    let mut settled: Vec<Panel> = Vec::new();
    let budget = 0.5 * target;
    loop {
        let open: f64 = heap.iter().map(|p| p.err).sum();
        let closed: f64 = settled.iter().map(|p| p.err).sum();
        if open + closed <= budget {
            break;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        if !worst.refinable() {
            settled.push(worst);
            continue;
        }
        if heap.len() + settled.len() >= MAX_PANELS {
            return Err(LerchError::NoConvergence(format!(
                "panel budget {MAX_PANELS} exhausted for z = {z}, s = {s}, a = {a} (error {:.3e})",
                open + closed
            )));
        }
        let mid = 0.5 * (worst.lo + worst.hi);
        heap.push(Panel::new(&f, worst.lo, mid));
        heap.push(Panel::new(&f, mid, worst.hi));
    }

    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(settled);
    panels.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    let mut total = inner;
    let mut err = inner_err + tail;
    for p in &panels {
        total += p.value;
        err += p.err + p.floor;
    }
    Ok(OracleResult {
        value: total / norm,
        method: OracleMethod::AdaptiveQuadrature,
        est_accuracy: err / norm.norm(),
    })
}
