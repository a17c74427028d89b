//! Reference values from the defining series.

use super::{OracleMethod, OracleResult};
use crate::error::{LerchError, Result};
use crate::ComplexScalar;
use num_complex::Complex64;

/// Term budget for the direct series.
pub const MAX_TERMS: usize = 20_000_000;

/// Largest `r` accepted by [`series_alternating`].
pub const MAX_ALTERNATING_RATIO: f64 = 1.5;

// Neumaier-compensated complex sum
#[derive(Default)]
struct CompensatedSum {
    re: (f64, f64),
    im: (f64, f64),
}

fn neumaier(acc: &mut (f64, f64), x: f64) {
    let (sum, comp) = acc;
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    fn add(&mut self, z: ComplexScalar) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    fn total(&self) -> ComplexScalar {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

fn check_s_a_tol(s: f64, a: f64, tol: f64) -> Result<()> {
    if !(s > 0.0 && s.is_finite()) || !(a > 0.0 && a.is_finite()) {
        return Err(LerchError::domain(format!("series oracle needs s > 0 and a > 0, got s = {s}, a = {a}")));
    }
    if !(tol > 0.0) {
        return Err(LerchError::invalid(format!("tolerance must be > 0, got {tol}")));
    }
    Ok(())
}

/// Bound on `|Σ_{j ≥ J} z^j (j + a)^{-s}|` for `|z| ≤ 1`, `z ≠ 1`: the geometric
/// bound when `|z| < 1`, and the Abel-summation bound `2 c_J / |1 - z|` (the
/// coefficients decrease and the partial sums of `z^j` stay below `2/|1 - z|`).
fn tail_bound(z: ComplexScalar, s: f64, a: f64, first: usize) -> f64 {
    let c = (first as f64 + a).powf(-s);
    let r = z.norm();
    let abel = 2.0 * c / (1.0 - z).norm();
    if r < 1.0 {
        let geometric = r.powi(first.min(i32::MAX as usize) as i32) * c / (1.0 - r);
        geometric.min(abel)
    } else {
        abel
    }
}

/// `Σ_{j≥0} z^j / (j + a)^s` summed directly for `|z| ≤ 1`, `z ≠ 1`.
///
/// Practical for `|z| ≤ 0.9`; on `|z| = 1` it needs about
/// `(2 / (|1 - z| tol))^{1/s}` terms and reports no-convergence past [`MAX_TERMS`].
pub fn series_direct(z: ComplexScalar, s: f64, a: f64, tol: f64) -> Result<OracleResult> {
    check_s_a_tol(s, a, tol)?;
    if z.norm() > 1.0 || z == Complex64::new(1.0, 0.0) {
        return Err(LerchError::invalid(format!("direct series diverges for z = {z}")));
    }
    let mut sum = CompensatedSum::default();
    let mut abs_sum = 0.0;
    let mut power = Complex64::new(1.0, 0.0);
    for j in 0..MAX_TERMS {
        let term = power * (j as f64 + a).powf(-s);
        sum.add(term);
        abs_sum += term.norm();
        if z == Complex64::new(0.0, 0.0) {
            return Ok(OracleResult {
                value: sum.total(),
                method: OracleMethod::DirectSeries,
                est_accuracy: 0.0,
            });
        }
        let tail = tail_bound(z, s, a, j + 1);
        if tail < tol {
            return Ok(OracleResult {
                value: sum.total(),
                method: OracleMethod::DirectSeries,
                est_accuracy: tail + f64::EPSILON * abs_sum,
            });
        }
        power *= z;
    }
    Err(LerchError::NoConvergence(format!(
        "direct series for z = {z}, s = {s} did not reach {tol:e} within {MAX_TERMS} terms"
    )))
}

/// Accelerated sum for `Σ (-r)^j / (j + a)^s`, `0 < r ≤ 1.5`.
///
/// `c_j = (j + a)^{-s}` is a moment sequence on `[0, 1]`, so
/// `Σ (-r)^j c_j = ∫ dμ(y) / (1 + r y)`. With `P(y) = T_n(1 - 2y)` and
/// `q_k = p_k (-1/r)^k > 0` the sum is approximated by
/// `Σ_{j<n} ω_j (-r)^j c_j`, `ω_j = Σ_{k>j} q_k / T_n(1 + 2/r) ∈ (0, 1)`, with
/// relative error at most `1 / T_n(1 + 2/r)` (Cohen, Rodriguez Villegas and
/// Zagier for `r = 1`).
pub fn series_alternating(r: f64, s: f64, a: f64, tol: f64) -> Result<OracleResult> {
    check_s_a_tol(s, a, tol)?;
    if !(r > 0.0 && r <= MAX_ALTERNATING_RATIO) {
        return Err(LerchError::invalid(format!(
            "alternating oracle needs 0 < r <= {MAX_ALTERNATING_RATIO}, got {r}"
        )));
    }
    let c0 = a.powf(-s);
    let growth = (1.0 + 2.0 / r).acosh();
    let n = ((10.0 * c0 / tol).ln() / growth).ceil().max(2.0) as usize;
    let coarse = weighted_sum(r, s, a, n);
    let fine = weighted_sum(r, s, a, n + 2);
    let increment = (fine.0 - coarse.0).abs();
    let roundoff = 4.0 * f64::EPSILON * fine.1;
    let est_accuracy = (10.0 * increment).max(c0 / ((n + 2) as f64 * growth).cosh()) + roundoff;
    if 10.0 * increment > tol && 10.0 * increment > 100.0 * roundoff {
        return Err(LerchError::NoConvergence(format!(
            "accelerated series for r = {r}, s = {s}, a = {a} stalled at increment {increment:e}"
        )));
    }
    Ok(OracleResult {
        value: Complex64::new(fine.0, 0.0),
        method: OracleMethod::AcceleratedSeries,
        est_accuracy,
    })
}

/// `(Σ_{j<n} ω_j (-r)^j c_j, Σ |ω_j r^j c_j|)`
fn weighted_sum(r: f64, s: f64, a: f64, n: usize) -> (f64, f64) {
    // q_0 = 1, q_{k+1} / q_k = (n + k)(n - k) / ((2k + 1)(2k + 2)) · 4 / r
    let mut q = Vec::with_capacity(n + 1);
    q.push(1.0f64);
    for k in 0..n {
        let kf = k as f64;
        let nf = n as f64;
        let ratio = (nf + kf) * (nf - kf) / ((2.0 * kf + 1.0) * (2.0 * kf + 2.0)) * 4.0 / r;
        q.push(q[k] * ratio);
    }
    // tails[j] = Σ_{k>j} q_k, accumulated from the small end of the tail
    let mut tails = vec![0.0; n];
    let mut acc = 0.0;
    for j in (0..n).rev() {
        acc += q[j + 1];
        tails[j] = acc;
    }
    let total = acc + q[0];

    let mut sum = (0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut power = 1.0;
    for (j, tail) in tails.iter().enumerate() {
        let term = tail / total * power * (j as f64 + a).powf(-s);
        neumaier(&mut sum, term);
        abs_sum += term.abs();
        power *= -r;
    }
    (sum.0 + sum.1, abs_sum)
}
