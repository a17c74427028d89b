//! Generalized Gauss-Laguerre rules for the weight `t^α e^{-t}` on `[0, ∞)`.
//!
//! Golub-Welsch: the nodes are the eigenvalues of the symmetric Jacobi matrix of
//! the generalized Laguerre recurrence. Each eigenvalue is polished by Newton on
//! the three-term recurrence run in double-double arithmetic, and the weight is
//! the Christoffel form `Γ(α + 1) / Σ_k L_k(x)² / h_k` (`h_k` the squared norms
//! relative to `h_0`) from that same recurrence. This is the first eigenvector
//! component of the Jacobi matrix, but it keeps full relative accuracy at the
//! small nodes and for weights far below machine epsilon (the recurrence runs
//! with a running exponent so nothing overflows at large nodes).

use crate::error::{LerchError, Result};
use crate::gamma::{gamma, ln_gamma};
use crate::tridiagonal::symmetric_tridiagonal_eigen;

/// Largest rule order accepted by [`gauss_laguerre`].
pub const N_MAX: usize = 5000;


/// Nodes and weights of an `n`-point generalized Gauss-Laguerre rule, or of
/// the first `k` nodes of one (see [`gauss_laguerre_truncated`]).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    alpha: f64,
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Order `n` of the underlying full rule.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Ascending nodes.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Weights aligned with [`nodes`](Self::nodes). Weights smaller than the
    /// smallest subnormal `f64` come out as `0.0`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of nodes held (`order()` unless truncated).
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.nodes.len() < self.order
    }

    /// `(node, weight)` pairs in ascending node order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// The first `k` nodes and weights.
    pub fn prefix(&self, k: usize) -> Result<QuadratureRule> {
        if k == 0 || k > self.len() {
            return Err(LerchError::invalid(format!(
                "prefix length {k} outside 1..={}",
                self.len()
            )));
        }
        Ok(QuadratureRule {
            alpha: self.alpha,
            order: self.order,
            nodes: self.nodes[..k].to_vec(),
            weights: self.weights[..k].to_vec(),
        })
    }
}

fn check_alpha_n(alpha: f64, n: usize) -> Result<()> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(LerchError::invalid(format!("alpha must be finite and > -1, got {alpha}")));
    }
    if n < 1 {
        return Err(LerchError::invalid("rule order n must be at least 1"));
    }
    Ok(())
}

/// Symmetrized Jacobi matrix of the generalized Laguerre polynomials:
/// `diag[k] = 2k + α + 1`, `offdiag[k] = sqrt((k + 1)(k + 1 + α))`.
pub fn recurrence_coefficients(alpha: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    check_alpha_n(alpha, n)?;
    let diag = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let offdiag = (1..n)
        .map(|k| {
            let k = k as f64;
            (k * (k + alpha)).sqrt()
        })
        .collect();
    Ok((diag, offdiag))
}

/// Unnormalized double-double value `hi + lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let v = s - a;
    Dd {
        hi: s,
        lo: (a - (s - v)) + (b - v),
    }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    fn add(self, b: Dd) -> Dd {
        let s = two_sum(self.hi, b.hi);
        quick_two_sum(s.hi, s.lo + self.lo + b.lo)
    }

    fn sub(self, b: Dd) -> Dd {
        self.add(Dd { hi: -b.hi, lo: -b.lo })
    }

    fn mul(self, b: Dd) -> Dd {
        let p = self.hi * b.hi;
        let e = self.hi.mul_add(b.hi, -p);
        quick_two_sum(p, e + self.hi * b.lo + self.lo * b.hi)
    }

    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self.sub(b.mul(Dd { hi: q1, lo: 0.0 }));
        quick_two_sum(q1, r.hi / b.hi)
    }

    fn scale(self, f: f64) -> Dd {
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }
}

const RESCALE_EXP: i32 = 450;

/// Classical Laguerre recurrence at one point, in double-double.
struct RecurrenceAt {
    /// `L_n(x)` and `L_n'(x)`, in the running scale
    value: Dd,
    derivative: Dd,
    /// `Σ_{k<n} L_k(x)² / h_k` with `h_k = Π_{j≤k} (j + α)/j`, in the running scale squared
    sum_squares: Dd,
    /// true quantity = stored · 2^{log2_scale} (sum_squares: 2^{2 log2_scale})
    log2_scale: i32,
}

fn laguerre_recurrence(alpha: f64, n: usize, x: f64) -> RecurrenceAt {
    let x = Dd { hi: x, lo: 0.0 };
    let (mut l_prev, mut l) = (Dd::ZERO, Dd::ONE);
    let (mut dl_prev, mut dl) = (Dd::ZERO, Dd::ZERO);
    let mut norm = Dd::ONE;
    let mut sum_squares = Dd::ONE;
    let mut log2_scale = 0;
    let down = 2f64.powi(-RESCALE_EXP);
    for k in 0..n {
        let kf = k as f64;
        let c = two_sum(2.0 * kf + 1.0, alpha).sub(x);
        let b = two_sum(kf, alpha);
        let denom = Dd { hi: kf + 1.0, lo: 0.0 };
        let l_next = c.mul(l).sub(b.mul(l_prev)).div(denom);
        let dl_next = c.mul(dl).sub(l).sub(b.mul(dl_prev)).div(denom);
        l_prev = l;
        l = l_next;
        dl_prev = dl;
        dl = dl_next;
        if k + 1 < n {
            norm = norm.mul(two_sum(kf + 1.0, alpha)).div(denom);
            sum_squares = sum_squares.add(l.mul(l).div(norm));
        }
        if l.hi.abs() > 1e140 || dl.hi.abs() > 1e140 {
            l = l.scale(down);
            l_prev = l_prev.scale(down);
            dl = dl.scale(down);
            dl_prev = dl_prev.scale(down);
            sum_squares = sum_squares.scale(down).scale(down);
            log2_scale += RESCALE_EXP;
        }
    }
    RecurrenceAt {
        value: l,
        derivative: dl,
        sum_squares,
        log2_scale,
    }
}

fn polish_node(alpha: f64, n: usize, x0: f64, max_step: f64) -> f64 {
    let mut x = x0;
    for _ in 0..6 {
        let r = laguerre_recurrence(alpha, n, x);
        if r.derivative.hi == 0.0 || !r.derivative.hi.is_finite() {
            break;
        }
        let step = r.value.div(r.derivative).hi;
        let next = x - step;
        if !next.is_finite() || (next - x0).abs() > max_step {
            return x0;
        }
        x = next;
        if step.abs() <= 0.5 * f64::EPSILON * x.abs() {
            break;
        }
    }
    x
}

/// The `n`-point generalized Gauss-Laguerre rule for `t^α e^{-t}`.
pub fn gauss_laguerre(alpha: f64, n: usize) -> Result<QuadratureRule> {
    build_rule(alpha, n, n)
}

// Nodes are polished independently, so building only the first `k` gives the
// same bits as truncating the full rule.
fn build_rule(alpha: f64, n: usize, k: usize) -> Result<QuadratureRule> {
    check_alpha_n(alpha, n)?;
    if n > N_MAX {
        return Err(LerchError::invalid(format!("rule order {n} exceeds N_MAX = {N_MAX}")));
    }
    let (diag, offdiag) = recurrence_coefficients(alpha, n)?;
    let eig = symmetric_tridiagonal_eigen(&diag, &offdiag)?;
    let raw = eig.values;

    let gamma0 = gamma(alpha + 1.0);
    let ln_gamma0 = ln_gamma(alpha + 1.0);
    let mut nodes = Vec::with_capacity(k);
    let mut weights = Vec::with_capacity(k);
    for (i, &x0) in raw.iter().enumerate().take(k) {
        let gap_left = if i > 0 { x0 - raw[i - 1] } else { x0 };
        let gap_right = if i + 1 < n { raw[i + 1] - x0 } else { f64::INFINITY };
        let max_step = 0.25 * gap_left.min(gap_right);
        let x = polish_node(alpha, n, x0, max_step);
        let r = laguerre_recurrence(alpha, n, x);
        let w = if r.log2_scale == 0 && gamma0.is_finite() {
            Dd { hi: gamma0, lo: 0.0 }.div(r.sum_squares).hi
        } else {
            let log_sum = r.sum_squares.hi.ln() + 2.0 * r.log2_scale as f64 * std::f64::consts::LN_2;
            (ln_gamma0 - log_sum).exp()
        };
        nodes.push(x);
        weights.push(w);
    }

    if nodes[0] <= 0.0 {
        return Err(LerchError::NonMonotonicNodes { index: 0 });
    }
    if let Some(i) = nodes.windows(2).position(|w| w[1] <= w[0]) {
        return Err(LerchError::NonMonotonicNodes { index: i + 1 });
    }

    Ok(QuadratureRule {
        alpha,
        order: n,
        nodes,
        weights,
    })
}

/// The `k` smallest nodes of the `n`-point rule and their weights, bit-identical
/// to the first `k` entries of `gauss_laguerre(alpha, n)`.
pub fn gauss_laguerre_truncated(alpha: f64, n: usize, k: usize) -> Result<QuadratureRule> {
    if k < 1 || k > n {
        return Err(LerchError::invalid(format!("truncation k = {k} outside 1..={n}")));
    }
    build_rule(alpha, n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tridiagonal::symmetric_tridiagonal_eigen;

    #[test]
    fn recurrence_examples() {
        let (d, e) = recurrence_coefficients(0.0, 1).unwrap();
        assert_eq!((d, e), (vec![1.0], vec![]));
        let (d, e) = recurrence_coefficients(0.0, 2).unwrap();
        assert_eq!(d, vec![1.0, 3.0]);
        assert_eq!(e, vec![1.0]);
        let (d, e) = recurrence_coefficients(0.5, 2).unwrap();
        assert_eq!(d, vec![1.5, 3.5]);
        assert_eq!(e, vec![1.5f64.sqrt()]);
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(recurrence_coefficients(-1.0, 3), Err(LerchError::InvalidParameter(_))));
        assert!(matches!(recurrence_coefficients(0.0, 0), Err(LerchError::InvalidParameter(_))));
        assert!(gauss_laguerre(-1.5, 3).is_err());
        assert!(gauss_laguerre(f64::NAN, 3).is_err());
        assert!(gauss_laguerre(0.0, N_MAX + 1).is_err());
        assert!(gauss_laguerre_truncated(0.0, 5, 0).is_err());
        assert!(gauss_laguerre_truncated(0.0, 5, 6).is_err());
    }

    #[test]
    fn one_point_rules() {
        let r = gauss_laguerre(0.0, 1).unwrap();
        assert_eq!(r.nodes(), &[1.0]);
        assert!((r.weights()[0] - 1.0).abs() < 1e-15);
        let r = gauss_laguerre(1.0, 1).unwrap();
        assert_eq!(r.nodes(), &[2.0]);
        assert!((r.weights()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_point_rule_closed_form() {
        let s2 = 2f64.sqrt();
        let r = gauss_laguerre(0.0, 2).unwrap();
        let exact_nodes = [2.0 - s2, 2.0 + s2];
        let exact_weights = [(2.0 + s2) / 4.0, (2.0 - s2) / 4.0];
        for i in 0..2 {
            assert!((r.nodes()[i] - exact_nodes[i]).abs() < 1e-15);
            assert!((r.weights()[i] - exact_weights[i]).abs() < 1e-15);
        }
        let t = gauss_laguerre_truncated(0.0, 2, 1).unwrap();
        assert_eq!(t.nodes(), &r.nodes()[..1]);
        assert_eq!(t.weights(), &r.weights()[..1]);
        assert!(t.is_truncated());
    }

    #[test]
    fn full_truncation_is_identity() {
        let full = gauss_laguerre(0.0, 5).unwrap();
        let t = gauss_laguerre_truncated(0.0, 5, 5).unwrap();
        assert_eq!(full, t);
    }

    #[test]
    fn table_one_prefix_size() {
        let t = gauss_laguerre_truncated(0.5, 44, 27).unwrap();
        assert_eq!(t.len(), 27);
        assert_eq!(t.order(), 44);
        assert!(t.nodes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weights_agree_with_ql_first_components() {
        for &(alpha, n) in &[(0.0, 10), (-0.5, 30), (3.0, 25), (0.5, 60)] {
            let rule = gauss_laguerre(alpha, n).unwrap();
            let (d, e) = recurrence_coefficients(alpha, n).unwrap();
            let eig = symmetric_tridiagonal_eigen(&d, &e).unwrap();
            let g = gamma(alpha + 1.0);
            for i in 0..n {
                assert!((rule.nodes()[i] - eig.values[i]).abs() < 1e-12 * eig.values[n - 1]);
                let w_ql = g * eig.first_components[i].powi(2);
                assert!((rule.weights()[i] - w_ql).abs() < 1e-13 * g, "alpha {alpha} n {n} i {i}");
            }
        }
    }

    #[test]
    fn zeroth_moment() {
        for &alpha in &[-0.8, -0.5, 0.0, 0.5, 3.0, 4.0] {
            for n in [1, 2, 7, 33, 120] {
                let r = gauss_laguerre(alpha, n).unwrap();
                let total: f64 = r.weights().iter().sum();
                let g = gamma(alpha + 1.0);
                assert!(((total - g) / g).abs() < 1e-12, "alpha {alpha} n {n}");
            }
        }
    }

    #[test]
    fn large_order_stays_monotone() {
        let r = gauss_laguerre(-0.99, 700).unwrap();
        assert!(r.nodes()[0] > 0.0);
        assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
        assert!(r.weights().iter().all(|&w| w >= 0.0));
    }
}
