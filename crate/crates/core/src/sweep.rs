//! Error against a reference as the rule order grows.

use crate::error::{LerchError, Result};
use crate::error_model::{big_e_n, epsilon_n, gn_threshold, kz, solve_kn, LerchParams, DEFAULT_SAFETY};
use crate::lerch::integral_sum;
use crate::oracle::{reference, STRICT_TOL};
use crate::quadrature::{gauss_laguerre, N_MAX};
use num_complex::Complex64;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub n: usize,
    /// Nodes kept by the truncation rule at this `n`.
    pub kn: usize,
    pub err_full: f64,
    /// Error of the first `kn` nodes, when requested.
    pub err_trunc: Option<f64>,
    /// `𝓔_n` at `m = n + s/2`.
    pub estimate: f64,
}

pub const CSV_HEADER: [&str; 5] = ["n", "k_n", "err_full", "err_trunc", "estimate"];

impl SweepPoint {
    pub fn csv_fields(&self) -> Vec<String> {
        use crate::output::format_real as f;
        vec![
            self.n.to_string(),
            self.kn.to_string(),
            f(self.err_full),
            self.err_trunc.map(f).unwrap_or_default(),
            f(self.estimate),
        ]
    }
}

/// `k_n` for a rule of order `n` whose own estimate `ε_n` is the target.
pub fn truncation_kn(params: &LerchParams, n: usize) -> Result<usize> {
    let m = n as f64 + params.s() / 2.0;
    let eps = epsilon_n(params, m)?;
    let gn = gn_threshold(params.s(), eps, kz(params.z())?);
    Ok(solve_kn(m, n, gn, DEFAULT_SAFETY))
}

/// One point per `n` in `n_min..=n_max`, in order.
pub fn sweep(params: &LerchParams, n_min: usize, n_max: usize, truncated: bool) -> Result<Vec<SweepPoint>> {
    if n_min < 1 || n_min > n_max || n_max > N_MAX {
        return Err(LerchError::invalid(format!(
            "sweep range {n_min}..={n_max} must satisfy 1 <= n_min <= n_max <= {N_MAX}"
        )));
    }
    let (z, s, a) = (params.z(), params.s(), params.a());
    if z == Complex64::new(0.0, 0.0) {
        return Ok((n_min..=n_max)
            .map(|n| SweepPoint {
                n,
                kn: 0,
                err_full: 0.0,
                err_trunc: truncated.then_some(0.0),
                estimate: 0.0,
            })
            .collect());
    }
    let exact = reference(z, s, a, STRICT_TOL)?.value;
    let norm = params.normalization();
    (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let rule = gauss_laguerre(s - 1.0, n)?;
            let err_full = (integral_sum(params, &rule) / norm - exact).norm();
            let kn = truncation_kn(params, n)?;
            let err_trunc = if truncated {
                Some((integral_sum(params, &rule.prefix(kn)?) / norm - exact).norm())
            } else {
                None
            };
            Ok(SweepPoint {
                n,
                kn,
                err_full,
                err_trunc,
                estimate: big_e_n(params, n as f64 + s / 2.0)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument_is_exact() {
        let p = LerchParams::new(Complex64::new(0.0, 0.0), 1.5, 2.0).unwrap();
        let pts = sweep(&p, 1, 5, true).unwrap();
        assert_eq!(pts.len(), 5);
        assert!(pts.iter().all(|q| q.err_full == 0.0 && q.err_trunc == Some(0.0)));
    }

    #[test]
    fn error_decreases_and_truncation_is_cheap() {
        let p = LerchParams::new(Complex64::new(-1.0, 0.0), 1.0, 1.0).unwrap();
        let pts = sweep(&p, 5, 40, true).unwrap();
        assert!(pts.last().unwrap().err_full < 1e-12);
        assert!(pts.last().unwrap().err_trunc.unwrap() < 1e-12);
        assert!(pts.last().unwrap().kn < 40);
        assert!(pts.iter().all(|q| q.kn <= q.n));
    }

    #[test]
    fn rejects_bad_range() {
        let p = LerchParams::new(Complex64::new(-1.0, 0.0), 1.0, 1.0).unwrap();
        assert!(sweep(&p, 0, 5, false).is_err());
        assert!(sweep(&p, 6, 5, false).is_err());
    }
}
