//! Lerch transcendent Φ(z, s, a) by the truncated generalized Gauss-Laguerre rule.
//!
//! The integral representation
//!
//! ```text
//! Φ(z, s, a) = 1/(Γ(s) a^s) ∫₀^∞ t^{s-1} e^{-t} / (1 - z e^{-t/a}) dt
//! ```
//!
//! carries the generalized Laguerre weight `t^{s-1} e^{-t}` explicitly, and the
//! remaining factor is bounded on `[0, ∞)` whenever `z ∉ [1, ∞)`. The crate sizes
//! the Laguerre rule from an a priori error estimate driven by the pole of the
//! integrand nearest the real axis, then drops the trailing nodes whose weights
//! are already below the target.
//!
//! Modules:
//!
//! * [`quadrature`]: Golub-Welsch generation of generalized Gauss-Laguerre rules.
//! * [`error_model`]: pole location, parabola parameter, integrand bound, error
//!   estimates and the sizing of `n` and `k_n`.
//! * [`lerch`]: the evaluator and the polylogarithm / Dirichlet wrappers.
//! * [`oracle`]: independent reference values (series, accelerated series,
//!   adaptive Gauss-Legendre quadrature).
//! * [`tables`], [`sweep`], [`output`]: reproducible tables, error sweeps and
//!   CSV/JSON records for the CLI.
//!
//! ```
//! use lerch::{dirichlet_eta, LN_2};
//!
//! let eta1 = dirichlet_eta(1.0, 1e-12).unwrap();
//! assert!((eta1.value.re - LN_2).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod error_model;
pub mod gamma;
pub mod lerch;
pub mod oracle;
pub mod output;
pub mod quadrature;
pub mod sweep;
pub mod tables;
pub mod tridiagonal;

pub use num_complex::Complex64;

/// Complex scalar used for `z`, poles and function values.
pub type ComplexScalar = Complex64;

pub use error::{LerchError, Result};
pub use error_model::{LerchParams, SizingPlan};
pub use lerch::{
    dirichlet_beta, dirichlet_eta, evaluate, evaluate_complex, polylog, ComplexLerchParams,
    Evaluation, Warning,
};
pub use oracle::{OracleMethod, OracleResult};
pub use quadrature::{gauss_laguerre, gauss_laguerre_truncated, QuadratureRule, N_MAX};

pub use std::f64::consts::LN_2;

/// `r e^{iτπ}` with exact values at the quarter turns, so `τ = 1` lands on the
/// negative real axis instead of `Im z ≈ 1e-16`.
pub fn polar_pi(r: f64, tau: f64) -> ComplexScalar {
    let twice = 2.0 * tau;
    if twice == twice.round() {
        let q = (twice as i64).rem_euclid(4);
        return match q {
            0 => Complex64::new(r, 0.0),
            1 => Complex64::new(0.0, r),
            2 => Complex64::new(-r, 0.0),
            _ => Complex64::new(0.0, -r),
        };
    }
    let theta = tau * std::f64::consts::PI;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Principal argument in `(-π, π]`; the negative real axis maps to `+π`
/// regardless of the sign of a zero imaginary part.
pub fn principal_arg(z: ComplexScalar) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        std::f64::consts::PI
    } else {
        z.im.atan2(z.re)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polar_quarter_turns_are_exact() {
        assert_eq!(polar_pi(2.0, 1.0), Complex64::new(-2.0, 0.0));
        assert_eq!(polar_pi(5.0, 0.5), Complex64::new(0.0, 5.0));
        assert_eq!(polar_pi(1.0, 0.0), Complex64::new(1.0, 0.0));
        let z = polar_pi(2.0, 0.25);
        assert!((z.re - 2f64.sqrt()).abs() < 1e-15 && (z.im - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn negative_zero_imaginary_part_is_on_the_upper_side() {
        assert_eq!(principal_arg(Complex64::new(-1.0, -0.0)), PI);
        assert_eq!(principal_arg(Complex64::new(-1.0, 0.0)), PI);
        assert!(principal_arg(Complex64::new(-1.0, -1e-300)) < 0.0);
    }
}
