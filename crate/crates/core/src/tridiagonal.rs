//! Symmetric tridiagonal eigenproblem by implicit-shift QL.
//!
//! Only the first row of the eigenvector matrix is accumulated, which is all
//! the Golub-Welsch construction needs.

use crate::error::{LerchError, Result};

const MAX_SWEEPS: usize = 60;

#[derive(Debug, Clone)]
pub struct TridiagonalEigen {
    /// Eigenvalues, ascending.
    pub values: Vec<f64>,
    /// First component of each normalized eigenvector, aligned with `values`.
    /// Signs are arbitrary.
    pub first_components: Vec<f64>,
}

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `offdiag` (`offdiag.len() == diag.len() - 1`).
pub fn symmetric_tridiagonal_eigen(diag: &[f64], offdiag: &[f64]) -> Result<TridiagonalEigen> {
    let n = diag.len();
    if n == 0 {
        return Err(LerchError::invalid("empty tridiagonal matrix"));
    }
    if offdiag.len() + 1 != n {
        return Err(LerchError::invalid(format!(
            "off-diagonal has length {}, expected {}",
            offdiag.len(),
            n - 1
        )));
    }

    let mut d = diag.to_vec();
    // e[i] couples rows i and i + 1; e[n - 1] is scratch.
    let mut e = offdiag.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(LerchError::EigenNoConvergence {
                    index: l,
                    iterations: MAX_SWEEPS,
                });
            }

            // Wilkinson-type shift from the leading 2x2 block
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;

            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // underflow: split the matrix and restart this block
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    Ok(TridiagonalEigen {
        values: order.iter().map(|&i| d[i]).collect(),
        first_components: order.iter().map(|&i| z[i]).collect(),
    })
}
