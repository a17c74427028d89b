//! Gamma function for real and complex arguments with positive real part.
//!
//! Lanczos approximation with g = 7 and nine coefficients (Godfrey's set),
//! relative accuracy near 1e-15 on `Re x ≥ 1/2`; smaller arguments are shifted
//! up by one with `Γ(x) = Γ(x + 1) / x`.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

// ln sqrt(2π)
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_sum(y: f64) -> f64 {
    LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, &c)| acc + c / (y + (i + 1) as f64))
}

fn lanczos_sum_complex(y: Complex64) -> Complex64 {
    LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(Complex64::new(LANCZOS_COEFFS[0], 0.0), |acc, (i, &c)| {
            acc + c / (y + (i + 1) as f64)
        })
}

/// `ln Γ(x)` for `x > 0`. Returns NaN outside that range.
pub fn ln_gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x < 0.5 {
        return ln_gamma(x + 1.0) - x.ln();
    }
    let y = x - 1.0;
    let t = y + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (y + 0.5) * t.ln() - t + lanczos_sum(y).ln()
}

/// `Γ(x)` for `x > 0`; overflows to `+∞` above `x ≈ 171.6`. NaN for `x ≤ 0`.
pub fn gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x < 0.5 {
        return gamma(x + 1.0) / x;
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    if x.fract() == 0.0 {
        return (2..x as u32).fold(1.0, |acc, k| acc * k as f64);
    }
    if x >= 2.0 {
        // Γ(x) = Γ(f) f (f + 1) ... (x - 1) with f ∈ [1, 2): rounding grows with
        // the number of factors, not with ln Γ(x)
        let base = x.fract() + 1.0;
        let mut product = lanczos(base);
        let mut k = base;
        while k < x - 0.5 {
            product *= k;
            k += 1.0;
        }
        return product;
    }
    lanczos(x)
}

fn lanczos(x: f64) -> f64 {
    let y = x - 1.0;
    let t = y + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(y + 0.5) * (-t).exp() * lanczos_sum(y)
}

/// `ln Γ(z)` for `Re z > 0` (principal branch of the log of the Lanczos form).
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Complex64::new(f64::NAN, f64::NAN);
    }
    if z.re < 0.5 {
        return ln_gamma_complex(z + 1.0) - z.ln();
    }
    let y = z - 1.0;
    let t = y + LANCZOS_G + 0.5;
    (y + 0.5) * t.ln() - t + LN_SQRT_2PI + lanczos_sum_complex(y).ln()
}

/// `Γ(z)` for `Re z > 0`.
pub fn gamma_complex(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(gamma(z.re), 0.0);
    }
    ln_gamma_complex(z).exp()
}
