//! EC density of the (cross) correlation random field.
//!
//! `rho_corr(i, j, t, n)` evaluates the closed-form double/triple sum for the
//! correlation field built from matrices of n i.i.d. unit Gaussian rows. All
//! gamma/factorial ratios are taken in log space and the terms are added in
//! ascending magnitude to limit cancellation; terms containing a negative
//! factorial argument are skipped. The function is symmetric in (i, j).
//!
//! Order (0,0) is the one-sided point probability P(r >= t) =
//! (1/2) P(Beta(1/2, (n-1)/2) >= t^2) for t >= 0; this is the convention that
//! makes the Student-t wrapper reproduce the one-sided t tail exactly.

use crate::error::{Error, Result};
use crate::specfun::{log_factorial, log_gamma_half, reg_inc_beta};

/// EC density rho^C_{ij}(t) of the correlation field with n rows.
///
/// Requires n > i + j and |t| < 1. Negative t is the analytic continuation
/// used by the t-field wrapper for thresholds below zero.
pub fn rho_corr(i: usize, j: usize, t: f64, n: u32) -> Result<f64> {
    let n_us = n as usize;
    if n_us <= i + j {
        return Err(Error::domain(format!(
            "correlation EC density undefined: need n > i + j, got n={n}, i={i}, j={j}"
        )));
    }
    if !(-1.0 < t && t < 1.0) {
        return Err(Error::domain(format!(
            "correlation threshold must satisfy |t| < 1, got {t}"
        )));
    }
    if i == 0 && j == 0 {
        let beta_upper = 1.0 - reg_inc_beta(t * t, 0.5, (n as f64 - 1.0) / 2.0)?.get();
        return Ok(if t >= 0.0 {
            0.5 * beta_upper
        } else {
            1.0 - 0.5 * beta_upper
        });
    }
    // the triple sum below needs its first index positive
    let (i, j) = if i == 0 { (j, i) } else { (i, j) };
    let (ii, jj, nn) = (i as i64, j as i64, n as i64);
    let h = ii + jj;

    let ln_pref = (nn - 2 - h) as f64 * std::f64::consts::LN_2
        + log_factorial(ii - 1)
        + log_factorial(jj)
        - (h as f64 / 2.0 + 1.0) * std::f64::consts::PI.ln();

    let ln_abs_t = if t == 0.0 { f64::NEG_INFINITY } else { t.abs().ln() };
    let ln_one_minus_t2 = (-t * t).ln_1p();

    let mut terms: Vec<(f64, f64)> = Vec::new(); // (sign, log magnitude)
    for k in 0..=((h - 1) / 2) {
        let e1 = h - 1 - 2 * k; // exponent of t
        if t == 0.0 && e1 > 0 {
            continue;
        }
        for l in 0..=k {
            for m in 0..=k {
                if k - l - m < 0 {
                    continue;
                }
                let f1 = ii - 1 - k - l + m;
                let f2 = jj - k - m + l;
                if f1 < 0 || f2 < 0 {
                    continue; // negative factorials are ignored
                }
                let ln_mag = ln_pref
                    + log_gamma_half(nn - ii + 2 * l)
                    + log_gamma_half(nn - jj + 2 * m)
                    - log_factorial(l)
                    - log_factorial(m)
                    - log_factorial(k - l - m)
                    - log_factorial(nn - 1 - h + l + m + k)
                    - log_factorial(f1)
                    - log_factorial(f2)
                    + e1 as f64 * ln_abs_t
                    + (nn - 1 - h + 2 * k) as f64 / 2.0 * ln_one_minus_t2;
                let mut sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                if t < 0.0 && e1 % 2 == 1 {
                    sign = -sign;
                }
                if e1 == 0 {
                    // t^0 = 1 even at t = 0
                    terms.push((sign, ln_mag - e1 as f64 * ln_abs_t));
                } else {
                    terms.push((sign, ln_mag));
                }
            }
        }
    }

    terms.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut sum = 0.0;
    for (sign, ln_mag) in terms {
        sum += sign * ln_mag.exp();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-30)
    }

    #[test]
    fn order_zero_is_half_at_zero() {
        for n in [4, 12, 34, 1000] {
            assert!((rho_corr(0, 0, 0.0, n).unwrap() - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn order_zero_sign_extension() {
        let up = rho_corr(0, 0, 0.3, 12).unwrap();
        let down = rho_corr(0, 0, -0.3, 12).unwrap();
        assert!((up + down - 1.0).abs() < 1e-14);
        assert!(close(up, 0.15965773623927967, 1e-12));
    }

    #[test]
    fn symmetric_in_indices() {
        for (i, j, t, n) in [(1, 2, 0.3, 20), (2, 3, 0.6, 34), (1, 3, -0.45, 16), (0, 2, 0.7, 9)] {
            let a = rho_corr(i, j, t, n).unwrap();
            let b = rho_corr(j, i, t, n).unwrap();
            assert!(close(a, b, 1e-12), "rho({i},{j}) = {a} vs rho({j},{i}) = {b}");
        }
    }

    #[test]
    fn frozen_reference_values() {
        // cross-checked against an independent prototype of the same formula
        // and, through the t-field map, against the closed-form t EC densities
        let cases = [
            (1, 2, 0.3, 20, 0.00738521411985912),
            (2, 3, 0.6, 34, 0.0005600295181389524),
            (0, 3, 0.45, 16, 0.013277674906231619),
        ];
        for (i, j, t, n, want) in cases {
            let got = rho_corr(i, j, t, n).unwrap();
            assert!(close(got, want, 1e-11), "rho_corr({i},{j},{t},{n}) = {got}, want {want}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(rho_corr(2, 2, 0.5, 4).is_err()); // n <= i + j
        assert!(rho_corr(1, 0, 1.0, 10).is_err());
        assert!(rho_corr(1, 0, -1.2, 10).is_err());
    }

    #[test]
    fn large_n_stays_finite() {
        // the log-space evaluation must survive n = 10^4 (documented accuracy target)
        let v = rho_corr(2, 3, 0.02, 10_000).unwrap();
        assert!(v.is_finite());
        let v = rho_corr(1, 1, 0.05, 10_000).unwrap();
        assert!(v.is_finite());
    }
}
