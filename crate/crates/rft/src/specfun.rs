//! Special functions backing the EC density formulas: log-gamma, Gaussian
//! tail, regularized incomplete beta and the F/Student tails built on it.
//!
//! Everything is computed in log space where gamma ratios appear; the
//! incomplete beta uses Lentz's continued fraction with the usual symmetry
//! switch at x > (a+1)/(a+b+2), which stays stable for the large half-integer
//! `b` arising from correlation-field degrees of freedom.

use crate::error::{Error, Result};

/// A probability value, guaranteed in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::numeric(format!("probability {value} outside [0,1]")));
        }
        Ok(Probability(value))
    }

    /// Clamp tiny negative / above-one excursions from floating point noise.
    fn clamped(value: f64) -> Self {
        Probability(value.clamp(0.0, 1.0))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey). Relative error of
// ln-gamma is below 1e-14 on the positive axis.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_unchecked(x))
}

fn log_gamma_unchecked(x: f64) -> f64 {
    let z = x - 1.0;
    let mut series = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

/// ln Γ of a half-integer argument given as `two_x / 2`; avoids drift when the
/// same argument is reconstructed from integers in long summations.
pub(crate) fn log_gamma_half(two_x: i64) -> f64 {
    debug_assert!(two_x > 0);
    log_gamma_unchecked(two_x as f64 / 2.0)
}

/// ln k! for k >= 0.
pub(crate) fn log_factorial(k: i64) -> f64 {
    debug_assert!(k >= 0);
    log_gamma_unchecked(k as f64 + 1.0)
}

// erf by Taylor series; accurate and fast for |x| <= 2.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for n in 1..200 {
        let n = n as f64;
        term *= -x2 / n;
        let add = term / (2.0 * n + 1.0);
        sum += add;
        if add.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum * 2.0 / std::f64::consts::PI.sqrt()
}

// erfc by the Laplace continued fraction (modified Lentz), for x >= 2:
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
fn erfc_cf(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / x;
    let mut h = d;
    for k in 1..300 {
        let a = k as f64 / 2.0;
        d = 1.0 / (x + a * d);
        c = x + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-17 {
            break;
        }
    }
    (-x * x).exp() / std::f64::consts::PI.sqrt() * h
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        2.0 - erfc(-x)
    } else if x < 2.0 {
        1.0 - erf_series(x)
    } else if x > 27.0 {
        // exp(-729) underflows; the CF would return subnormal noise
        0.0
    } else {
        erfc_cf(x)
    }
}

/// Upper tail of the standard normal, P(Z >= t).
pub fn gaussian_upper_tail(t: f64) -> Probability {
    if t.is_nan() {
        return Probability(f64::NAN);
    }
    if t == f64::INFINITY {
        return Probability(0.0);
    }
    if t == f64::NEG_INFINITY {
        return Probability(1.0);
    }
    Probability::clamped(0.5 * erfc(t / std::f64::consts::SQRT_2))
}

/// Regularized incomplete beta I_x(a, b) (lower tail of Beta(a, b)).
pub fn reg_inc_beta(x: f64, a: f64, b: f64) -> Result<Probability> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::domain(format!(
            "reg_inc_beta requires a, b > 0, got a={a}, b={b}"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "reg_inc_beta requires x in [0,1], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(Probability(0.0));
    }
    if x == 1.0 {
        return Ok(Probability(1.0));
    }
    // front factor x^a (1-x)^b / (a B(a,b)), in logs
    let ln_front = a * x.ln() + b * (-x).ln_1p() + log_gamma_unchecked(a + b)
        - log_gamma_unchecked(a)
        - log_gamma_unchecked(b);
    let value = if x < (a + 1.0) / (a + b + 2.0) {
        (ln_front.exp() / a) * beta_cf(x, a, b)?
    } else {
        1.0 - (ln_front.exp() / b) * beta_cf(1.0 - x, b, a)?
    };
    Ok(Probability::clamped(value))
}

// Continued fraction for the incomplete beta (modified Lentz).
fn beta_cf(x: f64, a: f64, b: f64) -> Result<f64> {
    let tiny = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < tiny {
        d = tiny;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=400 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::numeric(format!(
        "incomplete beta continued fraction did not converge (x={x}, a={a}, b={b})"
    )))
}

/// Upper tail of the F distribution, P(F_{eta,nu} >= t).
pub fn f_upper_tail(t: f64, eta: u32, nu: u32) -> Result<Probability> {
    if eta == 0 || nu == 0 {
        return Err(Error::domain("F tail requires positive degrees of freedom"));
    }
    if !(t >= 0.0) {
        return Err(Error::domain(format!("F tail requires t >= 0, got {t}")));
    }
    let (eta, nu) = (eta as f64, nu as f64);
    // P(F >= t) = I_{nu/(nu + eta t)}(nu/2, eta/2)
    reg_inc_beta(nu / (nu + eta * t), nu / 2.0, eta / 2.0)
}

/// Upper tail of Student's t, P(T_nu >= t).
pub fn student_upper_tail(t: f64, nu: u32) -> Result<Probability> {
    if nu == 0 {
        return Err(Error::domain("t tail requires positive degrees of freedom"));
    }
    let nu_f = nu as f64;
    let half = reg_inc_beta(nu_f / (nu_f + t * t), nu_f / 2.0, 0.5)?.get() / 2.0;
    Ok(Probability::clamped(if t >= 0.0 { half } else { 1.0 - half }))
}
