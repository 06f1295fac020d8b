//! Integral geometry: sphere surface measures and intrinsic volumes, the
//! product formula, boxes, the ball short-cut for lower Lipschitz-Killing
//! curvatures, and scale-space LKCs of `S x [w1, w2]`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::log_gamma;

/// A search region described purely by its Lipschitz-Killing curvatures
/// `L_0..L_N`. `L_i` carries units of (variogram-metric length)^i; for an
/// isotropic unit-variance-derivative field these are the intrinsic volumes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRegion {
    pub dim: usize,
    pub lkc: Vec<f64>,
}

impl SearchRegion {
    pub fn new(lkc: Vec<f64>) -> Result<Self> {
        if lkc.is_empty() {
            return Err(Error::domain("LKC vector must contain at least L_0"));
        }
        if lkc.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("LKC vector must be finite"));
        }
        Ok(SearchRegion {
            dim: lkc.len() - 1,
            lkc,
        })
    }

    /// A single point: L = (1).
    pub fn point() -> Self {
        SearchRegion {
            dim: 0,
            lkc: vec![1.0],
        }
    }

    /// Scale every curvature by `c^{i/2}`, converting Euclidean intrinsic
    /// volumes into LKCs of a field with derivative variance `c I`.
    pub fn scaled_by_derivative_variance(&self, c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::domain(format!("derivative variance must be > 0, got {c}")));
        }
        let lkc = self
            .lkc
            .iter()
            .enumerate()
            .map(|(i, v)| v * c.powf(i as f64 / 2.0))
            .collect();
        SearchRegion::new(lkc)
    }
}

/// Intrinsic volumes (mu_0 .. mu_{d-1}) of the unit sphere in R^d; mu_d = 0
/// is omitted. Entries with d-1-j odd vanish exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereIV {
    pub d: usize,
    pub values: Vec<f64>,
}

impl SphereIV {
    pub fn value(&self, j: usize) -> f64 {
        self.values.get(j).copied().unwrap_or(0.0)
    }
}

/// Lebesgue measure of the unit (k-1)-sphere in R^k: a_k = 2 pi^{k/2} / Gamma(k/2).
pub fn sphere_measure(k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::domain("sphere_measure requires k >= 1"));
    }
    let k = k as f64;
    Ok(2.0 * (0.5 * k * PI.ln() - log_gamma(k / 2.0)?).exp())
}

fn log_binomial(n: usize, k: usize) -> f64 {
    crate::specfun::log_factorial(n as i64)
        - crate::specfun::log_factorial(k as i64)
        - crate::specfun::log_factorial((n - k) as i64)
}

/// mu_j(U_d) = 2 C(d-1, j) a_d / a_{d-j} when d-1-j is even, else 0.
pub fn sphere_intrinsic_volumes(d: usize) -> Result<SphereIV> {
    if d < 1 {
        return Err(Error::domain("sphere_intrinsic_volumes requires d >= 1"));
    }
    let mut values = Vec::with_capacity(d);
    for j in 0..d {
        if (d - 1 - j) % 2 != 0 {
            values.push(0.0);
            continue;
        }
        let log_ratio = 0.5 * (j as f64) * PI.ln() + log_gamma((d - j) as f64 / 2.0)?
            - log_gamma(d as f64 / 2.0)?;
        values.push(2.0 * (log_binomial(d - 1, j) + log_ratio).exp());
    }
    Ok(SphereIV { d, values })
}

/// Intrinsic volumes of a product set: mu_k(A x B) = sum_i mu_i(A) mu_{k-i}(B).
pub fn product_intrinsic_volumes(a: &SearchRegion, b: &SearchRegion) -> SearchRegion {
    let dim = a.dim + b.dim;
    let mut lkc = vec![0.0; dim + 1];
    for (i, ai) in a.lkc.iter().enumerate() {
        for (j, bj) in b.lkc.iter().enumerate() {
            lkc[i + j] += ai * bj;
        }
    }
    SearchRegion { dim, lkc }
}

/// A rectangular box with the given side lengths; the LKCs are the elementary
/// symmetric polynomials of the sides. An empty list yields the point region.
pub fn box_region(sides: &[f64]) -> Result<SearchRegion> {
    if sides.iter().any(|&s| !(s > 0.0)) {
        return Err(Error::domain("box sides must be positive"));
    }
    let mut lkc = vec![1.0];
    for &s in sides {
        lkc.push(0.0);
        for i in (1..lkc.len()).rev() {
            lkc[i] += s * lkc[i - 1];
        }
    }
    SearchRegion::new(lkc)
}

/// The ball short-cut: lower LKCs of a ball whose top LKC matches `top_lkc`.
///
/// N=3: radius r = (3 L_3 / 4 pi)^{1/3}, region (1, 4r, 2 pi r^2, L_3).
/// N=2: radius r = (L_2 / pi)^{1/2}, region (1, pi r, L_2).
/// N=1: the interval (1, L_1).
pub fn ball_region(n_dim: usize, top_lkc: f64) -> Result<SearchRegion> {
    if !(top_lkc > 0.0) {
        return Err(Error::domain(format!(
            "ball_region requires a positive top LKC, got {top_lkc}"
        )));
    }
    let lkc = match n_dim {
        1 => vec![1.0, top_lkc],
        2 => {
            let r = (top_lkc / PI).sqrt();
            vec![1.0, PI * r, top_lkc]
        }
        3 => {
            let r = (3.0 * top_lkc / (4.0 * PI)).cbrt();
            vec![1.0, 4.0 * r, 2.0 * PI * r * r, top_lkc]
        }
        _ => {
            return Err(Error::unsupported(format!(
                "ball_region supports N in {{1,2,3}}, got {n_dim}"
            )))
        }
    };
    SearchRegion::new(lkc)
}

fn small_factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// The w-interval weight (w1^{-x} - w2^{-x}) / x, extended by its limit
/// log(w2/w1) at x = 0.
fn scale_weight(w1: f64, w2: f64, x: i64) -> f64 {
    if x == 0 {
        (w2 / w1).ln()
    } else {
        let x = x as f64;
        (w1.powf(-x) - w2.powf(-x)) / x
    }
}

/// Coefficient kappa^{(1-2j)/2} (-1)^j m! / ((1-2j) (4 pi)^j j! (m-2j)!...) shared by
/// the scale-space density and LKC expansions; `m_fact_num` and `m_fact_den`
/// are the factorial arguments of the numerator and denominator.
fn kappa_coef(kappa: f64, j: usize, m_num: usize, m_den: usize) -> f64 {
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    kappa.powf((1.0 - 2.0 * j as f64) / 2.0) * sign * small_factorial(m_num)
        / ((1.0 - 2.0 * j as f64)
            * (4.0 * PI).powi(j as i32)
            * small_factorial(j)
            * small_factorial(m_den))
}

/// LKCs of the scale-space search region `S x [w1, w2]` for a filter with
/// log-scale derivative variance `kappa`: dimension N+1, L_0 = mu_0(S),
/// and for i >= 1
///
/// L_i = (w1^{-i} + w2^{-i})/2 mu_i(S)
///     + sum_j [(w1^{-(i+2j-1)} - w2^{-(i+2j-1)})/(i+2j-1)]
///       kappa^{(1-2j)/2} (-1)^j (i+2j-1)! / ((1-2j)(4 pi)^j j! (i-1)!) mu_{i+2j-1}(S),
///
/// the i+2j-1 = 0 weight taken as log(w2/w1).
pub fn scale_space_lkc(s: &SearchRegion, w1: f64, w2: f64, kappa: f64) -> Result<SearchRegion> {
    if !(w1 > 0.0) || !(w2 > 0.0) || w1 > w2 {
        return Err(Error::domain(format!(
            "scale interval requires 0 < w1 <= w2, got [{w1}, {w2}]"
        )));
    }
    if !(kappa > 0.0) {
        return Err(Error::domain(format!("kappa must be positive, got {kappa}")));
    }
    let n = s.dim;
    let mu = |i: usize| -> f64 {
        if i <= n {
            s.lkc[i]
        } else {
            0.0
        }
    };
    let mut lkc = vec![mu(0)];
    for i in 1..=n + 1 {
        let fi = i as f64;
        let mut l = (w1.powf(-fi) + w2.powf(-fi)) / 2.0 * mu(i);
        let jmax = (n + 1 - i) / 2;
        for j in 0..=jmax {
            let idx = i + 2 * j - 1;
            if idx > n {
                continue;
            }
            l += scale_weight(w1, w2, idx as i64) * kappa_coef(kappa, j, idx, i - 1) * mu(idx);
        }
        lkc.push(l);
    }
    SearchRegion::new(lkc)
}

/// Coefficients of the scale-space EC density expansion of order `i`:
/// returns (first-term weight, [(rho order, weight)] for the correction sum),
/// so rho^S_i(t) = first * rho_i(t) + sum_k w_k rho_{o_k}(t).
pub(crate) fn scale_space_density_weights(
    i: usize,
    w1: f64,
    w2: f64,
    kappa: f64,
) -> Result<(f64, Vec<(usize, f64)>)> {
    if !(w1 > 0.0) || !(w2 > 0.0) || w1 > w2 {
        return Err(Error::domain(format!(
            "scale interval requires 0 < w1 <= w2, got [{w1}, {w2}]"
        )));
    }
    if !(kappa > 0.0) {
        return Err(Error::domain(format!("kappa must be positive, got {kappa}")));
    }
    let fi = i as f64;
    let first = (w1.powf(-fi) + w2.powf(-fi)) / 2.0;
    let xfac = scale_weight(w1, w2, i as i64);
    let mut terms = Vec::new();
    for j in 0..=(i / 2) {
        terms.push((i + 1 - 2 * j, xfac * kappa_coef(kappa, j, i, i - 2 * j)));
    }
    Ok((first, terms))
}
