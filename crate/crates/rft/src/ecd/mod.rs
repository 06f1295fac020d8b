//! EC densities for every supported statistic field.
//!
//! The Gaussian density is the base case; Student t comes from the
//! correlation field through r = t / sqrt(nu + t^2); chi^2, F, Hotelling's
//! T^2, Roy's maximum root and maximum multilinear forms are assembled by the
//! union-intersection principle, summing sphere intrinsic volumes against
//! shifted-order base densities. Scale space densities add the scale axis
//! correction terms.
//!
//! Sign conventions that matter downstream:
//! * `rho_roy` is twice the alternating sum over roots; callers take half.
//! * `rho_multilinear` requires the caller to apply 2^{-(D-1)}.
//! * order-0 densities are one-sided tail probabilities.

mod corr;
mod registry;

pub use corr::rho_corr;
pub use registry::{build_density, kind_names, EcDensity, ThresholdDomain};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{scale_space_density_weights, sphere_intrinsic_volumes};
use crate::specfun::gaussian_upper_tail;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Which statistic a random field carries at each point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatKind {
    Gaussian,
    T,
    Chi2,
    F,
    Hotelling,
    Roy,
    MaxCorr,
    Multilinear,
    ScaleSpaceGaussian,
    ScaleSpaceChi2,
}

/// A statistic field and its parameters. Only the fields relevant to `kind`
/// are set; `validate` enforces that.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct StatDescriptor {
    pub kind: Option<StatKind>,
    /// components (chi^2 / Hotelling / Roy d; MaxCorr target side)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    /// numerator degrees of freedom (F/Roy eta; MaxCorr reference side c)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<u32>,
    /// error degrees of freedom
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<u32>,
    /// rows of the correlation field
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// multilinear form dimensions d_1..d_D
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
}

impl StatDescriptor {
    pub fn gaussian() -> Self {
        StatDescriptor {
            kind: Some(StatKind::Gaussian),
            ..Default::default()
        }
    }
    pub fn t(nu: u32) -> Self {
        StatDescriptor {
            kind: Some(StatKind::T),
            nu: Some(nu),
            ..Default::default()
        }
    }
    pub fn chi2(d: u32) -> Self {
        StatDescriptor {
            kind: Some(StatKind::Chi2),
            d: Some(d),
            ..Default::default()
        }
    }
    pub fn f(eta: u32, nu: u32) -> Self {
        StatDescriptor {
            kind: Some(StatKind::F),
            eta: Some(eta),
            nu: Some(nu),
            ..Default::default()
        }
    }
    pub fn hotelling(d: u32, nu: u32) -> Self {
        StatDescriptor {
            kind: Some(StatKind::Hotelling),
            d: Some(d),
            nu: Some(nu),
            ..Default::default()
        }
    }
    pub fn roy(d: u32, eta: u32, nu: u32) -> Self {
        StatDescriptor {
            kind: Some(StatKind::Roy),
            d: Some(d),
            eta: Some(eta),
            nu: Some(nu),
            ..Default::default()
        }
    }
    pub fn max_corr(c: u32, d: u32, n: u32) -> Self {
        StatDescriptor {
            kind: Some(StatKind::MaxCorr),
            eta: Some(c),
            d: Some(d),
            n: Some(n),
            ..Default::default()
        }
    }
    pub fn multilinear(dims: Vec<u32>) -> Self {
        StatDescriptor {
            kind: Some(StatKind::Multilinear),
            dims: Some(dims),
            ..Default::default()
        }
    }
    pub fn scale_space_gaussian(w1: f64, w2: f64, kappa: f64) -> Self {
        StatDescriptor {
            kind: Some(StatKind::ScaleSpaceGaussian),
            w1: Some(w1),
            w2: Some(w2),
            kappa: Some(kappa),
            ..Default::default()
        }
    }
    pub fn scale_space_chi2(d: u32, w1: f64, w2: f64, kappa: f64) -> Self {
        StatDescriptor {
            kind: Some(StatKind::ScaleSpaceChi2),
            d: Some(d),
            w1: Some(w1),
            w2: Some(w2),
            kappa: Some(kappa),
            ..Default::default()
        }
    }

    pub fn kind(&self) -> Result<StatKind> {
        self.kind
            .ok_or_else(|| Error::domain("statistic descriptor has no kind"))
    }

    fn require(&self, field: Option<u32>, name: &str) -> Result<u32> {
        field.ok_or_else(|| Error::domain(format!("{name} is required for this statistic kind")))
    }

    pub fn validate(&self) -> Result<()> {
        build_density(self).map(|_| ())
    }

    pub(crate) fn d_param(&self) -> Result<u32> {
        let d = self.require(self.d, "d")?;
        if d == 0 {
            return Err(Error::domain("d must be >= 1"));
        }
        Ok(d)
    }
    pub(crate) fn eta_param(&self) -> Result<u32> {
        let eta = self.require(self.eta, "eta")?;
        if eta == 0 {
            return Err(Error::domain("eta must be >= 1"));
        }
        Ok(eta)
    }
    pub(crate) fn nu_param(&self) -> Result<u32> {
        let nu = self.require(self.nu, "nu")?;
        if nu == 0 {
            return Err(Error::domain("nu must be >= 1"));
        }
        Ok(nu)
    }
    pub(crate) fn n_param(&self) -> Result<u32> {
        self.require(self.n, "n")
    }
    pub(crate) fn scale_params(&self) -> Result<(f64, f64, f64)> {
        let w1 = self.w1.ok_or_else(|| Error::domain("w1 is required"))?;
        let w2 = self.w2.ok_or_else(|| Error::domain("w2 is required"))?;
        let kappa = self.kappa.ok_or_else(|| Error::domain("kappa is required"))?;
        Ok((w1, w2, kappa))
    }
}

/// Probabilists' Hermite polynomial He_k(t) by the three-term recurrence.
fn hermite(k: usize, t: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = t;
    for m in 1..k {
        let next = t * cur - m as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Gaussian EC density rho^G_i(t): the upper tail for i = 0, and
/// (2 pi)^{-(i+1)/2} He_{i-1}(t) exp(-t^2/2) for i >= 1.
pub fn rho_gaussian(order: usize, t: f64) -> f64 {
    if order == 0 {
        return gaussian_upper_tail(t).get();
    }
    TWO_PI.powf(-((order + 1) as f64) / 2.0) * hermite(order - 1, t) * (-t * t / 2.0).exp()
}

/// Gaussian EC density for derivative variance c I: c^{i/2} rho^G_i(t).
pub fn rho_gaussian_scaled(order: usize, t: f64, c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::domain(format!("derivative variance must be > 0, got {c}")));
    }
    Ok(c.powf(order as f64 / 2.0) * rho_gaussian(order, t))
}

/// Student-t EC density with nu degrees of freedom, via the correlation field
/// at r = t / sqrt(nu + t^2) with n = nu + 1 rows. Valid for all real t.
pub fn rho_t(order: usize, t: f64, nu: u32) -> Result<f64> {
    if (nu as usize) < order {
        return Err(Error::domain(format!(
            "t EC density of order {order} needs nu + 1 > order, got nu={nu}"
        )));
    }
    let r = t / ((nu as f64) + t * t).sqrt();
    rho_corr(0, order, r, nu + 1)
}

/// chi^2 EC density with d components: sum_j mu_j(U_d) rho^G_{i+j}(sqrt t).
pub fn rho_chi2(order: usize, t: f64, d: u32) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("chi^2 threshold must be >= 0, got {t}")));
    }
    let sphere = sphere_intrinsic_volumes(d as usize)?;
    let root = t.sqrt();
    let mut sum = 0.0;
    for j in 0..d as usize {
        let mu = sphere.value(j);
        if mu != 0.0 {
            sum += mu * rho_gaussian(order + j, root);
        }
    }
    Ok(sum)
}

/// F EC density: sum_k mu_k(U_eta) rho^C_{k,i}(r(t); n = eta + nu) with
/// r(t) = sqrt(t eta / (t eta + nu)). Requires nu > order.
pub fn rho_f(order: usize, t: f64, eta: u32, nu: u32) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("F threshold must be >= 0, got {t}")));
    }
    if (nu as usize) <= order {
        return Err(Error::domain(format!(
            "F field of order {order} undefined for nu = {nu} (need nu > order)"
        )));
    }
    let (etaf, nuf) = (eta as f64, nu as f64);
    let r = (t * etaf / (t * etaf + nuf)).sqrt();
    let sphere = sphere_intrinsic_volumes(eta as usize)?;
    let mut sum = 0.0;
    for k in 0..eta as usize {
        let mu = sphere.value(k);
        if mu != 0.0 {
            sum += mu * rho_corr(k, order, r, eta + nu)?;
        }
    }
    Ok(sum)
}

/// Hotelling's T^2 EC density: sum_j mu_j(U_d) rho^t_{i+j}(sqrt t; nu).
pub fn rho_hotelling(order: usize, t: f64, d: u32, nu: u32) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("T^2 threshold must be >= 0, got {t}")));
    }
    if nu < d {
        return Err(Error::domain(format!(
            "Hotelling field needs nu >= d, got nu={nu}, d={d}"
        )));
    }
    let sphere = sphere_intrinsic_volumes(d as usize)?;
    let root = t.sqrt();
    let mut sum = 0.0;
    for j in 0..d as usize {
        let mu = sphere.value(j);
        if mu != 0.0 {
            sum += mu * rho_t(order + j, root, nu)?;
        }
    }
    Ok(sum)
}

/// Roy's maximum root combination: rho^R_i(t) = sum_j mu_j(U_d) rho^F_{i+j}(t).
/// This is twice the alternating sum over roots, not an EC density of the
/// maximum root itself; callers use half of it in P-value approximations.
pub fn rho_roy(order: usize, t: f64, d: u32, eta: u32, nu: u32) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("Roy threshold must be >= 0, got {t}")));
    }
    let sphere = sphere_intrinsic_volumes(d as usize)?;
    let mut sum = 0.0;
    for j in 0..d as usize {
        let mu = sphere.value(j);
        if mu != 0.0 {
            sum += mu * rho_f(order + j, t, eta, nu)?;
        }
    }
    Ok(sum)
}

/// Convolved sphere intrinsic volumes of U_{d_1} x ... x U_{d_D}: the
/// coefficient of rho^G_{i+k} in the multilinear-form EC density.
fn multilinear_coefficients(dims: &[u32]) -> Result<Vec<f64>> {
    if dims.is_empty() {
        return Err(Error::domain("multilinear form needs at least one dimension"));
    }
    let mut coefs = vec![1.0];
    for &d in dims {
        if d == 0 {
            return Err(Error::domain("multilinear dimensions must be >= 1"));
        }
        let sphere = sphere_intrinsic_volumes(d as usize)?;
        let mut next = vec![0.0; coefs.len() + d as usize - 1];
        for (a, ca) in coefs.iter().enumerate() {
            if *ca == 0.0 {
                continue;
            }
            for b in 0..d as usize {
                let mu = sphere.value(b);
                if mu != 0.0 {
                    next[a + b] += ca * mu;
                }
            }
        }
        coefs = next;
    }
    Ok(coefs)
}

/// Maximum multilinear form EC density: sum over (k_1..k_D) of
/// prod_j mu_{k_j}(U_{d_j}) rho^G_{i+k}(t). Callers apply 2^{-(D-1)}.
pub fn rho_multilinear(order: usize, t: f64, dims: &[u32]) -> Result<f64> {
    let coefs = multilinear_coefficients(dims)?;
    let mut sum = 0.0;
    for (k, c) in coefs.iter().enumerate() {
        if *c != 0.0 {
            sum += c * rho_gaussian(order + k, t);
        }
    }
    Ok(sum)
}

/// Base field of a scale-space construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleSpaceBase {
    Gaussian,
    Chi2 { d: u32 },
}

/// Scale-space EC density over w in [w1, w2]:
/// rho^S_i = (w1^{-i}+w2^{-i})/2 rho_i + [(w1^{-i}-w2^{-i})/i] sum_j
/// kappa^{(1-2j)/2}(-1)^j i! / ((1-2j)(4 pi)^j j!(i-2j)!) rho_{i+1-2j},
/// with the i = 0 weight read as log(w2/w1). The base densities are Gaussian
/// or chi^2_d.
pub fn rho_scale_space(
    order: usize,
    t: f64,
    w1: f64,
    w2: f64,
    kappa: f64,
    base: ScaleSpaceBase,
) -> Result<f64> {
    let base_rho = |o: usize, t: f64| -> Result<f64> {
        match base {
            ScaleSpaceBase::Gaussian => Ok(rho_gaussian(o, t)),
            ScaleSpaceBase::Chi2 { d } => rho_chi2(o, t, d),
        }
    };
    let (first, terms) = scale_space_density_weights(order, w1, w2, kappa)?;
    let mut sum = first * base_rho(order, t)?;
    for (o, w) in terms {
        sum += w * base_rho(o, t)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{f_upper_tail, student_upper_tail};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-30)
    }

    // independent chi^2 upper tail oracle by the even/odd recurrence
    fn chi2_tail_oracle(t: f64, d: u32) -> f64 {
        let mut tail;
        let mut k;
        if d % 2 == 1 {
            tail = 2.0 * gaussian_upper_tail(t.sqrt()).get();
            k = 1;
        } else {
            tail = (-t / 2.0).exp();
            k = 2;
        }
        while k + 2 <= d {
            k += 2;
            // P(chi2_k >= t) = P(chi2_{k-2} >= t) + (t/2)^{k/2-1} e^{-t/2} / Gamma(k/2)
            let half = k as f64 / 2.0;
            let ln = (half - 1.0) * (t / 2.0).ln() - t / 2.0
                - crate::specfun::log_gamma(half).unwrap();
            tail += ln.exp();
        }
        tail
    }

    #[test]
    fn gaussian_matches_closed_forms() {
        // the first four densities written out explicitly
        for &t in &[-2.5, -1.0, 0.0, 0.3, 1.0, 2.0, 3.7] {
            let e = (-t * t / 2.0_f64).exp();
            assert!(close(rho_gaussian(1, t), e / TWO_PI, 1e-14));
            assert!(close(rho_gaussian(2, t), t * e * TWO_PI.powf(-1.5), 1e-14));
            assert!(close(rho_gaussian(3, t), (t * t - 1.0) * e / (TWO_PI * TWO_PI), 1e-14));
        }
        assert!(close(rho_gaussian(1, 0.0), 1.0 / TWO_PI, 1e-15));
        assert_eq!(rho_gaussian(2, 0.0), 0.0);
        assert!(rho_gaussian(3, 1.0).abs() < 1e-18);
    }

    #[test]
    fn gaussian_derivative_structure() {
        // rho_{i} = -(2 pi)^{-1/2} d/dt rho_{i-1}, checked by central differences
        let h = 1e-5;
        for order in 1..=6 {
            for &t in &[-1.3, 0.4, 1.9] {
                let deriv = (rho_gaussian(order - 1, t + h) - rho_gaussian(order - 1, t - h))
                    / (2.0 * h);
                let want = -deriv / TWO_PI.sqrt();
                assert!(
                    close(rho_gaussian(order, t), want, 1e-7),
                    "order {order}, t {t}"
                );
            }
        }
    }

    #[test]
    fn gaussian_scaled() {
        assert!(close(
            rho_gaussian_scaled(2, 1.1, 4.0).unwrap(),
            4.0 * rho_gaussian(2, 1.1),
            1e-15
        ));
        assert_eq!(
            rho_gaussian_scaled(0, 1.1, 7.0).unwrap(),
            rho_gaussian(0, 1.1)
        );
        assert!(rho_gaussian_scaled(1, 0.0, -1.0).is_err());
    }

    #[test]
    fn t_order_zero_is_student_tail() {
        for (t, nu) in [(2.0, 34), (0.0, 5), (-1.3, 7), (4.5, 2)] {
            let got = rho_t(0, t, nu).unwrap();
            let want = student_upper_tail(t, nu).unwrap().get();
            assert!(close(got, want, 1e-9), "t={t}, nu={nu}: {got} vs {want}");
        }
    }

    #[test]
    fn t_matches_closed_forms() {
        // Worsley's closed-form t-field densities for i = 1, 2, 3
        for (t, nu) in [(1.5, 7u32), (2.5, 34), (0.3, 11), (-0.8, 11)] {
            let nuf = nu as f64;
            let base = (1.0 + t * t / nuf).powf(-(nuf - 1.0) / 2.0);
            let c2 = (crate::specfun::log_gamma((nuf + 1.0) / 2.0).unwrap()
                - crate::specfun::log_gamma(nuf / 2.0).unwrap())
            .exp()
                / (nuf / 2.0).sqrt();
            let want1 = base / TWO_PI;
            let want2 = TWO_PI.powf(-1.5) * c2 * t * base;
            let want3 = ((nuf - 1.0) / nuf * t * t - 1.0) * base / (TWO_PI * TWO_PI);
            assert!(close(rho_t(1, t, nu).unwrap(), want1, 1e-10));
            assert!(close(rho_t(2, t, nu).unwrap(), want2, 1e-10));
            assert!(close(rho_t(3, t, nu).unwrap(), want3, 1e-10));
        }
    }

    #[test]
    fn t_gaussian_limit() {
        for order in 0..=3 {
            for &t in &[0.5, 1.5, 3.0] {
                let got = rho_t(order, t, 1_000_000).unwrap();
                let want = rho_gaussian(order, t);
                assert!(close(got, want, 1e-3), "order {order}, t {t}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn chi2_order_zero_matches_exact_tail() {
        for (t, d) in [(2.0, 1u32), (2.0, 2), (3.5, 3), (7.0, 5)] {
            let got = rho_chi2(0, t, d).unwrap();
            let want = chi2_tail_oracle(t, d);
            assert!(close(got, want, 1e-10), "chi2 d={d}, t={t}: {got} vs {want}");
        }
        // d=2 exponential tail example
        assert!(close(rho_chi2(0, 2.0, 2).unwrap(), (-1.0f64).exp(), 1e-12));
    }

    #[test]
    fn f_order_zero_matches_exact_tail() {
        for (t, eta, nu) in [(2.5, 3u32, 28u32), (1.0, 1, 1), (4.0, 3, 30), (0.8, 2, 11)] {
            let got = rho_f(0, t, eta, nu).unwrap();
            let want = f_upper_tail(t, eta, nu).unwrap().get();
            assert!(close(got, want, 1e-9), "F({eta},{nu}) at {t}: {got} vs {want}");
        }
    }

    #[test]
    fn f_eta_one_is_doubled_t() {
        for (t, nu) in [(2.5, 12u32), (6.0, 30)] {
            for order in 0..=3 {
                let f = rho_f(order, t, 1, nu).unwrap();
                let tt = rho_t(order, t.sqrt(), nu).unwrap();
                assert!(close(f, 2.0 * tt, 1e-11), "order {order}");
            }
        }
    }

    #[test]
    fn f_frozen_values() {
        assert!(close(rho_f(1, 2.5, 3, 12).unwrap(), 0.1017102018392648, 1e-11));
        assert!(close(rho_f(2, 2.5, 3, 12).unwrap(), 0.07074262243358137, 1e-11));
    }

    #[test]
    fn hotelling_order_zero_matches_f_transform() {
        // T^2 ~ nu d / (nu - d + 1) F_{d, nu-d+1}
        for (t, d, nu) in [(8.0, 2u32, 20u32), (20.0, 3, 34), (54.0, 3, 34)] {
            let got = rho_hotelling(0, t, d, nu).unwrap();
            let (df1, df2) = (d as f64, (nu - d + 1) as f64);
            let want = f_upper_tail(t * df2 / ((nu as f64) * df1), d, nu - d + 1)
                .unwrap()
                .get();
            assert!(close(got, want, 1e-8), "T2 d={d} nu={nu} t={t}: {got} vs {want}");
        }
    }

    #[test]
    fn hotelling_d_one_and_frozen() {
        for order in 0..=2 {
            let h = rho_hotelling(order, 6.25, 1, 19).unwrap();
            let tt = rho_t(order, 2.5, 19).unwrap();
            assert!(close(h, 2.0 * tt, 1e-12));
        }
        assert!(close(
            rho_hotelling(2, 8.0, 3, 20).unwrap(),
            0.07545113297062973,
            1e-10
        ));
    }

    #[test]
    fn hotelling_chi2_limit() {
        // mixed tolerance: rho^chi2_2 crosses zero near t = 2, where a pure
        // relative comparison is meaningless
        for order in 0..=3 {
            for &t in &[2.0, 6.0, 11.0] {
                let got = rho_hotelling(order, t, 3, 1_000_000).unwrap();
                let want = rho_chi2(order, t, 3).unwrap();
                assert!(
                    (got - want).abs() <= 1e-3 * want.abs() + 1e-6,
                    "order {order}, t {t}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn roy_identities() {
        // d = 1: rho^R = 2 rho^F
        for order in 0..=2 {
            let r = rho_roy(order, 3.0, 1, 3, 25).unwrap();
            let f = rho_f(order, 3.0, 3, 25).unwrap();
            assert!(close(r, 2.0 * f, 1e-12));
        }
        // eta = 1: half rho^R equals the Hotelling density
        for order in 0..=3 {
            let r = rho_roy(order, 9.0, 3, 1, 30).unwrap();
            let h = rho_hotelling(order, 9.0, 3, 30).unwrap();
            assert!(close(0.5 * r, h, 1e-10), "order {order}");
        }
        assert!(close(rho_roy(1, 5.0, 2, 3, 25).unwrap(), 0.08423756659852322, 1e-10));
    }

    #[test]
    fn multilinear_reductions() {
        // D = 1 equals the chi^2 density at t^2
        for order in 0..=2 {
            for &t in &[0.7, 1.8] {
                let m = rho_multilinear(order, t, &[3]).unwrap();
                let c = rho_chi2(order, t * t, 3).unwrap();
                assert!(close(m, c, 1e-12));
            }
        }
        // D = 1, d = 1: two-sided Gaussian
        for order in 0..=3 {
            let m = rho_multilinear(order, 1.3, &[1]).unwrap();
            assert!(close(m, 2.0 * rho_gaussian(order, 1.3), 1e-13));
        }
    }

    #[test]
    fn scale_space_degenerate_matches_scaled() {
        let w = 1.7;
        for order in 0..=3 {
            for &t in &[0.4, 2.0] {
                let got = rho_scale_space(order, t, w, w, 0.5, ScaleSpaceBase::Gaussian).unwrap();
                let want = rho_gaussian_scaled(order, t, 1.0 / (w * w)).unwrap();
                assert!(close(got, want, 1e-12), "order {order}, t {t}");
            }
        }
    }

    #[test]
    fn scale_space_order_zero_log_rule() {
        let (w1, w2, kappa) = (1.0, 3.0, 0.5);
        for &t in &[0.0, 1.2, 2.5] {
            let got = rho_scale_space(0, t, w1, w2, kappa, ScaleSpaceBase::Gaussian).unwrap();
            let want = rho_gaussian(0, t) + (w2 / w1).ln() * kappa.sqrt() * rho_gaussian(1, t);
            assert!(close(got, want, 1e-13), "t {t}: {got} vs {want}");
        }
    }

    #[test]
    fn descriptor_serde_round_trip() {
        let d = StatDescriptor::roy(3, 3, 28);
        let js = serde_json::to_string(&d).unwrap();
        assert!(js.contains("\"roy\""));
        let back: StatDescriptor = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
    }
}
