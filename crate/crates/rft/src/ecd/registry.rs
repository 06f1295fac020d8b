//! Runtime registry of EC-density strategies.
//!
//! Every statistic kind implements [`EcDensity`]; a descriptor (or a kind
//! name on the command line) selects the concrete strategy at runtime. The
//! trait carries the per-kind P-value bookkeeping: `ec_factor` is the
//! multiplier applied to `sum_i L_i rho_i(t)` (1/2 for Roy's maximum root,
//! 2^{-(D-1)} for multilinear forms), and `domain` is the threshold range a
//! solver may search.

use crate::error::{Error, Result};
use crate::geometry::{sphere_intrinsic_volumes, SphereIV};

use super::{
    rho_chi2, rho_corr, rho_f, rho_gaussian, rho_hotelling, rho_multilinear, rho_roy,
    rho_scale_space, rho_t, ScaleSpaceBase, StatDescriptor, StatKind,
};

/// Threshold domain of a statistic kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdDomain {
    pub lo: f64,
    pub hi: f64,
}

impl ThresholdDomain {
    pub const REAL: ThresholdDomain = ThresholdDomain {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };
    pub const NONNEGATIVE: ThresholdDomain = ThresholdDomain {
        lo: 0.0,
        hi: f64::INFINITY,
    };
    pub const UNIT: ThresholdDomain = ThresholdDomain { lo: 0.0, hi: 1.0 };

    pub fn contains(&self, t: f64) -> bool {
        t >= self.lo && t < self.hi || (t == self.hi && self.hi.is_infinite())
    }
}

/// One statistic kind's EC densities.
pub trait EcDensity: Send + Sync {
    /// Registry name, as accepted on the command line.
    fn name(&self) -> &'static str;

    /// i-dimensional EC density at threshold t.
    fn rho(&self, order: usize, t: f64) -> Result<f64>;

    /// Multiplier applied to the LKC-weighted density sum in Eq-style
    /// P-value approximations.
    fn ec_factor(&self) -> f64 {
        1.0
    }

    fn domain(&self) -> ThresholdDomain {
        ThresholdDomain::NONNEGATIVE
    }
}

struct Gaussian;
impl EcDensity for Gaussian {
    fn name(&self) -> &'static str {
        "gaussian"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        Ok(rho_gaussian(order, t))
    }
    fn domain(&self) -> ThresholdDomain {
        ThresholdDomain::REAL
    }
}

struct StudentT {
    nu: u32,
}
impl EcDensity for StudentT {
    fn name(&self) -> &'static str {
        "t"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_t(order, t, self.nu)
    }
    fn domain(&self) -> ThresholdDomain {
        ThresholdDomain::REAL
    }
}

struct Chi2 {
    d: u32,
}
impl EcDensity for Chi2 {
    fn name(&self) -> &'static str {
        "chi2"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_chi2(order, t, self.d)
    }
}

struct FStat {
    eta: u32,
    nu: u32,
}
impl EcDensity for FStat {
    fn name(&self) -> &'static str {
        "f"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_f(order, t, self.eta, self.nu)
    }
}

struct Hotelling {
    d: u32,
    nu: u32,
}
impl EcDensity for Hotelling {
    fn name(&self) -> &'static str {
        "hotelling"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_hotelling(order, t, self.d, self.nu)
    }
}

struct Roy {
    d: u32,
    eta: u32,
    nu: u32,
}
impl EcDensity for Roy {
    fn name(&self) -> &'static str {
        "roy"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_roy(order, t, self.d, self.eta, self.nu)
    }
    // rho^R is twice the alternating root sum
    fn ec_factor(&self) -> f64 {
        0.5
    }
}

/// Maximum canonical correlation with the reference side reduced to a point
/// (M = 0): the density in the search direction is
/// sum_k sum_l mu_k(U_c) mu_l(U_d) rho^C_{k, i+l}(t), with the union-
/// intersection 1/2 carried by `ec_factor`. The two-region (M > 0) case is
/// assembled in the inference module.
struct MaxCorrPoint {
    c: u32,
    d: u32,
    n: u32,
    sphere_c: SphereIV,
    sphere_d: SphereIV,
}

impl MaxCorrPoint {
    fn new(c: u32, d: u32, n: u32) -> Result<Self> {
        if n <= c.max(d) {
            return Err(Error::domain(format!(
                "max canonical correlation needs n > max(c, d), got n={n}, c={c}, d={d}"
            )));
        }
        Ok(MaxCorrPoint {
            c,
            d,
            n,
            sphere_c: sphere_intrinsic_volumes(c as usize)?,
            sphere_d: sphere_intrinsic_volumes(d as usize)?,
        })
    }
}

impl EcDensity for MaxCorrPoint {
    fn name(&self) -> &'static str {
        "maxcorr"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&t) {
            return Err(Error::domain(format!(
                "correlation threshold must lie in [0, 1), got {t}"
            )));
        }
        let mut sum = 0.0;
        for k in 0..self.c as usize {
            let muk = self.sphere_c.value(k);
            if muk == 0.0 {
                continue;
            }
            for l in 0..self.d as usize {
                let mul = self.sphere_d.value(l);
                if mul == 0.0 {
                    continue;
                }
                sum += muk * mul * rho_corr(k, order + l, t, self.n)?;
            }
        }
        Ok(sum)
    }
    fn ec_factor(&self) -> f64 {
        0.5
    }
    fn domain(&self) -> ThresholdDomain {
        ThresholdDomain::UNIT
    }
}

struct Multilinear {
    dims: Vec<u32>,
}
impl EcDensity for Multilinear {
    fn name(&self) -> &'static str {
        "multilinear"
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_multilinear(order, t, &self.dims)
    }
    fn ec_factor(&self) -> f64 {
        0.5f64.powi(self.dims.len() as i32 - 1)
    }
}

struct ScaleSpace {
    base: ScaleSpaceBase,
    w1: f64,
    w2: f64,
    kappa: f64,
}
impl EcDensity for ScaleSpace {
    fn name(&self) -> &'static str {
        match self.base {
            ScaleSpaceBase::Gaussian => "scale_space_gaussian",
            ScaleSpaceBase::Chi2 { .. } => "scale_space_chi2",
        }
    }
    fn rho(&self, order: usize, t: f64) -> Result<f64> {
        rho_scale_space(order, t, self.w1, self.w2, self.kappa, self.base)
    }
    fn domain(&self) -> ThresholdDomain {
        match self.base {
            ScaleSpaceBase::Gaussian => ThresholdDomain::REAL,
            ScaleSpaceBase::Chi2 { .. } => ThresholdDomain::NONNEGATIVE,
        }
    }
}

type Builder = fn(&StatDescriptor) -> Result<Box<dyn EcDensity>>;

/// Name -> builder table. `build_density` dispatches through this, so a kind
/// is selectable both from a descriptor and by its registry name.
const REGISTRY: &[(&str, Builder)] = &[
    ("gaussian", |_| Ok(Box::new(Gaussian))),
    ("t", |s| Ok(Box::new(StudentT { nu: s.nu_param()? }))),
    ("chi2", |s| Ok(Box::new(Chi2 { d: s.d_param()? }))),
    ("f", |s| {
        Ok(Box::new(FStat {
            eta: s.eta_param()?,
            nu: s.nu_param()?,
        }))
    }),
    ("hotelling", |s| {
        let (d, nu) = (s.d_param()?, s.nu_param()?);
        if nu < d {
            return Err(Error::domain(format!(
                "Hotelling field needs nu >= d, got nu={nu}, d={d}"
            )));
        }
        Ok(Box::new(Hotelling { d, nu }))
    }),
    ("roy", |s| {
        Ok(Box::new(Roy {
            d: s.d_param()?,
            eta: s.eta_param()?,
            nu: s.nu_param()?,
        }))
    }),
    ("maxcorr", |s| {
        Ok(Box::new(MaxCorrPoint::new(
            s.eta_param()?,
            s.d_param()?,
            s.n_param()?,
        )?))
    }),
    ("multilinear", |s| {
        let dims = s
            .dims
            .clone()
            .ok_or_else(|| Error::domain("multilinear kind requires dims"))?;
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::domain("multilinear dims must be nonempty and >= 1"));
        }
        Ok(Box::new(Multilinear { dims }))
    }),
    ("scale_space_gaussian", |s| {
        let (w1, w2, kappa) = s.scale_params()?;
        check_scale(w1, w2, kappa)?;
        Ok(Box::new(ScaleSpace {
            base: ScaleSpaceBase::Gaussian,
            w1,
            w2,
            kappa,
        }))
    }),
    ("scale_space_chi2", |s| {
        let (w1, w2, kappa) = s.scale_params()?;
        check_scale(w1, w2, kappa)?;
        Ok(Box::new(ScaleSpace {
            base: ScaleSpaceBase::Chi2 { d: s.d_param()? },
            w1,
            w2,
            kappa,
        }))
    }),
];

fn check_scale(w1: f64, w2: f64, kappa: f64) -> Result<()> {
    if !(w1 > 0.0) || !(w2 > 0.0) || w1 > w2 {
        return Err(Error::domain(format!(
            "scale interval requires 0 < w1 <= w2, got [{w1}, {w2}]"
        )));
    }
    if !(kappa > 0.0) {
        return Err(Error::domain(format!("kappa must be positive, got {kappa}")));
    }
    Ok(())
}

fn kind_registry_name(kind: StatKind) -> &'static str {
    match kind {
        StatKind::Gaussian => "gaussian",
        StatKind::T => "t",
        StatKind::Chi2 => "chi2",
        StatKind::F => "f",
        StatKind::Hotelling => "hotelling",
        StatKind::Roy => "roy",
        StatKind::MaxCorr => "maxcorr",
        StatKind::Multilinear => "multilinear",
        StatKind::ScaleSpaceGaussian => "scale_space_gaussian",
        StatKind::ScaleSpaceChi2 => "scale_space_chi2",
    }
}

/// All registered kind names.
pub fn kind_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(name, _)| *name).collect()
}

/// Build the EC-density strategy for a descriptor, validating its parameters.
pub fn build_density(desc: &StatDescriptor) -> Result<Box<dyn EcDensity>> {
    let name = kind_registry_name(desc.kind()?);
    let (_, builder) = REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::unsupported(format!("unknown statistic kind {name}")))?;
    builder(desc)
}
