//! Asymptotic complexity exponents of the verification techniques.
//!
//! Everything here is a pure function of a few real parameters. Exponents
//! are reported in bits: formulas stated for `q^{Fn}` operations are
//! multiplied by `log₂ q`, formulas stated for `2^{Fn}` are used as printed.

mod cluster;
mod spectra;
pub mod tables;

pub use cluster::{cluster_series, cluster_series_residue, gamma_bar, gamma_m, ClusterModel, MValue};
pub use spectra::{ensemble_params, f_theta, q_alpha_beta, spectral_root_t, ExtReal, SpectralParams};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Golden-section refinement tolerance and the grid used by every
/// maximization over `β`.
pub const GRID_POINTS: usize = 1024;
pub const TOLERANCE: f64 = 1e-9;

/// `x log_q(q−1) − x log_q x − (1−x) log_q(1−x)` with `0 log 0 = 0`.
pub fn entropy_hq(q: usize, x: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::Domain(format!("entropy needs q ≥ 2, got {q}")));
    }
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::Domain(format!("entropy argument {x} outside [0, 1]")));
    }
    Ok(hq(q as f64, x))
}

pub(crate) fn hq(q: f64, x: f64) -> f64 {
    let xlx = |x: f64| if x <= 0.0 { 0.0 } else { x * x.ln() };
    (x * (q - 1.0).ln() - xlx(x) - xlx(1.0 - x)) / q.ln()
}

pub(crate) fn h2(x: f64) -> f64 {
    hq(2.0, x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeClass {
    Classical,
    Stabilizer,
    Css,
    LdpcClassical,
    LdpcQuantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Technique {
    Sw,
    Mb,
    Pb,
    Cs,
    Ic,
    Combined,
}

/// Smaller root `δ` of the GV equation for the class: `R = 1 − h_q(δ)`,
/// `R = 1 − 2h₄(δ)` for stabilizer codes, `R = 1 − 2h₂(δ)` for CSS codes.
/// LDPC classes use their generic counterparts.
pub fn gv_distance(q: usize, rate: f64, class: CodeClass) -> Result<f64> {
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::Domain(format!("rate {rate} outside [0, 1]")));
    }
    let (base, target) = match class {
        CodeClass::Classical | CodeClass::LdpcClassical => (q as f64, 1.0 - rate),
        CodeClass::Stabilizer | CodeClass::LdpcQuantum => (4.0, (1.0 - rate) / 2.0),
        CodeClass::Css => (2.0, (1.0 - rate) / 2.0),
    };
    if base < 2.0 {
        return Err(Error::Domain(format!("GV distance needs q ≥ 2, got {q}")));
    }
    // h is increasing on [0, (q−1)/q]
    let (mut lo, mut hi) = (0.0, (base - 1.0) / base);
    if target <= 0.0 {
        return Ok(0.0);
    }
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if hq(base, mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentQuery {
    pub technique: Technique,
    pub class: CodeClass,
    pub q: usize,
    pub rate: f64,
    pub delta: f64,
    /// `(ℓ, m)` for LDPC classes and IC.
    pub ensemble: Option<(usize, usize)>,
}

impl ExponentQuery {
    /// Query for a code on the GV bound of its class.
    pub fn at_gv(technique: Technique, class: CodeClass, q: usize, rate: f64) -> Result<Self> {
        Ok(ExponentQuery {
            technique,
            class,
            q,
            rate,
            delta: gv_distance(q, rate, class)?,
            ensemble: None,
        })
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.rate) || !(0.0..=1.0).contains(&self.delta) {
            return Err(Error::Domain(format!(
                "need 0 ≤ R ≤ 1 and 0 ≤ δ ≤ 1, got R = {}, δ = {}",
                self.rate, self.delta
            )));
        }
        if self.q < 2 {
            return Err(Error::Domain(format!("q = {} is not a field order", self.q)));
        }
        Ok(())
    }
}

/// Exponent `F` in bits of the requested technique on the requested class.
/// `Combined` is the minimum over the techniques the class supports.
pub fn technique_exponent(query: &ExponentQuery, params: Option<&SpectralParams>) -> Result<f64> {
    query.validate()?;
    if query.technique == Technique::Combined {
        let all = [
            Technique::Sw,
            Technique::Mb,
            Technique::Pb,
            Technique::Cs,
            Technique::Ic,
        ];
        let mut best: Option<f64> = None;
        for t in all {
            let sub = ExponentQuery {
                technique: t,
                ..query.clone()
            };
            match single(&sub, params) {
                Ok(f) => best = Some(best.map_or(f, |b: f64| b.min(f))),
                Err(Error::Config(_)) => {}
                Err(e) => return Err(e),
            }
        }
        return best.ok_or_else(|| Error::Config("no technique applies to this query".into()));
    }
    single(query, params)
}

fn single(query: &ExponentQuery, params: Option<&SpectralParams>) -> Result<f64> {
    let q = query.q as f64;
    let bits = q.log2();
    let (r, d) = (query.rate, query.delta);
    match query.class {
        CodeClass::Classical => classical(query.technique, q, r, d, query),
        CodeClass::Css => classical(query.technique, 2.0, (1.0 + r) / 2.0, d, query),
        CodeClass::Stabilizer => match query.technique {
            Technique::Sw => Ok((1.0 + r) * hq(4.0, d)),
            Technique::Mb => Ok(hq(4.0, d)),
            Technique::Pb => Ok(2.0 * (1.0 + r) / (3.0 + r) * hq(4.0, d)),
            Technique::Cs => {
                let x = 2.0 * d / (1.0 - r);
                if !(0.0..=1.0).contains(&x) {
                    return Err(Error::Domain(format!("2δ/(1−R) = {x} outside [0, 1]")));
                }
                Ok(h2(d) - (1.0 - r) / 2.0 * h2(x))
            }
            Technique::Ic => ic(query, true, d),
            Technique::Combined => unreachable!(),
        },
        CodeClass::LdpcClassical => {
            let p = params.ok_or_else(|| Error::Config("LDPC classes need spectral parameters".into()))?;
            let (ds, ts) = (p.delta_star, p.theta_star);
            match query.technique {
                Technique::Sw => Ok((1.0 - ts) * hq(q, ds) * bits),
                Technique::Mb => Ok(hq(q, ds) / 2.0 * bits),
                Technique::Cs => Ok(h2(ds) - ts * h2(ds / ts)),
                Technique::Pb => Err(Error::Config(
                    "the PB exponent needs spectra of punctured LDPC codes, which are not modelled".into(),
                )),
                Technique::Ic => ic(query, false, ds),
                Technique::Combined => unreachable!(),
            }
        }
        CodeClass::LdpcQuantum => match query.technique {
            Technique::Ic => ic(query, true, d),
            _ => Err(Error::Config("quantum LDPC codes only have the IC exponent".into())),
        },
    }
}

fn classical(t: Technique, q: f64, r: f64, d: f64, query: &ExponentQuery) -> Result<f64> {
    let bits = q.log2();
    match t {
        Technique::Sw => Ok(r * hq(q, d) * bits),
        Technique::Mb => Ok(hq(q, d) / 2.0 * bits),
        Technique::Pb => Ok(hq(q, d) * r / (1.0 + r) * bits),
        Technique::Cs => {
            let x = d / (1.0 - r);
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::Domain(format!("δ/(1−R) = {x} outside [0, 1]")));
            }
            Ok((1.0 - r) * (1.0 - h2(x)))
        }
        Technique::Ic => ic(query, false, d),
        Technique::Combined => unreachable!(),
    }
}

/// `δ log₂(γ_m (m−1))`.
fn ic(query: &ExponentQuery, stabilizer: bool, delta: f64) -> Result<f64> {
    let (_, m) = query
        .ensemble
        .ok_or_else(|| Error::Config("the IC exponent needs the row weight m".into()))?;
    let model = gamma_m(query.q, MValue::Finite(m), stabilizer)?;
    Ok(delta * (model.gamma * (m as f64 - 1.0)).log2())
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`;
/// returns the argument and the value.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Bisection for a sign change of `f` on `[lo, hi]`; `f(lo)` and `f(hi)`
/// must have opposite signs.
pub(crate) fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let neg_lo = f(lo) < 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
