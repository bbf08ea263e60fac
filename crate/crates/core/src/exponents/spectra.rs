//! Average weight spectra of the regular LDPC ensembles and the derived
//! parameters `δ*` (typical relative distance) and `θ*` (erasure capacity).
//!
//! The root `t` of the spectral equation is found in the variable
//! `s = t/(1+t) ∈ [0, 1)`. With `u = 1 − 2s` the equation reads
//! `(1−s)(1+u^{m−1})/(1+u^m) = 1 − β`, which stays well scaled for large `t`.

use serde::{Deserialize, Serialize};

use super::{bisect, h2, GRID_POINTS, TOLERANCE};
use crate::error::{Error, Result};

/// A real number or `−∞`. `NegInfinity` orders below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
pub enum ExtReal {
    NegInfinity,
    Finite(f64),
}

impl ExtReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            ExtReal::NegInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn plus(self, x: f64) -> ExtReal {
        match self {
            ExtReal::Finite(y) => ExtReal::Finite(x + y),
            ExtReal::NegInfinity => ExtReal::NegInfinity,
        }
    }

    pub fn max(self, other: ExtReal) -> ExtReal {
        if other > self {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralParams {
    pub l: usize,
    pub m: usize,
    pub alpha: f64,
    /// root `t` of the spectral equation at `β = δ*`
    pub t: f64,
    pub delta_star: f64,
    pub theta_star: f64,
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!("row weight m = {m} must be at least 2")));
    }
    Ok(())
}

/// `β ≥ 1 − 1/m` for odd `m` (and `β ≥ 1` for any `m`) has no finite root.
/// The boundary point itself is excluded, with slack for its rounding.
fn admissible(m: usize, beta: f64) -> bool {
    beta < 1.0 && !(m % 2 == 1 && beta >= 1.0 - 1.0 / m as f64 - 1e-12)
}

/// Root in the `s` variable.
fn root_s(m: usize, beta: f64) -> f64 {
    let lhs = |s: f64| {
        let u = 1.0 - 2.0 * s;
        (1.0 - s) * (1.0 + u.powi(m as i32 - 1)) / (1.0 + u.powi(m as i32))
    };
    let target = 1.0 - beta;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if lhs(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Positive root `t` of
/// `((1+t)^{m−1} + (1−t)^{m−1}) / ((1+t)^m + (1−t)^m) = 1 − β`.
/// `None` where no finite root exists (`β ≥ 1`, or `β ≥ 1 − 1/m` for odd `m`).
pub fn spectral_root_t(m: usize, beta: f64) -> Result<Option<f64>> {
    check_m(m)?;
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::Domain(format!("β = {beta} outside [0, 1]")));
    }
    if beta == 0.0 {
        return Ok(Some(0.0));
    }
    if !admissible(m, beta) {
        return Ok(None);
    }
    let s = root_s(m, beta);
    Ok(Some(s / (1.0 - s)))
}

/// `α log₂[((1+t)^m + (1−t)^m) / (2 t^{βm})] − α m h₂(β)` with `α = ℓ/m`.
/// `−∞` for odd `m` and `β ≥ 1 − 1/m`.
pub fn q_alpha_beta(l: usize, m: usize, beta: f64) -> Result<ExtReal> {
    check_m(m)?;
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::Domain(format!("β = {beta} outside [0, 1]")));
    }
    Ok(q_unchecked(l, m, beta))
}

fn q_unchecked(l: usize, m: usize, beta: f64) -> ExtReal {
    let alpha = l as f64 / m as f64;
    let mf = m as f64;
    if beta == 0.0 {
        return ExtReal::Finite(0.0);
    }
    if !admissible(m, beta) {
        if m % 2 == 1 {
            return ExtReal::NegInfinity;
        }
        // β = 1, even m: the limit t → ∞ gives log₂ 2 − 1 = 0
        return ExtReal::Finite(0.0);
    }
    let s = root_s(m, beta);
    let u = 1.0 - 2.0 * s;
    let l1s = (1.0 - s).log2();
    // m log₂(1+t) + log₂(1 + u^m) − 1 − βm log₂ t
    let bracket = -mf * l1s + (1.0 + u.powi(m as i32)).log2() - 1.0 - beta * mf * (s.log2() - l1s);
    ExtReal::Finite(alpha * bracket - alpha * mf * h2(beta))
}

/// Exponent `h₂(β) + q(α, β)` of the average number of weight-`βn` words.
pub fn spectrum(l: usize, m: usize, beta: f64) -> ExtReal {
    q_unchecked(l, m, beta).plus(h2(beta))
}

/// `f(θ) = max_β { q(α, βθ) + θ h₂(β) }`.
///
/// The objective tends to zero from below as `β → 0`, so the maximum is
/// taken over the interior grid `β = i/1024, i = 1, …, 1023` and refined by
/// golden section around the best grid point. `f(θ) < 0` then means that
/// the shortened codes have no typical nonzero words.
pub fn f_theta(l: usize, m: usize, theta: f64) -> Result<f64> {
    check_m(m)?;
    if !(theta > 0.0 && theta <= 1.0) {
        return Err(Error::Domain(format!("θ = {theta} outside (0, 1]")));
    }
    let g = |beta: f64| q_unchecked(l, m, (beta * theta).min(1.0)).plus(theta * h2(beta));
    let step = 1.0 / GRID_POINTS as f64;
    let (mut best_i, mut best) = (1, ExtReal::NegInfinity);
    for i in 1..GRID_POINTS {
        let v = g(i as f64 * step);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let lo = best_i.saturating_sub(1).max(1) as f64 * step;
    let hi = (best_i + 1).min(GRID_POINTS - 1) as f64 * step;
    let refined = golden_max_ext(g, lo, hi, 1e-12);
    best.max(refined)
        .finite()
        .ok_or_else(|| Error::Numerical(format!("f(θ) is −∞ for (ℓ, m) = ({l}, {m}), θ = {theta}")))
}

fn golden_max_ext<F: Fn(f64) -> ExtReal>(f: F, mut a: f64, mut b: f64, tol: f64) -> ExtReal {
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
    fc.max(fd)
}

/// `δ*` (first positive root of `h₂(δ) + q(α, δ) = 0`) and `θ*` (root of
/// `f(θ) = 0`).
pub fn ensemble_params(l: usize, m: usize) -> Result<SpectralParams> {
    if l < 3 || m < l {
        return Err(Error::Domain(format!("need m ≥ ℓ ≥ 3, got (ℓ, m) = ({l}, {m})")));
    }
    let spec = |b: f64| spectrum(l, m, b).finite().unwrap_or(f64::NAN);
    // δ* can be tiny for large m, so its scan is geometric
    let deltas: Vec<f64> = (0..=70).map(|k| (1e-8 * 1.3f64.powi(k)).min(0.5)).collect();
    let delta_star = first_crossing("h₂(δ) + q(α, δ)", l, m, spec, &deltas, 1e-12)?;
    let f = |t: f64| f_theta(l, m, t).unwrap_or(f64::NAN);
    let thetas: Vec<f64> = (1..=50).map(|k| k as f64 / 50.0).collect();
    let theta_star = first_crossing("f(θ)", l, m, f, &thetas, TOLERANCE)?;
    Ok(SpectralParams {
        l,
        m,
        alpha: l as f64 / m as f64,
        t: spectral_root_t(m, delta_star)?.unwrap_or(f64::NAN),
        delta_star,
        theta_star,
    })
}

/// Finds the first scan point where `f` turns non-negative and bisects
/// back to the previous point.
fn first_crossing<F: Fn(f64) -> f64>(what: &str, l: usize, m: usize, f: F, points: &[f64], tol: f64) -> Result<f64> {
    let first = f(points[0]);
    // also rejects NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(first < 0.0) {
        return Err(Error::Numerical(format!(
            "{what} for (ℓ, m) = ({l}, {m}) is {first} at {}, expected a negative start",
            points[0]
        )));
    }
    for w in points.windows(2) {
        if f(w[1]) >= 0.0 {
            return Ok(bisect(&f, w[0], w[1], tol));
        }
    }
    let last = points[points.len() - 1];
    Err(Error::Numerical(format!(
        "{what} for (ℓ, m) = ({l}, {m}) has no sign change on [{}, {last}]; value {} at the end",
        points[0],
        f(last)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn lhs(m: usize, t: f64) -> f64 {
        let m = m as i32;
        ((1.0 + t).powi(m - 1) + (1.0 - t).powi(m - 1)) / ((1.0 + t).powi(m) + (1.0 - t).powi(m))
    }

    #[test]
    fn root_examples() {
        assert_eq!(spectral_root_t(6, 0.0).unwrap(), Some(0.0));
        for m in [3, 4, 6, 9] {
            assert_abs_diff_eq!(spectral_root_t(m, 0.5).unwrap().unwrap(), 1.0, epsilon = 1e-10);
        }
        let t = spectral_root_t(6, 0.25).unwrap().unwrap();
        assert!(t > 0.0 && t < 1.0);
        assert_abs_diff_eq!(lhs(6, t), 0.75, epsilon = 1e-12);
        let mut last = 0.0;
        for i in 1..40 {
            let t = spectral_root_t(6, i as f64 / 40.0).unwrap().unwrap();
            assert!(t > last);
            last = t;
        }
    }

    #[test]
    fn odd_m_convention() {
        assert_eq!(spectral_root_t(3, 2.0 / 3.0).unwrap(), None);
        assert_eq!(q_alpha_beta(3, 3, 2.0 / 3.0).unwrap(), ExtReal::NegInfinity);
        assert_eq!(q_alpha_beta(3, 3, 0.9).unwrap(), ExtReal::NegInfinity);
        assert!(q_alpha_beta(3, 3, 0.6).unwrap().is_finite());
        assert!(ExtReal::NegInfinity < ExtReal::Finite(-1e300));
        assert!(q_alpha_beta(3, 6, 0.99).unwrap().is_finite());
    }

    #[test]
    fn q_against_direct_formula() {
        for &(l, m, b) in &[(3usize, 6usize, 0.3f64), (4, 8, 0.1), (3, 5, 0.4)] {
            let t = spectral_root_t(m, b).unwrap().unwrap();
            let mi = m as i32;
            let alpha = l as f64 / m as f64;
            let direct = alpha * (((1.0 + t).powi(mi) + (1.0 - t).powi(mi)) / (2.0 * t.powf(b * m as f64))).log2()
                - alpha * m as f64 * h2(b);
            assert_abs_diff_eq!(
                q_alpha_beta(l, m, b).unwrap().finite().unwrap(),
                direct,
                epsilon = 1e-10
            );
        }
        assert_eq!(q_alpha_beta(3, 6, 0.0).unwrap(), ExtReal::Finite(0.0));
        assert!(q_alpha_beta(3, 6, 1e-9).unwrap().finite().unwrap().abs() < 1e-6);
    }

    #[test]
    fn params_3_6() {
        let p = ensemble_params(3, 6).unwrap();
        assert!((p.theta_star - 0.483).abs() < 1e-3, "{}", p.theta_star);
        assert!((p.delta_star - 0.02).abs() < 5e-3, "{}", p.delta_star);
        assert!(spectrum(3, 6, p.delta_star).finite().unwrap().abs() < 1e-8);
        assert!(f_theta(3, 6, p.theta_star).unwrap().abs() < 1e-8);
        assert!(f_theta(3, 6, 0.3).unwrap() < 0.0);
        assert!(f_theta(3, 6, 1.0).unwrap() >= 0.0);
        let q = q_alpha_beta(3, 6, p.delta_star).unwrap().finite().unwrap();
        assert_abs_diff_eq!(q, -h2(p.delta_star), epsilon = 1e-8);
    }

    #[test]
    fn rejects_bad_ensembles() {
        assert!(ensemble_params(2, 4).is_err());
        assert!(ensemble_params(5, 4).is_err());
        assert!(f_theta(3, 6, 0.0).is_err());
    }
}
