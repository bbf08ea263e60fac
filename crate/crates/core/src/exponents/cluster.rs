//! Counting the runs of the irreducible-cluster search.
//!
//! A run extends a cluster by `v ≤ t = m − 1` fresh positions of one check
//! at a time, with `N_v(q)` admissible value strings per choice. Runs that
//! add `h` positions in total number `S_h`, the coefficients of
//! `1/(1 − T(z))` with `T(z) = Σ_v N_v C(t, v) z^v`. Their growth rate is
//! `1/ρ = γ_m (m − 1)` where `ρ` is the smallest positive root of
//! `1 − T(z)`.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::search::ai::{enumerate_ai_strings, max_ai_length};

/// Row weight `m`, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MValue {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for MValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MValue::Finite(m) => write!(f, "{m}"),
            MValue::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for MValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(MValue::Infinite),
            t => t
                .parse()
                .map(MValue::Finite)
                .map_err(|_| Error::Config(format!("row weight {s:?} is neither an integer nor inf"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusterModel {
    pub q: usize,
    pub m: MValue,
    pub stabilizer: bool,
    /// `N_v` for `v = 1, …, v_max`, already multiplied by `q^v` for
    /// stabilizer codes
    pub n_v: Vec<u64>,
    /// smallest positive root of `1 − T(z)`; none for `m = ∞`
    pub rho: Option<f64>,
    pub gamma: f64,
    pub gamma_bar: f64,
}

/// `N_v` for `v = 1, …, v_max`, times `q^v` for stabilizer codes.
fn n_v_table(q: usize, stabilizer: bool) -> Result<Vec<u64>> {
    let f = Field::get(q)?;
    (1..=max_ai_length(f))
        .map(|v| {
            let n = enumerate_ai_strings(q, v)?.n_v;
            Ok(if stabilizer { n * (q as u64).pow(v as u32) } else { n })
        })
        .collect()
}

fn row_weight(m: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::Domain(format!("row weight m = {m} must be at least 2")));
    }
    Ok(m - 1)
}

/// `γ̄_m = (q−1)/((m−1)(q^{1/(m−1)} − 1))`, or `(q−1)/ln q` for `m = ∞`,
/// from the bound `N_v ≤ (q−1)^{v−1}`. Times `q` for stabilizer codes.
pub fn gamma_bar(q: usize, m: MValue, stabilizer: bool) -> Result<f64> {
    let qf = q as f64;
    let g = match m {
        MValue::Infinite => (qf - 1.0) / qf.ln(),
        MValue::Finite(m) => {
            let t = row_weight(m)? as f64;
            (qf - 1.0) / (t * (qf.powf(1.0 / t) - 1.0))
        }
    };
    Ok(if stabilizer { qf * g } else { g })
}

/// `γ_m = 1/((m−1)ρ)`.
///
/// With `y = (m−1) z` the equation `T(z) = 1` becomes
/// `Σ_v N_v [C(t, v)/t^v] y^v = 1`, whose coefficients tend to `N_v/v!` as
/// `m → ∞`. The root `y` gives `γ_m = 1/y` for finite and infinite `m`
/// alike.
pub fn gamma_m(q: usize, m: MValue, stabilizer: bool) -> Result<ClusterModel> {
    let n_v = n_v_table(q, stabilizer)?;
    let t = match m {
        MValue::Finite(m) => Some(row_weight(m)?),
        MValue::Infinite => None,
    };
    let mut coeffs = Vec::with_capacity(n_v.len());
    let mut ratio = 1.0f64; // C(t, v)/t^v, or 1/v!
    for (i, &n) in n_v.iter().enumerate() {
        let v = i + 1;
        match t {
            Some(t) if v > t => break,
            Some(t) => ratio *= (t - i) as f64 / (t as f64 * v as f64),
            None => ratio /= v as f64,
        }
        coeffs.push(n as f64 * ratio);
    }
    let p = |y: f64| coeffs.iter().rev().fold(0.0, |acc, &c| (acc + c) * y);
    // p is increasing with p(0) = 0 and p(1) ≥ N_1 = 1
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while p(hi) < 1.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let y = 0.5 * (lo + hi);
    Ok(ClusterModel {
        q,
        m,
        stabilizer,
        n_v,
        rho: t.map(|t| y / t as f64),
        gamma: 1.0 / y,
        gamma_bar: gamma_bar(q, m, stabilizer)?,
    })
}

/// Integer coefficients of `T(z)`, index `v` (index 0 is zero).
fn t_poly(q: usize, m: usize, stabilizer: bool) -> Result<Vec<BigUint>> {
    let t = row_weight(m)?;
    let n_v = n_v_table(q, stabilizer)?;
    let mut out = vec![BigUint::zero()];
    let mut binom = BigUint::from(1u32);
    for (i, &n) in n_v.iter().enumerate() {
        let v = i + 1;
        if v > t {
            break;
        }
        binom = binom * BigUint::from(t - i) / BigUint::from(v);
        out.push(&binom * BigUint::from(n));
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// `S_0, …, S_{h_max}` exactly, by `S_h = Σ_v T_v S_{h−v}`.
pub fn cluster_series(q: usize, m: usize, h_max: usize, stabilizer: bool) -> Result<Vec<BigUint>> {
    let t = t_poly(q, m, stabilizer)?;
    let mut s: Vec<BigUint> = Vec::with_capacity(h_max + 1);
    s.push(BigUint::from(1u32));
    for h in 1..=h_max {
        let mut acc = BigUint::zero();
        for v in 1..t.len().min(h + 1) {
            acc += &t[v] * &s[h - v];
        }
        s.push(acc);
    }
    Ok(s)
}

/// `S_h = Σ_r 1/(z_r^{h+1} T′(z_r))` over the roots `z_r` of `1 − T(z)`,
/// which are found by Durand–Kerner iteration and must be simple.
pub fn cluster_series_residue(q: usize, m: usize, h_max: usize, stabilizer: bool) -> Result<Vec<f64>> {
    let t: Vec<f64> = t_poly(q, m, stabilizer)?
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    // T(z) − 1, lowest degree first
    let mut poly = t.clone();
    poly[0] = -1.0;
    let roots = durand_kerner(&poly)?;
    let deriv = |z: Complex64| {
        (1..t.len())
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, v| acc * z + t[v] * v as f64)
    };
    let weights: Vec<(Complex64, Complex64)> = roots.iter().map(|&z| (z.inv(), deriv(z).inv() / z)).collect();
    let mut out = Vec::with_capacity(h_max + 1);
    for h in 0..=h_max {
        let s: Complex64 = weights.iter().map(|&(inv, w)| w * inv.powu(h as u32)).sum();
        out.push(s.re);
    }
    Ok(out)
}

fn durand_kerner(poly: &[f64]) -> Result<Vec<Complex64>> {
    let deg = poly.len() - 1;
    let lead = poly[deg];
    let monic: Vec<Complex64> = poly.iter().map(|&c| Complex64::new(c / lead, 0.0)).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    if deg == 1 {
        return Ok(vec![-monic[0]]);
    }
    // Cauchy bound on the root moduli scales the starting circle
    let radius = 1.0 + monic[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..2000 {
        let mut change = 0.0f64;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            change = change.max(step.norm() / z[i].norm().max(1e-300));
        }
        if change < 1e-15 {
            break;
        }
    }
    for i in 0..deg {
        if eval(z[i]).norm() > 1e-8 * (1.0 + radius.powi(deg as i32)) {
            return Err(Error::Numerical(format!(
                "Durand–Kerner did not converge for root {}",
                z[i]
            )));
        }
        for j in 0..i {
            if (z[i] - z[j]).norm() < 1e-9 * z[i].norm() {
                return Err(Error::Numerical("1 − T(z) has a repeated root".into()));
            }
        }
    }
    Ok(z)
}
