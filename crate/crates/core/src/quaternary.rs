//! GF(4) vectors stored as two packed binary planes, `e = u + ωv`.
//!
//! A Pauli operator `X^v Z^u` corresponds to the vector with planes `(u, v)`,
//! so `X ↦ ω`, `Z ↦ 1` and `Y ↦ ω̄`. Phases are ignored throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuaternaryVector {
    n: usize,
    u: Vec<u64>,
    v: Vec<u64>,
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

impl QuaternaryVector {
    pub fn zero(n: usize) -> Self {
        QuaternaryVector {
            n,
            u: vec![0; words(n)],
            v: vec![0; words(n)],
        }
    }

    /// Builds a vector from GF(4) indices (`0, 1, ω = 2, ω̄ = 3`).
    pub fn from_gf4(values: &[u8]) -> Result<Self> {
        let mut out = Self::zero(values.len());
        for (j, &x) in values.iter().enumerate() {
            if x > 3 {
                return Err(Error::Domain(format!("{x} is not a GF(4) element")));
            }
            out.set(j, x);
        }
        Ok(out)
    }

    /// Builds a vector from its binary planes.
    pub fn from_planes(u: &[u8], v: &[u8]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::Domain("plane lengths differ".into()));
        }
        let mut out = Self::zero(u.len());
        for j in 0..u.len() {
            out.set(j, (u[j] & 1) | ((v[j] & 1) << 1));
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// GF(4) index of entry `j`.
    #[inline]
    pub fn get(&self, j: usize) -> u8 {
        let (w, b) = (j / 64, j % 64);
        (((self.u[w] >> b) & 1) | (((self.v[w] >> b) & 1) << 1)) as u8
    }

    #[inline]
    pub fn set(&mut self, j: usize, x: u8) {
        let (w, b) = (j / 64, j % 64);
        let mask = 1u64 << b;
        self.u[w] = (self.u[w] & !mask) | (((x & 1) as u64) << b);
        self.v[w] = (self.v[w] & !mask) | ((((x >> 1) & 1) as u64) << b);
    }

    pub fn to_gf4(&self) -> Vec<u8> {
        (0..self.n).map(|j| self.get(j)).collect()
    }

    /// Plane `u` (the Z part) as bits.
    pub fn u_bits(&self) -> Vec<u8> {
        (0..self.n).map(|j| self.get(j) & 1).collect()
    }

    /// Plane `v` (the X part) as bits.
    pub fn v_bits(&self) -> Vec<u8> {
        (0..self.n).map(|j| self.get(j) >> 1).collect()
    }

    /// `ē = u + ω̄v`, i.e. `(u ⊕ v, v)` planewise.
    pub fn conjugate(&self) -> Self {
        QuaternaryVector {
            n: self.n,
            u: self.u.iter().zip(&self.v).map(|(a, b)| a ^ b).collect(),
            v: self.v.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(QuaternaryVector {
            n: self.n,
            u: self.u.iter().zip(&other.u).map(|(a, b)| a ^ b).collect(),
            v: self.v.iter().zip(&other.v).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub fn weight(&self) -> usize {
        self.u
            .iter()
            .zip(&self.v)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.get(j) != 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().chain(&self.v).all(|&w| w == 0)
    }

    /// Binary symplectic form `(u | v)` of length `2n`.
    pub fn symplectic(&self) -> Vec<u8> {
        let mut out = self.u_bits();
        out.extend(self.v_bits());
        out
    }

    /// Pauli string over `{I, X, Y, Z}`.
    pub fn to_pauli(&self) -> String {
        (0..self.n)
            .map(|j| match self.get(j) {
                0 => 'I',
                1 => 'Z',
                2 => 'X',
                _ => 'Y',
            })
            .collect()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "vector lengths differ: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn tip_unchecked(&self, other: &Self) -> u8 {
        let mut acc = 0u32;
        for w in 0..self.u.len() {
            acc ^= ((self.u[w] & other.v[w]) ^ (self.v[w] & other.u[w])).count_ones();
        }
        (acc & 1) as u8
    }
}

impl fmt::Debug for QuaternaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuaternaryVector({})", self.to_pauli())
    }
}

/// Trace inner product `e1·ē2 + ē1·e2`, reduced to a bit.
///
/// Zero exactly when the corresponding Pauli operators commute; in
/// symplectic coordinates it is `Σ_j u1_j v2_j + v1_j u2_j (mod 2)`.
pub fn trace_inner_product(e1: &QuaternaryVector, e2: &QuaternaryVector) -> Result<u8> {
    e1.check_len(e2)?;
    Ok(e1.tip_unchecked(e2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn qv(values: &[u8]) -> QuaternaryVector {
        QuaternaryVector::from_gf4(values).unwrap()
    }

    /// Direct GF(4) evaluation of the trace inner product, independent of the planes.
    fn tip_gf4(a: &[u8], b: &[u8]) -> u8 {
        let f = Field::get(4).unwrap();
        let mut s = 0u8;
        for (&x, &y) in a.iter().zip(b) {
            s = f.add(s, f.add(f.mul(x, f.conj(y)), f.mul(f.conj(x), y)));
        }
        // the sum lies in GF(2) ⊂ GF(4)
        assert!(s <= 1, "trace inner product left GF(2): {s}");
        s
    }

    #[test]
    fn examples() {
        assert_eq!(trace_inner_product(&qv(&[2]), &qv(&[1])).unwrap(), 1);
        assert_eq!(trace_inner_product(&qv(&[2, 2]), &qv(&[1, 1])).unwrap(), 0);
        let e = qv(&[2, 3, 1, 0, 2]);
        assert_eq!(trace_inner_product(&e, &e).unwrap(), 0);
        assert!(trace_inner_product(&qv(&[1]), &qv(&[1, 1])).is_err());
    }

    #[test]
    fn conjugate_involution_and_weight() {
        let e = qv(&[0, 1, 2, 3]);
        assert_eq!(e.conjugate().to_gf4(), vec![0, 1, 3, 2]);
        assert_eq!(e.conjugate().conjugate(), e);
        assert_eq!(e.weight(), 3);
        assert_eq!(e.support(), vec![1, 2, 3]);
        assert_eq!(e.to_pauli(), "IZXY");
    }

    #[test]
    fn long_vectors_cross_word_boundary() {
        let values: Vec<u8> = (0..150).map(|j| (j * 7 % 4) as u8).collect();
        let e = qv(&values);
        assert_eq!(e.to_gf4(), values);
        assert_eq!(e.weight(), values.iter().filter(|&&x| x != 0).count());
    }

    /// Exhaustive sweep over n ≤ 3: planes agree with GF(4) arithmetic,
    /// symmetry and GF(2)-bilinearity hold.
    #[test]
    fn symmetric_and_bilinear_exhaustive() {
        for n in 1..=3usize {
            let all: Vec<Vec<u8>> = (0..4usize.pow(n as u32))
                .map(|mut x| {
                    (0..n)
                        .map(|_| {
                            let d = (x % 4) as u8;
                            x /= 4;
                            d
                        })
                        .collect()
                })
                .collect();
            for a in &all {
                for b in &all {
                    let (ea, eb) = (qv(a), qv(b));
                    let t = trace_inner_product(&ea, &eb).unwrap();
                    assert_eq!(t, tip_gf4(a, b));
                    assert_eq!(t, trace_inner_product(&eb, &ea).unwrap());
                    for c in &all {
                        let ec = qv(c);
                        let lhs = trace_inner_product(&ea.add(&eb).unwrap(), &ec).unwrap();
                        let rhs = trace_inner_product(&ea, &ec).unwrap() ^ trace_inner_product(&eb, &ec).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
