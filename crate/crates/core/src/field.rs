//! Table-driven arithmetic over the small Galois fields GF(q), q ∈ {2,3,4,5,7,8,9}.
//!
//! Elements are stored as their index `0..q`. For a prime power `q = p^u` the
//! index is the coefficient vector of a polynomial of degree `< u` read in
//! base `p`, least significant coefficient first, reduced modulo a fixed
//! irreducible polynomial:
//!
//! | q | modulus        |
//! |---|----------------|
//! | 4 | x² + x + 1     |
//! | 8 | x³ + x + 1     |
//! | 9 | x² + 2x + 2    |
//!
//! In GF(4) this makes `1 = 1`, `ω = x = 2` and `ω̄ = ω² = ω + 1 = 3`, so an
//! element `u + ωv` has index `u | (v << 1)`. In characteristic two, addition
//! of indices is plain XOR.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field orders with built-in tables.
pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

const MAX_Q: usize = 9;

/// Arithmetic tables for one field.
pub struct Field {
    q: u8,
    p: u8,
    degree: u8,
    add: [u8; MAX_Q * MAX_Q],
    mul: [u8; MAX_Q * MAX_Q],
    neg: [u8; MAX_Q],
    inv: [u8; MAX_Q],
    conj: [u8; MAX_Q],
}

// one table set per order, so the order identifies the field
impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for Field {}

/// `(q, p, degree, low coefficients of the monic modulus)`.
fn construction(q: usize) -> Option<(u8, u8, &'static [u8])> {
    match q {
        2 => Some((2, 1, &[])),
        3 => Some((3, 1, &[])),
        5 => Some((5, 1, &[])),
        7 => Some((7, 1, &[])),
        4 => Some((2, 2, &[1, 1])),
        8 => Some((2, 3, &[1, 1, 0])),
        9 => Some((3, 2, &[2, 2])),
        _ => None,
    }
}

fn digits(mut x: usize, p: usize, degree: usize) -> Vec<usize> {
    let mut d = vec![0; degree];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl Field {
    fn build(q: usize) -> Field {
        let (p, degree, modulus) = construction(q).expect("checked by caller");
        let (pu, du) = (p as usize, degree as usize);
        let mut add = [0u8; MAX_Q * MAX_Q];
        let mut mul = [0u8; MAX_Q * MAX_Q];
        for a in 0..q {
            let da = digits(a, pu, du);
            for b in 0..q {
                let db = digits(b, pu, du);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a * MAX_Q + b] = undigits(&sum, pu) as u8;

                // schoolbook product followed by reduction with x^u = -modulus
                let mut prod = vec![0usize; 2 * du];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % pu;
                    }
                }
                for k in (du..2 * du).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        let sub = (c * m as usize) % pu;
                        prod[k - du + i] = (prod[k - du + i] + pu - sub) % pu;
                    }
                }
                mul[a * MAX_Q + b] = undigits(&prod[..du], pu) as u8;
            }
        }
        let mut neg = [0u8; MAX_Q];
        let mut inv = [0u8; MAX_Q];
        for a in 0..q {
            for b in 0..q {
                if add[a * MAX_Q + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * MAX_Q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        let mut conj = [0u8; MAX_Q];
        for (a, c) in conj.iter_mut().enumerate().take(q) {
            *c = a as u8;
        }
        if q == 4 {
            conj.swap(2, 3);
        }
        Field {
            q: q as u8,
            p,
            degree,
            add,
            mul,
            neg,
            inv,
            conj,
        }
    }

    /// Shared tables for GF(q).
    pub fn get(q: usize) -> Result<&'static Field> {
        static FIELDS: [OnceLock<Field>; 10] = [const { OnceLock::new() }; 10];
        if construction(q).is_none() {
            return Err(Error::Config(format!(
                "unsupported field order {q}; expected one of {SUPPORTED_ORDERS:?}"
            )));
        }
        Ok(FIELDS[q].get_or_init(|| Field::build(q)))
    }

    pub fn order(&self) -> usize {
        self.q as usize
    }

    pub fn characteristic(&self) -> usize {
        self.p as usize
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn modulus_description(&self) -> &'static str {
        match self.q {
            4 => "x^2+x+1",
            8 => "x^3+x+1",
            9 => "x^2+2x+2",
            _ => "prime field",
        }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * MAX_Q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * MAX_Q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// GF(4) conjugation `ω ↔ ω̄`; the identity in every other field.
    #[inline]
    pub fn conj(&self, a: u8) -> u8 {
        self.conj[a as usize]
    }

    /// `dst += src` entrywise.
    pub fn add_assign(&self, dst: &mut [u8], src: &[u8]) {
        debug_assert_eq!(dst.len(), src.len());
        if self.p == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                *d ^= *s;
            }
        } else {
            for (d, s) in dst.iter_mut().zip(src) {
                *d = self.add(*d, *s);
            }
        }
    }

    /// `dst -= src` entrywise.
    pub fn sub_assign(&self, dst: &mut [u8], src: &[u8]) {
        debug_assert_eq!(dst.len(), src.len());
        if self.p == 2 {
            self.add_assign(dst, src);
        } else {
            for (d, s) in dst.iter_mut().zip(src) {
                *d = self.sub(*d, *s);
            }
        }
    }

    /// `dst += a * src` entrywise.
    pub fn axpy(&self, dst: &mut [u8], a: u8, src: &[u8]) {
        debug_assert_eq!(dst.len(), src.len());
        match a {
            0 => {}
            1 => self.add_assign(dst, src),
            _ => {
                for (d, s) in dst.iter_mut().zip(src) {
                    *d = self.add(*d, self.mul(a, *s));
                }
            }
        }
    }

    pub fn scale(&self, v: &mut [u8], a: u8) {
        for x in v.iter_mut() {
            *x = self.mul(a, *x);
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// An element of GF(q) tagged with its field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement {
    q: u8,
    value: u8,
}

impl FieldElement {
    pub fn new(q: usize, value: usize) -> Result<Self> {
        Field::get(q)?;
        if value >= q {
            return Err(Error::Domain(format!("value {value} is not an element of GF({q})")));
        }
        Ok(FieldElement {
            q: q as u8,
            value: value as u8,
        })
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

/// Operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Conj,
}

/// Applies `op` in GF(q). Unary operations ignore `b`.
pub fn field_arith(q: usize, a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
    let field = Field::get(q)?;
    if a.q() != q || b.q() != q {
        return Err(Error::Domain(format!(
            "operands over GF({}) and GF({}) used in GF({q})",
            a.q(),
            b.q()
        )));
    }
    let value = match op {
        ArithOp::Add => field.add(a.value, b.value),
        ArithOp::Mul => field.mul(a.value, b.value),
        ArithOp::Inv => field
            .inv(a.value)
            .ok_or_else(|| Error::Domain(format!("zero has no inverse in GF({q})")))?,
        ArithOp::Conj => field.conj(a.value),
    };
    Ok(FieldElement { q: q as u8, value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(q: usize, v: usize) -> FieldElement {
        FieldElement::new(q, v).unwrap()
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for &q in &SUPPORTED_ORDERS {
            let f = Field::get(q).unwrap();
            let n = q as u8;
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if a != 0 && b != 0 {
                        assert_ne!(f.mul(a, b), 0, "GF({q}) has zero divisors");
                    }
                    for c in 0..n {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_omega_squared_is_omega_bar() {
        let w = el(4, 2);
        let sq = field_arith(4, w, w, ArithOp::Mul).unwrap();
        assert_eq!(sq.value(), 3);
        // ω̄ = ω + 1
        let w1 = field_arith(4, w, el(4, 1), ArithOp::Add).unwrap();
        assert_eq!(w1, sq);
    }

    #[test]
    fn small_examples() {
        assert_eq!(field_arith(2, el(2, 1), el(2, 1), ArithOp::Add).unwrap().value(), 0);
        assert_eq!(field_arith(5, el(5, 2), el(5, 3), ArithOp::Mul).unwrap().value(), 1);
    }

    #[test]
    fn conjugation() {
        let f = Field::get(4).unwrap();
        assert_eq!([f.conj(0), f.conj(1), f.conj(2), f.conj(3)], [0, 1, 3, 2]);
        // conj is the Frobenius map x -> x^2 on GF(4)
        for a in 0..4 {
            assert_eq!(f.conj(a), f.mul(a, a));
        }
        let g = Field::get(9).unwrap();
        assert!((0..9).all(|a| g.conj(a) == a));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            field_arith(3, el(3, 0), el(3, 0), ArithOp::Inv),
            Err(Error::Domain(_))
        ));
        assert!(matches!(Field::get(6), Err(Error::Config(_))));
        assert!(matches!(Field::get(16), Err(Error::Config(_))));
        assert!(FieldElement::new(5, 5).is_err());
        assert!(field_arith(5, el(3, 1), el(3, 1), ArithOp::Add).is_err());
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for &q in &SUPPORTED_ORDERS {
            let f = Field::get(q).unwrap();
            let has_generator = (1..q as u8).any(|g| {
                let mut x = 1u8;
                let mut seen = std::collections::HashSet::new();
                for _ in 0..q - 1 {
                    x = f.mul(x, g);
                    seen.insert(x);
                }
                seen.len() == q - 1
            });
            assert!(has_generator, "GF({q})");
        }
    }
}
