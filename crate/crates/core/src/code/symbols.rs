//! A uniform view of every searchable code: the kernel of a check matrix over
//! a base field, where each of the `n` positions ("symbols") spans `sym`
//! consecutive coordinates and weight counts nonzero symbols.
//!
//! * classical GF(q) codes: base field GF(q), one coordinate per symbol;
//! * stabilizer codes: base field GF(2), two coordinates `(u, v)` per qubit,
//!   checks are the symplectic partners of the generators, and the code `C`
//!   spanned by the generators is excluded from distance computations;
//! * CSS components: binary kernels with the opposite stabilizer's row space
//!   excluded.
//!
//! A symbol value `e` in `0..alphabet` packs its coordinates base `q`, least
//! significant first. For qubits this is the GF(4) index `u + 2v`.

use crate::code::{Codeword, LinearCode};
use crate::field::Field;
use crate::matrix::{DenseMatrix, Subspace};

#[derive(Clone, Debug)]
pub struct SymbolCode {
    field: &'static Field,
    n: usize,
    sym: usize,
    alphabet: usize,
    checks: DenseMatrix,
    /// `contrib[(j * alphabet + e) * r ..][..r]` = syndrome of value `e` at position `j`.
    contrib: Vec<u8>,
    exclude: Option<Subspace>,
    rank: usize,
}

impl SymbolCode {
    pub fn new(field: &'static Field, n: usize, sym: usize, checks: DenseMatrix, exclude: Option<Subspace>) -> Self {
        assert_eq!(checks.cols(), n * sym, "check matrix width");
        let alphabet = field.order().pow(sym as u32);
        let r = checks.rows();
        let mut contrib = vec![0u8; n * alphabet * r];
        for j in 0..n {
            for e in 0..alphabet {
                let coords = coords_of(field, sym, e);
                let out = &mut contrib[(j * alphabet + e) * r..(j * alphabet + e + 1) * r];
                for (c, &a) in coords.iter().enumerate() {
                    if a != 0 {
                        let col = checks.column(j * sym + c);
                        field.axpy(out, a, &col);
                    }
                }
            }
        }
        let rank = checks.rank();
        SymbolCode {
            field,
            n,
            sym,
            alphabet,
            checks,
            contrib,
            exclude,
            rank,
        }
    }

    pub fn classical(code: &LinearCode) -> Self {
        let h = code.parity_check();
        SymbolCode::new(h.field(), h.n(), 1, h.dense(), None)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinates per symbol.
    pub fn sym(&self) -> usize {
        self.sym
    }

    /// Number of symbol values, including zero.
    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn r(&self) -> usize {
        self.checks.rows()
    }

    pub fn checks(&self) -> &DenseMatrix {
        &self.checks
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension over the base field.
    pub fn dimension(&self) -> usize {
        self.n * self.sym - self.rank
    }

    pub fn excluded(&self) -> Option<&Subspace> {
        self.exclude.as_ref()
    }

    pub fn has_exclusion(&self) -> bool {
        self.exclude.is_some()
    }

    #[inline]
    pub fn contribution(&self, j: usize, e: u8) -> &[u8] {
        let r = self.r();
        let k = j * self.alphabet + e as usize;
        &self.contrib[k * r..(k + 1) * r]
    }

    pub fn coords(&self, e: u8) -> Vec<u8> {
        coords_of(self.field, self.sym, e as usize)
    }

    pub fn symbol(&self, coords: &[u8]) -> u8 {
        let q = self.field.order();
        coords.iter().rev().fold(0usize, |acc, &c| acc * q + c as usize) as u8
    }

    pub fn to_coords(&self, symbols: &[u8]) -> Vec<u8> {
        symbols.iter().flat_map(|&e| self.coords(e)).collect()
    }

    pub fn from_coords(&self, coords: &[u8]) -> Vec<u8> {
        coords.chunks(self.sym).map(|c| self.symbol(c)).collect()
    }

    pub fn syndrome(&self, symbols: &[u8]) -> Vec<u8> {
        let mut s = vec![0u8; self.r()];
        for (j, &e) in symbols.iter().enumerate() {
            if e != 0 {
                self.field.add_assign(&mut s, self.contribution(j, e));
            }
        }
        s
    }

    pub fn is_codeword(&self, symbols: &[u8]) -> bool {
        self.syndrome(symbols).iter().all(|&x| x == 0)
    }

    /// True when `symbols` lies in the excluded subspace (the stabilizer group
    /// for quantum codes). Always false without an exclusion.
    pub fn is_excluded(&self, symbols: &[u8]) -> bool {
        self.exclude
            .as_ref()
            .is_some_and(|s| s.contains(&self.to_coords(symbols)))
    }

    /// Whether a nonzero codeword counts toward the distance.
    pub fn accepts(&self, symbols: &[u8]) -> bool {
        symbols.iter().any(|&e| e != 0) && !self.is_excluded(symbols)
    }

    /// A base-field basis of the code, in coordinates.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        self.checks.kernel_basis()
    }

    /// Alphabet size used for [`Codeword`] witnesses (4 for qubits).
    pub fn symbol_q(&self) -> usize {
        self.alphabet
    }

    pub fn codeword(&self, symbols: Vec<u8>) -> Codeword {
        Codeword::from_raw(self.symbol_q(), symbols)
    }

    /// Nonzero symbol values whose leading nonzero coordinate is one: one
    /// representative per line through the origin when the code is linear
    /// over its base field.
    pub fn normalized_values(&self) -> Vec<u8> {
        (1..self.alphabet as u8)
            .filter(|&e| self.coords(e).into_iter().find(|&c| c != 0) == Some(1))
            .collect()
    }

    /// Largest number of checks touching one position.
    pub fn max_column_weight(&self) -> usize {
        (0..self.n)
            .map(|j| {
                (0..self.r())
                    .filter(|&i| (0..self.sym).any(|c| self.checks.get(i, j * self.sym + c) != 0))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    /// Scales a vector so its first nonzero coordinate is one.
    pub fn normalize(&self, symbols: &mut [u8]) {
        let coords = self.to_coords(symbols);
        if let Some(&lead) = coords.iter().find(|&&c| c != 0) {
            if lead != 1 {
                let inv = self.field.inv(lead).expect("nonzero");
                let mut c = coords;
                self.field.scale(&mut c, inv);
                symbols.copy_from_slice(&self.from_coords(&c));
            }
        }
    }
}

fn coords_of(field: &Field, sym: usize, mut e: usize) -> Vec<u8> {
    let q = field.order();
    (0..sym)
        .map(|_| {
            let c = (e % q) as u8;
            e /= q;
            c
        })
        .collect()
}
