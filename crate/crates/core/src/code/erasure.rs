//! Erasure completion: recover every vector of a code (or of a coset, given a
//! target syndrome) from its values on a set of known positions.
//!
//! The unknown block `H_J` is reduced once per position set. With `P` the row
//! transform taking `H_J` to its echelon form `R`, the unknowns satisfy
//! `R x_J = P (t − H_I c_I)`; rows of `R` beyond its rank are zero and turn
//! into consistency conditions on `c_I`, and each of the `q^b` assignments of
//! the free coordinates yields one completion.

use crate::code::symbols::SymbolCode;
use crate::code::Codeword;
use crate::matrix::DenseMatrix;

/// Default cap on completions returned by one query.
pub const DEFAULT_COMPLETION_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub codewords: Vec<Codeword>,
    /// The cap was reached before all completions were produced.
    pub truncated: bool,
}

pub struct Completer<'a> {
    code: &'a SymbolCode,
    known: Vec<usize>,
    unknown: Vec<usize>,
    rank: usize,
    /// unknown-coordinate index of the pivot in each pivot row
    pivot_coord: Vec<usize>,
    free_coords: Vec<usize>,
    /// `free_coef[i][f]`: coefficient of free coordinate `f` in pivot row `i`
    free_coef: Vec<Vec<u8>>,
    transform: DenseMatrix,
    /// `P · contribution(known[k], e)`
    known_contrib: Vec<u8>,
}

impl<'a> Completer<'a> {
    /// `known` may be in any order; completions are reported on all `n` positions.
    pub fn new(code: &'a SymbolCode, known: &[usize]) -> Self {
        let (n, sym, r) = (code.n(), code.sym(), code.r());
        let f = code.field();
        let mut is_known = vec![false; n];
        for &j in known {
            is_known[j] = true;
        }
        let unknown: Vec<usize> = (0..n).filter(|&j| !is_known[j]).collect();
        let ucols = unknown.len() * sym;

        let mut m = DenseMatrix::zeros(f, r, ucols + r);
        for i in 0..r {
            for (k, &j) in unknown.iter().enumerate() {
                for c in 0..sym {
                    m.set(i, k * sym + c, code.checks().get(i, j * sym + c));
                }
            }
            m.set(i, ucols + i, 1);
        }
        let pivots = m.rref_limited(Some(ucols));
        let rank = pivots.len();
        let mut is_pivot = vec![false; ucols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free_coords: Vec<usize> = (0..ucols).filter(|&c| !is_pivot[c]).collect();
        let free_coef = (0..rank)
            .map(|i| free_coords.iter().map(|&c| m.get(i, c)).collect())
            .collect();
        let mut transform = DenseMatrix::zeros(f, r, r);
        for i in 0..r {
            for k in 0..r {
                transform.set(i, k, m.get(i, ucols + k));
            }
        }

        let alph = code.alphabet();
        let mut known_contrib = vec![0u8; known.len() * alph * r];
        for (k, &j) in known.iter().enumerate() {
            for e in 1..alph {
                let v = transform.mul_vec(code.contribution(j, e as u8));
                let at = (k * alph + e) * r;
                known_contrib[at..at + r].copy_from_slice(&v);
            }
        }

        Completer {
            code,
            known: known.to_vec(),
            unknown,
            rank,
            pivot_coord: pivots,
            free_coords,
            free_coef,
            transform,
            known_contrib,
        }
    }

    pub fn code(&self) -> &SymbolCode {
        self.code
    }

    pub fn known(&self) -> &[usize] {
        &self.known
    }

    /// Rank of the unknown block; residual rows from here on are consistency
    /// conditions, i.e. the checks of the code punctured to the known positions.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension over the base field of the shortened code on the unknown positions.
    pub fn corank(&self) -> usize {
        self.free_coords.len()
    }

    /// `q^b`, or `None` on overflow.
    pub fn completions_per_vector(&self) -> Option<usize> {
        self.code.field().order().checked_pow(self.corank() as u32)
    }

    /// `P · t` (zero without a target): the starting residual.
    pub fn base_residual(&self, target: Option<&[u8]>) -> Vec<u8> {
        match target {
            Some(t) => self.transform.mul_vec(t),
            None => vec![0; self.code.r()],
        }
    }

    /// Contribution of value `e` at the `k`-th known position, to be subtracted
    /// from the residual.
    #[inline]
    pub fn known_contribution(&self, k: usize, e: u8) -> &[u8] {
        let r = self.code.r();
        let at = (k * self.code.alphabet() + e as usize) * r;
        &self.known_contrib[at..at + r]
    }

    /// Residual for the given known values (in the order of `known`).
    pub fn residual(&self, values: &[u8], target: Option<&[u8]>) -> Vec<u8> {
        let mut y = self.base_residual(target);
        for (k, &e) in values.iter().enumerate() {
            if e != 0 {
                self.code.field().sub_assign(&mut y, self.known_contribution(k, e));
            }
        }
        y
    }

    #[inline]
    pub fn is_consistent(&self, residual: &[u8]) -> bool {
        residual[self.rank..].iter().all(|&x| x == 0)
    }

    /// Calls `visit` with each completion of a consistent residual. `full`
    /// must already hold the known values; its unknown positions are
    /// overwritten. Stops after `limit` completions or when `visit` returns
    /// false. Returns `(completions visited, hit the limit)`.
    pub fn for_each_completion<F>(&self, residual: &[u8], full: &mut [u8], limit: usize, mut visit: F) -> (usize, bool)
    where
        F: FnMut(&[u8]) -> bool,
    {
        debug_assert!(self.is_consistent(residual));
        let f = self.code.field();
        let q = f.order() as u8;
        let sym = self.code.sym();
        let b = self.free_coords.len();
        let mut coords = vec![0u8; self.unknown.len() * sym];
        let mut free = vec![0u8; b];
        let mut count = 0usize;
        loop {
            if count == limit {
                return (count, true);
            }
            for c in coords.iter_mut() {
                *c = 0;
            }
            for (fi, &c) in self.free_coords.iter().enumerate() {
                coords[c] = free[fi];
            }
            for i in 0..self.rank {
                let mut x = residual[i];
                for (fi, &a) in self.free_coef[i].iter().enumerate() {
                    if a != 0 && free[fi] != 0 {
                        x = f.sub(x, f.mul(a, free[fi]));
                    }
                }
                coords[self.pivot_coord[i]] = x;
            }
            for (k, &j) in self.unknown.iter().enumerate() {
                full[j] = self.code.symbol(&coords[k * sym..(k + 1) * sym]);
            }
            count += 1;
            if !visit(full) {
                return (count, false);
            }
            // next free assignment, little-endian counter
            let mut i = 0;
            while i < b {
                free[i] += 1;
                if free[i] < q {
                    break;
                }
                free[i] = 0;
                i += 1;
            }
            if i == b {
                return (count, false);
            }
        }
    }

    /// All completions of `values` (in the order of `known`), up to `limit`.
    pub fn complete_all(&self, values: &[u8], target: Option<&[u8]>, limit: usize) -> Completion {
        let y = self.residual(values, target);
        if !self.is_consistent(&y) {
            return Completion {
                codewords: Vec::new(),
                truncated: false,
            };
        }
        let mut full = vec![0u8; self.code.n()];
        for (k, &j) in self.known.iter().enumerate() {
            full[j] = values[k];
        }
        let mut out = Vec::new();
        let (_, hit) = self.for_each_completion(&y, &mut full, limit, |c| {
            out.push(self.code.codeword(c.to_vec()));
            true
        });
        let exact = self.completions_per_vector().is_some_and(|total| total <= limit);
        Completion {
            codewords: out,
            truncated: hit && !exact,
        }
    }
}
