//! Classical linear codes in parity-check form, plus the CSS and stabilizer
//! code types in [`stabilizer`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::DenseMatrix;

pub mod erasure;
pub mod formats;
pub mod stabilizer;
pub mod symbols;

pub use erasure::{Completer, Completion, DEFAULT_COMPLETION_LIMIT};
pub use stabilizer::{CssCode, StabilizerCode, ValidationReport};
pub use symbols::SymbolCode;

/// Sparse `r × n` parity-check matrix over GF(q).
///
/// Each row lists `(column, coefficient)` pairs with strictly increasing
/// columns and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCheckMatrix {
    q: usize,
    n: usize,
    rows: Vec<Vec<(usize, u8)>>,
}

impl ParityCheckMatrix {
    pub fn from_sparse(q: usize, n: usize, rows: Vec<Vec<(usize, u8)>>) -> Result<Self> {
        Field::get(q)?;
        for (i, row) in rows.iter().enumerate() {
            for w in row.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::Domain(format!("row {i}: columns must be strictly increasing")));
                }
            }
            for &(j, a) in row {
                if j >= n {
                    return Err(Error::Domain(format!("row {i}: column {j} out of range")));
                }
                if a == 0 || a as usize >= q {
                    return Err(Error::Domain(format!(
                        "row {i}: coefficient {a} is not a nonzero element of GF({q})"
                    )));
                }
            }
        }
        Ok(ParityCheckMatrix { q, n, rows })
    }

    pub fn from_dense(q: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("ragged dense matrix".into()));
        }
        let sparse = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(j, &a)| (j, a))
                    .collect()
            })
            .collect();
        Self::from_sparse(q, n, sparse)
    }

    /// Like [`from_dense`](Self::from_dense) but keeps `n` when there are no rows.
    pub fn from_dense_with_len(q: usize, n: usize, rows: &[Vec<u8>]) -> Result<Self> {
        if rows.is_empty() {
            return Self::from_sparse(q, n, Vec::new());
        }
        let m = Self::from_dense(q, rows)?;
        if m.n != n {
            return Err(Error::Domain(format!("expected {n} columns, got {}", m.n)));
        }
        Ok(m)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn field(&self) -> &'static Field {
        Field::get(self.q).expect("validated at construction")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<(usize, u8)>] {
        &self.rows
    }

    pub fn dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.field(), self.r(), self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, a) in row {
                m.set(i, j, a);
            }
        }
        m
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for row in &self.rows {
            for &(j, _) in row {
                w[j] += 1;
            }
        }
        w
    }

    /// Column lists: for each column the `(row, coefficient)` pairs, rows ascending.
    pub fn columns(&self) -> Vec<Vec<(usize, u8)>> {
        let mut cols = vec![Vec::new(); self.n];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, a) in row {
                cols[j].push((i, a));
            }
        }
        cols
    }

    /// The submatrix on columns `cols`, renumbered `0..cols.len()`.
    pub fn restrict_columns(&self, cols: &[usize]) -> Result<Self> {
        let mut map = vec![usize::MAX; self.n];
        for (k, &j) in cols.iter().enumerate() {
            if j >= self.n {
                return Err(Error::Domain(format!("position {j} out of range")));
            }
            map[j] = k;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut r: Vec<(usize, u8)> = row
                    .iter()
                    .filter(|(j, _)| map[*j] != usize::MAX)
                    .map(|&(j, a)| (map[j], a))
                    .collect();
                r.sort_unstable();
                r
            })
            .collect();
        Self::from_sparse(self.q, cols.len(), rows)
    }
}

/// A q-ary vector produced or consumed by the search engines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Codeword {
    q: usize,
    entries: Vec<u8>,
}

impl Codeword {
    pub fn new(q: usize, entries: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x as usize >= q) {
            return Err(Error::Domain(format!("{bad} is not a symbol of GF({q})")));
        }
        Ok(Codeword { q, entries })
    }

    pub fn zero(q: usize, n: usize) -> Self {
        Codeword { q, entries: vec![0; n] }
    }

    pub(crate) fn from_raw(q: usize, entries: Vec<u8>) -> Self {
        Codeword { q, entries }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }
}

/// Ordering used to pick a canonical witness: weight, then support, then values.
pub fn canonical_key(entries: &[u8]) -> (usize, Vec<usize>, Vec<u8>) {
    let support: Vec<usize> = (0..entries.len()).filter(|&j| entries[j] != 0).collect();
    let values = support.iter().map(|&j| entries[j]).collect();
    (support.len(), support, values)
}

/// Result of column-restricted Gaussian elimination.
#[derive(Clone, Debug)]
pub struct Elimination {
    /// `H_J` in reduced row echelon form; zero rows come last.
    pub reduced: DenseMatrix,
    /// Pivot (unit) columns, as indices into `J`.
    pub pivots: Vec<usize>,
    /// Dependent columns, as indices into `J`.
    pub dependent: Vec<usize>,
    pub rank: usize,
    /// `|J| − rank`, the dimension of the shortened code on `J`.
    pub corank: usize,
}

/// `H · c`.
pub fn syndrome(h: &ParityCheckMatrix, c: &Codeword) -> Result<Vec<u8>> {
    if c.n() != h.n() || c.q() != h.q() {
        return Err(Error::Domain(format!(
            "vector of length {} over GF({}) against {}x{} matrix over GF({})",
            c.n(),
            c.q(),
            h.r(),
            h.n(),
            h.q()
        )));
    }
    let f = h.field();
    Ok(h.rows()
        .iter()
        .map(|row| row.iter().fold(0u8, |acc, &(j, a)| f.add(acc, f.mul(a, c.entries[j]))))
        .collect())
}

/// Gaussian elimination of `H` restricted to the columns in `positions`.
pub fn gaussian_eliminate(h: &ParityCheckMatrix, positions: &[usize]) -> Result<Elimination> {
    let sub = h.restrict_columns(positions)?;
    let mut reduced = sub.dense();
    let pivots = reduced.rref();
    let mut is_pivot = vec![false; positions.len()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let dependent = (0..positions.len()).filter(|&j| !is_pivot[j]).collect();
    let rank = pivots.len();
    Ok(Elimination {
        reduced,
        pivots,
        dependent,
        rank,
        corank: positions.len() - rank,
    })
}

/// A classical linear code `{c : Hc = 0}`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    h: ParityCheckMatrix,
    rank: usize,
}

impl LinearCode {
    pub fn new(h: ParityCheckMatrix) -> Self {
        let rank = h.dense().rank();
        LinearCode { h, rank }
    }

    pub fn parity_check(&self) -> &ParityCheckMatrix {
        &self.h
    }

    pub fn q(&self) -> usize {
        self.h.q()
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dimension(&self) -> usize {
        self.n() - self.rank
    }

    pub fn syndrome(&self, c: &Codeword) -> Result<Vec<u8>> {
        syndrome(&self.h, c)
    }

    pub fn is_codeword(&self, c: &Codeword) -> Result<bool> {
        Ok(self.syndrome(c)?.iter().all(|&s| s == 0))
    }

    /// A basis of the code (kernel of `H`).
    pub fn generator_basis(&self) -> Vec<Vec<u8>> {
        self.h.dense().kernel_basis()
    }

    pub fn gaussian_eliminate(&self, positions: &[usize]) -> Result<Elimination> {
        gaussian_eliminate(&self.h, positions)
    }

    /// The shortened code `C_J = {c_J : c vanishes off J}`, with positions
    /// renumbered in the order of `positions`.
    pub fn shorten(&self, positions: &[usize]) -> Result<LinearCode> {
        check_positions(self.n(), positions)?;
        Ok(LinearCode::new(self.h.restrict_columns(positions)?))
    }

    /// Every codeword agreeing with `values` on `positions`.
    ///
    /// Returns an empty list when the constraints are inconsistent. At most
    /// `limit` completions are produced; [`Completion::truncated`] reports
    /// when the cap bit.
    pub fn erasure_complete(&self, positions: &[usize], values: &[u8], limit: usize) -> Result<Completion> {
        check_positions(self.n(), positions)?;
        if positions.len() != values.len() {
            return Err(Error::Domain("one value per known position expected".into()));
        }
        if let Some(&bad) = values.iter().find(|&&x| x as usize >= self.q()) {
            return Err(Error::Domain(format!("{bad} is not in GF({})", self.q())));
        }
        let code = SymbolCode::classical(self);
        let completer = Completer::new(&code, positions);
        Ok(completer.complete_all(values, None, limit))
    }
}

pub(crate) fn check_positions(n: usize, positions: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &j in positions {
        if j >= n {
            return Err(Error::Domain(format!("position {j} out of range 0..{n}")));
        }
        if std::mem::replace(&mut seen[j], true) {
            return Err(Error::Domain(format!("position {j} repeated")));
        }
    }
    Ok(())
}

/// Convenience wrapper around [`LinearCode::shorten`].
pub fn shorten(code: &LinearCode, positions: &[usize]) -> Result<LinearCode> {
    code.shorten(positions)
}

/// Convenience wrapper around [`LinearCode::erasure_complete`] with the default cap.
pub fn erasure_complete(code: &LinearCode, positions: &[usize], values: &[u8]) -> Result<Completion> {
    code.erasure_complete(positions, values, DEFAULT_COMPLETION_LIMIT)
}

/// Standard small codes used throughout the tests and examples.
pub mod library {
    use super::*;

    /// Binary repetition code of length `n`.
    pub fn repetition(n: usize) -> LinearCode {
        let rows: Vec<Vec<u8>> = (0..n - 1)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r[i + 1] = 1;
                r
            })
            .collect();
        LinearCode::new(ParityCheckMatrix::from_dense_with_len(2, n, &rows).unwrap())
    }

    /// Parity-check matrix of the binary Hamming code with `r` checks; column
    /// `j` is the binary expansion of `j + 1` (least significant bit in row 0).
    pub fn hamming_matrix(r: usize) -> ParityCheckMatrix {
        let n = (1 << r) - 1;
        let rows: Vec<Vec<u8>> = (0..r)
            .map(|i| (0..n).map(|j| (((j + 1) >> i) & 1) as u8).collect())
            .collect();
        ParityCheckMatrix::from_dense(2, &rows).unwrap()
    }

    pub fn hamming(r: usize) -> LinearCode {
        LinearCode::new(hamming_matrix(r))
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;

    /// All codewords by enumerating every vector (independent of the kernel routine).
    fn brute_codewords(code: &LinearCode) -> Vec<Vec<u8>> {
        let (q, n) = (code.q(), code.n());
        let mut out = Vec::new();
        for mut x in 0..q.pow(n as u32) {
            let v: Vec<u8> = (0..n)
                .map(|_| {
                    let d = (x % q) as u8;
                    x /= q;
                    d
                })
                .collect();
            if code.is_codeword(&Codeword::new(q, v.clone()).unwrap()).unwrap() {
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn syndrome_examples() {
        let h = ParityCheckMatrix::from_dense(2, &[vec![1, 1, 1]]).unwrap();
        let c = Codeword::new(2, vec![1, 1, 0]).unwrap();
        assert_eq!(syndrome(&h, &c).unwrap(), vec![0]);
        assert_eq!(syndrome(&h, &Codeword::zero(2, 3)).unwrap(), vec![0]);
        let ham = hamming(3);
        let words = brute_codewords(&ham);
        assert_eq!(words.len(), 16);
        // columns 0, 5, 6 hold 1, 6, 7 and sum to zero
        let w = vec![1, 0, 0, 0, 0, 1, 1];
        // the last three columns hold 5, 6, 7, which do not
        assert!(!words.contains(&vec![0, 0, 0, 0, 1, 1, 1]));
        assert!(words.contains(&w));
        assert!(ham.is_codeword(&Codeword::new(2, w).unwrap()).unwrap());
        assert!(syndrome(&h, &Codeword::zero(2, 4)).is_err());
        assert!(syndrome(&h, &Codeword::zero(3, 3)).is_err());
    }

    #[test]
    fn sparse_invariants_enforced() {
        assert!(ParityCheckMatrix::from_sparse(2, 3, vec![vec![(1, 1), (0, 1)]]).is_err());
        assert!(ParityCheckMatrix::from_sparse(3, 3, vec![vec![(0, 0)]]).is_err());
        assert!(ParityCheckMatrix::from_sparse(3, 3, vec![vec![(3, 1)]]).is_err());
        let h = ParityCheckMatrix::from_sparse(3, 3, vec![vec![(0, 2), (2, 1)]]).unwrap();
        assert_eq!(h.dense().row(0), &[2, 0, 1]);
        assert_eq!(ParityCheckMatrix::from_dense(3, &h.dense().to_rows()).unwrap(), h);
    }

    #[test]
    fn elimination_examples() {
        let id = ParityCheckMatrix::from_dense(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(gaussian_eliminate(&id, &[0, 1, 2]).unwrap().corank, 0);
        let twins = ParityCheckMatrix::from_dense(2, &[vec![1, 1], vec![0, 0]]).unwrap();
        let e = gaussian_eliminate(&twins, &[0, 1]).unwrap();
        assert_eq!((e.rank, e.corank, e.dependent.clone()), (1, 1, vec![1]));
        // columns 0,1,2 of the Hamming matrix are 1, 2, 3 in binary: 1 + 2 = 3, one dependency
        let ham = hamming_matrix(3);
        let e = gaussian_eliminate(&ham, &[0, 1, 2]).unwrap();
        assert_eq!((e.rank, e.corank), (2, 1));
        // columns 0,1,3 are 1, 2, 4: the unit vectors
        assert_eq!(gaussian_eliminate(&ham, &[0, 1, 3]).unwrap().corank, 0);
    }

    #[test]
    fn shorten_examples() {
        let ham = hamming(3);
        assert_eq!(ham.shorten(&(0..7).collect::<Vec<_>>()).unwrap().dimension(), 4);
        let rep = repetition(3);
        assert_eq!(rep.shorten(&[0, 1]).unwrap().dimension(), 0);
        // every weight-3 Hamming codeword's support gives a one-dimensional shortened code
        for w in brute_codewords(&ham) {
            let supp: Vec<usize> = (0..7).filter(|&j| w[j] != 0).collect();
            if supp.len() == 3 {
                assert_eq!(ham.shorten(&supp).unwrap().dimension(), 1);
            }
        }
        assert!(ham.shorten(&[0, 0]).is_err());
    }

    #[test]
    fn erasure_examples() {
        let rep = repetition(3);
        let c = rep.erasure_complete(&[0], &[1], 16).unwrap();
        assert_eq!(c.codewords, vec![Codeword::new(2, vec![1, 1, 1]).unwrap()]);
        let ham = hamming(3);
        let words = brute_codewords(&ham);
        for w in &words {
            let all: Vec<usize> = (0..7).collect();
            let c = ham.erasure_complete(&all, w, 16).unwrap();
            assert_eq!(c.codewords.len(), 1);
            assert_eq!(c.codewords[0].entries(), &w[..]);
        }
        // positions 2,4,5,6 carry 011,101,110,111; positions {0,1,3} carry unit columns,
        // so {2,4,5,6} is an information set
        let info = [2, 4, 5, 6];
        for x in 0..16u8 {
            let vals: Vec<u8> = (0..4).map(|b| (x >> b) & 1).collect();
            let c = ham.erasure_complete(&info, &vals, 16).unwrap();
            let expected = words
                .iter()
                .filter(|w| info.iter().zip(&vals).all(|(&j, &v)| w[j] == v))
                .count();
            assert_eq!(expected, 1);
            assert_eq!(c.codewords.len(), 1);
        }
        // inconsistent constraint: repetition code cannot be (1, 0, ·)
        assert!(rep.erasure_complete(&[0, 1], &[1, 0], 16).unwrap().codewords.is_empty());
    }

    #[test]
    fn erasure_count_matches_shortened_dimension() {
        let mut rng = crate::rng::SeededRng::new(3);
        for _ in 0..40 {
            let q = [2, 3, 4][rng.below(3)];
            let n = 3 + rng.below(6);
            let r = 1 + rng.below(n);
            let rows: Vec<Vec<u8>> = (0..r).map(|_| (0..n).map(|_| rng.below(q) as u8).collect()).collect();
            let code = LinearCode::new(ParityCheckMatrix::from_dense(q, &rows).unwrap());
            let k = rng.below(n + 1);
            let known = rng.subset(n, k);
            let unknown: Vec<usize> = (0..n).filter(|j| !known.contains(j)).collect();
            let got = code.erasure_complete(&known, &vec![0; known.len()], 1 << 20).unwrap();
            let dim = code.shorten(&unknown).unwrap().dimension();
            assert_eq!(got.codewords.len(), q.pow(dim as u32));
            for c in &got.codewords {
                assert!(code.is_codeword(c).unwrap());
            }
        }
    }

    #[test]
    fn erasure_truncation_reported() {
        let ham = hamming(3);
        let c = ham.erasure_complete(&[], &[], 5).unwrap();
        assert!(c.truncated);
        assert_eq!(c.codewords.len(), 5);
        let c = ham.erasure_complete(&[], &[], 16).unwrap();
        assert!(!c.truncated);
        assert_eq!(c.codewords.len(), 16);
    }
}
