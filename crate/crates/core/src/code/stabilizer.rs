//! Stabilizer codes as additive self-orthogonal GF(4) codes, and CSS codes.
//!
//! Internally every generator lives in binary symplectic coordinates; the
//! distance of the code is the minimum weight in `C⊥ ∖ C`, where `C` is the
//! GF(2) span of the generators and `C⊥` its trace-dual.

use serde::Serialize;

use crate::code::symbols::SymbolCode;
use crate::code::{Codeword, ParityCheckMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{DenseMatrix, Subspace};
use crate::quaternary::QuaternaryVector;

/// Outcome of [`validate_stabilizer`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub generators: usize,
    /// GF(2) rank of the generators.
    pub rank: usize,
    pub commuting: bool,
    pub independent: bool,
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<QuaternaryVector>,
    group: Subspace,
}

/// Generator coordinates interleaved as `(u_0, v_0, u_1, v_1, …)`.
fn interleaved(g: &QuaternaryVector) -> Vec<u8> {
    g.to_gf4().iter().flat_map(|&e| [e & 1, e >> 1]).collect()
}

/// Checks that generators pairwise commute and are GF(2)-independent.
pub fn validate_stabilizer(generators: &[QuaternaryVector]) -> Result<ValidationReport> {
    let n = generators.first().map_or(0, QuaternaryVector::len);
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::Validation(format!(
            "generator lengths differ: {} vs {n}",
            g.len()
        )));
    }
    for (i, a) in generators.iter().enumerate() {
        for (j, b) in generators.iter().enumerate().skip(i + 1) {
            if a.tip_unchecked(b) != 0 {
                return Err(Error::Validation(format!(
                    "generators {i} ({}) and {j} ({}) anticommute",
                    a.to_pauli(),
                    b.to_pauli()
                )));
            }
        }
    }
    let f2 = Field::get(2)?;
    let rows: Vec<Vec<u8>> = generators.iter().map(interleaved).collect();
    let rank = DenseMatrix::from_rows(f2, 2 * n, &rows).rank();
    if rank < generators.len() {
        return Err(Error::Validation(format!(
            "generators are dependent: rank {rank} < {}",
            generators.len()
        )));
    }
    Ok(ValidationReport {
        n,
        generators: generators.len(),
        rank,
        commuting: true,
        independent: true,
    })
}

impl StabilizerCode {
    /// Validates and wraps the generators of an `[[n, n − generators]]` code.
    pub fn new(n: usize, generators: Vec<QuaternaryVector>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::Validation(format!(
                "generator of length {} in a code of length {n}",
                g.len()
            )));
        }
        validate_stabilizer(&generators)?;
        let f2 = Field::get(2)?;
        let rows: Vec<Vec<u8>> = generators.iter().map(interleaved).collect();
        let group = Subspace::span(f2, 2 * n, &rows);
        Ok(StabilizerCode { n, generators, group })
    }

    pub fn from_pauli<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        let gens = lines
            .iter()
            .enumerate()
            .map(|(i, s)| crate::code::formats::parse_pauli_string(s.as_ref(), i + 1))
            .collect::<Result<Vec<_>>>()?;
        let n = gens.first().map_or(0, QuaternaryVector::len);
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn generators(&self) -> &[QuaternaryVector] {
        &self.generators
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        validate_stabilizer(&self.generators)
    }

    /// `c ∈ C⊥`: commutes with every generator.
    pub fn in_normalizer(&self, c: &QuaternaryVector) -> bool {
        c.len() == self.n && self.generators.iter().all(|g| g.tip_unchecked(c) == 0)
    }

    /// `c ∈ C`: a product of generators.
    pub fn in_stabilizer(&self, c: &QuaternaryVector) -> bool {
        c.len() == self.n && self.group.contains(&interleaved(c))
    }

    /// Binary symplectic check matrix (one row per generator) in
    /// interleaved coordinates.
    fn symplectic_checks(&self) -> DenseMatrix {
        let f2 = Field::get(2).expect("GF(2)");
        let rows: Vec<Vec<u8>> = self
            .generators
            .iter()
            .map(|g| {
                g.to_gf4()
                    .iter()
                    .flat_map(|&e| [e >> 1, e & 1]) // tip(g, e) pairs g.v with e.u and g.u with e.v
                    .collect()
            })
            .collect();
        DenseMatrix::from_rows(f2, 2 * self.n, &rows)
    }

    /// The searchable view: `C⊥` with `C` excluded.
    pub fn symbol_code(&self) -> SymbolCode {
        let f2 = Field::get(2).expect("GF(2)");
        SymbolCode::new(f2, self.n, 2, self.symplectic_checks(), Some(self.group.clone()))
    }

    /// A GF(2) basis of `C⊥` (the normalizer).
    pub fn normalizer_basis(&self) -> Vec<QuaternaryVector> {
        self.symplectic_checks()
            .kernel_basis()
            .iter()
            .map(|x| {
                let vals: Vec<u8> = x.chunks(2).map(|c| c[0] | (c[1] << 1)).collect();
                QuaternaryVector::from_gf4(&vals).expect("GF(4) values")
            })
            .collect()
    }
}

/// True iff `c` is a nonzero vector outside the stabilizer group, i.e. a
/// logical operator when `c ∈ C⊥`.
pub fn quantum_weight_filter(c: &QuaternaryVector, code: &StabilizerCode) -> bool {
    !c.is_zero() && !code.in_stabilizer(c)
}

/// Converts a GF(4) witness produced by the engines.
pub fn witness_to_quaternary(c: &Codeword) -> Result<QuaternaryVector> {
    if c.q() != 4 {
        return Err(Error::Domain(format!("witness over GF({}) is not quaternary", c.q())));
    }
    QuaternaryVector::from_gf4(c.entries())
}

/// A CSS code given by binary `Gx` (X-type checks) and `Gz` (Z-type checks).
#[derive(Clone, Debug)]
pub struct CssCode {
    gx: ParityCheckMatrix,
    gz: ParityCheckMatrix,
}

impl CssCode {
    pub fn new(gx: ParityCheckMatrix, gz: ParityCheckMatrix) -> Result<Self> {
        if gx.q() != 2 || gz.q() != 2 {
            return Err(Error::Config("CSS codes are binary".into()));
        }
        if gx.n() != gz.n() {
            return Err(Error::Validation(format!(
                "Gx has {} columns, Gz has {}",
                gx.n(),
                gz.n()
            )));
        }
        let product = gx.dense().mul(&gz.dense().transpose());
        for i in 0..product.rows() {
            for j in 0..product.cols() {
                if product.get(i, j) != 0 {
                    return Err(Error::Validation(format!(
                        "row {i} of Gx and row {j} of Gz overlap oddly (Gx·Gzᵀ ≠ 0)"
                    )));
                }
            }
        }
        Ok(CssCode { gx, gz })
    }

    pub fn gx(&self) -> &ParityCheckMatrix {
        &self.gx
    }

    pub fn gz(&self) -> &ParityCheckMatrix {
        &self.gz
    }

    pub fn n(&self) -> usize {
        self.gx.n()
    }

    /// The stabilizer code with X-type generators from an independent basis of
    /// the rows of `Gx` and Z-type generators from `Gz`.
    pub fn to_stabilizer(&self) -> Result<StabilizerCode> {
        let n = self.n();
        let mut gens = Vec::new();
        for (m, x_type) in [(&self.gx, true), (&self.gz, false)] {
            let mut d = m.dense();
            let rank = d.rref().len();
            for i in 0..rank {
                let bits = d.row(i);
                let zero = vec![0u8; n];
                let g = if x_type {
                    QuaternaryVector::from_planes(&zero, bits)?
                } else {
                    QuaternaryVector::from_planes(bits, &zero)?
                };
                gens.push(g);
            }
        }
        StabilizerCode::new(n, gens)
    }

    fn component(checks: &ParityCheckMatrix, excluded: &ParityCheckMatrix) -> SymbolCode {
        let f2 = Field::get(2).expect("GF(2)");
        let ex = Subspace::span(f2, excluded.n(), &excluded.dense().to_rows());
        SymbolCode::new(f2, checks.n(), 1, checks.dense(), Some(ex))
    }

    /// Binary code for X-type logicals: `ker Gz ∖ rowspace Gx`.
    pub fn x_logicals(&self) -> SymbolCode {
        Self::component(&self.gz, &self.gx)
    }

    /// Binary code for Z-type logicals: `ker Gx ∖ rowspace Gz`.
    pub fn z_logicals(&self) -> SymbolCode {
        Self::component(&self.gx, &self.gz)
    }
}

/// Standard small quantum codes.
pub mod library {
    use super::*;

    pub fn five_qubit() -> StabilizerCode {
        StabilizerCode::from_pauli(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).unwrap()
    }

    pub fn steane() -> CssCode {
        let h = crate::code::library::hamming_matrix(3);
        CssCode::new(h.clone(), h).unwrap()
    }

    /// `[[2^r − 1, 2^r − 1 − 2r]]` CSS code with `Gx = Gz = ` Hamming matrix.
    pub fn quantum_hamming(r: usize) -> CssCode {
        let h = crate::code::library::hamming_matrix(r);
        CssCode::new(h.clone(), h).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;

    fn qv(s: &str) -> QuaternaryVector {
        crate::code::formats::parse_pauli_string(s, 1).unwrap()
    }

    #[test]
    fn validation_examples() {
        let ok = validate_stabilizer(&[
            QuaternaryVector::from_gf4(&[2, 2]).unwrap(),
            QuaternaryVector::from_gf4(&[1, 1]).unwrap(),
        ])
        .unwrap();
        assert!(ok.commuting && ok.independent);
        let bad = validate_stabilizer(&[
            QuaternaryVector::from_gf4(&[2]).unwrap(),
            QuaternaryVector::from_gf4(&[1]).unwrap(),
        ]);
        match bad {
            Err(Error::Validation(msg)) => assert!(msg.contains("generators 0") && msg.contains("1")),
            other => panic!("expected validation error, got {other:?}"),
        }
        let dep = validate_stabilizer(&[qv("XX"), qv("XX")]);
        assert!(matches!(dep, Err(Error::Validation(_))));
    }

    #[test]
    fn steane_is_valid_css() {
        let s = steane();
        // direct multiplication of Gx and Gzᵀ over GF(2)
        let (gx, gz) = (s.gx().dense(), s.gz().dense());
        for i in 0..gx.rows() {
            for j in 0..gz.rows() {
                let dot = (0..7).map(|c| gx.get(i, c) & gz.get(j, c)).sum::<u8>() % 2;
                assert_eq!(dot, 0);
            }
        }
        let stab = s.to_stabilizer().unwrap();
        assert_eq!((stab.n(), stab.k()), (7, 1));
        assert!(stab.validate().is_ok());
    }

    #[test]
    fn css_rejects_noncommuting() {
        let gx = ParityCheckMatrix::from_dense(2, &[vec![1, 0]]).unwrap();
        let gz = ParityCheckMatrix::from_dense(2, &[vec![1, 1]]).unwrap();
        assert!(matches!(CssCode::new(gx, gz), Err(Error::Validation(_))));
    }

    #[test]
    fn weight_filter_examples() {
        let code = five_qubit();
        assert_eq!(code.k(), 1);
        for g in code.generators() {
            assert!(!quantum_weight_filter(g, &code));
        }
        assert!(!quantum_weight_filter(&QuaternaryVector::zero(5), &code));

        // enumerate C (16 elements) and C⊥ (64 elements) directly
        let gens = code.generators();
        let mut group = Vec::new();
        for mask in 0..16u32 {
            let mut acc = QuaternaryVector::zero(5);
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = acc.add(g).unwrap();
                }
            }
            group.push(acc);
        }
        let mut logical_weight3 = 0;
        let mut normalizer = 0;
        for x in 0..4usize.pow(5) {
            let vals: Vec<u8> = (0..5).map(|j| ((x >> (2 * j)) & 3) as u8).collect();
            let c = QuaternaryVector::from_gf4(&vals).unwrap();
            if !code.in_normalizer(&c) {
                continue;
            }
            normalizer += 1;
            let in_group = group.contains(&c);
            assert_eq!(code.in_stabilizer(&c), in_group);
            assert_eq!(quantum_weight_filter(&c, &code), !in_group && !c.is_zero());
            if !in_group && c.weight() == 3 {
                logical_weight3 += 1;
            }
            // no logical of weight below three
            if !in_group && !c.is_zero() {
                assert!(c.weight() >= 3);
            }
        }
        assert_eq!(normalizer, 64);
        assert!(logical_weight3 > 0);
        assert_eq!(code.normalizer_basis().len(), 6);
    }

    #[test]
    fn symbol_code_matches_commutation() {
        let code = five_qubit();
        let sc = code.symbol_code();
        assert_eq!(sc.dimension(), 6);
        for x in 0..4usize.pow(5) {
            let vals: Vec<u8> = (0..5).map(|j| ((x >> (2 * j)) & 3) as u8).collect();
            let c = QuaternaryVector::from_gf4(&vals).unwrap();
            assert_eq!(sc.is_codeword(&vals), code.in_normalizer(&c));
            assert_eq!(sc.is_excluded(&vals), code.in_stabilizer(&c));
        }
    }
}
