//! Seeded samplers for regular LDPC ensembles, uniform random linear codes
//! and random stabilizer codes.

use serde::{Deserialize, Serialize};

use crate::code::{ParityCheckMatrix, StabilizerCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{DenseMatrix, Subspace};
use crate::quaternary::QuaternaryVector;
use crate::rng::{SeededRng, GENERATOR_ID};

/// Restarts allowed for the configuration-model sampler.
pub const RETRY_BUDGET: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnsembleKind {
    /// Exact column weight ℓ and row weight m.
    A,
    /// Gallager's ℓ independently permuted blocks of m identity matrices.
    B,
    RandomLinear,
    RandomStabilizer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    /// Column weight (A, B).
    pub l: usize,
    /// Row weight (A, B).
    pub m: usize,
    pub q: usize,
    /// Dimension (random kinds); logical qubits for stabilizer codes.
    pub k: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub enum Sampled {
    Classical(ParityCheckMatrix),
    Stabilizer(StabilizerCode),
}

/// Sidecar written next to every sampled code.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SampleMetadata {
    pub spec: EnsembleSpec,
    pub seed: u64,
    pub generator: String,
}

impl EnsembleSpec {
    pub fn ldpc(kind: EnsembleKind, n: usize, l: usize, m: usize, q: usize, seed: u64) -> Self {
        EnsembleSpec {
            kind,
            n,
            l,
            m,
            q,
            k: 0,
            seed,
        }
    }

    pub fn random_linear(n: usize, k: usize, q: usize, seed: u64) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::RandomLinear,
            n,
            l: 0,
            m: 0,
            q,
            k,
            seed,
        }
    }

    pub fn random_stabilizer(n: usize, k: usize, seed: u64) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::RandomStabilizer,
            n,
            l: 0,
            m: 0,
            q: 4,
            k,
            seed,
        }
    }

    /// Number of checks implied by the spec.
    pub fn checks(&self) -> usize {
        match self.kind {
            EnsembleKind::A | EnsembleKind::B => self.l * self.n / self.m.max(1),
            _ => self.n.saturating_sub(self.k),
        }
    }

    pub fn metadata(&self) -> SampleMetadata {
        SampleMetadata {
            spec: self.clone(),
            seed: self.seed,
            generator: GENERATOR_ID.to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("n must be positive".into()));
        }
        match self.kind {
            EnsembleKind::A | EnsembleKind::B => {
                Field::get(self.q)?;
                if !(3 <= self.l && self.l <= self.m) {
                    return Err(Error::Config(format!(
                        "need m ≥ ℓ ≥ 3, got ℓ = {}, m = {}",
                        self.l, self.m
                    )));
                }
                if !(self.l * self.n).is_multiple_of(self.m) {
                    return Err(Error::Config(format!(
                        "ℓn = {} is not divisible by m = {}",
                        self.l * self.n,
                        self.m
                    )));
                }
                let r = self.l * self.n / self.m;
                if self.kind == EnsembleKind::B && !r.is_multiple_of(self.l) {
                    return Err(Error::Config(format!("ℓ = {} does not divide r = {r}", self.l)));
                }
                if self.kind == EnsembleKind::A && self.m > self.n {
                    return Err(Error::Config(format!("row weight {} exceeds n = {}", self.m, self.n)));
                }
            }
            EnsembleKind::RandomLinear => {
                Field::get(self.q)?;
                if self.k > self.n {
                    return Err(Error::Config(format!("k = {} exceeds n = {}", self.k, self.n)));
                }
            }
            EnsembleKind::RandomStabilizer => {
                if self.q != 4 && self.q != 2 {
                    return Err(Error::Config("stabilizer codes are qubit codes (q = 4)".into()));
                }
                if self.k > self.n {
                    return Err(Error::Config(format!("k = {} exceeds n = {}", self.k, self.n)));
                }
            }
        }
        Ok(())
    }
}

fn coefficient(rng: &mut SeededRng, q: usize) -> u8 {
    if q == 2 {
        1
    } else {
        1 + rng.below(q - 1) as u8
    }
}

/// Draws one code from the ensemble. Identical specs give identical codes.
pub fn sample_ensemble(spec: &EnsembleSpec) -> Result<Sampled> {
    spec.validate()?;
    let mut rng = SeededRng::new(spec.seed);
    match spec.kind {
        EnsembleKind::A => sample_a(spec, &mut rng).map(Sampled::Classical),
        EnsembleKind::B => sample_b(spec, &mut rng).map(Sampled::Classical),
        EnsembleKind::RandomLinear => sample_linear(spec, &mut rng).map(Sampled::Classical),
        EnsembleKind::RandomStabilizer => sample_stabilizer(spec, &mut rng).map(Sampled::Stabilizer),
    }
}

/// Sparse rows from per-column row lists, with random coefficients.
fn assemble(spec: &EnsembleSpec, r: usize, columns: &[Vec<usize>], rng: &mut SeededRng) -> Result<ParityCheckMatrix> {
    let mut rows: Vec<Vec<(usize, u8)>> = vec![Vec::new(); r];
    for (j, col) in columns.iter().enumerate() {
        for &i in col {
            rows[i].push((j, 0));
        }
    }
    for row in rows.iter_mut() {
        for e in row.iter_mut() {
            e.1 = coefficient(rng, spec.q);
        }
    }
    let h = ParityCheckMatrix::from_sparse(spec.q, spec.n, rows)?;
    check_regular(&h, spec.l, spec.m)?;
    Ok(h)
}

fn check_regular(h: &ParityCheckMatrix, l: usize, m: usize) -> Result<()> {
    if h.column_weights().iter().any(|&w| w != l) || h.row_weights().iter().any(|&w| w != m) {
        return Err(Error::Sampling("sampled matrix is not (ℓ, m)-regular".into()));
    }
    Ok(())
}

/// Configuration model: ℓ row stubs per column drawn without replacement
/// from a pool holding m stubs per row, refusing a second edge between the
/// same row and column and restarting on a dead end.
fn sample_a(spec: &EnsembleSpec, rng: &mut SeededRng) -> Result<ParityCheckMatrix> {
    let (n, l, m) = (spec.n, spec.l, spec.m);
    let r = l * n / m;
    'attempt: for _ in 0..RETRY_BUDGET {
        let mut pool: Vec<usize> = (0..r).flat_map(|i| std::iter::repeat_n(i, m)).collect();
        let mut columns = Vec::with_capacity(n);
        for _ in 0..n {
            let mut col: Vec<usize> = Vec::with_capacity(l);
            for _ in 0..l {
                let fresh: Vec<usize> = (0..pool.len()).filter(|&p| !col.contains(&pool[p])).collect();
                if fresh.is_empty() {
                    continue 'attempt;
                }
                let p = fresh[rng.below(fresh.len())];
                col.push(pool.swap_remove(p));
            }
            col.sort_unstable();
            columns.push(col);
        }
        return assemble(spec, r, &columns, rng);
    }
    Err(Error::Sampling(format!(
        "A({l},{m}) sampler exhausted {RETRY_BUDGET} restarts at n = {n}"
    )))
}

fn sample_b(spec: &EnsembleSpec, rng: &mut SeededRng) -> Result<ParityCheckMatrix> {
    let (n, l, m) = (spec.n, spec.l, spec.m);
    let b = n / m;
    let r = l * b;
    let mut columns = vec![Vec::with_capacity(l); n];
    for t in 0..l {
        let mut perm: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut perm);
        for (c, col) in columns.iter_mut().enumerate() {
            col.push(t * b + perm[c] % b);
        }
    }
    assemble(spec, r, &columns, rng)
}

/// Uniform `(n − k) × n` matrices, resampled until they have full rank.
fn sample_linear(spec: &EnsembleSpec, rng: &mut SeededRng) -> Result<ParityCheckMatrix> {
    let (n, q) = (spec.n, spec.q);
    let r = n - spec.k;
    let f = Field::get(q)?;
    for _ in 0..RETRY_BUDGET {
        let rows: Vec<Vec<u8>> = (0..r).map(|_| (0..n).map(|_| rng.below(q) as u8).collect()).collect();
        if DenseMatrix::from_rows(f, n, &rows).rank() == r {
            return ParityCheckMatrix::from_dense_with_len(q, n, &rows);
        }
    }
    Err(Error::Sampling(format!(
        "no full-rank {r}×{n} matrix over GF({q}) in {RETRY_BUDGET} draws"
    )))
}

/// Grows the generator set one element at a time: each new generator is a
/// uniformly random element of the symplectic complement of the current
/// group, redrawn while it lies in the group itself.
fn sample_stabilizer(spec: &EnsembleSpec, rng: &mut SeededRng) -> Result<StabilizerCode> {
    let n = spec.n;
    let f2 = Field::get(2)?;
    let mut gens: Vec<QuaternaryVector> = Vec::new();
    let mut coords: Vec<Vec<u8>> = Vec::new(); // interleaved (u, v)
    while gens.len() < n - spec.k {
        // checks in interleaved coordinates: g.v pairs with u, g.u with v
        let checks: Vec<Vec<u8>> = coords
            .iter()
            .map(|g| g.chunks(2).flat_map(|p| [p[1], p[0]]).collect())
            .collect();
        let basis = DenseMatrix::from_rows(f2, 2 * n, &checks).kernel_basis();
        let group = Subspace::span(f2, 2 * n, &coords);
        let mut found = None;
        for _ in 0..RETRY_BUDGET {
            let mut x = vec![0u8; 2 * n];
            for b in &basis {
                if rng.below(2) == 1 {
                    f2.add_assign(&mut x, b);
                }
            }
            if !group.contains(&x) {
                found = Some(x);
                break;
            }
        }
        let x = found.ok_or_else(|| Error::Sampling("could not extend the stabilizer group".into()))?;
        let vals: Vec<u8> = x.chunks(2).map(|p| p[0] | (p[1] << 1)).collect();
        gens.push(QuaternaryVector::from_gf4(&vals)?);
        coords.push(x);
    }
    StabilizerCode::new(n, gens)
}
