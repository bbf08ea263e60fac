#![allow(dead_code)]

use distver::code::library::hamming_matrix;
use distver::code::stabilizer::library::{five_qubit, steane};
use distver::ensembles::{sample_ensemble, EnsembleKind, EnsembleSpec, Sampled};
use distver::rng::SeededRng;
use distver::{LinearCode, QuaternaryVector, StabilizerCode, SymbolCode};

pub struct Instance {
    pub label: String,
    pub code: SymbolCode,
}

fn classical(h: distver::ParityCheckMatrix) -> SymbolCode {
    SymbolCode::classical(&LinearCode::new(h))
}

pub fn random_linear(count: u64) -> Vec<Instance> {
    (0..count)
        .map(|seed| {
            let q = [2, 3, 4][seed as usize % 3];
            let n = 6 + (seed as usize * 7) % 9;
            let k = 2 + (seed as usize / 3) % (n / 2 - 1);
            let Sampled::Classical(h) = sample_ensemble(&EnsembleSpec::random_linear(n, k, q, seed)).unwrap() else {
                unreachable!()
            };
            Instance {
                label: format!("random-linear q={q} n={n} k={k} seed={seed}"),
                code: classical(h),
            }
        })
        .collect()
}

pub fn ldpc(count: u64) -> Vec<Instance> {
    (0..count)
        .map(|seed| {
            let kind = if seed % 2 == 0 {
                EnsembleKind::A
            } else {
                EnsembleKind::B
            };
            let n = [12, 18, 24][(seed as usize / 2) % 3];
            let Sampled::Classical(h) = sample_ensemble(&EnsembleSpec::ldpc(kind, n, 3, 6, 2, seed)).unwrap() else {
                unreachable!()
            };
            Instance {
                label: format!("{kind:?}(3,6) n={n} seed={seed}"),
                code: classical(h),
            }
        })
        .collect()
}

/// Column-permuted quantum Hamming codes: the full stabilizer view for
/// `r = 3` and the X-logical view for `r = 4`.
pub fn css_hamming(count: u64) -> Vec<Instance> {
    (0..count)
        .map(|seed| {
            let r = if seed % 2 == 0 { 3 } else { 4 };
            let n = (1 << r) - 1;
            let mut perm: Vec<usize> = (0..n).collect();
            SeededRng::new(seed).shuffle(&mut perm);
            let h = hamming_matrix(r).restrict_columns(&perm).unwrap();
            let css = distver::CssCode::new(h.clone(), h).unwrap();
            let (view, code) = if r == 3 {
                ("stabilizer", css.to_stabilizer().unwrap().symbol_code())
            } else {
                ("x-logicals", css.x_logicals())
            };
            Instance {
                label: format!("CSS Hamming r={r} {view} seed={seed}"),
                code,
            }
        })
        .collect()
}

/// Qubit permutations and per-qubit relabellings of X, Y, Z applied to the
/// five-qubit and Steane codes. Both preserve the distance.
pub fn small_stabilizers(count: u64) -> Vec<Instance> {
    (0..count)
        .map(|seed| {
            let (name, base) = if seed % 2 == 0 {
                ("five-qubit", five_qubit())
            } else {
                ("Steane", steane().to_stabilizer().unwrap())
            };
            let code = scramble(&base, seed);
            Instance {
                label: format!("{name} scrambled seed={seed}"),
                code: code.symbol_code(),
            }
        })
        .collect()
}

pub fn scramble(code: &StabilizerCode, seed: u64) -> StabilizerCode {
    let n = code.n();
    let mut rng = SeededRng::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let labels: Vec<[u8; 4]> = (0..n)
        .map(|_| {
            let mut l = [1u8, 2, 3];
            rng.shuffle(&mut l);
            [0, l[0], l[1], l[2]]
        })
        .collect();
    let gens = code
        .generators()
        .iter()
        .map(|g| {
            let vals = g.to_gf4();
            let out: Vec<u8> = (0..n).map(|j| labels[j][vals[perm[j]] as usize]).collect();
            QuaternaryVector::from_gf4(&out).unwrap()
        })
        .collect();
    StabilizerCode::new(n, gens).unwrap()
}

pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Distance by listing every vector of the ambient space; independent of
/// the kernel machinery used by the library's brute force.
pub fn naive_distance(code: &SymbolCode) -> Option<usize> {
    let a = code.alphabet();
    let n = code.n();
    assert!((a as f64).powi(n as i32) <= 4e6, "too large for the naive oracle");
    let mut v = vec![0u8; n];
    let mut best: Option<usize> = None;
    loop {
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            v[i] += 1;
            if (v[i] as usize) < a {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        let w = weight(&v);
        if best.is_some_and(|b| w >= b) {
            continue;
        }
        if code.syndrome(&v).iter().all(|&s| s == 0) && !code.is_excluded(&v) {
            best = Some(w);
        }
    }
}

/// No proper non-empty part of the support carries a codeword.
pub fn irreducible_oracle(code: &SymbolCode, v: &[u8]) -> bool {
    let supp: Vec<usize> = (0..v.len()).filter(|&j| v[j] != 0).collect();
    let w = supp.len();
    for mask in 1u64..(1u64 << w) - 1 {
        let mut part = vec![0u8; v.len()];
        for (t, &j) in supp.iter().enumerate() {
            if mask >> t & 1 == 1 {
                part[j] = v[j];
            }
        }
        if code.is_codeword(&part) {
            return false;
        }
    }
    true
}

pub fn normalized(code: &SymbolCode, v: &[u8]) -> Vec<u8> {
    let mut v = v.to_vec();
    code.normalize(&mut v);
    v
}
