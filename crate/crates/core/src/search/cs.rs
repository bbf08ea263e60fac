//! Covering sets: pick position sets `J`, row-reduce `H_J`, and inspect all
//! `q^{b_J}` vectors of the shortened code `C_J` (or of the coset when a
//! syndrome is given). A weight-`d` vector is found as soon as some chosen
//! `J` covers its support.
//!
//! Two ways of choosing the sets are offered. The randomized mode draws
//! `⌈T(n,ρ,d) · n ln n⌉` random `ρ`-subsets, enough to cover every `d`-set
//! with overwhelming probability, and switches to listing all `ρ`-subsets
//! when that is cheaper. The exhaustive mode lists every `d`-subset, growing
//! the row reduction one column at a time along a depth-first walk; it is
//! deterministic and certifies the result.

use serde::{Deserialize, Serialize};

use crate::code::{Completer, SymbolCode};
use crate::error::Result;
use crate::rng::SeededRng;
use crate::search::{run_levels, Algorithm, Ctx, EngineOptions, Level, SearchBudget, SearchResult};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsOptions {
    /// Size `ρ` of the random sets; defaults to the number of independent
    /// checks (or `⌈(θ* − ε) n⌉` in LDPC mode).
    pub rho: Option<usize>,
    /// List every `d`-subset instead of sampling.
    pub exhaustive: bool,
    /// Sets with co-rank above this are skipped and recorded.
    pub b_max: Option<usize>,
}

fn ln_binom(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// `T(n, ρ, d) = C(n, d) / C(ρ, d)`: the fewest `ρ`-sets that can cover all
/// `d`-sets.
pub fn covering_trials(n: usize, rho: usize, d: usize) -> f64 {
    (ln_binom(n, d) - ln_binom(rho, d)).exp()
}

/// Default co-rank cap `⌈√(2 log_q C(n, ρ))⌉`.
pub fn default_b_max(q: usize, n: usize, rho: usize) -> usize {
    (2.0 * ln_binom(n, rho) / (q as f64).ln()).sqrt().ceil() as usize
}

pub fn cs_distance(code: &SymbolCode, options: &CsOptions, budget: &SearchBudget) -> Result<SearchResult> {
    let options = EngineOptions {
        cs: options.clone(),
        ..EngineOptions::default()
    };
    run(code, budget, &options, None)
}

pub(crate) fn run(
    code: &SymbolCode,
    budget: &SearchBudget,
    options: &EngineOptions,
    syndrome: Option<&[u8]>,
) -> Result<SearchResult> {
    let ctx = Ctx::new(code, budget, syndrome)?;
    if options.cs.exhaustive {
        let notes = vec!["exhaustive covering: every d-subset is inspected".to_string()];
        return run_levels(&ctx, Algorithm::Cs, notes, |d| Ok(exhaustive_level(&ctx, d)));
    }
    let n = code.n();
    let rho = match (options.cs.rho, options.ldpc_theta) {
        (Some(rho), _) => rho,
        (None, Some(theta)) => {
            let eps = options.epsilon.unwrap_or(crate::search::sw::DEFAULT_EPSILON);
            ((theta - eps) * n as f64).ceil() as usize
        }
        (None, None) => code.rank().div_ceil(code.sym()),
    }
    .clamp(1, n.max(1));
    let b_max = options
        .cs
        .b_max
        .unwrap_or_else(|| default_b_max(code.field().order(), n, rho));
    let notes = vec![format!("set size ρ = {rho}, co-rank cap {b_max}")];
    run_levels(&ctx, Algorithm::Cs, notes, |d| Ok(random_level(&ctx, rho, b_max, d)))
}

/// Lexicographic successor of a `k`-subset of `0..n`.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - k + i {
            s[i] += 1;
            for t in i + 1..k {
                s[t] = s[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

const CHUNK: usize = 1 << 14;

fn random_level(ctx: &Ctx, rho: usize, b_max: usize, d: usize) -> Level {
    let n = ctx.code.n();
    let rho_d = rho.max(d).min(n);
    let total = ln_binom(n, rho_d).exp();
    let ln_n = (n.max(2) as f64).ln();
    let wanted = (covering_trials(n, rho_d, d) * n as f64 * ln_n).ceil();
    let exhaustive = total <= wanted;
    let planned = if exhaustive { total.round() } else { wanted };
    let count = (planned.min(ctx.budget.max_candidates as f64).min(u64::MAX as f64)) as u64;
    let mut lv = Level {
        truncated: (count as f64) < planned,
        ..Level::default()
    };
    let mut rng = SeededRng::new(ctx.budget.seed ^ (d as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut lex: Vec<usize> = (0..rho_d).collect();
    let mut done = 0u64;
    let mut more = true;
    while done < count && more {
        if ctx.expired() {
            lv.truncated = true;
            break;
        }
        let take = (count - done).min(CHUNK as u64) as usize;
        let mut sets = Vec::with_capacity(take);
        for _ in 0..take {
            if exhaustive {
                sets.push(lex.clone());
                if !next_subset(&mut lex, n) {
                    more = false;
                    break;
                }
            } else {
                sets.push(rng.subset(n, rho_d));
            }
        }
        done += sets.len() as u64;
        let parts = ctx.map_units(sets.len(), |u| subset_level(ctx, &sets[u], b_max, d));
        lv = lv.merge(Level::merge_all(parts));
    }
    lv
}

/// Inspects the whole shortened code (or coset) on one set.
fn subset_level(ctx: &Ctx, set: &[usize], b_max: usize, d: usize) -> Level {
    let code = ctx.code;
    let n = code.n();
    let mut in_set = vec![false; n];
    for &j in set {
        in_set[j] = true;
    }
    let outside: Vec<usize> = (0..n).filter(|&j| !in_set[j]).collect();
    let c = Completer::new(code, &outside);
    let mut lv = Level {
        trials: 1,
        ..Level::default()
    };
    if c.corank() > b_max {
        lv.truncated = true;
        return lv;
    }
    let y = c.base_residual(ctx.target.as_deref());
    if !c.is_consistent(&y) {
        return lv;
    }
    let mut full = vec![0u8; n];
    let (visited, _) = c.for_each_completion(&y, &mut full, usize::MAX, |w| {
        if w.iter().filter(|&&x| x != 0).count() <= d && ctx.accepts(w) {
            lv.offer(ctx, w);
        }
        true
    });
    lv.trials += visited as u64;
    lv
}

/// Incremental echelon basis of the columns of `H_J` as `J` grows.
struct Echelon {
    /// `(pivot row, reduced column, combination of J-coordinates producing it)`
    rows: Vec<(usize, Vec<u8>, Vec<u8>)>,
    /// Kernel vectors of `H_J`, in J-coordinates.
    kernel: Vec<Vec<u8>>,
}

fn exhaustive_level(ctx: &Ctx, d: usize) -> Level {
    let n = ctx.code.n();
    if d > n {
        return Level::default();
    }
    let parts = ctx.map_units(n - d + 1, |first| {
        let mut lv = Level::default();
        let mut e = Echelon {
            rows: Vec::new(),
            kernel: Vec::new(),
        };
        let mut chosen = Vec::with_capacity(d);
        push_position(ctx, &mut e, &mut chosen, first, d);
        walk(ctx, &mut e, &mut chosen, d, &mut lv);
        lv
    });
    Level::merge_all(parts)
}

/// Adds the columns of position `j`; returns how much to pop afterwards.
fn push_position(ctx: &Ctx, e: &mut Echelon, chosen: &mut Vec<usize>, j: usize, d: usize) -> (usize, usize) {
    let code = ctx.code;
    let f = code.field();
    let sym = code.sym();
    let before = (e.rows.len(), e.kernel.len());
    let depth = chosen.len();
    chosen.push(j);
    for c in 0..sym {
        let mut col = code.checks().column(j * sym + c);
        let mut rep = vec![0u8; d * sym];
        rep[depth * sym + c] = 1;
        for (p, bcol, brep) in &e.rows {
            let a = col[*p];
            if a != 0 {
                let na = f.neg(a);
                f.axpy(&mut col, na, bcol);
                f.axpy(&mut rep, na, brep);
            }
        }
        match col.iter().position(|&x| x != 0) {
            None => e.kernel.push(rep),
            Some(p) => {
                let inv = f.inv(col[p]).expect("nonzero");
                f.scale(&mut col, inv);
                f.scale(&mut rep, inv);
                e.rows.push((p, col, rep));
            }
        }
    }
    before
}

fn pop_position(e: &mut Echelon, chosen: &mut Vec<usize>, before: (usize, usize)) {
    chosen.pop();
    e.rows.truncate(before.0);
    e.kernel.truncate(before.1);
}

fn walk(ctx: &Ctx, e: &mut Echelon, chosen: &mut Vec<usize>, d: usize, lv: &mut Level) {
    let n = ctx.code.n();
    if chosen.len() == d {
        leaf(ctx, e, chosen, d, lv);
        return;
    }
    let last = *chosen.last().expect("walk starts from one position");
    let remaining = d - chosen.len();
    for j in last + 1..=n - remaining {
        let before = push_position(ctx, e, chosen, j, d);
        walk(ctx, e, chosen, d, lv);
        pop_position(e, chosen, before);
    }
}

/// All vectors with support exactly `chosen` in the kernel (or coset).
fn leaf(ctx: &Ctx, e: &Echelon, chosen: &[usize], d: usize, lv: &mut Level) {
    let code = ctx.code;
    let f = code.field();
    let q = f.order();
    let sym = code.sym();
    lv.trials += 1;
    let mut offset = vec![0u8; d * sym];
    if let Some(t) = &ctx.target {
        let mut h = t.clone();
        for (p, bcol, brep) in &e.rows {
            let a = h[*p];
            if a != 0 {
                f.axpy(&mut h, f.neg(a), bcol);
                f.axpy(&mut offset, a, brep);
            }
        }
        if h.iter().any(|&x| x != 0) {
            return;
        }
    } else if e.kernel.is_empty() {
        return;
    }
    let b = e.kernel.len();
    let mut digits = vec![0usize; b];
    let mut x = offset;
    let mut full = vec![0u8; code.n()];
    loop {
        let syms: Vec<u8> = x.chunks(sym).map(|c| code.symbol(c)).collect();
        if syms.iter().all(|&s| s != 0) {
            for (&j, &s) in chosen.iter().zip(&syms) {
                full[j] = s;
            }
            if ctx.accepts(&full) {
                lv.offer(ctx, &full);
            }
            for &j in chosen {
                full[j] = 0;
            }
        }
        lv.trials += 1;
        let mut i = 0;
        loop {
            if i == b {
                return;
            }
            let old = digits[i] as u8;
            digits[i] = (digits[i] + 1) % q;
            f.axpy(&mut x, f.sub(digits[i] as u8, old), &e.kernel[i]);
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::library::hamming;
    use crate::code::stabilizer::library::five_qubit;

    #[test]
    fn covering_count_example() {
        assert!((covering_trials(10, 5, 2) - 4.5).abs() < 1e-12);
    }

    #[test]
    fn hamming_random_and_exhaustive() {
        let code = SymbolCode::classical(&hamming(3));
        let b = SearchBudget::default();
        let random = cs_distance(&code, &CsOptions::default(), &b).unwrap();
        assert_eq!(random.exact(), Some(3));
        let rho3 = CsOptions {
            rho: Some(3),
            ..CsOptions::default()
        };
        assert_eq!(cs_distance(&code, &rho3, &b).unwrap().exact(), Some(3));
        let ex = CsOptions {
            exhaustive: true,
            ..CsOptions::default()
        };
        let r = cs_distance(&code, &ex, &b).unwrap();
        assert_eq!(r.exact(), Some(3));
        assert_eq!(r.witness.unwrap().entries(), &[1, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn exhaustive_is_seed_independent() {
        let code = five_qubit().symbol_code();
        let ex = CsOptions {
            exhaustive: true,
            ..CsOptions::default()
        };
        let a = cs_distance(&code, &ex, &SearchBudget::default().with_seed(1)).unwrap();
        let b = cs_distance(&code, &ex, &SearchBudget::default().with_seed(2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.exact(), Some(3));
    }

    #[test]
    fn syndrome_modes() {
        let code = SymbolCode::classical(&hamming(3));
        let ex = EngineOptions {
            cs: CsOptions {
                exhaustive: true,
                ..CsOptions::default()
            },
            ..EngineOptions::default()
        };
        let r = run(&code, &SearchBudget::default(), &ex, Some(&[0, 1, 1])).unwrap();
        assert_eq!(r.witness.unwrap().entries(), &[0, 0, 0, 0, 0, 1, 0]);
        let r = run(
            &code,
            &SearchBudget::default(),
            &EngineOptions::default(),
            Some(&[0, 1, 1]),
        )
        .unwrap();
        assert_eq!(r.exact(), Some(1));
    }
}
