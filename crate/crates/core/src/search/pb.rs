//! Punctured bipartition: on each cyclic window `I(i, s)` the matching
//! bipartition runs inside the punctured code `C_I`, and every punctured
//! vector of weight `⌊ds/n⌋` it lists is re-encoded to full length by
//! erasure completion.
//!
//! The checks of `C_I` are the consistency rows of the window's erasure
//! system, so both steps share one row reduction per window.

use std::collections::HashSet;

use crate::code::{Completer, SymbolCode};
use crate::error::Result;
use crate::search::mb::{self, match_halves};
use crate::search::{cyclic_window, run_levels, Algorithm, Ctx, EngineOptions, Level, SearchBudget, SearchResult};

/// `⌈2nR/(1+R)⌉` with `R` the rate over the base field. For stabilizer codes
/// this is the rate of `C⊥`, `(1 + k/n)/2`.
pub fn pb_window(code: &SymbolCode, options: &EngineOptions) -> usize {
    let n = code.n();
    if let Some(s) = options.pb_window {
        return s.clamp(1, n.max(1));
    }
    let rate = code.dimension() as f64 / (n * code.sym()) as f64;
    let s = (2.0 * n as f64 * rate / (1.0 + rate) - 1e-9).ceil() as usize;
    s.clamp(1, n.max(1))
}

pub fn pb_distance(code: &SymbolCode, window: Option<usize>, budget: &SearchBudget) -> Result<SearchResult> {
    let options = EngineOptions {
        pb_window: window,
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
    let n = code.n();
    let s = pb_window(code, options);
    if s >= n {
        let mut r = mb::run(code, budget, syndrome)?;
        r.algorithm = Algorithm::Pb;
        r.notes
            .push(format!("window s = {s} covers the code; plain matching bipartition"));
        return Ok(r);
    }
    let ctx = Ctx::new(code, budget, syndrome)?;
    let windows: Vec<Vec<usize>> = (0..n).map(|i| cyclic_window(n, i, s)).collect();
    let completers: Vec<Completer> = ctx.map_units(n, |i| Completer::new(code, &windows[i]));
    let notes = vec![format!("window length s = {s}")];
    run_levels(&ctx, Algorithm::Pb, notes, |d| {
        let v = d * s / n;
        let parts = ctx.map_units(n, |i| window_level(&ctx, &completers[i], v, d));
        Ok(Level::merge_all(parts))
    })
}

fn window_level(ctx: &Ctx, c: &Completer, v: usize, d: usize) -> Level {
    let code = ctx.code;
    let f = code.field();
    let s = c.known().len();
    let rank = c.rank();
    let base = c.base_residual(ctx.target.as_deref());
    let half = s / 2;
    let rotations = if half == 0 { 1 } else { s };

    let mut lv = Level::default();
    let mut punctured: HashSet<Vec<(usize, u8)>> = HashSet::new();
    for t in 0..rotations {
        let left = cyclic_window(s, t, half);
        let right = cyclic_window(s, t + half, s - half);
        lv.trials += match_halves(
            ctx,
            &left,
            &right,
            v,
            code.r() - rank,
            &|k, e, acc: &mut [u8]| f.add_assign(acc, &c.known_contribution(k, e)[rank..]),
            &base[rank..],
            |l, r| {
                let mut p: Vec<(usize, u8)> = l.iter().chain(r).copied().collect();
                p.sort_unstable();
                punctured.insert(p);
            },
        );
    }

    let limit = ctx.budget.completion_limit;
    let exact = c.completions_per_vector().is_some_and(|p| p <= limit);
    let known = c.known();
    let mut full = vec![0u8; code.n()];
    for p in &punctured {
        let mut y = base.clone();
        for &(k, e) in p {
            f.sub_assign(&mut y, c.known_contribution(k, e));
        }
        debug_assert!(c.is_consistent(&y));
        for &j in known {
            full[j] = 0;
        }
        for &(k, e) in p {
            full[known[k]] = e;
        }
        let mut visited = 0u64;
        let (_, hit) = c.for_each_completion(&y, &mut full, limit, |w| {
            visited += 1;
            if w.iter().filter(|&&x| x != 0).count() <= d && ctx.accepts(w) {
                lv.offer(ctx, w);
            }
            true
        });
        lv.trials += visited;
        if hit && !exact {
            lv.truncated = true;
        }
    }
    lv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::library::hamming;
    use crate::code::stabilizer::library::five_qubit;
    use crate::search::mb_distance;

    #[test]
    fn hamming_window() {
        let code = SymbolCode::classical(&hamming(3));
        // R = 4/7 gives 2nR/(1+R) = 56/11, so s = 6
        assert_eq!(pb_window(&code, &EngineOptions::default()), 6);
        assert_eq!(
            pb_distance(&code, None, &SearchBudget::default()).unwrap().exact(),
            Some(3)
        );
    }

    #[test]
    fn full_window_is_plain_mb() {
        let code = SymbolCode::classical(&hamming(3));
        let b = SearchBudget::default();
        let pb = pb_distance(&code, Some(7), &b).unwrap();
        let mb = mb_distance(&code, &b).unwrap();
        assert_eq!(
            (pb.distance, pb.witness, pb.trials),
            (mb.distance, mb.witness, mb.trials)
        );
    }

    #[test]
    fn five_qubit_code() {
        let r = pb_distance(&five_qubit().symbol_code(), None, &SearchBudget::default()).unwrap();
        assert_eq!(r.exact(), Some(3));
    }
}
