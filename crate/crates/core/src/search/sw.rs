//! Sliding window: for every cyclic window `I(i, s)` enumerate the window
//! patterns of weight `⌊ds/n⌋` and re-encode each one by erasure completion
//! on the remaining `n − s` positions.
//!
//! Moving the window by one position changes its weight by at most one, and
//! the average window weight of a weight-`d` vector is `ds/n`, so some window
//! carries exactly `⌊ds/n⌋` of its nonzero symbols. Every weight-`d` vector
//! is therefore reached.

use crate::code::{Completer, SymbolCode};
use crate::error::Result;
use crate::search::{
    cyclic_window, for_each_pattern, ilog, run_levels, Algorithm, Ctx, EngineOptions, Level, SearchBudget, SearchResult,
};

/// Default slack added to `1 − θ*` in LDPC mode.
pub const DEFAULT_EPSILON: f64 = 0.01;

/// Window length: explicit, LDPC mode `⌈(1 − θ* + ε) n⌉`, or the generic
/// `k + 2⌊log_q n⌋` with `k` the dimension in symbols.
pub fn sw_window(code: &SymbolCode, options: &EngineOptions) -> usize {
    let n = code.n();
    let s = if let Some(s) = options.sw_window {
        s
    } else if let Some(theta) = options.ldpc_theta {
        let eps = options.epsilon.unwrap_or(DEFAULT_EPSILON);
        ((1.0 - theta + eps) * n as f64).ceil() as usize
    } else {
        code.dimension().div_ceil(code.sym()) + 2 * ilog(code.alphabet(), n)
    };
    s.clamp(1, n.max(1))
}

pub fn sw_distance(code: &SymbolCode, window: Option<usize>, budget: &SearchBudget) -> Result<SearchResult> {
    let options = EngineOptions {
        sw_window: window,
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
    let n = code.n();
    let s = sw_window(code, options);
    // with s = n every window covers the whole code
    let count = if s == n { 1 } else { n };
    let windows: Vec<Vec<usize>> = (0..count).map(|i| cyclic_window(n, i, s)).collect();
    let completers: Vec<Completer> = ctx.map_units(count, |i| Completer::new(code, &windows[i]));
    let mut notes = vec![format!("window length s = {s}")];
    let max_b = completers.iter().map(Completer::corank).max().unwrap_or(0);
    if max_b > 0 {
        notes.push(format!(
            "some windows are not information sets (largest co-rank {max_b}); all their completions are enumerated"
        ));
    }
    let first = ctx.first_values();
    let rest = ctx.all_values();
    run_levels(&ctx, Algorithm::Sw, notes, |d| {
        let v = d * s / n;
        let parts = ctx.map_units(count, |i| window_level(&ctx, &completers[i], v, d, &first, &rest));
        Ok(Level::merge_all(parts))
    })
}

/// All weight-`≤ d` completions of weight-`v` patterns on one window.
pub(crate) fn window_level(ctx: &Ctx, c: &Completer, v: usize, d: usize, first: &[u8], rest: &[u8]) -> Level {
    let code = ctx.code;
    let f = code.field();
    let known = c.known();
    let base = c.base_residual(ctx.target.as_deref());
    let limit = ctx.budget.completion_limit;
    let exact = c.completions_per_vector().is_some_and(|p| p <= limit);
    let mut lv = Level::default();
    let mut full = vec![0u8; code.n()];
    let mut y = base.clone();
    for_each_pattern(known.len(), v, first, rest, |pos, vals| {
        lv.trials += 1;
        if lv.trials & 0xfff == 0 && ctx.expired() {
            lv.truncated = true;
            return false;
        }
        y.copy_from_slice(&base);
        for (t, &k) in pos.iter().enumerate() {
            f.sub_assign(&mut y, c.known_contribution(k, vals[t]));
        }
        if !c.is_consistent(&y) {
            return true;
        }
        for &j in known {
            full[j] = 0;
        }
        for (t, &k) in pos.iter().enumerate() {
            full[known[k]] = vals[t];
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
        true
    });
    lv
}
