//! Distance-verification engines.
//!
//! Every engine works on a [`SymbolCode`] and tries weights `d = 1, 2, …` in
//! turn. At each weight all work units (windows, rotations, subsets, start
//! positions) are processed to completion and the hits are merged by their
//! canonical key, so the reported witness does not depend on the number of
//! worker threads.
//!
//! In syndrome mode the engines look for the lightest `e` with `H e = h`
//! instead of the lightest nonzero codeword; the excluded subspace is then
//! ignored.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::code::{canonical_key, Codeword, SymbolCode, DEFAULT_COMPLETION_LIMIT};
use crate::error::{Error, Result};

pub mod ai;
pub mod brute;
pub mod cs;
pub mod ic;
pub mod mb;
pub mod pb;
pub mod sw;

pub use ai::{enumerate_ai_strings, AiStrings};
pub use brute::{brute_force_distance, enumerate_code};
pub use cs::{covering_trials, cs_distance, CsOptions};
pub use ic::{ic_distance, ic_search, IcOutcome};
pub use mb::mb_distance;
pub use pb::{pb_distance, pb_window};
pub use sw::{sw_distance, sw_window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Brute,
    Sw,
    Mb,
    Pb,
    Cs,
    Ic,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Brute,
        Algorithm::Sw,
        Algorithm::Mb,
        Algorithm::Pb,
        Algorithm::Cs,
        Algorithm::Ic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Sw => "sw",
            Algorithm::Mb => "mb",
            Algorithm::Pb => "pb",
            Algorithm::Cs => "cs",
            Algorithm::Ic => "ic",
        }
    }
}

/// Resource limits shared by all engines.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest trial weight `D`.
    pub max_weight: usize,
    /// Stop after a weight level once this many candidates were examined.
    pub max_candidates: u64,
    #[serde(with = "opt_secs")]
    pub time_limit: Option<Duration>,
    pub seed: u64,
    pub jobs: usize,
    /// Cap on completions of one erasure pattern.
    pub completion_limit: usize,
    /// Brute force refuses codes with more than `2^brute_log2_limit` vectors.
    pub brute_log2_limit: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_weight: usize::MAX,
            max_candidates: u64::MAX,
            time_limit: None,
            seed: 0,
            jobs: 1,
            completion_limit: DEFAULT_COMPLETION_LIMIT,
            brute_log2_limit: 26,
        }
    }
}

impl SearchBudget {
    pub fn with_max_weight(mut self, d: usize) -> Self {
        self.max_weight = d;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_weight == 0 || self.max_candidates == 0 || self.jobs == 0 || self.completion_limit == 0 {
            return Err(Error::Config("budget limits must be positive".into()));
        }
        if self.time_limit.is_some_and(|t| t.is_zero()) {
            return Err(Error::Config("time limit must be positive".into()));
        }
        Ok(())
    }
}

mod opt_secs {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
        match d {
            Some(d) => s.serialize_some(&d.as_secs_f64()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Duration>, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.map(Duration::from_secs_f64))
    }
}

/// Engine-specific knobs; `None` picks the documented default.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EngineOptions {
    /// SW window length.
    pub sw_window: Option<usize>,
    /// PB window length.
    pub pb_window: Option<usize>,
    /// Erasure capacity θ* of the ensemble; switches SW and CS to LDPC mode.
    pub ldpc_theta: Option<f64>,
    /// Slack ε used with `ldpc_theta`.
    pub epsilon: Option<f64>,
    pub cs: CsOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub algorithm: Algorithm,
    /// Weight of the witness: exact unless `truncated`, otherwise an upper bound.
    pub distance: Option<usize>,
    pub witness: Option<Codeword>,
    /// Every weight below this value was excluded exhaustively.
    pub lower_bound: usize,
    pub trials: u64,
    pub truncated: bool,
    pub notes: Vec<String>,
}

impl SearchResult {
    /// The distance, when it was determined exactly.
    pub fn exact(&self) -> Option<usize> {
        if self.truncated {
            None
        } else {
            self.distance
        }
    }
}

/// Runs the selected engine.
pub fn search(
    code: &SymbolCode,
    algorithm: Algorithm,
    budget: &SearchBudget,
    options: &EngineOptions,
    syndrome: Option<&[u8]>,
) -> Result<SearchResult> {
    match algorithm {
        Algorithm::Brute => brute::run(code, budget, syndrome),
        Algorithm::Sw => sw::run(code, budget, options, syndrome),
        Algorithm::Mb => mb::run(code, budget, syndrome),
        Algorithm::Pb => pb::run(code, budget, options, syndrome),
        Algorithm::Cs => cs::run(code, budget, options, syndrome),
        Algorithm::Ic => {
            if syndrome.is_some() {
                return Err(Error::Config("the IC engine has no syndrome mode".into()));
            }
            Ok(ic::ic_search(code, budget, false)?.result)
        }
    }
}

type Key = (usize, Vec<usize>, Vec<u8>);

/// Shared state of one search call.
pub(crate) struct Ctx<'a> {
    pub code: &'a SymbolCode,
    pub target: Option<Vec<u8>>,
    pub budget: &'a SearchBudget,
    pool: Option<rayon::ThreadPool>,
    deadline: Option<Instant>,
}

impl<'a> Ctx<'a> {
    pub fn new(code: &'a SymbolCode, budget: &'a SearchBudget, syndrome: Option<&[u8]>) -> Result<Self> {
        budget.validate()?;
        let target = match syndrome {
            Some(h) if h.len() != code.r() => {
                return Err(Error::Domain(format!(
                    "syndrome has length {}, the code has {} checks",
                    h.len(),
                    code.r()
                )))
            }
            Some(h) if h.iter().any(|&x| x as usize >= code.field().order()) => {
                return Err(Error::Domain("syndrome entry outside the field".into()))
            }
            Some(h) if h.iter().any(|&x| x != 0) => Some(h.to_vec()),
            _ => None,
        };
        let pool = if budget.jobs > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(budget.jobs)
                    .build()
                    .map_err(|e| Error::Config(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        Ok(Ctx {
            code,
            target,
            budget,
            pool,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
        })
    }

    pub fn distance_mode(&self) -> bool {
        self.target.is_none()
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn max_weight(&self) -> usize {
        self.budget.max_weight.min(self.code.n())
    }

    /// Values allowed at the first nonzero slot of an enumerated pattern.
    /// Codes are closed under scaling, so one value per line suffices unless
    /// searching a coset.
    pub fn first_values(&self) -> Vec<u8> {
        if self.distance_mode() {
            self.code.normalized_values()
        } else {
            self.all_values()
        }
    }

    pub fn all_values(&self) -> Vec<u8> {
        (1..self.code.alphabet() as u8).collect()
    }

    /// Syndrome the pattern must reach (zero in distance mode).
    pub fn goal(&self) -> Vec<u8> {
        self.target.clone().unwrap_or_else(|| vec![0; self.code.r()])
    }

    pub fn accepts(&self, v: &[u8]) -> bool {
        if self.distance_mode() {
            self.code.accepts(v)
        } else {
            true
        }
    }

    /// Maps `f` over `0..count`, in parallel when configured. Output order is
    /// the index order.
    pub fn map_units<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match &self.pool {
            None => (0..count).map(f).collect(),
            Some(pool) => {
                use rayon::prelude::*;
                pool.install(|| (0..count).into_par_iter().map(f).collect())
            }
        }
    }
}

/// Hits and accounting for one weight level (or part of one).
#[derive(Clone, Debug, Default)]
pub(crate) struct Level {
    best: Option<(Key, Vec<u8>)>,
    pub trials: u64,
    pub truncated: bool,
}

impl Level {
    /// Offers a candidate that already passed [`Ctx::accepts`].
    pub fn offer(&mut self, ctx: &Ctx, v: &[u8]) {
        let mut w = v.to_vec();
        if ctx.distance_mode() {
            ctx.code.normalize(&mut w);
        }
        let key = canonical_key(&w);
        if self.best.as_ref().is_none_or(|(k, _)| key < *k) {
            self.best = Some((key, w));
        }
    }

    pub fn best_weight(&self) -> Option<usize> {
        self.best.as_ref().map(|(k, _)| k.0)
    }

    pub fn take_best(self) -> Option<Vec<u8>> {
        self.best.map(|(_, w)| w)
    }

    pub fn merge(mut self, other: Level) -> Level {
        self.trials += other.trials;
        self.truncated |= other.truncated;
        if let Some((k, w)) = other.best {
            if self.best.as_ref().is_none_or(|(mine, _)| k < *mine) {
                self.best = Some((k, w));
            }
        }
        self
    }

    pub fn merge_all(levels: impl IntoIterator<Item = Level>) -> Level {
        levels.into_iter().fold(Level::default(), Level::merge)
    }
}

/// Runs `level(d)` for `d = 1..=D` and stops at the first weight with a hit.
pub(crate) fn run_levels<F>(
    ctx: &Ctx,
    algorithm: Algorithm,
    mut notes: Vec<String>,
    mut level: F,
) -> Result<SearchResult>
where
    F: FnMut(usize) -> Result<Level>,
{
    let max_w = ctx.max_weight();
    let mut trials = 0u64;
    let mut first_gap: Option<usize> = None;
    for d in 1..=max_w {
        if ctx.expired() {
            notes.push(format!("time limit reached before weight {d}"));
            first_gap.get_or_insert(d);
            break;
        }
        if trials >= ctx.budget.max_candidates {
            notes.push(format!("candidate budget exhausted before weight {d}"));
            first_gap.get_or_insert(d);
            break;
        }
        let lv = level(d)?;
        trials += lv.trials;
        if lv.truncated {
            first_gap.get_or_insert(d);
        }
        if let Some((_, w)) = lv.best {
            let weight = w.iter().filter(|&&x| x != 0).count();
            let truncated = first_gap.is_some_and(|g| g < d);
            return Ok(SearchResult {
                algorithm,
                distance: Some(weight),
                witness: Some(ctx.code.codeword(w)),
                lower_bound: first_gap.map_or(weight, |g| g.min(weight)),
                trials,
                truncated,
                notes,
            });
        }
    }
    let lower = first_gap.unwrap_or(max_w + 1);
    notes.push(format!("no vector of weight ≤ {max_w} found; d ≥ {lower}"));
    Ok(SearchResult {
        algorithm,
        distance: None,
        witness: None,
        lower_bound: lower,
        trials,
        truncated: true,
        notes,
    })
}

/// Visits every vector supported on exactly `w` of the slots `0..slots`:
/// the first chosen slot takes values from `first`, the others from `rest`.
/// Stops early when `visit` returns false; returns whether it ran to the end.
pub(crate) fn for_each_pattern<F>(slots: usize, w: usize, first: &[u8], rest: &[u8], mut visit: F) -> bool
where
    F: FnMut(&[usize], &[u8]) -> bool,
{
    if w > slots {
        return true;
    }
    if w == 0 {
        return visit(&[], &[]);
    }
    if first.is_empty() || (w > 1 && rest.is_empty()) {
        return true;
    }
    let mut pos: Vec<usize> = (0..w).collect();
    let mut idx = vec![0usize; w];
    let mut vals = vec![0u8; w];
    loop {
        // all value assignments for this support
        idx.iter_mut().for_each(|x| *x = 0);
        loop {
            vals[0] = first[idx[0]];
            for t in 1..w {
                vals[t] = rest[idx[t]];
            }
            if !visit(&pos, &vals) {
                return false;
            }
            // advance the values, last slot fastest
            let mut t = w;
            let advanced = loop {
                if t == 0 {
                    break false;
                }
                t -= 1;
                let lim = if t == 0 { first.len() } else { rest.len() };
                idx[t] += 1;
                if idx[t] < lim {
                    break true;
                }
                idx[t] = 0;
            };
            if !advanced {
                break;
            }
        }
        // next combination
        let mut i = w;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if pos[i] < slots - w + i {
                pos[i] += 1;
                for k in i + 1..w {
                    pos[k] = pos[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Positions `start, start+1, …` (mod n), `len` of them.
pub(crate) fn cyclic_window(n: usize, start: usize, len: usize) -> Vec<usize> {
    (0..len).map(|t| (start + t) % n).collect()
}

/// `⌊log_base x⌋` for integers.
pub(crate) fn ilog(base: usize, x: usize) -> usize {
    let mut k = 0;
    let mut p = base;
    while p <= x {
        k += 1;
        p = p.saturating_mul(base);
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn pattern_counts() {
        for slots in 0..7 {
            for w in 0..=slots {
                let mut count = 0;
                let mut seen = std::collections::HashSet::new();
                for_each_pattern(slots, w, &[1], &[1, 2], |p, v| {
                    count += 1;
                    assert!(p.windows(2).all(|x| x[0] < x[1]));
                    assert!(seen.insert((p.to_vec(), v.to_vec())));
                    true
                });
                let expected = if w == 0 {
                    1
                } else {
                    binom(slots, w) * 2usize.pow(w as u32 - 1)
                };
                assert_eq!(count, expected, "slots {slots} w {w}");
            }
        }
    }

    #[test]
    fn pattern_early_stop() {
        let mut count = 0;
        let finished = for_each_pattern(5, 2, &[1, 2], &[1, 2], |_, _| {
            count += 1;
            count < 3
        });
        assert!(!finished);
        assert_eq!(count, 3);
    }

    #[test]
    fn integer_log() {
        assert_eq!(ilog(2, 1), 0);
        assert_eq!(ilog(2, 7), 2);
        assert_eq!(ilog(2, 8), 3);
        assert_eq!(ilog(4, 15), 1);
        assert_eq!(ilog(4, 16), 2);
    }
}
