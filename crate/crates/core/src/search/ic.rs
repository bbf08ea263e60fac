//! Irreducible-cluster search.
//!
//! A run starts from one nonzero symbol at position `j₀` and repeatedly takes
//! the first unsatisfied check. It extends the partial vector on a set `I` of
//! fresh positions of that check whose contributions to it form an additively
//! irreducible string summing to minus the check's current value. A run ends
//! when every check is satisfied and the partial vector is a codeword.
//!
//! Every irreducible codeword `c` is reached. Take the partial vector `x`
//! built so far along `c`, and the first check it violates. A smallest set of
//! the remaining support positions of `c` that repairs the check has
//! additively irreducible contributions. The run therefore stays inside
//! `supp(c)`, and when it stops, `c − x` is a codeword disjoint from `x`.
//! Irreducibility of `c` forces `c = x`. Minimum-weight codewords are
//! irreducible, and so is the lightest vector of `C⊥ ∖ C` among the
//! vectors of `C⊥`, so the search finds the distance.
//!
//! Runs only add positions after `j₀`, so each codeword is found from its
//! first support position, where its value is normalized.

use std::collections::{BTreeSet, HashSet};

use crate::code::{Codeword, SymbolCode};
use crate::error::Result;
use crate::search::ai::{ai_table, max_ai_length};
use crate::search::{run_levels, Algorithm, Ctx, Level, SearchBudget, SearchResult};

#[derive(Clone, Debug)]
pub struct IcOutcome {
    pub result: SearchResult,
    /// With `collect`: every irreducible codeword of weight `≤ D` (one per
    /// line through the origin for codes linear over their base field),
    /// ordered by weight, support and values.
    pub irreducible: Vec<Codeword>,
}

pub fn ic_distance(code: &SymbolCode, budget: &SearchBudget) -> Result<SearchResult> {
    Ok(ic_search(code, budget, false)?.result)
}

/// Without `collect`, caps the weight at `1, 2, …` until a hit. With
/// `collect`, runs once with cap `D = budget.max_weight` and also returns the
/// full irreducible list.
pub fn ic_search(code: &SymbolCode, budget: &SearchBudget, collect: bool) -> Result<IcOutcome> {
    let ctx = Ctx::new(code, budget, None)?;
    let ic = Ic::new(&ctx);
    if !collect {
        let result = run_levels(&ctx, Algorithm::Ic, Vec::new(), |cap| {
            let (found, lv) = ic.explore(cap);
            Ok(ic.score(found, lv))
        })?;
        return Ok(IcOutcome {
            result,
            irreducible: Vec::new(),
        });
    }
    let cap = ctx.max_weight();
    let (found, lv) = ic.explore(cap);
    let irreducible: Vec<Vec<u8>> = found.into_iter().filter(|x| ic.is_irreducible(x)).collect();
    let mut sorted: Vec<_> = irreducible
        .iter()
        .map(|x| (crate::code::canonical_key(x), x.clone()))
        .collect();
    sorted.sort();
    let mut scored = Level {
        trials: lv.trials,
        truncated: lv.truncated,
        ..Level::default()
    };
    for (_, x) in &sorted {
        if ctx.accepts(x) {
            scored.offer(&ctx, x);
        }
    }
    let truncated = scored.truncated;
    let trials = scored.trials;
    let best = scored.take_best();
    let distance = best.as_ref().map(|w| w.iter().filter(|&&x| x != 0).count());
    let result = SearchResult {
        algorithm: Algorithm::Ic,
        distance,
        witness: best.map(|w| code.codeword(w)),
        lower_bound: if truncated { 1 } else { distance.unwrap_or(cap + 1) },
        trials,
        truncated: truncated || distance.is_none(),
        notes: if distance.is_none() {
            vec![format!("no codeword of weight ≤ {cap}; d > {cap}")]
        } else {
            Vec::new()
        },
    };
    Ok(IcOutcome {
        result,
        irreducible: sorted.into_iter().map(|(_, x)| code.codeword(x)).collect(),
    })
}

struct Ic<'a, 'b> {
    ctx: &'b Ctx<'a>,
    code: &'a SymbolCode,
    /// positions touched by each check
    supports: Vec<Vec<usize>>,
    /// `ai[v][total]`
    ai: Vec<Vec<Vec<Vec<u8>>>>,
    max_col: usize,
    max_v: usize,
}

struct Run {
    x: Vec<u8>,
    s: Vec<u8>,
    w: usize,
    nodes: u64,
    aborted: bool,
    found: BTreeSet<Vec<u8>>,
    /// partial vectors already expanded; the subtree depends on `x` alone
    seen: HashSet<Vec<u8>>,
}

impl<'a, 'b> Ic<'a, 'b> {
    fn new(ctx: &'b Ctx<'a>) -> Self {
        let code = ctx.code;
        let sym = code.sym();
        let supports = (0..code.r())
            .map(|i| {
                (0..code.n())
                    .filter(|&j| (0..sym).any(|c| code.checks().get(i, j * sym + c) != 0))
                    .collect()
            })
            .collect();
        let max_v = max_ai_length(code.field()).min(ctx.max_weight());
        Ic {
            ctx,
            code,
            supports,
            ai: ai_table(code.field(), max_v),
            max_col: code.max_column_weight().max(1),
            max_v,
        }
    }

    /// All codewords reached by runs with weight cap `cap`, deduplicated.
    fn explore(&self, cap: usize) -> (BTreeSet<Vec<u8>>, Level) {
        let n = self.code.n();
        let starts = self.code.normalized_values();
        let parts = self.ctx.map_units(n, |j0| {
            let mut run = Run {
                x: vec![0; n],
                s: vec![0; self.code.r()],
                w: 1,
                nodes: 0,
                aborted: false,
                found: BTreeSet::new(),
                seen: HashSet::new(),
            };
            for &e in &starts {
                run.x[j0] = e;
                run.s.copy_from_slice(self.code.contribution(j0, e));
                self.dfs(&mut run, j0, cap);
                run.x[j0] = 0;
            }
            run
        });
        let mut found = BTreeSet::new();
        let mut lv = Level::default();
        for run in parts {
            lv.trials += run.nodes;
            lv.truncated |= run.aborted;
            found.extend(run.found);
        }
        (found, lv)
    }

    /// Keeps the irreducible, accepted codewords as hits.
    fn score(&self, found: BTreeSet<Vec<u8>>, mut lv: Level) -> Level {
        for x in &found {
            if self.is_irreducible(x) && self.ctx.accepts(x) {
                lv.offer(self.ctx, x);
            }
        }
        lv
    }

    fn dfs(&self, run: &mut Run, j0: usize, cap: usize) {
        if run.aborted || !run.seen.insert(run.x.clone()) {
            return;
        }
        run.nodes += 1;
        if run.nodes > self.ctx.budget.max_candidates || (run.nodes & 0xffff == 0 && self.ctx.expired()) {
            run.aborted = true;
            return;
        }
        let Some(i) = run.s.iter().position(|&v| v != 0) else {
            run.found.insert(run.x.clone());
            return;
        };
        let unsat = run.s.iter().filter(|&&v| v != 0).count();
        if run.w + unsat.div_ceil(self.max_col) > cap {
            return;
        }
        let f = self.code.field();
        let need = f.neg(run.s[i]) as usize;
        let cand: Vec<usize> = self.supports[i]
            .iter()
            .copied()
            .filter(|&j| j > j0 && run.x[j] == 0)
            .collect();
        let top = self.max_v.min(cap - run.w).min(cand.len());
        for v in 1..=top {
            let strings = &self.ai[v][need];
            if strings.is_empty() {
                continue;
            }
            let mut idx: Vec<usize> = (0..v).collect();
            loop {
                let pos: Vec<usize> = idx.iter().map(|&t| cand[t]).collect();
                for a in strings {
                    self.assign(run, &pos, a, 0, i, j0, cap);
                }
                if !next_combination(&mut idx, cand.len()) {
                    break;
                }
            }
        }
    }

    /// Fills `pos[t..]` with values whose contribution to check `i` is `a[t..]`.
    #[allow(clippy::too_many_arguments)]
    fn assign(&self, run: &mut Run, pos: &[usize], a: &[u8], t: usize, i: usize, j0: usize, cap: usize) {
        if t == pos.len() {
            run.w += pos.len();
            self.dfs(run, j0, cap);
            run.w -= pos.len();
            return;
        }
        let f = self.code.field();
        let j = pos[t];
        for e in 1..self.code.alphabet() as u8 {
            let contrib = self.code.contribution(j, e);
            if contrib[i] != a[t] {
                continue;
            }
            run.x[j] = e;
            f.add_assign(&mut run.s, contrib);
            self.assign(run, pos, a, t + 1, i, j0, cap);
            f.sub_assign(&mut run.s, contrib);
            run.x[j] = 0;
        }
    }

    /// No proper non-empty part of the support carries a codeword.
    fn is_irreducible(&self, x: &[u8]) -> bool {
        is_irreducible(self.code, x)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for t in i + 1..k {
                idx[t] = idx[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A codeword is irreducible when it is not the sum of two nonzero codewords
/// with disjoint supports, i.e. no proper non-empty part of its support
/// carries a codeword.
pub fn is_irreducible(code: &SymbolCode, x: &[u8]) -> bool {
    let f = code.field();
    let supp: Vec<usize> = (0..x.len()).filter(|&j| x[j] != 0).collect();
    let w = supp.len();
    if w <= 1 {
        return true;
    }
    // parts containing the first support position suffice: the complement
    // of a codeword part is one too
    let rest = w - 1;
    let mut s = vec![0u8; code.r()];
    for mask in 0u64..(1u64 << rest) - 1 {
        s.copy_from_slice(code.contribution(supp[0], x[supp[0]]));
        for t in 0..rest {
            if mask >> t & 1 == 1 {
                let j = supp[t + 1];
                f.add_assign(&mut s, code.contribution(j, x[j]));
            }
        }
        if s.iter().all(|&v| v == 0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::library::{hamming, repetition};
    use crate::code::stabilizer::library::steane;
    use crate::search::brute::enumerate_code;

    #[test]
    fn repetition_code() {
        let code = SymbolCode::classical(&repetition(3));
        let r = ic_distance(&code, &SearchBudget::default()).unwrap();
        assert_eq!(r.exact(), Some(3));
    }

    #[test]
    fn hamming_lists_all_weight_three_words() {
        let code = SymbolCode::classical(&hamming(3));
        let out = ic_search(&code, &SearchBudget::default().with_max_weight(3), true).unwrap();
        assert_eq!(out.result.exact(), Some(3));
        let all = enumerate_code(&code, &SearchBudget::default()).unwrap();
        let weight3: Vec<&Vec<u8>> = all
            .iter()
            .filter(|v| v.iter().filter(|&&x| x != 0).count() == 3)
            .collect();
        assert_eq!(weight3.len(), 7);
        assert_eq!(out.irreducible.len(), 7);
        for c in &out.irreducible {
            assert!(weight3.contains(&&c.entries().to_vec()));
        }
    }

    #[test]
    fn steane_stabilizer_mode() {
        let code = steane().to_stabilizer().unwrap().symbol_code();
        let r = ic_distance(&code, &SearchBudget::default().with_max_weight(3)).unwrap();
        assert_eq!(r.exact(), Some(3));
    }

    #[test]
    fn budget_gives_lower_bound() {
        let code = SymbolCode::classical(&hamming(3));
        let r = ic_distance(&code, &SearchBudget::default().with_max_weight(2)).unwrap();
        assert!(r.truncated);
        assert_eq!(r.distance, None);
        assert_eq!(r.lower_bound, 3);
    }

    #[test]
    fn irreducibility_examples() {
        let code = SymbolCode::classical(&hamming(3));
        assert!(is_irreducible(&code, &[1, 1, 1, 0, 0, 0, 0]));
        // sum of two disjoint weight-3 words: {0,1,2} and {3,4,...}
        // columns 4, 5, 1 (positions 3, 4, 0) overlap; use {3,5,6}: 4^6^7 = 5 no; {3,4,0}: 4^5^1 = 0
        let a = [1u8, 0, 0, 1, 1, 0, 0];
        assert!(code.is_codeword(&a));
        let b = [0u8, 1, 0, 0, 0, 1, 0]; // columns 2 and 6 sum to 4, not a codeword alone
        assert!(!code.is_codeword(&b));
        // all-ones has weight 7 and splits into {0,1,2} and the weight-4 rest
        assert!(!is_irreducible(&code, &[1; 7]));
    }
}
