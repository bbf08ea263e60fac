//! Matching bipartition: split the positions into two cyclic halves, list
//! the patterns of weight `⌊d/2⌋` on the left and `⌈d/2⌉` on the right, and
//! join the pairs whose syndromes add up to the goal.

use std::collections::HashMap;

use crate::code::SymbolCode;
use crate::error::Result;
use crate::field::Field;
use crate::search::{cyclic_window, for_each_pattern, run_levels, Algorithm, Ctx, Level, SearchBudget, SearchResult};

pub fn mb_distance(code: &SymbolCode, budget: &SearchBudget) -> Result<SearchResult> {
    run(code, budget, None)
}

pub(crate) fn run(code: &SymbolCode, budget: &SearchBudget, syndrome: Option<&[u8]>) -> Result<SearchResult> {
    let ctx = Ctx::new(code, budget, syndrome)?;
    let n = code.n();
    let half = n / 2;
    let rotations = if half == 0 { 1 } else { n };
    let goal = ctx.goal();
    run_levels(&ctx, Algorithm::Mb, Vec::new(), |d| {
        let parts = ctx.map_units(rotations, |i| {
            let left = cyclic_window(n, i, half);
            let right = cyclic_window(n, i + half, n - half);
            let mut lv = Level::default();
            let mut full = vec![0u8; n];
            let listed = match_halves(
                &ctx,
                &left,
                &right,
                d,
                code.r(),
                &|j, e, acc: &mut [u8]| code.field().add_assign(acc, code.contribution(j, e)),
                &goal,
                |l, r| {
                    full.iter_mut().for_each(|x| *x = 0);
                    for &(j, e) in l.iter().chain(r) {
                        full[j] = e;
                    }
                    if ctx.accepts(&full) {
                        lv.offer(&ctx, &full);
                    }
                },
            );
            lv.trials += listed;
            lv
        });
        Ok(Level::merge_all(parts))
    })
}

/// Joins weight-`⌊w/2⌋` patterns on `left` with weight-`⌈w/2⌉` patterns on
/// `right` whose accumulated syndromes (via `add`) sum to `goal`. Patterns
/// are reported as `(slot, value)` lists. Returns the number of patterns
/// listed.
#[allow(clippy::too_many_arguments)]
pub(crate) fn match_halves<A, V>(
    ctx: &Ctx,
    left: &[usize],
    right: &[usize],
    w: usize,
    width: usize,
    add: &A,
    goal: &[u8],
    mut visit: V,
) -> u64
where
    A: Fn(usize, u8, &mut [u8]),
    V: FnMut(&[(usize, u8)], &[(usize, u8)]),
{
    let f: &Field = ctx.code.field();
    let a = w / 2;
    let b = w - a;
    if a > left.len() || b > right.len() {
        return 0;
    }
    let all = ctx.all_values();
    let first = ctx.first_values();
    // normalize on whichever side carries the first nonzero symbol
    let (lf, rf) = if a > 0 { (&first, &all) } else { (&all, &first) };

    let mut trials = 0u64;
    let mut table: HashMap<Vec<u8>, Vec<Vec<(usize, u8)>>> = HashMap::new();
    for_each_pattern(left.len(), a, lf, &all, |pos, vals| {
        trials += 1;
        let mut s = vec![0u8; width];
        let pat: Vec<(usize, u8)> = pos.iter().zip(vals).map(|(&k, &e)| (left[k], e)).collect();
        for &(j, e) in &pat {
            add(j, e, &mut s);
        }
        table.entry(s).or_default().push(pat);
        true
    });
    let mut pat = Vec::with_capacity(b);
    for_each_pattern(right.len(), b, rf, &all, |pos, vals| {
        trials += 1;
        let mut key = goal.to_vec();
        pat.clear();
        for (&k, &e) in pos.iter().zip(vals) {
            pat.push((right[k], e));
            let mut c = vec![0u8; width];
            add(right[k], e, &mut c);
            f.sub_assign(&mut key, &c);
        }
        if let Some(list) = table.get(&key) {
            for l in list {
                visit(l, &pat);
            }
        }
        true
    });
    trials
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::library::hamming;
    use crate::code::stabilizer::library::{five_qubit, steane};

    #[test]
    fn small_codes() {
        let b = SearchBudget::default();
        assert_eq!(
            mb_distance(&SymbolCode::classical(&hamming(3)), &b).unwrap().exact(),
            Some(3)
        );
        assert_eq!(mb_distance(&steane().x_logicals(), &b).unwrap().exact(), Some(3));
        assert_eq!(mb_distance(&five_qubit().symbol_code(), &b).unwrap().exact(), Some(3));
    }

    #[test]
    fn syndrome_mode() {
        let code = SymbolCode::classical(&hamming(3));
        let r = run(&code, &SearchBudget::default(), Some(&[1, 1, 1])).unwrap();
        assert_eq!(r.exact(), Some(1));
        assert_eq!(r.witness.unwrap().entries(), &[0, 0, 0, 0, 0, 0, 1]);
    }
}
