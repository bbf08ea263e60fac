//! Additively irreducible (AI) strings: q-ary strings none of whose
//! non-empty sub-multisets sums to zero.

use serde::Serialize;

use crate::error::Result;
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AiStrings {
    pub q: usize,
    pub v: usize,
    /// All AI strings of length `v`, lexicographically ordered.
    pub strings: Vec<Vec<u8>>,
    /// `A_v(q)`, the number of strings.
    pub a_v: u64,
    /// `N_v(q) = A_v(q)/(q − 1)`: strings per value of the total sum.
    pub n_v: u64,
}

/// Longest possible AI string over GF(p^u): `u(p − 1)`, the Davenport
/// constant of the additive group minus one.
pub fn max_ai_length(field: &Field) -> usize {
    field.degree() * (field.characteristic() - 1)
}

/// Exhaustive enumeration of AI strings of length `v`.
pub fn enumerate_ai_strings(q: usize, v: usize) -> Result<AiStrings> {
    let f = Field::get(q)?;
    let mut strings = Vec::new();
    if v >= 1 && v <= max_ai_length(f) {
        let mut cur = Vec::with_capacity(v);
        extend(f, v, 0u32, &mut cur, &mut strings);
    }
    let a_v = strings.len() as u64;
    Ok(AiStrings {
        q,
        v,
        strings,
        a_v,
        n_v: a_v / (q as u64 - 1),
    })
}

/// `sums` is the bitmask of subset sums reachable by non-empty subsets of `cur`.
fn extend(f: &Field, v: usize, sums: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() == v {
        out.push(cur.clone());
        return;
    }
    'next: for a in 1..f.order() as u8 {
        let mut new = sums | (1 << a);
        for s in 0..f.order() as u8 {
            if sums >> s & 1 == 1 {
                let t = f.add(s, a);
                if t == 0 {
                    continue 'next;
                }
                new |= 1 << t;
            }
        }
        cur.push(a);
        extend(f, v, new, cur, out);
        cur.pop();
    }
}

/// AI strings of length `v` whose total equals `total`, grouped for reuse by
/// the IC engine: `table[v][total]`.
#[allow(clippy::needless_range_loop)]
pub(crate) fn ai_table(f: &Field, max_v: usize) -> Vec<Vec<Vec<Vec<u8>>>> {
    let q = f.order();
    let mut table = vec![vec![Vec::new(); q]; max_v + 1];
    for v in 1..=max_v.min(max_ai_length(f)) {
        let all = enumerate_ai_strings(q, v).expect("supported field");
        for s in all.strings {
            let total = s.iter().fold(0u8, |acc, &x| f.add(acc, x));
            table[v][total as usize].push(s);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct check of the definition over all subsets.
    fn is_ai(f: &Field, s: &[u8]) -> bool {
        (1u32..1 << s.len()).all(|mask| {
            let sum = (0..s.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u8, |acc, i| f.add(acc, s[i]));
            sum != 0
        })
    }

    #[test]
    fn matches_definition() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Field::get(q).unwrap();
            for v in 1..=3 {
                let listed = enumerate_ai_strings(q, v).unwrap().strings;
                let mut direct = Vec::new();
                for x in 0..(q - 1).pow(v as u32) {
                    let s: Vec<u8> = (0..v)
                        .map(|i| (1 + x / (q - 1).pow(i as u32) % (q - 1)) as u8)
                        .collect();
                    if is_ai(f, &s) {
                        direct.push(s);
                    }
                }
                direct.sort();
                assert_eq!(listed, direct, "q = {q}, v = {v}");
            }
        }
    }

    #[test]
    fn table_one_entries() {
        let n = |q, v| enumerate_ai_strings(q, v).unwrap().n_v;
        assert_eq!(n(5, 4), 1);
        assert_eq!(n(8, 3), 24);
        assert_eq!(n(2, 2), 0);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn counts_split_evenly_over_totals() {
        for q in [3, 4, 5, 7, 8, 9] {
            let f = Field::get(q).unwrap();
            let table = ai_table(f, 4);
            for v in 1..=4 {
                let nv = enumerate_ai_strings(q, v).unwrap().n_v as usize;
                for total in 1..q {
                    assert_eq!(table[v][total].len(), nv);
                }
                assert!(table[v][0].is_empty());
            }
        }
    }
}
