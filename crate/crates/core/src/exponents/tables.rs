//! Data behind the printed tables and figures, as plain rows.

use rayon::prelude::*;
use serde::Serialize;

use super::{
    ensemble_params, gamma_bar, gamma_m, gv_distance, h2, technique_exponent, CodeClass, ExponentQuery, MValue,
    Technique,
};
use crate::error::Result;
use crate::search::ai::enumerate_ai_strings;

pub const TABLE_Q: [usize; 5] = [2, 3, 4, 5, 8];
pub const TABLE_M: [MValue; 6] = [
    MValue::Finite(3),
    MValue::Finite(5),
    MValue::Finite(10),
    MValue::Finite(100),
    MValue::Finite(1000),
    MValue::Infinite,
];
/// Regular ensembles with rates between 0.25 and 0.8.
pub const DEFAULT_LM: [(usize, usize); 7] = [(3, 4), (4, 6), (3, 5), (3, 6), (4, 8), (3, 9), (3, 15)];

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }
}

/// `A_v` and `N_v` for `v = 1, …, v_rows`.
pub fn nv_table(qs: &[usize], v_rows: usize) -> Result<Table> {
    let mut t = Table::new(&["q", "v", "a_v", "n_v"]);
    for &q in qs {
        for v in 1..=v_rows {
            let ai = enumerate_ai_strings(q, v)?;
            t.rows.push(vec![
                Cell::Int(q as u64),
                Cell::Int(v as u64),
                Cell::Int(ai.a_v),
                Cell::Int(ai.n_v),
            ]);
        }
    }
    Ok(t)
}

/// `γ_m` per `(q, m)`, then the bound `(q−1)/ln q` as row `m = bound`.
pub fn gamma_table(qs: &[usize], ms: &[MValue], stabilizer: bool) -> Result<Table> {
    let mut t = Table::new(&["q", "m", "gamma"]);
    for &m in ms {
        for &q in qs {
            let g = gamma_m(q, m, stabilizer)?.gamma;
            t.rows
                .push(vec![Cell::Int(q as u64), Cell::Text(m.to_string()), Cell::Float(g)]);
        }
    }
    for &q in qs {
        let b = gamma_bar(q, MValue::Infinite, stabilizer)?;
        t.rows
            .push(vec![Cell::Int(q as u64), Cell::Text("bound".into()), Cell::Float(b)]);
    }
    Ok(t)
}

fn rates(grid: usize) -> Vec<f64> {
    (0..grid).map(|i| i as f64 / grid as f64).collect()
}

/// Generic exponents of stabilizer codes on the quantum GV bound, for
/// `R = i/grid`.
pub fn fig1_table(grid: usize) -> Result<Table> {
    let mut t = Table::new(&["R", "F_SW", "F_MB", "F_PB", "F_CS"]);
    for r in rates(grid) {
        let mut row = vec![Cell::Float(r)];
        for tech in [Technique::Sw, Technique::Mb, Technique::Pb, Technique::Cs] {
            let q = ExponentQuery::at_gv(tech, CodeClass::Stabilizer, 2, r)?;
            row.push(Cell::Float(technique_exponent(&q, None)?));
        }
        t.rows.push(row);
    }
    Ok(t)
}

/// Binary codes on the GV bound (`kind = generic`) and regular LDPC
/// ensembles (`kind = ldpc`): the better of SW and MB, and CS.
pub fn fig2_table(grid: usize, lm: &[(usize, usize)]) -> Result<Table> {
    let mut t = Table::new(&["kind", "l", "m", "R", "F_SW_MB", "F_CS"]);
    for r in rates(grid) {
        let d = gv_distance(2, r, CodeClass::Classical)?;
        let sw_mb = (r * (1.0 - r)).min((1.0 - r) / 2.0);
        let cs = (1.0 - r) * (1.0 - h2(d / (1.0 - r)));
        t.rows.push(vec![
            Cell::Text("generic".into()),
            Cell::Text(String::new()),
            Cell::Text(String::new()),
            Cell::Float(r),
            Cell::Float(sw_mb),
            Cell::Float(cs),
        ]);
    }
    let params: Vec<_> = lm
        .par_iter()
        .map(|&(l, m)| ensemble_params(l, m))
        .collect::<Result<_>>()?;
    for p in params {
        let r = 1.0 - p.alpha;
        let query = |technique| ExponentQuery {
            technique,
            class: CodeClass::LdpcClassical,
            q: 2,
            rate: r,
            delta: p.delta_star,
            ensemble: Some((p.l, p.m)),
        };
        let sw = technique_exponent(&query(Technique::Sw), Some(&p))?;
        let mb = technique_exponent(&query(Technique::Mb), Some(&p))?;
        let cs = technique_exponent(&query(Technique::Cs), Some(&p))?;
        t.rows.push(vec![
            Cell::Text("ldpc".into()),
            Cell::Int(p.l as u64),
            Cell::Int(p.m as u64),
            Cell::Float(r),
            Cell::Float(sw.min(mb)),
            Cell::Float(cs),
        ]);
    }
    Ok(t)
}

/// `(ℓ, m, R, δ*, θ*)` per ensemble.
pub fn params_table(lm: &[(usize, usize)]) -> Result<Table> {
    let mut t = Table::new(&["l", "m", "R", "delta_star", "theta_star"]);
    let params: Vec<_> = lm
        .par_iter()
        .map(|&(l, m)| ensemble_params(l, m))
        .collect::<Result<_>>()?;
    for p in params {
        t.rows.push(vec![
            Cell::Int(p.l as u64),
            Cell::Int(p.m as u64),
            Cell::Float(1.0 - p.alpha),
            Cell::Float(p.delta_star),
            Cell::Float(p.theta_star),
        ]);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nv_contains_table_entry() {
        let t = nv_table(&TABLE_Q, 4).unwrap();
        assert!(t
            .rows
            .contains(&vec![Cell::Int(8), Cell::Int(3), Cell::Int(7 * 24), Cell::Int(24)]));
    }

    #[test]
    fn fig1_first_row() {
        let t = fig1_table(10).unwrap();
        assert_eq!(t.rows.len(), 10);
        let Cell::Float(cs) = t.rows[0][4] else { panic!() };
        assert!((cs - 0.22).abs() < 0.01);
    }
}
