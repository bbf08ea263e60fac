//! Exhaustive enumeration of the code (or of a coset in syndrome mode).

use crate::code::{Completer, SymbolCode};
use crate::error::{Error, Result};
use crate::search::{Algorithm, Ctx, Level, SearchBudget, SearchResult};

/// Calls `visit` with every vector of the code, including zero, as symbols.
/// With `offset`, visits `offset + code` instead.
fn for_each_vector<F>(code: &SymbolCode, offset: Option<&[u8]>, mut visit: F)
where
    F: FnMut(&[u8]),
{
    let f = code.field();
    let q = f.order();
    let basis = code.kernel_basis();
    let mut acc = match offset {
        Some(o) => code.to_coords(o),
        None => vec![0u8; code.n() * code.sym()],
    };
    let mut digits = vec![0usize; basis.len()];
    loop {
        visit(&code.from_coords(&acc));
        // odometer over the coefficients, applied as differences
        let mut i = 0;
        loop {
            if i == basis.len() {
                return;
            }
            let old = digits[i] as u8;
            digits[i] = (digits[i] + 1) % q;
            f.axpy(&mut acc, f.sub(digits[i] as u8, old), &basis[i]);
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
    }
}

fn check_size(code: &SymbolCode, budget: &SearchBudget) -> Result<()> {
    let bits = code.dimension() as f64 * (code.field().order() as f64).log2();
    if bits > budget.brute_log2_limit as f64 {
        return Err(Error::Infeasible(format!(
            "brute force over 2^{bits:.1} vectors exceeds the limit of 2^{}",
            budget.brute_log2_limit
        )));
    }
    Ok(())
}

/// Every vector of the code, as symbols (zero included).
pub fn enumerate_code(code: &SymbolCode, budget: &SearchBudget) -> Result<Vec<Vec<u8>>> {
    check_size(code, budget)?;
    let mut out = Vec::new();
    for_each_vector(code, None, |v| out.push(v.to_vec()));
    Ok(out)
}

pub fn brute_force_distance(code: &SymbolCode, budget: &SearchBudget) -> Result<SearchResult> {
    run(code, budget, None)
}

pub(crate) fn run(code: &SymbolCode, budget: &SearchBudget, syndrome: Option<&[u8]>) -> Result<SearchResult> {
    check_size(code, budget)?;
    let ctx = Ctx::new(code, budget, syndrome)?;
    let offset = match &ctx.target {
        None => None,
        Some(t) => {
            let c = Completer::new(code, &[]);
            let y = c.base_residual(Some(t));
            if !c.is_consistent(&y) {
                return Err(Error::Domain("the syndrome is not in the column space of H".into()));
            }
            let mut full = vec![0u8; code.n()];
            let mut particular = None;
            c.for_each_completion(&y, &mut full, 1, |v| {
                particular = Some(v.to_vec());
                false
            });
            particular
        }
    };
    let mut level = Level::default();
    for_each_vector(code, offset.as_deref(), |v| {
        level.trials += 1;
        if v.iter().any(|&x| x != 0) && ctx.accepts(v) {
            level.offer(&ctx, v);
        }
    });
    let max_w = ctx.max_weight();
    let mut result = SearchResult {
        algorithm: Algorithm::Brute,
        distance: None,
        witness: None,
        lower_bound: max_w + 1,
        trials: level.trials,
        truncated: true,
        notes: Vec::new(),
    };
    if let Some(w) = level.best_weight().filter(|&w| w <= max_w) {
        let best = level.take_best().expect("present");
        result.distance = Some(w);
        result.witness = Some(code.codeword(best));
        result.lower_bound = w;
        result.truncated = false;
    } else {
        result.notes.push(format!("no vector of weight ≤ {max_w}"));
    }
    Ok(result)
}
