use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use distver::code::formats::{read_code, read_pauli, write_alist, write_pauli, CodeFile};
use distver::code::stabilizer::witness_to_quaternary;
use distver::ensembles::{sample_ensemble, EnsembleKind, EnsembleSpec, Sampled};
use distver::exponents::tables::{self, Cell, Table, DEFAULT_LM, TABLE_M, TABLE_Q};
use distver::exponents::MValue;
use distver::search::{search, Algorithm, CsOptions, EngineOptions, SearchBudget};
use distver::{LinearCode, SymbolCode};

/// Parameters of one run, as stored in its manifest.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Params {
    Distance(DistanceArgs),
    Sample(SampleArgs),
    Exponents(ExponentsArgs),
}

impl Params {
    pub fn name(&self) -> &'static str {
        match self {
            Params::Distance(_) => "distance",
            Params::Sample(_) => "sample",
            Params::Exponents(_) => "exponents",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Params::Distance(a) => Some(a.seed),
            Params::Sample(a) => Some(a.seed),
            Params::Exponents(_) => None,
        }
    }

    pub fn inputs(&self) -> Vec<String> {
        match self {
            Params::Distance(a) => std::iter::once(&a.code)
                .chain(a.syndrome.as_ref())
                .map(|p| p.display().to_string())
                .collect(),
            _ => Vec::new(),
        }
    }
}

/// Outcome of running a command: its payload, the exit code it implies,
/// files to write and a one-line summary.
pub struct Outcome {
    pub payload: Map<String, Value>,
    pub exit: u8,
    pub summary: String,
    pub files: Vec<(PathBuf, String)>,
    /// Text for stdout in place of the envelope.
    pub stdout: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Brute,
    Sw,
    Mb,
    Pb,
    Cs,
    Ic,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Brute => Algorithm::Brute,
            Algo::Sw => Algorithm::Sw,
            Algo::Mb => Algorithm::Mb,
            Algo::Pb => Algorithm::Pb,
            Algo::Cs => Algorithm::Cs,
            Algo::Ic => Algorithm::Ic,
        }
    }
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct DistanceArgs {
    /// Code file: alist parity-check matrix or one Pauli string per line.
    pub code: PathBuf,
    #[arg(long, value_enum, default_value = "cs")]
    pub algo: Algo,
    /// Read the file as a stabilizer code.
    #[arg(long)]
    pub quantum: bool,
    /// Field order of an alist file.
    #[arg(long, default_value_t = 2)]
    pub field: usize,
    /// Largest weight to try.
    #[arg(long)]
    pub max_weight: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, env = "DISTVER_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// File with the target syndrome, whitespace separated.
    #[arg(long)]
    pub syndrome: Option<PathBuf>,
    /// Window length for SW and PB.
    #[arg(long)]
    pub window: Option<usize>,
    /// Set size for CS.
    #[arg(long)]
    pub rho: Option<usize>,
    /// CS lists every d-subset instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    /// Co-rank cap for random CS sets.
    #[arg(long)]
    pub b_max: Option<usize>,
    /// Erasure capacity of the ensemble; LDPC mode for SW and CS.
    #[arg(long)]
    pub ldpc_theta: Option<f64>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub max_candidates: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Brute force refuses codes with more than 2^this many vectors.
    #[arg(long, default_value_t = 26)]
    pub brute_log2_limit: u32,
    /// Also write the JSON envelope here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn distance(a: &DistanceArgs) -> Result<Outcome> {
    let text = read(&a.code)?;
    let file = if a.quantum {
        CodeFile::Stabilizer(read_pauli(&text).with_context(|| format!("in {}", a.code.display()))?)
    } else {
        read_code(&text, a.field).with_context(|| format!("in {}", a.code.display()))?
    };
    let (code, kind, k) = match &file {
        CodeFile::Classical(h) => {
            let lc = LinearCode::new(h.clone());
            let k = lc.dimension();
            (SymbolCode::classical(&lc), "classical", k)
        }
        CodeFile::Stabilizer(s) => {
            s.validate()?;
            (s.symbol_code(), "stabilizer", s.k())
        }
    };
    let syndrome = match &a.syndrome {
        None => None,
        Some(p) => Some(
            read(p)?
                .split_whitespace()
                .map(|t| {
                    t.parse::<u8>()
                        .with_context(|| format!("bad syndrome entry {t:?} in {}", p.display()))
                })
                .collect::<Result<Vec<u8>>>()?,
        ),
    };
    let mut budget = SearchBudget::default().with_seed(a.seed).with_jobs(a.jobs);
    budget.brute_log2_limit = a.brute_log2_limit;
    if let Some(d) = a.max_weight {
        budget.max_weight = d;
    }
    if let Some(c) = a.max_candidates {
        budget.max_candidates = c;
    }
    if let Some(t) = a.time_limit {
        if !(t > 0.0 && t.is_finite()) {
            bail!(distver::Error::Config(format!(
                "time limit {t} must be a positive number of seconds"
            )));
        }
        budget.time_limit = Some(Duration::from_secs_f64(t));
    }
    let options = EngineOptions {
        sw_window: a.window,
        pb_window: a.window,
        ldpc_theta: a.ldpc_theta,
        epsilon: a.epsilon,
        cs: CsOptions {
            rho: a.rho,
            exhaustive: a.exhaustive,
            b_max: a.b_max,
        },
    };
    let result = search(&code, a.algo.into(), &budget, &options, syndrome.as_deref())?;
    let summary = match (result.exact(), result.distance) {
        (Some(d), _) => format!("d = {d}"),
        (None, Some(w)) => format!(
            "d ≤ {w} (truncated, every weight below {} excluded)",
            result.lower_bound
        ),
        (None, None) => format!("d > {}", result.lower_bound - 1),
    };
    let exit = if result.exact().is_some() { 0 } else { 2 };
    let pauli = match (&file, &result.witness) {
        (CodeFile::Stabilizer(_), Some(w)) => Some(witness_to_quaternary(w)?.to_pauli()),
        _ => None,
    };
    let mut payload = to_map(&result);
    payload.insert("code".into(), json!({ "kind": kind, "n": code.n(), "k": k }));
    if let Some(p) = pauli {
        payload.insert("witness_pauli".into(), Value::String(p));
    }
    payload.insert("summary".into(), Value::String(summary.clone()));
    let files = a.out.iter().map(|p| (p.clone(), String::new())).collect();
    Ok(Outcome {
        payload,
        exit,
        summary,
        files,
        stdout: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleArg {
    A,
    B,
    Random,
    Stabilizer,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub ensemble: EnsembleArg,
    #[arg(long)]
    pub n: usize,
    /// Column weight.
    #[arg(long, default_value_t = 3)]
    pub l: usize,
    /// Row weight.
    #[arg(long, default_value_t = 6)]
    pub m: usize,
    /// Dimension, or logical qubits for stabilizer codes.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub q: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Code file to write; the JSON sidecar goes to `<out>.json`.
    #[arg(long)]
    pub out: PathBuf,
}

pub fn sample(a: &SampleArgs) -> Result<Outcome> {
    let spec = match a.ensemble {
        EnsembleArg::A => EnsembleSpec::ldpc(EnsembleKind::A, a.n, a.l, a.m, a.q, a.seed),
        EnsembleArg::B => EnsembleSpec::ldpc(EnsembleKind::B, a.n, a.l, a.m, a.q, a.seed),
        EnsembleArg::Random => EnsembleSpec::random_linear(a.n, a.k, a.q, a.seed),
        EnsembleArg::Stabilizer => EnsembleSpec::random_stabilizer(a.n, a.k, a.seed),
    };
    let (text, summary) = match sample_ensemble(&spec)? {
        Sampled::Classical(h) => {
            let s = format!("{} × {} parity-check matrix over GF({})", h.r(), h.n(), h.q());
            (write_alist(&h), s)
        }
        Sampled::Stabilizer(s) => {
            let summary = format!("[[{}, {}]] stabilizer code", s.n(), s.k());
            (write_pauli(&s), summary)
        }
    };
    let mut payload = Map::new();
    payload.insert("metadata".into(), serde_json::to_value(spec.metadata())?);
    payload.insert("file".into(), Value::String(a.out.display().to_string()));
    payload.insert("text".into(), Value::String(text.clone()));
    let sidecar = sidecar_path(&a.out);
    Ok(Outcome {
        payload,
        exit: 0,
        summary,
        files: vec![(a.out.clone(), text), (sidecar, String::new())],
        stdout: None,
    })
}

pub fn sidecar_path(p: &Path) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableArg {
    Nv,
    Gamma,
    Fig1,
    Fig2,
    Params,
}

#[derive(Clone, Debug, Args, Serialize, Deserialize)]
pub struct ExponentsArgs {
    #[arg(long, value_enum)]
    pub table: TableArg,
    /// Field orders (nv, gamma).
    #[arg(long, value_delimiter = ',', default_values_t = TABLE_Q.to_vec())]
    pub q: Vec<usize>,
    /// Row weights for gamma; `inf` allowed.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<String>,
    /// `(ℓ, m)` pairs written `l,m` (fig2, params).
    #[arg(long = "lm", value_parser = parse_pair)]
    pub lm: Vec<(usize, usize)>,
    /// Number of rates `R = i/grid` (fig1, fig2).
    #[arg(long, default_value_t = 100)]
    pub grid: usize,
    /// Rows `v = 1..=v_rows` (nv).
    #[arg(long, default_value_t = 4)]
    pub v_rows: usize,
    /// Stabilizer-code cluster counts (gamma).
    #[arg(long)]
    pub stabilizer: bool,
    /// CSV file; stdout otherwise. The JSON sidecar goes to `<out>.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (l, m) = s
        .split_once([',', ':'])
        .ok_or_else(|| format!("expected l,m, got {s:?}"))?;
    let p = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad integer {x:?} in {s:?}"))
    };
    Ok((p(l)?, p(m)?))
}

pub fn exponents(a: &ExponentsArgs) -> Result<Outcome> {
    if a.grid == 0 {
        bail!(distver::Error::Config("grid must be positive".into()));
    }
    let lm: Vec<(usize, usize)> = if a.lm.is_empty() {
        DEFAULT_LM.to_vec()
    } else {
        a.lm.clone()
    };
    let table = match a.table {
        TableArg::Nv => tables::nv_table(&a.q, a.v_rows)?,
        TableArg::Gamma => {
            let ms = if a.m.is_empty() {
                TABLE_M.to_vec()
            } else {
                a.m.iter()
                    .map(|s| s.parse::<MValue>())
                    .collect::<distver::Result<_>>()?
            };
            tables::gamma_table(&a.q, &ms, a.stabilizer)?
        }
        TableArg::Fig1 => tables::fig1_table(a.grid)?,
        TableArg::Fig2 => tables::fig2_table(a.grid, &lm)?,
        TableArg::Params => tables::params_table(&lm)?,
    };
    let csv = to_csv(&table)?;
    let mut payload = Map::new();
    payload.insert("table".into(), serde_json::to_value(a.table)?);
    payload.insert("csv".into(), Value::String(csv.clone()));
    let summary = format!("{} rows", table.rows.len());
    let (files, stdout) = match &a.out {
        Some(p) => (vec![(p.clone(), csv), (sidecar_path(p), String::new())], None),
        None => (Vec::new(), Some(csv)),
    };
    Ok(Outcome {
        payload,
        exit: 0,
        summary,
        files,
        stdout,
    })
}

/// Six significant digits, fixed notation.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit
    if s.trim_start_matches('-').replace('.', "").trim_start_matches('0').len() > 6 && decimals > 0 {
        let d = decimals - 1;
        return format!("{x:.d$}");
    }
    s
}

fn to_csv(t: &Table) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row.iter().map(|c| match c {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => sig6(*x),
            Cell::Text(s) => s.clone(),
        }))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn to_map<T: Serialize>(x: &T) -> Map<String, Value> {
    match serde_json::to_value(x).expect("serializable") {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(1.2071067811865475), "1.20711");
        assert_eq!(sig6(0.11986537540105), "0.119865");
        assert_eq!(sig6(1.5), "1.50000");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(9.999996), "10.0000");
        assert_eq!(sig6(123456789.0), "123456789");
        assert_eq!(sig6(-0.5), "-0.500000");
    }

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("3,6").unwrap(), (3, 6));
        assert_eq!(parse_pair("4:8").unwrap(), (4, 8));
        assert!(parse_pair("3").is_err());
    }
}
