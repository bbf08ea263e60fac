//! Fixed inputs shared by the benchmarks.

use distver::code::library::hamming;
use distver::code::stabilizer::library::quantum_hamming;
use distver::ensembles::{sample_ensemble, EnsembleKind, EnsembleSpec, Sampled};
use distver::{LinearCode, SymbolCode};

/// Named codes of increasing size; every engine answers each in well under a second.
pub fn codes() -> Vec<(&'static str, SymbolCode)> {
    let Sampled::Classical(h) =
        sample_ensemble(&EnsembleSpec::ldpc(EnsembleKind::B, 36, 3, 6, 2, 1)).expect("feasible")
    else {
        unreachable!()
    };
    vec![
        ("hamming-15", SymbolCode::classical(&hamming(4))),
        ("ldpc-b36", SymbolCode::classical(&LinearCode::new(h))),
        (
            "qhamming-15",
            quantum_hamming(4).to_stabilizer().expect("css").symbol_code(),
        ),
    ]
}
