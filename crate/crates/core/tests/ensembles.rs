use proptest::prelude::*;

use distver::code::erasure_complete;
use distver::ensembles::{sample_ensemble, EnsembleKind, EnsembleSpec, Sampled};
use distver::rng::SeededRng;
use distver::{Error, LinearCode, ParityCheckMatrix};

fn classical(s: Sampled) -> ParityCheckMatrix {
    match s {
        Sampled::Classical(h) => h,
        Sampled::Stabilizer(_) => panic!("expected a classical code"),
    }
}

fn ldpc_kind() -> impl Strategy<Value = EnsembleKind> {
    prop_oneof![Just(EnsembleKind::A), Just(EnsembleKind::B)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ldpc_samples_are_regular(
        kind in ldpc_kind(),
        blocks in 2usize..=8,
        q in prop_oneof![Just(2usize), Just(3), Just(4), Just(8)],
        seed in any::<u64>(),
    ) {
        let n = 6 * blocks;
        let h = classical(sample_ensemble(&EnsembleSpec::ldpc(kind, n, 3, 6, q, seed)).unwrap());
        prop_assert_eq!(h.n(), n);
        prop_assert_eq!(h.r(), n / 2);
        prop_assert!(h.row_weights().iter().all(|&w| w == 6));
        prop_assert!(h.column_weights().iter().all(|&w| w == 3));
        prop_assert!(h.rows().iter().flatten().all(|&(_, a)| a != 0 && (a as usize) < q));
    }

    #[test]
    fn samplers_are_deterministic(kind in ldpc_kind(), seed in any::<u64>()) {
        let spec = EnsembleSpec::ldpc(kind, 24, 3, 6, 4, seed);
        let a = classical(sample_ensemble(&spec).unwrap());
        let b = classical(sample_ensemble(&spec).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn random_linear_has_requested_dimension(
        n in 4usize..=20,
        frac in 0.0f64..1.0,
        q in prop_oneof![Just(2usize), Just(3), Just(4), Just(5)],
        seed in any::<u64>(),
    ) {
        let k = ((n as f64) * frac) as usize;
        let h = classical(sample_ensemble(&EnsembleSpec::random_linear(n, k, q, seed)).unwrap());
        prop_assert_eq!(LinearCode::new(h).dimension(), k);
    }

    #[test]
    fn random_stabilizers_are_valid(n in 2usize..=10, k in 0usize..=3, seed in any::<u64>()) {
        prop_assume!(k < n);
        let Sampled::Stabilizer(s) = sample_ensemble(&EnsembleSpec::random_stabilizer(n, k, seed)).unwrap() else {
            unreachable!()
        };
        prop_assert_eq!(s.n(), n);
        prop_assert_eq!(s.k(), k);
        prop_assert!(s.validate().is_ok());
    }

    #[test]
    fn erasures_complete_to_the_sent_codeword(kind in ldpc_kind(), seed in any::<u64>()) {
        let h = classical(sample_ensemble(&EnsembleSpec::ldpc(kind, 24, 3, 6, 2, seed)).unwrap());
        let code = LinearCode::new(h);
        let mut rng = SeededRng::new(seed);
        let mut sent = vec![0u8; code.n()];
        for b in code.generator_basis() {
            if rng.below(2) == 1 {
                for (x, y) in sent.iter_mut().zip(&b) {
                    *x ^= y;
                }
            }
        }
        let known = rng.subset(code.n(), 16);
        let values: Vec<u8> = known.iter().map(|&j| sent[j]).collect();
        let out = erasure_complete(&code, &known, &values).unwrap();
        prop_assert!(!out.truncated);
        prop_assert!(out.codewords.iter().any(|c| c.entries() == sent.as_slice()));
        prop_assert!(out.codewords.len().is_power_of_two());
        for c in &out.codewords {
            prop_assert!(code.is_codeword(c).unwrap());
            prop_assert!(known.iter().all(|&j| c.entries()[j] == sent[j]));
        }
    }
}

#[test]
fn infeasible_parameters_are_config_errors() {
    let bad = [
        EnsembleSpec::ldpc(EnsembleKind::A, 7, 3, 6, 2, 0),
        EnsembleSpec::ldpc(EnsembleKind::B, 9, 4, 6, 2, 0),
        EnsembleSpec::ldpc(EnsembleKind::A, 12, 2, 6, 2, 0),
        EnsembleSpec::ldpc(EnsembleKind::A, 12, 3, 6, 6, 0),
        EnsembleSpec::random_linear(5, 6, 2, 0),
    ];
    for spec in bad {
        assert!(sample_ensemble(&spec).is_err(), "{spec:?}");
    }
    assert!(matches!(
        sample_ensemble(&EnsembleSpec::ldpc(EnsembleKind::A, 7, 3, 6, 2, 0)),
        Err(Error::Config(_))
    ));
}

#[test]
fn different_seeds_give_different_codes() {
    let draw = |seed| classical(sample_ensemble(&EnsembleSpec::ldpc(EnsembleKind::B, 36, 3, 6, 2, seed)).unwrap());
    let distinct: std::collections::HashSet<String> = (0..10).map(|s| format!("{:?}", draw(s))).collect();
    assert!(distinct.len() >= 9);
}
