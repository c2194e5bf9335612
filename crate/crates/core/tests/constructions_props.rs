use hybrid_codes::analysis::{hybrid_distance_full, verify_distance_sweep};
use hybrid_codes::constructions::{
    append_zero_qubits, build_from_code_pair, construction_x, juxtapose, qudit_to_classical, random_binary_code,
    random_nested_pair, BinaryCode, ConstructionXInput,
};
use hybrid_codes::{catalog, Execution, HybridCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXEC: Execution = Execution::Parallel;

fn distance(h: &HybridCode) -> usize {
    hybrid_distance_full(&h.validate().unwrap(), 30, EXEC).unwrap()
}

#[test]
fn nested_extension_meets_its_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..100 {
        let n = rng.gen_range(3..=8);
        let k1 = rng.gen_range(0..n);
        let k2 = rng.gen_range(k1 + 1..=n);
        let (inner, outer) = random_nested_pair(n, k1, k2, &mut rng).unwrap();
        let rows = rng.gen_range(1..=(k2 - k1).min(3));
        let n3 = rng.gen_range(rows..=rows + 3);
        let classical = random_binary_code(n3, rows, &mut rng).unwrap();
        let d3 = classical.min_distance().unwrap();
        let (d1, d2) = (distance(&inner), distance(&outer));
        let inner = inner.with_claimed_d(Some(d1));
        let outer = outer.with_claimed_d(Some(d2));
        let input = ConstructionXInput::from_nested(&inner, &outer, classical).unwrap();
        let bound = input.distance_bound().unwrap();
        assert_eq!(bound, inner.claimed_d().unwrap().min(outer.claimed_d().unwrap() + d3));
        let out = construction_x(&input).unwrap();
        assert_eq!((out.n(), out.k(), out.m()), (n + n3, k1, rows));
        let report = verify_distance_sweep(&out.validate().unwrap(), bound, u128::MAX, EXEC).unwrap();
        assert!(report.passed, "trial {trial}: {:?}\n{}", report.witness, out.serialize());
    }
}

#[test]
fn juxtaposition_with_a_repetition_code() {
    let five = HybridCode::parse("5 1 0 2 3\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n---\nXXXXX\nZZZZZ\n===\n").unwrap();
    let out = juxtapose(&five, &BinaryCode::repetition(3).unwrap()).unwrap();
    assert_eq!((out.n(), out.k(), out.m()), (8, 1, 1));
    assert_eq!(distance(&out), 3);
    let weak = juxtapose(&five, &BinaryCode::parity_check(3).unwrap()).unwrap();
    assert_eq!(distance(&weak), 2);
}

#[test]
fn conversions_on_the_catalog() {
    for (name, h) in catalog::all() {
        let d = distance(&h);
        let converted = qudit_to_classical(&h).unwrap();
        assert_eq!((converted.k(), converted.m()), (h.k() - 1, h.m() + 1), "{name}");
        assert!(distance(&converted) >= d, "{name}");
        let padded = append_zero_qubits(&h, 2).unwrap();
        assert_eq!(padded.n(), h.n() + 2);
        assert_eq!(distance(&padded), d, "{name}");
        let rebuilt = build_from_code_pair(&h.validate().unwrap().c0, h.translations()).unwrap();
        assert_eq!(rebuilt.validate().unwrap(), h.validate().unwrap(), "{name}");
    }
}

#[test]
fn text_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let n = rng.gen_range(1..=12);
        let k = rng.gen_range(0..=n);
        let c = random_binary_code(n, k, &mut rng).unwrap();
        assert_eq!(BinaryCode::parse(&c.serialize()).unwrap(), c);
    }
    for (_, h) in catalog::all() {
        assert_eq!(HybridCode::parse(&h.serialize()).unwrap(), h);
    }
}
