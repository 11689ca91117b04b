use fermicode::codes::{embedded_16_2_4, hastings_code, parse_code_spec, Occupancy};
use fermicode::fock::{FockVector, Span};
use fermicode::majorana::{parse_majorana, MajoranaOperator};
use fermicode::stab::{Distance, StabilizerCode, Violation};
use proptest::prelude::*;

fn hastings() -> StabilizerCode {
    hastings_code(4).unwrap().code
}

fn op(s: &str, modes: usize) -> MajoranaOperator {
    parse_majorana(s, Some(modes)).unwrap()
}

#[test]
fn hastings_syndromes_count_in_binary() {
    let table = hastings().syndrome_table();
    assert_eq!(table.len(), 16);
    for (mu, s) in &table {
        assert_eq!(s.value() & 0b1111, (*mu as u64) - 1, "c{mu}");
        // the chirality generator anticommutes with every single Majorana
        assert!(s.bits()[4]);
    }
    let mut values: Vec<u64> = table.iter().map(|(_, s)| s.value()).collect();
    values.dedup();
    assert_eq!(values.len(), 16);
    assert_eq!(table[0].1.to_string(), "00001");
    assert_eq!(table[15].1.to_string(), "11111");
}

#[test]
fn codespace_dimension_times_stabilizer_order_fills_fock_space() {
    let codes = [
        hastings(),
        embedded_16_2_4(Occupancy::Single).unwrap().code,
        embedded_16_2_4(Occupancy::Double).unwrap().code,
        hastings_code(3).unwrap().code,
    ];
    for code in &codes {
        let r = code.num_generators();
        assert_eq!(code.codespace().len() << r, 1usize << code.modes());
        for v in code.codespace() {
            assert!(code.is_stabilized(v).unwrap());
        }
    }
}

#[test]
fn hastings_detects_all_errors_below_distance() {
    let report = hastings().detection_check(3).unwrap();
    assert_eq!(report.checked, 16 + 120 + 560);
    assert!(report.passed(), "{:?}", report.failures.first());
    let at_four = hastings().detection_check(4).unwrap();
    assert!(!at_four.passed());
}

#[test]
fn distance_is_independent_of_thread_count() {
    let code = hastings();
    let serial = code.distance(4, 1);
    for jobs in [0, 2, 4] {
        assert_eq!(code.distance(4, jobs), serial);
    }
    let Distance::Exact { distance, witness } = serial else {
        panic!("expected an exact distance");
    };
    assert_eq!(distance, 4);
    assert!(code.is_logical(&witness).unwrap());
}

#[test]
fn validation_names_offending_generators() {
    let gens = vec![op("i c1 c2", 2), op("i c2 c3", 2)];
    let err = StabilizerCode::validate(2, gens).unwrap_err();
    assert!(err.contains(&Violation::NonCommuting { first: 1, second: 2 }));

    let err = StabilizerCode::validate(2, vec![op("c1", 2)]).unwrap_err();
    assert!(err.iter().any(|v| matches!(v, Violation::OddWeight { generator: 1 })));

    let err = StabilizerCode::validate(2, vec![op("c1 c2", 2)]).unwrap_err();
    assert!(err.iter().any(|v| matches!(v, Violation::SquareNotIdentity { generator: 1 })));

    let gens = vec![op("i c1 c2", 2), op("-i c1 c2", 2)];
    let err = StabilizerCode::validate(2, gens).unwrap_err();
    assert!(err.iter().any(|v| v.kind() == "contains-minus-one"));

    let gens = vec![op("i c1 c2", 2), op("i c1 c2", 2)];
    let err = StabilizerCode::validate(2, gens).unwrap_err();
    assert!(err.iter().any(|v| v.kind() == "dependent-supports"));

    let err = StabilizerCode::validate(2, vec![op("i c1 c2", 1)]).unwrap_err();
    assert!(matches!(err[0], Violation::ModeMismatch { .. }));
}

#[test]
fn four_qubit_code_distance_budget() {
    let code = embedded_16_2_4(Occupancy::Single).unwrap().code;
    assert_eq!(code.distance(3, 0).to_string(), ">3");
    assert_eq!(code.distance(4, 0).to_string(), "4");
    assert_eq!(hastings_code(3).unwrap().code.distance(4, 0).to_string(), "none");
}

#[test]
fn code_spec_text_roundtrips() {
    let named = hastings_code(4).unwrap();
    let (modes, gens) = parse_code_spec(&named.spec_text()).unwrap();
    assert_eq!(modes, 8);
    assert_eq!(gens, named.code.generators());
    let pauli = "modes: 2\n# comment\nZZ\n";
    let (m, g) = parse_code_spec(pauli).unwrap();
    assert_eq!(m, 2);
    assert_eq!(g[0].weight(), 4);
    assert!(parse_code_spec("c1 c2\n").is_err());
}

#[test]
fn basis_override_must_span_the_codespace() {
    let code = hastings();
    let glued = fermicode::codes::glued_basis();
    assert!(code.clone().with_basis(glued.clone()).is_ok());
    let mut short = glued.clone();
    short.pop();
    assert!(code.clone().with_basis(short).is_err());
    let stray = vec![FockVector::vacuum(8).unwrap(); 8];
    assert!(code.with_basis(stray).is_err());
}

fn index_subsets(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<bool>)> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn parameters_survive_generator_permutation_and_products((perm, mix) in index_subsets(5)) {
        let base = hastings();
        let gens = base.generators();
        let mut new: Vec<MajoranaOperator> = perm.iter().map(|&i| gens[i].clone()).collect();
        // multiply generator i by its successor where requested; this keeps the group
        for i in 0..new.len() - 1 {
            if mix[i] {
                new[i] = new[i].mul(&new[i + 1]).unwrap();
            }
        }
        let code = StabilizerCode::new(8, new).unwrap();
        prop_assert_eq!(code.k(), 3);
        prop_assert_eq!(code.distance(4, 0).exact(), Some(4));
        let a = Span::from_vectors(8, code.codespace()).unwrap();
        let b = Span::from_vectors(8, base.codespace()).unwrap();
        prop_assert!(a.same_as(&b).unwrap());
    }
}
