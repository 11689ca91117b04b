use fermicode::codes::*;
use fermicode::embed::intertwiner;
use fermicode::fock::{FockVector, Scalar, Span};
use fermicode::majorana::{majorana_to_pauli, parse_majorana, Phase};
use fermicode::stab::Distance;

fn occ(bits: &[&str]) -> FockVector {
    bits.iter()
        .map(|b| FockVector::from_occupations(b).unwrap())
        .reduce(|a, b| a.add(&b).unwrap())
        .unwrap()
}

#[test]
fn printed_single_occupancy_basis() {
    let e = e_bar();
    assert_eq!(e[0], occ(&["01010101", "10101010"]));
    assert_eq!(e[1], occ(&["01100110", "10011001"]));
    assert_eq!(e[2], occ(&["01101001", "10010110"]));
    assert_eq!(e[3], occ(&["01011010", "10100101"]));
}

#[test]
fn printed_double_occupancy_basis() {
    let e = e_tilde();
    assert_eq!(e[0], occ(&["00000000", "11111111"]));
    assert_eq!(e[1], occ(&["11001100", "00110011"]));
    assert_eq!(e[2], occ(&["11000011", "00111100"]));
    assert_eq!(e[3], occ(&["11110000", "00001111"]));
}

#[test]
fn embedded_four_qubit_code_parameters() {
    for occupancy in [Occupancy::Single, Occupancy::Double] {
        let named = embedded_16_2_4(occupancy).unwrap();
        let code = &named.code;
        assert_eq!(code.majorana_modes(), 16);
        assert_eq!(code.k(), 2);
        assert_eq!(code.distance(4, 0).exact(), Some(4));
        assert_eq!(code.distance(3, 0), Distance::AboveBudget { max_weight: 3 });
        for l in &named.logicals {
            assert_eq!(l.scalar, Scalar::one(), "{} on {:?}", l.label, occupancy);
        }
    }
}

#[test]
fn projected_codespace_is_the_printed_one() {
    let named = embedded_16_2_4(Occupancy::Single).unwrap();
    let projected = named.code.project_codespace().unwrap();
    let printed = e_bar();
    assert_eq!(projected.len(), 4);
    for p in &projected {
        assert!(printed.contains(p), "{p} not printed");
    }
}

#[test]
fn chirality_is_in_s2() {
    let named = embedded_16_2_4(Occupancy::Single).unwrap();
    let gens = named.code.generators();
    let prod = gens[0].mul(&gens[1]).unwrap().mul(&gens[2]).unwrap().mul(&gens[3]).unwrap();
    assert_eq!(prod, fermicode::fock::chirality(8));
}

#[test]
fn hastings_l4() {
    let named = hastings_code(4).unwrap();
    let code = &named.code;
    assert_eq!(code.k(), 3);
    assert_eq!(code.codespace().len(), 8);
    assert_eq!(code.distance(4, 2).exact(), Some(4));
    let letters: Vec<String> = code.generators()[..4]
        .iter()
        .map(|g| majorana_to_pauli(g).to_string())
        .collect();
    assert_eq!(letters, ["+1 XYXYXYXY", "+1 IZIZIZIZ", "+1 IIZZIIZZ", "+1 IIIIZZZZ"]);
    assert_eq!(majorana_to_pauli(&code.generators()[4]).to_string(), "+1 ZZZZZZZZ");
    for l in &named.logicals {
        assert_eq!(l.scalar, Scalar::one(), "{}", l.label);
    }
    let labels: Vec<&str> = named.logicals.iter().map(|l| l.label.as_str()).collect();
    assert_eq!(labels, ["XII", "ZII", "IIX", "IXI", "IIZ", "IZI"]);
}

#[test]
fn hastings_glued_span_equals_projection() {
    let code = hastings_code(4).unwrap().code;
    let projected = Span::from_vectors(8, &code.project_codespace().unwrap()).unwrap();
    let glued = Span::from_vectors(8, &glued_basis()).unwrap();
    assert_eq!(glued.dim(), 8);
    assert!(projected.same_as(&glued).unwrap());
    for b in glued_basis() {
        assert!(code.is_stabilized(&b).unwrap());
        assert_eq!(b.chirality_sector(), fermicode::fock::Chirality::Positive);
    }
}

#[test]
fn hastings_l3_and_l5() {
    let c3 = hastings_code(3).unwrap();
    assert_eq!(c3.code.majorana_modes(), 8);
    assert_eq!(c3.code.k(), 0);
    assert_eq!(c3.code.codespace().len(), 1);
    assert_eq!(c3.code.distance(8, 0), Distance::NoLogicals);
    assert_eq!(c3.provenance, "computed");
    let c5 = hastings_code(5).unwrap();
    assert_eq!(c5.code.majorana_modes(), 32);
    assert_eq!(c5.code.k(), 10);
}

#[test]
fn glue_examples() {
    let z = Scalar::zero;
    let o = Scalar::one;
    let v = glue(&[o(), z(), z(), z()], &[z(), z(), z(), z()]);
    assert_eq!(v, e_bar()[0]);
    let w = glue(&[z(), z(), z(), z()], &[o(), z(), z(), z()]);
    assert_eq!(w, e_bar()[0].apply_majorana(&intertwiner(4)).unwrap());
}

#[test]
fn single_occupancy_family() {
    for n in [1, 2, 3, 4] {
        let named = single_occupancy_code(n).unwrap();
        assert_eq!(named.code.k(), n);
        assert_eq!(named.code.codespace().len(), 1 << n);
        assert_eq!(named.code.distance(4, 0).exact(), Some(2));
        assert!(named.logicals.iter().all(|l| l.scalar == Scalar::one()));
    }
}

#[test]
fn mermin_square() {
    let report = mermin_square_check();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.row_products[0].to_string(), "+1 XXXX");
    assert_eq!(report.column_products[0].to_string(), "-1 IIII");
}

#[test]
fn logical_pair_acts_alike_on_both_embeddings() {
    let s = embedded_16_2_4(Occupancy::Single).unwrap();
    let d = embedded_16_2_4(Occupancy::Double).unwrap();
    for (a, b) in s.logicals.iter().zip(&d.logicals) {
        assert_eq!(a.operator, b.operator);
        assert_eq!(a.scalar, b.scalar);
    }
    let op = parse_majorana("-c2 c3 c10 c11", Some(8)).unwrap();
    assert_eq!(s.logical("IX").unwrap().operator, op);
}

#[test]
fn centralizer_counts() {
    for named in [hastings_code(4).unwrap(), embedded_16_2_4(Occupancy::Single).unwrap()] {
        let code = &named.code;
        let cent = code.centralizer_generators();
        assert_eq!(cent.len(), code.modes() + code.k());
        for c in &cent {
            assert!(code.commutes_with_all(c).unwrap());
        }
        // every listed logical lies in the span of the returned generators
        let m = fermicode::gf2::Gf2Matrix::from_rows(16, cent.iter().map(|c| c.support().clone()).collect()).unwrap();
        for l in &named.logicals {
            assert!(fermicode::gf2::in_span(l.operator.support(), &m).unwrap().is_some());
        }
        for g in code.generators() {
            assert!(fermicode::gf2::in_span(g.support(), &m).unwrap().is_some());
        }
    }
}

#[test]
fn hastings_centralizer_matches_listed_generators() {
    let code = hastings_code(4).unwrap().code;
    let listed = [
        "-c2 c3 c10 c11",
        "-c2 c3 c14 c15",
        "c1 c5 c9 c13",
        "-c3 c4 c15 c16",
        "-c3 c4 c11 c12",
        "c1 c2 c3 c4",
    ];
    let mut rows: Vec<_> = listed
        .iter()
        .map(|s| parse_majorana(s, Some(8)).unwrap().support().clone())
        .collect();
    rows.extend(code.generators().iter().map(|g| g.support().clone()));
    let listed_span = fermicode::gf2::Gf2Matrix::from_rows(16, rows).unwrap();
    let ours = fermicode::gf2::Gf2Matrix::from_rows(
        16,
        code.centralizer_generators().iter().map(|c| c.support().clone()).collect(),
    )
    .unwrap();
    assert_eq!(fermicode::gf2::rank(&listed_span), 11);
    assert_eq!(fermicode::gf2::rank(&ours), 11);
    for r in listed_span.rows() {
        assert!(fermicode::gf2::in_span(r, &ours).unwrap().is_some());
    }
}

#[test]
fn omega_and_g1_anticommute() {
    let g1 = fermicode::embed::pair_parity(1, 4);
    assert!(!intertwiner(4).commutes(&g1).unwrap());
    assert_eq!(intertwiner(4).square(), Phase::ONE);
}
