use fermicode::fock::{chirality, FockVector, Scalar};
use fermicode::gf2::{in_span, rank, symplectic_form, BitVec, Gf2Matrix};
use fermicode::majorana::{majorana_to_pauli, pauli_to_majorana, MajoranaOperator, Phase};
use proptest::prelude::*;

fn bitvec(len: usize) -> impl Strategy<Value = BitVec> {
    proptest::collection::vec(any::<bool>(), len).prop_map(|b| BitVec::from_bools(&b))
}

fn majorana(modes: usize) -> impl Strategy<Value = MajoranaOperator> {
    (0u32..4, bitvec(2 * modes))
        .prop_map(|(k, s)| MajoranaOperator::from_support(Phase::from_exponent(k), s))
}

fn fock(modes: usize) -> impl Strategy<Value = FockVector> {
    let key = 0u64..(1u64 << modes);
    let amp = (-5i64..=5, -5i64..=5, 1i64..4);
    proptest::collection::vec((key, amp), 1..6).prop_map(move |terms| {
        FockVector::from_terms(
            modes,
            terms.into_iter().map(|(k, (re, im, d))| {
                (k, &Scalar::from_ratio(re, d) + &(&Scalar::from_ratio(im, d) * &Scalar::i()))
            }),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symplectic_form_is_symmetric(a in bitvec(12), b in bitvec(12)) {
        prop_assert_eq!(symplectic_form(&a, &b).unwrap(), symplectic_form(&b, &a).unwrap());
    }

    #[test]
    fn span_membership_matches_rank(rows in proptest::collection::vec(bitvec(10), 0..6), v in bitvec(10)) {
        let m = Gf2Matrix::from_rows(10, rows.clone()).unwrap();
        let mut extended = rows;
        extended.push(v.clone());
        let m2 = Gf2Matrix::from_rows(10, extended).unwrap();
        let witness = in_span(&v, &m).unwrap();
        prop_assert_eq!(witness.is_some(), rank(&m) == rank(&m2));
        if let Some(w) = witness {
            let mut sum = BitVec::zeros(10);
            for r in w {
                sum.xor_assign(m.row(r));
            }
            prop_assert_eq!(sum, v);
        }
    }

    #[test]
    fn product_is_associative(a in majorana(4), b in majorana(4), c in majorana(4)) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn swapped_product_differs_by_symplectic_sign(a in majorana(5), b in majorana(5)) {
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        let sign = symplectic_form(a.support(), b.support()).unwrap();
        prop_assert_eq!(ab, ba.scaled(Phase::sign(sign)));
    }

    #[test]
    fn jordan_wigner_is_a_homomorphism(a in majorana(8), b in majorana(8)) {
        let lhs = majorana_to_pauli(&a.mul(&b).unwrap());
        let rhs = majorana_to_pauli(&a).mul(&majorana_to_pauli(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conversion_roundtrips(a in majorana(8)) {
        prop_assert_eq!(pauli_to_majorana(&majorana_to_pauli(&a)), a);
    }

    #[test]
    fn majorana_action_matches_pauli_action_on_random_states(a in majorana(8), v in fock(8)) {
        let p = majorana_to_pauli(&a);
        prop_assert_eq!(v.apply_majorana(&a).unwrap(), v.apply_pauli(&p).unwrap());
    }

    #[test]
    fn majorana_anticommutators(v in fock(6), mu in 1usize..=12, nu in 1usize..=12) {
        let cm = MajoranaOperator::single(6, mu).unwrap();
        let cn = MajoranaOperator::single(6, nu).unwrap();
        let s = v.apply_majorana(&cn).unwrap().apply_majorana(&cm).unwrap()
            .add(&v.apply_majorana(&cm).unwrap().apply_majorana(&cn).unwrap()).unwrap();
        let want = if mu == nu { v.scale(&Scalar::from_int(2)) } else { FockVector::zero(6).unwrap() };
        prop_assert_eq!(s, want);
    }

    #[test]
    fn creation_annihilation_anticommutators(v in fock(6), i in 1usize..=6, j in 1usize..=6) {
        let pn = v.annihilate(j).unwrap().create(i).unwrap();
        let np = v.create(i).unwrap().annihilate(j).unwrap();
        let want = if i == j { v.clone() } else { FockVector::zero(6).unwrap() };
        prop_assert_eq!(pn.add(&np).unwrap(), want);
    }

    #[test]
    fn chirality_grades_by_parity(a in majorana(6), v in fock(6)) {
        let g = chirality(6);
        let gav = v.apply_majorana(&a).unwrap().apply_majorana(&g).unwrap();
        let agv = v.apply_majorana(&g).unwrap().apply_majorana(&a).unwrap();
        if a.is_even() {
            prop_assert_eq!(gav, agv);
        } else {
            prop_assert_eq!(gav, agv.scale(&Scalar::from_int(-1)));
        }
    }

    #[test]
    fn state_file_roundtrip(v in fock(7)) {
        let text = v.to_state_string();
        prop_assert_eq!(FockVector::parse_state(&text, Some(7)).unwrap(), v);
    }
}

#[test]
fn group_elements_have_order_dividing_four() {
    for k in 0..4 {
        for s in 0u32..16 {
            let bits: Vec<bool> = (0..4).map(|i| s >> i & 1 == 1).collect();
            let a = MajoranaOperator::from_support(Phase::from_exponent(k), BitVec::from_bools(&bits));
            let a4 = a.mul(&a).unwrap().mul(&a).unwrap().mul(&a).unwrap();
            assert!(a4.is_identity() && a4.phase() == Phase::ONE);
        }
    }
}

#[test]
fn majorana_action_matches_pauli_action_exhaustively() {
    for modes in 1..=4 {
        for s in 0u32..(1 << (2 * modes)) {
            let bits: Vec<bool> = (0..2 * modes).map(|i| s >> i & 1 == 1).collect();
            let op = MajoranaOperator::from_support(Phase::ONE, BitVec::from_bools(&bits));
            let p = majorana_to_pauli(&op);
            for key in 0..(1u64 << modes) {
                let v = FockVector::basis(modes, key).unwrap();
                assert_eq!(v.apply_majorana(&op).unwrap(), v.apply_pauli(&p).unwrap());
            }
        }
    }
}
