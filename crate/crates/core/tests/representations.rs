mod common;

use std::collections::BTreeMap;

use common::{p, q};
use num_bigint::BigInt;
use num_traits::One;
use symf_core::coeffs::{char_inner, irreducible_character, kronecker, youngs_rule};
use symf_core::linalg::RatMatrix;
use symf_core::partition::partitions_of;
use symf_core::reps::{
    classical_rep, decompose, induce, induce_with_transversal, restrict, specht_module, subgroup_inner, tensor_product,
    young_module, ClassicalKind, MatrixRep, SubgroupSpec,
};
use symf_core::tableau::f_lambda;
use symf_core::{Partition, Permutation};

fn perm(w: &[usize]) -> Permutation {
    Permutation::from_word(w).unwrap()
}

#[test]
fn specht_modules_agree_with_frobenius_characters() {
    for n in 1..=5 {
        for l in partitions_of(n) {
            let s = specht_module(&l).unwrap();
            assert_eq!(BigInt::from(s.dim()), f_lambda(&l));
            let chi = s.character_of().unwrap();
            assert_eq!(chi, irreducible_character(&l).unwrap(), "{l}");
            assert!(char_inner(&chi, &chi).unwrap().is_one());
        }
    }
}

#[test]
fn youngs_rule_golden() {
    let expected: BTreeMap<Partition, BigInt> =
        [("3,2,1", 1), ("3,3", 1), ("4,2", 2), ("4,1,1", 1), ("5,1", 2), ("6", 1)]
            .into_iter()
            .map(|(l, m)| (p(l), BigInt::from(m)))
            .collect();
    assert_eq!(decompose(&young_module(&p("3,2,1")).unwrap()).unwrap(), expected);
    assert_eq!(youngs_rule(&p("3,2,1")).unwrap(), expected);
}

#[test]
fn generator_relations_hold() {
    for n in 1..=6 {
        for kind in [
            ClassicalKind::Trivial,
            ClassicalKind::Sign,
            ClassicalKind::Defining,
            ClassicalKind::Regular,
            ClassicalKind::Standard,
        ] {
            assert!(classical_rep(kind, n).unwrap().check_relations().unwrap(), "{kind} {n}");
        }
        for l in partitions_of(n) {
            assert!(young_module(&l).unwrap().check_relations().unwrap(), "H^{l}");
            if n <= 5 {
                assert!(specht_module(&l).unwrap().check_relations().unwrap(), "S^{l}");
            }
        }
    }
}

#[test]
fn induction_fixture() {
    let h = SubgroupSpec::from_elements(3, vec![perm(&[1, 2, 3]), perm(&[1, 3, 2])]).unwrap();
    let t = [perm(&[1, 2, 3]), perm(&[2, 1, 3]), perm(&[3, 2, 1])];
    let ind = induce_with_transversal(&MatrixRep::one_dimensional(&h, false), &t).unwrap();
    assert_eq!(ind.matrix(&perm(&[2, 1, 3])).unwrap(), RatMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
    let chi = ind.character_of().unwrap();
    assert_eq!(chi.value(&p("1,1,1")), q(3));
    assert_eq!(chi.value(&p("2,1")), q(1));
    assert_eq!(chi.value(&p("3")), q(0));
}

#[test]
fn frobenius_reciprocity_on_young_subgroups_of_s4() {
    for l in partitions_of(4) {
        let h = SubgroupSpec::young(l.parts());
        for signed in [false, true] {
            let y = MatrixRep::one_dimensional(&h, signed);
            let ind = induce(&y).unwrap().character_of().unwrap();
            for irrep in partitions_of(4) {
                let x = specht_module(&irrep).unwrap();
                let lhs = char_inner(&ind, &irreducible_character(&irrep).unwrap()).unwrap();
                let rhs = subgroup_inner(
                    &y.element_character().unwrap(),
                    &restrict(&x, &h).unwrap().element_character().unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn tensor_products_decompose_by_kronecker() {
    for n in 1..=4 {
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let t = tensor_product(&specht_module(&mu).unwrap(), &specht_module(&nu).unwrap()).unwrap();
                let d = decompose(&t).unwrap();
                for l in partitions_of(n) {
                    assert_eq!(d.get(&l).cloned().unwrap_or_default(), kronecker(&l, &mu, &nu).unwrap());
                }
            }
        }
    }
}
