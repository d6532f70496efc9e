use num_rational::BigRational;
use proptest::prelude::*;
use symf_core::coeffs::{frobenius_ch, frobenius_inverse};
use symf_core::partition::partitions_of;
use symf_core::sym::{hall_inner, multiply, omega, perp};
use symf_core::tableau::{rsk, rsk_inverse};
use symf_core::{BasisTag, Partition, SymElement};

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    prop::sample::select(partitions_of(n))
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(partition_of)
}

fn basis() -> impl Strategy<Value = BasisTag> {
    prop::sample::select(BasisTag::ALL.to_vec())
}

/// Up to three terms of degree at most `max`, small integer coefficients.
fn element(max: usize) -> impl Strategy<Value = SymElement> {
    (basis(), prop::collection::vec((partition(max), -4i64..=4), 1..=3)).prop_map(|(b, terms)| {
        SymElement::from_terms(b, terms.into_iter().map(|(l, c)| (l, BigRational::from_integer(c.into()))))
    })
}

fn homogeneous(n: usize) -> impl Strategy<Value = SymElement> {
    let ps = partitions_of(n);
    (basis(), prop::collection::vec((0..ps.len(), -4i64..=4), 1..=3)).prop_map(move |(b, terms)| {
        SymElement::from_terms(b, terms.into_iter().map(|(i, c)| (ps[i].clone(), BigRational::from_integer(c.into()))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conversion_round_trips(f in element(6), b in basis()) {
        let back = f.convert(b).unwrap().convert(f.basis()).unwrap();
        prop_assert_eq!(back.terms(), f.terms());
    }

    #[test]
    fn product_is_commutative_and_associative(f in element(4), g in element(4), h in element(3)) {
        let fg = multiply(&f, &g).unwrap();
        prop_assert_eq!(&fg, &multiply(&g, &f).unwrap());
        let left = multiply(&fg, &h).unwrap();
        let right = multiply(&f, &multiply(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn omega_is_an_isometric_involution(f in element(6), g in element(6)) {
        let wf = omega(&f).unwrap();
        prop_assert_eq!(&omega(&wf).unwrap(), &f);
        prop_assert_eq!(hall_inner(&wf, &omega(&g).unwrap()).unwrap(), hall_inner(&f, &g).unwrap());
        prop_assert_eq!(omega(&multiply(&f, &g).unwrap()).unwrap(), multiply(&wf, &omega(&g).unwrap()).unwrap());
    }

    #[test]
    fn perp_is_adjoint_to_multiplication(mu in partition(3), g in element(3), f in homogeneous(5)) {
        let s_mu = SymElement::basis_element(BasisTag::S, mu.clone());
        let lhs = hall_inner(&multiply(&s_mu, &g).unwrap(), &f).unwrap();
        let rhs = hall_inner(&g, &perp(&mu, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_round_trip(f in homogeneous(5)) {
        let chi = frobenius_inverse(&f, 5).unwrap();
        prop_assert_eq!(frobenius_ch(&chi), f);
    }

    #[test]
    fn rsk_round_trip(word in prop::collection::vec(1usize..=6, 0..=12)) {
        let (p, q) = rsk(&word);
        prop_assert!(p.is_semistandard() && q.is_standard());
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), word);
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in (0usize..=9).prop_flat_map(|n| (partition_of(n), partition_of(n)))) {
        prop_assert_eq!(a.dominates(&b).unwrap(), b.conjugate().dominates(&a.conjugate()).unwrap());
    }
}
