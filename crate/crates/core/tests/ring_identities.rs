mod common;

use common::{any_element, basis_el, gen, p, q, rng};
use symf_core::partition::partitions_of;
use symf_core::sym::{evaluate, hall_inner, multiply, omega, skew_schur};
use symf_core::tableau::kostka;
use symf_core::{BasisTag, BigRational, SymElement};

const TOP: usize = 12;

fn sum(terms: impl IntoIterator<Item = SymElement>) -> SymElement {
    terms.into_iter().fold(SymElement::zero(BasisTag::P), |acc, t| acc.try_add(&t).unwrap())
}

#[test]
fn schur_fixtures() {
    let s21 = SymElement::basis_element(BasisTag::S, p("2,1"));
    let m = s21.convert(BasisTag::M).unwrap();
    assert_eq!(m.terms(), "m:2,1 + 2*1,1,1".parse::<SymElement>().unwrap().terms());
    let skew = skew_schur(&p("2,1"), &p("1")).unwrap().convert(BasisTag::H).unwrap();
    assert_eq!(skew.terms(), "h:1,1".parse::<SymElement>().unwrap().terms());
}

#[test]
fn elementary_complete_recurrence() {
    for k in 1..=TOP {
        let total = sum((0..=k).map(|i| {
            let sign = q(if i % 2 == 0 { 1 } else { -1 });
            multiply(&gen(BasisTag::E, i), &gen(BasisTag::H, k - i)).unwrap().scale(&sign)
        }));
        assert!(total.is_zero(), "k={k}");
    }
}

#[test]
fn newton_identities() {
    for k in 1..=TOP {
        let kk = q(k as i64);
        let h_side = sum((1..=k).map(|i| multiply(&gen(BasisTag::P, i), &gen(BasisTag::H, k - i)).unwrap()));
        assert_eq!(h_side, gen(BasisTag::H, k).scale(&kk), "k h_k, k={k}");
        let e_side = sum((1..=k).map(|i| {
            let sign = q(if i % 2 == 1 { 1 } else { -1 });
            multiply(&gen(BasisTag::P, i), &gen(BasisTag::E, k - i)).unwrap().scale(&sign)
        }));
        assert_eq!(e_side, gen(BasisTag::E, k).scale(&kk), "k e_k, k={k}");
    }
}

#[test]
fn power_sum_expansions_of_h_and_e() {
    // checked in the monomial basis, where h_n = Σ m_λ and e_n = m_{1^n}
    for n in 0..=TOP {
        let ps = partitions_of(n);
        let h = SymElement::from_terms(BasisTag::P, ps.iter().map(|l| (l.clone(), BigRational::new(1.into(), l.z()))));
        let e = SymElement::from_terms(
            BasisTag::P,
            ps.iter().map(|l| {
                let sign = if (n + l.len()) % 2 == 0 { 1 } else { -1 };
                (l.clone(), BigRational::new(sign.into(), l.z()))
            }),
        );
        let all_m = SymElement::from_int_terms(BasisTag::M, ps.iter().map(|l| (l.clone(), 1)));
        assert_eq!(h.convert(BasisTag::M).unwrap().terms(), all_m.terms(), "n={n}");
        let col = SymElement::basis_element(BasisTag::M, symf_core::Partition::column(n));
        assert_eq!(e.convert(BasisTag::M).unwrap().terms(), col.terms(), "n={n}");
        assert_eq!(h, gen(BasisTag::H, n));
        assert_eq!(e, gen(BasisTag::E, n));
    }
}

#[test]
fn omega_on_schur() {
    for n in 0..=8 {
        for l in partitions_of(n) {
            let w = omega(&basis_el(BasisTag::S, &l)).unwrap();
            assert_eq!(w.terms(), basis_el(BasisTag::S, &l.conjugate()).terms(), "{l}");
        }
    }
}

#[test]
fn schur_to_monomial_is_kostka() {
    for n in 0..=7 {
        for l in partitions_of(n) {
            let m = basis_el(BasisTag::S, &l).convert(BasisTag::M).unwrap();
            for mu in partitions_of(n) {
                assert_eq!(m.coeff(&mu), BigRational::from_integer(kostka(&l, &mu)));
            }
        }
    }
}

#[test]
fn convert_respects_products() {
    let mut r = rng(11);
    for _ in 0..20 {
        let f = any_element(&mut r, 6);
        let g = any_element(&mut r, 6);
        let fg = multiply(&f, &g).unwrap();
        for b in BasisTag::ALL {
            let lhs = fg.convert(b).unwrap();
            let rhs = multiply(&f.convert(b).unwrap(), &g.convert(b).unwrap()).unwrap().convert(b).unwrap();
            assert_eq!(lhs.terms(), rhs.terms());
        }
    }
}

#[test]
fn inner_product_properties() {
    let mut r = rng(5);
    for n in 0..=6 {
        for l in partitions_of(n) {
            let s = basis_el(BasisTag::S, &l);
            assert_eq!(hall_inner(&s, &s).unwrap(), q(1));
        }
    }
    for _ in 0..40 {
        let f = any_element(&mut r, 6);
        let g = any_element(&mut r, 6);
        let h = any_element(&mut r, 6);
        let fg = hall_inner(&f, &g).unwrap();
        assert_eq!(fg, hall_inner(&g, &f).unwrap());
        let lin = hall_inner(&f.try_add(&h.scale(&q(3))).unwrap(), &g).unwrap();
        assert_eq!(lin, fg.clone() + q(3) * hall_inner(&h, &g).unwrap());
        assert_eq!(hall_inner(&omega(&f).unwrap(), &omega(&g).unwrap()).unwrap(), fg);
    }
}

#[test]
fn evaluation_is_multiplicative() {
    let mut r = rng(3);
    for _ in 0..25 {
        let f = any_element(&mut r, 3);
        let g = any_element(&mut r, 2);
        for m in 0..=4 {
            let lhs = evaluate(&multiply(&f, &g).unwrap(), m).unwrap();
            let rhs = &evaluate(&f, m).unwrap() * &evaluate(&g, m).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
