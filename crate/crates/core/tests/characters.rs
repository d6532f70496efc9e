mod common;

use common::{basis_el, p, q};
use num_bigint::BigInt;
use num_traits::Zero;
use symf_core::coeffs::{
    char_inner, character, character_table, frobenius_ch, frobenius_inverse, irreducible_character, kronecker,
    kronecker_product, littlewood_richardson, youngs_rule,
};
use symf_core::partition::{factorial, partitions_of};
use symf_core::sym::{hall_inner, skew_schur};
use symf_core::tableau::f_lambda;
use symf_core::{BasisTag, BigRational, Partition};

fn z_inv(mu: &Partition) -> BigRational {
    BigRational::new(1.into(), mu.z())
}

#[test]
fn orthogonality_relations() {
    for n in 1..=8 {
        let t = character_table(n).unwrap();
        let ps = &t.partitions;
        let k = ps.len();
        for a in 0..k {
            for b in 0..k {
                let rows: BigRational =
                    (0..k).map(|j| BigRational::from_integer(&t.rows[a][j] * &t.rows[b][j]) * z_inv(&ps[j])).sum();
                assert_eq!(rows, q((a == b) as i64), "rows {a} {b} of S_{n}");
                let cols: BigRational =
                    (0..k).map(|i| BigRational::from_integer(&t.rows[i][a] * &t.rows[i][b])).sum::<BigRational>()
                        * z_inv(&ps[a]);
                assert_eq!(cols, q((a == b) as i64), "columns {a} {b} of S_{n}");
            }
        }
    }
}

#[test]
fn degrees_are_standard_tableau_counts() {
    for n in 1..=8 {
        let mut squares = BigInt::zero();
        for l in partitions_of(n) {
            let d = character(&l, &Partition::column(n)).unwrap();
            assert_eq!(d, f_lambda(&l));
            squares += &d * &d;
        }
        assert_eq!(squares, factorial(n));
    }
}

#[test]
fn frobenius_map_round_trip() {
    for n in 1..=6 {
        for l in partitions_of(n) {
            let chi = irreducible_character(&l).unwrap();
            let s = basis_el(BasisTag::S, &l);
            assert_eq!(frobenius_ch(&chi), s);
            assert_eq!(frobenius_inverse(&s, n).unwrap(), chi);
        }
    }
}

#[test]
fn littlewood_richardson_symmetry_and_skew() {
    for n in 0..=5 {
        for l in partitions_of(n) {
            for k in 0..=n {
                for mu in partitions_of(k) {
                    let skew = skew_schur(&l, &mu).unwrap();
                    for nu in partitions_of(n - k) {
                        let c = littlewood_richardson(&l, &mu, &nu).unwrap();
                        assert_eq!(c, littlewood_richardson(&l, &nu, &mu).unwrap());
                        let via_skew = hall_inner(&skew, &basis_el(BasisTag::S, &nu)).unwrap();
                        assert_eq!(BigRational::from_integer(c), via_skew, "c^{l}_{{{mu},{nu}}}");
                    }
                }
            }
        }
    }
}

#[test]
fn kronecker_symmetry() {
    for n in 1..=5 {
        let ps = partitions_of(n);
        for l in &ps {
            for mu in &ps {
                assert_eq!(kronecker(l, mu, &Partition::row(n)).unwrap(), BigInt::from((l == mu) as i64));
                for nu in &ps {
                    let g = kronecker(l, mu, nu).unwrap();
                    for (a, b, c) in [(l, nu, mu), (mu, l, nu), (mu, nu, l), (nu, l, mu), (nu, mu, l)] {
                        assert_eq!(kronecker(a, b, c).unwrap(), g);
                    }
                }
            }
        }
    }
}

#[test]
fn kronecker_product_of_characteristics() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let chi =
                    irreducible_character(&mu).unwrap().pointwise_mul(&irreducible_character(&nu).unwrap()).unwrap();
                let lhs = frobenius_ch(&chi);
                let rhs = kronecker_product(&basis_el(BasisTag::S, &mu), &basis_el(BasisTag::S, &nu)).unwrap();
                assert_eq!(lhs, rhs);
                for l in partitions_of(n) {
                    let m = char_inner(&chi, &irreducible_character(&l).unwrap()).unwrap();
                    assert_eq!(m, BigRational::from_integer(kronecker(&l, &mu, &nu).unwrap()));
                }
            }
        }
    }
}

#[test]
fn youngs_rule_fixture() {
    let table = youngs_rule(&p("3,2,1")).unwrap();
    let expected = [("3,2,1", 1), ("3,3", 1), ("4,1,1", 1), ("4,2", 2), ("5,1", 2), ("6", 1)];
    let expected = expected.iter().map(|(l, m)| (p(l), BigInt::from(*m))).collect();
    assert_eq!(table, expected);
}
