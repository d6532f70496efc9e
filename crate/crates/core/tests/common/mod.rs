#![allow(dead_code)]

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use symf_core::partition::partitions_of;
use symf_core::{BasisTag, Partition, SymElement};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn basis_el(b: BasisTag, l: &Partition) -> SymElement {
    SymElement::basis_element(b, l.clone())
}

pub fn gen(b: BasisTag, n: usize) -> SymElement {
    SymElement::basis_element(b, Partition::row(n))
}

/// A random homogeneous element of degree `n` with small integer
/// coefficients on a few basis vectors.
pub fn random_homogeneous(rng: &mut StdRng, basis: BasisTag, n: usize) -> SymElement {
    let ps = partitions_of(n);
    let mut f = SymElement::zero(basis);
    for _ in 0..rng.gen_range(1..=3) {
        let l = ps[rng.gen_range(0..ps.len())].clone();
        f.add_term(l, q(rng.gen_range(-3..=3)));
    }
    f
}

/// A random element mixing degrees `0..=max_degree`.
pub fn random_element(rng: &mut StdRng, basis: BasisTag, max_degree: usize) -> SymElement {
    let mut f = SymElement::zero(basis);
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(0..=max_degree);
        for (l, c) in random_homogeneous(rng, basis, d).terms() {
            f.add_term(l.clone(), c.clone());
        }
    }
    f
}

pub fn random_basis(rng: &mut StdRng) -> BasisTag {
    BasisTag::ALL[rng.gen_range(0..BasisTag::ALL.len())]
}

pub fn any_element(rng: &mut StdRng, max_degree: usize) -> SymElement {
    let b = random_basis(rng);
    random_element(rng, b, max_degree)
}

pub fn any_homogeneous(rng: &mut StdRng, n: usize) -> SymElement {
    let b = random_basis(rng);
    random_homogeneous(rng, b, n)
}
