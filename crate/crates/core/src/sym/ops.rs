use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{BasisTag, SymElement};
use crate::error::Result;
use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::{Polynomial, PolynomialValue};
use crate::tableau::{skew_kostka, SkewShape};

/// Ring product, reported in the power-sum basis.
pub fn multiply(f: &SymElement, g: &SymElement) -> Result<SymElement> {
    let a = f.to_p()?;
    let b = g.to_p()?;
    let mut out = SymElement::zero(BasisTag::P);
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            out.add_term(la.union(lb), ca * cb);
        }
    }
    Ok(out)
}

/// Hall inner product: `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
pub fn hall_inner(f: &SymElement, g: &SymElement) -> Result<BigRational> {
    let a = f.to_p()?;
    let b = g.to_p()?;
    Ok(a.terms()
        .iter()
        .filter_map(|(l, ca)| b.terms().get(l).map(|cb| ca * cb * BigRational::from_integer(l.z())))
        .sum())
}

/// The involution `ω`, acting on power sums by `p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ`.
/// The result is expressed in the basis of `f`.
pub fn omega(f: &SymElement) -> Result<SymElement> {
    let twisted = f.to_p()?.map_coeffs(|l, c| if l.sign() == 1 { c.clone() } else { -c.clone() });
    twisted.convert(f.basis())
}

/// The skew Schur function `s_{λ/μ}`, summed over semistandard fillings of
/// the skew diagram and returned in the Schur basis. Zero when `μ ⊄ λ`.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> Result<SymElement> {
    let Ok(shape) = SkewShape::new(outer.clone(), inner.clone()) else {
        return Ok(SymElement::zero(BasisTag::S));
    };
    let n = shape.size();
    // coefficient of m_ν is the number of skew tableaux of content ν
    let in_m = SymElement::from_terms(
        BasisTag::M,
        partitions_of(n).into_iter().map(|nu| {
            let k = skew_kostka(&shape, nu.parts());
            (nu, BigRational::from_integer(k))
        }),
    );
    in_m.convert(BasisTag::S)
}

/// The adjoint `s_μ^⊥` of multiplication by `s_μ`, expressed in the basis of
/// `f`.
///
/// On power sums, `p_ρ^⊥` differentiates: `p_k^⊥ = k ∂/∂p_k`.
pub fn perp(mu: &Partition, f: &SymElement) -> Result<SymElement> {
    let s_mu = SymElement::basis_element(BasisTag::S, mu.clone()).to_p()?;
    let fp = f.to_p()?;
    let mut out = SymElement::zero(BasisTag::P);
    for (rho, a) in s_mu.terms() {
        let rho_mult = rho.multiplicities();
        for (alpha, b) in fp.terms() {
            if let Some((rest, c)) = differentiate(&rho_mult, alpha) {
                out.add_term(rest, a * b * BigRational::from_integer(c));
            }
        }
    }
    out.convert(f.basis())
}

/// `p_ρ^⊥ p_α = c · p_{α∖ρ}` when `ρ ⊆ α` as multisets, with
/// `c = ∏_k k^{m_k(ρ)} m_k(α)! / (m_k(α) - m_k(ρ))!`.
fn differentiate(rho: &BTreeMap<usize, usize>, alpha: &Partition) -> Option<(Partition, BigInt)> {
    let alpha_mult = alpha.multiplicities();
    let mut c = BigInt::one();
    let mut rest = Vec::new();
    for (&k, &ma) in &alpha_mult {
        let mr = rho.get(&k).copied().unwrap_or(0);
        if mr > ma {
            return None;
        }
        c *= BigInt::from(k).pow(mr as u32) * factorial(ma) / factorial(ma - mr);
        rest.extend(std::iter::repeat_n(k, ma - mr));
    }
    if rho.keys().any(|k| !alpha_mult.contains_key(k)) {
        return None;
    }
    Some((Partition::from_unsorted(rest), c))
}

/// `f(x_1, …, x_m, 0, 0, …)`.
pub fn evaluate(f: &SymElement, m: usize) -> Result<PolynomialValue> {
    let fm = f.convert(BasisTag::M)?;
    let mut out = Polynomial::zero(m);
    for (lambda, c) in fm.terms() {
        if lambda.len() > m {
            continue;
        }
        let mut exps: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
        exps.resize(m, 0);
        exps.sort_unstable();
        loop {
            out.add_term(exps.clone(), c.clone());
            if !next_permutation(&mut exps) {
                break;
            }
        }
    }
    Ok(out)
}

/// Advances to the next distinct permutation in lexicographic order.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
