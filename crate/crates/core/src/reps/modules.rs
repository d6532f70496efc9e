//! The Young permutation modules `H^λ` and the Specht modules `S^λ`,
//! realized on polynomials in `x_1, …, x_n`.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Action, MatrixRep, SubgroupSpec};
use crate::coeffs::Limits;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partition::{Partition, Permutation};
use crate::poly::{Monomial, Polynomial};
use crate::tableau::{standard_tableaux, Tableau};

/// `t(λ)`: `1..n` written left to right, top to bottom.
pub fn canonical_tableau(lambda: &Partition) -> Tableau {
    let mut next = 1;
    let rows = lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    Tableau::from_rows(rows).expect("row lengths of a partition")
}

fn injective_exponents(rows: &[Vec<usize>], n: usize) -> Monomial {
    let mut e = vec![0; n];
    for (r, row) in rows.iter().enumerate() {
        for &x in row {
            e[x - 1] = r as u32;
        }
    }
    e
}

/// `x^t = ∏ x_{t(c)}^{row(c) - 1}` for an injective tableau with entries
/// `1..n`. This is not the content monomial of [`Tableau::weight_monomial`].
pub fn injective_monomial(t: &Tableau) -> Polynomial {
    Polynomial::monomial(injective_exponents(t.rows(), t.size()), BigRational::one())
}

/// `a_t = Σ_{σ ∈ C_t} sgn(σ) σ·x^t`, summed over the column stabilizer.
pub fn specht_polynomial(t: &Tableau) -> Polynomial {
    let n = t.size();
    let xt = injective_monomial(t);
    let shape = t.shape();
    let columns: Vec<Vec<usize>> =
        (0..shape.part(0)).map(|c| t.rows().iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect();
    let mut out = Polynomial::zero(n);
    for choice in columns.iter().map(|col| col.iter().copied().permutations(col.len())).multi_cartesian_product() {
        let mut images: Vec<usize> = (0..n).collect();
        for (col, perm) in columns.iter().zip(&choice) {
            for (&a, &b) in col.iter().zip(perm) {
                images[a - 1] = b - 1;
            }
        }
        let sigma = Permutation::from_images(images);
        let term = xt.permute(&sigma);
        out = if sigma.sign() > 0 { &out + &term } else { &out - &term };
    }
    out
}

/// `Δ_n = ∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> Polynomial {
    let mut out = Polynomial::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out * &(&Polynomial::var(n, i) - &Polynomial::var(n, j));
        }
    }
    out
}

/// Injective tableaux of shape `λ` with increasing rows, in lexicographic
/// order of their reading words.
fn row_sorted_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn go(parts: &[usize], remaining: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&k, rest)) = parts.split_first() else {
            out.push(acc.clone());
            return;
        };
        for row in remaining.iter().copied().combinations(k) {
            let left: Vec<usize> = remaining.iter().copied().filter(|x| !row.contains(x)).collect();
            acc.push(row);
            go(rest, &left, acc, out);
            acc.pop();
        }
    }
    let all: Vec<usize> = (1..=lambda.size()).collect();
    let mut out = Vec::new();
    go(lambda.parts(), &all, &mut Vec::new(), &mut out);
    out
}

pub fn young_module(lambda: &Partition) -> Result<MatrixRep> {
    young_module_with(lambda, &Limits::default())
}

/// `H^λ`: `S_n` permuting the monomials `x^t` of row-sorted injective
/// tableaux. Permutation modules share the cap of the regular
/// representation.
pub fn young_module_with(lambda: &Partition, limits: &Limits) -> Result<MatrixRep> {
    let n = lambda.size();
    Limits::check("Young modules", n, limits.regular)?;
    let basis = row_sorted_tableaux(lambda);
    let index: HashMap<&Vec<Vec<usize>>, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let gens = (1..n)
        .map(|i| {
            let s = Permutation::adjacent(n, i);
            basis
                .iter()
                .map(|t| {
                    let moved: Vec<Vec<usize>> =
                        t.iter().map(|row| row.iter().map(|&x| s.apply(x)).sorted().collect()).collect();
                    (index[&moved], false)
                })
                .collect()
        })
        .collect();
    let polys = basis.iter().map(|t| Polynomial::monomial(injective_exponents(t, n), BigRational::one())).collect();
    let mut rep = MatrixRep::new(n, basis.len(), SubgroupSpec::full(n), Action::Monomial(gens));
    rep.basis = Some(polys);
    Ok(rep)
}

pub fn specht_module(lambda: &Partition) -> Result<MatrixRep> {
    specht_module_with(lambda, &Limits::default())
}

/// `S^λ` on the basis `a_t`, `t` standard. Matrices come from solving for
/// the coordinates of `s_i·a_t` in the monomial coordinates of the basis.
pub fn specht_module_with(lambda: &Partition, limits: &Limits) -> Result<MatrixRep> {
    let n = lambda.size();
    Limits::check("Specht modules", n, limits.polynomial_module)?;
    let basis: Vec<Polynomial> = standard_tableaux(lambda).iter().map(specht_polynomial).collect();
    let dim = basis.len();
    let monomials: Vec<Monomial> =
        basis.iter().flat_map(|f| f.terms().map(|(m, _)| m.clone())).collect::<BTreeSet<_>>().into_iter().collect();
    // rows of `coords` are basis vectors in monomial coordinates
    let coords = RatMatrix::from_rows(basis.iter().map(|f| monomials.iter().map(|m| f.coeff(m)).collect()).collect());
    let mut reduced = coords.clone();
    let pivots = reduced.row_reduce();
    if pivots.len() != dim {
        return Err(Error::InvariantViolation(format!("the polynomials a_t for {lambda} are linearly dependent")));
    }
    let square =
        RatMatrix::from_rows((0..dim).map(|k| pivots.iter().map(|&m| coords[(k, m)].clone()).collect()).collect())
            .transpose();
    let square_inv = square.inverse().ok_or_else(|| Error::InvariantViolation("singular pivot block".into()))?;
    let gens = (1..n)
        .map(|i| {
            let s = Permutation::adjacent(n, i);
            let mut m = RatMatrix::zeros(dim, dim);
            for (j, f) in basis.iter().enumerate() {
                let image = f.permute(&s);
                let rhs: Vec<BigRational> = pivots.iter().map(|&p| image.coeff(&monomials[p])).collect();
                let c = square_inv.mul_vec(&rhs);
                let mut check = Polynomial::zero(n);
                for (ck, fk) in c.iter().zip(&basis) {
                    if !ck.is_zero() {
                        check = &check + &fk.scale(ck);
                    }
                }
                if check != image {
                    return Err(Error::InvariantViolation(format!(
                        "s_{i}·a_t is not in the span of the standard a_t for {lambda}"
                    )));
                }
                for (k, ck) in c.into_iter().enumerate() {
                    m.set(k, j, ck);
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = MatrixRep::new(n, dim, SubgroupSpec::full(n), Action::Generators(gens));
    rep.basis = Some(basis);
    Ok(rep)
}
