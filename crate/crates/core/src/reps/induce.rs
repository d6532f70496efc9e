use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{MatrixRep, SubgroupSpec};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partition::{all_permutations, Permutation};

/// Left-coset representatives of `H` in `S_n`: scanning `S_n` in
/// lexicographic order, each element not yet covered starts a new coset.
pub fn default_transversal(h: &SubgroupSpec) -> Vec<Permutation> {
    let elements = h.elements();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in all_permutations(h.degree()) {
        if seen.contains(&g) {
            continue;
        }
        for x in &elements {
            seen.insert(g.compose(x));
        }
        out.push(g);
    }
    out
}

/// `Y↑^{S_n}_H` with the lexicographically minimal transversal.
pub fn induce(rep: &MatrixRep) -> Result<MatrixRep> {
    induce_with_transversal(rep, &default_transversal(rep.group()))
}

/// The block matrix `X(g)_{ij} = Y(t_i⁻¹ g t_j)`, zero when
/// `t_i⁻¹ g t_j ∉ H`.
pub fn induce_with_transversal(rep: &MatrixRep, transversal: &[Permutation]) -> Result<MatrixRep> {
    let h = rep.group();
    let n = h.degree();
    let index = (1..=n).product::<usize>() / h.order();
    if transversal.len() != index {
        return Err(Error::InvalidTransversal(format!(
            "{} needs {index} coset representatives, got {}",
            h,
            transversal.len()
        )));
    }
    if let Some(t) = transversal.iter().find(|t| t.degree() != n) {
        return Err(Error::InvalidTransversal(format!("({t}) is not a permutation of 1..{n}")));
    }
    let inverses: Vec<Permutation> = transversal.iter().map(Permutation::inverse).collect();
    for i in 0..index {
        for j in i + 1..index {
            if h.contains(&inverses[i].compose(&transversal[j])) {
                return Err(Error::InvalidTransversal(format!(
                    "({}) and ({}) lie in the same coset",
                    transversal[i], transversal[j]
                )));
            }
        }
    }
    let d = rep.dim();
    let gens = (1..n)
        .map(|s| {
            let g = Permutation::adjacent(n, s);
            let mut m = RatMatrix::zeros(index * d, index * d);
            for (i, ti_inv) in inverses.iter().enumerate() {
                for (j, tj) in transversal.iter().enumerate() {
                    let x = ti_inv.compose(&g).compose(tj);
                    if !h.contains(&x) {
                        continue;
                    }
                    let y = rep.matrix(&x)?;
                    for a in 0..d {
                        for b in 0..d {
                            m.set(i * d + a, j * d + b, y[(a, b)].clone());
                        }
                    }
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixRep::from_generators(n, index * d, gens)
}

/// `X↓_H`: the same matrices on the elements of `H`.
pub fn restrict(rep: &MatrixRep, h: &SubgroupSpec) -> Result<MatrixRep> {
    if h.degree() != rep.n() {
        return Err(Error::DegreeMismatch { expected: rep.n(), found: h.degree() });
    }
    if !h.is_subgroup_of(rep.group()) {
        return Err(Error::NotSubgroup(format!("{h} is not contained in {}", rep.group())));
    }
    let table: BTreeMap<Permutation, RatMatrix> = h
        .elements()
        .into_iter()
        .map(|x| {
            let m = rep.matrix(&x)?;
            Ok((x, m))
        })
        .collect::<Result<_>>()?;
    Ok(MatrixRep::from_table(h.clone(), rep.dim(), table))
}

/// `X ⊠ Y` for representations of `S_a` and `S_b`, as a representation of
/// the Young subgroup `S_a × S_b` of `S_{a+b}`.
pub fn outer_tensor(x: &MatrixRep, y: &MatrixRep) -> Result<MatrixRep> {
    for r in [x, y] {
        if !r.group().is_full() {
            return Err(Error::NotSubgroup(format!("outer products need representations of S_n, got {}", r.group())));
        }
    }
    let (a, b) = (x.n(), y.n());
    let h = SubgroupSpec::young(&[a, b]);
    let table = h
        .elements()
        .into_iter()
        .map(|g| {
            let g1 = Permutation::from_images((0..a).map(|i| g.image0(i)).collect());
            let g2 = Permutation::from_images((a..a + b).map(|i| g.image0(i) - a).collect());
            let m = x.matrix(&g1)?.kron(&y.matrix(&g2)?);
            Ok((g, m))
        })
        .collect::<Result<_>>()?;
    Ok(MatrixRep::from_table(h, x.dim() * y.dim(), table))
}

/// `⟨φ, ψ⟩_H = (1/|H|) Σ_h φ(h) ψ(h⁻¹)` for functions given on the
/// elements of `H`.
pub fn subgroup_inner(
    phi: &BTreeMap<Permutation, BigRational>,
    psi: &BTreeMap<Permutation, BigRational>,
) -> Result<BigRational> {
    if phi.len() != psi.len() || phi.is_empty() {
        return Err(Error::InvariantViolation("class functions on different groups".into()));
    }
    let mut total = BigRational::zero();
    for (h, a) in phi {
        let b = psi
            .get(&h.inverse())
            .ok_or_else(|| Error::InvariantViolation("class functions on different groups".into()))?;
        total += a * b;
    }
    Ok(total / BigRational::from_integer(phi.len().into()))
}
