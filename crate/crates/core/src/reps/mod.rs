//! Explicit matrix representations of `S_n` and its subgroups over `Q`.
//!
//! A representation of the full group is stored through the images of the
//! adjacent transpositions `s_1, …, s_{n-1}`; other matrices are products
//! along a reduced word and are memoized. Columns of `X(σ)` hold the
//! coordinates of `σ` applied to the basis vectors, so `X(πσ) = X(π)X(σ)`.

mod induce;
mod modules;
mod subgroup;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeffs::{char_inner, irreducible_character, ClassFunction, Limits};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partition::{all_permutations, partitions_of, Partition, Permutation};
use crate::poly::Polynomial;
use crate::sym::{evaluate, to_integer, BasisTag, SymElement};
use crate::tableau::{count_ssyt, f_lambda, SkewShape};

pub use induce::{default_transversal, induce, induce_with_transversal, outer_tensor, restrict, subgroup_inner};
pub use modules::{
    canonical_tableau, injective_monomial, specht_module, specht_module_with, specht_polynomial, vandermonde,
    young_module, young_module_with,
};
pub use subgroup::SubgroupSpec;

#[derive(Clone)]
enum Action {
    /// Images of `s_1..s_{n-1}`.
    Generators(Vec<RatMatrix>),
    /// Signed permutations of the basis, one per `s_i`: `j ↦ ±e_{img}`.
    Monomial(Vec<Vec<(usize, bool)>>),
    /// Every element of a subgroup.
    Table(BTreeMap<Permutation, RatMatrix>),
}

pub struct MatrixRep {
    n: usize,
    dim: usize,
    group: SubgroupSpec,
    action: Action,
    basis: Option<Vec<Polynomial>>,
    cache: RwLock<HashMap<Permutation, RatMatrix>>,
}

impl Clone for MatrixRep {
    fn clone(&self) -> Self {
        MatrixRep {
            n: self.n,
            dim: self.dim,
            group: self.group.clone(),
            action: self.action.clone(),
            basis: self.basis.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for MatrixRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixRep").field("group", &self.group.to_string()).field("dim", &self.dim).finish()
    }
}

impl MatrixRep {
    fn new(n: usize, dim: usize, group: SubgroupSpec, action: Action) -> Self {
        MatrixRep { n, dim, group, action, basis: None, cache: RwLock::new(HashMap::new()) }
    }

    /// A representation of `S_n` given by the images of `s_1..s_{n-1}`.
    /// The matrices are not checked against the Coxeter relations; see
    /// [`MatrixRep::check_relations`].
    pub fn from_generators(n: usize, dim: usize, generators: Vec<RatMatrix>) -> Result<Self> {
        if generators.len() != n.saturating_sub(1) {
            return Err(Error::InvariantViolation(format!(
                "S_{n} needs {} generator matrices, got {}",
                n.saturating_sub(1),
                generators.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::InvariantViolation(format!(
                "generator matrix is {}x{}, expected {dim}x{dim}",
                g.rows(),
                g.cols()
            )));
        }
        Ok(Self::new(n, dim, SubgroupSpec::full(n), Action::Generators(generators)))
    }

    fn from_table(group: SubgroupSpec, dim: usize, table: BTreeMap<Permutation, RatMatrix>) -> Self {
        Self::new(group.degree(), dim, group, Action::Table(table))
    }

    /// The one-dimensional representation `h ↦ 1` (or `h ↦ sgn h`) of a
    /// subgroup.
    pub fn one_dimensional(group: &SubgroupSpec, signed: bool) -> Self {
        let table = group
            .elements()
            .into_iter()
            .map(|h| {
                let v = if signed { h.sign() } else { 1 };
                (h, RatMatrix::from_i64_rows(&[&[v as i64]]))
            })
            .collect();
        Self::from_table(group.clone(), 1, table)
    }

    /// Degree of the ambient symmetric group.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The group acting; `S_n` unless built by restriction.
    pub fn group(&self) -> &SubgroupSpec {
        &self.group
    }

    /// Polynomials spanning the module, for Young and Specht modules.
    pub fn basis_polynomials(&self) -> Option<&[Polynomial]> {
        self.basis.as_deref()
    }

    /// Matrices of `s_1..s_{n-1}`; only for representations of all of `S_n`.
    pub fn generator_matrices(&self) -> Result<Vec<RatMatrix>> {
        self.require_full()?;
        (1..self.n).map(|i| self.matrix(&Permutation::adjacent(self.n, i))).collect()
    }

    fn require_full(&self) -> Result<()> {
        if !self.group.is_full() {
            return Err(Error::NotSubgroup(format!("representation is only defined on {}", self.group)));
        }
        Ok(())
    }

    fn check_member(&self, pi: &Permutation) -> Result<()> {
        if pi.degree() != self.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: pi.degree() });
        }
        if !self.group.contains(pi) {
            return Err(Error::NotSubgroup(format!("({pi}) is not an element of {}", self.group)));
        }
        Ok(())
    }

    /// `X(π)`.
    pub fn matrix(&self, pi: &Permutation) -> Result<RatMatrix> {
        self.check_member(pi)?;
        if let Action::Table(t) = &self.action {
            return Ok(t[pi].clone());
        }
        if let Some(m) = self.cache.read().expect("matrix cache poisoned").get(pi) {
            return Ok(m.clone());
        }
        let m = match &self.action {
            Action::Generators(gens) => {
                pi.reduced_word().iter().fold(RatMatrix::identity(self.dim), |acc, &i| &acc * &gens[i - 1])
            }
            Action::Monomial(_) => {
                let mut m = RatMatrix::zeros(self.dim, self.dim);
                for (j, (img, neg)) in self.monomial_image(pi).into_iter().enumerate() {
                    m.set(img, j, BigRational::from_integer(if neg { -1 } else { 1 }.into()));
                }
                m
            }
            Action::Table(_) => unreachable!(),
        };
        let mut cache = self.cache.write().expect("matrix cache poisoned");
        Ok(cache.entry(pi.clone()).or_insert(m).clone())
    }

    fn monomial_image(&self, pi: &Permutation) -> Vec<(usize, bool)> {
        let Action::Monomial(gens) = &self.action else { unreachable!() };
        let word = pi.reduced_word();
        (0..self.dim)
            .map(|j| {
                word.iter().rev().fold((j, false), |(k, neg), &i| {
                    let (img, flip) = gens[i - 1][k];
                    (img, neg ^ flip)
                })
            })
            .collect()
    }

    /// `tr X(π)`.
    pub fn trace(&self, pi: &Permutation) -> Result<BigRational> {
        self.check_member(pi)?;
        match &self.action {
            Action::Monomial(_) => {
                let v: i64 = self
                    .monomial_image(pi)
                    .into_iter()
                    .enumerate()
                    .filter(|(j, (img, _))| j == img)
                    .map(|(_, (_, neg))| if neg { -1 } else { 1 })
                    .sum();
                Ok(BigRational::from_integer(v.into()))
            }
            _ => Ok(self.matrix(pi)?.trace()),
        }
    }

    /// The character as a class function, evaluated at one representative
    /// per cycle type.
    pub fn character_of(&self) -> Result<ClassFunction> {
        self.require_full()?;
        let values = partitions_of(self.n)
            .into_iter()
            .map(|mu| {
                let v = self.trace(&mu.class_representative())?;
                Ok((mu, v))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        ClassFunction::new(self.n, values)
    }

    /// The character at every element of the acting group.
    pub fn element_character(&self) -> Result<BTreeMap<Permutation, BigRational>> {
        self.group
            .elements()
            .into_iter()
            .map(|h| {
                let v = self.trace(&h)?;
                Ok((h, v))
            })
            .collect()
    }

    /// Checks `s_i² = 1`, `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}` and
    /// `s_i s_j = s_j s_i` for `|i - j| ≥ 2`; for a subgroup table, checks
    /// `X(gh) = X(g)X(h)` on all pairs.
    pub fn check_relations(&self) -> Result<bool> {
        let n = self.n;
        match &self.action {
            Action::Table(t) => {
                for (g, xg) in t {
                    for (h, xh) in t {
                        if t[&g.compose(h)] != xg * xh {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            Action::Monomial(gens) => {
                let compose = |word: &[usize], j: usize| {
                    word.iter().rev().fold((j, false), |(k, neg), &i| {
                        let (img, flip) = gens[i - 1][k];
                        (img, neg ^ flip)
                    })
                };
                let holds = |a: &[usize], b: &[usize]| (0..self.dim).all(|j| compose(a, j) == compose(b, j));
                Ok(coxeter_pairs(n).all(|(a, b)| holds(&a, &b)))
            }
            Action::Generators(gens) => {
                let product =
                    |word: &[usize]| word.iter().fold(RatMatrix::identity(self.dim), |acc, &i| &acc * &gens[i - 1]);
                Ok(coxeter_pairs(n).all(|(a, b)| product(&a) == product(&b)))
            }
        }
    }

    fn same_group(&self, other: &MatrixRep) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: other.n });
        }
        if self.group != other.group && !(self.group.is_full() && other.group.is_full()) {
            return Err(Error::NotSubgroup(format!(
                "representations of different groups: {} and {}",
                self.group, other.group
            )));
        }
        Ok(())
    }

    fn combine(
        &self,
        other: &MatrixRep,
        dim: usize,
        op: impl Fn(&RatMatrix, &RatMatrix) -> RatMatrix,
    ) -> Result<MatrixRep> {
        self.same_group(other)?;
        if self.group.is_full() {
            let gens =
                self.generator_matrices()?.iter().zip(other.generator_matrices()?).map(|(a, b)| op(a, &b)).collect();
            return MatrixRep::from_generators(self.n, dim, gens);
        }
        let table = self
            .group
            .elements()
            .into_iter()
            .map(|h| {
                let m = op(&self.matrix(&h)?, &other.matrix(&h)?);
                Ok((h, m))
            })
            .collect::<Result<_>>()?;
        Ok(MatrixRep::from_table(self.group.clone(), dim, table))
    }
}

fn coxeter_pairs(n: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    let gens = 1..n;
    gens.clone().flat_map(move |i| {
        let mut rel = vec![(vec![i, i], vec![])];
        if i + 1 < n {
            rel.push((vec![i, i + 1, i], vec![i + 1, i, i + 1]));
        }
        for j in i + 2..n {
            rel.push((vec![i, j], vec![j, i]));
        }
        rel
    })
}

/// The classical representations of `S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    Trivial,
    Sign,
    Defining,
    Regular,
    /// The complement of the invariant line in the defining representation,
    /// with basis `e_2 - e_1, …, e_n - e_1`.
    Standard,
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ClassicalKind::Trivial => "trivial",
            ClassicalKind::Sign => "sign",
            ClassicalKind::Defining => "defining",
            ClassicalKind::Regular => "regular",
            ClassicalKind::Standard => "standard",
        })
    }
}

impl FromStr for ClassicalKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "trivial" => ClassicalKind::Trivial,
            "sign" => ClassicalKind::Sign,
            "defining" => ClassicalKind::Defining,
            "regular" => ClassicalKind::Regular,
            "standard" => ClassicalKind::Standard,
            _ => return Err(format!("unknown representation {s:?}")),
        })
    }
}

pub fn classical_rep(kind: ClassicalKind, n: usize) -> Result<MatrixRep> {
    classical_rep_with(kind, n, &Limits::default())
}

pub fn classical_rep_with(kind: ClassicalKind, n: usize, limits: &Limits) -> Result<MatrixRep> {
    if n == 0 {
        return Err(Error::InvariantViolation("classical representations need n ≥ 1".into()));
    }
    let full = SubgroupSpec::full(n);
    let rep = match kind {
        ClassicalKind::Trivial => MatrixRep::new(n, 1, full, Action::Monomial(vec![vec![(0, false)]; n - 1])),
        ClassicalKind::Sign => MatrixRep::new(n, 1, full, Action::Monomial(vec![vec![(0, true)]; n - 1])),
        ClassicalKind::Defining => {
            let gens =
                (1..n).map(|i| (0..n).map(|j| (Permutation::adjacent(n, i).image0(j), false)).collect()).collect();
            MatrixRep::new(n, n, full, Action::Monomial(gens))
        }
        ClassicalKind::Regular => {
            Limits::check("the regular representation", n, limits.regular)?;
            let elements = all_permutations(n);
            let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(k, g)| (g, k)).collect();
            let gens = (1..n)
                .map(|i| {
                    let s = Permutation::adjacent(n, i);
                    elements.iter().map(|g| (index[&s.compose(g)], false)).collect()
                })
                .collect();
            MatrixRep::new(n, elements.len(), full, Action::Monomial(gens))
        }
        ClassicalKind::Standard => {
            // σ(e_j - e_1) = (e_σ(j) - e_1) - (e_σ(1) - e_1), basis index j-2
            let gens = (1..n)
                .map(|i| {
                    let s = Permutation::adjacent(n, i);
                    let mut m = RatMatrix::zeros(n - 1, n - 1);
                    for j in 1..n {
                        let (a, b) = (s.image0(j), s.image0(0));
                        if a != 0 {
                            m.set(a - 1, j - 1, &m[(a - 1, j - 1)] + BigRational::one());
                        }
                        if b != 0 {
                            m.set(b - 1, j - 1, &m[(b - 1, j - 1)] - BigRational::one());
                        }
                    }
                    m
                })
                .collect();
            MatrixRep::new(n, n - 1, full, Action::Generators(gens))
        }
    };
    Ok(rep)
}

/// Multiplicity of each irreducible `S^λ`, omitting zeros.
pub fn decompose(rep: &MatrixRep) -> Result<BTreeMap<Partition, BigInt>> {
    decompose_character(&rep.character_of()?)
}

/// `⟨χ, χ^λ⟩` for every `λ ⊢ n`, omitting zeros; fails unless every
/// multiplicity is a nonnegative integer.
pub fn decompose_character(chi: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(chi.degree()) {
        let m = to_integer(&char_inner(chi, &irreducible_character(&lambda)?)?, "multiplicity")?;
        if m.is_negative() {
            return Err(Error::InvariantViolation(format!("negative multiplicity {m} of {lambda}")));
        }
        if !m.is_zero() {
            out.insert(lambda, m);
        }
    }
    Ok(out)
}

/// Block-diagonal sum.
pub fn direct_sum(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep> {
    a.combine(b, a.dim + b.dim, RatMatrix::direct_sum)
}

/// Kronecker product under the diagonal action.
pub fn tensor_product(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep> {
    a.combine(b, a.dim * b.dim, RatMatrix::kron)
}

/// `χ_{∧²}(g) = (χ(g)² - χ(g²)) / 2`.
pub fn exterior_square_character(chi: &ClassFunction) -> ClassFunction {
    let two = BigRational::from_integer(2.into());
    ClassFunction::from_fn(chi.degree(), |mu| {
        let v = chi.value(mu);
        (&v * &v - chi.value(&mu.square_type())) / &two
    })
}

/// The character of the polynomial `GL_m` module `V^λ`:
/// `s_λ(x_1, …, x_m)`.
pub fn gl_character(lambda: &Partition, m: usize) -> Result<Polynomial> {
    evaluate(&SymElement::basis_element(BasisTag::S, lambda.clone()), m)
}

/// `dim V^λ` for `GL_m`: the number of semistandard tableaux of shape `λ`
/// with entries at most `m`.
pub fn gl_dimension(lambda: &Partition, m: usize) -> BigInt {
    count_ssyt(&SkewShape::straight(lambda.clone()), m)
}

/// Dimension count of `V^{⊗n} = ⊕_{ℓ(λ) ≤ m} S^λ ⊗ V^λ` for `dim V = m`.
pub fn schur_weyl_check(n: usize, m: usize) -> bool {
    let total: BigInt =
        partitions_of(n).iter().filter(|l| l.len() <= m).map(|l| f_lambda(l) * gl_dimension(l, m)).sum();
    total == num_traits::pow(BigInt::from(m), n)
}
