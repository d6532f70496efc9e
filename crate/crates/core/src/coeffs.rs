//! Characters of `S_n` through the Frobenius characteristic, and the
//! Littlewood–Richardson, Kronecker and Young's-rule coefficients.
//!
//! `χ^λ(μ)` is read off the power-sum expansion of `s_λ`:
//! `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::sym::{hall_inner, multiply, to_integer, transition, BasisTag, SymElement};

/// Degree caps for the more expensive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Full character tables.
    pub table: usize,
    /// Single characters and structure coefficients.
    pub coefficient: usize,
    /// Explicit polynomial modules (Young and Specht).
    pub polynomial_module: usize,
    /// The regular representation.
    pub regular: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { table: 8, coefficient: 12, polynomial_module: 5, regular: 6 }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, degree: usize, cap: usize) -> Result<()> {
        if degree > cap {
            return Err(Error::CapExceeded { what, degree, cap });
        }
        Ok(())
    }
}

/// A class function on `S_n`, one value per cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Requires exactly one value for each partition of `n`.
    pub fn new(n: usize, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        let keys: Vec<&Partition> = values.keys().collect();
        let expected = partitions_of(n);
        if keys.len() != expected.len() || keys.iter().zip(&expected).any(|(a, b)| *a != b) {
            return Err(Error::InvariantViolation(format!(
                "class function on S_{n} must have one value per partition of {n}"
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> BigRational) -> Self {
        ClassFunction {
            n,
            values: partitions_of(n)
                .into_iter()
                .map(|mu| {
                    let v = f(&mu);
                    (mu, v)
                })
                .collect(),
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        Self::from_fn(n, |_| c.clone())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> BigRational {
        self.values.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigRational> {
        &self.values
    }

    /// Values listed in canonical class order.
    pub fn to_vec(&self) -> Vec<BigRational> {
        self.values.values().cloned().collect()
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        check_degrees(self, other)?;
        Ok(Self::from_fn(self.n, |mu| self.value(mu) * other.value(mu)))
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        check_degrees(self, other)?;
        Ok(Self::from_fn(self.n, |mu| self.value(mu) + other.value(mu)))
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        Self::from_fn(self.n, |mu| self.value(mu) * c)
    }
}

fn check_degrees(a: &ClassFunction, b: &ClassFunction) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DegreeMismatch { expected: a.n, found: b.n });
    }
    Ok(())
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            class: &'a Partition,
            value: String,
        }
        let entries: Vec<Entry> = self.values.iter().map(|(class, v)| Entry { class, value: v.to_string() }).collect();
        entries.serialize(serializer)
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.values.keys().map(|k| k.to_string().len()).max().unwrap_or(0);
        for (i, (class, v)) in self.values.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{class:<width$}  {v}")?;
        }
        Ok(())
    }
}

/// `⟨φ, χ⟩ = Σ_μ φ(μ) χ(μ) / z_μ`. Characters of `S_n` are rational, so
/// no conjugation is applied.
pub fn char_inner(phi: &ClassFunction, chi: &ClassFunction) -> Result<BigRational> {
    check_degrees(phi, chi)?;
    Ok(phi.values.iter().map(|(mu, a)| a * chi.value(mu) / BigRational::from_integer(mu.z())).sum())
}

/// `χ^λ(μ)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    character_with(lambda, mu, &Limits::default())
}

pub fn character_with(lambda: &Partition, mu: &Partition, limits: &Limits) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    let n = lambda.size();
    Limits::check("character degree", n, limits.coefficient)?;
    let tables = transition::tables();
    let idx = tables.index(n)?;
    let c = &tables.to_p(BasisTag::S, n)?[(idx.position[mu], idx.position[lambda])];
    to_integer(&(c * BigRational::from_integer(mu.z())), "character value")
}

/// The irreducible character `χ^λ` as a class function.
pub fn irreducible_character(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.size();
    Limits::check("character degree", n, Limits::default().coefficient)?;
    let s = SymElement::basis_element(BasisTag::S, lambda.clone());
    let chi = frobenius_inverse(&s, n)?;
    for v in chi.values.values() {
        to_integer(v, "character value")?;
    }
    Ok(chi)
}

/// The character table of `S_n`: rows `λ`, columns `μ`, both in canonical
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub rows: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == mu)?;
        Some(&self.rows[i][j])
    }
}

/// `{"n":3,"classes":[[3],[2,1],[1,1,1]],"rows":[{"irrep":[3],"values":["1","1","1"]},…]}`
impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            irrep: &'a Partition,
            values: Vec<String>,
        }
        #[derive(Serialize)]
        struct Table<'a> {
            n: usize,
            classes: &'a [Partition],
            rows: Vec<Row<'a>>,
        }
        Table {
            n: self.n,
            classes: &self.partitions,
            rows: self
                .partitions
                .iter()
                .zip(&self.rows)
                .map(|(irrep, r)| Row { irrep, values: r.iter().map(BigInt::to_string).collect() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl fmt::Display for CharacterTable {
    /// Aligned text: a header row of class labels, then one row per
    /// irreducible.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.partitions.iter().map(|p| p.to_string()).collect();
        let row_w = labels.iter().map(String::len).max().unwrap_or(1);
        let col_w: Vec<usize> = (0..labels.len())
            .map(|j| self.rows.iter().map(|r| r[j].to_string().len()).chain([labels[j].len()]).max().unwrap_or(1))
            .collect();
        write!(f, "{:row_w$}", "")?;
        for (l, w) in labels.iter().zip(&col_w) {
            write!(f, "  {l:>w$}")?;
        }
        for (label, row) in labels.iter().zip(&self.rows) {
            writeln!(f)?;
            write!(f, "{label:<row_w$}")?;
            for (v, w) in row.iter().zip(&col_w) {
                write!(f, "  {:>w$}", v.to_string())?;
            }
        }
        Ok(())
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_with(n, &Limits::default())
}

pub fn character_table_with(n: usize, limits: &Limits) -> Result<CharacterTable> {
    Limits::check("character table degree", n, limits.table)?;
    let partitions = partitions_of(n);
    let tables = transition::tables();
    let s_to_p = tables.to_p(BasisTag::S, n)?;
    let rows = (0..partitions.len())
        .map(|j| {
            partitions
                .iter()
                .enumerate()
                .map(|(i, mu)| to_integer(&(&s_to_p[(i, j)] * BigRational::from_integer(mu.z())), "character value"))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { n, partitions, rows })
}

/// `ch(f) = Σ_μ f(μ) p_μ / z_μ`, in the power-sum basis.
pub fn frobenius_ch(f: &ClassFunction) -> SymElement {
    SymElement::from_terms(
        BasisTag::P,
        f.values.iter().map(|(mu, v)| (mu.clone(), v / BigRational::from_integer(mu.z()))),
    )
}

/// Inverse of [`frobenius_ch`] on degree-`n` symmetric functions.
pub fn frobenius_inverse(f: &SymElement, n: usize) -> Result<ClassFunction> {
    if !f.is_homogeneous_of(n) {
        return Err(Error::NotHomogeneous(n));
    }
    let fp = f.to_p()?;
    Ok(ClassFunction::from_fn(n, |mu| fp.coeff(mu) * BigRational::from_integer(mu.z())))
}

/// `c^λ_{μν} = ⟨s_λ, s_μ s_ν⟩`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() + nu.size() {
        return Ok(BigInt::zero());
    }
    Limits::check("coefficient degree", lambda.size(), Limits::default().coefficient)?;
    let s = |p: &Partition| SymElement::basis_element(BasisTag::S, p.clone());
    let c = hall_inner(&s(lambda), &multiply(&s(mu), &s(nu))?)?;
    to_integer(&c, "Littlewood-Richardson coefficient")
}

/// `γ^λ_{μν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Ok(BigInt::zero());
    }
    Limits::check("coefficient degree", n, Limits::default().coefficient)?;
    let a = irreducible_character(lambda)?;
    let b = irreducible_character(mu)?;
    let c = irreducible_character(nu)?;
    let g = char_inner(&a, &b.pointwise_mul(&c)?)?;
    to_integer(&g, "Kronecker coefficient")
}

/// The Kronecker (internal) product: `p_λ ⋆ p_μ = δ_{λμ} z_λ p_λ`,
/// extended bilinearly. Result in the power-sum basis.
pub fn kronecker_product(f: &SymElement, g: &SymElement) -> Result<SymElement> {
    let a = f.to_p()?;
    let b = g.to_p()?;
    Ok(SymElement::from_terms(
        BasisTag::P,
        a.terms()
            .iter()
            .filter_map(|(l, ca)| b.terms().get(l).map(|cb| (l.clone(), ca * cb * BigRational::from_integer(l.z())))),
    ))
}

/// Multiplicities of `S^λ` in the Young permutation module `H^μ`, read off
/// the Schur expansion of `h_μ`.
pub fn youngs_rule(mu: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
    SymElement::basis_element(BasisTag::H, mu.clone()).convert(BasisTag::S)?.integer_terms()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;
    use crate::sym::skew_schur;
    use crate::tableau::{f_lambda, kostka};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn trivial_sign_and_standard_characters() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(character(&Partition::row(n), &mu).unwrap(), z(1));
                assert_eq!(character(&Partition::column(n), &mu).unwrap(), z(mu.sign() as i64));
            }
        }
        // χ_def - χ_triv on S_3 with χ_def = (3, 1, 0) on (1^3), (2,1), (3)
        let def = [(p("1,1,1"), 3), (p("2,1"), 1), (p("3"), 0)];
        for (mu, d) in def {
            assert_eq!(character(&p("2,1"), &mu).unwrap(), z(d - 1));
        }
        assert!(matches!(character(&p("2,1"), &p("2")), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn small_tables() {
        assert_eq!(character_table(1).unwrap().rows, vec![vec![z(1)]]);
        let t = character_table(3).unwrap();
        // columns (3), (2,1), (1,1,1)
        assert_eq!(t.rows, vec![vec![z(1), z(1), z(1)], vec![z(-1), z(0), z(2)], vec![z(1), z(-1), z(1)]]);
        assert!(matches!(character_table(9), Err(Error::CapExceeded { .. })));
        assert_eq!(
            t.to_string(),
            "        3  2,1  1,1,1\n3       1    1      1\n2,1    -1    0      2\n1,1,1   1   -1      1"
        );
    }

    #[test]
    fn orthogonality_and_degrees() {
        for n in 1..=6 {
            let t = character_table(n).unwrap();
            let ps = &t.partitions;
            for i in 0..ps.len() {
                for j in 0..ps.len() {
                    let s: BigRational =
                        (0..ps.len()).map(|k| BigRational::new(&t.rows[i][k] * &t.rows[j][k], ps[k].z())).sum();
                    assert_eq!(s, BigRational::from_integer(z((i == j) as i64)));
                }
                assert_eq!(t.value(&ps[i], &Partition::column(n)).unwrap(), &f_lambda(&ps[i]));
            }
            let sum: BigInt = ps.iter().map(|l| f_lambda(l).pow(2)).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn frobenius_examples() {
        for n in 1..=5 {
            for l in partitions_of(n) {
                let chi = irreducible_character(&l).unwrap();
                assert_eq!(frobenius_ch(&chi), SymElement::basis_element(BasisTag::S, l.clone()));
            }
            let triv = ClassFunction::constant(n, BigRational::from_integer(z(1)));
            assert_eq!(frobenius_ch(&triv), SymElement::basis_element(BasisTag::H, Partition::row(n)));
            assert_eq!(frobenius_inverse(&SymElement::basis_element(BasisTag::H, Partition::row(n)), n).unwrap(), triv);
            for mu in partitions_of(n) {
                let ind = ClassFunction::from_fn(n, |x| {
                    if x == &mu {
                        BigRational::from_integer(mu.z())
                    } else {
                        BigRational::zero()
                    }
                });
                assert_eq!(frobenius_ch(&ind).terms(), SymElement::basis_element(BasisTag::P, mu.clone()).terms());
                assert_eq!(frobenius_inverse(&SymElement::basis_element(BasisTag::P, mu.clone()), n).unwrap(), ind);
            }
        }
        let mixed: SymElement = "s:2 + 1".parse().unwrap();
        assert!(matches!(frobenius_inverse(&mixed, 2), Err(Error::NotHomogeneous(2))));
    }

    #[test]
    fn frobenius_is_an_isometry() {
        let n = 4;
        let a = irreducible_character(&p("3,1")).unwrap().add(&irreducible_character(&p("2,2")).unwrap()).unwrap();
        let b = irreducible_character(&p("2,2")).unwrap().scale(&BigRational::from_integer(z(3)));
        assert_eq!(char_inner(&a, &b).unwrap(), hall_inner(&frobenius_ch(&a), &frobenius_ch(&b)).unwrap());
        let other = ClassFunction::constant(n + 1, BigRational::zero());
        assert!(char_inner(&a, &other).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(littlewood_richardson(&p("2"), &p("1"), &p("1")).unwrap(), z(1));
        assert_eq!(littlewood_richardson(&p("1,1"), &p("1"), &p("1")).unwrap(), z(1));
        assert_eq!(littlewood_richardson(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), z(2));
        assert_eq!(littlewood_richardson(&p("3"), &p("1"), &p("1")).unwrap(), z(0));
        for n in 0..=4 {
            for l in partitions_of(n) {
                for m in partitions_of(n) {
                    let d = z((l == m) as i64);
                    assert_eq!(littlewood_richardson(&l, &m, &Partition::empty()).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn lr_matches_skew() {
        for n in 0..=5 {
            for l in partitions_of(n) {
                for k in 0..=n {
                    for mu in partitions_of(k) {
                        let sk = skew_schur(&l, &mu).unwrap();
                        for nu in partitions_of(n - k) {
                            let c = littlewood_richardson(&l, &mu, &nu).unwrap();
                            assert_eq!(c, littlewood_richardson(&l, &nu, &mu).unwrap());
                            assert_eq!(BigRational::from_integer(c), sk.coeff(&nu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        for n in 1..=5 {
            for l in partitions_of(n) {
                for m in partitions_of(n) {
                    assert_eq!(kronecker(&l, &m, &Partition::row(n)).unwrap(), z((l == m) as i64));
                    assert_eq!(kronecker(&l, &m, &Partition::column(n)).unwrap(), z((l == m.conjugate()) as i64));
                }
            }
        }
        assert_eq!(kronecker(&p("2,1"), &p("2"), &p("2,1")).unwrap(), z(0));
        assert_eq!(kronecker(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), z(1));
    }

    #[test]
    fn kronecker_product_examples() {
        let pl = SymElement::basis_element(BasisTag::P, p("2,1"));
        let pm = SymElement::basis_element(BasisTag::P, p("1,1,1"));
        assert!(kronecker_product(&pl, &pm).unwrap().is_zero());
        assert_eq!(kronecker_product(&pl, &pl).unwrap(), pl.scale(&BigRational::from_integer(z(2))));
        let f: SymElement = "s:3,1 + 2*2,1,1 - 1/3*4".parse().unwrap();
        assert_eq!(kronecker_product(&SymElement::basis_element(BasisTag::H, p("4")), &f).unwrap(), f);
        let s21 = SymElement::basis_element(BasisTag::S, p("2,1"));
        let sq = kronecker_product(&s21, &s21).unwrap().convert(BasisTag::S).unwrap();
        assert_eq!(sq.terms(), "s:3 + 2,1 + 1,1,1".parse::<SymElement>().unwrap().terms());
    }

    #[test]
    fn youngs_rule_examples() {
        let got = youngs_rule(&p("3,2,1")).unwrap();
        let expected: BTreeMap<Partition, BigInt> =
            [("3,2,1", 1), ("3,3", 1), ("4,2", 2), ("4,1,1", 1), ("5,1", 2), ("6", 1)]
                .into_iter()
                .map(|(l, c)| (p(l), z(c)))
                .collect();
        assert_eq!(got, expected);
        assert_eq!(youngs_rule(&p("4")).unwrap(), BTreeMap::from([(p("4"), z(1))]));
        let reg = youngs_rule(&p("1,1,1,1")).unwrap();
        for l in partitions_of(4) {
            assert_eq!(reg[&l], f_lambda(&l));
        }
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let yr = youngs_rule(&mu).unwrap();
                for l in partitions_of(n) {
                    assert_eq!(yr.get(&l).cloned().unwrap_or_default(), kostka(&l, &mu));
                }
            }
        }
    }
}
