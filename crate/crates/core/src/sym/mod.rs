//! The ring `Sym` of symmetric functions over `Q`.
//!
//! Elements carry a basis tag and finitely many nonzero coefficients. The
//! power sums are the working basis: products concatenate partitions, the
//! Hall inner product is diagonal with weights `z_λ`, and `ω` is a sign
//! twist. Every other basis is reached through the per-degree matrices in
//! [`transition`].

mod ops;
pub mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use ops::{evaluate, hall_inner, multiply, omega, perp, skew_schur};

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    /// monomial `m_λ`
    M = 0,
    /// elementary `e_λ`
    E = 1,
    /// complete homogeneous `h_λ`
    H = 2,
    /// power sum `p_λ`
    P = 3,
    /// Schur `s_λ`
    S = 4,
}

impl BasisTag {
    pub const ALL: [BasisTag; 5] = [BasisTag::M, BasisTag::E, BasisTag::H, BasisTag::P, BasisTag::S];

    pub fn letter(self) -> char {
        match self {
            BasisTag::M => 'm',
            BasisTag::E => 'e',
            BasisTag::H => 'h',
            BasisTag::P => 'p',
            BasisTag::S => 's',
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" => Ok(BasisTag::M),
            "e" => Ok(BasisTag::E),
            "h" => Ok(BasisTag::H),
            "p" => Ok(BasisTag::P),
            "s" => Ok(BasisTag::S),
            _ => Err(Error::MalformedElement {
                input: s.to_string(),
                reason: "basis must be one of m, e, h, p, s".into(),
            }),
        }
    }
}

/// A symmetric function: a finite linear combination of one basis family.
/// Terms of different degrees may be mixed.
///
/// Equality is semantic: elements in different bases compare equal when
/// their power-sum expansions agree. Comparing across bases, and the
/// arithmetic operators when the bases differ, panic if a degree exceeds
/// the transition cache cap; use [`SymElement::convert`] to handle that
/// case as an error.
#[derive(Clone)]
pub struct SymElement {
    basis: BasisTag,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymElement {
    pub fn zero(basis: BasisTag) -> Self {
        SymElement { basis, terms: BTreeMap::new() }
    }

    /// The unit, `b_()`.
    pub fn one(basis: BasisTag) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: BasisTag, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigRational::one());
        SymElement { basis, terms }
    }

    pub fn from_terms<I>(basis: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut out = Self::zero(basis);
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    /// Shorthand for integer coefficients.
    pub fn from_int_terms<I>(basis: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        Self::from_terms(basis, terms.into_iter().map(|(l, c)| (l, BigRational::from_integer(c.into()))))
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Degrees with at least one nonzero term, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    /// Whether every term has degree `n`. The zero element is homogeneous
    /// of every degree.
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.size() == n)
    }

    /// Degree-`k` slice.
    pub fn component(&self, k: usize) -> SymElement {
        SymElement {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.size() == k).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymElement {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymElement { basis: self.basis, terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// Applies a map to each coefficient, keyed by partition.
    pub(crate) fn map_coeffs(&self, f: impl Fn(&Partition, &BigRational) -> BigRational) -> SymElement {
        SymElement::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), f(l, c))))
    }

    /// The same element expanded in `target`.
    pub fn convert(&self, target: BasisTag) -> Result<SymElement> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let tables = transition::tables();
        let mut out = SymElement::zero(target);
        for n in self.degrees() {
            let idx = tables.index(n)?;
            let mut v = vec![BigRational::zero(); idx.len()];
            for (l, c) in self.terms.range(first_of_degree(n)..) {
                if l.size() != n {
                    break;
                }
                v[idx.position[l]] = c.clone();
            }
            if self.basis != BasisTag::P {
                v = tables.to_p(self.basis, n)?.mul_vec(&v);
            }
            if target != BasisTag::P {
                v = tables.from_p(target, n)?.mul_vec(&v);
            }
            for (l, c) in idx.partitions.iter().zip(v) {
                out.add_term(l.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn to_p(&self) -> Result<SymElement> {
        self.convert(BasisTag::P)
    }

    /// Coefficients as integers, failing if any is fractional.
    pub fn integer_terms(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.terms.iter().map(|(l, c)| Ok((l.clone(), to_integer(c, "symmetric function coefficient")?))).collect()
    }

    pub fn try_add(&self, other: &SymElement) -> Result<SymElement> {
        let rhs = other.convert(self.basis)?;
        let mut out = self.clone();
        for (l, c) in rhs.terms {
            out.add_term(l, c);
        }
        Ok(out)
    }

    fn semantic_eq(&self, other: &SymElement) -> Result<bool> {
        if self.basis == other.basis {
            return Ok(self.terms == other.terms);
        }
        Ok(self.to_p()?.terms == other.to_p()?.terms)
    }
}

/// The least partition of size `n` in canonical order.
fn first_of_degree(n: usize) -> Partition {
    Partition::row(n)
}

pub(crate) fn to_integer(c: &BigRational, what: &str) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::InvariantViolation(format!("{what} {c} is not an integer")))
    }
}

impl PartialEq for SymElement {
    fn eq(&self, other: &Self) -> bool {
        self.semantic_eq(other).expect("degree within the transition cache cap")
    }
}

impl Add for &SymElement {
    type Output = SymElement;

    fn add(self, rhs: &SymElement) -> SymElement {
        self.try_add(rhs).expect("degree within the transition cache cap")
    }
}

impl Neg for &SymElement {
    type Output = SymElement;

    fn neg(self) -> SymElement {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &SymElement {
    type Output = SymElement;

    fn sub(self, rhs: &SymElement) -> SymElement {
        self + &(-rhs)
    }
}

impl Mul for &SymElement {
    type Output = SymElement;

    /// Ring product in the power-sum basis.
    fn mul(self, rhs: &SymElement) -> SymElement {
        multiply(self, rhs).expect("degree within the transition cache cap")
    }
}

impl fmt::Display for SymElement {
    /// Human-readable form, e.g. `m[2,1] + 2*m[1,1,1]`; the unit prints as
    /// `s[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let parts = l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            if abs.is_one() {
                write!(f, "{}[{}]", self.basis, parts)?;
            } else {
                write!(f, "{}*{}[{}]", abs, self.basis, parts)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymElement({self})")
    }
}

/// Literal syntax `basis:term(+term)*`, where a term is `[coeff*]partition`,
/// a coefficient is `a` or `a/b`, and a partition is `3,2,1` or `()`.
/// Terms are separated by `+` or `-`; the literal `basis:0` is zero.
///
/// Examples: `s:2,1`, `p:1/2*2 - 1/2*1,1`, `h:3*()`.
impl FromStr for SymElement {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MalformedElement { input: input.to_string(), reason: reason.to_string() };
        let (basis, body) = input.split_once(':').ok_or_else(|| bad("expected `basis:terms`"))?;
        let basis: BasisTag = basis.parse().map_err(|_| bad("basis must be one of m, e, h, p, s"))?;
        let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        if body.is_empty() {
            return Err(bad("no terms"));
        }
        if body == "0" {
            return Ok(SymElement::zero(basis));
        }
        let mut out = SymElement::zero(basis);
        let mut rest = body.as_str();
        let mut sign = BigRational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            let (coeff, part) = match term.split_once('*') {
                Some((c, p)) => (c.parse::<BigRational>().map_err(|_| bad("malformed coefficient"))?, p),
                None => (BigRational::one(), term),
            };
            let lambda: Partition = part.parse().map_err(|_| bad("malformed partition"))?;
            out.add_term(lambda, sign * coeff);
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -BigRational::one() } else { BigRational::one() };
            rest = &rest[end + 1..];
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct WireElement {
    basis: String,
    terms: Vec<WireTerm>,
}

/// `{"basis":"s","terms":[{"partition":[2,1],"coeff":"1"}]}`
impl Serialize for SymElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WireElement {
            basis: self.basis.to_string(),
            terms: self.terms.iter().map(|(l, c)| WireTerm { partition: l.clone(), coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WireElement::deserialize(deserializer)?;
        let basis: BasisTag = wire.basis.parse().map_err(serde::de::Error::custom)?;
        let mut out = SymElement::zero(basis);
        for t in wire.terms {
            let c: BigRational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            out.add_term(t.partition, c);
        }
        Ok(out)
    }
}
