//! Multivariate polynomials over `Q` in a fixed finite alphabet
//! `x_1, …, x_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::Permutation;

/// Exponent vector over `x_1..x_k`.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

/// Values of symmetric functions restricted to finitely many variables.
pub type PolynomialValue = Polynomial;

/// Polynomials spanning the Young and Specht modules.
pub type LaurentFreePolynomial = Polynomial;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// `c · x^exponents`
    pub fn monomial(exponents: Monomial, c: BigRational) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exponents: Monomial, c: BigRational) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        use std::collections::btree_map::Entry;
        match entry {
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

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// `σ · f`, substituting `x_i ↦ x_{σ(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> Self {
        assert!(sigma.degree() <= self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            for i in 0..sigma.degree() {
                e[sigma.image0(i)] = m[i];
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitutes `x_i ↦ values[i]`.
    pub fn substitute(&self, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.nvars);
        let target = values.first().map_or(0, Polynomial::nvars);
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (v, &e) in values.iter().zip(m) {
                if e > 0 {
                    term = &term * &v.pow(e as usize);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    /// Sum of coefficients, i.e. the value at `x_i = 1`.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().cloned().sum()
    }

    /// Re-embeds into a larger (or equal) alphabet.
    pub fn with_nvars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars || self.terms.keys().all(|m| m[nvars..].iter().all(|&e| e == 0)));
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.clone();
                    e.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let nvars = self.nvars.max(rhs.nvars);
        let mut out = self.with_nvars(nvars);
        for (m, c) in &rhs.terms {
            let mut e = m.clone();
            e.resize(nvars, 0);
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let nvars = self.nvars.max(rhs.nvars);
        let mut out = Polynomial::zero(nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Monomial =
                    (0..nvars).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing lexicographic order of exponents, e.g.
    /// `x1^2 + 2*x1*x2 - 1/2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &BigRational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `{"nvars":2,"terms":[{"exponents":[2,0],"coeff":"1"}, …]}`, terms in
/// increasing lexicographic order of exponents.
impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            exponents: &'a [u32],
            coeff: String,
        }
        #[derive(serde::Serialize)]
        struct Poly<'a> {
            nvars: usize,
            terms: Vec<Term<'a>>,
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| Term { exponents: m, coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}
