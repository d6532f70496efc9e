//! Hopf structure on `Sym`: the coproducts `f ↦ f[X+Y]` and `f ↦ f[XY]`,
//! their counits, the antipode, the Cauchy kernel, and plethysm.
//!
//! All maps are computed on power sums, where they are determined by their
//! values on the generators `p_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::sym::{evaluate, hall_inner, BasisTag, SymElement};

/// An element of `Sym ⊗ Sym`, expanded in a pair of bases.
#[derive(Clone)]
pub struct TensorElement {
    left: BasisTag,
    right: BasisTag,
    terms: BTreeMap<(Partition, Partition), BigRational>,
}

impl TensorElement {
    pub fn zero(left: BasisTag, right: BasisTag) -> Self {
        TensorElement { left, right, terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1`
    pub fn one(left: BasisTag, right: BasisTag) -> Self {
        let mut t = Self::zero(left, right);
        t.add_term(Partition::empty(), Partition::empty(), BigRational::one());
        t
    }

    pub fn from_terms<I>(left: BasisTag, right: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = ((Partition, Partition), BigRational)>,
    {
        let mut t = Self::zero(left, right);
        for ((a, b), c) in terms {
            t.add_term(a, b, c);
        }
        t
    }

    /// `f ⊗ g`
    pub fn outer(f: &SymElement, g: &SymElement) -> Self {
        let mut t = Self::zero(f.basis(), g.basis());
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                t.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        t
    }

    pub fn basis_pair(&self) -> (BasisTag, BasisTag) {
        (self.left, self.right)
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), BigRational> {
        &self.terms
    }

    pub fn coeff(&self, a: &Partition, b: &Partition) -> BigRational {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Partition, b: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
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

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        let rhs = other.convert(self.left, self.right)?;
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms {
            out.add_term(a, b, c);
        }
        Ok(out)
    }

    /// Re-expands each side in the requested basis.
    pub fn convert(&self, left: BasisTag, right: BasisTag) -> Result<TensorElement> {
        if (left, right) == (self.left, self.right) {
            return Ok(self.clone());
        }
        let mut lcache: HashMap<&Partition, SymElement> = HashMap::new();
        let mut rcache: HashMap<&Partition, SymElement> = HashMap::new();
        let mut out = TensorElement::zero(left, right);
        for ((a, b), c) in &self.terms {
            if !lcache.contains_key(a) {
                lcache.insert(a, SymElement::basis_element(self.left, a.clone()).convert(left)?);
            }
            if !rcache.contains_key(b) {
                rcache.insert(b, SymElement::basis_element(self.right, b.clone()).convert(right)?);
            }
            for (x, cx) in lcache[a].terms() {
                for (y, cy) in rcache[b].terms() {
                    out.add_term(x.clone(), y.clone(), c * cx * cy);
                }
            }
        }
        Ok(out)
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`, in the `(p, p)` pair.
    pub fn multiply(&self, other: &TensorElement) -> Result<TensorElement> {
        let x = self.convert(BasisTag::P, BasisTag::P)?;
        let y = other.convert(BasisTag::P, BasisTag::P)?;
        let mut out = TensorElement::zero(BasisTag::P, BasisTag::P);
        for ((a, b), ca) in &x.terms {
            for ((c, d), cb) in &y.terms {
                out.add_term(a.union(c), b.union(d), ca * cb);
            }
        }
        Ok(out)
    }

    /// `⟨self, g ⊗ h⟩` for the inner product `⟨a⊗b, c⊗d⟩ = ⟨a,c⟩⟨b,d⟩`.
    pub fn inner_with(&self, g: &SymElement, h: &SymElement) -> Result<BigRational> {
        let t = self.convert(BasisTag::P, BasisTag::P)?;
        let g = g.to_p()?;
        let h = h.to_p()?;
        let mut total = BigRational::zero();
        for ((a, b), c) in &t.terms {
            let (ga, hb) = (g.coeff(a), h.coeff(b));
            if !ga.is_zero() && !hb.is_zero() {
                total += c * ga * hb * BigRational::from_integer(a.z() * b.z());
            }
        }
        Ok(total)
    }

    /// `(ε ⊗ 1)`: keep the terms whose left factor is the unit.
    pub fn counit_left(&self) -> SymElement {
        SymElement::from_terms(
            self.right,
            self.terms.iter().filter(|((a, _), _)| a.is_empty()).map(|((_, b), c)| (b.clone(), c.clone())),
        )
    }

    /// `(1 ⊗ ε)`
    pub fn counit_right(&self) -> SymElement {
        SymElement::from_terms(
            self.left,
            self.terms.iter().filter(|((_, b), _)| b.is_empty()).map(|((a, _), c)| (a.clone(), c.clone())),
        )
    }

    /// `μ ∘ (1 ⊗ φ)` for a linear map `φ` given on basis vectors of the
    /// right factor; the product is taken in `Sym`.
    pub fn contract_with(&self, phi: impl Fn(&SymElement) -> Result<SymElement>) -> Result<SymElement> {
        let mut out = SymElement::zero(BasisTag::P);
        for ((a, b), c) in &self.terms {
            let left = SymElement::basis_element(self.left, a.clone());
            let right = phi(&SymElement::basis_element(self.right, b.clone()))?;
            out = out.try_add(&crate::sym::multiply(&left, &right)?.scale(c))?;
        }
        Ok(out)
    }

    fn semantic_eq(&self, other: &TensorElement) -> Result<bool> {
        if (self.left, self.right) == (other.left, other.right) {
            return Ok(self.terms == other.terms);
        }
        Ok(self.convert(BasisTag::P, BasisTag::P)?.terms == other.convert(BasisTag::P, BasisTag::P)?.terms)
    }
}

impl PartialEq for TensorElement {
    /// Semantic equality; panics if a degree exceeds the transition cap.
    fn eq(&self, other: &Self) -> bool {
        self.semantic_eq(other).expect("degree within the transition cache cap")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let fmt_p = |p: &Partition| p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}[{}]⊗{}[{}]", self.left, fmt_p(a), self.right, fmt_p(b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

/// `[{"left":[2],"right":[1],"coeff":"1"}, …]`
impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            left: &'a Partition,
            right: &'a Partition,
            coeff: String,
        }
        let terms: Vec<Term> =
            self.terms.iter().map(|((left, right), c)| Term { left, right, coeff: c.to_string() }).collect();
        terms.serialize(serializer)
    }
}

/// `Δf = f[X+Y]`: `p_n ↦ p_n ⊗ 1 + 1 ⊗ p_n`, extended multiplicatively.
/// The result is expanded in the basis of `f` on both sides.
pub fn coproduct_sum(f: &SymElement) -> Result<TensorElement> {
    let fp = f.to_p()?;
    let mut out = TensorElement::zero(BasisTag::P, BasisTag::P);
    for (lambda, c) in fp.terms() {
        let mut acc: BTreeMap<(Partition, Partition), BigRational> =
            BTreeMap::from([((Partition::empty(), Partition::empty()), c.clone())]);
        for &k in lambda.parts() {
            let part = Partition::row(k);
            let mut next = BTreeMap::new();
            for ((a, b), v) in acc {
                *next.entry((a.union(&part), b.clone())).or_insert_with(BigRational::zero) += &v;
                *next.entry((a, b.union(&part))).or_insert_with(BigRational::zero) += v;
            }
            acc = next;
        }
        for ((a, b), v) in acc {
            out.add_term(a, b, v);
        }
    }
    out.convert(f.basis(), f.basis())
}

/// `Δ*f = f[XY]`: `p_λ ↦ p_λ ⊗ p_λ`. Expanded in the basis of `f` on both
/// sides.
pub fn coproduct_prod(f: &SymElement) -> Result<TensorElement> {
    let fp = f.to_p()?;
    let out = TensorElement::from_terms(
        BasisTag::P,
        BasisTag::P,
        fp.terms().iter().map(|(l, c)| ((l.clone(), l.clone()), c.clone())),
    );
    out.convert(f.basis(), f.basis())
}

/// `ε(f) = f(0, 0, …)`, the constant term.
pub fn counit(f: &SymElement) -> BigRational {
    f.coeff(&Partition::empty())
}

/// `ε*(f) = f(1, 0, 0, …)`.
pub fn counit_star(f: &SymElement) -> Result<BigRational> {
    Ok(evaluate(f, 1)?.coefficient_sum())
}

/// The antipode: the algebra map `h_i ↦ (-1)^i e_i`, equivalently
/// `p_λ ↦ (-1)^{ℓ(λ)} p_λ`. Expressed in the basis of `f`.
pub fn antipode(f: &SymElement) -> Result<SymElement> {
    f.to_p()?.map_coeffs(|l, c| if l.len() % 2 == 0 { c.clone() } else { -c.clone() }).convert(f.basis())
}

/// `h_n[XY]` in a pair of dual bases: `(s, s)`, `(h, m)`, `(m, h)`, or
/// `(p, p)` (where the coefficients are `1/z_λ`).
pub fn cauchy_kernel(n: usize, left: BasisTag, right: BasisTag) -> Result<TensorElement> {
    use BasisTag::*;
    if !matches!((left, right), (S, S) | (H, M) | (M, H) | (P, P)) {
        return Err(Error::NotDualPair(left.to_string(), right.to_string()));
    }
    coproduct_prod(&SymElement::basis_element(H, Partition::row(n)))?.convert(left, right)
}

/// Plethysm `f[g]`. Rational coefficients of `g` are constants (fixed by
/// every `p_n`), and `p_n[g]` replaces each `p_k` in `g` by `p_{nk}`.
/// Result in the power-sum basis.
pub fn plethysm(f: &SymElement, g: &SymElement) -> Result<SymElement> {
    plethysm_scaled(f, g, 1)
}

/// `f[c·g]` for the alphabet `g` repeated `copies` times, using
/// `p_n[X + X] = 2 p_n[X]`.
pub fn plethysm_scaled(f: &SymElement, g: &SymElement, copies: u32) -> Result<SymElement> {
    let fp = f.to_p()?;
    let gp = g.to_p()?;
    let copies = BigRational::from_integer(copies.into());
    let mut adams: HashMap<usize, SymElement> = HashMap::new();
    let mut adams_of = |n: usize| -> SymElement {
        adams
            .entry(n)
            .or_insert_with(|| {
                SymElement::from_terms(BasisTag::P, gp.terms().iter().map(|(l, c)| (l.scale(n), c.clone())))
                    .scale(&copies)
            })
            .clone()
    };
    let mut out = SymElement::zero(BasisTag::P);
    for (lambda, c) in fp.terms() {
        let mut term = SymElement::one(BasisTag::P).scale(c);
        for &k in lambda.parts() {
            term = crate::sym::multiply(&term, &adams_of(k))?;
        }
        out = out.try_add(&term)?;
    }
    Ok(out)
}

/// Checks `⟨Δf, g⊗h⟩ = ⟨f, gh⟩`.
pub fn coproduct_is_adjoint(f: &SymElement, g: &SymElement, h: &SymElement) -> Result<bool> {
    Ok(coproduct_sum(f)?.inner_with(g, h)? == hall_inner(f, &crate::sym::multiply(g, h)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::littlewood_richardson;
    use crate::partition::partitions_of;

    fn el(s: &str) -> SymElement {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn gen(b: BasisTag, n: usize) -> SymElement {
        SymElement::basis_element(b, Partition::row(n))
    }

    #[test]
    fn coproduct_of_generators() {
        for n in 1..=6 {
            let dp = coproduct_sum(&gen(BasisTag::P, n)).unwrap();
            let expected = TensorElement::from_terms(
                BasisTag::P,
                BasisTag::P,
                [((Partition::row(n), Partition::empty()), q(1)), ((Partition::empty(), Partition::row(n)), q(1))],
            );
            assert_eq!(dp.terms(), expected.terms());
            let dh = coproduct_sum(&gen(BasisTag::H, n)).unwrap();
            let expected = TensorElement::from_terms(
                BasisTag::H,
                BasisTag::H,
                (0..=n).map(|k| ((Partition::row(k), Partition::row(n - k)), q(1))),
            );
            assert_eq!(dh.terms(), expected.terms());
        }
    }

    #[test]
    fn coproduct_of_schur_is_lr() {
        for n in 0..=5 {
            for l in partitions_of(n) {
                let ds = coproduct_sum(&SymElement::basis_element(BasisTag::S, l.clone())).unwrap();
                for k in 0..=n {
                    for mu in partitions_of(k) {
                        for nu in partitions_of(n - k) {
                            let c = littlewood_richardson(&l, &mu, &nu).unwrap();
                            assert_eq!(ds.coeff(&mu, &nu), BigRational::from_integer(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coproduct_prod_examples() {
        for n in 1..=5 {
            let dp = coproduct_prod(&gen(BasisTag::P, n)).unwrap();
            assert_eq!(dp.terms().len(), 1);
            assert_eq!(dp.coeff(&Partition::row(n), &Partition::row(n)), q(1));
            let dh = coproduct_prod(&gen(BasisTag::H, n)).unwrap().convert(BasisTag::S, BasisTag::S).unwrap();
            let de = coproduct_prod(&gen(BasisTag::E, n)).unwrap().convert(BasisTag::S, BasisTag::S).unwrap();
            let ps = partitions_of(n);
            assert_eq!(dh.terms().len(), ps.len());
            assert_eq!(de.terms().len(), ps.len());
            for l in &ps {
                assert_eq!(dh.coeff(l, l), q(1));
                assert_eq!(de.coeff(l, &l.conjugate()), q(1));
            }
        }
    }

    #[test]
    fn counits() {
        assert_eq!(counit(&gen(BasisTag::P, 3)), q(0));
        assert_eq!(counit(&SymElement::one(BasisTag::S)), q(1));
        for n in 0..=6 {
            assert_eq!(counit_star(&gen(BasisTag::H, n)).unwrap(), q(1));
            assert_eq!(counit_star(&gen(BasisTag::P, n)).unwrap(), q(1));
            assert_eq!(counit_star(&gen(BasisTag::E, n)).unwrap(), q((n <= 1) as i64));
        }
    }

    #[test]
    fn antipode_examples() {
        for i in 0..=6 {
            let expected = gen(BasisTag::E, i).scale(&q(if i % 2 == 0 { 1 } else { -1 }));
            assert_eq!(antipode(&gen(BasisTag::H, i)).unwrap(), expected);
        }
        assert_eq!(antipode(&SymElement::one(BasisTag::S)).unwrap(), SymElement::one(BasisTag::S));
        // Σ h_(1) S(h_(2)) = ε(h) 1
        for n in 0..=6 {
            let h = gen(BasisTag::H, n);
            let lhs = coproduct_sum(&h).unwrap().contract_with(antipode).unwrap();
            assert_eq!(lhs, SymElement::one(BasisTag::P).scale(&counit(&h)));
        }
    }

    #[test]
    fn cauchy_kernels() {
        for n in 0..=5 {
            let ss = cauchy_kernel(n, BasisTag::S, BasisTag::S).unwrap();
            let ps = partitions_of(n);
            assert_eq!(ss.terms().len(), ps.len());
            let hm = cauchy_kernel(n, BasisTag::H, BasisTag::M).unwrap();
            let pp = cauchy_kernel(n, BasisTag::P, BasisTag::P).unwrap();
            for l in &ps {
                assert_eq!(ss.coeff(l, l), q(1));
                assert_eq!(hm.coeff(l, l), q(1));
                assert_eq!(pp.coeff(l, l), BigRational::new(1.into(), l.z()));
            }
            assert_eq!(hm.terms().len(), ps.len());
        }
        assert_eq!(
            cauchy_kernel(0, BasisTag::S, BasisTag::S).unwrap().terms(),
            TensorElement::one(BasisTag::S, BasisTag::S).terms()
        );
        assert!(matches!(cauchy_kernel(2, BasisTag::E, BasisTag::S), Err(Error::NotDualPair(..))));
    }

    #[test]
    fn plethysm_examples() {
        for n in 1..=4 {
            for m in 1..=4 {
                let r = plethysm(&gen(BasisTag::P, n), &gen(BasisTag::P, m)).unwrap();
                assert_eq!(r.terms(), gen(BasisTag::P, n * m).terms());
            }
        }
        // p_n[2x + 2y]
        for n in 1..=4 {
            let two_x = el("p:2*1");
            let r = crate::sym::evaluate(&plethysm(&gen(BasisTag::P, n), &two_x).unwrap(), 2).unwrap();
            let mut expected = crate::poly::Polynomial::zero(2);
            expected.add_term(vec![n as u32, 0], q(2));
            expected.add_term(vec![0, n as u32], q(2));
            assert_eq!(r, expected);
            let scaled = plethysm_scaled(&gen(BasisTag::P, n), &el("p:1"), 2).unwrap();
            assert_eq!(scaled, plethysm(&gen(BasisTag::P, n), &two_x).unwrap());
        }
        // h_2[h_2] = s_4 + s_{2,2}
        let hh = plethysm(&gen(BasisTag::H, 2), &gen(BasisTag::H, 2)).unwrap().convert(BasisTag::S).unwrap();
        assert_eq!(hh.terms(), el("s:4 + 2,2").terms());
    }

    #[test]
    fn plethysm_is_linear_and_multiplicative_in_f() {
        let g = el("s:2,1 + 3*1");
        let f1 = el("s:2");
        let f2 = el("e:1,1");
        let sum = plethysm(&f1.try_add(&f2).unwrap(), &g).unwrap();
        assert_eq!(sum, plethysm(&f1, &g).unwrap().try_add(&plethysm(&f2, &g).unwrap()).unwrap());
        let prod = plethysm(&crate::sym::multiply(&f1, &f2).unwrap(), &g).unwrap();
        assert_eq!(prod, crate::sym::multiply(&plethysm(&f1, &g).unwrap(), &plethysm(&f2, &g).unwrap()).unwrap());
        // p_n[f] = f[p_n]
        for n in 1..=3 {
            assert_eq!(plethysm(&gen(BasisTag::P, n), &g).unwrap(), plethysm(&g, &gen(BasisTag::P, n)).unwrap());
        }
    }

    #[test]
    fn tensor_json() {
        let t = coproduct_sum(&gen(BasisTag::P, 1)).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"[{"left":[],"right":[1],"coeff":"1"},{"left":[1],"right":[],"coeff":"1"}]"#
        );
    }
}
