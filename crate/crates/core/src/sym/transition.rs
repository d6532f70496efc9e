//! Per-degree transition matrices between each basis and the power sums.
//!
//! Column `j` of `to_p(b, n)` is the power-sum expansion of the basis
//! vector `b_λ` for the `j`-th partition of `n` in canonical order;
//! `from_p(b, n)` is its inverse. Routes:
//!
//! * `h`, `e`: products of `h_k = Σ p_μ/z_μ` and
//!   `e_k = Σ (-1)^{k+ℓ(μ)} p_μ/z_μ`.
//! * `s`: Jacobi–Trudi determinant in the `h` basis, then `h → p`.
//! * `m`: `from_p` is read off directly, since the coefficient of `m_λ` in
//!   `p_μ` counts the ways to distribute the parts of `μ` into bins of
//!   sizes `λ`; `to_p` is its inverse.
//!
//! Every matrix is computed at most once per degree and published only
//! when complete.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::BasisTag;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partition::{partitions_of, Partition};

pub const DEFAULT_MAX_DEGREE: usize = 20;

static REQUESTED_MAX: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);
static GLOBAL: OnceLock<TransitionTables> = OnceLock::new();

/// Sets the degree bound of the process-wide cache. Must be called before
/// the first symmetric-function computation; afterwards only the value
/// already in force is accepted.
pub fn configure_max_degree(max_degree: usize) -> Result<()> {
    match GLOBAL.get() {
        Some(t) if t.max_degree != max_degree => Err(Error::CacheConfigured(t.max_degree)),
        Some(_) => Ok(()),
        None => {
            REQUESTED_MAX.store(max_degree, Ordering::SeqCst);
            let t = GLOBAL.get_or_init(|| TransitionTables::new(max_degree));
            if t.max_degree != max_degree {
                return Err(Error::CacheConfigured(t.max_degree));
            }
            Ok(())
        }
    }
}

/// The process-wide cache.
pub fn tables() -> &'static TransitionTables {
    GLOBAL.get_or_init(|| TransitionTables::new(REQUESTED_MAX.load(Ordering::SeqCst)))
}

pub struct DegreeIndex {
    pub partitions: Vec<Partition>,
    pub position: HashMap<Partition, usize>,
}

impl DegreeIndex {
    fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let position = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        DegreeIndex { partitions, position }
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }
}

#[derive(Default)]
struct DegreeSlot {
    index: OnceLock<DegreeIndex>,
    to_p: [OnceLock<Result<RatMatrix>>; 5],
    from_p: [OnceLock<Result<RatMatrix>>; 5],
}

pub struct TransitionTables {
    max_degree: usize,
    slots: Vec<DegreeSlot>,
}

impl TransitionTables {
    pub fn new(max_degree: usize) -> Self {
        TransitionTables { max_degree, slots: (0..=max_degree).map(|_| DegreeSlot::default()).collect() }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn slot(&self, n: usize) -> Result<&DegreeSlot> {
        self.slots.get(n).ok_or(Error::CapExceeded {
            what: "symmetric function degree",
            degree: n,
            cap: self.max_degree,
        })
    }

    pub fn index(&self, n: usize) -> Result<&DegreeIndex> {
        Ok(self.slot(n)?.index.get_or_init(|| DegreeIndex::new(n)))
    }

    /// Matrix taking `b`-coordinates to `p`-coordinates in degree `n`.
    pub fn to_p(&self, basis: BasisTag, n: usize) -> Result<&RatMatrix> {
        let slot = self.slot(n)?;
        slot.to_p[basis as usize]
            .get_or_init(|| match basis {
                BasisTag::P => Ok(RatMatrix::identity(self.index(n)?.len())),
                BasisTag::H => self.multiplicative_to_p(n, BasisTag::H),
                BasisTag::E => self.multiplicative_to_p(n, BasisTag::E),
                BasisTag::S => self.schur_to_p(n),
                BasisTag::M => invert(self.from_p(BasisTag::M, n)?, "p → m"),
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Matrix taking `p`-coordinates to `b`-coordinates in degree `n`.
    pub fn from_p(&self, basis: BasisTag, n: usize) -> Result<&RatMatrix> {
        let slot = self.slot(n)?;
        slot.from_p[basis as usize]
            .get_or_init(|| match basis {
                BasisTag::P => Ok(RatMatrix::identity(self.index(n)?.len())),
                BasisTag::M => self.power_sums_in_monomials(n),
                b => invert(self.to_p(b, n)?, "basis → p"),
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Power-sum expansion of `h_k` or `e_k`.
    fn generator_in_p(&self, basis: BasisTag, k: usize) -> Result<Vec<(Partition, BigRational)>> {
        let idx = self.index(k)?;
        Ok(idx
            .partitions
            .iter()
            .map(|mu| {
                let mut c = BigRational::new(BigInt::one(), mu.z());
                if basis == BasisTag::E && (k + mu.len()) % 2 == 1 {
                    c = -c;
                }
                (mu.clone(), c)
            })
            .collect())
    }

    fn multiplicative_to_p(&self, n: usize, basis: BasisTag) -> Result<RatMatrix> {
        let idx = self.index(n)?;
        let mut m = RatMatrix::zeros(idx.len(), idx.len());
        for (j, lambda) in idx.partitions.iter().enumerate() {
            let column = if lambda.len() <= 1 {
                self.generator_in_p(basis, n)?
            } else {
                // b_λ = b_{λ_1} · b_{rest}, with the rest read from a lower degree
                let first = lambda.part(0);
                let rest = Partition::new(lambda.parts()[1..].to_vec())?;
                let rest_idx = self.index(rest.size())?;
                let rest_col = self.to_p(basis, rest.size())?.column(rest_idx.position[&rest]);
                let head = self.generator_in_p(basis, first)?;
                let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
                for (a, ca) in &head {
                    for (b, cb) in rest_idx.partitions.iter().zip(&rest_col) {
                        if cb.is_zero() {
                            continue;
                        }
                        *acc.entry(a.union(b)).or_insert_with(BigRational::zero) += ca * cb;
                    }
                }
                acc.into_iter().collect()
            };
            for (mu, c) in column {
                m[(idx.position[&mu], j)] = c;
            }
        }
        Ok(m)
    }

    fn schur_to_p(&self, n: usize) -> Result<RatMatrix> {
        let idx = self.index(n)?;
        let mut s_in_h = RatMatrix::zeros(idx.len(), idx.len());
        for (j, lambda) in idx.partitions.iter().enumerate() {
            for (mu, c) in jacobi_trudi(lambda) {
                s_in_h[(idx.position[&mu], j)] = BigRational::from_integer(c);
            }
        }
        Ok(self.to_p(BasisTag::H, n)? * &s_in_h)
    }

    fn power_sums_in_monomials(&self, n: usize) -> Result<RatMatrix> {
        let idx = self.index(n)?;
        let mut m = RatMatrix::zeros(idx.len(), idx.len());
        for (j, mu) in idx.partitions.iter().enumerate() {
            for (i, lambda) in idx.partitions.iter().enumerate() {
                let c = monomial_coefficient_of_power_sum(mu, lambda);
                if !c.is_zero() {
                    m[(i, j)] = BigRational::from_integer(c);
                }
            }
        }
        Ok(m)
    }
}

fn invert(m: &RatMatrix, what: &str) -> Result<RatMatrix> {
    m.inverse().ok_or_else(|| Error::InvariantViolation(format!("transition matrix {what} is singular")))
}

/// `s_λ = det(h_{λ_i - i + j})` expanded in the `h` basis.
pub fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    fn rec(
        parts: &[usize],
        row: usize,
        used: &mut Vec<bool>,
        inversions: usize,
        chosen: &mut Vec<usize>,
        out: &mut BTreeMap<Partition, BigInt>,
    ) {
        let l = parts.len();
        if row == l {
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            let key = Partition::from_unsorted(chosen.clone());
            *out.entry(key).or_insert_with(BigInt::zero) += sign;
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            let k = parts[row] as isize - row as isize + col as isize;
            if k < 0 {
                continue;
            }
            let extra = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            chosen.push(k as usize);
            rec(parts, row + 1, used, inversions + extra, chosen, out);
            chosen.pop();
            used[col] = false;
        }
    }
    let mut out = BTreeMap::new();
    rec(lambda.parts(), 0, &mut vec![false; lambda.len()], 0, &mut Vec::new(), &mut out);
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient of `x^λ` in `p_μ`: ways to send each part of `μ` to a bin so
/// that bin `i` receives total `λ_i`.
pub fn monomial_coefficient_of_power_sum(mu: &Partition, lambda: &Partition) -> BigInt {
    fn rec(parts: &[usize], remaining: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
        if parts.is_empty() {
            return if remaining.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
        }
        let key = (parts.len(), remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..remaining.len() {
            if remaining[i] >= parts[0] {
                let mut next = remaining.clone();
                next[i] -= parts[0];
                next.sort_unstable_by(|a, b| b.cmp(a));
                total += rec(&parts[1..], next, memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }
    if mu.size() != lambda.size() {
        return BigInt::zero();
    }
    rec(mu.parts(), lambda.parts().to_vec(), &mut HashMap::new())
}
