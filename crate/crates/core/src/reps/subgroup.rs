use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{all_permutations, Permutation};

/// A subgroup of `S_n`: the whole group, a Young subgroup
/// `S_{n_1} × ⋯ × S_{n_r}` acting on consecutive blocks, or an explicit
/// list of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    n: usize,
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Full,
    Young(Vec<usize>),
    Explicit(Vec<Permutation>),
}

impl SubgroupSpec {
    pub fn full(n: usize) -> Self {
        SubgroupSpec { n, kind: Kind::Full }
    }

    /// The Young subgroup of a composition; zero parts are ignored.
    pub fn young(composition: &[usize]) -> Self {
        let parts: Vec<usize> = composition.iter().copied().filter(|&p| p > 0).collect();
        SubgroupSpec { n: parts.iter().sum(), kind: Kind::Young(parts) }
    }

    /// Validates that `elements` contains the identity and is closed under
    /// composition (which, for a finite set, makes it a subgroup).
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|p| p.degree() != n) {
            return Err(Error::NotSubgroup(format!("{bad} is not a permutation of 1..{n}")));
        }
        elements.sort();
        elements.dedup();
        if !elements.iter().any(Permutation::is_identity) {
            return Err(Error::NotSubgroup("the identity is missing".into()));
        }
        for a in &elements {
            for b in &elements {
                let ab = a.compose(b);
                if elements.binary_search(&ab).is_err() {
                    return Err(Error::NotSubgroup(format!("({a})·({b}) = ({ab}) is missing")));
                }
            }
        }
        Ok(SubgroupSpec { n, kind: Kind::Explicit(elements) })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_full(&self) -> bool {
        match &self.kind {
            Kind::Full => true,
            Kind::Young(parts) => parts.len() <= 1,
            Kind::Explicit(e) => e.len() == all_permutations(self.n).len(),
        }
    }

    pub fn composition(&self) -> Option<&[usize]> {
        match &self.kind {
            Kind::Young(parts) => Some(parts),
            _ => None,
        }
    }

    pub fn contains(&self, pi: &Permutation) -> bool {
        if pi.degree() != self.n {
            return false;
        }
        match &self.kind {
            Kind::Full => true,
            Kind::Young(parts) => {
                let mut block = Vec::with_capacity(self.n);
                for (b, &p) in parts.iter().enumerate() {
                    block.extend(std::iter::repeat_n(b, p));
                }
                (0..self.n).all(|i| block[pi.image0(i)] == block[i])
            }
            Kind::Explicit(e) => e.binary_search(pi).is_ok(),
        }
    }

    /// Elements in lexicographic order of one-line words.
    pub fn elements(&self) -> Vec<Permutation> {
        match &self.kind {
            Kind::Explicit(e) => e.clone(),
            Kind::Full => all_permutations(self.n),
            Kind::Young(_) => all_permutations(self.n).into_iter().filter(|p| self.contains(p)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        match &self.kind {
            Kind::Explicit(e) => e.len(),
            Kind::Full => (1..=self.n).product(),
            Kind::Young(parts) => parts.iter().map(|&p| (1..=p).product::<usize>()).product(),
        }
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &SubgroupSpec) -> bool {
        self.n == other.n && (other.is_full() || self.elements().iter().all(|p| other.contains(p)))
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Full => write!(f, "S_{}", self.n),
            Kind::Young(parts) => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "young({})", p.join(","))
            }
            Kind::Explicit(e) => {
                let p: Vec<String> = e.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", p.join("; "))
            }
        }
    }
}
