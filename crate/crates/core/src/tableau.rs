//! Young tableaux: semistandard enumeration, Kostka numbers, `f^λ` and
//! the Robinson–Schensted–Knuth correspondence.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidTableau(format!("({inner}) is not contained in ({outer})")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len()).flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c))).collect()
    }
}

/// A filling of a (skew) Young diagram. `rows[i]` holds the entries of the
/// cells of row `i` that lie outside the inner shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// A straight-shape tableau from its rows. The shape must be a
    /// partition; no ordering condition on the entries is checked.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not weakly decreasing".into()))?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { inner: Partition::empty(), rows })
    }

    pub fn empty() -> Self {
        Tableau { inner: Partition::empty(), rows: Vec::new() }
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().enumerate().map(|(i, r)| r.len() + self.inner.part(i)).collect())
    }

    pub fn skew_shape(&self) -> SkewShape {
        SkewShape { outer: self.shape(), inner: self.inner.clone() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at `(row, col)` in diagram coordinates; `None` for inner or
    /// missing cells.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let offset = self.inner.part(row);
        col.checked_sub(offset).and_then(|c| self.rows.get(row)?.get(c).copied())
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.rows.len()).all(|r| {
            let offset = self.inner.part(r);
            (0..self.rows[r].len()).all(|k| {
                let c = offset + k;
                self.entry(r - 1, c).is_none_or(|above| above < self.rows[r][k])
            })
        });
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&e| e > 0)
    }

    /// Semistandard with entries exactly `1..n`, each once.
    pub fn is_standard(&self) -> bool {
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        self.is_semistandard() && entries.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    /// Content `α(T)`: `α_i` = number of entries equal to `i`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut alpha = vec![0; max];
        for &e in self.rows.iter().flatten() {
            alpha[e - 1] += 1;
        }
        alpha
    }

    /// The weight `x^T` as variable index (1-based) ↦ exponent.
    pub fn weight_monomial(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &e in self.rows.iter().flatten() {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }

    fn position_of(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| row.iter().position(|&e| e == value).map(|c| (r, c)))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = std::iter::repeat_n(".".to_string(), self.inner.part(i))
                .chain(row.iter().map(|e| e.to_string()))
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

/// Rows of integers; cells of a skew tableau's inner shape are written as 0.
impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| std::iter::repeat_n(0, self.inner.part(i)).chain(r.iter().copied()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let full = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let inner: Vec<usize> = full.iter().map(|r| r.iter().take_while(|&&e| e == 0).count()).collect();
        let inner = Partition::new(inner).map_err(serde::de::Error::custom)?;
        let rows: Vec<Vec<usize>> = full.iter().enumerate().map(|(i, r)| r[inner.part(i)..].to_vec()).collect();
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(serde::de::Error::custom("zero entry outside the inner shape"));
        }
        let t = Tableau { inner, rows };
        Partition::new(t.rows.iter().enumerate().map(|(i, r)| r.len() + t.inner.part(i)).collect())
            .map_err(serde::de::Error::custom)?;
        Ok(t)
    }
}

/// Lazy backtracking enumeration of semistandard fillings, in row-major
/// lexicographic order.
pub struct SsytIter {
    shape: SkewShape,
    cells: Vec<(usize, usize)>,
    // index into `cells` of the cell to the left / above, if constrained
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    max_entry: usize,
    remaining: Option<Vec<usize>>,
    values: Vec<usize>,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn new(shape: SkewShape, max_entry: usize, content: Option<Vec<usize>>) -> Self {
        let cells = shape.cells();
        let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let left = cells.iter().map(|&(r, c)| c.checked_sub(1).and_then(|c| index.get(&(r, c)).copied())).collect();
        let above = cells.iter().map(|&(r, c)| r.checked_sub(1).and_then(|r| index.get(&(r, c)).copied())).collect();
        let n = cells.len();
        let done = content.as_ref().is_some_and(|c| c.iter().sum::<usize>() != n);
        SsytIter { shape, cells, left, above, max_entry, remaining: content, values: vec![0; n], started: false, done }
    }

    fn lower_bound(&self, pos: usize) -> usize {
        let l = self.left[pos].map_or(1, |i| self.values[i]);
        let a = self.above[pos].map_or(1, |i| self.values[i] + 1);
        l.max(a).max(1)
    }

    fn next_valid(&self, from: usize) -> Option<usize> {
        (from..=self.max_entry).find(|&v| self.remaining.as_ref().is_none_or(|rem| rem[v - 1] > 0))
    }

    fn set(&mut self, pos: usize, v: usize) {
        let old = std::mem::replace(&mut self.values[pos], v);
        if let Some(rem) = self.remaining.as_mut() {
            if old > 0 {
                rem[old - 1] += 1;
            }
            if v > 0 {
                rem[v - 1] -= 1;
            }
        }
    }

    fn build(&self) -> Tableau {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.shape.outer.len()];
        for (&(r, _), &v) in self.cells.iter().zip(&self.values) {
            rows[r].push(v);
        }
        Tableau { inner: self.shape.inner.clone(), rows }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let n = self.cells.len();
        let mut pos = if self.started {
            if n == 0 {
                self.done = true;
                return None;
            }
            n - 1
        } else {
            self.started = true;
            if n == 0 {
                return Some(self.build());
            }
            0
        };
        loop {
            let from = match self.values[pos] {
                0 => self.lower_bound(pos),
                v => v + 1,
            };
            match self.next_valid(from) {
                Some(v) => {
                    self.set(pos, v);
                    pos += 1;
                    if pos == n {
                        return Some(self.build());
                    }
                }
                None => {
                    self.set(pos, 0);
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    pos -= 1;
                }
            }
        }
    }
}

/// Every semistandard filling of `shape` with entries in `1..=max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> SsytIter {
    SsytIter::new(shape.clone(), max_entry, None)
}

/// Semistandard fillings with prescribed content (`content[i]` copies of
/// `i + 1`); `content` need not be weakly decreasing.
pub fn enumerate_ssyt_with_content(shape: &SkewShape, content: &[usize]) -> SsytIter {
    SsytIter::new(shape.clone(), content.len(), Some(content.to_vec()))
}

/// Number of semistandard fillings with entries at most `max_entry`.
pub fn count_ssyt(shape: &SkewShape, max_entry: usize) -> BigInt {
    BigInt::from(enumerate_ssyt(shape, max_entry).count())
}

/// `K_{λ,μ}`: semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(shape: &Partition, content: &Partition) -> BigInt {
    kostka_composition(shape, content.parts())
}

/// Kostka number for an arbitrary composition as content.
pub fn kostka_composition(shape: &Partition, content: &[usize]) -> BigInt {
    if shape.size() != content.iter().sum::<usize>() {
        return BigInt::from(0);
    }
    BigInt::from(enumerate_ssyt_with_content(&SkewShape::straight(shape.clone()), content).count())
}

/// Skew Kostka number: fillings of `outer/inner` with the given content.
pub fn skew_kostka(shape: &SkewShape, content: &[usize]) -> BigInt {
    if shape.size() != content.iter().sum::<usize>() {
        return BigInt::from(0);
    }
    BigInt::from(enumerate_ssyt_with_content(shape, content).count())
}

/// `f^λ`, the number of standard tableaux of shape `λ`.
pub fn f_lambda(shape: &Partition) -> BigInt {
    kostka(shape, &Partition::column(shape.size()))
}

pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    enumerate_ssyt_with_content(&SkewShape::straight(shape.clone()), &vec![1; shape.size()]).collect()
}

fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&e| e > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Row-insertion RSK: a word over `1..=m` maps to an insertion tableau `P`
/// (semistandard) and recording tableau `Q` (standard) of the same shape.
pub fn rsk(word: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k + 1);
    }
    (Tableau { inner: Partition::empty(), rows: p }, Tableau { inner: Partition::empty(), rows: q })
}

/// Inverse of [`rsk`].
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Vec<usize>> {
    if !p.inner.is_empty() || !q.inner.is_empty() {
        return Err(Error::InvalidTableau("RSK is defined on straight shapes".into()));
    }
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!(
            "shapes differ: P has shape ({}) but Q has shape ({})",
            p.shape(),
            q.shape()
        )));
    }
    if !p.is_semistandard() {
        return Err(Error::InvalidTableau("P is not semistandard".into()));
    }
    if !q.is_standard() {
        return Err(Error::InvalidTableau("Q is not standard".into()));
    }
    let mut rows = p.rows.clone();
    let n = q.size();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        let (r, c) = q.position_of(k).expect("standard tableau contains every entry");
        debug_assert_eq!(c + 1, rows[r].len());
        let mut x = rows[r].pop().expect("cell exists");
        if rows[r].is_empty() {
            rows.pop();
        }
        for row in rows[..r].iter_mut().rev() {
            // rightmost entry strictly less than x
            let c = row.iter().rposition(|&e| e < x).expect("reverse bump target exists");
            x = std::mem::replace(&mut row[c], x);
        }
        word[k - 1] = x;
    }
    Ok(word)
}
