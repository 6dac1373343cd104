//! Basis bookkeeping for tensor powers and exact sparse vectors/operators.
//!
//! The basis of `W^{⊗r}` (with `W` of dimension `letters`) is indexed by
//! multi-indices `(j_1, …, j_r)`, `1 <= j_k <= letters`, encoded in mixed radix
//! with `j_1` the fastest digit. For the enhanced space the last letter
//! `n + 1` is the enhanced vector `η`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("multi-index {entries:?} out of range for {letters} letters and r = {r}")]
    BadIndex {
        entries: Vec<usize>,
        letters: usize,
        r: usize,
    },
}

/// The ambient space `W^{⊗r}` with `dim W = letters`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorShape {
    pub letters: usize,
    pub r: usize,
}

impl TensorShape {
    /// `V̄^{⊗r}` with `V̄ = V ⊕ Q(q)η`, `dim V = n`.
    pub fn enhanced(n: usize, r: usize) -> Self {
        Self { letters: n + 1, r }
    }

    /// `V^{⊗r}`, `dim V = n`.
    pub fn plain(n: usize, r: usize) -> Self {
        Self { letters: n, r }
    }

    pub fn dim(&self) -> usize {
        self.letters.pow(self.r as u32)
    }

    /// The letter playing the role of `η` (the largest one).
    pub fn enhanced_letter(&self) -> usize {
        self.letters
    }

    pub fn basis(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        (0..self.dim()).map(move |id| self.decode(id))
    }

    pub fn decode(&self, mut id: usize) -> MultiIndex {
        let mut entries = Vec::with_capacity(self.r);
        for _ in 0..self.r {
            entries.push(id % self.letters + 1);
            id /= self.letters;
        }
        MultiIndex {
            entries,
            letters: self.letters,
        }
    }

    pub fn index(&self, entries: &[usize]) -> Result<MultiIndex, TensorError> {
        if entries.len() != self.r || entries.iter().any(|&e| e == 0 || e > self.letters) {
            return Err(TensorError::BadIndex {
                entries: entries.to_vec(),
                letters: self.letters,
                r: self.r,
            });
        }
        Ok(MultiIndex {
            entries: entries.to_vec(),
            letters: self.letters,
        })
    }

    /// All multi-indices of rank `l`, in basis order.
    pub fn stratum_basis(&self, l: usize) -> Vec<MultiIndex> {
        self.basis().filter(|j| j.rank() == l).collect()
    }

    /// Basis of `V̄_I`: exactly the multi-indices with support `I` (1-based, sorted).
    pub fn subspace_basis(&self, support: &[usize]) -> Vec<MultiIndex> {
        self.basis().filter(|j| j.support() == support).collect()
    }
}

/// A basis label `(j_1, …, j_r)` with 1-based entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<usize>,
    letters: usize,
}

impl MultiIndex {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn encode(&self) -> usize {
        self.entries
            .iter()
            .rev()
            .fold(0, |acc, &e| acc * self.letters + (e - 1))
    }

    /// Number of slots not carrying the enhanced letter.
    pub fn rank(&self) -> usize {
        self.entries.iter().filter(|&&e| e < self.letters).count()
    }

    /// Sorted 1-based positions not carrying the enhanced letter.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < self.letters)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Swaps the entries in 1-based positions `i` and `i + 1`.
    pub fn swapped(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.entries.swap(i - 1, i);
        s
    }

    /// Replaces the entry in 1-based position `pos`.
    pub fn with_entry(&self, pos: usize, letter: usize) -> Self {
        let mut s = self.clone();
        s.entries[pos - 1] = letter;
        s
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// A sparse vector with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<E> {
    dim: usize,
    entries: BTreeMap<usize, E>,
}

impl<E: Scalar> SparseVector<E> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis<F: Field<Elem = E>>(dim: usize, k: usize, field: &F) -> Self {
        Self::from_entries(dim, [(k, field.one())])
    }

    /// Sums duplicate coordinates and drops zeros.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, E)>) -> Self {
        let mut v = Self::zero(dim);
        for (k, c) in entries {
            v.add_at(k, &c);
        }
        v
    }

    pub(crate) fn from_map_unchecked(dim: usize, entries: BTreeMap<usize, E>) -> Self {
        debug_assert!(entries.values().all(|c| !c.is_zero()));
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&E> {
        self.entries.get(&k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &E)> {
        self.entries.iter().map(|(&k, c)| (k, c))
    }

    pub fn first(&self) -> Option<(usize, &E)> {
        self.entries.iter().next().map(|(&k, c)| (k, c))
    }

    pub(crate) fn map(&self) -> &BTreeMap<usize, E> {
        &self.entries
    }

    pub fn add_at(&mut self, k: usize, c: &E) {
        assert!(k < self.dim, "coordinate {k} out of range {}", self.dim);
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&k) {
            Some(cur) => {
                let s = cur.add(c);
                if s.is_zero() {
                    self.entries.remove(&k);
                } else {
                    *cur = s;
                }
            }
            None => {
                self.entries.insert(k, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &E, other: &Self) {
        assert_eq!(self.dim, other.dim);
        if c.is_zero() {
            return;
        }
        for (&k, x) in &other.entries {
            self.add_at(k, &c.mul(x));
        }
    }

    pub fn scale(&self, c: &E) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|(&k, x)| (k, x.mul(c))).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, x) in &other.entries {
            out.add_at(k, x);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, x) in &other.entries {
            out.add_at(k, &x.neg());
        }
        out
    }
}

/// A square sparse operator stored by columns: column `j` is the image of the
/// `j`-th basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOperator<E> {
    dim: usize,
    cols: Vec<SparseVector<E>>,
}

impl<E: Scalar> SparseOperator<E> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            cols: vec![SparseVector::zero(dim); dim],
        }
    }

    pub fn identity<F: Field<Elem = E>>(dim: usize, field: &F) -> Self {
        Self::diagonal((0..dim).map(|_| field.one()).collect())
    }

    pub fn diagonal(entries: Vec<E>) -> Self {
        let dim = entries.len();
        let cols = entries
            .into_iter()
            .enumerate()
            .map(|(j, c)| SparseVector::from_entries(dim, [(j, c)]))
            .collect();
        Self { dim, cols }
    }

    /// Coordinate projector onto the span of the given basis vectors.
    pub fn projector<F: Field<Elem = E>>(dim: usize, ids: impl IntoIterator<Item = usize>, field: &F) -> Self {
        let mut op = Self::zero(dim);
        for j in ids {
            op.cols[j] = SparseVector::basis(dim, j, field);
        }
        op
    }

    pub fn from_columns(cols: Vec<SparseVector<E>>) -> Self {
        let dim = cols.len();
        assert!(cols.iter().all(|c| c.dim() == dim), "non-square column data");
        Self { dim, cols }
    }

    /// Builds each column independently (in parallel); the result does not
    /// depend on scheduling.
    pub fn from_column_fn<G>(dim: usize, column: G) -> Self
    where
        G: Fn(usize) -> SparseVector<E> + Sync + Send,
    {
        let cols: Vec<_> = (0..dim).into_par_iter().map(column).collect();
        Self::from_columns(cols)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &SparseVector<E> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVector<E>] {
        &self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&E> {
        self.cols[col].get(row)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVector::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVector::is_zero)
    }

    pub fn apply(&self, v: &SparseVector<E>) -> SparseVector<E> {
        assert_eq!(self.dim, v.dim(), "operator/vector dimension mismatch");
        let mut out = SparseVector::zero(self.dim);
        for (k, c) in v.iter() {
            out.axpy(c, &self.cols[k]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        self.checked_compose(other)
            .expect("operator dimension mismatch in compose")
    }

    pub fn checked_compose(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_dim(other)?;
        let cols = other.cols.par_iter().map(|c| self.apply(c)).collect();
        Ok(Self { dim: self.dim, cols })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("operator dimension mismatch in add")
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch in sub");
        Self {
            dim: self.dim,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &E) -> Self {
        Self {
            dim: self.dim,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    /// Commutator `self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    fn check_dim(&self, other: &Self) -> Result<(), TensorError> {
        if self.dim != other.dim {
            return Err(TensorError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Rows as sparse maps (row index -> (col -> entry)).
    pub fn rows(&self) -> Vec<BTreeMap<usize, E>> {
        let mut rows = vec![BTreeMap::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                rows[i].insert(j, c.clone());
            }
        }
        rows
    }

    /// Column-major vectorization: entry `(i, j)` goes to coordinate `j * dim + i`.
    pub fn vectorize(&self) -> SparseVector<E> {
        let d = self.dim;
        let mut map = BTreeMap::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                map.insert(j * d + i, c.clone());
            }
        }
        SparseVector::from_map_unchecked(d * d, map)
    }

    /// Inverse of [`vectorize`](Self::vectorize).
    pub fn from_vector(dim: usize, v: &SparseVector<E>) -> Self {
        assert_eq!(v.dim(), dim * dim);
        let mut op = Self::zero(dim);
        for (k, c) in v.iter() {
            op.cols[k / dim].add_at(k % dim, c);
        }
        op
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, c)| c.iter().all(|(i, _)| i == j))
    }

    /// Whether every column indexed by `from` has its support inside `into`,
    /// i.e. the operator maps `span(from)` into `span(into)`.
    pub fn maps_into(&self, from: &[usize], into: &[usize]) -> bool {
        let target: std::collections::BTreeSet<usize> = into.iter().copied().collect();
        from.iter()
            .all(|&j| self.cols[j].iter().all(|(i, _)| target.contains(&i)))
    }

    /// Whether the operator kills every basis vector in `ids`.
    pub fn annihilates(&self, ids: &[usize]) -> bool {
        ids.iter().all(|&j| self.cols[j].is_zero())
    }
}
