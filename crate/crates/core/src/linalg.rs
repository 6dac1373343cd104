//! Exact sparse linear algebra: echelon spans of vectorized operators,
//! algebra closure, commutants and span equality.
//!
//! Every row of a [`SpanBasis`] has its pivot at its smallest coordinate with
//! coefficient 1, and pivots are pairwise distinct. Reduction walks pivots in
//! increasing coordinate order, so the basis produced by a fixed insertion
//! order is deterministic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::scalar::{Field, Scalar};
use crate::tensor::{SparseOperator, SparseVector};

#[derive(Clone, Debug)]
pub struct SpanBasis<E> {
    op_dim: usize,
    ambient: usize,
    rows: Vec<SparseVector<E>>,
    pivots: BTreeMap<usize, usize>,
    operators: Vec<SparseOperator<E>>,
}

/// Dimension and pivot list, for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpanSummary {
    pub dim: usize,
    pub ambient: usize,
    pub pivots: Vec<usize>,
}

impl<E: Scalar> SpanBasis<E> {
    /// The zero subspace of `End(K^d)`, vectorized to length `d²`.
    pub fn new(op_dim: usize) -> Self {
        Self {
            op_dim,
            ambient: op_dim * op_dim,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            operators: Vec::new(),
        }
    }

    /// The zero subspace of `K^len`, for plain vectors. Operator methods
    /// (`insert`, `contains`) are not meaningful on such a span.
    pub fn of_vectors(len: usize) -> Self {
        Self {
            op_dim: 0,
            ambient: len,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            operators: Vec::new(),
        }
    }

    pub fn op_dim(&self) -> usize {
        self.op_dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    pub fn rows(&self) -> &[SparseVector<E>] {
        &self.rows
    }

    /// The operators whose insertion enlarged the span, in insertion order.
    pub fn operators(&self) -> &[SparseOperator<E>] {
        &self.operators
    }

    pub fn summary(&self) -> SpanSummary {
        SpanSummary {
            dim: self.dim(),
            ambient: self.ambient(),
            pivots: self.pivots(),
        }
    }

    /// The remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVector<E>) -> SparseVector<E> {
        assert_eq!(v.dim(), self.ambient(), "vector length does not match the span");
        let mut v = v.clone();
        let mut cursor = 0;
        loop {
            let hit = v
                .map()
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(&k, c)| (k, c.neg()));
            let Some((k, c)) = hit else { break };
            v.axpy(&c, &self.rows[self.pivots[&k]]);
            cursor = k + 1;
        }
        v
    }

    pub fn contains_vector(&self, v: &SparseVector<E>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains(&self, op: &SparseOperator<E>) -> bool {
        self.contains_vector(&op.vectorize())
    }

    /// Adds an already reduced nonzero remainder as a new row.
    fn push_remainder(&mut self, rem: SparseVector<E>) {
        let (pivot, lead) = rem.first().expect("remainder is nonzero");
        let inv = lead.inv().expect("leading coefficient is nonzero");
        let row = rem.scale(&inv);
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
    }

    /// Inserts a raw vector; returns whether the span grew.
    pub fn insert_vector(&mut self, v: &SparseVector<E>) -> bool {
        let rem = self.reduce(v);
        if rem.is_zero() {
            return false;
        }
        self.push_remainder(rem);
        true
    }

    /// Inserts an operator; returns whether the span grew.
    pub fn insert(&mut self, op: &SparseOperator<E>) -> bool {
        assert_eq!(op.dim(), self.op_dim, "operator dimension does not match the span");
        let grew = self.insert_vector(&op.vectorize());
        if grew {
            self.operators.push(op.clone());
        }
        grew
    }

    /// Inserts a batch of vectors: remainders against the current span are
    /// computed in parallel, then inserted in order.
    pub fn extend_vectors(&mut self, vs: &[SparseVector<E>]) -> usize {
        let frozen: Vec<SparseVector<E>> = vs.par_iter().map(|v| self.reduce(v)).collect();
        let mut grew = 0;
        for rem in frozen {
            if rem.is_zero() {
                continue;
            }
            if self.insert_vector(&rem) {
                grew += 1;
            }
        }
        grew
    }

    /// Fully reduced rows: every pivot column is zero in every other row.
    /// Rows are ordered by pivot.
    pub fn reduced_rows(&self) -> Vec<SparseVector<E>> {
        let mut done: BTreeMap<usize, SparseVector<E>> = BTreeMap::new();
        for (&p, &idx) in self.pivots.iter().rev() {
            let mut row = self.rows[idx].clone();
            let hits: Vec<(usize, E)> = row
                .iter()
                .filter(|&(k, _)| k != p && done.contains_key(&k))
                .map(|(k, c)| (k, c.neg()))
                .collect();
            for (k, c) in hits {
                row.axpy(&c, &done[&k]);
            }
            done.insert(p, row);
        }
        done.into_values().collect()
    }

    /// A canonical basis: the fully reduced rows, as operators.
    pub fn canonical_operators(&self) -> Vec<SparseOperator<E>> {
        self.reduced_rows()
            .iter()
            .map(|v| SparseOperator::from_vector(self.op_dim, v))
            .collect()
    }

    /// A basis of `{x : r·x = 0 for every row r}`, one vector per non-pivot
    /// coordinate.
    pub fn nullspace<F: Field<Elem = E>>(&self, field: &F) -> Vec<SparseVector<E>> {
        let n = self.ambient();
        let mut by_free: BTreeMap<usize, Vec<(usize, E)>> = BTreeMap::new();
        for (row, (&p, _)) in self.reduced_rows().into_iter().zip(self.pivots.iter()) {
            for (k, c) in row.iter() {
                if k != p {
                    by_free.entry(k).or_default().push((p, c.neg()));
                }
            }
        }
        (0..n)
            .filter(|k| !self.pivots.contains_key(k))
            .map(|f| {
                let mut entries = by_free.remove(&f).unwrap_or_default();
                entries.push((f, field.one()));
                SparseVector::from_entries(n, entries)
            })
            .collect()
    }
}

/// The smallest unital algebra containing `gens`, by breadth-first
/// saturation under left and right multiplication by generators.
pub fn algebra_closure<F: Field>(gens: &[SparseOperator<F::Elem>], dim: usize, field: &F) -> SpanBasis<F::Elem> {
    let mut span = SpanBasis::new(dim);
    let mut frontier = Vec::new();
    for op in std::iter::once(SparseOperator::identity(dim, field)).chain(gens.iter().cloned()) {
        if span.insert(&op) {
            frontier.push(op);
        }
    }
    while !frontier.is_empty() {
        let candidates: Vec<SparseOperator<F::Elem>> = frontier
            .par_iter()
            .flat_map_iter(|a| gens.iter().flat_map(move |g| [a.compose(g), g.compose(a)]))
            .collect();
        let remainders: Vec<SparseVector<F::Elem>> =
            candidates.par_iter().map(|op| span.reduce(&op.vectorize())).collect();
        let mut next = Vec::new();
        for (op, rem) in candidates.into_iter().zip(remainders) {
            if !rem.is_zero() && span.insert_vector(&rem) {
                span.operators.push(op.clone());
                next.push(op);
            }
        }
        frontier = next;
    }
    span
}

/// Rows of the linear system `X·G − G·X = 0` in the column-major unknowns
/// `X_{ab} ↦ b·d + a`.
fn commutator_constraints<E: Scalar>(g: &SparseOperator<E>) -> Vec<SparseVector<E>> {
    let d = g.dim();
    let g_rows = g.rows();
    (0..d)
        .into_par_iter()
        .flat_map_iter(|c| {
            let g_rows = &g_rows;
            (0..d).map(move |a| {
                // (XG)_{ac} = Σ_b X_{ab} G_{bc};  (GX)_{ac} = Σ_b G_{ab} X_{bc}
                let mut row = SparseVector::zero(d * d);
                for (b, x) in g.column(c).iter() {
                    row.add_at(b * d + a, x);
                }
                for (&b, x) in &g_rows[a] {
                    row.add_at(c * d + b, &x.neg());
                }
                row
            })
        })
        .filter(|row| !row.is_zero())
        .collect()
}

/// `{X : XG = GX for all G in gens}`. Diagonal generators are processed
/// first; their constraints are single coordinates and keep the system sparse.
pub fn commutant<F: Field>(gens: &[SparseOperator<F::Elem>], dim: usize, field: &F) -> SpanBasis<F::Elem> {
    let mut ordered: Vec<&SparseOperator<F::Elem>> = gens.iter().filter(|g| g.is_diagonal()).collect();
    ordered.extend(gens.iter().filter(|g| !g.is_diagonal()));
    let mut system = SpanBasis::new(dim);
    for g in ordered {
        assert_eq!(g.dim(), dim, "generator dimension mismatch");
        let rows = commutator_constraints(g);
        system.extend_vectors(&rows);
    }
    let mut out = SpanBasis::new(dim);
    for v in system.nullspace(field) {
        out.insert(&SparseOperator::from_vector(dim, &v));
    }
    out
}

/// Dimension of the column space of `op`.
pub fn column_rank<E: Scalar>(op: &SparseOperator<E>) -> usize {
    let mut span = SpanBasis::of_vectors(op.dim());
    span.extend_vectors(op.columns())
}

/// Mutual containment.
pub fn span_equal<E: Scalar>(a: &SpanBasis<E>, b: &SpanBasis<E>) -> bool {
    a.ambient() == b.ambient()
        && a.dim() == b.dim()
        && a.rows.par_iter().all(|r| b.contains_vector(r))
        && b.rows.par_iter().all(|r| a.contains_vector(r))
}

/// Every row of `a` lies in `b`.
pub fn span_contains<E: Scalar>(b: &SpanBasis<E>, a: &SpanBasis<E>) -> bool {
    a.rows.par_iter().all(|r| b.contains_vector(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactField;

    fn unit(d: usize, i: usize, j: usize) -> SparseOperator<crate::scalar::RationalFunction> {
        let f = ExactField;
        let mut v = SparseVector::zero(d * d);
        v.add_at(j * d + i, &f.one());
        SparseOperator::from_vector(d, &v)
    }

    #[test]
    fn insert_behaviour() {
        let f = ExactField;
        let mut s = SpanBasis::new(3);
        assert!(!s.insert(&SparseOperator::zero(3)));
        let id = SparseOperator::identity(3, &f);
        assert!(s.insert(&id));
        assert!(!s.insert(&id.scale(&f.from_int(5))));
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn closure_of_matrix_units_is_everything() {
        let f = ExactField;
        let gens = vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 2, 0)];
        assert_eq!(algebra_closure(&gens, 3, &f).dim(), 9);
        assert_eq!(algebra_closure(&[], 3, &f).dim(), 1);
    }

    #[test]
    fn commutant_extremes() {
        let f = ExactField;
        let id = SparseOperator::identity(3, &f);
        assert_eq!(commutant(&[id], 3, &f).dim(), 9);
        let gens = vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 2, 0)];
        let c = commutant(&gens, 3, &f);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&SparseOperator::identity(3, &f)));
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = ExactField;
        let mut s: SpanBasis<crate::scalar::RationalFunction> = SpanBasis::new(2);
        s.insert_vector(&SparseVector::from_entries(
            4,
            [(0, f.one()), (1, f.q()), (3, f.from_int(2))],
        ));
        s.insert_vector(&SparseVector::from_entries(4, [(1, f.one()), (2, f.q_inv())]));
        let null = s.nullspace(&f);
        assert_eq!(null.len(), 2);
        for x in &null {
            for r in s.rows() {
                let dot = r
                    .iter()
                    .fold(f.zero(), |acc, (k, c)| acc.add(&c.mul(x.get(k).unwrap_or(&f.zero()))));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn span_equality_ignores_scaling() {
        let f = ExactField;
        let mut a = SpanBasis::new(2);
        let mut b = SpanBasis::new(2);
        a.insert(&SparseOperator::identity(2, &f));
        b.insert(&SparseOperator::identity(2, &f).scale(&f.from_int(2)));
        assert!(span_equal(&a, &b));
        assert!(span_equal(&a, &a));
    }
}
