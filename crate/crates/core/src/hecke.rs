//! The Hecke algebra `H_q(S_r)` in the `T_w` basis and its right action on
//! tensor space.
//!
//! The quadratic relation is `(T_s + q)(T_s - q^{-1}) = 0`, so
//! `T_w T_s = T_{ws}` when `ℓ(ws) > ℓ(w)` and `T_{ws} + (q^{-1} - q) T_w`
//! otherwise.
//!
//! Operators represent a *right* action on column coordinates, so
//! `psi_element(a·b) = psi_element(b) ∘ psi_element(a)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::combinat::{is_min_coset_rep, young_subgroup, Composition, Permutation};
use crate::report::RelationReport;
use crate::scalar::{Field, Scalar};
use crate::tensor::{SparseOperator, SparseVector, TensorShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("{d} is not a distinguished coset representative for {lambda:?}")]
    NotCosetRep { lambda: Vec<usize>, d: Permutation },
    #[error("generator index {i} out of range for S_{r}")]
    BadGenerator { i: usize, r: usize },
}

/// A finite combination of `T_w`, `w ∈ S_r`, with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<E> {
    r: usize,
    terms: BTreeMap<Permutation, E>,
}

impl<E: Scalar> HeckeElement<E> {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis<F: Field<Elem = E>>(w: Permutation, field: &F) -> Self {
        let r = w.degree();
        Self {
            r,
            terms: BTreeMap::from([(w, field.one())]),
        }
    }

    /// `T_e`.
    pub fn unit<F: Field<Elem = E>>(r: usize, field: &F) -> Self {
        Self::basis(Permutation::identity(r), field)
    }

    /// `T_{s_i}`.
    pub fn generator<F: Field<Elem = E>>(i: usize, r: usize, field: &F) -> Self {
        Self::basis(Permutation::simple(i, r), field)
    }

    /// `T_{s_i}^{-1} = T_{s_i} + (q - q^{-1}) T_e`.
    pub fn generator_inverse<F: Field<Elem = E>>(i: usize, r: usize, field: &F) -> Self {
        Self::generator(i, r, field).add(&Self::unit(r, field).scale(&field.hecke_defect().neg()))
    }

    /// `T_w^{-1}`, multiplied out from a reduced word.
    pub fn basis_inverse<F: Field<Elem = E>>(w: &Permutation, field: &F) -> Self {
        let r = w.degree();
        w.reduced_word().iter().rev().fold(Self::unit(r, field), |acc, &i| {
            acc.mul(&Self::generator_inverse(i, r, field), field)
        })
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Permutation, E)>) -> Self {
        let mut h = Self::zero(r);
        for (w, c) in terms {
            h.add_term(w, &c);
        }
        h
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> Option<&E> {
        self.terms.get(w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &E)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: &E) {
        assert_eq!(w.degree(), self.r, "Hecke element degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(cur) => {
                let s = cur.add(c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *cur = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            r: self.r,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &E) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        Self {
            r: self.r,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect(),
        }
    }

    /// `self · T_{s_i}`.
    pub fn mul_generator<F: Field<Elem = E>>(&self, i: usize, field: &F) -> Self {
        let defect = field.hecke_defect();
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.mul_simple(i);
            if w.right_ascent(i) {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, c);
                out.add_term(w.clone(), &c.mul(&defect));
            }
        }
        out
    }

    /// Product in `H_q(S_r)`.
    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        assert_eq!(self.r, other.r, "Hecke element degree mismatch");
        let mut out = Self::zero(self.r);
        for (w, c) in &other.terms {
            let prod = w
                .reduced_word()
                .iter()
                .fold(self.clone(), |acc, &i| acc.mul_generator(i, field));
            for (u, x) in prod.terms {
                out.add_term(u, &x.mul(c));
            }
        }
        out
    }

    /// JSON map from one-line permutation to canonical scalar string.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|(w, c)| (w.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// `v · T_{s_i}` for a vector `v` in `W^{⊗r}`:
/// `M_f T_{s_i}` is `M_{f s_i}` if `f(i) < f(i+1)`, `M_{f s_i} + (q^{-1}-q) M_f`
/// if `f(i) > f(i+1)`, and `q^{-1} M_f` if they are equal.
pub fn right_act_generator<F: Field>(
    v: &SparseVector<F::Elem>,
    i: usize,
    shape: &TensorShape,
    field: &F,
) -> SparseVector<F::Elem> {
    let defect = field.hecke_defect();
    let q_inv = field.q_inv();
    let mut out = SparseVector::zero(v.dim());
    for (id, c) in v.iter() {
        let f = shape.decode(id);
        let (a, b) = (f.entries()[i - 1], f.entries()[i]);
        if a == b {
            out.add_at(id, &c.mul(&q_inv));
        } else {
            out.add_at(f.swapped(i).encode(), c);
            if a > b {
                out.add_at(id, &c.mul(&defect));
            }
        }
    }
    out
}

/// The matrix of right multiplication by `T_{s_i}` on `W^{⊗r}`.
pub fn psi_generator<F: Field>(
    i: usize,
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, HeckeError> {
    if i == 0 || i >= shape.r {
        return Err(HeckeError::BadGenerator { i, r: shape.r });
    }
    let d = shape.dim();
    Ok(SparseOperator::from_column_fn(d, |j| {
        right_act_generator(&SparseVector::basis(d, j, field), i, shape, field)
    }))
}

/// `v · h`.
pub fn right_act<F: Field>(
    v: &SparseVector<F::Elem>,
    h: &HeckeElement<F::Elem>,
    shape: &TensorShape,
    field: &F,
) -> SparseVector<F::Elem> {
    assert_eq!(h.r(), shape.r, "Hecke element acts on the wrong tensor power");
    let mut out = SparseVector::zero(v.dim());
    for (w, c) in h.terms() {
        let image = w
            .reduced_word()
            .iter()
            .fold(v.clone(), |acc, &i| right_act_generator(&acc, i, shape, field));
        out.axpy(c, &image);
    }
    out
}

/// The operator of right multiplication by `h`.
pub fn psi_element<F: Field>(h: &HeckeElement<F::Elem>, shape: &TensorShape, field: &F) -> SparseOperator<F::Elem> {
    let d = shape.dim();
    SparseOperator::from_column_fn(d, |j| right_act(&SparseVector::basis(d, j, field), h, shape, field))
}

/// The q-symmetrizer `x_λ = Σ_{w ∈ S_λ} q^{-ℓ(w)} T_w`.
///
/// The `q^{-ℓ(w)}` weights make `x_λ T_s = q^{-1} x_λ` for every simple
/// `s ∈ S_λ`; the unweighted sum does not satisfy this under the quadratic
/// relation used here.
pub fn q_symmetrizer<F: Field>(lambda: &Composition, field: &F) -> HeckeElement<F::Elem> {
    HeckeElement::from_terms(
        lambda.weight(),
        young_subgroup(lambda).into_iter().map(|w| {
            let c = field.q_pow(-(w.length() as i64));
            (w, c)
        }),
    )
}

/// `(x_λ T_d) T_{s_i}` expressed in the basis `{x_λ T_{d'}}` of `x_λ H`, as
/// a list of `(d', coefficient)`:
///
/// * `ℓ(d s_i) > ℓ(d)` and `d s_i` distinguished: `x_λ T_{d s_i}`;
/// * `ℓ(d s_i) > ℓ(d)` otherwise: `q^{-1} x_λ T_d`;
/// * `ℓ(d s_i) < ℓ(d)`: `x_λ T_{d s_i} + (q^{-1} - q) x_λ T_d`.
pub fn permutation_module_action<F: Field>(
    lambda: &Composition,
    d: &Permutation,
    i: usize,
    field: &F,
) -> Result<Vec<(Permutation, F::Elem)>, HeckeError> {
    let r = lambda.weight();
    if i == 0 || i >= r {
        return Err(HeckeError::BadGenerator { i, r });
    }
    if !is_min_coset_rep(lambda, d) {
        return Err(HeckeError::NotCosetRep {
            lambda: lambda.0.clone(),
            d: d.clone(),
        });
    }
    let ds = d.mul_simple(i);
    Ok(if d.right_ascent(i) {
        if is_min_coset_rep(lambda, &ds) {
            vec![(ds, field.one())]
        } else {
            vec![(d.clone(), field.q_inv())]
        }
    } else {
        vec![(ds, field.one()), (d.clone(), field.hecke_defect())]
    })
}

/// Expands `Σ c · x_λ T_{d}` into the `T_w` basis.
pub fn expand_permutation_module<F: Field>(
    lambda: &Composition,
    coords: &[(Permutation, F::Elem)],
    field: &F,
) -> HeckeElement<F::Elem> {
    let x = q_symmetrizer(lambda, field);
    coords.iter().fold(HeckeElement::zero(lambda.weight()), |acc, (d, c)| {
        acc.add(&x.mul(&HeckeElement::basis(d.clone(), field), field).scale(c))
    })
}

/// Quadratic, braid and far-commutation relations for `Ψ(T_{s_i})` on `W^{⊗r}`.
pub fn verify_hecke_relations<F: Field>(shape: &TensorShape, field: &F) -> RelationReport {
    let r = shape.r;
    let d = shape.dim();
    let mut report = RelationReport::new(format!("Hecke relations on ({} letters)^⊗{r}", shape.letters));
    let gens: Vec<_> = (1..r)
        .map(|i| psi_generator(i, shape, field).expect("index in range"))
        .collect();
    let id = SparseOperator::identity(d, field);
    let quadratic = (1..r)
        .into_par_iter()
        .map(|i| {
            let t = &gens[i - 1];
            let lhs = t.compose(t);
            let rhs = id.add(&t.scale(&field.hecke_defect()));
            (format!("i={i}"), lhs == rhs)
        })
        .collect();
    report.record("hecke-quadratic", quadratic);
    let pairs: Vec<(usize, usize)> = (1..r)
        .flat_map(|i| (1..r).map(move |j| (i, j)))
        .filter(|&(i, j)| i < j)
        .collect();
    let braid = pairs
        .par_iter()
        .filter(|(i, j)| j - i == 1)
        .map(|&(i, j)| {
            let (a, b) = (&gens[i - 1], &gens[j - 1]);
            let lhs = a.compose(b).compose(a);
            let rhs = b.compose(a).compose(b);
            (format!("i={i}, j={j}"), lhs == rhs)
        })
        .collect();
    report.record("hecke-braid", braid);
    let far = pairs
        .par_iter()
        .filter(|(i, j)| j - i > 1)
        .map(|&(i, j)| {
            let (a, b) = (&gens[i - 1], &gens[j - 1]);
            (format!("i={i}, j={j}"), a.compose(b) == b.compose(a))
        })
        .collect();
    report.record("hecke-commute", far);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactField;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn quadratic_in_the_algebra() {
        let f = ExactField;
        let t = HeckeElement::generator(1, 3, &f);
        let expected = HeckeElement::unit(3, &f).add(&t.scale(&f.hecke_defect()));
        assert_eq!(t.mul(&t, &f), expected);
    }

    #[test]
    fn braid_in_the_algebra() {
        let f = ExactField;
        let t1 = HeckeElement::generator(1, 3, &f);
        let t2 = HeckeElement::generator(2, 3, &f);
        assert_eq!(t1.mul(&t2, &f).mul(&t1, &f), t2.mul(&t1, &f).mul(&t2, &f));
    }

    #[test]
    fn unit_is_neutral() {
        let f = ExactField;
        let a = HeckeElement::from_terms(3, [(perm(&[2, 3, 1]), f.q()), (perm(&[1, 3, 2]), f.from_int(5))]);
        let e = HeckeElement::unit(3, &f);
        assert_eq!(e.mul(&a, &f), a);
        assert_eq!(a.mul(&e, &f), a);
    }

    #[test]
    fn three_case_action() {
        let f = ExactField;
        let shape = TensorShape::plain(2, 2);
        let t = psi_generator(1, &shape, &f).unwrap();
        let id = |e: &[usize]| shape.index(e).unwrap().encode();
        // (1,2) -> (2,1)
        assert_eq!(t.column(id(&[1, 2])), &SparseVector::basis(4, id(&[2, 1]), &f));
        // (2,1) -> (1,2) + (q^{-1}-q)(2,1)
        assert_eq!(
            t.column(id(&[2, 1])),
            &SparseVector::from_entries(4, [(id(&[1, 2]), f.one()), (id(&[2, 1]), f.hecke_defect())])
        );
        // (1,1) -> q^{-1}(1,1)
        assert_eq!(
            t.column(id(&[1, 1])),
            &SparseVector::from_entries(4, [(id(&[1, 1]), f.q_inv())])
        );
        assert!(psi_generator(2, &shape, &f).is_err());
    }

    #[test]
    fn symmetrizer_examples() {
        let f = ExactField;
        let lam = Composition(vec![2, 1]);
        let x = q_symmetrizer(&lam, &f);
        let expected =
            HeckeElement::from_terms(3, [(Permutation::identity(3), f.one()), (perm(&[2, 1, 3]), f.q_inv())]);
        assert_eq!(x, expected);
        assert_eq!(x.mul_generator(1, &f), x.scale(&f.q_inv()));
        assert_eq!(
            q_symmetrizer(&Composition(vec![1, 1, 1]), &f),
            HeckeElement::unit(3, &f)
        );
    }

    #[test]
    fn coset_action_cases() {
        let f = ExactField;
        let lam = Composition(vec![2, 1]);
        let e = Permutation::identity(3);
        assert_eq!(
            permutation_module_action(&lam, &e, 1, &f).unwrap(),
            vec![(e.clone(), f.q_inv())]
        );
        let triv = Composition(vec![1, 1, 1]);
        assert_eq!(
            permutation_module_action(&triv, &e, 1, &f).unwrap(),
            vec![(perm(&[2, 1, 3]), f.one())]
        );
        assert!(permutation_module_action(&lam, &perm(&[2, 1, 3]), 1, &f).is_err());
    }

    #[test]
    fn basis_inverse_inverts() {
        let f = ExactField;
        let w = perm(&[3, 1, 2]);
        let t = HeckeElement::basis(w.clone(), &f);
        let ti = HeckeElement::basis_inverse(&w, &f);
        assert_eq!(t.mul(&ti, &f), HeckeElement::unit(3, &f));
        assert_eq!(ti.mul(&t, &f), HeckeElement::unit(3, &f));
    }
}
