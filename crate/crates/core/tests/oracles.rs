//! Library results against independent brute-force computations.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use doubled_hecke::combinat::{
    all_permutations, enumerate_compositions, enumerate_partitions, min_coset_reps, min_mover, ssyt_count, syt_count,
    young_subgroup, Composition, Partition, Permutation,
};
use doubled_hecke::dha::{
    all_generators, dha_generating_set, evaluate_word, mover, psi_leading, psi_leading_embedded, xi_generator,
    DHGenerator, DHWord,
};
use doubled_hecke::duality::{
    dha_operators, g_projector, levi_operators, predicted_dha_dim, predicted_hecke_image_dim, predicted_levi_dim,
    predicted_q_schur_dim,
};
use doubled_hecke::hecke::{
    expand_permutation_module, permutation_module_action, psi_element, psi_generator, q_symmetrizer, HeckeElement,
};
use doubled_hecke::linalg::{algebra_closure, commutant, span_equal};
use doubled_hecke::qgroup::{full_generators, phi_operator};
use doubled_hecke::scalar::{ExactField, Field, DEFAULT_PRIME};
use doubled_hecke::tensor::{SparseOperator, SparseVector, TensorShape};

fn inversions(w: &Permutation) -> usize {
    let v = w.one_line();
    (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| v[i] > v[j])
        .count()
}

#[test]
fn tableau_counts_match_enumeration() {
    for n in 1..=4 {
        for l in 0..=7 {
            let lib: BTreeSet<Vec<usize>> = enumerate_partitions(n, l)
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect();
            let brute: BTreeSet<Vec<usize>> = common::partitions(l, n).into_iter().collect();
            assert_eq!(lib, brute, "partitions of {l} with at most {n} rows");
            for lam in brute {
                let p = Partition::new(lam.clone()).unwrap();
                assert_eq!(syt_count(&p), common::syt(&lam), "syt {lam:?}");
                assert_eq!(ssyt_count(&p, n).unwrap(), common::ssyt(&lam, n), "ssyt {lam:?} n={n}");
            }
        }
    }
}

#[test]
fn predicted_dimensions_match_tableau_sums() {
    for n in 1..=3 {
        for r in 0..=5 {
            assert_eq!(predicted_levi_dim(n, r), common::levi_dim(n, r));
            assert_eq!(predicted_dha_dim(n, r), common::dha_dim(n, r));
            if r > 0 {
                assert_eq!(predicted_q_schur_dim(n, r), common::q_schur_dim(n, r));
                assert_eq!(predicted_hecke_image_dim(n, r), common::hecke_image_dim(n, r));
            }
        }
    }
}

#[test]
fn coset_representatives_match_grouping() {
    for r in 1..=4 {
        for n in 1..=3 {
            for lambda in enumerate_compositions(n, r) {
                let young = young_subgroup(&lambda);
                // group S_r into right cosets S_λ·w and keep the shortest element of each
                let mut cosets: BTreeMap<BTreeSet<Permutation>, Permutation> = BTreeMap::new();
                for w in all_permutations(r) {
                    let coset: BTreeSet<Permutation> = young.iter().map(|u| u.compose(&w)).collect();
                    let best = cosets.entry(coset).or_insert_with(|| w.clone());
                    if inversions(&w) < inversions(best) {
                        *best = w;
                    }
                }
                let brute: BTreeSet<Permutation> = cosets.into_values().collect();
                let lib: BTreeSet<Permutation> = min_coset_reps(&lambda).into_iter().collect();
                assert_eq!(lib, brute, "λ = {:?}", lambda.0);
                for d in &lib {
                    for u in &young {
                        assert_eq!(u.compose(d).length(), u.length() + d.length());
                    }
                }
            }
        }
    }
}

#[test]
fn min_mover_is_shortest_order_preserving() {
    for r in 1..=4 {
        for l in 0..=r {
            for set in doubled_hecke::combinat::subsets(r, l) {
                let brute = all_permutations(r)
                    .into_iter()
                    .filter(|d| (1..=l).all(|k| d.apply(k) == set[k - 1]))
                    .min_by_key(inversions)
                    .unwrap();
                assert_eq!(min_mover(&set, r).unwrap(), brute, "I = {set:?}, r = {r}");
            }
        }
    }
    assert_eq!(min_mover(&[2], 3).unwrap().one_line(), vec![2, 1, 3]);
    let d = min_mover(&[2, 3], 3).unwrap();
    assert_eq!(d.one_line(), vec![2, 3, 1]);
    assert_eq!(d.length(), 2);
}

#[test]
fn permutation_module_action_matches_direct_product() {
    let f = ExactField;
    for r in 2..=4 {
        for lambda in enumerate_compositions(3, r) {
            let x = q_symmetrizer(&lambda, &f);
            for d in min_coset_reps(&lambda) {
                let xd = x.mul(&HeckeElement::basis(d.clone(), &f), &f);
                for i in 1..r {
                    let direct = xd.mul(&HeckeElement::generator(i, r, &f), &f);
                    let coords = permutation_module_action(&lambda, &d, i, &f).unwrap();
                    assert_eq!(
                        expand_permutation_module(&lambda, &coords, &f),
                        direct,
                        "λ = {:?}, d = {d}, i = {i}",
                        lambda.0
                    );
                }
            }
        }
    }
}

#[test]
fn permutation_module_action_cases() {
    let f = ExactField;
    let e = Permutation::identity(3);
    let action = permutation_module_action(&Composition(vec![2, 1]), &e, 1, &f).unwrap();
    assert_eq!(action, vec![(e.clone(), f.q_inv())]);
    let action = permutation_module_action(&Composition(vec![1, 1, 1]), &e, 1, &f).unwrap();
    assert_eq!(action, vec![(Permutation::simple(1, 3), f.one())]);
}

#[test]
fn permutation_module_is_free() {
    let f = ExactField;
    for lambda in enumerate_compositions(3, 4) {
        let x = q_symmetrizer(&lambda, &f);
        let reps = min_coset_reps(&lambda);
        let mut span = doubled_hecke::linalg::SpanBasis::of_vectors(24);
        let index: BTreeMap<Permutation, usize> = all_permutations(4)
            .into_iter()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        for d in &reps {
            let v = x.mul(&HeckeElement::basis(d.clone(), &f), &f);
            let vec = SparseVector::from_entries(24, v.terms().map(|(w, c)| (index[w], c.clone())));
            span.insert_vector(&vec);
        }
        let expected = 24 / lambda.0.iter().map(|&p| factorial(p)).product::<u128>();
        assert_eq!(span.dim() as u128, expected, "λ = {:?}", lambda.0);
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

#[test]
fn hecke_action_example() {
    let f = ExactField;
    let shape = TensorShape::enhanced(2, 2);
    let v = shape.index(&[2, 1]).unwrap().encode();
    let w = shape.index(&[1, 2]).unwrap().encode();
    let t1 = psi_generator(1, &shape, &f).unwrap();
    let image = t1.apply(&SparseVector::basis(shape.dim(), v, &f));
    let expected = SparseVector::from_entries(shape.dim(), [(w, f.one()), (v, f.q_inv().sub(&f.q()))]);
    assert_eq!(image, expected);
}

#[test]
fn g_projectors_match_eta_count() {
    let f = ExactField;
    for (n, r) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let shape = TensorShape::enhanced(n, r);
        for l in 0..=r {
            let ids = shape
                .basis()
                .filter(|j| j.entries().iter().filter(|&&e| e <= n).count() == l)
                .map(|j| j.encode());
            let oracle = SparseOperator::projector(shape.dim(), ids, &f);
            assert_eq!(g_projector(l, n, r, &f).unwrap(), oracle, "G_{l} at ({n},{r})");
        }
    }
}

#[test]
fn closures_and_commutants_match_dense_computation() {
    let f = common::prime_field(123_456_789);
    let p = DEFAULT_PRIME;
    for (n, r) in [(1, 2), (2, 2), (1, 3)] {
        let dim = TensorShape::enhanced(n, r).dim();
        for gens in [levi_operators(n, r, &f), dha_operators(n, r, &f)] {
            let dense: Vec<_> = gens.iter().map(common::dense).collect();
            assert_eq!(
                algebra_closure(&gens, dim, &f).dim(),
                common::closure_dim(&dense, p),
                "({n},{r})"
            );
            assert_eq!(
                commutant(&gens, dim, &f).dim(),
                common::commutant_dim(&dense, p),
                "({n},{r})"
            );
        }
    }
    for (n, r) in [(2, 2), (2, 3)] {
        let shape = TensorShape::plain(n, r);
        let quantum: Vec<_> = full_generators(n)
            .into_iter()
            .map(|g| phi_operator(g, &shape, &f).unwrap())
            .collect();
        let hecke: Vec<_> = (1..r).map(|i| psi_generator(i, &shape, &f).unwrap()).collect();
        for gens in [quantum, hecke] {
            let dense: Vec<_> = gens.iter().map(common::dense).collect();
            assert_eq!(
                algebra_closure(&gens, shape.dim(), &f).dim(),
                common::closure_dim(&dense, p)
            );
            assert_eq!(
                commutant(&gens, shape.dim(), &f).dim(),
                common::commutant_dim(&dense, p)
            );
        }
    }
}

#[test]
fn reduced_generating_set_spans_same_algebra() {
    let f = ExactField;
    let (n, r) = (2, 2);
    let shape = TensorShape::enhanced(n, r);
    let ops = |gens: Vec<DHGenerator>| -> Vec<SparseOperator<_>> {
        gens.iter().map(|g| xi_generator(g, &shape, &f).unwrap()).collect()
    };
    assert_eq!(dha_generating_set(2).len(), 4);
    let reduced = algebra_closure(&ops(dha_generating_set(r)), shape.dim(), &f);
    let full = algebra_closure(&ops(all_generators(r)), shape.dim(), &f);
    assert!(span_equal(&reduced, &full));
}

#[test]
fn x_sigma_from_t_and_identity() {
    let f = ExactField;
    let shape = TensorShape::enhanced(2, 3);
    let x_s1: DHGenerator = "x2:[2,1]".parse().unwrap();
    let word: DHWord = "T1 x2".parse().unwrap();
    assert_eq!(
        evaluate_word(&word, &shape, &f).unwrap(),
        xi_generator(&x_s1, &shape, &f).unwrap()
    );
}

#[test]
fn leading_block_agrees_with_embedding() {
    let f = ExactField;
    for (n, r) in [(1, 3), (2, 3), (3, 2)] {
        let shape = TensorShape::enhanced(n, r);
        for l in 0..=r {
            for sigma in all_permutations(l) {
                assert_eq!(
                    psi_leading(&sigma, &shape, &f).unwrap(),
                    psi_leading_embedded(&sigma, &shape, &f).unwrap(),
                    "σ = {sigma}"
                );
            }
        }
    }
}

#[test]
fn movers_are_clean_bijections() {
    let f = ExactField;
    for (n, r) in [(1, 3), (2, 3), (2, 4)] {
        let shape = TensorShape::enhanced(n, r);
        for l in 0..=r {
            let leading: Vec<usize> = (1..=l).collect();
            for set in doubled_hecke::combinat::subsets(r, l) {
                let op = psi_element(&HeckeElement::basis(mover(&set, r).unwrap(), &f), &shape, &f);
                let target: BTreeSet<usize> = shape.subspace_basis(&set).iter().map(|j| j.encode()).collect();
                let mut hit = BTreeSet::new();
                for j in shape.subspace_basis(&leading) {
                    let col = op.column(j.encode());
                    assert_eq!(col.nnz(), 1, "I = {set:?}");
                    let (k, c) = col.first().unwrap();
                    assert!(c.is_one() && target.contains(&k), "I = {set:?}");
                    hit.insert(k);
                }
                assert_eq!(hit, target, "I = {set:?}");
            }
        }
    }
}

#[test]
fn reduced_words_and_lengths() {
    for m in 1..=5 {
        for w in all_permutations(m) {
            let word = w.reduced_word();
            assert_eq!(w.length(), inversions(&w));
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(&word, m), w);
        }
    }
}
