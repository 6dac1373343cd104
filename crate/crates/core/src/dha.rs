//! The doubled Hecke algebra `HH_r` and its representation `Ξ` on `V̄^{⊗r}`.
//!
//! `HH_r` is generated by `T_1, …, T_{r-1}` and `x_σ^{(l)}` for `σ ∈ S_l`,
//! `0 <= l <= r`. It is handled as free words; only the image
//! `D(n, r) = Ξ(HH_r)` is computed.
//!
//! * `Ξ(T_i) = Ψ(T_{s_i})` on the whole space.
//! * `Ξ(x_σ^{(l)}) = ψ_σ`: the Hecke operator of `T_σ` on the first `l`
//!   slots of `V̄_{1..l} = V^{⊗l} ⊗ η^{⊗r-l}`, zero on every other `V̄_I`.
//!
//! Words act on the right: `v · (g_1 g_2) = (v · g_1) · g_2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::combinat::{all_permutations, min_mover, CombinatError, Permutation};
use crate::hecke::{psi_element, psi_generator, HeckeElement};
use crate::qgroup::{levi_generators, phi_operator};
use crate::report::RelationReport;
use crate::scalar::Field;
use crate::tensor::{SparseOperator, SparseVector, TensorShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DhaError {
    #[error("generator {gen} is not defined for r = {r}")]
    OutOfRange { gen: String, r: usize },
    #[error("parse error at offset {offset} (`{token}`): {reason}")]
    Parse {
        offset: usize,
        token: String,
        reason: String,
    },
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DHGenerator {
    /// `T_{s_i}`.
    T(usize),
    /// `x_σ^{(level)}` with `σ ∈ S_level`.
    X { level: usize, sigma: Permutation },
}

impl DHGenerator {
    pub fn x(sigma: Permutation) -> Self {
        Self::X {
            level: sigma.degree(),
            sigma,
        }
    }

    /// `x_id^{(l)}`.
    pub fn x_id(level: usize) -> Self {
        Self::x(Permutation::identity(level))
    }

    pub fn validate(&self, r: usize) -> Result<(), DhaError> {
        let ok = match self {
            Self::T(i) => *i >= 1 && *i < r,
            Self::X { level, sigma } => *level <= r && sigma.degree() == *level,
        };
        if ok {
            Ok(())
        } else {
            Err(DhaError::OutOfRange {
                gen: self.to_string(),
                r,
            })
        }
    }
}

impl fmt::Display for DHGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::T(i) => write!(f, "T{i}"),
            Self::X { level: 0, .. } => write!(f, "x0"),
            Self::X { level, sigma } => write!(f, "x{level}:{sigma}"),
        }
    }
}

fn parse_generator(token: &str, offset: usize) -> Result<DHGenerator, DhaError> {
    let err = |reason: &str| DhaError::Parse {
        offset,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    if let Some(rest) = token.strip_prefix('T') {
        let i = rest.parse().map_err(|_| err("expected T<i>"))?;
        return Ok(DHGenerator::T(i));
    }
    let rest = token
        .strip_prefix('x')
        .ok_or_else(|| err("expected T<i>, x0 or x<l>:[…]"))?;
    let (level, perm) = match rest.split_once(':') {
        Some((l, p)) => (l, Some(p)),
        None => (rest, None),
    };
    let level: usize = level.parse().map_err(|_| err("expected a level after x"))?;
    let sigma = match perm {
        None => Permutation::identity(level),
        Some(p) => {
            let inner = p
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(|| err("permutation must be written [a,b,…]"))?;
            let entries = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| err("bad permutation entry"))?
            };
            if entries.len() != level {
                return Err(err("permutation length differs from the level"));
            }
            Permutation::from_one_line(&entries).map_err(|_| err("not a permutation"))?
        }
    };
    Ok(DHGenerator::X { level, sigma })
}

impl FromStr for DHGenerator {
    type Err = DhaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_generator(s.trim(), 0)
    }
}

/// A free word in the generators of `HH_r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DHWord(pub Vec<DHGenerator>);

impl DHWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn generators(&self) -> &[DHGenerator] {
        &self.0
    }
}

impl fmt::Display for DHWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for DHWord {
    type Err = DhaError;

    /// Whitespace-separated generators; errors carry the byte offset of the
    /// offending token.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for piece in s.split_inclusive(char::is_whitespace) {
            let token = piece.trim();
            if !token.is_empty() {
                let lead = piece.len() - piece.trim_start().len();
                gens.push(parse_generator(token, offset + lead)?);
            }
            offset += piece.len();
        }
        Ok(Self(gens))
    }
}

/// The projector onto `V̄_I`: basis vectors whose non-`η` slots are exactly `I`.
pub fn block_projector<F: Field>(support: &[usize], shape: &TensorShape, field: &F) -> SparseOperator<F::Elem> {
    let ids = shape.subspace_basis(support).into_iter().map(|j| j.encode());
    SparseOperator::projector(shape.dim(), ids, field)
}

/// The projector onto the rank-`l` stratum `V̄_l^{⊗r}`.
pub fn stratum_projector<F: Field>(l: usize, shape: &TensorShape, field: &F) -> SparseOperator<F::Elem> {
    let ids = shape.stratum_basis(l).into_iter().map(|j| j.encode());
    SparseOperator::projector(shape.dim(), ids, field)
}

fn check_level(sigma: &Permutation, shape: &TensorShape) -> Result<usize, DhaError> {
    let l = sigma.degree();
    if l > shape.r {
        return Err(DhaError::OutOfRange {
            gen: DHGenerator::x(sigma.clone()).to_string(),
            r: shape.r,
        });
    }
    Ok(l)
}

/// `ψ_σ` on `V̄^{⊗r}`: the projector onto `V̄_{1..l}` followed by `Ψ(T_σ)`,
/// which preserves that block.
pub fn psi_leading<F: Field>(
    sigma: &Permutation,
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, DhaError> {
    let l = check_level(sigma, shape)?;
    let leading: Vec<usize> = (1..=l).collect();
    let t = psi_element(&HeckeElement::basis(sigma.extend(shape.r), field), shape, field);
    Ok(t.compose(&block_projector(&leading, shape, field)))
}

/// `ψ_σ` assembled directly as `Ψ^V_l(σ) ⊗ id`: the Hecke operator on
/// `V^{⊗l}` (alphabet `n`) is embedded with an `η^{⊗r-l}` tail.
pub fn psi_leading_embedded<F: Field>(
    sigma: &Permutation,
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, DhaError> {
    let l = check_level(sigma, shape)?;
    let n = shape.letters - 1;
    let small = TensorShape::plain(n, l);
    let local = psi_element(&HeckeElement::basis(sigma.clone(), field), &small, field);
    let d = shape.dim();
    let eta = shape.enhanced_letter();
    let embed = |id: usize| -> usize {
        let mut entries = small.decode(id).entries().to_vec();
        entries.resize(shape.r, eta);
        shape.index(&entries).expect("embedded index is valid").encode()
    };
    let leading: Vec<usize> = (1..=l).collect();
    let mut cols = vec![SparseVector::zero(d); d];
    for j in shape.subspace_basis(&leading) {
        let small_id = small
            .index(&j.entries()[..l])
            .expect("leading entries avoid η")
            .encode();
        let image = local.column(small_id);
        cols[j.encode()] = SparseVector::from_entries(d, image.iter().map(|(k, c)| (embed(k), c.clone())));
    }
    Ok(SparseOperator::from_columns(cols))
}

/// The permutation `w` with `Ψ(T_w)` carrying `V̄_{1..l}` onto `V̄_I` by a
/// 0/1 basis bijection. It is the inverse of the order-preserving mover `d_I`
/// (`d_I(k) = i_k`).
pub fn mover(support: &[usize], r: usize) -> Result<Permutation, DhaError> {
    Ok(min_mover(support, r)?.inverse())
}

/// `ψ_σ^I = Ψ(T_w) ∘ ψ_σ ∘ Ψ(T_w)^{-1}` restricted to `V̄_I`, `w = mover(I)`.
///
/// The restriction matters: the unrestricted conjugate need not vanish on
/// the other blocks of the stratum.
pub fn psi_conjugated<F: Field>(
    sigma: &Permutation,
    support: &[usize],
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, DhaError> {
    if support.len() != sigma.degree() {
        return Err(DhaError::OutOfRange {
            gen: format!("x{}:{sigma} on I = {support:?}", sigma.degree()),
            r: shape.r,
        });
    }
    let w = mover(support, shape.r)?;
    let a = psi_element(&HeckeElement::basis(w.clone(), field), shape, field);
    let a_inv = psi_element(&HeckeElement::basis_inverse(&w, field), shape, field);
    let lead = psi_leading(sigma, shape, field)?;
    Ok(a.compose(&lead)
        .compose(&a_inv)
        .compose(&block_projector(support, shape, field)))
}

/// `Ξ(g)`.
pub fn xi_generator<F: Field>(
    g: &DHGenerator,
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, DhaError> {
    g.validate(shape.r)?;
    match g {
        DHGenerator::T(i) => Ok(psi_generator(*i, shape, field).expect("validated")),
        DHGenerator::X { sigma, .. } => psi_leading(sigma, shape, field),
    }
}

/// `Ξ(g_1 ⋯ g_k) = Ξ(g_k) ∘ ⋯ ∘ Ξ(g_1)`; the empty word is the identity.
pub fn evaluate_word<F: Field>(
    word: &DHWord,
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, DhaError> {
    let mut images = BTreeMap::new();
    for g in word.generators() {
        if !images.contains_key(g) {
            images.insert(g.clone(), xi_generator(g, shape, field)?);
        }
    }
    Ok(product(&images, word.generators(), shape.dim(), field))
}

fn product<F: Field>(
    images: &BTreeMap<DHGenerator, SparseOperator<F::Elem>>,
    word: &[DHGenerator],
    dim: usize,
    field: &F,
) -> SparseOperator<F::Elem> {
    word.iter()
        .fold(SparseOperator::identity(dim, field), |acc, g| images[g].compose(&acc))
}

/// `T_1, …, T_{r-1}` and `x_id^{(l)}` for `l = 0..r`. By the relation
/// `T_i x_σ = x_{s_i σ}` (`i < l`, length increasing) these generate the
/// same algebra as all `x_σ^{(l)}`.
pub fn dha_generating_set(r: usize) -> Vec<DHGenerator> {
    (1..r)
        .map(DHGenerator::T)
        .chain((0..=r).map(DHGenerator::x_id))
        .collect()
}

/// Every generator: `T_i` and `x_σ^{(l)}` for all `σ ∈ S_l`, `l = 0..r`.
pub fn all_generators(r: usize) -> Vec<DHGenerator> {
    (1..r)
        .map(DHGenerator::T)
        .chain((0..=r).flat_map(|l| all_permutations(l).into_iter().map(DHGenerator::x)))
        .collect()
}

type Combination<E> = Vec<(E, Vec<DHGenerator>)>;

struct Relation<E> {
    family: &'static str,
    label: String,
    lhs: Combination<E>,
    rhs: Combination<E>,
}

fn term<F: Field>(field: &F, word: Vec<DHGenerator>) -> (F::Elem, Vec<DHGenerator>) {
    (field.one(), word)
}

fn hecke_rule<F: Field>(field: &F, longer: bool, moved: DHGenerator, base: DHGenerator) -> Combination<F::Elem> {
    if longer {
        vec![term(field, vec![moved])]
    } else {
        vec![term(field, vec![moved]), (field.hecke_defect(), vec![base])]
    }
}

fn relations<F: Field>(r: usize, field: &F) -> Vec<Relation<F::Elem>> {
    use DHGenerator::T;
    let mut out = Vec::new();
    let push = |out: &mut Vec<Relation<F::Elem>>, family, label: String, lhs, rhs| {
        out.push(Relation {
            family,
            label,
            lhs,
            rhs,
        })
    };
    for i in 1..r {
        push(
            &mut out,
            "qha1 quadratic",
            format!("i={i}"),
            vec![term(field, vec![T(i), T(i)])],
            vec![term(field, vec![]), (field.hecke_defect(), vec![T(i)])],
        );
    }
    for i in 1..r {
        for j in 1..r {
            if i < j && j - i > 1 {
                push(
                    &mut out,
                    "qha2 far commutation",
                    format!("i={i}, j={j}"),
                    vec![term(field, vec![T(i), T(j)])],
                    vec![term(field, vec![T(j), T(i)])],
                );
            }
            if i.abs_diff(j) == 1 {
                push(
                    &mut out,
                    "qha3 braid",
                    format!("i={i}, j={j}"),
                    vec![term(field, vec![T(i), T(j), T(i)])],
                    vec![term(field, vec![T(j), T(i), T(j)])],
                );
            }
        }
    }
    for l in 0..=r {
        let x = |s: &Permutation| DHGenerator::x(s.clone());
        for sigma in all_permutations(l) {
            let xs = x(&sigma);
            for i in 1..l {
                let s = Permutation::simple(i, l);
                let right = sigma.mul_simple(i);
                let left = sigma.simple_mul(i);
                let right_up = right.length() > sigma.length();
                let left_up = left.length() > sigma.length();
                let label = format!("l={l}, σ={sigma}, i={i}");
                push(
                    &mut out,
                    "qha4 x_σ x_s",
                    label.clone(),
                    vec![term(field, vec![xs.clone(), x(&s)])],
                    hecke_rule(field, right_up, x(&right), xs.clone()),
                );
                push(
                    &mut out,
                    "qha5 x_s x_σ",
                    label.clone(),
                    vec![term(field, vec![x(&s), xs.clone()])],
                    hecke_rule(field, left_up, x(&left), xs.clone()),
                );
                push(
                    &mut out,
                    "qha6 T x_σ",
                    label.clone(),
                    vec![term(field, vec![T(i), xs.clone()])],
                    hecke_rule(field, left_up, x(&left), xs.clone()),
                );
                push(
                    &mut out,
                    "qha7 x_σ T",
                    label,
                    vec![term(field, vec![xs.clone(), T(i)])],
                    hecke_rule(field, right_up, x(&right), xs.clone()),
                );
            }
            for i in (l + 1)..r {
                let label = format!("l={l}, σ={sigma}, i={i}");
                let scaled = vec![(field.q_inv(), vec![xs.clone()])];
                push(
                    &mut out,
                    "qha8 T x_σ = q^-1 x_σ",
                    label.clone(),
                    vec![term(field, vec![T(i), xs.clone()])],
                    scaled.clone(),
                );
                push(
                    &mut out,
                    "qha8 x_σ T = q^-1 x_σ",
                    label,
                    vec![term(field, vec![xs.clone(), T(i)])],
                    scaled,
                );
            }
            let id = DHGenerator::x_id(l);
            push(
                &mut out,
                "x-unit",
                format!("l={l}, x_id x_σ, σ={sigma}"),
                vec![term(field, vec![id.clone(), xs.clone()])],
                vec![term(field, vec![xs.clone()])],
            );
            push(
                &mut out,
                "x-unit",
                format!("l={l}, x_σ x_id, σ={sigma}"),
                vec![term(field, vec![xs.clone(), id])],
                vec![term(field, vec![xs.clone()])],
            );
        }
    }
    let xs: Vec<DHGenerator> = (0..=r)
        .flat_map(|l| all_permutations(l).into_iter().map(DHGenerator::x))
        .collect();
    for a in &xs {
        for b in &xs {
            let (DHGenerator::X { level: la, .. }, DHGenerator::X { level: lb, .. }) = (a, b) else {
                unreachable!()
            };
            if la != lb {
                push(
                    &mut out,
                    "qha9 x^(l) x^(k) = 0",
                    format!("{a} {b}"),
                    vec![term(field, vec![a.clone(), b.clone()])],
                    vec![],
                );
            }
        }
    }
    out
}

fn evaluate_combination<F: Field>(
    images: &BTreeMap<DHGenerator, SparseOperator<F::Elem>>,
    combo: &Combination<F::Elem>,
    dim: usize,
    field: &F,
) -> SparseOperator<F::Elem> {
    combo.iter().fold(SparseOperator::zero(dim), |acc, (c, word)| {
        acc.add(&product(images, word, dim, field).scale(c))
    })
}

/// Every instance of the defining relations of `HH_r` under `Ξ`, plus the
/// stratum discipline of `Ξ(x_σ^{(l)})`, `Ξ(T_i)` and commutation with the
/// Levi generators.
pub fn verify_dha_relations<F: Field>(shape: &TensorShape, field: &F) -> RelationReport {
    let r = shape.r;
    let n = shape.letters - 1;
    let dim = shape.dim();
    let mut report = RelationReport::new(format!("doubled Hecke relations on V̄^⊗{r}, n = {n}"));
    let gens = all_generators(r);
    let images: BTreeMap<DHGenerator, SparseOperator<F::Elem>> = gens
        .par_iter()
        .map(|g| (g.clone(), xi_generator(g, shape, field).expect("generator in range")))
        .collect();
    let rels = relations(r, field);
    let results: Vec<(&'static str, String, bool)> = rels
        .par_iter()
        .map(|rel| {
            let lhs = evaluate_combination(&images, &rel.lhs, dim, field);
            let rhs = evaluate_combination(&images, &rel.rhs, dim, field);
            (rel.family, rel.label.clone(), lhs == rhs)
        })
        .collect();
    let mut families: Vec<&'static str> = Vec::new();
    let mut grouped: BTreeMap<&'static str, Vec<(String, bool)>> = BTreeMap::new();
    for (fam, label, ok) in results {
        if !grouped.contains_key(fam) {
            families.push(fam);
        }
        grouped.entry(fam).or_default().push((label, ok));
    }
    for fam in families {
        report.record(fam, grouped.remove(fam).unwrap_or_default());
    }

    let strata: Vec<SparseOperator<F::Elem>> = (0..=r).map(|l| stratum_projector(l, shape, field)).collect();
    let stratum_checks = gens
        .par_iter()
        .map(|g| {
            let op = &images[g];
            let ok = match g {
                DHGenerator::T(_) => strata.iter().all(|p| op.compose(p) == p.compose(op)),
                DHGenerator::X { level, .. } => {
                    (0..=r).filter(|k| k != level).all(|k| op.compose(&strata[k]).is_zero())
                }
            };
            (g.to_string(), ok)
        })
        .collect();
    report.record("stratum discipline", stratum_checks);

    let levi: Vec<SparseOperator<F::Elem>> = levi_generators(n)
        .into_iter()
        .map(|g| phi_operator(g, shape, field).expect("Levi generator in range"))
        .collect();
    let names: Vec<String> = levi_generators(n).iter().map(|g| g.to_string()).collect();
    let pairs: Vec<(usize, &DHGenerator)> = (0..levi.len()).flat_map(|a| gens.iter().map(move |g| (a, g))).collect();
    let commute = pairs
        .par_iter()
        .map(|&(a, g)| {
            let ok = levi[a].commutator(&images[g]).is_zero();
            (format!("{}, {g}", names[a]), ok)
        })
        .collect();
    report.record("commutes with Levi", commute);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactField;

    #[test]
    fn parse_and_print() {
        let w: DHWord = "T1  x2:[2,1] x0 x3".parse().unwrap();
        assert_eq!(w.to_string(), "T1 x2:[2,1] x0 x3:[1,2,3]");
        match "T1 x2:[2,2]".parse::<DHWord>() {
            Err(DhaError::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!("y1".parse::<DHWord>().is_err());
        assert_eq!("".parse::<DHWord>().unwrap(), DHWord::empty());
    }

    #[test]
    fn leading_examples() {
        let f = ExactField;
        let shape = TensorShape::enhanced(2, 3);
        let s1 = Permutation::simple(1, 2);
        let psi = psi_leading(&s1, &shape, &f).unwrap();
        let ix = |e: &[usize]| shape.index(e).unwrap().encode();
        assert_eq!(psi.column(ix(&[1, 2, 3])), &SparseVector::basis(27, ix(&[2, 1, 3]), &f));
        assert!(psi.column(ix(&[1, 3, 2])).is_zero());
        assert!(psi.column(ix(&[1, 2, 1])).is_zero());
        let id = psi_leading(&Permutation::identity(2), &shape, &f).unwrap();
        assert_eq!(id, block_projector(&[1, 2], &shape, &f));
    }

    #[test]
    fn both_constructions_agree() {
        let f = ExactField;
        let shape = TensorShape::enhanced(2, 3);
        for l in 0..=3 {
            for s in all_permutations(l) {
                assert_eq!(
                    psi_leading(&s, &shape, &f).unwrap(),
                    psi_leading_embedded(&s, &shape, &f).unwrap(),
                    "σ = {s}"
                );
            }
        }
    }

    #[test]
    fn conjugated_examples() {
        let f = ExactField;
        let shape = TensorShape::enhanced(2, 2);
        let id1 = Permutation::identity(1);
        assert_eq!(
            psi_conjugated(&id1, &[2], &shape, &f).unwrap(),
            block_projector(&[2], &shape, &f)
        );
        assert_eq!(
            psi_conjugated(&id1, &[1], &shape, &f).unwrap(),
            psi_leading(&id1, &shape, &f).unwrap()
        );
    }

    #[test]
    fn word_examples() {
        let f = ExactField;
        let shape = TensorShape::enhanced(2, 2);
        let d = shape.dim();
        assert_eq!(
            evaluate_word(&DHWord::empty(), &shape, &f).unwrap(),
            SparseOperator::identity(d, &f)
        );
        assert!(evaluate_word(&"x1 x2".parse().unwrap(), &shape, &f).unwrap().is_zero());
        let t = xi_generator(&DHGenerator::T(1), &shape, &f).unwrap();
        let tt = evaluate_word(&"T1 T1".parse().unwrap(), &shape, &f).unwrap();
        assert_eq!(tt, SparseOperator::identity(d, &f).add(&t.scale(&f.hecke_defect())));
        assert!(evaluate_word(&"T2".parse().unwrap(), &shape, &f).is_err());
    }

    #[test]
    fn generating_set_sizes() {
        assert_eq!(dha_generating_set(2).len(), 4);
        assert_eq!(all_generators(3).len(), 2 + 1 + 1 + 2 + 6);
    }

    #[test]
    fn relations_small() {
        let f = ExactField;
        let report = verify_dha_relations(&TensorShape::enhanced(1, 2), &f);
        assert!(report.all_passed(), "{report}");
    }
}
