//! `U_q(gl_m)` acting on `W^{⊗r}` through the iterated coproduct.
//!
//! On the natural module `H_a v_a = q v_a`, `F_i v_i = v_{i+1}`,
//! `E_i v_{i+1} = v_i`, and `K_i = H_i H_{i+1}^{-1}`. On tensor powers
//!
//! ```text
//! Δ^r(E_i) = Σ_p 1^{⊗p-1} ⊗ E_i ⊗ (K_i^{-1})^{⊗r-p}
//! Δ^r(F_i) = Σ_p K_i^{⊗p-1} ⊗ F_i ⊗ 1^{⊗r-p}
//! ```
//!
//! and `H_a`, `K_i` and their inverses are grouplike. For the enhanced space
//! `m = n + 1` and the last letter is `η`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::hecke::psi_generator;
use crate::report::RelationReport;
use crate::scalar::{Field, Scalar};
use crate::tensor::{SparseOperator, SparseVector, TensorShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QGroupError {
    #[error("generator {gen} out of range for gl_{letters}")]
    OutOfRange { gen: QGenerator, letters: usize },
    #[error("cannot parse generator `{0}`")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGenerator {
    E(usize),
    F(usize),
    H(usize),
    HInv(usize),
    K(usize),
    KInv(usize),
}

impl QGenerator {
    pub fn index(&self) -> usize {
        match *self {
            Self::E(i) | Self::F(i) | Self::H(i) | Self::HInv(i) | Self::K(i) | Self::KInv(i) => i,
        }
    }

    /// Whether the generator exists in `U_q(gl_letters)`.
    pub fn in_range(&self, letters: usize) -> bool {
        let i = self.index();
        match self {
            Self::H(_) | Self::HInv(_) => (1..=letters).contains(&i),
            _ => i >= 1 && i < letters,
        }
    }

    /// The generator whose image is the inverse operator, if there is one.
    pub fn inverse(&self) -> Option<Self> {
        match *self {
            Self::H(a) => Some(Self::HInv(a)),
            Self::HInv(a) => Some(Self::H(a)),
            Self::K(i) => Some(Self::KInv(i)),
            Self::KInv(i) => Some(Self::K(i)),
            _ => None,
        }
    }
}

impl fmt::Display for QGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::E(i) => write!(f, "E{i}"),
            Self::F(i) => write!(f, "F{i}"),
            Self::H(a) => write!(f, "H{a}"),
            Self::HInv(a) => write!(f, "H{a}inv"),
            Self::K(i) => write!(f, "K{i}"),
            Self::KInv(i) => write!(f, "K{i}inv"),
        }
    }
}

impl FromStr for QGenerator {
    type Err = QGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QGroupError::Parse(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (digits, inv) = match rest.strip_suffix("inv") {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        match (head, inv) {
            ('E', false) => Ok(Self::E(i)),
            ('F', false) => Ok(Self::F(i)),
            ('H', false) => Ok(Self::H(i)),
            ('H', true) => Ok(Self::HInv(i)),
            ('K', false) => Ok(Self::K(i)),
            ('K', true) => Ok(Self::KInv(i)),
            _ => Err(bad()),
        }
    }
}

/// Eigenvalue exponent of a diagonal generator on `v_j`, or `None` for `E`, `F`.
fn diagonal_exponent(g: QGenerator, j: usize) -> Option<i64> {
    let d = |a: usize| i64::from(a == j);
    match g {
        QGenerator::H(a) => Some(d(a)),
        QGenerator::HInv(a) => Some(-d(a)),
        QGenerator::K(i) => Some(d(i) - d(i + 1)),
        QGenerator::KInv(i) => Some(d(i + 1) - d(i)),
        _ => None,
    }
}

/// The matrix of `g` on the natural module of dimension `letters`.
pub fn natural_action<F: Field>(
    g: QGenerator,
    letters: usize,
    field: &F,
) -> Result<SparseOperator<F::Elem>, QGroupError> {
    if !g.in_range(letters) {
        return Err(QGroupError::OutOfRange { gen: g, letters });
    }
    let cols = (1..=letters)
        .map(|j| match g {
            QGenerator::E(i) if j == i + 1 => SparseVector::basis(letters, i - 1, field),
            QGenerator::F(i) if j == i => SparseVector::basis(letters, i, field),
            QGenerator::E(_) | QGenerator::F(_) => SparseVector::zero(letters),
            _ => {
                let e = diagonal_exponent(g, j).expect("diagonal generator");
                SparseVector::from_entries(letters, [(j - 1, field.q_pow(e))])
            }
        })
        .collect();
    Ok(SparseOperator::from_columns(cols))
}

/// `Δ^r(g)` applied to the basis vector with index `id`.
fn coproduct_column<F: Field>(g: QGenerator, shape: &TensorShape, id: usize, field: &F) -> SparseVector<F::Elem> {
    let d = shape.dim();
    let f = shape.decode(id);
    let entries = f.entries();
    let exponent_sum = |h: QGenerator, range: std::ops::Range<usize>| -> i64 {
        entries[range]
            .iter()
            .map(|&j| diagonal_exponent(h, j).expect("diagonal generator"))
            .sum()
    };
    match g {
        QGenerator::E(i) => {
            let mut out = SparseVector::zero(d);
            for (p, &letter) in entries.iter().enumerate() {
                if letter == i + 1 {
                    let e = exponent_sum(QGenerator::KInv(i), p + 1..shape.r);
                    out.add_at(f.with_entry(p + 1, i).encode(), &field.q_pow(e));
                }
            }
            out
        }
        QGenerator::F(i) => {
            let mut out = SparseVector::zero(d);
            for (p, &letter) in entries.iter().enumerate() {
                if letter == i {
                    let e = exponent_sum(QGenerator::K(i), 0..p);
                    out.add_at(f.with_entry(p + 1, i + 1).encode(), &field.q_pow(e));
                }
            }
            out
        }
        _ => {
            let e = exponent_sum(g, 0..shape.r);
            SparseVector::from_entries(d, [(id, field.q_pow(e))])
        }
    }
}

/// The operator `Φ(g) = Δ^r(g)` on `W^{⊗r}`.
pub fn phi_operator<F: Field>(
    g: QGenerator,
    shape: &TensorShape,
    field: &F,
) -> Result<SparseOperator<F::Elem>, QGroupError> {
    if !g.in_range(shape.letters) {
        return Err(QGroupError::OutOfRange {
            gen: g,
            letters: shape.letters,
        });
    }
    Ok(SparseOperator::from_column_fn(shape.dim(), |id| {
        coproduct_column(g, shape, id, field)
    }))
}

/// Generators of the Levi subalgebra of `U_q(gl_{n+1})`: `E_i, F_i` for
/// `i < n` and all `H_a^{±1}`.
pub fn levi_generators(n: usize) -> Vec<QGenerator> {
    let mut gens: Vec<_> = (1..n).flat_map(|i| [QGenerator::E(i), QGenerator::F(i)]).collect();
    gens.extend((1..=n + 1).flat_map(|a| [QGenerator::H(a), QGenerator::HInv(a)]));
    gens
}

/// Generators of `U_q(gl_letters)`.
pub fn full_generators(letters: usize) -> Vec<QGenerator> {
    let mut gens: Vec<_> = (1..letters)
        .flat_map(|i| [QGenerator::E(i), QGenerator::F(i)])
        .collect();
    gens.extend((1..=letters).flat_map(|a| [QGenerator::H(a), QGenerator::HInv(a)]));
    gens
}

fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// Checks every defining relation of `U_q(gl_m)` (and of the embedded
/// `U_q(sl_m)`) on `W^{⊗r}`, together with commutation against the Hecke
/// generators.
pub fn verify_qgroup_relations<Fld: Field>(shape: &TensorShape, field: &Fld) -> RelationReport {
    use QGenerator::*;
    let m = shape.letters;
    let dim = shape.dim();
    let mut report = RelationReport::new(format!("U_q(gl_{m}) relations on ({m} letters)^⊗{}", shape.r));
    let op = |g: QGenerator| phi_operator(g, shape, field).expect("generator in range");
    let ops: std::collections::BTreeMap<QGenerator, SparseOperator<Fld::Elem>> = full_generators(m)
        .into_iter()
        .chain((1..m).flat_map(|i| [K(i), KInv(i)]))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|g| (g, op(g)))
        .collect();
    let id = SparseOperator::identity(dim, field);
    let roots: Vec<usize> = (1..m).collect();
    let weights: Vec<usize> = (1..=m).collect();
    let pairs = |xs: &[usize], ys: &[usize]| -> Vec<(usize, usize)> {
        xs.iter().flat_map(|&a| ys.iter().map(move |&b| (a, b))).collect()
    };
    let conj = |a: QGenerator, x: QGenerator, c: i64| -> bool {
        let lhs = ops[&a].compose(&ops[&x]).compose(&ops[&a.inverse().unwrap()]);
        lhs == ops[&x].scale(&field.q_pow(c))
    };

    let fam = |f: &(dyn Fn(usize, usize) -> Option<(String, bool)> + Sync), ps: Vec<(usize, usize)>| {
        ps.into_par_iter().filter_map(|(a, b)| f(a, b)).collect::<Vec<_>>()
    };

    report.record(
        "K-inverse",
        fam(
            &|i, _| {
                let ok = ops[&K(i)].compose(&ops[&KInv(i)]) == id && ops[&KInv(i)].compose(&ops[&K(i)]) == id;
                Some((format!("i={i}"), ok))
            },
            pairs(&roots, &[0]),
        ),
    );
    report.record(
        "K-commute",
        fam(
            &|i, j| {
                (i < j).then(|| {
                    let (a, b) = (&ops[&K(i)], &ops[&K(j)]);
                    (format!("i={i}, j={j}"), a.compose(b) == b.compose(a))
                })
            },
            pairs(&roots, &roots),
        ),
    );
    report.record(
        "K-conjugates-E",
        fam(
            &|i, j| Some((format!("i={i}, j={j}"), conj(K(i), E(j), cartan(i, j)))),
            pairs(&roots, &roots),
        ),
    );
    report.record(
        "K-conjugates-F",
        fam(
            &|i, j| Some((format!("i={i}, j={j}"), conj(K(i), F(j), -cartan(i, j)))),
            pairs(&roots, &roots),
        ),
    );
    let denom = field.q().sub(&field.q_inv()).inv().expect("q is not ±1");
    report.record(
        "EF-commutator",
        fam(
            &|i, j| {
                let lhs = ops[&E(i)].commutator(&ops[&F(j)]);
                let rhs = if i == j {
                    ops[&K(i)].sub(&ops[&KInv(i)]).scale(&denom)
                } else {
                    SparseOperator::zero(dim)
                };
                Some((format!("i={i}, j={j}"), lhs == rhs))
            },
            pairs(&roots, &roots),
        ),
    );
    report.record(
        "E-F-far-commute",
        fam(
            &|i, j| {
                (i < j && j - i > 1).then(|| {
                    let e = ops[&E(i)].commutator(&ops[&E(j)]).is_zero();
                    let f = ops[&F(i)].commutator(&ops[&F(j)]).is_zero();
                    (format!("i={i}, j={j}"), e && f)
                })
            },
            pairs(&roots, &roots),
        ),
    );
    let q_plus = field.q().add(&field.q_inv());
    let serre = |a: &SparseOperator<Fld::Elem>, b: &SparseOperator<Fld::Elem>| {
        let aa = a.compose(a);
        aa.compose(b)
            .sub(&a.compose(b).compose(a).scale(&q_plus))
            .add(&b.compose(&aa))
            .is_zero()
    };
    report.record(
        "Serre",
        fam(
            &|i, j| {
                (i.abs_diff(j) == 1).then(|| {
                    let ok = serre(&ops[&E(i)], &ops[&E(j)]) && serre(&ops[&F(i)], &ops[&F(j)]);
                    (format!("i={i}, j={j}"), ok)
                })
            },
            pairs(&roots, &roots),
        ),
    );
    report.record(
        "H-inverse",
        fam(
            &|a, _| {
                let ok = ops[&H(a)].compose(&ops[&HInv(a)]) == id && ops[&HInv(a)].compose(&ops[&H(a)]) == id;
                Some((format!("a={a}"), ok))
            },
            pairs(&weights, &[0]),
        ),
    );
    report.record(
        "H-commute",
        fam(
            &|a, b| {
                (a < b).then(|| {
                    let (x, y) = (&ops[&H(a)], &ops[&H(b)]);
                    (format!("a={a}, b={b}"), x.compose(y) == y.compose(x))
                })
            },
            pairs(&weights, &weights),
        ),
    );
    // H_a E_i H_a^{-1} = q^{δ_{a,i} - δ_{a,i+1}} E_i, and the inverse power for F
    let h_exp = |a: usize, i: usize| i64::from(a == i) - i64::from(a == i + 1);
    report.record(
        "H-conjugates-E",
        fam(
            &|a, i| Some((format!("a={a}, i={i}"), conj(H(a), E(i), h_exp(a, i)))),
            pairs(&weights, &roots),
        ),
    );
    report.record(
        "H-conjugates-F",
        fam(
            &|a, i| Some((format!("a={a}, i={i}"), conj(H(a), F(i), -h_exp(a, i)))),
            pairs(&weights, &roots),
        ),
    );
    report.record(
        "K-is-H-ratio",
        fam(
            &|i, _| {
                let k = ops[&H(i)].compose(&ops[&HInv(i + 1)]);
                Some((format!("i={i}"), k == ops[&K(i)]))
            },
            pairs(&roots, &[0]),
        ),
    );
    if shape.r >= 2 {
        let hecke: Vec<_> = (1..shape.r)
            .map(|i| psi_generator(i, shape, field).expect("index in range"))
            .collect();
        let gens: Vec<QGenerator> = ops.keys().copied().collect();
        let mut ps = Vec::new();
        for (gi, _) in gens.iter().enumerate() {
            for i in 1..shape.r {
                ps.push((gi, i));
            }
        }
        report.record(
            "commutes-with-Hecke",
            fam(
                &|gi, i| {
                    let g = gens[gi];
                    let ok = ops[&g].commutator(&hecke[i - 1]).is_zero();
                    Some((format!("{g}, T{i}"), ok))
                },
                ps,
            ),
        );
    }
    report
}
