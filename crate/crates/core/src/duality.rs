//! Theorem-level certifications: q-Schur duality on `V^{⊗r}`, the
//! Levi / doubled-Hecke double centralizer on `V̄^{⊗r}`, the stratum
//! projectors `G_l`, and the dimension bookkeeping of the decomposition
//!
//! ```text
//! V̄^{⊗r} ≅ ⊕_l ⊕_{λ ∈ P(n,l)} D_l^λ ⊗ L_q(λ),
//! dim D_l^λ = C(r,l)·#SYT(λ),  dim L_q(λ) = #SSYT(λ, n).
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::combinat::{binomial, enumerate_partitions, ssyt_count, syt_count, Partition};
use crate::dha::{dha_generating_set, xi_generator};
use crate::hecke::psi_generator;
use crate::linalg::{algebra_closure, commutant, span_equal, SpanBasis};
use crate::qgroup::{full_generators, levi_generators, phi_operator, QGenerator};
use crate::scalar::{Field, FieldConfig, Scalar, ScalarError, ScalarMode};
use crate::tensor::{SparseOperator, TensorShape};
use crate::with_field;

/// Largest ambient dimension accepted in exact `Q(q)` mode.
pub const EXACT_DIM_CAP: usize = 144;

/// Re-randomizations allowed for a prime-field run before giving up.
pub const MAX_RETRIES: u64 = 3;

/// Random `q0` must have multiplicative order above this bound.
pub const ORDER_BOUND: u64 = 64;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DualityReport {
    pub n: usize,
    pub r: usize,
    pub scalar: String,
    pub dim_ambient: usize,
    /// `dim span Φ(L)`, or `dim span Φ(U)` for the classical check.
    pub dim_levi_span: usize,
    /// `dim D(n, r)`, or `dim span Ψ(H)` for the classical check.
    pub dim_dha_span: usize,
    pub dim_commutant_levi: usize,
    pub dim_commutant_dha: usize,
    pub predicted_levi: u128,
    pub predicted_dha: u128,
    pub double_centralizer: bool,
    pub timings_ms: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, r = {}, scalars {}", self.n, self.r, self.scalar)?;
        writeln!(f, "  ambient dimension        {}", self.dim_ambient)?;
        writeln!(
            f,
            "  span (quantum side)      {}  predicted {}  commutant of other side {}",
            self.dim_levi_span, self.predicted_levi, self.dim_commutant_dha
        )?;
        writeln!(
            f,
            "  span (Hecke side)        {}  predicted {}  commutant of other side {}",
            self.dim_dha_span, self.predicted_dha, self.dim_commutant_levi
        )?;
        writeln!(f, "  double centralizer       {}", self.double_centralizer)?;
        if let Some(m) = &self.mismatch {
            writeln!(f, "  mismatch: {m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum DualityError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("verification failed: {}", .0.mismatch.as_deref().unwrap_or("spans differ"))]
    Failure(Box<DualityReport>),
    #[error("specialization failed after {attempts} attempts")]
    RetryExhausted {
        attempts: u64,
        last: Option<Box<DualityReport>>,
    },
}

impl From<ScalarError> for DualityError {
    fn from(e: ScalarError) -> Self {
        Self::Config(e.to_string())
    }
}

/// `Σ_{l=0}^{r} Σ_{λ ∈ P(n,l)} #SSYT(λ, n)²`.
pub fn predicted_levi_dim(n: usize, r: usize) -> u128 {
    (0..=r)
        .flat_map(|l| enumerate_partitions(n, l))
        .map(|lam| ssyt_count(&lam, n).expect("at most n parts").pow(2))
        .sum()
}

/// `Σ_{l=0}^{r} Σ_{λ ∈ P(n,l)} (C(r,l)·#SYT(λ))²`.
pub fn predicted_dha_dim(n: usize, r: usize) -> u128 {
    (0..=r)
        .flat_map(|l| enumerate_partitions(n, l).into_iter().map(move |lam| (l, lam)))
        .map(|(l, lam)| (binomial(r, l) * syt_count(&lam)).pow(2))
        .sum()
}

/// `Σ_{λ ∈ P(n,r)} #SSYT(λ, n)²`, the dimension of the q-Schur algebra.
pub fn predicted_q_schur_dim(n: usize, r: usize) -> u128 {
    enumerate_partitions(n, r)
        .iter()
        .map(|lam| ssyt_count(lam, n).expect("at most n parts").pow(2))
        .sum()
}

/// `Σ_{λ ∈ P(n,r)} #SYT(λ)²`, the dimension of the image of `H_q(S_r)`.
pub fn predicted_hecke_image_dim(n: usize, r: usize) -> u128 {
    enumerate_partitions(n, r).iter().map(|lam| syt_count(lam).pow(2)).sum()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AuditRow {
    pub l: usize,
    pub lambda: String,
    /// `dim D_l^λ = C(r,l)·#SYT(λ)`, the multiplicity of `L_q(λ)`.
    pub dha_dim: u128,
    /// `dim L_q(λ) = #SSYT(λ, n)`, the multiplicity of `D_l^λ`.
    pub levi_dim: u128,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DecompositionAudit {
    pub n: usize,
    pub r: usize,
    pub rows: Vec<AuditRow>,
    /// `Σ dha_dim · levi_dim`; must equal `(n+1)^r`.
    pub total_dim: u128,
    pub ambient: u128,
    /// `Σ dha_dim²`.
    pub sum_dha_squares: u128,
    /// `Σ levi_dim²`.
    pub sum_levi_squares: u128,
}

impl DecompositionAudit {
    pub fn consistent(&self) -> bool {
        self.total_dim == self.ambient
    }

    /// Whether computed span dimensions match the Σ-of-squares identities.
    pub fn matches(&self, report: &DualityReport) -> bool {
        self.sum_levi_squares == report.dim_levi_span as u128 && self.sum_dha_squares == report.dim_dha_span as u128
    }
}

/// The table of `(l, λ, C(r,l)·#SYT, #SSYT)`; pure integer arithmetic.
pub fn decomposition_audit(n: usize, r: usize) -> DecompositionAudit {
    let rows: Vec<AuditRow> = (0..=r)
        .flat_map(|l| enumerate_partitions(n, l).into_iter().map(move |lam| (l, lam)))
        .map(|(l, lam): (usize, Partition)| AuditRow {
            l,
            lambda: lam.to_string(),
            dha_dim: binomial(r, l) * syt_count(&lam),
            levi_dim: ssyt_count(&lam, n).expect("at most n parts"),
        })
        .collect();
    DecompositionAudit {
        n,
        r,
        total_dim: rows.iter().map(|x| x.dha_dim * x.levi_dim).sum(),
        ambient: ((n + 1) as u128).pow(r as u32),
        sum_dha_squares: rows.iter().map(|x| x.dha_dim.pow(2)).sum(),
        sum_levi_squares: rows.iter().map(|x| x.levi_dim.pow(2)).sum(),
        rows,
    }
}

impl fmt::Display for DecompositionAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>3}  {:<12} {:>14} {:>10}", "l", "λ", "C(r,l)·#SYT", "#SSYT")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>3}  {:<12} {:>14} {:>10}",
                row.l, row.lambda, row.dha_dim, row.levi_dim
            )?;
        }
        writeln!(f, "Σ mult·dim = {} (ambient {})", self.total_dim, self.ambient)?;
        writeln!(f, "Σ (C(r,l)·#SYT)² = {}", self.sum_dha_squares)?;
        write!(f, "Σ #SSYT² = {}", self.sum_levi_squares)
    }
}

/// `Φ(G_l) = Π_{k ≠ r-l} (Φ(H_{n+1}) − q^k) / (q^{r-l} − q^k)`, `k = 0..r`.
///
/// `Φ(H_{n+1})` is diagonal with eigenvalue `q^m` on a basis vector carrying
/// `m` copies of `η`, so `Φ(G_l)` is the projector onto `V̄_l^{⊗r}`. The
/// product is evaluated as a polynomial in that diagonal operator.
pub fn g_projector<F: Field>(l: usize, n: usize, r: usize, field: &F) -> Result<SparseOperator<F::Elem>, ScalarError> {
    assert!(l <= r, "stratum index {l} exceeds r = {r}");
    let shape = TensorShape::enhanced(n, r);
    let h = phi_operator(QGenerator::H(n + 1), &shape, field).expect("H_{n+1} is in range");
    let target = field.q_pow((r - l) as i64);
    let mut out = SparseOperator::identity(shape.dim(), field);
    for k in (0..=r).filter(|&k| k != r - l) {
        let qk = field.q_pow(k as i64);
        let denom = target.sub(&qk).inv().map_err(|_| ScalarError::Pole {
            at: format!("q^{} = q^{k}", r - l),
        })?;
        let factor = h
            .sub(&SparseOperator::identity(shape.dim(), field).scale(&qk))
            .scale(&denom);
        out = out.compose(&factor);
    }
    Ok(out)
}

fn elapsed(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

struct Sides<E> {
    quantum: Vec<SparseOperator<E>>,
    hecke: Vec<SparseOperator<E>>,
}

fn certify_sides<F: Field>(
    n: usize,
    r: usize,
    dim: usize,
    sides: Sides<F::Elem>,
    predicted: (u128, u128),
    field: &F,
    timings: &mut BTreeMap<String, u64>,
) -> DualityReport {
    let t = Instant::now();
    let quantum_span = algebra_closure(&sides.quantum, dim, field);
    timings.insert("closure_quantum".into(), elapsed(t));
    let t = Instant::now();
    let hecke_span = algebra_closure(&sides.hecke, dim, field);
    timings.insert("closure_hecke".into(), elapsed(t));
    let t = Instant::now();
    let comm_quantum = commutant(&sides.quantum, dim, field);
    timings.insert("commutant_quantum".into(), elapsed(t));
    let t = Instant::now();
    let comm_hecke = commutant(&sides.hecke, dim, field);
    timings.insert("commutant_hecke".into(), elapsed(t));

    let t = Instant::now();
    let mut mismatch = None;
    let check = |ok: bool, what: String, mismatch: &mut Option<String>| {
        if !ok && mismatch.is_none() {
            *mismatch = Some(what);
        }
    };
    check(
        span_equal(&comm_quantum, &hecke_span),
        format!(
            "commutant of the quantum side (dim {}) differs from the Hecke-side span (dim {})",
            comm_quantum.dim(),
            hecke_span.dim()
        ),
        &mut mismatch,
    );
    check(
        span_equal(&comm_hecke, &quantum_span),
        format!(
            "commutant of the Hecke side (dim {}) differs from the quantum-side span (dim {})",
            comm_hecke.dim(),
            quantum_span.dim()
        ),
        &mut mismatch,
    );
    check(
        quantum_span.dim() as u128 == predicted.0,
        format!(
            "quantum-side span has dim {}, predicted {}",
            quantum_span.dim(),
            predicted.0
        ),
        &mut mismatch,
    );
    check(
        hecke_span.dim() as u128 == predicted.1,
        format!(
            "Hecke-side span has dim {}, predicted {}",
            hecke_span.dim(),
            predicted.1
        ),
        &mut mismatch,
    );
    timings.insert("compare".into(), elapsed(t));

    DualityReport {
        n,
        r,
        scalar: field.config().to_string(),
        dim_ambient: dim,
        dim_levi_span: quantum_span.dim(),
        dim_dha_span: hecke_span.dim(),
        dim_commutant_levi: comm_quantum.dim(),
        dim_commutant_dha: comm_hecke.dim(),
        predicted_levi: predicted.0,
        predicted_dha: predicted.1,
        double_centralizer: mismatch.is_none(),
        timings_ms: std::mem::take(timings),
        mismatch,
    }
}

/// `Φ(L)` generators on `V̄^{⊗r}`.
pub fn levi_operators<F: Field>(n: usize, r: usize, field: &F) -> Vec<SparseOperator<F::Elem>> {
    let shape = TensorShape::enhanced(n, r);
    levi_generators(n)
        .into_iter()
        .map(|g| phi_operator(g, &shape, field).expect("Levi generator in range"))
        .collect()
}

/// `Ξ` of the reduced generating set of `HH_r`.
pub fn dha_operators<F: Field>(n: usize, r: usize, field: &F) -> Vec<SparseOperator<F::Elem>> {
    let shape = TensorShape::enhanced(n, r);
    dha_generating_set(r)
        .iter()
        .map(|g| xi_generator(g, &shape, field).expect("generator in range"))
        .collect()
}

/// `span Φ(L)` on `V̄^{⊗r}`.
pub fn levi_span<F: Field>(n: usize, r: usize, field: &F) -> SpanBasis<F::Elem> {
    let dim = TensorShape::enhanced(n, r).dim();
    algebra_closure(&levi_operators(n, r, field), dim, field)
}

/// `D(n, r) = Ξ(HH_r)`.
pub fn dha_span<F: Field>(n: usize, r: usize, field: &F) -> SpanBasis<F::Elem> {
    let dim = TensorShape::enhanced(n, r).dim();
    algebra_closure(&dha_operators(n, r, field), dim, field)
}

/// `End_{D(n,r)}(V̄^{⊗r}) = Φ(L)` and `End_L(V̄^{⊗r}) = D(n,r)`, with both span
/// dimensions checked against the predicted Σ-of-squares values.
pub fn verify_main_theorem<F: Field>(n: usize, r: usize, field: &F) -> DualityReport {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let shape = TensorShape::enhanced(n, r);
    let sides = Sides {
        quantum: levi_operators(n, r, field),
        hecke: dha_operators(n, r, field),
    };
    timings.insert("generators".into(), elapsed(t));
    certify_sides(
        n,
        r,
        shape.dim(),
        sides,
        (predicted_levi_dim(n, r), predicted_dha_dim(n, r)),
        field,
        &mut timings,
    )
}

/// q-Schur duality on `V^{⊗r}`: `Φ(U_q(gl_n))` and `Ψ(H_q(S_r))` are each
/// other's commutants.
pub fn verify_q_schur<F: Field>(n: usize, r: usize, field: &F) -> DualityReport {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let shape = TensorShape::plain(n, r);
    let sides = Sides {
        quantum: full_generators(n)
            .into_iter()
            .map(|g| phi_operator(g, &shape, field).expect("generator in range"))
            .collect(),
        hecke: (1..r)
            .map(|i| psi_generator(i, &shape, field).expect("index in range"))
            .collect(),
    };
    timings.insert("generators".into(), elapsed(t));
    certify_sides(
        n,
        r,
        shape.dim(),
        sides,
        (predicted_q_schur_dim(n, r), predicted_hecke_image_dim(n, r)),
        field,
        &mut timings,
    )
}

/// Ambient dimension of the space a certification runs on.
pub fn ambient_dim(n: usize, r: usize, classical: bool) -> usize {
    let letters = if classical { n } else { n + 1 };
    letters.pow(r as u32)
}

/// Default scalars for an ambient dimension: exact up to 27, a random
/// prime-field point beyond.
pub fn default_mode(dim: usize) -> ScalarMode {
    if dim <= 27 {
        ScalarMode::Exact
    } else {
        ScalarMode::Fp(crate::scalar::DEFAULT_PRIME)
    }
}

/// Refuses exact mode above [`EXACT_DIM_CAP`].
pub fn check_mode(mode: &ScalarMode, dim: usize) -> Result<(), DualityError> {
    if matches!(mode, ScalarMode::Exact) && dim > EXACT_DIM_CAP {
        return Err(DualityError::Config(format!(
            "exact mode is limited to ambient dimension {EXACT_DIM_CAP}; got {dim}, use --scalar fp"
        )));
    }
    Ok(())
}

/// Runs a certification under `mode`. A failing prime-field run is
/// re-randomized up to [`MAX_RETRIES`] times; exact and fixed-`q0` runs are
/// deterministic and fail immediately.
pub fn certify(
    n: usize,
    r: usize,
    classical: bool,
    mode: &ScalarMode,
    seed: u64,
) -> Result<DualityReport, DualityError> {
    check_mode(mode, ambient_dim(n, r, classical))?;
    let mut last = None;
    for attempt in 0..=MAX_RETRIES {
        let cfg: FieldConfig = mode.resolve(seed, attempt, ORDER_BOUND)?;
        let report = with_field!(cfg, f => if classical {
            verify_q_schur(n, r, f)
        } else {
            verify_main_theorem(n, r, f)
        });
        if report.double_centralizer {
            return Ok(report);
        }
        if !matches!(mode, ScalarMode::Fp(_)) {
            return Err(DualityError::Failure(Box::new(report)));
        }
        last = Some(Box::new(report));
    }
    Err(DualityError::RetryExhausted {
        attempts: MAX_RETRIES + 1,
        last,
    })
}
