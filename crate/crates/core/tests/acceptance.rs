//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values come from the oracles in `common`, not from the
//! library's own prediction functions.

mod common;

use std::time::{Duration, Instant};

use doubled_hecke::dha::verify_dha_relations;
use doubled_hecke::duality::{g_projector, levi_span, verify_main_theorem, verify_q_schur, DualityReport};
use doubled_hecke::hecke::verify_hecke_relations;
use doubled_hecke::linalg::column_rank;
use doubled_hecke::qgroup::verify_qgroup_relations;
use doubled_hecke::scalar::{ExactField, FieldConfig, DEFAULT_PRIME};
use doubled_hecke::tensor::{SparseOperator, TensorShape};
use doubled_hecke::with_field;

const Q_SCHUR: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 2)];
const MAIN: [(usize, usize, u128, u128); 4] = [(1, 2, 3, 6), (1, 3, 4, 20), (2, 2, 15, 7), (2, 3, 35, 33)];

type Criterion = (&'static str, fn() -> Outcome, Duration);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn relations() -> Outcome {
    let f = ExactField;
    let mut instances = 0;
    for (n, r) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let shape = TensorShape::enhanced(n, r);
        let dha = verify_dha_relations(&shape, &f);
        // far commutation needs r ≥ 4, the braid relation r ≥ 3
        for tag in ["qha1", "qha2", "qha3", "qha4", "qha5", "qha6", "qha7", "qha8", "qha9"] {
            let applies = match tag {
                "qha2" => r >= 4,
                "qha3" => r >= 3,
                _ => true,
            };
            let exercised = dha
                .families
                .iter()
                .any(|fam| fam.name.starts_with(tag) && fam.instances > 0);
            if applies && !exercised {
                return outcome(false, format!("(n,r) = ({n},{r}): family {tag} not exercised"));
            }
        }
        for rep in [
            verify_qgroup_relations(&shape, &f),
            verify_hecke_relations(&shape, &f),
            dha,
        ] {
            if let Some(fail) = rep.first_failure() {
                return outcome(false, format!("(n,r) = ({n},{r}): {fail}"));
            }
            instances += rep.total_instances();
        }
    }
    outcome(true, format!("{instances} exact relation instances"))
}

fn q_schur_expected(report: &DualityReport) -> bool {
    report.double_centralizer
        && report.dim_levi_span as u128 == common::q_schur_dim(report.n, report.r)
        && report.dim_dha_span as u128 == common::hecke_image_dim(report.n, report.r)
        && report.dim_commutant_levi == report.dim_dha_span
        && report.dim_commutant_dha == report.dim_levi_span
}

fn q_schur() -> Outcome {
    let f = ExactField;
    let mut dims = Vec::new();
    for (n, r) in Q_SCHUR {
        let rep = verify_q_schur(n, r, &f);
        if !q_schur_expected(&rep) {
            return outcome(false, format!("(n,r) = ({n},{r}): {rep}"));
        }
        dims.push(format!("({n},{r})→({},{})", rep.dim_levi_span, rep.dim_dha_span));
    }
    outcome(true, dims.join(" "))
}

fn main_expected(report: &DualityReport, levi: u128, dha: u128) -> bool {
    report.double_centralizer
        && report.dim_levi_span as u128 == levi
        && report.dim_dha_span as u128 == dha
        && levi == common::levi_dim(report.n, report.r)
        && dha == common::dha_dim(report.n, report.r)
        && report.dim_commutant_levi == report.dim_dha_span
        && report.dim_commutant_dha == report.dim_levi_span
}

fn main_theorem() -> Outcome {
    let f = ExactField;
    let mut dims = Vec::new();
    for (n, r, levi, dha) in MAIN {
        let rep = verify_main_theorem(n, r, &f);
        if !main_expected(&rep, levi, dha) {
            return outcome(false, format!("(n,r) = ({n},{r}): {rep}"));
        }
        dims.push(format!("({n},{r})→({levi},{dha})"));
    }
    outcome(true, dims.join(" "))
}

fn projectors() -> Outcome {
    let f = ExactField;
    for (n, r) in [(1, 2), (2, 2), (2, 3)] {
        let d = TensorShape::enhanced(n, r).dim();
        let levi = levi_span(n, r, &f);
        let mut sum = SparseOperator::zero(d);
        for l in 0..=r {
            let g = match g_projector(l, n, r, &f) {
                Ok(g) => g,
                Err(e) => return outcome(false, format!("G_{l} at ({n},{r}): {e}")),
            };
            if g.compose(&g) != g {
                return outcome(false, format!("G_{l} at ({n},{r}) is not idempotent"));
            }
            let rank = column_rank(&g);
            let expected = common::choose(r, l) * (n as u128).pow(l as u32);
            if rank as u128 != expected {
                return outcome(
                    false,
                    format!("G_{l} at ({n},{r}) has rank {rank}, expected {expected}"),
                );
            }
            if !levi.contains(&g) {
                return outcome(false, format!("G_{l} at ({n},{r}) is outside the Levi closure"));
            }
            sum = sum.add(&g);
        }
        if sum != SparseOperator::identity(d, &f) {
            return outcome(false, format!("Σ G_l ≠ 1 at ({n},{r})"));
        }
    }
    outcome(true, "idempotent, complete, ranks C(r,l)·n^l, inside the Levi closure")
}

fn specialization() -> Outcome {
    let seed: u64 = rand::random();
    let mut notes = Vec::new();
    let run = |cfg: &FieldConfig| -> (Vec<DualityReport>, Vec<DualityReport>) {
        with_field!(cfg, f => (
            Q_SCHUR.iter().map(|&(n, r)| verify_q_schur(n, r, f)).collect(),
            MAIN.iter().map(|&(n, r, _, _)| verify_main_theorem(n, r, f)).collect(),
        ))
    };
    for attempt in 0..2u64 {
        let cfg = match FieldConfig::random_prime(DEFAULT_PRIME, seed.wrapping_add(attempt), 64) {
            Ok(cfg) => cfg,
            Err(e) => return outcome(false, e.to_string()),
        };
        let (schur, main) = run(&cfg);
        let ok = schur.iter().all(q_schur_expected)
            && main
                .iter()
                .zip(MAIN)
                .all(|(rep, (_, _, levi, dha))| main_expected(rep, levi, dha));
        if ok {
            notes.push(format!("seed {seed}, {cfg}"));
            if attempt > 0 {
                notes.push("after one re-randomization".into());
            }
            return outcome(true, notes.join(", "));
        }
        notes.push(format!("attempt {attempt} mismatched at {cfg}"));
    }
    outcome(false, notes.join("; "))
}

fn combinatorial_identity() -> Outcome {
    use doubled_hecke::combinat::{binomial, enumerate_partitions, ssyt_count, syt_count};
    for n in 1..=3 {
        for r in 0..=6 {
            let total: u128 = (0..=r)
                .flat_map(|l| enumerate_partitions(n, l).into_iter().map(move |lam| (l, lam)))
                .map(|(l, lam)| binomial(r, l) * syt_count(&lam) * ssyt_count(&lam, n).expect("n ≥ 1"))
                .sum();
            let oracle: u128 = (0..=r)
                .flat_map(|l| common::partitions(l, n).into_iter().map(move |lam| (l, lam)))
                .map(|(l, lam)| common::choose(r, l) * common::syt(&lam) * common::ssyt(&lam, n))
                .sum();
            let target = (n as u128 + 1).pow(r as u32);
            if total != target || oracle != target {
                return outcome(false, format!("n = {n}, r = {r}: {total} vs {oracle} vs {target}"));
            }
        }
    }
    outcome(true, "Σ C(r,l)·syt·ssyt = (n+1)^r for n ≤ 3, r ≤ 6")
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("relation certification", relations, Duration::from_secs(120)),
        ("q-Schur duality", q_schur, Duration::from_secs(60)),
        ("main theorem", main_theorem, Duration::from_secs(600)),
        ("G_l projectors", projectors, Duration::from_secs(60)),
        ("prime-field specialization", specialization, Duration::from_secs(60)),
        ("combinatorial identity", combinatorial_identity, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let took = start.elapsed();
        if result.ok && took > budget {
            result = outcome(false, format!("{} (took {took:?}, budget {budget:?})", result.detail));
        }
        let verdict = if result.ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}  {name} [{took:.2?}] {}", i + 1, result.detail);
        failed += usize::from(!result.ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
