//! Command-line front end: `relations`, `duality`, `dims` and `act`.
//!
//! Exit codes: 0 all checks pass, 1 mathematical failure, 2 configuration
//! error, 3 specialization retries exhausted.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::dha::{evaluate_word, verify_dha_relations, DHWord};
use crate::duality::{ambient_dim, certify, check_mode, decomposition_audit, default_mode, DualityError};
use crate::hecke::verify_hecke_relations;
use crate::qgroup::verify_qgroup_relations;
use crate::report::RelationReport;
use crate::scalar::{Scalar, ScalarMode};
use crate::tensor::{SparseVector, TensorShape};
use crate::with_field;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_RETRIES: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "doubled-hecke",
    version,
    about = "Exact checks of the doubled Hecke algebra / Levi quantum group double centralizer"
)]
pub struct Cli {
    /// Worker threads (defaults to RAYON_NUM_THREADS, then the core count).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check quantum-group, Hecke and doubled-Hecke relations on V̄^⊗r.
    Relations(Common),
    /// Certify the double centralizer property.
    Duality {
        #[command(flatten)]
        common: Common,
        /// q-Schur duality on V^⊗r instead of the Levi / doubled-Hecke pair.
        #[arg(long)]
        classical: bool,
    },
    /// Print the dimension table of the decomposition (no matrices).
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Apply a word in the doubled Hecke generators to a basis vector.
    Act {
        #[arg(long)]
        n: usize,
        /// Defaults to the length of --on.
        #[arg(long)]
        r: Option<usize>,
        /// Whitespace-separated generators such as "T1 x2:[2,1] x0".
        #[arg(long, default_value = "")]
        word: String,
        /// Basis vector as a multi-index, e.g. [2,1]; letter n+1 is η.
        #[arg(long)]
        on: String,
        #[arg(long)]
        scalar: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// exact | qnum:<rational> | fp | fp:<prime>
    #[arg(long)]
    pub scalar: Option<String>,
    /// Seed for the random specialization point.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

struct ConfigError(String);

/// Printed text and `(multi-index, coefficient)` pairs.
type Rendered = (String, Vec<(Vec<usize>, String)>);

fn positive(n: usize, r: usize) -> Result<(), ConfigError> {
    if n == 0 || r == 0 {
        return Err(ConfigError("--n and --r must be positive".into()));
    }
    Ok(())
}

fn resolve_mode(scalar: &Option<String>, dim: usize) -> Result<ScalarMode, ConfigError> {
    let mode = match scalar {
        Some(s) => s
            .parse()
            .map_err(|e: crate::scalar::ScalarError| ConfigError(e.to_string()))?,
        None => default_mode(dim),
    };
    check_mode(&mode, dim).map_err(|e| ConfigError(e.to_string()))?;
    Ok(mode)
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // a pool may already exist when called repeatedly in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let result = match &cli.command {
        Command::Relations(c) => cmd_relations(c, cli.json, out, err),
        Command::Duality { common, classical } => cmd_duality(common, *classical, cli.json, out, err),
        Command::Dims { n, r } => cmd_dims(*n, *r, cli.json, out),
        Command::Act {
            n,
            r,
            word,
            on,
            scalar,
            seed,
        } => cmd_act(*n, *r, word, on, scalar, *seed, cli.json, out),
    };
    match result {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CONFIG
        }
    }
}

fn cmd_relations(c: &Common, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, ConfigError> {
    positive(c.n, c.r)?;
    let shape = TensorShape::enhanced(c.n, c.r);
    let mode = resolve_mode(&c.scalar, shape.dim())?;
    let cfg = mode
        .resolve(c.seed, 0, crate::duality::ORDER_BOUND)
        .map_err(|e| ConfigError(e.to_string()))?;
    let reports: Vec<RelationReport> = with_field!(cfg, f => vec![
        verify_qgroup_relations(&shape, f),
        verify_hecke_relations(&shape, f),
        verify_dha_relations(&shape, f),
    ]);
    if json {
        let body = json!({
            "n": c.n,
            "r": c.r,
            "scalar": cfg.to_string(),
            "all_passed": reports.iter().all(RelationReport::all_passed),
            "reports": reports,
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serializable"));
    } else {
        let _ = writeln!(out, "scalars {cfg}");
        for rep in &reports {
            let _ = write!(out, "{rep}");
        }
    }
    match reports.iter().find_map(RelationReport::first_failure) {
        Some(fail) => {
            let _ = writeln!(err, "error: {fail}");
            Ok(EXIT_FAILURE)
        }
        None => Ok(EXIT_OK),
    }
}

fn cmd_duality(
    c: &Common,
    classical: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, ConfigError> {
    positive(c.n, c.r)?;
    let mode = resolve_mode(&c.scalar, ambient_dim(c.n, c.r, classical))?;
    let print = |report: &crate::duality::DualityReport, out: &mut dyn Write| {
        if json {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(report).expect("serializable"));
        } else {
            let _ = write!(out, "{report}");
        }
    };
    match certify(c.n, c.r, classical, &mode, c.seed) {
        Ok(report) => {
            print(&report, out);
            Ok(EXIT_OK)
        }
        Err(DualityError::Config(msg)) => Err(ConfigError(msg)),
        Err(DualityError::Failure(report)) => {
            print(&report, out);
            let _ = writeln!(err, "error: {}", report.mismatch.as_deref().unwrap_or("verdict false"));
            Ok(EXIT_FAILURE)
        }
        Err(e @ DualityError::RetryExhausted { .. }) => {
            if let DualityError::RetryExhausted { last: Some(report), .. } = &e {
                print(report, out);
            }
            let _ = writeln!(err, "error: {e}");
            Ok(EXIT_RETRIES)
        }
    }
}

fn cmd_dims(n: usize, r: usize, json: bool, out: &mut dyn Write) -> Result<i32, ConfigError> {
    if n == 0 {
        return Err(ConfigError("--n must be positive".into()));
    }
    let audit = decomposition_audit(n, r);
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&audit).expect("serializable"));
    } else {
        let _ = writeln!(out, "{audit}");
    }
    Ok(if audit.consistent() { EXIT_OK } else { EXIT_FAILURE })
}

fn parse_multi_index(s: &str) -> Result<Vec<usize>, ConfigError> {
    let bad = || ConfigError(format!("--on expects a multi-index like [2,1], got `{s}`"));
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(bad)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
        .collect()
}

/// `c·[j] + …`, coefficients in canonical form; `0` for the zero vector.
pub fn format_vector<E: Scalar>(v: &SparseVector<E>, shape: &TensorShape) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v
        .iter()
        .map(|(k, c)| {
            let idx = shape.decode(k);
            if c.is_one() {
                return idx.to_string();
            }
            let s = c.to_string();
            if s.contains(' ') || s.contains('/') {
                format!("({s})·{idx}")
            } else {
                format!("{s}·{idx}")
            }
        })
        .collect();
    terms.join(" + ")
}

#[allow(clippy::too_many_arguments)]
fn cmd_act(
    n: usize,
    r: Option<usize>,
    word: &str,
    on: &str,
    scalar: &Option<String>,
    seed: u64,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, ConfigError> {
    let entries = parse_multi_index(on)?;
    let r = r.unwrap_or(entries.len());
    if n == 0 {
        return Err(ConfigError("--n must be positive".into()));
    }
    let shape = TensorShape::enhanced(n, r);
    let index = shape.index(&entries).map_err(|e| ConfigError(e.to_string()))?;
    let word: DHWord = word
        .parse()
        .map_err(|e: crate::dha::DhaError| ConfigError(e.to_string()))?;
    let mode = resolve_mode(scalar, shape.dim())?;
    let cfg = mode
        .resolve(seed, 0, crate::duality::ORDER_BOUND)
        .map_err(|e| ConfigError(e.to_string()))?;
    let result: Result<Rendered, ConfigError> = with_field!(cfg, f => {
        let op = evaluate_word(&word, &shape, f).map_err(|e| ConfigError(e.to_string()))?;
        let image = op.apply(&SparseVector::basis(shape.dim(), index.encode(), f));
        let terms = image
            .iter()
            .map(|(k, c)| (shape.decode(k).entries().to_vec(), c.to_string()))
            .collect();
        Ok((format_vector(&image, &shape), terms))
    });
    let (text, terms) = result?;
    if json {
        let body = json!({
            "n": n,
            "r": r,
            "scalar": cfg.to_string(),
            "word": word.to_string(),
            "input": entries,
            "output": terms
                .iter()
                .map(|(idx, c)| json!({"index": idx, "coeff": c}))
                .collect::<Vec<_>>(),
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serializable"));
    } else {
        let _ = writeln!(out, "{text}");
    }
    Ok(EXIT_OK)
}

/// Entry point for the binary.
pub fn main_exit_code() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
