//! Command-line front end. [`run`] parses an argument vector, performs one
//! computation and renders it as text or JSON; the binary is a thin wrapper.
//!
//! Output for a given argument vector is byte-identical across runs and
//! thread counts. Wall time is only reported when `--timing` is given.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bialphabet::{pjk_expand, BiSchurVector};
use crate::boolean::{boolean_product, ep_subset, subset_alphabet, total_boolean};
use crate::derangement::{bnm1_q, eval_q, QPoly};
use crate::error::Error;
use crate::lascoux::{binomial_det, gv_count, lascoux_check, LascouxKind};
use crate::partitions::Partition;
use crate::resonance::{bounded_regions_of, charpoly_ff, charpoly_mobius, regions_of, CharPoly};
use crate::symengine::{schur_at_alphabet, SchurVector};

/// Environment variable holding the worker thread count for the binary.
pub const THREADS_ENV: &str = "BOOLPROD_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_CONSISTENCY: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "boolprod",
    version,
    about = "Schur expansions of Boolean product polynomials and friends"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Report wall time (on stderr for text, in the record for JSON).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Ff,
    Mobius,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: Partition,
    #[arg(long, allow_hyphen_values = true)]
    mu: Partition,
    #[arg(long)]
    dim: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// B_{n,k}, or e_p of the k-subset alphabet with --p.
    BooleanExpand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// The total product B_n.
    Total {
        #[arg(long)]
        n: usize,
    },
    /// s_lambda evaluated at the k-subset alphabet.
    SchurAt {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Both sides of the Chern class identity for pair sums.
    Lascoux {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kind: LascouxKind,
    },
    /// The binomial determinant d_{lambda,mu}.
    BinomDet(PairArgs),
    /// Non-intersecting lattice path families for (lambda, mu).
    GvCount(PairArgs),
    /// B_{n,n-1}(X;q), optionally specialized at --q.
    Derangement {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
    },
    /// Characteristic polynomial of the resonance arrangement.
    Charpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Ff)]
        method: Method,
        /// Permit the long-running n = 6 computation.
        #[arg(long)]
        allow_long: bool,
    },
    /// Number of regions of the resonance arrangement.
    Regions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        allow_long: bool,
    },
    /// Product of X_S + Y_T over j-subsets S and k-subsets T.
    Bialphabet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::BooleanExpand { .. } => "boolean-expand",
            Command::Total { .. } => "total",
            Command::SchurAt { .. } => "schur-at",
            Command::Lascoux { .. } => "lascoux",
            Command::BinomDet(_) => "binom-det",
            Command::GvCount(_) => "gv-count",
            Command::Derangement { .. } => "derangement",
            Command::Charpoly { .. } => "charpoly",
            Command::Regions { .. } => "regions",
            Command::Bialphabet { .. } => "bialphabet",
        }
    }

    fn params(&self) -> BTreeMap<String, Value> {
        let v = match self {
            Command::BooleanExpand { n, k, p } => json!({ "n": n, "k": k, "p": p }),
            Command::Total { n } => json!({ "n": n }),
            Command::SchurAt { lambda, n, k } => json!({ "lambda": lambda, "n": n, "k": k }),
            Command::Lascoux { n, kind } => json!({ "n": n, "kind": kind.to_string() }),
            Command::BinomDet(a) | Command::GvCount(a) => {
                json!({ "lambda": a.lambda, "mu": a.mu, "dim": a.dim })
            }
            Command::Derangement { n, q } => json!({ "n": n, "q": q }),
            Command::Charpoly {
                n,
                method,
                allow_long,
            } => json!({
                "n": n,
                "method": match method { Method::Ff => "ff", Method::Mobius => "mobius" },
                "allow_long": allow_long,
            }),
            Command::Regions { n, allow_long } => json!({ "n": n, "allow_long": allow_long }),
            Command::Bialphabet { n, m, j, k } => json!({ "n": n, "m": m, "j": j, "k": k }),
        };
        match v {
            Value::Object(map) => map.into_iter().filter(|(_, v)| !v.is_null()).collect(),
            _ => unreachable!("params are always an object"),
        }
    }
}

/// One term of a Schur expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub partition: Partition,
    pub coeff: String,
}

/// A Schur term whose coefficient is a polynomial in `q`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSchurTerm {
    pub partition: Partition,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiSchurTerm {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LascouxRow {
    pub mu: Partition,
    pub d: String,
    pub lhs: String,
    pub rhs: String,
}

/// The computed result, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Schur {
        var_count: usize,
        terms: Vec<SchurTerm>,
    },
    QSchur {
        var_count: usize,
        terms: Vec<QSchurTerm>,
    },
    BiSchur {
        n: usize,
        m: usize,
        terms: Vec<BiSchurTerm>,
    },
    Integer {
        value: String,
    },
    Lascoux {
        n: usize,
        delta: Partition,
        verified: bool,
        rows: Vec<LascouxRow>,
    },
    Charpoly {
        n: usize,
        chi: Vec<i64>,
        regions: u64,
        bounded: u64,
    },
}

/// What `run` prints in JSON mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub version: String,
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
    #[serde(flatten)]
    pub result: Payload,
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn schur_payload(v: &SchurVector) -> Payload {
    Payload::Schur {
        var_count: v.var_count(),
        terms: v
            .iter()
            .map(|(p, c)| SchurTerm {
                partition: p.clone(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

fn qschur_payload(v: &SchurVector<QPoly>) -> Payload {
    Payload::QSchur {
        var_count: v.var_count(),
        terms: v
            .iter()
            .map(|(p, c)| QSchurTerm {
                partition: p.clone(),
                coeffs: c.coeffs().iter().map(BigInt::to_string).collect(),
            })
            .collect(),
    }
}

fn bischur_payload(v: &BiSchurVector) -> Payload {
    Payload::BiSchur {
        n: v.n(),
        m: v.m(),
        terms: v
            .iter()
            .map(|((l, u), c)| BiSchurTerm {
                lambda: l.clone(),
                mu: u.clone(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

fn charpoly_payload(chi: &CharPoly) -> crate::Result<Payload> {
    let as_u64 = |v: BigInt, what: &str| {
        u64::try_from(v).map_err(|e| Error::Consistency(format!("{what} is {}", e.into_original())))
    };
    Ok(Payload::Charpoly {
        n: chi.degree(),
        chi: chi.coeffs().to_vec(),
        regions: as_u64(regions_of(chi), "region count")?,
        bounded: as_u64(bounded_regions_of(chi), "bounded region count")?,
    })
}

fn compute(cmd: &Command) -> crate::Result<Payload> {
    Ok(match cmd {
        Command::BooleanExpand { n, k, p } => match p {
            Some(p) => schur_payload(&ep_subset(*n, *k, *p)?),
            None => schur_payload(&boolean_product(*n, *k)?),
        },
        Command::Total { n } => schur_payload(&total_boolean(*n)?),
        Command::SchurAt { lambda, n, k } => {
            schur_payload(&schur_at_alphabet(lambda, &subset_alphabet(*n, *k)?)?)
        }
        Command::Lascoux { n, kind } => {
            let r = lascoux_check(*n, *kind)?;
            Payload::Lascoux {
                n: r.n,
                delta: r.delta.clone(),
                verified: r.verified(),
                rows: r
                    .table()
                    .into_iter()
                    .map(|(mu, d, l, rhs)| LascouxRow {
                        mu,
                        d: d.to_string(),
                        lhs: l.to_string(),
                        rhs: rhs.to_string(),
                    })
                    .collect(),
            }
        }
        Command::BinomDet(a) => Payload::Integer {
            value: binomial_det(&a.lambda, &a.mu, a.dim)?.to_string(),
        },
        Command::GvCount(a) => Payload::Integer {
            value: gv_count(&a.lambda, &a.mu, a.dim)?.to_string(),
        },
        Command::Derangement { n, q } => {
            let v = bnm1_q(*n)?;
            match q {
                Some(q) => schur_payload(&eval_q(&v, &BigInt::from(*q))),
                None => qschur_payload(&v),
            }
        }
        Command::Charpoly {
            n,
            method,
            allow_long,
        } => {
            let chi = match method {
                Method::Ff => charpoly_ff(*n, *allow_long)?,
                Method::Mobius => charpoly_mobius(*n)?,
            };
            charpoly_payload(&chi)?
        }
        Command::Regions { n, allow_long } => charpoly_payload(&charpoly_ff(*n, *allow_long)?)?,
        Command::Bialphabet { n, m, j, k } => bischur_payload(&pjk_expand(*n, *m, *j, *k)?),
    })
}

fn render_schur_text(terms: &[SchurTerm], var_count: usize) -> String {
    let mut v = SchurVector::new(var_count);
    for t in terms {
        v.add_term(
            t.partition.clone(),
            t.coeff.parse::<BigInt>().expect("decimal"),
        );
    }
    v.to_string()
}

fn render_text(cmd: &Command, payload: &Payload) -> String {
    let mut out = String::new();
    match payload {
        Payload::Schur { var_count, terms } => out.push_str(&render_schur_text(terms, *var_count)),
        Payload::QSchur { terms, .. } => {
            let parts: Vec<String> = terms
                .iter()
                .map(|t| {
                    let q = QPoly::new(
                        t.coeffs
                            .iter()
                            .map(|c| c.parse().expect("decimal"))
                            .collect(),
                    );
                    format!("({q})s[{}]", t.partition)
                })
                .collect();
            out.push_str(if parts.is_empty() { "0" } else { "" });
            out.push_str(&parts.join(" + "));
        }
        Payload::BiSchur { n, m, terms } => {
            let v = BiSchurVector::from_terms(
                *n,
                *m,
                terms.iter().map(|t| {
                    (
                        (t.lambda.clone(), t.mu.clone()),
                        t.coeff.parse::<BigInt>().expect("decimal"),
                    )
                }),
            );
            out.push_str(&v.to_string());
        }
        Payload::Integer { value } => out.push_str(value),
        Payload::Lascoux { verified, rows, .. } => {
            out.push_str("mu\td\tlhs\trhs\n");
            for r in rows {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", r.mu, r.d, r.lhs, r.rhs);
            }
            out.push_str(if *verified {
                "identity holds"
            } else {
                "identity FAILS"
            });
        }
        Payload::Charpoly { chi, regions, .. } => match cmd {
            Command::Regions { .. } => {
                let _ = write!(out, "{regions}");
            }
            _ => out.push_str(&CharPoly::new(chi.clone()).to_string()),
        },
    }
    out.push('\n');
    out
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::SizeMismatch { .. } => EXIT_USAGE,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Consistency(_) | Error::NotSymmetric { .. } => EXIT_CONSISTENCY,
    }
}

/// Runs one invocation; `argv[0]` is the program name. Parallel work runs
/// on the current rayon pool.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };

    let start = Instant::now();
    let payload = match compute(&cli.command) {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: exit_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let elapsed = start.elapsed();

    let mut stderr = String::new();
    let stdout = match cli.format {
        Format::Text => {
            if cli.timing {
                stderr = format!("wall time: {} us\n", elapsed.as_micros());
            }
            render_text(&cli.command, &payload)
        }
        Format::Json => {
            let record = OutputRecord {
                command: cli.command.name().to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                params: cli.command.params(),
                wall_time_us: cli.timing.then_some(elapsed.as_micros() as u64),
                result: payload,
            };
            let mut s = serde_json::to_string(&record).expect("records serialize");
            s.push('\n');
            s
        }
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr,
    }
}

/// [`run`] on a dedicated pool of `threads` workers.
pub fn run_with_threads<I, T>(argv: I, threads: usize) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => {
            let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
            pool.install(|| run(argv))
        }
        Err(e) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: cannot start {threads} threads: {e}\n"),
        },
    }
}
