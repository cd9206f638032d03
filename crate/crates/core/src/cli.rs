//! The `polyprod` command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input is rejected on mathematical
//! grounds (not flag, not chordal, ghost vertices, or a failed verification),
//! 2 for usage, I/O and parse errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::chordal::{is_chordal, Chordality};
use crate::complex::{SimplicialComplex, DEFAULT_VERTEX_GUARD};
use crate::error::Error;
use crate::flag::flagify;
use crate::homology::{betti_zk, verify_decomposition};
use crate::io::{read_complex, write_complex, ComplexDocument};
use crate::lie::{hm_factors, loop_zk_factors, series_identity_check};
use crate::report::{InputDigest, Payload, Report};
use crate::wedge::{decompose, Pairs};

/// Vertex guard for commands that run the homology oracle.
pub const ORACLE_VERTEX_GUARD: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "polyprod", version, about = "Combinatorial invariants of polyhedral products")]
struct Cli {
    /// Largest accepted ground set (default 24, or 10 for `betti` and `verify`).
    #[arg(long, global = true)]
    max_vertices: Option<usize>,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarise a complex.
    Info { file: PathBuf },
    /// Compute the flagification.
    Flagify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test chordality of the 1-skeleton and print a certificate.
    Chordal { file: PathBuf },
    /// Wedge decomposition of (CY,Y)^K.
    Decompose {
        file: PathBuf,
        /// `moment-angle`, `symbolic`, or `spheres n1,..,nm`.
        #[arg(long, num_args = 1..=2, value_names = ["KIND", "DIMS"], required = true)]
        pairs: Vec<String>,
    },
    /// Betti numbers of the moment-angle complex.
    Betti {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Cross-check the decomposition against the Betti oracle.
    Verify { file: PathBuf },
    /// Hilton-Milnor factors of loops on a wedge of spheres.
    HiltonMilnor {
        #[arg(long, value_delimiter = ',', required = true)]
        spheres: Vec<u32>,
        #[arg(long)]
        max_dim: u32,
    },
    /// Loop-space factors of Z_K.
    Loopspace {
        file: PathBuf,
        #[arg(long)]
        max_dim: u32,
        #[arg(long)]
        split_hopf: bool,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    /// `None` when clap handled the invocation itself (help, usage errors).
    pub report: Option<Report>,
    /// Text destined for the terminal.
    pub output: String,
}

fn parse_pairs(raw: &[String]) -> Result<Pairs, Error> {
    match raw {
        [k] if k == "moment-angle" => Ok(Pairs::MomentAngle),
        [k] if k == "symbolic" => Ok(Pairs::Symbolic),
        [k, dims] if k == "spheres" => dims
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad sphere dimension `{d}`")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Pairs::Spheres),
        [k] if k == "spheres" => Err(Error::InvalidArgument("`spheres` needs n1,..,nm".into())),
        _ => Err(Error::InvalidArgument(format!(
            "unknown pairs `{}`; expected moment-angle, symbolic or spheres n1,..,nm",
            raw.join(" ")
        ))),
    }
}

fn rejection(e: &Error) -> Payload {
    let certificate = match e {
        Error::NotFlag { witness } => Some(witness.clone()),
        Error::NotChordal { cycle } => Some(cycle.clone()),
        Error::GhostVertex(v) => Some(vec![*v]),
        _ => None,
    };
    Payload::Rejected {
        reason: e.to_string(),
        certificate,
    }
}

struct Run {
    input: Option<InputDigest>,
    payload: Payload,
    exit_code: i32,
}

fn load(path: &Path, guard: usize) -> Result<(SimplicialComplex, InputDigest), Error> {
    let k = read_complex(path, guard)?;
    let digest = InputDigest::of(&k);
    Ok((k, digest))
}

fn execute(cli: &Cli) -> Result<Run, (Option<InputDigest>, Error)> {
    let guard = |oracle: bool| {
        cli.max_vertices.unwrap_or(if oracle {
            ORACLE_VERTEX_GUARD
        } else {
            DEFAULT_VERTEX_GUARD
        })
    };
    let ok = |input, payload| Run {
        input,
        payload,
        exit_code: 0,
    };
    match &cli.command {
        Command::Info { file } => {
            let (k, d) = load(file, guard(false)).map_err(|e| (None, e))?;
            Ok(ok(
                Some(d),
                Payload::Info {
                    dimension: k.dimension(),
                    face_size_counts: k.face_size_counts(),
                    facets: k.facet_labels(),
                    missing_faces: k.missing_faces().into_iter().map(|f| k.face_labels(f)).collect(),
                    components: k.connected_component_count(),
                },
            ))
        }
        Command::Flagify { file, out } => {
            let (k, d) = load(file, guard(false)).map_err(|e| (None, e))?;
            let r = flagify(&k);
            if let Some(path) = out {
                write_complex(path, &r.flag_complex).map_err(|e| (Some(d.clone()), e))?;
            }
            Ok(ok(
                Some(d),
                Payload::Flagify {
                    flag_complex: ComplexDocument::from_complex(&r.flag_complex),
                    added_faces: r.added_faces.iter().map(|&f| k.face_labels(f)).collect(),
                    written_to: out.as_ref().map(|p| p.display().to_string()),
                },
            ))
        }
        Command::Chordal { file } => {
            let (k, d) = load(file, guard(false)).map_err(|e| (None, e))?;
            let payload = match is_chordal(&k.skeleton_graph()) {
                Chordality::Chordal(o) => Payload::Chordal {
                    ordering: Some(o),
                    cycle: None,
                },
                Chordality::NotChordal(c) => Payload::Chordal {
                    ordering: None,
                    cycle: Some(c),
                },
            };
            Ok(ok(Some(d), payload))
        }
        Command::Decompose { file, pairs } => {
            let (k, d) = load(file, guard(false)).map_err(|e| (None, e))?;
            let pairs = parse_pairs(pairs).map_err(|e| (Some(d.clone()), e))?;
            let dec = decompose(&k, &pairs).map_err(|e| (Some(d.clone()), e))?;
            let polynomial = dec.poincare_polynomial().ok();
            Ok(ok(
                Some(d),
                Payload::Decompose {
                    decomposition: dec,
                    polynomial,
                },
            ))
        }
        Command::Betti { file, max_degree } => {
            let (k, d) = load(file, guard(true)).map_err(|e| (None, e))?;
            let mut table = betti_zk(&k).map_err(|e| (Some(d.clone()), e))?;
            if let Some(top) = max_degree {
                table.ranks.retain(|deg, _| deg <= top);
            }
            Ok(ok(
                Some(d),
                Payload::Betti {
                    table,
                    max_degree: *max_degree,
                },
            ))
        }
        Command::Verify { file } => {
            let (k, d) = load(file, guard(true)).map_err(|e| (None, e))?;
            let v = verify_decomposition(&k).map_err(|e| (Some(d.clone()), e))?;
            let exit_code = if v.passed() { 0 } else { 1 };
            Ok(Run {
                input: Some(d),
                payload: Payload::Verify(v),
                exit_code,
            })
        }
        Command::HiltonMilnor { spheres, max_dim } => {
            let factors = hm_factors(spheres, *max_dim).map_err(|e| (None, e))?;
            let series_check =
                series_identity_check(spheres, max_dim.saturating_sub(1)).map_err(|e| (None, e))?;
            Ok(ok(
                None,
                Payload::HiltonMilnor {
                    spheres: spheres.clone(),
                    max_dim: *max_dim,
                    factors,
                    series_check,
                },
            ))
        }
        Command::Loopspace {
            file,
            max_dim,
            split_hopf,
        } => {
            let (k, d) = load(file, guard(false)).map_err(|e| (None, e))?;
            let l = loop_zk_factors(&k, *max_dim, *split_hopf).map_err(|e| (Some(d.clone()), e))?;
            Ok(ok(Some(d), Payload::LoopSpace(l)))
        }
    }
}

/// Run the tool on an argument vector (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let command: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let exit_code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                exit_code,
                report: None,
                output: e.render().to_string(),
            };
        }
    };
    let start = Instant::now();
    let (input, payload, exit_code) = match execute(&cli) {
        Ok(r) => (r.input, r.payload, r.exit_code),
        Err((input, e)) if e.is_rejection() => (input, rejection(&e), 1),
        Err((input, e)) => (input, Payload::Error { message: e.to_string() }, 2),
    };
    let report = Report {
        command,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input,
        result: payload,
        elapsed_us: start.elapsed().as_micros() as u64,
    };
    let output = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_string()
    };
    Outcome {
        exit_code,
        report: Some(report),
        output,
    }
}

pub fn main() -> i32 {
    let outcome = run(std::env::args_os());
    if outcome.exit_code == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    outcome.exit_code
}
