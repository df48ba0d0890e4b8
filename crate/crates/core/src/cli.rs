//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so tests can drive it directly.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use crate::correspondence::{duality_dims, fiber_contains, fiber_dim_check, verify_table};
use crate::error::{Error, Result};
use crate::exactlinalg::{RationalMatrix, TwistedCase};
use crate::exec::Execution;
use crate::grassmannian::{cell_of, iota, pi, LaurentMatrix};
use crate::partitions::{classify_orbits, closure_hasse, PairCase};
use crate::weights::{enumerate_small, HType};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nilgrass", version, about = "Nilpotent orbits and twisted affine Schubert cells, exactly")]
struct Cli {
    /// Write the result here instead of stdout; `-` means stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the nilpotent orbits of a symmetric pair with dimensions and the
    /// closure diagram.
    Orbits {
        /// sympA, orthOddA, orthEvenA, lieSp, lieSOOdd or orthVector
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Small dominant weights of type B or C.
    SmallWeights {
        #[arg(long)]
        htype: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Schubert cell of a σ-fixed Laurent matrix.
    CellOf {
        /// A2l, A2lMinus1 or D
        #[arg(long)]
        case: String,
        /// Checked against the matrix size when given.
        #[arg(long)]
        rank: Option<usize>,
        /// JSON Laurent matrix; stdin when absent or `-`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// The `t⁻¹` coefficient of a normalized Laurent matrix.
    Pi {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// `g(−t)⁻¹`.
    Iota {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Build and check every witness of the correspondence table.
    VerifyTable {
        #[arg(long)]
        case: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        sequential: bool,
    },
    /// Fiber membership of `(x, z)`, or the zero-fiber profile without them.
    Fiber {
        #[arg(long)]
        case: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, requires = "z")]
        x: Option<PathBuf>,
        #[arg(long, requires = "x")]
        z: Option<PathBuf>,
    },
    /// Orbit-dimension coincidences for rank `n`.
    Duality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Closure order as a DOT graph.
    Hasse {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_status(stdout: String, pass: bool, what: &str) -> Self {
        if pass {
            return Outcome::ok(stdout);
        }
        Outcome {
            code: EXIT_FAILED,
            stdout,
            stderr: format!("verification failed: {what}\n"),
        }
    }
}

/// Where `--in`-style inputs come from when no file is named.
pub trait Stdin {
    fn read_all(&mut self) -> std::io::Result<String>;
}

impl Stdin for std::io::Stdin {
    fn read_all(&mut self) -> std::io::Result<String> {
        let mut s = String::new();
        self.lock().read_to_string(&mut s)?;
        Ok(s)
    }
}

impl Stdin for &str {
    fn read_all(&mut self) -> std::io::Result<String> {
        Ok(self.to_string())
    }
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(argv, std::io::stdin())
}

pub fn run_with_stdin<I, S>(argv: I, mut stdin: impl Stdin) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_MALFORMED,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let malformed = |e: Error| Outcome {
        code: EXIT_MALFORMED,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    };
    let mut outcome = match dispatch(cli.command, &mut stdin) {
        Ok(o) => o,
        Err(e) => return malformed(e),
    };
    if let Some(path) = cli.out.filter(|p| p.as_os_str() != "-") {
        if let Err(e) = std::fs::write(&path, &outcome.stdout) {
            return malformed(Error::Parse(format!("{}: {e}", path.display())));
        }
        outcome.stdout.clear();
    }
    outcome
}

fn read_input(path: Option<&PathBuf>, stdin: &mut impl Stdin) -> Result<String> {
    let io = |e: std::io::Error| Error::Parse(e.to_string());
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(io),
        _ => stdin.read_all().map_err(io),
    }
}

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn htype_of(name: &str, rank: usize) -> Result<HType> {
    match name {
        "B" | "b" => HType::new_b(rank),
        "C" | "c" => HType::new_c(rank),
        other => Err(Error::Parse(format!("unknown htype {other:?}"))),
    }
}

fn dispatch(cmd: Command, stdin: &mut impl Stdin) -> Result<Outcome> {
    let out = match cmd {
        Command::Orbits { case, n, json } => {
            let pair = PairCase::from_name(&case, n)?;
            let orbits = classify_orbits(pair);
            if json {
                let rows: Vec<_> = orbits
                    .iter()
                    .map(|o| serde_json::json!({ "orbit": o, "label": o.to_string(), "dim": o.dim() }))
                    .collect();
                Outcome::ok(to_json(&rows))
            } else {
                let mut s = String::new();
                for o in &orbits {
                    writeln!(s, "{o}\t{}", o.dim()).unwrap();
                }
                s.push('\n');
                s.push_str(&closure_hasse(pair).to_dot());
                Outcome::ok(s)
            }
        }
        Command::SmallWeights { htype, rank, json } => {
            let ws = enumerate_small(htype_of(&htype, rank)?);
            if json {
                Outcome::ok(to_json(&ws))
            } else {
                Outcome::ok(ws.iter().map(|w| format!("{w}\n")).collect())
            }
        }
        Command::CellOf { case, rank, input } => {
            let g: LaurentMatrix = parse_json(&read_input(input.as_ref(), stdin)?)?;
            let c = TwistedCase::from_size(&case, g.m())?;
            if let Some(r) = rank {
                if r != c.rank() {
                    return Err(Error::DimensionMismatch {
                        expected: format!("rank {r}"),
                        got: format!("{}x{} matrix ({c})", g.m(), g.m()),
                    });
                }
            }
            Outcome::ok(format!("{}\n", cell_of(c, &g)?))
        }
        Command::Pi { input } => {
            let g: LaurentMatrix = parse_json(&read_input(input.as_ref(), stdin)?)?;
            Outcome::ok(to_json(&pi(&g)?))
        }
        Command::Iota { input } => {
            let g: LaurentMatrix = parse_json(&read_input(input.as_ref(), stdin)?)?;
            Outcome::ok(to_json(&iota(&g)?))
        }
        Command::VerifyTable {
            case,
            rank,
            seed,
            sequential,
        } => {
            let c = TwistedCase::new(&case, rank)?;
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let report = verify_table(c, seed, exec);
            Outcome::with_status(to_json(&report), report.pass(), &format!("{c} table"))
        }
        Command::Fiber { case, rank, x, z } => {
            let c = TwistedCase::new(&case, rank)?;
            match (x, z) {
                (Some(x), Some(z)) => {
                    let x: RationalMatrix = parse_json(&read_input(Some(&x), stdin)?)?;
                    let z: RationalMatrix = parse_json(&read_input(Some(&z), stdin)?)?;
                    Outcome::ok(format!("{}\n", fiber_contains(c, &x, &z)?))
                }
                _ => {
                    let check = fiber_dim_check(c)?;
                    let mut s = to_json(&check);
                    if !check.matches_stated() {
                        writeln!(
                            s,
                            "note: computed zero-fiber dimension {} differs from the stated {}",
                            check.oracle, check.stated
                        )
                        .unwrap();
                    }
                    Outcome::with_status(s, check.consistent(), "formula and oracle disagree")
                }
            }
        }
        Command::Duality { n, json } => {
            let rows = duality_dims(n)?;
            let pass = rows.iter().all(|r| r.holds());
            let text = if json {
                to_json(&rows)
            } else {
                let mut s = String::new();
                for r in &rows {
                    writeln!(
                        s,
                        "j={}\t{} {} dim {}\t{} {} dim {}\tclosed form {}",
                        r.j,
                        r.symmetric,
                        r.symmetric_partition,
                        r.symmetric_dim,
                        r.classical,
                        r.classical_partition,
                        r.classical_dim,
                        r.closed_form
                    )
                    .unwrap();
                }
                s
            };
            Outcome::with_status(text, pass, "dimension identity")
        }
        Command::Hasse { case, n } => Outcome::ok(closure_hasse(PairCase::from_name(&case, n)?).to_dot()),
    };
    Ok(out)
}
