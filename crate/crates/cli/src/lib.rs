//! Command-line front end. [`run`] is the whole program minus process I/O, so
//! it can be driven directly from tests.
//!
//! Exit codes: 0 definitive success, 1 definitive negative (not covered, not a
//! member, collision found), 2 usage error or inconclusive result.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::builder::RangedU64ValueParser;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use freemat::certify::{check_free_pair, named_pair, FreenessCertificate};
use freemat::codec::{decode, encode, DecodeOutcome, DEFAULT_FUEL};
use freemat::explore::{collision_search, cw_path, cw_tree};
use freemat::{Alphabet, Error, Mat2, Rational, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Deepest tree `cw-tree` will print (2^25 - 1 nodes).
pub const MAX_TREE_DEPTH: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "freemat",
    version,
    about = "Certify, encode and decode free monoids of 2x2 nonnegative matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Named pair: calkin-wilf, sanov, or lu-rv:<u>:<v>
    #[arg(long, conflicts_with_all = ["a", "b"], required_unless_present_all = ["a", "b"])]
    pair: Option<String>,
    /// First matrix, e.g. "[[1,0],[1,1]]"
    #[arg(long = "a", requires = "b", allow_hyphen_values = true)]
    a: Option<String>,
    /// Second matrix
    #[arg(long = "b", requires = "a", allow_hyphen_values = true)]
    b: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the freeness hypotheses and print the certificate
    CheckFree {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Multiply out a word over a certified pair
    Encode {
        #[command(flatten)]
        pair: PairArgs,
        /// Letters over {A, B} (L/R accepted for calkin-wilf), or "e"
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Recover the unique word for a matrix over a certified pair
    Decode {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = DEFAULT_FUEL, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        fuel: usize,
        /// Collapse runs as A^3 B^2
        #[arg(long)]
        powers: bool,
        /// Render letters as L/R (calkin-wilf only)
        #[arg(long)]
        lr: bool,
    },
    /// Print the Calkin-Wilf tree, one level per line
    CwTree {
        #[arg(long)]
        depth: usize,
    },
    /// Print the descent word from 1 to a positive rational
    CwPath {
        #[arg(long, allow_hyphen_values = true)]
        rational: String,
        /// Render letters as L/R
        #[arg(long)]
        lr: bool,
        #[arg(long)]
        powers: bool,
    },
    /// Search for two distinct words with the same product
    Collide {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        max_len: usize,
        /// Worker threads for the enumeration
        #[arg(long, default_value_t = 1, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        jobs: usize,
    },
}

struct ResolvedPair {
    first: Mat2,
    second: Mat2,
    calkin_wilf: bool,
}

impl PairArgs {
    fn resolve(&self) -> Result<ResolvedPair, Error> {
        match (&self.pair, &self.a, &self.b) {
            (Some(name), _, _) => {
                let (first, second) = named_pair(name)?;
                Ok(ResolvedPair {
                    first,
                    second,
                    calkin_wilf: name == "calkin-wilf",
                })
            }
            (None, Some(a), Some(b)) => Ok(ResolvedPair {
                first: a.parse()?,
                second: b.parse()?,
                calkin_wilf: false,
            }),
            // clap enforces one of the two forms.
            _ => Err(Error::UnknownPair(String::new())),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(EXIT_OK, text),
                _ => Outcome::usage(text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(err) => Outcome::usage(format!("error: {err}")),
    }
}

fn refuse(cert: &FreenessCertificate) -> Outcome {
    Outcome {
        code: EXIT_NEGATIVE,
        stdout: "NOT-COVERED\n".to_owned(),
        stderr: format!("pair does not satisfy the freeness hypotheses; refusing to run\n{cert}"),
    }
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::CheckFree { pair } => {
            let pair = pair.resolve()?;
            let cert = check_free_pair(&pair.first, &pair.second);
            let code = if cert.is_certified() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok(Outcome::ok(code, cert.to_string()))
        }
        Command::Encode { pair, word } => {
            let pair = pair.resolve()?;
            let word = Word::parse_with(&word, pair.calkin_wilf)?;
            let cert = check_free_pair(&pair.first, &pair.second);
            let Ok(certified) = cert.certified_pair() else {
                return Ok(refuse(&cert));
            };
            Ok(Outcome::ok(
                EXIT_OK,
                format!("{}\n", encode(&word, &certified)),
            ))
        }
        Command::Decode {
            pair,
            matrix,
            fuel,
            powers,
            lr,
        } => {
            let pair = pair.resolve()?;
            if lr && !pair.calkin_wilf {
                return Ok(Outcome::usage(
                    "error: --lr is only available with --pair calkin-wilf",
                ));
            }
            let matrix: Mat2 = matrix.parse()?;
            let cert = check_free_pair(&pair.first, &pair.second);
            let Ok(certified) = cert.certified_pair() else {
                return Ok(refuse(&cert));
            };
            let outcome = decode(&matrix, &certified, fuel)?;
            let code = match outcome {
                DecodeOutcome::Member(_) => EXIT_OK,
                DecodeOutcome::NotMember(_) => EXIT_NEGATIVE,
                DecodeOutcome::FuelExhausted { .. } => EXIT_USAGE,
            };
            let alphabet = if lr { Alphabet::LR } else { Alphabet::AB };
            Ok(Outcome::ok(
                code,
                format!("{}\n", outcome.render(alphabet, powers)),
            ))
        }
        Command::CwTree { depth } => {
            if depth > MAX_TREE_DEPTH {
                return Ok(Outcome::usage(format!(
                    "error: depth must be at most {MAX_TREE_DEPTH}, got {depth}"
                )));
            }
            let mut out = String::new();
            for level in cw_tree(depth) {
                let line: Vec<String> = level.iter().map(|n| n.value.to_string()).collect();
                writeln!(out, "{}", line.join(" ")).expect("write to String");
            }
            Ok(Outcome::ok(EXIT_OK, out))
        }
        Command::CwPath {
            rational,
            lr,
            powers,
        } => {
            let q: Rational = rational.parse()?;
            let path = cw_path(&q)?;
            let alphabet = if lr { Alphabet::LR } else { Alphabet::AB };
            Ok(Outcome::ok(
                EXIT_OK,
                format!("{}\n", path.render(alphabet, powers)),
            ))
        }
        Command::Collide {
            pair,
            max_len,
            jobs,
        } => {
            let pair = pair.resolve()?;
            let report = collision_search(&pair.first, &pair.second, max_len, jobs)?;
            let code = if report.is_collision() {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            };
            Ok(Outcome::ok(code, report.to_string()))
        }
    }
}
