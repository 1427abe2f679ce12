//! Command-line front end for `gnk`.
//!
//! [`run`] takes the argument vector and two sinks so the binary and the
//! tests share one entry point. Exit codes: 0 success, 1 domain error or
//! demo mismatch, 2 usage error.

mod demo;

use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gnk::homomorphisms::{self as hom, RelabelMode};
use gnk::invariants as inv;
use gnk::oracle;
use gnk::{parse_word, FWord, Kind, Label, StrandSet, Word};

#[derive(Parser, Debug)]
#[command(name = "gnk", version, about = "Words in G_n^k, pure braids, and free-product invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cancel adjacent inverse pairs.
    Reduce {
        #[arg(long, value_parser = parse_kind)]
        group: Option<Kind>,
        #[command(flatten)]
        input: Input,
    },
    /// Apply a homomorphism.
    Map {
        #[arg(long, value_enum)]
        hom: Hom,
        /// Deleted strand (p, q, r, psi, f).
        #[arg(long)]
        m: Option<Label>,
        /// Strand count (phi).
        #[arg(long)]
        n: Option<Label>,
        #[arg(long, value_parser = parse_relabel)]
        relabel: Option<RelabelMode>,
        /// Skip the final reduction of phi.
        #[arg(long)]
        unreduced: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a free-product valued invariant.
    Invariant {
        #[arg(long, value_enum)]
        kind: InvKind,
        #[arg(long, value_parser = parse_labels::<2>)]
        pair: Option<[Label; 2]>,
        #[arg(long, value_parser = parse_labels::<3>)]
        triple: Option<[Label; 3]>,
        /// Strand removed by psi (w2del).
        #[arg(long)]
        delete: Option<Label>,
        /// Print one letter per crossing instead of the reduced word.
        #[arg(long)]
        unreduced: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Decide whether a pure braid is Brunnian.
    Brunnian {
        #[arg(long)]
        n: Option<Label>,
        #[command(flatten)]
        input: Input,
    },
    /// Recompute a worked example and compare with the pinned value.
    Demo {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(demo::IDS))]
        id: String,
    },
}

#[derive(Args, Debug)]
struct Input {
    #[command(flatten)]
    source: Source,
    /// Override the strand set, e.g. `1,2,3,4,5`.
    #[arg(long, value_delimiter = ',')]
    strands: Option<Vec<Label>>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    word: Option<String>,
    /// Read the word from a file, `-` for standard input.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Hom {
    P,
    Q,
    R,
    Phi,
    Psi,
    F,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum InvKind {
    Mn2,
    Mn3,
    P2,
    P3,
    W2del,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: gnk::Error| e.to_string())
}

fn parse_relabel(s: &str) -> Result<RelabelMode, String> {
    s.parse().map_err(|e: gnk::Error| e.to_string())
}

fn parse_labels<const N: usize>(s: &str) -> Result<[Label; N], String> {
    let parts: Vec<Label> = s
        .split(',')
        .map(|p| p.trim().parse::<Label>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    parts.try_into().map_err(|v: Vec<Label>| format!("expected {N} comma-separated labels, got {}", v.len()))
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<gnk::Error> for Failure {
    fn from(e: gnk::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => f.write_str(m),
        }
    }
}

fn read_word(input: &Input, kind: Option<Kind>, stdin: &mut dyn Read) -> Result<Word, Failure> {
    let text = match (&input.source.word, &input.source.file) {
        (Some(w), _) => w.clone(),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
            s
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Domain(format!("reading {}: {e}", path.display())))?,
        (None, None) => return Err(Failure::Usage("one of --word or --file is required".into())),
    };
    let w = parse_word(&text, kind)?;
    match &input.strands {
        Some(labels) => Ok(w.with_support(StrandSet::new(labels.iter().copied())?)?),
        None => Ok(w),
    }
}

fn top_label(w: &Word, n: Option<Label>) -> Result<Label, Failure> {
    n.or_else(|| w.support().max())
        .ok_or_else(|| Failure::Usage("--n is required for an empty word without strands".into()))
}

fn require<T>(value: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{flag} is required for {what}")))
}

fn execute(command: Command, out: &mut dyn Write, stdin: &mut dyn Read) -> Result<bool, Failure> {
    let text = match command {
        Command::Reduce { group, input } => read_word(&input, group, stdin)?.reduce_involutive().display_letters().to_string(),
        Command::Map { hom, m, n, relabel, unreduced, input } => {
            let source = match hom {
                Hom::P | Hom::Phi => Kind::PB,
                Hom::Q | Hom::R | Hom::F => Kind::G3,
                Hom::Psi => Kind::G2,
            };
            let w = read_word(&input, Some(source), stdin)?;
            let mode = relabel.unwrap_or(match hom {
                Hom::P | Hom::Q => RelabelMode::Compact,
                _ => RelabelMode::Preserve,
            });
            let image = match hom {
                Hom::Phi => {
                    let n = top_label(&w, n)?;
                    if unreduced {
                        hom::phi_unreduced(&w, n)?
                    } else {
                        hom::phi(&w, n)?
                    }
                }
                _ => {
                    let m = require(m, "--m", "deletion maps")?;
                    match hom {
                        Hom::P => hom::delete_strand_pb(&w, m, mode)?,
                        Hom::Q => hom::delete_strand_g3(&w, m, mode)?,
                        Hom::R => hom::project_g3_to_g2(&w, m, mode)?,
                        Hom::Psi => hom::psi(&w, m, mode)?,
                        _ => hom::f_parity(&w, m, mode)?,
                    }
                }
            };
            image.display_letters().to_string()
        }
        Command::Invariant { kind, pair, triple, delete, unreduced, input } => {
            let source = match kind {
                InvKind::Mn2 | InvKind::W2del => Kind::G2,
                InvKind::Mn3 => Kind::G3,
                InvKind::P2 => Kind::PG2,
                InvKind::P3 => Kind::PG3,
            };
            let pair = || require(pair, "--pair", "pair invariants");
            let triple = || require(triple, "--triple", "triple invariants");
            let w = read_word(&input, Some(source), stdin)?;
            let value: FWord = match kind {
                InvKind::Mn2 => {
                    let [i, j] = pair()?;
                    inv::mn_w2_trace(&w, i, j)?
                }
                InvKind::Mn3 => {
                    let [i, j, k] = triple()?;
                    inv::mn_w3_trace(&w, i, j, k)?
                }
                InvKind::P2 => {
                    let [i, j] = pair()?;
                    inv::parity_w2_trace(&w, i, j)?
                }
                InvKind::P3 => {
                    let [i, j, k] = triple()?;
                    inv::parity_w3_trace(&w, i, j, k)?
                }
                InvKind::W2del => {
                    let [i, j] = pair()?;
                    let l = require(delete, "--delete", "w2del")?;
                    inv::w2_with_deleted_strand_trace(&w, i, j, l)?
                }
            };
            if unreduced {
                value.to_string()
            } else {
                value.reduced().to_string()
            }
        }
        Command::Brunnian { n, input } => {
            let w = read_word(&input, Some(Kind::PB), stdin)?;
            let n = top_label(&w, n)?;
            oracle::is_brunnian(&w, n)?.to_string()
        }
        Command::Demo { id } => {
            let report = demo::run(&id)?;
            write!(out, "{report}").map_err(io_failure)?;
            return Ok(report.passed());
        }
    };
    writeln!(out, "{text}").map_err(io_failure)?;
    Ok(true)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Domain(format!("writing output: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn Read) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(cli.command, out, stdin) {
        Ok(true) => 0,
        Ok(false) => {
            let _ = writeln!(err, "error: recomputed value differs from the pinned value");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("gnk").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err, &mut stdin.as_bytes());
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn reads_stdin_through_the_dash_file() {
        let (code, out, err) = call(&["reduce", "--group", "pg2", "--file", "-"], "a(1,2:1)  a(1,2:1)\n");
        assert_eq!((code, out.as_str(), err.as_str()), (0, "1\n", ""));
    }

    #[test]
    fn empty_word_needs_a_group() {
        let (code, _, err) = call(&["reduce", "--word", "1"], "");
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn label_lists_are_checked() {
        assert_eq!(parse_labels::<2>("3, 1"), Ok([3, 1]));
        assert!(parse_labels::<3>("1,2").is_err());
        assert!(parse_labels::<2>("1,x").is_err());
    }
}
