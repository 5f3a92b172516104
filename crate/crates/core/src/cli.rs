//! Problem files and the `ncgb` command line.
//!
//! A problem file is line based:
//!
//! ```text
//! # comment
//! vars a b
//! order llex
//! trunc 11
//! mode improved
//! gen (a*b)^2 - 1
//! ```
//!
//! `vars` must come before any `gen`. Variables are listed from largest to
//! smallest; `order llex x y ...` may restate them in a different order.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::basis::BasisState;
use crate::engine::{
    compute, verify_basis_of, Certificate, CriteriaToggles, EngineConfig, Mode, Outcome, RunStats,
    Seeding,
};
use crate::error::{Error, Result};
use crate::parse::{format_polynomial, parse_polynomial_at};
use crate::polynomial::NcPolynomial;
use crate::words::{is_identifier, Alphabet, LLex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_NOT_GROEBNER: i32 = 4;

#[derive(Debug, Clone)]
pub struct Problem {
    pub alphabet: Alphabet,
    pub generators: Vec<NcPolynomial>,
    pub truncation: Option<usize>,
    pub mode: Option<Mode>,
}

fn perr<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        column,
        message: message.into(),
    })
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut alphabet: Option<Alphabet> = None;
    let mut generators = Vec::new();
    let mut truncation = None;
    let mut mode = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.len() - content.trim_start().len();
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        let rest_col = indent + key.len() + 1 + (rest.len() - rest.trim_start().len());
        let rest = rest.trim();
        match key {
            "vars" => {
                if alphabet.is_some() {
                    return perr(line, indent + 1, "duplicate `vars`");
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return perr(line, indent + 1, "`vars` needs at least one variable");
                }
                if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                    let col = raw.find(bad).map_or(1, |c| c + 1);
                    return perr(line, col, format!("invalid variable name `{bad}`"));
                }
                alphabet = Some(Alphabet::new(&names).map_err(|e| Error::Parse {
                    line,
                    column: rest_col + 1,
                    message: e.to_string(),
                })?);
            }
            "order" => {
                let mut parts = rest.split_whitespace();
                match parts.next() {
                    Some("llex") => {}
                    Some(other) => {
                        return perr(
                            line,
                            rest_col + 1,
                            format!("unsupported ordering `{other}`"),
                        )
                    }
                    None => return perr(line, rest_col + 1, "expected an ordering name"),
                }
                let names: Vec<&str> = parts.collect();
                if !names.is_empty() {
                    let Some(a) = &alphabet else {
                        return perr(
                            line,
                            indent + 1,
                            "`order` with variables needs `vars` first",
                        );
                    };
                    if !generators.is_empty() {
                        return perr(line, indent + 1, "`order` must precede `gen`");
                    }
                    let mut sorted: Vec<&str> = names.clone();
                    sorted.sort_unstable();
                    let mut known: Vec<&str> = a.symbols().iter().map(String::as_str).collect();
                    known.sort_unstable();
                    if sorted != known {
                        return perr(
                            line,
                            rest_col + 1,
                            "`order llex` must list every variable exactly once",
                        );
                    }
                    alphabet = Some(Alphabet::new(&names)?);
                }
            }
            "trunc" => match rest.parse::<usize>() {
                Ok(d) => truncation = Some(d),
                Err(_) => {
                    return perr(
                        line,
                        rest_col + 1,
                        format!("expected a degree, found `{rest}`"),
                    )
                }
            },
            "mode" => {
                mode = Some(match rest {
                    "basic" => Mode::Basic,
                    "improved" => Mode::Improved,
                    _ => {
                        return perr(
                            line,
                            rest_col + 1,
                            format!("expected `basic` or `improved`, found `{rest}`"),
                        )
                    }
                })
            }
            "gen" => {
                let Some(a) = &alphabet else {
                    return perr(line, indent + 1, "`gen` before `vars`");
                };
                generators.push(parse_polynomial_at(rest, a, &LLex, line, rest_col)?);
            }
            _ => return perr(line, indent + 1, format!("unknown directive `{key}`")),
        }
    }
    let Some(alphabet) = alphabet else {
        return perr(1, 1, "missing `vars` line");
    };
    Ok(Problem {
        alphabet,
        generators,
        truncation,
        mode,
    })
}

/// Renders polynomials in problem-file syntax.
pub fn format_problem(
    alphabet: &Alphabet,
    polys: &[NcPolynomial],
    truncation: Option<usize>,
) -> String {
    let mut out = format!("vars {}\norder llex\n", alphabet.symbols().join(" "));
    if let Some(d) = truncation {
        out.push_str(&format!("trunc {d}\n"));
    }
    for p in polys {
        out.push_str(&format!("gen {}\n", format_polynomial(p, alphabet)));
    }
    out
}

pub const STATS_HEADER: &str =
    "label\t#(Gb)\t#(RGb)\t#(Tot)\t#(Sel)\t#(M)\t#(F)\t#(Tail)\t#(B_k)\trho";

pub fn stats_row(label: &str, s: &RunStats) -> String {
    format!(
        "{label}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        s.gb_size,
        s.rgb_size.map_or("-".into(), |n| n.to_string()),
        s.tot,
        s.sel,
        s.m,
        s.f,
        s.tail,
        s.bk,
        s.rho_f64().map_or("-".into(), |r| format!("{r:.4}"))
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Basic,
    Improved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    M,
    F,
    Tail,
    Bk,
}

#[derive(Debug, Parser)]
#[command(
    name = "ncgb",
    version,
    about = "Non-commutative Gröbner bases over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a Gröbner basis for a problem file.
    Run {
        problem: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Discard obstructions above this degree (homogeneous input only).
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long)]
        max_basis: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Append a statistics row to this TSV file.
        #[arg(long)]
        stats_csv: Option<PathBuf>,
        #[arg(long)]
        exact_tiebreak: bool,
        /// Start from all obstructions of the input instead of adding the
        /// input generators one at a time.
        #[arg(long)]
        unfiltered_start: bool,
        /// Let the backward criterion try every occurrence of a new leading word.
        #[arg(long)]
        all_occurrences: bool,
        /// Shorthand for `--mode basic`.
        #[arg(long, conflicts_with = "criteria")]
        no_criteria: bool,
        /// Criteria to apply in improved mode.
        #[arg(long, value_enum, value_delimiter = ',')]
        criteria: Option<Vec<CriterionArg>>,
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        gb_out: Option<PathBuf>,
        #[arg(long)]
        rgb_out: Option<PathBuf>,
    },
    /// Check that a basis file is a Gröbner basis, optionally of a problem's ideal.
    Verify {
        basis: PathBuf,
        #[arg(long)]
        problem: Option<PathBuf>,
        #[arg(long)]
        trunc: Option<usize>,
    },
}

fn read_problem(path: &Path) -> Result<Problem> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn append_stats(path: &Path, row: &str) -> Result<()> {
    let fresh = fs::metadata(path).map_or(true, |m| m.len() == 0);
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
    let mut text = String::new();
    if fresh {
        text.push_str(STATS_HEADER);
        text.push('\n');
    }
    text.push_str(row);
    text.push('\n');
    f.write_all(text.as_bytes())
        .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn run_command(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Run {
            problem,
            mode,
            trunc,
            max_basis,
            max_degree,
            stats_csv,
            exact_tiebreak,
            unfiltered_start,
            all_occurrences,
            no_criteria,
            criteria,
            label,
            gb_out,
            rgb_out,
        } => {
            let p = read_problem(&problem)?;
            let mode = match mode {
                _ if no_criteria => Mode::Basic,
                Some(ModeArg::Basic) => Mode::Basic,
                Some(ModeArg::Improved) => Mode::Improved,
                None => p.mode.unwrap_or_default(),
            };
            let toggles = if let Some(list) = criteria {
                CriteriaToggles {
                    multiply: list.contains(&CriterionArg::M),
                    leading_word: list.contains(&CriterionArg::F),
                    tail: list.contains(&CriterionArg::Tail),
                    backward: list.contains(&CriterionArg::Bk),
                }
            } else {
                CriteriaToggles::ALL
            };
            let cfg = EngineConfig {
                mode,
                criteria: toggles,
                truncation: trunc.or(p.truncation),
                max_basis,
                max_degree,
                exact_tiebreak,
                seeding: if unfiltered_start {
                    Seeding::Unfiltered
                } else {
                    Seeding::Incremental
                },
                backward_all_occurrences: all_occurrences,
                ..EngineConfig::default()
            };
            let (run, reduced) = compute(&p.generators, &cfg)?;
            let label = label.unwrap_or_else(|| {
                problem
                    .file_stem()
                    .map_or("run".into(), |s| s.to_string_lossy().into_owned())
            });
            let row = stats_row(&label, &run.stats);
            writeln!(out, "{STATS_HEADER}").ok();
            writeln!(out, "{row}").ok();
            if let Some(path) = stats_csv {
                append_stats(&path, &row)?;
            }
            if let Some(path) = gb_out {
                write_file(
                    &path,
                    &format_problem(&p.alphabet, run.basis.generators(), cfg.truncation),
                )?;
            }
            if let Some(path) = rgb_out {
                write_file(
                    &path,
                    &format_problem(&p.alphabet, reduced.generators(), cfg.truncation),
                )?;
            }
            Ok(match run.outcome {
                Outcome::Completed => EXIT_OK,
                Outcome::CapReached => {
                    writeln!(
                        out,
                        "cap reached with {} obstructions pending",
                        run.pending.len()
                    )
                    .ok();
                    EXIT_CAP
                }
            })
        }
        Command::Verify {
            basis,
            problem,
            trunc,
        } => {
            let b = read_problem(&basis)?;
            let state = BasisState::from_polys(b.generators.clone())?;
            let (ideal, alphabet, ptrunc) = match &problem {
                Some(path) => {
                    let p = read_problem(path)?;
                    if p.alphabet.symbols() != b.alphabet.symbols() {
                        return Err(Error::InvalidConfig(
                            "basis and problem use different variables".into(),
                        ));
                    }
                    (p.generators, p.alphabet, p.truncation)
                }
                None => (Vec::new(), b.alphabet.clone(), None),
            };
            let truncation = trunc.or(ptrunc).or(b.truncation);
            let v = verify_basis_of(&state, &ideal, &LLex, truncation);
            match &v.failure {
                None => {
                    writeln!(out, "ok: Gröbner basis ({} checks)", v.checked).ok();
                    Ok(EXIT_OK)
                }
                Some(Certificate::Obstruction {
                    obstruction,
                    remainder,
                }) => {
                    writeln!(
                        out,
                        "not a Gröbner basis: {} leaves remainder {}",
                        obstruction.display(&alphabet),
                        format_polynomial(remainder, &alphabet)
                    )
                    .ok();
                    Ok(EXIT_NOT_GROEBNER)
                }
                Some(Certificate::Generator { index, remainder }) => {
                    writeln!(
                        out,
                        "not a basis of the ideal: generator {} leaves remainder {}",
                        index + 1,
                        format_polynomial(remainder, &alphabet)
                    )
                    .ok();
                    Ok(EXIT_NOT_GROEBNER)
                }
            }
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            if e.use_stderr() {
                write!(err, "{e}").ok();
            } else {
                write!(out, "{e}").ok();
            }
            return code;
        }
    };
    match run_command(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            EXIT_ERROR
        }
    }
}
