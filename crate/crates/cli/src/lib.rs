//! The `tm` command-line tool.
//!
//! Exit codes: 0 success, 1 verification false or nothing found, 2 usage or
//! input error. Machine output is JSON on stdout; diagnostics go to stderr.

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tm_measures::attractors::{self, AttractorSet, SearchResult};
use tm_measures::complexity;
use tm_measures::report::{MeasureReport, MeasureSelection};
use tm_measures::words::{thue_morse, ThueMorseIndex, DEFAULT_CAP};
use tm_measures::Word;

pub mod table;

pub const CAP_VAR: &str = "TM_CAP";

#[derive(Debug, Parser)]
#[command(name = "tm", version, about = "Repetitiveness measures of strings and Thue-Morse words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Thue-Morse word t_n.
    Generate {
        n: u32,
        /// Append a trailing newline.
        #[arg(long)]
        newline: bool,
    },
    /// Compute delta, z, r and the Lyndon factorization size of a word.
    ///
    /// r counts runs in the BWT obtained by sorting all cyclic rotations of
    /// the input, with no end-of-string sentinel.
    Measure {
        #[command(flatten)]
        input: Input,
        /// Comma list among delta,z,r,lyndon,profile.
        #[arg(long, default_value = "delta,z,r,lyndon")]
        measures: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Positions of a known attractor; if it verifies, its size is
        /// reported as gamma_upper.
        #[arg(long)]
        attractor: Option<String>,
    },
    /// Verify, search for, or construct string attractors.
    #[command(subcommand)]
    Attractor(AttractorCommand),
    /// Subword complexity: P(k) for one k, or the whole profile.
    Complexity {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "all")]
        k: Option<usize>,
        /// Print P(k) for every k (the default).
        #[arg(long)]
        all: bool,
    },
    /// Computed measures of t_1..t_N beside their closed forms.
    ///
    /// r uses the cyclic-rotation BWT without sentinel.
    Table {
        #[arg(long)]
        max_n: u32,
        /// Print closed forms only, without building any word.
        #[arg(long)]
        closed_form_only: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum AttractorCommand {
    /// Check a position set; exits 1 with an uncovered substring if it fails.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based positions.
        #[arg(long)]
        positions: String,
    },
    /// Exhaustive search for a smallest attractor.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_size: usize,
    },
    /// Print an explicit attractor family for t_n.
    Family {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Also build t_n and verify the set.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// {2^(n-2), 3*2^(n-3), 2^(n-1), 3*2^(n-2)}, n >= 4
    Kn,
    /// {2^(n-1)+1} and 3*2^(i-2) for i = 2..n, n >= 3
    Mantaci,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file, or - for stdin. Bytes are taken verbatim.
    pub path: PathBuf,
    /// Strip one trailing newline (default for stdin).
    #[arg(long, overrides_with = "no_strip_newline")]
    pub strip_newline: bool,
    /// Keep a trailing newline (default for files).
    #[arg(long)]
    pub no_strip_newline: bool,
}

impl Input {
    fn read(&self) -> Result<Word, CliError> {
        let stdin = self.path.as_os_str() == "-";
        let read = if stdin {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map(|_| buf)
        } else {
            std::fs::read(&self.path)
        };
        let mut bytes = read.map_err(|e| CliError::Usage(format!("cannot read {}: {e}", self.path.display())))?;

        let strip = if self.strip_newline {
            true
        } else if self.no_strip_newline {
            false
        } else {
            stdin
        };
        if strip && bytes.last() == Some(&b'\n') {
            bytes.pop();
            if bytes.last() == Some(&b'\r') {
                bytes.pop();
            }
        }
        if bytes.is_empty() {
            return Err(CliError::Usage("input word is empty".into()));
        }
        Ok(Word::new(bytes))
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input; exit code 2.
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tm_measures::Error> for CliError {
    fn from(e: tm_measures::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// What a command produced: bytes for stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: Vec<u8>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: impl Into<Vec<u8>>) -> Self {
        Output { stdout: stdout.into(), code: 0 }
    }

    fn json<T: Serialize>(value: &T, code: i32) -> Self {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        Output { stdout: s.into_bytes(), code }
    }
}

/// Reads the generation cap from `TM_CAP`, defaulting to 30.
pub fn generation_cap() -> Result<u32, CliError> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Parses `p1,p2,...` into an attractor for a word of length `len`.
pub fn parse_positions(list: &str, len: usize) -> Result<AttractorSet, CliError> {
    let positions = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| CliError::Usage(format!("malformed position {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AttractorSet::new(positions, len)?)
}

#[derive(Debug, Serialize)]
struct VerifyJson<'a> {
    is_attractor: bool,
    positions: &'a [usize],
    word_length: usize,
    certificate: Option<String>,
}

#[derive(Debug, Serialize)]
struct FamilyJson<'a> {
    family: Family,
    n: u32,
    word_length: usize,
    positions: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

#[derive(Debug, Serialize)]
struct ComplexityJson {
    k: usize,
    count: u64,
}

#[derive(Debug, Serialize)]
struct ProfileJson {
    word_length: usize,
    counts: Vec<u64>,
    argmax_k: usize,
    delta: tm_measures::Rational,
    delta_approx: String,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let cap = generation_cap()?;
    match cli.command {
        Command::Generate { n, newline } => {
            let mut bytes = thue_morse(ThueMorseIndex::with_cap(n, cap)?).as_bytes().to_vec();
            if newline {
                bytes.push(b'\n');
            }
            Ok(Output::ok(bytes))
        }
        Command::Measure { input, measures, format, attractor } => {
            let w = input.read()?;
            let sel = MeasureSelection::parse_list(&measures)?;
            let gamma = attractor.map(|p| parse_positions(&p, w.len())).transpose()?;
            let report = MeasureReport::compute(&w, sel, gamma.as_ref())?;
            Ok(match format {
                ReportFormat::Json => Output::json(&report, 0),
                ReportFormat::Tsv => {
                    Output::ok(format!("{}\n{}\n", MeasureReport::TSV_HEADER, report.tsv_row()))
                }
            })
        }
        Command::Attractor(cmd) => run_attractor(cmd, cap),
        Command::Complexity { input, k, .. } => {
            let w = input.read()?;
            Ok(match k {
                Some(0) => return Err(CliError::Usage("--k must be at least 1".into())),
                Some(k) => Output::json(&ComplexityJson { k, count: complexity::subword_complexity(&w, k) }, 0),
                None => {
                    let p = complexity::profile(&w)?;
                    Output::json(
                        &ProfileJson {
                            word_length: w.len(),
                            delta_approx: p.delta.to_decimal(6),
                            argmax_k: p.argmax_k,
                            delta: p.delta,
                            counts: p.counts,
                        },
                        0,
                    )
                }
            })
        }
        Command::Table { max_n, closed_form_only, format } => {
            if max_n == 0 {
                return Err(CliError::Usage("--max-n must be at least 1".into()));
            }
            if !closed_form_only && max_n > cap {
                return Err(CliError::Usage(format!(
                    "--max-n {max_n} exceeds cap {cap}; use --closed-form-only or raise {CAP_VAR}"
                )));
            }
            let rows = table::build(max_n, closed_form_only)?;
            Ok(match format {
                TableFormat::Json => Output::json(&table::TableJson::new(rows), 0),
                TableFormat::Text => Output::ok(table::render_text(&rows)),
            })
        }
    }
}

fn run_attractor(cmd: AttractorCommand, cap: u32) -> Result<Output, CliError> {
    match cmd {
        AttractorCommand::Verify { input, positions } => {
            let w = input.read()?;
            let gamma = parse_positions(&positions, w.len())?;
            let check = attractors::is_attractor(&w, &gamma)?;
            let json = VerifyJson {
                is_attractor: check.is_attractor,
                positions: gamma.positions(),
                word_length: w.len(),
                certificate: check.certificate.map(|c| c.to_string()),
            };
            Ok(Output::json(&json, if check.is_attractor { 0 } else { 1 }))
        }
        AttractorCommand::Search { input, max_size } => {
            if max_size == 0 {
                return Err(CliError::Usage("--max-size must be at least 1".into()));
            }
            let w = input.read()?;
            let result = attractors::min_attractor(&w, max_size)?;
            let code = match result {
                SearchResult::Found(_) => 0,
                SearchResult::NotFound(_) => 1,
            };
            Ok(Output::json(&result, code))
        }
        AttractorCommand::Family { family, n, verify } => {
            let set = match family {
                Family::Kn => attractors::k_attractor(n)?,
                Family::Mantaci => attractors::mantaci_attractor(n)?,
            };
            let verified = if verify {
                let t = thue_morse(ThueMorseIndex::with_cap(n, cap)?);
                Some(attractors::is_attractor(&t, &set)?.is_attractor)
            } else {
                None
            };
            let json = FamilyJson {
                family,
                n,
                word_length: set.word_length(),
                positions: set.positions(),
                verified,
            };
            Ok(Output::json(&json, if verified == Some(false) { 1 } else { 0 }))
        }
    }
}
