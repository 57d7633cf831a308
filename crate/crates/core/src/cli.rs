//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on domain errors, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{OrnatedError, Result};
use crate::graph::OrnatedGraph;
use crate::io::{degree_table_csv, to_dot, GraphDocument};
use crate::kyle::{degree_sequence, kyle};
use crate::lab::{
    scan_necessity, search_sufficiency, ScanOptions, SearchMode, SufficiencyOptions, DEFAULT_BUDGET,
    DEFAULT_MAX_MULT, DEFAULT_MAX_ORDER,
};
use crate::laws::check_laws;
use crate::ostring::OrderedString;
use crate::ratanang::recover;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ornated", version, about = "Ornated multidigraphs built from ordered integer strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build O_n(s) and print it as a JSON graph document.
    Build(StringAndOrder),
    /// Degree table of O_n(s): per-entry contributions and totals.
    Degrees {
        #[command(flatten)]
        target: StringAndOrder,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Build the Kyle graph O_{2k+1}(s).
    Kyle {
        #[arg(long, value_parser = parse_string)]
        string: OrderedString,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recover the defining string of a graph document.
    Recover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the associative, summation, partial-commutative and
    /// redundancy identities on O_n(s).
    Laws(StringAndOrder),
    /// Conjecture lab scans.
    Scan {
        #[command(subcommand)]
        kind: ScanKind,
    },
    /// Export a graph, built from a string or read from a document.
    Export {
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long, value_parser = parse_string, conflicts_with = "input", requires = "n")]
        string: Option<OrderedString>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, required_unless_present = "string")]
        input: Option<PathBuf>,
        /// One labelled edge per vertex pair instead of one edge per arc.
        #[arg(long)]
        collapse: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct StringAndOrder {
    #[arg(long, value_parser = parse_string)]
    pub string: OrderedString,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ScanKind {
    /// Kyle graphs of every string with entries 1..=max-k, length 1..=max-l.
    Necessity {
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        max_l: usize,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Matrices of odd order m where conditions and the rebuild oracle disagree.
    Sufficiency {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_mult: usize,
        /// Restrict to matrices rebuilt from row-1/column-1 staircases.
        #[arg(long)]
        ornated_only: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_MULT)]
        max_mult_cap: usize,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl ScanArgs {
    fn options(&self) -> ScanOptions {
        ScanOptions { threads: self.threads, budget: self.budget }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

fn parse_string(s: &str) -> std::result::Result<OrderedString, String> {
    s.parse::<OrderedString>().map_err(|e| e.to_string())
}

/// Parses `argv` (program name first), runs the command and writes its
/// output to `out`, or to the file named by `--output`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, None)) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => report(err, &OrnatedError::Io(e)),
        },
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => report(err, &OrnatedError::Io(e)),
        },
        Err(e) => report(err, &e),
    }
}

fn report(err: &mut dyn Write, e: &OrnatedError) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_DOMAIN
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut line = serde_json::to_string(value)?;
    line.push('\n');
    Ok(line)
}

fn execute(command: Command) -> Result<(String, Option<PathBuf>)> {
    match command {
        Command::Build(StringAndOrder { string, n, output }) => {
            let g = OrnatedGraph::build(n, &string)?;
            Ok((json_line(&GraphDocument::from_graph(&g))?, output))
        }
        Command::Degrees { target: StringAndOrder { string, n, output }, format } => {
            let profile = degree_sequence(n, &string)?;
            let text = match format {
                TableFormat::Csv => degree_table_csv(&profile),
                TableFormat::Json => json_line(&profile)?,
            };
            Ok((text, output))
        }
        Command::Kyle { string, output } => {
            Ok((json_line(&GraphDocument::from_graph(&kyle(&string)))?, output))
        }
        Command::Recover { input, output } => {
            let matrix = GraphDocument::read(&input)?.to_matrix()?;
            Ok((json_line(&recover(&matrix)?)?, output))
        }
        Command::Laws(StringAndOrder { string, n, output }) => {
            let checks = check_laws(n, &string)?;
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!("{}: {}\n", c.law, if c.holds { "pass" } else { "FAIL" }));
            }
            if let Some(bad) = checks.iter().find(|c| !c.holds) {
                return Err(OrnatedError::NotOrnated(format!("{} fails on O_{n}({string})", bad.law)));
            }
            Ok((text, output))
        }
        Command::Scan { kind: ScanKind::Necessity { max_k, max_l, scan } } => {
            let result = scan_necessity(max_k, max_l, scan.options())?;
            let mut text = String::new();
            for record in &result.records {
                text.push_str(&json_line(record)?);
            }
            text.push_str(&json_line(&result.summary)?);
            Ok((text, scan.output))
        }
        Command::Scan {
            kind: ScanKind::Sufficiency { m, max_mult, ornated_only, max_order, max_mult_cap, scan },
        } => {
            let opts = SufficiencyOptions {
                mode: if ornated_only { SearchMode::OrnatedOnly } else { SearchMode::Full },
                max_order,
                max_mult_cap,
                scan: scan.options(),
            };
            let result = search_sufficiency(m, max_mult, opts)?;
            let mut text = String::new();
            for candidate in &result.candidates {
                text.push_str(&json_line(candidate)?);
            }
            text.push_str(&json_line(&result.summary)?);
            Ok((text, scan.output))
        }
        Command::Export { format, string, n, input, collapse, output } => {
            let g = match (string, input) {
                (Some(s), _) => OrnatedGraph::build(n.expect("clap requires --n with --string"), &s)?,
                (None, Some(path)) => GraphDocument::read(&path)?.to_graph()?,
                (None, None) => unreachable!("clap requires --string or --input"),
            };
            let text = match format {
                ExportFormat::Dot => to_dot(g.arcs(), collapse),
                ExportFormat::Json => json_line(&GraphDocument::from_graph(&g))?,
            };
            Ok((text, output))
        }
    }
}
