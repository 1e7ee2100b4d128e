//! Command-line front end. `main.rs` only forwards to [`main`].

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::certify::{chi_total_with_evidence, prove_type2, SolveOptions};
use crate::colouring::{Colour, TotalColouring};
use crate::construct::construct;
use crate::error::Error;
use crate::graph::{CirculantGraph, Element};
use crate::solver::{search_total_colouring, SearchStatus, DEFAULT_NODE_LIMIT};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A requested colouring does not exist.
    pub const NO_COLOURING: i32 = 1;
    pub const BAD_ARGUMENTS: i32 = 2;
    pub const VERIFICATION_FAILED: i32 = 3;
    /// The solver hit its node limit.
    pub const INCONCLUSIVE: i32 = 4;
    pub const IO: i32 = 5;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Compact,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "circulant-total",
    version,
    about = "Total colourings of the circulant graphs C_n(1,3)"
)]
pub struct Cli {
    /// Output format for colourings.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Solver node budget (0 = unlimited).
    #[arg(long, global = true, env = "CIRCULANT_NODE_LIMIT", default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: u64,

    /// Solver worker threads.
    #[arg(long, global = true, env = "CIRCULANT_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,

    /// Palette size for `colour` and `verify`.
    #[arg(long = "k", global = true, value_parser = clap::value_parser!(u8).range(1..=9))]
    pub k: Option<u8>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a total colouring of C_n(1,3) with chi'' colours (or --k colours).
    Colour { n: usize },
    /// Check a colouring file (compact or JSON, `-` for stdin).
    Verify { path: PathBuf },
    /// Print the total chromatic number of C_n(1,3).
    Chi { n: usize },
    /// Write the k = 5 and k = 6 search certificates for a Type II order.
    #[command(name = "prove-type2")]
    ProveType2 {
        n: usize,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Print n, chi'' and the method for every 7 <= n <= n_max.
    Table { n_max: usize },
    /// Write the graph as DOT, or its optimal colouring as compact/JSON.
    Export {
        n: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::BAD_ARGUMENTS } else { exit::OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => exit::IO,
        Error::Inconclusive { .. } => exit::INCONCLUSIVE,
        Error::DimensionMismatch { .. } | Error::CertificateMismatch(_) => exit::VERIFICATION_FAILED,
        _ => exit::BAD_ARGUMENTS,
    }
}

impl Cli {
    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            node_limit: self.node_limit,
            worker_count: self.workers as usize,
            ..SolveOptions::default()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    match &cli.command {
        Command::Colour { n } => colour(cli, *n, out),
        Command::Verify { path } => verify(cli, path, out),
        Command::Chi { n } => {
            let (chi, _) = chi_total_with_evidence(*n, &cli.solve_options())?;
            writeln!(out, "{chi}")?;
            Ok(exit::OK)
        }
        Command::ProveType2 { n, out_dir } => prove(cli, *n, out_dir, out),
        Command::Table { n_max } => table(cli, *n_max, out),
        Command::Export { n, output } => export(cli, *n, output.as_deref(), out),
    }
}

/// Optimal colouring (or a `k`-colouring when `k` is given); `None` when
/// the search proves there is none.
fn find_colouring(cli: &Cli, n: usize, k: Option<Colour>) -> Result<Option<TotalColouring>, Error> {
    if n < 7 {
        return Err(Error::OrderTooSmall(n));
    }
    let opts = cli.solve_options();
    match k {
        None => Ok(chi_total_with_evidence(n, &opts)?.1.colouring()),
        Some(5) if construct(n)?.colouring().is_some() => Ok(construct(n)?.into_colouring()),
        Some(k) => {
            let g = CirculantGraph::c13(n)?;
            let outcome = search_total_colouring(&g, &opts.config(k))?;
            match outcome.status {
                SearchStatus::Found => Ok(outcome.colouring),
                SearchStatus::ExhaustedNoSolution => Ok(None),
                SearchStatus::LimitReached => Err(Error::Inconclusive {
                    n,
                    k,
                    nodes: outcome.nodes_visited,
                }),
            }
        }
    }
}

fn render_colouring(c: &TotalColouring, format: Format) -> Result<String, Error> {
    match format {
        Format::Compact => c.to_compact(),
        Format::Json => Ok(c.to_json() + "\n"),
        Format::Dot => Ok(coloured_dot(c)),
    }
}

fn colour(cli: &Cli, n: usize, out: &mut dyn Write) -> Result<i32, Error> {
    match find_colouring(cli, n, cli.k)? {
        Some(c) => {
            out.write_all(render_colouring(&c, cli.format.unwrap_or(Format::Compact))?.as_bytes())?;
            Ok(exit::OK)
        }
        None => {
            writeln!(out, "C_{n}(1,3) has no total {}-colouring", cli.k.unwrap_or(5))?;
            Ok(exit::NO_COLOURING)
        }
    }
}

fn read_input(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path)
    }
}

fn verify(cli: &Cli, path: &Path, out: &mut dyn Write) -> Result<i32, Error> {
    let c = TotalColouring::parse(&read_input(path)?, cli.k)?;
    let g = CirculantGraph::c13(c.n())?;
    let report = c.verify(&g)?;
    if report.is_proper() {
        writeln!(out, "OK")?;
        Ok(exit::OK)
    } else {
        writeln!(out, "CONFLICTS {}", report.len())?;
        write!(out, "{report}")?;
        Ok(exit::VERIFICATION_FAILED)
    }
}

fn prove(cli: &Cli, n: usize, out_dir: &Path, out: &mut dyn Write) -> Result<i32, Error> {
    let proof = prove_type2(n, &cli.solve_options())?;
    fs::create_dir_all(out_dir)?;
    for cert in [&proof.without_five, &proof.with_six] {
        let path = out_dir.join(format!("c{}_k{}.json", n, cert.k));
        fs::write(&path, cert.to_json() + "\n")?;
        writeln!(
            out,
            "n={} k={} status={} nodes={} file={}",
            n,
            cert.k,
            status_name(cert.status),
            cert.nodes_visited,
            path.display()
        )?;
    }
    Ok(if proof.is_conclusive() {
        exit::OK
    } else {
        exit::INCONCLUSIVE
    })
}

fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Found => "found",
        SearchStatus::ExhaustedNoSolution => "exhausted_no_solution",
        SearchStatus::LimitReached => "limit_reached",
    }
}

fn table(cli: &Cli, n_max: usize, out: &mut dyn Write) -> Result<i32, Error> {
    if n_max < 7 {
        return Err(Error::OrderTooSmall(n_max));
    }
    let opts = cli.solve_options();
    let mut code = exit::OK;
    writeln!(out, "n\tchi\tmethod")?;
    for n in 7..=n_max {
        match chi_total_with_evidence(n, &opts) {
            Ok((chi, evidence)) => writeln!(out, "{n}\t{chi}\t{}", evidence.method())?,
            Err(Error::Inconclusive { .. }) => {
                writeln!(out, "{n}\t?\tinconclusive")?;
                code = exit::INCONCLUSIVE;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(code)
}

fn export(cli: &Cli, n: usize, output: Option<&Path>, out: &mut dyn Write) -> Result<i32, Error> {
    let format = cli.format.unwrap_or(Format::Dot);
    let text = match format {
        Format::Dot => {
            if n < 7 {
                return Err(Error::OrderTooSmall(n));
            }
            CirculantGraph::c13(n)?.to_dot()
        }
        _ => match find_colouring(cli, n, cli.k)? {
            Some(c) => render_colouring(&c, format)?,
            None => {
                writeln!(out, "C_{n}(1,3) has no total {}-colouring", cli.k.unwrap_or(5))?;
                return Ok(exit::NO_COLOURING);
            }
        },
    };
    match output {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(exit::OK)
}

/// DOT drawing with colours as labels.
fn coloured_dot(c: &TotalColouring) -> String {
    let n = c.n();
    let g = CirculantGraph::c13(n).expect("colouring comes from a valid graph");
    let mut s = format!("graph C{n}_1_3 {{\n");
    for v in 0..n {
        s += &format!("  v{v} [label=\"v{v}:{}\"];\n", c.colour(Element::vertex(v)));
    }
    for id in n..3 * n {
        let e = g.element_at(id);
        let (a, b) = g.endpoints(e).unwrap();
        s += &format!("  v{a} -- v{b} [label=\"{}\"];\n", c.colour(e));
    }
    s + "}\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("circulant-total").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn colour_nine() {
        let (code, out, _) = call(&["colour", "9"]);
        assert_eq!(code, exit::OK);
        assert_eq!(out, "212534121\n453453453\n121212534\n");
    }

    #[test]
    fn colour_type_two_uses_six() {
        let (code, out, _) = call(&["colour", "12"]);
        assert_eq!(code, exit::OK);
        let c = TotalColouring::parse(&out, None).unwrap();
        assert_eq!(c.k(), 6);
        assert!(c.verify(&CirculantGraph::c13(12).unwrap()).unwrap().is_proper());
        let (code, out, _) = call(&["colour", "12", "--k", "5"]);
        assert_eq!(code, exit::NO_COLOURING);
        assert!(out.contains("no total 5-colouring"));
    }

    #[test]
    fn chi_and_bad_arguments() {
        assert_eq!(call(&["chi", "12"]).1, "6\n");
        assert_eq!(call(&["chi", "6"]).0, exit::BAD_ARGUMENTS);
        assert_eq!(call(&["chi", "abc"]).0, exit::BAD_ARGUMENTS);
        assert_eq!(call(&["frobnicate"]).0, exit::BAD_ARGUMENTS);
        assert_eq!(call(&["chi", "9", "--workers", "0"]).0, exit::BAD_ARGUMENTS);
    }

    #[test]
    fn inconclusive_prints_no_value() {
        let (code, out, err) = call(&["chi", "13", "--node-limit", "5"]);
        assert_eq!(code, exit::INCONCLUSIVE);
        assert!(out.is_empty());
        assert!(err.contains("node limit"));
    }

    #[test]
    fn missing_file_is_io() {
        assert_eq!(call(&["verify", "/nonexistent/colouring.txt"]).0, exit::IO);
    }

    #[test]
    fn dot_export() {
        let (code, out, _) = call(&["export", "7"]);
        assert_eq!(code, exit::OK);
        assert_eq!(out, CirculantGraph::c13(7).unwrap().to_dot());
        let (_, out, _) = call(&["colour", "9", "--format", "dot"]);
        assert!(out.contains("v0 [label=\"v0:2\"]"));
        assert!(out.contains("v0 -- v3 [label=\"1\"]"));
    }
}
