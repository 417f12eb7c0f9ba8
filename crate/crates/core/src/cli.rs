//! Command-line surface. Exit codes: 0 success, 1 false verdict or corpus
//! mismatch, 2 parse error, 3 hypothesis violation, 4 oracle did not
//! stabilize.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{full_report, BoundsReport, ReportOptions};
use crate::corpus::{bless, corpus, run_corpus, EXPECTED_PATH};
use crate::curves::analyze_curve;
use crate::error::Error;
use crate::groebner::oracle::oracle_colength;
use crate::input::InputDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_NOT_STABILIZED: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "leafbound", about = "Singularity invariants of plane curves and checks of leaf-degree bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Curve invariants: d, reducedness, irreducibility, τ, u, σ, ρ, clusters.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full report with every bound verdict.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Gröbner-free oracles.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    List {
        #[arg(long)]
        filter: Option<String>,
    },
    Run {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Recompute and rewrite the frozen expected values.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleAction {
    /// Colength of the `ideal` line, or of the chart Tjurina ideal of the curve.
    Colength {
        file: PathBuf,
        #[arg(long)]
        bound: u32,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Input(_)
        | Error::InvalidField(_)
        | Error::Unrepresentable(_)
        | Error::UnknownVariable(_) => EXIT_PARSE,
        Error::NotReduced | Error::CharDividesDegree(..) | Error::CharNotZero => EXIT_HYPOTHESIS,
        Error::NotStabilized(_) | Error::NotZeroDimensional => EXIT_NOT_STABILIZED,
        _ => EXIT_FALSE,
    }
}

fn load(path: &Path) -> Result<InputDocument, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    InputDocument::parse(&text)
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Internal(format!("write failed: {e}"));
    match command {
        Command::Analyze { file, seed, format } => {
            let doc = load(&file)?;
            let curve = doc.curve.ok_or_else(|| Error::Input("analyze needs a curve".into()))?;
            let inv = analyze_curve(&curve, seed)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&inv).expect("serializes")).map_err(io)?,
                Format::Text => {
                    writeln!(out, "curve          {curve}").map_err(io)?;
                    writeln!(out, "field          {}", doc.field).map_err(io)?;
                    writeln!(out, "d              {}", inv.d).map_err(io)?;
                    writeln!(out, "reduced        {}", inv.reduced).map_err(io)?;
                    writeln!(out, "irreducibility {}", inv.irreducibility).map_err(io)?;
                    writeln!(out, "tau            {}", inv.tau).map_err(io)?;
                    let u = inv.u.map_or("n/a".to_string(), |u| u.to_string());
                    writeln!(out, "u              {u}").map_err(io)?;
                    writeln!(out, "sigma          {}", inv.sigma).map_err(io)?;
                    writeln!(out, "rho            {}", inv.rho).map_err(io)?;
                    writeln!(out, "clusters       {}", inv.clusters.len()).map_err(io)?;
                    for k in &inv.clusters {
                        let qh = k.quasi_homogeneous.map_or("n/a".to_string(), |b| b.to_string());
                        writeln!(
                            out,
                            "  {}  points={} tjurina={} polar={} milnor={} quasi_homogeneous={qh}",
                            k.eliminant_factor, k.point_count, k.tjurina_length, k.polar_length, k.milnor_length
                        )
                        .map_err(io)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, seed, format } => {
            let doc = load(&file)?;
            let opts = ReportOptions { seed, foliation: doc.foliation.clone() };
            let report = full_report(doc.curve.as_ref(), doc.field, &opts);
            match format {
                Format::Json => writeln!(out, "{}", report.to_json()).map_err(io)?,
                Format::Text => write_report_text(&report, out).map_err(io)?,
            }
            if report.errors.iter().any(|e| e.stage == "curve") {
                return Ok(EXIT_HYPOTHESIS);
            }
            Ok(if report.violations().is_empty() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Corpus { action: CorpusAction::List { filter } } => {
            let entries: Vec<_> = corpus().into_iter().filter(|e| e.matches(filter.as_deref())).collect();
            writeln!(out, "{} entries", entries.len()).map_err(io)?;
            for e in entries {
                writeln!(out, "{:<32} {}", e.name, e.tags.join(",")).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Corpus { action: CorpusAction::Run { filter, seed, format, bless: do_bless } } => {
            if do_bless {
                let table = bless(seed)?;
                std::fs::write(EXPECTED_PATH, table).map_err(|e| Error::Internal(format!("{EXPECTED_PATH}: {e}")))?;
                writeln!(out, "wrote {EXPECTED_PATH}").map_err(io)?;
                return Ok(EXIT_OK);
            }
            let outcomes = run_corpus(filter.as_deref(), seed);
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcomes).expect("serializes")).map_err(io)?,
                Format::Text => {
                    for o in &outcomes {
                        let checks: Vec<String> = o
                            .checks
                            .iter()
                            .map(|c| {
                                let found = c.found.map_or("-".to_string(), |f| f.to_string());
                                let mark = if c.ok { "" } else { "!" };
                                format!("{mark}{}={found}", c.key)
                            })
                            .collect();
                        let status = if o.passed { "pass" } else { "FAIL" };
                        writeln!(out, "{status} {:<32} {}", o.name, checks.join(" ")).map_err(io)?;
                        for v in &o.violations {
                            writeln!(out, "     false verdict {v}").map_err(io)?;
                        }
                        for p in &o.problems {
                            writeln!(out, "     {p}").map_err(io)?;
                        }
                    }
                    let failed = outcomes.iter().filter(|o| !o.passed).count();
                    writeln!(out, "{} entries, {failed} failed", outcomes.len()).map_err(io)?;
                }
            }
            Ok(if outcomes.iter().all(|o| o.passed) { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Oracle { action: OracleAction::Colength { file, bound } } => {
            let doc = load(&file)?;
            let n = oracle_colength(&doc.oracle_ideal()?, bound)?;
            writeln!(out, "{n}").map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_report_text(r: &BoundsReport, out: &mut dyn Write) -> std::io::Result<()> {
    let show = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
    if let Some(c) = &r.curve {
        writeln!(out, "curve {c} over {}", r.field)?;
    }
    let i = &r.invariants;
    writeln!(
        out,
        "d={} tau={} u={} sigma={} rho={}",
        show(i.d.map(u64::from)),
        show(i.tau),
        show(i.u),
        show(i.sigma.map(u64::from)),
        i.rho.map_or("-".to_string(), |r| r.to_string())
    )?;
    let f = &r.foliation;
    writeln!(
        out,
        "m_leaf={} m_factors={} hamilton_degree={}",
        show(f.m_leaf.map(u64::from)),
        show(f.m_factors.map(u64::from)),
        show(f.hamilton_degree.map(u64::from))
    )?;
    for v in &r.verdicts {
        match (&v.skipped, &v.lhs, &v.rhs) {
            (Some(why), _, _) => writeln!(out, "{:<6} skipped  {why}", v.id.as_str())?,
            (None, Some(l), Some(rh)) => {
                let status = if v.is_violation() { "FALSE" } else { "holds" };
                let eq = if v.equality == Some(true) { "  (equality)" } else { "" };
                writeln!(out, "{:<6} {status}    {l} vs {rh}{eq}    {}", v.id.as_str(), v.id.statement())?;
            }
            _ => {}
        }
    }
    for e in &r.errors {
        writeln!(out, "error in {}: {}", e.stage, e.error)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("leafbound").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    fn file(name: &str, text: &str) -> String {
        let dir = std::env::temp_dir().join(format!("leafbound-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn exit_codes() {
        let cone = file("cone.txt", "field Q\ncurve x^3*y - x*y^3\n");
        let (code, text) = call(&["analyze", &cone]);
        assert_eq!(code, 0);
        assert!(text.contains("tau            9"), "{text}");
        assert_eq!(call(&["verify", &cone]).0, 0);
        assert_eq!(call(&["verify", &file("bad.txt", "curve x^2 +\n")]).0, 2);
        assert_eq!(call(&["analyze", &file("double.txt", "curve x^2*y\n")]).0, 3);
        assert_eq!(call(&["verify", &file("double2.txt", "curve x^2*y\n")]).0, 3);
        assert_eq!(call(&["analyze", "/nonexistent/input"]).0, 2);
    }

    #[test]
    fn oracle_command() {
        let xy = file("xy.txt", "ideal x ; y\n");
        assert_eq!(call(&["oracle", "colength", &xy, "--bound", "3"]), (0, "1\n".into()));
        let x2y = file("x2y.txt", "ideal x^2 ; y\n");
        assert_eq!(call(&["oracle", "colength", &x2y, "--bound", "4"]).1, "2\n");
        let cone = file("cone-jac.txt", "ideal 3*x^2*y - y^3 ; x^3 - 3*x*y^2\n");
        assert_eq!(call(&["oracle", "colength", &cone, "--bound", "8"]).1, "9\n");
        let line = file("line.txt", "ideal x\n");
        assert_eq!(call(&["oracle", "colength", &line, "--bound", "6"]).0, 4);
    }
}
