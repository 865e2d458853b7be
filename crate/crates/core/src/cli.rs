//! Command-line front end. The `orbifold` binary is a thin wrapper over
//! [`run`].
//!
//! Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 internal
//! consistency failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{build_catalog, CatalogBounds};
use crate::classify::classify;
use crate::cover::{manifold_cover_search, CoverError, SearchOptions};
use crate::group::{abelianization, presentation_of_closed};
use crate::reduce::{reduce_to_closed, ReductionTrace};
use crate::signature::Signature;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "orbifold",
    version,
    about = "Classify finite-type 2-orbifolds exactly"
)]
struct Cli {
    /// Output format (default: text, json for catalog).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Good/bad, finiteness, order and geometry.
    Classify { sig: String },
    /// Orbifold Euler characteristic.
    Euler { sig: String },
    /// Presentation of the orbifold group of the reduced signature.
    Pi1 { sig: String },
    /// Abelianization of the orbifold group of the reduced signature.
    Abel { sig: String },
    /// Reduction trace to a closed orientable cone-only signature.
    Reduce { sig: String },
    /// Search for a finite manifold cover.
    Cover {
        sig: String,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long)]
        parallel: bool,
    },
    /// Classify every signature within bounds, as JSON Lines.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long, default_value_t = 0)]
    max_genus: u32,
    #[arg(long, default_value_t = 0)]
    max_cones: usize,
    /// Largest cone order (and corner order unless --max-corner-order is given).
    #[arg(long, default_value_t = 0)]
    max_order: u32,
    #[arg(long, default_value_t = 0)]
    max_boundary: usize,
    #[arg(long, default_value_t = 0)]
    max_corners: usize,
    #[arg(long)]
    max_corner_order: Option<u32>,
    #[arg(long, default_value_t = 0)]
    max_punctures: u32,
    #[arg(long)]
    orientable_only: bool,
    /// Write records here instead of stdout; the summary then goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CatalogArgs {
    fn bounds(&self) -> CatalogBounds {
        CatalogBounds {
            max_genus: self.max_genus,
            max_cones: self.max_cones,
            max_order: self.max_order,
            max_boundary: self.max_boundary,
            max_corners_per_circle: self.max_corners,
            max_corner_order: self.max_corner_order.unwrap_or(self.max_order),
            max_punctures: self.max_punctures,
            orientable_only: self.orientable_only,
        }
    }
}

enum Failure {
    Parse(String),
    Precondition(String),
    Inconsistent(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI with explicit arguments and streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Parse(m) => (EXIT_PARSE, m),
                Failure::Precondition(m) => (EXIT_PRECONDITION, m),
                Failure::Inconsistent(m) => (EXIT_INCONSISTENT, m),
                Failure::Io(e) => (1, format!("i/o error: {e}")),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse(text: &str) -> Result<Signature, Failure> {
    text.parse()
        .map_err(|e| Failure::Parse(format!("{text:?}: {e}")))
}

fn print_json(out: &mut dyn Write, value: &impl serde::Serialize) -> CmdResult {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    let text = format.unwrap_or(Format::Text) == Format::Text;
    match &cli.command {
        Command::Classify { sig } => {
            let c = classify(&parse(sig)?);
            let rec = c.record();
            if text {
                writeln!(out, "sig: {}", rec.sig)?;
                writeln!(out, "euler: {}", rec.euler)?;
                writeln!(out, "good: {}", rec.good)?;
                writeln!(out, "finite: {}", rec.finite)?;
                match rec.order {
                    Some(o) => writeln!(out, "order: {o}")?,
                    None => writeln!(out, "order: none")?,
                }
                writeln!(out, "geometry: {}", rec.geometry)?;
                writeln!(out, "reduced: {}", c.reduced)?;
            } else {
                print_json(out, &rec)?;
            }
        }
        Command::Euler { sig } => {
            let s = parse(sig)?;
            let chi = s.orbifold_euler();
            if text {
                writeln!(out, "{chi}")?;
            } else {
                print_json(
                    out,
                    &json!({"sig": s.to_string(), "euler": chi.to_string()}),
                )?;
            }
        }
        Command::Pi1 { sig } => {
            let trace = reduce_to_closed(&parse(sig)?);
            let reduced = trace.final_signature();
            let pres = presentation_of_closed(reduced)
                .map_err(|e| Failure::Precondition(e.to_string()))?;
            if text {
                write_trace_note(out, &trace)?;
                writeln!(out, "{pres}")?;
            } else {
                print_json(
                    out,
                    &json!({
                        "sig": reduced.to_string(),
                        "reduced_from": reduced_from(&trace),
                        "presentation": pres.to_string(),
                    }),
                )?;
            }
        }
        Command::Abel { sig } => {
            let trace = reduce_to_closed(&parse(sig)?);
            let reduced = trace.final_signature();
            let pres = presentation_of_closed(reduced)
                .map_err(|e| Failure::Precondition(e.to_string()))?;
            let ab = abelianization(&pres);
            if text {
                write_trace_note(out, &trace)?;
                writeln!(out, "{ab}")?;
            } else {
                print_json(
                    out,
                    &json!({
                        "sig": reduced.to_string(),
                        "reduced_from": reduced_from(&trace),
                        "free_rank": ab.free_rank,
                        "torsion": serde_json::to_value(&ab).expect("serializable")["torsion"],
                    }),
                )?;
            }
        }
        Command::Reduce { sig } => {
            let trace = reduce_to_closed(&parse(sig)?);
            if text {
                writeln!(
                    out,
                    "start {} euler {}",
                    trace.start,
                    trace.start.orbifold_euler()
                )?;
                for r in trace.records() {
                    writeln!(
                        out,
                        "{:?} ({:?}) -> {} euler {}",
                        r.step_kind, r.relationship, r.signature, r.euler
                    )?;
                }
            } else {
                print_json(out, &trace.records())?;
            }
        }
        Command::Cover {
            sig,
            max_degree,
            parallel,
        } => {
            let trace = reduce_to_closed(&parse(sig)?);
            let target = trace.final_signature();
            let opts = SearchOptions {
                max_degree: *max_degree,
                parallel: *parallel,
            };
            let result = manifold_cover_search(target, opts).map_err(|e| match e {
                CoverError::Unsound(_) => Failure::Inconsistent(e.to_string()),
                _ => Failure::Precondition(e.to_string()),
            })?;
            if text {
                write_trace_note(out, &trace)?;
                match &result.witness {
                    Some(w) => print_json(out, w)?,
                    None => {
                        let degrees: Vec<String> =
                            result.schedule.iter().map(usize::to_string).collect();
                        writeln!(out, "none")?;
                        writeln!(out, "degrees tried: [{}]", degrees.join(","))?;
                    }
                }
                if let Some(note) = &result.note {
                    writeln!(out, "note: {note}")?;
                }
            } else {
                print_json(
                    out,
                    &json!({
                        "target": target.to_string(),
                        "reduced_from": reduced_from(&trace),
                        "schedule": result.schedule,
                        "witness": result.witness,
                        "note": result.note,
                    }),
                )?;
            }
        }
        Command::Catalog(args) => {
            let catalog = build_catalog(&args.bounds());
            let json_lines = format.unwrap_or(Format::Json) == Format::Json;
            let write_records = |w: &mut dyn Write| -> io::Result<()> {
                if json_lines {
                    catalog.write_jsonl(w)
                } else {
                    for r in catalog.records() {
                        let order = r.order.map_or("none".to_string(), |o| o.to_string());
                        writeln!(
                            w,
                            "{} {} good={} finite={} order={} {}",
                            r.sig, r.euler, r.good, r.finite, order, r.geometry
                        )?;
                    }
                    Ok(())
                }
            };
            let s = catalog.summary;
            let summary = format!(
                "summary: total={} good={} bad={} finite={} infinite={}",
                s.total, s.good, s.bad, s.finite, s.infinite
            );
            match &args.out {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    write_records(&mut file)?;
                    file.flush()?;
                    writeln!(out, "{summary}")?;
                }
                None => {
                    write_records(out)?;
                    writeln!(err, "{summary}")?;
                }
            }
            if let Some((sig, msgs)) = catalog.violations.first() {
                return Err(Failure::Inconsistent(format!(
                    "theorem check failed for {sig}: {} ({} violating signatures)",
                    msgs.join("; "),
                    catalog.violations.len()
                )));
            }
        }
    }
    Ok(())
}

fn reduced_from(trace: &ReductionTrace) -> Option<String> {
    (!trace.steps.is_empty()).then(|| trace.start.to_string())
}

fn write_trace_note(out: &mut dyn Write, trace: &ReductionTrace) -> io::Result<()> {
    if trace.steps.is_empty() {
        return Ok(());
    }
    let kinds: Vec<String> = trace
        .steps
        .iter()
        .map(|s| format!("{:?}", s.kind))
        .collect();
    writeln!(
        out,
        "# reduced {} -> {} via {}",
        trace.start,
        trace.final_signature(),
        kinds.join(", ")
    )
}
