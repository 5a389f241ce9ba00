//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3 internal
//! construction failure, 4 search budget exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::document::{to_dot, ColoringDocument};
use crate::oracle::{exact_src, SearchBudget};
use crate::planner::{color_in_input_order, plan_and_color, BoundsReport};
use crate::torus::TorusShape;
use crate::verifier::{is_strong_rainbow, is_strong_rainbow_with, VerifyOptions};
use crate::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "torus-rainbow",
    version,
    about = "Strong rainbow colorings of toroidal meshes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the diameter lower bound and the old and new upper bounds.
    Bounds {
        /// Cycle lengths, comma separated (e.g. 8,7,5).
        dims: String,
        #[arg(long)]
        json: bool,
    },
    /// Build, verify and save a coloring meeting the new upper bound.
    Color {
        dims: String,
        /// Output file; the document goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Permute axes back into the order given on the command line.
        #[arg(long)]
        input_order: bool,
    },
    /// Check a coloring document for the strong rainbow property.
    Verify {
        path: PathBuf,
        /// Print sample rainbow geodesics.
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact strong rainbow connection number by exhaustive search.
    Exact {
        dims: String,
        #[arg(long, default_value_t = 18)]
        budget_edges: usize,
        #[arg(long, default_value_t = 5)]
        budget_colors: usize,
        /// Where to write the witness coloring.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show a toroidal mesh whose strong rainbow connection number is below
    /// the sum of ceil(n_k/2).
    Counterexample {
        #[arg(long, default_value = "4,3")]
        dims: String,
    },
    /// Export a coloring document as a Graphviz graph.
    ExportDot {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn parse_dims(text: &str) -> crate::Result<Vec<usize>> {
    let dims = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::ShapeMismatch(format!("cannot parse dims {text:?}: {e}")))?;
    TorusShape::new(&dims)?;
    Ok(dims)
}

fn box_product(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(|n| format!("C_{n}")).collect();
    parts.join("□")
}

fn join(dims: &[usize], sep: &str) -> String {
    let parts: Vec<String> = dims.iter().map(|n| n.to_string()).collect();
    parts.join(sep)
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

macro_rules! say {
    ($w:expr, $($arg:tt)*) => { let _ = writeln!($w, $($arg)*); };
}

/// Runs one command, writing normal output to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err };
    match cli.command {
        Command::Bounds { dims, json } => cmd_bounds(&mut io, &dims, json),
        Command::Color { dims, out, input_order } => cmd_color(&mut io, &dims, out.as_deref(), input_order),
        Command::Verify { path, witnesses } => cmd_verify(&mut io, &path, witnesses),
        Command::Exact {
            dims,
            budget_edges,
            budget_colors,
            out,
        } => {
            let budget = SearchBudget {
                max_edges: budget_edges,
                max_colors: budget_colors,
                max_nodes: None,
            };
            cmd_exact(&mut io, &dims, &budget, out.as_deref())
        }
        Command::Counterexample { dims } => cmd_counterexample(&mut io, &dims),
        Command::ExportDot { path, out } => cmd_export_dot(&mut io, &path, out.as_deref()),
    }
}

fn dims_or_exit(io: &mut Io, text: &str) -> Result<Vec<usize>, i32> {
    parse_dims(text).map_err(|e| {
        say!(io.err, "error: {e}");
        EXIT_INPUT
    })
}

fn load(io: &mut Io, path: &Path) -> Result<(ColoringDocument, crate::Coloring), i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        say!(io.err, "error: cannot read {}: {e}", path.display());
        EXIT_INPUT
    })?;
    let doc = ColoringDocument::parse(&text).map_err(|e| {
        say!(io.err, "error: {}: {e}", path.display());
        EXIT_INPUT
    })?;
    let coloring = doc.to_coloring().map_err(|e| {
        say!(io.err, "error: {}: {e}", path.display());
        EXIT_INPUT
    })?;
    Ok((doc, coloring))
}

fn write_or_print(io: &mut Io, path: Option<&Path>, text: &str) -> Result<(), i32> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| {
            say!(io.err, "error: cannot write {}: {e}", p.display());
            EXIT_INPUT
        }),
        None => {
            let _ = io.out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn exit_of(r: Result<i32, i32>) -> i32 {
    r.unwrap_or_else(|code| code)
}

#[derive(Serialize)]
struct BoundsJson {
    dims: Vec<usize>,
    mu: usize,
    diameter_lower: usize,
    old_upper: usize,
    new_upper: usize,
}

fn cmd_bounds(io: &mut Io, dims: &str, json: bool) -> i32 {
    exit_of((|| {
        let dims = dims_or_exit(io, dims)?;
        let r = BoundsReport::for_dims(&dims).map_err(|_| EXIT_INPUT)?;
        if json {
            let j = BoundsJson {
                dims: r.dims,
                mu: r.mu,
                diameter_lower: r.diameter_lower,
                old_upper: r.old_upper,
                new_upper: r.new_upper,
            };
            say!(io.out, "{}", serde_json::to_string(&j).expect("bounds serialize"));
        } else {
            say!(io.out, "graph: {}", box_product(&dims));
            say!(io.out, "mu (even cycles): {}", r.mu);
            say!(io.out, "lower bound (diameter): {}", r.diameter_lower);
            say!(io.out, "old upper bound: {}", r.old_upper);
            say!(io.out, "new upper bound: {}", r.new_upper);
        }
        Ok(EXIT_PASS)
    })())
}

fn cmd_color(io: &mut Io, dims: &str, out: Option<&Path>, input_order: bool) -> i32 {
    exit_of((|| {
        let dims = dims_or_exit(io, dims)?;
        let built = if input_order {
            color_in_input_order(&dims)
        } else {
            plan_and_color(&dims)
        };
        let (plan, coloring, report) = built.map_err(|e| {
            say!(io.err, "error: construction failed: {e}");
            EXIT_INTERNAL
        })?;
        let check = is_strong_rainbow(&coloring);
        if !check.pass {
            say!(
                io.err,
                "error: constructed coloring failed verification on {} pairs",
                check.failing_pairs.len()
            );
            return Err(EXIT_INTERNAL);
        }
        let provenance = format!(
            "torus-rainbow {} planner for {}; axis_order {:?}",
            env!("CARGO_PKG_VERSION"),
            box_product(&dims),
            report.axis_order
        );
        let summary = plan.summary();
        let doc = ColoringDocument::from_coloring(&coloring, Some(plan), Some(provenance));
        write_or_print(io, out, &doc.emit())?;
        let log: &mut dyn Write = if out.is_some() { &mut *io.out } else { &mut *io.err };
        say!(
            log,
            "K = {} (new upper bound {}, lower bound {})",
            coloring.palette_size(),
            report.new_upper,
            report.diameter_lower
        );
        say!(log, "plan: {summary}");
        say!(
            log,
            "axes: {} (axis_order {:?})",
            box_product(coloring.shape().dims()),
            report.axis_order
        );
        say!(log, "verified: {} pairs", check.pairs_checked);
        Ok(EXIT_PASS)
    })())
}

fn cmd_verify(io: &mut Io, path: &Path, witnesses: bool) -> i32 {
    exit_of((|| {
        let (_, coloring) = load(io, path)?;
        let opts = VerifyOptions::default();
        let r = is_strong_rainbow_with(&coloring, &opts);
        if r.pass {
            say!(
                io.out,
                "PASS: strong rainbow {}-coloring of {} ({} pairs)",
                r.palette_size,
                box_product(&r.dims),
                r.pairs_checked
            );
        } else {
            say!(
                io.out,
                "FAIL: {} of {} pairs have no rainbow geodesic",
                r.failing_pairs.len(),
                r.pairs_checked
            );
            for (u, v) in &r.failing_pairs {
                say!(io.out, "  {u} -- {v}");
            }
        }
        if witnesses {
            for w in &r.witnesses {
                let path: Vec<String> = w.path.iter().map(|x| x.to_string()).collect();
                say!(io.out, "  witness {} -> {}: {}", w.u, w.v, path.join(" "));
            }
        }
        Ok(if r.pass { EXIT_PASS } else { EXIT_FAIL })
    })())
}

fn cmd_exact(io: &mut Io, dims: &str, budget: &SearchBudget, out: Option<&Path>) -> i32 {
    exit_of((|| {
        let dims = dims_or_exit(io, dims)?;
        let shape = TorusShape::new(&dims).map_err(|_| EXIT_INPUT)?;
        let (k, witness) = exact_src(&shape, budget).map_err(|e| {
            say!(io.err, "error: {e}");
            match e {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                _ => EXIT_INTERNAL,
            }
        })?;
        let path = out
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from(format!("src-{}.json", join(&dims, "x"))));
        let doc = ColoringDocument::from_coloring(
            &witness,
            None,
            Some(format!("exhaustive search, src({}) = {k}", box_product(&dims))),
        );
        write_or_print(io, Some(&path), &doc.emit())?;
        say!(io.out, "src({}) = {k}", box_product(&dims));
        say!(io.out, "witness: {}", path.display());
        Ok(EXIT_PASS)
    })())
}

fn cmd_counterexample(io: &mut Io, dims: &str) -> i32 {
    exit_of((|| {
        let dims = dims_or_exit(io, dims)?;
        let (plan, coloring, report) = plan_and_color(&dims).map_err(|e| {
            say!(io.err, "error: construction failed: {e}");
            EXIT_INTERNAL
        })?;
        let check = is_strong_rainbow(&coloring);
        if !check.pass {
            say!(io.err, "error: constructed coloring failed verification");
            return Err(EXIT_INTERNAL);
        }
        let name = box_product(&dims);
        let groups: Vec<String> = dims.iter().map(|n| format!("Z_{n}")).collect();
        let k = coloring.palette_size();
        let conjectured = report.old_upper;
        say!(
            io.out,
            "{name} is the Cayley graph of {} with its standard generators.",
            groups.join(" x ")
        );
        say!(io.out, "conjectured value sum ceil(|a|/2): {conjectured}");
        say!(io.out, "diameter lower bound: {}", report.diameter_lower);
        say!(
            io.out,
            "verified strong rainbow {k}-coloring ({} pairs), plan {}",
            check.pairs_checked,
            plan.summary()
        );
        let relation = if k == report.diameter_lower { "=" } else { "<=" };
        if k < conjectured {
            say!(io.out, "src({name}) {relation} {k} < {conjectured}");
        } else {
            say!(
                io.out,
                "no gap: src({name}) {relation} {k} = {conjectured} (mu = {}, r = {})",
                report.mu,
                dims.len()
            );
        }
        Ok(EXIT_PASS)
    })())
}

fn cmd_export_dot(io: &mut Io, path: &Path, out: Option<&Path>) -> i32 {
    exit_of((|| {
        let (_, coloring) = load(io, path)?;
        write_or_print(io, out, &to_dot(&coloring))?;
        Ok(EXIT_PASS)
    })())
}

/// Runs a command from an argument list, capturing stdout and stderr.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, &mut out, &mut err),
        Err(e) => {
            let _ = write!(err, "{e}");
            e.exit_code()
        }
    };
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
