use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyfault::enumeration::{count, for_each_tiling, CountKind, Method, Mode};
use polyfault::fault::{analysis_json, survey_crossing_numbers};
use polyfault::generative::{construct_faultfree, construct_min_crossing};
use polyfault::grid::TilingDoc;
use polyfault::series::{evaluate, Family};
use polyfault::verify::{run_suite, Suite};
use polyfault::{Cell, Rect, Tiling, Tromino};
use serde_json::json;

/// Counting, analysis and construction of L-tromino tilings of rectangles.
#[derive(Parser)]
#[command(name = "polyfault", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count tilings of a rectangle.
    Count {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Only faultfree tromino tilings.
        #[arg(long, conflicts_with = "domino")]
        faultfree: bool,
        /// Count domino tilings instead.
        #[arg(long)]
        domino: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
        method: MethodArg,
    },
    /// Print tilings in canonical order, one JSON document per line.
    Enumerate {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        faultfree: bool,
        /// Stop after this many tilings.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Build a faultfree tiling.
    Construct {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Keep both crossing numbers at most 2 (needs both sides >= 10).
        #[arg(long)]
        min_crossing: bool,
    },
    /// Crossing profile, fault lines and crossing numbers of a tiling.
    Analyze {
        /// Tiling JSON file, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
    },
    /// One term of a counting sequence.
    Series {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        t: usize,
    },
    /// Run the acceptance checks.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Quick)]
        suite: SuiteArg,
    },
    /// Draw a tiling.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Smallest crossing numbers over all faultfree tilings of a rectangle.
    Survey {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dp,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {s:?}; expected one of {}", names.join(", "))
    })
}

/// A failed command: what kind of failure, the message, and the exit code.
struct Failure {
    kind: &'static str,
    message: String,
    code: u8,
}

impl Failure {
    fn usage(kind: &'static str, message: impl ToString) -> Self {
        Failure { kind, message: message.to_string(), code: 2 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(Failure::usage("argument", e.to_string().trim_end())),
    };
    if let Err(f) = configure_threads() {
        return report(f);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    let doc = json!({ "error": f.kind, "message": f.message });
    eprintln!("{doc}");
    ExitCode::from(f.code)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("POLYFAULT_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
        Failure::usage("environment", format!("POLYFAULT_THREADS must be an integer >= 1, got {value:?}"))
    })?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| Failure::usage("environment", e))
}

fn rect(rows: usize, cols: usize) -> Result<Rect, Failure> {
    Rect::new(rows, cols).map_err(|e| Failure::usage("argument", e))
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let io_err = |e: io::Error| Failure { kind: "io", message: e.to_string(), code: 1 };
    let mut code = ExitCode::SUCCESS;
    match command {
        Command::Count { rows, cols, faultfree, domino, method } => {
            let kind = match (domino, faultfree) {
                (true, _) => CountKind::AllDomino,
                (false, true) => CountKind::FaultfreeTromino,
                (false, false) => CountKind::AllTromino,
            };
            let method = match method {
                MethodArg::Dp => Method::Dp,
                MethodArg::Enumerate => Method::Enumerate,
            };
            writeln!(out, "{}", count(rect(rows, cols)?, kind, method).to_json()).map_err(io_err)?;
        }
        Command::Enumerate { rows, cols, faultfree, limit } => {
            let mode = if faultfree { Mode::Faultfree } else { Mode::All };
            let mut written = 0u64;
            let mut failed = None;
            if limit != Some(0) {
                for_each_tiling(rect(rows, cols)?, mode, |t| {
                    if let Err(e) = writeln!(out, "{}", t.to_json()) {
                        failed = Some(e);
                        return ControlFlow::Break(());
                    }
                    written += 1;
                    if limit.is_some_and(|l| written >= l) {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
            }
            if let Some(e) = failed {
                return Err(io_err(e));
            }
        }
        Command::Construct { rows, cols, min_crossing } => {
            let built = if min_crossing { construct_min_crossing(rows, cols) } else { construct_faultfree(rows, cols) };
            let t = built.map_err(|e| Failure::usage("construction", e))?;
            writeln!(out, "{}", t.to_json()).map_err(io_err)?;
        }
        Command::Analyze { input } => {
            let t = read_tiling(&input)?;
            writeln!(out, "{}", analysis_json(&t)).map_err(io_err)?;
        }
        Command::Series { family, t } => {
            let value = evaluate(family, t).map_err(|e| Failure::usage("series", e))?;
            writeln!(out, "{}", value.to_json()).map_err(io_err)?;
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Quick => Suite::Quick,
                SuiteArg::Full => Suite::Full,
            };
            let report = run_suite(suite);
            writeln!(out, "{}", report.to_json()).map_err(io_err)?;
            if !report.passed() {
                code = ExitCode::from(1);
            }
        }
        Command::Render { input, format } => {
            let t = read_tiling(&input)?;
            let picture = match format {
                Format::Ascii => render_ascii(&t),
                Format::Svg => render_svg(&t),
            };
            write!(out, "{picture}").map_err(io_err)?;
        }
        Command::Survey { rows, cols } => {
            let survey = survey_crossing_numbers(rect(rows, cols)?);
            let doc = serde_json::to_string(&survey).expect("surveys always serialize");
            writeln!(out, "{doc}").map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)?;
    Ok(code)
}

/// Reads a tiling document; pieces may come in any order.
fn read_tiling(path: &PathBuf) -> Result<Tiling, Failure> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    read.map_err(|e| Failure::usage("input", format!("{}: {e}", path.display())))?;
    let doc: TilingDoc = serde_json::from_str(&text).map_err(|e| Failure::usage("input", e))?;
    let rect = rect(doc.rows, doc.cols)?;
    let pieces = doc
        .pieces
        .iter()
        .map(|p| Ok(Tromino::new(Cell::new(p.r, p.c), p.missing.parse().map_err(|e| Failure::usage("input", e))?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    Tiling::from_unordered(rect, pieces).map_err(|e| Failure::usage("input", e))
}

const LABELS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

/// One label per piece in canonical order: single characters while they
/// last, otherwise fixed-width two-character codes separated by spaces.
fn render_ascii(t: &Tiling) -> String {
    let owners = t.owner_grid();
    let cols = t.rect().cols();
    let wide = t.pieces().len() > LABELS.len();
    let label = |i: usize| {
        if wide {
            let base = LABELS.len();
            format!("{}{}", LABELS[i / base % base] as char, LABELS[i % base] as char)
        } else {
            (LABELS[i] as char).to_string()
        }
    };
    let mut s = String::new();
    for row in owners.chunks(cols) {
        let cells: Vec<String> = row.iter().map(|&o| label(o)).collect();
        s.push_str(&cells.join(if wide { " " } else { "" }));
        s.push('\n');
    }
    s
}

const UNIT: usize = 24;
const FILLS: [&str; 4] = ["#f4a261", "#2a9d8f", "#e9c46a", "#8ab17d"];

/// Unit squares filled by missing corner, thin cell lines, thick outlines
/// around each piece.
fn render_svg(t: &Tiling) -> String {
    let (m, n) = (t.rect().rows(), t.rect().cols());
    let owners = t.owner_grid();
    let owner = |r: usize, c: usize| owners[r * n + c];
    let mut s = String::new();
    let (w, h) = (n * UNIT + 4, m * UNIT + 4);
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="-2 -2 {w} {h}">"#);
    for r in 0..m {
        for c in 0..n {
            let fill = FILLS[t.pieces()[owner(r, c)].missing.code() as usize];
            let _ = writeln!(
                s,
                r##"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="#ffffff" stroke-width="0.5"/>"##,
                c * UNIT,
                r * UNIT
            );
        }
    }
    let mut edge = |x1: usize, y1: usize, x2: usize, y2: usize| {
        let _ = writeln!(
            s,
            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#222222" stroke-width="2" stroke-linecap="square"/>"##
        );
    };
    for r in 0..m {
        for c in 0..n {
            let (x, y) = (c * UNIT, r * UNIT);
            if r == 0 || owner(r - 1, c) != owner(r, c) {
                edge(x, y, x + UNIT, y);
            }
            if c == 0 || owner(r, c - 1) != owner(r, c) {
                edge(x, y, x, y + UNIT);
            }
            if r + 1 == m {
                edge(x, y + UNIT, x + UNIT, y + UNIT);
            }
            if c + 1 == n {
                edge(x + UNIT, y, x + UNIT, y + UNIT);
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
