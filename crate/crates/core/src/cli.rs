//! The `clifgeom` command line.
//!
//! Exit codes: `0` every check passed, `1` a violation or counterexample was
//! found, `2` bad input or usage, `3` a resource guard was exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::clifford::BladeIndex;
use crate::error::Error;
use crate::gf2::{enumerate_subspaces, DEFAULT_ENUMERATION_GUARD};
use crate::io::{
    export_dot, export_tikz, parse_incidence, to_canonical_json, CheckReport, IncidenceDocument,
    META_CENTER, META_TRIANGLE, META_TRIANGLE_PRIME,
};
use crate::pauli::{
    label_blade_as_pauli, span_rank, two_irreps_distinct, verify_clifford_relations,
    verify_representation_hom, DEFAULT_HOM_SAMPLES, DEFAULT_RANK_GUARD, DEFAULT_REP_GUARD,
};
use crate::projgeom::{
    blade_geometry_isomorphism, build_pg, check_axioms, desargues_check, desargues_exhaustive,
    is_projective_subspace, lie_closure_check, pg_counts, AxiomIiMode, AxiomOptions,
    DesarguesConfig, DesarguesOutcome, Geometry, DEFAULT_LINE_GUARD, DEFAULT_POINT_GUARD,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "clifgeom",
    version,
    about = "Projective geometries PG(m-1, 2) from Clifford algebra units, checked exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of Clifford generators.
    #[arg(long, global = true)]
    m: Option<u32>,

    /// Incidence document (JSON) to read instead of generating PG(m-1, 2).
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    /// Write the JSON report (or the export) to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Override the command's size bound, in generators.
    #[arg(long, global = true)]
    guard: Option<u32>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for exhaustive checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
    Tikz,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build PG(m-1, 2) and print its size.
    Pg {
        /// Only print point and line counts.
        #[arg(long)]
        counts: bool,
    },
    /// Check projective axioms (i)-(iii).
    Axioms {
        /// Quadruples sampled for axiom (ii) above 31 points.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Check axiom (ii) on every quadruple regardless of size.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check one Desargues configuration, or search them all.
    Desargues {
        /// Centre of perspective, e.g. `1,2` (blade generators) or a point name.
        #[arg(long)]
        center: Option<String>,
        /// First triangle, three points separated by `;`.
        #[arg(long)]
        triangle: Option<String>,
        /// Second triangle, corresponding vertices in the same order.
        #[arg(long)]
        triangle_prime: Option<String>,
    },
    /// Check that blade sets span Lie algebras under the commutator.
    LieCheck {
        /// Explicit blade set, e.g. `1;2;1,2` (with --m).
        #[arg(long)]
        blades: Option<String>,
    },
    /// Check that the blade geometry is isomorphic to PG(m-1, 2).
    IsoCheck,
    /// Verify the Jordan–Wigner representation facts.
    RepVerify {
        /// Random pairs for the homomorphism check above m = 7.
        #[arg(long, default_value_t = DEFAULT_HOM_SAMPLES)]
        samples: u64,
    },
    /// Print phase-free Pauli labels of blades in Cl_3 ⊗ ... ⊗ Cl_3.
    Label {
        /// Number of Cl_3 factors (defaults to m / 3).
        #[arg(long)]
        n: Option<u32>,
        /// Blade generators, e.g. `1,4`.
        #[arg(long)]
        blade: Option<String>,
    },
    /// Export a geometry as DOT, canonical JSON or TikZ.
    Export {
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
    },
}

/// A failure that ends the run with a specific exit code.
struct Exit {
    code: i32,
    message: String,
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit {
            code: if e.is_guard() { EXIT_GUARD } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Exit>;

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return if code == 0 { EXIT_PASS } else { EXIT_INPUT };
        }
    };
    // Output is buffered so the run can move onto a sized worker pool.
    let mut buf = Vec::new();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| run(&cli, &mut buf)),
            Err(e) => Err(usage(format!("cannot start {jobs} workers: {e}"))),
        },
        None => run(&cli, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn read_document(path: &Path) -> CliResult<IncidenceDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_incidence(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn require_m(cli: &Cli) -> CliResult<u32> {
    cli.m.ok_or_else(|| usage("this command needs --m or --file"))
}

/// The geometry named by `--file`, or `PG(m-1, 2)`.
fn load_geometry(cli: &Cli, line_guard: u32) -> CliResult<(Geometry, Option<IncidenceDocument>)> {
    if let Some(path) = &cli.file {
        let doc = read_document(path)?;
        return Ok((doc.to_geometry()?, Some(doc)));
    }
    let m = require_m(cli)?;
    Ok((build_pg(m, line_guard)?, None))
}

fn label_of(g: &Geometry, p: usize) -> String {
    if let (Some(m), Some(b)) = (g.m(), g.blade(p)) {
        if m % 3 == 0 && m > 0 {
            if let Ok(l) = label_blade_as_pauli(b, m / 3) {
                return format!("{} [{}]", g.points()[p], l);
            }
        }
    }
    g.points()[p].to_string()
}

fn finish(cli: &Cli, report: &CheckReport, out: &mut dyn Write) -> CliResult<i32> {
    write!(out, "{}", report.render_text())?;
    if let Some(path) = &cli.out {
        std::fs::write(path, report.to_json())?;
    }
    Ok(if report.passed { EXIT_PASS } else { EXIT_VIOLATION })
}

fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Pg { counts } => cmd_pg(cli, *counts, out),
        Command::Axioms {
            samples,
            exhaustive,
        } => cmd_axioms(cli, *samples, *exhaustive, out),
        Command::Desargues {
            center,
            triangle,
            triangle_prime,
        } => cmd_desargues(cli, center, triangle, triangle_prime, out),
        Command::LieCheck { blades } => cmd_lie(cli, blades.as_deref(), out),
        Command::IsoCheck => cmd_iso(cli, out),
        Command::RepVerify { samples } => cmd_rep(cli, *samples, out),
        Command::Label { n, blade } => cmd_label(cli, *n, blade.as_deref(), out),
        Command::Export { format } => cmd_export(cli, *format, out),
    }
}

fn cmd_pg(cli: &Cli, counts: bool, out: &mut dyn Write) -> CliResult<i32> {
    if counts && cli.file.is_none() {
        let m = require_m(cli)?;
        let (points, lines) = pg_counts(m, cli.guard.unwrap_or(DEFAULT_POINT_GUARD))?;
        writeln!(out, "points={points} lines={lines}")?;
        // Lines through the point e_1: one per unordered pair {b, e_1 xor b}.
        let degree = (points - 1) / 2;
        writeln!(out, "lines_per_point={degree}")?;
        return Ok(EXIT_PASS);
    }
    let (g, _) = load_geometry(cli, cli.guard.unwrap_or(DEFAULT_LINE_GUARD))?;
    writeln!(out, "points={} lines={}", g.num_points(), g.num_lines())?;
    let degrees: std::collections::BTreeSet<usize> =
        (0..g.num_points()).map(|p| g.lines_through(p).len()).collect();
    let degrees: Vec<String> = degrees.iter().map(usize::to_string).collect();
    writeln!(out, "lines_per_point={}", degrees.join(","))?;
    if !counts {
        for line in g.lines() {
            let names: Vec<String> = line.iter().map(|&p| label_of(&g, p)).collect();
            writeln!(out, "{{{}}}", names.join(", "))?;
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_axioms(cli: &Cli, samples: u64, exhaustive: bool, out: &mut dyn Write) -> CliResult<i32> {
    let (g, _) = load_geometry(cli, cli.guard.unwrap_or(DEFAULT_LINE_GUARD))?;
    let mode = if exhaustive {
        AxiomIiMode::Exhaustive
    } else {
        AxiomIiMode::auto(g.num_points(), samples, cli.seed)
    };
    let r = check_axioms(&g, AxiomOptions { axiom_ii: mode });
    let mut report = CheckReport::new("axioms");
    let describe = |c: &crate::projgeom::CheckOutcome, unit: &str| {
        let mut s = format!("{} {unit} checked, {} violations", c.checked, c.violations);
        if let Some(w) = c.witnesses.first() {
            let names: Vec<String> = match unit {
                "lines" => w.iter().map(|&j| format!("line {j}")).collect(),
                _ => w.iter().map(|&p| label_of(&g, p)).collect(),
            };
            s.push_str(&format!("; first witness: {}", names.join(", ")));
        }
        s
    };
    report.push("axiom (i) unique line", r.axiom_i.passed, describe(&r.axiom_i, "pairs"), &r.axiom_i);
    let mode_note = match mode {
        AxiomIiMode::Exhaustive => "exhaustive".to_string(),
        AxiomIiMode::Sampled { samples, seed } => format!("sampled {samples}, seed {seed}"),
    };
    report.push(
        "axiom (ii) quadrilateral",
        r.axiom_ii.passed,
        format!("{} ({mode_note})", describe(&r.axiom_ii, "quadruples")),
        json!({ "outcome": &r.axiom_ii, "mode": mode }),
    );
    report.push("axiom (iii) three points per line", r.axiom_iii.passed, describe(&r.axiom_iii, "lines"), &r.axiom_iii);
    finish(cli, &report, out)
}

fn split_triangle(text: &str) -> CliResult<[&str; 3]> {
    let parts: Vec<&str> = text.split(';').collect();
    parts
        .try_into()
        .map_err(|_| usage(format!("triangle {text:?} must list three points separated by ';'")))
}

fn cmd_desargues(
    cli: &Cli,
    center: &Option<String>,
    triangle: &Option<String>,
    triangle_prime: &Option<String>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let guard_m = cli.guard.unwrap_or(6);
    let (g, doc) = load_geometry(cli, guard_m.min(DEFAULT_LINE_GUARD))?;
    let doc = doc.unwrap_or_else(|| IncidenceDocument::from_geometry(&g));
    let pick = |flag: &Option<String>, key: &str| {
        flag.clone().or_else(|| doc.metadata.get(key).cloned())
    };
    let given = (
        pick(center, META_CENTER),
        pick(triangle, META_TRIANGLE),
        pick(triangle_prime, META_TRIANGLE_PRIME),
    );
    let mut report = CheckReport::new("desargues");
    match given {
        (Some(c), Some(t), Some(tp)) => {
            let resolve = |s: &str| doc.resolve_point(s).map_err(Exit::from);
            let tri = |s: &str| -> CliResult<[usize; 3]> {
                let [a, b, c] = split_triangle(s)?;
                Ok([resolve(a)?, resolve(b)?, resolve(c)?])
            };
            let cfg = DesarguesConfig {
                center: resolve(&c)?,
                triangle: tri(&t)?,
                perspective: tri(&tp)?,
            };
            match desargues_check(&g, &cfg)? {
                DesarguesOutcome::Axis(axis) => {
                    let names = [axis.f, axis.g, axis.h].map(|p| label_of(&g, p));
                    report.push(
                        "desargues axis",
                        true,
                        format!("F = {}, G = {}, H = {} on line {}", names[0], names[1], names[2], axis.line),
                        json!({ "config": cfg, "axis": axis, "labels": names }),
                    );
                }
                DesarguesOutcome::Failure(f) => {
                    report.push("desargues axis", false, f.reason.clone(), &f);
                }
            }
        }
        (None, None, None) => {
            let limit = if guard_m >= 63 { usize::MAX } else { (1usize << guard_m) - 1 };
            let r = desargues_exhaustive(&g, limit)?;
            report.push(
                "desargues exhaustive",
                r.passed,
                format!(
                    "{} configurations tested, {} degenerate skipped, {} counterexamples",
                    r.tested, r.degenerate_skipped, r.failures
                ),
                &r,
            );
        }
        _ => return Err(usage("--center, --triangle and --triangle-prime go together")),
    }
    finish(cli, &report, out)
}

fn parse_blade_list(text: &str, m: u32) -> CliResult<Vec<BladeIndex>> {
    text.split(';')
        .map(|part| {
            let gens = part
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| usage(format!("bad blade {part:?}")))?;
            Ok(BladeIndex::from_generators(&gens, m)?)
        })
        .collect()
}

fn cmd_lie(cli: &Cli, blades: Option<&str>, out: &mut dyn Write) -> CliResult<i32> {
    let mut report = CheckReport::new("lie-check");
    if let Some(path) = &cli.file {
        let doc = read_document(path)?;
        let g = doc.to_geometry()?;
        let m = g.m().ok_or_else(|| usage("lie-check needs blade-subset points"))?;
        let xs: Vec<BladeIndex> = (0..g.num_points())
            .map(|p| g.blade(p).ok_or_else(|| usage("lie-check needs blade-subset points")))
            .collect::<CliResult<_>>()?;
        let r = lie_closure_check(&xs, m)?;
        report.push(
            "lie closure",
            r.passed,
            format!("{} pairs, {} nonzero brackets", r.pairs_checked, r.nonzero_brackets),
            &r,
        );
        return finish(cli, &report, out);
    }
    let m = require_m(cli)?;
    if let Some(text) = blades {
        let r = lie_closure_check(&parse_blade_list(text, m)?, m)?;
        let summary = match r.violation {
            Some((s, t)) => format!("bracket of {:#b} and {:#b} leaves the span", s, t),
            None => format!("{} pairs, {} nonzero brackets", r.pairs_checked, r.nonzero_brackets),
        };
        report.push("lie closure", r.passed, summary, &r);
        return finish(cli, &report, out);
    }
    let guard = cli.guard.unwrap_or(DEFAULT_ENUMERATION_GUARD);
    if m == 0 {
        return Err(usage("--m must be at least 1"));
    }
    let g = build_pg(m, guard.min(DEFAULT_LINE_GUARD))?;
    for k in 1..=m {
        let subspaces = enumerate_subspaces(m, k, guard)?;
        let mut failures = Vec::new();
        for u in &subspaces {
            let idx: Vec<usize> = u.nonzero_elements().map(|v| (v.bits() - 1) as usize).collect();
            let xs: Vec<BladeIndex> = u
                .nonzero_elements()
                .map(|v| BladeIndex::new(v.bits(), m))
                .collect::<crate::error::Result<_>>()?;
            let closed = lie_closure_check(&xs, m)?.passed;
            if !closed || !is_projective_subspace(&idx, &g) {
                failures.push(u.basis().map(|v| v.bits()).collect::<Vec<_>>());
            }
        }
        report.push(
            format!("subspaces of dimension {k}"),
            failures.is_empty(),
            format!("{} subspaces, {} exceptions", subspaces.len(), failures.len()),
            json!({ "count": subspaces.len(), "failures": failures }),
        );
    }
    finish(cli, &report, out)
}

fn cmd_iso(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let m = require_m(cli)?;
    let r = blade_geometry_isomorphism(m, cli.guard.unwrap_or(DEFAULT_LINE_GUARD))?;
    let mut report = CheckReport::new("iso-check");
    report.push(
        "blade geometry ≅ PG",
        r.holds,
        format!(
            "{} ↔ {} points, {} ↔ {} lines{}",
            r.blade_points,
            r.pg_points,
            r.blade_lines,
            r.pg_lines,
            r.problem.as_deref().map(|p| format!("; {p}")).unwrap_or_default()
        ),
        json!({
            "holds": r.holds,
            "blade_points": r.blade_points,
            "blade_lines": r.blade_lines,
            "pg_points": r.pg_points,
            "pg_lines": r.pg_lines,
            "problem": r.problem,
        }),
    );
    finish(cli, &report, out)
}

fn cmd_rep(cli: &Cli, samples: u64, out: &mut dyn Write) -> CliResult<i32> {
    let m = require_m(cli)?;
    if m == 0 {
        return Err(usage("--m must be at least 1"));
    }
    let rep_guard = cli.guard.unwrap_or(DEFAULT_REP_GUARD);
    let rank_guard = cli.guard.unwrap_or(DEFAULT_RANK_GUARD);
    let mut report = CheckReport::new("rep-verify");

    let ok = verify_clifford_relations(m, rep_guard)?;
    report.push(
        "clifford relations",
        ok,
        format!("{} relations, dimension {}", m * (m + 1) / 2, 1u64 << (m / 2)),
        ok,
    );
    let h = verify_representation_hom(m, samples, cli.seed, rep_guard)?;
    report.push(
        "homomorphism",
        h.passed,
        format!(
            "{} pairs ({})",
            h.pairs_checked,
            if h.exhaustive { "exhaustive".to_string() } else { format!("sampled, seed {}", cli.seed) }
        ),
        &h,
    );
    if m % 2 == 1 && m <= rank_guard {
        let rank = span_rank(m, rank_guard)?;
        let want = 1usize << (m - 1);
        report.push(
            "span rank",
            rank == want,
            format!("rank {rank}, full matrix algebra {want}"),
            json!({ "rank": rank, "expected": want }),
        );
        let irr = two_irreps_distinct(m, rank_guard)?;
        report.push(
            "two inequivalent irreps",
            irr.holds,
            format!(
                "top blade ↦ {}·I and {}·I",
                irr.lambda.as_deref().unwrap_or("?"),
                irr.lambda_negated.as_deref().unwrap_or("?")
            ),
            &irr,
        );
    }
    finish(cli, &report, out)
}

fn cmd_label(cli: &Cli, n: Option<u32>, blade: Option<&str>, out: &mut dyn Write) -> CliResult<i32> {
    if let Some(path) = &cli.file {
        let doc = read_document(path)?;
        let g = doc.to_geometry()?;
        for p in 0..g.num_points() {
            writeln!(out, "{}", label_of(&g, p))?;
        }
        return Ok(EXIT_PASS);
    }
    let n = match (n, cli.m) {
        (Some(n), _) => n,
        (None, Some(m)) if m % 3 == 0 => m / 3,
        _ => return Err(usage("label needs --n, or --m divisible by 3")),
    };
    let m = 3 * n;
    match blade {
        Some(text) => {
            for b in parse_blade_list(text, m)? {
                writeln!(out, "{}", label_blade_as_pauli(b, n)?)?;
            }
        }
        None => {
            for b in BladeIndex::all(m)?.filter(|b| !b.is_identity()) {
                writeln!(out, "{b}\t{}", label_blade_as_pauli(b, n)?)?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_export(cli: &Cli, format: ExportFormat, out: &mut dyn Write) -> CliResult<i32> {
    let (g, doc) = load_geometry(cli, cli.guard.unwrap_or(DEFAULT_LINE_GUARD))?;
    let text = match format {
        ExportFormat::Dot => export_dot(&g),
        ExportFormat::Tikz => export_tikz(&g),
        ExportFormat::Json => {
            to_canonical_json(&doc.unwrap_or_else(|| IncidenceDocument::from_geometry(&g)))
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_PASS)
}
