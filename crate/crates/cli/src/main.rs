//! Command line front end: root listings, rigid decompositions, batch
//! verification, and type A rank tooling.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
//! failure.

mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use report::{
    to_json, Checks, DecomposeReport, DiscrepancyEntry, RankRow, RanksReport, RootsReport,
    SuiteReport, Summand, VerifyReport,
};
use rigidq_core::engine::Engine;
use rigidq_core::linalg::{
    representation_from_text, representation_to_text, Field, PrimeField, Rationals,
    Representation,
};
use rigidq_core::quiver::parse_quiver;
use rigidq_core::typea::{
    build_rigid_rep, equioriented_multiplicities, path_ranks, single_sink_discrepancies,
    single_sink_multiplicities, verify_rank_criterion, SinkFormulaMode, TypeAQuiver,
};
use rigidq_core::{DimVec, MultiplicityFunction, Quiver};
use std::path::PathBuf;
use std::time::Instant;

const EXIT_USAGE: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_VERIFY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "rigidq",
    version,
    about = "Rigid representations of Dynkin quivers: decompositions, ranks, verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the positive roots of a quiver
    Roots {
        #[command(flatten)]
        src: QuiverSource,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Decompose the rigid representation of a dimension vector
    Decompose {
        #[command(flatten)]
        src: QuiverSource,
        /// Dimension vector as comma-separated integers
        #[arg(short = 'd', long = "dims", value_name = "INTS")]
        d: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Evaluate the single-sink closed formula in this reading
        /// instead of the general engine (type A, one sink only)
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Run the battery verification suites
    Verify {
        #[command(flatten)]
        src: OptionalQuiverSource,
        /// Sweep all dimension vectors with entry sum up to this bound
        #[arg(long, value_name = "N", default_value_t = 6)]
        max_total_dim: i64,
        /// Random dimension vectors per quiver in the sampled suites
        #[arg(long, value_name = "N", default_value_t = 25)]
        samples: usize,
        /// Random seed; falls back to RIGIDQ_SEED, then 0
        #[arg(long, value_name = "U64")]
        seed: Option<u64>,
        /// Field for rank computations: a prime, or Q for the rationals
        #[arg(long, value_name = "p|Q", default_value = "32003")]
        field: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Re-run a decompose JSON file and require byte-identical output
        #[arg(long, value_name = "FILE")]
        compare: Option<PathBuf>,
        /// Test hook: drop the clamp in the multiplicity formula
        #[arg(long)]
        inject_fault: bool,
    },
    /// Rank tuples and explicit rigid representations on type A quivers
    Typea {
        #[command(subcommand)]
        sub: TypeaCmd,
    },
}

#[derive(Subcommand)]
enum TypeaCmd {
    /// Print the rank targets for the rigid representation
    Ranks {
        #[command(flatten)]
        src: QuiverSource,
        #[arg(short = 'd', long = "dims", value_name = "INTS")]
        d: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, value_name = "p|Q", default_value = "32003")]
        field: String,
    },
    /// Write the rigid representation to a file
    Build {
        #[command(flatten)]
        src: QuiverSource,
        #[arg(short = 'd', long = "dims", value_name = "INTS")]
        d: String,
        /// Output file; stdout when omitted
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a representation file against the rank criterion
    Check {
        #[command(flatten)]
        src: QuiverSource,
        #[arg(short = 'd', long = "dims", value_name = "INTS")]
        d: String,
        /// Representation file (map blocks in path-edge order)
        rep: PathBuf,
        #[arg(long, value_name = "p|Q", default_value = "32003")]
        field: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct QuiverSource {
    /// Path to a quiver file (vertices/arrow lines)
    #[arg(long, value_name = "FILE")]
    quiver: Option<PathBuf>,
    /// Builtin descriptor such as A5, A4:><>, D6, E8
    #[arg(long, value_name = "DESC")]
    dynkin: Option<String>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalQuiverSource {
    /// Restrict verification to one quiver file
    #[arg(long, value_name = "FILE")]
    quiver: Option<PathBuf>,
    /// Restrict verification to one descriptor
    #[arg(long, value_name = "DESC")]
    dynkin: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Verbatim,
    Corrected,
}

enum CliError {
    Input(String),
    Verify(String),
}

impl From<rigidq_core::Error> for CliError {
    fn from(e: rigidq_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn load_source(quiver: &Option<PathBuf>, dynkin: &Option<String>) -> Result<(Quiver, String), CliError> {
    if let Some(path) = quiver {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let q = parse_quiver(&text)?;
        let echo = q.canonical_text();
        Ok((q, echo))
    } else {
        let desc = dynkin.as_ref().expect("clap group requires one source");
        Ok((parse_quiver(desc)?, desc.clone()))
    }
}

fn parse_dims(text: &str) -> Result<DimVec, CliError> {
    let entries: Result<Vec<i64>, _> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect();
    match entries {
        Ok(v) if !v.is_empty() => Ok(DimVec::new(v)),
        _ => Err(CliError::Input(format!(
            "cannot parse dimension vector {text:?}; expected comma-separated integers"
        ))),
    }
}

enum FieldChoice {
    Rational,
    Prime(u64),
}

fn parse_field(text: &str) -> Result<FieldChoice, CliError> {
    if text.eq_ignore_ascii_case("q") {
        return Ok(FieldChoice::Rational);
    }
    let p: u64 = text
        .parse()
        .map_err(|_| CliError::Input(format!("field must be a prime or Q, got {text:?}")))?;
    PrimeField::new(p)?;
    Ok(FieldChoice::Prime(p))
}

fn field_label(choice: &FieldChoice) -> String {
    match choice {
        FieldChoice::Rational => "Q".to_string(),
        FieldChoice::Prime(p) => p.to_string(),
    }
}

fn quiver_label(q: &Quiver) -> String {
    let labels: Vec<String> = q.dynkin_types().iter().map(|t| t.label()).collect();
    labels.join(" + ")
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                std::process::exit(0);
            }
            std::process::exit(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(EXIT_INPUT);
        }
        Err(CliError::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            std::process::exit(EXIT_VERIFY);
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Roots { src, format } => cmd_roots(&src, format),
        Cmd::Decompose {
            src,
            d,
            format,
            mode,
        } => cmd_decompose(&src, &d, format, mode),
        Cmd::Verify {
            src,
            max_total_dim,
            samples,
            seed,
            field,
            format,
            compare,
            inject_fault,
        } => {
            if let Some(path) = compare {
                cmd_compare(&path)
            } else {
                cmd_verify(
                    &src,
                    max_total_dim,
                    samples,
                    seed,
                    &field,
                    format,
                    inject_fault,
                )
            }
        }
        Cmd::Typea { sub } => match sub {
            TypeaCmd::Ranks {
                src,
                d,
                format,
                field,
            } => cmd_typea_ranks(&src, &d, format, &field),
            TypeaCmd::Build { src, d, out } => cmd_typea_build(&src, &d, out.as_deref()),
            TypeaCmd::Check { src, d, rep, field } => cmd_typea_check(&src, &d, &rep, &field),
        },
    }
}

fn cmd_roots(src: &QuiverSource, format: Format) -> Result<(), CliError> {
    let (q, echo) = load_source(&src.quiver, &src.dynkin)?;
    let engine = Engine::new(q)?;
    match format {
        Format::Json => {
            let report = RootsReport {
                quiver: echo,
                count: engine.roots().len(),
                roots: engine
                    .roots()
                    .roots()
                    .iter()
                    .map(|r| r.entries().to_vec())
                    .collect(),
            };
            print!("{}", to_json(&report));
        }
        Format::Table => {
            println!("quiver: {}", quiver_label(engine.quiver()));
            println!("positive roots: {}", engine.roots().len());
            for r in engine.roots().roots() {
                println!("  {r}");
            }
        }
    }
    Ok(())
}

fn decompose_report(
    q: &Quiver,
    echo: String,
    d: &DimVec,
    mode: Option<Mode>,
) -> Result<DecomposeReport, CliError> {
    let engine = Engine::new(q.clone())?;
    let (mult, discrepancies) = match mode {
        None => (engine.rigid(d)?, Vec::new()),
        Some(mode) => {
            let (taq, order) = TypeAQuiver::from_quiver(q)?;
            let s = taq
                .sink_position()
                .ok_or(rigidq_core::Error::NotSingleSink)?;
            let d_std = DimVec::new(order.iter().map(|&v| d[v]).collect());
            let kind = match mode {
                Mode::Verbatim => SinkFormulaMode::Verbatim,
                Mode::Corrected => SinkFormulaMode::Corrected,
            };
            let std_mult = single_sink_multiplicities(s, &d_std, kind)?;
            // Summand roots travel back to the caller's vertex labels.
            let mut mult = MultiplicityFunction::new();
            for (root, m) in std_mult {
                let mut back = vec![0i64; root.len()];
                for (k, &v) in order.iter().enumerate() {
                    back[v] = root[k];
                }
                mult.insert(DimVec::new(back), m);
            }
            let discrepancies = single_sink_discrepancies(s, &d_std)?
                .into_iter()
                .map(|disc| DiscrepancyEntry {
                    interval: [disc.i, disc.j],
                    verbatim: disc.verbatim,
                    corrected: disc.corrected,
                })
                .collect();
            (mult, discrepancies)
        }
    };
    let check = engine.check(d, &mult)?;
    Ok(DecomposeReport {
        quiver: echo,
        d: d.entries().to_vec(),
        summands: mult
            .iter()
            .map(|(root, &m)| Summand {
                root: root.entries().to_vec(),
                mult: m,
            })
            .collect(),
        checks: Checks {
            sum: check.sum_ok,
            ext_free: check.ext_free,
        },
        discrepancies,
    })
}

fn cmd_decompose(
    src: &QuiverSource,
    dims: &str,
    format: Format,
    mode: Option<Mode>,
) -> Result<(), CliError> {
    let (q, echo) = load_source(&src.quiver, &src.dynkin)?;
    let d = parse_dims(dims)?;
    let label = quiver_label(&q);
    let report = decompose_report(&q, echo, &d, mode)?;
    match format {
        Format::Json => print!("{}", to_json(&report)),
        Format::Table => {
            println!("quiver: {label}");
            println!("d: {d}");
            if report.summands.is_empty() {
                println!("summands: none (zero representation)");
            } else {
                println!("summands:");
                for s in &report.summands {
                    println!("  {} x {}", DimVec::new(s.root.clone()), s.mult);
                }
            }
            println!(
                "checks: sum {}, extensions {}",
                if report.checks.sum { "ok" } else { "MISMATCH" },
                if report.checks.ext_free { "ok" } else { "PRESENT" },
            );
            for disc in &report.discrepancies {
                println!(
                    "  reading differs on [{},{}]: verbatim {}, corrected {}",
                    disc.interval[0], disc.interval[1], disc.verbatim, disc.corrected
                );
            }
        }
    }
    Ok(())
}

fn cmd_compare(path: &PathBuf) -> Result<(), CliError> {
    let original = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let parsed: DecomposeReport = serde_json::from_str(&original)
        .map_err(|e| CliError::Input(format!("{}: not a decompose report: {e}", path.display())))?;
    let q = parse_quiver(&parsed.quiver)?;
    let d = DimVec::new(parsed.d.clone());
    let fresh = decompose_report(&q, parsed.quiver.clone(), &d, None)?;
    let rendered = to_json(&fresh);
    if rendered == original {
        println!("comparison ok: {} is byte-identical to a fresh run", path.display());
        Ok(())
    } else {
        Err(CliError::Verify(format!(
            "{} differs from a fresh decomposition of the same input",
            path.display()
        )))
    }
}

struct TypeaContext {
    taq: TypeAQuiver,
    engine: Engine,
    d_std: DimVec,
    order: Vec<usize>,
}

fn typea_context(src: &QuiverSource, dims: &str) -> Result<TypeaContext, CliError> {
    let (q, _) = load_source(&src.quiver, &src.dynkin)?;
    let d = parse_dims(dims)?;
    if d.len() != q.vertex_count() {
        return Err(CliError::Input(format!(
            "dimension vector has {} entries, quiver has {} vertices",
            d.len(),
            q.vertex_count()
        )));
    }
    let (taq, order) = TypeAQuiver::from_quiver(&q)?;
    let d_std = DimVec::new(order.iter().map(|&v| d[v]).collect());
    let engine = Engine::new(taq.quiver().clone())?;
    Ok(TypeaContext {
        taq,
        engine,
        d_std,
        order,
    })
}

fn describe_order(order: &[usize]) -> Option<String> {
    if order.iter().enumerate().all(|(k, &v)| k == v) {
        return None;
    }
    let walk: Vec<String> = order.iter().map(|v| (v + 1).to_string()).collect();
    Some(walk.join(","))
}

fn rank_rows<F: Field>(
    f: &F,
    ctx: &TypeaContext,
) -> Result<Vec<RankRow>, CliError> {
    let n = ctx.taq.n();
    let d = &ctx.d_std;
    let path_col = if ctx.taq.sink_position().is_some() {
        let rep = build_rigid_rep(
            &ctx.taq,
            ctx.engine.euler(),
            ctx.engine.roots(),
            ctx.engine.cache(),
            d,
        )?;
        Some(path_ranks(f, &ctx.taq, &rep.lift(f))?)
    } else {
        None
    };
    let mut rows = Vec::new();
    for iv in rigidq_core::typea::all_intervals(n) {
        let target = if iv.i == iv.j {
            d[iv.i - 1]
        } else {
            let data = rigidq_core::typea::interval_data(&ctx.taq, iv.i, iv.j);
            let source_sum: i64 = data.sources.iter().map(|&l| d[l - 1]).sum();
            source_sum - ctx.engine.hom_root_to(&iv.vector(n), d)?
        };
        rows.push(RankRow {
            i: iv.i,
            j: iv.j,
            target,
            path: path_col.as_ref().map(|m| m[&(iv.i, iv.j)]),
        });
    }
    Ok(rows)
}

fn cmd_typea_ranks(
    src: &QuiverSource,
    dims: &str,
    format: Format,
    field: &str,
) -> Result<(), CliError> {
    let ctx = typea_context(src, dims)?;
    let choice = parse_field(field)?;
    let rows = match choice {
        FieldChoice::Rational => rank_rows(&Rationals, &ctx)?,
        FieldChoice::Prime(p) => rank_rows(&PrimeField::new(p)?, &ctx)?,
    };
    match format {
        Format::Json => {
            let report = RanksReport {
                quiver: quiver_label(ctx.taq.quiver()),
                d: ctx.d_std.entries().to_vec(),
                rows,
            };
            print!("{}", to_json(&report));
        }
        Format::Table => {
            println!("quiver: {}", quiver_label(ctx.taq.quiver()));
            if let Some(walk) = describe_order(&ctx.order) {
                println!("path order (input labels): {walk}");
            }
            println!("d: {}", ctx.d_std);
            let has_path = rows.iter().any(|r| r.path.is_some());
            if has_path {
                println!("  {:>3} {:>3} {:>7} {:>5}", "i", "j", "target", "path");
            } else {
                println!("  {:>3} {:>3} {:>7}", "i", "j", "target");
            }
            for r in rows {
                match r.path {
                    Some(p) => println!("  {:>3} {:>3} {:>7} {:>5}", r.i, r.j, r.target, p),
                    None => println!("  {:>3} {:>3} {:>7}", r.i, r.j, r.target),
                }
            }
        }
    }
    Ok(())
}

fn cmd_typea_build(src: &QuiverSource, dims: &str, out: Option<&std::path::Path>) -> Result<(), CliError> {
    let ctx = typea_context(src, dims)?;
    let rep = build_rigid_rep(
        &ctx.taq,
        ctx.engine.euler(),
        ctx.engine.roots(),
        ctx.engine.cache(),
        &ctx.d_std,
    )?;
    let text = representation_to_text(&rep);
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            println!("wrote rigid representation for d = {} to {}", ctx.d_std, path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn check_rep<F: Field>(
    f: &F,
    ctx: &TypeaContext,
    rep: &Representation<i64>,
) -> Result<Vec<String>, CliError> {
    let report = verify_rank_criterion(
        f,
        &ctx.taq,
        ctx.engine.euler(),
        ctx.engine.roots(),
        ctx.engine.cache(),
        &rep.lift(f),
        &ctx.d_std,
    )?;
    Ok(report
        .failures()
        .iter()
        .map(|c| format!("interval ({},{}): rank {}, target {}", c.i, c.j, c.rank, c.target))
        .collect())
}

fn cmd_typea_check(
    src: &QuiverSource,
    dims: &str,
    rep_path: &PathBuf,
    field: &str,
) -> Result<(), CliError> {
    let ctx = typea_context(src, dims)?;
    let text = std::fs::read_to_string(rep_path)
        .map_err(|e| CliError::Input(format!("{}: {e}", rep_path.display())))?;
    let rep = representation_from_text(ctx.taq.quiver(), &ctx.d_std, &text)?;
    let choice = parse_field(field)?;
    let failures = match choice {
        FieldChoice::Rational => check_rep(&Rationals, &ctx, &rep)?,
        FieldChoice::Prime(p) => check_rep(&PrimeField::new(p)?, &ctx, &rep)?,
    };
    let total = ctx.taq.n() * (ctx.taq.n() + 1) / 2;
    if failures.is_empty() {
        println!(
            "PASS: all {total} interval ranks match; the representation is the rigid one for d = {}",
            ctx.d_std
        );
        Ok(())
    } else {
        for f in &failures {
            println!("FAIL {f}");
        }
        Err(CliError::Verify(format!(
            "{} of {total} interval ranks differ from the rigid targets",
            failures.len()
        )))
    }
}

fn sweep_dimvecs(n: usize, max_total: i64) -> Vec<DimVec> {
    fn extend(n: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<DimVec>) {
        if cur.len() == n {
            out.push(DimVec::new(cur.clone()));
            return;
        }
        for v in 0..=budget {
            cur.push(v);
            extend(n, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, max_total, &mut Vec::with_capacity(n), &mut out);
    out
}

fn default_battery() -> Vec<(Quiver, String)> {
    let mut battery = Vec::new();
    for n in 2..=4usize {
        for mask in 0u32..1 << (n - 1) {
            let dirs: String = (0..n - 1)
                .map(|k| if mask >> k & 1 == 0 { '>' } else { '<' })
                .collect();
            let desc = format!("A{n}:{dirs}");
            battery.push((parse_quiver(&desc).expect("path descriptor"), desc));
        }
    }
    let d4 = parse_quiver("D4").expect("builtin");
    let d4_flipped = Quiver::new(4, &[(2, 1), (2, 3), (2, 4)]).expect("same graph");
    battery.push((d4_flipped.clone(), d4_flipped.canonical_text()));
    battery.push((d4, "D4".to_string()));
    battery.push((parse_quiver("D5").expect("builtin"), "D5".to_string()));
    battery
}

fn cmd_verify(
    src: &OptionalQuiverSource,
    max_total_dim: i64,
    samples: usize,
    seed: Option<u64>,
    field: &str,
    format: Format,
    inject_fault: bool,
) -> Result<(), CliError> {
    let start = Instant::now();
    let seed = seed
        .or_else(|| {
            std::env::var("RIGIDQ_SEED")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    let choice = parse_field(field)?;
    let battery: Vec<(Quiver, String)> =
        if src.quiver.is_some() || src.dynkin.is_some() {
            let (q, echo) = load_source(&src.quiver, &src.dynkin)?;
            vec![(q, echo)]
        } else {
            default_battery()
        };

    let mut suites = Vec::new();
    suites.push(oracle_suite(&battery, max_total_dim, inject_fault)?);
    suites.push(closed_form_suite(&battery, samples, seed)?);
    suites.push(match choice {
        FieldChoice::Rational => rank_suite(&Rationals, &battery, samples, seed)?,
        FieldChoice::Prime(p) => rank_suite(&PrimeField::new(p)?, &battery, samples, seed)?,
    });

    let ok = suites.iter().all(|s| s.failures.is_empty());
    let report = VerifyReport {
        command: "verify".to_string(),
        seed,
        samples,
        max_total_dim,
        field: field_label(&choice),
        suites,
        ok,
        elapsed_ms: start.elapsed().as_millis(),
    };
    match format {
        Format::Json => print!("{}", to_json(&report)),
        Format::Table => {
            println!("seed: {}", report.seed);
            println!("field: {}", report.field);
            for s in &report.suites {
                println!(
                    "suite {}: {} cases, {} failures",
                    s.name,
                    s.cases,
                    s.failures.len()
                );
                for f in s.failures.iter().take(10) {
                    println!("  {f}");
                }
                if s.failures.len() > 10 {
                    println!("  ... {} more", s.failures.len() - 10);
                }
            }
            println!(
                "result: {} ({} ms)",
                if report.ok { "PASS" } else { "FAIL" },
                report.elapsed_ms
            );
        }
    }
    if report.ok {
        Ok(())
    } else {
        let total: usize = report.suites.iter().map(|s| s.failures.len()).sum();
        Err(CliError::Verify(format!(
            "{total} case(s) failed across {} suites",
            report.suites.len()
        )))
    }
}

/// Multiplicity formula against exhaustive search on every small d.
fn oracle_suite(
    battery: &[(Quiver, String)],
    max_total_dim: i64,
    inject_fault: bool,
) -> Result<SuiteReport, CliError> {
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (q, echo) in battery {
        let engine = Engine::new(q.clone())?;
        for d in sweep_dimvecs(q.vertex_count(), max_total_dim) {
            let mult = if inject_fault {
                let mut m = MultiplicityFunction::new();
                for (root, raw) in engine.rigid_raw(&d)? {
                    if raw != 0 {
                        m.insert(root, raw);
                    }
                }
                m
            } else {
                engine.rigid(&d)?
            };
            let bound = max_total_dim.max(rigidq_core::BRUTE_FORCE_DEFAULT_BOUND);
            let brute = engine.brute_force(&d, Some(bound))?;
            if mult != brute {
                failures.push(format!(
                    "{}: d = {d}: formula {mult:?} vs search {brute:?}",
                    echo.lines().next().unwrap_or(echo)
                ));
            }
            cases += 1;
        }
    }
    Ok(SuiteReport {
        name: "oracle equivalence".to_string(),
        cases,
        failures,
    })
}

/// Closed formulas for equioriented and single-sink type A orientations.
fn closed_form_suite(
    battery: &[(Quiver, String)],
    samples: usize,
    seed: u64,
) -> Result<SuiteReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC10);
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (q, echo) in battery {
        let Ok((taq, order)) = TypeAQuiver::from_quiver(q) else {
            continue;
        };
        let _ = order;
        let engine = Engine::new(taq.quiver().clone())?;
        let n = taq.n();
        for _ in 0..samples {
            let d = DimVec::new((0..n).map(|_| rng.gen_range(0..=4i64)).collect());
            let reference = engine.rigid(&d)?;
            if taq.is_equioriented() && equioriented_multiplicities(&d)? != reference {
                failures.push(format!("{echo}: equioriented formula differs at d = {d}"));
            }
            if let Some(s) = taq.sink_position() {
                if single_sink_multiplicities(s, &d, SinkFormulaMode::Corrected)? != reference {
                    failures.push(format!("{echo}: corrected formula differs at d = {d}"));
                }
                for disc in single_sink_discrepancies(s, &d)? {
                    if disc.i != s && disc.j != s {
                        failures.push(format!(
                            "{echo}: verbatim reading differs away from the sink at d = {d}, interval ({},{})",
                            disc.i, disc.j
                        ));
                    }
                }
            }
            cases += 1;
        }
    }
    Ok(SuiteReport {
        name: "closed forms".to_string(),
        cases,
        failures,
    })
}

/// Rank criterion on constructed rigid representations.
fn rank_suite<F: Field>(
    f: &F,
    battery: &[(Quiver, String)],
    samples: usize,
    seed: u64,
) -> Result<SuiteReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3A9);
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (q, echo) in battery {
        let Ok((taq, _)) = TypeAQuiver::from_quiver(q) else {
            continue;
        };
        let engine = Engine::new(taq.quiver().clone())?;
        let n = taq.n();
        for _ in 0..samples {
            let d = DimVec::new((0..n).map(|_| rng.gen_range(0..=3i64)).collect());
            let rep = build_rigid_rep(
                &taq,
                engine.euler(),
                engine.roots(),
                engine.cache(),
                &d,
            )?;
            let report = verify_rank_criterion(
                f,
                &taq,
                engine.euler(),
                engine.roots(),
                engine.cache(),
                &rep.lift(f),
                &d,
            )?;
            if !report.ok() {
                for c in report.failures() {
                    failures.push(format!(
                        "{echo}: d = {d}, interval ({},{}): rank {}, target {}",
                        c.i, c.j, c.rank, c.target
                    ));
                }
            }
            cases += 1;
        }
    }
    Ok(SuiteReport {
        name: "rank criterion".to_string(),
        cases,
        failures,
    })
}
