//! `regmaps`: exact counts of d-regular maps on closed orientable
//! surfaces, one-face and multi-face, rooted and up to isomorphism.
//!
//! All arithmetic is exact; counts are printed as full decimal integers.
//! The `oracle` subcommand exposes the independent brute-force census and
//! `verify` cross-checks the counting pipelines against it, against the
//! embedded reference tables, and against each other.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use regmaps::multiface::Memo;
use regmaps::tables::{TableKind, TableSpec};

#[derive(Parser)]
#[command(name = "regmaps", version, about = "Exact counts of d-regular maps on orientable surfaces")]
struct Cli {
    /// Memo cache file: loaded when present, rewritten on success.
    #[arg(long, global = true, value_name = "FILE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count one-face d-regular maps of a given genus.
    Oneface {
        #[command(subcommand)]
        flavor: OnefaceCommand,
    },
    /// Count d-regular maps with a given vertex count and genus.
    Multi {
        #[command(subcommand)]
        flavor: MultiCommand,
    },
    /// Produce a whole count table.
    Table(TableArgs),
    /// List cyclic symmetry signatures of a genus-g surface with their
    /// epimorphism counts.
    Orbifolds {
        /// Genus of the surface being quotiented.
        #[arg(long)]
        genus: u32,
        /// Order of the cyclic symmetry.
        #[arg(long)]
        period: u64,
    },
    /// Exhaustive rotation-system census (small dart counts only).
    Oracle(OracleArgs),
    /// Cross-check the counting pipelines; exits nonzero on any mismatch.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum OnefaceCommand {
    /// Maps with a distinguished oriented edge.
    Rooted(OnefaceArgs),
    /// Isomorphism classes.
    Unrooted(OnefaceArgs),
}

#[derive(Args)]
struct OnefaceArgs {
    /// Vertex degree.
    #[arg(long)]
    d: u32,
    /// Genus of the carrier surface.
    #[arg(long)]
    genus: u32,
}

#[derive(Subcommand)]
enum MultiCommand {
    /// Maps with a distinguished oriented edge.
    Rooted(MultiArgs),
    /// Isomorphism classes.
    Unrooted(MultiArgs),
}

#[derive(Args)]
struct MultiArgs {
    /// Vertex degree.
    #[arg(long)]
    d: u32,
    /// Genus of the carrier surface.
    #[arg(long)]
    genus: u32,
    /// Number of vertices.
    #[arg(long)]
    vertices: u64,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Vertex degree.
    #[arg(long)]
    d: u32,
    /// Largest genus listed.
    #[arg(long)]
    genus_max: u32,
    /// Largest vertex count listed (multi-face kinds only).
    #[arg(long)]
    vertices_max: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "oneface-rooted")]
    OnefaceRooted,
    #[value(name = "oneface-unrooted")]
    OnefaceUnrooted,
    #[value(name = "multi-rooted")]
    MultiRooted,
    #[value(name = "multi-unrooted")]
    MultiUnrooted,
}

impl From<KindArg> for TableKind {
    fn from(kind: KindArg) -> TableKind {
        match kind {
            KindArg::OnefaceRooted => TableKind::OneFaceRooted,
            KindArg::OnefaceUnrooted => TableKind::OneFaceUnrooted,
            KindArg::MultiRooted => TableKind::MultiRooted,
            KindArg::MultiUnrooted => TableKind::MultiUnrooted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Md,
}

#[derive(Args)]
struct OracleArgs {
    /// Vertex degree.
    #[arg(long)]
    d: u32,
    /// Number of vertices.
    #[arg(long)]
    vertices: u64,
    /// Print a single genus instead of the whole census.
    #[arg(long)]
    genus: Option<u32>,
    /// With --genus, count isomorphism classes instead of rooted maps.
    #[arg(long)]
    unrooted: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Recompute every embedded reference table cell.
    Tables,
    /// Compare the pipelines with the brute-force census.
    Oracle,
    /// Compare closed forms with their generic counterparts.
    Consistency,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(feature = "parallel")]
fn init_threads() {
    if let Ok(raw) = std::env::var("REGMAPS_THREADS") {
        match raw.parse::<usize>() {
            Ok(0) => {}
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => eprintln!("warning: ignoring malformed REGMAPS_THREADS={raw:?}"),
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn init_threads() {}

fn load_memo(path: Option<&Path>) -> Result<Memo> {
    match path {
        Some(p) if p.exists() => {
            Memo::load(p).with_context(|| format!("loading cache {}", p.display()))
        }
        _ => Ok(Memo::new()),
    }
}

fn save_memo(path: Option<&Path>, memo: &Memo) -> Result<()> {
    if let Some(p) = path {
        memo.save(p)
            .with_context(|| format!("writing cache {}", p.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let memo = load_memo(cli.cache.as_deref())?;
    let code = match cli.command {
        Command::Oneface { flavor } => {
            let count = match flavor {
                OnefaceCommand::Rooted(args) => regmaps::oneface::rooted(args.d, args.genus)?,
                OnefaceCommand::Unrooted(args) => {
                    regmaps::oneface_unrooted::unrooted(args.d, args.genus)?
                }
            };
            println!("{count}");
            ExitCode::SUCCESS
        }
        Command::Multi { flavor } => {
            let count = match flavor {
                MultiCommand::Rooted(args) => {
                    regmaps::multiface::rooted_regular(&memo, args.d, args.genus, args.vertices)
                }
                MultiCommand::Unrooted(args) => regmaps::multiface_unrooted::unrooted_regular(
                    &memo,
                    args.d,
                    args.genus,
                    args.vertices,
                )?,
            };
            println!("{count}");
            ExitCode::SUCCESS
        }
        Command::Table(args) => {
            let spec = TableSpec {
                kind: args.kind.into(),
                d: args.d,
                genus_max: args.genus_max,
                vertices_max: args.vertices_max,
            };
            let table = regmaps::tables::generate(&memo, &spec)?;
            match args.format {
                FormatArg::Csv => print!("{}", table.to_csv()),
                FormatArg::Json => println!("{}", table.to_json()),
                FormatArg::Md => print!("{}", table.to_markdown()),
            }
            ExitCode::SUCCESS
        }
        Command::Orbifolds { genus, period } => {
            for sig in regmaps::orbifolds::signatures(genus, period) {
                let epi = regmaps::orbifolds::epi_count(&sig)?;
                println!("{sig} epi={epi}");
            }
            ExitCode::SUCCESS
        }
        Command::Oracle(args) => {
            let degrees = vec![args.d; usize::try_from(args.vertices).context("vertex count")?];
            let census = regmaps::oracle::census(&degrees)?;
            match args.genus {
                Some(g) => {
                    let count = if args.unrooted { census.unrooted(g) } else { census.rooted(g) };
                    println!("{count}");
                }
                None => {
                    println!("g,faces,rooted,unrooted");
                    for g in 0..census.systems_by_genus.len() as u32 {
                        println!(
                            "{g},{},{},{}",
                            census.faces(g),
                            census.rooted(g),
                            census.unrooted(g)
                        );
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite } => match suite {
            Suite::Tables => verify_tables(&memo)?,
            Suite::Oracle => verify_oracle(&memo)?,
            Suite::Consistency => verify_consistency()?,
        },
    };
    save_memo(cli.cache.as_deref(), &memo)?;
    Ok(code)
}

/// Recomputes all embedded reference cells, one summary line per table.
fn verify_tables(memo: &Memo) -> Result<ExitCode> {
    let mut failures = 0usize;
    let cells = regmaps::tables::expected_cells();
    let mut groups: Vec<(TableKind, u32)> = Vec::new();
    for cell in &cells {
        if !groups.contains(&(cell.kind, cell.d)) {
            groups.push((cell.kind, cell.d));
        }
    }
    for (kind, d) in groups {
        let group: Vec<_> = cells
            .iter()
            .filter(|c| c.kind == kind && c.d == d)
            .cloned()
            .collect();
        let total = group.len();
        let mismatches = regmaps::tables::verify_cells(memo, group)?;
        if mismatches.is_empty() {
            println!("ok {} d={d} ({total} cells)", kind.label());
        } else {
            failures += mismatches.len();
            println!(
                "FAIL {} d={d} ({} of {total} cells differ)",
                kind.label(),
                mismatches.len()
            );
            for m in mismatches {
                let v = m.cell.v.map_or(String::new(), |v| format!(" v={v}"));
                println!(
                    "  g={}{v}: expected {} got {}",
                    m.cell.g, m.cell.count, m.got
                );
            }
        }
    }
    Ok(exit_for(failures))
}

/// Compares pipeline counts with the exhaustive census on every regular
/// family small enough to enumerate, plus the enumerable one-face rows.
fn verify_oracle(memo: &Memo) -> Result<ExitCode> {
    let mut failures = 0usize;
    for d in 1..=10u32 {
        for v in 1..=10u64 {
            let darts = u64::from(d) * v;
            if darts > 10 || darts % 2 != 0 {
                continue;
            }
            let census = regmaps::oracle::census(&vec![d; v as usize])?;
            let mut bad = Vec::new();
            for g in 0..=3u32 {
                let rooted = regmaps::multiface::rooted_regular(memo, d, g, v);
                let unrooted = regmaps::multiface_unrooted::unrooted_regular(memo, d, g, v)?;
                if rooted != census.rooted(g) {
                    bad.push(format!("rooted g={g}: {} vs census {}", rooted, census.rooted(g)));
                }
                if unrooted != census.unrooted(g) {
                    bad.push(format!(
                        "unrooted g={g}: {} vs census {}",
                        unrooted,
                        census.unrooted(g)
                    ));
                }
            }
            report(&format!("regular d={d} v={v}"), &bad, &mut failures);
        }
    }
    for (d, g) in [(3, 1), (4, 1), (5, 2)] {
        let mut bad = Vec::new();
        let rooted = regmaps::oneface::rooted(d, g)?;
        let oracle_rooted = regmaps::oracle::one_face_rooted(d, g)?;
        if rooted != oracle_rooted {
            bad.push(format!("rooted: {rooted} vs census {oracle_rooted}"));
        }
        let unrooted = regmaps::oneface_unrooted::unrooted(d, g)?;
        let oracle_unrooted = regmaps::oracle::one_face_unrooted(d, g)?;
        if unrooted != oracle_unrooted {
            bad.push(format!("unrooted: {unrooted} vs census {oracle_unrooted}"));
        }
        report(&format!("one-face d={d} g={g}"), &bad, &mut failures);
    }
    Ok(exit_for(failures))
}

/// Compares every closed form with the generic computation on overlapping
/// domains, including the cyclic epimorphism counts.
fn verify_consistency() -> Result<ExitCode> {
    use regmaps::exactnum::{int, pow_int, pow_rat, rat, rat_i};
    use regmaps::orbifolds::{epi_count, OrbifoldSignature};

    let mut failures = 0usize;

    let mut bad = Vec::new();
    for gh in 0..=3u32 {
        for k in 0..=8u64 {
            let generic = regmaps::oneface::rooted_with_leaves(3, gh, k)?;
            let cubic = regmaps::oneface::rooted_with_leaves_cubic(gh, k);
            if generic != cubic {
                bad.push(format!("leaf counts at ({gh},{k}): {generic} vs {cubic}"));
            }
        }
    }
    report("cubic leaf-count closed form", &bad, &mut failures);

    let mut bad = Vec::new();
    for g in 1..=8u32 {
        let pairs = [
            ("half-turn", regmaps::oneface_unrooted::f2_cubic(g), regmaps::oneface_unrooted::f2(3, g)),
            ("full-turn", regmaps::oneface_unrooted::f3_cubic(g), regmaps::oneface_unrooted::fd(3, g)),
            ("double-turn", regmaps::oneface_unrooted::f6_cubic(g), regmaps::oneface_unrooted::f2d(3, g)),
        ];
        for (name, closed, generic) in pairs {
            if closed != generic {
                bad.push(format!("{name} symmetry sum at g={g}"));
            }
        }
        let closed = regmaps::oneface_unrooted::unrooted_one_face_closed3(g);
        let assembled = regmaps::oneface_unrooted::unrooted_one_face_prime(3, g)?;
        if closed != assembled {
            bad.push(format!("cubic class count at g={g}: {closed} vs {assembled}"));
        }
    }
    report("cubic symmetry closed forms", &bad, &mut failures);

    // Cyclic epimorphism counts against their closed forms.  The surface
    // genus is fixed by the ramification data; combinations that do not
    // produce a genus are not orbifold quotients and are skipped.
    let surface_genus = |gh: u32, period: u64, orders: &[u64]| -> Option<u32> {
        let mut num = i64::from(gh as i32 * 2 - 2) * period as i64 + 2;
        for &m in orders {
            num += (period / m) as i64 * (m as i64 - 1);
        }
        (num >= 0 && num % 2 == 0).then_some((num / 2) as u32)
    };
    let mut bad = Vec::new();
    for d in [3u64, 5, 7] {
        for gh in 0..=3u32 {
            for r in 0..=4u64 {
                // The branch-point closed forms assume at least one branch
                // generator; the free case is a Jordan totient instead.
                let orders = vec![d; r as usize];
                if let (true, Some(g)) = (r >= 1, surface_genus(gh, d, &orders)) {
                    let sig = OrbifoldSignature {
                        surface_genus: g,
                        quotient_genus: gh,
                        period: d,
                        branch_orders: orders,
                    };
                    let di = d as i64;
                    let bracket = (di - 1) * if r % 2 == 0 { 1 } else { -1 }
                        + (di - 1).pow(r as u32);
                    let expected = pow_rat(&rat_i(di), 2 * gh as i32 - 1) * rat_i(bracket);
                    if rat(epi_count(&sig)?) != expected {
                        bad.push(format!("period {d} with {r} branch points, carrier {gh}"));
                    }
                }
                let orders = vec![2u64; r as usize];
                if let (true, Some(g)) = (r >= 1, surface_genus(gh, 2, &orders)) {
                    let sig = OrbifoldSignature {
                        surface_genus: g,
                        quotient_genus: gh,
                        period: 2,
                        branch_orders: orders,
                    };
                    let expected = if r % 2 == 0 { pow_int(4, gh) } else { int(0) };
                    if epi_count(&sig)? != expected {
                        bad.push(format!("period 2 with {r} branch points, carrier {gh}"));
                    }
                }
                for r2 in 0..=4u64 {
                    let mut orders = vec![2u64; r2 as usize];
                    orders.extend(std::iter::repeat_n(d, r as usize));
                    orders.push(2 * d);
                    if let Some(g) = surface_genus(gh, 2 * d, &orders) {
                        let sig = OrbifoldSignature {
                            surface_genus: g,
                            quotient_genus: gh,
                            period: 2 * d,
                            branch_orders: orders,
                        };
                        let di = d as i64;
                        let sign = if r % 2 == 0 { 1 } else { -1 };
                        let expected = if r2 % 2 == 1 {
                            pow_rat(&rat_i(2 * di), 2 * gh as i32)
                                * rat_i(di - 1)
                                * rat_i((di - 1).pow(r as u32) - sign)
                                / rat_i(di)
                        } else {
                            rat_i(0)
                        };
                        if rat(epi_count(&sig)?) != expected {
                            bad.push(format!(
                                "period {} with {r2}+{r} branch points, carrier {gh}",
                                2 * d
                            ));
                        }
                    }
                }
            }
        }
    }
    report("cyclic epimorphism closed forms", &bad, &mut failures);

    Ok(exit_for(failures))
}

fn report(name: &str, bad: &[String], failures: &mut usize) {
    if bad.is_empty() {
        println!("ok {name}");
    } else {
        *failures += bad.len();
        println!("FAIL {name}");
        for line in bad {
            println!("  {line}");
        }
    }
}

fn exit_for(failures: usize) -> ExitCode {
    if failures == 0 {
        println!("all checks passed");
        ExitCode::SUCCESS
    } else {
        println!("{failures} mismatches");
        ExitCode::FAILURE
    }
}
