//! Batch CLI for the restricted/associated sequence operators and the
//! modified hypergeometric number families.
//!
//! Worker count for the verify fan-out follows rayon's
//! `RAYON_NUM_THREADS` environment variable.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{One, Zero};

use cameron::combinatorics::{
    binomial_expansion_sum, composition_sum_associated, composition_sum_restricted,
    trudi_associated, trudi_restricted,
};
use cameron::determinant::{associated_z_det, restricted_z_det, x_from_z_det};
use cameron::hyper::{
    hyper_binom_sum, hyper_det, hyper_from_definition, hyper_sum, hyper_trudi, Family, FamilySpec,
    HyperConfig,
};
use cameron::io;
use cameron::operator::{
    associated_transform, geometric_closed_form, negate_tail, ones_closed_form,
    restricted_transform, series_reciprocal, GeometricParams,
};
use cameron::rational::parse_rat;
use cameron::verify::{run_verify, Scope, VerifyConfig};
use cameron::{CoefficientSequence, OperatorMode, Rat, SeedRule};

#[derive(Parser)]
#[command(
    name = "cameron",
    about = "Exact restricted/associated sequence operators, their inversions, \
             and modified hypergeometric Bernoulli/Cauchy/Euler numbers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute values: a transform, a hypergeometric family, or a closed form
    #[command(subcommand)]
    Compute(ComputeTarget),
    /// Apply the operator to a seed file, or invert a transform back to its seed
    Transform(TransformArgs),
    /// Run the cross-verification suite over randomized corpora
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum ComputeTarget {
    /// Transform a seed sequence
    Transform(ComputeTransformArgs),
    /// Modified hypergeometric numbers
    Hyper(ComputeHyperArgs),
    /// Closed forms for geometric / all-ones associated seeds
    ClosedForm(ClosedFormArgs),
}

#[derive(Args, Clone)]
struct ModeArgs {
    /// Restricted operator: seed truncated to indices 1..=M
    #[arg(long, value_name = "M", conflicts_with = "associated")]
    restricted: Option<usize>,
    /// Associated operator: seed supported on indices >= M
    #[arg(long, value_name = "M")]
    associated: Option<usize>,
}

impl ModeArgs {
    fn mode(&self) -> Result<OperatorMode> {
        match (self.restricted, self.associated) {
            (Some(m), None) => Ok(OperatorMode::restricted(m)?),
            (None, Some(m)) => Ok(OperatorMode::associated(m)?),
            _ => bail!("choose exactly one of --restricted M or --associated M"),
        }
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format; b-files require every value in range to be an integer
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bfile,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    All,
    Recurrence,
    Determinant,
    Composition,
    Trudi,
    Binom,
    Oracle,
}

#[derive(Args)]
struct ComputeTransformArgs {
    #[command(flatten)]
    mode: ModeArgs,
    /// Inline seed: comma-separated rationals. Restricted: x_1,...
    /// (padded with zeros to M). Associated: x_M,... onward.
    #[arg(long, value_name = "LIST", group = "seed_source")]
    seed: Option<String>,
    /// Seed file: JSON array (restricted, index 1 first) or
    /// {"m": M, "values": [...]} (associated)
    #[arg(long, value_name = "PATH", group = "seed_source")]
    seed_file: Option<PathBuf>,
    /// Generator seed x_n = a^(n-s) b from the support start s
    #[arg(long, value_name = "A,B", group = "seed_source")]
    geometric: Option<String>,
    /// Generator seed x_n = (n-s)a + b from the support start s
    #[arg(long, value_name = "A,B", group = "seed_source")]
    arithmetic: Option<String>,
    /// All-ones seed on the support
    #[arg(long, group = "seed_source")]
    ones: bool,
    /// Index range `lo..hi` (inclusive) or a single index
    #[arg(long, value_name = "RANGE")]
    n: String,
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    method: Method,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ComputeHyperArgs {
    /// bernoulli | cauchy | euler | euler-second
    #[arg(long)]
    family: Family,
    /// Family order (N >= 1 for bernoulli/cauchy, N >= 0 for euler kinds)
    #[arg(long = "N", value_name = "N")]
    order: u32,
    #[command(flatten)]
    mode: ModeArgs,
    /// Paper-index range `lo..hi` (inclusive) or a single index
    #[arg(long, value_name = "RANGE")]
    n: String,
    /// Methods: oracle = generating-function definition, determinant,
    /// composition = signed composition sum, trudi, binom
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    method: Method,
    /// Read the restricted Euler-second denominator bound as m instead of
    /// the printed m-1
    #[arg(long)]
    euler2_extended: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ClosedFormArgs {
    /// Geometric associated seed parameters a,b
    #[arg(long, value_name = "A,B", group = "which", required = true)]
    geometric: Option<String>,
    /// All-ones associated seed
    #[arg(long, group = "which")]
    ones: bool,
    /// Support start m
    #[arg(long, value_name = "M")]
    m: usize,
    /// Index range `lo..hi` (inclusive) or a single index; requires lo >= m
    #[arg(long, value_name = "RANGE")]
    n: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TransformArgs {
    /// Forward: x-side seed file. Invert: z-side full sequence
    /// (JSON array, z_0 first)
    #[arg(long, value_name = "PATH")]
    seed_file: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long, value_name = "N")]
    n_max: usize,
    /// forward emits z_0..z_n_max (full-sequence JSON); invert emits the
    /// recovered x_1..x_n_max (seed-format JSON)
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    direction: Direction,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Invert,
}

#[derive(Args)]
struct VerifyArgs {
    /// all | section-2 | section-3
    #[arg(long, default_value = "all")]
    scope: String,
    /// Number of random corpus seeds
    #[arg(long, default_value_t = 200)]
    seed_count: usize,
    /// Highest index checked per identity
    #[arg(long, default_value_t = 22)]
    n_limit: usize,
    /// RNG seed; reports are byte-identical under the same configuration
    #[arg(long, default_value_t = 42)]
    rng_seed: u64,
    /// Write the canonical report to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute(ComputeTarget::Transform(args)) => compute_transform(args).map(|_| 0),
        Command::Compute(ComputeTarget::Hyper(args)) => compute_hyper(args).map(|_| 0),
        Command::Compute(ComputeTarget::ClosedForm(args)) => compute_closed_form(args).map(|_| 0),
        Command::Transform(args) => transform_file(args).map(|_| 0),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let text = text.trim();
    if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: usize = lo.parse().context("range start")?;
        let hi: usize = hi.parse().context("range end")?;
        if hi < lo {
            bail!("empty range {text}");
        }
        Ok((lo, hi))
    } else {
        let n: usize = text.parse().context("range")?;
        Ok((n, n))
    }
}

fn parse_rat_list(text: &str) -> Result<Vec<Rat>> {
    text.split(',')
        .map(|s| parse_rat(s).map_err(Into::into))
        .collect()
}

fn parse_pair(text: &str) -> Result<(i64, i64)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("expected `a,b`, got `{text}`"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn write_output(args: &OutputArgs, values: &[(usize, Rat)]) -> Result<()> {
    let rows = io::rows_from(values);
    let text = match args.format {
        Format::Json => io::render_rows_json(&rows),
        Format::Csv => io::render_rows_csv(&rows),
        Format::Bfile => io::render_bfile(values)?,
    };
    emit(&args.out, &text)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

/// Builds the seed sequence over `0..=n_max` from whichever source was given.
fn resolve_seed(args: &ComputeTransformArgs, mode: OperatorMode, n_max: usize) -> Result<CoefficientSequence> {
    if let Some(list) = &args.seed {
        let values = parse_rat_list(list)?;
        return match mode {
            OperatorMode::Restricted { m } => {
                if values.len() > m {
                    bail!("--restricted {m} admits at most {m} seed entries, got {}", values.len());
                }
                let mut tail = values;
                tail.resize(m, Rat::zero());
                Ok(CoefficientSequence::from_tail(tail))
            }
            OperatorMode::Associated { m } => {
                let mut tail = values;
                if m + tail.len() <= n_max + 1 {
                    tail.resize(n_max + 1 - m, Rat::zero());
                }
                Ok(CoefficientSequence::from_support(m, tail)?)
            }
        };
    }
    if let Some(path) = &args.seed_file {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = io::parse_seed_file(&text)?;
        match (&file.m, mode) {
            (None, OperatorMode::Restricted { .. }) => {}
            (Some(fm), OperatorMode::Associated { m }) if *fm == m => {}
            (Some(fm), OperatorMode::Associated { m }) => {
                bail!("seed file declares m = {fm} but --associated {m} was given")
            }
            (None, OperatorMode::Associated { .. }) => {
                bail!("associated mode needs an object seed file {{\"m\": .., \"values\": [..]}}")
            }
            (Some(_), OperatorMode::Restricted { .. }) => {
                bail!("restricted mode takes a plain-array seed file")
            }
        }
        return Ok(file.to_sequence(n_max)?);
    }
    let rule = if let Some(pair) = &args.geometric {
        let (a, b) = parse_pair(pair)?;
        SeedRule::Geometric { a, b }
    } else if let Some(pair) = &args.arithmetic {
        let (a, b) = parse_pair(pair)?;
        SeedRule::Arithmetic { a, b }
    } else if args.ones {
        SeedRule::Ones
    } else {
        bail!("no seed given: use --seed, --seed-file, --geometric, --arithmetic, or --ones");
    };
    Ok(rule.materialize(mode, n_max)?)
}

fn transform_methods(
    seed: &CoefficientSequence,
    mode: OperatorMode,
    method: Method,
    n_max: usize,
) -> Result<Vec<(&'static str, Vec<Rat>)>> {
    let m = mode.m();
    let z = match mode {
        OperatorMode::Restricted { .. } => restricted_transform(seed, n_max)?,
        OperatorMode::Associated { m } => associated_transform(seed, m, n_max)?,
    };
    let denominator = negate_tail(seed);
    let want = |name: Method| method == Method::All || method == name;
    let mut columns: Vec<(&'static str, Vec<Rat>)> = Vec::new();
    if want(Method::Recurrence) {
        columns.push(("recurrence", z.values().to_vec()));
    }
    if want(Method::Oracle) {
        let r = series_reciprocal(&denominator, n_max)?;
        columns.push(("oracle", r.values().to_vec()));
    }
    if want(Method::Determinant) {
        let mut col = vec![Rat::one()];
        for n in 1..=n_max {
            col.push(match mode {
                OperatorMode::Restricted { .. } => restricted_z_det(seed, m, n)?,
                // below the associated support z_n = 0 by definition.
                OperatorMode::Associated { .. } if n < m => Rat::zero(),
                OperatorMode::Associated { .. } => associated_z_det(seed, m, n)?,
            });
        }
        columns.push(("determinant", col));
    }
    if want(Method::Composition) {
        let mut col = vec![Rat::one()];
        for n in 1..=n_max {
            col.push(match mode {
                OperatorMode::Restricted { .. } => composition_sum_restricted(seed, m, n)?,
                OperatorMode::Associated { .. } => composition_sum_associated(seed, m, n)?,
            });
        }
        columns.push(("composition", col));
    }
    if want(Method::Trudi) {
        let mut col = vec![Rat::one()];
        for n in 1..=n_max {
            col.push(match mode {
                OperatorMode::Restricted { .. } => trudi_restricted(seed, m, n)?,
                OperatorMode::Associated { .. } => trudi_associated(seed, m, n)?,
            });
        }
        columns.push(("trudi", col));
    }
    if want(Method::Binom) {
        let min_part = if mode.is_restricted() { 0 } else { m };
        let mut col = vec![Rat::one()];
        for n in 1..=n_max {
            col.push(binomial_expansion_sum(&denominator, n, min_part)?);
        }
        columns.push(("binom", col));
    }
    Ok(columns)
}

fn agree_or_diff(columns: &[(&'static str, Vec<Rat>)], indices: impl Iterator<Item = usize>) -> Result<Vec<(usize, Rat)>> {
    let mut out = Vec::new();
    for n in indices {
        let reference = &columns[0].1[n];
        for (name, col) in &columns[1..] {
            if &col[n] != reference {
                let table: Vec<String> = columns
                    .iter()
                    .map(|(name, col)| format!("{name}={}", col[n]))
                    .collect();
                bail!(
                    "methods disagree at n = {n} ({} vs {}): {}",
                    columns[0].0,
                    name,
                    table.join(" ")
                );
            }
        }
        out.push((n, reference.clone()));
    }
    Ok(out)
}

fn compute_transform(args: ComputeTransformArgs) -> Result<()> {
    let mode = args.mode.mode()?;
    let (n_lo, n_hi) = parse_range(&args.n)?;
    let seed = resolve_seed(&args, mode, n_hi)?;
    if args.method == Method::Recurrence {
        // single-method fast path
        let z = match mode {
            OperatorMode::Restricted { .. } => restricted_transform(&seed, n_hi)?,
            OperatorMode::Associated { m } => associated_transform(&seed, m, n_hi)?,
        };
        let values: Vec<(usize, Rat)> =
            (n_lo..=n_hi).map(|n| (n, z.values()[n].clone())).collect();
        return write_output(&args.output, &values);
    }
    let columns = transform_methods(&seed, mode, args.method, n_hi)?;
    let values = agree_or_diff(&columns, n_lo..=n_hi)?;
    write_output(&args.output, &values)
}

fn compute_hyper(args: ComputeHyperArgs) -> Result<()> {
    let spec = FamilySpec::new(args.family, args.order)?;
    let mode = args.mode.mode()?;
    let cfg = if args.euler2_extended {
        HyperConfig::extended()
    } else {
        HyperConfig::default()
    };
    let (n_lo, n_hi) = parse_range(&args.n)?;
    let mut columns: Vec<(&'static str, Vec<Rat>)> = Vec::new();
    let want = |name: Method| args.method == Method::All || args.method == name;
    if args.method == Method::Recurrence {
        bail!("hypergeometric numbers have no recurrence route; use --method oracle (the defining series) or all");
    }
    if want(Method::Oracle) {
        let defs = hyper_from_definition(&spec, mode, cfg, n_hi)?;
        columns.push(("oracle", defs.into_iter().map(|h| h.value).collect()));
    }
    type HyperRoute = fn(
        &FamilySpec,
        OperatorMode,
        HyperConfig,
        usize,
    ) -> Result<cameron::hyper::HyperNumber, cameron::Error>;
    let routes: [(&'static str, Method, HyperRoute); 4] = [
        ("determinant", Method::Determinant, hyper_det),
        ("composition", Method::Composition, hyper_sum),
        ("binom", Method::Binom, hyper_binom_sum),
        ("trudi", Method::Trudi, hyper_trudi),
    ];
    for (name, method, f) in routes {
        if want(method) {
            let mut col = Vec::with_capacity(n_hi + 1);
            for p in 0..=n_hi {
                col.push(f(&spec, mode, cfg, p)?.value);
            }
            columns.push((name, col));
        }
    }
    let values = agree_or_diff(&columns, n_lo..=n_hi)?;
    write_output(&args.output, &values)
}

fn compute_closed_form(args: ClosedFormArgs) -> Result<()> {
    let (n_lo, n_hi) = parse_range(&args.n)?;
    if n_lo < args.m {
        bail!(
            "closed forms start at the support: need n >= m, got n = {n_lo} < m = {}",
            args.m
        );
    }
    let mut values = Vec::new();
    if let Some(pair) = &args.geometric {
        let (a, b) = parse_pair(pair)?;
        let p = GeometricParams::new(a, b, args.m)?;
        for n in n_lo..=n_hi {
            values.push((n, geometric_closed_form(&p, n)?));
        }
    } else {
        for n in n_lo..=n_hi {
            values.push((n, ones_closed_form(args.m, n)?));
        }
    }
    write_output(&args.output, &values)
}

fn transform_file(args: TransformArgs) -> Result<()> {
    let text = fs::read_to_string(&args.seed_file)
        .with_context(|| format!("reading {}", args.seed_file.display()))?;
    match args.direction {
        Direction::Forward => {
            let file = io::parse_seed_file(&text)?;
            let mode = match (file.m, &args.mode.mode()) {
                (Some(m), _) => OperatorMode::associated(m)?,
                (None, Ok(mode)) => *mode,
                (None, Err(_)) => OperatorMode::restricted(file.values.len().max(1))?,
            };
            if let (Some(m), Ok(flag_mode)) = (file.m, args.mode.mode()) {
                if flag_mode != OperatorMode::associated(m)? {
                    bail!("seed file declares associated m = {m}; it conflicts with the given mode flag");
                }
            }
            let seed = file.to_sequence(args.n_max)?;
            let z = match mode {
                OperatorMode::Restricted { .. } => restricted_transform(&seed, args.n_max)?,
                OperatorMode::Associated { m } => associated_transform(&seed, m, args.n_max)?,
            };
            emit(&args.out, &io::render_sequence_json(&z))
        }
        Direction::Invert => {
            let values = io::parse_sequence_json(&text)?;
            match values.first() {
                Some(head) if head.is_one() => {}
                Some(head) => bail!("not a valid transform: z_0 = {head}, expected 1"),
                None => bail!("empty z sequence"),
            }
            if values.len() <= args.n_max {
                bail!(
                    "z sequence holds indices 0..={}, but --n-max {} was requested",
                    values.len() - 1,
                    args.n_max
                );
            }
            let z = CoefficientSequence::new(values)?;
            let mut tail = Vec::with_capacity(args.n_max);
            for n in 1..=args.n_max {
                let det = x_from_z_det(&z, n)?;
                // determinant equals (-1)^(n-1) x_n
                tail.push(if n % 2 == 1 { det } else { -det });
            }
            emit(&args.out, &io::render_seed_json(&tail))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let cfg = VerifyConfig {
        scope: args.scope.parse::<Scope>()?,
        seed_count: args.seed_count,
        n_limit: args.n_limit,
        rng_seed: args.rng_seed,
    };
    let report = run_verify(&cfg);
    eprint!("{}", report.render_timings());
    emit(&args.out, &report.render_text())?;
    Ok(if report.passed() { 0 } else { 1 })
}
