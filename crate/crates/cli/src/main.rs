use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use planeasym::asym::{
    cp_asym, poly_correction, pp_width_asym, progressions_asym, psi_to_polyexp, skew_pp_asym,
    PolyExpParams, PsiParams,
};
use planeasym::oracle::{count_cp, count_pp_width_direct, count_skew_pp};
use planeasym::profile::{cp_factor_set, skew_decomposed_factors, Profile, SkewProfile};
use planeasym::series::{expand, CoefficientSeries, FactorSet};
use planeasym::validate::{
    laplace_check, ratio_report, sum_integral_bounds_check, synth_convolution_check, LaplaceFn,
    RatioReport, UnimodalFn,
};

#[derive(Parser)]
#[command(
    name = "planeasym",
    about = "Exact and asymptotic coefficient counts for skew plane partitions and cylindric partitions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the product generating function into exact coefficients.
    Expand(SeriesArgs),
    /// Print the closed-form asymptotic parameters for a family.
    Asym(KindArgs),
    /// Compare exact coefficients against the asymptotic prediction.
    Compare(CompareArgs),
    /// Count by direct enumeration (slow; cross-checks the expansion engine).
    Oracle(SeriesArgs),
    /// Run a numeric validation harness; exits 1 if a trend check fails.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Skew,
    Cp,
    PpWidth,
    Progressions,
    Partitions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct KindArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Step sequence: skew head or full cylindric period, e.g. "++-+" or "1,-1".
    #[arg(long)]
    profile: Option<String>,
    /// Strip width m (kind pp-width).
    #[arg(long)]
    width: Option<u64>,
    /// Progression factors "x,y[,mult]" separated by ';' (kind progressions).
    #[arg(long)]
    factors: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    kind: KindArgs,
    #[arg(long)]
    limit: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    kind: KindArgs,
    #[arg(long)]
    limit: usize,
    /// Comma-separated checkpoint indices; default decade grid capped at limit.
    #[arg(long)]
    checkpoints: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Harness {
    /// Two-factor convolution trend checks.
    Convolution,
    /// Polynomial-factor correction trend check.
    PolyCorrection,
    /// Laplace-approximation spot checks.
    Laplace,
    /// Sum-vs-integral bracketing checks.
    SumIntegral,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, value_enum)]
    harness: Harness,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("planeasym: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Expand(args) => {
            let set = factor_set(&args.kind, args.limit)?;
            let series = expand(&set, args.limit);
            emit_series(&series, args.format, args.kind.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Asym(args) => {
            let params = asym_params(&args)?;
            let text = format!("{}\n{}\n", params.to_json(), params.pretty());
            emit(&text, args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare(args) => {
            let set = factor_set(&args.kind, args.limit)?;
            let series = expand(&set, args.limit);
            let params = asym_params(&args.kind)?;
            let checkpoints = parse_checkpoints(args.checkpoints.as_deref(), args.limit)?;
            let report = ratio_report(&series, &params, &checkpoints)?;
            emit_report(&report, args.format, args.kind.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(args) => {
            let series = oracle_series(&args.kind, args.limit)?;
            emit_series(&series, args.format, args.kind.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate(args) => {
            let (text, ok) = run_harness(args.harness, args.format)?;
            emit(&text, args.out.as_deref())?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_profile(args: &KindArgs) -> Result<&str> {
    args.profile
        .as_deref()
        .context("--profile is required for this kind")
}

fn parse_width(args: &KindArgs) -> Result<u64> {
    let m = args.width.context("--width is required for kind pp-width")?;
    if m < 1 {
        bail!("--width must be >= 1");
    }
    Ok(m)
}

fn parse_factors(args: &KindArgs) -> Result<Vec<(u64, u64, u32)>> {
    let text = args
        .factors
        .as_deref()
        .context("--factors is required for kind progressions")?;
    let mut out = Vec::new();
    for part in text.split(';') {
        let nums: Vec<&str> = part.split(',').map(str::trim).collect();
        if nums.len() < 2 || nums.len() > 3 {
            bail!("factor {part:?} is not of the form x,y[,mult]");
        }
        let x: u64 = nums[0].parse().with_context(|| format!("bad x in {part:?}"))?;
        let y: u64 = nums[1].parse().with_context(|| format!("bad y in {part:?}"))?;
        let mult: u32 = if nums.len() == 3 {
            nums[2].parse().with_context(|| format!("bad mult in {part:?}"))?
        } else {
            1
        };
        out.push((x, y, mult));
    }
    if out.is_empty() {
        bail!("--factors must list at least one progression");
    }
    Ok(out)
}

fn factor_set(args: &KindArgs, _limit: usize) -> Result<FactorSet> {
    match args.kind {
        Kind::Skew => {
            let head = SkewProfile::parse(parse_profile(args)?)?;
            Ok(skew_decomposed_factors(&head))
        }
        Kind::Cp => {
            let profile = Profile::parse(parse_profile(args)?)?;
            Ok(cp_factor_set(&profile))
        }
        Kind::PpWidth => {
            let m = parse_width(args)?;
            let mut set = FactorSet::new();
            for y in 1..=m {
                set.push_progression(1, y, 1);
            }
            Ok(set)
        }
        Kind::Progressions => {
            let mut set = FactorSet::new();
            for (x, y, mult) in parse_factors(args)? {
                set.push_progression(x, y, mult);
            }
            Ok(set)
        }
        Kind::Partitions => {
            let mut set = FactorSet::new();
            set.push_progression(1, 1, 1);
            Ok(set)
        }
    }
}

fn asym_params(args: &KindArgs) -> Result<PolyExpParams> {
    let params = match args.kind {
        Kind::Skew => skew_pp_asym(&SkewProfile::parse(parse_profile(args)?)?)?,
        Kind::Cp => cp_asym(&Profile::parse(parse_profile(args)?)?)?,
        Kind::PpWidth => pp_width_asym(parse_width(args)?)?,
        Kind::Partitions => pp_width_asym(1)?,
        Kind::Progressions => {
            psi_to_polyexp(&progressions_asym(&parse_factors(args)?)?)
        }
    };
    Ok(params)
}

fn oracle_series(args: &KindArgs, limit: usize) -> Result<CoefficientSeries> {
    let series = match args.kind {
        Kind::Skew => count_skew_pp(&SkewProfile::parse(parse_profile(args)?)?, limit)?,
        Kind::Cp => count_cp(&Profile::parse(parse_profile(args)?)?, limit)?,
        Kind::PpWidth => count_pp_width_direct(parse_width(args)? as usize, limit)?,
        Kind::Partitions => count_skew_pp(&SkewProfile::new(Vec::new())?, limit)?,
        Kind::Progressions => bail!("no enumeration oracle for kind progressions"),
    };
    Ok(series)
}

fn parse_checkpoints(text: Option<&str>, limit: usize) -> Result<Vec<usize>> {
    let mut list = match text {
        Some(t) => t
            .split(',')
            .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad checkpoint {s:?}")))
            .collect::<Result<Vec<_>>>()?,
        None => [100, 1000, 10_000]
            .into_iter()
            .filter(|&n| n <= limit)
            .collect(),
    };
    list.sort_unstable();
    list.dedup();
    if list.is_empty() {
        bail!("no checkpoints within limit");
    }
    if let Some(&max) = list.last() {
        if max > limit {
            bail!("checkpoint {max} exceeds limit {limit}");
        }
    }
    Ok(list)
}

fn run_harness(harness: Harness, format: Format) -> Result<(String, bool)> {
    let mut text = String::new();
    let mut ok = true;
    let mut push_report = |label: &str, report: &RatioReport, trend: bool| {
        text.push_str(&format!("# {label}\n"));
        match format {
            Format::Csv => text.push_str(&report.to_csv()),
            Format::Json => {
                text.push_str(&report.to_json());
                text.push('\n');
            }
        }
        trend
    };
    match harness {
        Harness::Convolution => {
            let checkpoints = [1_000u64, 10_000, 30_000];
            let hr = planeasym::asym::ingham_params(1, 1)?;
            let report = synth_convolution_check(&hr, &hr, &checkpoints)?;
            ok &= push_report("unit strides", &report, report.trend_decreasing());

            let mut a = planeasym::asym::ingham_params(1, 1)?;
            let mut c = planeasym::asym::ingham_params(1, 2)?;
            a.stride = 2;
            c.stride = 3;
            let report = synth_convolution_check(&a, &c, &checkpoints)?;
            ok &= push_report("strides 2 and 3", &report, report.trend_decreasing());

            let a = PsiParams::new(0.8, 2.0, 0.3, 1.0 / 3.0, 1)?;
            let c = PsiParams::new(1.2, 1.0, -0.2, 1.0 / 3.0, 1)?;
            let report = synth_convolution_check(&a, &c, &checkpoints)?;
            ok &= push_report("exponent 1/3", &report, report.trend_decreasing());
        }
        Harness::PolyCorrection => {
            let mut set = FactorSet::new();
            set.push_progression(1, 1, 1);
            set.push_geometric(1, 1);
            set.push_geometric(2, 1);
            let series = expand(&set, 10_000);
            let asym = poly_correction(&pp_width_asym(1)?, &[1, 2])?;
            let report = ratio_report(&series, &asym, &[100, 1000, 10_000])?;
            ok &= push_report("partitions with two polynomial factors", &report, report.trend_decreasing());
        }
        Harness::Laplace => {
            // The Gaussian case is exact up to tail truncation, so the
            // ratio sits at 1 to quadrature precision instead of trending.
            let report = laplace_check(&LaplaceFn::NegSquare, &[100, 1000, 10_000])?;
            let close = report.rows.iter().all(|r| (r.ratio - 1.0).abs() < 1e-6);
            ok &= push_report("gaussian", &report, close);
            let saddle = LaplaceFn::Saddle {
                r1: 1.0,
                r2: 1.0,
                p: 0.5,
            };
            let report = laplace_check(&saddle, &[100, 1000, 10_000])?;
            ok &= push_report("saddle", &report, report.trend_decreasing());
        }
        Harness::SumIntegral => {
            for (label, f) in [
                ("tent", UnimodalFn::Tent),
                ("gaussian bump", UnimodalFn::GaussBump),
            ] {
                for n in [10u64, 100, 1000] {
                    let pass = sum_integral_bounds_check(&f, n)?;
                    text.push_str(&format!(
                        "{label},n={n},{}\n",
                        if pass { "within-bounds" } else { "OUT-OF-BOUNDS" }
                    ));
                    ok &= pass;
                }
            }
        }
    }
    Ok((text, ok))
}

fn emit_series(series: &CoefficientSeries, format: Format, out: Option<&std::path::Path>) -> Result<()> {
    let text = match format {
        Format::Csv => series.to_csv(),
        Format::Json => {
            let mut s = series.to_json();
            s.push('\n');
            s
        }
    };
    emit(&text, out)
}

fn emit_report(report: &RatioReport, format: Format, out: Option<&std::path::Path>) -> Result<()> {
    let text = match format {
        Format::Csv => report.to_csv(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    };
    emit(&text, out)
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
