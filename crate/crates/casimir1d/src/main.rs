use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use casimir1d::figures::{
    emit_figure, per_mode_sweep, sweep, FigureOptions, Observable, PerModeConfig, PerModeSpectrum,
    SweepConfig, DEFAULT_CLIP, DEFAULT_POINTS,
};
use casimir1d::maxent::{minimize, MaxEntConfig, SearchStrategy};
use casimir1d::output::{Column, CurveSet, OutputFormat};
use casimir1d::verify::{all_passed, run_all, VerifyOptions};
use casimir1d::{BoundaryPair, CutoffFamily, Error};

/// Casimir energies, forces, free energies and entropies of a partitioned
/// one-dimensional box, in natural units hbar = c = k_B = 1.
#[derive(Parser)]
#[command(name = "casimir1d", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-mode spectrum energy versus frequency
    Permode(PermodeArgs),
    /// Casimir energy sweep over the partition position
    Energy(SweepArgs),
    /// Casimir force sweep over the partition position
    Force(SweepArgs),
    /// Casimir entropy sweep over the partition position
    Entropy(SweepArgs),
    /// Reproduce one of the seven standard curve sets
    Figure(FigureArgs),
    /// Search the Wien-compatible family for the minimum-Casimir-energy spectrum
    Optimize(OptimizeArgs),
    /// Run the oracle verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BcArg {
    Like,
    Unlike,
}

impl From<BcArg> for BoundaryPair {
    fn from(bc: BcArg) -> Self {
        match bc {
            BcArg::Like => BoundaryPair::Like,
            BcArg::Unlike => BoundaryPair::Unlike,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CutoffArg {
    Exp,
    Gauss,
}

impl From<CutoffArg> for CutoffFamily {
    fn from(c: CutoffArg) -> Self {
        match c {
            CutoffArg::Exp => CutoffFamily::Exponential,
            CutoffArg::Gauss => CutoffFamily::Gaussian,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Boundary pairing between partition and walls
    #[arg(long, value_enum, default_value = "like")]
    bc: BcArg,
    /// Box length L
    #[arg(long, default_value_t = 3.0)]
    length: f64,
    /// Comma-separated temperatures, one output series each
    #[arg(long, value_delimiter = ',', default_value = "0,1,3")]
    temps: Vec<f64>,
    /// Number of partition positions
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    /// Fraction of the box excised at each wall
    #[arg(long, default_value_t = DEFAULT_CLIP)]
    x_min_fraction: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PermodeArgs {
    /// Spectrum family
    #[arg(long, value_enum, default_value = "planck")]
    spectrum: SpectrumArg,
    /// Comma-separated temperatures
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    temps: Vec<f64>,
    /// Upper end of the frequency grid
    #[arg(long, default_value_t = 6.0)]
    omega_max: f64,
    /// Number of frequency points
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumArg {
    Zp,
    Rj,
    Planck,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure index, 1 through 7
    index: u32,
    /// Number of abscissa points
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Boundary pairing between partition and walls
    #[arg(long, value_enum, default_value = "like")]
    bc: BcArg,
    /// Box length L
    #[arg(long, default_value_t = 3.0)]
    length: f64,
    /// Comma-separated temperatures, one optimization run each
    #[arg(long, value_delimiter = ',', default_value = "2")]
    temps: Vec<f64>,
    /// Lower integration limit; defaults to 0.2 L
    #[arg(long)]
    delta: Option<f64>,
    /// Quadrature subdivisions (even, at least 16)
    #[arg(long, default_value_t = 64)]
    panels: usize,
    /// Search strategy
    #[arg(long, value_enum, default_value = "grid-local")]
    search: SearchArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchArg {
    Grid,
    GridLocal,
}

#[derive(Args)]
struct VerifyArgs {
    /// Cutoff family used by the ladder checks
    #[arg(long, value_enum, default_value = "exp")]
    cutoff: CutoffArg,
    /// Fault-injection self test: perturb the zero-point coefficient so the
    /// first oracle check must fail
    #[arg(long, hide = true)]
    perturb_zp: bool,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CASIMIR1D_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                // ignore failure: the pool may already be initialized
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("casimir1d: CASIMIR1D_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }

    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("casimir1d: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> casimir1d::Result<ExitCode> {
    match cli.command {
        Command::Permode(args) => {
            let cfg = PerModeConfig {
                spectrum: match args.spectrum {
                    SpectrumArg::Zp => PerModeSpectrum::ZeroPoint,
                    SpectrumArg::Rj => PerModeSpectrum::RayleighJeans,
                    SpectrumArg::Planck => PerModeSpectrum::Planck,
                },
                temperatures: args.temps,
                omega_max: args.omega_max,
                points: args.points,
                clip: DEFAULT_CLIP,
            };
            write_curves(&per_mode_sweep(&cfg)?, &args.output)?;
        }
        Command::Energy(args) => run_sweep(Observable::Energy, args)?,
        Command::Force(args) => run_sweep(Observable::Force, args)?,
        Command::Entropy(args) => run_sweep(Observable::Entropy, args)?,
        Command::Figure(args) => {
            let opts = FigureOptions {
                points: args.points,
                clip: DEFAULT_CLIP,
            };
            write_curves(&emit_figure(args.index, &opts)?, &args.output)?;
        }
        Command::Optimize(args) => {
            let curves = run_optimize(&args)?;
            write_curves(&curves, &args.output)?;
        }
        Command::Verify(args) => {
            let opts = VerifyOptions {
                family: args.cutoff.into(),
                zp_scale: if args.perturb_zp { 1.01 } else { 1.0 },
            };
            let outcomes = run_all(&opts);
            let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
            for o in &outcomes {
                let status = if o.passed { "pass" } else { "FAIL" };
                println!("{status}  {:width$}  {}", o.name, o.detail);
            }
            if !all_passed(&outcomes) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_sweep(observable: Observable, args: SweepArgs) -> casimir1d::Result<()> {
    let cfg = SweepConfig {
        observable,
        bc: args.bc.into(),
        length: args.length,
        temperatures: args.temps,
        points: args.points,
        clip: args.x_min_fraction,
    };
    write_curves(&sweep(&cfg)?, &args.output)
}

fn run_optimize(args: &OptimizeArgs) -> casimir1d::Result<CurveSet> {
    let mut temps = args.temps.clone();
    temps.sort_by(f64::total_cmp);
    temps.dedup();
    if temps.is_empty() {
        return Err(Error::InvalidConfig("temperature list is empty".into()));
    }
    let delta = args.delta.unwrap_or(0.2 * args.length);
    let strategy = match args.search {
        SearchArg::Grid => SearchStrategy::Grid,
        SearchArg::GridLocal => SearchStrategy::GridThenLocal,
    };

    let mut columns: Vec<Column> = ["T", "c1", "c2", "objective", "iterations", "converged"]
        .iter()
        .map(|name| Column::new(*name, Vec::new()))
        .collect();
    for &t in &temps {
        let cfg = MaxEntConfig::new(args.length, t, delta, args.panels, args.bc.into())?;
        let opt = minimize(&cfg, strategy)?;
        for (col, v) in columns.iter_mut().zip([
            t,
            opt.c1,
            opt.c2,
            opt.objective,
            opt.iterations as f64,
            if opt.converged { 1.0 } else { 0.0 },
        ]) {
            col.values.push(v);
        }
    }
    let meta = vec![
        ("command".into(), "optimize".into()),
        ("bc".into(), BoundaryPair::from(args.bc).label().into()),
        ("length".into(), format!("{}", args.length)),
        ("delta".into(), format!("{delta}")),
        ("panels".into(), args.panels.to_string()),
        (
            "search".into(),
            match args.search {
                SearchArg::Grid => "grid".into(),
                SearchArg::GridLocal => "grid-local".into(),
            },
        ),
        ("units".into(), "hbar=c=kB=1".into()),
    ];
    CurveSet::new(meta, columns)
}

fn write_curves(curves: &CurveSet, output: &OutputArgs) -> casimir1d::Result<()> {
    let format: OutputFormat = output.format.into();
    let text = format.render(curves);
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
