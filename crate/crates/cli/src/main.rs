//! `stokes-isola`: tables and plot data for the high-frequency isolas of
//! Stokes waves in finite depth.
//!
//! Data goes to stdout, diagnostics to stderr. Exit status 0 on success, 2 on
//! a usage error, 3 on a numerical failure.

mod records;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use stokes_isola::asymptotics::{group_asymptotes, wavenumber_asymptote};
use stokes_isola::beta::{beta_scan, find_beta_zeros, HGrid};
use stokes_isola::fixtures;
use stokes_isola::isola::{band_endpoints, discriminant, eigenvalue_pair, ellipse_points, IsolaParams};
use stokes_isola::{beta1_breakdown, build_resonance_data, Depth, IsolaIndex};

use records::*;

/// Below this depth values are reported with a warning.
const SHALLOW: f64 = 0.05;

#[derive(Parser, Debug)]
#[command(name = "stokes-isola", version, about = "High-frequency instability isolas of Stokes waves in finite depth")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "csv")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Grid {
    /// A single depth.
    #[arg(long, conflicts_with_all = ["h_min", "h_max", "n"])]
    h: Option<f64>,
    #[arg(long, requires_all = ["h_max", "n"])]
    h_min: Option<f64>,
    #[arg(long, requires_all = ["h_min", "n"])]
    h_max: Option<f64>,
    /// Number of grid points, endpoints included.
    #[arg(long, requires_all = ["h_min", "h_max"])]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Collision wavenumber phi(p,h) and branching point omega*.
    Resonance {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        grid: Grid,
    },
    /// beta_1^(p)(h), its leading deep-water term and cancellation floor.
    Beta {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        grid: Grid,
        /// Every summand with its sign.
        #[arg(long, conflicts_with = "groups")]
        breakdown: bool,
        /// Group sums against their deep-water leading terms.
        #[arg(long)]
        groups: bool,
    },
    /// Critical depths: zeros of beta_1^(p) on an interval.
    Zeros {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        h_min: f64,
        #[arg(long)]
        h_max: f64,
        /// Grid intervals scanned for sign changes.
        #[arg(long, default_value_t = 4000)]
        grid_n: usize,
        /// Bracket width at which refinement stops.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Leading-order isola: ellipse samples, the unstable band, or eigenvalues.
    Isola(IsolaArgs),
    /// Compare beta_1 against a reference fixture file.
    Verify {
        #[arg(long, default_value = "fixtures/beta_oracle.tsv")]
        fixtures: PathBuf,
    },
}

#[derive(Args, Debug)]
struct IsolaArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    h: f64,
    /// Stokes-wave amplitude.
    #[arg(long)]
    eps: f64,
    /// Curvature coefficient T_1 of the discriminant (external input).
    #[arg(long = "T1")]
    t1: Option<f64>,
    /// Ellipse aspect coefficient E in (0, 1) (external input).
    #[arg(long = "E")]
    e: Option<f64>,
    /// Ellipse centre ordinate; defaults to omega*.
    #[arg(long)]
    y0: Option<f64>,
    /// Band centre; defaults to phi(p,h).
    #[arg(long)]
    mu0: Option<f64>,
    /// Number of ellipse samples, or of mu samples with --eigen.
    #[arg(long, default_value_t = 64)]
    n: usize,
    /// Emit the band of unstable Floquet exponents instead of the curve.
    #[arg(long, conflicts_with = "eigen")]
    band: bool,
    /// Emit the eigenvalue pair on a mu grid spanning twice the band.
    #[arg(long)]
    eigen: bool,
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<stokes_isola::Error> for Failure {
    fn from(e: stokes_isola::Error) -> Self {
        use stokes_isola::Error as E;
        match e {
            E::Domain { .. } | E::UnsupportedIndex(_) | E::Fixture { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Numerical(format!("output: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn index(p: u32, closed_form: bool) -> Result<IsolaIndex, Failure> {
    if p < 2 {
        return Err(Failure::Usage(format!("--p must be at least 2, got {p}")));
    }
    if closed_form && p > 4 {
        return Err(Failure::Usage(format!("--p {p}: beta_1 is available in closed form only for p = 2, 3, 4")));
    }
    Ok(IsolaIndex::new(p)?)
}

fn grid_points(g: &Grid) -> Result<Vec<f64>, Failure> {
    let grid = match (g.h, g.h_min, g.h_max, g.n) {
        (Some(h), None, None, None) => HGrid::single(Depth::new(h)?),
        (None, Some(a), Some(b), Some(n)) => HGrid::new(a, b, n)?,
        _ => return Err(Failure::Usage("give either --h or all of --h-min, --h-max, --n".into())),
    };
    let points = grid.points();
    if points.iter().any(|&h| h < SHALLOW) {
        eprintln!("warning: h < {SHALLOW} is in the shallow-asymptotic regime, use the oracle for reference values");
    }
    Ok(points)
}

fn depth(h: f64) -> Result<Depth, Failure> {
    Ok(Depth::new(h)?)
}

fn resonance(p: u32, grid: &Grid, format: Format, out: &mut impl Write) -> Outcome {
    let pi = index(p, false)?;
    let rows = grid_points(grid)?
        .into_par_iter()
        .map(|h| -> Result<ResonanceRow, Failure> {
            let d = depth(h)?;
            let data = build_resonance_data(pi, d)?;
            Ok(ResonanceRow {
                p,
                h,
                phi: data.phi_star,
                omega_star: data.omega_star,
                residual: data.collision_residual(),
                asymptote: wavenumber_asymptote(pi, d).ok(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(emit(&rows, &[], format, out)?)
}

fn beta(p: u32, grid: &Grid, breakdown: bool, groups: bool, format: Format, out: &mut impl Write) -> Outcome {
    let pi = index(p, true)?;
    let points = grid_points(grid)?;

    if breakdown || groups {
        let parts = points
            .into_par_iter()
            .map(|h| Ok(beta1_breakdown(pi, depth(h)?)?))
            .collect::<Result<Vec<_>, Failure>>()?;
        if breakdown {
            let rows: Vec<TermRow> = parts
                .iter()
                .flat_map(|b| {
                    b.terms.iter().map(move |t| TermRow {
                        p,
                        h: b.h.get(),
                        term: t.id.to_string(),
                        group: t.id.kind.group().to_string(),
                        sign: t.sign as i32,
                        value: t.value,
                        contribution: t.contribution(),
                    })
                })
                .collect();
            return Ok(emit(&rows, &[], format, out)?);
        }
        let models = group_asymptotes(pi)?;
        let mut rows = Vec::new();
        for b in &parts {
            for &(g, sum) in &b.group_sums {
                let leading = models.iter().find(|m| m.group == g).map_or(0.0, |m| m.model().eval(b.h));
                rows.push(GroupRow {
                    p,
                    h: b.h.get(),
                    group: g.to_string(),
                    sum,
                    leading,
                    ratio: (leading != 0.0).then(|| sum / leading),
                    floor: b.floor,
                });
            }
        }
        return Ok(emit(&rows, &[], format, out)?);
    }

    let grid = match points.as_slice() {
        [h] => HGrid::single(depth(*h)?),
        _ => HGrid::new(points[0], points[points.len() - 1], points.len())?,
    };
    let rows: Vec<ScanRow> = beta_scan(pi, &grid)?
        .into_iter()
        .map(|r| ScanRow {
            p,
            h: r.h,
            beta1: r.beta1,
            leading: r.leading,
            ratio: r.ratio,
            floor: r.floor,
            floor_flag: r.floor_flag,
        })
        .collect();
    Ok(emit(&rows, &[], format, out)?)
}

fn zeros(p: u32, h_min: f64, h_max: f64, grid_n: usize, tol: f64, format: Format, out: &mut impl Write) -> Outcome {
    let pi = index(p, true)?;
    if h_min < SHALLOW {
        eprintln!("warning: h < {SHALLOW} is in the shallow-asymptotic regime, use the oracle for reference values");
    }
    let rows: Vec<ZeroRow> = find_beta_zeros(pi, depth(h_min)?, depth(h_max)?, grid_n, tol)?
        .into_iter()
        .map(|z| ZeroRow { p, h_star: z.h, residual: z.beta })
        .collect();
    Ok(emit(&rows, ZERO_COLUMNS, format, out)?)
}

fn isola(a: &IsolaArgs, format: Format, out: &mut impl Write) -> Outcome {
    let pi = index(a.p, true)?;
    let missing = |flag: &str, what: &str| {
        Failure::Usage(format!(
            "{flag} is required: {what} has no closed form in this model and must be supplied as an external input"
        ))
    };
    let t1 = a.t1.ok_or_else(|| missing("--T1", "the curvature coefficient T_1^(p)(h)"))?;
    let e = a.e.ok_or_else(|| missing("--E", "the aspect coefficient E^(p)(h)"))?;

    let mut params = IsolaParams::new(pi, depth(a.h)?, a.eps, t1, e)?;
    if let Some(y0) = a.y0 {
        params = params.with_y0(y0);
    }
    if let Some(mu0) = a.mu0 {
        params = params.with_mu0(mu0);
    }
    let band = band_endpoints(&params);

    if a.band {
        let row = BandRow {
            p: a.p,
            h: a.h,
            eps: a.eps,
            beta1: params.beta1,
            t1,
            e,
            omega_star: params.omega_star,
            y0: params.y0,
            mu0: params.mu0,
            mu_low: band.mu_low,
            mu_high: band.mu_high,
            half_width: band.half_width,
            max_growth: params.max_growth(),
            open: band.open,
        };
        return Ok(emit(&[row], &[], format, out)?);
    }

    if a.eigen {
        if a.n < 2 {
            return Err(Failure::Usage("--n must be at least 2 with --eigen".into()));
        }
        let span = 2.0 * band.half_width;
        let rows: Vec<EigenRow> = (0..a.n)
            .map(|k| {
                let mu = params.mu0 - span + 2.0 * span * k as f64 / (a.n - 1) as f64;
                let (lp, lm) = eigenvalue_pair(mu, &params);
                EigenRow {
                    mu,
                    discriminant: discriminant(mu - params.mu0, &params),
                    re_plus: lp.re,
                    im_plus: lp.im,
                    re_minus: lm.re,
                    im_minus: lm.im,
                }
            })
            .collect();
        return Ok(emit(&rows, &[], format, out)?);
    }

    let rows: Vec<CurveRow> = ellipse_points(&params, a.n)?
        .into_iter()
        .enumerate()
        .map(|(k, q)| CurveRow { k, x: q.x, y: q.y, dy: q.dy })
        .collect();
    Ok(emit(&rows, &[], format, out)?)
}

fn verify(path: &PathBuf, format: Format, out: &mut impl Write) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let records = fixtures::parse(&text)?;
    let rows = records
        .par_iter()
        .map(|r| -> Result<VerifyRow, Failure> {
            let b = beta1_breakdown(index(r.p, true)?, depth(r.h)?)?;
            let error = (b.total - r.value_f64()).abs();
            Ok(VerifyRow {
                p: r.p,
                h: r.h,
                reference: r.value.clone(),
                computed: b.total,
                error,
                floor: b.floor,
                pass: error <= b.floor,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    emit(&rows, &[], format, &mut *out)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        return Err(Failure::Numerical(format!("{failed} of {} reference values outside the floor", rows.len())));
    }
    Ok(())
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("STOKES_ISOLA_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("STOKES_ISOLA_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Numerical(e.to_string()))
}

fn run(cli: Cli) -> Outcome {
    configure_threads()?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let format = cli.format;
    match &cli.command {
        Command::Resonance { p, grid } => resonance(*p, grid, format, &mut out)?,
        Command::Beta { p, grid, breakdown, groups } => beta(*p, grid, *breakdown, *groups, format, &mut out)?,
        Command::Zeros { p, h_min, h_max, grid_n, tol } => {
            zeros(*p, *h_min, *h_max, *grid_n, *tol, format, &mut out)?
        }
        Command::Isola(a) => isola(a, format, &mut out)?,
        Command::Verify { fixtures } => verify(fixtures, format, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
