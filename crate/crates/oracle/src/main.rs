//! Writes the reference fixture file consumed by the main test suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use stokes_isola_oracle::{oracle_evaluate, OracleConfig};

#[derive(Parser, Debug)]
#[command(about = "Evaluate beta_1 at high precision and write a fixture file")]
struct Args {
    /// Output path.
    #[arg(long, default_value = "fixtures/beta_oracle.tsv")]
    out: PathBuf,
    /// Number of (p, h) points.
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// How many of the points are drawn from shallow water, h in [0.05, 0.2].
    #[arg(long, default_value_t = 4)]
    shallow: usize,
    /// How many are drawn from deep water, h in [8, 15].
    #[arg(long, default_value_t = 4)]
    deep: usize,
    #[arg(long, default_value_t = 20_260_415)]
    seed: u64,
    /// Working precision in decimal digits.
    #[arg(long, default_value_t = 50)]
    digits: u32,
}

/// `x` rounded to four significant digits.
fn round4(x: f64) -> f64 {
    format!("{x:.3e}").parse().unwrap()
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match OracleConfig::new(args.digits, 2000) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let mut rng = StdRng::seed_from_u64(args.seed);
    let mut points = Vec::with_capacity(args.count);
    for k in 0..args.count {
        let p = 2 + (k % 3) as u32;
        let (lo, hi) = if k < args.shallow {
            (0.05f64, 0.2f64)
        } else if k < args.shallow + args.deep {
            (8.0, 15.0)
        } else {
            (0.2, 8.0)
        };
        let h = round4((rng.gen_range(lo.ln()..hi.ln())).exp());
        points.push((p, h));
    }

    let mut out = String::new();
    out.push_str(&format!(
        "# beta_1^(p)(h) reference values, {} working digits, seed {}\n",
        args.digits, args.seed
    ));
    out.push_str("# digits: significant digits of value expected correct after cancellation\n");
    out.push_str("# p\th\tvalue\tdigits\n");
    for (p, h) in points {
        match oracle_evaluate(p, h, &cfg) {
            Ok(v) => {
                let digits = v.correct_digits(&cfg).min(45);
                out.push_str(&format!("{p}\t{h:?}\t{}\t{digits}\n", v.beta1.to_decimal(digits as usize)));
            }
            Err(e) => {
                eprintln!("error at p = {p}, h = {h}: {e}");
                return ExitCode::from(3);
            }
        }
    }

    if let Err(e) = std::fs::write(&args.out, out) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
