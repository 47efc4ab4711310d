//! `selvar` — command-line driver for the variance / pair-correlation
//! laboratory. Every subcommand that writes CSV artifacts also writes a JSON
//! manifest recording the exact inputs, so runs can be reproduced and diffed.

mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use selvar_core::coeffs;
use selvar_core::euler::{EulerEvaluator, TruncationPolicy};
use selvar_core::hardy_littlewood::SingularSeries;
use selvar_core::predictions;
use selvar_core::registry::{CoefficientSource, LFunctionDescriptor};
use selvar_core::report::{fmt_sci, write_csv};
use selvar_core::variance::{self, WindowKind};
use selvar_core::zeros::{self, ZeroList};

use manifest::Manifest;

#[derive(Parser)]
#[command(
    name = "selvar",
    version,
    about = "Variances of prime sums in short intervals and pair correlation of L-function zeros"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonIo {
    /// Output directory for CSV artifacts and the run manifest.
    #[arg(long, default_value = "out")]
    out_dir: PathBuf,
    /// Coefficient-cache directory (overrides SELVAR_CACHE).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl CommonIo {
    fn cache_dir(&self) -> PathBuf {
        self.cache_dir
            .clone()
            .or_else(|| std::env::var_os("SELVAR_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("data/cache"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build (and cache) coefficient tables; optionally export Lambda_F as CSV.
    Coeffs {
        /// Built-in name (zeta | delta | ec37) or a descriptor config file.
        #[arg(long)]
        descriptor: String,
        /// Table length N for Lambda_F(n), n <= N.
        #[arg(long)]
        n: u64,
        /// Write (n, Lambda_F(n)) rows to this CSV file.
        #[arg(long)]
        lambda_csv: Option<PathBuf>,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Exact variance curve with the closed-form prediction overlay.
    Variance {
        #[arg(long)]
        descriptor: String,
        /// Evaluation endpoint X.
        #[arg(long)]
        x: f64,
        /// additive (x -> x+h) or multiplicative (x -> x(1+delta)) windows.
        #[arg(long, default_value = "additive")]
        stat: String,
        /// Grid of log(X/h) (resp. log(1/delta)) values: "lo:hi:count".
        #[arg(long)]
        grid_log: String,
        /// Table length; defaults to the smallest length covering the grid.
        #[arg(long)]
        n: Option<u64>,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Closed-form main terms only.
    Predict {
        #[arg(long)]
        descriptor: String,
        #[arg(long)]
        x: f64,
        /// Window length for the additive statistic.
        #[arg(long)]
        h: Option<f64>,
        /// Relative window for the multiplicative statistic.
        #[arg(long)]
        delta: Option<f64>,
        /// Height T for the pair-correlation main term.
        #[arg(long)]
        t: Option<f64>,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Singular series and von Mangoldt autocorrelation.
    Hl {
        /// Autocorrelation endpoint X (sum over n <= X).
        #[arg(long)]
        x: u64,
        /// Evaluate k = 1..=kmax.
        #[arg(long, default_value_t = 100)]
        kmax: u64,
        /// Prime cutoff for the singular-series product.
        #[arg(long, default_value_t = 1_000_000)]
        prime_cutoff: u64,
        /// Descriptor for the autocorrelation table (default zeta).
        #[arg(long, default_value = "zeta")]
        descriptor: String,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Pair-correlation statistics from a zero list, with predictions.
    Paircorr {
        #[arg(long)]
        descriptor: String,
        /// Zero-ordinate file: one decimal per line, # comments.
        #[arg(long)]
        zeros: PathBuf,
        /// Treat the file as positive ordinates of a self-dual function.
        #[arg(long)]
        reflect: bool,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        t: f64,
        /// Also dump (r, A_F(r), B_F(r)) on r = -0.2..0.2.
        #[arg(long)]
        euler_profile: bool,
        /// Also dump the integrand g(eta, t0) profile at this t0.
        #[arg(long)]
        g_profile_t: Option<f64>,
        /// Prime cutoff for the Euler-product evaluations.
        #[arg(long, default_value_t = 100_000)]
        prime_cutoff: u64,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Explicit-formula residuals at random (x, delta) points.
    Explicit {
        #[arg(long)]
        descriptor: String,
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long)]
        reflect: bool,
        /// Number of sample points.
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Samples are drawn with x in [x_min, x_max].
        #[arg(long, default_value_t = 50.0)]
        x_min: f64,
        #[arg(long, default_value_t = 1e4)]
        x_max: f64,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Kernel-lemma verification suite.
    Tauberian {
        #[command(flatten)]
        io: CommonIo,
    },
    /// Run the built-in oracle checks; exit 0 iff all pass.
    Selftest {
        /// Skip the slower checks.
        #[arg(long)]
        fast: bool,
    },
    /// Download a zero list to a local file (via the system curl).
    FetchZeros {
        #[arg(long)]
        url: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            // domain/range/config problems are usage errors
            let usage = e
                .downcast_ref::<selvar_core::Error>()
                .map(|err| {
                    matches!(
                        err,
                        selvar_core::Error::InvalidDescriptor(_)
                            | selvar_core::Error::Config { .. }
                            | selvar_core::Error::Range(_)
                    )
                })
                .unwrap_or(false);
            if usage {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn parse_grid(spec: &str) -> anyhow::Result<Vec<f64>> {
    let err = || {
        anyhow::Error::new(selvar_core::Error::Range(format!(
            "grid spec must be lo:hi:count, got '{spec}'"
        )))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(err());
    }
    let lo: f64 = parts[0].parse().map_err(|_| err())?;
    let hi: f64 = parts[1].parse().map_err(|_| err())?;
    let count: usize = parts[2].parse().map_err(|_| err())?;
    if count == 0 {
        return Ok(Vec::new());
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    if !(hi >= lo) {
        return Err(err());
    }
    Ok((0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect())
}

/// Prime coefficients, going through the on-disk cache for the sources that
/// are expensive to rebuild.
fn cached_prime_table(
    desc: &LFunctionDescriptor,
    cutoff: u64,
    cache_dir: &std::path::Path,
) -> selvar_core::Result<coeffs::PrimeCoefficientTable> {
    match desc.source {
        CoefficientSource::RamanujanDelta | CoefficientSource::EllipticCurve { .. } => {
            selvar_core::cache::load_or_build(cache_dir, &desc.name, cutoff, || {
                coeffs::prime_coefficients(desc, cutoff)
            })
        }
        _ => coeffs::prime_coefficients(desc, cutoff),
    }
}

fn build_table(
    desc: &LFunctionDescriptor,
    n: u64,
    cache_dir: &std::path::Path,
) -> selvar_core::Result<coeffs::CoefficientTable> {
    if matches!(desc.source, CoefficientSource::RiemannZeta) {
        let mut t = coeffs::von_mangoldt_sieve(n)?;
        t.desc_name = desc.name.clone();
        return Ok(t);
    }
    let primes = cached_prime_table(desc, n.max(2), cache_dir)?;
    coeffs::lambda_table_from(desc, &primes, n)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Coeffs {
            descriptor,
            n,
            lambda_csv,
            io,
        } => {
            let mut m = Manifest::new("coeffs");
            let desc = LFunctionDescriptor::resolve(&descriptor)?;
            m.input("descriptor", &descriptor)
                .input("n", n)
                .input("cache_dir", io.cache_dir().display().to_string());
            let table = build_table(&desc, n, &io.cache_dir())?;
            println!(
                "{}: degree {}, conductor {:.6}, psi({}) = {:.6}",
                desc.name,
                desc.degree(),
                desc.conductor(),
                n,
                table.psi(n as f64)
            );
            if let Some(csv) = &lambda_csv {
                let rows: Vec<Vec<String>> = (1..=n)
                    .map(|k| vec![k.to_string(), fmt_sci(table.lambda_at(k))])
                    .collect();
                write_csv(csv, &["n", "lambda"], &rows)?;
                m.output(csv);
            }
            m.write(&io.out_dir)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Variance {
            descriptor,
            x,
            stat,
            grid_log,
            n,
            io,
        } => {
            let mut m = Manifest::new("variance");
            let desc = LFunctionDescriptor::resolve(&descriptor)?;
            let kind = match stat.as_str() {
                "additive" => WindowKind::Additive,
                "multiplicative" => WindowKind::Multiplicative,
                other => {
                    return Err(selvar_core::Error::Range(format!(
                        "unknown statistic '{other}' (additive | multiplicative)"
                    ))
                    .into())
                }
            };
            let logs = parse_grid(&grid_log)?;
            let widths: Vec<f64> = logs
                .iter()
                .map(|lg| match kind {
                    WindowKind::Additive => x / lg.exp(),
                    WindowKind::Multiplicative => (-lg).exp(),
                })
                .collect();
            let max_width = widths.iter().copied().fold(0.0f64, f64::max);
            let needed = match kind {
                WindowKind::Additive => (x + max_width).ceil() as u64 + 1,
                WindowKind::Multiplicative => (x * (1.0 + max_width)).ceil() as u64 + 1,
            };
            let n = n.unwrap_or(needed);
            m.input("descriptor", &descriptor)
                .input("x", x)
                .input("stat", &stat)
                .input("grid_log", &grid_log)
                .input("n", n);

            let table = build_table(&desc, n, &io.cache_dir())?;
            let curve = variance::variance_curve(&table, x, &widths, kind)?;

            let rows: Vec<Vec<String>> = curve
                .points
                .iter()
                .map(|p| {
                    vec![
                        fmt_sci(p.x),
                        fmt_sci(p.width),
                        fmt_sci(p.value),
                        fmt_sci(p.normalized),
                        fmt_sci(p.log_x_over_h()),
                    ]
                })
                .collect();
            let variance_csv = io.out_dir.join("variance.csv");
            write_csv(
                &variance_csv,
                &["x", "h_or_delta", "value", "normalized", "log_x_over_h"],
                &rows,
            )?;
            m.output(&variance_csv);

            let pred_rows: Vec<Vec<String>> = curve
                .points
                .iter()
                .map(|p| {
                    let line = match kind {
                        WindowKind::Additive => predictions::predict_v_tilde(&desc, x, p.width),
                        WindowKind::Multiplicative => {
                            predictions::predict_v_delta(&desc, x, p.width)
                        }
                    }?;
                    Ok(vec![
                        fmt_sci(p.x),
                        fmt_sci(p.width),
                        fmt_sci(p.log_x_over_h()),
                        fmt_sci(line.value),
                        fmt_sci(line.normalized),
                        line.regime.as_str().to_string(),
                        line.formula.as_str().to_string(),
                    ])
                })
                .collect::<selvar_core::Result<_>>()?;
            let pred_csv = io.out_dir.join("predictions.csv");
            write_csv(
                &pred_csv,
                &[
                    "x",
                    "h_or_delta",
                    "log_x_over_h",
                    "main_term",
                    "normalized",
                    "regime",
                    "formula",
                ],
                &pred_rows,
            )?;
            m.output(&pred_csv);
            m.write(&io.out_dir)?;
            println!(
                "{} points written to {}",
                curve.points.len(),
                variance_csv.display()
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Predict {
            descriptor,
            x,
            h,
            delta,
            t,
            io,
        } => {
            let mut m = Manifest::new("predict");
            let desc = LFunctionDescriptor::resolve(&descriptor)?;
            m.input("descriptor", &descriptor).input("x", x);
            let mut rows = Vec::new();
            if let Some(h) = h {
                let p = predictions::predict_v_tilde(&desc, x, h)?;
                m.input("h", h);
                rows.push((String::from("h"), h, p));
            }
            if let Some(d) = delta {
                let p = predictions::predict_v_delta(&desc, x, d)?;
                m.input("delta", d);
                rows.push((String::from("delta"), d, p));
            }
            if let Some(t) = t {
                let p = predictions::predict_pair_correlation(&desc, x, t)?;
                m.input("t", t);
                rows.push((String::from("t"), t, p));
            }
            if rows.is_empty() {
                return Err(selvar_core::Error::Range(
                    "predict needs at least one of --h, --delta, --t".into(),
                )
                .into());
            }
            let csv_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|(kind, w, p)| {
                    vec![
                        p.kind.as_str().to_string(),
                        kind.clone(),
                        fmt_sci(*w),
                        fmt_sci(x),
                        fmt_sci(p.value),
                        fmt_sci(p.normalized),
                        p.regime.as_str().to_string(),
                        p.formula.as_str().to_string(),
                    ]
                })
                .collect();
            let path = io.out_dir.join("predict.csv");
            write_csv(
                &path,
                &[
                    "statistic",
                    "parameter",
                    "value",
                    "x",
                    "main_term",
                    "normalized",
                    "regime",
                    "formula",
                ],
                &csv_rows,
            )?;
            for (kind, w, p) in &rows {
                println!(
                    "{} {kind}={w}: main term {:.6e}, normalized {:.6}, regime {}",
                    p.kind.as_str(),
                    p.value,
                    p.normalized,
                    p.regime.as_str()
                );
            }
            m.output(&path);
            m.write(&io.out_dir)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Hl {
            x,
            kmax,
            prime_cutoff,
            descriptor,
            io,
        } => {
            let mut m = Manifest::new("hl");
            let desc = LFunctionDescriptor::resolve(&descriptor)?;
            m.input("x", x)
                .input("kmax", kmax)
                .input("prime_cutoff", prime_cutoff)
                .input("descriptor", &descriptor);
            let series = SingularSeries::new(prime_cutoff)?;
            let table = build_table(&desc, x + kmax, &io.cache_dir())?;
            let rows: Vec<Vec<String>> = (1..=kmax)
                .map(|k| {
                    let s = series.eval(k)?;
                    let auto = selvar_core::hardy_littlewood::autocorrelation(&table, x, k)?;
                    let per_x = auto / x as f64;
                    let ratio = if s.value > 0.0 {
                        per_x / s.value
                    } else {
                        f64::NAN
                    };
                    Ok(vec![
                        k.to_string(),
                        fmt_sci(s.value),
                        fmt_sci(per_x),
                        fmt_sci(ratio),
                    ])
                })
                .collect::<selvar_core::Result<_>>()?;
            let path = io.out_dir.join("hardy_littlewood.csv");
            write_csv(
                &path,
                &["k", "singular_series", "autocorrelation_per_x", "ratio"],
                &rows,
            )?;
            m.output(&path);
            m.write(&io.out_dir)?;
            println!("{kmax} rows written to {}", path.display());
            Ok(ExitCode::SUCCESS)
        }

        Command::Paircorr {
            descriptor,
            zeros: zeros_path,
            reflect,
            x,
            t,
            euler_profile,
            g_profile_t,
            prime_cutoff,
            io,
        } => {
            let mut m = Manifest::new("paircorr");
            let desc = LFunctionDescriptor::resolve(&descriptor)?;
            m.input("descriptor", &descriptor)
                .input("zeros", zeros_path.display().to_string())
                .input("reflect", reflect)
                .input("x", x)
                .input("t", t)
                .input("prime_cutoff", prime_cutoff);
            let list = ZeroList::load(&zeros_path, reflect)?;
            let f = zeros::f_statistic(&list, x, t)?;
            let ftilde = zeros::f_tilde(&list, x, t)?;
            let pred = predictions::predict_pair_correlation(&desc, x, t)?;
            let ratio = f / pred.value;
            let rows = vec![vec![
                fmt_sci(x),
                fmt_sci(t),
                fmt_sci(f),
                fmt_sci(ftilde),
                fmt_sci(pred.value),
                fmt_sci(ratio),
            ]];
            let path = io.out_dir.join("paircorr.csv");
            write_csv(
                &path,
                &["x", "t", "f", "f_tilde", "prediction", "ratio"],
                &rows,
            )?;
            m.output(&path);
            println!(
                "F = {f:.4}, F~ = {ftilde:.4}, prediction {:.4}, ratio {ratio:.4}",
                pred.value
            );

            if euler_profile || g_profile_t.is_some() {
                let policy = TruncationPolicy {
                    prime_cutoff,
                    ..Default::default()
                };
                let ev = EulerEvaluator::new(&desc, policy)?;
                if euler_profile {
                    let rows: Vec<Vec<String>> = (-8..=8)
                        .map(|i| {
                            let r = Complex64::new(i as f64 * 0.025, 0.0);
                            let a = ev.a_f(r)?.value;
                            let b = ev.b_f(r)?.value;
                            Ok(vec![
                                fmt_sci(r.re),
                                fmt_sci(a.re),
                                fmt_sci(a.im),
                                fmt_sci(b.re),
                                fmt_sci(b.im),
                            ])
                        })
                        .collect::<selvar_core::Result<_>>()?;
                    let path = io.out_dir.join("euler_factors.csv");
                    write_csv(&path, &["r", "a_re", "a_im", "b_re", "b_im"], &rows)?;
                    m.output(&path);
                }
                if let Some(t0) = g_profile_t {
                    let rows: Vec<Vec<String>> = (1..=60)
                        .map(|i| {
                            let eta = i as f64 * 0.05;
                            let g = ev.rcs_integrand(eta, t0)?;
                            Ok(vec![fmt_sci(eta), fmt_sci(g.re), fmt_sci(g.im)])
                        })
                        .collect::<selvar_core::Result<_>>()?;
                    let path = io.out_dir.join("rcs_profile.csv");
                    write_csv(&path, &["eta", "g_re", "g_im"], &rows)?;
                    m.output(&path);
                }
            }
            m.write(&io.out_dir)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Explicit {
            descriptor,
            zeros: zeros_path,
            reflect,
            count,
            seed,
            x_min,
            x_max,
            io,
        } => {
            use rand::{Rng, SeedableRng};
            let mut m = Manifest::new("explicit");
            let desc = LFunctionDescriptor::resolve(&descriptor)?;
            m.input("descriptor", &descriptor)
                .input("zeros", zeros_path.display().to_string())
                .input("reflect", reflect)
                .input("count", count)
                .input("seed", seed)
                .input("x_min", x_min)
                .input("x_max", x_max);
            let list = ZeroList::load(&zeros_path, reflect)?;
            let z = list
                .max_ordinate()
                .ok_or_else(|| selvar_core::Error::Range("zero list is empty".into()))?;
            let table = build_table(&desc, (x_max * 1.3).ceil() as u64, &io.cache_dir())?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut rows = Vec::with_capacity(count);
            for _ in 0..count {
                let x = rng.gen_range(x_min..x_max);
                let delta = rng.gen_range(0.01..0.2);
                let r = zeros::explicit_formula_residual(&table, &list, x, delta, z)?;
                rows.push(vec![
                    fmt_sci(x),
                    fmt_sci(delta),
                    fmt_sci(r.lhs),
                    fmt_sci(r.zero_sum),
                    fmt_sci(r.residual),
                    fmt_sci(r.envelope),
                ]);
            }
            let path = io.out_dir.join("explicit.csv");
            write_csv(
                &path,
                &["x", "delta", "lhs", "zero_sum", "residual", "envelope"],
                &rows,
            )?;
            m.output(&path);
            m.write(&io.out_dir)?;
            println!("{count} residuals written to {}", path.display());
            Ok(ExitCode::SUCCESS)
        }

        Command::Tauberian { io } => {
            let mut m = Manifest::new("tauberian");
            let rows = tauberian_rows()?;
            let mut ok = true;
            for r in &rows {
                let passed = r.4;
                ok &= passed;
                println!(
                    "{} {} (param {}): computed {:.8e}, predicted {:.8e}",
                    if passed { "PASS" } else { "FAIL" },
                    r.0,
                    r.1,
                    r.2,
                    r.3
                );
            }
            let csv_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.0.clone(),
                        r.1.clone(),
                        fmt_sci(r.2),
                        fmt_sci(r.3),
                        (if r.4 { "pass" } else { "fail" }).to_string(),
                    ]
                })
                .collect();
            let path = io.out_dir.join("tauberian.csv");
            write_csv(
                &path,
                &["check", "parameter", "computed", "predicted", "status"],
                &csv_rows,
            )?;
            m.output(&path);
            m.write(&io.out_dir)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Selftest { fast } => {
            let checks = selvar_core::selftest::run(fast);
            let mut ok = true;
            for c in &checks {
                ok &= c.passed;
                println!(
                    "{} {} — {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            println!(
                "{}/{} checks passed",
                checks.iter().filter(|c| c.passed).count(),
                checks.len()
            );
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::FetchZeros { url, out } => {
            if let Some(dir) = out.parent() {
                std::fs::create_dir_all(dir)?;
            }
            let status = std::process::Command::new("curl")
                .args(["-fsSL", "-o"])
                .arg(&out)
                .arg(&url)
                .status()
                .map_err(|e| anyhow::anyhow!("could not run curl: {e}"))?;
            if !status.success() {
                anyhow::bail!("curl failed with {status}");
            }
            // validate before declaring success
            let list = ZeroList::load(&out, true)?;
            println!("{} ordinates written to {}", list.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The kernel-lemma checks behind the `tauberian` subcommand:
/// (name, parameter, computed, predicted, within tolerance).
fn tauberian_rows() -> anyhow::Result<Vec<(String, String, f64, f64, bool)>> {
    use selvar_core::tauberian::*;
    let mut rows = Vec::new();

    // Fejer functional of a constant: pi kappa
    for kappa in [0.5, 0.05] {
        let tab = Tabulated::even_from_fn(|_| 1.0, 3000.0 / kappa, 30_000, 0.1);
        let r = fejer_functional(&tab, kappa, 2e-3)?;
        let want = std::f64::consts::PI * kappa;
        rows.push((
            "fejer_constant".into(),
            format!("kappa={kappa}"),
            r.value,
            want,
            (r.value - want).abs() <= r.tail_bound + 1e-5,
        ));
    }

    // Fejer asymptotic for the log-type profile
    let b = 1.0 - selvar_core::EULER_GAMMA - 2.0f64.ln();
    for kappa in [1e-2, 1e-3] {
        let tab = Tabulated::even_from_fn(
            |u: f64| 0.5 * (2.0 + u.abs()).ln(),
            3000.0 / kappa,
            30_000,
            0.1,
        );
        let r = fejer_functional(&tab, kappa, 1e-3)?;
        let want = 0.5 * std::f64::consts::PI * kappa * ((1.0 / kappa).ln() + b);
        let tol = 0.05 * kappa * (1.0 / kappa).ln();
        rows.push((
            "fejer_log_asymptotic".into(),
            format!("kappa={kappa}"),
            r.value,
            want,
            (r.value - want).abs() <= tol,
        ));
    }

    // window kernel point values and transform identity
    let eta = 0.5;
    rows.push((
        "window_kernel_origin".into(),
        format!("eta={eta}"),
        k_eta(0.0, eta),
        2.0 + eta,
        (k_eta(0.0, eta) - (2.0 + eta)).abs() < 1e-12,
    ));
    for t in [0.5, 2.0, 1.0 + eta / 2.0] {
        let diff = lemma2_transform_identity(eta, t)?;
        let hat = k_eta_hat(t, eta);
        rows.push((
            "window_transform_identity".into(),
            format!("eta={eta},t={t}"),
            hat + diff,
            hat,
            diff.abs() <= 1e-4,
        ));
    }

    // exponential-weight averaging
    let y = 30.0;
    let tab = Tabulated::from_fn(|_| 1.0, y - 45.0, y + 45.0, 4096, false, 0.0);
    let (dev, conclusion) = lemma3_check(&tab, y)?;
    rows.push((
        "exp_weight_trivial".into(),
        format!("y={y}"),
        conclusion,
        1.5,
        dev < 1e-10 && (conclusion - 1.5).abs() < 1e-12,
    ));
    let tab = Tabulated::from_fn(
        |t: f64| 1.0 + (-t).exp(),
        y - 45.0,
        y + 45.0,
        8192,
        false,
        0.1,
    );
    let (dev, conclusion) = lemma3_check(&tab, y)?;
    rows.push((
        "exp_weight_decay".into(),
        format!("y={y}"),
        conclusion,
        1.5 + (-y).exp(),
        dev <= 2e-13 + 1.2 * (4.0 / 3.0) * (-y).exp()
            && (conclusion - 1.5 - (-y).exp()).abs() < 1e-6,
    ));

    Ok(rows)
}
