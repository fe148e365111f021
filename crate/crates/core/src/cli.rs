//! Command-line interface.
//!
//! Exit statuses: 0 success, 1 negative answer (validation failed, point
//! outside region), 2 usage or domain error, 3 accuracy failure, 4 simulated
//! point outside a region, 5 I/O failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config;
use crate::copula::LowerSemilinearCopula;
use crate::diagonal::{Diagonal, FamilySpec, DEFAULT_GRID};
use crate::error::Error;
use crate::markov::xi_via_markov;
use crate::measures::{concordance, xi_closed};
use crate::output::{csv, human, write_boundary, write_cloud, write_samples};
use crate::quadrature::DEFAULT_TOL;
use crate::regions::{simulate_cloud, violated_pairs, RegionPair, DEFAULT_BOUNDARY_GRID, DEFAULT_SLACK};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ACCURACY: i32 = 3;
pub const EXIT_OUTSIDE_REGION: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "semilinear", version, about = "Dependence measures and exact regions for lower semilinear copulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a diagonal against every defining constraint
    Validate {
        #[command(flatten)]
        diagonal: DiagonalArgs,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Compute tau, rho, phi and xi
    Measures {
        #[command(flatten)]
        diagonal: DiagonalArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Route::Closed)]
        route: Route,
    },
    /// Test a point against one of the exact regions
    Region {
        #[arg(long)]
        pair: RegionPair,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[arg(long, default_value_t = 0.0)]
        slack: f64,
    },
    /// Area of a region, closed form and by quadrature
    Area {
        #[arg(long)]
        pair: RegionPair,
    },
    /// Measure vectors of random diagonals as CSV
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_pieces: usize,
        /// Output CSV; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw pairs from the copula as CSV
    Sample {
        #[command(flatten)]
        diagonal: DiagonalArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Region boundary curves as CSV
    Boundary {
        #[arg(long)]
        pair: RegionPair,
        #[arg(long, default_value_t = DEFAULT_BOUNDARY_GRID)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Closed,
    Markov,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Ua,
    La,
    Power,
    Frechet,
    Example23,
    MoProduct,
    Piecewise,
    Mixture,
}

/// A diagonal from a config (`--diagonal`) or from inline flags mirroring the config schema.
#[derive(Debug, Args)]
struct DiagonalArgs {
    /// Config file path, or inline JSON starting with '{'
    #[arg(long, conflicts_with = "family")]
    diagonal: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    knots: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    exponents: Option<Vec<f64>>,
    /// Mixture component, config path or inline JSON; repeatable
    #[arg(long = "component")]
    components: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

enum Failure {
    Usage(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

fn required(name: &str, value: Option<f64>) -> Result<f64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
}

fn spec_from_source(source: &str) -> Result<FamilySpec, Failure> {
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else {
        std::fs::read_to_string(source)?
    };
    Ok(config::parse_spec(&text)?)
}

impl DiagonalArgs {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        if let Some(source) = &self.diagonal {
            return spec_from_source(source);
        }
        let family = self
            .family
            .ok_or_else(|| Failure::Usage("give a diagonal with --diagonal or --family".into()))?;
        Ok(match family {
            FamilyKind::Ua => FamilySpec::Ua { a: required("a", self.a)? },
            FamilyKind::La => FamilySpec::La { a: required("a", self.a)? },
            FamilyKind::Power => FamilySpec::Power { p: required("p", self.p)? },
            FamilyKind::Frechet => FamilySpec::Frechet {
                alpha: required("alpha", self.alpha)?,
            },
            FamilyKind::Example23 => FamilySpec::Example23,
            FamilyKind::MoProduct => FamilySpec::MoProduct {
                alpha: required("alpha", self.alpha)?,
                beta: required("beta", self.beta)?,
            },
            FamilyKind::Piecewise => FamilySpec::Piecewise {
                knots: self.knots.clone().ok_or_else(|| Failure::Usage("--knots is required".into()))?,
                exponents: self
                    .exponents
                    .clone()
                    .ok_or_else(|| Failure::Usage("--exponents is required".into()))?,
            },
            FamilyKind::Mixture => FamilySpec::Mixture {
                components: self
                    .components
                    .iter()
                    .map(|c| spec_from_source(c))
                    .collect::<Result<_, _>>()?,
                weights: self.weights.clone().ok_or_else(|| Failure::Usage("--weights is required".into()))?,
            },
        })
    }

    fn build(&self) -> Result<Diagonal, Failure> {
        Ok(config::build(&self.spec()?)?)
    }
}

fn open_output<'a>(path: &Option<PathBuf>, out: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(out),
    })
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };

    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Accuracy { .. } => EXIT_ACCURACY,
                Error::Io(_) => EXIT_IO,
                Error::Domain(_) | Error::Config { .. } => EXIT_USAGE,
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Validate { diagonal, grid } => {
            // Build without the config-level validation so failures come back as a report.
            let d = crate::diagonal::make_family(&diagonal.spec()?)?;
            let report = d.validate(grid);
            writeln!(out, "{}", report.to_string().trim_end())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Measures { diagonal, tol, route } => {
            let d = diagonal.build()?;
            let c = concordance(&d, tol)?;
            let head = format!("tau={} rho={} phi={}", human(c.tau), human(c.rho), human(c.phi));
            match route {
                Route::Closed => writeln!(out, "{head} xi={}", human(xi_closed(&d, tol)?))?,
                Route::Markov => writeln!(out, "{head} xi={}", human(xi_via_markov(&d, tol)?))?,
                Route::Both => {
                    let closed = xi_closed(&d, tol)?;
                    let markov = xi_via_markov(&d, tol)?;
                    writeln!(
                        out,
                        "{head} xi_closed={} xi_markov={} gap={}",
                        human(closed),
                        human(markov),
                        human((closed - markov).abs())
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Region { pair, x, y, slack } => {
            if !(slack >= 0.0) {
                return Err(Failure::Usage("--slack must be non-negative".into()));
            }
            let (lower, upper) = pair.bounds(x)?;
            let inside = pair.contains(x, y, slack);
            writeln!(
                out,
                "{} lower={} upper={}",
                if inside { "inside" } else { "outside" },
                human(lower),
                human(upper)
            )?;
            Ok(if inside { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Area { pair } => {
            let a = pair.area()?;
            writeln!(
                out,
                "analytic={} numeric={} gap={}",
                csv(a.analytic),
                csv(a.numeric),
                human((a.analytic - a.numeric).abs())
            )?;
            Ok(EXIT_OK)
        }
        Command::Simulate { n, seed, max_pieces, out: path } => {
            let cloud = simulate_cloud(n, seed, max_pieces)?;
            let offenders: Vec<_> = cloud
                .iter()
                .enumerate()
                .filter_map(|(i, m)| {
                    let pairs = violated_pairs(m, DEFAULT_SLACK);
                    (!pairs.is_empty()).then_some((i, m, pairs))
                })
                .collect();

            let to_stdout = path.is_none();
            {
                let mut sink = open_output(&path, out)?;
                write_cloud(&mut sink, &cloud)?;
                sink.flush()?;
            }
            let summary: &mut dyn Write = if to_stdout { err } else { out };
            writeln!(summary, "points={} outside={}", cloud.len(), offenders.len())?;
            for (i, m, pairs) in &offenders {
                let ids: Vec<&str> = pairs.iter().map(|p| p.id()).collect();
                writeln!(
                    summary,
                    "point {i} outside {}: tau={} rho={} phi={} xi={}",
                    ids.join(","),
                    csv(m.tau),
                    csv(m.rho),
                    csv(m.phi),
                    csv(m.xi)
                )?;
            }
            Ok(if offenders.is_empty() { EXIT_OK } else { EXIT_OUTSIDE_REGION })
        }
        Command::Sample { diagonal, n, seed, out: path } => {
            let copula = LowerSemilinearCopula::new(diagonal.build()?);
            let batch = copula.sample(n, seed)?;
            let mut sink = open_output(&path, out)?;
            write_samples(&mut sink, &batch)?;
            sink.flush()?;
            Ok(EXIT_OK)
        }
        Command::Boundary { pair, grid, out: path } => {
            let rows = pair.boundary(grid)?;
            let mut sink = open_output(&path, out)?;
            write_boundary(&mut sink, &rows)?;
            sink.flush()?;
            Ok(EXIT_OK)
        }
    }
}
