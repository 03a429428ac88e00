//! `maghom`: magnitude homology of enriched categories from JSON descriptions.

mod builders;
mod compute;
mod input;
mod render;
mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maghom::iterated::Route;
use maghom::scalar::{parse_rational, ParseNumberError};
use thiserror::Error;

use compute::{ComputeError, Request};
use input::{InputError, Structure};

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Compute(#[from] ComputeError),
    #[error("bad --grading: {0}")]
    Grading(#[from] ParseNumberError),
    #[error("no builder named `{0}`; run `maghom builders` for the list")]
    UnknownBuilder(String),
    #[error("MAGHOM_THREADS must be a positive integer, got `{0}`")]
    Threads(String),
}

#[derive(Parser, Debug)]
#[command(name = "maghom", version, about = "Exact magnitude homology of enriched categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Diag,
    Tot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute homology tables.
    Homology {
        /// Input document, or `-` for standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Highest homological degree to report.
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        /// Length grading to compute (repeatable); integers, decimals or fractions.
        #[arg(long = "grading", conflicts_with = "all_gradings")]
        gradings: Vec<String>,
        /// Compute every grading that can carry homology in the requested degrees (the default).
        #[arg(long)]
        all_gradings: bool,
        #[arg(long, value_enum, default_value = "tot")]
        route: RouteArg,
        /// Drop row degeneracies before totalizing (diagonal route: use normalized chains).
        #[arg(long)]
        normalize_rows: bool,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Compare pipeline homology with the closed-form predictions for the input's kind.
    Verify {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Degree bound for route, suspension and Künneth comparisons.
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Print a canned example document, or list them.
    Builders { name: Option<String> },
    /// Validate the input and report its size and connected components.
    Info {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

fn read_structure(path: &PathBuf) -> Result<Structure, CliError> {
    let mut text = String::new();
    let shown = path.display().to_string();
    let io_err = |source| CliError::Io { path: shown.clone(), source };
    if shown == "-" {
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
    } else {
        text = std::fs::read_to_string(path).map_err(io_err)?;
    }
    Ok(input::parse_input(&text)?)
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("MAGHOM_THREADS") {
        let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| CliError::Threads(v.clone()))?;
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn info(s: &Structure) -> String {
    let mut lines = vec![format!("kind: {}", s.kind()), "valid: yes".to_string()];
    match s {
        Structure::Category(c) => {
            lines.push(format!("objects: {}", c.objects().len()));
            lines.push(format!("morphisms: {}", c.morphisms().len()));
            lines.push(format!("components: {}", c.connected_components().len()));
        }
        Structure::CategoryProduct(a, b) => {
            let p = a.product(b);
            lines.push(format!("objects: {} × {} = {}", a.objects().len(), b.objects().len(), p.objects().len()));
            lines.push(format!("morphisms: {}", p.morphisms().len()));
            lines.push(format!("components: {}", p.connected_components().len()));
        }
        Structure::Metric(x) => {
            lines.push(format!("points: {}", x.len()));
            lines.push(format!("symmetric: {}", if x.is_symmetric() { "yes" } else { "no" }));
            lines.push(format!("components: {}", metric_components(x)));
        }
        Structure::MetricTensor(x, y) => {
            let t = maghom::enriched::tensor_metric(x, y);
            lines.push(format!("points: {} × {} = {}", x.len(), y.len(), t.len()));
            lines.push(format!("components: {}", metric_components(&t)));
        }
        Structure::Normed(g) => {
            let values: Vec<String> = g.norm_values().iter().map(|l| l.to_string()).collect();
            lines.push(format!("order: {}", g.group().order()));
            lines.push(format!("norm values: {}", values.join(", ")));
            lines.push(format!("conjugacy classes: {}", g.group().conjugacy_classes().len()));
            lines.push("components: 1".to_string());
        }
        Structure::CatGroup(g) => {
            lines.push(format!("order: {}", g.group().order()));
            lines.push(format!("morphisms: {}", g.category().morphisms().len()));
            lines.push(format!("components: {}", g.component_group().0.order()));
        }
        Structure::NCat { x, .. } => {
            lines.push(format!("level: {}", x.level()));
            let cells: Vec<String> = (0..=x.level()).map(|k| x.cell_count(k).to_string()).collect();
            lines.push(format!("cells per dimension: {}", cells.join(", ")));
            lines.push(format!("components: {}", x.connected_components().len()));
        }
    }
    lines.join("\n") + "\n"
}

/// Classes of points joined by a finite distance in either direction.
fn metric_components(x: &maghom::RationalMetricSpace) -> usize {
    let n = x.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for a in 0..n {
        for b in 0..n {
            if x.d(a, b).finite().is_some() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    (0..n).filter(|&a| find(&mut parent, a) == a).count()
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, CliError> {
    configure_threads()?;
    let write = |out: &mut dyn Write, s: &str| out.write_all(s.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source });
    match cli.command {
        Command::Homology { input, max_degree, gradings, all_gradings: _, route, normalize_rows, output } => {
            let s = read_structure(&input)?;
            let req = Request {
                max_degree,
                gradings: gradings.iter().map(|g| parse_rational(g)).collect::<Result<_, _>>()?,
                route: match route {
                    RouteArg::Diag => Route::Diagonal,
                    RouteArg::Tot => Route::Tot,
                },
                normalize_rows,
            };
            let h = compute::homology(&s, &req)?;
            let text = match output {
                Output::Text => render::text(s.kind(), max_degree, &h),
                Output::Json => render::json(s.kind(), max_degree, &h),
            };
            write(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, max_degree } => {
            let s = read_structure(&input)?;
            let checks = verify::verify(&s, max_degree);
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!("{c}\n"));
            }
            write(out, &text)?;
            Ok(if checks.iter().all(|c| c.pass) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Builders { name: None } => {
            let names: Vec<&str> = builders::BUILDERS.iter().map(|(n, _)| *n).collect();
            write(out, &(names.join("\n") + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Builders { name: Some(name) } => {
            let doc = builders::builder(&name).ok_or(CliError::UnknownBuilder(name))?;
            write(out, &format!("{doc}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Info { input } => {
            let s = read_structure(&input)?;
            write(out, &info(&s))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli, &mut io::stdout().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
