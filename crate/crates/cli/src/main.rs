mod report;

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use raag_core::{catalog, Error, Limits, SimplicialGraph};

#[derive(Parser)]
#[command(
    name = "raag",
    version,
    about = "ℓ²-Betti numbers and fibring for Out(A_Γ)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 24, global = true)]
    max_vertices: usize,
    /// Seed recorded in the report; analyses are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Input {
    /// Graph JSON file, or `-` for stdin.
    path: String,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected sections (default: all).
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Comma-separated sections: graph, domination, conjugations, theta, flag, l2, fibring.
        #[arg(long, value_delimiter = ',')]
        sections: Vec<String>,
    },
    /// Print a catalog graph as graph JSON, or list the names.
    Catalog {
        name: Option<String>,
        /// Family parameter such as `n=3`; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Flag complex homology and Bestvina–Brady finiteness.
    Homology(Input),
    /// The graphs Θ for PSA and PSO.
    Theta(Input),
    /// Fibring verdicts.
    Fibring(Input),
    /// ℓ²-Betti numbers of Out(A_Γ).
    Betti(Input),
}

/// Failure classes mapped to exit codes.
enum Failure {
    Input(anyhow::Error),
    Cap(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(inner) if inner.is_cap() => Failure::Cap(e),
            _ => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn read_graph(path: &str, limits: &Limits) -> Result<SimplicialGraph, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    let g = SimplicialGraph::from_json(&text).with_context(|| format!("parsing {path}"))?;
    limits.check_vertices(&g)?;
    Ok(g)
}

fn parse_params(raw: &[String]) -> anyhow::Result<Vec<(String, usize)>> {
    raw.iter()
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| anyhow!("parameter `{p}` is not of the form key=value"))?;
            let v = v
                .parse()
                .with_context(|| format!("parameter `{p}` needs a nonnegative integer"))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn run(cli: Cli) -> Result<String, Failure> {
    let limits = Limits {
        analysis_vertices: cli.max_vertices,
        ..Limits::default()
    };
    let (path, sections) = match cli.command {
        Command::Catalog { name, params } => {
            let Some(name) = name else {
                return Ok(catalog::names().join("\n") + "\n");
            };
            let params = parse_params(&params)?;
            let refs: Vec<(&str, usize)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            return Ok(catalog::get(&name, &refs)?.to_json() + "\n");
        }
        Command::Analyze { input, sections } => (input.path, sections),
        Command::Homology(i) => (i.path, vec!["flag".into()]),
        Command::Theta(i) => (i.path, vec!["theta".into()]),
        Command::Fibring(i) => (i.path, vec!["fibring".into()]),
        Command::Betti(i) => (i.path, vec!["l2".into()]),
    };
    let mut sections = if sections.is_empty() {
        report::SECTIONS.iter().map(|s| s.to_string()).collect()
    } else {
        sections
    };
    for s in &sections {
        if !report::SECTIONS.contains(&s.as_str()) {
            return Err(Failure::Input(anyhow!(
                "unknown section `{s}`; expected one of {}",
                report::SECTIONS.join(", ")
            )));
        }
    }
    sections.sort_by_key(|s| report::SECTIONS.iter().position(|x| x == s));
    sections.dedup();
    let g = read_graph(&path, &limits)?;
    let mut model = report::build(&g, &sections, &limits)?;
    if let Some(seed) = cli.seed {
        model["input"]["seed"] = seed.into();
    }
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&model).map_err(anyhow::Error::from)? + "\n",
        Format::Text => report::to_text(&model),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
