use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symtree::brute::{self, BruteLimits};
use symtree::campaign::{run_campaign_with, CampaignOptions, CheckId};
use symtree::extremal::{construct, gk_certificates, Construction, ConstructionId};
use symtree::io::{parse_graph, parse_tree, to_dot, write_edge_list, EccentricityRecord};
use symtree::params::{distinguishing_number, fixing_density, fixing_number, ratio_string};
use symtree::universal::{build_universal_T, build_universal_U, UniversalKind, DEFAULT_VERTEX_BUDGET};

/// Distinguishing and fixing numbers of trees, universal trees and
/// verification campaigns.
#[derive(Parser)]
#[command(name = "symtree", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters of a tree given as an edge list.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Fields to report; all of them by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        params: Vec<Param>,
    },
    /// Paint cost spectrum of a small graph given as an edge list.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate a universal tree or a named construction.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Run a verification campaign over all trees up to an order.
    Verify {
        #[arg(long)]
        check: String,
        #[arg(long)]
        max_n: usize,
        /// Worker threads; all cores by default.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum Gen {
    Universal {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        r: usize,
        #[arg(long = "D")]
        d: usize,
        /// Print the branch catalog as CSV instead of the tree.
        #[arg(long)]
        catalog_only: bool,
        /// Also write the tree as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Largest tree order to materialize.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: u64,
        /// Allow the unverified search for paint-cost catalogs of radius 3+.
        #[arg(long)]
        experimental: bool,
    },
    Extremal {
        #[arg(long)]
        id: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        /// For `gk`: print the fixing lower-bound certificates as JSON.
        #[arg(long)]
        certificates: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    #[value(name = "D")]
    D,
    #[value(name = "F")]
    F,
    Ecc,
    Density,
    Witness,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct ComputeOutput {
    n: usize,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(rename = "F", skip_serializing_if = "Option::is_none")]
    f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixing_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    density: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diameter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eccentric_sequence: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct SpectrumOutput {
    #[serde(rename = "D")]
    d: usize,
    spectrum: Vec<usize>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn compute(input: &Path, params: &[Param]) -> Result<String> {
    let tree = parse_tree(&read(input)?).with_context(|| format!("{}", input.display()))?;
    let want = |p| params.is_empty() || params.contains(&p);
    let fixing = (want(Param::F) || want(Param::Witness)).then(|| fixing_number(&tree));
    let ecc = want(Param::Ecc).then(|| EccentricityRecord::of(&tree));
    let out = ComputeOutput {
        n: tree.order(),
        d: want(Param::D).then(|| distinguishing_number(&tree)),
        f: fixing.as_ref().filter(|_| want(Param::F)).map(|f| f.0),
        fixing_witness: fixing.filter(|_| want(Param::Witness)).map(|f| f.1),
        density: want(Param::Density).then(|| ratio_string(&fixing_density(&tree))),
        radius: ecc.as_ref().map(|e| e.radius),
        diameter: ecc.as_ref().map(|e| e.diameter),
        eccentric_sequence: ecc.map(|e| e.eccentric_sequence),
    };
    Ok(serde_json::to_string(&out)? + "\n")
}

fn spectrum(input: &Path) -> Result<String> {
    let graph = parse_graph(&read(input)?).with_context(|| format!("{}", input.display()))?;
    let s = brute::paint_cost_spectrum(&graph, &BruteLimits::from_env())?;
    let out = SpectrumOutput {
        d: s.distinguishing,
        spectrum: s.costs,
    };
    Ok(serde_json::to_string(&out)? + "\n")
}

fn gen(what: Gen) -> Result<String> {
    match what {
        Gen::Universal {
            kind,
            r,
            d,
            catalog_only,
            dot,
            budget,
            experimental,
        } => {
            let kind: UniversalKind = kind.parse()?;
            let materialize = !catalog_only || dot.is_some();
            let u = match kind {
                UniversalKind::Plain => build_universal_T(r, d, budget, !materialize)?,
                UniversalKind::PaintCost => build_universal_U(r, d, budget, !materialize, experimental)?,
            };
            if let (Some(path), Some(tree)) = (&dot, &u.tree) {
                fs::write(path, to_dot(tree.tree().graph(), None))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(match (&u.tree, catalog_only) {
                (Some(tree), false) => write_edge_list(tree.tree().graph()),
                _ => u.catalog.to_csv(),
            })
        }
        Gen::Extremal {
            id,
            params,
            format,
            certificates,
        } => {
            let id: ConstructionId = id.parse()?;
            if certificates {
                if id != ConstructionId::Gk {
                    bail!("--certificates only applies to gk");
                }
                let p: Vec<usize> = params
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .with_context(|| format!("gk expects {}", id.usage()))?;
                let [k, d] = p[..] else {
                    bail!("gk expects {}", id.usage());
                };
                return Ok(serde_json::to_string(&gk_certificates(k, d)?)? + "\n");
            }
            let built = construct(id, &params)?;
            let graph = match &built {
                Construction::Tree(t) => t.graph(),
                Construction::Graph(g) => g,
            };
            Ok(match format {
                GraphFormat::Edges => write_edge_list(graph),
                GraphFormat::Dot => to_dot(graph, None),
            })
        }
    }
}

/// Returns the report text and whether it was clean.
fn verify(check: &str, max_n: usize, jobs: Option<usize>, format: ReportFormat) -> Result<(String, bool)> {
    let check: CheckId = check.parse()?;
    let opts = CampaignOptions {
        jobs,
        ..CampaignOptions::from_env()
    };
    let report = run_campaign_with(check, max_n, &opts)?;
    for v in &report.violations {
        eprintln!("violation [{}] n = {} {}: {}", v.part, v.n, v.code, v.detail);
    }
    let text = match format {
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    Ok((text, report.is_clean()))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    match cli.command {
        Command::Compute { input, params } => Ok((compute(&input, &params)?, true)),
        Command::Spectrum { input } => Ok((spectrum(&input)?, true)),
        Command::Gen { what } => Ok((gen(what)?, true)),
        Command::Verify {
            check,
            max_n,
            jobs,
            format,
        } => verify(&check, max_n, jobs, format),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, clean)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
