//! Command-line front end: graph I/O in graph6, JSON reports on stdout.
//!
//! Exit codes: 0 when all checks pass, 1 when a check fails, 2 on usage or
//! input errors.

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::{Read, Write};
use std::process::ExitCode;

use cdcrit::census::{self, Census};
use cdcrit::critical;
use cdcrit::decompose;
use cdcrit::families::FamilySpec;
use cdcrit::gamma;
use cdcrit::graph::Graph;
use cdcrit::graph6;
use cdcrit::matching;
use cdcrit::structure;
use cdcrit::suites::{run_suite, Manifest, SUITE_IDS};
use cdcrit::VertexSet;

#[derive(Parser)]
#[command(
    name = "cdcrit",
    version,
    about = "exact toolkit for connected-domination-critical graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Args)]
struct GraphInput {
    /// graph6 string; stdin is read when omitted
    graph6: Option<String>,
}

impl GraphInput {
    fn read(&self) -> Result<Graph> {
        let line = match &self.graph6 {
            Some(s) => s.clone(),
            None => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf.lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .ok_or_else(|| anyhow!("no graph6 input on stdin"))?
                    .to_string()
            }
        };
        Ok(graph6::decode(line.trim())?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family instance and print it with its claims
    Gen {
        /// family tag (B0, B1, B21, B22, G1, G2, HL, F, X, G5, A, FIG4, CYCLE, EXT)
        #[arg(long)]
        family: Option<String>,
        /// family parameters, e.g. "p=1,q=2,r=2"
        #[arg(long)]
        params: Option<String>,
        /// compact spec form, e.g. "F:p=1,q=2,r=2"
        #[arg(long, conflicts_with_all = ["family", "params"])]
        spec: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// write the claims JSON next to the graph6 output
        #[arg(long)]
        sidecar: Option<std::path::PathBuf>,
    },
    /// Exact minimum connected dominating set
    GammaC {
        #[command(flatten)]
        input: GraphInput,
        /// enumerate all minimum sets
        #[arg(long)]
        all: bool,
    },
    /// k-gamma_c-criticality report (exit 0 iff critical)
    Critical {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Cut vertices, blocks and the zeta statistics
    Blocks {
        #[command(flatten)]
        input: GraphInput,
    },
    /// ell-factor-criticality verdict (exit 0 iff it holds)
    FactorCritical {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        ell: u8,
    },
    /// Structural property checks (exit 0 iff the property holds)
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        property: Property,
        /// head vertex for the block checks
        #[arg(long)]
        head: Option<usize>,
        /// marked clique for the pk check, e.g. "0,1,2"
        #[arg(long)]
        clique: Option<String>,
        /// target diameter for diam-critical
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Run a named verification suite (exit 0 iff every instance passes)
    Verify {
        #[arg(long)]
        suite: String,
        /// override the pinned manifest
        #[arg(long)]
        manifest: Option<std::path::PathBuf>,
        /// override the suite's k range with a single value
        #[arg(long)]
        k: Option<usize>,
        /// override the suite's census cap
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Enumerate or filter connected graphs as a graph6 stream
    Enumerate {
        /// internal enumeration up to this vertex count
        #[arg(long)]
        max_n: Option<usize>,
        /// filter an external graph6 stream from stdin instead
        #[arg(long)]
        stream: bool,
        /// keep only k-gamma_c-critical graphs
        #[arg(long)]
        k: Option<usize>,
        /// keep only graphs with this many cut vertices
        #[arg(long)]
        zeta: Option<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    BadSubgraph,
    B3,
    B22,
    Pk,
    ClawFree,
    DiamCritical,
    ComplementOfStars,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(value: serde_json::Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, &value)?;
    writeln!(out)?;
    Ok(())
}

fn with_schema(mut value: serde_json::Value) -> serde_json::Value {
    if let Some(map) = value.as_object_mut() {
        map.insert("schema".into(), cdcrit::SCHEMA.into());
    }
    value
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            family,
            params,
            spec,
            format,
            sidecar,
        } => {
            let spec_str = match (spec, family) {
                (Some(s), _) => s,
                (None, Some(tag)) => match params {
                    Some(p) => format!("{tag}:{p}"),
                    None => tag,
                },
                (None, None) => return Err(anyhow!("need --family or --spec")),
            };
            let spec: FamilySpec = spec_str.parse()?;
            let inst = spec.generate()?;
            let g6 = graph6::encode(&inst.graph);
            let claims = serde_json::json!({
                "schema": cdcrit::SCHEMA,
                "family": inst.spec.to_string(),
                "n": inst.graph.n(),
                "graph6": g6,
                "claims": inst.claims,
            });
            if let Some(path) = sidecar {
                std::fs::write(&path, serde_json::to_string_pretty(&claims)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            match format {
                Format::Graph6 => println!("{g6}"),
                Format::Json => emit(claims)?,
            }
            Ok(true)
        }
        Command::GammaC { input, all } => {
            let g = input.read()?;
            let res = gamma::gamma_c(&g, all)?;
            let mut value = serde_json::to_value(&res)?;
            if let Some(map) = value.as_object_mut() {
                map.insert("n".into(), g.n().into());
            }
            emit(with_schema(value))?;
            Ok(true)
        }
        Command::Critical { input } => {
            let g = input.read()?;
            let report = critical::check_critical(&g)?;
            let passed = report.is_critical;
            emit(with_schema(serde_json::to_value(&report)?))?;
            Ok(passed)
        }
        Command::Blocks { input } => {
            let g = input.read()?;
            let dec = decompose::decompose(&g)?;
            let mut value = serde_json::to_value(&dec)?;
            if let Some(map) = value.as_object_mut() {
                map.insert("n".into(), g.n().into());
            }
            emit(with_schema(value))?;
            Ok(true)
        }
        Command::FactorCritical { input, ell } => {
            let g = input.read()?;
            let verdict = matching::is_factor_critical(&g, ell as usize)?;
            let passed = verdict.holds;
            emit(with_schema(serde_json::to_value(&verdict)?))?;
            Ok(passed)
        }
        Command::Check {
            input,
            property,
            head,
            clique,
            k,
        } => {
            let g = input.read()?;
            let need_head = || head.ok_or_else(|| anyhow!("--head is required for this check"));
            let verdict = match property {
                Property::BadSubgraph => structure::find_bad_subgraph(&g)?,
                Property::B3 => structure::is_b3_block(&g, need_head()?)?,
                Property::B22 => structure::is_b22_block(&g, need_head()?)?,
                Property::Pk => {
                    let spec = clique.ok_or_else(|| anyhow!("--clique is required for pk"))?;
                    let vs: std::result::Result<Vec<usize>, _> =
                        spec.split(',').map(|x| x.trim().parse()).collect();
                    let h = VertexSet::from_members(g.n(), vs.context("parsing --clique")?);
                    structure::is_pk_member(&g, &h)?
                }
                Property::ClawFree => structure::is_claw_free(&g),
                Property::DiamCritical => structure::is_diameter_critical(&g, k),
                Property::ComplementOfStars => structure::is_two_crit_complement_of_stars(&g),
            };
            let passed = verdict.holds;
            let mut value = serde_json::to_value(&verdict)?;
            if let Some(map) = value.as_object_mut() {
                map.insert("property".into(), format!("{property:?}").into());
            }
            emit(with_schema(value))?;
            Ok(passed)
        }
        Command::Verify {
            suite,
            manifest,
            k,
            max_n,
        } => {
            if !SUITE_IDS.contains(&suite.as_str()) {
                return Err(anyhow!(
                    "unknown suite {suite:?}; available: {}",
                    SUITE_IDS.join(", ")
                ));
            }
            let mut m = match manifest {
                Some(path) => Manifest::parse(
                    &std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?,
                )?,
                None => Manifest::default_manifest(),
            };
            if let Some(k) = k {
                m.set(&format!("{suite}.k_min"), k.to_string());
                m.set(&format!("{suite}.k_max"), k.to_string());
            }
            if let Some(n) = max_n {
                m.set(&format!("{suite}.max_n"), n.to_string());
            }
            let report = run_suite(&suite, &m)?;
            let passed = report.passed;
            emit(serde_json::to_value(&report)?)?;
            Ok(passed)
        }
        Command::Enumerate {
            max_n,
            stream,
            k,
            zeta,
            format,
        } => {
            let pred = |g: &Graph| -> cdcrit::Result<bool> {
                if let Some(k) = k {
                    if critical::criticality_level(g)? != Some(k) {
                        return Ok(false);
                    }
                }
                if let Some(z) = zeta {
                    if decompose::decompose(g)?.zeta != z {
                        return Ok(false);
                    }
                }
                Ok(true)
            };
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            if stream {
                let stdin = std::io::stdin();
                census::filter_stream(stdin.lock(), &mut out, pred)?;
            } else {
                let max_n = max_n.ok_or_else(|| anyhow!("need --max-n or --stream"))?;
                let census = Census::build(max_n)?;
                for n in 1..=max_n {
                    census.for_each(n, |g| {
                        if pred(g).unwrap_or(false) {
                            let g6 = graph6::encode(g);
                            match format {
                                Format::Graph6 => writeln!(out, "{g6}").expect("stdout"),
                                Format::Json => {
                                    let line = serde_json::json!({
                                        "schema": cdcrit::SCHEMA,
                                        "n": g.n(),
                                        "graph6": g6,
                                    });
                                    writeln!(out, "{line}").expect("stdout");
                                }
                            }
                        }
                    });
                }
            }
            Ok(true)
        }
    }
}
