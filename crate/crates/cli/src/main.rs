//! `qbps`: lattice counts, partition sets and BPS dimensions for symmetric
//! quivers.
//!
//! Dimension vectors and `δ` are given in the vertex order of the quiver
//! file: `--dim 2,1` puts 2 at the first listed vertex.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qbps_core::bps::{
    bps_assembly_dim, ktheory_dim_from_bps, score_sequence_count, BlockDimTable, Flavor,
};
use qbps_core::magic::{magic_dimension, CountOptions};
use qbps_core::par::{self, Exec};
use qbps_core::partitions::{find_delta, s_set, SearchBounds, VectorPartition};
use qbps_core::verify::{self, RunReport};
use qbps_core::{
    CentralWeight, DimVector, Error, MembershipMode, Quiver, COUNT_CUTOFF, PARTITION_CUTOFF,
};

#[derive(Parser)]
#[command(name = "qbps", version, about = "Exact combinatorics of quasi-BPS categories for symmetric quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Table, global = true)]
    output: Output,

    /// Worker threads for counting (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Lift the size cutoffs on counting and partition enumeration.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FastMembership {
    /// Indicator inequalities only.
    On,
    /// Exact simplex only.
    Off,
    /// Both, failing on disagreement.
    Checked,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Mf,
    Preprojective,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct QuiverSource {
    /// Quiver JSON: {"vertices":[..],"arrows":[[..]],"potential":"tripled"?}.
    #[arg(long)]
    quiver: Option<PathBuf>,
    /// One vertex with N loops.
    #[arg(long)]
    loops: Option<u32>,
    /// Two vertices, one loop each, 2G+1 arrows each way.
    #[arg(long)]
    toric: Option<u32>,
}

impl QuiverSource {
    fn load(&self) -> anyhow::Result<Quiver> {
        if let Some(path) = &self.quiver {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(schema)?;
            return Ok(Quiver::from_json(&text)?);
        }
        if let Some(n) = self.loops {
            return Ok(Quiver::loops(n));
        }
        Ok(Quiver::toric(self.toric.expect("clap enforces one source")))
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WeightSource {
    /// δ = v·τ_d.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<i64>,
    /// Per-vertex δ as comma-separated rationals, e.g. "1/2,-1/3".
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
}

impl WeightSource {
    fn resolve(&self, d: &DimVector) -> anyhow::Result<CentralWeight> {
        Ok(match (&self.delta, self.v) {
            (Some(text), _) => CentralWeight::parse(text)?,
            (None, Some(v)) => CentralWeight::from_v(v, d)?,
            (None, None) => unreachable!("clap enforces one weight"),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dominant weights χ with χ + ρ − δ in the zonotope W(d).
    MagicCount {
        #[command(flatten)]
        source: QuiverSource,
        /// Dimension vector, e.g. "2,1".
        #[arg(long)]
        dim: String,
        #[command(flatten)]
        weight: WeightSource,
        #[arg(long, value_enum, default_value_t = FastMembership::Checked)]
        fast_membership: FastMembership,
    },
    /// The partitions A of d with ε_{A,δ} = 1, one per line.
    SSet {
        #[command(flatten)]
        source: QuiverSource,
        #[arg(long)]
        dim: String,
        #[command(flatten)]
        weight: WeightSource,
    },
    /// Score-sequence count for one vertex with an odd number of loops.
    IhDim {
        #[arg(long)]
        loops: u32,
        #[arg(long)]
        dim: u32,
        #[arg(long, allow_hyphen_values = true)]
        v: i64,
    },
    /// Total BPS dimension assembled from per-block dimensions.
    BpsDim {
        #[command(flatten)]
        source: QuiverSource,
        #[arg(long)]
        dim: String,
        #[command(flatten)]
        weight: WeightSource,
        /// Block table JSON: {"blocks":[{"e":[..],"dim":n}],"monodromy":"trivial"}.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        blocks: Option<PathBuf>,
        /// Built-in table: tripled-one-loop, one-loop or toric.
        #[arg(long)]
        builtin: Option<String>,
        /// Also report topological K-theory dimensions.
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
    },
    /// A δ with integral total whose partition set is {d}.
    FindDelta {
        #[command(flatten)]
        source: QuiverSource,
        #[arg(long)]
        dim: String,
    },
    /// Run the reproduction table.
    Verify {
        /// Include the oracle sweeps.
        #[arg(long)]
        deep: bool,
        /// Same as --output json.
        #[arg(long)]
        json: bool,
    },
}

/// Marks an error as an input problem (exit 2).
fn schema<E: Into<anyhow::Error>>(e: E) -> anyhow::Error {
    e.into().context(SchemaError)
}

#[derive(Debug)]
struct SchemaError;

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("invalid input")
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<SchemaError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Asymmetric { .. }) => 3,
        Some(Error::CutoffExceeded { .. }) => 4,
        Some(
            Error::InvalidQuiver(_)
            | Error::DimensionMismatch { .. }
            | Error::LengthMismatch { .. }
            | Error::ZeroDimension
            | Error::ParseRational(_)
            | Error::InvalidBlockTable(_)
            | Error::MissingBlock(_)
            | Error::MissingInvariants
            | Error::NoClosedForm
            | Error::NotAntidominant,
        ) => 2,
        _ => 1,
    }
}

struct Ctx {
    output: Output,
    count_cutoff: usize,
    partition_cutoff: usize,
}

fn print_csv(header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn delta_strings(delta: &CentralWeight) -> Vec<String> {
    delta.to_string().split(',').map(str::to_owned).collect()
}

#[derive(Serialize)]
struct CountReport {
    dim: Vec<u32>,
    delta: Vec<String>,
    count: u64,
    /// What the count is a dimension of.
    meaning: &'static str,
}

fn magic_count(
    ctx: &Ctx,
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    mode: MembershipMode,
) -> anyhow::Result<()> {
    let opts = CountOptions {
        mode,
        exec: Exec::Parallel,
        cutoff: ctx.count_cutoff,
    };
    let count = magic_dimension(q, d, delta, &opts)?;
    let report = CountReport {
        dim: d.entries().to_vec(),
        delta: delta_strings(delta),
        count,
        meaning: "dim K0 of the magic category",
    };
    match ctx.output {
        Output::Table => println!("{count}"),
        Output::Json => print_json(&report)?,
        Output::Csv => print_csv(
            &["dim", "delta", "count", "meaning"],
            &[vec![d.to_string(), delta.to_string(), count.to_string(), report.meaning.into()]],
        )?,
    }
    Ok(())
}

fn partition_json(a: &VectorPartition) -> Vec<Vec<u32>> {
    a.parts().iter().map(|p| p.entries().to_vec()).collect()
}

fn s_set_cmd(ctx: &Ctx, q: &Quiver, d: &DimVector, delta: &CentralWeight) -> anyhow::Result<()> {
    let set = s_set(q, d, delta, ctx.partition_cutoff, Exec::Parallel)?;
    match ctx.output {
        Output::Table => {
            for a in &set {
                println!("{a}");
            }
        }
        Output::Json => {
            #[derive(Serialize)]
            struct Out {
                dim: Vec<u32>,
                delta: Vec<String>,
                partitions: Vec<Vec<Vec<u32>>>,
            }
            print_json(&Out {
                dim: d.entries().to_vec(),
                delta: delta_strings(delta),
                partitions: set.iter().map(partition_json).collect(),
            })?
        }
        Output::Csv => print_csv(
            &["partition", "parts"],
            &set.iter().map(|a| vec![a.to_string(), a.len().to_string()]).collect::<Vec<_>>(),
        )?,
    }
    Ok(())
}

fn scalar(ctx: &Ctx, name: &str, value: impl std::fmt::Display + Serialize) -> anyhow::Result<()> {
    match ctx.output {
        Output::Table => println!("{value}"),
        Output::Json => {
            let mut map = serde_json::Map::new();
            map.insert(name.into(), serde_json::to_value(&value)?);
            print_json(&map)?
        }
        Output::Csv => print_csv(&[name], &[vec![value.to_string()]])?,
    }
    Ok(())
}

fn bps_dim(
    ctx: &Ctx,
    q: &Quiver,
    d: &DimVector,
    delta: &CentralWeight,
    table: &BlockDimTable,
    flavor: Option<FlavorArg>,
) -> anyhow::Result<()> {
    let assembly = bps_assembly_dim(q, d, delta, table, ctx.partition_cutoff, Exec::Parallel)?;
    let k = flavor
        .map(|f| {
            let f = match f {
                FlavorArg::Mf => Flavor::MatrixFactorization,
                FlavorArg::Preprojective => Flavor::Preprojective,
            };
            ktheory_dim_from_bps(assembly, table.monodromy(), f)
        })
        .transpose()?;
    let mut rows = vec![("assembly", assembly)];
    if let Some((k0, k1)) = k {
        rows.push(("k0", k0));
        rows.push(("k1", k1));
    }
    match ctx.output {
        Output::Table => {
            for (name, value) in &rows {
                println!("{name}\t{value}");
            }
        }
        Output::Json => {
            let map: serde_json::Map<String, serde_json::Value> = rows
                .iter()
                .map(|(n, v)| Ok(((*n).to_owned(), serde_json::to_value(v)?)))
                .collect::<serde_json::Result<_>>()?;
            print_json(&map)?
        }
        Output::Csv => print_csv(
            &rows.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
            &[rows.iter().map(|(_, v)| v.to_string()).collect()],
        )?,
    }
    Ok(())
}

fn find_delta_cmd(ctx: &Ctx, q: &Quiver, d: &DimVector) -> anyhow::Result<bool> {
    let Some(found) = find_delta(q, d, SearchBounds::for_dim(d))? else {
        eprintln!("no δ found within the search bounds");
        return Ok(false);
    };
    match ctx.output {
        Output::Table => {
            println!("v\t{}", found.v);
            println!("delta\t{}", found.delta);
        }
        Output::Json => {
            #[derive(Serialize)]
            struct Out {
                v: i64,
                delta: Vec<String>,
            }
            print_json(&Out {
                v: found.v,
                delta: delta_strings(&found.delta),
            })?
        }
        Output::Csv => print_csv(&["v", "delta"], &[vec![found.v.to_string(), found.delta.to_string()]])?,
    }
    Ok(true)
}

fn verify_cmd(output: Output, deep: bool) -> anyhow::Result<bool> {
    let report: RunReport = verify::run(deep);
    match output {
        Output::Table => {
            for c in &report.checks {
                println!("{}", c.line());
                println!("     anchor: {}", c.anchor);
            }
            println!("{}", if report.pass { "all checks passed" } else { "some checks failed" });
        }
        Output::Json => println!("{}", report.to_json()),
        Output::Csv => print_csv(
            &["name", "anchor", "expected", "computed", "pass", "ms"],
            &report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        c.anchor.clone(),
                        c.expected.clone(),
                        c.computed.clone(),
                        c.pass.to_string(),
                        c.ms.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    }
    Ok(report.pass)
}

fn parse_dim(text: &str, q: &Quiver) -> anyhow::Result<DimVector> {
    let d = DimVector::parse(text)?;
    q.check_dim(&d)?;
    Ok(d)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let ctx = Ctx {
        output: cli.output,
        count_cutoff: if cli.force { usize::MAX } else { COUNT_CUTOFF },
        partition_cutoff: if cli.force { usize::MAX } else { PARTITION_CUTOFF },
    };
    match cli.command {
        Command::MagicCount {
            source,
            dim,
            weight,
            fast_membership,
        } => {
            let q = source.load()?;
            let d = parse_dim(&dim, &q)?;
            let delta = weight.resolve(&d)?;
            let mode = match fast_membership {
                FastMembership::On => MembershipMode::Indicator,
                FastMembership::Off => MembershipMode::Lp,
                FastMembership::Checked => MembershipMode::Checked,
            };
            magic_count(&ctx, &q, &d, &delta, mode)?;
        }
        Command::SSet { source, dim, weight } => {
            let q = source.load()?;
            let d = parse_dim(&dim, &q)?;
            s_set_cmd(&ctx, &q, &d, &weight.resolve(&d)?)?;
        }
        Command::IhDim { loops, dim, v } => {
            if loops % 2 == 0 {
                return Err(schema(anyhow!("ih-dim needs an odd number of loops, got {loops}")));
            }
            scalar(&ctx, "ih_dim", score_sequence_count((loops - 1) / 2, dim, v)?)?;
        }
        Command::BpsDim {
            source,
            dim,
            weight,
            blocks,
            builtin,
            flavor,
        } => {
            let q = source.load()?;
            let d = parse_dim(&dim, &q)?;
            let table = match (blocks, builtin) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))
                        .map_err(schema)?;
                    BlockDimTable::from_json(&text)?
                }
                (None, Some(name)) => BlockDimTable::builtin(&name).ok_or_else(|| {
                    schema(anyhow!(
                        "unknown built-in table `{name}`; available: {}",
                        BlockDimTable::BUILTIN.join(", ")
                    ))
                })?,
                (None, None) => unreachable!("clap enforces a table"),
            };
            bps_dim(&ctx, &q, &d, &weight.resolve(&d)?, &table, flavor)?;
        }
        Command::FindDelta { source, dim } => {
            let q = source.load()?;
            let d = parse_dim(&dim, &q)?;
            return find_delta_cmd(&ctx, &q, &d);
        }
        Command::Verify { deep, json } => {
            let output = if json { Output::Json } else { ctx.output };
            return verify_cmd(output, deep);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let outcome = par::with_threads(threads, || run(cli))
        .map_err(anyhow::Error::from)
        .and_then(|r| r);
    let _ = io::stdout().flush();
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
