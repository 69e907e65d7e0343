use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use lmc::appr::{appr_sweep, build_w, ApprParams, WeightedMotifGraph};
use lmc::audit::global_motif_cut;
use lmc::bench::{performance_profile, summarize, Metric, Record};
use lmc::{
    enumerate_triangles, load_graph, local_motif_cluster, ClusterConfig, Error, GraphFormat, LoadedGraph,
    ModelKind, MotifCollection,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "lmc", version, about = "Local motif clustering around seed nodes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster around a single seed node.
    Cluster(ClusterArgs),
    /// Run both the partitioning method and the APPR baseline on random seeds.
    Bench(BenchArgs),
    /// Summaries and performance profiles from bench records.
    Profile(ProfileArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Input graph file.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "metis", value_parser = parse_format)]
    format: GraphFormat,
}

#[derive(Args)]
struct AlgoArgs {
    #[arg(long, default_value = "graph", value_parser = parse_model)]
    model: ModelKind,
    /// Number of balls grown around the seed.
    #[arg(long, default_value_t = 3)]
    alpha: usize,
    /// Partitionings per ball.
    #[arg(long, default_value_t = 80)]
    beta: usize,
    #[arg(long, default_value_t = 0.05)]
    eps_lo: f64,
    #[arg(long, default_value_t = 0.90)]
    eps_hi: f64,
    /// Label propagation round cap (graph model only).
    #[arg(long, default_value_t = 3)]
    lp_rounds: usize,
    /// Per-seed time limit in seconds.
    #[arg(long, default_value_t = 3600.0)]
    time_limit: f64,
    /// BFS depth of the first ball.
    #[arg(long, default_value_t = 1)]
    first_layers: usize,
    /// Minimum node count of the last ball; 0 disables.
    #[arg(long, default_value_t = 100)]
    min_ball_size: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include cluster members in each record.
    #[arg(long)]
    emit_members: bool,
    /// Report all times as zero, for byte-comparable output.
    #[arg(long)]
    no_timing: bool,
    /// Recount motif conductance over the whole graph and flag each record.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct ClusterArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Seed node label (0-based for METIS, the file ID for edge lists).
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    algo: AlgoArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Number of random seed nodes.
    #[arg(long, default_value_t = 50)]
    seeds_count: usize,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[command(flatten)]
    algo: AlgoArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ProfileArgs {
    /// Records written by `bench`.
    #[arg(long)]
    records: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_model(s: &str) -> Result<ModelKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

const OURS: &str = "lmc";
const BASELINE: &str = "appr";

impl AlgoArgs {
    fn config(&self) -> Result<ClusterConfig> {
        if !(self.time_limit >= 0.0 && self.time_limit.is_finite()) {
            bail!("invalid time limit {}", self.time_limit);
        }
        let cfg = ClusterConfig {
            reps_alpha: self.alpha,
            beta: self.beta,
            model_kind: self.model,
            epsilon_range: (self.eps_lo, self.eps_hi),
            lp_max_rounds: self.lp_rounds,
            time_limit: Duration::from_secs_f64(self.time_limit),
            rng_seed: self.rng_seed,
            first_layers: self.first_layers,
            min_ball_size: (self.min_ball_size > 0).then_some(self.min_ball_size),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

struct Runner<'a> {
    name: String,
    loaded: &'a LoadedGraph,
    output: &'a OutputArgs,
    all_triangles: Option<MotifCollection>,
}

impl Runner<'_> {
    fn new<'a>(path: &Path, loaded: &'a LoadedGraph, output: &'a OutputArgs) -> Runner<'a> {
        let g = &loaded.graph;
        Runner {
            name: path
                .file_stem()
                .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned()),
            loaded,
            output,
            all_triangles: output.verify.then(|| enumerate_triangles(g, &vec![true; g.n()])),
        }
    }

    fn ms(&self, d: Duration) -> f64 {
        if self.output.no_timing {
            0.0
        } else {
            d.as_secs_f64() * 1e3
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &self,
        algo: &str,
        seed: usize,
        phi: lmc::MotifConductance,
        cluster: &[usize],
        elapsed: Duration,
        degenerate: bool,
        local_volume: bool,
    ) -> Record {
        let verified = match (&self.all_triangles, degenerate) {
            (Some(all), false) => {
                let c = global_motif_cut(&self.loaded.graph, all, cluster);
                // The local models divide by the cluster's own motif degree.
                let expected = if local_volume {
                    lmc::MotifConductance::new(c.cut as i64, c.inside as i64)
                } else {
                    c.conductance()
                };
                Some(expected == phi)
            }
            _ => None,
        };
        Record {
            graph: self.name.clone(),
            algo: algo.to_string(),
            seed: self.loaded.label(seed),
            phi_mu: phi.to_f64(),
            cluster_size: cluster.len(),
            time_ms: self.ms(elapsed),
            degenerate,
            preprocess_ms: None,
            verified,
            cluster: self
                .output
                .emit_members
                .then(|| cluster.iter().map(|&v| self.loaded.label(v)).collect()),
        }
    }

    fn run_ours(&self, seed: usize, cfg: &ClusterConfig) -> Result<Record> {
        let start = Instant::now();
        let r = local_motif_cluster(&self.loaded.graph, seed, cfg)?;
        let elapsed = start.elapsed();
        Ok(self.record(OURS, seed, r.phi, &r.cluster, elapsed, r.degenerate, true))
    }

    fn run_baseline(&self, seed: usize, w: &WeightedMotifGraph, build: Duration) -> Record {
        let start = Instant::now();
        let r = appr_sweep(w, seed, &ApprParams::<f64>::default());
        let elapsed = start.elapsed() + build;
        let mut rec = self.record(BASELINE, seed, r.phi, &r.cluster, elapsed, r.degenerate, false);
        rec.preprocess_ms = Some(self.ms(build));
        rec
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(args: &GraphArgs) -> Result<LoadedGraph> {
    load_graph(&args.graph, args.format).with_context(|| format!("cannot load {}", args.graph.display()))
}

fn cmd_cluster(args: &ClusterArgs) -> Result<()> {
    let cfg = args.algo.config()?;
    let loaded = load(&args.graph)?;
    let seed = loaded.node_of_label(args.seed).ok_or(Error::SeedOutOfRange {
        node: args.seed as usize,
        n: loaded.graph.n(),
    })?;
    let ctx = Runner::new(&args.graph.graph, &loaded, &args.output);
    let rec = ctx.run_ours(seed, &cfg)?;
    let mut out = open_out(&args.output.out)?;
    writeln!(out, "{}", serde_json::to_string(&rec)?)?;
    out.flush()?;
    Ok(())
}

/// `k` distinct nodes drawn uniformly, in draw order.
fn draw_seeds(n: usize, k: usize, rng_seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rand::seq::index::sample(&mut rng, n, k.min(n)).into_vec()
}

fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let cfg = args.algo.config()?;
    let loaded = load(&args.graph)?;
    if loaded.graph.n() == 0 {
        bail!("graph has no nodes");
    }
    let ctx = Runner::new(&args.graph.graph, &loaded, &args.output);
    let seeds = draw_seeds(loaded.graph.n(), args.seeds_count, args.algo.rng_seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .context("cannot start worker pool")?;

    let build_start = Instant::now();
    let w = build_w(&loaded.graph);
    let build = build_start.elapsed();

    let records: Vec<Record> = pool.install(|| {
        seeds
            .par_iter()
            .map(|&s| Ok([ctx.run_ours(s, &cfg)?, ctx.run_baseline(s, &w, build)]))
            .collect::<Result<Vec<_>>>()
    })?
    .into_iter()
    .flatten()
    .collect();

    let mut out = open_out(&args.output.out)?;
    for r in &records {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
    }
    for s in summarize(&records) {
        writeln!(out, "{}", serde_json::json!({ "summary": s }))?;
    }
    out.flush()?;
    Ok(())
}

/// Reads record lines, skipping summary objects.
fn read_records(path: &Path) -> Result<Vec<Record>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let mut records = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(&line).with_context(|| format!("line {}: invalid JSON", i + 1))?;
        if value.get("summary").is_some() {
            continue;
        }
        records.push(serde_json::from_value(value).with_context(|| format!("line {}: invalid record", i + 1))?);
    }
    Ok(records)
}

fn cmd_profile(args: &ProfileArgs) -> Result<()> {
    let records = read_records(&args.records)?;
    if records.is_empty() {
        bail!("no records in {}", args.records.display());
    }
    let mut out = open_out(&args.out)?;
    for s in summarize(&records) {
        writeln!(out, "{}", serde_json::json!({ "summary": s }))?;
    }
    for metric in [Metric::PhiMu, Metric::TimeMs] {
        for curve in performance_profile(&records, metric) {
            writeln!(out, "{}", serde_json::json!({ "profile": curve }))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Cluster(a) => cmd_cluster(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Profile(a) => cmd_profile(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
