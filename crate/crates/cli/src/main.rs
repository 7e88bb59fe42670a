use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use nucleus::oracle::oracle_nuclei;
use nucleus::pipeline::{decompose_indexed, hypo_baseline};
use nucleus::{gen, load_graph, to_json, Algorithm, CliqueIndex, Error, Graph, Rs};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest graph `--verify` accepts; the oracle is exponential in spirit.
const VERIFY_MAX_VERTICES: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "nucleus", version, about = "k-(r,s) nucleus decomposition and hierarchy")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a synthetic edge list. Seeded from NUCLEUS_SEED (default 0).
    Generate {
        #[command(subcommand)]
        model: Model,
        /// Output file (stdout if omitted).
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Model {
    /// Erdős–Rényi G(n, p).
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Barabási–Albert preferential attachment.
    Ba {
        #[arg(long)]
        n: usize,
        /// Edges added per new vertex.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Sparse background with planted nested cliques.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: usize,
    },
}

#[derive(Args, Debug)]
struct RunArgs {
    /// (r,s) pair: 12, 23 or 34.
    #[arg(long, default_value = "12", value_parser = parse_rs)]
    rs: Rs,
    /// Back-end: naive, dft, fnd or lcps.
    #[arg(long, default_value = "fnd", value_parser = parse_algo)]
    algo: Algorithm,
    /// Edge list to read (stdin if omitted).
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Where to write the result (stdout if omitted).
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Include member K_rs of every nucleus.
    #[arg(long)]
    members: bool,
    /// Cross-check the tree against the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Time every applicable back-end and the plain traversal baseline
    /// instead of writing the tree.
    #[arg(long)]
    bench: bool,
}

fn parse_rs(s: &str) -> Result<Rs, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Mismatch(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Some(Command::Generate { model, output }) => generate(model, output.as_deref()),
        None => run(&cli.run),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(input: Option<&Path>) -> Result<Graph, Failure> {
    let g = match input {
        Some(path) => {
            let file = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            load_graph(BufReader::new(file))?
        }
        None => load_graph(io::stdin().lock())?,
    };
    Ok(g)
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(args: &RunArgs) -> Result<(), Failure> {
    if !args.algo.supports(args.rs) {
        return Err(Failure::Input(format!("--algo {} requires --rs 12", args.algo)));
    }
    let g = read_graph(args.input.as_deref())?;
    if args.verify && g.n() > VERIFY_MAX_VERTICES {
        return Err(Failure::Input(format!(
            "--verify supports graphs with at most {VERIFY_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    let start = std::time::Instant::now();
    let idx = CliqueIndex::build(&g, args.rs);
    let index_time = start.elapsed();

    let text = if args.bench {
        bench_report(&idx, index_time)?
    } else {
        let d = decompose_indexed(&idx, args.algo)?;
        if args.verify {
            let want = oracle_nuclei(&g, args.rs)?;
            if d.tree != want {
                return Err(Failure::Mismatch(format!(
                    "{} returned {} nuclei, oracle has {}",
                    args.algo,
                    d.tree.len(),
                    want.len()
                )));
            }
        }
        let mut json = to_json(&d.tree, &idx, args.members);
        json.push('\n');
        json
    };
    write_out(args.output.as_deref(), &text)
}

fn secs(d: Duration) -> String {
    format!("{:.6}", d.as_secs_f64())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

/// One row per back-end plus the baseline. The index build is shared, so
/// every row reports the same index time.
fn bench_report(idx: &CliqueIndex, index: Duration) -> Result<String, Failure> {
    let g = idx.graph();
    let mut rows: Vec<[String; 8]> = Vec::new();
    let mut subnuclei = None;
    for algo in Algorithm::ALL.into_iter().filter(|a| a.supports(idx.rs())) {
        let mut d = decompose_indexed(idx, algo)?;
        d.times.index = index;
        let (t, t_star) = match algo {
            Algorithm::Dft => {
                subnuclei = d.subnuclei;
                (d.subnuclei, None)
            }
            Algorithm::Fnd => (subnuclei, d.subnuclei),
            _ => (None, None),
        };
        rows.push([
            algo.to_string(),
            secs(d.times.index),
            secs(d.times.peel),
            secs(d.times.post),
            secs(d.times.total()),
            opt(t),
            opt(t_star),
            opt(d.adj_pairs),
        ]);
    }
    let (mut times, _) = hypo_baseline(idx);
    times.index = index;
    rows.push([
        "hypo".into(),
        secs(times.index),
        secs(times.peel),
        secs(times.post),
        secs(times.total()),
        "-".into(),
        "-".into(),
        "-".into(),
    ]);

    let header = [
        "algo",
        "index_s",
        "peel_s",
        "post_s",
        "total_s",
        "|T|",
        "|T*|",
        "|AdjPairList|",
    ];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = format!(
        "# {} vertices={} edges={} cliques={}\n",
        idx.rs(),
        g.n(),
        g.m(),
        idx.len()
    );
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    Ok(out)
}

fn generate(model: Model, output: Option<&Path>) -> Result<(), Failure> {
    let seed = match std::env::var("NUCLEUS_SEED") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::Input(format!("NUCLEUS_SEED must be a non-negative integer, got '{s}'")))?,
        Err(_) => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match model {
        Model::Er { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Input(format!("--p must lie in [0, 1], got {p}")));
            }
            gen::erdos_renyi(n, p, &mut rng)
        }
        Model::Ba { n, k } => {
            if k == 0 || k >= n {
                return Err(Failure::Input(format!("--k must be in 1..{n}")));
            }
            gen::barabasi_albert(n, k, &mut rng)
        }
        Model::Planted { n, edges } => {
            if n < 64 {
                return Err(Failure::Input("planted graphs need --n of at least 64".into()));
            }
            gen::planted_nested_cliques(n, edges, &mut rng)
        }
    };
    let mut text = String::with_capacity(g.m() * 12);
    let _ = writeln!(text, "# n={} m={} seed={seed}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(text, "{u} {v}");
    }
    write_out(output, &text)
}
