use std::fs;
use std::io::{self, Read as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chipfire::families::FamilySpec;
use chipfire::format::{emit_graph, parse_divisor, parse_graph};
use chipfire::rank::{self, RankEngine, RankWitness};
use chipfire::reduction;
use chipfire::repro::{self, Config, Scale, DEFAULT_SEED};
use chipfire::search::{SearchOptions, Searcher};
use chipfire::{formulas, Divisor, Multigraph};

#[derive(Parser)]
#[command(name = "chipfire", version, about = "Chip-firing divisor computations on multigraphs")]
struct Cli {
    /// Worker threads for searches; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the sampled rows of verify-paper.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

/// A graph is a file path, `-` for stdin, or `family:<kind>:<p1>,<p2>,...`.
#[derive(Subcommand)]
enum Command {
    /// Build a family member and write it in graph format.
    Family {
        kind: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one burning pass.
    Dhar {
        graph: String,
        divisor: String,
        #[arg(long)]
        from: usize,
    },
    /// Compute the reduced divisor with respect to a base vertex.
    Reduce {
        graph: String,
        divisor: String,
        #[arg(long)]
        base: usize,
        /// Also print the firing script.
        #[arg(long)]
        script: bool,
    },
    /// Rank of a divisor with its witness.
    Rank { graph: String, divisor: String },
    /// Both sides of the Riemann-Roch identity.
    Rr { graph: String, divisor: String },
    /// Divisorial gonality.
    Gon {
        graph: String,
        #[arg(short, default_value_t = 1)]
        r: u64,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        stats: bool,
        /// First degree to probe.
        #[arg(long)]
        hint: Option<u64>,
    },
    /// Multiplicity-free gonality.
    Mfgon {
        graph: String,
        #[arg(short, default_value_t = 1)]
        r: u64,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        stats: bool,
    },
    /// Closed-form gon and mfgon for a family member.
    Predict { kind: String, params: Vec<String> },
    /// Recompute every acceptance row and print the report.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = ScaleArg::Quick)]
        scale: ScaleArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Quick,
    Full,
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_source(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    }
}

fn load_graph(arg: &str) -> Result<Multigraph, String> {
    if let Some(rest) = arg.strip_prefix("family:") {
        let (kind, params) = rest.split_once(':').unwrap_or((rest, ""));
        let params: Vec<&str> = params.split([',', ' ']).filter(|p| !p.is_empty()).collect();
        return FamilySpec::parse(kind, &params)
            .and_then(|s| s.build())
            .map_err(|e| e.to_string());
    }
    parse_graph(&read_source(arg)?).map_err(|e| format!("{arg}: {e}"))
}

fn load_divisor(arg: &str, g: &Multigraph) -> Result<Divisor, String> {
    let text = if arg.trim_start().starts_with("div ") {
        arg.to_string()
    } else {
        read_source(arg)?
    };
    let d = parse_divisor(&text).map_err(|e| e.to_string())?;
    if d.len() != g.vertex_count() {
        return Err(format!(
            "divisor has {} entries but the graph has {} vertices",
            d.len(),
            g.vertex_count()
        ));
    }
    Ok(d)
}

fn spec(kind: &str, params: &[String]) -> Result<FamilySpec, String> {
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    FamilySpec::parse(kind, &params).map_err(|e| e.to_string())
}

fn vertices(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> CliResult {
    let err = |e: chipfire::Error| e.to_string();
    match cli.command {
        Command::Family { kind, params, output } => {
            let text = emit_graph(&spec(&kind, &params)?.build().map_err(err)?);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Dhar { graph, divisor, from } => {
            let g = load_graph(&graph)?;
            let d = load_divisor(&divisor, &g)?;
            let report = reduction::dhar(&g, &d, from).map_err(err)?;
            println!("source={}", report.source);
            println!("burned={}", vertices(report.burned_order.iter().copied()));
            println!("unburned={}", vertices(report.unburned.iter()));
            println!("burned_everything={}", report.burned_everything());
        }
        Command::Reduce { graph, divisor, base, script } => {
            let g = load_graph(&graph)?;
            let d = load_divisor(&divisor, &g)?;
            let result = reduction::q_reduce(&g, &d, base).map_err(err)?;
            println!("{}", result.reduced);
            if script {
                for firing in &result.script {
                    println!("fire {} x{}", vertices(firing.set.iter()), firing.times);
                }
            }
        }
        Command::Rank { graph, divisor } => {
            let g = load_graph(&graph)?;
            let d = load_divisor(&divisor, &g)?;
            let result = rank::rank(&g, &d).map_err(err)?;
            println!("rank={}", result.value);
            match result.witness {
                RankWitness::NegativeAt(v) => println!("witness=not effective (reduced form negative at {v})"),
                RankWitness::Obstruction(e) => println!("witness=subtracting {e} leaves no effective representative"),
            }
        }
        Command::Rr { graph, divisor } => {
            let g = load_graph(&graph)?;
            let d = load_divisor(&divisor, &g)?;
            let rr = rank::riemann_roch(&RankEngine::new(&g), &d).map_err(err)?;
            println!("r(D)={} r(K-D)={}", rr.rank, rr.residual_rank);
            println!("lhs={} rhs={} (deg={} genus={})", rr.lhs(), rr.rhs(), rr.degree, rr.genus);
            println!("holds={}", rr.holds());
        }
        Command::Gon { graph, r, witness, stats, hint } => {
            let g = load_graph(&graph)?;
            let opts = SearchOptions { rank: r, jobs: cli.jobs, degree_hint: hint };
            let result = Searcher::new(&g, opts).gonality().map_err(err)?;
            print_search(result.value, result.witness.as_ref(), &result.stats, witness, stats);
        }
        Command::Mfgon { graph, r, witness, stats } => {
            let g = load_graph(&graph)?;
            let opts = SearchOptions { rank: r, jobs: cli.jobs, degree_hint: None };
            let result = Searcher::new(&g, opts).mf_gonality().map_err(err)?;
            print_search(result.value, result.witness.as_ref(), &result.stats, witness, stats);
        }
        Command::Predict { kind, params } => {
            let s = spec(&kind, &params)?;
            let (gon, mfgon) =
                formulas::predicted(&s).ok_or_else(|| format!("{s} does not describe a valid graph"))?;
            println!("{gon}");
            println!("{mfgon}");
        }
        Command::VerifyPaper { scale } => {
            let config = Config {
                scale: match scale {
                    ScaleArg::Quick => Scale::Quick,
                    ScaleArg::Full => Scale::Full,
                },
                jobs: cli.jobs,
                seed: cli.seed,
            };
            let report = repro::verify_paper(&config).map_err(err)?;
            println!("{report}");
            if report.any_failed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_search(
    value: chipfire::search::GonValue,
    witness: Option<&Divisor>,
    stats: &chipfire::search::SearchStats,
    show_witness: bool,
    show_stats: bool,
) {
    println!("{value}");
    if show_witness {
        match witness {
            Some(d) => println!("{d}"),
            None => println!("no witness"),
        }
    }
    if show_stats {
        for line in stats.to_lines() {
            println!("{line}");
        }
    }
}
