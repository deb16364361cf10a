use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shiftlab::{
    betti_shifted_formula, canonical_combinatorial_shift, chordal_shift_algorithm,
    enumerate_combinatorial_shifted_graphs, exterior_profile, kab_exterior_profile,
    kab_symmetric_profile, symmetric_profile, symmetric_profile_pad_checked, GenericConfig, Graph,
    MProfile, ShiftTrace,
};
use shiftlab_cli::corpus::{gen_corpus, CorpusSpec, Model};
use shiftlab_cli::output::{compare_human, graph_human, graph_to_dot, verify_human, Format};
use shiftlab_cli::report::{run_compare, run_verify, Method};
use shiftlab_cli::CliError;

const SEED_ENV: &str = "SHIFTLAB_SEED";

#[derive(Parser)]
#[command(
    name = "shiftlab",
    version,
    about = "Shifted graphs of finite graphs: exterior, symmetric, and combinatorial"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SamplerArgs {
    /// Entry bound for sampled matrices.
    #[arg(long, default_value_t = 1 << 16)]
    bound: u64,
    /// Number of samples per rank profile.
    #[arg(long, default_value_t = 3)]
    repeats: u32,
    /// Isolated vertices appended before the symmetric computation.
    #[arg(long, default_value_t = 0)]
    pad: usize,
}

impl SamplerArgs {
    fn with_seed(&self, seed: u64) -> GenericConfig {
        GenericConfig {
            seed,
            bound: self.bound,
            repeats: self.repeats,
            pad: self.pad,
        }
    }
}

#[derive(Args)]
struct CfgArgs {
    /// Seed for the generic-matrix sampler (falls back to SHIFTLAB_SEED, then 42).
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    sampler: SamplerArgs,
}

impl CfgArgs {
    fn resolve(&self) -> Result<GenericConfig, CliError> {
        Ok(self.sampler.with_seed(resolve_seed(self.seed)?))
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// Random graph model.
    #[arg(long, value_enum)]
    model: Model,
    /// Vertex count (gnp, chordal, bipartite).
    #[arg(long)]
    n: Option<usize>,
    /// First part size (bipartite, kab).
    #[arg(long)]
    a: Option<usize>,
    /// Second part size (bipartite, kab).
    #[arg(long)]
    b: Option<usize>,
    /// Edge probability.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Number of graphs.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Corpus seed (falls back to SHIFTLAB_SEED, then 42).
    #[arg(long)]
    seed: Option<u64>,
}

impl CorpusArgs {
    fn resolve(&self) -> Result<CorpusSpec, CliError> {
        Ok(CorpusSpec {
            model: self.model,
            n: self.n,
            a: self.a,
            b: self.b,
            p: self.p,
            count: self.count,
            seed: resolve_seed(self.seed)?,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test a structural predicate of a graph; exits 1 when it fails.
    Check {
        /// Is the graph shifted?
        #[arg(long, group = "predicate")]
        shifted: bool,
        /// Is the graph chordal?
        #[arg(long, group = "predicate")]
        chordal: bool,
        /// Is the graph k-connected for the given k?
        #[arg(long, group = "predicate", value_name = "K")]
        connectivity: Option<usize>,
        /// Graph JSON file, or - for stdin.
        graph: PathBuf,
    },
    /// Compute a shifted graph by the chosen method.
    Shift {
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        cfg: CfgArgs,
        /// Recompute the symmetric profile at pad+3 and require equality.
        #[arg(long)]
        pad_check: bool,
        graph: PathBuf,
    },
    /// Print an m-profile: of the graph itself, or of one of its shifts.
    Profile {
        /// Without a method the input must already be shifted.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        cfg: CfgArgs,
        graph: PathBuf,
    },
    /// Run several methods and report pairwise equality verdicts.
    Compare {
        /// Comma-separated list of methods.
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        methods: Vec<Method>,
        #[command(flatten)]
        cfg: CfgArgs,
        graph: PathBuf,
    },
    /// Closed-form profiles for standard families.
    Oracle {
        #[command(subcommand)]
        family: OracleFamily,
    },
    /// Linear-strand Betti numbers of the non-edge ideal.
    Betti {
        /// Largest homological index i (defaults to n-2).
        #[arg(long)]
        max_i: Option<usize>,
        /// hochster = subset oracle (any graph); formula = profile formula
        /// (shifted input only).
        #[arg(long, value_enum, default_value = "hochster")]
        oracle: BettiOracle,
        graph: PathBuf,
    },
    /// Generate a seeded corpus of graphs.
    Gen {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// List every combinatorial shifted graph reachable from the input.
    Enumerate { graph: PathBuf },
    /// Run the full property suite over a generated corpus; exits 1 on any
    /// violation.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        sampler: SamplerArgs,
        /// Verify pad stability of every symmetric profile.
        #[arg(long)]
        pad_check: bool,
    },
}

#[derive(Subcommand)]
enum OracleFamily {
    /// Complete bipartite graph K_{a,b} with a >= b >= 1.
    Kab {
        a: usize,
        b: usize,
        #[arg(long, value_enum)]
        method: Method,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BettiOracle {
    Hochster,
    Formula,
}

fn no_dot(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::usage(format!(
            "--format dot is only available for commands that output graphs, not {command}"
        )));
    }
    Ok(())
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV) {
        Ok(text) => text.parse::<u64>().map_err(|_| {
            CliError::usage(format!("{SEED_ENV} must be a 64-bit integer, got {text:?}"))
        }),
        Err(_) => Ok(42),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        buffer
    } else {
        std::fs::read_to_string(path)?
    };
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("invalid graph JSON: {e}")))
}

fn profile_json(p: &MProfile) -> String {
    serde_json::to_string(p).expect("profiles serialize")
}

fn graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

fn print_graphs(graphs: &[Graph], format: Format) {
    match format {
        Format::Human => {
            for g in graphs {
                println!("{}", graph_human(g));
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(graphs).expect("graphs serialize")
            );
        }
        Format::Dot => {
            for g in graphs {
                print!("{}", graph_to_dot(g));
            }
        }
    }
}

/// Exit status 1 signals a failed property; 2 a usage or input error.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Check {
            shifted,
            chordal,
            connectivity,
            graph,
        } => {
            no_dot(cli.format, "check")?;
            let g = read_graph(&graph)?;
            let (name, verdict) = if shifted {
                ("shifted", g.is_shifted())
            } else if chordal {
                ("chordal", g.is_chordal())
            } else if let Some(k) = connectivity {
                if k < 1 {
                    return Err(CliError::usage("--connectivity requires k >= 1"));
                }
                ("connected", g.is_k_connected(k))
            } else {
                return Err(CliError::usage(
                    "choose one of --shifted, --chordal, --connectivity <k>",
                ));
            };
            match cli.format {
                Format::Json => println!("{{\"check\":\"{name}\",\"ok\":{verdict}}}"),
                _ => println!("{name}: {verdict}"),
            }
            Ok(verdict)
        }
        Command::Shift {
            method,
            cfg,
            pad_check,
            graph,
        } => {
            let g = read_graph(&graph)?;
            let cfg = cfg.resolve()?;
            match method {
                Method::Exterior | Method::Symmetric => {
                    let result = match method {
                        Method::Exterior => exterior_profile(&g, &cfg)?.to_graph(),
                        Method::Symmetric if pad_check => {
                            symmetric_profile_pad_checked(&g, &cfg)?.to_graph()
                        }
                        Method::Symmetric => symmetric_profile(&g, &cfg)?.to_graph(),
                        _ => unreachable!(),
                    };
                    match cli.format {
                        Format::Human => println!("{}", graph_human(&result)),
                        Format::Json => println!("{}", graph_json(&result)),
                        Format::Dot => print!("{}", graph_to_dot(&result)),
                    }
                }
                Method::Combinatorial | Method::ChordalAlgo => {
                    let trace: ShiftTrace = match method {
                        Method::Combinatorial => canonical_combinatorial_shift(&g),
                        Method::ChordalAlgo => chordal_shift_algorithm(&g)?,
                        _ => unreachable!(),
                    };
                    match cli.format {
                        Format::Human => {
                            println!("{}", graph_human(&trace.result));
                            let steps: Vec<String> = trace
                                .steps
                                .iter()
                                .map(|s| format!("[{},{}]", s.i(), s.j()))
                                .collect();
                            println!(
                                "steps ({}): {}",
                                steps.len(),
                                if steps.is_empty() {
                                    "(none)".to_string()
                                } else {
                                    steps.join(" ")
                                }
                            );
                        }
                        Format::Json => {
                            println!(
                                "{}",
                                serde_json::to_string(&trace).expect("traces serialize")
                            );
                        }
                        Format::Dot => print!("{}", graph_to_dot(&trace.result)),
                    }
                }
            }
            Ok(true)
        }
        Command::Profile { method, cfg, graph } => {
            no_dot(cli.format, "profile")?;
            let g = read_graph(&graph)?;
            let profile = match method {
                None => g.m_profile()?,
                Some(Method::Exterior) => exterior_profile(&g, &cfg.resolve()?)?,
                Some(Method::Symmetric) => symmetric_profile(&g, &cfg.resolve()?)?,
                Some(other) => shiftlab_cli::report::shift_by_method(&g, other, &cfg.resolve()?)?
                    .m_profile()?,
            };
            match cli.format {
                Format::Human => {
                    println!("cumulative: {:?}", profile.cumulative());
                    println!("increments: {:?}", profile.increments());
                }
                _ => println!("{}", profile_json(&profile)),
            }
            Ok(true)
        }
        Command::Compare {
            methods,
            cfg,
            graph,
        } => {
            no_dot(cli.format, "compare")?;
            let g = read_graph(&graph)?;
            let report = run_compare(&g, &methods, &cfg.resolve()?)?;
            match cli.format {
                Format::Human => print!("{}", compare_human(&report)),
                _ => println!(
                    "{}",
                    serde_json::to_string(&report).expect("reports serialize")
                ),
            }
            Ok(!report.violation)
        }
        Command::Oracle { family } => {
            let OracleFamily::Kab { a, b, method } = family;
            let profile = match method {
                Method::Exterior => kab_exterior_profile(a, b)?,
                Method::Symmetric => kab_symmetric_profile(a, b)?,
                other => {
                    return Err(CliError::usage(format!(
                        "oracle kab supports exterior and symmetric, not {}",
                        other.name()
                    )))
                }
            };
            match cli.format {
                Format::Human => {
                    println!("cumulative: {:?}", profile.cumulative());
                    println!("increments: {:?}", profile.increments());
                }
                Format::Json => println!("{}", profile_json(&profile)),
                Format::Dot => print!("{}", graph_to_dot(&profile.to_graph())),
            }
            Ok(true)
        }
        Command::Betti {
            max_i,
            oracle,
            graph,
        } => {
            no_dot(cli.format, "betti")?;
            let g = read_graph(&graph)?;
            if g.n() < 2 {
                return Err(CliError::usage("Betti numbers need at least 2 vertices"));
            }
            let top = max_i.unwrap_or(g.n() - 2).min(g.n() - 2);
            let values: Vec<u64> = (0..=top)
                .map(|i| match oracle {
                    BettiOracle::Hochster => g.betti_hochster(i),
                    BettiOracle::Formula => betti_shifted_formula(&g, i),
                })
                .collect::<shiftlab::Result<_>>()?;
            match cli.format {
                Format::Human => {
                    for (i, v) in values.iter().enumerate() {
                        println!("beta_{{{i},{}}} = {v}", i + 2);
                    }
                }
                _ => println!(
                    "{}",
                    serde_json::to_string(&values).expect("numbers serialize")
                ),
            }
            Ok(true)
        }
        Command::Gen { corpus } => {
            let graphs = gen_corpus(&corpus.resolve()?)?;
            print_graphs(&graphs, cli.format);
            Ok(true)
        }
        Command::Enumerate { graph } => {
            let g = read_graph(&graph)?;
            let all: Vec<Graph> = enumerate_combinatorial_shifted_graphs(&g)?
                .into_iter()
                .collect();
            if cli.format == Format::Human {
                println!("combinatorial shifted graphs: {}", all.len());
            }
            print_graphs(&all, cli.format);
            Ok(true)
        }
        Command::Verify {
            corpus,
            sampler,
            pad_check,
        } => {
            no_dot(cli.format, "verify")?;
            let spec = corpus.resolve()?;
            let bipartite = matches!(spec.model, Model::Bipartite | Model::Kab);
            let graphs = gen_corpus(&spec)?;
            // One seed drives both the corpus and the sampler.
            let generic = sampler.with_seed(spec.seed);
            let report = run_verify(&graphs, bipartite, &generic, pad_check)?;
            match cli.format {
                Format::Human => print!("{}", verify_human(&report)),
                _ => println!(
                    "{}",
                    serde_json::to_string(&report).expect("reports serialize")
                ),
            }
            Ok(report.ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
