use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rainbow_core::classes::{self, ClassWitness, DominatingStructure, StructureKind};
use rainbow_core::domination::{greedy_connected_dominating_set, two_step_greedy};
use rainbow_core::gen::{generate, FamilySpec};
use rainbow_core::graph::{bridges, metrics};
use rainbow_core::oracle::{self, ExactLimits, VerifyOptions, DEFAULT_COLOUR_CAP, DEFAULT_EDGE_CAP};
use rainbow_core::rainbow::{self, verify_colouring, ExtendOptions, RainbowColouring};
use rainbow_core::{io, ArcRep, EdgeColouring, Error, Graph, IntervalRep, Rational, Scalar};

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Rainbow colourings from connected dominating sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a graph, re-verify the result and print a summary line.
    Colour(ColourArgs),
    /// Check that a colouring is rainbow connected.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COLOUR_CAP)]
        colour_cap: usize,
        /// Also print one rainbow path per pair.
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact rainbow connection number by exhaustive search.
    ExactRc {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
        edge_cap: usize,
    },
    /// Compute a connected dominating set certificate.
    Domset {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DomsetAlgo::TwoStep)]
        algo: DomsetAlgo,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Order, size, degrees, distances, pendants and bridges.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Write a graph from one of the built-in families.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Interval representation file, for families that have one.
        #[arg(long)]
        rep_out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct ColourArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: ColourAlgo,
    /// Colouring file to write.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_COLOUR_CAP)]
    colour_cap: usize,
    /// Exhaustively check the base colouring before extending it (cds, mindeg).
    #[arg(long)]
    debug_verify: bool,
    /// Interval representation (unit-interval, structure).
    #[arg(long)]
    intervals: Option<PathBuf>,
    /// Circular-arc representation (structure).
    #[arg(long)]
    arcs: Option<PathBuf>,
    /// Threshold weights file `id weight` (structure, with --threshold).
    #[arg(long, requires = "threshold")]
    weights: Option<PathBuf>,
    #[arg(long)]
    threshold: Option<String>,
    /// Chain ordering a_1,...,a_k of one side (structure).
    #[arg(long, value_delimiter = ',')]
    chain: Option<Vec<usize>>,
    /// An externally supplied dominating path (structure).
    #[arg(long, value_delimiter = ',')]
    path: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColourAlgo {
    Cds,
    Mindeg,
    UnitInterval,
    Chordal,
    Structure,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomsetAlgo {
    TwoStep,
    GreedyCds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    TwinFan,
    K2n,
    K2nPlusEdge,
    Path,
    Cycle,
    Complete,
    Star,
    RandomMinDegree,
    UnitIntervalRandom,
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::InvalidRepresentation(_)
            | Error::InvalidColouring(_)
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::VertexOutOfRange { .. }
            | Error::Parameter(_) => 2,
            Error::BaseNotRainbow(..) | Error::BrokenWitness(..) => 1,
            _ => 3,
        };
        let msg = match &e {
            Error::Disconnected(_) | Error::CapExceeded { .. } => {
                format!("hypothesis violated: {e}")
            }
            _ => e.to_string(),
        };
        Failure { code, msg }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    })
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure {
        code: 2,
        msg: format!("{}: {e}", path.display()),
    })
}

fn with_file<T>(path: &Path, parsed: rainbow_core::Result<T>) -> std::result::Result<T, Failure> {
    parsed.map_err(|e| {
        let mut f = Failure::from(e);
        f.msg = format!("{}: {}", path.display(), f.msg);
        f
    })
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    with_file(path, io::parse_graph(&read(path)?))
}

fn hypothesis(msg: String) -> Failure {
    Failure {
        code: 3,
        msg: format!("hypothesis violated: {msg}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Colour(args) => colour(args),
        Command::Verify {
            input,
            colouring,
            colour_cap,
            witnesses,
        } => verify(&input, &colouring, colour_cap, witnesses),
        Command::ExactRc { input, edge_cap } => exact_rc(&input, edge_cap),
        Command::Domset { input, algo, out } => domset(&input, algo, out.as_deref()),
        Command::Stats { input } => stats(&input),
        Command::Generate {
            family,
            d,
            n,
            delta,
            seed,
            out,
            rep_out,
        } => generate_cmd(family, d, n, delta, seed, out.as_deref(), rep_out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn structure_from_args(g: &Graph, args: &ColourArgs) -> std::result::Result<DominatingStructure, Failure> {
    if let Some(p) = &args.intervals {
        let rep: IntervalRep = with_file(p, io::parse_intervals(g, &read(p)?))?;
        return Ok(classes::interval_dominating_path(g, &rep)?);
    }
    if let Some(p) = &args.arcs {
        let rep: ArcRep = with_file(p, io::parse_arcs(g, &read(p)?))?;
        return Ok(classes::circular_arc_dominating_cycle(g, &rep)?);
    }
    if let Some(p) = &args.weights {
        let weights: Vec<Rational> = with_file(p, io::parse_weights(&read(p)?, g.n()))?;
        let t = args.threshold.as_deref().unwrap_or_default();
        let threshold = Rational::parse_decimal(t).ok_or_else(|| Failure {
            code: 2,
            msg: format!("threshold is not a number: {t:?}"),
        })?;
        return Ok(classes::threshold_or_chain_dominator(g, &ClassWitness::Threshold { weights, threshold })?);
    }
    if let Some(ordering) = &args.chain {
        let w: ClassWitness<Rational> = ClassWitness::Chain {
            ordering: ordering.clone(),
        };
        return Ok(classes::threshold_or_chain_dominator(g, &w)?);
    }
    if let Some(path) = &args.path {
        let kind = if path.len() == 1 { StructureKind::Vertex } else { StructureKind::Path };
        return Ok(DominatingStructure::new(g, kind, path.clone())?);
    }
    Err(Failure {
        code: 2,
        msg: "structure needs one of --intervals, --arcs, --weights, --chain or --path".into(),
    })
}

fn structure_bound(s: &DominatingStructure) -> usize {
    match s.kind {
        StructureKind::Cycle => s.vertices.len().div_ceil(2) + 3,
        _ => s.vertices.len() + 2,
    }
}

fn colour(args: ColourArgs) -> Outcome {
    let g = read_graph(&args.input)?;
    let opts = ExtendOptions {
        verify_base: args.debug_verify,
    };
    let (name, rainbow, bound): (&str, RainbowColouring, Option<usize>) = match args.algo {
        ColourAlgo::Cds => {
            let out = rainbow::pipeline_cds_with(&g, opts)?;
            let bound = out.certificate.as_ref().map(|_| out.bound);
            ("cds", RainbowColouring { colouring: out.colouring, witness: out.witness }, bound)
        }
        ColourAlgo::Mindeg => {
            if g.min_degree() < 2 || g.n() < 4 {
                return Err(hypothesis(format!(
                    "mindeg needs minimum degree at least 2 and n at least 4 (minimum degree {}, n {})",
                    g.min_degree(),
                    g.n()
                )));
            }
            let out = rainbow::pipeline_mindeg_with(&g, opts)?;
            ("mindeg", RainbowColouring { colouring: out.colouring, witness: out.witness }, Some(out.bound))
        }
        ColourAlgo::UnitInterval => {
            let p = args.intervals.as_ref().ok_or_else(|| Failure {
                code: 2,
                msg: "unit-interval needs --intervals".into(),
            })?;
            let rep: IntervalRep = with_file(p, io::parse_intervals(&g, &read(p)?))?;
            let col = classes::unit_interval_colouring(&g, &rep)?;
            ("unit-interval", col, Some(metrics(&g)?.diameter))
        }
        ColourAlgo::Chordal => {
            let out = classes::chordal_radius_colouring(&g)?;
            ("chordal", out.rainbow, Some(3 * out.radius))
        }
        ColourAlgo::Structure => {
            let s = structure_from_args(&g, &args)?;
            let col = classes::colouring_from_dominating_structure(&g, &s)?;
            ("structure", col, Some(structure_bound(&s)))
        }
    };
    let report = verify_colouring(&g, &rainbow.colouring, rainbow.witness.as_ref(), args.colour_cap)?;
    if let Some(path) = &args.out {
        write(path, &io::write_colouring(&g, &rainbow.colouring))?;
    }
    let bound = bound.map_or_else(|| "none".to_string(), |b| b.to_string());
    println!(
        "algorithm {name} c {} bound {bound} verified {}",
        rainbow.colouring.count(),
        report.rainbow_connected
    );
    if !report.rainbow_connected {
        return Err(Failure {
            code: 1,
            msg: format!("produced colouring failed verification: {}", report.verdict()),
        });
    }
    Ok(())
}

fn verify(input: &Path, colouring: &Path, colour_cap: usize, witnesses: bool) -> Outcome {
    let g = read_graph(input)?;
    let col: EdgeColouring = with_file(colouring, io::parse_colouring(&g, &read(colouring)?))?;
    let report = oracle::rainbow_connected_with(
        &g,
        &col,
        VerifyOptions {
            colour_cap,
            collect_witnesses: witnesses,
        },
    )?;
    println!("{}", report.verdict());
    println!("c {}", col.count());
    match report.failing_pair {
        Some((u, v)) => println!("failing {u} {v}"),
        None => println!("ok"),
    }
    for ((u, v), path) in report.witnesses.iter().flatten() {
        let path: Vec<String> = path.iter().map(usize::to_string).collect();
        println!("{u} {v}: {}", path.join(" "));
    }
    if report.rainbow_connected {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            msg: "colouring is not rainbow connected".into(),
        })
    }
}

fn exact_rc(input: &Path, edge_cap: usize) -> Outcome {
    let g = read_graph(input)?;
    println!("{}", oracle::exact_rc(&g, ExactLimits { edge_cap })?);
    Ok(())
}

fn domset(input: &Path, algo: DomsetAlgo, out: Option<&Path>) -> Outcome {
    let g = read_graph(input)?;
    let cert = match algo {
        DomsetAlgo::TwoStep => two_step_greedy(&g)?,
        DomsetAlgo::GreedyCds => greedy_connected_dominating_set(&g, true)?,
    };
    let text = cert.to_text(&g);
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn list(vs: impl IntoIterator<Item = String>) -> String {
    let items: Vec<String> = vs.into_iter().collect();
    if items.is_empty() {
        "-".into()
    } else {
        items.join(" ")
    }
}

fn stats(input: &Path) -> Outcome {
    let g = read_graph(input)?;
    println!("n {}", g.n());
    println!("m {}", g.m());
    println!("min_degree {}", g.min_degree());
    println!("connected {}", g.is_connected());
    if g.is_connected() && g.n() > 0 {
        let m = metrics(&g)?;
        println!("diameter {}", m.diameter);
        println!("radius {}", m.radius);
        println!("centre {}", m.centre);
    }
    println!("pendants {}", list(g.pendants().iter().map(usize::to_string)));
    println!("bridges {}", list(bridges(&g).iter().map(|(u, v)| format!("{u}-{v}"))));
    Ok(())
}

fn required(name: &str, value: Option<usize>) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure {
        code: 2,
        msg: format!("this family needs --{name}"),
    })
}

fn generate_cmd(
    family: Family,
    d: Option<usize>,
    n: Option<usize>,
    delta: Option<usize>,
    seed: u64,
    out: Option<&Path>,
    rep_out: Option<&Path>,
) -> Outcome {
    let spec = match family {
        Family::TwinFan => FamilySpec::TwinFan { d: required("d", d)? },
        Family::K2n => FamilySpec::K2n { n: required("n", n)? },
        Family::K2nPlusEdge => FamilySpec::K2nPlusEdge { n: required("n", n)? },
        Family::Path => FamilySpec::Path { n: required("n", n)? },
        Family::Cycle => FamilySpec::Cycle { n: required("n", n)? },
        Family::Complete => FamilySpec::Complete { n: required("n", n)? },
        Family::Star => FamilySpec::Star { n: required("n", n)? },
        Family::RandomMinDegree => FamilySpec::RandomMinDegree {
            n: required("n", n)?,
            delta: required("delta", delta)?,
            seed,
        },
        Family::UnitIntervalRandom => FamilySpec::UnitIntervalRandom {
            n: required("n", n)?,
            seed,
        },
    };
    let generated = generate(spec)?;
    let text = io::write_graph(&generated.graph);
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    if let Some(path) = rep_out {
        let rep = generated.intervals.as_ref().ok_or_else(|| Failure {
            code: 2,
            msg: "this family has no interval representation".into(),
        })?;
        write(path, &io::write_intervals(rep))?;
    }
    Ok(())
}
