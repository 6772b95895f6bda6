use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cotree_core::batch::{batch_verify, load_dir, write_reports, ORACLE_CAP};
use cotree_core::candidate::{check_connected, check_dual_complement, check_max_degree};
use cotree_core::dual_wood::{check_crossing_vertices, completion};
use cotree_core::extract::{certify, Pipeline};
use cotree_core::io::{read_graphs, write_graph, write_wood, Format};
use cotree_core::opp::{check_monotonicity, compatible_opp, parent_edges, validate_opp};
use cotree_core::planar::{check_three_connected, ordinary_dual, suspend};
use cotree_core::schnyder::{compute_wood, validate_wood};
use cotree_core::{corpus, draw, export, oracle, Color, EmbeddedPlanarGraph};

#[derive(Parser)]
#[command(
    name = "cotree",
    version,
    about = "Schnyder woods and degree-5 tree/co-tree pairs of 3-connected plane graphs"
)]
struct Cli {
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = corpus::DEFAULT_SEED)]
    seed: u64,
    /// Graph file format for input and output.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Rot)]
    format: FormatArg,
    /// Output file (or directory for `gen corpus`); stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Rot,
    #[value(name = "planar_code")]
    PlanarCode,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Rot => Format::Rot,
            FormatArg::PlanarCode => Format::PlanarCode,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    Red,
    Green,
    Blue,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Self {
        match c {
            ColorArg::Red => Color::Red,
            ColorArg::Green => Color::Green,
            ColorArg::Blue => Color::Blue,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Artifact {
    Graph,
    Wood,
    Completion,
    Candidate,
    TreePair,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: k4, wheel, prism, cube, octahedron, dodecahedron,
    /// icosahedron, stacked, or `corpus` for the whole test corpus.
    Gen {
        kind: String,
        /// Rim size for wheels, vertex count for stacked triangulations.
        size: Option<usize>,
    },
    /// Compute and validate a Schnyder wood; prints it in `.wood` format.
    Wood { input: PathBuf },
    /// Write the dual graph.
    Dual { input: PathBuf },
    /// Ordered path partition and parent edges for one color.
    Opp {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ColorArg::Green)]
        color: ColorArg,
    },
    /// Candidate subgraphs of the graph and its dual, with their checks.
    Candidate { input: PathBuf },
    /// Spanning tree and co-tree with certificates.
    Extract { input: PathBuf },
    /// Brute-force checks for small graphs.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        best_pair: bool,
        #[arg(long)]
        woods: bool,
        #[arg(long, default_value_t = ORACLE_CAP)]
        cap: usize,
    },
    /// Graphviz DOT of an artifact.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Artifact::Wood)]
        what: Artifact,
    },
    /// SVG drawing from face counts.
    Draw { input: PathBuf },
    /// Verify every graph in a directory (or the built-in corpus) and write
    /// `<out>.jsonl` and `<out>.csv`.
    Batch {
        dir: Option<PathBuf>,
        #[arg(long, default_value_t = ORACLE_CAP)]
        cap: usize,
    },
}

fn read_input(path: &Path, format: Format) -> Result<EmbeddedPlanarGraph> {
    let mut bytes = Vec::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes)?;
    } else {
        bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    }
    let mut graphs = read_graphs(&bytes, format).with_context(|| format!("parsing {}", path.display()))?;
    if graphs.is_empty() {
        bail!("{} holds no graph", path.display());
    }
    Ok(graphs.swap_remove(0))
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, text.as_bytes())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = Format::from(cli.format);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gen { kind, .. } if kind == "corpus" => {
            let dir = out.context("`gen corpus` needs --out <dir>")?;
            fs::create_dir_all(dir)?;
            let ext = match format {
                Format::Rot => "rot",
                Format::PlanarCode => "pc",
            };
            for (name, g) in corpus::full_corpus(cli.seed) {
                fs::write(dir.join(format!("{name}.{ext}")), write_graph(&g, format))?;
            }
        }
        Command::Gen { kind, size } => {
            let g = corpus::generate(&kind, size, cli.seed)?;
            debug_assert!(check_three_connected(&g));
            emit(out, &write_graph(&g, format))?;
        }
        Command::Wood { input } => {
            let g = read_input(&input, format)?;
            let gs = suspend(&g)?;
            let s = compute_wood(&gs)?;
            let report = validate_wood(&gs, &s);
            if !report.is_empty() {
                bail!("computed wood is invalid: {report}");
            }
            emit(out, write_wood(&s).as_bytes())?;
        }
        Command::Dual { input } => {
            let g = read_input(&input, format)?;
            emit(out, &write_graph(&ordinary_dual(&g)?, format))?;
        }
        Command::Opp { input, color } => {
            let g = read_input(&input, format)?;
            let s = compute_wood(&suspend(&g)?)?;
            let p = compatible_opp(&s, color.into())?;
            let parents = parent_edges(&s, &p)?;
            emit_json(
                out,
                &json!({
                    "partition": p,
                    "parents": parents,
                    "validation": validate_opp(&g, &p),
                    "monotonicity": check_monotonicity(&s, &p),
                }),
            )?;
        }
        Command::Candidate { input } => {
            let g = read_input(&input, format)?;
            let p = Pipeline::new(&g)?;
            emit_json(
                out,
                &json!({
                    "h": p.h,
                    "h_dual": p.h_dual,
                    "max_degree": check_max_degree(&p.h),
                    "max_degree_dual": check_max_degree(&p.h_dual),
                    "dual_complement": check_dual_complement(&p.h, &p.h_dual, &p.correspondence),
                    "h_zero": p.h_zero()?,
                    "connected": check_connected(&p.h),
                }),
            )?;
        }
        Command::Extract { input } => {
            let g = read_input(&input, format)?;
            let pair = certify(&Pipeline::new(&g)?)?;
            emit_json(out, &serde_json::to_value(&pair)?)?;
            if !pair.all_pass() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Oracle {
            input,
            count,
            enumerate,
            best_pair,
            woods,
            cap,
        } => {
            let g = read_input(&input, format)?;
            let all = !(count || enumerate || best_pair || woods);
            let mut result = serde_json::Map::new();
            if count || all {
                result.insert(
                    "spanning_trees".into(),
                    json!(oracle::count_graph_spanning_trees(&g).to_string()),
                );
            }
            if enumerate {
                result.insert(
                    "trees".into(),
                    json!(oracle::enumerate_spanning_trees(g.n(), g.edges(), cap)?),
                );
            }
            if best_pair || all {
                let dual = ordinary_dual(&g)?;
                let value = match oracle::best_degree_pair(&g, &dual, cap) {
                    Ok(best) => json!(best),
                    Err(e) => json!({ "skipped": e.to_string() }),
                };
                result.insert("best_pair".into(), value);
            }
            if woods {
                let gs = suspend(&g)?;
                let found = oracle::enumerate_woods(&gs, cap)?;
                let texts: Vec<String> = found.iter().map(write_wood).collect();
                result.insert("woods".into(), json!(texts));
            }
            emit_json(out, &serde_json::Value::Object(result))?;
        }
        Command::Export { input, what } => {
            let g = read_input(&input, format)?;
            let text = match what {
                Artifact::Graph => export::graph_dot(&g),
                Artifact::Wood => export::wood_dot(&compute_wood(&suspend(&g)?)?),
                Artifact::Completion => {
                    let p = Pipeline::new(&g)?;
                    let c = completion(&p.wood, &p.suspended_dual, &p.dual_wood)?;
                    let report = check_crossing_vertices(&c);
                    if !report.is_empty() {
                        bail!("completion has bad crossings: {report}");
                    }
                    export::completion_dot(&c)
                }
                Artifact::Candidate => export::candidate_dot(&g, &Pipeline::new(&g)?.h),
                Artifact::TreePair => {
                    let p = Pipeline::new(&g)?;
                    export::tree_pair_dot(&g, &p.dual, &certify(&p)?)
                }
            };
            emit(out, text.as_bytes())?;
        }
        Command::Draw { input } => {
            let g = read_input(&input, format)?;
            let s = compute_wood(&suspend(&g)?)?;
            let d = draw::draw(&s);
            let bad = draw::crossings(&d);
            if !bad.is_empty() {
                bail!("drawing has crossing segments: {bad:?}");
            }
            emit(out, draw::to_svg(&s, &d).as_bytes())?;
        }
        Command::Batch { dir, cap } => {
            let report = out.context("batch needs --out <report path>")?;
            let (inputs, seed) = match dir {
                Some(dir) => (load_dir(&dir)?, None),
                None => (
                    corpus::full_corpus(cli.seed)
                        .into_iter()
                        .map(|(n, g)| (n, Ok(g)))
                        .collect(),
                    Some(cli.seed),
                ),
            };
            let records = batch_verify(&inputs, seed, cap);
            let ok = write_reports(&records, report)?;
            let failed = records.iter().filter(|r| !r.pass).count();
            eprintln!("{} graphs, {failed} failed", records.len());
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
