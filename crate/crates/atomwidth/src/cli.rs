//! Command-line definitions and the adapters behind each subcommand.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use atomwidth_core::colouring::{self, ChiBound, ColourError};
use atomwidth_core::generators::{self, Template};
use atomwidth_core::hardness::{self, HardnessError};
use atomwidth_core::structure::{self, ALL_PROPERTIES};
use atomwidth_core::{atoms, cwx, search, BuildError, Graph, Pattern};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::corpus;
use crate::expr;
use crate::formats::{self, Format, FormatError};
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "atomwidth", version, about = "Clique-width expressions and colouring for (C4, P6)-free graphs")]
pub struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file; standard input when absent or `-`.
    pub graph: Option<PathBuf>,
    /// Input format: dimacs, edgelist or json. Guessed from the extension or content by default.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Atoms,
    Bruteforce,
    Cwx,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Looks for an induced copy of any listed pattern.
    CheckFree {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated pattern names such as c4,p6,3p3,petersen.
        #[arg(long, default_value = "c4,p6")]
        patterns: String,
    },
    /// Decomposes along clique cutsets.
    Atoms {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Builds a clique-width expression for a (C4, P6)-free atom.
    BuildExpr {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Chromatic number.
    Chi {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "atoms")]
        method: Method,
        /// Expression file for `--method cwx`.
        #[arg(long)]
        expr: Option<PathBuf>,
        /// With `--method cwx`, stop once more than this many colours are needed.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Evaluates an expression given as JSON or prefix text.
    EvalExpr {
        /// Expression file; standard input when absent or `-`.
        expr: Option<PathBuf>,
    },
    /// Partitions the graph around an induced C5 and checks the structural properties.
    Partition {
        #[command(flatten)]
        input: GraphInput,
        /// The cycle as five comma-separated vertices.
        #[arg(long)]
        cycle: String,
    },
    /// Generates a named graph or a seeded random one.
    Gen(GenArgs),
    /// Builds the list-colouring gadget for a complete split instance.
    Reduce {
        /// Instance JSON: {"graph": {...}, "lists": [[...], ...]}.
        instance: Option<PathBuf>,
    },
    /// Checks the equivalence and freeness of a reduction.
    VerifyReduction {
        /// Instance JSON, optionally with a `gadget` to check instead of the constructed one.
        instance: Option<PathBuf>,
    },
    /// Writes a seeded corpus of verified (C4, P6)-free atoms.
    GenCorpus {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output directory, else `$ATOMWIDTH_CORPUS_DIR`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// path, cycle, complete, empty, petersen, f1, f2, f3, wall, subdivided-wall, complete-split,
    /// random-split, atom, template, c5-atom, chain or dnc.
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub height: Option<usize>,
    /// Subdivisions per wall edge.
    #[arg(long)]
    pub k: Option<usize>,
    /// Clique size (complete-split) or first side size (chain).
    #[arg(long)]
    pub c: Option<usize>,
    /// Independent set size (complete-split) or second side size (chain).
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Template for `template`: c5, c6, f1, f2, f3 or petersen.
    #[arg(long)]
    pub template: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output format: json, dimacs or edgelist.
    #[arg(long, default_value = "json")]
    pub to: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Expr(#[from] expr::ExprError),
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Successful run: the JSON (or raw text) to print, and whether the answer is negative.
#[derive(Debug)]
pub struct Reply {
    pub out: Output,
    pub negative: bool,
}

#[derive(Debug)]
pub enum Output {
    Json(Value),
    Text(String),
}

impl Reply {
    fn yes(v: Value) -> Reply {
        Reply { out: Output::Json(v), negative: false }
    }

    fn no(v: Value) -> Reply {
        Reply { out: Output::Json(v), negative: true }
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.negative)
    }

    pub fn render(&self, pretty: bool) -> String {
        match &self.out {
            Output::Json(v) if pretty => serde_json::to_string_pretty(v).expect("JSON serializes"),
            Output::Json(v) => v.to_string(),
            Output::Text(t) => t.trim_end().to_string(),
        }
    }
}

fn read_source(path: Option<&Path>) -> io::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

pub fn read_graph(input: &GraphInput) -> Result<Graph, CliError> {
    let text = read_source(input.graph.as_deref())?;
    let format = match &input.format {
        Some(f) => Format::parse(f)?,
        None => input.graph.as_deref().and_then(Format::from_path).unwrap_or_else(|| Format::sniff(&text)),
    };
    Ok(formats::read(&text, format)?)
}

fn parse_patterns(s: &str) -> Result<Vec<Pattern>, CliError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| Pattern::parse(t).ok_or_else(|| usage(format!("unknown pattern `{t}`")))).collect()
}

pub fn execute(cmd: &Command) -> Result<Reply, CliError> {
    match cmd {
        Command::CheckFree { input, patterns } => {
            let g = read_graph(input)?;
            let ps = parse_patterns(patterns)?;
            let found = search::violation(&g, &ps);
            let v = report::freeness(&ps, found.as_ref());
            Ok(if found.is_some() { Reply::no(v) } else { Reply::yes(v) })
        }
        Command::Atoms { input } => Ok(Reply::yes(report::atom_tree(&atoms::decompose_atoms(&read_graph(input)?)))),
        Command::BuildExpr { input } => {
            let g = read_graph(input)?;
            match atomwidth_core::build_atom_expr(&g) {
                Ok(o) => Ok(Reply::yes(report::build_outcome(&o))),
                Err(BuildError::Empty) => Err(usage("the graph is empty")),
                Err(e) => Ok(Reply::no(report::build_error(&e))),
            }
        }
        Command::Chi { input, method, expr: expr_path, k_max } => chi(input, *method, expr_path.as_deref(), *k_max),
        Command::EvalExpr { expr: path } => {
            let e = expr::parse_any(&read_source(path.as_deref())?)?;
            let lg = cwx::eval(&e).map_err(expr::ExprError::from)?;
            let (g, ids) = lg.to_compact_graph();
            let labels: Vec<u16> = ids.iter().map(|&v| lg.label_of(v).expect("vertex is created")).collect();
            Ok(Reply::yes(json!({"graph": report::graph(&g), "vertices": ids, "labels": labels, "width": e.width()})))
        }
        Command::Partition { input, cycle } => {
            let g = read_graph(input)?;
            let vs: Vec<usize> =
                cycle.split(',').map(|t| t.trim().parse().map_err(|_| usage(format!("bad cycle vertex `{t}`")))).collect::<Result<_, _>>()?;
            let c: [usize; 5] = vs.try_into().map_err(|_| usage("--cycle needs five vertices"))?;
            let p = structure::partition_around_c5(&g, c).map_err(|e| usage(e.to_string()))?;
            let props = structure::check_properties(&g, &p, &ALL_PROPERTIES);
            let v = report::partition(&p, &props);
            Ok(if props.holds() { Reply::yes(v) } else { Reply::no(v) })
        }
        Command::Gen(args) => gen(args),
        Command::Reduce { instance } => {
            let (g, lists, _) = read_instance(instance.as_deref())?;
            let r = hardness::reduce(&g, &lists).map_err(|e| usage(e.to_string()))?;
            Ok(Reply::yes(report::reduction(&r)))
        }
        Command::VerifyReduction { instance } => verify_reduction(instance.as_deref()),
        Command::GenCorpus { count, n_max, seed, jobs, out } => {
            let dir = match out {
                Some(d) => d.clone(),
                None => std::env::var_os(corpus::CORPUS_DIR_VAR)
                    .map(PathBuf::from)
                    .ok_or_else(|| usage(format!("give --out or set {}", corpus::CORPUS_DIR_VAR)))?,
            };
            let graphs = corpus::generate(*count, *n_max, *seed, *jobs).map_err(|e| usage(e.to_string()))?;
            let m = corpus::write(&dir, *seed, *n_max, &graphs)?;
            Ok(Reply::yes(json!({"dir": dir, "count": m.entries.len(), "base_seed": m.base_seed, "n_max": m.n_max})))
        }
    }
}

fn chi(input: &GraphInput, method: Method, expr_path: Option<&Path>, k_max: Option<usize>) -> Result<Reply, CliError> {
    let colour_err = |e: ColourError| usage(e.to_string());
    match method {
        Method::Cwx => {
            let path = expr_path.ok_or_else(|| usage("--method cwx needs --expr"))?;
            let e = expr::parse_any(&fs::read_to_string(path)?)?;
            Ok(match colouring::chromatic_cwx(&e, k_max).map_err(colour_err)? {
                ChiBound::Exact(k) => Reply::yes(json!({"chi": k, "method": "cwx"})),
                ChiBound::Exceeds(k) => Reply::no(json!({"chi": Value::Null, "exceeds": k, "method": "cwx"})),
            })
        }
        Method::Bruteforce => {
            let g = read_graph(input)?;
            let (k, c) = colouring::chromatic_bruteforce(&g).map_err(colour_err)?;
            Ok(Reply::yes(json!({"chi": k, "colouring": c, "method": "bruteforce"})))
        }
        Method::Atoms => {
            let g = read_graph(input)?;
            match colouring::chromatic_via_atoms(&g) {
                Ok(r) => Ok(Reply::yes(report::chi_report(&r))),
                Err(ColourError::Forbidden(e)) => Ok(Reply::no(json!({"error": "graph is not (C4, P6)-free", "certificate": report::embedding(&e)}))),
                Err(ColourError::Build(e)) => Ok(Reply::no(report::build_error(&e))),
                Err(e) => Err(colour_err(e)),
            }
        }
    }
}

fn need<T>(x: Option<T>, name: &str, family: &str) -> Result<T, CliError> {
    x.ok_or_else(|| usage(format!("`{family}` needs --{name}")))
}

fn gen(a: &GenArgs) -> Result<Reply, CliError> {
    let f = a.family.as_str();
    let gen_err = |e: generators::GenError| usage(e.to_string());
    let mut extra = serde_json::Map::new();
    let g = match f {
        "path" => Graph::path(need(a.n, "n", f)?),
        "cycle" => {
            let n = need(a.n, "n", f)?;
            if n < 3 {
                return Err(usage("cycles need at least 3 vertices"));
            }
            Graph::cycle(n)
        }
        "complete" => Graph::complete(need(a.n, "n", f)?),
        "empty" => Graph::empty(need(a.n, "n", f)?),
        "petersen" => generators::petersen(),
        "f1" => generators::f1(),
        "f2" => generators::f2(),
        "f3" => generators::f3(),
        "wall" => generators::wall(need(a.height, "height", f)?).map_err(gen_err)?,
        "subdivided-wall" => generators::subdivided_wall(need(a.height, "height", f)?, a.k.unwrap_or(1)).map_err(gen_err)?,
        "complete-split" => generators::complete_split(need(a.c, "c", f)?, need(a.i, "i", f)?),
        "random-split" => generators::random_split(need(a.n, "n", f)?, a.p.unwrap_or(0.5).clamp(0.0, 1.0), a.seed),
        "atom" => generators::random_c4p6free_atom(need(a.n, "n", f)?, a.seed).map_err(gen_err)?,
        "template" => {
            let name = need(a.template.as_deref(), "template", f)?;
            let t = Template::parse(name).ok_or_else(|| usage(format!("unknown template `{name}`")))?;
            generators::grow_atom(t, a.n.unwrap_or(t.graph().n()), a.seed).map_err(gen_err)?
        }
        "c5-atom" => generators::grow_c5_atom(need(a.n, "n", f)?, &generators::C5_CASE2_TYPES, a.seed).map_err(gen_err)?,
        "chain" | "dnc" => {
            let (g, x, y) = if f == "chain" {
                generators::random_cobipartite_chain(need(a.c, "c", f)?, need(a.i, "i", f)?, a.seed)
            } else {
                generators::random_dnc_instance(need(a.n, "n", f)?, a.seed)
            };
            extra.insert("a".into(), json!(x));
            extra.insert("b".into(), json!(y));
            g
        }
        other => return Err(usage(format!("unknown family `{other}`"))),
    };
    let format = Format::parse(&a.to)?;
    if format != Format::Json {
        return Ok(Reply { out: Output::Text(formats::write(&g, format)), negative: false });
    }
    let mut v = report::graph(&g);
    let obj = v.as_object_mut().expect("graph JSON is an object");
    obj.insert("seed".into(), json!(a.seed));
    obj.extend(extra);
    Ok(Reply::yes(v))
}

fn read_instance(path: Option<&Path>) -> Result<(Graph, hardness::ListAssignment, Option<Graph>), CliError> {
    let text = read_source(path)?;
    let inst: report::InstanceInput = serde_json::from_str(&text).map_err(FormatError::from)?;
    let g = inst.graph.to_graph().map_err(FormatError::from)?;
    let lists = inst.lists.into_assignment(g.n()).map_err(usage)?;
    let gadget = inst.gadget.map(|j| j.to_graph()).transpose().map_err(FormatError::from)?;
    Ok((g, lists, gadget))
}

fn verify_reduction(path: Option<&Path>) -> Result<Reply, CliError> {
    let (g, lists, gadget) = read_instance(path)?;
    let mut r = hardness::reduce(&g, &lists).map_err(|e| usage(e.to_string()))?;
    if let Some(given) = gadget {
        r.gadget = given;
    }
    let audit = hardness::audit(&r).err();
    let eq = match hardness::verify_equivalence(&r) {
        Ok(e) => Some(e),
        Err(HardnessError::TooLarge { .. }) => None,
        Err(e) => return Ok(Reply::no(json!({"audit": e.to_string()}))),
    };
    let cert = hardness::verify_freeness(&r);
    let ok = audit.is_none() && eq.as_ref().is_none_or(|e| e.holds()) && cert.is_none();
    let v = json!({
        "audit": audit.map_or(Value::String("ok".into()), |e| Value::String(e.to_string())),
        "gadget_order": r.gadget.n(),
        "expected_order": r.expected_order(),
        "equivalence": eq.as_ref().map_or(Value::Null, report::equivalence),
        "freeness": report::freeness(&hardness::GADGET_FREE, cert.as_ref()),
    });
    Ok(if ok { Reply::yes(v) } else { Reply::no(v) })
}
