//! Command-line front end.
//!
//! Graph arguments are paths to graph objects (`-` reads stdin) or family
//! specs such as `family:Gnm:4,5`. Exit codes: 0 on success, 1 when engines
//! disagree or a verification grid departs from the stated truth table,
//! 2 on usage or input errors.

use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::canon::canonical_key;
use crate::enumeration::{enumerate_graphs, enumerate_terminal_classes, GraphMode};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{GraphFile, Multigraph, TerminalPair};
use crate::optimality::{self, dominates, find_optimal, DominanceVerdict, GridRow, OptimalityReport, SearchConfig};
use crate::poly::eval_rational;
use crate::reliability::{self, Engine, FactoringEngine, SplitResult};
use crate::{IntPolynomial, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "splitrel", version, about = "Exact split reliability of multigraphs")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Largest number of edge slots the subset oracle will enumerate.
    #[arg(long, global = true, default_value_t = reliability::DEFAULT_SLOT_CEILING, value_parser = slot_ceiling)]
    pub max_slots: usize,
    /// Worker threads for searches (defaults to all cores).
    #[arg(long, global = true, value_parser = positive)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Split,
    Allterm,
    Twoterm,
    Kterm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Oracle,
    Factoring,
    Partition,
    /// Run every engine and report whether they agree.
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeChoice {
    Simple,
    Multi,
}

impl From<ModeChoice> for GraphMode {
    fn from(m: ModeChoice) -> Self {
        match m {
            ModeChoice::Simple => GraphMode::Simple,
            ModeChoice::Multi => GraphMode::Multi,
        }
    }
}

/// Terminal overrides; the graph object's own `s`/`t` are used otherwise.
#[derive(Args, Debug, Clone, Default)]
pub struct Terminals {
    #[arg(short = 's', long = "source")]
    pub s: Option<usize>,
    #[arg(short = 't', long = "sink")]
    pub t: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reliability polynomial of a graph.
    Compute {
        graph: String,
        #[command(flatten)]
        terminals: Terminals,
        #[arg(long, value_enum, default_value_t = Measure::Split)]
        measure: Measure,
        #[arg(long, value_enum, default_value_t = EngineChoice::Factoring)]
        engine: EngineChoice,
        /// Terminal set for `--measure kterm`, comma separated.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Split state counts `N_i` and the minimum cut.
    Counts {
        graph: String,
        #[command(flatten)]
        terminals: Terminals,
        #[arg(long, value_enum, default_value_t = EngineChoice::Factoring)]
        engine: EngineChoice,
    },
    /// Compare two split polynomials on (0, 1).
    Compare {
        first: String,
        second: String,
        /// Terminals of the first graph as `s,t`.
        #[arg(long, value_parser = parse_pair)]
        terminals1: Option<(usize, usize)>,
        /// Terminals of the second graph as `s,t`.
        #[arg(long, value_parser = parse_pair)]
        terminals2: Option<(usize, usize)>,
    },
    /// List connected (n, m)-graphs up to isomorphism, one object per line.
    Enumerate {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'm', long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ModeChoice::Multi)]
        mode: ModeChoice,
        /// Emit one line per terminal class instead of per graph.
        #[arg(long)]
        pairs: bool,
    },
    /// Decide whether an optimal (n, m)-graph exists.
    Optimal {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'm', long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ModeChoice::Multi)]
        mode: ModeChoice,
        /// Examine every terminal pair rather than one per orbit.
        #[arg(long)]
        all_pairs: bool,
    },
    /// Run the existence search over a grid and compare with the stated table.
    Verify {
        /// Restrict to one mode; both run by default.
        #[arg(long, value_enum)]
        mode: Option<ModeChoice>,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Defaults to 6 for multigraphs and 7 for simple graphs.
        #[arg(long)]
        n_max: Option<usize>,
        /// Largest m; defaults to n + 3 for multigraphs and n(n-1)/2 for simple graphs.
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Build a named family member.
    Family { spec: String },
    /// CSV samples `p,split,allterm` on [0, 1].
    Plot {
        graph: String,
        #[command(flatten)]
        terminals: Terminals,
        #[arg(long, default_value_t = 101, value_parser = sample_count)]
        samples: usize,
    },
}

fn bounded(s: &str, lo: usize, hi: usize) -> std::result::Result<usize, String> {
    let v: usize = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    if (lo..=hi).contains(&v) {
        Ok(v)
    } else if hi == usize::MAX {
        Err(format!("must be at least {lo}"))
    } else {
        Err(format!("must be between {lo} and {hi}"))
    }
}

fn slot_ceiling(s: &str) -> std::result::Result<usize, String> {
    bounded(s, 1, 40)
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    bounded(s, 1, usize::MAX)
}

fn sample_count(s: &str) -> std::result::Result<usize, String> {
    bounded(s, 2, usize::MAX)
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `s,t`, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let cfg = &cli.run;
    match &cli.command {
        Command::Compute { graph, terminals, measure, engine, k } => compute(cfg, out, graph, terminals, *measure, *engine, k),
        Command::Counts { graph, terminals, engine } => counts(cfg, out, graph, terminals, *engine),
        Command::Compare { first, second, terminals1, terminals2 } => compare(cfg, out, first, second, *terminals1, *terminals2),
        Command::Enumerate { n, m, mode, pairs } => enumerate(out, *n, *m, (*mode).into(), *pairs),
        Command::Optimal { n, m, mode, all_pairs } => {
            let search = SearchConfig { all_pairs: *all_pairs, workers: cfg.workers, ..SearchConfig::fast() };
            let report = find_optimal(*n, *m, (*mode).into(), &search)?;
            match cfg.format {
                Format::Structured => writeln!(out, "{}", report.to_json())?,
                Format::Text => write_report(out, &report)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { mode, n_min, n_max, m_max } => verify(cfg, out, *mode, *n_min, *n_max, *m_max),
        Command::Family { spec } => family(cfg, out, spec),
        Command::Plot { graph, terminals, samples } => plot(out, graph, terminals, *samples),
    }
}

/// Reads a graph object from a path, stdin (`-`) or a family spec.
pub fn load_graph(source: &str) -> Result<(Multigraph, Option<TerminalPair>)> {
    if source.starts_with("family:") {
        let (g, tp) = source.parse::<FamilySpec>()?.construct()?;
        return Ok((g, Some(tp)));
    }
    let text = if source == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Error::GraphSyntax(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(source).map_err(|e| Error::GraphSyntax(format!("{source}: {e}")))?
    };
    GraphFile::parse(&text)?.to_graph()
}

fn terminals_for(g: &Multigraph, from_file: Option<TerminalPair>, over: (Option<usize>, Option<usize>)) -> CliResult<TerminalPair> {
    let s = over.0.or(from_file.map(|tp| tp.s()));
    let t = over.1.or(from_file.map(|tp| tp.t()));
    match (s, t) {
        (Some(s), Some(t)) => {
            let tp = TerminalPair::new(s, t)?;
            tp.check(g)?;
            Ok(tp)
        }
        _ => Err(CliError::Usage("terminals required: give -s and -t or put s and t in the graph object".into())),
    }
}

fn load_with_terminals(source: &str, terminals: &Terminals) -> CliResult<(Multigraph, TerminalPair)> {
    let (g, tp) = load_graph(source)?;
    let tp = terminals_for(&g, tp, (terminals.s, terminals.t))?;
    Ok((g, tp))
}

const DISCONNECTED_NOTE: &str = "note: graph is disconnected; split reliability is the product of the all-terminal \
reliabilities of the two components when exactly two components separate s and t, and 0 otherwise";

fn split_with(cfg: &RunConfig, g: &Multigraph, tp: TerminalPair, engine: Engine) -> Result<SplitResult> {
    match engine {
        Engine::Oracle => reliability::split_rel_oracle_with(g, tp, cfg.max_slots),
        other => reliability::split_rel(g, tp, other),
    }
}

/// Split result from the chosen engine(s); `agree` is `None` for a single engine.
fn split_checked(cfg: &RunConfig, g: &Multigraph, tp: TerminalPair, engine: EngineChoice) -> Result<(SplitResult, Option<bool>)> {
    let single = |e| split_with(cfg, g, tp, e);
    match engine {
        EngineChoice::Oracle => Ok((single(Engine::Oracle)?, None)),
        EngineChoice::Factoring => Ok((single(Engine::Factoring)?, None)),
        EngineChoice::Partition => Ok((single(Engine::Partition)?, None)),
        EngineChoice::Both => {
            let fac = single(Engine::Factoring)?;
            let mut agree = single(Engine::Oracle)? == fac;
            if g.is_connected() && g.n() <= reliability::MAX_PARTITION_VERTICES {
                agree &= single(Engine::Partition)? == fac;
            }
            Ok((fac, Some(agree)))
        }
    }
}

fn indexed_counts(r: &SplitResult) -> String {
    let top = r.nvector.top_index().unwrap_or(r.nvector.first_index());
    r.nvector
        .iter()
        .take_while(|(i, _)| *i <= top)
        .map(|(i, c)| format!("N_{i}={c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_agreement(out: &mut dyn Write, agree: Option<bool>) -> CliResult<i32> {
    match agree {
        Some(true) => writeln!(out, "engines agree")?,
        Some(false) => {
            writeln!(out, "ENGINES DISAGREE")?;
            return Ok(EXIT_MISMATCH);
        }
        None => {}
    }
    Ok(EXIT_OK)
}

fn compute(cfg: &RunConfig, out: &mut dyn Write, source: &str, terminals: &Terminals, measure: Measure, engine: EngineChoice, k: &[usize]) -> CliResult<i32> {
    let (g, file_tp) = load_graph(source)?;
    match measure {
        Measure::Split => {
            let tp = terminals_for(&g, file_tp, (terminals.s, terminals.t))?;
            let (r, agree) = split_checked(cfg, &g, tp, engine)?;
            let disconnected = !g.is_connected();
            match cfg.format {
                Format::Structured => writeln!(
                    out,
                    "{}",
                    json!({
                        "measure": "split",
                        "s": tp.s(),
                        "t": tp.t(),
                        "polynomial": r.polynomial.to_string(),
                        "counts": r.nvector.counts().iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "c": r.cutset_size,
                        "disconnected": disconnected,
                        "engines_agree": agree,
                    })
                )?,
                Format::Text => {
                    if disconnected {
                        writeln!(out, "{DISCONNECTED_NOTE}")?;
                    }
                    writeln!(out, "{}", r.polynomial)?;
                    writeln!(out, "N: {}", r.nvector)?;
                    writeln!(out, "c={}", r.cutset_size)?;
                }
            }
            if cfg.format == Format::Structured {
                return Ok(if agree == Some(false) { EXIT_MISMATCH } else { EXIT_OK });
            }
            write_agreement(out, agree)
        }
        Measure::Allterm => {
            let f = match engine {
                EngineChoice::Oracle => reliability::all_terminal_oracle(&g, cfg.max_slots)?,
                EngineChoice::Factoring => reliability::all_terminal_rel(&g),
                EngineChoice::Partition => reliability::all_terminal_partition(&g)?,
                EngineChoice::Both => {
                    let f = reliability::all_terminal_rel(&g);
                    let agree = reliability::all_terminal_oracle(&g, cfg.max_slots)? == f;
                    write_polynomial(cfg, out, "allterm", &f)?;
                    return if cfg.format == Format::Text {
                        write_agreement(out, Some(agree))
                    } else {
                        Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
                    };
                }
            };
            write_polynomial(cfg, out, "allterm", &f)?;
            Ok(EXIT_OK)
        }
        Measure::Twoterm => {
            let tp = terminals_for(&g, file_tp, (terminals.s, terminals.t))?;
            let f = reliability::two_terminal_rel(&g, tp, cfg.max_slots)?;
            write_polynomial(cfg, out, "twoterm", &f)?;
            Ok(EXIT_OK)
        }
        Measure::Kterm => {
            if k.is_empty() {
                return Err(CliError::Usage("--measure kterm needs --k v1,v2,...".into()));
            }
            let f = reliability::k_terminal_rel(&g, k, cfg.max_slots)?;
            write_polynomial(cfg, out, "kterm", &f)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_polynomial(cfg: &RunConfig, out: &mut dyn Write, measure: &str, f: &IntPolynomial) -> io::Result<()> {
    match cfg.format {
        Format::Structured => writeln!(out, "{}", json!({ "measure": measure, "polynomial": f.to_string() })),
        Format::Text => writeln!(out, "{f}"),
    }
}

fn counts(cfg: &RunConfig, out: &mut dyn Write, source: &str, terminals: &Terminals, engine: EngineChoice) -> CliResult<i32> {
    let (g, tp) = load_with_terminals(source, terminals)?;
    let (r, agree) = split_checked(cfg, &g, tp, engine)?;
    match cfg.format {
        Format::Structured => {
            writeln!(
                out,
                "{}",
                json!({
                    "n": g.n(),
                    "m": g.m(),
                    "counts": r.nvector.counts().iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    "c": r.cutset_size,
                })
            )?;
            Ok(if agree == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
        }
        Format::Text => {
            writeln!(out, "N: {}", r.nvector)?;
            writeln!(out, "{}", indexed_counts(&r))?;
            writeln!(out, "c={}", r.cutset_size)?;
            write_agreement(out, agree)
        }
    }
}

fn compare(
    cfg: &RunConfig,
    out: &mut dyn Write,
    first: &str,
    second: &str,
    t1: Option<(usize, usize)>,
    t2: Option<(usize, usize)>,
) -> CliResult<i32> {
    let load = |source: &str, over: Option<(usize, usize)>| -> CliResult<IntPolynomial> {
        let (g, tp) = load_graph(source)?;
        let tp = terminals_for(&g, tp, (over.map(|x| x.0), over.map(|x| x.1)))?;
        Ok(FactoringEngine::new().split(&g, tp)?)
    };
    let f = load(first, t1)?;
    let g = load(second, t2)?;
    let verdict = dominates(&f, &g);
    match cfg.format {
        Format::Structured => {
            let (relation, points) = verdict_parts(&verdict);
            writeln!(out, "{}", json!({ "relation": relation, "witnesses": points }))?;
        }
        Format::Text => writeln!(out, "{}", verdict_line(&verdict))?,
    }
    Ok(EXIT_OK)
}

fn verdict_parts(v: &DominanceVerdict) -> (&'static str, Vec<String>) {
    match v {
        DominanceVerdict::Equal => ("EQUAL", vec![]),
        DominanceVerdict::Dominates { strict_at } => ("DOMINATES", vec![strict_at.to_string()]),
        DominanceVerdict::DominatedBy { strict_at } => ("DOMINATED_BY", vec![strict_at.to_string()]),
        DominanceVerdict::Incomparable { first_above, second_above } => {
            ("INCOMPARABLE", vec![first_above.to_string(), second_above.to_string()])
        }
    }
}

/// `EQUAL`, `DOMINATES p=..`, `DOMINATED_BY p=..` or `INCOMPARABLE p1=.. p2=..`
/// where the first graph is ahead at `p1` and behind at `p2`.
pub fn verdict_line(v: &DominanceVerdict) -> String {
    let (relation, points) = verdict_parts(v);
    match points.as_slice() {
        [] => relation.to_string(),
        [p] => format!("{relation} p={p}"),
        [p1, p2] => format!("{relation} p1={p1} p2={p2}"),
        _ => unreachable!("at most two witnesses"),
    }
}

fn enumerate(out: &mut dyn Write, n: usize, m: usize, mode: GraphMode, pairs: bool) -> CliResult<i32> {
    for g in enumerate_graphs(n, m, mode)? {
        if pairs {
            for tp in enumerate_terminal_classes(&g) {
                writeln!(out, "{}", GraphFile::from_graph(&g, Some(tp)).to_json())?;
            }
        } else {
            writeln!(out, "{}", GraphFile::from_graph(&g, None).to_json())?;
        }
    }
    Ok(EXIT_OK)
}

fn write_report(out: &mut dyn Write, r: &OptimalityReport) -> io::Result<()> {
    writeln!(
        out,
        "({}, {}) {}: {} ({} instances, {} distinct polynomials)",
        r.n,
        r.m,
        r.mode,
        if r.exists { "optimal graph exists" } else { "no optimal graph" },
        r.instances,
        r.distinct_polynomials
    )?;
    if let Some(w) = &r.witness {
        writeln!(out, "  witness: {}", GraphFile::from_graph(&w.graph, Some(w.terminals)).to_json())?;
        writeln!(out, "  split: {}", w.polynomial)?;
    }
    for rf in &r.refutations {
        writeln!(out, "  candidate {} beaten by {} at p={}", rf.candidate.key, rf.beater.key, rf.at)?;
    }
    Ok(())
}

fn verify(cfg: &RunConfig, out: &mut dyn Write, mode: Option<ModeChoice>, n_min: usize, n_max: Option<usize>, m_max: Option<usize>) -> CliResult<i32> {
    let modes: Vec<GraphMode> = match mode {
        Some(m) => vec![m.into()],
        None => vec![GraphMode::Multi, GraphMode::Simple],
    };
    let search = SearchConfig { workers: cfg.workers, ..SearchConfig::fast() };
    let mut rows: Vec<GridRow> = Vec::new();
    for mode in modes {
        let hi = n_max.unwrap_or(if mode == GraphMode::Multi { 6 } else { 7 });
        if n_min < 2 || hi < n_min {
            return Err(CliError::Usage(format!("empty grid: n from {n_min} to {hi}")));
        }
        let m_of = |n: usize| m_max.unwrap_or(if mode == GraphMode::Multi { n + 3 } else { n * (n - 1) / 2 });
        let cells = optimality::grid_cells(mode, n_min..=hi, m_of);
        rows.extend(optimality::verify_theorems(mode, &cells, &search)?);
    }
    let all_agree = rows.iter().all(GridRow::agrees);
    match cfg.format {
        Format::Structured => {
            let table: Vec<_> = rows
                .iter()
                .map(|r| json!({ "predicted": r.predicted, "agrees": r.agrees(), "report": r.report.to_json() }))
                .collect();
            writeln!(out, "{}", json!({ "agree": all_agree, "rows": table }))?;
        }
        Format::Text => {
            writeln!(out, "mode    n   m  predicted  observed  status")?;
            for row in &rows {
                let r = &row.report;
                let predicted = row.predicted.map_or("-", |p| if p { "yes" } else { "no" });
                let observed = if r.exists { "yes" } else { "no" };
                let status = if row.agrees() { "ok" } else { "MISMATCH" };
                writeln!(out, "{:<6} {:>2} {:>3}  {predicted:>9}  {observed:>8}  {status}", r.mode.to_string(), r.n, r.m)?;
                if !row.agrees() {
                    write_report(out, r)?;
                }
            }
            writeln!(out, "{}", if all_agree { "all cells agree" } else { "grid disagrees with the stated table" })?;
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_MISMATCH })
}

fn family(cfg: &RunConfig, out: &mut dyn Write, text: &str) -> CliResult<i32> {
    let spec: FamilySpec = text.parse()?;
    let (g, tp) = spec.construct()?;
    let stated = spec.expected_ncounts().ok();
    let closed = spec.closed_form_split().ok();
    let file = GraphFile::from_graph(&g, Some(tp));
    match cfg.format {
        Format::Structured => writeln!(
            out,
            "{}",
            json!({
                "family": spec.to_string(),
                "graph": serde_json::to_value(&file).expect("graph objects always serialize"),
                "key": canonical_key(&g, Some(tp)).to_hex(),
                "stated_counts": stated.as_ref().map(|v| v.iter().map(|(i, c)| json!({ "i": i, "N": c.to_string() })).collect::<Vec<_>>()),
                "closed_form": closed.as_ref().map(ToString::to_string),
            })
        )?,
        Format::Text => {
            writeln!(out, "{}", file.to_json())?;
            if let Some(v) = &stated {
                let line: Vec<String> = v.iter().map(|(i, c)| format!("N_{i}={c}")).collect();
                writeln!(out, "stated: {}", line.join(" "))?;
            }
            if let Some(f) = &closed {
                writeln!(out, "closed form: {f}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Decimal rendering of a rational with `digits` places, rounding half away from zero.
pub fn decimal(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled: BigInt = x.numer().abs() * &scale * 2 + x.denom();
    let rounded = scaled.div_floor(&(x.denom() * 2));
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() { "-" } else { "" };
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

fn plot(out: &mut dyn Write, source: &str, terminals: &Terminals, samples: usize) -> CliResult<i32> {
    let (g, tp) = load_with_terminals(source, terminals)?;
    let mut engine = FactoringEngine::new();
    let split = engine.split(&g, tp)?;
    let all = engine.all_terminal(&g);
    writeln!(out, "p,split,allterm")?;
    let last = BigInt::from(samples - 1);
    for k in 0..samples {
        let p = Rational::new(BigInt::from(k), last.clone());
        writeln!(out, "{},{},{}", decimal(&p, 12), decimal(&eval_rational(&split, &p), 12), decimal(&eval_rational(&all, &p), 12))?;
    }
    Ok(EXIT_OK)
}
