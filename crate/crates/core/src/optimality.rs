//! Uniform dominance of split-reliability polynomials and the search for
//! optimal `(n, m)`-graphs.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::canon::{canonical_key, CanonicalKey};
use crate::enumeration::{all_terminal_pairs, enumerate_graphs, enumerate_terminal_classes, GraphMode};
use crate::error::{Error, Result};
use crate::graph::{GraphFile, Multigraph, TerminalPair};
use crate::poly::{from_nvector, sign_on_unit_interval, IntervalSign, NVector};
use crate::reliability::{split_rel, Engine, SubsetCounts};
use crate::{IntPolynomial, Rational};

/// How `f` compares with `g` on `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominanceVerdict {
    Equal,
    /// `f >= g` everywhere, strictly at `strict_at`.
    Dominates { strict_at: Rational },
    /// `f <= g` everywhere, strictly at `strict_at`.
    DominatedBy { strict_at: Rational },
    /// `f > g` at `first_above` and `f < g` at `second_above`.
    Incomparable { first_above: Rational, second_above: Rational },
}

impl DominanceVerdict {
    /// `f >= g` on the whole interval.
    pub fn first_at_least(&self) -> bool {
        matches!(self, DominanceVerdict::Equal | DominanceVerdict::Dominates { .. })
    }

    /// A point where `g > f`, if there is one.
    pub fn second_wins_at(&self) -> Option<&Rational> {
        match self {
            DominanceVerdict::DominatedBy { strict_at } => Some(strict_at),
            DominanceVerdict::Incomparable { second_above, .. } => Some(second_above),
            _ => None,
        }
    }

    /// A point where `f > g`, if there is one.
    pub fn first_wins_at(&self) -> Option<&Rational> {
        match self {
            DominanceVerdict::Dominates { strict_at } => Some(strict_at),
            DominanceVerdict::Incomparable { first_above, .. } => Some(first_above),
            _ => None,
        }
    }
}

/// Decides `f >= g`, `f <= g`, both or neither on `(0, 1)` exactly.
pub fn dominates(f: &IntPolynomial, g: &IntPolynomial) -> DominanceVerdict {
    match sign_on_unit_interval(&(f - g)) {
        IntervalSign::IdenticallyZero => DominanceVerdict::Equal,
        IntervalSign::PositiveOnOpen { witness } | IntervalSign::NonNegativeWithZeros { witness } => {
            DominanceVerdict::Dominates { strict_at: witness }
        }
        IntervalSign::NegativeOnOpen { witness } | IntervalSign::NonPositiveWithZeros { witness } => {
            DominanceVerdict::DominatedBy { strict_at: witness }
        }
        IntervalSign::Mixed { negative_at, positive_at } => {
            DominanceVerdict::Incomparable { first_above: positive_at, second_above: negative_at }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    FirstWins,
    SecondWins,
    Tie,
}

impl Endpoint {
    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Greater => Endpoint::FirstWins,
            Ordering::Less => Endpoint::SecondWins,
            Ordering::Equal => Endpoint::Tie,
        }
    }
}

/// Which polynomial is larger for `p` close to 0 and close to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EndpointComparison {
    pub near_zero: Endpoint,
    pub near_one: Endpoint,
}

fn near_zero_order(a: &NVector, b: &NVector) -> Ordering {
    a.counts().cmp(b.counts())
}

fn near_one_order(a: &NVector, b: &NVector) -> Ordering {
    a.counts().iter().rev().cmp(b.counts().iter().rev())
}

/// Compares state counts from the bottom (near `p = 0`) and from the top
/// (near `p = 1`); the first differing entry decides each side.
pub fn endpoint_compare(a: &NVector, b: &NVector) -> Result<EndpointComparison> {
    if (a.n(), a.m()) != (b.n(), b.m()) {
        return Err(Error::ShapeMismatch(a.n(), a.m(), b.n(), b.m()));
    }
    Ok(EndpointComparison {
        near_zero: Endpoint::from_ordering(near_zero_order(a, b)),
        near_one: Endpoint::from_ordering(near_one_order(a, b)),
    })
}

/// `N_i(a) >= N_i(b)` for every `i`, which implies `a >= b` on `[0, 1]`.
fn counts_dominate(a: &NVector, b: &NVector) -> bool {
    a.counts().iter().zip(b.counts()).all(|(x, y)| x >= y)
}

const SAMPLE_DENOM: i128 = 32;

/// `q^m f(k/q)` for `k = 1..q`, exact in `i128`; `None` on overflow.
fn sample_values(nv: &NVector) -> Option<Vec<i128>> {
    let m = nv.m() as u32;
    (1..SAMPLE_DENOM)
        .map(|k| {
            nv.iter().try_fold(0i128, |acc, (i, c)| {
                let term = c
                    .to_i128()?
                    .checked_mul(k.checked_pow(i as u32)?)?
                    .checked_mul((SAMPLE_DENOM - k).checked_pow(m - i as u32)?)?;
                acc.checked_add(term)
            })
        })
        .collect()
}

/// One distinct split polynomial and the first instance (by key) realising it.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub key: CanonicalKey,
    pub graph: Multigraph,
    pub terminals: TerminalPair,
    pub nvector: NVector,
    pub polynomial: IntPolynomial,
}

impl Candidate {
    pub fn new(graph: Multigraph, terminals: TerminalPair, nvector: NVector) -> Self {
        Candidate {
            key: canonical_key(&graph, Some(terminals)),
            polynomial: from_nvector(&nvector),
            graph,
            terminals,
            nvector,
        }
    }

    pub fn to_json(&self) -> Value {
        let graph = serde_json::to_value(GraphFile::from_graph(&self.graph, Some(self.terminals)))
            .expect("graph objects always serialize");
        json!({
            "key": self.key.to_hex(),
            "graph": graph,
            "polynomial": self.polynomial.to_string(),
            "counts": self.nvector.counts().iter().map(BigInt::to_string).collect::<Vec<_>>(),
        })
    }
}

/// `beater` is strictly larger than `candidate` at `at`.
#[derive(Clone, Debug)]
pub struct Refutation {
    pub candidate: Candidate,
    pub beater: Candidate,
    pub at: Rational,
}

impl Refutation {
    pub fn to_json(&self) -> Value {
        json!({
            "candidate": self.candidate.key.to_hex(),
            "beater": self.beater.key.to_hex(),
            "p": self.at.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct OptimalityReport {
    pub n: usize,
    pub m: usize,
    pub mode: GraphMode,
    pub exists: bool,
    /// An optimal instance when one exists.
    pub witness: Option<Candidate>,
    /// One refutation per maximal candidate when no optimum exists.
    pub refutations: Vec<Refutation>,
    /// Graph-and-terminal instances examined.
    pub instances: usize,
    /// Distinct split polynomials among them.
    pub distinct_polynomials: usize,
}

impl OptimalityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "mode": self.mode.to_string(),
            "exists": self.exists,
            "witness": self.witness.as_ref().map(Candidate::to_json),
            "refutations": self.refutations.iter().map(Refutation::to_json).collect::<Vec<_>>(),
            "instances": self.instances,
            "distinct_polynomials": self.distinct_polynomials,
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    /// Use every terminal pair instead of one per automorphism orbit.
    pub all_pairs: bool,
    pub engine: Engine,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl SearchConfig {
    /// Settings for grid searches: bipartition counting, orbit reduction.
    pub fn fast() -> Self {
        SearchConfig { engine: Engine::Partition, ..Default::default() }
    }
}

fn instances_of(g: &Multigraph, cfg: &SearchConfig) -> Result<Vec<Candidate>> {
    let pairs = if cfg.all_pairs { all_terminal_pairs(g) } else { enumerate_terminal_classes(g) };
    if cfg.engine == Engine::Partition && g.m() < 120 {
        // one subset table serves every terminal pair of the graph
        let table = SubsetCounts::<i128>::new(g)?;
        let lo = g.n() - 2;
        return pairs
            .into_iter()
            .map(|tp| {
                let counts = table.split_counts(tp);
                let nv = NVector::new(g.n(), g.m(), (lo..=g.m()).map(|i| BigInt::from(counts.coeff(i))).collect())?;
                Ok(Candidate::new(g.clone(), tp, nv))
            })
            .collect();
    }
    pairs
        .into_iter()
        .map(|tp| Ok(Candidate::new(g.clone(), tp, split_rel(g, tp, cfg.engine)?.nvector)))
        .collect()
}

fn with_pool<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::SearchCeiling { n: 0, m: 0, reason: e.to_string() })?;
            Ok(pool.install(job))
        }
    }
}

/// Decides whether an optimal connected `(n, m)`-graph exists.
pub fn find_optimal(n: usize, m: usize, mode: GraphMode, cfg: &SearchConfig) -> Result<OptimalityReport> {
    if n < 2 {
        return Err(Error::SearchCeiling { n, m, reason: "terminals need n >= 2".into() });
    }
    let graphs: Vec<Multigraph> = enumerate_graphs(n, m, mode)?.collect();
    if graphs.is_empty() {
        return Err(Error::SearchCeiling { n, m, reason: format!("no connected {mode} graph has these parameters") });
    }
    with_pool(cfg.workers, || {
        let per_graph = graphs.par_iter().map(|g| instances_of(g, cfg)).collect::<Result<Vec<_>>>()?;
        Ok(decide(n, m, mode, per_graph.into_iter().flatten()))
    })?
}

/// Decides optimality among the given instances. The result does not depend
/// on the order in which instances arrive.
pub fn decide(n: usize, m: usize, mode: GraphMode, instances: impl IntoIterator<Item = Candidate>) -> OptimalityReport {
    let mut by_poly: HashMap<NVector, Candidate> = HashMap::new();
    let mut count = 0;
    for c in instances {
        count += 1;
        match by_poly.get_mut(&c.nvector) {
            Some(best) if best.key <= c.key => {}
            Some(best) => *best = c,
            None => {
                by_poly.insert(c.nvector.clone(), c);
            }
        }
    }
    let mut cands: Vec<Candidate> = by_poly.into_values().collect();
    cands.sort_by(|a, b| a.key.cmp(&b.key));
    let mut report = OptimalityReport {
        n,
        m,
        mode,
        exists: false,
        witness: None,
        refutations: Vec::new(),
        instances: count,
        distinct_polynomials: cands.len(),
    };
    if cands.is_empty() {
        return report;
    }

    let best_near = |order: fn(&NVector, &NVector) -> Ordering| {
        (0..cands.len()).max_by(|&i, &j| order(&cands[i].nvector, &cands[j].nvector)).expect("nonempty")
    };
    let top0 = best_near(near_zero_order);
    let top1 = best_near(near_one_order);

    // the only possible optimum is the near-0 leader
    let beats_top: Option<(usize, Rational)> = if top0 != top1 {
        let at = dominates(&cands[top1].polynomial, &cands[top0].polynomial)
            .first_wins_at()
            .cloned()
            .expect("near-1 leader is larger near 1");
        Some((top1, at))
    } else {
        let leader = &cands[top0];
        cands
            .par_iter()
            .enumerate()
            .filter(|&(i, _)| i != top0)
            .filter_map(|(i, c)| {
                if counts_dominate(&leader.nvector, &c.nvector) {
                    return None;
                }
                dominates(&leader.polynomial, &c.polynomial).second_wins_at().map(|at| (i, at.clone()))
            })
            .min_by_key(|(i, _)| *i)
    };

    let Some((top_beater, top_at)) = beats_top else {
        report.exists = true;
        report.witness = Some(cands[top0].clone());
        return report;
    };

    let maximal = maximal_indices(&cands);
    report.refutations = maximal
        .into_iter()
        .map(|i| {
            let (beater, at) = if i == top0 {
                (top_beater, top_at.clone())
            } else {
                let at = dominates(&cands[top0].polynomial, &cands[i].polynomial)
                    .first_wins_at()
                    .cloned()
                    .expect("near-0 leader beats every other polynomial near 0");
                (top0, at)
            };
            Refutation { candidate: cands[i].clone(), beater: cands[beater].clone(), at }
        })
        .collect();
    report
}

/// Indices of candidates that no other candidate dominates, in order.
fn maximal_indices(cands: &[Candidate]) -> Vec<usize> {
    let samples: Vec<Option<Vec<i128>>> = cands.par_iter().map(|c| sample_values(&c.nvector)).collect();
    let samples_allow = |h: usize, f: usize| match (&samples[h], &samples[f]) {
        (Some(a), Some(b)) => a.iter().zip(b).all(|(x, y)| x >= y),
        _ => true,
    };
    (0..cands.len())
        .into_par_iter()
        .filter(|&f| {
            !(0..cands.len()).any(|h| {
                h != f
                    && near_zero_order(&cands[h].nvector, &cands[f].nvector) == Ordering::Greater
                    && near_one_order(&cands[h].nvector, &cands[f].nvector) != Ordering::Less
                    && samples_allow(h, f)
                    && (counts_dominate(&cands[h].nvector, &cands[f].nvector)
                        || dominates(&cands[h].polynomial, &cands[f].polynomial).first_at_least())
            })
        })
        .collect()
}

/// Existence of an optimal graph as stated for multigraphs and, where
/// known, for simple graphs; `None` where no claim is made.
pub fn predicted_exists(n: usize, m: usize, mode: GraphMode) -> Option<bool> {
    if m + 1 < n {
        return None;
    }
    match mode {
        GraphMode::Multi => Some(n <= 3 || m + 1 == n || (n, m) == (4, 4)),
        GraphMode::Simple => {
            let pairs = n * (n - 1) / 2;
            if m > pairs {
                return None;
            }
            match n {
                0..=5 => Some(true),
                6 => Some(m != 6 && m != 8),
                7 => Some(m == 6 || (14..=21).contains(&m)),
                _ if m + 1 == n || m == pairs || m + 1 == pairs => Some(true),
                _ => None,
            }
        }
    }
}

/// One cell of a verification grid.
#[derive(Clone, Debug)]
pub struct GridRow {
    pub predicted: Option<bool>,
    pub report: OptimalityReport,
}

impl GridRow {
    pub fn agrees(&self) -> bool {
        self.predicted.is_none_or(|p| p == self.report.exists)
    }
}

/// `(n, m)` cells with `lo <= n <= hi` and `n - 1 <= m <= m_of(n)`, with
/// simple-mode cells capped at `n(n-1)/2`.
pub fn grid_cells(mode: GraphMode, ns: std::ops::RangeInclusive<usize>, m_of: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    ns.flat_map(|n| {
        let cap = match mode {
            GraphMode::Simple => m_of(n).min(n * (n - 1) / 2),
            GraphMode::Multi => m_of(n),
        };
        (n - 1..=cap).map(move |m| (n, m))
    })
    .collect()
}

/// Runs the search over `cells` and pairs each result with the stated truth value.
pub fn verify_theorems(mode: GraphMode, cells: &[(usize, usize)], cfg: &SearchConfig) -> Result<Vec<GridRow>> {
    cells
        .iter()
        .map(|&(n, m)| {
            Ok(GridRow { predicted: predicted_exists(n, m, mode), report: find_optimal(n, m, mode, cfg)? })
        })
        .collect()
}
