//! Connected `(n, m)`-graphs up to isomorphism.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Pair, TerminalPair};

pub use crate::canon::{all_terminal_pairs, terminal_classes as enumerate_terminal_classes};

/// Largest vertex count the enumerator accepts.
pub const MAX_ENUM_VERTICES: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GraphMode {
    Simple,
    Multi,
}

impl fmt::Display for GraphMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphMode::Simple => "simple",
            GraphMode::Multi => "multi",
        })
    }
}

impl FromStr for GraphMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "simple" => Ok(GraphMode::Simple),
            "multi" => Ok(GraphMode::Multi),
            _ => Err(Error::InvalidMode(s.to_string())),
        }
    }
}

/// Canonically labelled representative plus its key.
fn canonical_rep(g: &Multigraph) -> (CanonicalKey, Multigraph) {
    let form = canonical_form(g, None);
    let rep = form.apply(g);
    (form.key, rep)
}

/// All simple graphs on `n` vertices with `e` edges, one per class, for
/// every `e <= max_edges`. Built by adding one edge at a time.
pub fn simple_levels(n: usize, max_edges: usize) -> Result<Vec<BTreeMap<CanonicalKey, Multigraph>>> {
    let mut levels = Vec::with_capacity(max_edges + 1);
    let (key, rep) = canonical_rep(&Multigraph::empty(n)?);
    levels.push(BTreeMap::from([(key, rep)]));
    let pairs = n * n.saturating_sub(1) / 2;
    for e in 1..=max_edges.min(pairs) {
        let mut next = BTreeMap::new();
        for g in levels[e - 1].values() {
            for u in 0..n {
                for v in u + 1..n {
                    if g.multiplicity(u, v) == 0 {
                        let (key, rep) = canonical_rep(&g.add_edge(u, v)?);
                        next.entry(key).or_insert(rep);
                    }
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Connected simple graphs on `n` vertices, indexed by edge count.
fn connected_supports(n: usize, max_edges: usize) -> Result<Vec<Vec<Multigraph>>> {
    Ok(simple_levels(n, max_edges)?
        .into_iter()
        .map(|level| level.into_values().filter(Multigraph::is_connected).collect())
        .collect())
}

/// Streams one representative of each isomorphism class of connected
/// `(n, m)`-graphs. Yields nothing when `m < n - 1` (or, in simple mode,
/// when `m` exceeds `n(n-1)/2`).
pub struct GraphClassIterator {
    n: usize,
    m: usize,
    mode: GraphMode,
    supports: VecDeque<Multigraph>,
    seen: HashSet<CanonicalKey>,
    pending: VecDeque<Multigraph>,
}

impl GraphClassIterator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    /// Queues every distribution of the extra multiplicity over the support.
    fn expand(&mut self, support: &Multigraph) {
        let pairs: Vec<Pair> = support.bundles().iter().map(|&(p, _)| p).collect();
        let extra = self.m - support.m();
        let mut found = BTreeMap::new();
        let mut extra_on = vec![0usize; pairs.len()];
        distribute(extra, 0, &mut extra_on, &mut |dist| {
            let bundles = pairs.iter().zip(dist).map(|(&p, &x)| (p, x + 1));
            let g = Multigraph::from_bundles(self.n, bundles).expect("support pairs are valid");
            let (key, rep) = canonical_rep(&g);
            if !self.seen.contains(&key) {
                found.entry(key).or_insert(rep);
            }
        });
        for (key, rep) in found {
            self.seen.insert(key);
            self.pending.push_back(rep);
        }
    }
}

/// Calls `visit` with every way of writing `left` as an ordered sum over the
/// slots from `at` onwards.
fn distribute(left: usize, at: usize, slots: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if at + 1 >= slots.len() {
        if let Some(last) = slots.last_mut() {
            *last = left;
        }
        if left == 0 || !slots.is_empty() {
            visit(slots);
        }
        return;
    }
    for x in (0..=left).rev() {
        slots[at] = x;
        distribute(left - x, at + 1, slots, visit);
    }
}

impl Iterator for GraphClassIterator {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        loop {
            if let Some(g) = self.pending.pop_front() {
                return Some(g);
            }
            let support = self.supports.pop_front()?;
            match self.mode {
                GraphMode::Simple => return Some(support),
                GraphMode::Multi => self.expand(&support),
            }
        }
    }
}

/// Connected `(n, m)`-graphs up to isomorphism, in canonical labelling.
pub fn enumerate_graphs(n: usize, m: usize, mode: GraphMode) -> Result<GraphClassIterator> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::SearchCeiling { n, m, reason: format!("enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}") });
    }
    let max_pairs = n * (n - 1) / 2;
    let supports: VecDeque<Multigraph> = if m + 1 < n || (mode == GraphMode::Simple && m > max_pairs) {
        VecDeque::new()
    } else {
        let levels = connected_supports(n, m.min(max_pairs))?;
        match mode {
            GraphMode::Simple => levels.into_iter().nth(m).unwrap_or_default().into(),
            GraphMode::Multi => levels.into_iter().skip(n - 1).flatten().collect(),
        }
    };
    Ok(GraphClassIterator { n, m, mode, supports, seen: HashSet::new(), pending: VecDeque::new() })
}

/// Every `(graph, terminal class)` pair of the connected `(n, m)`-graphs.
pub fn enumerate_instances(n: usize, m: usize, mode: GraphMode, all_pairs: bool) -> Result<Vec<(Multigraph, TerminalPair)>> {
    let mut out = Vec::new();
    for g in enumerate_graphs(n, m, mode)? {
        let pairs = if all_pairs { all_terminal_pairs(&g) } else { enumerate_terminal_classes(&g) };
        out.extend(pairs.into_iter().map(|tp| (g.clone(), tp)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::brute::brute_canonical;
    use crate::canon::canonical_key;
    use std::collections::BTreeSet;

    fn count(n: usize, m: usize, mode: GraphMode) -> usize {
        enumerate_graphs(n, m, mode).unwrap().count()
    }

    /// Connected labelled multigraphs grouped by brute-force canonical form.
    fn brute_count(n: usize, m: usize, mode: GraphMode) -> usize {
        let pairs: Vec<Pair> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let cap = if mode == GraphMode::Simple { 1 } else { m };
        let mut classes = BTreeSet::new();
        let mut mult = vec![0usize; pairs.len()];
        loop {
            if mult.iter().sum::<usize>() == m {
                let g = Multigraph::from_bundles(n, pairs.iter().copied().zip(mult.iter().copied())).unwrap();
                if g.is_connected() {
                    classes.insert(brute_canonical(&g, None));
                }
            }
            // odometer over 0..=cap per pair
            let mut i = 0;
            while i < mult.len() && mult[i] == cap {
                mult[i] = 0;
                i += 1;
            }
            if i == mult.len() {
                break;
            }
            mult[i] += 1;
        }
        classes.len()
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(count(3, 3, GraphMode::Multi), 2);
        assert_eq!(count(4, 4, GraphMode::Simple), 2);
        assert_eq!(count(4, 4, GraphMode::Multi), 5);
        assert_eq!(count(4, 2, GraphMode::Multi), 0);
        assert_eq!(count(4, 7, GraphMode::Simple), 0);
        assert_eq!(count(1, 0, GraphMode::Simple), 1);
        assert_eq!(count(2, 3, GraphMode::Multi), 1);
    }

    #[test]
    fn simple_counts_match_brute_force() {
        for n in 2..=5 {
            for m in 0..=n * (n - 1) / 2 {
                assert_eq!(count(n, m, GraphMode::Simple), brute_count(n, m, GraphMode::Simple), "(n, m) = ({n}, {m})");
            }
        }
    }

    #[test]
    fn multi_counts_match_brute_force() {
        for n in 2..=4 {
            for m in n - 1..=6 {
                assert_eq!(count(n, m, GraphMode::Multi), brute_count(n, m, GraphMode::Multi), "(n, m) = ({n}, {m})");
            }
        }
    }

    #[test]
    fn yields_are_connected_canonical_and_distinct() {
        for mode in [GraphMode::Simple, GraphMode::Multi] {
            let mut keys = HashSet::new();
            for g in enumerate_graphs(5, 6, mode).unwrap() {
                assert!(g.is_connected());
                assert_eq!((g.n(), g.m()), (5, 6));
                let (key, rep) = canonical_rep(&g);
                assert_eq!(rep, g);
                assert_eq!(key, canonical_key(&g, None));
                assert!(keys.insert(key));
            }
        }
    }

    #[test]
    fn terminal_class_counts() {
        let p4 = Multigraph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(enumerate_terminal_classes(&p4).len(), 4);
        let c4 = Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(enumerate_terminal_classes(&c4).len(), 2);
        let k2 = Multigraph::from_bundles(2, [((0, 1), 3)]).unwrap();
        assert_eq!(enumerate_terminal_classes(&k2).len(), 1);
        assert_eq!(enumerate_instances(4, 4, GraphMode::Simple, true).unwrap().len(), 12);
    }

    #[test]
    fn mode_names() {
        assert_eq!("Simple".parse::<GraphMode>().unwrap(), GraphMode::Simple);
        assert_eq!(GraphMode::Multi.to_string(), "multi");
        assert!("both".parse::<GraphMode>().is_err());
    }
}
