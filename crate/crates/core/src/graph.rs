//! Loopless multigraphs with parallel edges stored as multiplicities.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair `(u, v)` with `u < v`.
pub type Pair = (usize, usize);

fn ordered(u: usize, v: usize) -> Pair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable loopless multigraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multigraph {
    n: usize,
    /// Sorted by pair, no duplicates, multiplicities >= 1.
    bundles: Vec<(Pair, usize)>,
    m: usize,
}

impl Multigraph {
    /// Builds a multigraph from an edge list; repeated pairs become parallel edges.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_bundles(n, edges.iter().map(|&e| (e, 1)))
    }

    /// Builds from `(pair, multiplicity)` entries; zero multiplicities are dropped
    /// and repeated pairs are merged.
    pub fn from_bundles(n: usize, bundles: impl IntoIterator<Item = (Pair, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut list = Vec::new();
        for ((u, v), w) in bundles {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if w > 0 {
                list.push((ordered(u, v), w));
            }
        }
        Ok(Self::normalized(n, list))
    }

    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_bundles(n, [])
    }

    fn normalized(n: usize, mut list: Vec<(Pair, usize)>) -> Self {
        list.sort_unstable();
        let mut bundles: Vec<(Pair, usize)> = Vec::with_capacity(list.len());
        for (pair, w) in list {
            match bundles.last_mut() {
                Some((last, lw)) if *last == pair => *lw += w,
                _ => bundles.push((pair, w)),
            }
        }
        let m = bundles.iter().map(|(_, w)| w).sum();
        Multigraph { n, bundles, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Distinct endpoint pairs with their multiplicities, sorted by pair.
    pub fn bundles(&self) -> &[(Pair, usize)] {
        &self.bundles
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = ordered(u, v);
        self.bundles
            .binary_search_by(|(p, _)| p.cmp(&key))
            .map_or(0, |i| self.bundles[i].1)
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.bundles
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, w)| w)
            .sum()
    }

    /// True when no pair carries more than one edge.
    pub fn is_simple(&self) -> bool {
        self.bundles.iter().all(|&(_, w)| w == 1)
    }

    /// Every physical edge, parallels repeated, sorted.
    pub fn edge_slots(&self) -> Vec<Pair> {
        self.bundles
            .iter()
            .flat_map(|&(pair, w)| std::iter::repeat_n(pair, w))
            .collect()
    }

    /// Neighbor lists with multiplicities.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &((u, v), w) in &self.bundles {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        adj
    }

    /// Multiplicity matrix.
    pub fn matrix(&self) -> Vec<Vec<usize>> {
        let mut mat = vec![vec![0; self.n]; self.n];
        for &((u, v), w) in &self.bundles {
            mat[u][v] = w;
            mat[v][u] = w;
        }
        mat
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut block = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        block.push(y);
                        queue.push_back(y);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    /// Removes one edge of the bundle on `(u, v)`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.delete_edges(u, v, 1)
    }

    /// Removes `count` parallel edges between `u` and `v`.
    pub fn delete_edges(&self, u: usize, v: usize, count: usize) -> Result<Self> {
        let key = ordered(u, v);
        let idx = self
            .bundles
            .binary_search_by(|(p, _)| p.cmp(&key))
            .map_err(|_| Error::MissingEdge(u, v))?;
        if self.bundles[idx].1 < count {
            return Err(Error::MissingEdge(u, v));
        }
        let mut bundles = self.bundles.clone();
        bundles[idx].1 -= count;
        if bundles[idx].1 == 0 {
            bundles.remove(idx);
        }
        Ok(Multigraph { n: self.n, bundles, m: self.m - count })
    }

    /// Adds one edge between `u` and `v`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut list = self.bundles.clone();
        list.push(((u, v), 1));
        Self::from_bundles(self.n, list)
    }

    /// Vertex map used by [`Multigraph::contract_edge`]: `u` and `v` both land on
    /// `min(u, v)`, labels above `max(u, v)` shift down by one.
    pub fn contraction_map(n: usize, u: usize, v: usize) -> Vec<usize> {
        let (lo, hi) = ordered(u, v);
        (0..n)
            .map(|x| match x {
                x if x == hi => lo,
                x if x > hi => x - 1,
                x => x,
            })
            .collect()
    }

    /// Merges `u` and `v`; their parallel edges vanish, other edges are re-attached.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        if self.multiplicity(u, v) == 0 {
            return Err(Error::MissingEdge(u, v));
        }
        let map = Self::contraction_map(self.n, u, v);
        let list = self
            .bundles
            .iter()
            .filter(|&&(pair, _)| pair != ordered(u, v))
            .map(|&((a, b), w)| (ordered(map[a], map[b]), w))
            .collect();
        Ok(Self::normalized(self.n - 1, list))
    }

    /// Relabels vertex `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let list = self
            .bundles
            .iter()
            .map(|&((a, b), w)| (ordered(perm[a], perm[b]), w))
            .collect();
        Self::normalized(self.n, list)
    }

    /// Subgraph induced by `vertices` (sorted), relabelled to `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in vertices.iter().enumerate() {
            index[x] = i;
        }
        let list = self
            .bundles
            .iter()
            .filter(|&&((a, b), _)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&((a, b), w)| (ordered(index[a], index[b]), w))
            .collect();
        Self::normalized(vertices.len().max(1), list)
    }

    /// Minimum number of edges whose removal separates `s` from `t`,
    /// via augmenting paths with unit capacity per parallel edge.
    pub fn min_st_cut(&self, tp: TerminalPair) -> Result<usize> {
        tp.check(self)?;
        let (s, t) = (tp.s(), tp.t());
        if self.shortest_path_length(tp).is_err() {
            return Err(Error::TerminalsDisconnected { s, t });
        }
        // residual[x][y]: remaining capacity of the directed arc x -> y
        let mut residual = self.matrix();
        let mut flow = 0;
        loop {
            let mut parent = vec![usize::MAX; self.n];
            parent[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for y in 0..self.n {
                    if residual[x][y] > 0 && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[t] == usize::MAX {
                return Ok(flow);
            }
            let mut y = t;
            while y != s {
                let x = parent[y];
                residual[x][y] -= 1;
                residual[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// Number of edges on a shortest `s`–`t` path.
    pub fn shortest_path_length(&self, tp: TerminalPair) -> Result<usize> {
        tp.check(self)?;
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        dist[tp.s()] = 0;
        let mut queue = VecDeque::from([tp.s()]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        match dist[tp.t()] {
            usize::MAX => Err(Error::TerminalsDisconnected { s: tp.s(), t: tp.t() }),
            d => Ok(d),
        }
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", GraphFile::from_graph(self, None).to_json())
    }
}

/// Two distinct designated vertices. Split reliability is symmetric in them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TerminalPair {
    s: usize,
    t: usize,
}

impl TerminalPair {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s == t {
            return Err(Error::SameTerminals(s));
        }
        Ok(TerminalPair { s, t })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn swapped(&self) -> Self {
        TerminalPair { s: self.t, t: self.s }
    }

    /// Same pair with `s < t`.
    pub fn normalized(&self) -> Self {
        let (s, t) = ordered(self.s, self.t);
        TerminalPair { s, t }
    }

    /// Checks both terminals are vertices of `g`.
    pub fn check(&self, g: &Multigraph) -> Result<()> {
        for x in [self.s, self.t] {
            if x >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
            }
        }
        Ok(())
    }
}

impl fmt::Display for TerminalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// On-disk graph object: `{"n":4,"edges":[[0,1],[0,1],[1,2]],"s":0,"t":2}`.
///
/// Edges are written sorted by `(min, max)` with parallels adjacent, so the
/// serialization of a given labelled graph is unique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

impl GraphFile {
    pub fn from_graph(g: &Multigraph, tp: Option<TerminalPair>) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edge_slots().into_iter().map(|(u, v)| [u, v]).collect(),
            s: tp.map(|tp| tp.s()),
            t: tp.map(|tp| tp.t()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph objects always serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::GraphSyntax(e.to_string()))
    }

    /// Validated graph plus terminals when both `s` and `t` are present.
    pub fn to_graph(&self) -> Result<(Multigraph, Option<TerminalPair>)> {
        let edges: Vec<Pair> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Multigraph::build(self.n, &edges)?;
        let tp = match (self.s, self.t) {
            (Some(s), Some(t)) => {
                let tp = TerminalPair::new(s, t)?;
                tp.check(&g)?;
                Some(tp)
            }
            (None, None) => None,
            _ => return Err(Error::GraphSyntax("`s` and `t` must be given together".into())),
        };
        Ok((g, tp))
    }
}
