//! Deletion–contraction with memoisation on canonical forms.

use std::num::NonZeroUsize;

use lru::LruCache;

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::Result;
use crate::graph::{Multigraph, TerminalPair};
use crate::IntPolynomial;

const DEFAULT_CAPACITY: usize = 1 << 16;
// Below this size a recursion is cheaper than computing a canonical key.
const MEMO_MIN_VERTICES: usize = 4;

/// Factoring engine with LRU caches for split and all-terminal reliability.
pub struct FactoringEngine {
    split_memo: LruCache<CanonicalKey, IntPolynomial>,
    all_memo: LruCache<CanonicalKey, IntPolynomial>,
}

impl Default for FactoringEngine {
    fn default() -> Self {
        Self::with_capacity(DEFAULT_CAPACITY)
    }
}

impl FactoringEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).unwrap();
        FactoringEngine { split_memo: LruCache::new(cap), all_memo: LruCache::new(cap) }
    }

    /// Split reliability of `g` with terminals `tp`.
    pub fn split(&mut self, g: &Multigraph, tp: TerminalPair) -> Result<IntPolynomial> {
        tp.check(g)?;
        Ok(self.split_rec(g, tp.s(), tp.t()))
    }

    /// All-terminal reliability of `g`.
    pub fn all_terminal(&mut self, g: &Multigraph) -> IntPolynomial {
        self.all_rec(g)
    }

    fn split_rec(&mut self, g: &Multigraph, s: usize, t: usize) -> IntPolynomial {
        let comps = g.components();
        if comps.len() > 1 {
            if comps.len() == 2 && comps[0].contains(&s) != comps[0].contains(&t) {
                let a = self.all_rec(&g.induced(&comps[0]));
                let b = self.all_rec(&g.induced(&comps[1]));
                return &a * &b;
            }
            return IntPolynomial::zero();
        }
        if g.n() == 2 {
            return IntPolynomial::q().pow(g.m());
        }
        let key = (g.n() >= MEMO_MIN_VERTICES)
            .then(|| canonical_key(g, Some(TerminalPair::new(s, t).expect("distinct terminals"))));
        if let Some(hit) = key.as_ref().and_then(|k| self.split_memo.get(k)) {
            return hit.clone();
        }
        let (u, v) = heaviest_pair(g);
        let deleted = g.delete_edge(u, v).expect("edge present");
        let f_del = self.split_rec(&deleted, s, t);
        let f_con = if (u, v) == (s.min(t), s.max(t)) {
            // contracting an s-t edge merges the terminals
            IntPolynomial::zero()
        } else {
            let map = Multigraph::contraction_map(g.n(), u, v);
            let con = g.contract_edge(u, v).expect("edge present");
            self.split_rec(&con, map[s], map[t])
        };
        let out = &f_con.shift(1) + &(&IntPolynomial::q() * &f_del);
        if let Some(k) = key {
            self.split_memo.put(k, out.clone());
        }
        out
    }

    fn all_rec(&mut self, g: &Multigraph) -> IntPolynomial {
        if g.n() == 1 {
            return IntPolynomial::one();
        }
        if !g.is_connected() {
            return IntPolynomial::zero();
        }
        if g.n() == 2 {
            return &IntPolynomial::one() - &IntPolynomial::q().pow(g.m());
        }
        let key = (g.n() >= MEMO_MIN_VERTICES).then(|| canonical_key(g, None));
        if let Some(hit) = key.as_ref().and_then(|k| self.all_memo.get(k)) {
            return hit.clone();
        }
        let (u, v) = heaviest_pair(g);
        let w = g.multiplicity(u, v);
        let fail = IntPolynomial::q().pow(w);
        let any_up = &IntPolynomial::one() - &fail;
        let con = g.contract_edge(u, v).expect("edge present");
        let mut out = &any_up * &self.all_rec(&con);
        let without = g.delete_edges(u, v, w).expect("bundle present");
        if without.is_connected() {
            out = &out + &(&fail * &self.all_rec(&without));
        }
        if let Some(k) = key {
            self.all_memo.put(k, out.clone());
        }
        out
    }
}

/// First vertex pair carrying the largest bundle.
fn heaviest_pair(g: &Multigraph) -> (usize, usize) {
    let mut best = g.bundles()[0];
    for &b in g.bundles() {
        if b.1 > best.1 {
            best = b;
        }
    }
    best.0
}
