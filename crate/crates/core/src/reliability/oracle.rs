//! Brute force over every subset of edge slots.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, TerminalPair};
use crate::poly::state_polynomial;
use crate::IntPolynomial;

/// Largest number of edge slots the subset oracle will enumerate.
pub const DEFAULT_SLOT_CEILING: usize = 22;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Counts operational edge subsets by size. `accept` sees the union-find
/// state and the number of components left by the subset.
fn count_states(
    g: &Multigraph,
    ceiling: usize,
    mut accept: impl FnMut(&mut dyn FnMut(usize) -> usize, usize) -> bool,
) -> Result<Vec<u64>> {
    let slots = g.edge_slots();
    if slots.len() > ceiling {
        return Err(Error::SlotCeiling { slots: slots.len(), ceiling });
    }
    let mut counts = vec![0u64; slots.len() + 1];
    let mut dsu = Dsu::new(g.n());
    for mask in 0u64..(1u64 << slots.len()) {
        dsu.parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut comps = g.n();
        for (k, &(u, v)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 && dsu.union(u, v) {
                comps -= 1;
            }
        }
        if accept(&mut |x| dsu.find(x), comps) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

fn polynomial(m: usize, counts: &[u64]) -> IntPolynomial {
    let big: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
    state_polynomial(m, big.iter().enumerate())
}

/// Probability that every vertex of `k` lies in one component.
pub fn k_terminal_rel(g: &Multigraph, k: &[usize], ceiling: usize) -> Result<IntPolynomial> {
    for &x in k {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    let counts = count_states(g, ceiling, |find, _| {
        let mut roots = k.iter().map(|&x| find(x));
        match roots.next() {
            Some(r) => roots.all(|x| x == r),
            None => true,
        }
    })?;
    Ok(polynomial(g.m(), &counts))
}

/// Probability that `s` and `t` are joined by a path of working edges.
pub fn two_terminal_rel(g: &Multigraph, tp: TerminalPair, ceiling: usize) -> Result<IntPolynomial> {
    tp.check(g)?;
    k_terminal_rel(g, &[tp.s(), tp.t()], ceiling)
}

/// Probability that the working edges form a connected spanning subgraph.
pub fn all_terminal_oracle(g: &Multigraph, ceiling: usize) -> Result<IntPolynomial> {
    let all: Vec<usize> = (0..g.n()).collect();
    k_terminal_rel(g, &all, ceiling)
}

/// Split reliability by direct enumeration.
pub fn split_oracle(g: &Multigraph, tp: TerminalPair, ceiling: usize) -> Result<IntPolynomial> {
    tp.check(g)?;
    let (s, t) = (tp.s(), tp.t());
    let counts = count_states(g, ceiling, |find, comps| comps == 2 && find(s) != find(t))?;
    Ok(polynomial(g.m(), &counts))
}
