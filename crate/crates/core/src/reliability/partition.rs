//! Counting by vertex bipartitions.
//!
//! `C(S)` is the generating polynomial (in `x`, marking edges) of connected
//! spanning subgraphs of the subgraph induced by `S`. Every edge set that
//! leaves exactly two components `A ∋ s` and `V \ A ∋ t` is a connected
//! spanning subgraph of each side, so `N(x) = sum_A C(A) C(V \ A)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, TerminalPair};
use crate::poly::NVector;
use crate::scalar::Scalar;
use crate::Polynomial;

/// Most vertices the subset tables will be built for.
pub const MAX_PARTITION_VERTICES: usize = 16;

/// Connected spanning subgraph counts for every vertex subset.
pub struct SubsetCounts<T> {
    n: usize,
    m: usize,
    conn: Vec<Polynomial<T>>,
}

impl<T: Scalar> SubsetCounts<T> {
    pub fn new(g: &Multigraph) -> Result<Self> {
        let n = g.n();
        if n > MAX_PARTITION_VERTICES {
            return Err(Error::SearchCeiling {
                n,
                m: g.m(),
                reason: format!("bipartition tables need n <= {MAX_PARTITION_VERTICES}"),
            });
        }
        let mat = g.matrix();
        let full = 1usize << n;
        let mut inside = vec![0usize; full];
        for mask in 1..full {
            let v = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            inside[mask] = inside[rest] + (0..n).filter(|&u| rest >> u & 1 == 1).map(|u| mat[v][u]).sum::<usize>();
        }
        let one_plus_x = Polynomial::new(vec![T::one(), T::one()]);
        let mut binom = vec![Polynomial::one()];
        for k in 1..=g.m() {
            let next = &binom[k - 1] * &one_plus_x;
            binom.push(next);
        }
        let mut conn = vec![Polynomial::zero(); full];
        for mask in 1..full {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            let mut c = binom[inside[mask]].clone();
            // subsets T of S containing the lowest vertex, T != S
            let mut sub = rest;
            while sub != 0 {
                sub = (sub - 1) & rest;
                let part = low | sub;
                c = &c - &(&conn[part] * &binom[inside[mask ^ part]]);
            }
            conn[mask] = c;
        }
        Ok(SubsetCounts { n, m: g.m(), conn })
    }

    /// Connected spanning subgraph counts of the whole graph.
    pub fn connected(&self) -> &Polynomial<T> {
        &self.conn[(1 << self.n) - 1]
    }

    /// Counts of edge sets splitting the graph into an `s` side and a `t` side.
    pub fn split_counts(&self, tp: TerminalPair) -> Polynomial<T> {
        let full = (1usize << self.n) - 1;
        let (s, t) = (1usize << tp.s(), 1usize << tp.t());
        let free = full ^ s ^ t;
        let mut total = Polynomial::zero();
        let mut sub = free;
        loop {
            let side = s | sub;
            total = &total + &(&self.conn[side] * &self.conn[full ^ side]);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        total
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Machine-width count polynomial to exact integers.
pub fn widen<T: Scalar + ToPrimitive>(f: &Polynomial<T>) -> Polynomial<BigInt>
where
    BigInt: From<T>,
{
    f.map(|c| BigInt::from(c.clone()))
}

/// Split counts of `g`, computed in `i128` when the edge count allows it.
pub fn split_nvector(g: &Multigraph, tp: TerminalPair) -> Result<NVector> {
    tp.check(g)?;
    let counts = if g.m() < 120 {
        widen(&SubsetCounts::<i128>::new(g)?.split_counts(tp))
    } else {
        SubsetCounts::<BigInt>::new(g)?.split_counts(tp)
    };
    let lo = g.n() - 2;
    debug_assert!(counts.valuation().is_none_or(|v| v >= lo));
    NVector::new(g.n(), g.m(), (lo..=g.m()).map(|i| counts.coeff(i)).collect())
}

/// Connected spanning subgraph counts `A_i` of `g`, indexed by edge count.
pub fn connected_counts(g: &Multigraph) -> Result<Vec<BigInt>> {
    let counts = if g.m() < 120 {
        widen(SubsetCounts::<i128>::new(g)?.connected())
    } else {
        SubsetCounts::<BigInt>::new(g)?.connected().clone()
    };
    Ok((0..=g.m()).map(|i| counts.coeff(i)).collect())
}
