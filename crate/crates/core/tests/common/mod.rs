#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use splitrel::{GraphMode, Multigraph, Rational, TerminalPair};

pub fn tp(s: usize, t: usize) -> TerminalPair {
    TerminalPair::new(s, t).unwrap()
}

pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// A=0, B=1, C=2, D=3.
pub fn g1() -> Multigraph {
    Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
}

pub fn path(n: usize) -> Multigraph {
    Multigraph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: usize) -> Multigraph {
    Multigraph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

/// Random loopless multigraph with exactly `m` edges; connected when asked.
pub fn random_multigraph(rng: &mut StdRng, n: usize, m: usize, connected: bool) -> Multigraph {
    loop {
        let mut edges = Vec::with_capacity(m);
        if connected {
            for v in 1..n {
                edges.push((rng.gen_range(0..v), v));
            }
        }
        while edges.len() < m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                edges.push((u, v));
            }
        }
        let g = Multigraph::build(n, &edges).unwrap();
        if !connected || g.is_connected() {
            return g;
        }
    }
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// Cycle lengths of the permutation induced on unordered vertex pairs.
fn pair_cycles(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        a * n + b
    };
    let mut seen = vec![false; n * n];
    let mut lens = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen[index(u, v)] {
                continue;
            }
            let (mut a, mut b, mut len) = (u, v, 0);
            while !seen[index(a, b)] {
                seen[index(a, b)] = true;
                len += 1;
                (a, b) = (perm[a], perm[b]);
            }
            lens.push(len);
        }
    }
    lens
}

/// Number of unlabelled graphs (connected or not) on `n` vertices with each
/// edge count `0..=max_m`, by Burnside's lemma over vertex permutations.
pub fn burnside_all(n: usize, max_m: usize, mode: GraphMode) -> Vec<BigInt> {
    let perms = permutations(n);
    let mut total = vec![BigInt::zero(); max_m + 1];
    for perm in &perms {
        // generating function of fixed edge multisets, truncated at max_m
        let mut gf = vec![BigInt::zero(); max_m + 1];
        gf[0] = BigInt::one();
        for len in pair_cycles(perm) {
            let mut next = vec![BigInt::zero(); max_m + 1];
            for (d, c) in gf.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = d;
                let mut copies = 0;
                while e <= max_m {
                    next[e] += c;
                    copies += 1;
                    if mode == GraphMode::Simple && copies == 2 {
                        break;
                    }
                    e += len;
                }
            }
            gf = next;
        }
        for (t, c) in total.iter_mut().zip(gf) {
            *t += c;
        }
    }
    let order = BigInt::from(perms.len());
    total.into_iter().map(|t| t / &order).collect()
}

/// Connected class counts `c[n][m]` for `n <= max_n`, `m <= max_m`, from the
/// Burnside totals by inverting the exponential (Euler) transform.
pub fn burnside_connected(max_n: usize, max_m: usize, mode: GraphMode) -> Vec<Vec<u64>> {
    let mut g = vec![vec![Rational::zero(); max_m + 1]; max_n + 1];
    g[0][0] = Rational::one();
    for (n, row) in g.iter_mut().enumerate().skip(1) {
        for (m, c) in burnside_all(n, max_m, mode).into_iter().enumerate() {
            row[m] = Rational::from_integer(c);
        }
    }
    // log of the bivariate series via n*g = sum_a a*L(a,.) * g(n-a,.)
    let mut log = vec![vec![Rational::zero(); max_m + 1]; max_n + 1];
    for n in 1..=max_n {
        for m in 0..=max_m {
            let mut acc = g[n][m].clone() * Rational::from_integer(n.into());
            for a in 1..n {
                for b in 0..=m {
                    acc -= log[a][b].clone() * Rational::from_integer(a.into()) * g[n - a][m - b].clone();
                }
            }
            log[n][m] = acc / Rational::from_integer(n.into());
        }
    }
    let mut conn = vec![vec![Rational::zero(); max_m + 1]; max_n + 1];
    for n in 1..=max_n {
        for m in 0..=max_m {
            let mut c = log[n][m].clone();
            for k in 2..=n {
                if n % k == 0 && m % k == 0 {
                    c -= conn[n / k][m / k].clone() / Rational::from_integer(k.into());
                }
            }
            conn[n][m] = c;
        }
    }
    conn.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| {
                    assert!(c.is_integer(), "non-integral class count");
                    c.to_integer().to_u64().unwrap()
                })
                .collect()
        })
        .collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Per-surviving-edge-count tallies of split states, by plain subset scan.
pub fn brute_split_counts(g: &Multigraph, s: usize, t: usize) -> Vec<u64> {
    brute_counts(g, |parent, n| {
        let roots = (0..n).filter(|&v| find(parent, v) == v).count();
        roots == 2 && find(parent, s) != find(parent, t)
    })
}

/// Per-surviving-edge-count tallies of connected spanning states.
pub fn brute_connected_counts(g: &Multigraph) -> Vec<u64> {
    brute_counts(g, |parent, n| (0..n).filter(|&v| find(parent, v) == v).count() == 1)
}

fn brute_counts(g: &Multigraph, accept: impl Fn(&mut [usize], usize) -> bool) -> Vec<u64> {
    let slots = g.edge_slots();
    let (n, m) = (g.n(), slots.len());
    let mut out = vec![0u64; m + 1];
    for mask in 0u32..(1u32 << m) {
        let mut parent: Vec<usize> = (0..n).collect();
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        if accept(&mut parent, n) {
            out[mask.count_ones() as usize] += 1;
        }
    }
    out
}

/// sum_i c_i p^i (1-p)^(m-i) as a polynomial in p.
pub fn counts_polynomial(counts: &[u64]) -> splitrel::IntPolynomial {
    let m = counts.len() - 1;
    let big: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
    splitrel::poly::state_polynomial(m, big.iter().enumerate())
}
