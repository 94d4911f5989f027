//! Canonical forms of small multigraphs, optionally with a marked terminal pair.
//!
//! Canonical labelling is individualization–refinement: the vertex partition
//! is refined by multiplicity-weighted neighbour counts until stable, then
//! each vertex of the first smallest non-singleton cell is individualized in
//! turn. Every discrete leaf yields a labelling; the key is the smallest
//! encoding over all leaves. Refinement is label-invariant, so isomorphic
//! inputs produce identical leaf sets and identical keys.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Multigraph, TerminalPair};

/// Byte string identifying an isomorphism class.
///
/// With terminals, isomorphisms must carry `{s, t}` onto `{s', t'}` as a set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical key plus the labelling that produced it.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `labelling[v]` is the canonical label of vertex `v`.
    pub labelling: Vec<usize>,
}

impl CanonicalForm {
    /// The graph relabelled canonically; equal for isomorphic inputs.
    pub fn apply(&self, g: &Multigraph) -> Multigraph {
        g.relabel(&self.labelling)
    }
}

pub fn canonical_key(g: &Multigraph, tp: Option<TerminalPair>) -> CanonicalKey {
    canonical_form(g, tp).key
}

pub fn canonical_form(g: &Multigraph, tp: Option<TerminalPair>) -> CanonicalForm {
    let mat = g.matrix();
    let n = g.n();
    let initial: Vec<Vec<usize>> = match tp {
        None => vec![(0..n).collect()],
        Some(tp) => {
            let (s, t) = (tp.s(), tp.t());
            let terminals = {
                let mut v = vec![s, t];
                v.sort_unstable();
                v
            };
            let rest: Vec<usize> = (0..n).filter(|&x| x != s && x != t).collect();
            if rest.is_empty() {
                vec![terminals]
            } else {
                vec![terminals, rest]
            }
        }
    };
    let mut search = Search { mat: &mat, n, marked: tp.is_some(), best: None };
    search.explore(initial);
    let (bytes, labelling) = search.best.expect("search visits at least one leaf");
    CanonicalForm { key: CanonicalKey(bytes), labelling }
}

struct Search<'a> {
    mat: &'a [Vec<usize>],
    n: usize,
    marked: bool,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn explore(&mut self, partition: Vec<Vec<usize>>) {
        let partition = refine(self.mat, partition);
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ci) = target else {
            self.leaf(&partition);
            return;
        };
        for &v in &partition[ci] {
            let mut next = Vec::with_capacity(partition.len() + 1);
            next.extend_from_slice(&partition[..ci]);
            next.push(vec![v]);
            next.push(partition[ci].iter().copied().filter(|&x| x != v).collect());
            next.extend_from_slice(&partition[ci + 1..]);
            self.explore(next);
        }
    }

    fn leaf(&mut self, partition: &[Vec<usize>]) {
        let mut labelling = vec![0; self.n];
        for (label, cell) in partition.iter().enumerate() {
            labelling[cell[0]] = label;
        }
        let order: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        let bytes = encode(self.mat, &order, self.marked);
        if self.best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            self.best = Some((bytes, labelling));
        }
    }
}

/// Encodes the graph under the vertex order `order` (canonical label -> vertex).
fn encode(mat: &[Vec<usize>], order: &[usize], marked: bool) -> Vec<u8> {
    let n = order.len();
    let mut bytes = Vec::with_capacity(3 + n * n);
    bytes.push(u8::from(marked));
    bytes.extend_from_slice(&(n as u16).to_be_bytes());
    for i in 0..n {
        for j in i + 1..n {
            let w = mat[order[i]][order[j]];
            bytes.extend_from_slice(&(w as u16).to_be_bytes());
        }
    }
    bytes
}

/// Refines an ordered partition until every cell is equitable: vertices in a
/// cell see the same total multiplicity into every cell. Split cells are
/// ordered by their (invariant) signatures.
fn refine(mat: &[Vec<usize>], mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let n_cells = partition.len();
        let mut cell_of = vec![0; mat.len()];
        for (ci, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let mut next = Vec::with_capacity(n_cells);
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig = vec![0; n_cells];
                for (u, &w) in mat[v].iter().enumerate() {
                    sig[cell_of[u]] += w;
                }
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == n_cells {
            return next;
        }
        partition = next;
    }
}

/// One representative per orbit of the automorphism group on unordered
/// vertex pairs, sorted by `(s, t)`.
pub fn terminal_classes(g: &Multigraph) -> Vec<TerminalPair> {
    let mut seen: BTreeMap<CanonicalKey, TerminalPair> = BTreeMap::new();
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            let tp = TerminalPair::new(s, t).expect("s < t");
            seen.entry(canonical_key(g, Some(tp))).or_insert(tp);
        }
    }
    let mut reps: Vec<TerminalPair> = seen.into_values().collect();
    reps.sort();
    reps
}

/// Every unordered pair `(s, t)` with `s < t`.
pub fn all_terminal_pairs(g: &Multigraph) -> Vec<TerminalPair> {
    (0..g.n())
        .flat_map(|s| (s + 1..g.n()).map(move |t| TerminalPair::new(s, t).expect("s < t")))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::brute::*;
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::build(n, edges).unwrap()
    }

    fn tp(s: usize, t: usize) -> TerminalPair {
        TerminalPair::new(s, t).unwrap()
    }

    #[test]
    fn path_reversal_keeps_key() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let rev = p4.relabel(&[3, 2, 1, 0]);
        assert_eq!(canonical_key(&p4, Some(tp(0, 3))), canonical_key(&rev, Some(tp(3, 0))));
        assert_ne!(canonical_key(&p4, Some(tp(0, 3))), canonical_key(&p4, Some(tp(0, 2))));
    }

    #[test]
    fn cycle_terminal_distance_distinguishes() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_ne!(canonical_key(&c4, Some(tp(0, 1))), canonical_key(&c4, Some(tp(0, 2))));
        assert_eq!(canonical_key(&c4, Some(tp(0, 1))), canonical_key(&c4, Some(tp(2, 3))));
    }

    #[test]
    fn bundle_placement_on_either_end_is_equivalent() {
        // bundle on the first vs the last path edge, terminals at the ends
        let first = g(4, &[(0, 1), (0, 1), (0, 1), (1, 2), (2, 3)]);
        let last = g(4, &[(0, 1), (1, 2), (2, 3), (2, 3), (2, 3)]);
        assert_eq!(canonical_key(&first, Some(tp(0, 3))), canonical_key(&last, Some(tp(0, 3))));
        let middle = g(4, &[(0, 1), (1, 2), (1, 2), (1, 2), (2, 3)]);
        assert_ne!(canonical_key(&first, Some(tp(0, 3))), canonical_key(&middle, Some(tp(0, 3))));
    }

    #[test]
    fn delete_then_re_add_restores_key() {
        let h = g(5, &[(0, 1), (1, 2), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]);
        for &((u, v), _) in h.bundles() {
            let back = h.delete_edge(u, v).unwrap().add_edge(v, u).unwrap();
            assert_eq!(canonical_key(&back, None), canonical_key(&h, None));
        }
    }

    #[test]
    fn canonical_relabelling_is_a_fixed_point() {
        let h = g(5, &[(0, 1), (1, 2), (1, 2), (2, 3), (3, 4), (1, 3)]);
        let form = canonical_form(&h, None);
        let canon = form.apply(&h);
        assert_eq!(canonical_key(&canon, None), form.key);
        assert_eq!(canonical_form(&canon, None).apply(&canon), canon);
    }

    #[test]
    fn orbits_of_small_graphs() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(terminal_classes(&p4).len(), 4);
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(terminal_classes(&c4).len(), 2);
        let k2 = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(terminal_classes(&k2), vec![tp(0, 1)]);
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(terminal_classes(&k4).len(), 1);
    }

    #[test]
    fn orbit_count_matches_brute_force_on_petersen_like_graph() {
        // 5-cycle plus a chord and a doubled edge
        let h = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (3, 4)]);
        let mut brute_orbits: Vec<Vec<(usize, usize)>> = Vec::new();
        let perms: Vec<Vec<usize>> = permutations(5).into_iter().filter(|p| h.relabel(p) == h).collect();
        for s in 0..5 {
            for t in s + 1..5 {
                let orbit: std::collections::BTreeSet<(usize, usize)> = perms
                    .iter()
                    .map(|p| (p[s].min(p[t]), p[s].max(p[t])))
                    .collect();
                let orbit: Vec<_> = orbit.into_iter().collect();
                if !brute_orbits.contains(&orbit) {
                    brute_orbits.push(orbit);
                }
            }
        }
        assert_eq!(terminal_classes(&h).len(), brute_orbits.len());
    }

    fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
        (2..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |raw| {
                let edges: Vec<(usize, usize)> = raw.into_iter().filter(|(a, b)| a != b).collect();
                Multigraph::build(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn key_is_invariant_under_relabelling(h in arb_multigraph(6, 9), seed in any::<u64>(), s in 0usize..6, t in 0usize..6) {
            let n = h.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut x = seed;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            let moved = h.relabel(&perm);
            prop_assert_eq!(canonical_key(&h, None), canonical_key(&moved, None));
            let (s, t) = (s % n, t % n);
            if s != t {
                let a = canonical_key(&h, Some(tp(s, t)));
                let b = canonical_key(&moved, Some(tp(perm[t], perm[s])));
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn key_equality_matches_brute_force_isomorphism(a in arb_multigraph(6, 8), b in arb_multigraph(6, 8), pick in any::<bool>()) {
            // compare either two random graphs or a graph against a relabelled copy
            let b = if pick && a.n() > 1 { a.relabel(&(0..a.n()).rev().collect::<Vec<_>>()) } else { b };
            let same_key = canonical_key(&a, None) == canonical_key(&b, None);
            prop_assert_eq!(same_key, isomorphic(&a, None, &b, None));
            if a.n() == b.n() && a.n() >= 2 {
                let ka = canonical_key(&a, Some(tp(0, 1)));
                let kb = canonical_key(&b, Some(tp(a.n() - 1, 0)));
                prop_assert_eq!(ka == kb, isomorphic(&a, Some(tp(0, 1)), &b, Some(tp(a.n() - 1, 0))));
            }
        }
    }
}
