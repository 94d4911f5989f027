//! Reliability polynomials: K-terminal, all-terminal and split.

mod factoring;
mod oracle;
mod partition;

pub use factoring::FactoringEngine;
pub use oracle::{all_terminal_oracle, k_terminal_rel, split_oracle, two_terminal_rel, DEFAULT_SLOT_CEILING};
pub use partition::{connected_counts, split_nvector, SubsetCounts, MAX_PARTITION_VERTICES};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, TerminalPair};
use crate::poly::{from_nvector, state_polynomial, to_nvector, NVector};
use crate::IntPolynomial;

/// Split reliability with its state counts and the minimum `s`–`t` cut.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitResult {
    pub polynomial: IntPolynomial,
    pub nvector: NVector,
    /// Size of a minimum `s`–`t` edge cut; zero when the terminals are
    /// already disconnected.
    pub cutset_size: usize,
}

impl SplitResult {
    pub fn from_polynomial(g: &Multigraph, tp: TerminalPair, polynomial: IntPolynomial) -> Result<Self> {
        let nvector = to_nvector(&polynomial, g.n(), g.m())?;
        Ok(SplitResult { polynomial, nvector, cutset_size: cut_or_zero(g, tp)? })
    }

    pub fn from_nvector(g: &Multigraph, tp: TerminalPair, nvector: NVector) -> Result<Self> {
        Ok(SplitResult { polynomial: from_nvector(&nvector), nvector, cutset_size: cut_or_zero(g, tp)? })
    }
}

fn cut_or_zero(g: &Multigraph, tp: TerminalPair) -> Result<usize> {
    match g.min_st_cut(tp) {
        Err(Error::TerminalsDisconnected { .. }) => Ok(0),
        other => other,
    }
}

/// Algorithm used to compute split reliability.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Engine {
    /// Enumerates all edge-slot subsets.
    Oracle,
    /// Memoised deletion–contraction.
    #[default]
    Factoring,
    /// Connected-subgraph counts over vertex bipartitions.
    Partition,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Oracle, Engine::Factoring, Engine::Partition];
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Oracle => "oracle",
            Engine::Factoring => "factoring",
            Engine::Partition => "partition",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Engine::Oracle),
            "factoring" => Ok(Engine::Factoring),
            "partition" => Ok(Engine::Partition),
            _ => Err(Error::InvalidEngine(s.to_string())),
        }
    }
}

/// Split reliability by subset enumeration.
pub fn split_rel_oracle(g: &Multigraph, tp: TerminalPair) -> Result<SplitResult> {
    split_rel_oracle_with(g, tp, DEFAULT_SLOT_CEILING)
}

pub fn split_rel_oracle_with(g: &Multigraph, tp: TerminalPair, ceiling: usize) -> Result<SplitResult> {
    let f = split_oracle(g, tp, ceiling)?;
    SplitResult::from_polynomial(g, tp, f)
}

/// Split reliability by deletion–contraction with a fresh cache.
pub fn split_rel_factoring(g: &Multigraph, tp: TerminalPair) -> Result<IntPolynomial> {
    FactoringEngine::new().split(g, tp)
}

/// Split reliability with the chosen engine.
pub fn split_rel(g: &Multigraph, tp: TerminalPair, engine: Engine) -> Result<SplitResult> {
    match engine {
        Engine::Oracle => split_rel_oracle(g, tp),
        Engine::Factoring => SplitResult::from_polynomial(g, tp, split_rel_factoring(g, tp)?),
        Engine::Partition => SplitResult::from_nvector(g, tp, split_nvector(g, tp)?),
    }
}

/// All-terminal reliability by deletion–contraction.
pub fn all_terminal_rel(g: &Multigraph) -> IntPolynomial {
    FactoringEngine::new().all_terminal(g)
}

/// All-terminal reliability from connected spanning subgraph counts.
pub fn all_terminal_partition(g: &Multigraph) -> Result<IntPolynomial> {
    let counts = connected_counts(g)?;
    Ok(state_polynomial(g.m(), counts.iter().enumerate()))
}

/// Checks `sRel(G + t~u; s, t) = (1-p) A(G) + p sRel(G; s, u)` for a new
/// pendant vertex `t` hung on `u`.
pub fn pendant_identity_check(g: &Multigraph, s: usize, u: usize) -> Result<bool> {
    let su = TerminalPair::new(s, u)?;
    su.check(g)?;
    let t = g.n();
    let mut bundles = g.bundles().to_vec();
    bundles.push(((u, t), 1));
    let extended = Multigraph::from_bundles(g.n() + 1, bundles)?;
    let mut engine = FactoringEngine::new();
    let lhs = engine.split(&extended, TerminalPair::new(s, t)?)?;
    let rhs = &(&IntPolynomial::q() * &engine.all_terminal(g)) + &engine.split(g, su)?.shift(1);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    // A=0, B=1, C=2, D=3: the 4-cycle A-B-C-D with chord A-C
    fn g1() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    fn tp(s: usize, t: usize) -> TerminalPair {
        TerminalPair::new(s, t).unwrap()
    }

    fn path(n: usize) -> Multigraph {
        Multigraph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        Multigraph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn split_all_engines(g: &Multigraph, t: TerminalPair) -> IntPolynomial {
        let results: Vec<_> = Engine::ALL.iter().map(|&e| split_rel(g, t, e).unwrap()).collect();
        assert_eq!(results[0], results[1]);
        assert_eq!(results[0], results[2]);
        results[0].polynomial.clone()
    }

    #[test]
    fn g1_reliabilities() {
        let g = g1();
        assert_eq!(all_terminal_oracle(&g, 22).unwrap(), int(&[0, 0, 0, 8, -11, 4]));
        assert_eq!(all_terminal_rel(&g), int(&[0, 0, 0, 8, -11, 4]));
        assert_eq!(all_terminal_partition(&g).unwrap(), int(&[0, 0, 0, 8, -11, 4]));
        assert_eq!(two_terminal_rel(&g, tp(3, 1), 22).unwrap(), int(&[0, 0, 2, 2, -5, 2]));

        let db = split_rel_oracle(&g, tp(3, 1)).unwrap();
        assert_eq!(db.nvector.to_string(), "[8,2]");
        assert_eq!(db.cutset_size, 2);
        assert_eq!(db.polynomial, int(&[0, 0, 8, -22, 20, -6]));
        assert_eq!(split_all_engines(&g, tp(3, 1)), db.polynomial);

        let ac = split_rel_oracle(&g, tp(0, 2)).unwrap();
        assert_eq!(ac.nvector.to_string(), "[4]");
        assert_eq!(ac.cutset_size, 3);
        split_all_engines(&g, tp(0, 2));
    }

    #[test]
    fn tree_and_cycle_closed_forms() {
        let q = IntPolynomial::q();
        for n in 2..8 {
            let p_n2 = IntPolynomial::p().pow(n - 2);
            let tree = path(n);
            assert_eq!(all_terminal_rel(&tree), IntPolynomial::p().pow(n - 1));
            for k in 1..n {
                let expect = (&p_n2 * &q).scale(&BigInt::from(k));
                assert_eq!(split_all_engines(&tree, tp(0, k)), expect);
            }
            if n >= 3 {
                let c = cycle(n);
                let expect_all = &IntPolynomial::p().pow(n) + &(&IntPolynomial::p().pow(n - 1) * &q).scale(&BigInt::from(n));
                assert_eq!(all_terminal_rel(&c), expect_all);
                for k in 1..n {
                    let expect = (&p_n2 * &q.pow(2)).scale(&BigInt::from(k * (n - k)));
                    assert_eq!(split_all_engines(&c, tp(0, k)), expect);
                }
            }
        }
    }

    #[test]
    fn two_vertex_bundle_only_splits_when_all_fail() {
        for m in 1..6 {
            let g = Multigraph::from_bundles(2, [((0, 1), m)]).unwrap();
            assert_eq!(split_all_engines(&g, tp(0, 1)), IntPolynomial::q().pow(m));
        }
    }

    #[test]
    fn disconnected_inputs_use_the_product_rule() {
        // triangle 0-1-2 and edge 3-4
        let g = Multigraph::build(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let expect = &all_terminal_rel(&g.induced(&[0, 1, 2])) * &IntPolynomial::p();
        assert_eq!(split_rel_factoring(&g, tp(0, 3)).unwrap(), expect);
        assert_eq!(split_oracle(&g, tp(0, 3), 22).unwrap(), expect);
        assert!(split_rel_factoring(&g, tp(0, 1)).unwrap().is_zero());
        let three = Multigraph::build(3, &[]).unwrap();
        assert!(split_rel_factoring(&three, tp(0, 1)).unwrap().is_zero());
        assert_eq!(split_rel(&g, tp(0, 3), Engine::Oracle).unwrap().cutset_size, 0);
    }

    #[test]
    fn slot_ceiling_is_enforced() {
        let g = Multigraph::from_bundles(3, [((0, 1), 12), ((1, 2), 12)]).unwrap();
        assert!(matches!(split_rel_oracle(&g, tp(0, 2)), Err(Error::SlotCeiling { slots: 24, ceiling: 22 })));
        assert!(split_rel(&g, tp(0, 2), Engine::Factoring).is_ok());
    }

    #[test]
    fn pendant_identity_examples() {
        let k2 = Multigraph::build(2, &[(0, 1)]).unwrap();
        assert!(pendant_identity_check(&k2, 0, 1).unwrap());
        assert!(pendant_identity_check(&g1(), 3, 1).unwrap());
        assert!(pendant_identity_check(&cycle(4), 0, 1).unwrap());
        assert!(pendant_identity_check(&g1(), 1, 1).is_err());
    }

    #[test]
    fn engine_names_round_trip() {
        for e in Engine::ALL {
            assert_eq!(e.to_string().parse::<Engine>().unwrap(), e);
        }
        assert!("bdd".parse::<Engine>().is_err());
    }

    fn random_multigraph() -> impl Strategy<Value = (Multigraph, usize, usize)> {
        (2usize..7).prop_flat_map(|n| {
            let pairs = proptest::collection::vec((0..n, 0..n), 1..13);
            (Just(n), pairs, 0..n, 0..n)
        })
        .prop_filter_map("loops and equal terminals", |(n, pairs, s, t)| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            (s != t).then(|| (Multigraph::build(n, &edges).ok(), s, t)).and_then(|(g, s, t)| g.map(|g| (g, s, t)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn engines_agree((g, s, t) in random_multigraph()) {
            let fac = split_rel_factoring(&g, tp(s, t)).unwrap();
            prop_assert_eq!(&split_oracle(&g, tp(s, t), 22).unwrap(), &fac);
            if g.is_connected() {
                prop_assert_eq!(&split_nvector(&g, tp(s, t)).unwrap(), &to_nvector(&fac, g.n(), g.m()).unwrap());
            }
            prop_assert_eq!(&split_rel_factoring(&g, tp(t, s)).unwrap(), &fac);
            prop_assert_eq!(all_terminal_rel(&g), all_terminal_oracle(&g, 22).unwrap());
        }

        #[test]
        fn support_bounds((g, s, t) in random_multigraph()) {
            prop_assume!(g.is_connected());
            let r = split_rel(&g, tp(s, t), Engine::Factoring).unwrap();
            prop_assert!(r.nvector.top_index().is_none_or(|top| top <= g.m() - r.cutset_size));
            let zero = crate::Rational::from_integer(0.into());
            let one = crate::Rational::from_integer(1.into());
            let at0 = crate::poly::eval_rational(&r.polynomial, &zero);
            if g.n() >= 3 {
                prop_assert_eq!(at0, zero.clone());
                prop_assert_eq!(crate::poly::eval_rational(&r.polynomial, &one), zero);
            } else {
                prop_assert_eq!(at0, one);
            }
        }

        #[test]
        fn pendant_identity_random((g, s, u) in random_multigraph()) {
            prop_assume!(g.is_connected());
            prop_assert!(pendant_identity_check(&g, s, u).unwrap());
        }
    }
}
