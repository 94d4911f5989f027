mod common;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use splitrel::enumeration::enumerate_instances;
use splitrel::optimality::{
    decide, endpoint_compare, find_optimal, predicted_exists, Candidate, Endpoint, SearchConfig,
};
use splitrel::poly::eval_rational;
use splitrel::{dominates, split_rel, DominanceVerdict, Engine, FamilySpec, GraphMode, IntPolynomial, Rational};

fn candidates(n: usize, m: usize, mode: GraphMode, all_pairs: bool) -> Vec<Candidate> {
    enumerate_instances(n, m, mode, all_pairs)
        .unwrap()
        .into_iter()
        .map(|(g, tp)| {
            let nv = split_rel(&g, tp, Engine::Partition).unwrap().nvector;
            Candidate::new(g, tp, nv)
        })
        .collect()
}

fn distinct_polys(n: usize, m: usize, mode: GraphMode) -> Vec<IntPolynomial> {
    let mut out: Vec<IntPolynomial> = Vec::new();
    for c in candidates(n, m, mode, false) {
        if !out.contains(&c.polynomial) {
            out.push(c.polynomial);
        }
    }
    out
}

fn check_points(f: &IntPolynomial, g: &IntPolynomial, v: &DominanceVerdict) {
    let zero = Rational::zero();
    let one = Rational::one();
    for at in [v.first_wins_at(), v.second_wins_at()].into_iter().flatten() {
        assert!(*at > zero && *at < one);
    }
    if let Some(at) = v.first_wins_at() {
        assert!(eval_rational(f, at) > eval_rational(g, at));
    }
    if let Some(at) = v.second_wins_at() {
        assert!(eval_rational(f, at) < eval_rational(g, at));
    }
}

fn grid_sign(f: &IntPolynomial, g: &IntPolynomial) -> (bool, bool) {
    let (mut above, mut below) = (false, false);
    for k in 1..48 {
        let x = common::rat(k, 48);
        let d = eval_rational(f, &x) - eval_rational(g, &x);
        above |= d > Rational::zero();
        below |= d < Rational::zero();
    }
    (above, below)
}

#[test]
fn dominance_is_a_partial_order_with_checkable_witnesses() {
    for (n, m, mode) in [(4, 5, GraphMode::Multi), (5, 6, GraphMode::Multi), (5, 7, GraphMode::Simple)] {
        let polys = distinct_polys(n, m, mode);
        let verdicts: Vec<Vec<DominanceVerdict>> =
            polys.iter().map(|f| polys.iter().map(|g| dominates(f, g)).collect()).collect();
        for i in 0..polys.len() {
            assert_eq!(verdicts[i][i], DominanceVerdict::Equal);
            for j in 0..polys.len() {
                let v = &verdicts[i][j];
                check_points(&polys[i], &polys[j], v);
                // sampled sign changes can never contradict the verdict
                let (above, below) = grid_sign(&polys[i], &polys[j]);
                assert!(!(below && v.first_at_least()));
                assert!(!(above && verdicts[j][i].first_at_least()));
                if i != j {
                    assert!(!(v.first_at_least() && verdicts[j][i].first_at_least()), "antisymmetry");
                }
                for k in 0..polys.len() {
                    if v.first_at_least() && verdicts[j][k].first_at_least() {
                        assert!(verdicts[i][k].first_at_least(), "transitivity");
                    }
                }
            }
        }
    }
}

#[test]
fn endpoint_comparison_never_contradicts_dominance() {
    for (n, m, mode) in [(4, 6, GraphMode::Multi), (5, 6, GraphMode::Multi), (6, 7, GraphMode::Simple)] {
        let mut cands = candidates(n, m, mode, false);
        cands.sort_by(|a, b| a.nvector.counts().cmp(b.nvector.counts()));
        cands.dedup_by(|a, b| a.nvector == b.nvector);
        for a in &cands {
            for b in &cands {
                let e = endpoint_compare(&a.nvector, &b.nvector).unwrap();
                let v = dominates(&a.polynomial, &b.polynomial);
                if e.near_zero == Endpoint::SecondWins || e.near_one == Endpoint::SecondWins {
                    assert!(!v.first_at_least());
                }
                if e.near_zero == Endpoint::FirstWins || e.near_one == Endpoint::FirstWins {
                    assert!(!matches!(v, DominanceVerdict::Equal | DominanceVerdict::DominatedBy { .. }));
                }
            }
        }
    }
}

#[test]
fn verdict_ignores_orbit_reduction_and_order() {
    let mut rng = common::seeded(42);
    for (n, m, mode) in [(4, 4, GraphMode::Multi), (4, 6, GraphMode::Multi), (5, 6, GraphMode::Multi), (6, 8, GraphMode::Simple), (6, 9, GraphMode::Simple)] {
        let base = find_optimal(n, m, mode, &SearchConfig::fast()).unwrap();
        let every = find_optimal(n, m, mode, &SearchConfig { all_pairs: true, ..SearchConfig::fast() }).unwrap();
        let slow = find_optimal(n, m, mode, &SearchConfig { engine: Engine::Factoring, workers: Some(2), ..Default::default() }).unwrap();
        for r in [&every, &slow] {
            assert_eq!(r.exists, base.exists);
            assert_eq!(r.distinct_polynomials, base.distinct_polynomials);
        }
        assert!(every.instances >= base.instances);
        let mut cands = candidates(n, m, mode, false);
        cands.shuffle(&mut rng);
        let shuffled = decide(n, m, mode, cands);
        assert_eq!(shuffled.exists, base.exists);
        assert_eq!(shuffled.witness.as_ref().map(|w| w.key.clone()), base.witness.as_ref().map(|w| w.key.clone()));
        let keys = |r: &splitrel::OptimalityReport| {
            r.refutations.iter().map(|x| (x.candidate.key.clone(), x.beater.key.clone(), x.at.clone())).collect::<Vec<_>>()
        };
        assert_eq!(keys(&shuffled), keys(&base));
    }
}

#[test]
fn multi_witness_is_the_bundled_path() {
    for n in 2..=5 {
        for m in n - 1..=n + 2 {
            let report = find_optimal(n, m, GraphMode::Multi, &SearchConfig::fast()).unwrap();
            if !report.exists {
                continue;
            }
            let spec = if m + 1 == n { FamilySpec::Path { n, k: n - 1 } } else { FamilySpec::Gnm { n, m } };
            let (g, tp) = spec.construct().unwrap();
            let expected = split_rel(&g, tp, Engine::Oracle).unwrap().polynomial;
            assert_eq!(report.witness.unwrap().polynomial, expected, "({n}, {m})");
        }
    }
}

#[test]
fn refutations_verify_exactly_and_cover_each_verdict() {
    for (n, m, mode) in [(4, 5, GraphMode::Multi), (5, 5, GraphMode::Multi), (6, 6, GraphMode::Simple), (6, 8, GraphMode::Simple)] {
        let report = find_optimal(n, m, mode, &SearchConfig::fast()).unwrap();
        assert_eq!(Some(report.exists), predicted_exists(n, m, mode));
        assert!(!report.exists);
        assert!(report.witness.is_none());
        assert!(!report.refutations.is_empty());
        for r in &report.refutations {
            assert!(r.at > Rational::zero() && r.at < Rational::one());
            assert!(eval_rational(&r.beater.polynomial, &r.at) > eval_rational(&r.candidate.polynomial, &r.at));
        }
        // every distinct polynomial is beaten somewhere by some other one
        let polys = distinct_polys(n, m, mode);
        for f in &polys {
            assert!(polys.iter().any(|g| dominates(f, g).second_wins_at().is_some()));
        }
    }
}

#[test]
fn witness_dominates_every_candidate() {
    for (n, m, mode) in [(4, 4, GraphMode::Multi), (3, 5, GraphMode::Multi), (6, 7, GraphMode::Simple), (5, 8, GraphMode::Simple)] {
        let report = find_optimal(n, m, mode, &SearchConfig::fast()).unwrap();
        assert!(report.exists);
        let w = report.witness.unwrap().polynomial;
        for g in distinct_polys(n, m, mode) {
            assert!(dominates(&w, &g).first_at_least());
            let (_, below) = grid_sign(&w, &g);
            assert!(!below);
        }
    }
}
