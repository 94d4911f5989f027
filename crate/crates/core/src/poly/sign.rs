//! Exact sign classification on the open unit interval.
//!
//! Roots are located with Sturm sequences and bisection at rational points,
//! so every verdict and witness is checkable by plain evaluation.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::Polynomial;
use crate::scalar::OrderedField;
use crate::IntPolynomial;

/// Sign behaviour of a polynomial on `(0, 1)`.
///
/// Every witness lies strictly inside `(0, 1)` and evaluates to the strict
/// sign its variant claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalSign<F> {
    IdenticallyZero,
    PositiveOnOpen { witness: F },
    NegativeOnOpen { witness: F },
    /// `>= 0` everywhere with at least one interior zero; `witness` is positive.
    NonNegativeWithZeros { witness: F },
    /// `<= 0` everywhere with at least one interior zero; `witness` is negative.
    NonPositiveWithZeros { witness: F },
    Mixed { negative_at: F, positive_at: F },
}

impl<F> IntervalSign<F> {
    pub fn is_nonnegative(&self) -> bool {
        matches!(
            self,
            IntervalSign::IdenticallyZero
                | IntervalSign::PositiveOnOpen { .. }
                | IntervalSign::NonNegativeWithZeros { .. }
        )
    }

    pub fn is_nonpositive(&self) -> bool {
        matches!(
            self,
            IntervalSign::IdenticallyZero
                | IntervalSign::NegativeOnOpen { .. }
                | IntervalSign::NonPositiveWithZeros { .. }
        )
    }

    /// A point where the value is strictly positive, if any.
    pub fn positive_point(&self) -> Option<&F> {
        match self {
            IntervalSign::PositiveOnOpen { witness }
            | IntervalSign::NonNegativeWithZeros { witness } => Some(witness),
            IntervalSign::Mixed { positive_at, .. } => Some(positive_at),
            _ => None,
        }
    }

    /// A point where the value is strictly negative, if any.
    pub fn negative_point(&self) -> Option<&F> {
        match self {
            IntervalSign::NegativeOnOpen { witness }
            | IntervalSign::NonPositiveWithZeros { witness } => Some(witness),
            IntervalSign::Mixed { negative_at, .. } => Some(negative_at),
            _ => None,
        }
    }
}

/// Isolated root inside `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLocation<F> {
    Exact(F),
    /// Exactly one root in the open interval; neither endpoint is a root.
    Between(F, F),
}

impl<F: Clone> RootLocation<F> {
    fn lo(&self) -> F {
        match self {
            RootLocation::Exact(x) | RootLocation::Between(x, _) => x.clone(),
        }
    }

    fn hi(&self) -> F {
        match self {
            RootLocation::Exact(x) | RootLocation::Between(_, x) => x.clone(),
        }
    }
}

/// Standard Sturm chain `h, h', -rem(h, h'), ...`.
pub fn sturm_sequence<F: OrderedField>(h: &Polynomial<F>) -> Vec<Polynomial<F>> {
    let mut seq = Vec::new();
    if h.is_zero() {
        return seq;
    }
    seq.push(h.clone());
    let mut next = h.derivative();
    while !next.is_zero() {
        seq.push(next);
        let k = seq.len();
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1]);
        next = r.scale(&(F::zero() - F::one()));
    }
    seq
}

fn sign_variations<F: OrderedField>(seq: &[Polynomial<F>], x: &F) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for poly in seq {
        let v = poly.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Distinct roots of squarefree `h` in the open interval `(a, b)`.
fn roots_between<F: OrderedField>(h: &Polynomial<F>, seq: &[Polynomial<F>], a: &F, b: &F) -> usize {
    // V(a) - V(b) counts roots in (a, b]
    let half_open = sign_variations(seq, a) - sign_variations(seq, b);
    half_open - usize::from(h.eval(b).is_zero())
}

/// Number of distinct roots of `f` in `(0, 1)`.
pub fn unit_root_count<F: OrderedField>(f: &Polynomial<F>) -> usize {
    if f.is_zero() {
        return 0;
    }
    let h = squarefree_part(f);
    let seq = sturm_sequence(&h);
    roots_between(&h, &seq, &F::zero(), &F::one())
}

/// Yun's algorithm: `f = c * prod_i a_i^i` with each `a_i` squarefree and
/// pairwise coprime. Returns `(a_i, i)` for the nonconstant factors.
pub fn squarefree_decomposition<F: OrderedField>(f: &Polynomial<F>) -> Vec<(Polynomial<F>, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_rem(&a0).0;
    let c = fp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn squarefree_part<F: OrderedField>(f: &Polynomial<F>) -> Polynomial<F> {
    let g = f.gcd(&f.derivative());
    f.div_rem(&g).0.monic()
}

/// Isolates the distinct roots of `f` in `(0, 1)`, sorted ascending, with
/// disjoint closures that also avoid `0` and `1`.
pub fn isolate_unit_roots<F: OrderedField>(f: &Polynomial<F>) -> Vec<RootLocation<F>> {
    if f.is_zero() {
        return Vec::new();
    }
    let h = squarefree_part(f);
    let seq = sturm_sequence(&h);
    let mut raw = Vec::new();
    let total = roots_between(&h, &seq, &F::zero(), &F::one());
    isolate(&h, &seq, F::zero(), F::one(), total, &mut raw);
    raw.into_iter().map(|loc| tighten(&h, &seq, loc)).collect()
}

fn isolate<F: OrderedField>(
    h: &Polynomial<F>,
    seq: &[Polynomial<F>],
    a: F,
    b: F,
    count: usize,
    out: &mut Vec<RootLocation<F>>,
) {
    match count {
        0 => {}
        1 => out.push(RootLocation::Between(a, b)),
        _ => {
            let mid = F::midpoint(&a, &b);
            let left = roots_between(h, seq, &a, &mid);
            if h.eval(&mid).is_zero() {
                isolate(h, seq, a, mid.clone(), left, out);
                out.push(RootLocation::Exact(mid.clone()));
                isolate(h, seq, mid, b, count - left - 1, out);
            } else {
                isolate(h, seq, a, mid.clone(), left, out);
                isolate(h, seq, mid, b, count - left, out);
            }
        }
    }
}

/// Bisects until both endpoints have moved strictly inward, so the interval
/// no longer touches a neighbouring root or the ends of `(0, 1)`.
fn tighten<F: OrderedField>(h: &Polynomial<F>, seq: &[Polynomial<F>], loc: RootLocation<F>) -> RootLocation<F> {
    let RootLocation::Between(mut a, mut b) = loc else {
        return loc;
    };
    let (mut moved_a, mut moved_b) = (false, false);
    while !(moved_a && moved_b) {
        let mid = F::midpoint(&a, &b);
        if h.eval(&mid).is_zero() {
            return RootLocation::Exact(mid);
        }
        if roots_between(h, seq, &a, &mid) == 1 {
            b = mid;
            moved_b = true;
        } else {
            a = mid;
            moved_a = true;
        }
    }
    RootLocation::Between(a, b)
}

/// Points strictly between consecutive isolated roots (including the gaps
/// next to `0` and `1`); none of them is a root.
fn gap_points<F: OrderedField>(roots: &[RootLocation<F>]) -> Vec<F> {
    let mut points = Vec::with_capacity(roots.len() + 1);
    let mut left = F::zero();
    for r in roots {
        points.push(F::midpoint(&left, &r.lo()));
        left = r.hi();
    }
    points.push(F::midpoint(&left, &F::one()));
    points
}

/// Classifies the sign of `f` on `(0, 1)` over an ordered field.
pub fn classify_unit_interval<F: OrderedField>(f: &Polynomial<F>) -> IntervalSign<F> {
    if f.is_zero() {
        return IntervalSign::IdenticallyZero;
    }
    let roots = isolate_unit_roots(f);
    if roots.is_empty() {
        // smallest k/(d+2) that is not a root
        let d = f.degree().unwrap_or(0);
        let denom = F::from_usize(d + 2).expect("degree fits scalar");
        let witness = (1..=d + 1)
            .map(|k| F::from_usize(k).expect("degree fits scalar") / denom.clone())
            .find(|x| !f.eval(x).is_zero())
            .expect("a polynomial of degree d has at most d roots");
        return if f.eval(&witness).is_positive() {
            IntervalSign::PositiveOnOpen { witness }
        } else {
            IntervalSign::NegativeOnOpen { witness }
        };
    }

    let odd_roots: usize = squarefree_decomposition(f)
        .into_iter()
        .filter(|(_, mult)| mult % 2 == 1)
        .map(|(factor, _)| unit_root_count(&factor))
        .sum();

    let gaps = gap_points(&roots);
    let positive_at = gaps.iter().find(|x| f.eval(x).is_positive()).cloned();
    let negative_at = gaps.iter().find(|x| f.eval(x).is_negative()).cloned();
    match (positive_at, negative_at) {
        (Some(p), Some(n)) => {
            debug_assert!(odd_roots > 0);
            IntervalSign::Mixed { negative_at: n, positive_at: p }
        }
        (Some(witness), None) => {
            debug_assert_eq!(odd_roots, 0);
            IntervalSign::NonNegativeWithZeros { witness }
        }
        (None, Some(witness)) => {
            debug_assert_eq!(odd_roots, 0);
            IntervalSign::NonPositiveWithZeros { witness }
        }
        (None, None) => unreachable!("gap points are never roots of a nonzero polynomial"),
    }
}

/// Exact classification of an integer polynomial on `(0, 1)`.
pub fn sign_on_unit_interval(f: &IntPolynomial) -> IntervalSign<BigRational> {
    classify_unit_interval(&f.to_field::<BigRational>())
}

/// Exact value of `f` at a rational point.
pub fn eval_rational(f: &IntPolynomial, x: &BigRational) -> BigRational {
    f.to_field::<BigRational>().eval(x)
}

/// `true` iff `x` is strictly inside `(0, 1)`.
pub fn in_open_unit(x: &BigRational) -> bool {
    x.is_positive() && *x < BigRational::one()
}
