//! Named graph families with their closed forms and stated state counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Pair, TerminalPair};
use crate::IntPolynomial;

/// A member of one of the named families, with its parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilySpec {
    /// Path on `n` vertices, terminals `0` and `k`.
    Path { n: usize, k: usize },
    /// Cycle on `n` vertices, terminals `0` and `k`.
    Cycle { n: usize, k: usize },
    /// Two vertices joined by `m` parallel edges.
    Bundle { m: usize },
    /// `s`–`t` path on `n` vertices, extra edges bundled on the edge at `s`.
    Gnm { n: usize, m: usize },
    /// `s`–`t` path on `n - 1` vertices and a vertex hung on the path by a bundle.
    HPendantBundle { n: usize, m: usize },
    /// `s`–`t` path with bundles of 2 and `m - n + 1` on its first two edges.
    HTwoBundles { n: usize, m: usize },
    /// Triangle `abc` with `s` pendant at `b` and `t` pendant at `c`.
    X55,
    /// 4-cycle `abcd` with `s` pendant at `a` and `t` pendant at `c`.
    Y66,
    /// `s`–`t` path of length `n - 3` and a triangle through `t`.
    PathTriangle { n: usize },
    /// Bundles `s–v = a`, `v–t = m - a`.
    B3 { m: usize, a: usize },
    /// Bundles `s–t = a`, `t–v = m - a`.
    C3 { m: usize, a: usize },
    /// Triangle with bundles `s–t = a`, `t–v = b`, `s–v = m - a - b`.
    D3 { m: usize, a: usize, b: usize },
    /// `s`–`t` path on `n - 1` vertices plus a vertex adjacent to both ends of one path edge.
    SnSimple { n: usize },
    /// Cycle on `n - 2` vertices with `s` and `t` pendant at two far-apart cycle vertices.
    RnSimple { n: usize },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

fn path_bundles(from: usize, to: usize) -> Vec<(Pair, usize)> {
    (from..to).map(|i| ((i, i + 1), 1)).collect()
}

fn q() -> IntPolynomial {
    IntPolynomial::q()
}

fn p() -> IntPolynomial {
    IntPolynomial::p()
}

fn konst(c: usize) -> BigInt {
    BigInt::from(c)
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "Path",
            FamilySpec::Cycle { .. } => "Cycle",
            FamilySpec::Bundle { .. } => "Bundle",
            FamilySpec::Gnm { .. } => "Gnm",
            FamilySpec::HPendantBundle { .. } => "HPendantBundle",
            FamilySpec::HTwoBundles { .. } => "HTwoBundles",
            FamilySpec::X55 => "X55",
            FamilySpec::Y66 => "Y66",
            FamilySpec::PathTriangle { .. } => "PathTriangle",
            FamilySpec::B3 { .. } => "B3",
            FamilySpec::C3 { .. } => "C3",
            FamilySpec::D3 { .. } => "D3",
            FamilySpec::SnSimple { .. } => "SnSimple",
            FamilySpec::RnSimple { .. } => "RnSimple",
        }
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Path { n, k } | FamilySpec::Cycle { n, k } => vec![n, k],
            FamilySpec::Bundle { m } => vec![m],
            FamilySpec::Gnm { n, m } | FamilySpec::HPendantBundle { n, m } | FamilySpec::HTwoBundles { n, m } => vec![n, m],
            FamilySpec::X55 | FamilySpec::Y66 => vec![],
            FamilySpec::PathTriangle { n } | FamilySpec::SnSimple { n } | FamilySpec::RnSimple { n } => vec![n],
            FamilySpec::B3 { m, a } | FamilySpec::C3 { m, a } => vec![m, a],
            FamilySpec::D3 { m, a, b } => vec![m, a, b],
        }
    }

    /// Checks the parameter ranges.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path { n, k } => need(n >= 2 && k >= 1 && k < n, "Path needs n >= 2 and 1 <= k < n"),
            FamilySpec::Cycle { n, k } => need(n >= 3 && k >= 1 && k < n, "Cycle needs n >= 3 and 1 <= k < n"),
            FamilySpec::Bundle { m } => need(m >= 1, "Bundle needs m >= 1"),
            FamilySpec::Gnm { n, m } => need(n >= 2 && m + 1 >= n, "Gnm needs n >= 2 and m >= n - 1"),
            FamilySpec::HPendantBundle { n, m } => need(n >= 3 && m + 1 >= n, "HPendantBundle needs n >= 3 and m >= n - 1"),
            FamilySpec::HTwoBundles { n, m } => need(n >= 3 && m >= n, "HTwoBundles needs n >= 3 and m >= n"),
            FamilySpec::X55 | FamilySpec::Y66 => Ok(()),
            FamilySpec::PathTriangle { n } => need(n >= 4, "PathTriangle needs n >= 4"),
            FamilySpec::B3 { m, a } | FamilySpec::C3 { m, a } => need(a >= 1 && a < m, "B3 and C3 need 1 <= a < m"),
            FamilySpec::D3 { m, a, b } => need(a >= 1 && b >= 1 && a + b < m, "D3 needs a, b >= 1 and m - a - b >= 1"),
            FamilySpec::SnSimple { n } => need(n >= 4, "SnSimple needs n >= 4"),
            FamilySpec::RnSimple { n } => need(n >= 5, "RnSimple needs n >= 5"),
        }
    }

    /// Builds the labelled graph and its terminals.
    pub fn construct(&self) -> Result<(Multigraph, TerminalPair)> {
        self.validate()?;
        let (n, bundles, s, t): (usize, Vec<(Pair, usize)>, usize, usize) = match *self {
            FamilySpec::Path { n, k } => (n, path_bundles(0, n - 1), 0, k),
            FamilySpec::Cycle { n, k } => {
                let mut b = path_bundles(0, n - 1);
                b.push(((0, n - 1), 1));
                (n, b, 0, k)
            }
            FamilySpec::Bundle { m } => (2, vec![((0, 1), m)], 0, 1),
            FamilySpec::Gnm { n, m } => {
                let mut b = path_bundles(0, n - 1);
                b[0].1 = m + 2 - n;
                (n, b, 0, n - 1)
            }
            FamilySpec::HPendantBundle { n, m } => {
                let mut b = path_bundles(0, n - 2);
                b.push(((1, n - 1), m + 2 - n));
                (n, b, 0, n - 2)
            }
            FamilySpec::HTwoBundles { n, m } => {
                let mut b = path_bundles(0, n - 1);
                b[0].1 = 2;
                b[1].1 = m + 1 - n;
                (n, b, 0, n - 1)
            }
            // s=0, b=1, a=2, c=3, t=4
            FamilySpec::X55 => (5, vec![((2, 1), 1), ((1, 0), 1), ((2, 3), 1), ((1, 3), 1), ((3, 4), 1)], 0, 4),
            // s=0, a=1, b=2, c=3, d=4, t=5
            FamilySpec::Y66 => (6, vec![((0, 1), 1), ((1, 2), 1), ((2, 3), 1), ((1, 4), 1), ((4, 3), 1), ((3, 5), 1)], 0, 5),
            FamilySpec::PathTriangle { n } => {
                let t = n - 3;
                let mut b = path_bundles(0, t);
                b.extend([((t, n - 2), 1), ((n - 2, n - 1), 1), ((t, n - 1), 1)]);
                (n, b, 0, t)
            }
            FamilySpec::B3 { m, a } => (3, vec![((0, 1), a), ((1, 2), m - a)], 0, 2),
            FamilySpec::C3 { m, a } => (3, vec![((0, 1), a), ((1, 2), m - a)], 0, 1),
            FamilySpec::D3 { m, a, b } => (3, vec![((0, 1), a), ((1, 2), b), ((0, 2), m - a - b)], 0, 1),
            FamilySpec::SnSimple { n } => {
                let mut b = path_bundles(0, n - 2);
                b.extend([((1, n - 1), 1), ((2, n - 1), 1)]);
                (n, b, 0, n - 2)
            }
            FamilySpec::RnSimple { n } => {
                let c = n - 2;
                let mut b = path_bundles(0, c - 1);
                b.push(((0, c - 1), 1));
                b.extend([((0, n - 2), 1), ((c / 2, n - 1), 1)]);
                (n, b, n - 2, n - 1)
            }
        };
        Ok((Multigraph::from_bundles(n, bundles)?, TerminalPair::new(s, t)?))
    }

    /// The family's split reliability in closed form, where one is known.
    pub fn closed_form_split(&self) -> Result<IntPolynomial> {
        self.validate()?;
        let two = konst(2);
        Ok(match *self {
            FamilySpec::Path { n, k } => (&p().pow(n - 2) * &q()).scale(&konst(k)),
            FamilySpec::Cycle { n, k } => (&p().pow(n - 2) * &q().pow(2)).scale(&konst(k * (n - k))),
            FamilySpec::Bundle { m } => q().pow(m),
            FamilySpec::Gnm { n, m } => {
                let w = m + 2 - n;
                let tail = &q().pow(w) * &p().pow(n - 2);
                if n == 2 {
                    tail
                } else {
                    let head = &(&q() * &p().pow(n - 3)) * &(&IntPolynomial::one() - &q().pow(w));
                    &head.scale(&konst(n - 2)) + &tail
                }
            }
            FamilySpec::B3 { m, a } => &(&q().pow(a) + &q().pow(m - a)) - &q().pow(m).scale(&two),
            FamilySpec::C3 { m, a } => &q().pow(a) - &q().pow(m),
            FamilySpec::D3 { m, a, b } => {
                let inner = &(&q().pow(b) + &q().pow(m - a - b)) - &q().pow(m - a).scale(&two);
                &q().pow(a) * &inner
            }
            _ => return Err(Error::NoClosedForm(self.tag().to_string())),
        })
    }

    /// The state counts `(i, N_i)` the family is known to have.
    pub fn expected_ncounts(&self) -> Result<Vec<(usize, BigInt)>> {
        self.validate()?;
        let out = match *self {
            FamilySpec::Gnm { n, m } if n >= 3 => {
                let mut v = vec![(n - 2, konst(1 + (n - 2) * (m + 2 - n)))];
                if m >= n {
                    v.push((m - 1, konst(n - 2)));
                }
                v
            }
            FamilySpec::HPendantBundle { n, m } => {
                let mut v = vec![(n - 2, konst((n - 2) * (m + 2 - n)))];
                if m >= n {
                    v.push((m - 1, konst(n - 2)));
                }
                v
            }
            FamilySpec::HTwoBundles { n, m } if n >= 4 => {
                let w = m + 1 - n;
                vec![(n - 2, konst(2 * w * (n - 3) + 2 + w))]
            }
            FamilySpec::X55 => vec![(3, konst(8))],
            FamilySpec::Y66 => vec![(4, konst(12))],
            FamilySpec::PathTriangle { n } => vec![(n - 2, konst(3 * (n - 3)))],
            FamilySpec::SnSimple { n } => vec![(n - 2, konst(3 * (n - 3) + 2)), (n - 1, konst(n - 3))],
            FamilySpec::RnSimple { n } => {
                let c = n - 2;
                vec![(n - 2, konst(2 * c + (c / 2) * c.div_ceil(2)))]
            }
            _ => return Err(Error::NoStatedCounts(self.tag().to_string())),
        };
        Ok(out)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family:{}", self.tag())?;
        let params = self.params();
        if !params.is_empty() {
            let joined: Vec<String> = params.iter().map(usize::to_string).collect();
            write!(f, ":{}", joined.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `family:<tag>:<p1>,<p2>,...`; the `family:` prefix is optional.
    fn from_str(text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix("family:").unwrap_or(body);
        let (tag, rest) = body.split_once(':').unwrap_or((body, ""));
        let params: Vec<usize> = if rest.trim().is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| invalid(format!("bad parameter {x:?} in {text:?}"))))
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{tag} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let spec = match tag {
            // a bare `Path:n` puts the terminals at the ends
            "Path" if params.len() == 1 => Ok(FamilySpec::Path { n: params[0], k: params[0].saturating_sub(1) }),
            "Path" => arity(2).map(|_| FamilySpec::Path { n: params[0], k: params[1] }),
            "Cycle" => arity(2).map(|_| FamilySpec::Cycle { n: params[0], k: params[1] }),
            "Bundle" => arity(1).map(|_| FamilySpec::Bundle { m: params[0] }),
            "Gnm" | "G" => arity(2).map(|_| FamilySpec::Gnm { n: params[0], m: params[1] }),
            "HPendantBundle" | "HPendant" => arity(2).map(|_| FamilySpec::HPendantBundle { n: params[0], m: params[1] }),
            "HTwoBundles" | "HTwo" => arity(2).map(|_| FamilySpec::HTwoBundles { n: params[0], m: params[1] }),
            "X55" => arity(0).map(|_| FamilySpec::X55),
            "Y66" => arity(0).map(|_| FamilySpec::Y66),
            "PathTriangle" => arity(1).map(|_| FamilySpec::PathTriangle { n: params[0] }),
            "B3" => arity(2).map(|_| FamilySpec::B3 { m: params[0], a: params[1] }),
            "C3" => arity(2).map(|_| FamilySpec::C3 { m: params[0], a: params[1] }),
            "D3" => arity(3).map(|_| FamilySpec::D3 { m: params[0], a: params[1], b: params[2] }),
            "SnSimple" | "Sn" => arity(1).map(|_| FamilySpec::SnSimple { n: params[0] }),
            "RnSimple" | "Rn" => arity(1).map(|_| FamilySpec::RnSimple { n: params[0] }),
            _ => Err(invalid(format!("unknown family tag {tag:?}"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}
