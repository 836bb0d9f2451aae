//! Identities as data: each [`IdentityDescriptor`] pairs an exact left-hand
//! side with one or two right-hand sides (as printed, and corrected where the
//! printed form is wrong). [`verify`] checks the equation over a parameter
//! domain. [`cross_check`] recounts, by brute-force enumeration, the tilings
//! that the combinatorial argument behind the identity counts.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::board::{count_tilings_table, segment_starts};
use crate::metatiles::{mu, mu_recurrence, mu_sigma_recurrence};
use crate::sequences::Sequence;
use crate::{Enumerator, Error, ExecMode, Result, TileKind, TilePlacement, TileSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    AsStated,
    Corrected,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::AsStated => "as-stated",
            Variant::Corrected => "corrected",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "as-stated" => Ok(Variant::AsStated),
            "corrected" => Ok(Variant::Corrected),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "n={}, j={j}", self.n),
            None => write!(f, "n={}", self.n),
        }
    }
}

impl Params {
    fn j(&self) -> i64 {
        i64::from(self.j.unwrap_or(0))
    }
}

/// Precomputed sequence tables shared by all evaluators of one run.
/// Every accessor returns zero at negative indices.
#[derive(Debug)]
pub struct Context {
    tri: Vec<BigInt>,
    tri_sq: Vec<BigInt>,
    fib: Vec<BigInt>,
    nar: Vec<BigInt>,
    pad: Vec<BigInt>,
    mu: Vec<BigInt>,
    mu_rec: Vec<BigInt>,
    mu_sigma_rec: [Vec<BigInt>; 3],
    boards: Vec<BigInt>,
    zero: BigInt,
}

const SIGMA_CLASSES: [(TileKind, TileKind); 3] = [
    (TileKind::HalfSquare, TileKind::Fence),
    (TileKind::HalfSquare, TileKind::Comb),
    (TileKind::Fence, TileKind::Comb),
];

impl Context {
    /// Tables large enough for parameters `n <= n_max`.
    pub fn new(n_max: i64) -> Context {
        let size = 3 * n_max.max(0) as usize + 8;
        let tri = Sequence::Tribonacci.table(size);
        let tri_sq = tri.iter().map(|t| t * t).collect();
        let upto = |f: &dyn Fn(i64) -> BigInt| (0..=size as i64).map(f).collect::<Vec<_>>();
        Context {
            tri,
            tri_sq,
            fib: Sequence::Fibonacci.table(size),
            nar: Sequence::Narayana.table(size),
            pad: Sequence::Padovan.table(size),
            mu: upto(&|l| mu(l).to_bigint()),
            mu_rec: upto(&|l| mu_recurrence(l).to_bigint()),
            mu_sigma_rec: SIGMA_CLASSES
                .map(|(a, b)| upto(&|l| mu_sigma_recurrence(l, a, b).expect("distinct digits").to_bigint())),
            boards: count_tilings_table(size, &TileSet::ALL)
                .iter()
                .map(|v| v.to_bigint())
                .collect(),
            zero: BigInt::default(),
        }
    }

    fn at<'a>(&'a self, table: &'a [BigInt], i: i64) -> &'a BigInt {
        if i < 0 {
            &self.zero
        } else {
            &table[i as usize]
        }
    }

    pub fn t(&self, i: i64) -> &BigInt {
        self.at(&self.tri, i)
    }

    pub fn t2(&self, i: i64) -> &BigInt {
        self.at(&self.tri_sq, i)
    }

    pub fn f(&self, i: i64) -> &BigInt {
        self.at(&self.fib, i)
    }

    pub fn c(&self, i: i64) -> &BigInt {
        self.at(&self.nar, i)
    }

    pub fn p(&self, i: i64) -> &BigInt {
        self.at(&self.pad, i)
    }

    pub fn mu(&self, l: i64) -> &BigInt {
        self.at(&self.mu, l)
    }

    /// Number of tilings of an `n`-board by `{h, f, c}`, from the transfer counter.
    pub fn a(&self, n: i64) -> &BigInt {
        self.at(&self.boards, n)
    }
}

fn d(a: i64, b: i64) -> BigInt {
    BigInt::from(i64::from(a == b))
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `sum_{i=from}^{to} f(i)`, empty when `to < from`.
fn sum(from: i64, to: i64, f: impl Fn(i64) -> BigInt) -> BigInt {
    (from..=to).map(f).sum()
}

pub type Evaluator = fn(&Context, Params) -> BigInt;

/// What a cross-check counts on each enumerated tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Every tiling.
    All,
    /// Tilings using at least one tile whose kind is in the set.
    AtLeastOne(TileSet),
    /// Tilings containing at least one mixed metatile.
    MixedMetatile,
    /// Tilings whose final left and right slots hold these kinds.
    FinalSlots(TileKind, TileKind),
    /// Tilings that are a single mixed metatile, of any signature.
    SingleMixed,
    /// Tilings that are a single metatile ending in these kinds.
    SingleWithSigma(TileKind, TileKind),
}

impl Quantity {
    pub fn matches(&self, n: usize, placements: &[TilePlacement]) -> bool {
        let final_slots = || {
            let owner = |slot: usize| placements.iter().find(|p| p.occupies(slot)).map(|p| p.kind);
            if n == 0 {
                None
            } else {
                Some((owner(2 * n - 2)?, owner(2 * n - 1)?))
            }
        };
        let single = || n > 0 && segment_starts(placements).count() == 1;
        match *self {
            Quantity::All => true,
            Quantity::AtLeastOne(set) => placements.iter().any(|p| set.contains(p.kind)),
            Quantity::MixedMetatile => {
                let starts: Vec<usize> = segment_starts(placements).collect();
                starts.iter().enumerate().any(|(i, &from)| {
                    let to = starts.get(i + 1).copied().unwrap_or(placements.len());
                    is_mixed(&placements[from..to])
                })
            }
            Quantity::FinalSlots(a, b) => final_slots() == Some((a, b)),
            Quantity::SingleMixed => single() && is_mixed(placements),
            Quantity::SingleWithSigma(a, b) => single() && is_mixed(placements) && final_slots() == Some((a, b)),
        }
    }
}

fn is_mixed(placements: &[TilePlacement]) -> bool {
    placements.windows(2).any(|w| w[0].kind != w[1].kind)
        || placements
            .first()
            .is_some_and(|p| placements.iter().any(|q| q.kind != p.kind))
}

/// How an identity's left-hand side is re-derived by enumeration: count
/// `quantity` on a board of length `board(params)` and compare with
/// `lhs - offset` and `rhs - offset`.
#[derive(Debug, Clone, Copy)]
pub struct CrossCheck {
    pub quantity: fn(Params) -> Quantity,
    pub board: fn(Params) -> i64,
    pub offset: Evaluator,
}

#[derive(Clone)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// The equation, in plain text.
    pub statement: &'static str,
    /// What the two sides count.
    pub counts: &'static str,
    pub n_min: i64,
    /// Values of the secondary parameter `j`; empty when there is none.
    pub j_values: &'static [u32],
    pub lhs: Evaluator,
    pub as_stated: Evaluator,
    /// Present when the printed right-hand side is wrong.
    pub corrected: Option<Evaluator>,
    pub cross_check: Option<CrossCheck>,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("n_min", &self.n_min)
            .field("j_values", &self.j_values)
            .field("corrected", &self.corrected.is_some())
            .field("cross_check", &self.cross_check.is_some())
            .finish()
    }
}

impl IdentityDescriptor {
    pub fn variants(&self) -> Vec<Variant> {
        match self.corrected {
            Some(_) => vec![Variant::AsStated, Variant::Corrected],
            None => vec![Variant::AsStated],
        }
    }

    /// The variant actually evaluated when `requested` is asked for.
    pub fn resolve(&self, requested: Variant) -> Variant {
        match (requested, self.corrected) {
            (Variant::Corrected, Some(_)) => Variant::Corrected,
            _ => Variant::AsStated,
        }
    }

    pub fn rhs(&self, variant: Variant) -> Evaluator {
        match self.resolve(variant) {
            Variant::Corrected => self.corrected.expect("resolved"),
            Variant::AsStated => self.as_stated,
        }
    }

    /// `(lhs, rhs)` at `params`, building a fresh context.
    pub fn evaluate(&self, variant: Variant, params: Params) -> (BigInt, BigInt) {
        let ctx = Context::new(params.n);
        ((self.lhs)(&ctx, params), (self.rhs(variant))(&ctx, params))
    }

    fn j_list(&self) -> Vec<Option<u32>> {
        if self.j_values.is_empty() {
            vec![None]
        } else {
            self.j_values.iter().map(|&j| Some(j)).collect()
        }
    }
}

fn at_least_one(s: &'static str) -> TileSet {
    s.parse().expect("static tile set")
}

fn build_registry() -> Vec<IdentityDescriptor> {
    use TileKind::*;

    fn i_hf(ctx: &Context, p: Params, inner: i64) -> BigInt {
        let j = p.j();
        big(1)
            + 3 * d(j, 2)
            + sum(1, p.n, |k| {
                ctx.t2(3 * k + j + 1)
                    + 3 * ctx.t2(inner * k + j)
                    + 4 * sum(0, 3 * k + j - 3, |i| {
                        (ctx.t(3 * k + j - i) + ctx.t(3 * k + j - i - 1)) * ctx.t2(i + 2)
                    })
            })
    }

    fn sigma_class(p: Params) -> (TileKind, TileKind) {
        SIGMA_CLASSES[p.j.unwrap_or(0) as usize]
    }

    vec![
        IdentityDescriptor {
            id: "I-sum",
            statement: "T(n)^2 = [n=2] + T(n-1)^2 + 3T(n-2)^2 + 9T(n-3)^2 + 4 sum_{l=4}^{n-2} (T(l)+T(l-1)) T(n-l)^2",
            counts: "tilings of an (n-2)-board, conditioned on the last metatile",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n).clone(),
            as_stated: |c, p| {
                let n = p.n;
                d(n, 2) + c.t2(n - 1) + 3 * c.t2(n - 2) + 9 * c.t2(n - 3)
                    + 4 * sum(4, n - 2, |l| (c.t(l) + c.t(l - 1)) * c.t2(n - l))
            },
            corrected: None,
            cross_check: None,
        },
        IdentityDescriptor {
            id: "I-t2rr",
            statement: "T(n)^2 = [n=2] - [n=3] - [n=4] - [n=5] + 2T(n-1)^2 + 3T(n-2)^2 + 6T(n-3)^2 - T(n-4)^2 - T(n-6)^2",
            counts: "tilings of an (n-2)-board (finite-order recurrence for squares)",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n).clone(),
            as_stated: |c, p| {
                let n = p.n;
                d(n, 2) - d(n, 3) - d(n, 4) - d(n, 5) + 2 * c.t2(n - 1) + 3 * c.t2(n - 2)
                    + 6 * c.t2(n - 3)
                    - c.t2(n - 4)
                    - c.t2(n - 6)
            },
            corrected: None,
            cross_check: None,
        },
        IdentityDescriptor {
            id: "I-fc",
            statement: "T(n+4)^2 = 1 + sum_{k=0}^{n} { 3T(k+2)^2 + 9T(k+1)^2 + 4 sum_{i=2}^{k} (T(k+4-i)+T(k+3-i)) T(i)^2 }",
            counts: "tilings of an (n+2)-board using at least one fence or comb",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n + 4).clone(),
            as_stated: |c, p| {
                big(1)
                    + sum(0, p.n, |k| {
                        3 * c.t2(k + 2)
                            + 9 * c.t2(k + 1)
                            + 4 * sum(2, k, |i| (c.t(k + 4 - i) + c.t(k + 3 - i)) * c.t2(i))
                    })
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::AtLeastOne(at_least_one("fc")),
                board: |p| p.n + 2,
                offset: |_, _| big(1),
            }),
        },
        IdentityDescriptor {
            id: "I-hc",
            statement: "T(2(n+1)+j)^2 = 1 + sum_{k=1}^{n} { T(2k+j+1)^2 + 2T(2k+j)^2 + 9T(2k+j-1)^2 + 4 sum_{i=0}^{2k+j-4} (T(2k+j-i)+T(2k+j-i-1)) T(i+2)^2 }, j = 0, 1",
            counts: "tilings of a (2n+j)-board using at least one half-square or comb",
            n_min: 0,
            j_values: &[0, 1],
            lhs: |c, p| c.t2(2 * (p.n + 1) + p.j()).clone(),
            as_stated: |c, p| {
                let j = p.j();
                big(1)
                    + sum(1, p.n, |k| {
                        c.t2(2 * k + j + 1)
                            + 2 * c.t2(2 * k + j)
                            + 9 * c.t2(2 * k + j - 1)
                            + 4 * sum(0, 2 * k + j - 4, |i| {
                                (c.t(2 * k + j - i) + c.t(2 * k + j - i - 1)) * c.t2(i + 2)
                            })
                    })
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::AtLeastOne(at_least_one("hc")),
                board: |p| 2 * p.n + p.j(),
                offset: |_, p| d(p.j(), 0),
            }),
        },
        IdentityDescriptor {
            id: "I-hf",
            statement: "T(3n+2+j)^2 = 1 + 3[j=2] + sum_{k=1}^{n} { T(3k+j+1)^2 + 3T(2k+j)^2 + 4 sum_{i=0}^{3k+j-3} (T(3k+j-i)+T(3k+j-i-1)) T(i+2)^2 }, j = 0, 1, 2; corrected: 3T(3k+j)^2 in place of 3T(2k+j)^2",
            counts: "tilings of a (3n+j)-board using at least one half-square or fence",
            n_min: 0,
            j_values: &[0, 1, 2],
            lhs: |c, p| c.t2(3 * p.n + 2 + p.j()).clone(),
            as_stated: |c, p| i_hf(c, p, 2),
            corrected: Some(|c, p| i_hf(c, p, 3)),
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::AtLeastOne(at_least_one("hf")),
                board: |p| 3 * p.n + p.j(),
                offset: |_, p| d(p.j(), 0),
            }),
        },
        IdentityDescriptor {
            id: "I-mm",
            statement: "T(n)^2 = T(n) + sum_{k=2}^{n-2} sum_{l=2}^{k} {4(T(l)+T(l-1)) - 2[l=2]} T(k-l+2)^2 T(n-k)",
            counts: "tilings of an (n-2)-board using at least one mixed metatile",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n).clone(),
            as_stated: |c, p| {
                let n = p.n;
                c.t(n)
                    + sum(2, n - 2, |k| {
                        sum(2, k, |l| {
                            (4 * (c.t(l) + c.t(l - 1)) - 2 * d(l, 2)) * c.t2(k - l + 2) * c.t(n - k)
                        })
                    })
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::MixedMetatile,
                board: |p| p.n - 2,
                offset: |c, p| c.t(p.n).clone(),
            }),
        },
        IdentityDescriptor {
            id: "I-c",
            statement: "T(n+2)^2 = F(n+1)^2 + sum_{k=3}^{n} sum_{l=3}^{k} {4(T(l)+T(l-1)) + [l=3] - 2} T(k-l+2)^2 F(n-k+1)^2",
            counts: "tilings of an n-board using at least one comb",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n + 2).clone(),
            as_stated: |c, p| {
                let n = p.n;
                let f2 = |i: i64| c.f(i) * c.f(i);
                f2(n + 1)
                    + sum(3, n, |k| {
                        sum(3, k, |l| {
                            (4 * (c.t(l) + c.t(l - 1)) + d(l, 3) - 2) * c.t2(k - l + 2) * f2(n - k + 1)
                        })
                    })
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::AtLeastOne(at_least_one("c")),
                board: |p| p.n,
                offset: |c, p| c.f(p.n + 1) * c.f(p.n + 1),
            }),
        },
        IdentityDescriptor {
            id: "I-f",
            statement: "T(n+2)^2 = c(n)^2 + sum_{k=2}^{n} sum_{l=2}^{k} {4(T(l)+T(l-1)) - [l=2] - 2p(l-1)} T(k-l+2)^2 c(n-k)^2",
            counts: "tilings of an n-board using at least one fence",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n + 2).clone(),
            as_stated: |c, p| {
                let n = p.n;
                let c2 = |i: i64| c.c(i) * c.c(i);
                c2(n)
                    + sum(2, n, |k| {
                        sum(2, k, |l| {
                            (4 * (c.t(l) + c.t(l - 1)) - d(l, 2) - 2 * c.p(l - 1)) * c.t2(k - l + 2) * c2(n - k)
                        })
                    })
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::AtLeastOne(at_least_one("f")),
                board: |p| p.n,
                offset: |c, p| c.c(p.n) * c.c(p.n),
            }),
        },
        IdentityDescriptor {
            id: "I-h",
            statement: "T(n+2)^2 = p(n)^2 + sum_{k=1}^{n} sum_{l=1}^{k} {4(T(l)+T(l-1)) + [l=1] - 2[l=2] - 2c(l-5)} T(k-l+2)^2 p(n-k)^2",
            counts: "tilings of an n-board using at least one half-square",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.t2(p.n + 2).clone(),
            as_stated: |c, p| {
                let n = p.n;
                let p2 = |i: i64| c.p(i) * c.p(i);
                p2(n)
                    + sum(1, n, |k| {
                        sum(1, k, |l| {
                            (4 * (c.t(l) + c.t(l - 1)) + d(l, 1) - 2 * d(l, 2) - 2 * c.c(l - 5))
                                * c.t2(k - l + 2)
                                * p2(n - k)
                        })
                    })
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::AtLeastOne(at_least_one("h")),
                board: |p| p.n,
                offset: |c, p| c.p(p.n) * c.p(p.n),
            }),
        },
        IdentityDescriptor {
            id: "I-TnT",
            statement: "T(n+1) T(n) = sum_{l=2}^{n} (T(l)+T(l-2)) T(n-l+2)^2, n >= 2",
            counts: "tilings of an n-board with h in the final left slot and f in the final right slot",
            n_min: 2,
            j_values: &[],
            lhs: |c, p| c.t(p.n + 1) * c.t(p.n),
            as_stated: |c, p| sum(2, p.n, |l| (c.t(l) + c.t(l - 2)) * c.t2(p.n - l + 2)),
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::FinalSlots(HalfSquare, Fence),
                board: |p| p.n,
                offset: |_, _| big(0),
            }),
        },
        IdentityDescriptor {
            id: "I-T1T1",
            statement: "T(n+1) T(n-1) = 2 sum_{l=3}^{n} T(l-1) T(n-l+2)^2, n >= 3",
            counts: "tilings of an n-board with h in the final left slot and c in the final right slot",
            n_min: 3,
            j_values: &[],
            lhs: |c, p| c.t(p.n + 1) * c.t(p.n - 1),
            as_stated: |c, p| 2 * sum(3, p.n, |l| c.t(l - 1) * c.t2(p.n - l + 2)),
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::FinalSlots(HalfSquare, Comb),
                board: |p| p.n,
                offset: |_, _| big(0),
            }),
        },
        IdentityDescriptor {
            id: "L-An",
            statement: "A(n) = [n=0] + A(n-1) + 3A(n-2) + 9A(n-3) + sum_{l=4}^{n} mu(l) A(n-l), with A from the transfer counter",
            counts: "tilings of an n-board, conditioned on the last metatile",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.a(p.n).clone(),
            as_stated: |c, p| {
                let n = p.n;
                d(n, 0) + c.a(n - 1) + 3 * c.a(n - 2) + 9 * c.a(n - 3)
                    + sum(4, n, |l| c.mu(l) * c.a(n - l))
            },
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::All,
                board: |p| p.n,
                offset: |_, _| big(0),
            }),
        },
        IdentityDescriptor {
            id: "L-mu",
            statement: "mu(l) = 4(T(l)+T(l-1)) - 2[l=2] equals mu(l) = mu(l-1) + mu(l-2) + mu(l-3) + 6[l=3] + 2([l=2]+[l=4]+[l=5]), mu(l<2) = 0; n plays the role of l",
            counts: "mixed metatiles of length n",
            n_min: 0,
            j_values: &[],
            lhs: |c, p| c.mu(p.n).clone(),
            as_stated: |c, p| c.at(&c.mu_rec, p.n).clone(),
            corrected: None,
            cross_check: Some(CrossCheck {
                quantity: |_| Quantity::SingleMixed,
                board: |p| p.n,
                offset: |_, _| big(0),
            }),
        },
        IdentityDescriptor {
            id: "L-musigma",
            statement: "signature-class recurrences equal the closed forms mu12(l) = T(l)+T(l-2) (j=0), mu13(l) = 2T(l) (j=1), mu23(l) = T(l-1)+T(l-3) (j=2); corrected: mu13(l) = 2T(l-1); n plays the role of l",
            counts: "mixed metatiles of length n ending in the signature selected by j",
            n_min: 0,
            j_values: &[0, 1, 2],
            lhs: |c, p| c.at(&c.mu_sigma_rec[p.j() as usize], p.n).clone(),
            as_stated: |c, p| {
                let l = p.n;
                match p.j() {
                    0 => c.t(l) + c.t(l - 2),
                    1 => 2 * c.t(l),
                    _ => c.t(l - 1) + c.t(l - 3),
                }
            },
            corrected: Some(|c, p| {
                let l = p.n;
                match p.j() {
                    0 => c.t(l) + c.t(l - 2),
                    1 => 2 * c.t(l - 1),
                    _ => c.t(l - 1) + c.t(l - 3),
                }
            }),
            cross_check: Some(CrossCheck {
                quantity: |p| {
                    let (a, b) = sigma_class(p);
                    Quantity::SingleWithSigma(a, b)
                },
                board: |p| p.n,
                offset: |_, _| big(0),
            }),
        },
    ]
}

/// Every registered identity, in a fixed order.
pub fn registry() -> &'static [IdentityDescriptor] {
    static REGISTRY: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn find(id: &str) -> Result<&'static IdentityDescriptor> {
    registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_owned()))
}

fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn decimal_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Domain {
    /// Largest `n` for `verify`; largest board length for `cross_check`.
    pub n_max: i64,
    pub j: Option<Vec<u32>>,
}

impl Domain {
    pub fn new(n_max: i64) -> Domain {
        Domain { n_max, j: None }
    }

    pub fn with_j(n_max: i64, j: Vec<u32>) -> Domain {
        Domain { n_max, j: Some(j) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Params,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    /// Enumerated count, for cross-checks only.
    #[serde(serialize_with = "decimal_opt", skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<BigInt>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub variant: Variant,
    pub domain: Domain,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Resolved `j` values, checked against the descriptor.
fn js_for(desc: &IdentityDescriptor, domain: &Domain) -> Result<Vec<Option<u32>>> {
    match &domain.j {
        None => Ok(desc.j_list()),
        Some(js) if desc.j_values.is_empty() => Err(Error::Parse(format!(
            "identity `{}` has no j parameter, got j = {js:?}",
            desc.id
        ))),
        Some(js) => js
            .iter()
            .map(|j| {
                if desc.j_values.contains(j) {
                    Ok(Some(*j))
                } else {
                    Err(Error::Parse(format!(
                        "j = {j} is outside {:?} for `{}`",
                        desc.j_values, desc.id
                    )))
                }
            })
            .collect(),
    }
}

fn reported_domain(desc: &IdentityDescriptor, n_max: i64, js: &[Option<u32>]) -> Domain {
    Domain {
        n_max,
        j: (!desc.j_values.is_empty()).then(|| js.iter().flatten().copied().collect()),
    }
}

/// Checks `lhs == rhs` for `n_min <= n <= n_max` and every `j`, iterating `j`
/// in the outer loop. The report carries the first counterexample in that
/// order regardless of `mode`.
pub fn verify(id: &str, variant: Variant, domain: &Domain, mode: ExecMode) -> Result<VerificationReport> {
    let started = Instant::now();
    let desc = find(id)?;
    let js = js_for(desc, domain)?;
    let variant = desc.resolve(variant);
    let rhs = desc.rhs(variant);
    let ctx = Context::new(domain.n_max);
    let params: Vec<Params> = js
        .iter()
        .flat_map(|&j| (desc.n_min..=domain.n_max).map(move |n| Params { n, j }))
        .collect();
    let counterexample = mode.find_map_first(params, |p| {
        let (lhs, rhs) = ((desc.lhs)(&ctx, p), rhs(&ctx, p));
        (lhs != rhs).then_some(Counterexample {
            params: p,
            lhs,
            rhs,
            brute_force: None,
        })
    });
    Ok(VerificationReport {
        id: desc.id.to_owned(),
        variant,
        domain: reported_domain(desc, domain.n_max, &js),
        pass: counterexample.is_none(),
        counterexample,
        elapsed: started.elapsed(),
    })
}

/// For every parameter whose board has at most `n_max` cells, enumerates the
/// board and counts the tilings the identity's argument counts; that count
/// must equal both `lhs - offset` and `rhs - offset`.
pub fn cross_check(id: &str, variant: Variant, n_max: usize, enumerator: &Enumerator) -> Result<VerificationReport> {
    let started = Instant::now();
    let desc = find(id)?;
    let check = desc
        .cross_check
        .ok_or_else(|| Error::NotCrossCheckable { id: id.to_owned() })?;
    enumerator.check_cap(n_max)?;
    let variant = desc.resolve(variant);
    let rhs = desc.rhs(variant);
    let js = desc.j_list();
    let mut params = Vec::new();
    for &j in &js {
        let mut n = desc.n_min;
        loop {
            let p = Params { n, j };
            let board = (check.board)(p);
            if board > n_max as i64 {
                break;
            }
            if board >= 0 {
                params.push((p, board as usize));
            }
            n += 1;
        }
    }
    let ctx = Context::new(params.iter().map(|(p, _)| p.n).max().unwrap_or(0));
    let mut counterexample = None;
    for (p, board) in params {
        let quantity = (check.quantity)(p);
        let brute = enumerator.count_where(board, &TileSet::ALL, |pl| quantity.matches(board, pl))?;
        let brute = BigInt::from(brute);
        let offset = (check.offset)(&ctx, p);
        let lhs = (desc.lhs)(&ctx, p) - &offset;
        let rhs = rhs(&ctx, p) - &offset;
        if brute != lhs || brute != rhs {
            counterexample = Some(Counterexample {
                params: p,
                lhs,
                rhs,
                brute_force: Some(brute),
            });
            break;
        }
    }
    Ok(VerificationReport {
        id: desc.id.to_owned(),
        variant,
        domain: reported_domain(desc, n_max as i64, &js),
        pass: counterexample.is_none(),
        counterexample,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(id: &str, n: i64, j: Option<u32>, v: Variant) -> (BigInt, BigInt) {
        find(id).unwrap().evaluate(v, Params { n, j })
    }

    #[test]
    fn registry_contents() {
        let ids: Vec<&str> = registry().iter().map(|d| d.id).collect();
        for id in [
            "I-sum", "I-t2rr", "I-fc", "I-hc", "I-hf", "I-mm", "I-c", "I-f", "I-h", "I-TnT", "I-T1T1", "L-An", "L-mu",
        ] {
            assert!(ids.contains(&id), "{id} missing");
        }
        assert!(ids.len() >= 13);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(
            find("I-hf").unwrap().variants(),
            vec![Variant::AsStated, Variant::Corrected]
        );
        assert_eq!(find("nonsense").unwrap_err(), Error::UnknownIdentity("nonsense".into()));
    }

    #[test]
    fn documented_evaluations() {
        assert_eq!(eval("I-sum", 5, None, Variant::AsStated), (big(16), big(16)));
        assert_eq!(eval("I-t2rr", 7, None, Variant::AsStated), (big(169), big(169)));
        assert_eq!(eval("I-hc", 2, Some(0), Variant::AsStated), (big(49), big(49)));
        assert_eq!(eval("I-hf", 2, Some(0), Variant::AsStated), (big(576), big(441)));
        assert_eq!(eval("I-hf", 2, Some(0), Variant::Corrected), (big(576), big(576)));
    }

    #[test]
    fn i_hf_as_stated_counterexample() {
        let r = verify(
            "I-hf",
            Variant::AsStated,
            &Domain::with_j(10, vec![0]),
            ExecMode::Sequential,
        )
        .unwrap();
        assert!(!r.pass);
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.params, Params { n: 2, j: Some(0) });
        assert_eq!((ce.lhs, ce.rhs), (big(576), big(441)));
    }

    #[test]
    fn corrected_request_falls_back() {
        let r = verify("I-sum", Variant::Corrected, &Domain::new(20), ExecMode::Sequential).unwrap();
        assert_eq!(r.variant, Variant::AsStated);
        assert!(r.pass);
    }

    #[test]
    fn domain_validation() {
        assert!(verify(
            "I-sum",
            Variant::AsStated,
            &Domain::with_j(5, vec![0]),
            ExecMode::Sequential
        )
        .is_err());
        assert!(verify(
            "I-hc",
            Variant::AsStated,
            &Domain::with_j(5, vec![2]),
            ExecMode::Sequential
        )
        .is_err());
        let r = verify(
            "I-hc",
            Variant::AsStated,
            &Domain::with_j(50, vec![0, 1]),
            ExecMode::Sequential,
        )
        .unwrap();
        assert!(r.pass);
        assert_eq!(r.domain.j, Some(vec![0, 1]));
    }

    #[test]
    fn modes_agree_on_first_counterexample() {
        for id in ["I-hf", "L-musigma"] {
            let seq = verify(id, Variant::AsStated, &Domain::new(60), ExecMode::Sequential).unwrap();
            let par = verify(id, Variant::AsStated, &Domain::new(60), ExecMode::Parallel).unwrap();
            assert_eq!(seq.counterexample, par.counterexample);
            assert!(!seq.pass);
        }
    }

    #[test]
    fn cross_check_examples() {
        let e = Enumerator::default();
        let r = cross_check("I-c", Variant::AsStated, 10, &e).unwrap();
        assert!(r.pass, "{r:?}");
        let r = cross_check("I-h", Variant::AsStated, 0, &e).unwrap();
        assert!(r.pass);
        assert!(cross_check("I-sum", Variant::AsStated, 5, &e).is_err());
        assert_eq!(
            cross_check("I-c", Variant::AsStated, 15, &e).unwrap_err(),
            Error::CapExceeded { n: 15, cap: 14 }
        );
    }

    #[test]
    fn quantities_on_known_boards() {
        let e = Enumerator::default();
        let count = |n, q: Quantity| e.count_where(n, &TileSet::ALL, |p| q.matches(n, p)).unwrap();
        // A_10 - F_11^2 = 75076 - 7921
        assert_eq!(count(10, Quantity::AtLeastOne(at_least_one("c"))), 67_155);
        // A_6 - T_8 = 576 - 24
        assert_eq!(count(6, Quantity::MixedMetatile), 552);
        assert_eq!(count(0, Quantity::AtLeastOne(at_least_one("h"))), 0);
        assert_eq!(count(4, Quantity::SingleMixed), 12);
    }
}
