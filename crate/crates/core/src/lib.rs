//! Exact combinatorics of tiling an `n`-board with half-squares, fences and
//! combs, i.e. `(1/2, 1/2; m)`-combs with `m = 1, 2, 3` teeth.
//!
//! A board of `n` cells is modelled as `2n` half-cell *slots*. A tile with
//! `m` teeth starting at slot `s` occupies slots `s, s + 2, ..., s + 2(m - 1)`.
//! The number of tilings of an `n`-board by all three kinds is `T(n+2)^2`,
//! where `T` is the tribonacci sequence.
//!
//! The crate is organised bottom-up:
//!
//! - [`sequences`]: memoized big-integer tribonacci, Fibonacci, Narayana's
//!   cows and Padovan numbers.
//! - [`board`]: tile kinds, placements and tilings; exhaustive enumeration
//!   and an independent transfer-state counter.
//! - [`metatiles`]: fault-line decomposition, metatile enumeration, the
//!   slot-swap involution and the metatile counts `mu`.
//! - [`bijection`]: comb tilings versus ordered pairs of omino tilings.
//! - [`identities`]: a registry of identities as executable descriptors,
//!   with exact verification and brute-force cross-checks.
//!
//! Work that is data-parallel (enumeration subtrees, identity domains) runs
//! on rayon when the `parallel` feature is enabled; see [`ExecMode`].

pub mod bijection;
pub mod board;
mod error;
mod exec;
pub mod identities;
pub mod metatiles;
pub mod sequences;
pub mod series;

pub use board::{Enumerator, TileKind, TilePlacement, TileSet, Tiling};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use sequences::SeqValue;
