//! Comb tilings of an `n`-board correspond to ordered pairs of tilings of two
//! `n`-boards by squares, dominoes and trominoes.
//!
//! All teeth of a placement share the parity of its start slot. Even-start
//! placements live entirely in left slots and become ominoes on the first
//! board; odd-start placements become ominoes on the second. An `m`-tooth
//! placement starting in cell `c` covers cells `c..c+m` of its board.

use num_bigint::BigUint;
use serde::Serialize;

use crate::{Error, Result, SeqValue, TileKind, TilePlacement, TileSet, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OminoPiece {
    pub start: usize,
    pub size: usize,
}

/// A tiling of an `n`-board by `m`-ominoes, pieces sorted by start cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OminoTiling {
    n: usize,
    pieces: Vec<OminoPiece>,
}

impl OminoTiling {
    pub fn new(n: usize, mut pieces: Vec<OminoPiece>) -> Result<OminoTiling> {
        pieces.sort_unstable();
        let t = OminoTiling { n, pieces };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::InvalidOminoTiling(format!("{:?} on a {n}-board", t.pieces)))
        }
    }

    /// Builds a tiling from piece sizes laid left to right.
    pub fn from_sizes(sizes: &[usize]) -> Result<OminoTiling> {
        let mut start = 0;
        let pieces = sizes
            .iter()
            .map(|&size| {
                let p = OminoPiece { start, size };
                start += size;
                p
            })
            .collect();
        OminoTiling::new(start, pieces)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn pieces(&self) -> &[OminoPiece] {
        &self.pieces
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.size).collect()
    }

    /// Pieces are contiguous, sized 1 to 3, and cover `0..n` exactly.
    pub fn is_valid(&self) -> bool {
        let mut next = 0;
        for p in &self.pieces {
            if p.start != next || !(1..=3).contains(&p.size) {
                return false;
            }
            next += p.size;
        }
        next == self.n
    }

    /// Size of the piece covering the last cell.
    pub fn last_size(&self) -> Option<usize> {
        self.pieces.last().map(|p| p.size)
    }
}

/// Splits a comb tiling into its left-slot and right-slot omino tilings.
pub fn to_board_pair(t: &Tiling) -> Result<(OminoTiling, OminoTiling)> {
    t.ensure_valid()?;
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for p in t.placements() {
        let piece = OminoPiece {
            start: p.start() / 2,
            size: p.kind.teeth(),
        };
        if p.start() % 2 == 0 {
            left.push(piece);
        } else {
            right.push(piece);
        }
    }
    Ok((OminoTiling::new(t.len(), left)?, OminoTiling::new(t.len(), right)?))
}

/// Inverse of [`to_board_pair`].
pub fn from_board_pair(a: &OminoTiling, b: &OminoTiling) -> Result<Tiling> {
    if a.n != b.n {
        return Err(Error::LengthMismatch { left: a.n, right: b.n });
    }
    for board in [a, b] {
        if !board.is_valid() {
            return Err(Error::InvalidOminoTiling(format!("{:?}", board.pieces)));
        }
    }
    let place = |p: &OminoPiece, parity: usize| {
        TilePlacement::new(
            TileKind::from_teeth(p.size).expect("validated size"),
            2 * p.start + parity,
        )
    };
    let placements = a
        .pieces
        .iter()
        .map(|p| place(p, 0))
        .chain(b.pieces.iter().map(|p| place(p, 1)))
        .collect();
    Ok(Tiling::from_placements(a.n, placements))
}

/// `s(n) = sum over m in sizes of s(n - m)`, `s(0) = 1`, `s(n < 0) = 0`.
pub fn count_omino_tilings(n: usize, sizes: &TileSet) -> SeqValue {
    let sizes = sizes.teeth();
    let mut s: Vec<BigUint> = Vec::with_capacity(n + 1);
    s.push(BigUint::from(1u8));
    for i in 1..=n {
        let v = sizes
            .iter()
            .filter_map(|&m| i.checked_sub(m))
            .fold(BigUint::default(), |acc, j| acc + &s[j]);
        s.push(v);
    }
    SeqValue::from(s.swap_remove(n))
}

/// Every omino tiling of an `n`-board with the given sizes, in lexicographic
/// order of size sequences.
pub fn enumerate_omino_tilings(n: usize, sizes: &TileSet) -> Vec<OminoTiling> {
    fn rec(rest: usize, sizes: &[usize], cur: &mut Vec<usize>, out: &mut Vec<OminoTiling>) {
        if rest == 0 {
            out.push(OminoTiling::from_sizes(cur).expect("sizes sum to n"));
            return;
        }
        for &m in sizes.iter().filter(|&&m| m <= rest) {
            cur.push(m);
            rec(rest - m, sizes, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &sizes.teeth(), &mut Vec::new(), &mut out);
    out
}
