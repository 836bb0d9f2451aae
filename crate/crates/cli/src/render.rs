//! ASCII rendering of tilings.
//!
//! A tiling of an `n`-board is drawn as two rows under its symbolic string:
//!
//! ```text
//! hfh
//! abcb
//! |   |
//! ```
//!
//! Row one has one character per slot. Every tooth of a tile carries the same
//! label, and tiles are labelled `a`, `b`, ... in start-slot order (`A`-`Z`
//! follow `z`). Row two has `2n + 1` columns. Column `2c` marks the boundary
//! on the left of cell `c`: `|` for the board edges and fault lines, `:` for
//! boundaries straddled by a tile. Odd columns are blank.
//!
//! The label row doubles as an input format: `abab` is the bifence.

use std::collections::BTreeMap;

use tricomb::{Error, Result, TileKind, TilePlacement, Tiling};

const LABELS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

pub fn label_row(t: &Tiling) -> String {
    let mut row = vec![b'?'; 2 * t.len()];
    for (i, p) in t.placements().iter().enumerate() {
        for s in p.slots() {
            if let Some(cell) = row.get_mut(s) {
                *cell = LABELS[i % LABELS.len()];
            }
        }
    }
    String::from_utf8(row).expect("ascii")
}

pub fn boundary_row(t: &Tiling) -> String {
    let n = t.len();
    let faults = t.fault_lines();
    (0..=2 * n)
        .map(|col| {
            if col % 2 == 1 {
                ' '
            } else {
                let cell = col / 2;
                if cell == 0 || cell == n || faults.contains(&cell) {
                    '|'
                } else {
                    ':'
                }
            }
        })
        .collect()
}

pub fn render(t: &Tiling) -> String {
    format!("{}\n{}\n{}\n", t.symbolic(), label_row(t), boundary_row(t))
}

/// Parses a label row back into a tiling.
pub fn parse_labels(spec: &str) -> Result<Tiling> {
    let chars: Vec<char> = spec.chars().collect();
    if !chars.len().is_multiple_of(2) {
        return Err(Error::Parse(format!(
            "{spec:?} has {} slots; a board has an even number",
            chars.len()
        )));
    }
    let mut slots: BTreeMap<char, Vec<usize>> = BTreeMap::new();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_whitespace() {
            return Err(Error::Parse(format!("blank slot at position {i} in {spec:?}")));
        }
        slots.entry(c).or_default().push(i);
    }
    let placements = slots
        .into_iter()
        .map(|(label, at)| {
            let spaced = at.windows(2).all(|w| w[1] == w[0] + 2);
            match TileKind::from_teeth(at.len()) {
                Some(kind) if spaced => Ok(TilePlacement::new(kind, at[0])),
                _ => Err(Error::Parse(format!(
                    "label {label:?} at slots {at:?} is not a tile with 1-3 teeth one slot apart"
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Tiling::from_placements(chars.len() / 2, placements))
}
