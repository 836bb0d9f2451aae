//! Slot-level model of an `n`-board and the two independent ways of counting
//! its tilings: exhaustive enumeration and a transfer-state counter.
//!
//! Slot `k` is the left (`k` even) or right (`k` odd) half of cell `k / 2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::{Error, ExecMode, Result, SeqValue};

/// A `(1/2, 1/2; m)`-comb, identified by its number of teeth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum TileKind {
    /// One tooth (`h`).
    HalfSquare = 1,
    /// Two teeth (`f`).
    Fence = 2,
    /// Three teeth (`c`).
    Comb = 3,
}

impl TileKind {
    pub const ALL: [TileKind; 3] = [TileKind::HalfSquare, TileKind::Fence, TileKind::Comb];

    pub fn teeth(self) -> usize {
        self as usize
    }

    pub fn from_teeth(m: usize) -> Option<TileKind> {
        match m {
            1 => Some(TileKind::HalfSquare),
            2 => Some(TileKind::Fence),
            3 => Some(TileKind::Comb),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            TileKind::HalfSquare => 'h',
            TileKind::Fence => 'f',
            TileKind::Comb => 'c',
        }
    }

    pub fn from_symbol(c: char) -> Option<TileKind> {
        match c {
            'h' | '1' => Some(TileKind::HalfSquare),
            'f' | '2' => Some(TileKind::Fence),
            'c' | '3' => Some(TileKind::Comb),
            _ => None,
        }
    }

    /// Slot offsets of the teeth relative to the first tooth, as a bitmask.
    pub(crate) fn tooth_mask(self) -> u8 {
        match self {
            TileKind::HalfSquare => 0b1,
            TileKind::Fence => 0b101,
            TileKind::Comb => 0b10101,
        }
    }
}

impl Serialize for TileKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(*self as u8)
    }
}

/// One tile on the board. Ordering is by start slot first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TilePlacement {
    pub start: u32,
    pub kind: TileKind,
}

impl TilePlacement {
    pub fn new(kind: TileKind, start: usize) -> Self {
        TilePlacement {
            start: start as u32,
            kind,
        }
    }

    pub fn start(&self) -> usize {
        self.start as usize
    }

    /// Slot of the last tooth.
    pub fn last_slot(&self) -> usize {
        self.start() + 2 * (self.kind.teeth() - 1)
    }

    pub fn slots(&self) -> impl Iterator<Item = usize> {
        let start = self.start();
        (0..self.kind.teeth()).map(move |i| start + 2 * i)
    }

    pub fn occupies(&self, slot: usize) -> bool {
        slot >= self.start() && slot <= self.last_slot() && (slot - self.start()).is_multiple_of(2)
    }
}

/// A non-empty subset of `{h, f, c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TileSet(u8);

impl TileSet {
    pub const ALL: TileSet = TileSet(0b111);

    pub fn new(kinds: impl IntoIterator<Item = TileKind>) -> Result<TileSet> {
        let bits = kinds.into_iter().fold(0u8, |acc, k| acc | 1 << (k.teeth() - 1));
        if bits == 0 {
            return Err(Error::InvalidTileSet(String::new()));
        }
        Ok(TileSet(bits))
    }

    /// All seven non-empty subsets, singletons first.
    pub fn all_subsets() -> impl Iterator<Item = TileSet> {
        [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]
            .into_iter()
            .map(TileSet)
    }

    pub fn contains(&self, kind: TileKind) -> bool {
        self.0 & 1 << (kind.teeth() - 1) != 0
    }

    /// Member kinds in increasing tooth count.
    pub fn kinds(&self) -> Vec<TileKind> {
        TileKind::ALL.into_iter().filter(|&k| self.contains(k)).collect()
    }

    pub fn teeth(&self) -> Vec<usize> {
        self.kinds().into_iter().map(TileKind::teeth).collect()
    }
}

impl Default for TileSet {
    fn default() -> Self {
        TileSet::ALL
    }
}

impl fmt::Display for TileSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kinds().into_iter().try_for_each(|k| write!(f, "{}", k.symbol()))
    }
}

/// Accepts letters (`"hf"`) or tooth counts (`"12"`).
impl FromStr for TileSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<TileSet> {
        let kinds = s
            .chars()
            .map(|c| TileKind::from_symbol(c).ok_or_else(|| Error::InvalidTileSet(s.to_owned())))
            .collect::<Result<Vec<_>>>()?;
        TileSet::new(kinds).map_err(|_| Error::InvalidTileSet(s.to_owned()))
    }
}

/// A list of placements on an `n`-cell board, kept sorted by start slot.
///
/// A `Tiling` may be constructed from arbitrary placements; [`Tiling::is_valid`]
/// tells whether they partition the `2n` slots exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tiling {
    n: usize,
    placements: Vec<TilePlacement>,
}

impl Tiling {
    pub fn from_placements(n: usize, mut placements: Vec<TilePlacement>) -> Tiling {
        placements.sort_unstable();
        Tiling { n, placements }
    }

    pub(crate) fn from_sorted(n: usize, placements: Vec<TilePlacement>) -> Tiling {
        debug_assert!(placements.windows(2).all(|w| w[0] <= w[1]));
        Tiling { n, placements }
    }

    /// The all-half-square tiling.
    pub fn all_half_squares(n: usize) -> Tiling {
        let placements = (0..2 * n)
            .map(|s| TilePlacement::new(TileKind::HalfSquare, s))
            .collect();
        Tiling { n, placements }
    }

    /// Length in cells.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn placements(&self) -> &[TilePlacement] {
        &self.placements
    }

    pub fn is_valid(&self) -> bool {
        validate(self)
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidTiling(format!(
                "placements {:?} do not partition the {} slots of a {}-board",
                self.placements,
                2 * self.n,
                self.n
            )))
        }
    }

    /// Kind of the tile whose tooth sits in `slot`.
    pub fn owner(&self, slot: usize) -> Option<TileKind> {
        self.placements.iter().find(|p| p.occupies(slot)).map(|p| p.kind)
    }

    /// Kinds owning the final left and right slots, `None` for the empty board.
    pub fn final_slots(&self) -> Option<(TileKind, TileKind)> {
        if self.n == 0 {
            return None;
        }
        Some((self.owner(2 * self.n - 2)?, self.owner(2 * self.n - 1)?))
    }

    pub fn uses(&self, kind: TileKind) -> bool {
        self.placements.iter().any(|p| p.kind == kind)
    }

    /// Cell boundaries `b` in `1..n` that no tile straddles.
    pub fn fault_lines(&self) -> Vec<usize> {
        fault_lines(&self.placements)
    }

    /// Exchanges the contents of the two slots of every cell.
    pub fn swap_slots(&self) -> Tiling {
        let placements = self
            .placements
            .iter()
            .map(|p| TilePlacement {
                start: p.start ^ 1,
                kind: p.kind,
            })
            .collect();
        Tiling::from_placements(self.n, placements)
    }

    /// Placements in start order with runs of equal symbols collapsed,
    /// e.g. `hfh`, `fh²`, `h⁴`.
    pub fn symbolic(&self) -> String {
        symbolic(&self.placements)
    }
}

/// True iff the placements of `t` cover each of its `2n` slots exactly once.
pub fn validate(t: &Tiling) -> bool {
    let slots = 2 * t.n;
    let mut seen = vec![false; slots];
    for p in &t.placements {
        for s in p.slots() {
            if s >= slots || seen[s] {
                return false;
            }
            seen[s] = true;
        }
    }
    seen.into_iter().all(|b| b)
}

pub(crate) fn fault_lines(placements: &[TilePlacement]) -> Vec<usize> {
    segment_starts(placements)
        .skip(1)
        .map(|i| placements[i].start() / 2)
        .collect()
}

/// Indices into a sorted, valid placement list where a new fault-free segment
/// begins. The first index is always `0` (for non-empty lists).
pub(crate) fn segment_starts(placements: &[TilePlacement]) -> impl Iterator<Item = usize> + '_ {
    let mut reach: Option<usize> = None;
    placements.iter().enumerate().filter_map(move |(i, p)| {
        let start = p.start();
        let fresh = start % 2 == 0 && reach.is_none_or(|r| r < start);
        reach = Some(reach.map_or(p.last_slot(), |r| r.max(p.last_slot())));
        fresh.then_some(i)
    })
}

pub(crate) fn symbolic(placements: &[TilePlacement]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < placements.len() {
        let kind = placements[i].kind;
        let run = placements[i..].iter().take_while(|p| p.kind == kind).count();
        out.push(kind.symbol());
        if run > 1 {
            out.push_str(&superscript(run));
        }
        i += run;
    }
    out
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().bytes().map(|b| DIGITS[(b - b'0') as usize]).collect()
}

/// Number of tilings of an `n`-board by the kinds in `tiles`.
///
/// Sweeps the slots left to right keeping, per state, the number of partial
/// tilings whose occupancy of the next four slots is that state.
pub fn count_tilings(n: usize, tiles: &TileSet) -> SeqValue {
    count_tilings_table(n, tiles).pop().unwrap_or_default()
}

/// Tiling counts for every board length `0..=n_max` from a single sweep.
///
/// A partial tiling of the first `2k` slots that leaves no tooth beyond them
/// is exactly a tiling of a `k`-board, so the count of the empty state at
/// slot `2k` is the answer for length `k`.
pub fn count_tilings_table(n_max: usize, tiles: &TileSet) -> Vec<SeqValue> {
    let kinds = tiles.kinds();
    let mut states: [BigUint; 16] = Default::default();
    states[0] = BigUint::from(1u8);
    let mut out = Vec::with_capacity(n_max + 1);
    for slot in 0..=2 * n_max {
        if slot % 2 == 0 {
            out.push(SeqValue::from(states[0].clone()));
            if slot == 2 * n_max {
                break;
            }
        }
        let mut next: [BigUint; 16] = Default::default();
        for (mask, count) in states.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            let mask = mask as u8;
            if mask & 1 == 1 {
                next[(mask >> 1) as usize] += count;
                continue;
            }
            for kind in &kinds {
                let teeth = kind.tooth_mask();
                if mask & teeth == 0 {
                    next[((mask | teeth) >> 1) as usize] += count;
                }
            }
        }
        states = next;
    }
    out
}

/// Exhaustive enumeration of tilings, bounded by a configurable cap.
///
/// The enumeration fills the leftmost empty slot with the first tooth of each
/// allowed kind in turn (`h`, then `f`, then `c`). Tilings therefore come out
/// in lexicographic order of their placement sequences, and that order is the
/// same in both [`ExecMode`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    cap: usize,
    mode: ExecMode,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: Self::DEFAULT_CAP,
            mode: ExecMode::default(),
        }
    }
}

/// Placements fixed before the parallel split.
const SPLIT_DEPTH: usize = 6;

impl Enumerator {
    pub const DEFAULT_CAP: usize = 14;
    pub const CAP_ENV: &'static str = "COMB_ENUM_CAP";

    pub fn new(cap: usize, mode: ExecMode) -> Self {
        Enumerator { cap, mode }
    }

    /// Default enumerator, with the cap overridden by `COMB_ENUM_CAP` if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::CAP_ENV) {
            Ok(v) => {
                let cap = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{}={v:?} is not a cell count", Self::CAP_ENV)))?;
                Ok(Enumerator::default().with_cap(cap))
            }
            Err(_) => Ok(Enumerator::default()),
        }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        Enumerator { cap, ..self }
    }

    pub fn with_mode(self, mode: ExecMode) -> Self {
        Enumerator { mode, ..self }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn mode(&self) -> ExecMode {
        self.mode
    }

    pub(crate) fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Every tiling of an `n`-board by `tiles`, in canonical order.
    pub fn tilings(&self, n: usize, tiles: &TileSet) -> Result<Vec<Tiling>> {
        self.check_cap(n)?;
        Ok(self.collect(Walk::new(n, tiles, false)))
    }

    pub(crate) fn collect(&self, walk: Walk) -> Vec<Tiling> {
        let n = walk.n;
        let frontiers = walk.frontiers(SPLIT_DEPTH);
        self.mode
            .map(frontiers, |f| {
                let mut out = Vec::new();
                walk.descend(f, &mut |p| out.push(Tiling::from_sorted(n, p.to_vec())));
                out
            })
            .into_iter()
            .flatten()
            .collect()
    }

    /// Visits every tiling in canonical order without materializing them.
    pub fn for_each<F: FnMut(&[TilePlacement])>(&self, n: usize, tiles: &TileSet, mut visit: F) -> Result<()> {
        self.check_cap(n)?;
        Walk::new(n, tiles, false).descend(Frontier::root(), &mut visit);
        Ok(())
    }

    pub fn count(&self, n: usize, tiles: &TileSet) -> Result<u64> {
        self.count_where(n, tiles, |_| true)
    }

    /// Number of tilings whose (sorted) placements satisfy `pred`.
    pub fn count_where<P>(&self, n: usize, tiles: &TileSet, pred: P) -> Result<u64>
    where
        P: Fn(&[TilePlacement]) -> bool + Sync + Send,
    {
        self.check_cap(n)?;
        Ok(self.count_walk(Walk::new(n, tiles, false), pred))
    }

    pub(crate) fn count_walk<P>(&self, walk: Walk, pred: P) -> u64
    where
        P: Fn(&[TilePlacement]) -> bool + Sync + Send,
    {
        let frontiers = walk.frontiers(SPLIT_DEPTH);
        self.mode.sum_u64(frontiers, |f| {
            let mut hits = 0u64;
            walk.descend(f, &mut |p| hits += u64::from(pred(p)));
            hits
        })
    }
}

/// Convenience wrapper over [`Enumerator::from_env`].
pub fn enumerate_tilings(n: usize, tiles: &TileSet) -> Result<Vec<Tiling>> {
    Enumerator::from_env()?.tilings(n, tiles)
}

/// A partially filled board: the next slot to fill, the occupancy of the
/// following slots (bit `i` is slot `slot + i`), and the placements so far.
#[derive(Debug, Clone)]
pub(crate) struct Frontier {
    slot: usize,
    window: u8,
    placed: Vec<TilePlacement>,
}

impl Frontier {
    pub(crate) fn root() -> Self {
        Frontier {
            slot: 0,
            window: 0,
            placed: Vec::new(),
        }
    }
}

/// Depth-first search over tilings of one board.
#[derive(Debug, Clone)]
pub(crate) struct Walk {
    n: usize,
    kinds: Vec<TileKind>,
    /// Prune partial tilings that already have a fault line, which leaves
    /// exactly the single-metatile tilings.
    unsplittable: bool,
}

impl Walk {
    pub(crate) fn new(n: usize, tiles: &TileSet, unsplittable: bool) -> Self {
        Walk {
            n,
            kinds: tiles.kinds(),
            unsplittable,
        }
    }

    fn slots(&self) -> usize {
        2 * self.n
    }

    /// Cuts the search tree after `depth` placements, in visiting order.
    pub(crate) fn frontiers(&self, depth: usize) -> Vec<Frontier> {
        let mut out = Vec::new();
        let mut f = Frontier::root();
        self.split(&mut f, depth, &mut out);
        out
    }

    fn split(&self, f: &mut Frontier, depth: usize, out: &mut Vec<Frontier>) {
        if f.placed.len() == depth || f.slot == self.slots() {
            out.push(f.clone());
            return;
        }
        self.step(f, &mut |w, f| w.split(f, depth, out));
    }

    pub(crate) fn descend<F: FnMut(&[TilePlacement])>(&self, mut f: Frontier, visit: &mut F) {
        self.go(&mut f, visit);
    }

    fn go<F: FnMut(&[TilePlacement])>(&self, f: &mut Frontier, visit: &mut F) {
        if f.slot == self.slots() {
            visit(&f.placed);
            return;
        }
        self.step(f, &mut |w, f| w.go(f, visit));
    }

    /// Advances past occupied slots, then tries each kind at the first free
    /// slot and hands every extension to `k`.
    fn step(&self, f: &mut Frontier, k: &mut dyn FnMut(&Walk, &mut Frontier)) {
        let (slot, window) = (f.slot, f.window);
        while f.window & 1 == 1 {
            f.slot += 1;
            f.window >>= 1;
            if self.is_fault(f) {
                f.slot = slot;
                f.window = window;
                return;
            }
        }
        if f.slot == self.slots() {
            k(self, f);
        } else {
            let free = (f.slot, f.window);
            for &kind in &self.kinds {
                let teeth = kind.tooth_mask();
                let last = f.slot + 2 * (kind.teeth() - 1);
                if last >= self.slots() || f.window & teeth != 0 {
                    continue;
                }
                f.placed.push(TilePlacement::new(kind, f.slot));
                f.window = (f.window | teeth) >> 1;
                f.slot += 1;
                if !self.is_fault(f) {
                    k(self, f);
                }
                f.placed.pop();
                (f.slot, f.window) = free;
            }
        }
        f.slot = slot;
        f.window = window;
    }

    /// With `unsplittable`, reaching an interior cell boundary with nothing
    /// reaching past it means the boundary is a fault line.
    fn is_fault(&self, f: &Frontier) -> bool {
        self.unsplittable && f.slot.is_multiple_of(2) && f.slot > 0 && f.slot < self.slots() && f.window == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{fibonacci, narayana, padovan, tribonacci};

    fn tiles(s: &str) -> TileSet {
        s.parse().unwrap()
    }

    fn tiling(n: usize, ps: &[(TileKind, usize)]) -> Tiling {
        Tiling::from_placements(n, ps.iter().map(|&(k, s)| TilePlacement::new(k, s)).collect())
    }

    /// Slot-array backtracking, written independently of `Walk`.
    fn brute_force(n: usize, kinds: &[usize]) -> Vec<Vec<(usize, usize)>> {
        fn rec(
            occ: &mut Vec<bool>,
            k: usize,
            kinds: &[usize],
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            let Some(k) = (k..occ.len()).find(|&s| !occ[s]) else {
                out.push(cur.clone());
                return;
            };
            for &m in kinds {
                let slots: Vec<usize> = (0..m).map(|i| k + 2 * i).collect();
                if slots.iter().any(|&s| s >= occ.len() || occ[s]) {
                    continue;
                }
                slots.iter().for_each(|&s| occ[s] = true);
                cur.push((k, m));
                rec(occ, k + 1, kinds, cur, out);
                cur.pop();
                slots.iter().for_each(|&s| occ[s] = false);
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![false; 2 * n], 0, kinds, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn enumeration_matches_brute_force_in_order() {
        for set in TileSet::all_subsets() {
            for n in 0..=7 {
                let ours: Vec<Vec<(usize, usize)>> = Enumerator::default()
                    .tilings(n, &set)
                    .unwrap()
                    .iter()
                    .map(|t| t.placements().iter().map(|p| (p.start(), p.kind.teeth())).collect())
                    .collect();
                assert_eq!(ours, brute_force(n, &set.teeth()), "n={n} set={set}");
            }
        }
    }

    #[test]
    fn small_boards() {
        let e = Enumerator::default();
        let one = e.tilings(1, &TileSet::ALL).unwrap();
        assert_eq!(one, vec![Tiling::all_half_squares(1)]);
        assert_eq!(one[0].symbolic(), "h²");
        for set in TileSet::all_subsets() {
            let empty = e.tilings(0, &set).unwrap();
            assert_eq!(empty.len(), 1);
            assert!(empty[0].placements().is_empty());
        }
        assert_eq!(e.tilings(2, &TileSet::ALL).unwrap().len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let e = Enumerator::default().with_cap(5);
        assert_eq!(e.tilings(6, &TileSet::ALL), Err(Error::CapExceeded { n: 6, cap: 5 }));
        assert!(e.count(6, &TileSet::ALL).is_err());
        assert!(e.tilings(5, &TileSet::ALL).is_ok());
        let msg = Error::CapExceeded { n: 6, cap: 5 }.to_string();
        assert!(msg.contains('5') && msg.contains("cap"));
    }

    #[test]
    fn documented_counts() {
        assert_eq!(count_tilings(12, &TileSet::ALL), 859_329);
        assert_eq!(count_tilings(5, &tiles("hf")), 64);
        assert_eq!(count_tilings(3, &tiles("fc")), 1);
        assert_eq!(count_tilings(0, &tiles("c")), 1);
        assert_eq!(Enumerator::default().count(3, &tiles("fc")).unwrap(), 1);
    }

    #[test]
    fn transfer_counter_matches_enumeration() {
        let e = Enumerator::default();
        for set in TileSet::all_subsets() {
            let table = count_tilings_table(10, &set);
            for (n, expected) in table.iter().enumerate() {
                assert_eq!(SeqValue::from(e.count(n, &set).unwrap()), *expected, "n={n} set={set}");
                assert_eq!(count_tilings(n, &set), *expected);
            }
        }
    }

    #[test]
    fn restricted_counts_are_squares() {
        let all = count_tilings_table(200, &TileSet::ALL);
        let hf = count_tilings_table(200, &tiles("hf"));
        let hc = count_tilings_table(200, &tiles("hc"));
        let fc = count_tilings_table(200, &tiles("fc"));
        for n in 0..=200 {
            let i = n as i64;
            assert_eq!(all[n], tribonacci(i + 2).square());
            assert_eq!(hf[n], fibonacci(i + 1).square());
            assert_eq!(hc[n], narayana(i).square());
            assert_eq!(fc[n], padovan(i).square());
        }
    }

    #[test]
    fn validate_examples() {
        use TileKind::*;
        assert!(validate(&Tiling::all_half_squares(1)));
        assert!(!validate(&tiling(1, &[(Fence, 0)])));
        assert!(validate(&tiling(2, &[(Fence, 0), (Fence, 1)])));
        // overlap and vacancy
        assert!(!validate(&tiling(1, &[(HalfSquare, 0), (HalfSquare, 0)])));
        assert!(!validate(&tiling(1, &[(HalfSquare, 1)])));
        assert!(validate(&Tiling::from_placements(0, vec![])));
    }

    #[test]
    fn enumerated_tilings_are_valid_and_distinct() {
        let ts = Enumerator::default().tilings(8, &TileSet::ALL).unwrap();
        assert!(ts.iter().all(validate));
        assert!(ts.windows(2).all(|w| w[0].placements() < w[1].placements()));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let seq = Enumerator::default().with_mode(ExecMode::Sequential);
        let par = Enumerator::default().with_mode(ExecMode::Parallel);
        for set in TileSet::all_subsets() {
            assert_eq!(seq.tilings(9, &set).unwrap(), par.tilings(9, &set).unwrap());
        }
        let combs = |p: &[TilePlacement]| p.iter().any(|p| p.kind == TileKind::Comb);
        assert_eq!(
            seq.count_where(10, &TileSet::ALL, combs).unwrap(),
            par.count_where(10, &TileSet::ALL, combs).unwrap()
        );
    }

    #[test]
    fn symbolic_strings() {
        use TileKind::*;
        assert_eq!(tiling(2, &[(Fence, 0), (Fence, 1)]).symbolic(), "f²");
        assert_eq!(
            tiling(2, &[(HalfSquare, 0), (Fence, 1), (HalfSquare, 2)]).symbolic(),
            "hfh"
        );
        assert_eq!(
            tiling(2, &[(Fence, 0), (HalfSquare, 1), (HalfSquare, 3)]).symbolic(),
            "fh²"
        );
        assert_eq!(Tiling::all_half_squares(6).symbolic(), "h¹²");
    }

    #[test]
    fn fault_lines_and_final_slots() {
        use TileKind::*;
        assert_eq!(Tiling::all_half_squares(3).fault_lines(), vec![1, 2]);
        let hfh = tiling(2, &[(HalfSquare, 0), (Fence, 1), (HalfSquare, 2)]);
        assert!(hfh.fault_lines().is_empty());
        assert_eq!(hfh.final_slots(), Some((HalfSquare, Fence)));
        assert_eq!(
            hfh.swap_slots(),
            tiling(2, &[(Fence, 0), (HalfSquare, 1), (HalfSquare, 3)])
        );
    }

    #[test]
    fn tile_set_parsing() {
        assert_eq!(tiles("hfc"), TileSet::ALL);
        assert_eq!(tiles("123"), TileSet::ALL);
        assert_eq!(tiles("fh").to_string(), "hf");
        assert!("".parse::<TileSet>().is_err());
        assert!("hx".parse::<TileSet>().is_err());
    }
}
