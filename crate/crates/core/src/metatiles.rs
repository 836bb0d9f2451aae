//! Metatiles: the unsplittable pieces a tiling falls into when it is cut at
//! every fault line.
//!
//! Besides decomposition and enumeration this module carries the metatile
//! counts. `mu(l)` is the number of mixed metatiles of length `l`, and
//! `mu_sigma(l, {a, b})` is the number that end with slot contents `ab`.
//! Each count has a closed form and a recurrence, and brute force checks both.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::board::{segment_starts, Walk};
use crate::sequences::tribonacci;
use crate::series::Series;
use crate::{Enumerator, Error, Result, SeqValue, TileKind, TilePlacement, TileSet, Tiling};

/// Kinds owning the final left and right slots of a metatile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaSignature {
    pub left: TileKind,
    pub right: TileKind,
}

impl SigmaSignature {
    pub fn new(left: TileKind, right: TileKind) -> Self {
        SigmaSignature { left, right }
    }

    pub fn swapped(self) -> Self {
        SigmaSignature::new(self.right, self.left)
    }

    /// Parses two digits, e.g. `"12"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("signature {s:?} must be two digits from 1-3"));
        let mut it = s.chars().map(|c| {
            c.to_digit(10)
                .and_then(|d| TileKind::from_teeth(d as usize))
                .ok_or_else(bad)
        });
        match (it.next(), it.next(), it.next()) {
            (Some(l), Some(r), None) => Ok(SigmaSignature::new(l?, r?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for SigmaSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.left.teeth(), self.right.teeth())
    }
}

impl Serialize for SigmaSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A tiling of an `l`-board with no fault line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Metatile {
    body: Tiling,
    sigma: SigmaSignature,
    mixed: bool,
}

impl Metatile {
    pub fn new(body: Tiling) -> Result<Metatile> {
        if body.is_empty() {
            return Err(Error::EmptyMetatile);
        }
        body.ensure_valid()?;
        if !body.fault_lines().is_empty() {
            return Err(Error::InvalidTiling(format!(
                "{} splits at cell boundaries {:?}",
                body.symbolic(),
                body.fault_lines()
            )));
        }
        Ok(Self::from_unsplittable(body))
    }

    fn from_unsplittable(body: Tiling) -> Metatile {
        let (left, right) = body.final_slots().expect("valid non-empty tiling");
        let first = body.placements()[0].kind;
        let mixed = body.placements().iter().any(|p| p.kind != first);
        Metatile {
            body,
            sigma: SigmaSignature { left, right },
            mixed,
        }
    }

    pub fn body(&self) -> &Tiling {
        &self.body
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma(&self) -> SigmaSignature {
        self.sigma
    }

    pub fn is_mixed(&self) -> bool {
        self.mixed
    }

    pub fn uses(&self, kind: TileKind) -> bool {
        self.body.uses(kind)
    }

    pub fn symbolic(&self) -> String {
        self.body.symbolic()
    }
}

/// Splits a valid tiling at its fault lines. Each part is re-based so that its
/// first slot is `0`.
pub fn decompose(t: &Tiling) -> Result<Vec<Metatile>> {
    t.ensure_valid()?;
    Ok(split_placements(t.len(), t.placements())
        .into_iter()
        .map(|(_, body)| Metatile::from_unsplittable(body))
        .collect())
}

/// `(first cell, re-based body)` for every fault-free segment.
pub(crate) fn split_placements(n: usize, placements: &[TilePlacement]) -> Vec<(usize, Tiling)> {
    let starts: Vec<usize> = segment_starts(placements).collect();
    let mut out = Vec::with_capacity(starts.len());
    for (i, &from) in starts.iter().enumerate() {
        let to = starts.get(i + 1).copied().unwrap_or(placements.len());
        let cell = placements[from].start() / 2;
        let end_cell = starts.get(i + 1).map_or(n, |&next| placements[next].start() / 2);
        let body = placements[from..to]
            .iter()
            .map(|p| TilePlacement::new(p.kind, p.start() - 2 * cell))
            .collect();
        out.push((cell, Tiling::from_sorted(end_cell - cell, body)));
    }
    out
}

/// Lays metatiles end to end.
pub fn concatenate(parts: &[Metatile]) -> Tiling {
    let mut offset = 0;
    let mut placements = Vec::new();
    for m in parts {
        placements.extend(
            m.body
                .placements()
                .iter()
                .map(|p| TilePlacement::new(p.kind, p.start() + 2 * offset)),
        );
        offset += m.len();
    }
    Tiling::from_sorted(offset, placements)
}

/// Exchanges the two slots of every cell. Mixed metatiles pair up under this
/// map; unmixed ones are fixed.
pub fn swap_involution(m: &Metatile) -> Metatile {
    // Swapping slots never changes which cell boundaries a tile straddles,
    // so the image is again a single metatile.
    Metatile::from_unsplittable(m.body.swap_slots())
}

impl Enumerator {
    /// All metatiles of length `l` built from `tiles`, in canonical order.
    pub fn metatiles(&self, l: usize, tiles: &TileSet) -> Result<Vec<Metatile>> {
        if l == 0 {
            return Err(Error::EmptyMetatile);
        }
        self.check_cap(l)?;
        Ok(self
            .collect(Walk::new(l, tiles, true))
            .into_iter()
            .map(Metatile::from_unsplittable)
            .collect())
    }
}

pub fn enumerate_metatiles(l: usize, tiles: &TileSet) -> Result<Vec<Metatile>> {
    Enumerator::from_env()?.metatiles(l, tiles)
}

/// Tribonacci-type recurrence `v(i) = v(i-1) + v(i-2) + v(i-3) + forcing(i)`
/// with `v(i < 0) = 0`, evaluated at `l`.
fn forced_tribonacci(l: i64, forcing: &[(i64, u32)]) -> SeqValue {
    if l < 0 {
        return SeqValue::zero();
    }
    let mut v: Vec<BigUint> = Vec::with_capacity(l as usize + 1);
    for i in 0..=l {
        let mut x = BigUint::from(forcing.iter().filter(|&&(at, _)| at == i).map(|&(_, c)| c).sum::<u32>());
        for lag in 1..=3 {
            if let Some(j) = (i as usize).checked_sub(lag) {
                x += &v[j];
            }
        }
        v.push(x);
    }
    SeqValue::from(v.pop().unwrap_or_default())
}

/// Number of mixed metatiles of length `l` over `{h, f, c}`:
/// `4(T(l) + T(l-1)) - 2[l = 2]`, and `0` for `l < 2`.
pub fn mu(l: i64) -> SeqValue {
    if l < 2 {
        return SeqValue::zero();
    }
    let four_sum = (tribonacci(l).into_inner() + tribonacci(l - 1).into_inner()) * 4u32;
    let correction = BigUint::from(if l == 2 { 2u32 } else { 0 });
    SeqValue::from(four_sum - correction)
}

/// `mu(l)` from its recurrence
/// `mu(l) = mu(l-1) + mu(l-2) + mu(l-3) + 6[l=3] + 2([l=2] + [l=4] + [l=5])`.
pub fn mu_recurrence(l: i64) -> SeqValue {
    forced_tribonacci(l, &[(2, 2), (3, 6), (4, 2), (5, 2)])
}

fn ordered_digits(a: TileKind, b: TileKind) -> Result<(TileKind, TileKind)> {
    if a == b {
        return Err(Error::RepeatedDigit(a.teeth() as u8));
    }
    Ok((a.min(b), a.max(b)))
}

/// Number of length-`l` metatiles ending in slot contents `ab` (equivalently
/// `ba`), for distinct digits:
///
/// - `{1,2}`: `T(l) + T(l-2)`
/// - `{1,3}`: `2 T(l-1)`
/// - `{2,3}`: `T(l-1) + T(l-3)`
pub fn mu_sigma(l: i64, a: TileKind, b: TileKind) -> Result<SeqValue> {
    use TileKind::*;
    let t = |k: i64| tribonacci(k).into_inner();
    let v = match ordered_digits(a, b)? {
        (HalfSquare, Fence) => t(l) + t(l - 2),
        (HalfSquare, Comb) => t(l - 1) * 2u32,
        _ => t(l - 1) + t(l - 3),
    };
    Ok(SeqValue::from(v))
}

/// `mu_sigma` from the per-signature recurrences.
pub fn mu_sigma_recurrence(l: i64, a: TileKind, b: TileKind) -> Result<SeqValue> {
    use TileKind::*;
    let forcing: &[(i64, u32)] = match ordered_digits(a, b)? {
        (HalfSquare, Fence) => &[(2, 1), (4, 1)],
        (HalfSquare, Comb) => &[(3, 2)],
        _ => &[(3, 1), (5, 1)],
    };
    Ok(forced_tribonacci(l, forcing))
}

/// Expands both rational forms of the generating function of `mu` to
/// `order` coefficients and checks them against each other and against [`mu`].
pub fn mu_series_check(order: usize) -> bool {
    let den = Series::from_terms(order, &[(0, 1), (1, -1), (2, -1), (3, -1)]);
    let from_recurrence = Series::from_terms(order, &[(2, 2), (3, 6), (4, 2), (5, 2)]).div(&den);
    let from_tribonacci = Series::from_terms(order, &[(2, 4), (3, 4)])
        .div(&den)
        .sub(&Series::from_terms(order, &[(2, 2)]));
    from_recurrence == from_tribonacci && (0..order).all(|l| from_recurrence.coeff(l) == mu(l as i64).to_bigint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{narayana, padovan};
    use std::collections::BTreeMap;
    use TileKind::*;

    fn tiling(n: usize, ps: &[(TileKind, usize)]) -> Tiling {
        Tiling::from_placements(n, ps.iter().map(|&(k, s)| TilePlacement::new(k, s)).collect())
    }

    #[test]
    fn decompose_examples() {
        let h2 = decompose(&Tiling::all_half_squares(1)).unwrap();
        assert_eq!(h2.len(), 1);
        assert_eq!(
            (h2[0].len(), h2[0].sigma().to_string(), h2[0].is_mixed()),
            (1, "11".into(), false)
        );

        let bifence = decompose(&tiling(2, &[(Fence, 0), (Fence, 1)])).unwrap();
        assert_eq!(bifence.len(), 1);
        assert_eq!((bifence[0].len(), bifence[0].sigma().to_string()), (2, "22".into()));

        let four = decompose(&Tiling::all_half_squares(2)).unwrap();
        assert_eq!(four.iter().map(Metatile::len).collect::<Vec<_>>(), vec![1, 1]);

        assert!(decompose(&tiling(1, &[(Fence, 0)])).is_err());
    }

    #[test]
    fn decompose_concatenate_round_trip() {
        let e = Enumerator::default();
        for t in e.tilings(9, &TileSet::ALL).unwrap() {
            let parts = decompose(&t).unwrap();
            assert_eq!(concatenate(&parts), t);
            for m in &parts {
                assert!(m.body().fault_lines().is_empty());
                assert_eq!(Metatile::new(m.body().clone()).as_ref(), Ok(m));
            }
        }
    }

    /// Reference: filter the full enumeration by the no-fault predicate.
    fn filtered(l: usize, tiles: &TileSet) -> Vec<Tiling> {
        Enumerator::default()
            .tilings(l, tiles)
            .unwrap()
            .into_iter()
            .filter(|t| t.fault_lines().is_empty())
            .collect()
    }

    #[test]
    fn pruned_enumeration_equals_filtered() {
        for set in TileSet::all_subsets() {
            for l in 1..=9 {
                let pruned: Vec<Tiling> = Enumerator::default()
                    .metatiles(l, &set)
                    .unwrap()
                    .into_iter()
                    .map(|m| m.body().clone())
                    .collect();
                assert_eq!(pruned, filtered(l, &set), "l={l} set={set}");
            }
        }
    }

    #[test]
    fn metatile_counts_by_length() {
        let e = Enumerator::default();
        assert_eq!(e.metatiles(1, &TileSet::ALL).unwrap().len(), 1);
        assert_eq!(e.metatiles(2, &TileSet::ALL).unwrap().len(), 3);
        assert_eq!(e.metatiles(3, &TileSet::ALL).unwrap().len(), 9);
        let four = e.metatiles(4, &TileSet::ALL).unwrap();
        assert_eq!(four.iter().filter(|m| m.is_mixed()).count(), 12);
        assert_eq!(four.iter().filter(|m| !m.is_mixed()).count(), 0);
        assert_eq!(e.metatiles(0, &TileSet::ALL), Err(Error::EmptyMetatile));
    }

    #[test]
    fn involution_examples() {
        let h2 = Metatile::new(Tiling::all_half_squares(1)).unwrap();
        assert_eq!(swap_involution(&h2), h2);
        let hfh = Metatile::new(tiling(2, &[(HalfSquare, 0), (Fence, 1), (HalfSquare, 2)])).unwrap();
        let partner = swap_involution(&hfh);
        assert_eq!(partner.symbolic(), "fh²");
        assert_eq!(partner.sigma(), hfh.sigma().swapped());
        let c2 = Metatile::new(tiling(3, &[(Comb, 0), (Comb, 1)])).unwrap();
        assert_eq!(swap_involution(&c2), c2);
    }

    #[test]
    fn involution_properties() {
        for l in 1..=10 {
            for m in Enumerator::default().metatiles(l, &TileSet::ALL).unwrap() {
                let s = swap_involution(&m);
                assert_eq!(swap_involution(&s), m);
                assert_eq!(s == m, !m.is_mixed());
                assert_eq!(s.sigma(), m.sigma().swapped());
                assert_eq!(s.len(), m.len());
            }
        }
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(1), 0);
        assert_eq!(mu(2), 2);
        assert_eq!(mu(9), 272);
        let listed = [2u64, 8, 12, 24, 44, 80, 148, 272, 500];
        for (i, v) in listed.iter().enumerate() {
            assert_eq!(mu(i as i64 + 2), *v);
        }
        for l in -5..=300 {
            assert_eq!(mu(l), mu_recurrence(l), "l={l}");
        }
    }

    #[test]
    fn mu_sigma_values() {
        assert_eq!(mu_sigma(4, HalfSquare, Fence).unwrap(), 3);
        assert_eq!(mu_sigma(3, HalfSquare, Comb).unwrap(), 2);
        assert_eq!(mu_sigma(2, Fence, Comb).unwrap(), 0);
        assert_eq!(mu_sigma(2, Fence, Fence), Err(Error::RepeatedDigit(2)));
        assert_eq!(mu_sigma(4, Fence, HalfSquare), mu_sigma(4, HalfSquare, Fence));
        for l in -3..=300 {
            let pairs = [(HalfSquare, Fence), (HalfSquare, Comb), (Fence, Comb)];
            let mut sum = BigUint::default();
            for (a, b) in pairs {
                let closed = mu_sigma(l, a, b).unwrap();
                assert_eq!(closed, mu_sigma_recurrence(l, a, b).unwrap(), "l={l} {a:?}{b:?}");
                sum += closed.into_inner();
            }
            assert_eq!(SeqValue::from(sum * 2u32), mu(l), "l={l}");
        }
    }

    #[test]
    fn brute_force_sigma_classes() {
        for l in 1..=11usize {
            let mut by_sigma: BTreeMap<SigmaSignature, u64> = BTreeMap::new();
            let ms = Enumerator::default().metatiles(l, &TileSet::ALL).unwrap();
            for m in ms.iter().filter(|m| m.is_mixed()) {
                *by_sigma.entry(m.sigma()).or_default() += 1;
            }
            assert_eq!(SeqValue::from(by_sigma.values().sum::<u64>()), mu(l as i64));
            for (a, b) in [(HalfSquare, Fence), (HalfSquare, Comb), (Fence, Comb)] {
                let ab = by_sigma.get(&SigmaSignature::new(a, b)).copied().unwrap_or(0);
                let ba = by_sigma.get(&SigmaSignature::new(b, a)).copied().unwrap_or(0);
                assert_eq!(ab, ba);
                assert_eq!(mu_sigma(l as i64, a, b).unwrap(), ab, "l={l} {a:?}{b:?}");
            }
            // mixed metatiles never repeat a digit in sigma
            assert!(by_sigma.keys().all(|s| s.left != s.right));
        }
    }

    #[test]
    fn restricted_mixed_counts() {
        let e = Enumerator::default();
        let mixed = |l: usize, s: &str| {
            e.metatiles(l, &s.parse().unwrap())
                .unwrap()
                .iter()
                .filter(|m| m.is_mixed())
                .count() as u64
        };
        for l in 3..=12usize {
            let i = l as i64;
            assert_eq!(mixed(l, "hf"), 2);
            assert_eq!(
                SeqValue::from(mixed(l, "hc")),
                SeqValue::from(padovan(i - 1).into_inner() * 2u32)
            );
            assert_eq!(
                SeqValue::from(mixed(l, "fc")),
                SeqValue::from(narayana(i - 5).into_inner() * 2u32)
            );
        }
    }

    #[test]
    fn series_check() {
        assert!(mu_series_check(1));
        assert!(mu_series_check(10));
        assert!(mu_series_check(50));
        assert!(mu_series_check(0));
    }

    #[test]
    fn sigma_parsing() {
        assert_eq!(
            SigmaSignature::parse("12").unwrap(),
            SigmaSignature::new(HalfSquare, Fence)
        );
        assert!(SigmaSignature::parse("14").is_err());
        assert!(SigmaSignature::parse("1").is_err());
        assert!(SigmaSignature::parse("123").is_err());
    }
}
