//! Exact generators for the tribonacci, Fibonacci, Narayana's cows and
//! Padovan sequences.
//!
//! Every sequence is zero at negative indices, so callers can index freely
//! (`tribonacci(n - 3)` for small `n` is simply `0`). Values are memoized in a
//! process-wide cache that only ever grows.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Serialize, Serializer};

/// An exact, non-negative sequence value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SeqValue(BigUint);

impl SeqValue {
    pub fn zero() -> Self {
        SeqValue(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn square(&self) -> SeqValue {
        SeqValue(&self.0 * &self.0)
    }
}

impl From<BigUint> for SeqValue {
    fn from(v: BigUint) -> Self {
        SeqValue(v)
    }
}

impl From<u64> for SeqValue {
    fn from(v: u64) -> Self {
        SeqValue(BigUint::from(v))
    }
}

impl PartialEq<u64> for SeqValue {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for SeqValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Decimal string, so values of any size survive JSON round-trips.
impl Serialize for SeqValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

/// A linear recurrence `a(n) = sum a(n - lag) + [n == seed]` with `a(n < 0) = 0`.
struct Recurrence {
    lags: &'static [usize],
    seed: usize,
    cache: RwLock<Vec<BigUint>>,
}

impl Recurrence {
    const fn new(lags: &'static [usize], seed: usize) -> Self {
        Recurrence {
            lags,
            seed,
            cache: RwLock::new(Vec::new()),
        }
    }

    fn get(&self, n: i64) -> SeqValue {
        if n < 0 {
            return SeqValue::zero();
        }
        let n = n as usize;
        {
            let cache = self.cache.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = cache.get(n) {
                return SeqValue(v.clone());
            }
        }
        let mut cache = self.cache.write().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= n {
            let i = cache.len();
            let mut next = BigUint::from(u8::from(i == self.seed));
            for &lag in self.lags {
                if let Some(prev) = i.checked_sub(lag) {
                    next += &cache[prev];
                }
            }
            cache.push(next);
        }
        SeqValue(cache[n].clone())
    }
}

fn tribonacci_rec() -> &'static Recurrence {
    static R: OnceLock<Recurrence> = OnceLock::new();
    R.get_or_init(|| Recurrence::new(&[1, 2, 3], 2))
}

fn fibonacci_rec() -> &'static Recurrence {
    static R: OnceLock<Recurrence> = OnceLock::new();
    R.get_or_init(|| Recurrence::new(&[1, 2], 1))
}

fn narayana_rec() -> &'static Recurrence {
    static R: OnceLock<Recurrence> = OnceLock::new();
    R.get_or_init(|| Recurrence::new(&[1, 3], 0))
}

fn padovan_rec() -> &'static Recurrence {
    static R: OnceLock<Recurrence> = OnceLock::new();
    R.get_or_init(|| Recurrence::new(&[2, 3], 0))
}

/// `T(n) = T(n-1) + T(n-2) + T(n-3) + [n = 2]`, `T(n < 2) = 0`.
pub fn tribonacci(n: i64) -> SeqValue {
    tribonacci_rec().get(n)
}

/// `F(n) = F(n-1) + F(n-2)`, `F(0) = 0`, `F(1) = 1`, `F(n < 0) = 0`.
pub fn fibonacci(n: i64) -> SeqValue {
    fibonacci_rec().get(n)
}

/// Narayana's cows: `c(n) = c(n-1) + c(n-3) + [n = 0]`, `c(n < 0) = 0`.
pub fn narayana(n: i64) -> SeqValue {
    narayana_rec().get(n)
}

/// Padovan: `p(n) = p(n-2) + p(n-3) + [n = 0]`, `p(n < 0) = 0`.
pub fn padovan(n: i64) -> SeqValue {
    padovan_rec().get(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    Tribonacci,
    Fibonacci,
    Narayana,
    Padovan,
}

impl Sequence {
    pub const ALL: [Sequence; 4] = [
        Sequence::Tribonacci,
        Sequence::Fibonacci,
        Sequence::Narayana,
        Sequence::Padovan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Tribonacci => "tribonacci",
            Sequence::Fibonacci => "fibonacci",
            Sequence::Narayana => "narayana",
            Sequence::Padovan => "padovan",
        }
    }

    pub fn from_name(name: &str) -> Option<Sequence> {
        Sequence::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn get(self, n: i64) -> SeqValue {
        match self {
            Sequence::Tribonacci => tribonacci(n),
            Sequence::Fibonacci => fibonacci(n),
            Sequence::Narayana => narayana(n),
            Sequence::Padovan => padovan(n),
        }
    }

    /// Values at indices `0..=n_max` as signed integers, for hot loops.
    pub fn table(self, n_max: usize) -> Vec<BigInt> {
        // Warm the cache once so the loop below only takes read locks.
        self.get(n_max as i64);
        (0..=n_max as i64).map(|i| self.get(i).to_bigint()).collect()
    }
}
