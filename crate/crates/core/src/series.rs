//! Truncated integer power series, just enough to expand rational generating
//! functions whose denominator has constant term 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Polynomial from `(exponent, coefficient)` terms, truncated to `order` coefficients.
    pub fn from_terms(order: usize, terms: &[(usize, i64)]) -> Series {
        let mut coeffs = vec![BigInt::zero(); order];
        for &(e, c) in terms {
            if e < order {
                coeffs[e] += c;
            }
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// `self / den`, requiring `den[0] == 1` so the quotient stays integral.
    pub fn div(&self, den: &Series) -> Series {
        assert!(
            self.order() == 0 || den.coeff(0).is_one(),
            "denominator must have constant term 1"
        );
        let mut q: Vec<BigInt> = Vec::with_capacity(self.order());
        for e in 0..self.order() {
            let mut c = self.coeffs[e].clone();
            for k in 1..=e.min(den.order().saturating_sub(1)) {
                c -= &den.coeffs[k] * &q[e - k];
            }
            q.push(c);
        }
        Series { coeffs: q }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..order).map(|e| &self.coeffs[e] - &other.coeffs[e]).collect(),
        }
    }
}
