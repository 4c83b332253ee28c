//! Integer polynomials in one variable `t`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial; `coefficients[i]` multiplies `t^i`. Trailing
/// zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CharPoly {
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coefficients(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        CharPoly { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        CharPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = alloc::vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        CharPoly { coefficients: c }
    }

    /// `∏ (t − r)` over the given roots.
    pub fn from_roots<I: IntoIterator<Item = i64>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::from_i64(&[-r, 1]))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coefficients.is_empty() {
            return self.clone();
        }
        let mut c = alloc::vec![BigInt::zero(); k];
        c.extend(self.coefficients.iter().cloned());
        CharPoly { coefficients: c }
    }

    /// Exact division by `t^k`, or `None` if some low coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coefficients.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coefficients(
            self.coefficients.iter().skip(k).cloned().collect(),
        ))
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;

    fn mul(self, rhs: &CharPoly) -> CharPoly {
        if self.coefficients.is_empty() || rhs.coefficients.is_empty() {
            return CharPoly::zero();
        }
        let mut c = alloc::vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        CharPoly::from_coefficients(c)
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;

    fn sub(self, rhs: &CharPoly) -> CharPoly {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let c = (0..len)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        CharPoly::from_coefficients(c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&alloc::format!(" {sign} "));
            }
            let a = c.abs();
            let unit = a.is_one() && k > 0;
            if !unit {
                out.push_str(&alloc::format!("{a}"));
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&alloc::format!("t^{k}")),
            }
        }
        f.write_str(&out)
    }
}
