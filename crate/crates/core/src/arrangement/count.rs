//! Characteristic polynomials without the full poset: deletion–restriction,
//! and point counts of the complement over a finite field.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Arrangement, ArrangementError, CharPoly};

/// Default cap on `p^d`.
pub const DEFAULT_POINT_BUDGET: u128 = 100_000_000;

/// Result of counting `F_p`-points of the complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldCount {
    pub prime: u64,
    /// `|F_p^d \ ⋃ H|`.
    pub count: BigInt,
    /// Every nonzero maximal minor of the normals is at most this.
    pub hadamard_bound: BigInt,
    /// `p ≤ hadamard_bound`: the count may differ from `χ(p)`.
    pub prime_too_small: bool,
}

/// Trial division; primes here stay below `u32::MAX`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q.saturating_mul(q) <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Arrangement {
    /// `χ(t) = χ(H \ H_k) − χ(H^{H_k})`, memoized on the canonical normal
    /// set of each intermediate arrangement.
    pub fn char_poly_deletion_restriction(&self) -> CharPoly {
        let mut memo = BTreeMap::new();
        delres(self, &mut memo)
    }

    /// Checks that `p` is prime and `p^d` fits in `budget`.
    pub fn check_finite_field(&self, p: u64, budget: u128) -> Result<(), ArrangementError> {
        if !is_prime(p) {
            return Err(ArrangementError::NotPrime(p));
        }
        let needed = (p as u128).checked_pow(self.dim() as u32);
        match needed {
            Some(n) if n <= budget && p <= u32::MAX as u64 => Ok(()),
            _ => Err(ArrangementError::BudgetExceeded {
                needed: needed.unwrap_or(u128::MAX),
                budget,
            }),
        }
    }

    /// Points of `F_p^d` off every hyperplane whose first coordinate lies in
    /// `first`. The caller must have run [`Arrangement::check_finite_field`].
    pub fn count_complement_points(&self, p: u64, first: Range<u64>) -> u128 {
        let d = self.dim();
        if d == 0 {
            return u128::from(!first.is_empty());
        }
        let modp = BigInt::from(p);
        let normals: Vec<Vec<u64>> = self
            .normals()
            .iter()
            .map(|n| {
                n.iter()
                    .map(|x| x.mod_floor(&modp).to_u64().expect("reduced below p"))
                    .collect()
            })
            .collect();
        // reducing mod p may turn a normal into zero, which removes every point
        if normals.iter().any(|n| n.iter().all(|&x| x == 0)) {
            return 0;
        }
        let inverses: Vec<u64> = normals
            .iter()
            .map(|n| if n[d - 1] == 0 { 0 } else { pow_mod(n[d - 1], p - 2, p) })
            .collect();
        let mut state = FieldWalk {
            p,
            d,
            normals: &normals,
            inverses: &inverses,
            forbidden: alloc::vec![0u64; p as usize],
            stamp: 0,
        };
        let partial = alloc::vec![0u64; normals.len()];
        if d == 1 {
            return first
                .filter(|&x| x != 0 || normals.is_empty())
                .count() as u128;
        }
        let mut total = 0u128;
        for x in first {
            let next: Vec<u64> = partial
                .iter()
                .zip(&normals)
                .map(|(s, n)| (s + n[0] * x) % p)
                .collect();
            total += state.walk(1, &next);
        }
        total
    }

    /// `|F_p^d \ ⋃ H|`, which equals `χ(p)` once `p` exceeds every maximal
    /// minor. A too-small prime is reported rather than refused.
    pub fn char_poly_finite_field(
        &self,
        p: u64,
        budget: u128,
    ) -> Result<FiniteFieldCount, ArrangementError> {
        self.check_finite_field(p, budget)?;
        let count = self.count_complement_points(p, 0..p);
        let hadamard_bound = self.hadamard_bound();
        Ok(FiniteFieldCount {
            prime: p,
            count: BigInt::from(count),
            prime_too_small: BigInt::from(p) <= hadamard_bound,
            hadamard_bound,
        })
    }
}

struct FieldWalk<'a> {
    p: u64,
    d: usize,
    normals: &'a [Vec<u64>],
    inverses: &'a [u64],
    forbidden: Vec<u64>,
    stamp: u64,
}

impl FieldWalk<'_> {
    fn walk(&mut self, level: usize, partial: &[u64]) -> u128 {
        let p = self.p;
        if level + 1 == self.d {
            self.stamp += 1;
            let mut blocked = 0u64;
            for (h, n) in self.normals.iter().enumerate() {
                let c = n[level];
                if c == 0 {
                    if partial[h] == 0 {
                        return 0;
                    }
                    continue;
                }
                let x = (p - partial[h]) % p * self.inverses[h] % p;
                if self.forbidden[x as usize] != self.stamp {
                    self.forbidden[x as usize] = self.stamp;
                    blocked += 1;
                }
            }
            return u128::from(p - blocked);
        }
        let mut total = 0;
        let mut next = alloc::vec![0u64; partial.len()];
        for x in 0..p {
            for (h, n) in self.normals.iter().enumerate() {
                next[h] = (partial[h] + n[level] * x) % p;
            }
            total += self.walk(level + 1, &next);
        }
        total
    }
}

type Memo = BTreeMap<(usize, Vec<Vec<BigInt>>), CharPoly>;

fn delres(arr: &Arrangement, memo: &mut Memo) -> CharPoly {
    let d = arr.dim();
    let m = arr.len();
    if m == 0 {
        return CharPoly::monomial(d);
    }
    if arr.rank() == m {
        let t_minus_one = CharPoly::from_i64(&[-1, 1]);
        let mut out = CharPoly::monomial(d - m);
        for _ in 0..m {
            out = &out * &t_minus_one;
        }
        return out;
    }
    let mut key_normals = arr.normals().to_vec();
    key_normals.sort();
    let key = (d, key_normals);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let k = m - 1;
    let deleted = delres(&arr.deletion(k), memo);
    let restricted = delres(&arr.restriction(k), memo);
    let out = &deleted - &restricted;
    memo.insert(key, out.clone());
    out
}
