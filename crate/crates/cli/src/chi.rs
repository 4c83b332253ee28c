//! Characteristic polynomial methods, with the finite-field count split
//! over threads.

use hypertoric::arrangement::{is_prime, Arrangement, ArrangementError, CharPoly, DEFAULT_POINT_BUDGET};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Poset, falling back to deletion-restriction past the flat cap.
    Auto,
    Poset,
    Delres,
    Ffield,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Poset => "poset",
            Method::Delres => "delres",
            Method::Ffield => "ffield",
        }
    }
}

/// `|F_p^d \ ⋃ H|`, with the first coordinate split into `threads`
/// contiguous ranges. The sum does not depend on the split.
pub fn count_points(arr: &Arrangement, p: u64, threads: usize) -> Result<u128, ArrangementError> {
    arr.check_finite_field(p, DEFAULT_POINT_BUDGET)?;
    let threads = (threads.max(1) as u64).min(p.max(1));
    if threads == 1 {
        return Ok(arr.count_complement_points(p, 0..p));
    }
    let chunk = p.div_ceil(threads);
    let total = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|k| {
                let range = (k * chunk).min(p)..((k + 1) * chunk).min(p);
                s.spawn(move || arr.count_complement_points(p, range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("counting thread panicked"))
            .sum()
    });
    Ok(total)
}

/// Smallest `count` primes strictly above `bound`.
pub fn primes_above(bound: &BigInt, count: usize) -> Result<Vec<u64>, CliError> {
    let start = bound
        .to_u64()
        .and_then(|b| b.checked_add(1))
        .filter(|&b| b < u64::from(u32::MAX))
        .ok_or_else(|| {
            CliError::from(ArrangementError::BudgetExceeded {
                needed: u128::MAX,
                budget: DEFAULT_POINT_BUDGET,
            })
        })?;
    Ok((start.max(2)..).filter(|&q| is_prime(q)).take(count).collect())
}

/// The monic degree-`d` polynomial through `(t_i, y_i)`, for `d` distinct
/// nodes. Fails when the interpolant has a non-integer coefficient.
pub fn interpolate_monic(d: usize, points: &[(u64, BigInt)]) -> Option<CharPoly> {
    assert_eq!(points.len(), d);
    // q(t) = χ(t) − t^d has degree < d; Newton form through the d nodes
    let xs: Vec<BigRational> = points.iter().map(|&(t, _)| BigRational::from_integer(t.into())).collect();
    let mut coef: Vec<BigRational> = points
        .iter()
        .map(|(t, y)| BigRational::from_integer(y - BigInt::from(*t).pow(d as u32)))
        .collect();
    for level in 1..d {
        for i in (level..d).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); d + 1];
    for k in (0..d).rev() {
        // poly = poly · (t − x_k) + coef_k
        let mut next = vec![BigRational::zero(); d + 1];
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < d {
                next[i + 1] += c;
            }
            next[i] -= c * &xs[k];
        }
        next[0] += &coef[k];
        poly = next;
    }
    poly[d] += BigRational::one();
    let mut out = Vec::with_capacity(d + 1);
    for c in poly {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(CharPoly::from_coefficients(out))
}

/// Outcome of a finite-field run.
pub enum FieldResult {
    /// One prime chosen by the user.
    Single {
        prime: u64,
        count: BigInt,
        hadamard_bound: BigInt,
        prime_too_small: bool,
    },
    /// `χ` recovered from the first `d` primes above the minor bound.
    Interpolated { primes: Vec<u64>, chi: CharPoly },
}

pub fn finite_field(arr: &Arrangement, prime: Option<u64>, threads: usize) -> Result<FieldResult, CliError> {
    let bound = arr.hadamard_bound();
    if let Some(p) = prime {
        let count = BigInt::from(count_points(arr, p, threads)?);
        return Ok(FieldResult::Single {
            prime: p,
            count,
            prime_too_small: BigInt::from(p) <= bound,
            hadamard_bound: bound,
        });
    }
    let primes = primes_above(&bound, arr.dim())?;
    let mut points = Vec::with_capacity(primes.len());
    for &p in &primes {
        points.push((p, BigInt::from(count_points(arr, p, threads)?)));
    }
    let chi = interpolate_monic(arr.dim(), &points)
        .ok_or_else(|| CliError::violation("point counts do not interpolate to an integer polynomial"))?;
    Ok(FieldResult::Interpolated { primes, chi })
}

pub fn exact(arr: &Arrangement, method: Method) -> Result<CharPoly, CliError> {
    Ok(match method {
        Method::Auto => arr.char_poly()?,
        Method::Poset => arr.intersection_poset()?.char_poly(),
        Method::Delres => arr.char_poly_deletion_restriction(),
        Method::Ffield => unreachable!("finite field is handled separately"),
    })
}
