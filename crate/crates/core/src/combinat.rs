//! Exact integer combinatorics shared by every counter.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type Count = BigUint;

/// Euler's totient.
pub fn totient(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::domain("totient(0) is undefined"));
    }
    let mut m = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// Positive divisors of `m` in ascending order.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::domain("divisors(0) is undefined"));
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            low.push(d);
            if d != m / d {
                high.push(m / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Binomial coefficient, total over all integer arguments.
///
/// Outside `0 <= b <= a` the value is zero; `binom(0, 0) = 1`.
pub fn binom(a: i64, b: i64) -> Count {
    if a < 0 || b < 0 || b > a {
        return Count::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = Count::one();
    // acc stays equal to binom(a - b + i, i) after each step, so the division is exact.
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// Greatest common divisor of a non-empty slice, with `gcd(0, x) = x`.
pub fn gcd_many(values: &[u64]) -> Result<u64> {
    match values.split_first() {
        None => Err(Error::domain("gcd of an empty sequence")),
        Some((first, rest)) => Ok(rest.iter().fold(*first, |g, v| g.gcd(v))),
    }
}

/// Stream of ordered `k`-tuples of positive integers summing to `n`.
///
/// Tuples come out in lexicographic order. `compositions(0, 0)` yields a
/// single empty tuple; `n < k` yields nothing.
pub fn compositions(n: u64, k: usize) -> Compositions {
    let next = if k == 0 {
        (n == 0).then(Vec::new)
    } else if n < k as u64 {
        None
    } else {
        let mut first = vec![1; k];
        first[k - 1] = n - (k as u64 - 1);
        Some(first)
    };
    Compositions { next }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let k = current.len();
        if k >= 2 {
            // Rightmost position whose suffix can give up one unit.
            let mut suffix = current[k - 1];
            let mut i = k - 1;
            while i > 0 {
                i -= 1;
                let suffix_len = (k - 1 - i) as u64;
                if suffix > suffix_len {
                    let mut succ = current.clone();
                    succ[i] += 1;
                    for slot in succ.iter_mut().take(k - 1).skip(i + 1) {
                        *slot = 1;
                    }
                    succ[k - 1] = suffix - 1 - (suffix_len - 1);
                    self.next = Some(succ);
                    break;
                }
                suffix += current[i];
            }
        }
        Some(current)
    }
}
