//! Weighted necklaces and bracelets with a single colour family.
//!
//! A `k`-tuple of positive integers summing to `n` is a necklace up to
//! rotation and a bracelet up to rotation and reversal. The counts are
//! Pólya coefficients of the cyclic and dihedral cycle indices evaluated
//! at `f(t) = t/(1-t)`.

use num_integer::Integer;
use num_traits::Zero;

use crate::combinat::{binom, divisors, totient, Count};
use crate::error::{Error, Result};

/// Total weight `n` and bead count `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NkParams {
    pub n: u64,
    pub k: u64,
}

impl NkParams {
    pub fn new(n: u64, k: u64) -> Self {
        NkParams { n, k }
    }
}

/// `Σ_{d | gcd(n,k)} φ(d)·C(n/d − 1, k/d − 1)`, i.e. `k·N(n,k)`.
fn rotation_fixed_sum(n: u64, k: u64) -> Count {
    let g = n.gcd(&k);
    divisors(g)
        .expect("gcd of positive arguments")
        .into_iter()
        .map(|d| {
            let phi = totient(d).expect("positive divisor");
            binom((n / d) as i64 - 1, (k / d) as i64 - 1) * phi
        })
        .sum()
}

/// Number of necklaces `N(n,k)`; zero when `k = 0` or `n < k`.
pub fn necklace_count(p: NkParams) -> Count {
    let NkParams { n, k } = p;
    if k == 0 || n < k {
        return Count::zero();
    }
    let sum = rotation_fixed_sum(n, k);
    let (q, r) = sum.div_rem(&Count::from(k));
    assert!(r.is_zero(), "necklace sum for ({n},{k}) not divisible by k");
    q
}

/// Twice the reflection term `h(n,k)`.
///
/// The binomial is picked by the parities of `n` and `k`.
pub fn h_single(p: NkParams) -> Result<Count> {
    let NkParams { n, k } = p;
    if n == 0 || k == 0 {
        return Err(Error::domain(format!("h({n},{k}) needs n >= 1 and k >= 1")));
    }
    let (n, k) = (n as i64, k as i64);
    let value = match (n % 2, k % 2) {
        (1, 1) => binom((n - 1) / 2, (k - 1) / 2),
        (0, 1) => binom(n / 2 - 1, (k - 1) / 2),
        (1, 0) => binom((n - 1) / 2, k / 2),
        _ => binom(n / 2, k / 2),
    };
    Ok(value)
}

/// Number of bracelets `B(n,k) = (N(n,k) + 2h(n,k)) / 2`.
pub fn bracelet_count(p: NkParams) -> Count {
    if p.k == 0 || p.n < p.k {
        return Count::zero();
    }
    let total = necklace_count(p) + h_single(p).expect("n, k >= 1");
    let (q, r) = total.div_rem(&Count::from(2u32));
    assert!(r.is_zero(), "N + 2h is odd for ({},{})", p.n, p.k);
    q
}
