//! Two-coloured weighted bracelets `B(n1,k1;n2,k2)`.
//!
//! Beads come in two families: `k1` positive beads with weights summing to
//! `n1` and `k2` negative beads with weights summing to `n2`. Two tuples are
//! identified under the dihedral group acting on the `k = k1 + k2` positions.

use num_integer::Integer;
use num_traits::Zero;

use crate::combinat::{binom, divisors, gcd_many, totient, Count};
use crate::error::{Error, Result};
use crate::necklace::{bracelet_count, NkParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicolorParams {
    pub n1: u64,
    pub k1: u64,
    pub n2: u64,
    pub k2: u64,
}

impl BicolorParams {
    /// Checks `n1 >= k1`, `n2 >= k2` and that an empty family has no weight.
    pub fn new(n1: u64, k1: u64, n2: u64, k2: u64) -> Result<Self> {
        if n1 < k1 || n2 < k2 {
            return Err(Error::domain(format!(
                "bicolor parameters ({n1},{k1};{n2},{k2}) need n1 >= k1 and n2 >= k2"
            )));
        }
        if (k1 == 0 && n1 != 0) || (k2 == 0 && n2 != 0) {
            return Err(Error::domain(format!(
                "bicolor parameters ({n1},{k1};{n2},{k2}) give weight to an empty family"
            )));
        }
        Ok(BicolorParams { n1, k1, n2, k2 })
    }

    pub fn k(&self) -> u64 {
        self.k1 + self.k2
    }

    /// The same parameters with the two colour families exchanged.
    pub fn swapped(&self) -> Self {
        BicolorParams { n1: self.n2, k1: self.k2, n2: self.n1, k2: self.k1 }
    }
}

fn half(x: i64) -> i64 {
    assert!(x % 2 == 0, "non-integral binomial argument {x}/2");
    x / 2
}

/// Four times the reflection term, kept in integers.
fn h_bicolor_quadruple(p: BicolorParams) -> Count {
    let (n1, k1, n2, k2) = (p.n1 as i64, p.k1 as i64, p.n2 as i64, p.k2 as i64);
    let k = k1 + k2;
    let c = binom;
    // Cases carrying weight 1/2 in h; doubled once more for 4h.
    let halved = |v: Count| v * 2u32;

    match (k1 % 2, k2 % 2, n1 % 2, n2 % 2) {
        // k odd, k1 odd, k2 even.
        (1, 0, _, 1) => Count::zero(),
        (1, 0, 1, 0) => halved(
            c(half(k - 1), half(k2)) * c(half(n1 - 1), half(k1 - 1)) * c(half(n2) - 1, half(k2) - 1),
        ),
        (1, 0, 0, 0) => halved(
            c(half(k - 1), half(k2)) * c(half(n1) - 1, half(k1 - 1)) * c(half(n2) - 1, half(k2) - 1),
        ),
        // k odd, k1 even, k2 odd.
        (0, 1, 1, _) => Count::zero(),
        (0, 1, 0, 1) => halved(
            c(half(k - 1), half(k1)) * c(half(n1) - 1, half(k1) - 1) * c(half(n2 - 1), half(k2 - 1)),
        ),
        (0, 1, 0, 0) => halved(
            c(half(k - 1), half(k1)) * c(half(n1) - 1, half(k1) - 1) * c(half(n2) - 1, half(k2 - 1)),
        ),
        // k even, k1 and k2 odd.
        (1, 1, 1, 1) => halved(
            c(half(k) - 1, half(k1 - 1)) * c(half(n1 - 1), half(k1 - 1)) * c(half(n2 - 1), half(k2 - 1)),
        ),
        (1, 1, 0, 1) => halved(
            c(half(k) - 1, half(k1 - 1)) * c(half(n1) - 1, half(k1 - 1)) * c(half(n2 - 1), half(k2 - 1)),
        ),
        (1, 1, 1, 0) => halved(
            c(half(k) - 1, half(k1 - 1)) * c(half(n1 - 1), half(k1 - 1)) * c(half(n2) - 1, half(k2 - 1)),
        ),
        (1, 1, 0, 0) => halved(
            c(half(k) - 1, half(k1 - 1)) * c(half(n1) - 1, half(k1 - 1)) * c(half(n2) - 1, half(k2 - 1)),
        ),
        // k, k1, k2 all even.
        (0, 0, 0, 0) => {
            let (hk, hk1, hk2, hn1, hn2) = (half(k), half(k1), half(k2), half(n1), half(n2));
            c(hk - 1, hk2) * c(hn2 - 1, hk2 - 1) * (c(hn1, hk1) + c(hn1 - 1, hk1))
                + c(hk - 1, hk1) * c(hn1 - 1, hk1 - 1) * (c(hn2, hk2) + c(hn2 - 1, hk2))
                + c(hk, hk1) * c(hn1 - 1, hk1 - 1) * c(hn2 - 1, hk2 - 1)
        }
        (0, 0, 0, 1) => halved(
            c(half(k) - 1, half(k1)) * c(half(n1) - 1, half(k1) - 1) * c(half(n2 - 1), half(k2)),
        ),
        (0, 0, 1, 0) => halved(
            c(half(k) - 1, half(k2)) * c(half(n2) - 1, half(k2) - 1) * c(half(n1 - 1), half(k1)),
        ),
        (0, 0, 1, 1) => Count::zero(),
        (a, b, x, y) => unreachable!("parity pattern ({a},{b},{x},{y})"),
    }
}

/// Twice the reflection term `h(n1,k1;n2,k2)`; both families must be non-empty.
pub fn h_bicolor(p: BicolorParams) -> Result<Count> {
    if p.k1 == 0 || p.k2 == 0 {
        return Err(Error::domain(format!(
            "h({},{};{},{}) needs k1 >= 1 and k2 >= 1",
            p.n1, p.k1, p.n2, p.k2
        )));
    }
    let (q, r) = h_bicolor_quadruple(p).div_rem(&Count::from(2u32));
    assert!(r.is_zero(), "4h is odd for {p:?}");
    Ok(q)
}

/// Number of two-coloured bracelets.
///
/// With one family empty this is the single-colour bracelet count of the
/// other family.
pub fn bracelet_bicolor_count(p: BicolorParams) -> Count {
    if p.k2 == 0 {
        return bracelet_count(NkParams::new(p.n1, p.k1));
    }
    if p.k1 == 0 {
        return bracelet_count(NkParams::new(p.n2, p.k2));
    }
    let k = p.k();
    let g = gcd_many(&[p.k1, p.k2, p.n1, p.n2]).expect("non-empty");
    let rotations: Count = divisors(g)
        .expect("k1 >= 1")
        .into_iter()
        .map(|d| {
            let phi = totient(d).expect("positive divisor");
            binom((k / d) as i64, (p.k1 / d) as i64)
                * binom((p.n1 / d) as i64 - 1, (p.k1 / d) as i64 - 1)
                * binom((p.n2 / d) as i64 - 1, (p.k2 / d) as i64 - 1)
                * phi
        })
        .sum();
    let reflections = h_bicolor(p).expect("both families non-empty") * k;
    let (q, r) = (rotations + reflections).div_rem(&Count::from(2 * k));
    assert!(r.is_zero(), "bracelet sum for {p:?} not divisible by 2k");
    q
}
