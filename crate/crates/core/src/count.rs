//! Closed-form counts of alternating oriented pretzel links per type.
//!
//! All three counters count mirror-image pairs: Type 1 and Type 2 links
//! with positive crossings, and Type 3 links whose positive crossings are
//! smoothed vertically. [`CountRow::total`] doubles the sum to count every
//! link.

use num_traits::Zero;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bicolor::{bracelet_bicolor_count, BicolorParams};
use crate::combinat::Count;
use crate::necklace::{bracelet_count, necklace_count, NkParams};

/// A parameter point `(δ; n1, k1; n2, k2)` of the Type 3 sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaQuintuple {
    pub delta: u64,
    pub n1: u64,
    pub k1: u64,
    pub n2: u64,
    pub k2: u64,
}

impl OmegaQuintuple {
    pub fn new(delta: u64, n1: u64, k1: u64, n2: u64, k2: u64) -> Self {
        OmegaQuintuple { delta, n1, k1, n2, k2 }
    }

    /// Crossing number of every t-code with these parameters.
    pub fn crossing_number(&self) -> u64 {
        self.delta + self.k1 + self.n1 + 2 * self.n2
    }

    /// Whether the point belongs to the Type 3 parameter set for `c`.
    pub fn is_member(&self, c: u64) -> bool {
        self.n1 >= self.k1
            && self.n2 >= self.k2
            && self.crossing_number() == c
            && self.delta + self.k1 >= 2
            && (self.delta + self.k1).is_multiple_of(2)
            && self.k1 + self.k2 >= 3
    }

    pub fn bicolor(&self) -> BicolorParams {
        BicolorParams::new(self.n1, self.k1, self.n2, self.k2)
            .expect("Omega membership implies valid bicolor parameters")
    }
}

/// The Type 3 parameter set for crossing number `c`, ordered by
/// `(delta, k1, n1, k2, n2)`.
pub fn omega_set(c: u64) -> Vec<OmegaQuintuple> {
    let mut out = Vec::new();
    for delta in 0..=c {
        for k1 in 0..=c - delta {
            if delta + k1 < 2 || (delta + k1) % 2 != 0 {
                continue;
            }
            for n1 in k1..=c - delta - k1 {
                if k1 == 0 && n1 != 0 {
                    break;
                }
                let rest = c - delta - k1 - n1;
                if !rest.is_multiple_of(2) {
                    continue;
                }
                let n2 = rest / 2;
                for k2 in 0..=n2 {
                    if k1 + k2 < 3 || (k2 == 0 && n2 != 0) {
                        continue;
                    }
                    out.push(OmegaQuintuple::new(delta, n1, k1, n2, k2));
                }
            }
        }
    }
    out
}

/// Type 1 count: `Σ N((c − δ − k)/2, k)` over `δ >= 0`, `k >= 3` with
/// `c − δ − k` even.
pub fn p1_count(c: u64) -> Count {
    let mut total = Count::zero();
    for k in 3..=c {
        for delta in 0..=c - k {
            let rest = c - delta - k;
            if rest.is_multiple_of(2) {
                total += necklace_count(NkParams::new(rest / 2, k));
            }
        }
    }
    total
}

/// Type 1 count regrouped by `q = ⌊c/2⌋`: for odd `c`,
/// `Σ_{i>=3} Σ_{j>=⌊i/2⌋} N(q − j, i)`; for even `c` the inner bound is `⌈i/2⌉`.
pub fn p1_count_regrouped(c: u64) -> Count {
    let q = c / 2;
    let mut total = Count::zero();
    for i in 3..=q {
        let j_min = if c % 2 == 1 { i / 2 } else { i.div_ceil(2) };
        for j in j_min..=q {
            total += necklace_count(NkParams::new(q - j, i));
        }
    }
    total
}

/// Type 2 count: `Σ_{3<=k<=n} B(n,k)` for `c = 2n >= 6`, zero otherwise.
pub fn p2_count(c: u64) -> Count {
    if !c.is_multiple_of(2) || c < 6 {
        return Count::zero();
    }
    let n = c / 2;
    (3..=n).map(|k| bracelet_count(NkParams::new(n, k))).sum()
}

/// Type 3 count: two-coloured bracelets summed over [`omega_set`].
pub fn p3_count(c: u64) -> Count {
    omega_set(c)
        .iter()
        .map(|q| bracelet_bicolor_count(q.bicolor()))
        .sum()
}

/// One row of the count table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub c: u64,
    pub p1: Count,
    pub p2: Count,
    pub p3: Count,
    /// Mirror-pair count `p1 + p2 + p3`.
    pub p: Count,
    /// Link count `2p`.
    pub total: Count,
}

pub fn count_row(c: u64) -> CountRow {
    let p1 = p1_count(c);
    let p2 = p2_count(c);
    let p3 = p3_count(c);
    let p = &p1 + &p2 + &p3;
    let total = &p * 2u32;
    CountRow { c, p1, p2, p3, p, total }
}

impl CountRow {
    pub const CSV_HEADER: &'static str = "c,p1,p2,p3,p,total";

    pub fn to_csv_line(&self) -> String {
        format!("{},{},{},{},{},{}", self.c, self.p1, self.p2, self.p3, self.p, self.total)
    }
}

// Counts go out as decimal strings; they leave the 64-bit range for large c.
impl Serialize for CountRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CountRow", 6)?;
        s.serialize_field("c", &self.c)?;
        s.serialize_field("p1", &self.p1.to_string())?;
        s.serialize_field("p2", &self.p2.to_string())?;
        s.serialize_field("p3", &self.p3.to_string())?;
        s.serialize_field("p", &self.p.to_string())?;
        s.serialize_field("total", &self.total.to_string())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    /// Every quintuple with entries up to `c`, filtered by membership.
    fn omega_brute(cn: u64) -> Vec<OmegaQuintuple> {
        let mut v = Vec::new();
        for delta in 0..=cn {
            for n1 in 0..=cn {
                for k1 in 0..=cn {
                    for n2 in 0..=cn {
                        for k2 in 0..=cn {
                            let q = OmegaQuintuple::new(delta, n1, k1, n2, k2);
                            if q.is_member(cn) && (k1 > 0 || n1 == 0) && (k2 > 0 || n2 == 0) {
                                v.push(q);
                            }
                        }
                    }
                }
            }
        }
        v.sort_by_key(|q| (q.delta, q.k1, q.n1, q.k2, q.n2));
        v
    }

    #[test]
    fn omega_matches_brute_force() {
        for cn in 1..=14 {
            assert_eq!(omega_set(cn), omega_brute(cn), "c = {cn}");
        }
    }

    #[test]
    fn omega_small() {
        assert!(omega_set(5).is_empty());
        assert_eq!(omega_set(6), vec![OmegaQuintuple::new(0, 2, 2, 1, 1)]);
        let ten = omega_set(10);
        assert_eq!(ten.len(), 23);
        assert!(ten.contains(&OmegaQuintuple::new(4, 2, 2, 1, 1)));
        assert!(ten.contains(&OmegaQuintuple::new(1, 6, 3, 0, 0)));
        assert!(ten.contains(&OmegaQuintuple::new(0, 2, 2, 3, 1)));
    }

    #[test]
    fn p1_examples() {
        assert_eq!(p1_count(9), c(1));
        assert_eq!(p1_count(8), c(0));
        assert_eq!(p1_count(20), c(47));
    }

    #[test]
    fn p1_two_paths_agree() {
        for cn in 1..=60 {
            assert_eq!(p1_count(cn), p1_count_regrouped(cn), "c = {cn}");
        }
    }

    #[test]
    fn p2_examples() {
        assert_eq!(p2_count(14), c(13));
        assert_eq!(p2_count(7), c(0));
        assert_eq!(p2_count(50), c(675174));
        assert_eq!(p2_count(4), c(0));
    }

    #[test]
    fn p3_examples() {
        assert_eq!(p3_count(10), c(38));
        assert_eq!(p3_count(6), c(1));
        assert_eq!(p3_count(50), c(549639730670));
    }

    #[test]
    fn row_examples() {
        let r = count_row(10);
        assert_eq!((r.p1, r.p2, r.p3, r.p, r.total), (c(1), c(4), c(38), c(43), c(86)));
        let r = count_row(5);
        assert!(r.total.is_zero());
        let r = count_row(26);
        assert_eq!(r.to_csv_line(), "26,241,372,293479,294092,588184");
    }

    #[test]
    fn row_json_uses_strings() {
        let json = serde_json::to_string(&count_row(6)).unwrap();
        assert_eq!(json, r#"{"c":6,"p1":"0","p2":"1","p3":"1","p":"2","total":"4"}"#);
    }
}
