//! t-codes of standard pretzel diagrams and the exhaustive oracle.
//!
//! A t-code records the link type, the number `δ` of horizontal crossings
//! and the signed strip sizes of a standard diagram. Two codes of the same
//! type describe the same link exactly when their strips agree up to
//! rotation (Type 1), or up to rotation and reversal (Types 2 and 3), with
//! equal `δ`. [`canonicalize`] picks the lexicographically least member of
//! that orbit, and [`Oracle`] enumerates every code of a crossing number and
//! deduplicates by canonical form.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::bicolor::BicolorParams;
use crate::combinat::{binom, compositions, Count};
use crate::error::{Error, Result};

/// Environment variable overriding [`Oracle::DEFAULT_MAX_C`].
pub const MAX_C_ENV: &str = "PRETZEL_ORACLE_MAX_C";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkType {
    Type1,
    Type2,
    Type3,
}

impl LinkType {
    pub const ALL: [LinkType; 3] = [LinkType::Type1, LinkType::Type2, LinkType::Type3];

    pub fn index(self) -> u8 {
        match self {
            LinkType::Type1 => 1,
            LinkType::Type2 => 2,
            LinkType::Type3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(LinkType::Type1),
            2 => Some(LinkType::Type2),
            3 => Some(LinkType::Type3),
            _ => None,
        }
    }

    /// Whether equivalence includes reversing the strip order.
    fn reflective(self) -> bool {
        !matches!(self, LinkType::Type1)
    }
}

impl fmt::Display for LinkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type{}", self.index())
    }
}

/// The first rule a t-code breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("{0} strips, at least 3 are required")]
    TooFewStrips(usize),
    #[error("Type 2 codes carry no horizontal crossings, got delta = {0}")]
    Type2Delta(u64),
    #[error("strip {index} = {value}: Type 1 strips are odd and at least 3")]
    Type1Strip { index: usize, value: i64 },
    #[error("strip {index} = {value}: Type 2 strips are even and at least 2")]
    Type2Strip { index: usize, value: i64 },
    #[error("strip {index} = {value}: Type 3 strips are at least 2, or even and at most -2")]
    Type3Strip { index: usize, value: i64 },
    #[error("delta + positive strips = {0}, must be even and at least 2")]
    Type3Parity(u64),
    #[error("crossing number {0} is below 6")]
    TooFewCrossings(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TCode {
    pub link_type: LinkType,
    pub delta: u64,
    pub strips: Vec<i64>,
}

impl TCode {
    pub fn new(link_type: LinkType, delta: u64, strips: Vec<i64>) -> Self {
        TCode { link_type, delta, strips }
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let k = self.strips.len();
        if k < 3 {
            return Err(Violation::TooFewStrips(k));
        }
        match self.link_type {
            LinkType::Type1 => {
                if let Some((index, &value)) =
                    self.strips.iter().enumerate().find(|(_, &s)| s < 3 || s % 2 == 0)
                {
                    return Err(Violation::Type1Strip { index, value });
                }
            }
            LinkType::Type2 => {
                if self.delta != 0 {
                    return Err(Violation::Type2Delta(self.delta));
                }
                if let Some((index, &value)) =
                    self.strips.iter().enumerate().find(|(_, &s)| s < 2 || s % 2 != 0)
                {
                    return Err(Violation::Type2Strip { index, value });
                }
            }
            LinkType::Type3 => {
                let bad = |s: i64| if s > 0 { s < 2 } else { s > -2 || s % 2 != 0 };
                if let Some((index, &value)) = self.strips.iter().enumerate().find(|(_, &s)| bad(s)) {
                    return Err(Violation::Type3Strip { index, value });
                }
                let parity = self.delta + self.positive_strips() as u64;
                if parity < 2 || !parity.is_multiple_of(2) {
                    return Err(Violation::Type3Parity(parity));
                }
            }
        }
        let c = self.raw_crossings();
        if c < 6 {
            return Err(Violation::TooFewCrossings(c));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn raw_crossings(&self) -> u64 {
        self.delta + self.strips.iter().map(|s| s.unsigned_abs()).sum::<u64>()
    }

    fn positive_strips(&self) -> usize {
        self.strips.iter().filter(|&&s| s > 0).count()
    }

    /// `δ + Σ|strip|`, defined for valid codes.
    pub fn crossing_number(&self) -> Result<u64> {
        self.validate()
            .map_err(|v| Error::domain(format!("invalid t-code {self}: {v}")))?;
        Ok(self.raw_crossings())
    }
}

impl fmt::Display for TCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}(", self.link_type.index())?;
        if self.link_type != LinkType::Type2 {
            write!(f, "{};", self.delta)?;
        }
        for (i, s) in self.strips.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for TCode {
    type Err = Error;

    /// Parses the rendering produced by `Display`; not validated.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse t-code {s:?}"));
        let s = s.trim();
        let rest = s.strip_prefix('P').ok_or_else(bad)?;
        let (tag, rest) = rest.split_once('(').ok_or_else(bad)?;
        let body = rest.strip_suffix(')').ok_or_else(bad)?;
        let link_type = tag
            .parse::<u8>()
            .ok()
            .and_then(LinkType::from_index)
            .ok_or_else(bad)?;
        let (delta, strips) = match (link_type, body.split_once(';')) {
            (LinkType::Type2, None) => (0, body),
            (LinkType::Type2, Some(_)) => return Err(bad()),
            (_, Some((d, strips))) => (d.parse().map_err(|_| bad())?, strips),
            (_, None) => return Err(bad()),
        };
        let strips = strips
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(TCode { link_type, delta, strips })
    }
}

/// Lexicographically least rotation of `seq`, also over the rotations of
/// its reversal when `reflect` is set.
pub fn least_rotation(seq: &[i64], reflect: bool) -> Vec<i64> {
    let k = seq.len();
    let mut best = seq.to_vec();
    let reversed: Vec<i64> = seq.iter().rev().copied().collect();
    let sources: &[&[i64]] = if reflect { &[seq, &reversed] } else { &[seq] };
    let mut candidate = Vec::with_capacity(k);
    for src in sources {
        for shift in 0..k {
            candidate.clear();
            candidate.extend_from_slice(&src[shift..]);
            candidate.extend_from_slice(&src[..shift]);
            if candidate < best {
                best.clone_from(&candidate);
            }
        }
    }
    best
}

/// Canonical representative of the equivalence class of a valid code.
pub fn canonicalize(code: &TCode) -> Result<TCode> {
    code.validate()
        .map_err(|v| Error::domain(format!("invalid t-code {code}: {v}")))?;
    Ok(TCode {
        link_type: code.link_type,
        delta: code.delta,
        strips: least_rotation(&code.strips, code.link_type.reflective()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Cyclic,
    Dihedral,
}

/// A finite family of tuples the oracle can enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Ordered `k`-tuples of positive integers summing to `n`.
    Compositions { n: u64, k: u64 },
    /// `k1` positive entries summing to `n1` interleaved in every way with
    /// `k2` negative entries whose absolute values sum to `n2`.
    Bicolor(BicolorParams),
}

impl Family {
    /// Number of tuples in the family, before any identification.
    pub fn size(&self) -> Count {
        let comps = |n: u64, k: u64| {
            if n == 0 && k == 0 {
                Count::from(1u32)
            } else {
                binom(n as i64 - 1, k as i64 - 1)
            }
        };
        match *self {
            Family::Compositions { n, k } => comps(n, k),
            Family::Bicolor(p) => {
                binom(p.k() as i64, p.k1 as i64) * comps(p.n1, p.k1) * comps(p.n2, p.k2)
            }
        }
    }

    fn for_each(&self, mut visit: impl FnMut(&[i64])) {
        match *self {
            Family::Compositions { n, k } => {
                for t in compositions(n, k as usize) {
                    let t: Vec<i64> = t.into_iter().map(|x| x as i64).collect();
                    visit(&t);
                }
            }
            Family::Bicolor(p) => {
                let k = p.k() as usize;
                let pos: Vec<Vec<u64>> = compositions(p.n1, p.k1 as usize).collect();
                let neg: Vec<Vec<u64>> = compositions(p.n2, p.k2 as usize).collect();
                let mut tuple = vec![0i64; k];
                for mask in 0u64..(1u64 << k) {
                    if mask.count_ones() as u64 != p.k1 {
                        continue;
                    }
                    for a in &pos {
                        for b in &neg {
                            let (mut ia, mut ib) = (0, 0);
                            for (slot, entry) in tuple.iter_mut().enumerate() {
                                if mask & (1 << slot) != 0 {
                                    *entry = a[ia] as i64;
                                    ia += 1;
                                } else {
                                    *entry = -(b[ib] as i64);
                                    ib += 1;
                                }
                            }
                            visit(&tuple);
                        }
                    }
                }
            }
        }
    }
}

/// Exhaustive enumerator with resource ceilings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Largest crossing number [`Oracle::enumerate_classes`] accepts.
    pub max_c: u64,
    /// Largest family [`Oracle::orbit_count`] enumerates.
    pub max_family: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { max_c: Self::DEFAULT_MAX_C, max_family: Self::DEFAULT_MAX_FAMILY }
    }
}

impl Oracle {
    pub const DEFAULT_MAX_C: u64 = 22;
    pub const DEFAULT_MAX_FAMILY: u64 = 20_000_000;

    /// Default ceilings, with `max_c` taken from [`MAX_C_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        let mut oracle = Oracle::default();
        if let Ok(v) = std::env::var(MAX_C_ENV) {
            oracle.max_c = v
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("{MAX_C_ENV}={v:?} is not a non-negative integer")))?;
        }
        Ok(oracle)
    }

    pub fn with_max_c(mut self, max_c: u64) -> Self {
        self.max_c = max_c;
        self
    }

    /// Sorted canonical representatives of every class of t-codes of the
    /// given type with crossing number `c`.
    ///
    /// Type 1 and Type 2 codes are generated with positive crossings only;
    /// mirror images are never generated.
    pub fn enumerate_classes(&self, c: u64, link_type: LinkType) -> Result<Vec<TCode>> {
        if c > self.max_c {
            return Err(Error::Resource {
                what: "crossing number",
                value: c,
                ceiling: self.max_c,
                hint: "--max-oracle-c or PRETZEL_ORACLE_MAX_C",
            });
        }
        let mut classes = BTreeSet::new();
        let mut keep = |code: TCode| {
            if code.is_valid() {
                debug_assert_eq!(code.raw_crossings(), c);
                let canonical = canonicalize(&code).expect("validated");
                classes.insert(canonical);
            }
        };
        let deltas = match link_type {
            LinkType::Type2 => 0..=0,
            _ => 0..=c,
        };
        for delta in deltas {
            let width = c - delta;
            // Every strip has at least two crossings.
            for k in 3..=(width / 2) as usize {
                for parts in compositions(width - k as u64, k) {
                    let strips: Vec<i64> = parts.iter().map(|&x| x as i64 + 1).collect();
                    match link_type {
                        LinkType::Type1 | LinkType::Type2 => {
                            keep(TCode::new(link_type, delta, strips));
                        }
                        LinkType::Type3 => {
                            let even: Vec<usize> =
                                (0..k).filter(|&i| strips[i] % 2 == 0).collect();
                            for mask in 0u64..(1u64 << even.len()) {
                                let mut signed = strips.clone();
                                for (bit, &i) in even.iter().enumerate() {
                                    if mask & (1 << bit) != 0 {
                                        signed[i] = -signed[i];
                                    }
                                }
                                keep(TCode::new(LinkType::Type3, delta, signed));
                            }
                        }
                    }
                }
            }
        }
        Ok(classes.into_iter().collect())
    }

    /// Number of orbits of `family` under rotations, or rotations and
    /// reversal, counted by canonical-form deduplication.
    pub fn orbit_count(&self, family: Family, symmetry: Symmetry) -> Result<Count> {
        let size = family.size();
        if size > Count::from(self.max_family) {
            return Err(Error::Resource {
                what: "family size",
                value: size.to_u64().unwrap_or(u64::MAX),
                ceiling: self.max_family,
                hint: "Oracle::max_family",
            });
        }
        let reflect = symmetry == Symmetry::Dihedral;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        family.for_each(|t| {
            seen.insert(least_rotation(t, reflect));
        });
        Ok(Count::from(seen.len()))
    }
}

/// [`Oracle::enumerate_classes`] with ceilings from the environment.
pub fn enumerate_classes(c: u64, link_type: LinkType) -> Result<Vec<TCode>> {
    Oracle::from_env()?.enumerate_classes(c, link_type)
}

/// [`Oracle::orbit_count`] with default ceilings.
pub fn oracle_orbit_count(family: Family, symmetry: Symmetry) -> Result<Count> {
    Oracle::default().orbit_count(family, symmetry)
}
