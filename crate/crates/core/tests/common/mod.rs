#![allow(dead_code)]

use pretzel::tcode::TCode;
use pretzel::Count;

/// One transcribed row of the published table: c, P1, P2, P3, P.
pub struct PublishedRow {
    pub c: u64,
    pub cols: [Count; 4],
}

pub fn published_table() -> Vec<PublishedRow> {
    include_str!("../data/table1.csv")
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            PublishedRow {
                c: f[0].parse().unwrap(),
                cols: [0, 1, 2, 3].map(|i| f[i + 1].parse().unwrap()),
            }
        })
        .collect()
}

/// The 38 Type 3 codes listed for c = 10, one per class.
pub fn published_c10_codes() -> Vec<TCode> {
    include_str!("../data/p3_c10_codes.txt")
        .lines()
        .map(|l| l.parse().unwrap())
        .collect()
}

/// (δ, n1, k1, n2, k2)
pub type Quintuple = (u64, u64, u64, u64, u64);

/// The 23 Type 3 parameter points for c = 10 as (δ; n1, k1; n2, k2),
/// paired with the bracelet value of each summand, in published order.
pub const OMEGA_10: [(Quintuple, u64); 23] = [
    ((4, 2, 2, 1, 1), 1),
    ((4, 0, 0, 3, 3), 1),
    ((3, 4, 3, 0, 0), 1),
    ((3, 2, 1, 2, 2), 1),
    ((2, 4, 4, 0, 0), 1),
    ((2, 2, 2, 2, 2), 2),
    ((2, 4, 2, 1, 1), 2),
    ((2, 2, 2, 2, 1), 1),
    ((2, 0, 0, 4, 3), 1),
    ((2, 0, 0, 4, 4), 1),
    ((1, 4, 3, 1, 1), 2),
    ((1, 6, 3, 0, 0), 3),
    ((1, 2, 1, 3, 3), 1),
    ((1, 2, 1, 3, 2), 1),
    ((1, 4, 1, 2, 2), 1),
    ((0, 6, 4, 0, 0), 3),
    ((0, 4, 4, 1, 1), 1),
    ((0, 4, 2, 2, 2), 4),
    ((0, 2, 2, 3, 2), 2),
    ((0, 2, 2, 3, 3), 2),
    ((0, 6, 2, 1, 1), 3),
    ((0, 4, 2, 2, 1), 2),
    ((0, 2, 2, 3, 1), 1),
];
