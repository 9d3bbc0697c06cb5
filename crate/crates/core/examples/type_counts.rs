//! Per-type counts at a single crossing number, including both forms of the
//! Type 1 sum.
//!
//! Run with `cargo run --example type_counts -- 20`.

use pretzel::count::{count_row, p1_count, p1_count_regrouped};

fn main() {
    let c: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let row = count_row(c);
    println!("c     {c}");
    println!("p1    {} (regrouped {})", p1_count(c), p1_count_regrouped(c));
    println!("p2    {}", row.p2);
    println!("p3    {}", row.p3);
    println!("p     {}", row.p);
    println!("links {}", row.total);
}
