//! Necklace and bracelet counts for compositions of `n` into `k` parts.
//!
//! Run with `cargo run --example necklaces -- 12`.

use pretzel::necklace::{bracelet_count, h_single, necklace_count, NkParams};

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!("{:>3} {:>10} {:>10} {:>10}", "k", "N(n,k)", "2h", "B(n,k)");
    for k in 1..=n {
        let p = NkParams::new(n, k);
        let h2 = h_single(p).expect("k >= 1");
        println!("{k:>3} {:>10} {h2:>10} {:>10}", necklace_count(p), bracelet_count(p));
    }
}
