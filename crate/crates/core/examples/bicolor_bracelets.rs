//! Two-colour bracelets: `k1` positive beads summing to `n1`, `k2` negative
//! beads summing to `n2`.
//!
//! Run with `cargo run --example bicolor_bracelets -- 6 3 4 2`.

use pretzel::bicolor::{bracelet_bicolor_count, h_bicolor, BicolorParams};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let [n1, k1, n2, k2] = match args[..] {
        [a, b, c, d] => [a, b, c, d],
        _ => [6, 3, 4, 2],
    };
    let p = match BicolorParams::new(n1, k1, n2, k2) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("params: n1={n1} k1={k1} n2={n2} k2={k2}");
    match h_bicolor(p) {
        Ok(h) => println!("4h: {h}"),
        Err(_) => println!("4h: n/a (one colour is empty)"),
    }
    println!("bracelets: {}", bracelet_bicolor_count(p));
    println!("swapped:   {}", bracelet_bicolor_count(p.swapped()));
}
