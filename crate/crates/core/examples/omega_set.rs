//! Lists the parameter set behind the Type 3 count at one crossing number,
//! with the bracelet count contributed by each quintuple.
//!
//! Run with `cargo run --example omega_set -- 10`.

use num_traits::Zero;
use pretzel::bicolor::bracelet_bicolor_count;
use pretzel::count::{omega_set, p3_count};
use pretzel::Count;

fn main() {
    let c: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let mut sum = Count::zero();
    println!("(delta; n1, k1; n2, k2)  bracelets");
    for q in omega_set(c) {
        let b = bracelet_bicolor_count(q.bicolor());
        println!("({}; {}, {}; {}, {})  {b}", q.delta, q.n1, q.k1, q.n2, q.k2);
        sum += b;
    }
    println!("sum {sum}, p3({c}) = {}", p3_count(c));
}
