//! Checks the closed-form counts against brute-force enumeration for small
//! crossing numbers.
//!
//! Run with `cargo run --release --example verify_oracle -- 16`.

use pretzel::cli::cmd_verify;
use pretzel::tcode::Oracle;

fn main() {
    let max: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    let oracle = Oracle::from_env().unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(1);
    });
    let mut out = std::io::stdout();
    match cmd_verify(max, &oracle, &mut out) {
        Ok(checks) if checks.iter().all(|c| c.passed()) => {}
        Ok(_) => std::process::exit(2),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    }
}
