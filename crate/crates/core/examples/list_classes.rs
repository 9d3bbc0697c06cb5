//! Brute-force enumeration of canonical t-codes, then a round trip through
//! the text form.
//!
//! Run with `cargo run --example list_classes -- 10 3`.

use pretzel::tcode::{canonicalize, LinkType, Oracle, TCode};

fn main() {
    let mut args = std::env::args().skip(1);
    let c: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let t = args
        .next()
        .and_then(|s| s.parse().ok())
        .and_then(LinkType::from_index)
        .unwrap_or(LinkType::Type3);

    let classes = match Oracle::from_env().and_then(|o| o.enumerate_classes(c, t)) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    };
    for code in &classes {
        println!("{code}");
    }
    println!("{} classes of {t} at c={c}", classes.len());

    let raw: TCode = "P3(2;3,-2,2,-4)".parse().unwrap();
    println!("{raw} canonicalizes to {}", canonicalize(&raw).unwrap());
    let bad: TCode = "P2(2,3,2)".parse().unwrap();
    if let Err(v) = bad.validate() {
        println!("{bad} rejected: {v}");
    }
}
