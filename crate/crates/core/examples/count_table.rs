//! Prints the count table as CSV or JSON.
//!
//! Run with `cargo run --example count_table -- 6 30 json`.

use pretzel::cli::{render_table, table_rows, TableFormat};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let min = args.first().and_then(|s| s.parse().ok()).unwrap_or(6);
    let max = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let format = match args.get(2).map(String::as_str) {
        Some("json") => TableFormat::Json,
        _ => TableFormat::Csv,
    };
    let rows = table_rows(min, max).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(1);
    });
    print!("{}", render_table(&rows, format).unwrap());
}
