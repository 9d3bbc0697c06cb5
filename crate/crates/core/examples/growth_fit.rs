//! Fits `P(c) ~ a e^{bc}` and compares the fitted curve with exact counts.
//!
//! Run with `cargo run --example growth_fit`.

use num_traits::ToPrimitive;
use pretzel::count::count_row;
use pretzel::fit::fit_growth;

fn main() {
    let rows: Vec<_> = (6..=50).map(count_row).collect();
    let fit = fit_growth(&rows).expect("enough nonzero rows");
    println!("a = {:.6}, b = {:.6}, r2 = {:.6}", fit.a, fit.b, fit.r2);
    println!("links ~ {:.6} e^({:.6} c)", fit.total_prefactor(), fit.b);
    println!("{:>3} {:>16} {:>16} {:>8}", "c", "P(c)", "fit", "ratio");
    for r in rows.iter().step_by(4) {
        let exact = r.p.to_f64().unwrap();
        let model = fit.a * (fit.b * r.c as f64).exp();
        println!("{:>3} {:>16} {:>16.0} {:>8.3}", r.c, r.p, model, exact / model);
    }
}
