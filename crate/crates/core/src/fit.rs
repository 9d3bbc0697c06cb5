//! Exponential growth fit `P(c) ≈ a·e^{b·c}` by least squares on `ln P`.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::count::CountRow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitResult {
    /// Prefactor `e^intercept`.
    pub a: f64,
    /// Growth rate per crossing.
    pub b: f64,
    /// Coefficient of determination of the `ln P` regression.
    pub r2: f64,
    pub c_min: u64,
    pub c_max: u64,
    /// Number of rows that entered the fit.
    pub points: usize,
}

impl FitResult {
    /// Prefactor for the link count `2P(c)`.
    pub fn total_prefactor(&self) -> f64 {
        2.0 * self.a
    }
}

/// Fits `ln p` against `c` over the rows with `p > 0`.
pub fn fit_growth(rows: &[CountRow]) -> Result<FitResult> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| !r.p.is_zero())
        .map(|r| {
            let p = r.p.to_f64().expect("BigUint converts to a finite f64");
            (r.c as f64, p.ln())
        })
        .collect();
    if points.len() < 3 {
        return Err(Error::domain(format!(
            "fit needs at least 3 rows with p > 0, got {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - (intercept + slope * p.0)).powi(2))
        .sum();
    let r2 = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };

    let used: Vec<u64> = rows.iter().filter(|r| !r.p.is_zero()).map(|r| r.c).collect();
    Ok(FitResult {
        a: intercept.exp(),
        b: slope,
        r2,
        c_min: used[0],
        c_max: *used.last().unwrap(),
        points: points.len(),
    })
}
