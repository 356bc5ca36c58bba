//! Survey of all projective monomial curves up to a given degree, as CSV.
//!
//! Run with `cargo run --example batch_curves -- 12`.

use affine_cm::{batch_classify, oracle::DEFAULT_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let rows = batch_classify(n_max, Some(n_max.min(8)), DEFAULT_BUDGET)?;

    let mut out = csv::Writer::from_writer(std::io::stdout());
    for row in &rows {
        out.serialize(row)?;
    }
    out.flush()?;

    let cm = rows.iter().filter(|r| r.is_cm).count();
    eprintln!("{} curves, {cm} Cohen-Macaulay", rows.len());
    Ok(())
}
