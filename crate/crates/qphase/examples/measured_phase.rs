//! The measured (quadrature) phase pair under both k conventions.
//!
//! With the quoted k = √(n(n+1))/(2n+1) the trig sum works out to
//! 2/(2n+1); the normalized convention solves for the k that makes it 1.
//!
//! ```bash
//! cargo run -p qphase --example measured_phase
//! ```

use qphase::analysis::{trig_sum_table, BasisParams};
use qphase::{k_of_n, Boundary, KConvention, PhaseFamily};

fn main() -> qphase::Result<()> {
    let params = BasisParams {
        dim: 32,
        half_width: 4,
        boundary: Boundary::Cyclic,
    };

    println!("quoted k convention:");
    println!("   n    k          cos²       sin²       sum        2/(2n+1)   sum=1?");
    let table = trig_sum_table(PhaseFamily::Measured(KConvention::Paper), &params, 0..=10, 1e-12)?;
    for row in &table {
        let closed = if row.n == 0 {
            0.0
        } else {
            2.0 / (2.0 * row.n as f64 + 1.0)
        };
        println!(
            "  {:2}    {:.6}   {:.6}   {:.6}   {:.6}   {:.6}   {}",
            row.n,
            k_of_n(row.n, KConvention::Paper),
            row.cos_sq,
            row.sin_sq,
            row.sum,
            closed,
            row.claim_holds
        );
    }

    println!("\nnormalized k convention (finite k at every n, including n = 0):");
    println!("   n    k          sum        sum=1?");
    let table = trig_sum_table(
        PhaseFamily::Measured(KConvention::Normalized),
        &params,
        0..=10,
        1e-12,
    )?;
    for row in &table {
        println!(
            "  {:2}    {:.6}   {:.6}   {}",
            row.n,
            k_of_n(row.n, KConvention::Normalized),
            row.sum,
            row.claim_holds
        );
    }
    Ok(())
}
