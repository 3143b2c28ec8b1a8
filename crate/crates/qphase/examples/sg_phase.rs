//! The Susskind-Glogower phase pair in its three representations.
//!
//! ```bash
//! cargo run -p qphase --example sg_phase
//! ```

use qphase::analysis::{trig_sum_table, BasisParams};
use qphase::{
    sg_pair, Boundary, FockBasis, Op, PhaseFamily, SgConstruction,
};

fn main() -> qphase::Result<()> {
    let basis = FockBasis::one_sided(16)?;
    let direct = sg_pair(basis, SgConstruction::Direct)?;
    let from_a = sg_pair(basis, SgConstruction::FromAnnihilation)?;
    let from_c = sg_pair(basis, SgConstruction::FromCreation)?;

    println!("representation agreement (max |Δ entry|):");
    println!(
        "  shift sums vs a N^(−1/2):  plus {:.2e}, minus {:.2e}",
        direct.plus.residual_norm(&from_a.plus, &[])?,
        direct.minus.residual_norm(&from_a.minus, &[])?
    );
    println!(
        "  shift sums vs a†⁻¹ N^(1/2): plus {:.2e}, minus {:.2e}",
        direct.plus.residual_norm(&from_c.plus, &[])?,
        direct.minus.residual_norm(&from_c.minus, &[])?
    );

    println!("\none-sided unitarity per construction:");
    let id = Op::identity(basis);
    let top = [basis.dim() - 1];
    for (name, pair) in [
        ("direct", &direct),
        ("annihilation", &from_a),
        ("creation", &from_c),
    ] {
        let pm = pair.plus.compose(&pair.minus)?.residual_norm(&id, &top)?;
        println!("  {name:<13} e⁺e⁻ = I interior residual {pm:.2e}");
    }

    println!("\ntrig sums ⟨n|cos²φ + sin²φ|n⟩ (vacuum terms are 1/4 each):");
    let table = trig_sum_table(
        PhaseFamily::SusskindGlogower(SgConstruction::Direct),
        &BasisParams {
            dim: 16,
            half_width: 4,
            boundary: Boundary::Cyclic,
        },
        0..=8,
        1e-12,
    )?;
    println!("   n   cos²      sin²      sum");
    for row in &table {
        println!(
            "  {:2}   {:.6}  {:.6}  {:.6}",
            row.n, row.cos_sq, row.sin_sq, row.sum
        );
    }
    Ok(())
}
