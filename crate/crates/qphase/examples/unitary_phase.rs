//! The unitary phase pair on the two-sided lattice: exact unitarity in
//! cyclic mode, and the n = 0 gap of the inverse-operator construction.
//!
//! ```bash
//! cargo run -p qphase --example unitary_phase
//! ```

use qphase::analysis::{trig_sum_table, BasisParams};
use qphase::{
    number_state, unitary_pair, Boundary, FockBasis, Op, PhaseFamily, UnitaryConstruction,
};

fn main() -> qphase::Result<()> {
    let half_width = 6usize;
    let cyclic = FockBasis::two_sided(half_width, Boundary::Cyclic)?;
    let truncated = FockBasis::two_sided(half_width, Boundary::Truncated)?;

    println!("direct shift, cyclic lattice (M = {half_width}):");
    let pair = unitary_pair(cyclic, UnitaryConstruction::Direct)?;
    let id = Op::identity(cyclic);
    println!(
        "  e⁺e⁻ − I max entry: {:.1e} (exactly unitary)",
        pair.plus.compose(&pair.minus)?.residual_norm(&id, &[])?
    );

    println!("\ndirect shift, truncated lattice:");
    let tpair = unitary_pair(truncated, UnitaryConstruction::Direct)?;
    let tid = Op::identity(truncated);
    let edges = [0, truncated.dim() - 1];
    println!(
        "  e⁺e⁻ − I: full {:.1}, off the edges {:.1e}",
        tpair.plus.compose(&tpair.minus)?.residual_norm(&tid, &[])?,
        tpair.plus.compose(&tpair.minus)?.residual_norm(&tid, &edges)?
    );

    println!("\ninverse-operator construction e⁺ = a†⁻¹ |N^(1/2)|, e⁻ = |N^(1/2)| a⁻¹:");
    let inv = unitary_pair(cyclic, UnitaryConstruction::FromInverses)?;
    let col0 = cyclic.index_of(0).expect("lattice contains 0");
    let col_m1 = cyclic.index_of(-1).expect("lattice contains -1");
    println!(
        "  vs direct: plus differs only on the n=0 column ({:.1} there, {:.1e} elsewhere)",
        inv.plus.residual_norm(&pair.plus, &[])?,
        inv.plus.residual_norm(&pair.plus, &[col0])?
    );
    println!(
        "  vs direct: minus differs only on the n=−1 column ({:.1} there, {:.1e} elsewhere)",
        inv.minus.residual_norm(&pair.minus, &[])?,
        inv.minus.residual_norm(&pair.minus, &[col_m1])?
    );
    let prod = inv.plus.compose(&inv.minus)?;
    println!(
        "  e⁺e⁻|−1⟩ has norm {:.1}: no weight 1/√|0| exists, so the product",
        prod.apply(&number_state(cyclic, -1)?)?.norm()
    );
    println!("  annihilates the column crossing n = 0 instead of reproducing it.");

    println!("\ntrig sums over the whole lattice, negative n included:");
    let table = trig_sum_table(
        PhaseFamily::Unitary(UnitaryConstruction::Direct),
        &BasisParams {
            dim: 16,
            half_width,
            boundary: Boundary::Cyclic,
        },
        -(half_width as i64)..=(half_width as i64),
        1e-12,
    )?;
    println!("   n   sum");
    for row in &table {
        println!("  {:3}  {:.12}", row.n, row.sum);
    }
    Ok(())
}
