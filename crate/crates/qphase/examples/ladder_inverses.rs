//! The ladder operators and their one-sided inverses on a truncated basis.
//!
//! ```bash
//! cargo run -p qphase --example ladder_inverses
//! ```

use qphase::{build_ladder, number_state, FockBasis, LadderKind, Op};

fn main() -> qphase::Result<()> {
    let basis = FockBasis::one_sided(16)?;
    let dim = basis.dim();

    let a = build_ladder(basis, LadderKind::Annihilate)?;
    let adag = build_ladder(basis, LadderKind::Create)?;
    let inv_a = build_ladder(basis, LadderKind::InvAnnihilate)?;
    let inv_c = build_ladder(basis, LadderKind::InvCreate)?;

    println!("actions on number states (D = {dim}):");
    let four = number_state(basis, 4)?;
    println!("  a |4⟩      → amplitude {:.4} on |3⟩", a.apply(&four)?.amp(3)?.re);
    println!("  a⁻¹ |4⟩    → amplitude {:.4} on |5⟩", inv_a.apply(&four)?.amp(5)?.re);
    println!("  a†⁻¹ |4⟩   → amplitude {:.4} on |3⟩", inv_c.apply(&four)?.amp(3)?.re);
    let vac = number_state(basis, 0)?;
    println!("  a⁻¹ |0⟩    → amplitude {:.4} on |1⟩", inv_a.apply(&vac)?.amp(1)?.re);
    println!("  a†⁻¹ |0⟩   → norm {:.4} (the left inverse kills the vacuum)", inv_c.apply(&vac)?.norm());

    println!("\none-sided inverse structure:");
    let id = Op::identity(basis);
    let vac_proj = build_ladder(basis, LadderKind::VacuumProjector)?;
    let id_minus_vac = id.sub(&vac_proj)?;
    let top = [dim - 1];

    let right = a.compose(&inv_a)?;
    println!(
        "  a a⁻¹   = I            interior residual {:.2e}, corner artifact {:.1}",
        right.residual_norm(&id, &top)?,
        right.residual_norm(&id, &[])?
    );
    let right_c = inv_c.compose(&adag)?;
    println!(
        "  a†⁻¹ a† = I            interior residual {:.2e}, corner artifact {:.1}",
        right_c.residual_norm(&id, &top)?,
        right_c.residual_norm(&id, &[])?
    );
    let left = inv_a.compose(&a)?;
    println!(
        "  a⁻¹ a   = I − |0⟩⟨0|   residual {:.2e} (no truncation artifact)",
        left.residual_norm(&id_minus_vac, &[])?
    );
    let left_c = adag.compose(&inv_c)?;
    println!(
        "  a† a†⁻¹ = I − |0⟩⟨0|   residual {:.2e} (no truncation artifact)",
        left_c.residual_norm(&id_minus_vac, &[])?
    );
    println!(
        "\nthe corner artifact sits on the top state |{}⟩, whose image under",
        dim - 1
    );
    println!("raising falls outside the basis; every report names that exclusion.");
    Ok(())
}
