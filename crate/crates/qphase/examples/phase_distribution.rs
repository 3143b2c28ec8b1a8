//! Phase distributions P(φ) = |Σₙ e^(−inφ) cₙ|² / 2π for number, coherent
//! and squeezed states, rendered as coarse ASCII profiles.
//!
//! ```bash
//! cargo run -p qphase --example phase_distribution
//! ```

use num_complex::Complex64;

use qphase::analysis::phase_distribution;
use qphase::{number_state, prepare, FockBasis, Ket, StateKind};

fn profile(name: &str, ket: &Ket) -> qphase::Result<()> {
    let bins = 48;
    let dist = phase_distribution(ket, bins)?;
    let peak = dist.iter().map(|s| s.density).fold(0.0f64, f64::max);
    let step = 2.0 * std::f64::consts::PI / bins as f64;
    let integral: f64 = dist.iter().map(|s| s.density * step).sum();

    println!("\n{name} (peak {:.4}, integral {:.6}):", peak, integral);
    for s in dist.iter().step_by(2) {
        let width = if peak > 0.0 {
            (s.density / peak * 40.0).round() as usize
        } else {
            0
        };
        println!("  φ = {:+.2}  {}", s.phi, "#".repeat(width));
    }
    Ok(())
}

fn main() -> qphase::Result<()> {
    let basis = FockBasis::one_sided(32)?;

    // number states carry no phase information: flat at 1/2π
    profile("number state |3⟩", &number_state(basis, 3)?)?;

    // a real coherent amplitude concentrates the phase around φ = 0
    profile(
        "coherent α = 3",
        &prepare(basis, StateKind::Coherent(Complex64::new(3.0, 0.0)))?,
    )?;

    // squeezed vacuum: two lobes separated by π, set by θ/2
    profile(
        "squeezed vacuum r = 0.9",
        &prepare(basis, StateKind::SqueezedVacuum { r: 0.9, theta: 0.0 })?,
    )?;
    Ok(())
}
