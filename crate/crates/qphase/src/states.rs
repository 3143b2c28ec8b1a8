//! Preparation of the physical states whose phase statistics the rest of
//! the crate evaluates: number, coherent, squeezed vacuum and squeezed
//! coherent states on a one-sided basis.
//!
//! Two independent construction routes are kept on purpose. Coherent and
//! squeezed-vacuum amplitudes come from their closed-form recursions; the
//! displacement and squeeze operators are also available as matrix
//! exponentials of their generators, and the squeezed-coherent state is
//! built that way (squeeze applied after displacement). Cross-checking the
//! two routes catches sign and phase-convention slips.
//!
//! Every prepared ket is normalized to unit norm; if the basis is too
//! small to hold the state (pre-normalization norm below 0.999) the
//! preparation fails and reports the dimension that would suffice.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{CMatrix, CVector, FockBasis, Ket, Op};
use crate::ladder::{build, LadderKind};

/// Truncation-loss guard: preparation fails if the kept norm drops below
/// this before renormalization.
const NORM_FLOOR: f64 = 0.999;

/// Which state to prepare.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StateKind {
    /// Number state |n⟩.
    Number(i64),
    /// Coherent state with amplitudes ∝ αⁿ/√(n!).
    Coherent(Complex64),
    /// Squeezed vacuum with squeeze parameter r ≥ 0 and phase θ;
    /// annihilated by cosh r · a + e^(iθ) sinh r · a†.
    SqueezedVacuum { r: f64, theta: f64 },
    /// Squeeze applied after displacement: S(r, θ) D(α) |0⟩.
    SqueezedCoherent { alpha: Complex64, r: f64, theta: f64 },
}

/// Prepare `kind` on `basis` as a unit-norm ket.
pub fn prepare(basis: FockBasis, kind: StateKind) -> Result<Ket> {
    if !basis.is_one_sided() {
        return Err(Error::WrongBasisKind {
            expected: "one-sided",
            got: basis,
        });
    }
    match kind {
        StateKind::Number(n) => crate::fock::number_state(basis, n),
        StateKind::Coherent(alpha) => {
            let amps = coherent_amplitudes(alpha, basis.dim());
            guarded_normalize(basis, amps, move || {
                doubling_search(basis.dim(), |d| {
                    norm_of(&coherent_amplitudes(alpha, d)) >= NORM_FLOOR
                })
            })
        }
        StateKind::SqueezedVacuum { r, theta } => {
            check_squeeze(r)?;
            let amps = squeezed_vacuum_amplitudes(r, theta, basis.dim());
            guarded_normalize(basis, amps, move || {
                doubling_search(basis.dim(), |d| {
                    norm_of(&squeezed_vacuum_amplitudes(r, theta, d)) >= NORM_FLOOR
                })
            })
        }
        StateKind::SqueezedCoherent { alpha, r, theta } => {
            check_squeeze(r)?;
            // build in an enlarged space so the kept-norm check measures
            // real truncation loss; the squeeze operator is unitary on any
            // truncated space and would otherwise hide it
            let ext = extended_dim(basis.dim());
            let big = squeezed_coherent_extended(alpha, r, theta, ext);
            let kept = CVector::from_iterator(basis.dim(), big.iter().take(basis.dim()).copied());
            guarded_normalize(basis, kept, move || {
                // smallest prefix of the extended vector that keeps enough norm
                let mut acc = 0.0;
                for (i, z) in big.iter().enumerate() {
                    acc += z.norm_sqr();
                    if acc.sqrt() >= NORM_FLOOR {
                        return i + 1;
                    }
                }
                2 * ext
            })
        }
    }
}

/// Norm of (cosh r · a + e^(iθ) sinh r · a†) |ket⟩ over the rows that
/// truncation cannot corrupt (the top two are dropped).
///
/// Vanishes exactly on the squeezed vacuum with matching (r, θ); strictly
/// positive on anything else.
pub fn bogoliubov_residual(ket: &Ket, r: f64, theta: f64) -> Result<f64> {
    let basis = ket.basis();
    if !basis.is_one_sided() {
        return Err(Error::WrongBasisKind {
            expected: "one-sided",
            got: basis,
        });
    }
    check_squeeze(r)?;
    let combo = bogoliubov_combination(basis, r, theta)?;
    let w = combo.apply(ket)?;
    let keep = basis.dim().saturating_sub(2);
    Ok(w.amps().rows(0, keep).norm())
}

/// cosh r · a + e^(iθ) sinh r · a† as an operator.
pub fn bogoliubov_combination(basis: FockBasis, r: f64, theta: f64) -> Result<Op> {
    let a = build(basis, LadderKind::Annihilate)?;
    let adag = build(basis, LadderKind::Create)?;
    let phase = Complex64::from_polar(1.0, theta);
    a.scale(Complex64::new(r.cosh(), 0.0))
        .add(&adag.scale(phase * r.sinh()))
}

/// Displacement operator D(α) = exp(α a† − α* a).
pub fn displacement(basis: FockBasis, alpha: Complex64) -> Result<Op> {
    let a = build(basis, LadderKind::Annihilate)?;
    let adag = build(basis, LadderKind::Create)?;
    let gen = adag.scale(alpha).sub(&a.scale(alpha.conj()))?;
    Op::new(basis, expm(gen.matrix()))
}

/// Squeeze operator S(r, θ) = exp((ζ* a² − ζ a†²)/2) with ζ = r e^(iθ).
pub fn squeeze(basis: FockBasis, r: f64, theta: f64) -> Result<Op> {
    check_squeeze(r)?;
    let a = build(basis, LadderKind::Annihilate)?;
    let adag = build(basis, LadderKind::Create)?;
    let zeta = Complex64::from_polar(r, theta);
    let half = Complex64::new(0.5, 0.0);
    let gen = a
        .compose(&a)?
        .scale(zeta.conj() * half)
        .sub(&adag.compose(&adag)?.scale(zeta * half))?;
    Op::new(basis, expm(gen.matrix()))
}

fn check_squeeze(r: f64) -> Result<()> {
    if r < 0.0 || !r.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "squeeze parameter must be a finite nonnegative real, got {r}"
        )));
    }
    Ok(())
}

fn norm_of(v: &CVector) -> f64 {
    v.norm()
}

/// c_n = e^(−|α|²/2) αⁿ/√(n!), by the stable ratio recursion.
fn coherent_amplitudes(alpha: Complex64, dim: usize) -> CVector {
    let mut amps = CVector::zeros(dim);
    let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
    for n in 0..dim {
        amps[n] = c;
        c *= alpha / ((n + 1) as f64).sqrt();
    }
    amps
}

/// Even-n amplitudes of the squeezed vacuum:
/// c_0 = 1/√cosh r, c_(n+2) = −e^(iθ) tanh r · √(n+1)/√(n+2) · c_n.
fn squeezed_vacuum_amplitudes(r: f64, theta: f64, dim: usize) -> CVector {
    let mut amps = CVector::zeros(dim);
    let factor = -Complex64::from_polar(r.tanh(), theta);
    let mut c = Complex64::new(1.0 / r.cosh().sqrt(), 0.0);
    let mut n = 0usize;
    loop {
        amps[n] = c;
        if n + 2 >= dim {
            break;
        }
        c *= factor * ((n + 1) as f64).sqrt() / ((n + 2) as f64).sqrt();
        n += 2;
    }
    amps
}

fn extended_dim(dim: usize) -> usize {
    (2 * dim).max(dim + 16)
}

/// S(r, θ) D(α) |0⟩ in a space of dimension `ext`.
fn squeezed_coherent_extended(alpha: Complex64, r: f64, theta: f64, ext: usize) -> CVector {
    let basis = FockBasis::one_sided(ext).expect("extended dimension is at least 8");
    let disp = displacement(basis, alpha).expect("one-sided basis");
    let sq = squeeze(basis, r, theta).expect("checked squeeze parameter");
    let vac = crate::fock::number_state(basis, 0).expect("vacuum exists");
    sq.apply(&disp.apply(&vac).expect("same basis"))
        .expect("same basis")
        .amps()
        .clone()
}

/// Apply the truncation-loss guard, then normalize exactly to unit norm.
///
/// `required_dim` is only consulted on failure, to name a dimension that
/// would keep enough norm.
fn guarded_normalize(
    basis: FockBasis,
    amps: CVector,
    required_dim: impl FnOnce() -> usize,
) -> Result<Ket> {
    let norm = norm_of(&amps);
    if norm < NORM_FLOOR {
        return Err(Error::TruncationLoss {
            norm,
            required_dim: required_dim(),
        });
    }
    Ket::new(basis, amps.map(|z| z / norm))
}

/// Smallest power-of-two-ish dimension accepted by `fits`, capped at 4096.
fn doubling_search(start: usize, fits: impl Fn(usize) -> bool) -> usize {
    let mut d = start.saturating_mul(2).max(8);
    while d < 4096 && !fits(d) {
        d *= 2;
    }
    d
}

/// Matrix exponential by scaling-and-squaring on a plain Taylor series.
///
/// The generators used here are anti-Hermitian with norms of order the
/// basis dimension; after scaling below 1/2 the series converges to
/// working precision in under thirty terms.
pub(crate) fn expm(m: &CMatrix) -> CMatrix {
    let dim = m.nrows();
    let norm = one_norm(m);
    let squarings = if norm <= 0.5 {
        0
    } else {
        (norm / 0.5).log2().ceil() as u32
    };
    let scale = Complex64::new(2f64.powi(-(squarings as i32)), 0.0);
    let x = m.map(|z| z * scale);

    let mut result = CMatrix::identity(dim, dim);
    let mut term = CMatrix::identity(dim, dim);
    for k in 1..=40 {
        term = (&term * &x).map(|z| z / k as f64);
        result += &term;
        if one_norm(&term) < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Maximum absolute column sum.
fn one_norm(m: &CMatrix) -> f64 {
    let mut max = 0.0f64;
    for j in 0..m.ncols() {
        let s: f64 = m.column(j).iter().map(|z| z.norm()).sum();
        if s > max {
            max = s;
        }
    }
    max
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::number_state;
    use approx::assert_abs_diff_eq;

    fn one_sided(d: usize) -> FockBasis {
        FockBasis::one_sided(d).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coherent_zero_amplitude_is_vacuum() {
        let b = one_sided(8);
        let ket = prepare(b, StateKind::Coherent(c(0.0, 0.0))).unwrap();
        assert_eq!(ket, number_state(b, 0).unwrap());
    }

    #[test]
    fn squeezed_vacuum_with_zero_squeeze_is_vacuum() {
        let b = one_sided(8);
        let ket = prepare(b, StateKind::SqueezedVacuum { r: 0.0, theta: 0.0 }).unwrap();
        assert_eq!(ket, number_state(b, 0).unwrap());
    }

    #[test]
    fn coherent_mean_photon_number_is_alpha_squared() {
        let b = one_sided(32);
        let ket = prepare(b, StateKind::Coherent(c(2.0, 0.0))).unwrap();
        let n = build(b, LadderKind::Number).unwrap();
        let mean = n.expectation(&ket).unwrap();
        // oracle: Σ e^(−|α|²) |α|^(2n) n / n! = |α|² summed far past the cutoff
        let oracle: f64 = {
            let lambda = 4.0f64;
            let mut term = (-lambda).exp();
            let mut sum = 0.0;
            for k in 0..200 {
                sum += term * k as f64;
                term *= lambda / (k + 1) as f64;
            }
            sum
        };
        assert_abs_diff_eq!(oracle, 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mean.re, 4.0, epsilon = 1e-6);
        assert_abs_diff_eq!(mean.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn prepared_kets_are_unit_norm() {
        let b = one_sided(64);
        for kind in [
            StateKind::Coherent(c(1.5, -0.7)),
            StateKind::SqueezedVacuum { r: 0.8, theta: 1.3 },
            StateKind::SqueezedCoherent {
                alpha: c(1.0, 0.5),
                r: 0.6,
                theta: -0.4,
            },
        ] {
            let ket = prepare(b, kind).unwrap();
            assert_abs_diff_eq!(ket.norm(), 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn squeezed_vacuum_has_exactly_even_support() {
        let b = one_sided(64);
        let ket = prepare(b, StateKind::SqueezedVacuum { r: 0.9, theta: 2.1 }).unwrap();
        for n in (1..64).step_by(2) {
            assert!(ket.amp(n).unwrap().norm() <= 1e-14);
        }
    }

    #[test]
    fn closed_form_squeezed_vacuum_matches_matrix_exponential() {
        let b = one_sided(64);
        for (r, theta) in [(0.5, 0.0), (1.0, 1.1), (0.3, -2.0)] {
            let closed = prepare(b, StateKind::SqueezedVacuum { r, theta }).unwrap();
            // independent route: exponential of the quadratic generator in a
            // doubled space, truncated back down
            let ext = FockBasis::one_sided(128).unwrap();
            let vac = number_state(ext, 0).unwrap();
            let via_exp = squeeze(ext, r, theta).unwrap().apply(&vac).unwrap();
            for n in 0..64 {
                let diff = (closed.amp(n as i64).unwrap() - via_exp.amp(n as i64).unwrap()).norm();
                assert!(diff <= 1e-8, "amplitude {n} differs by {diff} at r={r}, θ={theta}");
            }
        }
    }

    #[test]
    fn bogoliubov_residual_vanishes_only_on_the_matching_squeezed_vacuum() {
        let b = one_sided(64);
        let sq = prepare(b, StateKind::SqueezedVacuum { r: 0.5, theta: 0.0 }).unwrap();
        assert!(bogoliubov_residual(&sq, 0.5, 0.0).unwrap() <= 1e-8);

        let vac = number_state(b, 0).unwrap();
        assert_eq!(bogoliubov_residual(&vac, 0.0, 0.0).unwrap(), 0.0);

        let coh = prepare(b, StateKind::Coherent(c(1.0, 0.0))).unwrap();
        assert!(bogoliubov_residual(&coh, 0.5, 0.0).unwrap() > 0.1);
    }

    #[test]
    fn squeezed_coherent_matches_the_analytic_mean_photon_number() {
        let b = one_sided(64);
        let (alpha, r, theta) = (c(1.5, 0.5), 0.8, 0.6);
        let ket = prepare(b, StateKind::SqueezedCoherent { alpha, r, theta }).unwrap();
        let n = build(b, LadderKind::Number).unwrap();
        let mean = n.expectation(&ket).unwrap().re;
        let mu = alpha * r.cosh() - Complex64::from_polar(1.0, theta) * alpha.conj() * r.sinh();
        let expect = mu.norm_sqr() + r.sinh().powi(2);
        assert_abs_diff_eq!(mean, expect, epsilon = 1e-8);
    }

    #[test]
    fn truncation_guard_reports_a_sufficient_dimension() {
        let b = one_sided(8);
        match prepare(b, StateKind::Coherent(c(3.0, 0.0))) {
            Err(Error::TruncationLoss { norm, required_dim }) => {
                assert!(norm < 0.999);
                assert!(required_dim > 8);
                // the reported dimension really does fit the state
                let big = FockBasis::one_sided(required_dim).unwrap();
                assert!(prepare(big, StateKind::Coherent(c(3.0, 0.0))).is_ok());
            }
            other => panic!("expected truncation-loss error, got {other:?}"),
        }
    }

    #[test]
    fn negative_squeeze_is_rejected() {
        let b = one_sided(8);
        assert!(matches!(
            prepare(b, StateKind::SqueezedVacuum { r: -0.1, theta: 0.0 }),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn displacement_generates_coherent_states() {
        let b = one_sided(48);
        let alpha = c(1.2, -0.3);
        let vac = number_state(b, 0).unwrap();
        let displaced = displacement(b, alpha).unwrap().apply(&vac).unwrap();
        let closed = prepare(b, StateKind::Coherent(alpha)).unwrap();
        for n in 0..32 {
            let diff = (displaced.amp(n).unwrap() - closed.amp(n).unwrap()).norm();
            assert!(diff <= 1e-10, "amplitude {n} differs by {diff}");
        }
    }
}
