//! Exponential phase operator families and their cosine/sine combinations.
//!
//! Three families are built, each in every representation available:
//!
//! * **Susskind-Glogower** (one-sided basis): the shift pair
//!   e⁺ = Σ |n⟩⟨n+1|, e⁻ = Σ |n+1⟩⟨n|, also obtained as e⁺ = a N^(−1/2),
//!   e⁻ = N^(1/2) a⁻¹ and as e⁺ = a†⁻¹ N^(1/2), e⁻ = N^(−1/2) a†. The pair
//!   is one-sided unitary: e⁺e⁻ = I while e⁻e⁺ = I − |0⟩⟨0|.
//! * **Unitary** (two-sided basis): the same shift extended over negative
//!   quantum numbers, either directly (a permutation in cyclic mode, hence
//!   exactly unitary) or from the extended inverses as e⁺ = a†⁻¹ |N^(1/2)|,
//!   e⁻ = |N^(1/2)| a⁻¹, which reproduces the direct form everywhere except
//!   the column crossing n = 0 where no inverse weight exists.
//! * **Measured** (one-sided basis): e⁺ = 2k a†⁻¹, e⁻ = 2k a⁻¹ with a
//!   scalar k fixed by the photon-number context of the state under
//!   measurement.
//!
//! For every family, cos φ = (e⁺ + e⁻)/2 and sin φ = (e⁺ − e⁻)/(2i); for
//! the measured family these reduce to k(a†⁻¹ + a⁻¹) and −ik(a†⁻¹ − a⁻¹).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{FockBasis, Op};
use crate::ladder::{build, LadderKind};

/// Representation choices for the Susskind-Glogower pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SgConstruction {
    /// Shift sums Σ |n⟩⟨n+1| and Σ |n+1⟩⟨n|.
    Direct,
    /// e⁺ = a N^(−1/2), e⁻ = N^(1/2) a⁻¹.
    FromAnnihilation,
    /// e⁺ = a†⁻¹ N^(1/2), e⁻ = N^(−1/2) a†.
    FromCreation,
}

/// Representation choices for the unitary pair on the two-sided lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitaryConstruction {
    /// Pure lattice shift; in cyclic mode a permutation, exactly unitary.
    Direct,
    /// e⁺ = a†⁻¹ |N^(1/2)|, e⁻ = |N^(1/2)| a⁻¹ from the extended inverses.
    FromInverses,
}

/// How the scalar k of the measured family is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KConvention {
    /// The published homodyne convention k = √(n(n+1)) / (2n+1).
    Paper,
    /// k solved per n so that ⟨n|cos²φ + sin²φ|n⟩ = 1.
    Normalized,
}

/// One phase-operator family together with its representation choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseFamily {
    SusskindGlogower(SgConstruction),
    Unitary(UnitaryConstruction),
    Measured(KConvention),
}

impl PhaseFamily {
    /// Whether kets/operators of this family live on a one-sided basis.
    pub fn needs_one_sided(&self) -> bool {
        !matches!(self, PhaseFamily::Unitary(_))
    }
}

/// The e^(+iφ) / e^(−iφ) pair of one family.
///
/// For the Susskind-Glogower and unitary families the minus member is the
/// adjoint of the plus member; for the measured family that is a measured
/// fact rather than part of the definition, so nothing here asserts it.
#[derive(Clone, Debug)]
pub struct ExpPhasePair {
    pub plus: Op,
    pub minus: Op,
    pub family: PhaseFamily,
}

fn require_one_sided(basis: FockBasis) -> Result<()> {
    if basis.is_one_sided() {
        Ok(())
    } else {
        Err(Error::WrongBasisKind {
            expected: "one-sided",
            got: basis,
        })
    }
}

fn require_two_sided(basis: FockBasis) -> Result<()> {
    if basis.is_one_sided() {
        Err(Error::WrongBasisKind {
            expected: "two-sided",
            got: basis,
        })
    } else {
        Ok(())
    }
}

/// Unit shift e⁺ = Σ |n⟩⟨n+1| over the lattice, with an optional cyclic
/// wrap entry ⟨max|·|min⟩ = 1 on two-sided cyclic bases.
fn direct_shift_down(basis: FockBasis, wrap: bool) -> Op {
    let mut mat = Op::zeros(basis).matrix().clone();
    let one = Complex64::new(1.0, 0.0);
    for n in basis.min_label()..basis.max_label() {
        let row = basis.index_of(n).expect("on lattice");
        let col = basis.index_of(n + 1).expect("on lattice");
        mat[(row, col)] = one;
    }
    if wrap {
        let row = basis.index_of(basis.max_label()).expect("on lattice");
        let col = basis.index_of(basis.min_label()).expect("on lattice");
        mat[(row, col)] = one;
    }
    Op::new(basis, mat).expect("square by construction")
}

/// Unit shift e⁻ = Σ |n+1⟩⟨n|, with an optional wrap entry ⟨min|·|max⟩ = 1.
fn direct_shift_up(basis: FockBasis, wrap: bool) -> Op {
    let mut mat = Op::zeros(basis).matrix().clone();
    let one = Complex64::new(1.0, 0.0);
    for n in basis.min_label()..basis.max_label() {
        let row = basis.index_of(n + 1).expect("on lattice");
        let col = basis.index_of(n).expect("on lattice");
        mat[(row, col)] = one;
    }
    if wrap {
        let row = basis.index_of(basis.min_label()).expect("on lattice");
        let col = basis.index_of(basis.max_label()).expect("on lattice");
        mat[(row, col)] = one;
    }
    Op::new(basis, mat).expect("square by construction")
}

/// Susskind-Glogower pair on a one-sided basis.
///
/// All three constructions agree entrywise up to rounding; the identities
/// they satisfy are exercised by [`crate::analysis::verify_all`].
pub fn sg_pair(basis: FockBasis, construction: SgConstruction) -> Result<ExpPhasePair> {
    require_one_sided(basis)?;
    let (plus, minus) = match construction {
        SgConstruction::Direct => (direct_shift_down(basis, false), direct_shift_up(basis, false)),
        SgConstruction::FromAnnihilation => {
            let a = build(basis, LadderKind::Annihilate)?;
            let inv_a = build(basis, LadderKind::InvAnnihilate)?;
            let sqrt_n = build(basis, LadderKind::SqrtNumber)?;
            let inv_sqrt_n = build(basis, LadderKind::InvSqrtNumber)?;
            (a.compose(&inv_sqrt_n)?, sqrt_n.compose(&inv_a)?)
        }
        SgConstruction::FromCreation => {
            let adag = build(basis, LadderKind::Create)?;
            let inv_c = build(basis, LadderKind::InvCreate)?;
            let sqrt_n = build(basis, LadderKind::SqrtNumber)?;
            let inv_sqrt_n = build(basis, LadderKind::InvSqrtNumber)?;
            (inv_c.compose(&sqrt_n)?, inv_sqrt_n.compose(&adag)?)
        }
    };
    Ok(ExpPhasePair {
        plus,
        minus,
        family: PhaseFamily::SusskindGlogower(construction),
    })
}

/// Unitary pair on a two-sided basis.
pub fn unitary_pair(basis: FockBasis, construction: UnitaryConstruction) -> Result<ExpPhasePair> {
    require_two_sided(basis)?;
    let wrap = basis.boundary() == Some(crate::fock::Boundary::Cyclic);
    let (plus, minus) = match construction {
        UnitaryConstruction::Direct => {
            (direct_shift_down(basis, wrap), direct_shift_up(basis, wrap))
        }
        UnitaryConstruction::FromInverses => {
            let inv_a = crate::ladder::extended_inverse(basis, LadderKind::InvAnnihilate)?;
            let inv_c = crate::ladder::extended_inverse(basis, LadderKind::InvCreate)?;
            let amp = build(basis, LadderKind::AbsSqrtNumber)?;
            (inv_c.compose(&amp)?, amp.compose(&inv_a)?)
        }
    };
    Ok(ExpPhasePair {
        plus,
        minus,
        family: PhaseFamily::Unitary(construction),
    })
}

/// Measured pair e± = 2k a^(∓1)… built for one photon-number context.
///
/// k is a plain number, not an operator: it is fixed by the photon number
/// of the field being measured, so the pair is meaningful for expectations
/// in states concentrated near `n_context`. The context must stay below
/// the truncation boundary so the inverse columns it probes are intact.
pub fn measured_pair(
    basis: FockBasis,
    k_convention: KConvention,
    n_context: i64,
) -> Result<ExpPhasePair> {
    require_one_sided(basis)?;
    let max = basis.max_label() - 1;
    if n_context < 0 || n_context > max {
        return Err(Error::ContextAtBoundary { n: n_context, max });
    }
    let k = k_of_n(n_context, k_convention);
    let two_k = Complex64::new(2.0 * k, 0.0);
    let plus = build(basis, LadderKind::InvCreate)?.scale(two_k);
    let minus = build(basis, LadderKind::InvAnnihilate)?.scale(two_k);
    Ok(ExpPhasePair {
        plus,
        minus,
        family: PhaseFamily::Measured(k_convention),
    })
}

/// Scalar k of the measured family at photon number `n`.
///
/// `Paper`: k = √(n(n+1)) / (2n+1), which vanishes at n = 0.
/// `Normalized`: the positive solution of 2k²(1/(n+1) + 1/n) = 1 (the 1/n
/// term absent at n = 0), i.e. the value that makes the measured trig sum
/// equal 1 at that n; finite for every n ≥ 0, equal to 1/√2 at n = 0.
pub fn k_of_n(n: i64, convention: KConvention) -> f64 {
    assert!(n >= 0, "photon number must be nonnegative");
    let nf = n as f64;
    match convention {
        KConvention::Paper => (nf * (nf + 1.0)).sqrt() / (2.0 * nf + 1.0),
        KConvention::Normalized => {
            let diag_sum = 1.0 / (nf + 1.0) + if n > 0 { 1.0 / nf } else { 0.0 };
            (1.0 / (2.0 * diag_sum)).sqrt()
        }
    }
}

/// cos φ = (e⁺ + e⁻)/2; Hermitian whenever the pair is mutually adjoint.
pub fn cosine(pair: &ExpPhasePair) -> Op {
    pair.plus
        .add(&pair.minus)
        .expect("pair members share a basis")
        .scale(Complex64::new(0.5, 0.0))
}

/// sin φ = (e⁺ − e⁻)/(2i).
pub fn sine(pair: &ExpPhasePair) -> Op {
    pair.plus
        .sub(&pair.minus)
        .expect("pair members share a basis")
        .scale(Complex64::new(0.0, -0.5))
}
