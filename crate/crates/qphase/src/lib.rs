//! Quantum phase operators built from inverses of the ladder operators,
//! realized as dense complex matrices on truncated number bases.
//!
//! The annihilation operator has a right inverse a⁻¹ and the creation
//! operator a left inverse a†⁻¹ (a a⁻¹ = a†⁻¹ a† = I, while the reversed
//! products equal I − |0⟩⟨0|). These one-sided inverses are enough to
//! express three families of exponential phase operators:
//!
//! * the **Susskind-Glogower** pair on the ordinary number ladder,
//! * the **unitary** pair on a lattice extended over negative quantum
//!   numbers, where the shift can be exactly unitary,
//! * the **measured** (quadrature) pair scaled by a photon-number-dependent
//!   constant k.
//!
//! The crate builds every one of these constructions as an explicit
//! matrix, verifies the operator identities they satisfy (reporting
//! truncation artifacts instead of hiding them), and evaluates phase
//! statistics and phase distributions for number, coherent and squeezed
//! states.
//!
//! Entry points:
//!
//! * [`fock`] — bases, kets, operators, residual norms;
//! * [`ladder`] — ladder operators, their inverses, the extended two-sided
//!   inverses;
//! * [`phase`] — the three exponential phase-operator families and their
//!   cosine/sine combinations;
//! * [`states`] — coherent and squeezed state preparation with two
//!   independent construction routes;
//! * [`analysis`] — identity verification reports, trig-sum tables, phase
//!   statistics and distributions;
//! * [`cli`] — the `qphase` command-line front end over all of the above.
//!
//! The `examples/` directory walks through each capability; start with
//! `ladder_inverses` and `sg_phase`.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fock;
pub mod ladder;
pub mod phase;
pub mod states;

pub use error::{Error, Result};
pub use fock::{number_state, Boundary, FockBasis, Ket, Op};
pub use ladder::{build as build_ladder, extended_inverse, LadderKind};
pub use phase::{
    cosine, k_of_n, measured_pair, sg_pair, sine, unitary_pair, ExpPhasePair, KConvention,
    PhaseFamily, SgConstruction, UnitaryConstruction,
};
pub use states::{bogoliubov_residual, displacement, prepare, squeeze, StateKind};
