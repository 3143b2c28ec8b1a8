//! Matrix constructors for the elementary ladder operators and their
//! one-sided inverses.
//!
//! On the one-sided basis the actions are
//!
//! ```text
//! a |n⟩      = √n |n−1⟩
//! a† |n⟩     = √(n+1) |n+1⟩
//! a⁻¹ |n⟩    = |n+1⟩ / √(n+1)
//! a†⁻¹ |n⟩   = |n−1⟩ / √n          (0 for n = 0)
//! N^(1/2)    = diag(√n),  N^(−1/2) = diag(1/√n, 0 at n = 0)
//! ```
//!
//! a⁻¹ is a right inverse of a and a†⁻¹ a left inverse of a†; the reversed
//! products equal I − |0⟩⟨0|. On a truncated basis the top state has no
//! image under raising, so the affected column is zero-filled; verification
//! reports name those rows instead of silently wrapping them.
//!
//! On the two-sided lattice the inverse weights read 1/√|n|, which is the
//! unique extension making the products of the extended inverses with the
//! amplitude operator diag(√|n|) equal to the identity away from n = 0. No
//! weight exists across the n = 0 crossing (it would be 1/√0), so that one
//! column is zero-filled and shows up in every comparison that crosses it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{Boundary, FockBasis, Op};

/// Which elementary operator to build.
///
/// `SqrtNumber`/`InvSqrtNumber` exist on the one-sided basis only;
/// `AbsSqrtNumber` (the amplitude operator diag(√|n|)) on the two-sided
/// basis only. Everything else is defined on either.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderKind {
    Annihilate,
    Create,
    InvAnnihilate,
    InvCreate,
    Number,
    SqrtNumber,
    InvSqrtNumber,
    AbsSqrtNumber,
    VacuumProjector,
    Identity,
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Build the matrix of `which` on `basis`.
pub fn build(basis: FockBasis, which: LadderKind) -> Result<Op> {
    use LadderKind::*;
    match (which, basis.is_one_sided()) {
        (SqrtNumber | InvSqrtNumber, false) => {
            return Err(Error::IncompatibleOperator {
                op: "square-root number operator",
                basis,
                rule: "defined on the one-sided basis only",
            })
        }
        (AbsSqrtNumber, true) => {
            return Err(Error::IncompatibleOperator {
                op: "amplitude operator diag(sqrt|n|)",
                basis,
                rule: "defined on the two-sided basis only",
            })
        }
        _ => {}
    }

    let op = match which {
        Identity => Op::identity(basis),
        VacuumProjector => {
            let mut op = Op::zeros(basis).matrix().clone();
            let row = basis
                .index_of(0)
                .expect("every valid basis contains n = 0");
            op[(row, row)] = real(1.0);
            Op::new(basis, op)?
        }
        Number => diagonal(basis, |n| n as f64),
        SqrtNumber => diagonal(basis, |n| (n as f64).sqrt()),
        InvSqrtNumber => diagonal(basis, |n| if n == 0 { 0.0 } else { 1.0 / (n as f64).sqrt() }),
        AbsSqrtNumber => diagonal(basis, |n| (n.unsigned_abs() as f64).sqrt()),
        Annihilate => match basis {
            FockBasis::OneSided { .. } => {
                // ⟨n−1|a|n⟩ = √n
                shift(basis, Step::Down, |n| (n as f64).sqrt(), None)
            }
            FockBasis::TwoSided { .. } => {
                // completeness convention: ⟨n−1|a|n⟩ = √|n|, sign +
                shift(basis, Step::Down, |n| (n.abs() as f64).sqrt(), None)
            }
        },
        Create => build(basis, Annihilate)?.adjoint(),
        InvAnnihilate => match basis {
            FockBasis::OneSided { .. } => {
                // ⟨n+1|·|n⟩ = 1/√(n+1); the top column has no image and stays zero
                shift(basis, Step::Up, |t| 1.0 / (t as f64).sqrt(), None)
            }
            FockBasis::TwoSided { .. } => extended_inverse(basis, InvAnnihilate)?,
        },
        InvCreate => match basis {
            FockBasis::OneSided { .. } => {
                // ⟨n−1|·|n⟩ = 1/√n for n ≥ 1; zero column at n = 0
                shift(basis, Step::Down, |n| 1.0 / (n as f64).sqrt(), Some(0))
            }
            FockBasis::TwoSided { .. } => extended_inverse(basis, InvCreate)?,
        },
    };
    Ok(op)
}

/// Extended inverses on the two-sided lattice.
///
/// `InvAnnihilate`: ⟨n+1|·|n⟩ = 1/√|n+1|, zero column where n+1 = 0.
/// `InvCreate`: ⟨n−1|·|n⟩ = 1/√|n|, zero column at n = 0.
/// Edge columns follow the basis boundary mode: `Truncated` zero-fills,
/// `Cyclic` wraps the shift with the same 1/√|label| weight rule.
pub fn extended_inverse(basis: FockBasis, which: LadderKind) -> Result<Op> {
    if basis.is_one_sided() {
        return Err(Error::WrongBasisKind {
            expected: "two-sided",
            got: basis,
        });
    }
    match which {
        LadderKind::InvAnnihilate => {
            // weight carried by the target label |n+1|
            Ok(shift(basis, Step::Up, |t| 1.0 / (t.abs() as f64).sqrt(), Some(0)))
        }
        LadderKind::InvCreate => {
            // weight carried by the source label |n|
            Ok(shift(basis, Step::Down, |s| 1.0 / (s.abs() as f64).sqrt(), Some(0)))
        }
        other => Err(Error::IncompatibleOperator {
            op: "extended inverse",
            basis,
            rule: match other {
                LadderKind::Annihilate | LadderKind::Create => {
                    "only the inverse ladder operators have an extended form"
                }
                _ => "not an inverse ladder operator",
            },
        }),
    }
}

enum Step {
    /// target = source + 1
    Up,
    /// target = source − 1
    Down,
}

/// Single-shift matrix with a weight depending on one of the labels.
///
/// For `Step::Up` the weight function receives the target label t = n + 1,
/// for `Step::Down` the source label n; `zero_label` marks a label whose
/// weight is undefined (the matching column is left zero). Out-of-lattice
/// targets are dropped on one-sided and truncated bases and wrapped on
/// cyclic ones, keeping the same weight rule on the wrapped label.
fn shift(basis: FockBasis, step: Step, weight: impl Fn(i64) -> f64, zero_label: Option<i64>) -> Op {
    let mut mat = Op::zeros(basis).matrix().clone();
    let cyclic = basis.boundary() == Some(Boundary::Cyclic);
    for source in basis.labels() {
        let raw_target = match step {
            Step::Up => source + 1,
            Step::Down => source - 1,
        };
        let target = match basis.index_of(raw_target) {
            Some(_) => raw_target,
            None if cyclic => {
                if raw_target > basis.max_label() {
                    basis.min_label()
                } else {
                    basis.max_label()
                }
            }
            None => continue,
        };
        let weight_label = match step {
            Step::Up => target,
            Step::Down => source,
        };
        if zero_label == Some(weight_label) {
            continue;
        }
        let w = weight(weight_label);
        let (ti, si) = (
            basis.index_of(target).expect("wrapped onto lattice"),
            basis.index_of(source).expect("label iterates the lattice"),
        );
        mat[(ti, si)] = real(w);
    }
    Op::new(basis, mat).expect("square by construction")
}

fn diagonal(basis: FockBasis, f: impl Fn(i64) -> f64) -> Op {
    let mut mat = Op::zeros(basis).matrix().clone();
    for n in basis.labels() {
        let i = basis.index_of(n).expect("label iterates the lattice");
        mat[(i, i)] = real(f(n));
    }
    Op::new(basis, mat).expect("square by construction")
}
