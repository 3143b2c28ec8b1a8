//! Verification of the operator identities and computation of phase
//! statistics, with machine-readable reports.
//!
//! Failures are data, not exceptions: some published claims fail on the
//! finite lattice (the measured trig sum under the quoted k, the inverse
//! construction of the unitary pair at the n = 0 crossing), so each report
//! records both the full-basis residual and the residual after the
//! documented exclusions, and a claim flag per row where applicable.

use std::ops::RangeInclusive;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{number_state, Boundary, FockBasis, Ket, Op};
use crate::ladder::{build, LadderKind};
use crate::phase::{
    cosine, measured_pair, sg_pair, sine, unitary_pair, ExpPhasePair, PhaseFamily,
    SgConstruction, UnitaryConstruction,
};

/// Basis sizes shared by a verification run: one-sided dimension for the
/// Susskind-Glogower and measured families, half-width and boundary mode
/// for the unitary family.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BasisParams {
    pub dim: usize,
    pub half_width: usize,
    pub boundary: Boundary,
}

impl BasisParams {
    pub fn one_sided(&self) -> Result<FockBasis> {
        FockBasis::one_sided(self.dim)
    }

    pub fn two_sided(&self) -> Result<FockBasis> {
        FockBasis::two_sided(self.half_width, self.boundary)
    }
}

/// Result of checking one operator identity.
///
/// `residual_full` is the max-abs deviation over the whole matrix,
/// `residual_interior` the same after deleting the rows/columns named in
/// `excluded_rows` (quantum-number labels); `passed` refers to the
/// interior residual.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub residual_full: f64,
    pub residual_interior: f64,
    pub excluded_rows: Vec<i64>,
    pub passed: bool,
}

/// Whether a failure of the named identity should fail a verification run.
///
/// These are the identities claimed without qualification; the
/// representation agreements and the left-inverse defect carry documented
/// discrepancies or exclusions and are reported without gating.
pub fn gates_exit(name: &str) -> bool {
    matches!(
        name,
        "ladder_right_inverses"
            | "sg_direct_plus_minus"
            | "sg_direct_minus_plus"
            | "sg_annihilation_plus_minus"
            | "sg_annihilation_minus_plus"
            | "sg_creation_plus_minus"
            | "sg_creation_minus_plus"
            | "unitary_plus_minus"
            | "unitary_minus_plus"
    )
}

struct ReportBuilder<'a> {
    basis: FockBasis,
    tol: f64,
    excluded_labels: &'a [i64],
}

impl ReportBuilder<'_> {
    fn rows(&self) -> Vec<usize> {
        self.excluded_labels
            .iter()
            .map(|&n| self.basis.index_of(n).expect("exclusion label on lattice"))
            .collect()
    }

    /// Report on `max |lhs_i − rhs|` over the listed products.
    fn product_report(&self, name: &str, pairs: &[(&Op, &Op)]) -> Result<IdentityReport> {
        let rows = self.rows();
        let mut full = 0.0f64;
        let mut interior = 0.0f64;
        for (lhs, rhs) in pairs {
            full = full.max(lhs.residual_norm(rhs, &[])?);
            interior = interior.max(lhs.residual_norm(rhs, &rows)?);
        }
        Ok(IdentityReport {
            name: name.to_string(),
            residual_full: full,
            residual_interior: interior,
            excluded_rows: self.excluded_labels.to_vec(),
            passed: interior <= self.tol,
        })
    }
}

/// Check every identity the operator constructions are supposed to
/// satisfy, at the given sizes, returning one report per identity.
///
/// The twelve reports cover: the right- and left-inverse structure of the
/// ladder operators; the four one-sided-unitarity products of the
/// Susskind-Glogower pair in both inverse-operator representations plus
/// the direct one; the agreement of the three representations; the
/// unitarity products of the direct unitary pair; and the agreement of the
/// inverse-built unitary pair with the direct one (which fails exactly on
/// the column crossing n = 0 — that gap is reported, not hidden).
pub fn verify_all(params: &BasisParams, tol: f64) -> Result<Vec<IdentityReport>> {
    let os = params.one_sided()?;
    let ts = params.two_sided()?;
    let d = os.dim();
    let mut reports = Vec::with_capacity(12);

    // one-sided pieces
    let a = build(os, LadderKind::Annihilate)?;
    let adag = build(os, LadderKind::Create)?;
    let inv_a = build(os, LadderKind::InvAnnihilate)?;
    let inv_c = build(os, LadderKind::InvCreate)?;
    let id = Op::identity(os);
    let id_minus_vac = id.sub(&build(os, LadderKind::VacuumProjector)?)?;

    // interior window: the top two indices of the one-sided ladder, the
    // widest exclusion any verified product needs
    let os_window = [d as i64 - 2, d as i64 - 1];
    let osb = ReportBuilder {
        basis: os,
        tol,
        excluded_labels: &os_window,
    };

    reports.push(osb.product_report(
        "ladder_right_inverses",
        &[(&a.compose(&inv_a)?, &id), (&inv_c.compose(&adag)?, &id)],
    )?);
    reports.push(osb.product_report(
        "ladder_left_inverses",
        &[
            (&inv_a.compose(&a)?, &id_minus_vac),
            (&adag.compose(&inv_c)?, &id_minus_vac),
        ],
    )?);

    let sg_direct = sg_pair(os, SgConstruction::Direct)?;
    let sg_ann = sg_pair(os, SgConstruction::FromAnnihilation)?;
    let sg_cre = sg_pair(os, SgConstruction::FromCreation)?;
    for (label, pair) in [
        ("sg_direct", &sg_direct),
        ("sg_annihilation", &sg_ann),
        ("sg_creation", &sg_cre),
    ] {
        reports.push(osb.product_report(
            &format!("{label}_plus_minus"),
            &[(&pair.plus.compose(&pair.minus)?, &id)],
        )?);
        reports.push(osb.product_report(
            &format!("{label}_minus_plus"),
            &[(&pair.minus.compose(&pair.plus)?, &id_minus_vac)],
        )?);
    }

    reports.push(osb.product_report(
        "sg_representation_agreement",
        &[
            (&sg_direct.plus, &sg_ann.plus),
            (&sg_direct.minus, &sg_ann.minus),
            (&sg_direct.plus, &sg_cre.plus),
            (&sg_direct.minus, &sg_cre.minus),
            (&sg_ann.plus, &sg_cre.plus),
            (&sg_ann.minus, &sg_cre.minus),
        ],
    )?);

    // two-sided pieces
    let m = params.half_width as i64;
    let edge_window: Vec<i64> = match params.boundary {
        Boundary::Cyclic => vec![],
        Boundary::Truncated => vec![-m, m],
    };
    let tsb = ReportBuilder {
        basis: ts,
        tol,
        excluded_labels: &edge_window,
    };
    let uni_direct = unitary_pair(ts, UnitaryConstruction::Direct)?;
    let tid = Op::identity(ts);
    reports.push(tsb.product_report(
        "unitary_plus_minus",
        &[(&uni_direct.plus.compose(&uni_direct.minus)?, &tid)],
    )?);
    reports.push(tsb.product_report(
        "unitary_minus_plus",
        &[(&uni_direct.minus.compose(&uni_direct.plus)?, &tid)],
    )?);

    // the inverse-operator construction can only differ on the columns
    // whose weight would be 1/√0: n = 0 for the plus member, n = −1 for
    // the minus member
    let uni_inv = unitary_pair(ts, UnitaryConstruction::FromInverses)?;
    let mut crossing_window = vec![-1, 0];
    crossing_window.extend_from_slice(&edge_window);
    crossing_window.sort_unstable();
    let tsb_cross = ReportBuilder {
        basis: ts,
        tol,
        excluded_labels: &crossing_window,
    };
    reports.push(tsb_cross.product_report(
        "unitary_representation_agreement",
        &[
            (&uni_inv.plus, &uni_direct.plus),
            (&uni_inv.minus, &uni_direct.minus),
        ],
    )?);

    Ok(reports)
}

/// Number-state trigonometric moments of one phase family.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TrigStats {
    pub n: i64,
    pub cos_sq: f64,
    pub sin_sq: f64,
    pub sum: f64,
    /// Whether the sum equals 1 within the run tolerance.
    pub claim_holds: bool,
}

fn allowed_trig_range(family: PhaseFamily, basis: FockBasis) -> (i64, i64) {
    match family {
        PhaseFamily::SusskindGlogower(_) | PhaseFamily::Measured(_) => {
            // stay two below the dimension: the trig products at n probe
            // the columns next to n, and the top column is corrupted
            (0, basis.max_label() - 1)
        }
        PhaseFamily::Unitary(_) => match basis.boundary() {
            Some(Boundary::Cyclic) => (basis.min_label(), basis.max_label()),
            _ => (basis.min_label() + 1, basis.max_label() - 1),
        },
    }
}

/// ⟨n|cos²φ|n⟩, ⟨n|sin²φ|n⟩ and their sum for each n in `range`.
///
/// For the measured family the pair is rebuilt per n with that n as the
/// photon-number context. The range must keep clear of the corrupted
/// boundary columns, or a domain error names the allowed window.
pub fn trig_sum_table(
    family: PhaseFamily,
    params: &BasisParams,
    range: RangeInclusive<i64>,
    tol: f64,
) -> Result<Vec<TrigStats>> {
    let basis = if family.needs_one_sided() {
        params.one_sided()?
    } else {
        params.two_sided()?
    };
    let (lo, hi) = (*range.start(), *range.end());
    let (min, max) = allowed_trig_range(family, basis);
    if lo > hi || lo < min || hi > max {
        return Err(Error::RangeTouchesBoundary { lo, hi, min, max });
    }

    let fixed_squares = match family {
        PhaseFamily::SusskindGlogower(c) => Some(trig_squares(&sg_pair(basis, c)?)),
        PhaseFamily::Unitary(c) => Some(trig_squares(&unitary_pair(basis, c)?)),
        PhaseFamily::Measured(_) => None,
    };

    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let ket = number_state(basis, n)?;
        let (cos_sq, sin_sq) = match family {
            PhaseFamily::Measured(conv) => {
                let (c2, s2) = trig_squares(&measured_pair(basis, conv, n)?);
                (c2.expectation(&ket)?.re, s2.expectation(&ket)?.re)
            }
            _ => {
                let (c2, s2) = fixed_squares.as_ref().expect("precomputed above");
                (c2.expectation(&ket)?.re, s2.expectation(&ket)?.re)
            }
        };
        let sum = cos_sq + sin_sq;
        rows.push(TrigStats {
            n,
            cos_sq,
            sin_sq,
            sum,
            claim_holds: (sum - 1.0).abs() < tol,
        });
    }
    Ok(rows)
}

fn trig_squares(pair: &ExpPhasePair) -> (Op, Op) {
    let cos = cosine(pair);
    let sin = sine(pair);
    (
        cos.compose(&cos).expect("same basis"),
        sin.compose(&sin).expect("same basis"),
    )
}

/// First and second trigonometric moments of a state under one family.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct PhaseStatistics {
    pub mean_cos: f64,
    pub mean_sin: f64,
    pub var_cos: f64,
    pub var_sin: f64,
    pub trig_sum: f64,
}

/// Expectations and variances of cos φ and sin φ in `ket`.
///
/// The ket must live on the family's basis kind. For the measured family
/// the photon-number context is the rounded mean photon number of the ket.
pub fn phase_statistics(family: PhaseFamily, ket: &Ket) -> Result<PhaseStatistics> {
    let basis = ket.basis();
    if family.needs_one_sided() != basis.is_one_sided() {
        return Err(Error::WrongBasisKind {
            expected: if family.needs_one_sided() {
                "one-sided"
            } else {
                "two-sided"
            },
            got: basis,
        });
    }
    let pair = match family {
        PhaseFamily::SusskindGlogower(c) => sg_pair(basis, c)?,
        PhaseFamily::Unitary(c) => unitary_pair(basis, c)?,
        PhaseFamily::Measured(conv) => {
            let number = build(basis, LadderKind::Number)?;
            let n_context = number.expectation(ket)?.re.round() as i64;
            measured_pair(basis, conv, n_context)?
        }
    };
    let cos = cosine(&pair);
    let sin = sine(&pair);
    let mean_cos = cos.expectation(ket)?.re;
    let mean_sin = sin.expectation(ket)?.re;
    let cos_sq = cos.compose(&cos)?.expectation(ket)?.re;
    let sin_sq = sin.compose(&sin)?.expectation(ket)?.re;
    Ok(PhaseStatistics {
        mean_cos,
        mean_sin,
        var_cos: cos_sq - mean_cos * mean_cos,
        var_sin: sin_sq - mean_sin * mean_sin,
        trig_sum: cos_sq + sin_sq,
    })
}

/// One sample of the phase distribution.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct PhaseSample {
    pub phi: f64,
    pub density: f64,
}

/// Phase distribution P(φ) = |Σₙ e^(−inφ) cₙ|² / 2π on a uniform grid of
/// `bins` points over [−π, π).
///
/// For a unit-norm ket the density integrates to 1; number states are
/// uniform at 1/2π.
pub fn phase_distribution(ket: &Ket, bins: usize) -> Result<Vec<PhaseSample>> {
    let basis = ket.basis();
    if !basis.is_one_sided() {
        return Err(Error::WrongBasisKind {
            expected: "one-sided",
            got: basis,
        });
    }
    if bins < 4 {
        return Err(Error::TooFewBins(bins));
    }
    let amps = ket.amps();
    let step = 2.0 * std::f64::consts::PI / bins as f64;
    let mut samples = Vec::with_capacity(bins);
    for j in 0..bins {
        let phi = -std::f64::consts::PI + step * j as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (n, c) in amps.iter().enumerate() {
            z += c * Complex64::from_polar(1.0, -(n as f64) * phi);
        }
        samples.push(PhaseSample {
            phi,
            density: z.norm_sqr() / (2.0 * std::f64::consts::PI),
        });
    }
    Ok(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::KConvention;
    use crate::states::{prepare, StateKind};
    use approx::assert_abs_diff_eq;

    const EPS4: f64 = 4.0 * f64::EPSILON;
    const TOL: f64 = 1e-12;

    fn params(dim: usize, half_width: usize, boundary: Boundary) -> BasisParams {
        BasisParams {
            dim,
            half_width,
            boundary,
        }
    }

    #[test]
    fn verify_all_returns_twelve_reports_and_all_pass() {
        let reports = verify_all(&params(16, 6, Boundary::Cyclic), TOL).unwrap();
        assert_eq!(reports.len(), 12);
        for r in &reports {
            assert!(r.passed, "{} residual {}", r.name, r.residual_interior);
            assert!(r.residual_interior <= r.residual_full);
        }
    }

    #[test]
    fn right_inverse_report_names_the_truncation_artifact() {
        let reports = verify_all(&params(16, 6, Boundary::Cyclic), TOL).unwrap();
        let r = reports
            .iter()
            .find(|r| r.name == "ladder_right_inverses")
            .unwrap();
        // the corrupted top column shows up at full basis and is excluded
        assert_abs_diff_eq!(r.residual_full, 1.0);
        assert!(r.residual_interior <= EPS4);
        assert_eq!(r.excluded_rows, vec![14, 15]);
    }

    #[test]
    fn left_inverse_products_have_no_truncation_artifact() {
        let reports = verify_all(&params(16, 6, Boundary::Cyclic), TOL).unwrap();
        let r = reports
            .iter()
            .find(|r| r.name == "ladder_left_inverses")
            .unwrap();
        assert!(r.residual_full <= EPS4);
    }

    #[test]
    fn direct_sg_products_are_exact() {
        let reports = verify_all(&params(16, 6, Boundary::Cyclic), TOL).unwrap();
        let mp = reports
            .iter()
            .find(|r| r.name == "sg_direct_minus_plus")
            .unwrap();
        // shift down then up never leaves the space: exact at full basis
        assert_eq!(mp.residual_full, 0.0);
        let pm = reports
            .iter()
            .find(|r| r.name == "sg_direct_plus_minus")
            .unwrap();
        assert_eq!(pm.residual_interior, 0.0);
        assert_eq!(pm.residual_full, 1.0);
    }

    #[test]
    fn unitary_agreement_report_carries_the_crossing_gap() {
        let reports = verify_all(&params(16, 6, Boundary::Cyclic), TOL).unwrap();
        let r = reports
            .iter()
            .find(|r| r.name == "unitary_representation_agreement")
            .unwrap();
        assert!(r.passed);
        assert_abs_diff_eq!(r.residual_full, 1.0);
        assert_eq!(r.excluded_rows, vec![-1, 0]);
    }

    #[test]
    fn truncated_mode_excludes_the_lattice_edges() {
        let reports = verify_all(&params(16, 6, Boundary::Truncated), TOL).unwrap();
        let r = reports.iter().find(|r| r.name == "unitary_plus_minus").unwrap();
        assert!(r.passed);
        assert_eq!(r.excluded_rows, vec![-6, 6]);
        assert_abs_diff_eq!(r.residual_full, 1.0);
    }

    #[test]
    fn exit_gating_covers_the_unconditional_identities_only() {
        assert!(gates_exit("ladder_right_inverses"));
        assert!(gates_exit("sg_annihilation_minus_plus"));
        assert!(gates_exit("unitary_minus_plus"));
        assert!(!gates_exit("ladder_left_inverses"));
        assert!(!gates_exit("sg_representation_agreement"));
        assert!(!gates_exit("unitary_representation_agreement"));
    }

    #[test]
    fn sg_trig_sums_are_one_with_quarter_vacuum_terms() {
        let table = trig_sum_table(
            PhaseFamily::SusskindGlogower(SgConstruction::Direct),
            &params(16, 6, Boundary::Cyclic),
            0..=14,
            TOL,
        )
        .unwrap();
        assert_eq!(table.len(), 15);
        let vac = &table[0];
        assert_abs_diff_eq!(vac.cos_sq, 0.25, epsilon = TOL);
        assert_abs_diff_eq!(vac.sin_sq, 0.25, epsilon = TOL);
        assert_abs_diff_eq!(vac.sum, 0.5, epsilon = TOL);
        assert!(!vac.claim_holds);
        for row in &table[1..] {
            assert_abs_diff_eq!(row.sum, 1.0, epsilon = TOL);
            assert!(row.claim_holds, "n={}", row.n);
        }
    }

    #[test]
    fn sg_trig_rows_do_not_depend_on_the_dimension() {
        let small = trig_sum_table(
            PhaseFamily::SusskindGlogower(SgConstruction::FromAnnihilation),
            &params(16, 6, Boundary::Cyclic),
            0..=14,
            TOL,
        )
        .unwrap();
        let large = trig_sum_table(
            PhaseFamily::SusskindGlogower(SgConstruction::FromAnnihilation),
            &params(64, 6, Boundary::Cyclic),
            0..=14,
            TOL,
        )
        .unwrap();
        for (s, l) in small.iter().zip(&large) {
            assert_abs_diff_eq!(s.cos_sq, l.cos_sq, epsilon = TOL);
            assert_abs_diff_eq!(s.sin_sq, l.sin_sq, epsilon = TOL);
        }
    }

    #[test]
    fn unitary_trig_sums_are_one_on_the_whole_lattice() {
        let table = trig_sum_table(
            PhaseFamily::Unitary(UnitaryConstruction::Direct),
            &params(16, 4, Boundary::Cyclic),
            -4..=4,
            TOL,
        )
        .unwrap();
        for row in &table {
            assert_eq!(row.sum, 1.0, "n={}", row.n);
            assert!(row.claim_holds);
        }
    }

    #[test]
    fn measured_trig_sums_follow_the_diagonal_algebra() {
        // brute-force oracle: with scalar k the sum is 2k²(1/(n+1) + 1/n)
        let table = trig_sum_table(
            PhaseFamily::Measured(KConvention::Paper),
            &params(16, 4, Boundary::Cyclic),
            0..=10,
            TOL,
        )
        .unwrap();
        for row in &table {
            let expect = if row.n == 0 {
                0.0
            } else {
                2.0 / (2.0 * row.n as f64 + 1.0)
            };
            assert_abs_diff_eq!(row.sum, expect, epsilon = TOL);
            assert!(!row.claim_holds, "n={} sum={}", row.n, row.sum);
        }

        let normalized = trig_sum_table(
            PhaseFamily::Measured(KConvention::Normalized),
            &params(16, 4, Boundary::Cyclic),
            0..=10,
            TOL,
        )
        .unwrap();
        for row in &normalized {
            assert_abs_diff_eq!(row.sum, 1.0, epsilon = TOL);
            assert!(row.claim_holds, "n={}", row.n);
        }
    }

    #[test]
    fn trig_range_must_stay_clear_of_the_boundary() {
        let r = trig_sum_table(
            PhaseFamily::SusskindGlogower(SgConstruction::Direct),
            &params(16, 4, Boundary::Cyclic),
            0..=15,
            TOL,
        );
        assert!(matches!(r, Err(Error::RangeTouchesBoundary { max: 14, .. })));

        let r = trig_sum_table(
            PhaseFamily::Unitary(UnitaryConstruction::Direct),
            &params(16, 4, Boundary::Truncated),
            -4..=3,
            TOL,
        );
        assert!(matches!(r, Err(Error::RangeTouchesBoundary { min: -3, .. })));
    }

    #[test]
    fn number_states_carry_no_phase() {
        let basis = FockBasis::one_sided(16).unwrap();
        let five = number_state(basis, 5).unwrap();
        let stats =
            phase_statistics(PhaseFamily::SusskindGlogower(SgConstruction::Direct), &five)
                .unwrap();
        assert_eq!(stats.mean_cos, 0.0);
        assert_eq!(stats.mean_sin, 0.0);
        assert_abs_diff_eq!(stats.trig_sum, 1.0, epsilon = TOL);
    }

    #[test]
    fn large_real_coherent_states_point_along_phi_zero() {
        let basis = FockBasis::one_sided(64).unwrap();
        let ket = prepare(basis, StateKind::Coherent(Complex64::new(4.0, 0.0))).unwrap();
        let stats =
            phase_statistics(PhaseFamily::SusskindGlogower(SgConstruction::Direct), &ket)
                .unwrap();
        // independent oracle: ⟨e⁺⟩ = Σ c̄ₙ cₙ₊₁ over the prepared amplitudes
        let amps = ket.amps();
        let oracle: f64 = (0..63)
            .map(|n| (amps[n].conj() * amps[n + 1]).re)
            .sum();
        assert_abs_diff_eq!(stats.mean_cos, oracle, epsilon = 1e-12);
        assert!((stats.mean_cos - 1.0).abs() < 0.05);
        assert_abs_diff_eq!(stats.mean_sin, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn squeezed_vacuum_has_no_mean_phase_direction() {
        let basis = FockBasis::one_sided(64).unwrap();
        let ket = prepare(basis, StateKind::SqueezedVacuum { r: 0.8, theta: 0.0 }).unwrap();
        let stats =
            phase_statistics(PhaseFamily::SusskindGlogower(SgConstruction::Direct), &ket)
                .unwrap();
        // even-photon support kills every single-shift expectation
        assert_abs_diff_eq!(stats.mean_cos, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(stats.mean_sin, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn measured_statistics_pick_the_context_from_the_mean_photon_number() {
        let basis = FockBasis::one_sided(32).unwrap();
        let ket = prepare(basis, StateKind::Coherent(Complex64::new(2.0, 0.0))).unwrap();
        let stats = phase_statistics(PhaseFamily::Measured(KConvention::Paper), &ket).unwrap();
        // context is round(⟨N⟩) = 4; the trig sum then follows the
        // diagonal algebra averaged over the photon distribution
        let k = crate::phase::k_of_n(4, KConvention::Paper);
        let amps = ket.amps();
        let oracle: f64 = (0..32)
            .map(|n| {
                let weight = amps[n].norm_sqr();
                let diag = if n + 1 < 32 { 1.0 / (n as f64 + 1.0) } else { 0.0 }
                    + if n > 0 { 1.0 / n as f64 } else { 0.0 };
                2.0 * k * k * weight * diag
            })
            .sum();
        assert_abs_diff_eq!(stats.trig_sum, oracle, epsilon = 1e-12);
        // real amplitudes and a real antisymmetric sine kernel: no mean sine
        assert_abs_diff_eq!(stats.mean_sin, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn phase_statistics_rejects_mismatched_basis_kinds() {
        let two = FockBasis::two_sided(4, Boundary::Cyclic).unwrap();
        let ket = number_state(two, 1).unwrap();
        assert!(matches!(
            phase_statistics(PhaseFamily::SusskindGlogower(SgConstruction::Direct), &ket),
            Err(Error::WrongBasisKind { .. })
        ));
    }

    #[test]
    fn number_state_phase_distribution_is_uniform() {
        let basis = FockBasis::one_sided(16).unwrap();
        let ket = number_state(basis, 3).unwrap();
        let dist = phase_distribution(&ket, 64).unwrap();
        let uniform = 1.0 / (2.0 * std::f64::consts::PI);
        for s in &dist {
            assert_abs_diff_eq!(s.density, uniform, epsilon = 1e-12);
        }
    }

    #[test]
    fn coherent_phase_distribution_peaks_at_zero_and_normalizes() {
        let basis = FockBasis::one_sided(32).unwrap();
        let ket = prepare(basis, StateKind::Coherent(Complex64::new(3.0, 0.0))).unwrap();
        let dist = phase_distribution(&ket, 256).unwrap();
        let peak = dist
            .iter()
            .max_by(|a, b| a.density.total_cmp(&b.density))
            .unwrap();
        assert_abs_diff_eq!(peak.phi, 0.0, epsilon = 1e-12);

        let step = 2.0 * std::f64::consts::PI / 256.0;
        let integral: f64 = dist.iter().map(|s| s.density * step).sum();
        assert_abs_diff_eq!(integral, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn phase_distribution_needs_enough_bins() {
        let basis = FockBasis::one_sided(8).unwrap();
        let ket = number_state(basis, 0).unwrap();
        assert!(matches!(
            phase_distribution(&ket, 3),
            Err(Error::TooFewBins(3))
        ));
    }
}
