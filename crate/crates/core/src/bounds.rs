//! Bound formulas for Betti numbers of semigroup rings and the finite
//! verifications that support them.
//!
//! Exact integer bounds are evaluated in `u128`; the exponential bound
//! `C(w, i)·(3e)^√(2w)` is evaluated with [`crate::interval`] enclosures,
//! and a comparison only passes when it holds against the certified side
//! of the enclosure.  Borderline comparisons (undecidable at the working
//! precision) are flagged explicitly and never counted as passes.

use crate::interval::{Certainty, Interval};
use crate::linalg::FieldConfig;
use crate::monomial::{binomial, MonomialIdeal};
use crate::resolution::{betti_monomial_quotient, betti_semigroup, ResolutionError};
use crate::semigroup::NumericalSemigroup;
use num_bigint::BigInt;
use num_integer::Roots;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("range error: {0}")]
    RangeError(String),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// One comparison of a computed value against a bound.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    /// Which bound was applied.
    pub label: String,
    /// Homological index or sweep parameter the check refers to.
    pub index: Option<u64>,
    pub computed: String,
    pub bound: String,
    pub pass: bool,
    /// The comparison fell inside the rounding margin of a real-valued
    /// bound and could not be decided; `pass` is false in that case.
    pub borderline: bool,
}

/// A batch of bound checks against one subject.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub subject: String,
    pub field: String,
    pub checks: Vec<BoundCheck>,
    pub pass: bool,
    pub borderline: bool,
}

impl BoundReport {
    fn from_checks(subject: String, field: String, checks: Vec<BoundCheck>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        let borderline = checks.iter().any(|c| c.borderline);
        BoundReport {
            subject,
            field,
            checks,
            pass,
            borderline,
        }
    }
}

/// The width bound `i·C(w+1, i+1)` for the `i`-th Betti number of a
/// semigroup ring of width `w`.
pub fn bound_conjecture(w: u64, i: u64) -> u128 {
    i as u128 * binomial(w + 1, i + 1)
}

/// The multiplicity bound `i·C(m, i+1)`, attained by `⟨m, m+1, …, 2m−1⟩`.
pub fn bound_valla(m: u64, i: u64) -> u128 {
    i as u128 * binomial(m, i + 1)
}

/// Enclosure of `(3e)^√x` for a nonnegative integer `x`.
fn pow_3e_sqrt(x: u64) -> Interval {
    Interval::sqrt_integer(x).mul(&Interval::ln_3e()).exp()
}

/// The exponential width bound `C(w, i)·(3e)^√(2w)` as an enclosure.
pub fn bound_thm14(w: u64, i: u64) -> Interval {
    pow_3e_sqrt(2 * w).mul_integer(BigInt::from(binomial(w, i)))
}

fn floor_sqrt(n: u64) -> u64 {
    n.sqrt()
}

fn ceil_sqrt(n: u64) -> u64 {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

fn interval_check(label: &str, index: Option<u64>, computed: BigInt, bound: &Interval) -> BoundCheck {
    let class = bound.classify_integer_le(&computed);
    BoundCheck {
        label: label.to_string(),
        index,
        computed: computed.to_string(),
        bound: bound.decimal_lower(4),
        pass: class == Certainty::Certain,
        borderline: class == Certainty::Borderline,
    }
}

fn exact_check(label: &str, index: Option<u64>, computed: u128, bound: u128) -> BoundCheck {
    BoundCheck {
        label: label.to_string(),
        index,
        computed: computed.to_string(),
        bound: bound.to_string(),
        pass: computed <= bound,
        borderline: false,
    }
}

/// Checks the Betti numbers of a semigroup ring against the width bound
/// `i·C(w+1, i+1)`, the multiplicity bound `i·C(m, i+1)`, and the
/// exponential bound `C(w, i)·(3e)^√(2w)`, for every `i ≥ 1`.
pub fn check_semigroup(
    s: &NumericalSemigroup,
    field: FieldConfig,
) -> Result<BoundReport, BoundsError> {
    let table = betti_semigroup(s, field)?;
    let w = s.width();
    let m = s.multiplicity();
    let mut checks = Vec::new();
    for i in 1..=table.projective_dimension() as u64 {
        let b = table.betti(i as usize);
        checks.push(exact_check("conjecture", Some(i), b as u128, bound_conjecture(w, i)));
        checks.push(exact_check("valla", Some(i), b as u128, bound_valla(m, i)));
        checks.push(interval_check("thm14", Some(i), BigInt::from(b), &bound_thm14(w, i)));
    }
    Ok(BoundReport::from_checks(
        s.to_string(),
        field.to_string(),
        checks,
    ))
}

/// Exact binomials in the sweep stay inside `u128` only up to this width.
const PROP43_MAX_WIDTH: u64 = 900;

/// Verifies, for each width in `w_min..=w_max`, that the hyperplane-section
/// estimate `w + C(C+D−2, C−1) − (C−1) + (2w−4) − D` with `C = ⌈2√w⌉ − 2`
/// and `D = ⌊√(6w−2)⌋ − 2` stays below `(3e)^√(2w)`.
///
/// The two inequalities covering widths from 112 on —
/// `3(√(2w) − 3) ≥ √(2w) + √(6w−2) − 5` and
/// `((3e)² − 1)(3e)^{√(2w)−2} ≥ 3w` — are additionally spot-checked at the
/// supplied sample widths (each at least 112).
pub fn verify_prop43_range(
    w_min: u64,
    w_max: u64,
    asymptotic_samples: &[u64],
) -> Result<BoundReport, BoundsError> {
    if w_min < 3 {
        return Err(BoundsError::RangeError(format!(
            "width range must start at 3 or above, got {w_min}"
        )));
    }
    if w_min > w_max {
        return Err(BoundsError::RangeError(format!(
            "empty width range {w_min}..={w_max}"
        )));
    }
    if w_max > PROP43_MAX_WIDTH {
        return Err(BoundsError::RangeError(format!(
            "widths above {PROP43_MAX_WIDTH} overflow the exact binomial evaluation"
        )));
    }
    if let Some(&bad) = asymptotic_samples.iter().find(|&&w| w < 112) {
        return Err(BoundsError::RangeError(format!(
            "asymptotic sample widths must be at least 112, got {bad}"
        )));
    }
    let mut checks = Vec::new();
    for w in w_min..=w_max {
        let c = ceil_sqrt(4 * w) - 2;
        let d = floor_sqrt(6 * w - 2) - 2;
        let quantity: i128 = w as i128 + binomial(c + d - 2, c - 1) as i128 - (c as i128 - 1)
            + (2 * w as i128 - 4)
            - d as i128;
        checks.push(interval_check(
            "prop43",
            Some(w),
            BigInt::from(quantity),
            &pow_3e_sqrt(2 * w),
        ));
    }
    for &w in asymptotic_samples {
        let sqrt_2w = Interval::sqrt_integer(2 * w);
        let lhs = sqrt_2w.sub(&Interval::from_integer(3)).mul_integer(3);
        let rhs = sqrt_2w
            .add(&Interval::sqrt_integer(6 * w - 2))
            .sub(&Interval::from_integer(5));
        let class = rhs.classify_le(&lhs);
        checks.push(BoundCheck {
            label: "asymptotic_sqrt".to_string(),
            index: Some(w),
            computed: rhs.decimal_upper(4),
            bound: lhs.decimal_lower(4),
            pass: class == Certainty::Certain,
            borderline: class == Certainty::Borderline,
        });
        let factor = Interval::from_integer(2)
            .mul(&Interval::ln_3e())
            .exp()
            .sub(&Interval::from_integer(1));
        let tail = sqrt_2w
            .sub(&Interval::from_integer(2))
            .mul(&Interval::ln_3e())
            .exp();
        checks.push(interval_check(
            "asymptotic_exp",
            Some(w),
            BigInt::from(3 * w),
            &factor.mul(&tail),
        ));
    }
    Ok(BoundReport::from_checks(
        format!("widths {w_min}..={w_max}"),
        "exact".to_string(),
        checks,
    ))
}

/// A candidate `(w, α, β)` whose bound evaluations exceed the targets.
#[derive(Debug, Clone, Serialize)]
pub struct Thm51Exception {
    pub width: u64,
    pub alpha: u64,
    pub beta: u64,
    pub b0: u64,
    pub b1: u64,
    pub bound0: u64,
    pub bound1: u64,
}

/// Result of sweeping the two-variable parameter space.
#[derive(Debug, Clone, Serialize)]
pub struct Thm51Report {
    pub w_min: u64,
    pub w_max: u64,
    /// Candidates `(w, α, β)` satisfying both degree constraints.
    pub candidates: u64,
    pub exceptions: Vec<Thm51Exception>,
    /// Distinct `(α, β)` pairs among the exceptions.
    pub distinct_pairs: u64,
    pub pass: bool,
}

/// Enumerates, for each width in the range, the parameters `α ≥ 2` and
/// `β ≥ α` allowed by the degree constraints `C(α+2, 3) ≤ 1 + (α−1)w` and
/// `C(α+1, 3) + C(β+1, 2) ≤ 1 + (β−1)w` (with hard caps `α ≤ √(6w+4) − 1`
/// and `β ≤ 2w + 1`), evaluates `B₀ = αβ − α(α−3)/2 + 1` and
/// `B₁ = 2αβ − α² + 2α`, and records every candidate exceeding
/// `C(w+1, 2)` or `2·C(w+1, 3)` respectively.
pub fn thm51_sweep(w_min: u64, w_max: u64) -> Result<Thm51Report, BoundsError> {
    if w_min < 3 {
        return Err(BoundsError::RangeError(format!(
            "width range must start at 3 or above, got {w_min}"
        )));
    }
    if w_min > w_max {
        return Err(BoundsError::RangeError(format!(
            "empty width range {w_min}..={w_max}"
        )));
    }
    let mut exceptions = Vec::new();
    let mut candidates = 0u64;
    for w in w_min..=w_max {
        let bound0 = binomial(w + 1, 2) as u64;
        let bound1 = (2 * binomial(w + 1, 3)) as u64;
        let mut alpha = 2u64;
        while (alpha + 1) * (alpha + 1) <= 6 * w + 4 {
            if binomial(alpha + 2, 3) <= (1 + (alpha - 1) * w) as u128 {
                for beta in alpha..=2 * w + 1 {
                    if binomial(alpha + 1, 3) + binomial(beta + 1, 2)
                        > (1 + (beta - 1) * w) as u128
                    {
                        continue;
                    }
                    candidates += 1;
                    let a = alpha as i128;
                    let b = beta as i128;
                    let b0 = (a * b - a * (a - 3) / 2 + 1) as u64;
                    let b1 = (2 * a * b - a * a + 2 * a) as u64;
                    if b0 > bound0 || b1 > bound1 {
                        exceptions.push(Thm51Exception {
                            width: w,
                            alpha,
                            beta,
                            b0,
                            b1,
                            bound0,
                            bound1,
                        });
                    }
                }
            }
            alpha += 1;
        }
    }
    let distinct: BTreeSet<(u64, u64)> = exceptions.iter().map(|e| (e.alpha, e.beta)).collect();
    Ok(Thm51Report {
        w_min,
        w_max,
        candidates,
        distinct_pairs: distinct.len() as u64,
        pass: exceptions.is_empty(),
        exceptions,
    })
}

/// Closed-form inequalities that make the sweep unnecessary from width 100
/// on: `(√(6w+4) − 1)(2w+1) + 2 ≤ 5w^{3/2} ≤ C(w+1, 2)` and, doubled,
/// `10w^{3/2} ≤ 2·C(w+1, 3)`.  Checked at the supplied sample widths.
pub fn check_thm51_closed_form(samples: &[u64]) -> Result<BoundReport, BoundsError> {
    if let Some(&bad) = samples.iter().find(|&&w| w < 100) {
        return Err(BoundsError::RangeError(format!(
            "closed-form sample widths must be at least 100, got {bad}"
        )));
    }
    let mut checks = Vec::new();
    for &w in samples {
        let lhs = Interval::sqrt_integer(6 * w + 4)
            .sub(&Interval::from_integer(1))
            .mul_integer(BigInt::from(2 * w + 1))
            .add(&Interval::from_integer(2));
        let w32 = Interval::sqrt_integer(w).mul_integer(BigInt::from(w));
        let five_w32 = w32.mul_integer(5);
        let class = lhs.classify_le(&five_w32);
        checks.push(BoundCheck {
            label: "b0_growth".to_string(),
            index: Some(w),
            computed: lhs.decimal_upper(4),
            bound: five_w32.decimal_lower(4),
            pass: class == Certainty::Certain,
            borderline: class == Certainty::Borderline,
        });
        for (label, multiple, target) in [
            ("b0_cap", 5u64, binomial(w + 1, 2)),
            ("b1_cap", 10u64, 2 * binomial(w + 1, 3)),
        ] {
            let scaled = w32.mul_integer(multiple);
            let class = scaled.classify_le(&Interval::from_integer(BigInt::from(target)));
            checks.push(BoundCheck {
                label: label.to_string(),
                index: Some(w),
                computed: scaled.decimal_upper(4),
                bound: target.to_string(),
                pass: class == Certainty::Certain,
                borderline: class == Certainty::Borderline,
            });
        }
    }
    Ok(BoundReport::from_checks(
        "closed-form width bounds".to_string(),
        "exact".to_string(),
        checks,
    ))
}

/// Verifies the growth constraint `HS(S/I, d) ≤ 1 + dw` on the cumulative
/// Hilbert function of an artinian monomial quotient, then checks every
/// Betti number of the quotient against the exponential bound
/// `C(w, i)·(3e)^√(2w)`.
pub fn verify_hs_problem(
    ideal: &MonomialIdeal,
    w: u64,
    field: FieldConfig,
) -> Result<BoundReport, BoundsError> {
    let colength = ideal.colength().ok_or_else(|| {
        BoundsError::ConstraintViolated("quotient has infinite length".to_string())
    })?;
    let data = ideal.hilbert_data();
    let mut hs = 0u64;
    for (d, &value) in data.values.iter().enumerate() {
        hs += value;
        let cap = 1 + d as u64 * w;
        if hs > cap {
            return Err(BoundsError::ConstraintViolated(format!(
                "cumulative Hilbert function reaches {hs} in degree {d}, above 1 + dw = {cap}"
            )));
        }
    }
    let table = betti_monomial_quotient(ideal, field)?;
    let checks = (0..=table.projective_dimension() as u64)
        .map(|i| {
            interval_check(
                "thm14",
                Some(i),
                BigInt::from(table.betti(i as usize)),
                &bound_thm14(w, i),
            )
        })
        .collect();
    Ok(BoundReport::from_checks(
        format!(
            "monomial quotient in {} variables, colength {colength}",
            ideal.n_vars()
        ),
        field.to_string(),
        checks,
    ))
}

/// Betti numbers of one shifted semigroup.
#[derive(Debug, Clone, Serialize)]
pub struct ShiftRow {
    pub j: u64,
    pub generators: Vec<u64>,
    pub betti: Vec<u64>,
}

/// Betti numbers of the shifts `⟨g_0 + j, …, g_ν + j⟩` for `j` up to
/// `j_max`, with the smallest observed onset of width-periodicity.
#[derive(Debug, Clone, Serialize)]
pub struct ShiftScanReport {
    pub base: String,
    pub width: u64,
    pub j_max: u64,
    pub field: FieldConfig,
    pub rows: Vec<ShiftRow>,
    /// Shifts `j` where the Betti vector differs from the one at `j + w`.
    pub violations: Vec<u64>,
    /// Least sampled `j₀` such that every comparable pair `(j, j+w)` with
    /// `j ≥ j₀` has equal Betti vectors, provided at least one comparison
    /// beyond `j₀` was possible; `None` when no periodicity was observed
    /// in range.
    pub onset: Option<u64>,
}

/// Scans the shifted family of a semigroup for the onset of periodicity of
/// the total Betti numbers, with period the width.
///
/// Shifts whose generators acquire a common divisor are skipped.  Requires
/// `j_max ≥ 2w` so that at least one full period can be compared.
pub fn shift_scan(
    s: &NumericalSemigroup,
    j_max: u64,
    field: FieldConfig,
) -> Result<ShiftScanReport, BoundsError> {
    let w = s.width();
    if w == 0 {
        return Err(BoundsError::RangeError(
            "shift scan needs a semigroup of positive width".to_string(),
        ));
    }
    if j_max < 2 * w {
        return Err(BoundsError::RangeError(format!(
            "j_max = {j_max} must be at least twice the width ({})",
            2 * w
        )));
    }
    let mut rows: Vec<ShiftRow> = Vec::new();
    for j in 0..=j_max {
        let Ok(shifted) = s.shift(j) else {
            continue;
        };
        let table = betti_semigroup(&shifted, field)?;
        rows.push(ShiftRow {
            j,
            generators: shifted.generators().to_vec(),
            betti: table.total,
        });
    }
    let by_j: std::collections::HashMap<u64, &Vec<u64>> =
        rows.iter().map(|r| (r.j, &r.betti)).collect();
    let mut violations = Vec::new();
    let mut comparable = Vec::new();
    for row in &rows {
        if let Some(later) = by_j.get(&(row.j + w)) {
            comparable.push(row.j);
            if *later != &row.betti {
                violations.push(row.j);
            }
        }
    }
    let onset = if comparable.is_empty() {
        None
    } else if violations.is_empty() {
        comparable.first().copied()
    } else {
        let candidate = violations.iter().max().unwrap() + 1;
        comparable
            .iter()
            .any(|&j| j >= candidate)
            .then_some(candidate)
    };
    Ok(ShiftScanReport {
        base: s.to_string(),
        width: w,
        j_max,
        field,
        rows,
        violations,
        onset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::tangent_cone_initial_ideal;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn integer_bound_formulas() {
        assert_eq!(bound_conjecture(3, 1), 6);
        assert_eq!(bound_conjecture(3, 3), 3);
        assert_eq!(bound_conjecture(1, 1), 1);
        assert_eq!(bound_valla(4, 2), 8);
        assert_eq!(bound_valla(2, 1), 1);
        assert_eq!(bound_valla(5, 4), 4);
    }

    #[test]
    fn exponential_bound_enclosures() {
        // 3·(3e)^√6 = 512.4184…
        let b = bound_thm14(3, 1);
        assert_eq!(b.decimal_lower(2), "512.41");
        assert_eq!(b.decimal_upper(2), "512.42");
        // (3e)² = 9e² = 66.5015…
        let square = bound_thm14(2, 0);
        assert_eq!(square.decimal_lower(3), "66.501");
        assert_eq!(square.decimal_upper(3), "66.502");
        // Vanishing binomial factor collapses the bound to zero.
        let zero = bound_thm14(5, 7);
        assert_eq!(
            zero.classify_integer_le(&BigInt::from(0)),
            Certainty::Certain
        );
        assert_eq!(
            zero.classify_integer_le(&BigInt::from(1)),
            Certainty::Refuted
        );
    }

    #[test]
    fn semigroup_reports() {
        let sharp = check_semigroup(&sg(&[4, 5, 6, 7]), FieldConfig::Rationals).unwrap();
        assert!(sharp.pass && !sharp.borderline);
        let equalities: Vec<(&str, &str)> = sharp
            .checks
            .iter()
            .filter(|c| c.label == "conjecture")
            .map(|c| (c.computed.as_str(), c.bound.as_str()))
            .collect();
        assert_eq!(equalities, vec![("6", "6"), ("8", "8"), ("3", "3")]);

        let two_gen = check_semigroup(&sg(&[2, 3]), FieldConfig::Rationals).unwrap();
        assert!(two_gen.pass);
        assert_eq!(two_gen.checks[0].computed, "1");
        assert_eq!(two_gen.checks[0].bound, "1");

        let naturals = check_semigroup(&sg(&[1]), FieldConfig::Rationals).unwrap();
        assert!(naturals.pass && naturals.checks.is_empty());
    }

    #[test]
    fn hyperplane_estimate_range() {
        let report = verify_prop43_range(3, 40, &[112, 500]).unwrap();
        assert!(report.pass && !report.borderline);
        let first = &report.checks[0];
        assert_eq!(first.index, Some(3));
        assert_eq!(first.computed, "4");
        assert!(first.bound.starts_with("170.80"));
        assert_eq!(
            report.checks.iter().filter(|c| c.label == "prop43").count(),
            38
        );
        assert_eq!(
            report
                .checks
                .iter()
                .filter(|c| c.label.starts_with("asymptotic"))
                .count(),
            4
        );
    }

    #[test]
    fn range_validation() {
        assert!(matches!(
            verify_prop43_range(2, 10, &[]),
            Err(BoundsError::RangeError(_))
        ));
        assert!(matches!(
            verify_prop43_range(10, 5, &[]),
            Err(BoundsError::RangeError(_))
        ));
        assert!(matches!(
            verify_prop43_range(3, 10, &[100]),
            Err(BoundsError::RangeError(_))
        ));
        assert!(matches!(
            verify_prop43_range(3, 1000, &[]),
            Err(BoundsError::RangeError(_))
        ));
        assert!(matches!(
            thm51_sweep(2, 10),
            Err(BoundsError::RangeError(_))
        ));
        assert!(matches!(
            check_thm51_closed_form(&[99]),
            Err(BoundsError::RangeError(_))
        ));
    }

    #[test]
    fn parameter_sweep_matches_expected_counts() {
        let clean = thm51_sweep(40, 99).unwrap();
        assert!(clean.pass);
        assert!(clean.exceptions.is_empty());
        assert!(clean.candidates > 0);

        let low = thm51_sweep(4, 39).unwrap();
        assert!(!low.pass);
        assert_eq!(low.exceptions.len(), 187);
        assert_eq!(low.distinct_pairs, 155);
    }

    #[test]
    fn closed_form_samples_pass() {
        let report = check_thm51_closed_form(&[100, 500, 10000]).unwrap();
        assert!(report.pass && !report.borderline);
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn hilbert_growth_gate() {
        use crate::monomial::{lex_from_hilbert, Monomial};

        // The maximal ideal: Hilbert function (1), Betti numbers C(n, i).
        let maximal = MonomialIdeal::new(
            3,
            (0..3)
                .map(|i| {
                    let mut e = vec![0u32; 3];
                    e[i] = 1;
                    Monomial::new(e)
                })
                .collect(),
        )
        .unwrap();
        let report = verify_hs_problem(&maximal, 3, FieldConfig::Rationals).unwrap();
        assert!(report.pass);

        // (x, y)³ has cumulative Hilbert function 1, 3, 6 — too fast for w = 2.
        let cube = lex_from_hilbert(2, &[1, 2, 3]).unwrap();
        assert!(matches!(
            verify_hs_problem(&cube, 2, FieldConfig::Rationals),
            Err(BoundsError::ConstraintViolated(_))
        ));

        // Tangent cones of interval-regime semigroups satisfy the constraint.
        let j = tangent_cone_initial_ideal(&sg(&[7, 9, 10])).unwrap();
        let report = verify_hs_problem(&j, 3, FieldConfig::Rationals).unwrap();
        assert!(report.pass);

        let open = MonomialIdeal::new(2, vec![Monomial::new(vec![1, 0])]).unwrap();
        assert!(matches!(
            verify_hs_problem(&open, 2, FieldConfig::Rationals),
            Err(BoundsError::ConstraintViolated(_))
        ));
    }

    #[test]
    fn width_bound_dominates_multiplicity_bound_when_wide() {
        // Whenever w ≥ m − 1 the width bound is the weaker (larger) one.
        for m in 2u64..=60 {
            for w in (m - 1)..=(m + 60) {
                for i in 1..=m {
                    assert!(
                        bound_conjecture(w, i) >= bound_valla(m, i),
                        "bound ordering fails at m = {m}, w = {w}, i = {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn shift_scan_finds_immediate_periodicity() {
        let report = shift_scan(&sg(&[2, 3]), 10, FieldConfig::Rationals).unwrap();
        assert_eq!(report.width, 1);
        assert_eq!(report.rows.len(), 11);
        assert!(report.violations.is_empty());
        assert_eq!(report.onset, Some(0));
        assert!(report.rows.iter().all(|r| r.betti == vec![1, 1]));

        assert!(matches!(
            shift_scan(&sg(&[2, 3]), 1, FieldConfig::Rationals),
            Err(BoundsError::RangeError(_))
        ));
        assert!(matches!(
            shift_scan(&sg(&[1]), 10, FieldConfig::Rationals),
            Err(BoundsError::RangeError(_))
        ));
    }

    #[test]
    fn shift_scan_skips_common_divisor_shifts() {
        // ⟨3, 5⟩ + 1 = ⟨4, 6⟩ has gcd 2 and must be skipped.
        let report = shift_scan(&sg(&[3, 5]), 8, FieldConfig::Rationals).unwrap();
        assert!(report.rows.iter().all(|r| r.j != 1));
        assert!(report.rows.iter().any(|r| r.j == 2));
    }
}
