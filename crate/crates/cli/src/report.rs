//! Report envelope shared by every subcommand, plus the builders that run
//! the actual computations.
//!
//! Every command produces the same versioned shape — schema, command,
//! field, inputs, results, summary — so downstream scripts can dispatch on
//! `command` and trust the rest.  Result items carry a `kind` tag.

use monocurve::bounds::{
    bound_conjecture, bound_thm14, bound_valla, check_semigroup, check_thm51_closed_form,
    shift_scan, thm51_sweep, verify_prop43_range, BoundReport, BoundsError, ShiftRow,
    Thm51Exception,
};
use monocurve::interval::{Certainty, Interval};
use monocurve::linalg::FieldConfig;
use monocurve::monomial::MonomialError;
use monocurve::resolution::{
    betti_monomial_quotient, betti_semigroup, interval_initial_ideal, tangent_cone_initial_ideal,
    BettiTable, ResolutionError,
};
use monocurve::semigroup::{enumerate_by_width, NumericalSemigroup, SemigroupError};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Sweeps enumerate `2^(w−1)` generator subsets per multiplicity, so wide
/// sweeps are refused up front instead of hanging.
pub const MAX_SWEEP_WIDTH: u64 = 16;

/// Tangent-cone verification walks monomial layers in up to `m − 2`
/// variables; beyond this multiplicity the layers get unreasonably large.
pub const MAX_JTILDE_MULTIPLICITY: u64 = 40;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or an input outside the documented domain; exit 1.
    #[error("{0}")]
    Input(String),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("could not serialize the report: {0}")]
    Render(String),
}

impl From<SemigroupError> for CliError {
    fn from(e: SemigroupError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ResolutionError> for CliError {
    fn from(e: ResolutionError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MonomialError> for CliError {
    fn from(e: MonomialError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub field: String,
    pub inputs: serde_json::Value,
    pub results: Vec<ResultItem>,
    pub summary: Summary,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub pass: bool,
    pub violations: Vec<String>,
}

/// One entry of the `results` array, discriminated by a `kind` tag.
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultItem {
    Analysis(Box<AnalyzeResult>),
    Semigroup(SweepRow),
    Extremal(ExtremalEntry),
    Check(monocurve::bounds::BoundCheck),
    Exception(Thm51Exception),
    Count(CountEntry),
    Pair(JtildePair),
    Shift(ShiftRow),
    Periodicity(PeriodicityEntry),
}

#[derive(Debug, Serialize)]
pub struct AnalyzeResult {
    pub semigroup: SemigroupInfo,
    pub betti: BettiTable,
    pub tangent_cone: TangentConeInfo,
    /// Hilbert–Samuel values of the associated graded ring in degrees
    /// `0..=max_order+1`.
    pub hilbert_samuel: Vec<u64>,
    pub bounds: BoundReport,
}

#[derive(Debug, Serialize)]
pub struct SemigroupInfo {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub width: u64,
    pub embedding_dim: usize,
    pub frobenius: i64,
    pub conductor: u64,
    pub max_order: u32,
    pub apery: Vec<AperyEntry>,
    /// Whether `w ≤ m − 2`, the regime where the interval completion
    /// controls the tangent cone.
    pub interval_regime: bool,
    pub interval_completion: Option<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct AperyEntry {
    pub residue: u64,
    pub element: u64,
    pub order: u32,
}

#[derive(Debug, Serialize)]
pub struct TangentConeInfo {
    pub n_vars: usize,
    /// Generators in the exponent-row text format, e.g. `"3 0 0"`.
    pub generators: Vec<String>,
    pub colength: Option<u64>,
    /// Total Betti numbers of the monomial quotient — the upper bound for
    /// the semigroup's own Betti numbers.
    pub betti: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub width: u64,
    pub betti: Vec<u64>,
    pub pass_conjecture: bool,
    pub pass_valla: bool,
    pub pass_thm14: bool,
}

#[derive(Debug, Serialize)]
pub struct ExtremalEntry {
    pub width: u64,
    pub index: u64,
    pub max: u64,
    /// Generators of the first semigroup (in row order) attaining the max.
    pub attained_by: Vec<u64>,
    /// The conjectured cap `i·C(w+1, i+1)` for context.
    pub conjectured_bound: u128,
}

#[derive(Debug, Serialize)]
pub struct CountEntry {
    pub name: String,
    pub value: u64,
}

impl CountEntry {
    fn new(name: &str, value: u64) -> Self {
        CountEntry {
            name: name.to_string(),
            value,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct JtildePair {
    pub multiplicity: u64,
    pub width: u64,
    pub pass: bool,
    /// Generators of the scanned initial ideal, exponent-row format.
    pub computed: Vec<String>,
    /// Generators of the closed form, exponent-row format.
    pub expected: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PeriodicityEntry {
    pub width: u64,
    pub j_max: u64,
    /// Least sampled shift beyond which all comparable Betti vectors agree
    /// with period the width; absent when periodicity was not observed.
    pub onset: Option<u64>,
    /// Shifts whose Betti vector differs from the one a width later.
    pub violations: Vec<u64>,
}

/// Human-readable lines for every failing check of a bound report.
fn failed_checks(report: &BoundReport) -> Vec<String> {
    report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| {
            let relation = if c.borderline {
                "is undecided against"
            } else {
                "exceeds"
            };
            match c.index {
                Some(i) => format!(
                    "{}: {} i={i}: {} {relation} {}",
                    report.subject, c.label, c.computed, c.bound
                ),
                None => format!(
                    "{}: {}: {} {relation} {}",
                    report.subject, c.label, c.computed, c.bound
                ),
            }
        })
        .collect()
}

pub fn cmd_analyze(gens: &[u64], field: FieldConfig) -> Result<Report, CliError> {
    let s = NumericalSemigroup::from_generators(gens)?;
    let ap = s.apery_set();
    let apery = ap
        .elements()
        .iter()
        .zip(ap.orders())
        .enumerate()
        .map(|(residue, (&element, &order))| AperyEntry {
            residue: residue as u64,
            element,
            order,
        })
        .collect();
    let interval_completion = if s.interval_regime() {
        Some(s.interval_completion()?.generators().to_vec())
    } else {
        None
    };
    let betti = betti_semigroup(&s, field)?;
    let cone = tangent_cone_initial_ideal(&s)?;
    let cone_betti = betti_monomial_quotient(&cone, field)?;
    let bounds = check_semigroup(&s, field)?;
    let violations = failed_checks(&bounds);
    let pass = bounds.pass;
    let analysis = AnalyzeResult {
        semigroup: SemigroupInfo {
            generators: s.generators().to_vec(),
            multiplicity: s.multiplicity(),
            width: s.width(),
            embedding_dim: s.embedding_dim(),
            frobenius: s.frobenius(),
            conductor: s.conductor(),
            max_order: ap.max_order(),
            apery,
            interval_regime: s.interval_regime(),
            interval_completion,
        },
        betti,
        tangent_cone: TangentConeInfo {
            n_vars: cone.n_vars(),
            generators: cone.gens().iter().map(|g| g.to_string()).collect(),
            colength: cone.colength(),
            betti: cone_betti.total.clone(),
        },
        hilbert_samuel: (0..=ap.max_order() + 1).map(|d| ap.hilbert_samuel(d)).collect(),
        bounds,
    };
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "analyze".to_string(),
        field: field.to_string(),
        inputs: json!({ "gens": gens }),
        results: vec![ResultItem::Analysis(Box::new(analysis))],
        summary: Summary { pass, violations },
    })
}

pub fn cmd_sweep(width: u64, m_lo: u64, m_hi: u64, field: FieldConfig) -> Result<Report, CliError> {
    if width == 0 {
        return Err(CliError::Input("sweep width must be positive".to_string()));
    }
    if width > MAX_SWEEP_WIDTH {
        return Err(CliError::Input(format!(
            "sweep width {width} exceeds the supported maximum of {MAX_SWEEP_WIDTH}"
        )));
    }
    let items: Vec<NumericalSemigroup> = enumerate_by_width(width, m_lo, m_hi).collect();
    // The projective dimension never exceeds the width, so the real-valued
    // bound can be certified once per homological index.
    let thm14: Vec<Interval> = (0..=width).map(|i| bound_thm14(width, i)).collect();
    let mut rows = items
        .par_iter()
        .map(|s| -> Result<SweepRow, CliError> {
            let table = betti_semigroup(s, field)?;
            let (w, m) = (s.width(), s.multiplicity());
            let mut pass_conjecture = true;
            let mut pass_valla = true;
            let mut pass_thm14 = true;
            for i in 1..=table.projective_dimension() as u64 {
                let b = table.betti(i as usize);
                pass_conjecture &= (b as u128) <= bound_conjecture(w, i);
                pass_valla &= (b as u128) <= bound_valla(m, i);
                pass_thm14 &=
                    thm14[i as usize].classify_integer_le(&BigInt::from(b)) == Certainty::Certain;
            }
            Ok(SweepRow {
                generators: s.generators().to_vec(),
                multiplicity: m,
                width: w,
                betti: table.total,
                pass_conjecture,
                pass_valla,
                pass_thm14,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| {
        (a.multiplicity, &a.generators).cmp(&(b.multiplicity, &b.generators))
    });

    let violations: Vec<String> = rows
        .iter()
        .filter(|r| !(r.pass_conjecture && r.pass_valla && r.pass_thm14))
        .map(|r| {
            let gens: Vec<String> = r.generators.iter().map(u64::to_string).collect();
            format!("<{}> fails a bound check", gens.join(","))
        })
        .collect();
    let pass = violations.is_empty();

    let max_pd = rows.iter().map(|r| r.betti.len() - 1).max().unwrap_or(0);
    let extremal: Vec<ExtremalEntry> = (1..=max_pd as u64)
        .filter_map(|i| {
            let max = rows.iter().map(|r| r.betti.get(i as usize).copied().unwrap_or(0)).max()?;
            let attained = rows
                .iter()
                .find(|r| r.betti.get(i as usize).copied().unwrap_or(0) == max)?;
            Some(ExtremalEntry {
                width,
                index: i,
                max,
                attained_by: attained.generators.clone(),
                conjectured_bound: bound_conjecture(width, i),
            })
        })
        .collect();

    let results = rows
        .into_iter()
        .map(ResultItem::Semigroup)
        .chain(extremal.into_iter().map(ResultItem::Extremal))
        .collect();
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "sweep".to_string(),
        field: field.to_string(),
        inputs: json!({ "width": width, "mult_min": m_lo, "mult_max": m_hi }),
        results,
        summary: Summary { pass, violations },
    })
}

pub fn cmd_verify_prop43(
    w_min: u64,
    w_max: u64,
    samples: &[u64],
    field: FieldConfig,
) -> Result<Report, CliError> {
    let report = verify_prop43_range(w_min, w_max, samples)?;
    let violations = failed_checks(&report);
    let pass = report.pass;
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "verify prop43".to_string(),
        field: field.to_string(),
        inputs: json!({ "w_min": w_min, "w_max": w_max, "samples": samples }),
        results: report.checks.into_iter().map(ResultItem::Check).collect(),
        summary: Summary { pass, violations },
    })
}

pub fn cmd_verify_thm51(
    w_min: u64,
    w_max: u64,
    samples: &[u64],
    field: FieldConfig,
) -> Result<Report, CliError> {
    let sweep = thm51_sweep(w_min, w_max)?;
    let closed = check_thm51_closed_form(samples)?;
    let mut violations: Vec<String> = sweep
        .exceptions
        .iter()
        .map(|e| {
            format!(
                "w={} α={} β={}: B0={} (cap {}), B1={} (cap {})",
                e.width, e.alpha, e.beta, e.b0, e.bound0, e.b1, e.bound1
            )
        })
        .collect();
    violations.extend(failed_checks(&closed));
    let pass = sweep.pass && closed.pass;
    let mut results = vec![
        ResultItem::Count(CountEntry::new("candidates", sweep.candidates)),
        ResultItem::Count(CountEntry::new("exceptions", sweep.exceptions.len() as u64)),
        ResultItem::Count(CountEntry::new("distinct_pairs", sweep.distinct_pairs)),
    ];
    results.extend(sweep.exceptions.into_iter().map(ResultItem::Exception));
    results.extend(closed.checks.into_iter().map(ResultItem::Check));
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "verify thm51".to_string(),
        field: field.to_string(),
        inputs: json!({ "w_min": w_min, "w_max": w_max, "samples": samples }),
        results,
        summary: Summary { pass, violations },
    })
}

pub fn cmd_verify_remark(w_min: u64, w_max: u64, field: FieldConfig) -> Result<Report, CliError> {
    let sweep = thm51_sweep(w_min, w_max)?;
    let mut results = vec![
        ResultItem::Count(CountEntry::new("candidates", sweep.candidates)),
        ResultItem::Count(CountEntry::new("exceptions", sweep.exceptions.len() as u64)),
        ResultItem::Count(CountEntry::new("distinct_pairs", sweep.distinct_pairs)),
    ];
    results.extend(sweep.exceptions.into_iter().map(ResultItem::Exception));
    // This command records the exceptional parameters for the small widths;
    // their existence is expected, so the report always passes.
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "verify remark".to_string(),
        field: field.to_string(),
        inputs: json!({ "w_min": w_min, "w_max": w_max }),
        results,
        summary: Summary {
            pass: true,
            violations: Vec::new(),
        },
    })
}

pub fn cmd_verify_jtilde(m_max: u64, field: FieldConfig) -> Result<Report, CliError> {
    if m_max > MAX_JTILDE_MULTIPLICITY {
        return Err(CliError::Input(format!(
            "m_max {m_max} exceeds the supported maximum of {MAX_JTILDE_MULTIPLICITY}"
        )));
    }
    let instances: Vec<(u64, u64)> = (5..=m_max)
        .flat_map(|m| (3..=m - 2).map(move |w| (m, w)))
        .collect();
    let pairs = instances
        .par_iter()
        .map(|&(m, w)| -> Result<JtildePair, CliError> {
            let gens: Vec<u64> = (m..=m + w).collect();
            let s = NumericalSemigroup::from_generators(&gens)?;
            let computed = tangent_cone_initial_ideal(&s)?;
            let expected = interval_initial_ideal(m, w)?;
            Ok(JtildePair {
                multiplicity: m,
                width: w,
                pass: computed == expected,
                computed: computed.gens().iter().map(|g| g.to_string()).collect(),
                expected: expected.gens().iter().map(|g| g.to_string()).collect(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mismatches: Vec<JtildePair> = pairs.into_iter().filter(|p| !p.pass).collect();
    let violations: Vec<String> = mismatches
        .iter()
        .map(|p| {
            format!(
                "m={} w={}: scanned initial ideal differs from the closed form",
                p.multiplicity, p.width
            )
        })
        .collect();
    let pass = mismatches.is_empty();
    let mut results = vec![
        ResultItem::Count(CountEntry::new("pairs", instances.len() as u64)),
        ResultItem::Count(CountEntry::new("mismatches", mismatches.len() as u64)),
    ];
    results.extend(mismatches.into_iter().map(ResultItem::Pair));
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "verify jtilde".to_string(),
        field: field.to_string(),
        inputs: json!({ "m_max": m_max }),
        results,
        summary: Summary { pass, violations },
    })
}

pub fn cmd_shift_scan(gens: &[u64], j_max: u64, field: FieldConfig) -> Result<Report, CliError> {
    let s = NumericalSemigroup::from_generators(gens)?;
    let scan = shift_scan(&s, j_max, field)?;
    let mut results: Vec<ResultItem> = scan.rows.into_iter().map(ResultItem::Shift).collect();
    results.push(ResultItem::Periodicity(PeriodicityEntry {
        width: scan.width,
        j_max,
        onset: scan.onset,
        violations: scan.violations,
    }));
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "shift-scan".to_string(),
        field: field.to_string(),
        inputs: json!({ "gens": gens, "j_max": j_max }),
        results,
        summary: Summary {
            pass: true,
            violations: Vec::new(),
        },
    })
}
