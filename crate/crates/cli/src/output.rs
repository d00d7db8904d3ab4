//! Renders a [`Report`] in one of the three output formats.
//!
//! JSON is the envelope serialized verbatim (pretty, trailing newline).
//! CSV flattens the result items into one table per command with a
//! `row_type` discriminator column; the exact columns are documented in
//! `docs/formats.md`.  Text is a human-readable digest of the same data.
//! All three are deterministic functions of the report.

use crate::report::{CliError, Report, ResultItem};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let body = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Render(e.to_string()))?;
            Ok(format!("{body}\n"))
        }
        Format::Csv => render_csv(report),
        Format::Text => Ok(render_text(report)),
    }
}

fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn opt<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

// ---------------------------------------------------------------- CSV --

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(header)
        .map_err(|e| CliError::Render(e.to_string()))?;
    for row in rows {
        writer
            .write_record(&row)
            .map_err(|e| CliError::Render(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Render(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Render(e.to_string()))
}

fn render_csv(report: &Report) -> Result<String, CliError> {
    match report.command.as_str() {
        "analyze" => csv_analyze(report),
        "sweep" => csv_sweep(report),
        "verify jtilde" => csv_jtilde(report),
        "verify prop43" | "verify thm51" | "verify remark" => csv_verify(report),
        _ => csv_shift_scan(report),
    }
}

fn csv_analyze(report: &Report) -> Result<String, CliError> {
    let header = [
        "row_type",
        "key",
        "index",
        "degree",
        "value",
        "detail",
        "pass",
        "borderline",
    ];
    let mut rows: Vec<Vec<String>> = Vec::new();
    let scalar = |key: &str, value: String, rows: &mut Vec<Vec<String>>| {
        rows.push(vec![
            "scalar".into(),
            key.into(),
            String::new(),
            String::new(),
            value,
            String::new(),
            String::new(),
            String::new(),
        ]);
    };
    for item in &report.results {
        let ResultItem::Analysis(a) = item else {
            continue;
        };
        let s = &a.semigroup;
        rows.push(vec![
            "generators".into(),
            "semigroup".into(),
            String::new(),
            String::new(),
            String::new(),
            join(&s.generators, " "),
            String::new(),
            String::new(),
        ]);
        scalar("multiplicity", s.multiplicity.to_string(), &mut rows);
        scalar("width", s.width.to_string(), &mut rows);
        scalar("embedding_dim", s.embedding_dim.to_string(), &mut rows);
        scalar("frobenius", s.frobenius.to_string(), &mut rows);
        scalar("conductor", s.conductor.to_string(), &mut rows);
        scalar("max_order", s.max_order.to_string(), &mut rows);
        scalar("interval_regime", s.interval_regime.to_string(), &mut rows);
        if let Some(completion) = &s.interval_completion {
            rows.push(vec![
                "generators".into(),
                "interval_completion".into(),
                String::new(),
                String::new(),
                String::new(),
                join(completion, " "),
                String::new(),
                String::new(),
            ]);
        }
        for entry in &s.apery {
            rows.push(vec![
                "apery".into(),
                String::new(),
                entry.residue.to_string(),
                entry.order.to_string(),
                entry.element.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
        for (i, b) in a.betti.total.iter().enumerate() {
            rows.push(vec![
                "betti_total".into(),
                String::new(),
                i.to_string(),
                String::new(),
                b.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
        for g in a.betti.graded.iter().flatten() {
            rows.push(vec![
                "betti_graded".into(),
                String::new(),
                g.index.to_string(),
                g.degree.to_string(),
                g.dim.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
        scalar("tangent_cone_vars", a.tangent_cone.n_vars.to_string(), &mut rows);
        scalar("tangent_cone_colength", opt(&a.tangent_cone.colength), &mut rows);
        for g in &a.tangent_cone.generators {
            rows.push(vec![
                "tangent_cone_gen".into(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                g.clone(),
                String::new(),
                String::new(),
            ]);
        }
        for (i, b) in a.tangent_cone.betti.iter().enumerate() {
            rows.push(vec![
                "betti_bound".into(),
                String::new(),
                i.to_string(),
                String::new(),
                b.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
        for (d, v) in a.hilbert_samuel.iter().enumerate() {
            rows.push(vec![
                "hilbert_samuel".into(),
                String::new(),
                d.to_string(),
                String::new(),
                v.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
        for c in &a.bounds.checks {
            rows.push(vec![
                "bound".into(),
                c.label.clone(),
                opt(&c.index),
                String::new(),
                c.computed.clone(),
                c.bound.clone(),
                c.pass.to_string(),
                c.borderline.to_string(),
            ]);
        }
    }
    csv_table(&header, rows)
}

fn csv_sweep(report: &Report) -> Result<String, CliError> {
    let header = [
        "row_type",
        "generators",
        "multiplicity",
        "width",
        "index",
        "value",
        "bound",
        "betti",
        "pass_conjecture",
        "pass_valla",
        "pass_thm14",
    ];
    let mut rows = Vec::new();
    for item in &report.results {
        match item {
            ResultItem::Semigroup(r) => rows.push(vec![
                "semigroup".into(),
                join(&r.generators, " "),
                r.multiplicity.to_string(),
                r.width.to_string(),
                String::new(),
                String::new(),
                String::new(),
                join(&r.betti, " "),
                r.pass_conjecture.to_string(),
                r.pass_valla.to_string(),
                r.pass_thm14.to_string(),
            ]),
            ResultItem::Extremal(e) => rows.push(vec![
                "extremal".into(),
                join(&e.attained_by, " "),
                String::new(),
                e.width.to_string(),
                e.index.to_string(),
                e.max.to_string(),
                e.conjectured_bound.to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ]),
            _ => {}
        }
    }
    csv_table(&header, rows)
}

fn csv_verify(report: &Report) -> Result<String, CliError> {
    let header = [
        "row_type",
        "label",
        "index",
        "computed",
        "bound",
        "pass",
        "borderline",
        "width",
        "alpha",
        "beta",
        "b0",
        "bound0",
        "b1",
        "bound1",
        "name",
        "value",
    ];
    let blank = String::new;
    let mut rows = Vec::new();
    for item in &report.results {
        match item {
            ResultItem::Count(c) => {
                let mut row = vec![blank(); header.len()];
                row[0] = "count".into();
                row[14] = c.name.clone();
                row[15] = c.value.to_string();
                rows.push(row);
            }
            ResultItem::Check(c) => {
                let mut row = vec![blank(); header.len()];
                row[0] = "check".into();
                row[1] = c.label.clone();
                row[2] = opt(&c.index);
                row[3] = c.computed.clone();
                row[4] = c.bound.clone();
                row[5] = c.pass.to_string();
                row[6] = c.borderline.to_string();
                rows.push(row);
            }
            ResultItem::Exception(e) => {
                let mut row = vec![blank(); header.len()];
                row[0] = "exception".into();
                row[7] = e.width.to_string();
                row[8] = e.alpha.to_string();
                row[9] = e.beta.to_string();
                row[10] = e.b0.to_string();
                row[11] = e.bound0.to_string();
                row[12] = e.b1.to_string();
                row[13] = e.bound1.to_string();
                rows.push(row);
            }
            _ => {}
        }
    }
    csv_table(&header, rows)
}

fn csv_jtilde(report: &Report) -> Result<String, CliError> {
    let header = [
        "row_type",
        "name",
        "value",
        "multiplicity",
        "width",
        "pass",
        "computed",
        "expected",
    ];
    let mut rows = Vec::new();
    for item in &report.results {
        match item {
            ResultItem::Count(c) => rows.push(vec![
                "count".into(),
                c.name.clone(),
                c.value.to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ]),
            ResultItem::Pair(p) => rows.push(vec![
                "pair".into(),
                String::new(),
                String::new(),
                p.multiplicity.to_string(),
                p.width.to_string(),
                p.pass.to_string(),
                p.computed.join("; "),
                p.expected.join("; "),
            ]),
            _ => {}
        }
    }
    csv_table(&header, rows)
}

fn csv_shift_scan(report: &Report) -> Result<String, CliError> {
    let header = [
        "row_type",
        "j",
        "generators",
        "betti",
        "width",
        "onset",
        "violations",
    ];
    let mut rows = Vec::new();
    for item in &report.results {
        match item {
            ResultItem::Shift(r) => rows.push(vec![
                "shift".into(),
                r.j.to_string(),
                join(&r.generators, " "),
                join(&r.betti, " "),
                String::new(),
                String::new(),
                String::new(),
            ]),
            ResultItem::Periodicity(p) => rows.push(vec![
                "periodicity".into(),
                String::new(),
                String::new(),
                String::new(),
                p.width.to_string(),
                opt(&p.onset),
                join(&p.violations, " "),
            ]),
            _ => {}
        }
    }
    csv_table(&header, rows)
}

// --------------------------------------------------------------- text --

/// Renders an exponent row like `"3 0 1"` as `x1^3*x3`.
fn pretty_monomial(row: &str) -> String {
    let parts: Vec<String> = row
        .split_whitespace()
        .enumerate()
        .filter_map(|(i, tok)| match tok.parse::<u64>() {
            Ok(0) => None,
            Ok(1) => Some(format!("x{}", i + 1)),
            Ok(e) => Some(format!("x{}^{e}", i + 1)),
            Err(_) => Some(format!("x{}^{tok}", i + 1)),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("command: {}", report.command));
    line(format!("field: {}", report.field));
    for item in &report.results {
        match item {
            ResultItem::Analysis(a) => {
                let s = &a.semigroup;
                line(format!("generators: {}", join(&s.generators, ", ")));
                line(format!(
                    "multiplicity: {}   width: {}   embedding dim: {}",
                    s.multiplicity, s.width, s.embedding_dim
                ));
                line(format!(
                    "frobenius: {}   conductor: {}   max order: {}",
                    s.frobenius, s.conductor, s.max_order
                ));
                for e in &s.apery {
                    line(format!(
                        "apery residue {}: {} (order {})",
                        e.residue, e.element, e.order
                    ));
                }
                match &s.interval_completion {
                    Some(t) => line(format!("interval completion: {}", join(t, ", "))),
                    None => line("interval completion: not in regime (w > m - 2)".to_string()),
                }
                line(format!("betti total: {}", join(&a.betti.total, " ")));
                for g in a.betti.graded.iter().flatten() {
                    line(format!("betti graded: b[{}, {}] = {}", g.index, g.degree, g.dim));
                }
                line(format!(
                    "tangent cone initial ideal ({} variables, colength {}):",
                    a.tangent_cone.n_vars,
                    opt(&a.tangent_cone.colength)
                ));
                for g in &a.tangent_cone.generators {
                    line(format!("  {}", pretty_monomial(g)));
                }
                line(format!(
                    "tangent cone betti bound: {}",
                    join(&a.tangent_cone.betti, " ")
                ));
                line(format!("hilbert-samuel: {}", join(&a.hilbert_samuel, " ")));
                for c in &a.bounds.checks {
                    line(format!(
                        "bound {}{}: {} vs {} {}",
                        c.label,
                        c.index.map(|i| format!(" i={i}")).unwrap_or_default(),
                        c.computed,
                        c.bound,
                        check_verdict(c.pass, c.borderline),
                    ));
                }
            }
            ResultItem::Semigroup(r) => line(format!(
                "row m={} w={} gens={} betti={} conjecture={} valla={} thm14={}",
                r.multiplicity,
                r.width,
                join(&r.generators, ","),
                join(&r.betti, ","),
                flag(r.pass_conjecture),
                flag(r.pass_valla),
                flag(r.pass_thm14),
            )),
            ResultItem::Extremal(e) => line(format!(
                "extremal i={}: max b_i = {} at gens={} (conjectured cap {})",
                e.index,
                e.max,
                join(&e.attained_by, ","),
                e.conjectured_bound
            )),
            ResultItem::Check(c) => line(format!(
                "check {}{}: {} vs {} {}",
                c.label,
                c.index.map(|i| format!(" at {i}")).unwrap_or_default(),
                c.computed,
                c.bound,
                check_verdict(c.pass, c.borderline),
            )),
            ResultItem::Exception(e) => line(format!(
                "exception w={} alpha={} beta={}: B0={} (cap {}), B1={} (cap {})",
                e.width, e.alpha, e.beta, e.b0, e.bound0, e.b1, e.bound1
            )),
            ResultItem::Count(c) => line(format!("count {}: {}", c.name, c.value)),
            ResultItem::Pair(p) => line(format!(
                "pair m={} w={}: {} (computed {}; expected {})",
                p.multiplicity,
                p.width,
                flag(p.pass),
                p.computed.iter().map(|g| pretty_monomial(g)).collect::<Vec<_>>().join(", "),
                p.expected.iter().map(|g| pretty_monomial(g)).collect::<Vec<_>>().join(", "),
            )),
            ResultItem::Shift(r) => line(format!(
                "shift j={} gens={} betti={}",
                r.j,
                join(&r.generators, ","),
                join(&r.betti, ",")
            )),
            ResultItem::Periodicity(p) => line(format!(
                "periodicity: width={} onset={} violations={}",
                p.width,
                p.onset.map(|j| j.to_string()).unwrap_or_else(|| "none observed".to_string()),
                if p.violations.is_empty() {
                    "none".to_string()
                } else {
                    join(&p.violations, ",")
                }
            )),
        }
    }
    line(format!(
        "summary: {}",
        if report.summary.pass { "pass" } else { "FAIL" }
    ));
    for v in &report.summary.violations {
        line(format!("violation: {v}"));
    }
    out
}

fn flag(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

fn check_verdict(pass: bool, borderline: bool) -> &'static str {
    match (pass, borderline) {
        (true, _) => "ok",
        (false, true) => "borderline",
        (false, false) => "FAIL",
    }
}
