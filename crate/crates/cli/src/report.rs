//! Per-graph reports: all selected bound checks plus the invariant profile
//! and the three headline eigenvalues, emitted as JSON lines or tables.

use crate::Format;
use eigenbounds::bounds::{
    check_cao_at, check_delta_gamma_at, check_fms_at, check_grone_merris_at, check_hong_at,
    check_hsf_at, check_llt_girth_at, check_llt_lambda2_at, check_mohar_at, check_theorem1_at,
    check_theorem2_at, check_theorem3_at,
};
use eigenbounds::{
    encode_graph6, make_family, minimum_dominating_set, parse_graph6, Analysis, BoundCheck,
    BoundId, BoundSelection, EqualityClass, FamilySpec, Graph, InvariantProfile, VertexSet,
};
use serde::Serialize;
use std::io::{BufRead, Write};
use std::path::Path;

/// Everything reported about one graph. The embedded graph6 string
/// re-parses to a graph that reproduces every numeric field.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub source: String,
    pub graph6: String,
    pub profile: InvariantProfile,
    pub mu: f64,
    pub lambda2: Option<f64>,
    pub lambda_n: f64,
    pub checks: Vec<BoundCheck>,
}

/// Evaluates the selected bounds in canonical order. The cut bound is
/// instantiated at a minimum dominating set; when that set is the whole
/// vertex set the instance is inapplicable.
pub fn graph_checks(a: &Analysis, selection: &BoundSelection) -> Vec<BoundCheck> {
    BoundId::ALL
        .into_iter()
        .filter(|id| selection.contains(*id))
        .map(|id| match id {
            BoundId::Theorem1 => check_theorem1_at(a),
            BoundId::LltGirth => check_llt_girth_at(a),
            BoundId::Theorem2 => check_theorem2_at(a),
            BoundId::LltLambda2 => check_llt_lambda2_at(a),
            BoundId::Theorem3 => check_theorem3_at(a),
            BoundId::Mohar => {
                let x = minimum_dominating_set(&a.graph);
                let x = if x.len() < a.graph.n() { x } else { VertexSet::full(a.graph.n()) };
                check_mohar_at(a, &x)
            }
            BoundId::GroneMerris => check_grone_merris_at(a),
            BoundId::Fms => check_fms_at(a),
            BoundId::Hong => check_hong_at(a),
            BoundId::Hsf => check_hsf_at(a),
            BoundId::Cao => check_cao_at(a),
            BoundId::DeltaGamma => check_delta_gamma_at(a),
        })
        .collect()
}

pub fn build_report(source: String, g: &Graph, selection: &BoundSelection) -> Report {
    let a = Analysis::of(g);
    Report {
        source,
        graph6: encode_graph6(g),
        mu: a.mu(),
        lambda2: a.lambda2(),
        lambda_n: a.lambda_max(),
        checks: graph_checks(&a, selection),
        profile: a.profile,
    }
}

fn class_label(class: &EqualityClass) -> String {
    match class {
        EqualityClass::Star => "star".into(),
        EqualityClass::Moore => "moore".into(),
        EqualityClass::Complete => "complete".into(),
        EqualityClass::MatchingComplement => "matching-complement".into(),
        EqualityClass::RegularUnion { regular_part } => {
            format!("regular-union{regular_part:?}")
        }
        EqualityClass::StarDecomposition { star_part } => {
            format!("star-decomposition{star_part:?}")
        }
    }
}

fn fmt_real(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.6}")
    } else {
        "-".into()
    }
}

pub fn write_report(out: &mut impl Write, report: &Report, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(report).expect("report serializes")
        ),
        Format::Table => write_report_table(out, report),
    }
}

fn write_report_table(out: &mut impl Write, r: &Report) -> std::io::Result<()> {
    let p = &r.profile;
    writeln!(out, "== {} ==", r.source)?;
    writeln!(out, "graph6: {}", r.graph6)?;
    writeln!(
        out,
        "n={} m={} degrees=[{},{}] girth={} diameter={} gamma={} components={:?}",
        p.n, p.m, p.delta_min, p.delta_max, p.girth, p.diameter, p.gamma, p.component_orders
    )?;
    let lambda2 = r.lambda2.map_or("-".into(), fmt_real);
    writeln!(
        out,
        "mu={} lambda2={} lambda_n={}",
        fmt_real(r.mu),
        lambda2,
        fmt_real(r.lambda_n)
    )?;
    writeln!(
        out,
        "{:<13} {:>12} {:>12} {:>4} {:>5} {:>5}  {}",
        "bound", "lhs", "rhs", "app", "holds", "tight", "class"
    )?;
    for c in &r.checks {
        writeln!(
            out,
            "{:<13} {:>12} {:>12} {:>4} {:>5} {:>5}  {}",
            c.bound_id.as_str(),
            fmt_real(c.lhs),
            fmt_real(c.rhs),
            if c.applicable { "yes" } else { "no" },
            if c.holds { "yes" } else { "no" },
            if c.tight { "yes" } else { "no" },
            c.classification.as_ref().map_or(String::new(), class_label),
        )?;
    }
    writeln!(out)
}

/// Reports every graph6 line from a file or standard input, in input order.
/// Malformed lines are diagnosed on the error stream with their line number
/// and skipped; they turn the exit code to 2 without stopping the stream.
pub fn cmd_report(file: Option<&Path>, selection: &BoundSelection, format: Format) -> i32 {
    let (label, reader): (String, Box<dyn BufRead>) = match file {
        Some(path) => match std::fs::File::open(path) {
            Ok(f) => (path.display().to_string(), Box::new(std::io::BufReader::new(f))),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return 2;
            }
        },
        None => ("stdin".into(), Box::new(std::io::BufReader::new(std::io::stdin()))),
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut exit = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("{label}:{line_no}: read error: {e}");
                return 2;
            }
        };
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text.as_bytes()) {
            Ok(g) => {
                let report = build_report(format!("{label}:{line_no}"), &g, selection);
                write_report(&mut out, &report, format).expect("stdout write");
            }
            Err(e) => {
                eprintln!("{label}:{line_no}: {e}");
                exit = 2;
            }
        }
    }
    exit
}

/// Builds a named family member and emits its graph6 line followed by its
/// full report.
pub fn cmd_family(
    name: &str,
    param: Option<usize>,
    selection: &BoundSelection,
    format: Format,
) -> i32 {
    let spec = match FamilySpec::from_parts(name, param) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let g = match make_family(&spec) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let source = match param {
        Some(p) => format!("family:{name}-{p}"),
        None => format!("family:{name}"),
    };
    let report = build_report(source, &g, selection);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{}", report.graph6).expect("stdout write");
    write_report(&mut out, &report, format).expect("stdout write");
    0
}
