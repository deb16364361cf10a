//! Human, JSON, and DOT renderings shared by the subcommands.

use shiftlab::Graph;

use crate::report::{CompareReport, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
    Dot,
}

/// One-line edge listing like `[1,2] [1,3]`.
pub fn edge_list(g: &Graph) -> String {
    if g.edge_count() == 0 {
        return "(none)".to_string();
    }
    g.edges()
        .map(|(a, b)| format!("[{a},{b}]"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn graph_human(g: &Graph) -> String {
    format!("n: {}\nedges ({}): {}", g.n(), g.edge_count(), edge_list(g))
}

/// DOT rendering with vertices `1..n` and undirected edges.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn compare_human(report: &CompareReport) -> String {
    let mut out = String::new();
    for (method, result) in &report.results {
        out.push_str(&format!(
            "{method}: {} edges: {}\n  profile: {:?}\n",
            result.edges.edge_count(),
            edge_list(&result.edges),
            result.profile.cumulative(),
        ));
    }
    for (pair, equal) in &report.verdicts {
        out.push_str(&format!(
            "{pair}: {}\n",
            if *equal { "EQUAL" } else { "DIFFER" }
        ));
    }
    out
}

pub fn verify_human(report: &VerifyReport) -> String {
    let width = report
        .rows
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = format!(
        "{:<width$}  {:>6}  {:>10}  result\n",
        "check", "cases", "violations"
    );
    for row in &report.rows {
        out.push_str(&format!(
            "{:<width$}  {:>6}  {:>10}  {}\n",
            row.name,
            row.cases,
            row.violations,
            if row.violations == 0 { "PASS" } else { "FAIL" }
        ));
    }
    out.push_str(&format!(
        "overall: {}\n",
        if report.ok { "PASS" } else { "FAIL" }
    ));
    out
}
