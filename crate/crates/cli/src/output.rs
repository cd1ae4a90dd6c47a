//! Text and markdown renderings of verification reports.

use clap::ValueEnum;

use turanlab::search::verify::Verdict;
use turanlab::TheoremReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Markdown,
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Confirmed => "confirmed",
        Verdict::SearchExceedsFormula => "search-exceeds-formula",
        Verdict::ConstructionSuboptimalAtThisN => "construction-suboptimal-at-this-n",
        Verdict::NotDetermined => "not-determined",
    }
}

fn params_string(report: &TheoremReport) -> String {
    let mut parts = Vec::new();
    for (name, v) in [
        ("n", report.params.n),
        ("l", report.params.l),
        ("s", report.params.s),
        ("r", report.params.r),
    ] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    parts.join(" ")
}

pub fn render_verify_text(report: &TheoremReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("theorem:         {}\n", report.theorem));
    out.push_str(&format!("params:          {}\n", params_string(report)));
    out.push_str(&format!(
        "constraints:     {}\n",
        report.constraints.join(", ")
    ));
    let range = match report.in_theorem_range {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    out.push_str(&format!(
        "formula:         {} = {} (in stated range: {range})\n",
        report.formula_id, report.formula_value
    ));
    for c in &report.constructions {
        out.push_str(&format!(
            "construction:    {} edges={} matching={} feasible={}\n",
            c.name, c.edge_count, c.matching_number, c.feasible
        ));
        for status in &c.constraints {
            out.push_str(&format!(
                "                   {} -> {}\n",
                status.constraint,
                if status.satisfied {
                    "satisfied"
                } else {
                    "violated"
                }
            ));
        }
    }
    match &report.search {
        Some(s) => out.push_str(&format!(
            "search:          optimum={} proven={} nodes={} elapsed_ms={}\n",
            s.optimum, s.proof_of_optimality, s.nodes_explored, s.elapsed_ms
        )),
        None => out.push_str("search:          not run\n"),
    }
    out.push_str(&format!(
        "verdict:         {}\n",
        verdict_label(report.verdict)
    ));
    for note in &report.notes {
        out.push_str(&format!("note:            {note}\n"));
    }
    out
}

/// One row per report: params, formula value, construction count, search
/// optimum (or a dash when out of budget), verdict.
pub fn render_table_markdown(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    out.push_str("| theorem | params | formula | construction | search | verdict |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for report in reports {
        let construction = report
            .constructions
            .iter()
            .map(|c| format!("{}={}", c.name, c.edge_count))
            .collect::<Vec<_>>()
            .join(", ");
        let search = match &report.search {
            Some(s) => s.optimum.to_string(),
            None => "—".to_string(),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            report.theorem,
            params_string(report),
            report.formula_value,
            construction,
            search,
            verdict_label(report.verdict)
        ));
    }
    out
}
