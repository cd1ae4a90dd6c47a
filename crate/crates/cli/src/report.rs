//! Report payloads the CLI emits and consumes.

use serde::{Deserialize, Serialize};

use turanlab::search::SearchMode;

/// JSON body of a `search` run. Witnesses are embedded as `.hg` text.
#[derive(Debug, Serialize, Deserialize)]
pub struct SearchReport {
    /// Artifact version, echoed for reproducibility.
    pub version: String,
    pub mode: SearchMode,
    pub n: u32,
    pub r: u32,
    pub constraints: Vec<String>,
    pub optimum: u64,
    pub proof_of_optimality: bool,
    pub witnesses: Vec<String>,
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub rng_seed: Option<u64>,
    pub budget_exhausted: bool,
}

impl SearchReport {
    /// Text rendering; reports the same numbers the JSON carries.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mode = match self.mode {
            SearchMode::Exact => "exact",
            SearchMode::Heuristic => "heuristic",
        };
        out.push_str(&format!("version:              {}\n", self.version));
        out.push_str(&format!("mode:                 {mode}\n"));
        out.push_str(&format!("n, r:                 {}, {}\n", self.n, self.r));
        out.push_str(&format!(
            "constraints:          {}\n",
            self.constraints.join(", ")
        ));
        out.push_str(&format!("optimum:              {}\n", self.optimum));
        out.push_str(&format!(
            "proof_of_optimality:  {}\n",
            self.proof_of_optimality
        ));
        out.push_str(&format!("nodes:                {}\n", self.nodes));
        out.push_str(&format!("elapsed_ms:           {}\n", self.elapsed_ms));
        if let Some(seed) = self.rng_seed {
            out.push_str(&format!("rng_seed:             {seed}\n"));
        }
        if self.budget_exhausted {
            out.push_str("budget_exhausted:     true\n");
        }
        out.push_str(&format!("witnesses:            {}\n", self.witnesses.len()));
        for (i, w) in self.witnesses.iter().enumerate() {
            out.push_str(&format!("--- witness {i} ---\n{w}"));
        }
        out
    }
}

/// Input format of `table --spec`.
#[derive(Debug, Deserialize)]
pub struct TableSpec {
    pub rows: Vec<RowSpec>,
}

#[derive(Debug, Deserialize)]
pub struct RowSpec {
    pub theorem: String,
    #[serde(default)]
    pub n: Option<u64>,
    #[serde(default)]
    pub l: Option<u64>,
    #[serde(default)]
    pub s: Option<u64>,
    #[serde(default)]
    pub r: Option<u64>,
}
