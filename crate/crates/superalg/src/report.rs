//! Deterministic report structures: every verdict-producing operation feeds
//! one of these, and serialization is byte-stable for a fixed config + seed.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub pass: bool,
    pub detail: String,
}

impl ClaimReport {
    pub fn pass(id: &str, description: &str, detail: impl Into<String>) -> Self {
        ClaimReport {
            id: id.into(),
            description: description.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    pub fn fail(id: &str, description: &str, detail: impl Into<String>) -> Self {
        ClaimReport {
            id: id.into(),
            description: description.into(),
            pass: false,
            detail: detail.into(),
        }
    }

    pub fn check(id: &str, description: &str, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(id, description, detail)
        } else {
            Self::fail(id, description, detail)
        }
    }

    pub fn from_result<T: std::fmt::Debug, E: std::fmt::Display>(
        id: &str,
        description: &str,
        r: &Result<T, E>,
    ) -> Self {
        match r {
            Ok(v) => Self::pass(id, description, format!("{v:?}")),
            Err(e) => Self::fail(id, description, format!("{e}")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub p: u64,
    pub seed: u64,
    pub depth: usize,
    pub claims: Vec<ClaimReport>,
}

impl SuiteReport {
    pub fn new(suite: &str, p: u64, seed: u64, depth: usize) -> Self {
        SuiteReport {
            suite: suite.into(),
            p,
            seed,
            depth,
            claims: Vec::new(),
        }
    }

    pub fn push(&mut self, c: ClaimReport) {
        self.claims.push(c);
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub version: u32,
    pub p: u64,
    pub depth: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(|s| s.all_pass())
    }

    pub fn first_failure(&self) -> Option<&ClaimReport> {
        self.suites
            .iter()
            .flat_map(|s| s.claims.iter())
            .find(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# verification report (p = {}, depth = {}, seed = {})\n\n",
            self.p, self.depth, self.seed
        ));
        for s in &self.suites {
            out.push_str(&format!("## suite `{}`\n\n", s.suite));
            out.push_str("| claim | verdict | detail |\n|---|---|---|\n");
            for c in &s.claims {
                out.push_str(&format!(
                    "| `{}` {} | {} | {} |\n",
                    c.id,
                    c.description,
                    if c.pass { "pass" } else { "FAIL" },
                    c.detail.replace('|', "/").replace('\n', " ")
                ));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.all_pass() { "pass" } else { "FAIL" }
        ));
        out
    }
}

/// CSV table for resolution growth: degree, rank, total_dim.
pub fn growth_csv(ranks: &[usize], total_dims: &[usize]) -> String {
    let mut out = String::from("degree,rank,total_dim\n");
    for (n, (r, d)) in ranks.iter().zip(total_dims).enumerate() {
        out.push_str(&format!("{n},{r},{d}\n"));
    }
    out
}

/// CSV table for Ext dimensions: n, computed, closed_form, oracle.
pub fn ext_csv(rows: &[(usize, usize, usize, Option<usize>)]) -> String {
    let mut out = String::from("n,computed,closed_form,oracle\n");
    for (n, c, cf, o) in rows {
        out.push_str(&format!(
            "{n},{c},{cf},{}\n",
            o.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
        ));
    }
    out
}
