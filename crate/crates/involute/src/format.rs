//! Output records. Each record is one line: a human-readable sentence by
//! default, or a flat JSON object under `--format machine`.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use involute_core::classify::VerificationReport;
use involute_core::density::PrimeSelection;
use involute_core::{ExactRational, FiniteGroup, GroupInvariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

pub trait Record: Serialize {
    fn human(&self) -> String;
}

pub fn emit<R: Record>(out: &mut dyn Write, format: Format, record: &R) -> io::Result<()> {
    match format {
        Format::Human => writeln!(out, "{}", record.human()),
        Format::Machine => {
            let line = serde_json::to_string(record).map_err(io::Error::other)?;
            writeln!(out, "{line}")
        }
    }
}

fn num_den(q: &ExactRational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

#[derive(Debug, Serialize)]
pub struct InvariantsRecord {
    pub group: String,
    pub order: usize,
    pub i: usize,
    pub c: usize,
    pub r: usize,
    pub beta_num: String,
    pub beta_den: String,
}

impl InvariantsRecord {
    pub fn new(group: impl Into<String>, inv: &GroupInvariants) -> Self {
        let (beta_num, beta_den) = num_den(&inv.beta);
        InvariantsRecord {
            group: group.into(),
            order: inv.order,
            i: inv.i,
            c: inv.c,
            r: inv.r,
            beta_num,
            beta_den,
        }
    }
}

impl Record for InvariantsRecord {
    fn human(&self) -> String {
        format!(
            "{}: order {}, i = {}, c = {}, r = {}, beta = {}/{}",
            self.group, self.order, self.i, self.c, self.r, self.beta_num, self.beta_den
        )
    }
}

#[derive(Debug, Serialize)]
pub struct IdentifyRecord {
    pub group: String,
    pub order: usize,
    pub name: Option<String>,
}

impl Record for IdentifyRecord {
    fn human(&self) -> String {
        match &self.name {
            Some(name) => format!("{} (order {}) is {name}", self.group, self.order),
            None => format!("{} (order {}) is not a known group", self.group, self.order),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CensusRecord {
    pub order: usize,
    pub classes: usize,
    pub tables_explored: u64,
    pub complete_tables: u64,
}

impl Record for CensusRecord {
    fn human(&self) -> String {
        format!(
            "order {}: {} classes ({} complete tables, {} search nodes)",
            self.order, self.classes, self.complete_tables, self.tables_explored
        )
    }
}

const HUMAN_WITNESS_LIMIT: usize = 12;
const HUMAN_PRIME_LIMIT: usize = 24;
const HUMAN_FRACTION_LIMIT: usize = 60;

#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub claim: String,
    pub scope: String,
    pub status: String,
    pub exhaustive: bool,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    pub counterexample: Option<String>,
    pub explanation: Option<String>,
    pub table: Option<Vec<Vec<usize>>>,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(rep: &VerificationReport) -> Self {
        let cex = rep.counterexample.as_ref();
        ReportRecord {
            claim: rep.claim.to_string(),
            scope: rep.scope.clone(),
            status: rep.status.as_str().to_string(),
            exhaustive: rep.exhaustive,
            witnesses: rep.witnesses.iter().map(|w| w.name.clone()).collect(),
            notes: rep.notes.clone(),
            counterexample: cex.map(|c| c.group.display_name()),
            explanation: cex.map(|c| c.explanation.clone()),
            table: cex.map(|c| c.group.rows()),
        }
    }
}

impl Record for ReportRecord {
    fn human(&self) -> String {
        let mut s = format!("{} [{}] {}", self.claim, self.scope, self.status);
        if !self.exhaustive {
            s.push_str(" (partly member-wise)");
        }
        let n = self.witnesses.len();
        s.push_str(&format!(", {n} witness{}", if n == 1 { "" } else { "es" }));
        if n > 0 {
            let shown: Vec<&str> = self
                .witnesses
                .iter()
                .take(HUMAN_WITNESS_LIMIT)
                .map(String::as_str)
                .collect();
            s.push_str(": ");
            s.push_str(&shown.join(", "));
            if n > HUMAN_WITNESS_LIMIT {
                s.push_str(&format!(", ... ({} more)", n - HUMAN_WITNESS_LIMIT));
            }
        }
        for note in &self.notes {
            s.push_str(&format!("\n  note: {note}"));
        }
        if let (Some(g), Some(why)) = (&self.counterexample, &self.explanation) {
            s.push_str(&format!("\n  counterexample {g}: {why}"));
            if let Some(rows) = &self.table {
                for row in rows {
                    let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                    s.push_str(&format!("\n    {}", cells.join(" ")));
                }
            }
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct ApproxRecord {
    pub target_num: String,
    pub target_den: String,
    pub eps_num: String,
    pub eps_den: String,
    pub primes: Vec<u64>,
    pub beta_num: String,
    pub beta_den: String,
    pub primes_scanned: u64,
    pub converged: bool,
    #[serde(skip)]
    pub beta_approx: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub materialized: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub materialized_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counted_beta_num: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counted_beta_den: Option<String>,
}

impl ApproxRecord {
    pub fn new(
        t: &ExactRational,
        eps: &ExactRational,
        sel: &PrimeSelection,
        converged: bool,
    ) -> Self {
        let (target_num, target_den) = num_den(t);
        let (eps_num, eps_den) = num_den(eps);
        let (beta_num, beta_den) = num_den(&sel.predicted_beta);
        ApproxRecord {
            target_num,
            target_den,
            eps_num,
            eps_den,
            primes: sel.primes.clone(),
            beta_num,
            beta_den,
            primes_scanned: sel.primes_scanned,
            converged,
            beta_approx: sel.predicted_beta.to_f64(),
            materialized: None,
            materialized_order: None,
            counted_beta_num: None,
            counted_beta_den: None,
        }
    }

    pub fn with_group(mut self, g: &FiniteGroup, counted: &ExactRational) -> Self {
        let (n, d) = num_den(counted);
        self.materialized = Some(String::from("built"));
        self.materialized_order = Some(g.order().to_string());
        self.counted_beta_num = Some(n);
        self.counted_beta_den = Some(d);
        self
    }

    pub fn too_large(mut self, required_order: String) -> Self {
        self.materialized = Some(String::from("too-large"));
        self.materialized_order = Some(required_order);
        self
    }
}

impl Record for ApproxRecord {
    fn human(&self) -> String {
        let mut primes: Vec<String> = self
            .primes
            .iter()
            .take(HUMAN_PRIME_LIMIT)
            .map(u64::to_string)
            .collect();
        if self.primes.len() > HUMAN_PRIME_LIMIT {
            primes.push(format!(
                "... ({} more)",
                self.primes.len() - HUMAN_PRIME_LIMIT
            ));
        }
        let beta = if self.beta_num.len() + self.beta_den.len() > HUMAN_FRACTION_LIMIT {
            format!(
                "{:.6} ({}-digit numerator, {}-digit denominator)",
                self.beta_approx,
                self.beta_num.len(),
                self.beta_den.len()
            )
        } else {
            format!("{}/{}", self.beta_num, self.beta_den)
        };
        let mut s = format!(
            "target {}/{} within {}/{}: {}, primes [{}], beta = {}, {} primes scanned",
            self.target_num,
            self.target_den,
            self.eps_num,
            self.eps_den,
            if self.converged {
                "converged"
            } else {
                "not converged (best so far)"
            },
            primes.join(", "),
            beta,
            self.primes_scanned
        );
        match (self.materialized.as_deref(), &self.materialized_order) {
            (Some("built"), Some(order)) => s.push_str(&format!(
                "\n  built group of order {order}, counted beta = {}/{}",
                self.counted_beta_num.as_deref().unwrap_or("?"),
                self.counted_beta_den.as_deref().unwrap_or("?")
            )),
            (Some(_), Some(order)) => {
                s.push_str(&format!("\n  group too large to build: order {order}"))
            }
            _ => {}
        }
        s
    }
}
