//! JSON records and plain-text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use petrie_core::abacus::AbacusProfile;
use petrie_core::modular::TransitionMatrix;
use petrie_core::schur::{SweepReport, TripleResult, Witness};
use petrie_core::{Partition, SchurExpansion};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT_VERSION: &str = "1.0.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub result: T,
    pub format_version: String,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, params: BTreeMap<String, Value>, result: T) -> Self {
        Envelope {
            command: command.to_string(),
            params,
            result,
            format_version: FORMAT_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub partition: Vec<usize>,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub degree: usize,
    pub terms: Vec<TermRecord>,
}

impl From<&SchurExpansion> for ExpansionRecord {
    fn from(f: &SchurExpansion) -> Self {
        ExpansionRecord {
            degree: f.degree(),
            terms: f
                .iter()
                .map(|(lambda, coeff)| TermRecord {
                    partition: lambda.parts().to_vec(),
                    coeff,
                })
                .collect(),
        }
    }
}

impl TryFrom<&ExpansionRecord> for SchurExpansion {
    type Error = petrie_core::Error;

    fn try_from(r: &ExpansionRecord) -> petrie_core::Result<Self> {
        let terms = r
            .terms
            .iter()
            .map(|t| Ok((Partition::new(t.partition.clone())?, t.coeff)))
            .collect::<petrie_core::Result<Vec<_>>>()?;
        SchurExpansion::from_terms(r.degree, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub k: usize,
    pub beta: Vec<i64>,
    pub gamma: Vec<usize>,
    pub beta_numbers: Vec<usize>,
    pub runners: Vec<[usize; 2]>,
}

impl From<&AbacusProfile> for ProfileRecord {
    fn from(p: &AbacusProfile) -> Self {
        ProfileRecord {
            k: p.k(),
            beta: p.beta().to_vec(),
            gamma: p.gamma().to_vec(),
            beta_numbers: p.beta_numbers().to_vec(),
            runners: p.runners().into_iter().map(|(r, c)| [r, c]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetRecord {
    pub lambda: Vec<usize>,
    pub k: usize,
    pub values: BTreeMap<String, i8>,
    /// Abacus data of the conjugate, when it has fewer than `k` parts.
    pub conjugate_profile: Option<ProfileRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub partition: Vec<usize>,
    pub height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreRecord {
    pub core: Vec<usize>,
    pub chain: Option<Vec<ChainStep>>,
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub lambda_plus: Vec<usize>,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        WitnessRecord {
            lambda: w.lambda.parts().to_vec(),
            mu: w.mu.parts().to_vec(),
            lambda_plus: w.lambda_plus.parts().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub signed_multiplicity_free: bool,
    pub witness: Option<WitnessRecord>,
    /// Present with `--check`: whether the full expansion agrees.
    pub check_agrees: Option<bool>,
    pub offending: Option<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub predicted_smf: bool,
    pub observed_smf: bool,
    pub offending: Option<TermRecord>,
    pub max_abs_coefficient: i64,
    pub witness: Option<WitnessRecord>,
    pub witness_error: Option<String>,
}

impl From<&TripleResult> for TripleRecord {
    fn from(r: &TripleResult) -> Self {
        TripleRecord {
            k: r.k,
            m: r.m,
            n: r.n,
            predicted_smf: r.predicted_smf,
            observed_smf: r.verdict.signed_multiplicity_free,
            offending: r
                .verdict
                .offending
                .as_ref()
                .map(|(lambda, coeff)| TermRecord {
                    partition: lambda.parts().to_vec(),
                    coeff: *coeff,
                }),
            max_abs_coefficient: r.max_abs_coefficient,
            witness: r.verdict.witness.as_ref().map(WitnessRecord::from),
            witness_error: r.witness_error.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub k_max: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub triples: usize,
    pub disagreements: Vec<TripleRecord>,
    pub non_smf: Vec<TripleRecord>,
    pub witness_failures: Vec<TripleRecord>,
    pub max_abs_coefficient: i64,
}

impl From<&SweepReport> for SweepRecord {
    fn from(r: &SweepReport) -> Self {
        let list = |v: &[TripleResult]| v.iter().map(TripleRecord::from).collect();
        SweepRecord {
            k_max: r.k_max,
            m_max: r.m_max,
            n_max: r.n_max,
            triples: r.triples,
            disagreements: list(&r.disagreements),
            non_smf: list(&r.non_smf),
            witness_failures: list(&r.witness_failures),
            max_abs_coefficient: r.max_abs_coefficient,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub k: usize,
    pub m: usize,
    pub order: Vec<Vec<usize>>,
    pub entries: Vec<Vec<i64>>,
    /// Core, written as in text output, to row indices.
    pub blocks: BTreeMap<String, Vec<usize>>,
}

impl From<&TransitionMatrix> for MatrixRecord {
    fn from(t: &TransitionMatrix) -> Self {
        MatrixRecord {
            k: t.k(),
            m: t.m(),
            order: t.order().iter().map(|p| p.parts().to_vec()).collect(),
            entries: t.entries().to_vec(),
            blocks: t
                .blocks()
                .iter()
                .map(|(core, rows)| (core.to_string(), rows.clone()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiuPoloRecord {
    pub k: usize,
    pub degree_k: bool,
    pub degree_2k_minus_1: bool,
}

pub fn partition_text(parts: &[usize]) -> String {
    let body: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("[{}]", body.join(","))
}

pub fn witness_text(w: &WitnessRecord) -> String {
    format!(
        "lambda = {}\nmu = {}\nlambda+ = {}",
        partition_text(&w.lambda),
        partition_text(&w.mu),
        partition_text(&w.lambda_plus)
    )
}

fn triple_line(r: &TripleRecord) -> String {
    let mut line = format!("({},{},{})", r.k, r.m, r.n);
    if let Some(t) = &r.offending {
        let _ = write!(
            line,
            " coefficient {} at {}",
            t.coeff,
            partition_text(&t.partition)
        );
    }
    if let Some(w) = &r.witness {
        let _ = write!(
            line,
            " witness lambda+ = {}",
            partition_text(&w.lambda_plus)
        );
    }
    if let Some(e) = &r.witness_error {
        let _ = write!(line, " witness error: {e}");
    }
    line
}

pub fn sweep_text(r: &SweepRecord) -> String {
    let mut out = format!(
        "sweep k <= {}, m <= {}, n <= {}: {} triples\n",
        r.k_max, r.m_max, r.n_max, r.triples
    );
    let _ = writeln!(out, "{} disagreements", r.disagreements.len());
    for d in &r.disagreements {
        let _ = writeln!(out, "  disagreement {}", triple_line(d));
    }
    let _ = writeln!(out, "{} non-SMF triples", r.non_smf.len());
    for t in &r.non_smf {
        let _ = writeln!(out, "  {}", triple_line(t));
    }
    let _ = writeln!(out, "{} witness failures", r.witness_failures.len());
    let _ = writeln!(out, "max |coefficient| = {}", r.max_abs_coefficient);
    out
}

/// Grid in block order, `|` between column blocks and a rule between row
/// blocks, followed by the index order.
pub fn matrix_text(t: &TransitionMatrix) -> String {
    let order = t.block_order();
    let core_of: BTreeMap<usize, &Partition> = t
        .blocks()
        .iter()
        .flat_map(|(core, rows)| rows.iter().map(move |&i| (i, core)))
        .collect();
    let width = t
        .entries()
        .iter()
        .flatten()
        .map(|a| a.to_string().len())
        .max()
        .unwrap_or(1);
    let breaks: Vec<bool> = order
        .windows(2)
        .map(|w| core_of[&w[0]] != core_of[&w[1]])
        .collect();

    let mut lines = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let mut row = String::from("[");
        for (cpos, &j) in order.iter().enumerate() {
            if cpos > 0 {
                row.push_str(if breaks[cpos - 1] { " | " } else { " " });
            }
            let _ = write!(row, "{:>width$}", t.entries()[i][j]);
        }
        row.push(']');
        let rule: String = row
            .chars()
            .map(|c| match c {
                '|' => '+',
                '[' | ']' => ' ',
                _ => '-',
            })
            .collect();
        lines.push(row);
        if pos + 1 < order.len() && breaks[pos] {
            lines.push(rule.trim_end().to_string());
        }
    }
    let groups: Vec<String> = {
        let mut groups: Vec<Vec<String>> = Vec::new();
        for (pos, &i) in order.iter().enumerate() {
            if pos == 0 || breaks[pos - 1] {
                groups.push(Vec::new());
            }
            groups.last_mut().unwrap().push(t.order()[i].to_string());
        }
        groups.into_iter().map(|g| g.join(", ")).collect()
    };
    let cores: Vec<String> = {
        let mut seen = Vec::new();
        for &i in &order {
            let c = core_of[&i].to_string();
            if seen.last() != Some(&c) {
                seen.push(c);
            }
        }
        seen
    };
    format!(
        "{}\n\norder: {}\ncores: {}\n",
        lines.join("\n"),
        groups.join(" | "),
        cores.join(" | ")
    )
}
