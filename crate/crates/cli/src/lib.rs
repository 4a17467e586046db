//! The `petrie` command line: argument definitions, command execution and
//! exit codes. Output is text by default, JSON with `--json`, and the
//! default can be switched with `PETRIE_FORMAT=json|text`.

pub mod format;
pub mod sweep;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use petrie_core::abacus::{k_core, profile, rim_hook_sequence};
use petrie_core::modular::transition_matrix;
use petrie_core::oracle::Oracle;
use petrie_core::partition::{conjugate, parse_partition};
use petrie_core::petrie::{pet_det, pet_grinberg, pet_rimhook};
use petrie_core::schur::{
    classify_smf, is_signed_multiplicity_free, petrie_schur_expansion, petrie_times_power_sum,
    witness_non_smf,
};
use petrie_core::{Partition, SchurExpansion};
use serde::Serialize;
use serde_json::{json, Value};

use format::{
    matrix_text, partition_text, sweep_text, witness_text, ChainStep, ClassifyRecord, CoreRecord,
    Envelope, ExpansionRecord, Format, LiuPoloRecord, MatrixRecord, PetRecord, ProfileRecord,
    SweepRecord, TermRecord, WitnessRecord,
};

pub const ENV_FORMAT: &str = "PETRIE_FORMAT";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error("no witness: ({k},{m},{n}) is signed multiplicity free")]
    NoWitness { k: usize, m: usize, n: usize },
    #[error("{0} disagreements with the closed form")]
    SweepDisagreement(usize),
    #[error(transparent)]
    Core(petrie_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::NoWitness { .. } => 4,
            CliError::SweepDisagreement(_) => 5,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<petrie_core::Error> for CliError {
    fn from(e: petrie_core::Error) -> Self {
        use petrie_core::Error::*;
        match e {
            MalformedPartition(_) | InvalidParameter { .. } | TooManyParts { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "petrie",
    version,
    about = "Petrie symmetric functions and k-Petrie numbers"
)]
pub struct Cli {
    /// JSON output
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Plain-text output
    #[arg(long, global = true)]
    pub text: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Det,
    Grinberg,
    Rimhook,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schur expansion of G(k, m)
    Expand {
        k: usize,
        m: usize,
        /// Recompute through the monomial-basis oracle
        #[arg(long)]
        verify: bool,
    },
    /// Schur expansion of G(k, m)·p_n
    Multiply {
        k: usize,
        m: usize,
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// k-Petrie number of a partition such as 3,3,1
    Pet {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
    },
    /// k-core of a partition
    Core {
        lambda: String,
        k: usize,
        /// Also print a rim hook chain from the core
        #[arg(long)]
        chain: bool,
    },
    /// Closed-form signed multiplicity freeness of G(k, m)·p_n
    Classify {
        k: usize,
        m: usize,
        n: usize,
        #[arg(long)]
        witness: bool,
        /// Compare against the computed expansion
        #[arg(long)]
        check: bool,
    },
    /// Compare the closed form with computed expansions over a range
    Sweep {
        k_max: usize,
        m_max: usize,
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transition matrix from modular Schur functions to Schur functions
    Transition { k: usize, m: usize },
    /// Check the hook-shape expansions of G(k, k) and G(k, 2k-1)
    VerifyLiuPolo {
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
    },
}

impl Cli {
    /// Flags win over the environment; text is the fallback.
    pub fn format(&self) -> CliResult<Format> {
        if self.json {
            return Ok(Format::Json);
        }
        if self.text {
            return Ok(Format::Text);
        }
        match std::env::var(ENV_FORMAT) {
            Ok(v) if v == "json" => Ok(Format::Json),
            Ok(v) if v == "text" || v.is_empty() => Ok(Format::Text),
            Ok(v) => Err(CliError::Usage(format!(
                "{ENV_FORMAT} must be json or text, got {v:?}"
            ))),
            Err(_) => Ok(Format::Text),
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    fmt: Format,
    command: &str,
    params: BTreeMap<String, Value>,
    result: T,
    text: impl FnOnce(&T) -> String,
) -> CliResult<()> {
    match fmt {
        Format::Json => writeln!(out, "{}", Envelope::new(command, params, result).to_json())?,
        Format::Text => {
            let body = text(&result);
            write!(out, "{body}")?;
            if !body.ends_with('\n') {
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn parse_lambda(s: &str) -> CliResult<Partition> {
    parse_partition(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn require_positive(name: &str, v: usize) -> CliResult<()> {
    if v == 0 {
        return Err(CliError::Usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn expansion_output(
    out: &mut dyn Write,
    fmt: Format,
    command: &str,
    params: BTreeMap<String, Value>,
    f: &SchurExpansion,
    check: Option<SchurExpansion>,
) -> CliResult<()> {
    if let Some(slow) = check {
        if &slow != f {
            return Err(CliError::Mismatch(format!(
                "oracle gives {slow}, fast path gives {f}"
            )));
        }
    }
    emit(out, fmt, command, params, ExpansionRecord::from(f), |_| {
        f.to_string()
    })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let fmt = cli.format()?;
    match &cli.command {
        &Command::Expand { k, m, verify } => {
            require_positive("k", k)?;
            let f = petrie_schur_expansion(k, m)?;
            let check = verify
                .then(|| Oracle::new().petrie_expansion(k, m))
                .transpose()?;
            let p = params(&[("k", json!(k)), ("m", json!(m)), ("verify", json!(verify))]);
            expansion_output(out, fmt, "expand", p, &f, check)
        }
        &Command::Multiply { k, m, n, verify } => {
            require_positive("k", k)?;
            require_positive("n", n)?;
            let f = petrie_times_power_sum(k, m, n)?;
            let check = verify
                .then(|| Oracle::new().petrie_times_power_sum(k, m, n))
                .transpose()?;
            let p = params(&[
                ("k", json!(k)),
                ("m", json!(m)),
                ("n", json!(n)),
                ("verify", json!(verify)),
            ]);
            expansion_output(out, fmt, "multiply", p, &f, check)
        }
        Command::Pet { lambda, k, method } => cmd_pet(out, fmt, lambda, *k, *method),
        Command::Core { lambda, k, chain } => cmd_core(out, fmt, lambda, *k, *chain),
        &Command::Classify {
            k,
            m,
            n,
            witness,
            check,
        } => cmd_classify(out, fmt, k, m, n, witness, check),
        Command::Sweep {
            k_max,
            m_max,
            n_max,
            jobs,
            out: path,
        } => {
            require_positive("k_max", *k_max)?;
            require_positive("m_max", *m_max)?;
            require_positive("n_max", *n_max)?;
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            require_positive("jobs", jobs)?;
            let report = sweep::parallel_sweep(*k_max, *m_max, *n_max, jobs)?;
            let record = SweepRecord::from(&report);
            let p = params(&[
                ("k_max", json!(k_max)),
                ("m_max", json!(m_max)),
                ("n_max", json!(n_max)),
            ]);
            match path {
                Some(path) => {
                    let mut buf = Vec::new();
                    emit(&mut buf, fmt, "sweep", p, record.clone(), sweep_text)?;
                    std::fs::write(path, buf)?;
                    writeln!(out, "{} disagreements", record.disagreements.len())?;
                }
                None => emit(out, fmt, "sweep", p, record.clone(), sweep_text)?,
            }
            if !report.is_clean() {
                return Err(CliError::SweepDisagreement(
                    record.disagreements.len() + record.witness_failures.len(),
                ));
            }
            Ok(())
        }
        &Command::Transition { k, m } => {
            require_positive("k", k)?;
            let t = transition_matrix(k, m)?;
            let p = params(&[("k", json!(k)), ("m", json!(m))]);
            emit(out, fmt, "transition", p, MatrixRecord::from(&t), |_| {
                matrix_text(&t)
            })
        }
        &Command::VerifyLiuPolo { k_min, k_max } => cmd_liu_polo(out, fmt, k_min, k_max),
    }
}

fn cmd_pet(
    out: &mut dyn Write,
    fmt: Format,
    lambda: &str,
    k: usize,
    method: Method,
) -> CliResult<()> {
    require_positive("k", k)?;
    let lambda = parse_lambda(lambda)?;
    let mut values = BTreeMap::new();
    if matches!(method, Method::Det | Method::All) {
        values.insert("det".to_string(), pet_det(&lambda, k)?.value());
    }
    if matches!(method, Method::Grinberg | Method::All) {
        values.insert("grinberg".to_string(), pet_grinberg(&lambda, k)?.value());
    }
    if matches!(method, Method::Rimhook | Method::All) {
        values.insert("rimhook".to_string(), pet_rimhook(&lambda, k)?.value());
    }
    let conj = conjugate(&lambda);
    let conjugate_profile = (k >= 2 && conj.len() < k)
        .then(|| profile(&conj, k))
        .transpose()?
        .map(|p| ProfileRecord::from(&p));
    let first = *values.values().next().expect("at least one method");
    let disagree = values.values().any(|&v| v != first);
    let record = PetRecord {
        lambda: lambda.parts().to_vec(),
        k,
        values,
        conjugate_profile,
    };
    let p = params(&[
        ("lambda", json!(lambda.parts())),
        ("k", json!(k)),
        ("method", json!(format!("{method:?}").to_lowercase())),
    ]);
    emit(out, fmt, "pet", p, record.clone(), |r| {
        if r.values.len() == 1 {
            format!("{first}")
        } else {
            r.values
                .iter()
                .map(|(m, v)| format!("{m}: {v}\n"))
                .collect()
        }
    })?;
    if disagree {
        return Err(CliError::Mismatch(format!(
            "evaluators disagree: {:?}",
            record.values
        )));
    }
    Ok(())
}

fn cmd_core(
    out: &mut dyn Write,
    fmt: Format,
    lambda: &str,
    k: usize,
    chain: bool,
) -> CliResult<()> {
    require_positive("k", k)?;
    let lambda = parse_lambda(lambda)?;
    let core = k_core(&lambda, k)?;
    let (steps, sign) = if chain {
        let seq = rim_hook_sequence(&lambda, k)?;
        let steps: Vec<ChainStep> = seq.chain()[1..]
            .iter()
            .zip(seq.heights())
            .map(|(p, height)| ChainStep {
                partition: p.parts().to_vec(),
                height,
            })
            .collect();
        (Some(steps), Some(seq.sign()))
    } else {
        (None, None)
    };
    let record = CoreRecord {
        core: core.parts().to_vec(),
        chain: steps,
        sign,
    };
    let p = params(&[
        ("lambda", json!(lambda.parts())),
        ("k", json!(k)),
        ("chain", json!(chain)),
    ]);
    emit(out, fmt, "core", p, record, |r| {
        let mut text = partition_text(&r.core);
        if let (Some(steps), Some(sign)) = (&r.chain, r.sign) {
            for s in steps {
                text.push_str(&format!(
                    "\n{} height {}",
                    partition_text(&s.partition),
                    s.height
                ));
            }
            text.push_str(&format!("\nsign {sign:+}"));
        }
        text
    })
}

fn cmd_classify(
    out: &mut dyn Write,
    fmt: Format,
    k: usize,
    m: usize,
    n: usize,
    want_witness: bool,
    check: bool,
) -> CliResult<()> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let smf = classify_smf(k, m, n)?;
    if want_witness && smf {
        return Err(CliError::NoWitness { k, m, n });
    }
    let witness = want_witness
        .then(|| witness_non_smf(k, m, n))
        .transpose()?
        .map(|w| WitnessRecord::from(&w));
    let (check_agrees, offending) = if check {
        let verdict = is_signed_multiplicity_free(&petrie_times_power_sum(k, m, n)?);
        let offending = verdict.offending.map(|(p, c)| TermRecord {
            partition: p.parts().to_vec(),
            coeff: c,
        });
        (Some(verdict.signed_multiplicity_free == smf), offending)
    } else {
        (None, None)
    };
    let record = ClassifyRecord {
        signed_multiplicity_free: smf,
        witness,
        check_agrees,
        offending,
    };
    let p = params(&[("k", json!(k)), ("m", json!(m)), ("n", json!(n))]);
    emit(out, fmt, "classify", p, record.clone(), |r| {
        let mut text = String::from(if r.signed_multiplicity_free {
            "SMF"
        } else {
            "non-SMF"
        });
        if let Some(w) = &r.witness {
            text.push('\n');
            text.push_str(&witness_text(w));
        }
        if let Some(agrees) = r.check_agrees {
            text.push_str(if agrees {
                "\ncheck: agrees"
            } else {
                "\ncheck: DISAGREES"
            });
            if let Some(t) = &r.offending {
                text.push_str(&format!(
                    " (coefficient {} at {})",
                    t.coeff,
                    partition_text(&t.partition)
                ));
            }
        }
        text
    })?;
    if record.check_agrees == Some(false) {
        return Err(CliError::Mismatch(format!(
            "({k},{m},{n}) closed form and expansion disagree"
        )));
    }
    Ok(())
}

/// `Σ_{i=0}^{k-2} (-1)^i s_(prefix, k-1-i, 1^{i+1})`.
pub fn hook_sum(k: usize, prefix: &[usize]) -> CliResult<SchurExpansion> {
    let mut f = SchurExpansion::zero(prefix.iter().sum::<usize>() + k);
    for i in 0..=k - 2 {
        let mut parts = prefix.to_vec();
        parts.push(k - 1 - i);
        parts.extend(std::iter::repeat_n(1, i + 1));
        f.add_term(Partition::new(parts)?, if i % 2 == 0 { 1 } else { -1 })?;
    }
    Ok(f)
}

fn cmd_liu_polo(out: &mut dyn Write, fmt: Format, k_min: usize, k_max: usize) -> CliResult<()> {
    if k_min < 2 || k_max < k_min {
        return Err(CliError::Usage("need 2 <= k_min <= k_max".to_string()));
    }
    let mut records = Vec::new();
    for k in k_min..=k_max {
        records.push(LiuPoloRecord {
            k,
            degree_k: petrie_schur_expansion(k, k)? == hook_sum(k, &[])?,
            degree_2k_minus_1: petrie_schur_expansion(k, 2 * k - 1)? == hook_sum(k, &[k - 1])?,
        });
    }
    let failures = records
        .iter()
        .filter(|r| !(r.degree_k && r.degree_2k_minus_1))
        .count();
    let p = params(&[("k_min", json!(k_min)), ("k_max", json!(k_max))]);
    emit(out, fmt, "verify-liu-polo", p, records, |rs| {
        let ok = |b: bool| if b { "ok" } else { "FAIL" };
        rs.iter()
            .map(|r| {
                format!(
                    "k = {}: degree {} {}, degree {} {}\n",
                    r.k,
                    r.k,
                    ok(r.degree_k),
                    2 * r.k - 1,
                    ok(r.degree_2k_minus_1)
                )
            })
            .collect()
    })?;
    if failures > 0 {
        return Err(CliError::Mismatch(format!("{failures} values of k fail")));
    }
    Ok(())
}
