//! Sparse Schur-basis expansions and the products `G(k, m)·p_n`.
//!
//! The coefficient of `s_{λ⁺}` in `G(k, m)·p_n` collects one signed term
//! `(-1)^{ht(λ⁺/λ)} pet_k(λ)` for every `λ` in the support of `G(k, m)` from
//! which `λ⁺` is reached by a rim hook of size `n`. It leaves `{-1, 0, 1}`
//! exactly when `k ≥ 3`, `k | n` and `m ≥ n`; [`classify_smf`] is that
//! predicate and [`witness_non_smf`] builds two colliding terms of equal
//! sign for every triple in the region.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abacus::k_core;
use crate::error::{require, Error, Result};
use crate::partition::{add_rim_hooks_with_height, partitions_of, Partition, SkewShape};
use crate::petrie::{pet_det, pet_rimhook};

/// A finitely supported integer combination of Schur functions of one
/// degree. Terms iterate in canonical partition order; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `s_λ` with coefficient 1.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = lambda.size();
        terms.insert(lambda, 1);
        SchurExpansion { degree, terms }
    }

    /// Collects terms, combining repeated partitions.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut out = SchurExpansion::zero(degree);
        for (lambda, c) in terms {
            out.add_term(lambda, c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: lambda.size(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(coeff).ok_or(Error::Overflow)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for SchurExpansion {
    /// `s[3,3,2] - s[3,2,2,1] + 2*s[2,2,2,2]`; the zero expansion is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, &c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

/// `G(k, m) = Σ_λ pet_k(λ) s_λ`. Only partitions with parts below `k` and a
/// k-core of at most one part are visited; all others have `pet_k = 0`.
pub fn petrie_schur_expansion(k: usize, m: usize) -> Result<SchurExpansion> {
    require("k", k, 1, "at least 1")?;
    let mut out = SchurExpansion::zero(m);
    for lambda in partitions_of(m, Some(k - 1)) {
        let coeff = if k == 1 {
            pet_det(&lambda, k)?
        } else {
            if k_core(&lambda, k)?.len() > 1 {
                continue;
            }
            pet_rimhook(&lambda, k)?
        };
        out.add_term(lambda, coeff.into())?;
    }
    Ok(out)
}

/// Murnaghan–Nakayama: `s_λ·p_n = Σ (-1)^{ht(λ⁺/λ)} s_{λ⁺}` over rim hooks
/// `λ⁺/λ` of size `n`, extended linearly.
pub fn multiply_power_sum(f: &SchurExpansion, n: usize) -> Result<SchurExpansion> {
    require("n", n, 1, "at least 1")?;
    let mut out = SchurExpansion::zero(f.degree + n);
    for (lambda, c) in f.iter() {
        for (plus, height) in add_rim_hooks_with_height(lambda, n) {
            let term = if height % 2 == 1 {
                c.checked_neg()
            } else {
                Some(c)
            };
            out.add_term(plus, term.ok_or(Error::Overflow)?)?;
        }
    }
    Ok(out)
}

pub fn petrie_times_power_sum(k: usize, m: usize, n: usize) -> Result<SchurExpansion> {
    multiply_power_sum(&petrie_schur_expansion(k, m)?, n)
}

/// Two distinct support partitions of `G(k, m)` reaching the same `λ⁺` by a
/// rim hook of size `n`, with equal signed contributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lambda: Partition,
    pub mu: Partition,
    pub lambda_plus: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmfVerdict {
    pub signed_multiplicity_free: bool,
    /// The first term in canonical order with `|coeff| ≥ 2`.
    pub offending: Option<(Partition, i64)>,
    pub witness: Option<Witness>,
}

pub fn is_signed_multiplicity_free(f: &SchurExpansion) -> SmfVerdict {
    let offending = f
        .iter()
        .find(|(_, c)| c.unsigned_abs() >= 2)
        .map(|(p, c)| (p.clone(), c));
    SmfVerdict {
        signed_multiplicity_free: offending.is_none(),
        offending,
        witness: None,
    }
}

/// Closed form: `G(k, m)·p_n` is signed multiplicity free unless
/// `k ≥ 3`, `k | n` and `m ≥ n`.
pub fn classify_smf(k: usize, m: usize, n: usize) -> Result<bool> {
    require("k", k, 1, "at least 1")?;
    require("n", n, 1, "at least 1")?;
    Ok(!(k >= 3 && n.is_multiple_of(k) && m >= n))
}

fn shape(first: usize, twos: usize, ones: usize) -> Partition {
    let mut parts = Vec::with_capacity(1 + twos + ones);
    if first > 0 {
        parts.push(first);
    }
    parts.extend(core::iter::repeat_n(2, twos));
    parts.extend(core::iter::repeat_n(1, ones));
    Partition::new(parts).expect("first part is at least 2 when present")
}

/// Builds a pair of equal-sign collisions for `(k, m, n)` in the
/// non-multiplicity-free region. With `d = m mod k`, `r = (m - d) mod n`
/// and `q = 1 + (m - d) / n`, the construction splits on the parity of `q`,
/// on whether `d = 1`, and for odd `q` on whether `r = 0`. The result is
/// verified before it is returned.
pub fn witness_non_smf(k: usize, m: usize, n: usize) -> Result<Witness> {
    if classify_smf(k, m, n)? {
        return Err(Error::PreconditionViolated { k, m, n });
    }
    let d = m % k;
    let r = (m - d) % n;
    let q = 1 + (m - d) / n;
    let t = q / 2;
    let short =
        |what: &str| Error::InternalInvariantFailure(format!("negative exponent in {what}"));

    let (lambda_plus, lambda, mu) = match (q.is_multiple_of(2), d == 1) {
        (true, false) => (
            shape(d, n * t, r),
            shape(d, n * (t - 1), n + r),
            shape(
                d,
                n * (t - 1) + r + 1,
                (n - r).checked_sub(2).ok_or_else(|| short("case 1"))?,
            ),
        ),
        (true, true) => (
            shape(0, n * t, r + 1),
            shape(0, n * (t - 1), n + r + 1),
            shape(
                0,
                n * (t - 1) + r + 2,
                (n - r).checked_sub(3).ok_or_else(|| short("case 2"))?,
            ),
        ),
        (false, false) if r == 0 => (
            shape(d, n * t, n),
            shape(d, n * (t - 1), 2 * n),
            shape(d, n * t, 0),
        ),
        (false, false) => (
            shape(d, n * t + r, n - r),
            shape(d, n * (t - 1) + r, 2 * n - r),
            shape(
                d,
                n * t + 1,
                r.checked_sub(2).ok_or_else(|| short("case 3"))?,
            ),
        ),
        (false, true) if r == 0 => (
            shape(0, n * t, n + 1),
            shape(0, n * (t - 1), 2 * n + 1),
            shape(0, n * t, 1),
        ),
        (false, true) => (
            shape(0, n * t + r, n - r + 1),
            shape(0, n * (t - 1) + r, 2 * n - r + 1),
            shape(
                0,
                n * t + 2,
                r.checked_sub(3).ok_or_else(|| short("case 4"))?,
            ),
        ),
    };
    let witness = Witness {
        lambda,
        mu,
        lambda_plus,
    };
    verify_witness(k, m, n, &witness)?;
    Ok(witness)
}

/// Checks every witness invariant; `Err(InternalInvariantFailure)` names
/// the first that fails.
pub fn verify_witness(k: usize, m: usize, n: usize, w: &Witness) -> Result<()> {
    let fail = |what: String| Err(Error::InternalInvariantFailure(what));
    if w.lambda == w.mu {
        return fail(format!("λ = μ = {}", w.lambda));
    }
    let mut signed = [0i64; 2];
    for (slot, part) in [&w.lambda, &w.mu].into_iter().enumerate() {
        if part.size() != m {
            return fail(format!("{part} is not a partition of {m}"));
        }
        let pet: i64 = pet_det(part, k)?.into();
        if pet == 0 {
            return fail(format!("pet_{k}({part}) = 0"));
        }
        let hook = SkewShape::new(w.lambda_plus.clone(), part.clone())?;
        if !hook.is_rim_hook() || hook.size() != n {
            return fail(format!("{hook} is not a rim hook of size {n}"));
        }
        signed[slot] = if hook.height()? % 2 == 1 { -pet } else { pet };
    }
    if signed[0] != signed[1] {
        return fail(format!(
            "contributions to s{} have opposite signs",
            w.lambda_plus
        ));
    }
    Ok(())
}

/// Outcome of one `(k, m, n)` triple in a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleResult {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub predicted_smf: bool,
    pub verdict: SmfVerdict,
    pub max_abs_coefficient: i64,
    /// Set when the witness construction failed verification.
    pub witness_error: Option<String>,
}

impl TripleResult {
    pub fn agrees(&self) -> bool {
        self.predicted_smf == self.verdict.signed_multiplicity_free
    }
}

/// Compares the computed expansion of `G(k, m)·p_n` against the closed
/// form, and builds the witness for non-SMF triples.
pub fn evaluate_triple(k: usize, m: usize, n: usize) -> Result<TripleResult> {
    let predicted_smf = classify_smf(k, m, n)?;
    let expansion = petrie_times_power_sum(k, m, n)?;
    let max_abs_coefficient = expansion.iter().map(|(_, c)| c.abs()).max().unwrap_or(0);
    let mut verdict = is_signed_multiplicity_free(&expansion);
    let mut witness_error = None;
    if !predicted_smf {
        match witness_non_smf(k, m, n) {
            Ok(w) => verdict.witness = Some(w),
            Err(e) => witness_error = Some(format!("{e}")),
        }
    }
    Ok(TripleResult {
        k,
        m,
        n,
        predicted_smf,
        verdict,
        max_abs_coefficient,
        witness_error,
    })
}

/// Sorted summary of a sweep over `1 ≤ k ≤ k_max`, `0 ≤ m ≤ m_max`,
/// `1 ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub k_max: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub triples: usize,
    /// Triples where the expansion and the closed form disagree.
    pub disagreements: Vec<TripleResult>,
    /// Every non-SMF triple, in `(k, m, n)` order.
    pub non_smf: Vec<TripleResult>,
    pub witness_failures: Vec<TripleResult>,
    pub max_abs_coefficient: i64,
}

impl SweepReport {
    /// Assembles a report from per-triple results in any order.
    pub fn from_results(
        k_max: usize,
        m_max: usize,
        n_max: usize,
        mut results: Vec<TripleResult>,
    ) -> Self {
        results.sort_by_key(|r| (r.k, r.m, r.n));
        let pick = |keep: &dyn Fn(&TripleResult) -> bool| -> Vec<TripleResult> {
            results.iter().filter(|r| keep(r)).cloned().collect()
        };
        SweepReport {
            k_max,
            m_max,
            n_max,
            triples: results.len(),
            disagreements: pick(&|r| !r.agrees()),
            non_smf: pick(&|r| !r.verdict.signed_multiplicity_free || !r.predicted_smf),
            witness_failures: pick(&|r| r.witness_error.is_some()),
            max_abs_coefficient: results
                .iter()
                .map(|r| r.max_abs_coefficient)
                .max()
                .unwrap_or(0),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.witness_failures.is_empty()
    }

    /// All triples of the sweep, in the order they are reported.
    pub fn triples_in_range(
        k_max: usize,
        m_max: usize,
        n_max: usize,
    ) -> Vec<(usize, usize, usize)> {
        let mut out = vec![];
        for k in 1..=k_max {
            for m in 0..=m_max {
                for n in 1..=n_max {
                    out.push((k, m, n));
                }
            }
        }
        out
    }
}

pub fn sweep_smf(k_max: usize, m_max: usize, n_max: usize) -> Result<SweepReport> {
    require("k_max", k_max, 1, "at least 1")?;
    require("n_max", n_max, 1, "at least 1")?;
    let results = SweepReport::triples_in_range(k_max, m_max, n_max)
        .into_iter()
        .map(|(k, m, n)| evaluate_triple(k, m, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::from_results(k_max, m_max, n_max, results))
}
