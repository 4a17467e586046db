//! Fixed-`k` encodings of partitions on the `k`-runner abacus.
//!
//! A partition `μ` with fewer than `k` parts is read as the `(k-1)`-tuple
//! `(μ_1, …, μ_{k-1})` padded with zeros. From it we derive
//!
//! - the β-sequence `β_i = μ_i - i`,
//! - the γ-sequence `γ_i ≡ β_i (mod k)` with representatives in `1..=k`,
//! - the bead positions `μ + δ_{k-1} = (μ_1 + k - 2, …, μ_{k-1})`, drawn on
//!   runners `0..k` with bead `v` at row `v / k + 1`, column `v % k`.
//!
//! Removing a rim hook of size `k` moves one bead one row up its runner, so
//! the k-core is what remains after every bead is pushed to the top.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{require, Error, Result};
use crate::partition::{conjugate, Partition, SkewShape};

/// The abacus data of one partition for a fixed `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusProfile {
    k: usize,
    base: Partition,
    beta: Vec<i64>,
    gamma: Vec<usize>,
    beta_numbers: Vec<usize>,
}

impl AbacusProfile {
    pub fn k(&self) -> usize {
        self.k
    }

    /// The encoded partition. In the Petrie setting this is `λ^c`.
    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn beta_numbers(&self) -> &[usize] {
        &self.beta_numbers
    }

    /// `(row, column)` of every bead, rows counted from 1 and columns
    /// (runner labels) from 0.
    pub fn runners(&self) -> Vec<(usize, usize)> {
        self.beta_numbers
            .iter()
            .map(|&v| (v / self.k + 1, v % self.k))
            .collect()
    }

    pub fn gammas_distinct(&self) -> bool {
        gammas_distinct(self)
    }

    pub fn ninv(&self) -> usize {
        ninv(&self.gamma)
    }
}

/// `j̄`: the representative of `j mod k` in `1..=k`.
pub fn bar(value: i64, k: usize) -> usize {
    let k = k as i64;
    ((value - 1).rem_euclid(k) + 1) as usize
}

pub fn profile(mu: &Partition, k: usize) -> Result<AbacusProfile> {
    require("k", k, 2, "at least 2")?;
    if mu.len() >= k {
        return Err(Error::TooManyParts {
            length: mu.len(),
            k,
        });
    }
    let beta: Vec<i64> = (1..k).map(|i| mu.part(i - 1) as i64 - i as i64).collect();
    let gamma = beta.iter().map(|&b| bar(b, k)).collect();
    let beta_numbers = (1..k).map(|i| mu.part(i - 1) + k - 1 - i).collect();
    Ok(AbacusProfile {
        k,
        base: mu.clone(),
        beta,
        gamma,
        beta_numbers,
    })
}

/// Number of pairs `i < j` with `γ_i < γ_j`.
pub fn ninv(gamma: &[usize]) -> usize {
    gamma
        .iter()
        .enumerate()
        .map(|(i, &gi)| gamma[i + 1..].iter().filter(|&&gj| gi < gj).count())
        .sum()
}

pub fn gammas_distinct(profile: &AbacusProfile) -> bool {
    let mut seen = alloc::vec![false; profile.k + 1];
    profile
        .gamma
        .iter()
        .all(|&g| !core::mem::replace(&mut seen[g], true))
}

/// The k-core of `lambda`: every bead pushed to the top of its runner.
/// For `k = 1` this is always the empty partition.
pub fn k_core(lambda: &Partition, k: usize) -> Result<Partition> {
    require("k", k, 1, "at least 1")?;
    let count = lambda.len();
    let mut per_runner = alloc::vec![0usize; k];
    for b in lambda.beads(count) {
        per_runner[b % k] += 1;
    }
    let beads: Vec<usize> = per_runner
        .iter()
        .enumerate()
        .flat_map(|(runner, &n)| (0..n).map(move |row| runner + row * k))
        .collect();
    Ok(Partition::from_beads(&beads))
}

/// A chain `core_k(λ) = λ^0 ⊂ λ^1 ⊂ … ⊂ λ^q = λ` in which every step adds a
/// rim hook of size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookSequence {
    k: usize,
    chain: Vec<Partition>,
}

impl RimHookSequence {
    /// Validates an explicit chain, smallest partition first.
    pub fn from_chain(k: usize, chain: Vec<Partition>) -> Result<Self> {
        require("k", k, 1, "at least 1")?;
        let (first, last) = match (chain.first(), chain.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => {
                return Err(Error::InternalInvariantFailure(
                    "empty rim hook chain".into(),
                ))
            }
        };
        if *first != k_core(last, k)? {
            return Err(Error::InternalInvariantFailure(format!(
                "chain starts at {first}, not at the {k}-core of {last}"
            )));
        }
        for w in chain.windows(2) {
            let shape = SkewShape::new(w[1].clone(), w[0].clone())?;
            if !shape.is_rim_hook() {
                return Err(Error::NotARimHook);
            }
            if shape.size() != k {
                return Err(Error::NotASizeKRimHook {
                    size: shape.size(),
                    k,
                });
            }
        }
        Ok(RimHookSequence { k, chain })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn core(&self) -> &Partition {
        &self.chain[0]
    }

    /// Number of rim hooks in the chain.
    pub fn steps(&self) -> usize {
        self.chain.len() - 1
    }

    /// `ht(λ^j / λ^{j-1})` for `j = 1..=q`.
    pub fn heights(&self) -> Vec<usize> {
        self.chain
            .windows(2)
            .map(|w| {
                SkewShape::new(w[1].clone(), w[0].clone())
                    .and_then(|s| s.height())
                    .expect("validated chain")
            })
            .collect()
    }

    /// `Π_j (-1)^{ht(λ^j/λ^{j-1}) + 1}`; `+1` for a singleton chain.
    pub fn sign(&self) -> i8 {
        let odd = self.heights().iter().map(|h| h + 1).sum::<usize>() % 2 == 1;
        if odd {
            -1
        } else {
            1
        }
    }
}

/// Deterministic chain from the k-core up to `lambda`. Each removal step
/// moves the highest bead that can move up its runner.
pub fn rim_hook_sequence(lambda: &Partition, k: usize) -> Result<RimHookSequence> {
    require("k", k, 1, "at least 1")?;
    let count = lambda.len();
    let mut beads = lambda.beads(count);
    let mut chain = alloc::vec![lambda.clone()];
    loop {
        // beads stay sorted in decreasing order; the first movable one is the highest
        let movable = beads
            .iter()
            .position(|&b| b >= k && !beads.contains(&(b - k)));
        match movable {
            Some(idx) => {
                beads[idx] -= k;
                beads.sort_unstable_by(|a, b| b.cmp(a));
                chain.push(Partition::from_beads(&beads));
            }
            None => break,
        }
    }
    chain.reverse();
    RimHookSequence::from_chain(k, chain)
}

/// How `γ(μ^c)` arises from `γ(λ^c)` when a rim hook of size `k` is removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalShift {
    /// 1-based start `i` of the shifted block.
    pub position: usize,
    /// Block length `b`, the number of columns of the hook.
    pub cycle_length: usize,
    pub height: usize,
    pub gammas_distinct: bool,
    /// `(ninv(γ(λ^c)) + ninv(γ(μ^c))) mod 2`.
    pub parity: usize,
    /// `(k + ht(λ/μ) + 1) mod 2`.
    pub expected_parity: usize,
    /// `ninv(γ(μ^c)) - ninv(γ(λ^c))`.
    pub ninv_delta: i64,
}

/// Describes the block rotation relating `γ(λ^c)` and `γ(μ^c)` for a rim
/// hook `λ/μ` of size `k` with `λ_1 < k`. The β relation is checked before
/// returning.
pub fn gamma_shift_on_removal(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
) -> Result<RemovalShift> {
    require("k", k, 2, "at least 2")?;
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let height = shape.height()?;
    if shape.size() != k {
        return Err(Error::NotASizeKRimHook {
            size: shape.size(),
            k,
        });
    }
    let (position, last) = shape.column_span()?;
    let b = last - position + 1;
    let outer = profile(&conjugate(lambda), k)?;
    let inner = profile(&conjugate(mu), k)?;

    let i = position - 1;
    let mut expected_beta = outer.beta.clone();
    expected_beta[i..i + b].rotate_left(1);
    expected_beta[i + b - 1] -= k as i64;
    if expected_beta != inner.beta {
        return Err(Error::InternalInvariantFailure(format!(
            "β({}) is not the expected block shift of β({})",
            inner.base, outer.base
        )));
    }
    let mut expected_gamma = outer.gamma.clone();
    expected_gamma[i..i + b].rotate_left(1);
    if expected_gamma != inner.gamma {
        return Err(Error::InternalInvariantFailure(format!(
            "γ({}) is not a cyclic shift of γ({})",
            inner.base, outer.base
        )));
    }

    let (before, after) = (outer.ninv(), inner.ninv());
    Ok(RemovalShift {
        position,
        cycle_length: b,
        height,
        gammas_distinct: outer.gammas_distinct(),
        parity: (before + after) % 2,
        expected_parity: (k + height + 1) % 2,
        ninv_delta: after as i64 - before as i64,
    })
}

/// How `γ(λ⁺^c)` arises from `γ(λ^c)` when a rim hook of any size `n` is
/// added and `λ⁺_1 < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionShift {
    /// 1-based start `j` of the shifted block.
    pub position: usize,
    /// Block length `a`, the number of columns of the hook.
    pub columns: usize,
    /// The entry `γ_* = bar(γ_{j+a-1} + n)` written at position `j`.
    pub gamma_star: usize,
    /// The γ entry `γ_{j+a-1}` that `γ_*` replaces.
    pub replaced: usize,
}

pub fn gamma_shift_on_addition(
    lambda: &Partition,
    lambda_plus: &Partition,
    k: usize,
) -> Result<AdditionShift> {
    require("k", k, 2, "at least 2")?;
    let shape = SkewShape::new(lambda_plus.clone(), lambda.clone())?;
    let (position, last) = shape.column_span()?;
    let n = shape.size();
    let a = last - position + 1;
    let outer = profile(&conjugate(lambda_plus), k)?;
    let inner = profile(&conjugate(lambda), k)?;

    let j = position - 1;
    let mut expected_beta = inner.beta.clone();
    expected_beta[j..j + a].rotate_right(1);
    expected_beta[j] += n as i64;
    if expected_beta != outer.beta {
        return Err(Error::InternalInvariantFailure(format!(
            "β({}) is not the expected block shift of β({})",
            outer.base, inner.base
        )));
    }
    let replaced = inner.gamma[j + a - 1];
    let gamma_star = bar(replaced as i64 + n as i64, k);
    let mut expected_gamma = inner.gamma.clone();
    expected_gamma[j..j + a].rotate_right(1);
    expected_gamma[j] = gamma_star;
    if expected_gamma != outer.gamma {
        return Err(Error::InternalInvariantFailure(format!(
            "γ({}) is not the expected shift of γ({})",
            outer.base, inner.base
        )));
    }
    Ok(AdditionShift {
        position,
        columns: a,
        gamma_star,
        replaced,
    })
}
