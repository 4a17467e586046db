//! Modular Schur functions `G(k, λ) = det[G(k, λ_i - i + j)]` and their
//! transition matrix to the Schur basis.
//!
//! Entries use the Jacobi–Trudi conventions `G(k, 0) = 1` and `G(k, r) = 0`
//! for `r < 0`. The determinant is expanded symbolically over monomial
//! vectors with the oracle's polynomial product, then converted to the
//! Schur basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::abacus::k_core;
use crate::error::{require, Error, Result};
use crate::oracle::{petrie_monomial_vector, poly_multiply_extract, MonomialVector, Oracle};
use crate::partition::{partitions_of, Partition};
use crate::schur::SchurExpansion;

pub fn modular_schur_expansion(k: usize, lambda: &Partition) -> Result<SchurExpansion> {
    let mut oracle = Oracle::new();
    modular_schur_with(&mut oracle, k, lambda)
}

/// Same as [`modular_schur_expansion`], sharing the caller's Kostka memo.
pub fn modular_schur_with(
    oracle: &mut Oracle,
    k: usize,
    lambda: &Partition,
) -> Result<SchurExpansion> {
    require("k", k, 1, "at least 1")?;
    let v = modular_schur_monomials(k, lambda.parts())?;
    oracle.monomial_to_schur(&v)
}

/// The determinant in the monomial basis. `rows` may carry trailing zeros.
pub fn modular_schur_monomials(k: usize, rows: &[usize]) -> Result<MonomialVector> {
    let size = rows.len();
    let degree: usize = rows.iter().sum();
    let entries: Vec<Vec<Option<MonomialVector>>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let index = rows[i] as i64 - i as i64 + j as i64;
                    match index {
                        i64::MIN..=-1 => None,
                        0 => Some(MonomialVector::unit()),
                        r => Some(petrie_monomial_vector(k, r as usize)),
                    }
                })
                .collect()
        })
        .collect();
    let mut memo = BTreeMap::new();
    let det = laplace(&entries, 0, (1u64 << size) - 1, &mut memo)?;
    match det {
        Some(v) => Ok(v),
        None => Ok(MonomialVector::zero(degree)),
    }
}

/// Expansion along row `row` over the columns left in `cols`. `None` is the
/// zero function, whose degree is not tracked.
fn laplace(
    entries: &[Vec<Option<MonomialVector>>],
    row: usize,
    cols: u64,
    memo: &mut BTreeMap<u64, Option<MonomialVector>>,
) -> Result<Option<MonomialVector>> {
    if row == entries.len() {
        return Ok(Some(MonomialVector::unit()));
    }
    if let Some(v) = memo.get(&cols) {
        return Ok(v.clone());
    }
    let mut acc: Option<MonomialVector> = None;
    let mut rank = 0;
    for col in 0..entries.len() {
        if cols & (1 << col) == 0 {
            continue;
        }
        let sign = if rank % 2 == 0 { 1 } else { -1 };
        rank += 1;
        let Some(entry) = &entries[row][col] else {
            continue;
        };
        let Some(minor) = laplace(entries, row + 1, cols & !(1 << col), memo)? else {
            continue;
        };
        let term = poly_multiply_extract(entry, &minor)?;
        match &mut acc {
            Some(a) => a.add_scaled(&term, sign)?,
            None => {
                let mut a = MonomialVector::zero(term.degree());
                a.add_scaled(&term, sign)?;
                acc = Some(a);
            }
        }
    }
    memo.insert(cols, acc.clone());
    Ok(acc)
}

/// `a[λ][μ]` with `G(k, λ) = Σ_μ a[λ][μ] s_μ` over all `λ, μ ⊢ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    k: usize,
    m: usize,
    order: Vec<Partition>,
    entries: Vec<Vec<i64>>,
    blocks: BTreeMap<Partition, Vec<usize>>,
}

impl TransitionMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Row and column index, canonical order.
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Row indices grouped by k-core.
    pub fn blocks(&self) -> &BTreeMap<Partition, Vec<usize>> {
        &self.blocks
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<i64> {
        let i = self.order.iter().position(|p| p == row)?;
        let j = self.order.iter().position(|p| p == col)?;
        Some(self.entries[i][j])
    }

    pub fn row(&self, lambda: &Partition) -> Option<SchurExpansion> {
        let i = self.order.iter().position(|p| p == lambda)?;
        let terms = self
            .order
            .iter()
            .cloned()
            .zip(self.entries[i].iter().copied());
        SchurExpansion::from_terms(self.m, terms).ok()
    }

    /// Indices grouped block by block, blocks ordered by their first row.
    /// This is the layout in which the matrix is visibly block diagonal.
    pub fn block_order(&self) -> Vec<usize> {
        let mut groups: Vec<&Vec<usize>> = self.blocks.values().collect();
        groups.sort_by_key(|rows| rows[0]);
        groups.into_iter().flatten().copied().collect()
    }
}

pub fn transition_matrix(k: usize, m: usize) -> Result<TransitionMatrix> {
    require("k", k, 1, "at least 1")?;
    let order = partitions_of(m, None);
    let mut oracle = Oracle::new();
    let mut entries = Vec::with_capacity(order.len());
    for lambda in &order {
        let row = modular_schur_with(&mut oracle, k, lambda)?;
        entries.push(order.iter().map(|mu| row.coeff(mu)).collect::<Vec<_>>());
    }
    let cores = order
        .iter()
        .map(|p| k_core(p, k))
        .collect::<Result<Vec<_>>>()?;
    let mut blocks: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
    for (i, core) in cores.iter().enumerate() {
        blocks.entry(core.clone()).or_default().push(i);
    }
    for (i, row) in entries.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a != 0 && cores[i] != cores[j] {
                return Err(Error::BlockViolation {
                    row: order[i].clone(),
                    col: order[j].clone(),
                });
            }
        }
    }
    Ok(TransitionMatrix {
        k,
        m,
        order,
        entries,
        blocks,
    })
}
