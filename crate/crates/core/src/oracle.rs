//! Brute-force verification path through the monomial basis.
//!
//! Symmetric functions of degree `d` are handled as symmetric polynomials
//! in `d` variables, which is enough to make the monomial coefficients
//! faithful. Schur functions enter only through Kostka numbers counted by
//! semistandard tableau enumeration, and a monomial vector is converted back
//! to the Schur basis by back-substitution along the canonical order, which
//! extends dominance. Nothing here calls into the rim-hook, abacus or
//! Petrie-number code; the point is independence from the fast path.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::schur::SchurExpansion;

/// Coefficients of a symmetric function in the monomial basis `m_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialVector {
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl MonomialVector {
    pub fn zero(degree: usize) -> Self {
        MonomialVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1.
    pub fn unit() -> Self {
        Self::monomial(Partition::empty())
    }

    /// `m_λ`.
    pub fn monomial(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, 1);
        MonomialVector { degree, coeffs }
    }

    /// `p_n = m_(n)`.
    pub fn power_sum(n: usize) -> Self {
        Self::monomial(Partition::new(vec![n]).expect("single part"))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn set(&mut self, lambda: Partition, coeff: i64) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: lambda.size(),
            });
        }
        if coeff == 0 {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, coeff);
        }
        Ok(())
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &MonomialVector, scale: i64) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        for (lambda, c) in other.iter() {
            let sum = c
                .checked_mul(scale)
                .and_then(|t| t.checked_add(self.coeff(lambda)))
                .ok_or(Error::Overflow)?;
            self.set(lambda.clone(), sum)?;
        }
        Ok(())
    }
}

/// `G(k, m) = Σ m_λ` over `λ ⊢ m` with every part below `k`.
pub fn petrie_monomial_vector(k: usize, m: usize) -> MonomialVector {
    let mut v = MonomialVector::zero(m);
    for lambda in partitions_of(m, Some(k.saturating_sub(1))) {
        v.coeffs.insert(lambda, 1);
    }
    v
}

/// Product of two symmetric functions given in the monomial basis.
///
/// The coefficient of `m_e` in `f·g` is the coefficient of `x^e` in the
/// polynomial product over `deg f + deg g` variables, namely
/// `Σ f[a]·g[e - a]` over exponent vectors `a ≤ e` with `|a| = deg f`.
/// Each factor coefficient is read at the sorted form of its exponent
/// vector, which is valid because both inputs are symmetric.
pub fn poly_multiply_extract(f: &MonomialVector, g: &MonomialVector) -> Result<MonomialVector> {
    let degree = f.degree + g.degree;
    let mut out = MonomialVector::zero(degree);
    if f.is_zero() || g.is_zero() {
        return Ok(out);
    }
    for target in partitions_of(degree, None) {
        let exps = target.parts();
        let mut split = vec![0usize; exps.len()];
        let mut total = 0i64;
        accumulate(f, g, exps, 0, f.degree, &mut split, &mut total)?;
        out.set(target, total)?;
    }
    Ok(out)
}

fn accumulate(
    f: &MonomialVector,
    g: &MonomialVector,
    exps: &[usize],
    idx: usize,
    left: usize,
    split: &mut Vec<usize>,
    total: &mut i64,
) -> Result<()> {
    if idx == exps.len() {
        if left != 0 {
            return Ok(());
        }
        let a = Partition::from_unsorted(split.clone());
        let b =
            Partition::from_unsorted(exps.iter().zip(split.iter()).map(|(e, s)| e - s).collect());
        let term = f
            .coeff(&a)
            .checked_mul(g.coeff(&b))
            .ok_or(Error::Overflow)?;
        *total = total.checked_add(term).ok_or(Error::Overflow)?;
        return Ok(());
    }
    let remaining_capacity: usize = exps[idx + 1..].iter().sum();
    let lo = left.saturating_sub(remaining_capacity);
    for take in lo..=exps[idx].min(left) {
        split[idx] = take;
        accumulate(f, g, exps, idx + 1, left - take, split, total)?;
    }
    Ok(())
}

/// Kostka numbers `K[shape][content]` for one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    degree: usize,
    order: Vec<Partition>,
    entries: BTreeMap<(Partition, Partition), u64>,
}

impl KostkaMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Row and column index, in canonical order.
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn get(&self, shape: &Partition, content: &Partition) -> u64 {
        self.entries
            .get(&(shape.clone(), content.clone()))
            .copied()
            .unwrap_or(0)
    }
}

/// Memoized semistandard tableau counts. A tableau of shape `λ` and content
/// `μ` is peeled one letter at a time from the largest: the cells holding
/// the largest letter form a horizontal strip.
#[derive(Clone, Debug, Default)]
pub struct Oracle {
    memo: BTreeMap<(Partition, Vec<usize>), u64>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of semistandard tableaux of shape `shape` and content
    /// `content` (any composition).
    pub fn kostka(&mut self, shape: &Partition, content: &[usize]) -> u64 {
        if content.iter().sum::<usize>() != shape.size() {
            return 0;
        }
        self.count(shape, content)
    }

    fn count(&mut self, shape: &Partition, content: &[usize]) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.is_empty());
        };
        let key = (shape.clone(), content.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut inners = Vec::new();
        horizontal_strips(shape, last, 0, &mut Vec::new(), &mut inners);
        let total = inners.iter().map(|inner| self.count(inner, rest)).sum();
        self.memo.insert(key, total);
        total
    }

    pub fn kostka_matrix(&mut self, degree: usize) -> KostkaMatrix {
        let order = partitions_of(degree, None);
        let mut entries = BTreeMap::new();
        for shape in &order {
            for content in &order {
                let v = self.kostka(shape, content.parts());
                if v != 0 {
                    entries.insert((shape.clone(), content.clone()), v);
                }
            }
        }
        KostkaMatrix {
            degree,
            order,
            entries,
        }
    }

    /// `s_λ = Σ_μ K[λ][μ] m_μ`.
    pub fn schur_monomial_vector(&mut self, lambda: &Partition) -> MonomialVector {
        let mut v = MonomialVector::zero(lambda.size());
        for content in partitions_of(lambda.size(), None) {
            let c = self.kostka(lambda, content.parts());
            if c != 0 {
                v.coeffs.insert(content, c as i64);
            }
        }
        v
    }

    /// Solves `v = Σ c_λ s_λ` by peeling off the first remaining monomial in
    /// canonical order, which has the most dominant index.
    pub fn monomial_to_schur(&mut self, v: &MonomialVector) -> Result<SchurExpansion> {
        let mut residual = v.clone();
        let mut out = SchurExpansion::zero(v.degree);
        loop {
            let Some((lead, c)) = residual.iter().next().map(|(p, c)| (p.clone(), c)) else {
                break;
            };
            let s = self.schur_monomial_vector(&lead);
            residual.add_scaled(&s, c.checked_neg().ok_or(Error::Overflow)?)?;
            if residual.coeff(&lead) != 0 {
                return Err(Error::InternalInvariantFailure(alloc::format!(
                    "K[{lead}][{lead}] is not 1"
                )));
            }
            out.add_term(lead, c)?;
        }
        Ok(out)
    }
}

/// Every `inner` with `shape/inner` a horizontal strip of `size` cells.
fn horizontal_strips(
    shape: &Partition,
    size: usize,
    row: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == shape.len() {
        if size == 0 {
            out.push(Partition::from_unsorted(current.clone()));
        }
        return;
    }
    let top = shape.part(row);
    let floor = shape.part(row + 1);
    // cells removable below this row bound how few we may take here
    let below: usize = (row + 1..shape.len())
        .map(|r| shape.part(r) - shape.part(r + 1))
        .sum();
    let max_take = (top - floor).min(size);
    let min_take = size.saturating_sub(below);
    for take in min_take..=max_take {
        current.push(top - take);
        horizontal_strips(shape, size - take, row + 1, current, out);
        current.pop();
    }
}

pub fn schur_monomial_vector(lambda: &Partition) -> MonomialVector {
    Oracle::new().schur_monomial_vector(lambda)
}

pub fn monomial_to_schur(v: &MonomialVector) -> Result<SchurExpansion> {
    Oracle::new().monomial_to_schur(v)
}

impl Oracle {
    /// `G(k, m)` in the Schur basis, from its monomial expansion.
    pub fn petrie_expansion(&mut self, k: usize, m: usize) -> Result<SchurExpansion> {
        self.monomial_to_schur(&petrie_monomial_vector(k, m))
    }

    /// `G(k, m)·p_n` through a polynomial product.
    pub fn petrie_times_power_sum(
        &mut self,
        k: usize,
        m: usize,
        n: usize,
    ) -> Result<SchurExpansion> {
        let product =
            poly_multiply_extract(&petrie_monomial_vector(k, m), &MonomialVector::power_sum(n))?;
        self.monomial_to_schur(&product)
    }

    /// `s_λ·p_n` through a polynomial product.
    pub fn schur_times_power_sum(
        &mut self,
        lambda: &Partition,
        n: usize,
    ) -> Result<SchurExpansion> {
        let s = self.schur_monomial_vector(lambda);
        let product = poly_multiply_extract(&s, &MonomialVector::power_sum(n))?;
        self.monomial_to_schur(&product)
    }

    /// `G(k, m)·s_μ` through a polynomial product.
    pub fn petrie_times_schur(
        &mut self,
        k: usize,
        m: usize,
        mu: &Partition,
    ) -> Result<SchurExpansion> {
        let s = self.schur_monomial_vector(mu);
        let product = poly_multiply_extract(&petrie_monomial_vector(k, m), &s)?;
        self.monomial_to_schur(&product)
    }
}

/// A dense-enough explicit polynomial in a fixed number of variables, used
/// to cross-check [`poly_multiply_extract`] at small degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl Polynomial {
    /// Expands `Σ c_λ m_λ` into all monomials over `vars` variables.
    pub fn from_monomials(v: &MonomialVector, vars: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (lambda, c) in v.iter() {
            if lambda.len() > vars {
                continue;
            }
            let mut exps: Vec<usize> = lambda.parts().to_vec();
            exps.resize(vars, 0);
            exps.sort_unstable();
            loop {
                terms.insert(exps.clone(), c);
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        Ok(Polynomial { vars, terms })
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut terms: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let t = ca.checked_mul(*cb).ok_or(Error::Overflow)?;
                let slot = terms.entry(e).or_insert(0);
                *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(Polynomial {
            vars: self.vars,
            terms,
        })
    }

    pub fn coeff(&self, exps: &[usize]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Reads `m_λ` coefficients at weakly decreasing exponent vectors.
    pub fn to_monomials(&self, degree: usize) -> Result<MonomialVector> {
        let mut v = MonomialVector::zero(degree);
        for lambda in partitions_of(degree, None) {
            if lambda.len() > self.vars {
                continue;
            }
            let mut exps = lambda.parts().to_vec();
            exps.resize(self.vars, 0);
            v.set(lambda, self.coeff(&exps))?;
        }
        Ok(v)
    }

    /// True when every coefficient equals the one at its sorted exponent.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.coeff(&sorted) == *c
        })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
