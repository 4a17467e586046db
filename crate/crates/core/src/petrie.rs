//! k-Petrie numbers `pet_k(λ)`, the Schur coefficients of `G(k, m)`.
//!
//! Four evaluators are provided and are expected to agree:
//!
//! - [`pet_det`]: the determinant `det[χ(0 ≤ λ_i - i + j < k)]`;
//! - [`pet_grinberg`]: the sign `(-1)^{Σβ + ninv(γ) + Σγ}` read off the
//!   γ-sequence of `λ^c`, zero when γ has a repeated value;
//! - [`pet_rimhook`]: the product of `(-1)^{ht + 1}` over a chain of size-`k`
//!   rim hooks from the k-core, zero when the core has two or more parts;
//! - [`pet_generalized`]: `det[χ(0 ≤ λ_i - μ_j - i + j < k)]`, the
//!   coefficient of `s_λ` in `G(k, m)·s_μ`, which reduces to [`pet_det`] at
//!   `μ = ∅`.

use alloc::vec::Vec;
use core::fmt;

use crate::abacus::{k_core, ninv, profile, rim_hook_sequence};
use crate::error::{require, Error, Result};
use crate::linalg::determinant;
use crate::partition::{conjugate, Partition};

/// A value in `{-1, 0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PetrieValue(i8);

impl PetrieValue {
    pub const ZERO: PetrieValue = PetrieValue(0);
    pub const ONE: PetrieValue = PetrieValue(1);
    pub const MINUS_ONE: PetrieValue = PetrieValue(-1);

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    fn from_sign(negative: bool) -> Self {
        if negative {
            Self::MINUS_ONE
        } else {
            Self::ONE
        }
    }
}

impl TryFrom<i64> for PetrieValue {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            -1..=1 => Ok(PetrieValue(v as i8)),
            _ => Err(Error::InternalInvariantFailure(alloc::format!(
                "Petrie value {v} outside {{-1, 0, 1}}"
            ))),
        }
    }
}

impl From<PetrieValue> for i64 {
    fn from(v: PetrieValue) -> i64 {
        v.0 as i64
    }
}

impl fmt::Display for PetrieValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `det[χ(0 ≤ λ_i - i + j < k)]_{i,j=1}^{ℓ(λ)}`.
pub fn pet_det(lambda: &Partition, k: usize) -> Result<PetrieValue> {
    pet_generalized(lambda, &Partition::empty(), k)
}

/// `det[χ(0 ≤ λ_i - μ_j - i + j < k)]` of size `max(ℓ(λ), ℓ(μ))`. No
/// containment or size relation between `λ` and `μ` is required.
pub fn pet_generalized(lambda: &Partition, mu: &Partition, k: usize) -> Result<PetrieValue> {
    require("k", k, 1, "at least 1")?;
    let size = lambda.len().max(mu.len());
    let k = k as i64;
    let matrix: Vec<Vec<i64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let d = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    i64::from((0..k).contains(&d))
                })
                .collect()
        })
        .collect();
    PetrieValue::try_from(determinant(&matrix)?)
}

/// The γ-sequence sign formula. `k = 1` is delegated to [`pet_det`].
pub fn pet_grinberg(lambda: &Partition, k: usize) -> Result<PetrieValue> {
    require("k", k, 1, "at least 1")?;
    if k == 1 {
        return pet_det(lambda, k);
    }
    if lambda.first() >= k {
        return Ok(PetrieValue::ZERO);
    }
    let prof = profile(&conjugate(lambda), k)?;
    if !prof.gammas_distinct() {
        return Ok(PetrieValue::ZERO);
    }
    let beta_sum: i64 = prof.beta().iter().sum();
    let gamma_sum: usize = prof.gamma().iter().sum();
    let exponent = beta_sum + ninv(prof.gamma()) as i64 + gamma_sum as i64;
    Ok(PetrieValue::from_sign(exponent.rem_euclid(2) == 1))
}

/// The rim-hook product rule. `k = 1` is delegated to [`pet_det`].
pub fn pet_rimhook(lambda: &Partition, k: usize) -> Result<PetrieValue> {
    require("k", k, 1, "at least 1")?;
    if k == 1 {
        return pet_det(lambda, k);
    }
    if lambda.first() >= k {
        return Ok(PetrieValue::ZERO);
    }
    let core = k_core(lambda, k)?;
    if core.len() > 1 {
        return Ok(PetrieValue::ZERO);
    }
    if core == *lambda {
        return Ok(PetrieValue::ONE);
    }
    let chain = rim_hook_sequence(lambda, k)?;
    Ok(PetrieValue::from_sign(chain.sign() < 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn all(lambda: &Partition, k: usize) -> [i8; 3] {
        [
            pet_det(lambda, k).unwrap().value(),
            pet_grinberg(lambda, k).unwrap().value(),
            pet_rimhook(lambda, k).unwrap().value(),
        ]
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(pet_det(&p(&[3, 3, 1]), 3).unwrap(), PetrieValue::ZERO);
        assert_eq!(pet_det(&p(&[3, 3, 1]), 4).unwrap(), PetrieValue::ONE);
        assert_eq!(
            pet_det(&p(&[3, 2, 2, 1]), 4).unwrap(),
            PetrieValue::MINUS_ONE
        );
        for k in 1..6 {
            assert_eq!(pet_det(&Partition::empty(), k).unwrap(), PetrieValue::ONE);
        }
        assert!(pet_det(&p(&[1]), 0).is_err());
    }

    #[test]
    fn grinberg_examples() {
        assert_eq!(pet_grinberg(&p(&[2, 2, 1]), 3).unwrap(), PetrieValue::ONE);
        assert_eq!(
            pet_grinberg(&p(&[3, 1, 1, 1, 1, 1]), 4).unwrap(),
            PetrieValue::ONE
        );
        assert_eq!(pet_grinberg(&p(&[4]), 4).unwrap(), PetrieValue::ZERO);
        assert_eq!(pet_grinberg(&p(&[2, 1, 1]), 3).unwrap(), PetrieValue::ZERO);
    }

    #[test]
    fn rimhook_examples() {
        assert_eq!(pet_rimhook(&p(&[2, 2, 2, 2]), 4).unwrap(), PetrieValue::ONE);
        assert_eq!(
            pet_rimhook(&p(&[2, 1, 1, 1, 1, 1, 1]), 4).unwrap(),
            PetrieValue::MINUS_ONE
        );
        assert_eq!(pet_rimhook(&p(&[1]), 3).unwrap(), PetrieValue::ONE);
    }

    #[test]
    fn evaluators_agree_on_g48_support() {
        let expected = [
            (&[3, 3, 2][..], 1),
            (&[3, 2, 2, 1][..], -1),
            (&[3, 1, 1, 1, 1, 1][..], 1),
            (&[2, 2, 2, 2][..], 1),
            (&[2, 1, 1, 1, 1, 1, 1][..], -1),
            (&[1, 1, 1, 1, 1, 1, 1, 1][..], 1),
        ];
        for (parts, v) in expected {
            assert_eq!(all(&p(parts), 4), [v; 3], "{parts:?}");
        }
    }

    #[test]
    fn generalized_examples() {
        assert_eq!(
            pet_generalized(&p(&[2]), &p(&[1]), 2).unwrap(),
            PetrieValue::ONE
        );
        assert_eq!(
            pet_generalized(&p(&[1, 1]), &p(&[1]), 2).unwrap(),
            PetrieValue::ONE
        );
        assert_eq!(
            pet_generalized(&p(&[3, 3, 1]), &Partition::empty(), 4).unwrap(),
            pet_det(&p(&[3, 3, 1]), 4).unwrap()
        );
        // incompatible pair: μ not inside λ
        assert_eq!(
            pet_generalized(&p(&[1]), &p(&[2]), 3).unwrap(),
            PetrieValue::ZERO
        );
    }

    #[test]
    fn value_range_is_enforced() {
        assert!(PetrieValue::try_from(2).is_err());
        assert_eq!(PetrieValue::try_from(-1).unwrap(), PetrieValue::MINUS_ONE);
    }
}
