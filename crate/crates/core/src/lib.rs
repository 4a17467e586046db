//! Exact Schur-basis expansions of the Petrie symmetric functions
//! `G(k, m)`, the degree-`m` part of `Π_i (1 + x_i + … + x_i^{k-1})`.
//!
//! The crate is `no_std` and needs only `alloc`. It provides
//!
//! - [`partition`]: partitions, skew shapes, rim-hook addition and removal;
//! - [`abacus`]: β- and γ-sequences, the k-runner abacus, k-cores and
//!   rim-hook chains;
//! - [`petrie`]: four independent evaluators of the k-Petrie numbers;
//! - [`schur`]: sparse Schur expansions, the Murnaghan–Nakayama product
//!   with `p_n` and the signed-multiplicity-free classification of
//!   `G(k, m)·p_n`;
//! - [`oracle`]: a slow brute-force path through the monomial basis and
//!   Kostka numbers, used to cross-check everything above;
//! - [`modular`]: modular Schur functions `G(k, λ)` and their k-core-blocked
//!   transition matrix.
//!
//! All arithmetic is exact and overflow-checked.

#![no_std]

extern crate alloc;

pub mod abacus;
pub mod error;
pub mod linalg;
pub mod modular;
pub mod oracle;
pub mod partition;
pub mod petrie;
pub mod schur;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
pub use petrie::PetrieValue;
pub use schur::SchurExpansion;
