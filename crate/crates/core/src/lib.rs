//! Identity-product (ID) nonclassicality benchmarks for linear qubit arrays.
//!
//! An ID is a set of mutually commuting Pauli strings whose product is `−I`.
//! Measuring each row on a prepared state and summing the eigenvalue-weighted
//! results gives a correlator `⟨α⟩` whose classical maximum is `M − 2`; the
//! crate provides the Pauli algebra, ID predicates and bounds, a search over
//! the linear-cluster stabilizer group, a noisy density-matrix simulator and
//! a sweep harness with CSV output.

// Negated float comparisons below are how NaN gets rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod cli;
pub mod error;
pub mod harness;
pub mod id;
pub mod pauli;
pub mod sim;

pub use error::{Error, IdFailure, Result};
pub use id::IdTable;
pub use pauli::{Letter, PauliString};
