//! Exact solvers, instance generators and a parameter-lattice checker for
//! maximum generalized function matching (Max-GFM) and its injective
//! variant, maximum generalized parameterized matching (Max-GPM).
//!
//! A pattern `p` over `Σ_p` *q-matches* a text `t` over `Σ_t` when at most
//! `q` pattern positions can be replaced by wildcards such that some
//! substitution `f : Σ_p → Σ_t⁺` (injective for GPM) maps the resulting
//! pattern onto `t`, wildcards taking arbitrary text segments.
//!
//! The crate is `no_std` and only needs `alloc`; parsing, files and the
//! command line live in the companion `gfm` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classifier;
pub mod dp;
pub mod instance;
pub mod reductions;
pub mod solvers;
pub mod witness;
pub mod word;

pub use instance::{Bound, Bounds, Instance, InstanceError, InstanceParameters, ProblemKind, Variant};
pub use witness::{apply_witness, verify_witness, MatchWitness, Substitution, Violation};
pub use word::{Alphabet, Letter, Word};
