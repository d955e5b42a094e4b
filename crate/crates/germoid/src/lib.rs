//! Computational toolkit for discrete inverse semigroups and the topology of
//! their germ groupoids.
//!
//! The crate decides, exactly and without floating point, whether the
//! pointwise supremum of `{e idempotent : e <= g}` is a continuous function on
//! the character spectrum of the idempotent semilattice, builds the groupoid
//! of germs and cross-validates the continuity verdict against a direct
//! search for separating open sets, computes the spectrum-valued Gram data of
//! the module spanned by the lower-set indicator vectors, and reproduces the
//! Bratteli stage structure of the chain-with-symmetry family.
//!
//! Carriers are either finite closures of partial bijections or one of four
//! built-in symbolic families (`chain_with_symmetry`, `pure_chain`,
//! `bicyclic`, `polycyclic`). Everything downstream of a carrier is pure and
//! deterministic; randomized probes are seeded.
//!
//! Start with the runnable examples (`cargo run --example hausdorff_theorem`)
//! or the `germoid` binary (`germoid analyze --family chain_with_symmetry`).

pub mod checks;
pub mod cli;
pub mod config;
pub mod continuity;
pub mod error;
pub mod exact;
pub mod groupoid;
pub mod ktheory;
pub mod l2;
pub mod semigroup;
pub mod spectrum;

pub use error::{Error, Result};
pub use semigroup::{compose, natural_leq, star, Code, Element, Family, InverseSemigroup};
