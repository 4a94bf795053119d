//! Spherical analysis on the double cover of SL(2, R) for functions that are
//! equivariant under both-sided rotations.
//!
//! The crate is organized in layers, each usable on its own:
//!
//! - [`special`]: complex gamma, Gauss hypergeometric series, Bessel kernels,
//!   orthogonal polynomials, quadrature rules;
//! - [`group`]: 2x2 unimodular matrices, rotation/diagonal/unipotent
//!   one-parameter subgroups, polar (K A K) and horocyclic (N A K)
//!   decompositions, invariant integration and rotation-type projection;
//! - [`spherical`]: the two-parameter family of spherical functions
//!   zeta_{n,s}, its evaluation routes, discrete parameter set, large-time
//!   and small-time expansions, and the attached c-function;
//! - [`transform`]: the spectral transform of rotation-equivariant profiles,
//!   Plancherel densities, multiplier calculus (kernel synthesis, Mikhlin-
//!   Hoermander norms, weighted kernel integrals) and spectrum regions;
//! - [`cli`]: the command-line driver used by the `sl2zeta` binary, exposed
//!   as library functions so every command is scriptable and testable.
//!
//! Numerical contracts (tolerances, error taxonomy) are documented on each
//! operation; `cli::check::run_checks` executes the whole invariant suite and
//! is what `sl2zeta check` runs.
//!
//! Runnable walkthroughs live in `examples/`: start with `zeta_eval.rs`.

pub mod cli;
pub mod error;
pub mod group;
pub mod halfint;
pub mod special;
pub mod spherical;
pub mod transform;

pub use error::{Error, Result};
pub use halfint::HalfInt;
