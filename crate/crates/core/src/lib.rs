//! Exact Schur-basis expansions of Boolean product polynomials.
//!
//! For `1 <= k <= n` the Boolean product polynomial `B_{n,k}` is the product
//! of the subset sums `x_{i_1} + ... + x_{i_k}` over all `k`-subsets of
//! `{1, ..., n}`. This crate expands such products, and a family of related
//! objects, in the Schur basis with arbitrary-precision integers:
//!
//! - [`partitions`] and [`tableaux`]: partitions, Kostka numbers, standard
//!   tableaux and their ascents.
//! - [`symengine`]: sparse polynomials, alphabets of linear forms, and the
//!   monomial/Schur change of basis.
//! - [`boolean`]: `e_p` of the subset-sum alphabets, `B_{n,k}` and `B_n`.
//! - [`lascoux`]: binomial determinants, their lattice-path count, and the
//!   Chern class identities for the second exterior and symmetric powers.
//! - [`derangement`]: the `k = n - 1` case, its `q`-deformation and the
//!   smallest-even-ascent rule.
//! - [`resonance`]: the characteristic polynomial of the resonance
//!   arrangement by finite-field point counting and its region count.
//! - [`bialphabet`]: products `X_S + Y_T` over two alphabets.
//! - [`cli`]: the command-line front end used by the `boolprod` binary.
//!
//! Runnable walk-throughs of each area live in `examples/`.

pub mod bialphabet;
pub mod boolean;
pub mod cli;
pub mod derangement;
pub mod error;
pub mod lascoux;
pub mod partitions;
pub mod resonance;
pub mod symengine;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use symengine::{Alphabet, LinearForm, MVector, MonomialPoly, SchurVector};
