//! Entropic analysis of noisy quantum channels.
//!
//! A noisy quantum channel acting on an input entangled with a reference
//! system splits the initial mutual entropy into three pieces: the
//! information `I` surviving in the output, the loss `L` transferred to the
//! environment, and the noise `N` shared between output and environment.
//! This crate computes those quantities exactly (dense linear algebra, desk
//! scale), together with the entropy-diagram calculus behind them, block
//! coding reports for parallel channel uses, erasure-code verification
//! against the quantum Singleton bound, capacity bound curves for the
//! erasure and depolarizing channels, classical side-channel models
//! (teleportation included), and the Shannon-channel mirror of the whole
//! construction.
//!
//! Entry points:
//! - [`registers`]: labeled multi-subsystem states, partial traces,
//!   purification, von Neumann entropy.
//! - [`venn`]: conditional/mutual/ternary entropies and tripartite Venn
//!   diagrams.
//! - [`channel`]: Kraus channels, Stinespring dilations, `(S, I, L, N)`
//!   reports, chaining and data-processing checks.
//! - [`blockcoding`]: joint vs. per-symbol information and loss for `n`
//!   parallel channels.
//! - [`codes`]: encoding isometries and erasure-pattern verification.
//! - [`bounds`]: binomial mixture decompositions and the capacity bound
//!   catalog.
//! - [`sidechannel`]: quantum channel plus amplified classical side channel;
//!   teleportation as the maximal-classical-information special case.
//! - [`classical`]: the Shannon channel oracle.
//! - [`cli`]: the `qvenn` command-line front end.

pub mod blockcoding;
pub mod bounds;
pub mod channel;
pub mod classical;
pub mod cli;
pub mod codes;
mod error;
pub mod json;
pub mod linalg;
pub mod random;
pub mod registers;
pub mod sidechannel;
pub mod suite;
pub mod venn;

pub use error::{Error, Result};
pub use registers::{DensityState, PureState, RegisterLayout, State};
