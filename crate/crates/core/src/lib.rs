//! Geodesics in finitely generated groups.
//!
//! The crate is organised around the five geodesic problems for a group
//! given by a finite generating set:
//!
//! 1. for a geodesic `u` and a letter `x`, compute `ℓ(ux) − ℓ(u)`;
//! 2. decide `ℓ(ux) > ℓ(u)`;
//! 3. find a geodesic representative of a word;
//! 4. compute `ℓ(w)`;
//! 5. decide `ℓ(w) ≤ k`.
//!
//! [`models`] solve the word problem for a few groups, [`oracles::Ball`]
//! answers all five problems exactly inside a Cayley ball, [`reductions`]
//! builds answers to one problem from an oracle for another, [`automata`]
//! answers Problem 2 with a geodesic acceptor, and [`growth`] counts
//! geodesics and elements by length.

pub mod automata;
pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod growth;
pub mod models;
pub mod oracles;
pub mod presentation;
pub mod reductions;
pub mod word;

pub use error::{Error, Result};
pub use models::{ElementKey, GroupModel};
pub use oracles::{Ball, Delta};
pub use presentation::{ParityClass, Presentation};
pub use word::{Letter, Word};
