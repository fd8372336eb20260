//! Binomial edge ideals of graphs over the rationals.
//!
//! The crate builds `J_G = (x_i y_j - x_j y_i : {i,j} ∈ E(G))`, enumerates its
//! minimal primes from the cut-point sets of `G`, and compares ordinary with
//! symbolic powers both for `J_G` (reduced lex Gröbner bases) and for its
//! squarefree initial ideal (monomial arithmetic).
//!
//! Independent computations (per-prime powers, per-subset component counts,
//! permutation searches, probe levels) run on rayon when the `parallel`
//! feature is on and [`Config::parallel`] is set. Results are identical in
//! both modes.

pub mod bei;
pub mod config;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod monomial;
pub mod par;
pub mod ring;

pub use config::Config;
pub use error::{Error, Result};
pub use graph::Graph;
pub use groebner::Ideal;
pub use monomial::MonomialIdeal;
pub use ring::{MonomialOrder, Polynomial, RingContext};
