//! Coupled SIR/SIR superinfection dynamics on sparse random graphs.
//!
//! A primary infection spreads over an Erdős–Rényi contact network; a
//! secondary infection can only live on hosts currently carrying a live
//! primary infection. This crate provides:
//!
//! * [`graph`] — seeded G(n, c/n) sampling with degree statistics,
//! * [`sim`] — an exact Gillespie simulation of the coupled process,
//! * [`branching`] — the multi-type branching approximation of the
//!   secondary infection (type = delay between primary and secondary
//!   acquisition), used both as a survival estimator and as a Monte-Carlo
//!   oracle for the production kernel,
//! * [`spectral`] — closed-form kernel evaluation, the hypergeometric and
//!   Bessel machinery behind the critical-connectivity equation, and a
//!   discretized-operator cross-oracle.
//!
//! The headline quantity is the critical mean degree `c*` above which the
//! secondary infection survives with positive probability; as a function
//! of the timescale ratio `phi = beta1/beta2` it exhibits a re-entrant
//! phase boundary (survival only on a bounded interval of `phi`).

pub mod branching;
pub mod graph;
pub mod params;
pub mod seeding;
pub mod sim;
pub mod spectral;
pub mod stats;

pub use params::RateParams;
