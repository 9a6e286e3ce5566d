//! A multiwinner-election engine and axiom laboratory.
//!
//! The crate models elections over strict complete preference orders, runs
//! ten committee-selection rules under parallel-universes tie-breaking
//! (SNTV, Bloc, k-Borda, STV, the utilitarian and egalitarian
//! Chamberlin-Courant and Monroe rules, and their greedy counterparts), and
//! makes nine committee-selection axioms executable: instance checkers,
//! bounded exhaustive and randomized counterexample search, and a harness
//! reproducing the full rule-by-axiom summary table at desk scale.

pub mod axioms;
pub mod election;
mod flow;
pub mod format;
pub mod profiles;
pub mod rules;
pub mod scoring;

pub use election::{Candidate, Committee, Election, ElectionError, PreferenceOrder, RuleOutcome, Score};
pub use rules::{evaluate, Aggregation, Rule, RuleConfig, RuleError, TieMode};
