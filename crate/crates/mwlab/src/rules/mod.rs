//! The ten committee-selection rules behind one evaluation entry point.
//!
//! Every rule runs under parallel-universes tie-breaking by default: the
//! outcome is the set of every committee reachable under some resolution of
//! the rule's internal ties. The lexicographic mode resolves each internal
//! choice by candidate id and voter index instead and is always a singleton.

pub mod bestk;
pub mod cc;
pub mod greedy;
pub mod monroe;
pub mod stv;

use thiserror::Error;

use crate::election::{Committee, Election, RuleOutcome};
use crate::scoring::ScoringError;

/// Frozen rule identifiers, mirroring the summary-table rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Sntv,
    Bloc,
    KBorda,
    Stv,
    L1Cc,
    LminCc,
    GreedyCc,
    L1Monroe,
    LminMonroe,
    GreedyMonroe,
}

impl Rule {
    pub const ALL: [Rule; 10] = [
        Rule::Sntv,
        Rule::Bloc,
        Rule::KBorda,
        Rule::Stv,
        Rule::L1Cc,
        Rule::LminCc,
        Rule::GreedyCc,
        Rule::L1Monroe,
        Rule::LminMonroe,
        Rule::GreedyMonroe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Sntv => "sntv",
            Rule::Bloc => "bloc",
            Rule::KBorda => "k-borda",
            Rule::Stv => "stv",
            Rule::L1Cc => "l1-cc",
            Rule::LminCc => "lmin-cc",
            Rule::GreedyCc => "greedy-cc",
            Rule::L1Monroe => "l1-monroe",
            Rule::LminMonroe => "lmin-monroe",
            Rule::GreedyMonroe => "greedy-monroe",
        }
    }

    pub fn parse(name: &str) -> Option<Rule> {
        Rule::ALL.iter().copied().find(|r| r.name() == name)
    }

    /// Monroe-style rules require k <= n (the capacity window is empty for
    /// some member otherwise).
    pub fn requires_k_at_most_n(self) -> bool {
        matches!(self, Rule::L1Monroe | Rule::LminMonroe | Rule::GreedyMonroe)
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// How internal ties are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieMode {
    ParallelUniverses,
    Lexicographic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleConfig {
    pub tie_mode: TieMode,
    /// Bound on explored tie-breaking branches for STV and the greedy rules.
    pub universe_cap: usize,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            tie_mode: TieMode::ParallelUniverses,
            universe_cap: 1_000_000,
        }
    }
}

/// The utilitarian/egalitarian aggregation switch for CC and Monroe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregation {
    /// l1: sum of voter satisfactions.
    Utilitarian,
    /// lmin: satisfaction of the least satisfied voter.
    Egalitarian,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("committee size k={k} out of range 1..={max}")]
    InvalidK { k: usize, max: usize },
    #[error("tie-breaking budget exhausted after {explored} branches")]
    BudgetExhausted {
        explored: usize,
        /// Committees confirmed before the budget ran out.
        partial: Vec<Committee>,
    },
    #[error(transparent)]
    Scoring(#[from] ScoringError),
}

/// Runs `rule` on `e` for committee size `k`.
pub fn evaluate(
    rule: Rule,
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<RuleOutcome, RuleError> {
    match rule {
        Rule::Sntv => bestk::elect_sntv(e, k),
        Rule::Bloc => bestk::elect_bloc(e, k),
        Rule::KBorda => bestk::elect_kborda(e, k),
        Rule::Stv => stv::elect_stv(
            e,
            k,
            &stv::StvConfig {
                tie_mode: cfg.tie_mode,
                universe_cap: cfg.universe_cap,
            },
        ),
        Rule::L1Cc => cc::elect_cc_exact(
            e,
            k,
            &crate::scoring::SatisfactionFunction::borda(e.num_candidates()),
            Aggregation::Utilitarian,
        ),
        Rule::LminCc => cc::elect_cc_exact(
            e,
            k,
            &crate::scoring::SatisfactionFunction::borda(e.num_candidates()),
            Aggregation::Egalitarian,
        ),
        Rule::GreedyCc => greedy::greedy_cc_outcome(e, k, cfg),
        Rule::L1Monroe => monroe::elect_monroe_exact(
            e,
            k,
            &crate::scoring::SatisfactionFunction::borda(e.num_candidates()),
            Aggregation::Utilitarian,
        ),
        Rule::LminMonroe => monroe::elect_monroe_exact(
            e,
            k,
            &crate::scoring::SatisfactionFunction::borda(e.num_candidates()),
            Aggregation::Egalitarian,
        ),
        Rule::GreedyMonroe => greedy::greedy_monroe_outcome(e, k, cfg),
    }
}
