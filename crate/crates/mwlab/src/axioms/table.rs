//! The rule-by-axiom verification table.
//!
//! Every cell of the 10-rule x 7-column summary is checked at desk scale:
//! cells claiming a property sweep the bounded exhaustive universe of
//! anonymous profiles expecting zero violations; cells claiming a failure
//! must produce a concrete counterexample, replayed from the shipped
//! corpus when one exists and found by bounded search otherwise. Two cells
//! (STV homogeneity, which needs fractional votes, and Greedy-Monroe
//! homogeneity, which needs a refined intermediate tie-breaking rule) are
//! out of scope and reported as skipped.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::axioms::checks::{self, Axiom, VerdictStatus, Witness};
use crate::axioms::enumerate::{all_orders, anonymous_profiles, binary_splits, election_from_profile};
use crate::axioms::search::{search_counterexample, SearchBounds};
use crate::profiles;
use crate::rules::{Rule, RuleConfig, RuleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableBounds {
    pub max_candidates: usize,
    pub max_voters: usize,
    pub max_k: usize,
}

impl Default for TableBounds {
    fn default() -> Self {
        TableBounds {
            max_candidates: 4,
            max_voters: 5,
            max_k: 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Column {
    CommitteeMonotonicity,
    SolidCoalitions,
    ConsensusCommittee,
    Unanimity,
    Monotonicity,
    Homogeneity,
    Consistency,
}

impl Column {
    pub const ALL: [Column; 7] = [
        Column::CommitteeMonotonicity,
        Column::SolidCoalitions,
        Column::ConsensusCommittee,
        Column::Unanimity,
        Column::Monotonicity,
        Column::Homogeneity,
        Column::Consistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::CommitteeMonotonicity => "committee-monotonicity",
            Column::SolidCoalitions => "solid-coalitions",
            Column::ConsensusCommittee => "consensus-committee",
            Column::Unanimity => "unanimity",
            Column::Monotonicity => "monotonicity",
            Column::Homogeneity => "homogeneity",
            Column::Consistency => "consistency",
        }
    }

    pub fn parse(name: &str) -> Option<Column> {
        Column::ALL.iter().copied().find(|c| c.name() == name)
    }
}

/// The published claim for one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Holds,
    /// Holds on instances with n >= k(k+1) voters (the STV side condition;
    /// also applied to STV's strong unanimity, whose tiny-electorate
    /// degenerate cases exhaust the votes mid-count).
    HoldsIfEnoughVoters,
    /// Holds when the committee size divides the number of voters.
    HoldsIfDivisible,
    Fails,
    UnanimityWeak,
    UnanimityStrong,
    UnanimityStrongIfEnoughVoters,
    UnanimityFixedMajority,
    MonotoneBoth,
    MonotoneCandidateOnly,
    MonotoneNone,
    SkippedFractionalVotes,
    SkippedIntermediateTieBreaking,
}

pub fn expected_cell(rule: Rule, column: Column) -> Expected {
    use Expected::*;
    match column {
        Column::CommitteeMonotonicity => match rule {
            Rule::Sntv | Rule::KBorda | Rule::GreedyCc => Holds,
            _ => Fails,
        },
        Column::SolidCoalitions => match rule {
            Rule::Sntv | Rule::GreedyMonroe => Holds,
            Rule::Stv => HoldsIfEnoughVoters,
            _ => Fails,
        },
        Column::ConsensusCommittee => match rule {
            Rule::Sntv | Rule::L1Cc | Rule::LminCc | Rule::L1Monroe | Rule::LminMonroe
            | Rule::GreedyMonroe => Holds,
            Rule::Stv => HoldsIfEnoughVoters,
            Rule::Bloc | Rule::KBorda | Rule::GreedyCc => Fails,
        },
        Column::Unanimity => match rule {
            Rule::Sntv | Rule::L1Cc | Rule::LminCc | Rule::GreedyCc => UnanimityWeak,
            Rule::Bloc => UnanimityFixedMajority,
            Rule::Stv => UnanimityStrongIfEnoughVoters,
            Rule::KBorda | Rule::L1Monroe | Rule::LminMonroe | Rule::GreedyMonroe => UnanimityStrong,
        },
        Column::Monotonicity => match rule {
            Rule::Sntv | Rule::Bloc | Rule::KBorda => MonotoneBoth,
            Rule::L1Cc | Rule::LminCc => MonotoneCandidateOnly,
            _ => MonotoneNone,
        },
        Column::Homogeneity => match rule {
            Rule::Stv => SkippedFractionalVotes,
            Rule::GreedyMonroe => SkippedIntermediateTieBreaking,
            Rule::L1Monroe | Rule::LminMonroe => HoldsIfDivisible,
            _ => Holds,
        },
        Column::Consistency => match rule {
            Rule::Sntv | Rule::Bloc | Rule::KBorda | Rule::L1Cc => Holds,
            _ => Fails,
        },
    }
}

pub fn expected_label(expected: Expected) -> &'static str {
    use Expected::*;
    match expected {
        Holds => "holds",
        HoldsIfEnoughVoters => "holds(n>=k(k+1))",
        HoldsIfDivisible => "holds(k|n)",
        Fails => "fails",
        UnanimityWeak => "weak",
        UnanimityStrong => "strong",
        UnanimityStrongIfEnoughVoters => "strong(n>=k(k+1))",
        UnanimityFixedMajority => "fix-maj",
        MonotoneBoth => "C/NC",
        MonotoneCandidateOnly => "C",
        MonotoneNone => "none",
        SkippedFractionalVotes => "skip(fractional-votes)",
        SkippedIntermediateTieBreaking => "skip(tie-breaking)",
    }
}

// ---------------------------------------------------------------------------
// Property sweeps over the bounded anonymous universe

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepProperty {
    CommitteeMonotone,
    SolidCoalitions,
    ConsensusCommittee,
    WeakUnanimity,
    StrongUnanimity,
    FixedMajority,
    CandidateMonotone,
    NonCrossingMonotone,
    Homogeneous,
    Consistent,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    /// Instances actually checked (meaningful on clean sweeps).
    pub checked: usize,
    pub violation: Option<Witness>,
}

/// Side conditions baked into the sweeps:
/// - Monroe-style rules are undefined for k > n; those instances skip.
/// - STV's solid-coalitions, consensus-committee and strong-unanimity
///   claims carry the n >= k(k+1) voter floor.
/// - Monroe homogeneity is claimed only when k divides n.
fn sweep_ks(rule: Rule, prop: SweepProperty, m: usize, n: usize, max_k: usize) -> Vec<usize> {
    let mut hi = m.min(max_k);
    if prop == SweepProperty::CommitteeMonotone {
        hi = hi.min(m.saturating_sub(1));
    }
    (1..=hi)
        .filter(|&k| {
            if rule.requires_k_at_most_n() {
                let needed = if prop == SweepProperty::CommitteeMonotone { k + 1 } else { k };
                if needed > n {
                    return false;
                }
            }
            if rule == Rule::Stv
                && matches!(
                    prop,
                    SweepProperty::SolidCoalitions
                        | SweepProperty::ConsensusCommittee
                        | SweepProperty::StrongUnanimity
                )
                && n < k * (k + 1)
            {
                return false;
            }
            if rule.requires_k_at_most_n() && prop == SweepProperty::Homogeneous && n % k != 0 {
                return false;
            }
            true
        })
        .collect()
}

fn instance_verdict(
    rule: Rule,
    prop: SweepProperty,
    e: &crate::election::Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<checks::AxiomVerdict, RuleError> {
    match prop {
        SweepProperty::CommitteeMonotone => checks::check_committee_monotonicity(rule, e, k..=k, cfg),
        SweepProperty::SolidCoalitions => checks::check_solid_coalitions(rule, e, k, cfg),
        SweepProperty::ConsensusCommittee => checks::check_consensus_committee(rule, e, k, cfg),
        SweepProperty::WeakUnanimity => checks::check_unanimity(rule, e, k, false, cfg),
        SweepProperty::StrongUnanimity => checks::check_unanimity(rule, e, k, true, cfg),
        SweepProperty::FixedMajority => checks::check_fixed_majority(rule, e, k, cfg),
        SweepProperty::CandidateMonotone => checks::check_monotonicity(rule, e, k, false, cfg),
        SweepProperty::NonCrossingMonotone => checks::check_monotonicity(rule, e, k, true, cfg),
        SweepProperty::Homogeneous => checks::check_homogeneity(rule, e, k, 2..=3, cfg),
        SweepProperty::Consistent => unreachable!("handled via profile splits"),
    }
}

/// Sweeps one property over every anonymous profile within the bounds.
/// Violations surface in canonical order (smallest m, then n, then profile),
/// so the result is deterministic under any parallel schedule.
pub fn sweep_property(
    rule: Rule,
    prop: SweepProperty,
    bounds: &TableBounds,
    cfg: &RuleConfig,
) -> SweepOutcome {
    let checked = AtomicUsize::new(0);
    for m in 1..=bounds.max_candidates {
        let orders = all_orders(m);
        for n in 1..=bounds.max_voters {
            let ks = sweep_ks(rule, prop, m, n, bounds.max_k);
            if ks.is_empty() {
                continue;
            }
            let profiles = anonymous_profiles(m, n);
            let hit = profiles.par_iter().find_map_first(|profile| {
                let e = election_from_profile(m, &orders, profile);
                for &k in &ks {
                    if prop == SweepProperty::Consistent {
                        for (left, right) in binary_splits(profile) {
                            if rule.requires_k_at_most_n() && (left.len() < k || right.len() < k) {
                                continue;
                            }
                            checked.fetch_add(1, Ordering::Relaxed);
                            let e1 = election_from_profile(m, &orders, &left);
                            let e2 = election_from_profile(m, &orders, &right);
                            match checks::check_consistency(rule, &e1, &e2, k, cfg) {
                                Ok(v) if v.status == VerdictStatus::Violated => {
                                    return v.witness;
                                }
                                _ => {}
                            }
                        }
                    } else {
                        checked.fetch_add(1, Ordering::Relaxed);
                        match instance_verdict(rule, prop, &e, k, cfg) {
                            Ok(v) if v.status == VerdictStatus::Violated => return v.witness,
                            _ => {}
                        }
                    }
                }
                None
            });
            if let Some(witness) = hit {
                return SweepOutcome {
                    checked: checked.load(Ordering::Relaxed),
                    violation: Some(witness),
                };
            }
        }
    }
    SweepOutcome {
        checked: checked.load(Ordering::Relaxed),
        violation: None,
    }
}

// ---------------------------------------------------------------------------
// Witness registry for the failing cells

enum Registered {
    One(&'static str, usize),
    Pair(&'static str, &'static str, usize),
}

fn registered(rule: Rule, axiom: Axiom) -> Option<Registered> {
    use Registered::*;
    let reg = match (rule, axiom) {
        (Rule::Stv, Axiom::CommitteeMonotonicity) => One("committee_monotonicity_stv", 1),
        (Rule::Bloc, Axiom::CommitteeMonotonicity) => One("committee_monotonicity_bloc", 1),
        (
            Rule::L1Cc | Rule::LminCc | Rule::L1Monroe | Rule::LminMonroe | Rule::GreedyMonroe,
            Axiom::CommitteeMonotonicity,
        ) => One("committee_monotonicity_cc_monroe", 1),
        (Rule::Bloc | Rule::KBorda | Rule::GreedyCc, Axiom::SolidCoalitions) => {
            One("consensus_committee_two_voters", 2)
        }
        (
            Rule::L1Cc | Rule::LminCc | Rule::L1Monroe | Rule::LminMonroe,
            Axiom::SolidCoalitions,
        ) => One("solid_coalitions_cc_monroe", 3),
        (Rule::Bloc | Rule::KBorda | Rule::GreedyCc, Axiom::ConsensusCommittee) => {
            One("consensus_committee_two_voters", 2)
        }
        (
            Rule::Sntv | Rule::L1Cc | Rule::LminCc | Rule::GreedyCc,
            Axiom::StrongUnanimity,
        ) => One("unanimity_strong_violation", 2),
        (Rule::Stv, Axiom::CandidateMonotonicity | Axiom::NonCrossingMonotonicity) => {
            One("stv_monotonicity", 1)
        }
        (Rule::Stv, Axiom::Consistency) => Pair("stv_consistency_e1", "stv_consistency_e2", 2),
        (Rule::L1Monroe | Rule::LminMonroe, Axiom::CandidateMonotonicity) => {
            One("candidate_monotonicity_lmin_monroe", 2)
        }
        (Rule::GreedyMonroe, Axiom::CandidateMonotonicity) => {
            One("candidate_monotonicity_greedy_monroe", 2)
        }
        (Rule::GreedyCc, Axiom::CandidateMonotonicity) => One("candidate_monotonicity_greedy_cc", 2),
        (
            Rule::L1Cc | Rule::L1Monroe | Rule::GreedyCc | Rule::GreedyMonroe,
            Axiom::NonCrossingMonotonicity,
        ) => One("noncrossing_cc_family", 2),
        (Rule::LminCc | Rule::LminMonroe, Axiom::NonCrossingMonotonicity) => {
            One("noncrossing_lmin_cc", 2)
        }
        (Rule::L1Monroe, Axiom::Consistency) => {
            Pair("consistency_l1_monroe_e1", "consistency_l1_monroe_e2", 2)
        }
        (Rule::GreedyCc, Axiom::Consistency) => {
            Pair("consistency_greedy_cc_e1", "consistency_greedy_cc_e2", 2)
        }
        (Rule::GreedyMonroe, Axiom::Consistency) => {
            Pair("consistency_greedy_monroe_e1", "consistency_greedy_monroe_e2", 2)
        }
        _ => return None,
    };
    Some(reg)
}

fn replay_registered(
    reg: &Registered,
    rule: Rule,
    axiom: Axiom,
    cfg: &RuleConfig,
) -> Option<(String, Witness)> {
    let (verdict, source) = match reg {
        Registered::One(name, k) => {
            let e = profiles::load(name)?;
            let verdict = match axiom {
                Axiom::CommitteeMonotonicity => {
                    checks::check_committee_monotonicity(rule, &e, *k..=*k, cfg)
                }
                Axiom::SolidCoalitions => checks::check_solid_coalitions(rule, &e, *k, cfg),
                Axiom::ConsensusCommittee => checks::check_consensus_committee(rule, &e, *k, cfg),
                Axiom::StrongUnanimity => checks::check_unanimity(rule, &e, *k, true, cfg),
                Axiom::CandidateMonotonicity => checks::check_monotonicity(rule, &e, *k, false, cfg),
                Axiom::NonCrossingMonotonicity => checks::check_monotonicity(rule, &e, *k, true, cfg),
                Axiom::Homogeneity => checks::check_homogeneity(rule, &e, *k, 2..=3, cfg),
                _ => return None,
            };
            (verdict, format!("profiles/{name}.elect"))
        }
        Registered::Pair(first, second, k) => {
            let e1 = profiles::load(first)?;
            let e2 = profiles::load(second)?;
            (
                checks::check_consistency(rule, &e1, &e2, *k, cfg),
                format!("profiles/{first}.elect + profiles/{second}.elect"),
            )
        }
    };
    match verdict {
        Ok(v) if v.status == VerdictStatus::Violated => Some((source, v.witness?)),
        _ => None,
    }
}

/// A counterexample for a failing cell: the shipped corpus first, bounded
/// search as the fallback.
pub fn witness_for_failure(
    rule: Rule,
    axiom: Axiom,
    bounds: &TableBounds,
    cfg: &RuleConfig,
) -> Option<(String, Witness)> {
    if let Some(reg) = registered(rule, axiom) {
        if let Some(found) = replay_registered(&reg, rule, axiom, cfg) {
            return Some(found);
        }
    }
    let sb = SearchBounds::exhaustive(bounds.max_candidates, bounds.max_voters, bounds.max_k);
    let verdict = search_counterexample(rule, axiom, &sb, cfg);
    verdict.witness.map(|w| {
        let source = format!(
            "searched (m<={}, n<={})",
            bounds.max_candidates, bounds.max_voters
        );
        (source, w)
    })
}

// ---------------------------------------------------------------------------
// Cell evaluation and the report

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct CellReport {
    pub rule: Rule,
    pub column: Column,
    pub expected: Expected,
    pub status: CellStatus,
    pub detail: String,
    /// Witnesses backing a failing-cell pass, labelled by their role.
    pub witnesses: Vec<(String, String, Witness)>,
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub bounds: TableBounds,
    pub cells: Vec<CellReport>,
}

impl TableReport {
    pub fn all_consistent(&self) -> bool {
        self.cells.iter().all(|c| c.status != CellStatus::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let pass = self.cells.iter().filter(|c| c.status == CellStatus::Pass).count();
        let fail = self.cells.iter().filter(|c| c.status == CellStatus::Fail).count();
        let skip = self.cells.iter().filter(|c| c.status == CellStatus::Skip).count();
        (pass, fail, skip)
    }
}

fn pass(rule: Rule, column: Column, expected: Expected, detail: String) -> CellReport {
    CellReport {
        rule,
        column,
        expected,
        status: CellStatus::Pass,
        detail,
        witnesses: Vec::new(),
    }
}

fn fail(rule: Rule, column: Column, expected: Expected, detail: String) -> CellReport {
    CellReport {
        rule,
        column,
        expected,
        status: CellStatus::Fail,
        detail,
        witnesses: Vec::new(),
    }
}

fn sweep_cell(
    rule: Rule,
    column: Column,
    expected: Expected,
    props: &[SweepProperty],
    bounds: &TableBounds,
    cfg: &RuleConfig,
) -> CellReport {
    let mut checked = 0;
    for &prop in props {
        let outcome = sweep_property(rule, prop, bounds, cfg);
        if let Some(witness) = outcome.violation {
            let mut report = fail(
                rule,
                column,
                expected,
                format!(
                    "expected no violation but {} fails on a {}-candidate {}-voter profile (k={})",
                    witness.axiom,
                    witness.elections[0].num_candidates(),
                    witness.elections[0].num_voters(),
                    witness.k
                ),
            );
            report.witnesses.push((
                "unexpected-violation".to_string(),
                "sweep".to_string(),
                witness,
            ));
            return report;
        }
        checked += outcome.checked;
    }
    pass(rule, column, expected, format!("sweep clean ({checked} instances)"))
}

fn failure_cell(
    rule: Rule,
    column: Column,
    expected: Expected,
    axioms: &[Axiom],
    bounds: &TableBounds,
    cfg: &RuleConfig,
) -> CellReport {
    let mut witnesses = Vec::new();
    for &axiom in axioms {
        match witness_for_failure(rule, axiom, bounds, cfg) {
            Some((source, witness)) => witnesses.push((axiom.name().to_string(), source, witness)),
            None => {
                return fail(
                    rule,
                    column,
                    expected,
                    format!("no {axiom} counterexample found within bounds"),
                )
            }
        }
    }
    let detail = witnesses
        .iter()
        .map(|(axiom, source, _)| format!("{axiom}: {source}"))
        .collect::<Vec<_>>()
        .join("; ");
    CellReport {
        rule,
        column,
        expected,
        status: CellStatus::Pass,
        detail,
        witnesses,
    }
}

/// Sweeps that must stay clean plus failures that must produce witnesses,
/// per expected-cell kind.
fn run_cell(rule: Rule, column: Column, bounds: &TableBounds, cfg: &RuleConfig) -> CellReport {
    use Expected::*;
    let expected = expected_cell(rule, column);
    let sweep_for_column = |props: &[SweepProperty]| -> CellReport {
        sweep_cell(rule, column, expected, props, bounds, cfg)
    };
    match expected {
        SkippedFractionalVotes => CellReport {
            rule,
            column,
            expected,
            status: CellStatus::Skip,
            detail: "needs non-rounded Droop quota and fractional votes".to_string(),
            witnesses: Vec::new(),
        },
        SkippedIntermediateTieBreaking => CellReport {
            rule,
            column,
            expected,
            status: CellStatus::Skip,
            detail: "needs a refined intermediate tie-breaking rule".to_string(),
            witnesses: Vec::new(),
        },
        Holds | HoldsIfEnoughVoters | HoldsIfDivisible => {
            let prop = match column {
                Column::CommitteeMonotonicity => SweepProperty::CommitteeMonotone,
                Column::SolidCoalitions => SweepProperty::SolidCoalitions,
                Column::ConsensusCommittee => SweepProperty::ConsensusCommittee,
                Column::Homogeneity => SweepProperty::Homogeneous,
                Column::Consistency => SweepProperty::Consistent,
                _ => unreachable!("holds-cells only exist for these columns"),
            };
            sweep_for_column(&[prop])
        }
        Fails => {
            let axiom = match column {
                Column::CommitteeMonotonicity => Axiom::CommitteeMonotonicity,
                Column::SolidCoalitions => Axiom::SolidCoalitions,
                Column::ConsensusCommittee => Axiom::ConsensusCommittee,
                Column::Consistency => Axiom::Consistency,
                _ => unreachable!("fails-cells only exist for these columns"),
            };
            failure_cell(rule, column, expected, &[axiom], bounds, cfg)
        }
        UnanimityWeak => {
            let sweep = sweep_cell(
                rule,
                column,
                expected,
                &[SweepProperty::WeakUnanimity],
                bounds,
                cfg,
            );
            if sweep.status == CellStatus::Fail {
                return sweep;
            }
            let mut with_witness =
                failure_cell(rule, column, expected, &[Axiom::StrongUnanimity], bounds, cfg);
            if with_witness.status == CellStatus::Pass {
                with_witness.detail = format!("{}; {}", sweep.detail, with_witness.detail);
            }
            with_witness
        }
        UnanimityStrong | UnanimityStrongIfEnoughVoters => {
            sweep_for_column(&[SweepProperty::StrongUnanimity])
        }
        UnanimityFixedMajority => {
            sweep_for_column(&[SweepProperty::FixedMajority, SweepProperty::StrongUnanimity])
        }
        MonotoneBoth => sweep_for_column(&[
            SweepProperty::CandidateMonotone,
            SweepProperty::NonCrossingMonotone,
        ]),
        MonotoneCandidateOnly => {
            let sweep = sweep_cell(
                rule,
                column,
                expected,
                &[SweepProperty::CandidateMonotone],
                bounds,
                cfg,
            );
            if sweep.status == CellStatus::Fail {
                return sweep;
            }
            let mut with_witness = failure_cell(
                rule,
                column,
                expected,
                &[Axiom::NonCrossingMonotonicity],
                bounds,
                cfg,
            );
            if with_witness.status == CellStatus::Pass {
                with_witness.detail = format!("{}; {}", sweep.detail, with_witness.detail);
            }
            with_witness
        }
        MonotoneNone => failure_cell(
            rule,
            column,
            expected,
            &[Axiom::CandidateMonotonicity, Axiom::NonCrossingMonotonicity],
            bounds,
            cfg,
        ),
    }
}

pub fn verify_table(
    bounds: &TableBounds,
    only_rule: Option<Rule>,
    only_cell: Option<(Rule, Column)>,
    cfg: &RuleConfig,
) -> TableReport {
    let mut cells = Vec::new();
    for rule in Rule::ALL {
        if let Some(only) = only_rule {
            if rule != only {
                continue;
            }
        }
        for column in Column::ALL {
            if let Some((r, c)) = only_cell {
                if rule != r || column != c {
                    continue;
                }
            }
            cells.push(run_cell(rule, column, bounds, cfg));
        }
    }
    TableReport {
        bounds: *bounds,
        cells,
    }
}

impl TableReport {
    /// Fixed-width plain rendering, one row per rule.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let headers = [
            "rule",
            "com-mon",
            "solid",
            "consensus",
            "unanimity",
            "monotone",
            "homogeneity",
            "consistency",
        ];
        let mut rows: Vec<Vec<String>> = vec![headers.iter().map(|s| s.to_string()).collect()];
        let rules: Vec<Rule> = {
            let mut seen = Vec::new();
            for cell in &self.cells {
                if !seen.contains(&cell.rule) {
                    seen.push(cell.rule);
                }
            }
            seen
        };
        for rule in rules {
            let mut row = vec![rule.name().to_string()];
            for column in Column::ALL {
                let cell = self.cells.iter().find(|c| c.rule == rule && c.column == column);
                row.push(match cell {
                    Some(c) => {
                        let status = match c.status {
                            CellStatus::Pass => "ok",
                            CellStatus::Fail => "FAIL",
                            CellStatus::Skip => "skip",
                        };
                        if c.status == CellStatus::Skip {
                            expected_label(c.expected).to_string()
                        } else {
                            format!("{}:{}", expected_label(c.expected), status)
                        }
                    }
                    None => "-".to_string(),
                });
            }
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0))
            .collect();
        for row in &rows {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_matrix_spot_checks() {
        assert_eq!(expected_cell(Rule::Sntv, Column::CommitteeMonotonicity), Expected::Holds);
        assert_eq!(expected_cell(Rule::Stv, Column::Homogeneity), Expected::SkippedFractionalVotes);
        assert_eq!(expected_cell(Rule::Bloc, Column::Unanimity), Expected::UnanimityFixedMajority);
        assert_eq!(expected_cell(Rule::LminCc, Column::Consistency), Expected::Fails);
        assert_eq!(
            expected_cell(Rule::L1Monroe, Column::Homogeneity),
            Expected::HoldsIfDivisible
        );
    }

    #[test]
    fn failing_cells_replay_from_the_corpus() {
        let cfg = RuleConfig::default();
        let bounds = TableBounds::default();
        for (rule, axiom) in [
            (Rule::Stv, Axiom::CommitteeMonotonicity),
            (Rule::Bloc, Axiom::CommitteeMonotonicity),
            (Rule::L1Monroe, Axiom::Consistency),
            (Rule::GreedyCc, Axiom::CandidateMonotonicity),
            (Rule::LminMonroe, Axiom::NonCrossingMonotonicity),
        ] {
            let found = witness_for_failure(rule, axiom, &bounds, &cfg);
            assert!(found.is_some(), "{rule} {axiom}");
            let (source, _) = found.unwrap();
            assert!(source.starts_with("profiles/"), "{rule} {axiom}: {source}");
        }
    }

    #[test]
    fn single_cell_report_sntv_committee_monotonicity() {
        let cfg = RuleConfig::default();
        let bounds = TableBounds {
            max_candidates: 3,
            max_voters: 3,
            max_k: 3,
        };
        let report = verify_table(
            &bounds,
            None,
            Some((Rule::Sntv, Column::CommitteeMonotonicity)),
            &cfg,
        );
        assert_eq!(report.cells.len(), 1);
        assert_eq!(report.cells[0].status, CellStatus::Pass);
    }
}
