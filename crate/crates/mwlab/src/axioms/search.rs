//! Bounded counterexample search: exhaustive enumeration of anonymous
//! profiles in canonical order, or seeded impartial-culture sampling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::checks::{self, Axiom, AxiomVerdict, VerdictStatus};
use crate::axioms::enumerate::{all_orders, anonymous_profiles, binary_splits, election_from_profile};
use crate::election::{Election, PreferenceOrder};
use crate::rules::{Rule, RuleConfig, RuleError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchMode {
    /// Complete enumeration of anonymous profiles within the bounds; the
    /// first violation in canonical order is returned, so absence of a
    /// violation is a theorem over the finite universe.
    ExhaustiveAnonymous,
    /// Uniform profiles (impartial culture) from the seed.
    Random { seed: u64, budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_candidates: usize,
    pub max_voters: usize,
    pub max_k: usize,
    pub mode: SearchMode,
}

impl SearchBounds {
    pub fn exhaustive(max_candidates: usize, max_voters: usize, max_k: usize) -> Self {
        SearchBounds {
            max_candidates,
            max_voters,
            max_k,
            mode: SearchMode::ExhaustiveAnonymous,
        }
    }
}

/// Replication factors probed by homogeneity searches.
pub const HOMOGENEITY_T_MAX: usize = 3;

/// Runs the axiom checker on one instance. Consistency iterates over the
/// binary splits of the profile, homogeneity over t in 2..=3, so a single
/// "instance" here is the whole family for that profile and k.
fn check_instance(
    rule: Rule,
    axiom: Axiom,
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    match axiom {
        Axiom::CommitteeMonotonicity => {
            checks::check_committee_monotonicity(rule, e, k..=k, cfg)
        }
        Axiom::SolidCoalitions => checks::check_solid_coalitions(rule, e, k, cfg),
        Axiom::ConsensusCommittee => checks::check_consensus_committee(rule, e, k, cfg),
        Axiom::WeakUnanimity => checks::check_unanimity(rule, e, k, false, cfg),
        Axiom::StrongUnanimity => checks::check_unanimity(rule, e, k, true, cfg),
        Axiom::FixedMajority => checks::check_fixed_majority(rule, e, k, cfg),
        Axiom::CandidateMonotonicity => checks::check_monotonicity(rule, e, k, false, cfg),
        Axiom::NonCrossingMonotonicity => checks::check_monotonicity(rule, e, k, true, cfg),
        Axiom::Homogeneity => checks::check_homogeneity(rule, e, k, 2..=HOMOGENEITY_T_MAX, cfg),
        Axiom::Consistency => {
            // Covered separately through profile splits.
            unreachable!("consistency search uses split_instances")
        }
        Axiom::Nonimposition => unreachable!("nonimposition search is constructive"),
    }
}

/// Exhaustive search over the bounded anonymous universe. Rule-level budget
/// errors are recorded as skips, not failures. For committee monotonicity
/// `k` probes the pair (k, k+1); for consistency every binary split of each
/// profile is tested, which covers exactly the pairs whose concatenation
/// lies in the universe.
pub fn search_counterexample(
    rule: Rule,
    axiom: Axiom,
    bounds: &SearchBounds,
    cfg: &RuleConfig,
) -> AxiomVerdict {
    match &bounds.mode {
        SearchMode::ExhaustiveAnonymous => search_exhaustive(rule, axiom, bounds, cfg),
        SearchMode::Random { seed, budget } => {
            search_random(rule, axiom, bounds, *seed, *budget, cfg)
        }
    }
}

fn valid_ks(rule: Rule, axiom: Axiom, m: usize, n: usize, max_k: usize) -> Vec<usize> {
    let mut hi = m.min(max_k);
    if axiom == Axiom::CommitteeMonotonicity {
        // k probes the pair (k, k+1).
        hi = hi.min(m.saturating_sub(1));
    }
    (1..=hi)
        .filter(|&k| {
            if rule.requires_k_at_most_n() {
                let needed = if axiom == Axiom::CommitteeMonotonicity { k + 1 } else { k };
                needed <= n
            } else {
                true
            }
        })
        .collect()
}

fn search_exhaustive(
    rule: Rule,
    axiom: Axiom,
    bounds: &SearchBounds,
    cfg: &RuleConfig,
) -> AxiomVerdict {
    for m in 1..=bounds.max_candidates {
        let orders = all_orders(m);
        for n in 1..=bounds.max_voters {
            for profile in anonymous_profiles(m, n) {
                let e = election_from_profile(m, &orders, &profile);
                for k in valid_ks(rule, axiom, m, n, bounds.max_k) {
                    if axiom == Axiom::Consistency {
                        for (left, right) in binary_splits(&profile) {
                            if rule.requires_k_at_most_n()
                                && (left.len() < k || right.len() < k)
                            {
                                continue;
                            }
                            let e1 = election_from_profile(m, &orders, &left);
                            let e2 = election_from_profile(m, &orders, &right);
                            match checks::check_consistency(rule, &e1, &e2, k, cfg) {
                                Ok(v) if v.status == VerdictStatus::Violated => return v,
                                _ => {}
                            }
                        }
                    } else {
                        match check_instance(rule, axiom, &e, k, cfg) {
                            Ok(v) if v.status == VerdictStatus::Violated => return v,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    AxiomVerdict::inconclusive()
}

/// A uniformly random strict order.
pub fn random_order<R: Rng>(rng: &mut R, m: usize) -> PreferenceOrder {
    let mut ranking: Vec<usize> = (0..m).collect();
    ranking.shuffle(rng);
    PreferenceOrder::new(ranking, m).expect("shuffled permutation")
}

/// A uniformly random election (impartial culture).
pub fn random_election<R: Rng>(rng: &mut R, m: usize, n: usize) -> Election {
    let votes = (0..n).map(|_| random_order(rng, m)).collect();
    Election::with_letter_labels(m, votes).expect("non-empty")
}

fn search_random(
    rule: Rule,
    axiom: Axiom,
    bounds: &SearchBounds,
    seed: u64,
    budget: usize,
    cfg: &RuleConfig,
) -> AxiomVerdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let m = rng.gen_range(1..=bounds.max_candidates);
        let n = rng.gen_range(1..=bounds.max_voters);
        let e = random_election(&mut rng, m, n);
        let ks = valid_ks(rule, axiom, m, n, bounds.max_k);
        if ks.is_empty() {
            continue;
        }
        let k = ks[rng.gen_range(0..ks.len())];
        let verdict = if axiom == Axiom::Consistency {
            let n2 = rng.gen_range(1..=bounds.max_voters);
            if rule.requires_k_at_most_n() && (k > n || k > n2) {
                continue;
            }
            let e2 = random_election(&mut rng, m, n2);
            checks::check_consistency(rule, &e, &e2, k, cfg)
        } else {
            check_instance(rule, axiom, &e, k, cfg)
        };
        if let Ok(v) = verdict {
            if v.status == VerdictStatus::Violated {
                return v;
            }
        }
    }
    AxiomVerdict::inconclusive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RuleConfig {
        RuleConfig::default()
    }

    #[test]
    fn bloc_committee_monotonicity_has_a_small_witness() {
        let bounds = SearchBounds::exhaustive(3, 4, 3);
        let verdict = search_counterexample(Rule::Bloc, Axiom::CommitteeMonotonicity, &bounds, &cfg());
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let witness = verdict.witness.unwrap();
        assert!(checks::witness_replays(&witness, &cfg()).unwrap());
    }

    #[test]
    fn sntv_committee_monotonicity_search_exhausts() {
        let bounds = SearchBounds::exhaustive(3, 4, 3);
        let verdict = search_counterexample(Rule::Sntv, Axiom::CommitteeMonotonicity, &bounds, &cfg());
        assert_eq!(verdict.status, VerdictStatus::Inconclusive);
    }

    #[test]
    fn kborda_solid_coalitions_violation_found() {
        let bounds = SearchBounds::exhaustive(4, 6, 4);
        let verdict = search_counterexample(Rule::KBorda, Axiom::SolidCoalitions, &bounds, &cfg());
        assert_eq!(verdict.status, VerdictStatus::Violated);
    }

    #[test]
    fn lmin_cc_consistency_violation_found_in_splits() {
        let bounds = SearchBounds::exhaustive(3, 4, 2);
        let verdict = search_counterexample(Rule::LminCc, Axiom::Consistency, &bounds, &cfg());
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let witness = verdict.witness.unwrap();
        assert!(checks::witness_replays(&witness, &cfg()).unwrap());
    }

    #[test]
    fn random_mode_is_deterministic_per_seed() {
        let bounds = SearchBounds {
            max_candidates: 4,
            max_voters: 5,
            max_k: 3,
            mode: SearchMode::Random { seed: 7, budget: 200 },
        };
        let a = search_counterexample(Rule::Bloc, Axiom::CommitteeMonotonicity, &bounds, &cfg());
        let b = search_counterexample(Rule::Bloc, Axiom::CommitteeMonotonicity, &bounds, &cfg());
        assert_eq!(a, b);
    }

    #[test]
    fn anonymous_search_agrees_with_ordered_search_at_tiny_bounds() {
        // Anonymity of the shipped rules justifies searching multisets; spot
        // check against fully ordered enumeration for m=3, n<=3.
        use itertools::Itertools;
        let orders = all_orders(3);
        let mut ordered_found = false;
        for n in 1..=3usize {
            for votes in (0..n).map(|_| 0..orders.len()).multi_cartesian_product() {
                let e = election_from_profile(3, &orders, &votes);
                if let Ok(v) = checks::check_committee_monotonicity(Rule::Bloc, &e, 1..=2, &cfg()) {
                    if v.status == VerdictStatus::Violated {
                        ordered_found = true;
                    }
                }
            }
        }
        let bounds = SearchBounds::exhaustive(3, 3, 3);
        let anon = search_counterexample(Rule::Bloc, Axiom::CommitteeMonotonicity, &bounds, &cfg());
        assert_eq!(anon.status == VerdictStatus::Violated, ordered_found);
    }
}
