//! Instance-level axiom checkers. Each checker evaluates the rule through
//! the public API and returns either holds-on-instance or a violation
//! witness that replays to the same breach.

use std::collections::BTreeMap;

use crate::axioms::enumerate;
use crate::election::{Committee, Election};
use crate::rules::{evaluate, Rule, RuleConfig, RuleError};

/// The axioms under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Nonimposition,
    Consistency,
    Homogeneity,
    CandidateMonotonicity,
    NonCrossingMonotonicity,
    CommitteeMonotonicity,
    SolidCoalitions,
    ConsensusCommittee,
    WeakUnanimity,
    StrongUnanimity,
    FixedMajority,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::Nonimposition,
        Axiom::Consistency,
        Axiom::Homogeneity,
        Axiom::CandidateMonotonicity,
        Axiom::NonCrossingMonotonicity,
        Axiom::CommitteeMonotonicity,
        Axiom::SolidCoalitions,
        Axiom::ConsensusCommittee,
        Axiom::WeakUnanimity,
        Axiom::StrongUnanimity,
        Axiom::FixedMajority,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Nonimposition => "nonimposition",
            Axiom::Consistency => "consistency",
            Axiom::Homogeneity => "homogeneity",
            Axiom::CandidateMonotonicity => "candidate-monotonicity",
            Axiom::NonCrossingMonotonicity => "non-crossing-monotonicity",
            Axiom::CommitteeMonotonicity => "committee-monotonicity",
            Axiom::SolidCoalitions => "solid-coalitions",
            Axiom::ConsensusCommittee => "consensus-committee",
            Axiom::WeakUnanimity => "weak-unanimity",
            Axiom::StrongUnanimity => "strong-unanimity",
            Axiom::FixedMajority => "fixed-majority",
        }
    }

    pub fn parse(name: &str) -> Option<Axiom> {
        Axiom::ALL.iter().copied().find(|a| a.name() == name)
    }
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Holds,
    Violated,
    Inconclusive,
}

impl VerdictStatus {
    pub fn name(self) -> &'static str {
        match self {
            VerdictStatus::Holds => "holds",
            VerdictStatus::Violated => "violated",
            VerdictStatus::Inconclusive => "inconclusive",
        }
    }
}

/// The specific condition breached, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Breach {
    CommitteeMonotonicity {
        k: usize,
        /// Committee on the small (grow) or large (shrink) side with no
        /// counterpart.
        committee: Committee,
        grow: bool,
        outcome_k: Vec<Committee>,
        outcome_k1: Vec<Committee>,
    },
    SolidCoalitions {
        candidate: usize,
        first_count: usize,
        excluded_from: Committee,
    },
    ConsensusCommittee {
        expected: Committee,
        outcome: Vec<Committee>,
    },
    Unanimity {
        strong: bool,
        top_set: Committee,
        outcome: Vec<Committee>,
    },
    FixedMajority {
        majority_set: Committee,
        supporters: usize,
        outcome: Vec<Committee>,
    },
    Monotonicity {
        non_crossing: bool,
        committee: Committee,
        candidate: usize,
        vote_index: usize,
        outcome_before: Vec<Committee>,
        outcome_after: Vec<Committee>,
    },
    Consistency {
        outcome_first: Vec<Committee>,
        outcome_second: Vec<Committee>,
        outcome_joint: Vec<Committee>,
    },
    Homogeneity {
        t: usize,
        outcome: Vec<Committee>,
        outcome_replicated: Vec<Committee>,
    },
}

/// A reproducible violation: the profile(s), the committee size, and the
/// breach record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub rule: Rule,
    pub axiom: Axiom,
    pub k: usize,
    pub elections: Vec<Election>,
    pub breach: Breach,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    /// For nonimposition: a profile realizing the target committee.
    pub certificate: Option<Election>,
}

impl AxiomVerdict {
    pub fn holds() -> Self {
        AxiomVerdict {
            status: VerdictStatus::Holds,
            witness: None,
            certificate: None,
        }
    }

    pub fn violated(witness: Witness) -> Self {
        AxiomVerdict {
            status: VerdictStatus::Violated,
            witness: Some(witness),
            certificate: None,
        }
    }

    pub fn inconclusive() -> Self {
        AxiomVerdict {
            status: VerdictStatus::Inconclusive,
            witness: None,
            certificate: None,
        }
    }
}

/// Both committee-monotonicity conditions between R(E,k) and R(E,k+1) for
/// every k in `k_range`: each winner at k extends to a winner at k+1, and
/// each winner at k+1 contains a winner at k.
pub fn check_committee_monotonicity(
    rule: Rule,
    e: &Election,
    k_range: std::ops::RangeInclusive<usize>,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    for k in k_range {
        let small = evaluate(rule, e, k, cfg)?;
        let large = evaluate(rule, e, k + 1, cfg)?;
        for w in small.committees() {
            if !large.committees().iter().any(|big| w.is_subset_of(big)) {
                return Ok(AxiomVerdict::violated(Witness {
                    rule,
                    axiom: Axiom::CommitteeMonotonicity,
                    k,
                    elections: vec![e.clone()],
                    breach: Breach::CommitteeMonotonicity {
                        k,
                        committee: w.clone(),
                        grow: true,
                        outcome_k: small.committees().to_vec(),
                        outcome_k1: large.committees().to_vec(),
                    },
                }));
            }
        }
        for w in large.committees() {
            if !small.committees().iter().any(|little| little.is_subset_of(w)) {
                return Ok(AxiomVerdict::violated(Witness {
                    rule,
                    axiom: Axiom::CommitteeMonotonicity,
                    k,
                    elections: vec![e.clone()],
                    breach: Breach::CommitteeMonotonicity {
                        k,
                        committee: w.clone(),
                        grow: false,
                        outcome_k: small.committees().to_vec(),
                        outcome_k1: large.committees().to_vec(),
                    },
                }));
            }
        }
    }
    Ok(AxiomVerdict::holds())
}

fn first_place_counts(e: &Election) -> Vec<usize> {
    let mut counts = vec![0usize; e.num_candidates()];
    for vote in e.votes() {
        counts[vote.top()] += 1;
    }
    counts
}

/// Every candidate ranked first by at least n/k voters must sit in every
/// winning committee. The threshold comparison is exact: count * k >= n.
pub fn check_solid_coalitions(
    rule: Rule,
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let n = e.num_voters();
    let counts = first_place_counts(e);
    let qualified: Vec<usize> = (0..e.num_candidates())
        .filter(|&c| counts[c] * k >= n)
        .collect();
    if qualified.is_empty() {
        return Ok(AxiomVerdict::holds());
    }
    let outcome = evaluate(rule, e, k, cfg)?;
    for c in qualified {
        if let Some(w) = outcome.committees().iter().find(|w| !w.contains(c)) {
            return Ok(AxiomVerdict::violated(Witness {
                rule,
                axiom: Axiom::SolidCoalitions,
                k,
                elections: vec![e.clone()],
                breach: Breach::SolidCoalitions {
                    candidate: c,
                    first_count: counts[c],
                    excluded_from: w.clone(),
                },
            }));
        }
    }
    Ok(AxiomVerdict::holds())
}

/// Detects the consensus committee from first-place counts: it exists when
/// exactly k candidates receive at least one first place and every count
/// lies in the floor/ceil window of n/k. When it exists the rule must
/// return exactly that committee.
pub fn check_consensus_committee(
    rule: Rule,
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let n = e.num_voters();
    let counts = first_place_counts(e);
    let holders: Vec<usize> = (0..e.num_candidates()).filter(|&c| counts[c] > 0).collect();
    if holders.len() != k {
        return Ok(AxiomVerdict::holds());
    }
    let lo = n / k;
    let hi = n.div_ceil(k);
    if !holders.iter().all(|&c| lo <= counts[c] && counts[c] <= hi) {
        return Ok(AxiomVerdict::holds());
    }
    let consensus = Committee::new(holders, e.num_candidates()).expect("valid");
    let outcome = evaluate(rule, e, k, cfg)?;
    if outcome.is_exactly(&consensus) {
        Ok(AxiomVerdict::holds())
    } else {
        Ok(AxiomVerdict::violated(Witness {
            rule,
            axiom: Axiom::ConsensusCommittee,
            k,
            elections: vec![e.clone()],
            breach: Breach::ConsensusCommittee {
                expected: consensus,
                outcome: outcome.committees().to_vec(),
            },
        }))
    }
}

/// When every voter ranks the same k candidates on top, weak unanimity
/// requires that set among the winners and strong unanimity requires it to
/// be the unique winner.
pub fn check_unanimity(
    rule: Rule,
    e: &Election,
    k: usize,
    strong: bool,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let shared = e.votes()[0].top_set(k);
    if e.votes().iter().any(|v| v.top_set(k) != shared) {
        return Ok(AxiomVerdict::holds());
    }
    let top = Committee::new(shared, e.num_candidates()).expect("valid");
    let outcome = evaluate(rule, e, k, cfg)?;
    let satisfied = if strong {
        outcome.is_exactly(&top)
    } else {
        outcome.contains(&top)
    };
    if satisfied {
        Ok(AxiomVerdict::holds())
    } else {
        Ok(AxiomVerdict::violated(Witness {
            rule,
            axiom: if strong {
                Axiom::StrongUnanimity
            } else {
                Axiom::WeakUnanimity
            },
            k,
            elections: vec![e.clone()],
            breach: Breach::Unanimity {
                strong,
                top_set: top,
                outcome: outcome.committees().to_vec(),
            },
        }))
    }
}

/// If some k-set is the top-k set of a strict majority of voters, it must
/// be the unique winner.
pub fn check_fixed_majority(
    rule: Rule,
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let n = e.num_voters();
    let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for vote in e.votes() {
        *counts.entry(vote.top_set(k)).or_default() += 1;
    }
    let majority = counts.into_iter().find(|(_, count)| 2 * count > n);
    let (set, supporters) = match majority {
        Some(found) => found,
        None => return Ok(AxiomVerdict::holds()),
    };
    let w = Committee::new(set, e.num_candidates()).expect("valid");
    let outcome = evaluate(rule, e, k, cfg)?;
    if outcome.is_exactly(&w) {
        Ok(AxiomVerdict::holds())
    } else {
        Ok(AxiomVerdict::violated(Witness {
            rule,
            axiom: Axiom::FixedMajority,
            k,
            elections: vec![e.clone()],
            breach: Breach::FixedMajority {
                majority_set: w,
                supporters,
                outcome: outcome.committees().to_vec(),
            },
        }))
    }
}

/// Single-position forward shifts, exactly one vote and one step per probe.
/// Candidate monotonicity: after shifting a winner's member c forward, c
/// must still sit in some winning committee. Non-crossing monotonicity:
/// when c was ranked immediately below a non-member, the same committee
/// must still win.
pub fn check_monotonicity(
    rule: Rule,
    e: &Election,
    k: usize,
    non_crossing: bool,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let outcome = evaluate(rule, e, k, cfg)?;
    let mut probed: Vec<(usize, usize)> = Vec::new();
    for w in outcome.committees() {
        for &c in w.members() {
            for (vi, vote) in e.votes().iter().enumerate() {
                let pos = vote.position(c).expect("member is a candidate");
                if pos == 1 {
                    continue;
                }
                if non_crossing {
                    let above = vote.ranking()[pos - 2];
                    if w.contains(above) {
                        continue;
                    }
                } else if probed.contains(&(c, vi)) {
                    // The candidate-monotonicity conclusion depends only on
                    // (c, vote), not on the committee that nominated it.
                    continue;
                } else {
                    probed.push((c, vi));
                }
                let shifted = e.shift_forward(vi, c).expect("pos > 1");
                let after = evaluate(rule, &shifted, k, cfg)?;
                let satisfied = if non_crossing {
                    after.contains(w)
                } else {
                    after.committees().iter().any(|w2| w2.contains(c))
                };
                if !satisfied {
                    return Ok(AxiomVerdict::violated(Witness {
                        rule,
                        axiom: if non_crossing {
                            Axiom::NonCrossingMonotonicity
                        } else {
                            Axiom::CandidateMonotonicity
                        },
                        k,
                        elections: vec![e.clone(), shifted],
                        breach: Breach::Monotonicity {
                            non_crossing,
                            committee: w.clone(),
                            candidate: c,
                            vote_index: vi,
                            outcome_before: outcome.committees().to_vec(),
                            outcome_after: after.committees().to_vec(),
                        },
                    }));
                }
            }
        }
    }
    Ok(AxiomVerdict::holds())
}

/// If the two outcomes intersect, the concatenation's outcome must equal
/// the intersection.
pub fn check_consistency(
    rule: Rule,
    e1: &Election,
    e2: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let joint = e1.concat(e2).map_err(|_| RuleError::InvalidK {
        k,
        max: e1.num_candidates(),
    })?;
    let o1 = evaluate(rule, e1, k, cfg)?;
    let o2 = evaluate(rule, e2, k, cfg)?;
    let shared = o1.intersect(&o2);
    if shared.is_empty() {
        return Ok(AxiomVerdict::holds());
    }
    let o12 = evaluate(rule, &joint, k, cfg)?;
    if o12.committees() == shared.as_slice() {
        Ok(AxiomVerdict::holds())
    } else {
        Ok(AxiomVerdict::violated(Witness {
            rule,
            axiom: Axiom::Consistency,
            k,
            elections: vec![e1.clone(), e2.clone()],
            breach: Breach::Consistency {
                outcome_first: o1.committees().to_vec(),
                outcome_second: o2.committees().to_vec(),
                outcome_joint: o12.committees().to_vec(),
            },
        }))
    }
}

/// R(tE, k) must equal R(E, k) for every t in the range.
pub fn check_homogeneity(
    rule: Rule,
    e: &Election,
    k: usize,
    t_range: std::ops::RangeInclusive<usize>,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    let base = evaluate(rule, e, k, cfg)?;
    for t in t_range {
        let replicated = e.replicate(t).expect("t >= 1");
        let scaled = evaluate(rule, &replicated, k, cfg)?;
        if !base.same_committees(&scaled) {
            return Ok(AxiomVerdict::violated(Witness {
                rule,
                axiom: Axiom::Homogeneity,
                k,
                elections: vec![e.clone()],
                breach: Breach::Homogeneity {
                    t,
                    outcome: base.committees().to_vec(),
                    outcome_replicated: scaled.committees().to_vec(),
                },
            }));
        }
    }
    Ok(AxiomVerdict::holds())
}

/// Constructive nonimposition search: by neutrality it suffices to realize
/// the canonical committee {0..k-1} as the unique winner. Scans anonymous
/// profiles with up to `max_voters` voters; exhaustion is inconclusive,
/// never a violation.
pub fn check_nonimposition(
    rule: Rule,
    m: usize,
    k: usize,
    max_voters: usize,
    cfg: &RuleConfig,
) -> Result<AxiomVerdict, RuleError> {
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    let target = Committee::new((0..k).collect(), m).expect("valid");
    let orders = enumerate::all_orders(m);
    for n in 1..=max_voters {
        for profile in enumerate::anonymous_profiles(m, n) {
            let e = enumerate::election_from_profile(m, &orders, &profile);
            let outcome = match evaluate(rule, &e, k, cfg) {
                Ok(o) => o,
                Err(RuleError::InvalidK { .. }) => continue,
                Err(err) => return Err(err),
            };
            if outcome.is_exactly(&target) {
                return Ok(AxiomVerdict {
                    status: VerdictStatus::Holds,
                    witness: None,
                    certificate: Some(e),
                });
            }
        }
    }
    Ok(AxiomVerdict::inconclusive())
}

/// Re-runs the rule on a witness and confirms the recorded breach still
/// holds. Tests and the table harness use this to guarantee that stored
/// counterexamples replay through the public API.
pub fn witness_replays(witness: &Witness, cfg: &RuleConfig) -> Result<bool, RuleError> {
    let verdict = match witness.axiom {
        Axiom::CommitteeMonotonicity => {
            let k = match &witness.breach {
                Breach::CommitteeMonotonicity { k, .. } => *k,
                _ => return Ok(false),
            };
            check_committee_monotonicity(witness.rule, &witness.elections[0], k..=k, cfg)?
        }
        Axiom::SolidCoalitions => {
            check_solid_coalitions(witness.rule, &witness.elections[0], witness.k, cfg)?
        }
        Axiom::ConsensusCommittee => {
            check_consensus_committee(witness.rule, &witness.elections[0], witness.k, cfg)?
        }
        Axiom::WeakUnanimity => {
            check_unanimity(witness.rule, &witness.elections[0], witness.k, false, cfg)?
        }
        Axiom::StrongUnanimity => {
            check_unanimity(witness.rule, &witness.elections[0], witness.k, true, cfg)?
        }
        Axiom::FixedMajority => {
            check_fixed_majority(witness.rule, &witness.elections[0], witness.k, cfg)?
        }
        Axiom::CandidateMonotonicity => {
            check_monotonicity(witness.rule, &witness.elections[0], witness.k, false, cfg)?
        }
        Axiom::NonCrossingMonotonicity => {
            check_monotonicity(witness.rule, &witness.elections[0], witness.k, true, cfg)?
        }
        Axiom::Consistency => check_consistency(
            witness.rule,
            &witness.elections[0],
            &witness.elections[1],
            witness.k,
            cfg,
        )?,
        Axiom::Homogeneity => {
            let t = match &witness.breach {
                Breach::Homogeneity { t, .. } => *t,
                _ => return Ok(false),
            };
            check_homogeneity(witness.rule, &witness.elections[0], witness.k, t..=t, cfg)?
        }
        Axiom::Nonimposition => return Ok(false),
    };
    Ok(verdict.status == VerdictStatus::Violated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::PreferenceOrder;

    fn election(m: usize, rankings: &[&[usize]]) -> Election {
        let votes = rankings
            .iter()
            .map(|r| PreferenceOrder::new(r.to_vec(), m).unwrap())
            .collect();
        Election::with_letter_labels(m, votes).unwrap()
    }

    fn cfg() -> RuleConfig {
        RuleConfig::default()
    }

    fn cc_profile() -> Election {
        election(4, &[&[0, 2, 1, 3], &[1, 2, 0, 3], &[0, 2, 3, 1], &[1, 2, 3, 0]])
    }

    #[test]
    fn committee_monotonicity_examples() {
        let stv24 = crate::profiles::load("committee_monotonicity_stv").unwrap();
        let verdict =
            check_committee_monotonicity(Rule::Stv, &stv24, 1..=2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        let verdict =
            check_committee_monotonicity(Rule::Sntv, &stv24, 1..=3, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);

        let verdict =
            check_committee_monotonicity(Rule::L1Cc, &cc_profile(), 1..=1, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
    }

    #[test]
    fn solid_coalitions_examples() {
        let nine = crate::profiles::load("solid_coalitions_cc_monroe").unwrap();
        let verdict = check_solid_coalitions(Rule::L1Cc, &nine, 3, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        match &verdict.witness.as_ref().unwrap().breach {
            Breach::SolidCoalitions { candidate, first_count, .. } => {
                assert_eq!(*candidate, 3);
                assert_eq!(*first_count, 3);
            }
            other => panic!("unexpected breach {other:?}"),
        }

        let verdict = check_solid_coalitions(Rule::GreedyMonroe, &nine, 3, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);

        // No candidate reaches the threshold: vacuously holds.
        let spread = election(4, &[&[0, 1, 2, 3], &[1, 2, 3, 0], &[2, 3, 0, 1], &[3, 0, 1, 2]]);
        let verdict = check_solid_coalitions(Rule::KBorda, &spread, 3, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn consensus_committee_examples() {
        let two = crate::profiles::load("consensus_committee_two_voters").unwrap();
        let verdict = check_consensus_committee(Rule::KBorda, &two, 2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let verdict = check_consensus_committee(Rule::L1Monroe, &two, 2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
        // Three first-place holders but k=2: no consensus committee.
        let none = election(3, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
        let verdict = check_consensus_committee(Rule::KBorda, &none, 2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn unanimity_examples() {
        let unanimous = election(3, &[&[0, 1, 2], &[0, 1, 2]]);
        let weak = check_unanimity(Rule::Sntv, &unanimous, 2, false, &cfg()).unwrap();
        assert_eq!(weak.status, VerdictStatus::Holds);
        let strong = check_unanimity(Rule::Sntv, &unanimous, 2, true, &cfg()).unwrap();
        assert_eq!(strong.status, VerdictStatus::Violated);

        // Shared top-2 set in different orders: STV still returns it alone.
        let shuffled = election(3, &[&[0, 1, 2], &[1, 0, 2], &[0, 1, 2], &[1, 0, 2]]);
        let strong = check_unanimity(Rule::Stv, &shuffled, 2, true, &cfg()).unwrap();
        assert_eq!(strong.status, VerdictStatus::Holds);

        // Voters disagree on the top-2 set: vacuous.
        let split = election(3, &[&[0, 1, 2], &[2, 1, 0]]);
        let verdict = check_unanimity(Rule::Sntv, &split, 2, true, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn fixed_majority_examples() {
        // Three of five voters rank {a,b} on top in some order.
        let e = election(
            4,
            &[
                &[0, 1, 2, 3],
                &[1, 0, 3, 2],
                &[0, 1, 3, 2],
                &[2, 3, 0, 1],
                &[3, 2, 1, 0],
            ],
        );
        let verdict = check_fixed_majority(Rule::Bloc, &e, 2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);

        // Majority ranks a first but a loses the Borda count.
        let e = election(3, &[&[0, 1, 2], &[0, 1, 2], &[1, 2, 0]]);
        let verdict = check_fixed_majority(Rule::KBorda, &e, 1, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        let spread = election(3, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
        let verdict = check_fixed_majority(Rule::Bloc, &spread, 1, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn monotonicity_examples() {
        let family = crate::profiles::load("noncrossing_cc_family").unwrap();
        let verdict = check_monotonicity(Rule::L1Cc, &family, 2, true, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        let eq2 = crate::profiles::load("candidate_monotonicity_lmin_monroe").unwrap();
        let verdict = check_monotonicity(Rule::LminMonroe, &eq2, 2, false, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let verdict = check_monotonicity(Rule::L1Monroe, &eq2, 2, false, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        // Committee scoring rules are candidate monotone; spot-check one.
        let verdict = check_monotonicity(Rule::L1Cc, &cc_profile(), 2, false, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn consistency_examples() {
        let e1 = crate::profiles::load("consistency_l1_monroe_e1").unwrap();
        let e2 = crate::profiles::load("consistency_l1_monroe_e2").unwrap();
        let verdict = check_consistency(Rule::L1Monroe, &e1, &e2, 2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        // Committee scoring rules are consistent.
        let verdict = check_consistency(Rule::L1Cc, &e1, &e2, 2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn homogeneity_examples() {
        let three = crate::profiles::load("homogeneity_monroe").unwrap();
        let verdict = check_homogeneity(Rule::L1Monroe, &three, 2, 2..=2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let verdict = check_homogeneity(Rule::LminMonroe, &three, 2, 2..=2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let verdict = check_homogeneity(Rule::GreedyMonroe, &three, 2, 2..=2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        let six = crate::profiles::load("homogeneity_greedy_monroe").unwrap();
        let verdict = check_homogeneity(Rule::GreedyMonroe, &six, 2, 2..=2, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);

        let verdict = check_homogeneity(Rule::KBorda, &three, 2, 2..=3, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn nonimposition_examples() {
        for rule in [Rule::KBorda, Rule::Sntv, Rule::Bloc] {
            let verdict = check_nonimposition(rule, 3, 2, 4, &cfg()).unwrap();
            assert_eq!(verdict.status, VerdictStatus::Holds, "{rule}");
            assert!(verdict.certificate.is_some());
        }
        let verdict = check_nonimposition(Rule::Bloc, 4, 2, 3, &cfg()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
    }

    #[test]
    fn every_violation_witness_replays() {
        let nine = crate::profiles::load("solid_coalitions_cc_monroe").unwrap();
        let verdict = check_solid_coalitions(Rule::L1Monroe, &nine, 3, &cfg()).unwrap();
        let witness = verdict.witness.unwrap();
        assert!(witness_replays(&witness, &cfg()).unwrap());

        let three = crate::profiles::load("homogeneity_monroe").unwrap();
        let verdict = check_homogeneity(Rule::L1Monroe, &three, 2, 2..=3, &cfg()).unwrap();
        let witness = verdict.witness.unwrap();
        assert!(witness_replays(&witness, &cfg()).unwrap());
    }
}
