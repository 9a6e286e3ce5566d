//! Elections, preference orders, committees and the profile algebra
//! (concatenation and replication) that the consistency and homogeneity
//! axioms are phrased in.

use std::fmt;

use thiserror::Error;

/// Exact score values. All built-in scoring vectors and satisfaction
/// functions are integer-valued, so plain integers give exact arithmetic;
/// rational thresholds elsewhere are compared by cross-multiplication.
pub type Score = i64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElectionError {
    #[error("unknown candidate id {0}")]
    UnknownCandidate(usize),
    #[error("candidate rosters differ")]
    RosterMismatch,
    #[error("replication factor must be at least 1")]
    ZeroReplication,
    #[error("an election needs at least one vote")]
    NoVotes,
    #[error("an election needs at least one candidate")]
    NoCandidates,
    #[error("vote is not a permutation of the candidate roster")]
    MalformedVote,
    #[error("duplicate candidate label {0:?}")]
    DuplicateLabel(String),
    #[error("committee members must be distinct, valid candidate ids")]
    MalformedCommittee,
    #[error("vote index {0} out of range")]
    VoteIndexOutOfRange(usize),
    #[error("candidate already ranked first in that vote")]
    AlreadyFirst,
}

/// A candidate: a dense id in `0..m` plus a display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub id: usize,
    pub label: String,
}

/// A strict, complete ranking of the candidates, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreferenceOrder {
    ranking: Vec<usize>,
}

impl PreferenceOrder {
    /// Builds an order over `m` candidates; `ranking` must be a permutation
    /// of `0..m`.
    pub fn new(ranking: Vec<usize>, m: usize) -> Result<Self, ElectionError> {
        if ranking.len() != m {
            return Err(ElectionError::MalformedVote);
        }
        let mut seen = vec![false; m];
        for &c in &ranking {
            if c >= m || seen[c] {
                return Err(ElectionError::MalformedVote);
            }
            seen[c] = true;
        }
        Ok(PreferenceOrder { ranking })
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn num_candidates(&self) -> usize {
        self.ranking.len()
    }

    /// 1-based position of candidate `c`, so the most preferred candidate
    /// has position 1 and the least preferred has position m.
    pub fn position(&self, c: usize) -> Result<usize, ElectionError> {
        self.ranking
            .iter()
            .position(|&x| x == c)
            .map(|i| i + 1)
            .ok_or(ElectionError::UnknownCandidate(c))
    }

    /// The candidate ranked first.
    pub fn top(&self) -> usize {
        self.ranking[0]
    }

    /// The set of the `k` most preferred candidates, sorted by id.
    pub fn top_set(&self, k: usize) -> Vec<usize> {
        let mut s: Vec<usize> = self.ranking[..k.min(self.ranking.len())].to_vec();
        s.sort_unstable();
        s
    }
}

/// An election: a candidate roster and an ordered sequence of votes.
///
/// Votes are a sequence rather than a multiset; rules that break ties by
/// voter index depend on the order. Elections are immutable after
/// construction, so they are safe to share across worker threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    candidates: Vec<Candidate>,
    votes: Vec<PreferenceOrder>,
}

impl Election {
    pub fn new(labels: Vec<String>, votes: Vec<PreferenceOrder>) -> Result<Self, ElectionError> {
        if labels.is_empty() {
            return Err(ElectionError::NoCandidates);
        }
        if votes.is_empty() {
            return Err(ElectionError::NoVotes);
        }
        let m = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(ElectionError::DuplicateLabel(l.clone()));
            }
        }
        for v in &votes {
            if v.num_candidates() != m {
                return Err(ElectionError::MalformedVote);
            }
        }
        let candidates = labels
            .into_iter()
            .enumerate()
            .map(|(id, label)| Candidate { id, label })
            .collect();
        Ok(Election { candidates, votes })
    }

    /// Convenience constructor labelling candidates `a`, `b`, `c`, ...
    pub fn with_letter_labels(m: usize, votes: Vec<PreferenceOrder>) -> Result<Self, ElectionError> {
        Election::new(letter_labels(m), votes)
    }

    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    pub fn num_voters(&self) -> usize {
        self.votes.len()
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn votes(&self) -> &[PreferenceOrder] {
        &self.votes
    }

    pub fn label(&self, id: usize) -> &str {
        &self.candidates[id].label
    }

    pub fn labels(&self) -> Vec<String> {
        self.candidates.iter().map(|c| c.label.clone()).collect()
    }

    fn same_roster(&self, other: &Election) -> bool {
        self.candidates.len() == other.candidates.len()
            && self
                .candidates
                .iter()
                .zip(&other.candidates)
                .all(|(x, y)| x.label == y.label)
    }

    /// Concatenation of two elections over identical rosters: the votes of
    /// `self` followed by the votes of `other`.
    pub fn concat(&self, other: &Election) -> Result<Election, ElectionError> {
        if !self.same_roster(other) {
            return Err(ElectionError::RosterMismatch);
        }
        let mut votes = self.votes.clone();
        votes.extend(other.votes.iter().cloned());
        Ok(Election {
            candidates: self.candidates.clone(),
            votes,
        })
    }

    /// `t` concatenated copies of this election; `replicate(e, 1) == e`.
    pub fn replicate(&self, t: usize) -> Result<Election, ElectionError> {
        if t == 0 {
            return Err(ElectionError::ZeroReplication);
        }
        let mut votes = Vec::with_capacity(self.votes.len() * t);
        for _ in 0..t {
            votes.extend(self.votes.iter().cloned());
        }
        Ok(Election {
            candidates: self.candidates.clone(),
            votes,
        })
    }

    /// The anonymized view: distinct orders with multiplicities, sorted by
    /// ranking. Search over profiles uses this to shrink its universe.
    pub fn anonymous_classes(&self) -> Vec<(PreferenceOrder, usize)> {
        let mut sorted: Vec<&PreferenceOrder> = self.votes.iter().collect();
        sorted.sort();
        let mut classes: Vec<(PreferenceOrder, usize)> = Vec::new();
        for v in sorted {
            match classes.last_mut() {
                Some((order, count)) if order == v => *count += 1,
                _ => classes.push((v.clone(), 1)),
            }
        }
        classes
    }

    /// A copy of the election in which candidate `c` moves one position
    /// forward in vote `vote_idx` (the single-step perturbation used by the
    /// monotonicity axioms).
    pub fn shift_forward(&self, vote_idx: usize, c: usize) -> Result<Election, ElectionError> {
        let vote = self
            .votes
            .get(vote_idx)
            .ok_or(ElectionError::VoteIndexOutOfRange(vote_idx))?;
        let pos = vote.position(c)?;
        if pos == 1 {
            return Err(ElectionError::AlreadyFirst);
        }
        let mut votes = self.votes.clone();
        votes[vote_idx].ranking.swap(pos - 2, pos - 1);
        Ok(Election {
            candidates: self.candidates.clone(),
            votes,
        })
    }

    pub fn format_committee(&self, committee: &Committee) -> String {
        let labels: Vec<&str> = committee.members().iter().map(|&c| self.label(c)).collect();
        format!("{{{}}}", labels.join(","))
    }

    pub fn format_outcome(&self, outcome: &RuleOutcome) -> String {
        outcome
            .committees()
            .iter()
            .map(|w| self.format_committee(w))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn letter_labels(m: usize) -> Vec<String> {
    (0..m)
        .map(|i| {
            if m <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("c{i}")
            }
        })
        .collect()
}

/// A fixed-size candidate subset, stored sorted by id so that equality and
/// ordering are structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Committee {
    members: Vec<usize>,
}

impl Committee {
    pub fn new(mut members: Vec<usize>, m: usize) -> Result<Self, ElectionError> {
        members.sort_unstable();
        let distinct = members.windows(2).all(|w| w[0] != w[1]);
        if !distinct || members.iter().any(|&c| c >= m) || members.is_empty() {
            return Err(ElectionError::MalformedCommittee);
        }
        Ok(Committee { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.members.binary_search(&c).is_ok()
    }

    pub fn is_subset_of(&self, other: &Committee) -> bool {
        self.members.iter().all(|&c| other.contains(c))
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.members
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// The canonical result of running a rule: the set of tied committees in
/// lexicographic order, plus the shared objective value when one is defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    committees: Vec<Committee>,
    value: Option<Score>,
}

impl RuleOutcome {
    pub fn new(mut committees: Vec<Committee>, value: Option<Score>) -> Self {
        committees.sort();
        committees.dedup();
        assert!(!committees.is_empty(), "a rule outcome cannot be empty");
        let k = committees[0].size();
        assert!(
            committees.iter().all(|c| c.size() == k),
            "tied committees must share one size"
        );
        RuleOutcome { committees, value }
    }

    pub fn committees(&self) -> &[Committee] {
        &self.committees
    }

    pub fn value(&self) -> Option<Score> {
        self.value
    }

    pub fn contains(&self, committee: &Committee) -> bool {
        self.committees.binary_search(committee).is_ok()
    }

    pub fn is_exactly(&self, committee: &Committee) -> bool {
        self.committees.len() == 1 && &self.committees[0] == committee
    }

    /// Committees present in both outcomes, in canonical order.
    pub fn intersect(&self, other: &RuleOutcome) -> Vec<Committee> {
        self.committees
            .iter()
            .filter(|c| other.contains(c))
            .cloned()
            .collect()
    }

    pub fn same_committees(&self, other: &RuleOutcome) -> bool {
        self.committees == other.committees
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(ranking: &[usize], m: usize) -> PreferenceOrder {
        PreferenceOrder::new(ranking.to_vec(), m).unwrap()
    }

    fn election(m: usize, rankings: &[&[usize]]) -> Election {
        let votes = rankings.iter().map(|r| order(r, m)).collect();
        Election::with_letter_labels(m, votes).unwrap()
    }

    #[test]
    fn position_reads_off_the_permutation() {
        // a>c>b>d
        let v = order(&[0, 2, 1, 3], 4);
        assert_eq!(v.position(2).unwrap(), 2);
        assert_eq!(v.position(0).unwrap(), 1);
        // d>c>b>a
        let w = order(&[3, 2, 1, 0], 4);
        assert_eq!(w.position(0).unwrap(), 4);
        assert_eq!(v.position(7), Err(ElectionError::UnknownCandidate(7)));
    }

    #[test]
    fn malformed_votes_are_rejected() {
        assert!(PreferenceOrder::new(vec![0, 1, 0], 3).is_err());
        assert!(PreferenceOrder::new(vec![0, 1], 3).is_err());
        assert!(PreferenceOrder::new(vec![0, 1, 3], 3).is_err());
    }

    #[test]
    fn concat_appends_votes_and_keeps_roster() {
        let e1 = election(5, &[&[0, 2, 3, 4, 1], &[0, 2, 3, 4, 1], &[0, 2, 3, 4, 1], &[1, 4, 2, 3, 0]]);
        let e2 = election(5, &[&[0, 1, 2, 3, 4], &[0, 1, 2, 3, 4], &[2, 3, 1, 4, 0], &[1, 2, 3, 4, 0]]);
        let joint = e1.concat(&e2).unwrap();
        assert_eq!(joint.num_voters(), 8);
        assert_eq!(joint.num_candidates(), 5);
        assert_eq!(joint.votes()[..4], e1.votes()[..]);
        assert_eq!(joint.votes()[4..], e2.votes()[..]);
    }

    #[test]
    fn concat_requires_identical_rosters() {
        let e1 = election(3, &[&[0, 1, 2]]);
        let e2 = election(4, &[&[0, 1, 2, 3]]);
        assert_eq!(e1.concat(&e2), Err(ElectionError::RosterMismatch));
        let renamed = Election::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![order(&[0, 1, 2], 3)],
        )
        .unwrap();
        assert_eq!(e1.concat(&renamed), Err(ElectionError::RosterMismatch));
    }

    #[test]
    fn concat_with_self_is_replicate_two() {
        let e = election(3, &[&[0, 1, 2], &[2, 0, 1]]);
        assert_eq!(e.concat(&e).unwrap(), e.replicate(2).unwrap());
    }

    #[test]
    fn replicate_is_identity_at_one_and_scales_votes() {
        let e = election(4, &[&[0, 1, 3, 2], &[0, 1, 3, 2], &[2, 1, 3, 0]]);
        assert_eq!(e.replicate(1).unwrap(), e);
        for t in 1..=3 {
            assert_eq!(e.replicate(t).unwrap().num_voters(), t * e.num_voters());
        }
        assert_eq!(e.replicate(0), Err(ElectionError::ZeroReplication));
    }

    #[test]
    fn empty_elections_are_rejected() {
        assert_eq!(
            Election::with_letter_labels(3, vec![]),
            Err(ElectionError::NoVotes)
        );
        assert_eq!(
            Election::new(vec![], vec![]),
            Err(ElectionError::NoCandidates)
        );
    }

    #[test]
    fn committees_are_canonical() {
        let c = Committee::new(vec![3, 0], 4).unwrap();
        assert_eq!(c.members(), &[0, 3]);
        assert!(Committee::new(vec![1, 1], 4).is_err());
        assert!(Committee::new(vec![4], 4).is_err());
        assert!(c.contains(3));
        assert!(!c.contains(1));
    }

    #[test]
    fn outcome_orders_committees() {
        let a = Committee::new(vec![1, 2], 3).unwrap();
        let b = Committee::new(vec![0, 2], 3).unwrap();
        let o = RuleOutcome::new(vec![a.clone(), b.clone(), a.clone()], Some(7));
        assert_eq!(o.committees(), &[b, a]);
        assert_eq!(o.value(), Some(7));
    }

    #[test]
    fn shift_forward_swaps_adjacent_positions() {
        let e = election(4, &[&[3, 1, 0, 2]]);
        let shifted = e.shift_forward(0, 0).unwrap();
        assert_eq!(shifted.votes()[0].ranking(), &[3, 0, 1, 2]);
        assert_eq!(e.shift_forward(0, 3), Err(ElectionError::AlreadyFirst));
        assert_eq!(
            e.shift_forward(5, 0),
            Err(ElectionError::VoteIndexOutOfRange(5))
        );
    }

    #[test]
    fn anonymous_classes_group_identical_votes() {
        let e = election(3, &[&[0, 1, 2], &[2, 0, 1], &[0, 1, 2]]);
        let classes = e.anonymous_classes();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].1, 2);
        assert_eq!(classes[1].1, 1);
    }
}
