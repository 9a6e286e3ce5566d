//! Exact Monroe winner determination. Each committee is scored by its best
//! balanced assignment: every member represents between floor(n/k) and
//! ceil(n/k) voters. The utilitarian optimum is a min-cost transportation
//! problem with per-member lower bounds; the egalitarian optimum descends a
//! threshold over the satisfaction function's value set, testing feasibility
//! of the degree-constrained bipartite assignment at each level.
//!
//! `naive_optimal_assignment` enumerates every capacity-feasible assignment
//! directly and stays in-tree permanently as the test oracle for the flow
//! path.

use itertools::Itertools;

use crate::election::{Committee, Election, RuleOutcome, Score};
use crate::flow::MinCostFlow;
use crate::rules::{Aggregation, RuleError};
use crate::scoring::SatisfactionFunction;

/// A voter-to-member map together with the committee it targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    /// `rep[v]` is the candidate id representing voter `v`.
    pub rep: Vec<usize>,
    pub committee: Committee,
}

impl Assignment {
    pub fn value(&self, e: &Election, alpha: &SatisfactionFunction, mode: Aggregation) -> Score {
        let mut total = 0;
        let mut minimum = Score::MAX;
        for (voter, vote) in e.votes().iter().enumerate() {
            let sat = alpha.at_rank(vote.position(self.rep[voter]).expect("valid rep"));
            total += sat;
            minimum = minimum.min(sat);
        }
        match mode {
            Aggregation::Utilitarian => total,
            Aggregation::Egalitarian => minimum,
        }
    }

    /// Every member's load lies in the floor/ceil window.
    pub fn respects_monroe_capacities(&self) -> bool {
        let n = self.rep.len();
        let k = self.committee.size();
        let lo = n / k;
        let hi = n.div_ceil(k);
        self.committee.members().iter().all(|&w| {
            let load = self.rep.iter().filter(|&&r| r == w).count();
            lo <= load && load <= hi
        }) && self.rep.iter().all(|&r| self.committee.contains(r))
    }
}

fn check_committee(e: &Election, committee: &Committee) -> Result<(usize, usize), RuleError> {
    let n = e.num_voters();
    let k = committee.size();
    if k == 0 || k > e.num_candidates() || k > n {
        return Err(RuleError::InvalidK {
            k,
            max: e.num_candidates().min(n),
        });
    }
    Ok((n, k))
}

/// Solves the balanced-assignment transportation instance for one
/// committee, via the standard lower-bound reduction: every edge with
/// bounds [l, h] becomes one of capacity h - l, and the mandatory l units
/// are injected through a super source/sink pair; the instance is feasible
/// exactly when the super pair saturates.
///
/// `allowed` filters member/voter edges (the egalitarian threshold test);
/// `costed` attaches utilitarian costs.
fn run_transport(
    e: &Election,
    committee: &Committee,
    alpha: &SatisfactionFunction,
    allowed: impl Fn(Score) -> bool,
    costed: bool,
) -> Option<(Assignment, Score)> {
    let n = e.num_voters();
    let k = committee.size();
    let lo = (n / k) as i64;
    let hi = n.div_ceil(k) as i64;
    let top = alpha.max_value();

    // Original circulation: s -> member [lo, hi], member -> voter [0, 1]
    // (costed), voter -> t [1, 1], t -> s [0, n].
    let s = 0;
    let member = |j: usize| 1 + j;
    let voter = |i: usize| 1 + k + i;
    let t = 1 + k + n;
    let ss = t + 1;
    let tt = t + 2;
    let mut g = MinCostFlow::new(tt + 1);

    for j in 0..k {
        g.add_edge(s, member(j), hi - lo, 0);
        g.add_edge(ss, member(j), lo, 0); // member owes lo units of intake
    }
    for i in 0..n {
        g.add_edge(voter(i), tt, 1, 0); // voter owes one unit of output
    }
    g.add_edge(ss, t, n as i64, 0); // t is owed the voters' n units
    g.add_edge(s, tt, lo * k as i64, 0); // s supplied k*lo mandatory units
    g.add_edge(t, s, n as i64, 0); // close the circulation

    let mut member_voter_edges = Vec::new();
    for (j, &w) in committee.members().iter().enumerate() {
        for (i, vote) in e.votes().iter().enumerate() {
            let sat = alpha.at_rank(vote.position(w).expect("member in vote"));
            if allowed(sat) {
                let cost = if costed { top - sat } else { 0 };
                member_voter_edges.push((i, w, g.add_edge(member(j), voter(i), 1, cost)));
            }
        }
    }

    let needed = lo * k as i64 + n as i64;
    let (flow, cost) = g.run(ss, tt);
    if flow < needed {
        return None;
    }
    let mut rep = vec![usize::MAX; n];
    for &(i, w, eid) in &member_voter_edges {
        if g.flow_on(eid) == 1 {
            rep[i] = w;
        }
    }
    debug_assert!(rep.iter().all(|&r| r != usize::MAX));
    let assignment = Assignment {
        rep,
        committee: committee.clone(),
    };
    let value = if costed { top * n as i64 - cost } else { 0 };
    Some((assignment, value))
}

/// The best balanced assignment of voters to `committee` and its value.
pub fn monroe_optimal_assignment(
    e: &Election,
    committee: &Committee,
    alpha: &SatisfactionFunction,
    mode: Aggregation,
) -> Result<(Assignment, Score), RuleError> {
    check_committee(e, committee)?;
    match mode {
        Aggregation::Utilitarian => {
            let (assignment, value) = run_transport(e, committee, alpha, |_| true, true)
                .expect("utilitarian transportation is feasible when k <= n");
            Ok((assignment, value))
        }
        Aggregation::Egalitarian => {
            for theta in alpha.distinct_values_desc() {
                if let Some((assignment, _)) =
                    run_transport(e, committee, alpha, |sat| sat >= theta, false)
                {
                    return Ok((assignment, theta));
                }
            }
            unreachable!("the lowest threshold admits every edge and k <= n")
        }
    }
}

/// Reference oracle: enumerate every capacity-feasible assignment.
pub fn naive_optimal_assignment(
    e: &Election,
    committee: &Committee,
    alpha: &SatisfactionFunction,
    mode: Aggregation,
) -> Result<(Assignment, Score), RuleError> {
    let (n, k) = check_committee(e, committee)?;
    let lo = n / k;
    let hi = n.div_ceil(k);
    let members = committee.members();
    let sat: Vec<Vec<Score>> = e
        .votes()
        .iter()
        .map(|vote| {
            members
                .iter()
                .map(|&w| alpha.at_rank(vote.position(w).expect("member in vote")))
                .collect()
        })
        .collect();

    struct Search<'a> {
        sat: &'a [Vec<Score>],
        lo: usize,
        hi: usize,
        n: usize,
        k: usize,
        mode: Aggregation,
        loads: Vec<usize>,
        choice: Vec<usize>,
        best: Option<(Score, Vec<usize>)>,
    }
    impl Search<'_> {
        fn go(&mut self, voter: usize, total: Score, minimum: Score) {
            if voter == self.n {
                let value = match self.mode {
                    Aggregation::Utilitarian => total,
                    Aggregation::Egalitarian => minimum,
                };
                if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                    self.best = Some((value, self.choice.clone()));
                }
                return;
            }
            let deficit: usize = self
                .loads
                .iter()
                .map(|&l| self.lo.saturating_sub(l))
                .sum();
            if deficit > self.n - voter {
                return;
            }
            for j in 0..self.k {
                if self.loads[j] == self.hi {
                    continue;
                }
                self.loads[j] += 1;
                self.choice.push(j);
                let s = self.sat[voter][j];
                self.go(voter + 1, total + s, minimum.min(s));
                self.choice.pop();
                self.loads[j] -= 1;
            }
        }
    }
    let mut search = Search {
        sat: &sat,
        lo,
        hi,
        n,
        k,
        mode,
        loads: vec![0; k],
        choice: Vec::new(),
        best: None,
    };
    search.go(0, 0, Score::MAX);
    let (value, choice) = search.best.expect("k <= n instances are feasible");
    let rep = choice.into_iter().map(|j| members[j]).collect();
    Ok((
        Assignment {
            rep,
            committee: committee.clone(),
        },
        value,
    ))
}

/// Enumerates all k-subsets and keeps every committee whose optimal
/// balanced assignment attains the maximum value.
pub fn elect_monroe_exact(
    e: &Election,
    k: usize,
    alpha: &SatisfactionFunction,
    mode: Aggregation,
) -> Result<RuleOutcome, RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m || k > e.num_voters() {
        return Err(RuleError::InvalidK {
            k,
            max: m.min(e.num_voters()),
        });
    }
    let mut best: Option<Score> = None;
    let mut winners: Vec<Committee> = Vec::new();
    for members in (0..m).combinations(k) {
        let committee = Committee::new(members, m).expect("combinations are valid");
        let (_, value) = monroe_optimal_assignment(e, &committee, alpha, mode)?;
        match best {
            Some(b) if value < b => {}
            Some(b) if value == b => winners.push(committee),
            _ => {
                best = Some(value);
                winners = vec![committee];
            }
        }
    }
    Ok(RuleOutcome::new(winners, best))
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

    /// a>b>d>c, a>b>d>c, c>b>d>a.
    fn three_voter_profile() -> Election {
        election(4, &[&[0, 1, 3, 2], &[0, 1, 3, 2], &[2, 1, 3, 0]])
    }

    #[test]
    fn assignment_values_on_the_three_voter_profile() {
        let e = three_voter_profile();
        let alpha = SatisfactionFunction::borda(4);
        let ac = Committee::new(vec![0, 2], 4).unwrap();
        let (phi, value) =
            monroe_optimal_assignment(&e, &ac, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(value, 9);
        assert!(phi.respects_monroe_capacities());
        assert_eq!(phi.value(&e, &alpha, Aggregation::Utilitarian), 9);

        let ab = Committee::new(vec![0, 1], 4).unwrap();
        let (_, value) =
            monroe_optimal_assignment(&e, &ab, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(value, 8);

        // The naive oracle agrees.
        for committee in [&ac, &ab] {
            let (_, naive) =
                naive_optimal_assignment(&e, committee, &alpha, Aggregation::Utilitarian).unwrap();
            let (_, flow) =
                monroe_optimal_assignment(&e, committee, &alpha, Aggregation::Utilitarian).unwrap();
            assert_eq!(naive, flow);
        }
    }

    #[test]
    fn n_equals_k_forces_a_perfect_assignment() {
        let e = election(3, &[&[0, 1, 2], &[1, 0, 2], &[2, 1, 0]]);
        let alpha = SatisfactionFunction::borda(3);
        let abc = Committee::new(vec![0, 1, 2], 3).unwrap();
        let (phi, value) =
            monroe_optimal_assignment(&e, &abc, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(value, 6);
        assert_eq!(phi.rep, vec![0, 1, 2]);
    }

    #[test]
    fn three_voter_profile_winners_and_their_double() {
        let e = three_voter_profile();
        let alpha = SatisfactionFunction::borda(4);
        for mode in [Aggregation::Utilitarian, Aggregation::Egalitarian] {
            let out = elect_monroe_exact(&e, 2, &alpha, mode).unwrap();
            assert_eq!(out.committees(), &[Committee::new(vec![0, 2], 4).unwrap()]);
        }
        let doubled = e.replicate(2).unwrap();
        let out = elect_monroe_exact(&doubled, 2, &alpha, Aggregation::Utilitarian).unwrap();
        assert!(out.contains(&Committee::new(vec![0, 1], 4).unwrap()));
        let out = elect_monroe_exact(&doubled, 2, &alpha, Aggregation::Egalitarian).unwrap();
        assert!(out.contains(&Committee::new(vec![0, 1], 4).unwrap()));
    }

    #[test]
    fn egalitarian_six_voter_profile_ties_ab_and_cd() {
        // a>c>d>b, c>a>d>b, b>d>c>a, d>b>a>c, d>a>c>b, b>c>d>a.
        let e = election(
            4,
            &[
                &[0, 2, 3, 1],
                &[2, 0, 3, 1],
                &[1, 3, 2, 0],
                &[3, 1, 0, 2],
                &[3, 0, 2, 1],
                &[1, 2, 3, 0],
            ],
        );
        let alpha = SatisfactionFunction::borda(4);
        let out = elect_monroe_exact(&e, 2, &alpha, Aggregation::Egalitarian).unwrap();
        assert_eq!(
            out.committees(),
            &[
                Committee::new(vec![0, 1], 4).unwrap(),
                Committee::new(vec![2, 3], 4).unwrap()
            ]
        );
        assert_eq!(out.value(), Some(2));
    }

    #[test]
    fn unanimous_profiles_elect_the_shared_prefix() {
        let e = election(4, &[&[1, 3, 0, 2], &[1, 3, 0, 2], &[1, 3, 0, 2], &[1, 3, 0, 2]]);
        let alpha = SatisfactionFunction::borda(4);
        for mode in [Aggregation::Utilitarian, Aggregation::Egalitarian] {
            let out = elect_monroe_exact(&e, 2, &alpha, mode).unwrap();
            assert_eq!(out.committees(), &[Committee::new(vec![1, 3], 4).unwrap()]);
        }
    }

    #[test]
    fn k_larger_than_n_is_rejected() {
        let e = election(4, &[&[0, 1, 2, 3]]);
        let alpha = SatisfactionFunction::borda(4);
        assert!(matches!(
            elect_monroe_exact(&e, 2, &alpha, Aggregation::Utilitarian),
            Err(RuleError::InvalidK { .. })
        ));
    }
}
