//! Exact Chamberlin-Courant winner determination: enumerate all k-subsets
//! and keep every committee maximizing the chosen aggregate of the induced
//! best-member assignment.

use itertools::Itertools;

use crate::election::{Committee, Election, RuleOutcome, Score};
use crate::rules::{Aggregation, RuleError};
use crate::scoring::SatisfactionFunction;

/// The assignment that sends each voter to their most preferred committee
/// member.
pub fn cc_assignment(e: &Election, committee: &Committee) -> Vec<usize> {
    e.votes()
        .iter()
        .map(|vote| {
            *vote
                .ranking()
                .iter()
                .find(|c| committee.contains(**c))
                .expect("committee members appear in every vote")
        })
        .collect()
}

/// The aggregate satisfaction of the best-member assignment.
pub fn cc_value(
    e: &Election,
    committee: &Committee,
    alpha: &SatisfactionFunction,
    mode: Aggregation,
) -> Score {
    let mut total: Score = 0;
    let mut minimum = Score::MAX;
    for vote in e.votes() {
        let best_rank = vote
            .ranking()
            .iter()
            .position(|c| committee.contains(*c))
            .expect("committee members appear in every vote")
            + 1;
        let sat = alpha.at_rank(best_rank);
        total += sat;
        minimum = minimum.min(sat);
    }
    match mode {
        Aggregation::Utilitarian => total,
        Aggregation::Egalitarian => minimum,
    }
}

pub fn elect_cc_exact(
    e: &Election,
    k: usize,
    alpha: &SatisfactionFunction,
    mode: Aggregation,
) -> Result<RuleOutcome, RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    let mut best: Option<Score> = None;
    let mut winners: Vec<Committee> = Vec::new();
    for members in (0..m).combinations(k) {
        let committee = Committee::new(members, m).expect("combinations are valid committees");
        let value = cc_value(e, &committee, alpha, mode);
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

    fn cc_profile() -> Election {
        election(4, &[&[0, 2, 1, 3], &[1, 2, 0, 3], &[0, 2, 3, 1], &[1, 2, 3, 0]])
    }

    #[test]
    fn four_voter_profile_flips_from_c_to_ab() {
        let alpha = SatisfactionFunction::borda(4);
        let k1 = elect_cc_exact(&cc_profile(), 1, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(k1.committees(), &[Committee::new(vec![2], 4).unwrap()]);
        assert_eq!(k1.value(), Some(8));
        let k2 = elect_cc_exact(&cc_profile(), 2, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(k2.committees(), &[Committee::new(vec![0, 1], 4).unwrap()]);
        assert_eq!(k2.value(), Some(12));
        // The egalitarian variant agrees on this profile.
        let k1 = elect_cc_exact(&cc_profile(), 1, &alpha, Aggregation::Egalitarian).unwrap();
        assert_eq!(k1.committees(), &[Committee::new(vec![2], 4).unwrap()]);
        let k2 = elect_cc_exact(&cc_profile(), 2, &alpha, Aggregation::Egalitarian).unwrap();
        assert_eq!(k2.committees(), &[Committee::new(vec![0, 1], 4).unwrap()]);
    }

    #[test]
    fn nine_voter_profile_excludes_d() {
        let rankings: Vec<&[usize]> = vec![
            &[0, 4, 3, 5, 6, 1, 2],
            &[1, 5, 3, 4, 6, 0, 2],
            &[2, 6, 3, 4, 5, 0, 1],
            &[0, 4, 3, 5, 6, 1, 2],
            &[1, 5, 3, 4, 6, 0, 2],
            &[2, 6, 3, 4, 5, 0, 1],
            &[3, 0, 4, 5, 6, 1, 2],
            &[3, 1, 4, 5, 6, 0, 2],
            &[3, 2, 4, 5, 6, 0, 1],
        ];
        let e = election(7, &rankings);
        let alpha = SatisfactionFunction::borda(7);
        let out = elect_cc_exact(&e, 3, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(out.committees(), &[Committee::new(vec![0, 1, 2], 7).unwrap()]);
        assert_eq!(out.value(), Some(51));
        assert!(out.committees().iter().all(|w| !w.contains(3)));
        let out = elect_cc_exact(&e, 3, &alpha, Aggregation::Egalitarian).unwrap();
        assert!(out.committees().iter().all(|w| !w.contains(3)));
    }

    #[test]
    fn electing_everyone_gives_every_voter_their_favourite() {
        let e = cc_profile();
        let alpha = SatisfactionFunction::borda(4);
        let out = elect_cc_exact(&e, 4, &alpha, Aggregation::Utilitarian).unwrap();
        assert_eq!(out.committees().len(), 1);
        assert_eq!(out.value(), Some(4 * 3));
        let phi = cc_assignment(&e, &out.committees()[0]);
        assert_eq!(phi, vec![0, 1, 0, 1]);
    }
}
