//! SNTV, Bloc and k-Borda: the k candidates with the highest plurality,
//! k-approval and Borda scores respectively, with boundary ties expanded
//! into all reachable committees.

use crate::election::{Election, RuleOutcome};
use crate::rules::RuleError;
use crate::scoring::{best_k_committees, s_scores, ScoreVector, ScoredRanking};

fn elect_by_vector(e: &Election, s: ScoreVector, k: usize) -> Result<RuleOutcome, RuleError> {
    let scores = s_scores(e, &s)?;
    Ok(best_k_committees(&ScoredRanking::new(scores), k)?)
}

pub fn elect_sntv(e: &Election, k: usize) -> Result<RuleOutcome, RuleError> {
    elect_by_vector(e, ScoreVector::plurality(e.num_candidates()), k)
}

pub fn elect_bloc(e: &Election, k: usize) -> Result<RuleOutcome, RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    elect_by_vector(e, ScoreVector::t_approval(k, m), k)
}

pub fn elect_kborda(e: &Election, k: usize) -> Result<RuleOutcome, RuleError> {
    elect_by_vector(e, ScoreVector::borda(e.num_candidates()), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{Committee, PreferenceOrder};

    fn election(m: usize, rankings: &[&[usize]]) -> Election {
        let votes = rankings
            .iter()
            .map(|r| PreferenceOrder::new(r.to_vec(), m).unwrap())
            .collect();
        Election::with_letter_labels(m, votes).unwrap()
    }

    #[test]
    fn bloc_on_the_four_vote_profile() {
        // a>b>c, b>c>a, a>c>b, c>b>a
        let e = election(3, &[&[0, 1, 2], &[1, 2, 0], &[0, 2, 1], &[2, 1, 0]]);
        let k1 = elect_bloc(&e, 1).unwrap();
        assert_eq!(k1.committees(), &[Committee::new(vec![0], 3).unwrap()]);
        let k2 = elect_bloc(&e, 2).unwrap();
        assert_eq!(k2.committees(), &[Committee::new(vec![1, 2], 3).unwrap()]);
    }

    #[test]
    fn sntv_on_a_unanimous_profile_keeps_the_shared_top() {
        let e = election(3, &[&[1, 0, 2], &[1, 0, 2], &[1, 0, 2]]);
        let out = elect_sntv(&e, 2).unwrap();
        assert_eq!(out.committees().len(), 2);
        assert!(out.committees().iter().all(|w| w.contains(1)));
    }

    #[test]
    fn kborda_on_the_consensus_profile_includes_c() {
        // b>c>d>a, a>c>d>b: Borda c:4, a:3, b:3, d:2.
        let e = election(4, &[&[1, 2, 3, 0], &[0, 2, 3, 1]]);
        let out = elect_kborda(&e, 2).unwrap();
        assert_eq!(
            out.committees(),
            &[
                Committee::new(vec![0, 2], 4).unwrap(),
                Committee::new(vec![1, 2], 4).unwrap()
            ]
        );
    }

    #[test]
    fn k_out_of_range_is_rejected() {
        let e = election(3, &[&[0, 1, 2]]);
        assert!(elect_sntv(&e, 0).is_err());
        assert!(elect_bloc(&e, 4).is_err());
    }
}
