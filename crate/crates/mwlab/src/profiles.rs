//! The shipped witness corpus: the counterexample profiles used by the
//! regression suite and the verification table, embedded from `profiles/`
//! at the repository root so the binary works from any directory.

use crate::election::Election;
use crate::format::parse_election;

macro_rules! corpus {
    ($(($name:literal, $file:literal)),* $(,)?) => {
        /// (name, file text) pairs, in corpus order.
        pub const CORPUS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../../profiles/", $file)))),*
        ];
    };
}

corpus![
    ("committee_monotonicity_cc_monroe", "committee_monotonicity_cc_monroe.elect"),
    ("committee_monotonicity_bloc", "committee_monotonicity_bloc.elect"),
    ("committee_monotonicity_stv", "committee_monotonicity_stv.elect"),
    ("solid_coalitions_cc_monroe", "solid_coalitions_cc_monroe.elect"),
    ("consensus_committee_two_voters", "consensus_committee_two_voters.elect"),
    ("noncrossing_cc_family", "noncrossing_cc_family.elect"),
    ("noncrossing_lmin_cc", "noncrossing_lmin_cc.elect"),
    ("candidate_monotonicity_lmin_monroe", "candidate_monotonicity_lmin_monroe.elect"),
    ("candidate_monotonicity_greedy_monroe", "candidate_monotonicity_greedy_monroe.elect"),
    ("candidate_monotonicity_greedy_cc", "candidate_monotonicity_greedy_cc.elect"),
    ("consistency_l1_monroe_e1", "consistency_l1_monroe_e1.elect"),
    ("consistency_l1_monroe_e2", "consistency_l1_monroe_e2.elect"),
    ("consistency_greedy_monroe_e1", "consistency_greedy_monroe_e1.elect"),
    ("consistency_greedy_monroe_e2", "consistency_greedy_monroe_e2.elect"),
    ("consistency_greedy_cc_e1", "consistency_greedy_cc_e1.elect"),
    ("consistency_greedy_cc_e2", "consistency_greedy_cc_e2.elect"),
    ("homogeneity_monroe", "homogeneity_monroe.elect"),
    ("homogeneity_greedy_monroe", "homogeneity_greedy_monroe.elect"),
    ("unanimity_strong_violation", "unanimity_strong_violation.elect"),
    ("stv_monotonicity", "stv_monotonicity.elect"),
    ("stv_consistency_e1", "stv_consistency_e1.elect"),
    ("stv_consistency_e2", "stv_consistency_e2.elect"),
];

pub fn text(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Option<Election> {
    text(name).map(|t| parse_election(t).expect("shipped profiles parse"))
}

pub fn names() -> Vec<&'static str> {
    CORPUS.iter().map(|(n, _)| *n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shipped_profile_parses() {
        for (name, text) in CORPUS {
            let e = parse_election(text);
            assert!(e.is_ok(), "{name} failed to parse: {e:?}");
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(load("committee_monotonicity_stv").is_some());
        assert!(load("does_not_exist").is_none());
        let e = load("committee_monotonicity_stv").unwrap();
        assert_eq!(e.num_voters(), 24);
    }
}
