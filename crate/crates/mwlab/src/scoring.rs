//! Single-winner s-scores, committee scoring functions over sorted position
//! vectors, and best-k committee extraction from a score-induced social
//! preference with ties.

use thiserror::Error;

use crate::election::{Committee, Election, PreferenceOrder, RuleOutcome, Score};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScoringError {
    #[error("score vector has length {got}, election has {want} candidates")]
    LengthMismatch { got: usize, want: usize },
    #[error("score values must be non-increasing and nonnegative")]
    NotNonIncreasing,
    #[error("committee size k={k} out of range 1..={m}")]
    InvalidK { k: usize, m: usize },
    #[error("committee scoring function expects sorted positions for m={m}, k={k}")]
    BadPositionVector { m: usize, k: usize },
}

fn check_non_increasing(values: &[Score]) -> Result<(), ScoringError> {
    let ok = values.windows(2).all(|w| w[0] >= w[1]) && values.last().is_none_or(|&v| v >= 0);
    if ok && !values.is_empty() {
        Ok(())
    } else {
        Err(ScoringError::NotNonIncreasing)
    }
}

/// A non-increasing score vector `(s_1, ..., s_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector {
    values: Vec<Score>,
}

impl ScoreVector {
    pub fn new(values: Vec<Score>) -> Result<Self, ScoringError> {
        check_non_increasing(&values)?;
        Ok(ScoreVector { values })
    }

    /// `(1, 0, ..., 0)`.
    pub fn plurality(m: usize) -> Self {
        let mut values = vec![0; m];
        values[0] = 1;
        ScoreVector { values }
    }

    /// `t` ones followed by zeros.
    pub fn t_approval(t: usize, m: usize) -> Self {
        let values = (0..m).map(|i| if i < t { 1 } else { 0 }).collect();
        ScoreVector { values }
    }

    /// `(m-1, m-2, ..., 0)`.
    pub fn borda(m: usize) -> Self {
        let values = (0..m).map(|i| (m - 1 - i) as Score).collect();
        ScoreVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Score for 1-based rank `i`.
    pub fn at_rank(&self, i: usize) -> Score {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[Score] {
        &self.values
    }
}

/// A satisfaction function: a non-increasing map from a representative's
/// 1-based rank to the represented voter's satisfaction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatisfactionFunction {
    values: Vec<Score>,
}

impl SatisfactionFunction {
    /// Borda satisfaction for `m` candidates: rank i gives m - i.
    pub fn borda(m: usize) -> Self {
        SatisfactionFunction {
            values: (1..=m).map(|i| (m - i) as Score).collect(),
        }
    }

    /// 1 for the top `t` ranks, 0 below.
    pub fn t_approval(t: usize, m: usize) -> Self {
        SatisfactionFunction {
            values: (1..=m).map(|i| if i <= t { 1 } else { 0 }).collect(),
        }
    }

    pub fn from_table(values: Vec<Score>) -> Result<Self, ScoringError> {
        check_non_increasing(&values)?;
        Ok(SatisfactionFunction { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Satisfaction at 1-based rank `i`.
    pub fn at_rank(&self, i: usize) -> Score {
        self.values[i - 1]
    }

    pub fn max_value(&self) -> Score {
        self.values[0]
    }

    /// Distinct values in decreasing order, used by the egalitarian
    /// threshold search.
    pub fn distinct_values_desc(&self) -> Vec<Score> {
        let mut v = self.values.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        v
    }
}

/// The s-score of every candidate: `sc_s(a) = sum_i s_{pos_{v_i}(a)}`.
pub fn s_scores(e: &Election, s: &ScoreVector) -> Result<Vec<Score>, ScoringError> {
    if s.len() != e.num_candidates() {
        return Err(ScoringError::LengthMismatch {
            got: s.len(),
            want: e.num_candidates(),
        });
    }
    let mut scores = vec![0; e.num_candidates()];
    for vote in e.votes() {
        for (idx, &c) in vote.ranking().iter().enumerate() {
            scores[c] += s.at_rank(idx + 1);
        }
    }
    Ok(scores)
}

/// Per-candidate scores inducing a social preference with ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredRanking {
    scores: Vec<Score>,
}

impl ScoredRanking {
    pub fn new(scores: Vec<Score>) -> Self {
        assert!(!scores.is_empty());
        ScoredRanking { scores }
    }

    pub fn scores(&self) -> &[Score] {
        &self.scores
    }

    /// Candidates grouped by equal score, classes in decreasing score order;
    /// ids ascending inside a class.
    pub fn tie_classes(&self) -> Vec<Vec<usize>> {
        let mut by_score: Vec<(Score, usize)> =
            self.scores.iter().cloned().zip(0..).collect();
        by_score.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut classes: Vec<(Score, Vec<usize>)> = Vec::new();
        for (score, id) in by_score {
            match classes.last_mut() {
                Some((s, ids)) if *s == score => ids.push(id),
                _ => classes.push((score, vec![id])),
            }
        }
        classes.into_iter().map(|(_, ids)| ids).collect()
    }
}

/// All size-`k` committees whose minimum inside score is at least the
/// maximum outside score: exactly the committees reachable by tie-breaking
/// some linear extension of the score order (parallel-universes semantics).
///
/// The reported value is the sum of the members' scores, which every tied
/// committee shares.
pub fn best_k_committees(ranking: &ScoredRanking, k: usize) -> Result<RuleOutcome, ScoringError> {
    let m = ranking.scores.len();
    if k == 0 || k > m {
        return Err(ScoringError::InvalidK { k, m });
    }
    let mut sorted: Vec<(Score, usize)> = ranking.scores.iter().cloned().zip(0..).collect();
    sorted.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let threshold = sorted[k - 1].0;
    let forced: Vec<usize> = sorted
        .iter()
        .filter(|&&(s, _)| s > threshold)
        .map(|&(_, id)| id)
        .collect();
    let boundary: Vec<usize> = {
        let mut b: Vec<usize> = sorted
            .iter()
            .filter(|&&(s, _)| s == threshold)
            .map(|&(_, id)| id)
            .collect();
        b.sort_unstable();
        b
    };
    let seats = k - forced.len();
    let value: Score =
        forced.iter().map(|&c| ranking.scores[c]).sum::<Score>() + threshold * seats as Score;

    use itertools::Itertools;
    let committees: Vec<Committee> = boundary
        .iter()
        .cloned()
        .combinations(seats)
        .map(|fill| {
            let mut members = forced.clone();
            members.extend(fill);
            Committee::new(members, m).expect("forced and boundary ids are valid")
        })
        .collect();
    Ok(RuleOutcome::new(committees, Some(value)))
}

/// Structure classes for committee scoring functions.
#[derive(Debug, Clone, PartialEq, Eq)]
enum CsfKind {
    /// `f(i_1..i_k) = gamma(i_1) + ... + gamma(i_k)` with gamma independent
    /// of k.
    Separable { gamma: Vec<Score> },
    /// Sum of a k-dependent per-rank vector (Bloc's k-approval family).
    WeaklySeparable { alpha: Vec<Score> },
    /// `f(i_1..i_k) = gamma(i_1)`: only the best position counts.
    RepresentationFocused { gamma: Vec<Score> },
}

/// A committee scoring function for fixed `m` and `k`, evaluated on strictly
/// increasing position vectors. Dominance (componentwise smaller positions
/// never score worse) holds for every shipped constructor because the
/// underlying per-rank vectors are non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommitteeScoringFunction {
    m: usize,
    k: usize,
    kind: CsfKind,
}

impl CommitteeScoringFunction {
    pub fn sntv(m: usize, k: usize) -> Result<Self, ScoringError> {
        Self::separable(ScoreVector::plurality(m), m, k)
    }

    pub fn bloc(m: usize, k: usize) -> Result<Self, ScoringError> {
        if k == 0 || k > m {
            return Err(ScoringError::InvalidK { k, m });
        }
        Ok(CommitteeScoringFunction {
            m,
            k,
            kind: CsfKind::WeaklySeparable {
                alpha: ScoreVector::t_approval(k, m).values().to_vec(),
            },
        })
    }

    pub fn k_borda(m: usize, k: usize) -> Result<Self, ScoringError> {
        Self::separable(ScoreVector::borda(m), m, k)
    }

    /// The representation-focused function with beta(i) = m - i.
    pub fn cc_borda(m: usize, k: usize) -> Result<Self, ScoringError> {
        Self::representation_focused(ScoreVector::borda(m), m, k)
    }

    pub fn separable(gamma: ScoreVector, m: usize, k: usize) -> Result<Self, ScoringError> {
        if k == 0 || k > m {
            return Err(ScoringError::InvalidK { k, m });
        }
        if gamma.len() != m {
            return Err(ScoringError::LengthMismatch { got: gamma.len(), want: m });
        }
        Ok(CommitteeScoringFunction {
            m,
            k,
            kind: CsfKind::Separable { gamma: gamma.values().to_vec() },
        })
    }

    pub fn representation_focused(
        gamma: ScoreVector,
        m: usize,
        k: usize,
    ) -> Result<Self, ScoringError> {
        if k == 0 || k > m {
            return Err(ScoringError::InvalidK { k, m });
        }
        if gamma.len() != m {
            return Err(ScoringError::LengthMismatch { got: gamma.len(), want: m });
        }
        Ok(CommitteeScoringFunction {
            m,
            k,
            kind: CsfKind::RepresentationFocused { gamma: gamma.values().to_vec() },
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// True when the function decomposes with a k-independent gamma.
    pub fn is_separable(&self) -> bool {
        matches!(self.kind, CsfKind::Separable { .. })
    }

    /// Evaluates `f` on a strictly increasing vector of 1-based positions.
    pub fn eval(&self, positions: &[usize]) -> Result<Score, ScoringError> {
        let strictly_increasing = positions.windows(2).all(|w| w[0] < w[1]);
        if positions.len() != self.k
            || !strictly_increasing
            || positions.iter().any(|&p| p == 0 || p > self.m)
        {
            return Err(ScoringError::BadPositionVector { m: self.m, k: self.k });
        }
        Ok(match &self.kind {
            CsfKind::Separable { gamma } | CsfKind::WeaklySeparable { alpha: gamma } => {
                positions.iter().map(|&p| gamma[p - 1]).sum()
            }
            CsfKind::RepresentationFocused { gamma } => gamma[positions[0] - 1],
        })
    }
}

/// Sorted 1-based positions of the committee members in one vote.
pub fn committee_positions(vote: &PreferenceOrder, committee: &Committee) -> Vec<usize> {
    let mut positions: Vec<usize> = vote
        .ranking()
        .iter()
        .enumerate()
        .filter(|(_, c)| committee.contains(**c))
        .map(|(idx, _)| idx + 1)
        .collect();
    positions.sort_unstable();
    positions
}

/// The committee's total score: `sum_v f(pos_v(S))`.
pub fn committee_score(
    e: &Election,
    committee: &Committee,
    f: &CommitteeScoringFunction,
) -> Result<Score, ScoringError> {
    if f.m() != e.num_candidates() || f.k() != committee.size() {
        return Err(ScoringError::BadPositionVector { m: f.m(), k: f.k() });
    }
    let mut total = 0;
    for vote in e.votes() {
        total += f.eval(&committee_positions(vote, committee))?;
    }
    Ok(total)
}

/// Evaluates a separable committee scoring rule through its score vector:
/// the best-k committees of the induced s-score ranking.
pub fn evaluate_separable_as_best_k(
    e: &Election,
    gamma: &ScoreVector,
    k: usize,
) -> Result<RuleOutcome, ScoringError> {
    let scores = s_scores(e, gamma)?;
    best_k_committees(&ScoredRanking::new(scores), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::Election;

    fn order(ranking: &[usize], m: usize) -> PreferenceOrder {
        PreferenceOrder::new(ranking.to_vec(), m).unwrap()
    }

    fn election(m: usize, rankings: &[&[usize]]) -> Election {
        Election::with_letter_labels(m, rankings.iter().map(|r| order(r, m)).collect()).unwrap()
    }

    /// a>b>c>d x11, b>c>a>d x3, c>d>a>b x4, d>c>a>b x6.
    fn stv_24() -> Election {
        let mut rankings: Vec<&[usize]> = Vec::new();
        rankings.extend(std::iter::repeat(&[0usize, 1, 2, 3][..]).take(11));
        rankings.extend(std::iter::repeat(&[1usize, 2, 0, 3][..]).take(3));
        rankings.extend(std::iter::repeat(&[2usize, 3, 0, 1][..]).take(4));
        rankings.extend(std::iter::repeat(&[3usize, 2, 0, 1][..]).take(6));
        election(4, &rankings)
    }

    /// a>c>b>d, b>c>a>d, a>c>d>b, b>c>d>a.
    fn cc_profile() -> Election {
        election(4, &[&[0, 2, 1, 3], &[1, 2, 0, 3], &[0, 2, 3, 1], &[1, 2, 3, 0]])
    }

    #[test]
    fn plurality_scores_of_the_stv_profile() {
        let scores = s_scores(&stv_24(), &ScoreVector::plurality(4)).unwrap();
        assert_eq!(scores, vec![11, 3, 4, 6]);
    }

    #[test]
    fn borda_scores_of_the_cc_profile() {
        // Frozen from independent summation of m - pos over the four votes.
        let scores = s_scores(&cc_profile(), &ScoreVector::borda(4)).unwrap();
        assert_eq!(scores, vec![7, 7, 8, 2]);
    }

    #[test]
    fn zero_vector_scores_zero() {
        let zeros = ScoreVector::new(vec![0, 0, 0, 0]).unwrap();
        assert_eq!(s_scores(&cc_profile(), &zeros).unwrap(), vec![0; 4]);
        assert!(s_scores(&cc_profile(), &ScoreVector::plurality(3)).is_err());
    }

    #[test]
    fn committee_positions_read_off() {
        let v = order(&[0, 2, 1, 3], 4); // a>c>b>d
        let bd = Committee::new(vec![1, 3], 4).unwrap();
        assert_eq!(committee_positions(&v, &bd), vec![3, 4]);
        let all = Committee::new(vec![0, 1, 2, 3], 4).unwrap();
        assert_eq!(committee_positions(&v, &all), vec![1, 2, 3, 4]);
        let w = order(&[1, 2, 3, 0], 4); // b>c>d>a
        let ab = Committee::new(vec![0, 1], 4).unwrap();
        assert_eq!(committee_positions(&w, &ab), vec![1, 4]);
    }

    #[test]
    fn representation_focused_score_of_the_nine_voter_profile() {
        // a>e>d>f>g>b>c etc; committee {a,b,c} satisfies 9*7 - 12 = 51.
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
        let f = CommitteeScoringFunction::cc_borda(7, 3).unwrap();
        let abc = Committee::new(vec![0, 1, 2], 7).unwrap();
        assert_eq!(committee_score(&e, &abc, &f).unwrap(), 51);
    }

    #[test]
    fn cc_score_of_the_four_voter_profile() {
        // Every voter's best member of {a,b} sits at position 1.
        let f = CommitteeScoringFunction::cc_borda(4, 2).unwrap();
        let ab = Committee::new(vec![0, 1], 4).unwrap();
        assert_eq!(committee_score(&cc_profile(), &ab, &f).unwrap(), 12);
    }

    #[test]
    fn full_committee_scores_the_forced_sum() {
        let e = election(4, &[&[2, 0, 3, 1]]);
        let f = CommitteeScoringFunction::k_borda(4, 4).unwrap();
        let all = Committee::new(vec![0, 1, 2, 3], 4).unwrap();
        assert_eq!(committee_score(&e, &all, &f).unwrap(), 3 + 2 + 1);
    }

    #[test]
    fn best_k_handles_boundary_ties() {
        let r = ScoredRanking::new(vec![3, 3, 4]);
        let out = best_k_committees(&r, 2).unwrap();
        let ac = Committee::new(vec![0, 2], 3).unwrap();
        let bc = Committee::new(vec![1, 2], 3).unwrap();
        assert_eq!(out.committees(), &[ac, bc]);
        assert_eq!(out.value(), Some(7));
    }

    #[test]
    fn best_k_total_tie_and_no_tie() {
        let tied = best_k_committees(&ScoredRanking::new(vec![2, 2, 2]), 1).unwrap();
        assert_eq!(tied.committees().len(), 3);
        let strict = best_k_committees(&ScoredRanking::new(vec![5, 4, 3]), 2).unwrap();
        assert_eq!(strict.committees().len(), 1);
        assert_eq!(strict.committees()[0].members(), &[0, 1]);
        assert!(best_k_committees(&ScoredRanking::new(vec![1, 1]), 3).is_err());
    }

    #[test]
    fn separable_evaluation_matches_the_worked_examples() {
        // SNTV on the 24-voter profile at k=2: plurality 11,3,4,6 -> {a,d}.
        let out = evaluate_separable_as_best_k(&stv_24(), &ScoreVector::plurality(4), 2).unwrap();
        assert_eq!(out.committees().len(), 1);
        assert_eq!(out.committees()[0].members(), &[0, 3]);

        // k-Borda on b>c>d>a, a>c>d>b at k=2: Borda c:4, a:3, b:3, d:2.
        let e = election(4, &[&[1, 2, 3, 0], &[0, 2, 3, 1]]);
        let out = evaluate_separable_as_best_k(&e, &ScoreVector::borda(4), 2).unwrap();
        let ac = Committee::new(vec![0, 2], 4).unwrap();
        let bc = Committee::new(vec![1, 2], 4).unwrap();
        assert_eq!(out.committees(), &[ac, bc]);

        // k = m elects everyone.
        let out = evaluate_separable_as_best_k(&e, &ScoreVector::borda(4), 4).unwrap();
        assert_eq!(out.committees().len(), 1);
        assert_eq!(out.committees()[0].members(), &[0, 1, 2, 3]);
    }

    #[test]
    fn s_scores_add_over_concat() {
        let e1 = cc_profile();
        let e2 = election(4, &[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        let joint = e1.concat(&e2).unwrap();
        let s = ScoreVector::borda(4);
        let sum: Vec<_> = s_scores(&e1, &s)
            .unwrap()
            .iter()
            .zip(s_scores(&e2, &s).unwrap())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(s_scores(&joint, &s).unwrap(), sum);
    }

    #[test]
    fn committee_score_is_linear_under_replicate() {
        let e = cc_profile();
        let f = CommitteeScoringFunction::bloc(4, 2).unwrap();
        let ab = Committee::new(vec![0, 1], 4).unwrap();
        let base = committee_score(&e, &ab, &f).unwrap();
        for t in 1..=3 {
            let te = e.replicate(t).unwrap();
            assert_eq!(committee_score(&te, &ab, &f).unwrap(), base * t as Score);
        }
    }

    #[test]
    fn eval_rejects_bad_position_vectors() {
        let f = CommitteeScoringFunction::k_borda(4, 2).unwrap();
        assert!(f.eval(&[2, 2]).is_err());
        assert!(f.eval(&[3, 2]).is_err());
        assert!(f.eval(&[0, 1]).is_err());
        assert!(f.eval(&[1, 2, 3]).is_err());
        assert!(f.eval(&[1, 5]).is_err());
    }
}
