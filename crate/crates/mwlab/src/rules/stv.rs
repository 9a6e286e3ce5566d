//! Single Transferable Vote as a multistage procedure under
//! parallel-universes tie-breaking.
//!
//! The Droop quota q = floor(n/(k+1)) + 1 is computed once from the original
//! number of votes and held fixed. While the committee is incomplete: if
//! some candidate's plurality score reaches q it is elected, q votes ranking
//! it first are deleted and the candidate is erased from the remaining
//! votes; otherwise a lowest-plurality candidate is eliminated. When as many
//! candidates remain as seats, all of them are seated.
//!
//! Parallel-universes mode branches on (i) which quota-meeting candidate is
//! elected, (ii) which q supporting votes are deleted, and (iii) which tied
//! lowest candidate is eliminated. Identical votes are collapsed into
//! counted classes, so deletion choices branch only across classes whose
//! suffixes below the winner actually differ. Lexicographic mode takes the
//! smallest candidate id and deletes supporters in first-appearance order.

use std::collections::{BTreeSet, HashSet};

use crate::election::{Committee, Election, RuleOutcome};
use crate::rules::{RuleError, TieMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StvConfig {
    pub tie_mode: TieMode,
    pub universe_cap: usize,
}

impl Default for StvConfig {
    fn default() -> Self {
        StvConfig {
            tie_mode: TieMode::ParallelUniverses,
            universe_cap: 1_000_000,
        }
    }
}

pub fn droop_quota(n: usize, k: usize) -> u32 {
    (n / (k + 1) + 1) as u32
}

type Classes = Vec<(Vec<usize>, u32)>;

fn classes_of(e: &Election) -> Classes {
    let mut classes: Classes = Vec::new();
    for vote in e.votes() {
        let r = vote.ranking().to_vec();
        match classes.iter_mut().find(|(x, _)| *x == r) {
            Some((_, count)) => *count += 1,
            None => classes.push((r, 1)),
        }
    }
    classes
}

fn remove_candidate(classes: &Classes, c: usize) -> Classes {
    let mut out: Classes = Vec::new();
    for (ranking, count) in classes {
        let r: Vec<usize> = ranking.iter().copied().filter(|&x| x != c).collect();
        if r.is_empty() {
            continue;
        }
        match out.iter_mut().find(|(x, _)| *x == r) {
            Some((_, total)) => *total += count,
            None => out.push((r, *count)),
        }
    }
    out
}

/// All ways to pick `total` deletions across classes with the given caps.
fn compositions(total: u32, caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; caps.len()];
    let suffix: Vec<u32> = {
        let mut s = vec![0u32; caps.len() + 1];
        for i in (0..caps.len()).rev() {
            s[i] = s[i + 1] + caps[i];
        }
        s
    };
    fn go(
        idx: usize,
        left: u32,
        caps: &[u32],
        suffix: &[u32],
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == caps.len() {
            if left == 0 {
                out.push(current.clone());
            }
            return;
        }
        if suffix[idx] < left {
            return;
        }
        let hi = caps[idx].min(left);
        for d in 0..=hi {
            current[idx] = d;
            go(idx + 1, left - d, caps, suffix, current, out);
        }
        current[idx] = 0;
    }
    go(0, total, caps, &suffix, &mut current, &mut out);
    out
}

struct Ctx {
    q: u32,
    k: usize,
    m: usize,
    tie_mode: TieMode,
    cap: usize,
    explored: usize,
    found: BTreeSet<Vec<usize>>,
    seen: HashSet<(Vec<usize>, Classes)>,
}

impl Ctx {
    fn explore(
        &mut self,
        classes: Classes,
        remaining: Vec<usize>,
        elected: Vec<usize>,
    ) -> Result<(), RuleError> {
        self.explored += 1;
        if self.explored > self.cap {
            return Err(RuleError::BudgetExhausted {
                explored: self.explored,
                partial: self.found_committees(),
            });
        }
        if elected.len() == self.k {
            self.found.insert(elected);
            return Ok(());
        }
        if elected.len() + remaining.len() <= self.k {
            let mut full = elected;
            full.extend(remaining);
            full.sort_unstable();
            self.found.insert(full);
            return Ok(());
        }
        let key = {
            let mut sorted = classes.clone();
            sorted.sort();
            (elected.clone(), sorted)
        };
        if !self.seen.insert(key) {
            return Ok(());
        }

        let mut plurality = vec![0u32; remaining.iter().copied().max().unwrap() + 1];
        for (ranking, count) in &classes {
            plurality[ranking[0]] += count;
        }
        let meets_quota: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&c| plurality[c] >= self.q)
            .collect();

        if !meets_quota.is_empty() {
            let winners: Vec<usize> = match self.tie_mode {
                TieMode::Lexicographic => vec![meets_quota[0]],
                TieMode::ParallelUniverses => meets_quota,
            };
            for c in winners {
                let supporter_idx: Vec<usize> = classes
                    .iter()
                    .enumerate()
                    .filter(|(_, (r, _))| r[0] == c)
                    .map(|(i, _)| i)
                    .collect();
                let caps: Vec<u32> = supporter_idx.iter().map(|&i| classes[i].1).collect();
                let deletions: Vec<Vec<u32>> = match self.tie_mode {
                    TieMode::Lexicographic => {
                        let mut left = self.q;
                        let d = caps
                            .iter()
                            .map(|&cap| {
                                let take = cap.min(left);
                                left -= take;
                                take
                            })
                            .collect();
                        vec![d]
                    }
                    TieMode::ParallelUniverses => compositions(self.q, &caps),
                };
                for deletion in deletions {
                    let mut next = classes.clone();
                    for (&idx, &d) in supporter_idx.iter().zip(&deletion) {
                        next[idx].1 -= d;
                    }
                    next.retain(|(_, count)| *count > 0);
                    let next = remove_candidate(&next, c);
                    let next_remaining: Vec<usize> =
                        remaining.iter().copied().filter(|&x| x != c).collect();
                    let mut next_elected = elected.clone();
                    next_elected.push(c);
                    next_elected.sort_unstable();
                    self.explore(next, next_remaining, next_elected)?;
                }
            }
        } else {
            let lowest = remaining
                .iter()
                .map(|&c| plurality[c])
                .min()
                .expect("remaining is non-empty");
            let tied: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&c| plurality[c] == lowest)
                .collect();
            let targets: Vec<usize> = match self.tie_mode {
                TieMode::Lexicographic => vec![tied[0]],
                TieMode::ParallelUniverses => tied,
            };
            for c in targets {
                let next = remove_candidate(&classes, c);
                let next_remaining: Vec<usize> =
                    remaining.iter().copied().filter(|&x| x != c).collect();
                self.explore(next, next_remaining, elected.clone())?;
            }
        }
        Ok(())
    }

    fn found_committees(&self) -> Vec<Committee> {
        self.found
            .iter()
            .map(|members| Committee::new(members.clone(), self.m).expect("valid members"))
            .collect()
    }
}

pub fn elect_stv(e: &Election, k: usize, cfg: &StvConfig) -> Result<RuleOutcome, RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    let mut ctx = Ctx {
        q: droop_quota(e.num_voters(), k),
        k,
        m,
        tie_mode: cfg.tie_mode,
        cap: cfg.universe_cap,
        explored: 0,
        found: BTreeSet::new(),
        seen: HashSet::new(),
    };
    ctx.explore(classes_of(e), (0..m).collect(), Vec::new())?;
    Ok(RuleOutcome::new(ctx.found_committees(), None))
}

/// One resolved round of the deterministic (lexicographic) procedure,
/// recorded for trace output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StvRound {
    Elected {
        candidate: usize,
        plurality: u32,
        deleted: u32,
    },
    Eliminated {
        candidate: usize,
        plurality: u32,
    },
    SeatedRemaining {
        candidates: Vec<usize>,
    },
}

/// Runs STV in lexicographic mode, returning the committee and the round log.
pub fn stv_rounds_lexicographic(
    e: &Election,
    k: usize,
) -> Result<(Committee, Vec<StvRound>), RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    let q = droop_quota(e.num_voters(), k);
    let mut classes = classes_of(e);
    let mut remaining: Vec<usize> = (0..m).collect();
    let mut elected: Vec<usize> = Vec::new();
    let mut rounds = Vec::new();

    while elected.len() < k {
        if elected.len() + remaining.len() <= k {
            rounds.push(StvRound::SeatedRemaining {
                candidates: remaining.clone(),
            });
            elected.extend(remaining.drain(..));
            break;
        }
        let mut plurality = vec![0u32; m];
        for (ranking, count) in &classes {
            plurality[ranking[0]] += count;
        }
        if let Some(&c) = remaining.iter().find(|&&c| plurality[c] >= q) {
            let mut left = q;
            for (ranking, count) in classes.iter_mut() {
                if ranking[0] == c {
                    let take = (*count).min(left);
                    *count -= take;
                    left -= take;
                    if left == 0 {
                        break;
                    }
                }
            }
            classes.retain(|(_, count)| *count > 0);
            classes = remove_candidate(&classes, c);
            remaining.retain(|&x| x != c);
            rounds.push(StvRound::Elected {
                candidate: c,
                plurality: plurality[c],
                deleted: q,
            });
            elected.push(c);
        } else {
            let lowest = remaining.iter().map(|&c| plurality[c]).min().unwrap();
            let c = remaining
                .iter()
                .copied()
                .find(|&c| plurality[c] == lowest)
                .unwrap();
            classes = remove_candidate(&classes, c);
            remaining.retain(|&x| x != c);
            rounds.push(StvRound::Eliminated {
                candidate: c,
                plurality: lowest,
            });
        }
    }
    elected.sort_unstable();
    Ok((Committee::new(elected, m).expect("valid"), rounds))
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

    fn stv_24() -> Election {
        let mut rankings: Vec<&[usize]> = Vec::new();
        rankings.extend(std::iter::repeat(&[0usize, 1, 2, 3][..]).take(11));
        rankings.extend(std::iter::repeat(&[1usize, 2, 0, 3][..]).take(3));
        rankings.extend(std::iter::repeat(&[2usize, 3, 0, 1][..]).take(4));
        rankings.extend(std::iter::repeat(&[3usize, 2, 0, 1][..]).take(6));
        election(4, &rankings)
    }

    #[test]
    fn twenty_four_voter_profile_under_both_modes() {
        let e = stv_24();
        for mode in [TieMode::ParallelUniverses, TieMode::Lexicographic] {
            let cfg = StvConfig {
                tie_mode: mode,
                ..StvConfig::default()
            };
            let k1 = elect_stv(&e, 1, &cfg).unwrap();
            assert_eq!(k1.committees(), &[Committee::new(vec![2], 4).unwrap()]);
            let k2 = elect_stv(&e, 2, &cfg).unwrap();
            assert_eq!(k2.committees(), &[Committee::new(vec![0, 3], 4).unwrap()]);
        }
    }

    #[test]
    fn unanimous_first_choice_meets_quota_immediately() {
        let e = election(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        let out = elect_stv(&e, 1, &StvConfig::default()).unwrap();
        assert_eq!(out.committees(), &[Committee::new(vec![0], 3).unwrap()]);
    }

    #[test]
    fn budget_exhaustion_reports_partial_results() {
        let e = stv_24();
        let cfg = StvConfig {
            tie_mode: TieMode::ParallelUniverses,
            universe_cap: 1,
        };
        match elect_stv(&e, 2, &cfg) {
            Err(RuleError::BudgetExhausted { explored, .. }) => assert!(explored > 0),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn round_log_matches_the_worked_trace() {
        let (committee, rounds) = stv_rounds_lexicographic(&stv_24(), 2).unwrap();
        assert_eq!(committee.members(), &[0, 3]);
        assert_eq!(
            rounds,
            vec![
                StvRound::Elected { candidate: 0, plurality: 11, deleted: 9 },
                StvRound::Eliminated { candidate: 2, plurality: 4 },
                StvRound::Elected { candidate: 3, plurality: 10, deleted: 9 },
            ]
        );
    }

    #[test]
    fn compositions_cover_all_splits() {
        let all = compositions(2, &[1, 2, 1]);
        assert_eq!(all.len(), 4);
        assert!(all.contains(&vec![1, 1, 0]));
        assert!(all.contains(&vec![0, 2, 0]));
        assert!(all.contains(&vec![0, 1, 1]));
        assert!(all.contains(&vec![1, 0, 1]));
    }
}
