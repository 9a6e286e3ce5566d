//! Greedy-CC and Greedy-Monroe as first-class rules.
//!
//! Both build the committee in k iterations with the Borda satisfaction
//! function aggregated utilitarian-style. Greedy-CC adds the candidate that
//! most increases the best-member satisfaction sum; Greedy-Monroe picks a
//! candidate together with a group of still-unassigned voters maximizing the
//! candidate's Borda score inside the group, the group sizes following the
//! ceil-then-floor schedule. Parallel-universes mode branches over every
//! tied choice; identical votes are collapsed so only materially different
//! voter groups branch.

use std::collections::{BTreeSet, HashSet};

use num_rational::Ratio;

use crate::election::{Committee, Election, RuleOutcome, Score};
use crate::rules::cc::cc_value;
use crate::rules::monroe::elect_monroe_exact;
use crate::rules::{Aggregation, RuleConfig, RuleError, TieMode};
use crate::scoring::SatisfactionFunction;

/// One committee-building iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub chosen: usize,
    /// Committee after this step, sorted by id.
    pub committee_so_far: Vec<usize>,
    /// Greedy-CC: the committee's satisfaction after the step.
    /// Greedy-Monroe: the chosen candidate's Borda score within its group.
    pub score: Score,
    /// Voters assigned this step (Greedy-Monroe only), lowest original
    /// indices taken from each collapsed vote class.
    pub assigned_voters: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    /// Dot-separated choice indices, one per iteration, for reproducibility.
    pub branch_id: String,
    pub steps: Vec<GreedyStep>,
    /// Greedy-CC: final committee satisfaction. Greedy-Monroe: the
    /// constructed assignment's total satisfaction.
    pub value: Score,
}

impl GreedyTrace {
    pub fn committee(&self, m: usize) -> Committee {
        Committee::new(
            self.steps.last().expect("non-empty trace").committee_so_far.clone(),
            m,
        )
        .expect("valid members")
    }
}

fn budget_step(explored: &mut usize, cap: usize, found: &BTreeSet<Vec<usize>>, m: usize) -> Result<(), RuleError> {
    *explored += 1;
    if *explored > cap {
        return Err(RuleError::BudgetExhausted {
            explored: *explored,
            partial: found
                .iter()
                .map(|w| Committee::new(w.clone(), m).expect("valid"))
                .collect(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Greedy-CC

/// Candidates maximizing the satisfaction of `w + {c}`, with the value.
fn cc_best_extensions(e: &Election, alpha: &SatisfactionFunction, w: &[usize]) -> (Vec<usize>, Score) {
    let m = e.num_candidates();
    let base: Vec<Score> = e
        .votes()
        .iter()
        .map(|vote| {
            vote.ranking()
                .iter()
                .position(|c| w.contains(c))
                .map(|idx| alpha.at_rank(idx + 1))
                .unwrap_or(Score::MIN)
        })
        .collect();
    let mut best = Score::MIN;
    let mut arg: Vec<usize> = Vec::new();
    for c in 0..m {
        if w.contains(&c) {
            continue;
        }
        let score: Score = e
            .votes()
            .iter()
            .zip(&base)
            .map(|(vote, &b)| b.max(alpha.at_rank(vote.position(c).expect("valid"))))
            .sum();
        if score > best {
            best = score;
            arg = vec![c];
        } else if score == best {
            arg.push(c);
        }
    }
    (arg, best)
}

/// Outcome-only evaluation with per-level deduplication of partial
/// committees (two branches meeting at the same set share their future).
pub fn greedy_cc_outcome(e: &Election, k: usize, cfg: &RuleConfig) -> Result<RuleOutcome, RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    let alpha = SatisfactionFunction::borda(m);
    let mut frontier: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    let mut explored = 0usize;
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for w in &frontier {
            budget_step(&mut explored, cfg.universe_cap, &next, m)?;
            let (arg, _) = cc_best_extensions(e, &alpha, w);
            let picks: &[usize] = match cfg.tie_mode {
                TieMode::Lexicographic => &arg[..1],
                TieMode::ParallelUniverses => &arg,
            };
            for &c in picks {
                let mut grown = w.clone();
                grown.push(c);
                grown.sort_unstable();
                next.insert(grown);
            }
        }
        frontier = next;
    }
    let committees: Vec<Committee> = frontier
        .into_iter()
        .map(|w| Committee::new(w, m).expect("valid"))
        .collect();
    Ok(RuleOutcome::new(committees, None))
}

/// Full evaluation returning every branch's trace.
pub fn greedy_cc(
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<(RuleOutcome, Vec<GreedyTrace>), RuleError> {
    let m = e.num_candidates();
    if k == 0 || k > m {
        return Err(RuleError::InvalidK { k, max: m });
    }
    let alpha = SatisfactionFunction::borda(m);
    let mut traces = Vec::new();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut explored = 0usize;

    #[allow(clippy::too_many_arguments)]
    fn go(
        e: &Election,
        alpha: &SatisfactionFunction,
        k: usize,
        cfg: &RuleConfig,
        w: Vec<usize>,
        path: Vec<GreedyStep>,
        branch: Vec<usize>,
        traces: &mut Vec<GreedyTrace>,
        found: &mut BTreeSet<Vec<usize>>,
        explored: &mut usize,
    ) -> Result<(), RuleError> {
        let m = e.num_candidates();
        if w.len() == k {
            found.insert(w);
            traces.push(GreedyTrace {
                branch_id: branch.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("."),
                value: path.last().expect("k >= 1").score,
                steps: path,
            });
            return Ok(());
        }
        budget_step(explored, cfg.universe_cap, found, m)?;
        let (arg, best) = cc_best_extensions(e, alpha, &w);
        let picks: &[usize] = match cfg.tie_mode {
            TieMode::Lexicographic => &arg[..1],
            TieMode::ParallelUniverses => &arg,
        };
        for (i, &c) in picks.iter().enumerate() {
            let mut grown = w.clone();
            grown.push(c);
            grown.sort_unstable();
            let mut steps = path.clone();
            steps.push(GreedyStep {
                chosen: c,
                committee_so_far: grown.clone(),
                score: best,
                assigned_voters: None,
            });
            let mut next_branch = branch.clone();
            next_branch.push(i);
            go(e, alpha, k, cfg, grown, steps, next_branch, traces, found, explored)?;
        }
        Ok(())
    }

    go(
        e,
        &alpha,
        k,
        cfg,
        Vec::new(),
        Vec::new(),
        Vec::new(),
        &mut traces,
        &mut found,
        &mut explored,
    )?;
    let committees: Vec<Committee> = found
        .into_iter()
        .map(|w| Committee::new(w, m).expect("valid"))
        .collect();
    Ok((RuleOutcome::new(committees, None), traces))
}

// ---------------------------------------------------------------------------
// Greedy-Monroe

#[derive(Debug, Clone, PartialEq, Eq)]
struct PoolClass {
    ranking: Vec<usize>,
    /// Original voter indices holding this ranking, ascending.
    voters: Vec<usize>,
}

fn pool_of(e: &Election) -> Vec<PoolClass> {
    let mut pool: Vec<PoolClass> = Vec::new();
    for (idx, vote) in e.votes().iter().enumerate() {
        let r = vote.ranking();
        match pool.iter_mut().find(|c| c.ranking == r) {
            Some(class) => class.voters.push(idx),
            None => pool.push(PoolClass {
                ranking: r.to_vec(),
                voters: vec![idx],
            }),
        }
    }
    pool
}

/// Group sizes: ceil(n/k) for the first n mod k iterations, floor after.
pub fn monroe_group_sizes(n: usize, k: usize) -> Vec<usize> {
    let extra = n % k;
    (0..k).map(|i| n / k + usize::from(i < extra)).collect()
}

/// The best voter group of size `g` for candidate `c`: full classes above
/// the threshold satisfaction plus `r` voters spread over the classes tied
/// at the threshold.
struct GroupPlan {
    score: Score,
    /// (class index, voters taken) for classes above the threshold.
    full: Vec<(usize, usize)>,
    /// Class indices tied at the threshold satisfaction.
    threshold_classes: Vec<usize>,
    /// Voters still to take at the threshold.
    remainder: usize,
}

fn plan_group(pool: &[PoolClass], m: usize, c: usize, g: usize) -> GroupPlan {
    let mut by_sat: Vec<(Score, usize)> = pool
        .iter()
        .enumerate()
        .map(|(idx, class)| {
            let pos = class.ranking.iter().position(|&x| x == c).expect("candidate present") + 1;
            ((m - pos) as Score, idx)
        })
        .collect();
    // Decreasing satisfaction, stable in pool order inside a level.
    by_sat.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut full = Vec::new();
    let mut score: Score = 0;
    let mut left = g;
    let mut i = 0;
    while i < by_sat.len() {
        let sat = by_sat[i].0;
        let mut level = Vec::new();
        while i < by_sat.len() && by_sat[i].0 == sat {
            level.push(by_sat[i].1);
            i += 1;
        }
        let level_total: usize = level.iter().map(|&idx| pool[idx].voters.len()).sum();
        if level_total < left {
            for &idx in &level {
                full.push((idx, pool[idx].voters.len()));
            }
            score += sat * level_total as Score;
            left -= level_total;
        } else {
            score += sat * left as Score;
            return GroupPlan {
                score,
                full,
                threshold_classes: level,
                remainder: left,
            };
        }
    }
    unreachable!("group size never exceeds the unassigned pool")
}

fn threshold_compositions(pool: &[PoolClass], classes: &[usize], r: usize) -> Vec<Vec<usize>> {
    let caps: Vec<usize> = classes.iter().map(|&idx| pool[idx].voters.len()).collect();
    let mut out = Vec::new();
    let mut current = vec![0usize; caps.len()];
    let suffix: Vec<usize> = {
        let mut s = vec![0usize; caps.len() + 1];
        for i in (0..caps.len()).rev() {
            s[i] = s[i + 1] + caps[i];
        }
        s
    };
    fn go(
        idx: usize,
        left: usize,
        caps: &[usize],
        suffix: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
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
        for d in 0..=caps[idx].min(left) {
            current[idx] = d;
            go(idx + 1, left - d, caps, suffix, current, out);
        }
        current[idx] = 0;
    }
    go(0, r, &caps, &suffix, &mut current, &mut out);
    out
}

/// Applies a step: removes the first `take` voters of each (class, take)
/// pair, returning the new pool and the taken voter indices.
fn apply_take(pool: &[PoolClass], takes: &[(usize, usize)]) -> (Vec<PoolClass>, Vec<usize>) {
    let mut taken = Vec::new();
    let mut next: Vec<PoolClass> = Vec::new();
    for (idx, class) in pool.iter().enumerate() {
        let take = takes
            .iter()
            .find(|(i, _)| *i == idx)
            .map(|&(_, t)| t)
            .unwrap_or(0);
        taken.extend_from_slice(&class.voters[..take]);
        if take < class.voters.len() {
            next.push(PoolClass {
                ranking: class.ranking.clone(),
                voters: class.voters[take..].to_vec(),
            });
        }
    }
    taken.sort_unstable();
    (next, taken)
}

struct MonroeCtx<'a> {
    k: usize,
    m: usize,
    sizes: Vec<usize>,
    cfg: &'a RuleConfig,
    explored: usize,
    found: BTreeSet<Vec<usize>>,
    traces: Option<Vec<GreedyTrace>>,
    /// Outcome-mode memo: (committee, pool as a multiset of (ranking, count)).
    seen: HashSet<(Vec<usize>, Vec<(Vec<usize>, usize)>)>,
}

impl MonroeCtx<'_> {
    fn explore(
        &mut self,
        pool: Vec<PoolClass>,
        w: Vec<usize>,
        path: Vec<GreedyStep>,
        branch: Vec<usize>,
    ) -> Result<(), RuleError> {
        if w.len() == self.k {
            debug_assert!(pool.is_empty());
            self.found.insert(w);
            if let Some(traces) = &mut self.traces {
                traces.push(GreedyTrace {
                    branch_id: branch.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("."),
                    value: path.iter().map(|s| s.score).sum(),
                    steps: path,
                });
            }
            return Ok(());
        }
        budget_step(&mut self.explored, self.cfg.universe_cap, &self.found, self.m)?;
        if self.traces.is_none() {
            let mut key_pool: Vec<(Vec<usize>, usize)> = pool
                .iter()
                .map(|c| (c.ranking.clone(), c.voters.len()))
                .collect();
            key_pool.sort();
            if !self.seen.insert((w.clone(), key_pool)) {
                return Ok(());
            }
        }

        let g = self.sizes[w.len()];
        let mut best: Score = Score::MIN;
        let mut plans: Vec<(usize, GroupPlan)> = Vec::new();
        for c in 0..self.m {
            if w.contains(&c) {
                continue;
            }
            let plan = plan_group(&pool, self.m, c, g);
            if plan.score > best {
                best = plan.score;
                plans = vec![(c, plan)];
            } else if plan.score == best {
                plans.push((c, plan));
            }
        }
        let plans: Vec<(usize, GroupPlan)> = match self.cfg.tie_mode {
            TieMode::Lexicographic => plans.into_iter().take(1).collect(),
            TieMode::ParallelUniverses => plans,
        };

        let mut choice = 0usize;
        for (c, plan) in plans {
            let compositions = match self.cfg.tie_mode {
                TieMode::Lexicographic => {
                    let mut left = plan.remainder;
                    vec![plan
                        .threshold_classes
                        .iter()
                        .map(|&idx| {
                            let take = pool[idx].voters.len().min(left);
                            left -= take;
                            take
                        })
                        .collect::<Vec<usize>>()]
                }
                TieMode::ParallelUniverses => {
                    threshold_compositions(&pool, &plan.threshold_classes, plan.remainder)
                }
            };
            for comp in compositions {
                let mut takes = plan.full.clone();
                takes.extend(
                    plan.threshold_classes
                        .iter()
                        .zip(&comp)
                        .filter(|(_, &t)| t > 0)
                        .map(|(&idx, &t)| (idx, t)),
                );
                let (next_pool, taken) = apply_take(&pool, &takes);
                let mut grown = w.clone();
                grown.push(c);
                grown.sort_unstable();
                let mut steps = path.clone();
                steps.push(GreedyStep {
                    chosen: c,
                    committee_so_far: grown.clone(),
                    score: plan.score,
                    assigned_voters: Some(taken),
                });
                let mut next_branch = branch.clone();
                next_branch.push(choice);
                choice += 1;
                self.explore(next_pool, grown, steps, next_branch)?;
            }
        }
        Ok(())
    }
}

fn run_greedy_monroe(
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
    want_traces: bool,
) -> Result<(RuleOutcome, Vec<GreedyTrace>), RuleError> {
    let m = e.num_candidates();
    let n = e.num_voters();
    if k == 0 || k > m || k > n {
        return Err(RuleError::InvalidK { k, max: m.min(n) });
    }
    let mut ctx = MonroeCtx {
        k,
        m,
        sizes: monroe_group_sizes(n, k),
        cfg,
        explored: 0,
        found: BTreeSet::new(),
        traces: want_traces.then(Vec::new),
        seen: HashSet::new(),
    };
    ctx.explore(pool_of(e), Vec::new(), Vec::new(), Vec::new())?;
    let committees: Vec<Committee> = ctx
        .found
        .iter()
        .map(|w| Committee::new(w.clone(), m).expect("valid"))
        .collect();
    Ok((
        RuleOutcome::new(committees, None),
        ctx.traces.unwrap_or_default(),
    ))
}

pub fn greedy_monroe_outcome(e: &Election, k: usize, cfg: &RuleConfig) -> Result<RuleOutcome, RuleError> {
    run_greedy_monroe(e, k, cfg, false).map(|(outcome, _)| outcome)
}

pub fn greedy_monroe(
    e: &Election,
    k: usize,
    cfg: &RuleConfig,
) -> Result<(RuleOutcome, Vec<GreedyTrace>), RuleError> {
    run_greedy_monroe(e, k, cfg, true)
}

// ---------------------------------------------------------------------------
// Approximation guarantees

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyKind {
    Cc,
    Monroe,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxReport {
    pub kind: GreedyKind,
    /// Worst value over the greedy branches.
    pub greedy_value: Score,
    pub exact_value: Score,
    pub ratio: Option<f64>,
    pub bound: f64,
    pub pass: bool,
    /// True when the bound does not apply (negative Monroe bound or a zero
    /// optimum).
    pub skipped: bool,
}

/// floor((1 - 1/e) * 10^18): a rational lower approximation of the CC
/// guarantee. Ratios here have denominators far too small to fall inside
/// the approximation gap, so the comparison is exact in practice.
const CC_BOUND_NUM: i128 = 632_120_558_828_557_678;
const CC_BOUND_DEN: i128 = 1_000_000_000_000_000_000;

pub fn harmonic(k: usize) -> Ratio<i128> {
    (1..=k as i128).map(|i| Ratio::new(1, i)).sum()
}

/// 1 - k/(2m-1) - H_k/k, the Greedy-Monroe guarantee.
pub fn monroe_bound(k: usize, m: usize) -> Ratio<i128> {
    Ratio::from_integer(1)
        - Ratio::new(k as i128, 2 * m as i128 - 1)
        - harmonic(k) / Ratio::from_integer(k as i128)
}

pub fn check_approximation(
    e: &Election,
    k: usize,
    kind: GreedyKind,
    cfg: &RuleConfig,
) -> Result<ApproxReport, RuleError> {
    let m = e.num_candidates();
    let alpha = SatisfactionFunction::borda(m);
    let (greedy_value, exact_value, bound_num, bound_den) = match kind {
        GreedyKind::Cc => {
            let outcome = greedy_cc_outcome(e, k, cfg)?;
            let greedy = outcome
                .committees()
                .iter()
                .map(|w| cc_value(e, w, &alpha, Aggregation::Utilitarian))
                .min()
                .expect("non-empty outcome");
            let exact = crate::rules::cc::elect_cc_exact(e, k, &alpha, Aggregation::Utilitarian)?
                .value()
                .expect("exact CC reports its value");
            (greedy, exact, CC_BOUND_NUM, CC_BOUND_DEN)
        }
        GreedyKind::Monroe => {
            let (_, traces) = greedy_monroe(e, k, cfg)?;
            let greedy = traces.iter().map(|t| t.value).min().expect("non-empty");
            let exact = elect_monroe_exact(e, k, &alpha, Aggregation::Utilitarian)?
                .value()
                .expect("exact Monroe reports its value");
            let bound = monroe_bound(k, m);
            (greedy, exact, *bound.numer(), *bound.denom())
        }
    };
    let bound = bound_num as f64 / bound_den as f64;
    if exact_value == 0 || bound_num < 0 {
        return Ok(ApproxReport {
            kind,
            greedy_value,
            exact_value,
            ratio: None,
            bound,
            pass: true,
            skipped: true,
        });
    }
    // ratio >= bound, cross-multiplied exactly.
    let pass = (greedy_value as i128) * bound_den >= bound_num * (exact_value as i128);
    Ok(ApproxReport {
        kind,
        greedy_value,
        exact_value,
        ratio: Some(greedy_value as f64 / exact_value as f64),
        bound,
        pass,
        skipped: false,
    })
}
