//! Command-line front end: parse elections, run any rule, run any axiom
//! check or search, and regenerate the verification table.
//!
//! Exit codes: 0 success/holds, 1 violated (or table mismatch), 2 parse
//! errors, 3 tie-breaking budget exhausted or inconclusive, 64 invalid
//! flags.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mwlab::axioms::checks::{self, Axiom, AxiomVerdict, Breach, VerdictStatus, Witness};
use mwlab::axioms::search::{search_counterexample, SearchBounds, SearchMode};
use mwlab::axioms::table::{verify_table, CellStatus, Column, TableBounds};
use mwlab::election::{Committee, Election, RuleOutcome};
use mwlab::format::{parse_election, serialize_election};
use mwlab::rules::greedy;
use mwlab::rules::stv::{stv_rounds_lexicographic, StvRound};
use mwlab::{evaluate, Rule, RuleConfig, RuleError, TieMode};

const SCHEMA: &str = "mwlab.v1";

const EXIT_OK: u8 = 0;
const EXIT_VIOLATED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "mwlab", version, about = "Multiwinner election rules and axiom laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TieModeArg {
    #[value(name = "parallel-universes", alias = "put")]
    ParallelUniverses,
    #[value(name = "lexicographic", alias = "lex")]
    Lexicographic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Structured,
}

#[derive(Args)]
struct RunOpts {
    /// Tie handling inside STV and the greedy rules.
    #[arg(long = "tie-breaking", value_enum, default_value = "parallel-universes")]
    tie_breaking: TieModeArg,
    /// Bound on explored tie-breaking branches.
    #[arg(long = "universe-cap", default_value_t = 1_000_000)]
    universe_cap: usize,
    /// Output format.
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

impl RunOpts {
    fn config(&self) -> RuleConfig {
        RuleConfig {
            tie_mode: match self.tie_breaking {
                TieModeArg::ParallelUniverses => TieMode::ParallelUniverses,
                TieModeArg::Lexicographic => TieMode::Lexicographic,
            },
            universe_cap: self.universe_cap,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a rule on an election file and print the winning committees.
    Elect {
        #[arg(long)]
        rule: String,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Print a rule's tie-resolution trace on an election file.
    Trace {
        #[arg(long)]
        rule: String,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Check one axiom for one rule on a given election.
    Check {
        #[arg(long)]
        axiom: String,
        #[arg(long)]
        rule: String,
        #[arg(short)]
        k: Option<usize>,
        /// Election file (not needed for nonimposition).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Second election file (consistency only).
        #[arg(long)]
        input2: Option<PathBuf>,
        /// Replication factor for homogeneity (default: check t=2 and t=3).
        #[arg(long)]
        t: Option<usize>,
        /// Candidate count for nonimposition.
        #[arg(long)]
        m: Option<usize>,
        /// Voter bound for the nonimposition construction.
        #[arg(long, default_value_t = 6)]
        max_voters: usize,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Search for an axiom counterexample over bounded profiles.
    Search {
        #[arg(long)]
        axiom: String,
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 4)]
        max_candidates: usize,
        #[arg(long, default_value_t = 5)]
        max_voters: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Sample impartial-culture profiles instead of exhaustive search.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random profiles to draw.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Verify the full rule-by-axiom table at the given bounds.
    Table {
        #[arg(long, default_value_t = 4)]
        max_candidates: usize,
        #[arg(long, default_value_t = 5)]
        max_voters: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Check a single rule's row.
        #[arg(long)]
        only_rule: Option<String>,
        /// Check a single cell, written rule:column.
        #[arg(long)]
        only_cell: Option<String>,
        /// Directory for witness files backing failing cells.
        #[arg(long, default_value = "table-witnesses")]
        witness_dir: PathBuf,
        #[command(flatten)]
        run: RunOpts,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let benign = matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = err.print();
            return ExitCode::from(if benign { EXIT_OK } else { EXIT_USAGE });
        }
    };
    let code = match cli.command {
        Command::Elect { rule, k, input, run } => cmd_elect(&rule, k, &input, &run),
        Command::Trace { rule, k, input, run } => cmd_trace(&rule, k, &input, &run),
        Command::Check {
            axiom,
            rule,
            k,
            input,
            input2,
            t,
            m,
            max_voters,
            run,
        } => cmd_check(&axiom, &rule, k, input, input2, t, m, max_voters, &run),
        Command::Search {
            axiom,
            rule,
            max_candidates,
            max_voters,
            max_k,
            random,
            seed,
            budget,
            run,
        } => cmd_search(
            &axiom,
            &rule,
            max_candidates,
            max_voters,
            max_k,
            random,
            seed,
            budget,
            &run,
        ),
        Command::Table {
            max_candidates,
            max_voters,
            max_k,
            only_rule,
            only_cell,
            witness_dir,
            run,
        } => cmd_table(
            max_candidates,
            max_voters,
            max_k,
            only_rule,
            only_cell,
            &witness_dir,
            &run,
        ),
    };
    ExitCode::from(code)
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn parse_rule(name: &str) -> Result<Rule, u8> {
    Rule::parse(name).ok_or_else(|| {
        usage_error(&format!(
            "unknown rule {name:?}; expected one of {}",
            Rule::ALL.map(|r| r.name()).join(", ")
        ))
    })
}

fn parse_axiom(name: &str) -> Result<Axiom, u8> {
    Axiom::parse(name).ok_or_else(|| {
        usage_error(&format!(
            "unknown axiom {name:?}; expected one of {}",
            Axiom::ALL.map(|a| a.name()).join(", ")
        ))
    })
}

fn load_election(path: &PathBuf) -> Result<Election, u8> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", path.display());
            return Err(EXIT_PARSE);
        }
    };
    parse_election(&text).map_err(|err| {
        eprintln!("error: {}: {err}", path.display());
        EXIT_PARSE
    })
}

fn rule_error(err: RuleError) -> u8 {
    match err {
        RuleError::BudgetExhausted { explored, partial } => {
            eprintln!("error: tie-breaking budget exhausted after {explored} branches");
            for committee in partial {
                eprintln!("partial: {committee}");
            }
            EXIT_BUDGET
        }
        other => usage_error(&other.to_string()),
    }
}

fn committee_labels(e: &Election, committee: &Committee) -> Vec<String> {
    committee.members().iter().map(|&c| e.label(c).to_string()).collect()
}

fn print_outcome(e: &Election, outcome: &RuleOutcome, rule: Rule, k: usize, format: Format) {
    match format {
        Format::Plain => {
            for committee in outcome.committees() {
                println!("{}", e.format_committee(committee));
            }
            if let Some(value) = outcome.value() {
                println!("value: {value}");
            }
        }
        Format::Structured => {
            let out = std::io::stdout();
            let mut lock = out.lock();
            for committee in outcome.committees() {
                let record = serde_json::json!({
                    "schema": SCHEMA,
                    "verb": "elect",
                    "rule": rule.name(),
                    "k": k,
                    "committee": committee_labels(e, committee),
                    "value": outcome.value(),
                });
                writeln!(lock, "{record}").expect("stdout");
            }
        }
    }
}

fn cmd_elect(rule: &str, k: usize, input: &PathBuf, run: &RunOpts) -> u8 {
    let rule = match parse_rule(rule) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let e = match load_election(input) {
        Ok(e) => e,
        Err(code) => return code,
    };
    match evaluate(rule, &e, k, &run.config()) {
        Ok(outcome) => {
            print_outcome(&e, &outcome, rule, k, run.format);
            EXIT_OK
        }
        Err(err) => rule_error(err),
    }
}

fn cmd_trace(rule: &str, k: usize, input: &PathBuf, run: &RunOpts) -> u8 {
    let rule = match parse_rule(rule) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let e = match load_election(input) {
        Ok(e) => e,
        Err(code) => return code,
    };
    let cfg = run.config();
    match rule {
        Rule::GreedyCc | Rule::GreedyMonroe => {
            let result = if rule == Rule::GreedyCc {
                greedy::greedy_cc(&e, k, &cfg)
            } else {
                greedy::greedy_monroe(&e, k, &cfg)
            };
            let (outcome, traces) = match result {
                Ok(pair) => pair,
                Err(err) => return rule_error(err),
            };
            for trace in &traces {
                println!("branch {}", trace.branch_id);
                for (i, step) in trace.steps.iter().enumerate() {
                    let committee =
                        Committee::new(step.committee_so_far.clone(), e.num_candidates())
                            .expect("valid");
                    let mut line = format!(
                        "  step {}: pick {} -> {} (score {})",
                        i + 1,
                        e.label(step.chosen),
                        e.format_committee(&committee),
                        step.score
                    );
                    if let Some(voters) = &step.assigned_voters {
                        let ids: Vec<String> = voters.iter().map(|v| v.to_string()).collect();
                        line.push_str(&format!(" voters [{}]", ids.join(",")));
                    }
                    println!("{line}");
                }
                println!("  value: {}", trace.value);
            }
            println!("committees:");
            for committee in outcome.committees() {
                println!("  {}", e.format_committee(committee));
            }
            EXIT_OK
        }
        Rule::Stv => match stv_rounds_lexicographic(&e, k) {
            Ok((committee, rounds)) => {
                for (i, round) in rounds.iter().enumerate() {
                    let text = match round {
                        StvRound::Elected { candidate, plurality, deleted } => format!(
                            "elect {} (plurality {plurality} >= quota), delete {deleted} votes",
                            e.label(*candidate)
                        ),
                        StvRound::Eliminated { candidate, plurality } => {
                            format!("eliminate {} (plurality {plurality})", e.label(*candidate))
                        }
                        StvRound::SeatedRemaining { candidates } => {
                            let names: Vec<&str> = candidates.iter().map(|&c| e.label(c)).collect();
                            format!("seat remaining {}", names.join(","))
                        }
                    };
                    println!("round {}: {text}", i + 1);
                }
                println!("committee: {}", e.format_committee(&committee));
                EXIT_OK
            }
            Err(err) => rule_error(err),
        },
        _ => usage_error("trace supports greedy-cc, greedy-monroe and stv (lexicographic rounds)"),
    }
}

fn witness_text(witness: &Witness) -> String {
    let mut out = String::new();
    for (i, e) in witness.elections.iter().enumerate() {
        if witness.elections.len() > 1 {
            out.push_str(&format!("# election {}\n", i + 1));
        }
        out.push_str(&serialize_election(e));
    }
    out.push_str(&format!(
        "# breach: rule={} axiom={} k={}\n",
        witness.rule, witness.axiom, witness.k
    ));
    let e = &witness.elections[0];
    let fmt_committees = |list: &Vec<Committee>| {
        list.iter().map(|c| e.format_committee(c)).collect::<Vec<_>>().join(" ")
    };
    let detail = match &witness.breach {
        Breach::CommitteeMonotonicity { k, committee, grow, outcome_k, outcome_k1 } => format!(
            "committee {} at k={} has no {} counterpart; R(E,{k})={} R(E,{})={}",
            e.format_committee(committee),
            if *grow { *k } else { k + 1 },
            if *grow { "superset" } else { "subset" },
            fmt_committees(outcome_k),
            k + 1,
            fmt_committees(outcome_k1),
        ),
        Breach::SolidCoalitions { candidate, first_count, excluded_from } => format!(
            "candidate {} ranked first by {first_count} voters is missing from {}",
            e.label(*candidate),
            e.format_committee(excluded_from)
        ),
        Breach::ConsensusCommittee { expected, outcome } => format!(
            "consensus committee {} but outcome {}",
            e.format_committee(expected),
            fmt_committees(outcome)
        ),
        Breach::Unanimity { strong, top_set, outcome } => format!(
            "{} unanimity: shared top set {} but outcome {}",
            if *strong { "strong" } else { "weak" },
            e.format_committee(top_set),
            fmt_committees(outcome)
        ),
        Breach::FixedMajority { majority_set, supporters, outcome } => format!(
            "{} voters rank {} wholly on top but outcome {}",
            supporters,
            e.format_committee(majority_set),
            fmt_committees(outcome)
        ),
        Breach::Monotonicity {
            non_crossing,
            committee,
            candidate,
            vote_index,
            outcome_after,
            ..
        } => format!(
            "shift {} forward in vote {}: {} {}; outcome after {}",
            e.label(*candidate),
            vote_index,
            e.format_committee(committee),
            if *non_crossing { "stops winning" } else { "loses its member everywhere" },
            fmt_committees(outcome_after)
        ),
        Breach::Consistency { outcome_first, outcome_second, outcome_joint } => format!(
            "R(E1)={} R(E2)={} but R(E1+E2)={}",
            fmt_committees(outcome_first),
            fmt_committees(outcome_second),
            fmt_committees(outcome_joint)
        ),
        Breach::Homogeneity { t, outcome, outcome_replicated } => format!(
            "R(E)={} but R({t}E)={}",
            fmt_committees(outcome),
            fmt_committees(outcome_replicated)
        ),
    };
    out.push_str(&format!("# {detail}\n"));
    out
}

fn print_verdict(
    verdict: &AxiomVerdict,
    rule: Rule,
    axiom: Axiom,
    k: Option<usize>,
    format: Format,
) -> u8 {
    match format {
        Format::Plain => {
            println!("{}", verdict.status.name());
            if let Some(w) = &verdict.witness {
                print!("{}", witness_text(w));
            }
            if let Some(e) = &verdict.certificate {
                println!("# realizing profile");
                print!("{}", serialize_election(e));
            }
        }
        Format::Structured => {
            let record = serde_json::json!({
                "schema": SCHEMA,
                "verb": "check",
                "rule": rule.name(),
                "axiom": axiom.name(),
                "k": verdict.witness.as_ref().map(|w| w.k).or(k),
                "verdict": verdict.status.name(),
                "witness": verdict.witness.as_ref().map(witness_text),
                "certificate": verdict.certificate.as_ref().map(serialize_election),
            });
            println!("{record}");
        }
    }
    match verdict.status {
        VerdictStatus::Holds => EXIT_OK,
        VerdictStatus::Violated => EXIT_VIOLATED,
        VerdictStatus::Inconclusive => EXIT_BUDGET,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    axiom: &str,
    rule: &str,
    k: Option<usize>,
    input: Option<PathBuf>,
    input2: Option<PathBuf>,
    t: Option<usize>,
    m: Option<usize>,
    max_voters: usize,
    run: &RunOpts,
) -> u8 {
    let rule = match parse_rule(rule) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let axiom = match parse_axiom(axiom) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let cfg = run.config();

    if axiom == Axiom::Nonimposition {
        let Some(m) = m else {
            return usage_error("nonimposition needs --m");
        };
        let Some(k) = k else {
            return usage_error("nonimposition needs -k");
        };
        return match checks::check_nonimposition(rule, m, k, max_voters, &cfg) {
            Ok(v) => print_verdict(&v, rule, axiom, Some(k), run.format),
            Err(err) => rule_error(err),
        };
    }

    let e = match input {
        Some(path) => match load_election(&path) {
            Ok(e) => e,
            Err(code) => return code,
        },
        None => return usage_error("this axiom needs --input"),
    };

    let verdict = match axiom {
        Axiom::CommitteeMonotonicity => {
            let range = match k {
                Some(k) => k..=k,
                None => 1..=e.num_candidates().saturating_sub(1),
            };
            checks::check_committee_monotonicity(rule, &e, range, &cfg)
        }
        Axiom::Consistency => {
            let Some(path2) = input2 else {
                return usage_error("consistency needs --input2");
            };
            let e2 = match load_election(&path2) {
                Ok(e2) => e2,
                Err(code) => return code,
            };
            let Some(k) = k else {
                return usage_error("consistency needs -k");
            };
            checks::check_consistency(rule, &e, &e2, k, &cfg)
        }
        Axiom::Homogeneity => {
            let Some(k) = k else {
                return usage_error("homogeneity needs -k");
            };
            let range = match t {
                Some(t) if t >= 2 => t..=t,
                Some(_) => return usage_error("--t must be at least 2"),
                None => 2..=3,
            };
            checks::check_homogeneity(rule, &e, k, range, &cfg)
        }
        other => {
            let Some(k) = k else {
                return usage_error("this axiom needs -k");
            };
            match other {
                Axiom::SolidCoalitions => checks::check_solid_coalitions(rule, &e, k, &cfg),
                Axiom::ConsensusCommittee => checks::check_consensus_committee(rule, &e, k, &cfg),
                Axiom::WeakUnanimity => checks::check_unanimity(rule, &e, k, false, &cfg),
                Axiom::StrongUnanimity => checks::check_unanimity(rule, &e, k, true, &cfg),
                Axiom::FixedMajority => checks::check_fixed_majority(rule, &e, k, &cfg),
                Axiom::CandidateMonotonicity => checks::check_monotonicity(rule, &e, k, false, &cfg),
                Axiom::NonCrossingMonotonicity => checks::check_monotonicity(rule, &e, k, true, &cfg),
                _ => unreachable!("handled above"),
            }
        }
    };
    match verdict {
        Ok(v) => print_verdict(&v, rule, axiom, k, run.format),
        Err(err) => rule_error(err),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    axiom: &str,
    rule: &str,
    max_candidates: usize,
    max_voters: usize,
    max_k: usize,
    random: bool,
    seed: u64,
    budget: usize,
    run: &RunOpts,
) -> u8 {
    let rule = match parse_rule(rule) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let axiom = match parse_axiom(axiom) {
        Ok(a) => a,
        Err(code) => return code,
    };
    if axiom == Axiom::Nonimposition {
        return usage_error("use `check --axiom nonimposition` for the constructive search");
    }
    let bounds = SearchBounds {
        max_candidates,
        max_voters,
        max_k,
        mode: if random {
            SearchMode::Random { seed, budget }
        } else {
            SearchMode::ExhaustiveAnonymous
        },
    };
    let verdict = search_counterexample(rule, axiom, &bounds, &run.config());
    print_verdict(&verdict, rule, axiom, None, run.format)
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    max_candidates: usize,
    max_voters: usize,
    max_k: usize,
    only_rule: Option<String>,
    only_cell: Option<String>,
    witness_dir: &PathBuf,
    run: &RunOpts,
) -> u8 {
    let bounds = TableBounds {
        max_candidates,
        max_voters,
        max_k,
    };
    let only_rule = match only_rule {
        Some(name) => match parse_rule(&name) {
            Ok(r) => Some(r),
            Err(code) => return code,
        },
        None => None,
    };
    let only_cell = match only_cell {
        Some(spec) => {
            let Some((rule_name, column_name)) = spec.split_once(':') else {
                return usage_error("--only-cell expects rule:column");
            };
            let rule = match parse_rule(rule_name) {
                Ok(r) => r,
                Err(code) => return code,
            };
            let Some(column) = Column::parse(column_name) else {
                return usage_error(&format!(
                    "unknown column {column_name:?}; expected one of {}",
                    Column::ALL.map(|c| c.name()).join(", ")
                ));
            };
            Some((rule, column))
        }
        None => None,
    };
    let report = verify_table(&bounds, only_rule, only_cell, &run.config());

    let mut witness_lines = Vec::new();
    for cell in &report.cells {
        for (role, source, witness) in &cell.witnesses {
            let file = format!(
                "{}__{}__{}.elect",
                cell.rule.name().replace('-', "_"),
                cell.column.name().replace('-', "_"),
                role.replace('-', "_")
            );
            let path = witness_dir.join(&file);
            if std::fs::create_dir_all(witness_dir).is_ok() {
                let _ = std::fs::write(&path, witness_text(witness));
            }
            witness_lines.push(format!(
                "{} {} [{}] {} ({})",
                cell.rule.name(),
                cell.column.name(),
                role,
                path.display(),
                source
            ));
        }
    }

    match run.format {
        Format::Plain => {
            print!("{}", report.render());
            let (pass, fail, skip) = report.counts();
            println!("cells: {pass} consistent, {fail} mismatched, {skip} skipped");
            if !witness_lines.is_empty() {
                println!("witnesses:");
                for line in witness_lines {
                    println!("  {line}");
                }
            }
        }
        Format::Structured => {
            for cell in &report.cells {
                let record = serde_json::json!({
                    "schema": SCHEMA,
                    "verb": "table",
                    "rule": cell.rule.name(),
                    "column": cell.column.name(),
                    "expected": mwlab::axioms::table::expected_label(cell.expected),
                    "status": match cell.status {
                        CellStatus::Pass => "pass",
                        CellStatus::Fail => "fail",
                        CellStatus::Skip => "skip",
                    },
                    "detail": cell.detail,
                });
                println!("{record}");
            }
        }
    }
    if report.all_consistent() {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    }
}
