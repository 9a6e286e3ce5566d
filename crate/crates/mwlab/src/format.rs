//! The line-oriented election file format.
//!
//! ```text
//! # optional comments
//! candidates: a,b,c,d
//! vote: a > c > b > d
//! 3 * vote: b > c > a > d
//! ```
//!
//! Labels are non-empty and may not contain `,`, `>`, `#` or whitespace.
//! Multiplicity lines expand in place; serialization always writes one
//! `vote:` line per voter, candidates in id order.

use std::fmt;

use crate::election::{Election, PreferenceOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .chars()
            .all(|c| !c.is_whitespace() && c != ',' && c != '>' && c != '#')
}

pub fn parse_election(text: &str) -> Result<Election, ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut votes: Vec<PreferenceOrder> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("candidates:") {
            if labels.is_some() {
                return err(lineno, "duplicate candidates line");
            }
            let mut parsed = Vec::new();
            for part in rest.split(',') {
                let label = part.trim();
                if !valid_label(label) {
                    return err(lineno, format!("invalid candidate label {label:?}"));
                }
                if parsed.iter().any(|l: &String| l == label) {
                    return err(lineno, format!("duplicate candidate label {label:?}"));
                }
                parsed.push(label.to_string());
            }
            if parsed.is_empty() {
                return err(lineno, "empty candidate list");
            }
            labels = Some(parsed);
            continue;
        }

        // A vote line, optionally prefixed with "<count> *".
        let labels = match &labels {
            Some(l) => l,
            None => return err(lineno, "vote line before candidates line"),
        };
        let (count, body) = match line.split_once('*') {
            Some((lhs, rhs)) if lhs.trim().chars().all(|c| c.is_ascii_digit()) && !lhs.trim().is_empty() => {
                let count: usize = match lhs.trim().parse() {
                    Ok(c) => c,
                    Err(_) => return err(lineno, "invalid multiplicity"),
                };
                if count == 0 {
                    return err(lineno, "multiplicity must be positive");
                }
                (count, rhs.trim())
            }
            _ => (1, line),
        };
        let body = match body.strip_prefix("vote:") {
            Some(b) => b,
            None => return err(lineno, format!("expected a vote line, found {line:?}")),
        };
        let mut ranking = Vec::new();
        for part in body.split('>') {
            let label = part.trim();
            let id = match labels.iter().position(|l| l == label) {
                Some(id) => id,
                None => return err(lineno, format!("unknown candidate label {label:?}")),
            };
            if ranking.contains(&id) {
                return err(lineno, format!("duplicate candidate {label:?} in vote"));
            }
            ranking.push(id);
        }
        if ranking.len() != labels.len() {
            return err(
                lineno,
                format!(
                    "vote ranks {} of {} candidates",
                    ranking.len(),
                    labels.len()
                ),
            );
        }
        let order = match PreferenceOrder::new(ranking, labels.len()) {
            Ok(o) => o,
            Err(e) => return err(lineno, e.to_string()),
        };
        for _ in 0..count {
            votes.push(order.clone());
        }
    }

    let labels = match labels {
        Some(l) => l,
        None => return err(last_line.max(1), "missing candidates line"),
    };
    if votes.is_empty() {
        return err(last_line.max(1), "election has no vote lines");
    }
    Election::new(labels, votes).map_err(|e| ParseError {
        line: last_line,
        message: e.to_string(),
    })
}

pub fn serialize_election(e: &Election) -> String {
    let mut out = String::new();
    out.push_str("candidates: ");
    out.push_str(&e.labels().join(","));
    out.push('\n');
    for vote in e.votes() {
        let names: Vec<&str> = vote.ranking().iter().map(|&c| e.label(c)).collect();
        out.push_str("vote: ");
        out.push_str(&names.join(" > "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_plain_profile() {
        let text = "# comment\ncandidates: a,b,c,d\nvote: a > c > b > d\nvote: b > c > a > d\nvote: a > c > d > b\nvote: b > c > d > a\n";
        let e = parse_election(text).unwrap();
        assert_eq!(e.num_candidates(), 4);
        assert_eq!(e.num_voters(), 4);
        assert_eq!(e.votes()[0].ranking(), &[0, 2, 1, 3]);
        assert_eq!(e.votes()[3].ranking(), &[1, 2, 3, 0]);
    }

    #[test]
    fn multiplicity_expands_in_place() {
        let e = parse_election("candidates: a,b,c\n3 * vote: a > b > c\nvote: c > b > a\n").unwrap();
        assert_eq!(e.num_voters(), 4);
        assert_eq!(e.votes()[0], e.votes()[2]);
        assert_ne!(e.votes()[0], e.votes()[3]);
    }

    #[test]
    fn duplicate_candidate_in_vote_is_an_error() {
        let result = parse_election("candidates: a,b,c\nvote: a > b > a\n");
        let e = result.unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("duplicate"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_election("candidates: a,b\nvote: a > b\nvote: a > x\n")
                .unwrap_err()
                .line,
            3
        );
        assert_eq!(
            parse_election("candidates: a,b\nvote: a\n").unwrap_err().line,
            2
        );
        assert!(parse_election("candidates: a,b\n").is_err());
        assert!(parse_election("vote: a > b\n").is_err());
        assert!(parse_election("candidates: a,,b\nvote: a > b\n").is_err());
        assert!(parse_election("candidates: a,b\n0 * vote: a > b\n").is_err());
    }

    #[test]
    fn round_trip_is_structural_identity() {
        let text = "candidates: a,b,c,d\n11 * vote: a > b > c > d\n3 * vote: b > c > a > d\n4 * vote: c > d > a > b\n6 * vote: d > c > a > b\n";
        let e = parse_election(text).unwrap();
        let again = parse_election(&serialize_election(&e)).unwrap();
        assert_eq!(e, again);
    }
}
