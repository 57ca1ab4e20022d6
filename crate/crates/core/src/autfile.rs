//! Plain-text automaton format, one declaration per line:
//!
//! ```text
//! rank: 2            # optional; inferred from letters when absent
//! states: 3
//! initial: 0
//! final: 0 2
//! trans: 0 a 1
//! trans: 1 b 2
//! ```
//!
//! `#` starts a comment. Dumps are deterministic and re-parse to an
//! equivalent automaton.

use crate::alphabet::{InvolutiveAlphabet, Letter};
use crate::dfa::Dfa;
use crate::error::Error;
use crate::nfa::Nfa;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Parses the text format into an NFA. When the file carries no `rank:`
/// line, the rank is the largest generator mentioned (at least 1).
pub fn parse_automaton(text: &str) -> Result<Nfa, Error> {
    let mut rank: Option<u8> = None;
    let mut states: Option<usize> = None;
    let mut initial: BTreeSet<usize> = BTreeSet::new();
    let mut finals: BTreeSet<usize> = BTreeSet::new();
    let mut raw_trans: Vec<(usize, char, usize, usize)> = Vec::new(); // (p, x, q, line)
    let mut max_gen: u8 = 0;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::file(lineno, "expected 'key: value'"))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        let parse_id = |s: &str| -> Result<usize, Error> {
            s.parse()
                .map_err(|_| Error::file(lineno, format!("invalid state id '{s}'")))
        };
        match key.trim() {
            "rank" => {
                let r: u8 = fields
                    .first()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::file(lineno, "invalid rank"))?;
                rank = Some(r);
            }
            "states" => {
                states = Some(
                    fields
                        .first()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::file(lineno, "invalid state count"))?,
                );
            }
            "initial" => {
                for f in &fields {
                    initial.insert(parse_id(f)?);
                }
            }
            "final" => {
                for f in &fields {
                    finals.insert(parse_id(f)?);
                }
            }
            "trans" => {
                if fields.len() != 3 {
                    return Err(Error::file(lineno, "expected 'trans: p x q'"));
                }
                let p = parse_id(fields[0])?;
                let q = parse_id(fields[2])?;
                let mut cs = fields[1].chars();
                let (c, extra) = (cs.next(), cs.next());
                let c = match (c, extra) {
                    (Some(c), None) => c,
                    _ => return Err(Error::file(lineno, "letter must be a single character")),
                };
                let x = Letter::from_char(c)
                    .ok_or_else(|| Error::file(lineno, format!("invalid letter '{c}'")))?;
                max_gen = max_gen.max(x.generator_index() + 1);
                raw_trans.push((p, c, q, lineno));
            }
            other => return Err(Error::file(lineno, format!("unknown declaration '{other}'"))),
        }
    }

    let states = states.ok_or_else(|| Error::file(0, "missing 'states:' declaration"))?;
    let alphabet = InvolutiveAlphabet::new(rank.unwrap_or_else(|| max_gen.max(1)))?;
    let mut transitions = BTreeSet::new();
    for (p, c, q, lineno) in raw_trans {
        let x = Letter::from_char(c).unwrap();
        if !alphabet.contains(x) {
            return Err(Error::file(
                lineno,
                format!("letter '{c}' outside alphabet of rank {}", alphabet.rank()),
            ));
        }
        transitions.insert((p, x, q));
    }
    Nfa::new(alphabet, states, initial, finals, transitions)
}

pub fn dump_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    writeln!(out, "rank: {}", nfa.alphabet().rank()).unwrap();
    writeln!(out, "states: {}", nfa.state_count()).unwrap();
    let ids = |set: &BTreeSet<usize>| {
        set.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    };
    writeln!(out, "initial: {}", ids(nfa.initial())).unwrap();
    writeln!(out, "final: {}", ids(nfa.finals())).unwrap();
    for &(p, x, q) in nfa.transitions() {
        writeln!(out, "trans: {p} {x} {q}").unwrap();
    }
    out
}

pub fn dump_dfa(dfa: &Dfa) -> String {
    dump_nfa(&dfa.to_nfa())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::determinize;
    use crate::regex::parse_regex;

    #[test]
    fn round_trip_preserves_the_language() {
        let ab = InvolutiveAlphabet::of_rank(2);
        let d = determinize(&parse_regex("(ab|B)*a?", ab).unwrap());
        let text = dump_dfa(&d);
        let back = determinize(&parse_automaton(&text).unwrap());
        assert!(back.equivalent(&d));
    }

    #[test]
    fn parses_multi_line_declarations() {
        let text = "states: 2\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 1 A 0 # loop back\n";
        let nfa = parse_automaton(text).unwrap();
        assert_eq!(nfa.state_count(), 2);
        assert_eq!(nfa.alphabet().rank(), 1);
        assert!(nfa.accepts(&crate::word::Word::parse("a", nfa.alphabet()).unwrap()));
    }

    #[test]
    fn errors_name_the_offending_line() {
        let text = "states: 2\ninitial: 0\ntrans: 0 ? 1\n";
        match parse_automaton(text) {
            Err(Error::FileFormat { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected file error, got {other:?}"),
        }
    }

    #[test]
    fn missing_states_is_an_error() {
        assert!(parse_automaton("initial: 0\n").is_err());
    }
}
