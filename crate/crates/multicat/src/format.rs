//! Plain-text automaton format.
//!
//! ```text
//! dfa <state_count> <alphabet_size>
//! initial <i>
//! finals <f1> <f2> ...
//! trans <state> <letter> <state>
//! ```
//!
//! NFAs use the header `nfa`, an `initials` line, and one `trans` line per
//! target. Tokens are space-separated, `#` starts a comment running to the end
//! of the line, and blank lines are ignored. Writers emit transitions sorted
//! by (state, letter, target) so output is byte-stable.

use crate::automata::{AutomatonError, Dfa, Nfa};
use crate::set::StateSet;
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn write_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    writeln!(out, "dfa {} {}", dfa.state_count(), dfa.alphabet_size()).unwrap();
    writeln!(out, "initial {}", dfa.initial()).unwrap();
    out.push_str("finals");
    for state in dfa.finals().iter() {
        write!(out, " {state}").unwrap();
    }
    out.push('\n');
    for state in 0..dfa.state_count() {
        for letter in 0..dfa.alphabet_size() {
            writeln!(out, "trans {state} {letter} {}", dfa.step(state, letter)).unwrap();
        }
    }
    out
}

pub fn write_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    writeln!(out, "nfa {} {}", nfa.state_count(), nfa.alphabet_size()).unwrap();
    out.push_str("initials");
    for state in nfa.initials().iter() {
        write!(out, " {state}").unwrap();
    }
    out.push('\n');
    out.push_str("finals");
    for state in nfa.finals().iter() {
        write!(out, " {state}").unwrap();
    }
    out.push('\n');
    for state in 0..nfa.state_count() {
        for letter in 0..nfa.alphabet_size() {
            for target in nfa.targets(state, letter).iter() {
                writeln!(out, "trans {state} {letter} {target}").unwrap();
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn meaningful_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some(Line {
                    number: i + 1,
                    tokens,
                })
            }
        })
        .collect()
}

fn parse_number(line: &Line<'_>, token: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line.number, format!("expected a number, got `{token}`")))
}

fn expect_keyword(line: &Line<'_>, keyword: &str) -> Result<(), ParseError> {
    if line.tokens[0] != keyword {
        return Err(syntax(
            line.number,
            format!("expected `{keyword}`, got `{}`", line.tokens[0]),
        ));
    }
    Ok(())
}

pub fn parse_automaton(text: &str) -> Result<Automaton, ParseError> {
    let lines = meaningful_lines(text);
    if lines.is_empty() {
        return Err(syntax(1, "empty input"));
    }
    let header = &lines[0];
    if header.tokens.len() != 3 {
        return Err(syntax(
            header.number,
            "header must be `dfa <states> <letters>` or `nfa <states> <letters>`",
        ));
    }
    let state_count = parse_number(header, header.tokens[1])?;
    let alphabet_size = parse_number(header, header.tokens[2])?;
    if state_count == 0 || alphabet_size == 0 {
        return Err(ParseError::Automaton(AutomatonError::EmptyAutomaton));
    }
    let check_state = |line: usize, q: usize| {
        if q >= state_count {
            Err(syntax(line, format!("state {q} out of range")))
        } else {
            Ok(q)
        }
    };
    let check_letter = |line: usize, a: usize| {
        if a >= alphabet_size {
            Err(syntax(line, format!("letter {a} out of range")))
        } else {
            Ok(a)
        }
    };

    match header.tokens[0] {
        "dfa" => {
            if lines.len() < 3 {
                return Err(syntax(header.number, "missing `initial` or `finals` line"));
            }
            let init_line = &lines[1];
            expect_keyword(init_line, "initial")?;
            if init_line.tokens.len() != 2 {
                return Err(syntax(init_line.number, "expected `initial <state>`"));
            }
            let initial = check_state(
                init_line.number,
                parse_number(init_line, init_line.tokens[1])?,
            )?;

            let finals_line = &lines[2];
            expect_keyword(finals_line, "finals")?;
            let mut finals = StateSet::empty(state_count);
            for token in &finals_line.tokens[1..] {
                finals.insert(check_state(
                    finals_line.number,
                    parse_number(finals_line, token)?,
                )?);
            }

            let mut delta = vec![usize::MAX; state_count * alphabet_size];
            for line in &lines[3..] {
                expect_keyword(line, "trans")?;
                if line.tokens.len() != 4 {
                    return Err(syntax(
                        line.number,
                        "expected `trans <state> <letter> <state>`",
                    ));
                }
                let from = check_state(line.number, parse_number(line, line.tokens[1])?)?;
                let letter = check_letter(line.number, parse_number(line, line.tokens[2])?)?;
                let to = check_state(line.number, parse_number(line, line.tokens[3])?)?;
                let slot = &mut delta[from * alphabet_size + letter];
                if *slot != usize::MAX {
                    return Err(ParseError::Automaton(AutomatonError::DuplicateTransition {
                        state: from,
                        letter,
                    }));
                }
                *slot = to;
            }
            if let Some(hole) = delta.iter().position(|&t| t == usize::MAX) {
                return Err(ParseError::Automaton(AutomatonError::MissingTransition {
                    state: hole / alphabet_size,
                    letter: hole % alphabet_size,
                }));
            }
            Ok(Automaton::Dfa(Dfa::new(
                state_count,
                alphabet_size,
                initial,
                finals,
                delta,
            )?))
        }
        "nfa" => {
            if lines.len() < 3 {
                return Err(syntax(header.number, "missing `initials` or `finals` line"));
            }
            let init_line = &lines[1];
            expect_keyword(init_line, "initials")?;
            let mut initials = StateSet::empty(state_count);
            for token in &init_line.tokens[1..] {
                initials.insert(check_state(
                    init_line.number,
                    parse_number(init_line, token)?,
                )?);
            }

            let finals_line = &lines[2];
            expect_keyword(finals_line, "finals")?;
            let mut finals = StateSet::empty(state_count);
            for token in &finals_line.tokens[1..] {
                finals.insert(check_state(
                    finals_line.number,
                    parse_number(finals_line, token)?,
                )?);
            }

            let mut delta = vec![StateSet::empty(state_count); state_count * alphabet_size];
            for line in &lines[3..] {
                expect_keyword(line, "trans")?;
                if line.tokens.len() != 4 {
                    return Err(syntax(
                        line.number,
                        "expected `trans <state> <letter> <state>`",
                    ));
                }
                let from = check_state(line.number, parse_number(line, line.tokens[1])?)?;
                let letter = check_letter(line.number, parse_number(line, line.tokens[2])?)?;
                let to = check_state(line.number, parse_number(line, line.tokens[3])?)?;
                delta[from * alphabet_size + letter].insert(to);
            }
            Ok(Automaton::Nfa(Nfa::new(
                state_count,
                alphabet_size,
                initials,
                finals,
                delta,
            )?))
        }
        other => Err(syntax(
            header.number,
            format!("unknown header `{other}`, expected `dfa` or `nfa`"),
        )),
    }
}

pub fn parse_dfa(text: &str) -> Result<Dfa, ParseError> {
    match parse_automaton(text)? {
        Automaton::Dfa(dfa) => Ok(dfa),
        Automaton::Nfa(_) => Err(syntax(1, "expected a DFA, found an NFA")),
    }
}

pub fn parse_nfa(text: &str) -> Result<Nfa, ParseError> {
    match parse_automaton(text)? {
        Automaton::Nfa(nfa) => Ok(nfa),
        Automaton::Dfa(_) => Err(syntax(1, "expected an NFA, found a DFA")),
    }
}
