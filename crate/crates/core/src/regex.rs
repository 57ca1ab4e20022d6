//! Regular-expression front end for rational subsets.
//!
//! Syntax: letters `a..z` (generators) and `A..Z` (their inverses),
//! juxtaposition, `|`, `*`, `+`, `?`, parentheses, and `1` for the empty
//! word. Whitespace is ignored.

use crate::alphabet::{InvolutiveAlphabet, Letter};
use crate::error::Error;
use crate::nfa::Nfa;
use crate::word::Word;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: InvolutiveAlphabet,
    src: &'a str,
}

/// Compiles `expr` to an epsilon-free NFA accepting exactly the denoted
/// language. The empty expression denotes the empty word.
pub fn parse_regex(expr: &str, alphabet: InvolutiveAlphabet) -> Result<Nfa, Error> {
    let chars = expr
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser { chars, pos: 0, alphabet, src: expr };
    let nfa = p.alternation()?;
    match p.peek() {
        None => Ok(nfa),
        Some((at, c)) => Err(Error::syntax(at, format!("unexpected '{c}'"))),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn end_pos(&self) -> usize {
        self.src.len()
    }

    fn alternation(&mut self) -> Result<Nfa, Error> {
        let mut nfa = self.sequence()?;
        while let Some((_, '|')) = self.peek() {
            self.bump();
            let rhs = self.sequence()?;
            nfa = nfa.union(&rhs).expect("same alphabet");
        }
        Ok(nfa)
    }

    fn sequence(&mut self) -> Result<Nfa, Error> {
        let mut nfa = Nfa::epsilon(self.alphabet);
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            let factor = self.postfix()?;
            nfa = nfa.concat(&factor).expect("same alphabet");
        }
        Ok(nfa)
    }

    fn postfix(&mut self) -> Result<Nfa, Error> {
        let mut nfa = self.atom()?;
        while let Some((_, c)) = self.peek() {
            match c {
                '*' => nfa = nfa.star(),
                '+' => nfa = nfa.plus(),
                '?' => nfa = nfa.optional(),
                _ => break,
            }
            self.bump();
        }
        Ok(nfa)
    }

    fn atom(&mut self) -> Result<Nfa, Error> {
        match self.peek() {
            None => Err(Error::syntax(self.end_pos(), "unexpected end of expression")),
            Some((at, '(')) => {
                self.bump();
                let inner = self.alternation()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(Error::syntax(at, "unclosed '('")),
                }
            }
            Some((_, '1')) => {
                self.bump();
                Ok(Nfa::epsilon(self.alphabet))
            }
            Some((at, c)) => match Letter::from_char(c) {
                Some(x) if self.alphabet.contains(x) => {
                    self.bump();
                    let w = Word::new(vec![x], self.alphabet);
                    Ok(Nfa::word(&w))
                }
                Some(_) => Err(Error::LetterOutOfRange { letter: c, rank: self.alphabet.rank() }),
                None => Err(Error::syntax(at, format!("unexpected '{c}'"))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> InvolutiveAlphabet {
        InvolutiveAlphabet::of_rank(2)
    }

    fn accepts(expr: &str, word: &str) -> bool {
        let nfa = parse_regex(expr, ab()).unwrap();
        nfa.accepts(&Word::parse(word, ab()).unwrap())
    }

    #[test]
    fn kleene_semantics() {
        assert!(accepts("(ab)*", "1"));
        assert!(accepts("(ab)*", "ab"));
        assert!(accepts("(ab)*", "abab"));
        assert!(!accepts("(ab)*", "a"));
    }

    #[test]
    fn plus_requires_one_repetition() {
        assert!(accepts("aB+", "aB"));
        assert!(accepts("aB+", "aBB"));
        assert!(!accepts("aB+", "a"));
    }

    #[test]
    fn one_denotes_the_empty_word() {
        let nfa = parse_regex("1|a", InvolutiveAlphabet::of_rank(1)).unwrap();
        let a1 = InvolutiveAlphabet::of_rank(1);
        assert!(nfa.accepts(&Word::parse("1", a1).unwrap()));
        assert!(nfa.accepts(&Word::parse("a", a1).unwrap()));
        assert!(!nfa.accepts(&Word::parse("aa", a1).unwrap()));
    }

    #[test]
    fn alternation_and_grouping() {
        assert!(accepts("a(b|B)a", "aba"));
        assert!(accepts("a(b|B)a", "aBa"));
        assert!(!accepts("a(b|B)a", "aa"));
        assert!(accepts("ab?", "a"));
        assert!(accepts("ab?", "ab"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_regex("a(b", ab()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_regex("ab)", ab()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn letters_outside_rank_are_rejected() {
        match parse_regex("ac", ab()) {
            Err(Error::LetterOutOfRange { letter, rank }) => {
                assert_eq!(letter, 'c');
                assert_eq!(rank, 2);
            }
            other => panic!("expected letter error, got {other:?}"),
        }
    }
}
