//! Nondeterministic finite automata over an involutive alphabet.
//!
//! Epsilon transitions are never stored: constructions that would introduce
//! them (concatenation, star, union) splice transitions directly, and the
//! saturation machinery eliminates its epsilon relation before returning.

use crate::alphabet::{InvolutiveAlphabet, Letter};
use crate::error::Error;
use crate::word::Word;
use std::collections::BTreeSet;

/// An NFA with a set of initial states and no epsilon moves. All state ids
/// are below `state_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    pub(crate) alphabet: InvolutiveAlphabet,
    pub(crate) state_count: usize,
    pub(crate) initial: BTreeSet<usize>,
    pub(crate) finals: BTreeSet<usize>,
    pub(crate) transitions: BTreeSet<(usize, Letter, usize)>,
}

impl Nfa {
    pub fn new(
        alphabet: InvolutiveAlphabet,
        state_count: usize,
        initial: BTreeSet<usize>,
        finals: BTreeSet<usize>,
        transitions: BTreeSet<(usize, Letter, usize)>,
    ) -> Result<Nfa, Error> {
        for &s in initial.iter().chain(finals.iter()) {
            if s >= state_count {
                return Err(Error::InvalidState { state: s, count: state_count });
            }
        }
        for &(p, x, q) in &transitions {
            if p >= state_count || q >= state_count {
                return Err(Error::InvalidState { state: p.max(q), count: state_count });
            }
            if !alphabet.contains(x) {
                return Err(Error::LetterOutOfRange { letter: x.to_char(), rank: alphabet.rank() });
            }
        }
        Ok(Nfa { alphabet, state_count, initial, finals, transitions })
    }

    /// The automaton of the empty language.
    pub fn empty_language(alphabet: InvolutiveAlphabet) -> Nfa {
        Nfa {
            alphabet,
            state_count: 1,
            initial: BTreeSet::from([0]),
            finals: BTreeSet::new(),
            transitions: BTreeSet::new(),
        }
    }

    /// The automaton accepting only the empty word.
    pub fn epsilon(alphabet: InvolutiveAlphabet) -> Nfa {
        Nfa {
            alphabet,
            state_count: 1,
            initial: BTreeSet::from([0]),
            finals: BTreeSet::from([0]),
            transitions: BTreeSet::new(),
        }
    }

    /// The automaton of the single word `w`.
    pub fn word(w: &Word) -> Nfa {
        let n = w.len();
        let transitions = w
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &x)| (i, x, i + 1))
            .collect();
        Nfa {
            alphabet: w.alphabet(),
            state_count: n + 1,
            initial: BTreeSet::from([0]),
            finals: BTreeSet::from([n]),
            transitions,
        }
    }

    /// The automaton of all words over the alphabet.
    pub fn universal(alphabet: InvolutiveAlphabet) -> Nfa {
        let transitions = alphabet.letters().map(|x| (0, x, 0)).collect();
        Nfa {
            alphabet,
            state_count: 1,
            initial: BTreeSet::from([0]),
            finals: BTreeSet::from([0]),
            transitions,
        }
    }

    pub fn alphabet(&self) -> InvolutiveAlphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn transitions(&self) -> &BTreeSet<(usize, Letter, usize)> {
        &self.transitions
    }

    fn check_same_alphabet(&self, other: &Nfa) -> Result<(), Error> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(self.alphabet.rank(), other.alphabet.rank()));
        }
        Ok(())
    }

    /// Successors of `states` on `letter`.
    pub fn step(&self, states: &BTreeSet<usize>, letter: Letter) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &p in states {
            for &(_, x, q) in self.transitions.range((p, Letter::from_id(0), 0)..(p + 1, Letter::from_id(0), 0)) {
                if x == letter {
                    out.insert(q);
                }
            }
        }
        out
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut current = self.initial.clone();
        for &x in w.letters() {
            current = self.step(&current, x);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|s| self.finals.contains(s))
    }

    /// Words readable from `from` to `to` along existing transitions.
    pub fn slice(&self, from: &BTreeSet<usize>, to: &BTreeSet<usize>) -> Result<Nfa, Error> {
        for &s in from.iter().chain(to.iter()) {
            if s >= self.state_count {
                return Err(Error::InvalidState { state: s, count: self.state_count });
            }
        }
        Ok(Nfa {
            alphabet: self.alphabet,
            state_count: self.state_count,
            initial: from.clone(),
            finals: to.clone(),
            transitions: self.transitions.clone(),
        })
    }

    /// Disjoint union of the two automata (language union).
    pub fn union(&self, other: &Nfa) -> Result<Nfa, Error> {
        self.check_same_alphabet(other)?;
        let off = self.state_count;
        let mut transitions = self.transitions.clone();
        transitions.extend(other.transitions.iter().map(|&(p, x, q)| (p + off, x, q + off)));
        let mut initial = self.initial.clone();
        initial.extend(other.initial.iter().map(|&s| s + off));
        let mut finals = self.finals.clone();
        finals.extend(other.finals.iter().map(|&s| s + off));
        Ok(Nfa {
            alphabet: self.alphabet,
            state_count: off + other.state_count,
            initial,
            finals,
            transitions,
        })
    }

    /// Concatenation without epsilon moves: final states of `self` inherit
    /// the outgoing edges of `other`'s initial states.
    pub fn concat(&self, other: &Nfa) -> Result<Nfa, Error> {
        self.check_same_alphabet(other)?;
        let off = self.state_count;
        let mut transitions = self.transitions.clone();
        transitions.extend(other.transitions.iter().map(|&(p, x, q)| (p + off, x, q + off)));
        let other_initial_edges: Vec<(Letter, usize)> = other
            .transitions
            .iter()
            .filter(|&&(p, _, _)| other.initial.contains(&p))
            .map(|&(_, x, q)| (x, q + off))
            .collect();
        for &f in &self.finals {
            for &(x, q) in &other_initial_edges {
                transitions.insert((f, x, q));
            }
        }
        let other_accepts_empty = other.initial.iter().any(|s| other.finals.contains(s));
        let mut finals: BTreeSet<usize> = other.finals.iter().map(|&s| s + off).collect();
        if other_accepts_empty {
            finals.extend(self.finals.iter().copied());
        }
        let self_accepts_empty = self.initial.iter().any(|s| self.finals.contains(s));
        let mut initial = self.initial.clone();
        if self_accepts_empty {
            initial.extend(other.initial.iter().map(|&s| s + off));
        }
        Ok(Nfa {
            alphabet: self.alphabet,
            state_count: off + other.state_count,
            initial,
            finals,
            transitions,
        })
    }

    /// Kleene star. A fresh initial+final state carries copies of the
    /// initial edges, and every final state loops back the same way.
    pub fn star(&self) -> Nfa {
        let fresh = self.state_count;
        let initial_edges: Vec<(Letter, usize)> = self
            .transitions
            .iter()
            .filter(|&&(p, _, _)| self.initial.contains(&p))
            .map(|&(_, x, q)| (x, q))
            .collect();
        let mut transitions = self.transitions.clone();
        for &(x, q) in &initial_edges {
            transitions.insert((fresh, x, q));
        }
        for &f in &self.finals {
            for &(x, q) in &initial_edges {
                transitions.insert((f, x, q));
            }
        }
        let mut finals = self.finals.clone();
        finals.insert(fresh);
        Nfa {
            alphabet: self.alphabet,
            state_count: self.state_count + 1,
            initial: BTreeSet::from([fresh]),
            finals,
            transitions,
        }
    }

    pub fn plus(&self) -> Nfa {
        self.concat(&self.star()).expect("same alphabet")
    }

    pub fn optional(&self) -> Nfa {
        self.union(&Nfa::epsilon(self.alphabet)).expect("same alphabet")
    }

    /// Mirror image: accepts `reverse(w)` for each accepted `w`.
    pub fn reverse(&self) -> Nfa {
        let transitions = self.transitions.iter().map(|&(p, x, q)| (q, x, p)).collect();
        Nfa {
            alphabet: self.alphabet,
            state_count: self.state_count,
            initial: self.finals.clone(),
            finals: self.initial.clone(),
            transitions,
        }
    }

    /// Formal inverse: accepts `w⁻¹` (reversed, letters involuted) for each
    /// accepted `w`.
    pub fn invert(&self) -> Nfa {
        let transitions = self
            .transitions
            .iter()
            .map(|&(p, x, q)| (q, x.inverse(), p))
            .collect();
        Nfa {
            alphabet: self.alphabet,
            state_count: self.state_count,
            initial: self.finals.clone(),
            finals: self.initial.clone(),
            transitions,
        }
    }

    /// Product automaton for language intersection.
    pub fn intersect(&self, other: &Nfa) -> Result<Nfa, Error> {
        self.check_same_alphabet(other)?;
        let mut index: std::collections::HashMap<(usize, usize), usize> = Default::default();
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut queue: Vec<(usize, usize)> = Vec::new();
        let mut initial = BTreeSet::new();
        for &a in &self.initial {
            for &b in &other.initial {
                if !index.contains_key(&(a, b)) {
                    index.insert((a, b), order.len());
                    order.push((a, b));
                    queue.push((a, b));
                }
            }
        }
        for i in 0..order.len() {
            initial.insert(i);
        }
        let mut transitions = BTreeSet::new();
        while let Some((a, b)) = queue.pop() {
            let src = index[&(a, b)];
            for &(_, x, qa) in self.transitions.range((a, Letter::from_id(0), 0)..(a + 1, Letter::from_id(0), 0)) {
                for &(_, y, qb) in other.transitions.range((b, Letter::from_id(0), 0)..(b + 1, Letter::from_id(0), 0)) {
                    if x == y {
                        let next = *index.entry((qa, qb)).or_insert_with(|| {
                            order.push((qa, qb));
                            queue.push((qa, qb));
                            order.len() - 1
                        });
                        transitions.insert((src, x, next));
                    }
                }
            }
        }
        let finals = order
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| self.finals.contains(&a) && other.finals.contains(&b))
            .map(|(i, _)| i)
            .collect();
        Ok(Nfa {
            alphabet: self.alphabet,
            state_count: order.len().max(1),
            initial,
            finals,
            transitions,
        })
    }
}

/// Binary rational operations taking two automata.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalOp {
    Concat,
    Star,
    Reverse,
    Invert,
}

/// Dispatch wrapper over the standard rational operations. `Concat` needs
/// both arguments; the unary operations ignore `b`.
pub fn rational_op(a: &Nfa, b: Option<&Nfa>, op: RationalOp) -> Result<Nfa, Error> {
    match op {
        RationalOp::Concat => {
            let b = b.expect("concat needs a second argument");
            a.concat(b)
        }
        RationalOp::Star => Ok(a.star()),
        RationalOp::Reverse => Ok(a.reverse()),
        RationalOp::Invert => Ok(a.invert()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> InvolutiveAlphabet {
        InvolutiveAlphabet::of_rank(2)
    }

    fn w(text: &str) -> Word {
        Word::parse(text, ab()).unwrap()
    }

    #[test]
    fn word_automaton_accepts_exactly_its_word() {
        let n = Nfa::word(&w("ab"));
        assert!(n.accepts(&w("ab")));
        assert!(!n.accepts(&w("a")));
        assert!(!n.accepts(&w("ab").concat(&w("a"))));
    }

    #[test]
    fn concat_and_star_semantics() {
        let a = Nfa::word(&w("a"));
        let b = Nfa::word(&w("b"));
        let abn = a.concat(&b).unwrap();
        assert!(abn.accepts(&w("ab")));
        assert!(!abn.accepts(&w("ba")));

        let star = Nfa::word(&w("ab")).star();
        assert!(star.accepts(&w("1")));
        assert!(star.accepts(&w("abab")));
        assert!(!star.accepts(&w("aba")));
    }

    #[test]
    fn concat_handles_empty_word_operands() {
        let eps = Nfa::epsilon(ab());
        let a = Nfa::word(&w("a"));
        assert!(eps.concat(&a).unwrap().accepts(&w("a")));
        assert!(a.concat(&eps).unwrap().accepts(&w("a")));
        assert!(eps.concat(&eps).unwrap().accepts(&w("1")));
    }

    #[test]
    fn invert_maps_words_to_formal_inverses() {
        let n = Nfa::word(&w("ab")).invert();
        assert!(n.accepts(&w("BA")));
        assert!(!n.accepts(&w("ab")));
        assert!(!n.accepts(&w("AB")));
    }

    #[test]
    fn slice_from_initial_to_finals_is_the_language() {
        let n = Nfa::word(&w("ab")).star();
        let s = n.slice(&n.initial.clone(), &n.finals.clone()).unwrap();
        for text in ["1", "ab", "abab", "a", "b"] {
            assert_eq!(n.accepts(&w(text)), s.accepts(&w(text)));
        }
    }

    #[test]
    fn slice_with_empty_source_is_empty() {
        let n = Nfa::word(&w("ab"));
        let s = n.slice(&BTreeSet::new(), &n.finals.clone()).unwrap();
        assert!(!s.accepts(&w("ab")));
        assert!(!s.accepts(&w("1")));
    }

    #[test]
    fn slice_rejects_invalid_states() {
        let n = Nfa::word(&w("ab"));
        let bad = BTreeSet::from([99]);
        assert!(n.slice(&bad, &n.finals.clone()).is_err());
    }

    #[test]
    fn intersect_is_conjunction() {
        let astar = Nfa::word(&w("a")).star();
        let aa_star = Nfa::word(&w("aa")).star();
        let inter = astar.intersect(&aa_star).unwrap();
        assert!(inter.accepts(&w("aa")));
        assert!(inter.accepts(&w("1")));
        assert!(!inter.accepts(&w("a")));
        assert!(!inter.accepts(&w("aaa")));
    }
}
