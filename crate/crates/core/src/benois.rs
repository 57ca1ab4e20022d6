//! Saturation of an automaton over an involutive alphabet: from any NFA
//! recognizing a language L, compute the automaton of all freely reduced
//! words representing elements of Lπ. This is the effective content behind
//! rational subsets of free groups, and the foundation of
//! [`RationalSubset`].

use crate::alphabet::{InvolutiveAlphabet, Letter};
use crate::dfa::{determinize, BoolOp, Dfa};
use crate::nfa::Nfa;
use crate::regex::parse_regex;
use crate::word::Word;
use crate::error::Error;
use std::collections::BTreeSet;

/// The `2·rank + 1`-state automaton of all freely reduced words. States
/// record the last letter read.
pub fn reduced_words_dfa(alphabet: InvolutiveAlphabet) -> Dfa {
    let mut nfa_trans: BTreeSet<(usize, Letter, usize)> = BTreeSet::new();
    // state 0 = start, state 1 + x.id = last letter was x
    for x in alphabet.letters() {
        nfa_trans.insert((0, x, 1 + x.id() as usize));
        for y in alphabet.letters() {
            if y != x.inverse() {
                nfa_trans.insert((1 + x.id() as usize, y, 1 + y.id() as usize));
            }
        }
    }
    let count = 1 + alphabet.size();
    let finals: BTreeSet<usize> = (0..count).collect();
    let nfa = Nfa::new(alphabet, count, BTreeSet::from([0]), finals, nfa_trans)
        .expect("construction is well-formed");
    determinize(&nfa)
}

/// Epsilon-shortcut closure: `(p, q)` is in the result iff some word
/// freely reducing to the identity labels a path `p → q`. Computed as the
/// fixpoint of the two-step cancellation rule together with reflexivity
/// and transitivity; termination is structural (finitely many pairs).
fn saturation_closure(nfa: &Nfa) -> Vec<BTreeSet<usize>> {
    let n = nfa.state_count();
    let mut eps: Vec<BTreeSet<usize>> = (0..n).map(|p| BTreeSet::from([p])).collect();
    let trans: Vec<(usize, Letter, usize)> = nfa.transitions().iter().copied().collect();
    loop {
        let mut changed = false;
        // cancellation: p -x-> r, r ⇒ s, s -x⁻¹-> q gives p ⇒ q
        for &(p, x, r) in &trans {
            let reachable: Vec<usize> = eps[r].iter().copied().collect();
            for s in reachable {
                for &(s2, y, q) in &trans {
                    if s2 == s && y == x.inverse() && eps[p].insert(q) {
                        changed = true;
                    }
                }
            }
        }
        // transitivity
        for p in 0..n {
            let mid: Vec<usize> = eps[p].iter().copied().collect();
            for q in mid {
                let further: Vec<usize> = eps[q].iter().copied().collect();
                for t in further {
                    if eps[p].insert(t) {
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return eps;
        }
    }
}

/// The automaton of reduced representatives: saturate, eliminate the
/// shortcut relation, and intersect with the reduced-word automaton.
pub fn benois_reduce(nfa: &Nfa) -> Dfa {
    let eps = saturation_closure(nfa);
    let mut transitions: BTreeSet<(usize, Letter, usize)> = BTreeSet::new();
    for p in 0..nfa.state_count() {
        for &p2 in &eps[p] {
            for &(src, x, q) in nfa.transitions() {
                if src == p2 {
                    transitions.insert((p, x, q));
                }
            }
        }
    }
    let finals: BTreeSet<usize> = (0..nfa.state_count())
        .filter(|&p| eps[p].iter().any(|q| nfa.finals().contains(q)))
        .collect();
    let eliminated = Nfa::new(
        nfa.alphabet(),
        nfa.state_count(),
        nfa.initial().clone(),
        finals,
        transitions,
    )
    .expect("states unchanged");
    determinize(&eliminated)
        .combine(&reduced_words_dfa(nfa.alphabet()), BoolOp::Intersection)
        .expect("same alphabet")
}

/// A rational subset of a free group: a source automaton together with the
/// minimized automaton of its reduced representatives.
#[derive(Clone, Debug)]
pub struct RationalSubset {
    source: Nfa,
    reduced: Dfa,
    alphabet: InvolutiveAlphabet,
}

impl RationalSubset {
    pub fn from_nfa(source: Nfa) -> RationalSubset {
        let reduced = benois_reduce(&source);
        let alphabet = source.alphabet();
        RationalSubset { source, reduced, alphabet }
    }

    pub fn from_regex(expr: &str, alphabet: InvolutiveAlphabet) -> Result<RationalSubset, Error> {
        Ok(RationalSubset::from_nfa(parse_regex(expr, alphabet)?))
    }

    pub fn from_words(words: &[Word], alphabet: InvolutiveAlphabet) -> RationalSubset {
        let mut nfa = Nfa::empty_language(alphabet);
        for w in words {
            nfa = nfa.union(&Nfa::word(w)).expect("same alphabet");
        }
        RationalSubset::from_nfa(nfa)
    }

    /// The whole group: every reduced word is a representative.
    pub fn full_group(alphabet: InvolutiveAlphabet) -> RationalSubset {
        RationalSubset {
            source: Nfa::universal(alphabet),
            reduced: reduced_words_dfa(alphabet),
            alphabet,
        }
    }

    pub fn empty(alphabet: InvolutiveAlphabet) -> RationalSubset {
        RationalSubset {
            source: Nfa::empty_language(alphabet),
            reduced: Dfa::empty_language(alphabet),
            alphabet,
        }
    }

    pub fn alphabet(&self) -> InvolutiveAlphabet {
        self.alphabet
    }

    pub fn source(&self) -> &Nfa {
        &self.source
    }

    /// The minimized automaton of the reduced representatives.
    pub fn reduced(&self) -> &Dfa {
        &self.reduced
    }

    /// Group-element membership: reduce, then look up.
    pub fn member(&self, w: &Word) -> bool {
        self.reduced.accepts(&w.reduce())
    }

    pub fn contains_identity(&self) -> bool {
        self.reduced.accepts(&Word::empty(self.alphabet))
    }

    pub fn is_empty(&self) -> bool {
        self.reduced.is_empty_language()
    }
}
