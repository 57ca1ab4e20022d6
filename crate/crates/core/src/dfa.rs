//! Deterministic automata with partial transition functions.
//!
//! [`Dfa::minimize`] produces the canonical form used for language equality
//! everywhere in this crate: trim, merge equivalent states, and renumber by
//! breadth-first discovery in letter order. Two minimized automata accept
//! the same language iff they are structurally equal.

use crate::alphabet::{InvolutiveAlphabet, Letter};
use crate::error::Error;
use crate::nfa::Nfa;
use crate::word::Word;
use num_bigint::BigUint;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// A deterministic automaton. Missing transitions denote an implicit dead
/// state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    pub(crate) alphabet: InvolutiveAlphabet,
    pub(crate) state_count: usize,
    pub(crate) initial: usize,
    pub(crate) finals: BTreeSet<usize>,
    pub(crate) transitions: BTreeMap<(usize, Letter), usize>,
}

/// Boolean combinations of two languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
}

/// Exact word counts per length, `0..=length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountVector {
    pub length: usize,
    pub counts: Vec<BigUint>,
}

impl Dfa {
    /// The canonical automaton of the empty language.
    pub fn empty_language(alphabet: InvolutiveAlphabet) -> Dfa {
        Dfa {
            alphabet,
            state_count: 1,
            initial: 0,
            finals: BTreeSet::new(),
            transitions: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> InvolutiveAlphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn transitions(&self) -> &BTreeMap<(usize, Letter), usize> {
        &self.transitions
    }

    pub fn next(&self, state: usize, letter: Letter) -> Option<usize> {
        self.transitions.get(&(state, letter)).copied()
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut state = self.initial;
        for &x in w.letters() {
            match self.next(state, x) {
                Some(q) => state = q,
                None => return false,
            }
        }
        self.finals.contains(&state)
    }

    pub fn to_nfa(&self) -> Nfa {
        Nfa {
            alphabet: self.alphabet,
            state_count: self.state_count,
            initial: BTreeSet::from([self.initial]),
            finals: self.finals.clone(),
            transitions: self
                .transitions
                .iter()
                .map(|(&(p, x), &q)| (p, x, q))
                .collect(),
        }
    }

    /// Words labelling a path from `from` to `to`.
    pub fn slice(&self, from: &BTreeSet<usize>, to: &BTreeSet<usize>) -> Result<Nfa, Error> {
        self.to_nfa().slice(from, to)
    }

    pub fn is_empty_language(&self) -> bool {
        // reachability from the initial state to any final state
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(p) = queue.pop_front() {
            if self.finals.contains(&p) {
                return false;
            }
            for x in self.alphabet.letters() {
                if let Some(q) = self.next(p, x) {
                    if !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        true
    }

    /// Some shortest accepted word, if the language is nonempty.
    pub fn shortest_word(&self) -> Option<Word> {
        let mut prev: Vec<Option<(usize, Letter)>> = vec![None; self.state_count];
        let mut seen = vec![false; self.state_count];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        let mut hit = None;
        'bfs: while let Some(p) = queue.pop_front() {
            if self.finals.contains(&p) {
                hit = Some(p);
                break 'bfs;
            }
            for x in self.alphabet.letters() {
                if let Some(q) = self.next(p, x) {
                    if !seen[q] {
                        seen[q] = true;
                        prev[q] = Some((p, x));
                        queue.push_back(q);
                    }
                }
            }
        }
        let mut state = hit?;
        let mut letters = Vec::new();
        while let Some((p, x)) = prev[state] {
            letters.push(x);
            state = p;
        }
        letters.reverse();
        Some(Word::new(letters, self.alphabet))
    }

    fn check_same_alphabet(&self, other: &Dfa) -> Result<(), Error> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(self.alphabet.rank(), other.alphabet.rank()));
        }
        Ok(())
    }

    /// Boolean combination via the completed product construction, followed
    /// by canonical minimization.
    pub fn combine(&self, other: &Dfa, op: BoolOp) -> Result<Dfa, Error> {
        self.check_same_alphabet(other)?;
        // None encodes each side's implicit dead state
        type P = (Option<usize>, Option<usize>);
        let start: P = (Some(self.initial), Some(other.initial));
        let mut index: HashMap<P, usize> = HashMap::from([(start, 0)]);
        let mut order: Vec<P> = vec![start];
        let mut queue: VecDeque<P> = VecDeque::from([start]);
        let mut transitions = BTreeMap::new();
        while let Some((a, b)) = queue.pop_front() {
            let src = index[&(a, b)];
            for x in self.alphabet.letters() {
                let na = a.and_then(|s| self.next(s, x));
                let nb = b.and_then(|s| other.next(s, x));
                if na.is_none() && nb.is_none() {
                    continue;
                }
                let next = (na, nb);
                let id = *index.entry(next).or_insert_with(|| {
                    order.push(next);
                    queue.push_back(next);
                    order.len() - 1
                });
                transitions.insert((src, x), id);
            }
        }
        let finals = order
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| {
                let fa = a.map_or(false, |s| self.finals.contains(&s));
                let fb = b.map_or(false, |s| other.finals.contains(&s));
                match op {
                    BoolOp::Union => fa || fb,
                    BoolOp::Intersection => fa && fb,
                    BoolOp::Difference => fa && !fb,
                }
            })
            .map(|(i, _)| i)
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet,
            state_count: order.len(),
            initial: 0,
            finals,
            transitions,
        }
        .minimize())
    }

    /// Complement relative to the full monoid of words.
    pub fn complement(&self) -> Dfa {
        // complete with an explicit dead state, then flip finals
        let dead = self.state_count;
        let mut transitions = self.transitions.clone();
        for p in 0..=self.state_count {
            for x in self.alphabet.letters() {
                transitions.entry((p, x)).or_insert(dead);
            }
        }
        let finals = (0..=self.state_count)
            .filter(|s| !self.finals.contains(s))
            .collect();
        Dfa {
            alphabet: self.alphabet,
            state_count: self.state_count + 1,
            initial: self.initial,
            finals,
            transitions,
        }
        .minimize()
    }

    /// Rotation closure: accepts `{ vu : uv ∈ L }`.
    pub fn cyc_closure(&self) -> Dfa {
        let this = self.minimize();
        let mut parts: Option<Nfa> = None;
        let finals = this.finals.clone();
        for q in 0..this.state_count {
            let tail = this.slice(&BTreeSet::from([q]), &finals).expect("valid states");
            let head = this
                .slice(&BTreeSet::from([this.initial]), &BTreeSet::from([q]))
                .expect("valid states");
            let rotated = tail.concat(&head).expect("same alphabet");
            parts = Some(match parts {
                None => rotated,
                Some(acc) => acc.union(&rotated).expect("same alphabet"),
            });
        }
        match parts {
            None => Dfa::empty_language(this.alphabet),
            Some(nfa) => determinize(&nfa),
        }
    }

    /// Language equality, decided on canonical minimized forms.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet && self.minimize() == other.minimize()
    }

    /// Per-state shortest distance to a final state; `None` for states that
    /// cannot reach one.
    fn distance_to_final(&self) -> Vec<Option<usize>> {
        let mut back: Vec<Vec<usize>> = vec![Vec::new(); self.state_count];
        for (&(p, _), &q) in &self.transitions {
            back[q].push(p);
        }
        let mut dist = vec![None; self.state_count];
        let mut queue = VecDeque::new();
        for &f in &self.finals {
            dist[f] = Some(0);
            queue.push_back(f);
        }
        while let Some(q) = queue.pop_front() {
            let d = dist[q].unwrap();
            for &p in &back[q] {
                if dist[p].is_none() {
                    dist[p] = Some(d + 1);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// All accepted words of length at most `max_len`, in shortlex order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        let dist = self.distance_to_final();
        let mut out = Vec::new();
        let mut path: Vec<Letter> = Vec::new();
        for n in 0..=max_len {
            self.enumerate_at(self.initial, n, &dist, &mut path, &mut out);
        }
        out
    }

    fn enumerate_at(
        &self,
        state: usize,
        remaining: usize,
        dist: &[Option<usize>],
        path: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        match dist[state] {
            Some(d) if d <= remaining => {}
            _ => return,
        }
        if remaining == 0 {
            if self.finals.contains(&state) {
                out.push(Word::new(path.clone(), self.alphabet));
            }
            return;
        }
        for x in self.alphabet.letters() {
            if let Some(q) = self.next(state, x) {
                path.push(x);
                self.enumerate_at(q, remaining - 1, dist, path, out);
                path.pop();
            }
        }
    }

    /// Exact number of accepted words per length, via repeated vector–matrix
    /// products over big integers.
    pub fn count_words(&self, max_len: usize) -> CountVector {
        let mut v: Vec<BigUint> = vec![BigUint::from(0u32); self.state_count];
        v[self.initial] = BigUint::from(1u32);
        let mut counts = Vec::with_capacity(max_len + 1);
        let total = |v: &[BigUint]| -> BigUint {
            self.finals.iter().map(|&f| v[f].clone()).sum()
        };
        counts.push(total(&v));
        for _ in 0..max_len {
            let mut next = vec![BigUint::from(0u32); self.state_count];
            for (&(p, _), &q) in &self.transitions {
                let add = v[p].clone();
                next[q] += add;
            }
            v = next;
            counts.push(total(&v));
        }
        CountVector { length: max_len, counts }
    }

    /// Trim, merge indistinguishable states and renumber canonically.
    /// Idempotent; equal languages yield structurally equal results.
    pub fn minimize(&self) -> Dfa {
        // forward reachability
        let mut reach = vec![false; self.state_count];
        let mut queue = VecDeque::from([self.initial]);
        reach[self.initial] = true;
        while let Some(p) = queue.pop_front() {
            for x in self.alphabet.letters() {
                if let Some(q) = self.next(p, x) {
                    if !reach[q] {
                        reach[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        let live: Vec<bool> = self
            .distance_to_final()
            .iter()
            .zip(&reach)
            .map(|(d, &r)| r && d.is_some())
            .collect();
        if !live[self.initial] {
            return Dfa::empty_language(self.alphabet);
        }

        // partition refinement over live states plus one implicit dead class
        let letters: Vec<Letter> = self.alphabet.letters().collect();
        let dead_class = usize::MAX;
        let mut class: Vec<usize> = (0..self.state_count)
            .map(|s| if self.finals.contains(&s) { 1 } else { 0 })
            .collect();
        let mut class_count = 2;
        loop {
            let mut signature_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next_class = vec![0usize; self.state_count];
            let mut next_count = 0usize;
            for s in 0..self.state_count {
                if !live[s] {
                    continue;
                }
                let sig: Vec<usize> = letters
                    .iter()
                    .map(|&x| match self.next(s, x) {
                        Some(q) if live[q] => class[q],
                        _ => dead_class,
                    })
                    .collect();
                let key = (class[s], sig);
                let id = *signature_index.entry(key).or_insert_with(|| {
                    next_count += 1;
                    next_count - 1
                });
                next_class[s] = id;
            }
            let stable = next_count == class_count;
            class = next_class;
            class_count = next_count;
            if stable {
                break;
            }
        }

        // canonical renumbering by BFS discovery in letter order
        let mut repr: HashMap<usize, usize> = HashMap::new(); // class -> new id
        let mut class_state: Vec<usize> = Vec::new(); // new id -> a member state
        let start = class[self.initial];
        repr.insert(start, 0);
        class_state.push(self.initial);
        let mut transitions = BTreeMap::new();
        let mut finals = BTreeSet::new();
        let mut i = 0;
        while i < class_state.len() {
            let s = class_state[i];
            if self.finals.contains(&s) {
                finals.insert(i);
            }
            for &x in &letters {
                match self.next(s, x) {
                    Some(q) if live[q] => {
                        let c = class[q];
                        let id = *repr.entry(c).or_insert_with(|| {
                            class_state.push(q);
                            class_state.len() - 1
                        });
                        transitions.insert((i, x), id);
                    }
                    _ => {}
                }
            }
            i += 1;
        }
        Dfa {
            alphabet: self.alphabet,
            state_count: class_state.len(),
            initial: 0,
            finals,
            transitions,
        }
    }

    /// Letters that can start an accepted word.
    pub fn first_letters(&self) -> BTreeSet<Letter> {
        let m = self.minimize();
        m.alphabet
            .letters()
            .filter(|&x| m.next(m.initial, x).is_some())
            .collect()
    }

    /// Letters that can end an accepted word.
    pub fn last_letters(&self) -> BTreeSet<Letter> {
        let m = self.minimize();
        m.transitions
            .iter()
            .filter(|(_, q)| m.finals.contains(q))
            .map(|(&(_, x), _)| x)
            .collect()
    }
}

/// Subset construction followed by canonical minimization.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let start: BTreeSet<usize> = nfa.initial().clone();
    let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut order: Vec<BTreeSet<usize>> = vec![start.clone()];
    let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::from([start]);
    let mut transitions = BTreeMap::new();
    while let Some(set) = queue.pop_front() {
        let src = index[&set];
        for x in nfa.alphabet().letters() {
            let next = nfa.step(&set, x);
            if next.is_empty() {
                continue;
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = order.len();
                    index.insert(next.clone(), id);
                    order.push(next.clone());
                    queue.push_back(next);
                    id
                }
            };
            transitions.insert((src, x), id);
        }
    }
    let finals = order
        .iter()
        .enumerate()
        .filter(|(_, set)| set.iter().any(|s| nfa.finals().contains(s)))
        .map(|(i, _)| i)
        .collect();
    Dfa {
        alphabet: nfa.alphabet(),
        state_count: order.len(),
        initial: 0,
        finals,
        transitions,
    }
    .minimize()
}

/// Convenience alias for [`determinize`], which always minimizes.
pub fn determinize_minimize(nfa: &Nfa) -> Dfa {
    determinize(nfa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn ab() -> InvolutiveAlphabet {
        InvolutiveAlphabet::of_rank(2)
    }

    fn w(text: &str) -> Word {
        Word::parse(text, ab()).unwrap()
    }

    fn dfa_of(texts: &[&str]) -> Dfa {
        let mut nfa = Nfa::empty_language(ab());
        for t in texts {
            nfa = nfa.union(&Nfa::word(&w(t))).unwrap();
        }
        determinize(&nfa)
    }

    #[test]
    fn determinize_merges_duplicate_branches() {
        let n = Nfa::word(&w("a")).union(&Nfa::word(&w("a"))).unwrap();
        let d = determinize(&n);
        assert_eq!(d.state_count, 2);
        assert!(d.accepts(&w("a")));
        assert!(!d.accepts(&w("aa")));
    }

    #[test]
    fn minimize_star_star_collapses() {
        let astar = Nfa::word(&w("a")).star();
        let astar_astar = astar.concat(&astar).unwrap();
        let d = determinize(&astar_astar);
        // a* has a single accepting state with an a-loop
        assert_eq!(d.state_count, 1);
        assert_eq!(d.finals.len(), 1);
        assert_eq!(d.next(0, Letter::from_id(0)), Some(0));
    }

    #[test]
    fn minimize_is_idempotent() {
        let d = dfa_of(&["ab", "ba", "a"]);
        assert_eq!(d.minimize(), d.minimize().minimize());
    }

    #[test]
    fn combine_union_intersection_difference() {
        let astar = determinize(&Nfa::word(&w("a")).star());
        let aastar = determinize(&Nfa::word(&w("aa")).star());
        let inter = astar.combine(&aastar, BoolOp::Intersection).unwrap();
        assert!(inter.equivalent(&aastar));

        let one = determinize(&Nfa::epsilon(ab()));
        let aplus = astar.combine(&one, BoolOp::Difference).unwrap();
        assert!(aplus.accepts(&w("a")));
        assert!(!aplus.accepts(&w("1")));
        assert!(aplus.equivalent(&determinize(&Nfa::word(&w("a")).plus())));

        let union = inter.combine(&aplus, BoolOp::Union).unwrap();
        assert!(union.accepts(&w("1")));
        assert!(union.accepts(&w("aaa")));
    }

    #[test]
    fn complement_is_involutive() {
        let d = dfa_of(&["ab", "b"]);
        assert!(d.complement().complement().equivalent(&d));
        assert!(d.complement().accepts(&w("1")));
        assert!(!d.complement().accepts(&w("ab")));
    }

    #[test]
    fn cyc_closure_of_single_words() {
        let d = dfa_of(&["ab"]);
        let c = d.cyc_closure();
        assert_eq!(
            c.enumerate(2).iter().map(|u| u.to_string()).collect::<Vec<_>>(),
            vec!["ab", "ba"]
        );

        let d = dfa_of(&["aab"]);
        let c = d.cyc_closure();
        assert_eq!(
            c.enumerate(3).iter().map(|u| u.to_string()).collect::<Vec<_>>(),
            vec!["aab", "aba", "baa"]
        );
    }

    #[test]
    fn cyc_closure_is_idempotent_and_extensive() {
        let d = dfa_of(&["ab", "ba", "aab"]);
        let c = d.cyc_closure();
        assert!(c.cyc_closure().equivalent(&c));
        for u in d.enumerate(4) {
            assert!(c.accepts(&u));
        }
    }

    #[test]
    fn slice_of_ab_star_between_its_two_states() {
        // canonical minimized (ab)*: state 0 initial+final, 0 -a-> 1 -b-> 0
        let d = determinize(&Nfa::word(&w("ab")).star());
        assert_eq!(d.state_count, 2);
        let other = 1 - d.initial;
        let s = determinize(
            &d.slice(&BTreeSet::from([d.initial]), &BTreeSet::from([other])).unwrap(),
        );
        let expected = determinize(
            &Nfa::word(&w("a")).concat(&Nfa::word(&w("ba")).star()).unwrap(),
        );
        assert!(s.equivalent(&expected));
    }

    #[test]
    fn counts_match_powers_of_two() {
        let all = determinize(&Nfa::word(&w("a")).union(&Nfa::word(&w("b"))).unwrap().star());
        let counts = all.count_words(3);
        let expect: Vec<BigUint> = [1u32, 2, 4, 8].iter().map(|&n| BigUint::from(n)).collect();
        assert_eq!(counts.counts, expect);
    }

    #[test]
    fn enumerate_is_shortlex_sorted() {
        let d = dfa_of(&["ba", "ab", "a"]);
        let words: Vec<String> = d.enumerate(2).iter().map(|u| u.to_string()).collect();
        assert_eq!(words, vec!["a", "ab", "ba"]);
    }

    #[test]
    fn empty_language_behaves() {
        let e = Dfa::empty_language(ab());
        assert!(e.is_empty_language());
        assert!(e.shortest_word().is_none());
        assert_eq!(e.minimize(), e);
        assert!(!e.accepts(&w("1")));
    }
}
