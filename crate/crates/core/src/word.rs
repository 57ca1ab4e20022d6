//! Free-group word algebra: free reduction, cyclic reduction with a
//! conjugator witness, rotations, and conjugacy testing.
//!
//! Throughout, the conjugator convention is `w = z⁻¹ · core · z`; all call
//! sites convert into this orientation.

use crate::alphabet::{InvolutiveAlphabet, Letter};
use crate::error::Error;
use std::fmt;

/// A word over an involutive alphabet. Not necessarily reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: InvolutiveAlphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: InvolutiveAlphabet) -> Word {
        debug_assert!(letters.iter().all(|&x| alphabet.contains(x)));
        Word { letters, alphabet }
    }

    pub fn empty(alphabet: InvolutiveAlphabet) -> Word {
        Word { letters: Vec::new(), alphabet }
    }

    /// Parses `a..z` / `A..Z` text; `"1"` and `""` both denote the empty word.
    pub fn parse(text: &str, alphabet: InvolutiveAlphabet) -> Result<Word, Error> {
        if text == "1" {
            return Ok(Word::empty(alphabet));
        }
        let mut letters = Vec::with_capacity(text.len());
        for (pos, c) in text.chars().enumerate() {
            let x = Letter::from_char(c)
                .ok_or_else(|| Error::syntax(pos, format!("invalid letter '{c}'")))?;
            if !alphabet.contains(x) {
                return Err(Error::LetterOutOfRange { letter: c, rank: alphabet.rank() });
            }
            letters.push(x);
        }
        Ok(Word { letters, alphabet })
    }

    pub fn alphabet(&self) -> InvolutiveAlphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Prefix with `i` letters; the whole word when `i` exceeds the length.
    pub fn prefix(&self, i: usize) -> Word {
        let k = i.min(self.len());
        Word::new(self.letters[..k].to_vec(), self.alphabet)
    }

    /// Formal inverse: reversed order, each letter involuted.
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|x| x.inverse()).collect();
        Word { letters, alphabet: self.alphabet }
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, alphabet: self.alphabet }
    }

    /// Free reduction: cancels adjacent `x x⁻¹` pairs until none remain.
    /// Idempotent and length-non-increasing.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if stack.last() == Some(&x.inverse()) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        Word { letters: stack, alphabet: self.alphabet }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Reduced, and the first letter is not the inverse of the last. The
    /// empty word and single letters are cyclically reduced.
    pub fn is_cyclically_reduced(&self) -> bool {
        if !self.is_reduced() {
            return false;
        }
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => f != l.inverse(),
            _ => true,
        }
    }

    /// The distinct cyclic permutations of the word, in rotation order.
    pub fn rotations(&self) -> Vec<Word> {
        let n = self.len();
        if n == 0 {
            return vec![self.clone()];
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut letters = Vec::with_capacity(n);
            letters.extend_from_slice(&self.letters[i..]);
            letters.extend_from_slice(&self.letters[..i]);
            let w = Word::new(letters, self.alphabet);
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }

    /// Shortlex comparison: length first, then letter-id lexicographic.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for Word {
    /// The empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for x in &self.letters {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Result of cyclic reduction: `input =_G conjugator⁻¹ · core · conjugator`
/// with `core` cyclically reduced and both words reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicReduction {
    pub core: Word,
    pub conjugator: Word,
}

/// Strips matching first/last letters off the free reduction of `w`,
/// returning the cyclically reduced core and the stripping conjugator.
pub fn cyclic_reduce(w: &Word) -> CyclicReduction {
    let reduced = w.reduce();
    let mut letters = reduced.letters;
    let mut stripped: Vec<Letter> = Vec::new();
    while letters.len() >= 2 && *letters.first().unwrap() == letters.last().unwrap().inverse() {
        stripped.push(letters[0]);
        letters.pop();
        letters.remove(0);
    }
    let core = Word::new(letters, w.alphabet);
    // stripped prefix p gives w = p · core · p⁻¹, so the conjugator is p⁻¹
    let conjugator = Word::new(stripped, w.alphabet).inverse();
    CyclicReduction { core, conjugator }
}

/// Shortlex conjugacy normal form: the shortlex-least rotation of the
/// cyclically reduced core. Conjugate inputs yield identical output.
pub fn conj_canonical(w: &Word) -> Word {
    let core = cyclic_reduce(w).core;
    core.rotations()
        .into_iter()
        .min_by(|a, b| a.shortlex_cmp(b))
        .expect("rotations are never empty")
}

/// Conjugacy test with witness: returns `z` with `reduce(z⁻¹ u z) = reduce(v)`
/// when `u ∼ v`, and `None` otherwise.
pub fn conjugacy_test(u: &Word, v: &Word) -> Option<Word> {
    let cu = cyclic_reduce(u);
    let cv = cyclic_reduce(v);
    if cu.core.len() != cv.core.len() {
        return None;
    }
    let n = cu.core.len();
    if n == 0 {
        return Some(Word::empty(u.alphabet()));
    }
    for i in 0..n {
        let mut rot = Vec::with_capacity(n);
        rot.extend_from_slice(&cu.core.letters()[i..]);
        rot.extend_from_slice(&cu.core.letters()[..i]);
        if rot == cv.core.letters() {
            // u = zu⁻¹ c zu, v = zv⁻¹ (p⁻¹ c p) zv with p the length-i
            // prefix of c, so z = zu⁻¹ p zv conjugates u to v.
            let p = cu.core.prefix(i);
            let z = cu.conjugator.inverse().concat(&p).concat(&cv.conjugator).reduce();
            debug_assert_eq!(
                z.inverse().concat(u).concat(&z).reduce(),
                v.reduce(),
                "conjugacy witness must verify literally"
            );
            return Some(z);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text, InvolutiveAlphabet::of_rank(2)).unwrap()
    }

    #[test]
    fn reduce_cancels_adjacent_inverses() {
        assert_eq!(w("abB").reduce(), w("a"));
        assert_eq!(w("aA").reduce(), w("1"));
        assert_eq!(w("abBA").reduce(), w("1"));
        assert_eq!(w("ab").reduce(), w("ab"));
    }

    #[test]
    fn reduce_of_word_times_inverse_is_trivial() {
        for text in ["a", "ab", "aBab", "bbAA"] {
            let u = w(text);
            assert!(u.concat(&u.inverse()).reduce().is_empty());
        }
    }

    #[test]
    fn cyclic_reduce_strips_symmetric_wings() {
        let r = cyclic_reduce(&w("Aba"));
        assert_eq!(r.core, w("b"));
        assert_eq!(r.conjugator, w("a"));

        let r = cyclic_reduce(&w("ab"));
        assert_eq!(r.core, w("ab"));
        assert!(r.conjugator.is_empty());
    }

    #[test]
    fn cyclic_reduce_witness_identity() {
        for text in ["Aba", "BAba", "abAB", "aa", "1", "baB"] {
            let u = w(text);
            let r = cyclic_reduce(&u);
            assert!(r.core.is_cyclically_reduced());
            let back = r.conjugator.inverse().concat(&r.core).concat(&r.conjugator).reduce();
            assert_eq!(back, u.reduce());
            assert_eq!(r.core.len() + 2 * r.conjugator.len(), u.reduce().len());
        }
    }

    #[test]
    fn trivial_word_has_empty_core_and_conjugator() {
        let r = cyclic_reduce(&w("abBA"));
        assert!(r.core.is_empty());
        assert!(r.conjugator.is_empty());
    }

    #[test]
    fn cyclically_reduced_predicate() {
        assert!(w("aa").is_cyclically_reduced());
        assert!(w("ab").is_cyclically_reduced());
        assert!(!w("abA").is_cyclically_reduced());
        assert!(w("1").is_cyclically_reduced());
        assert!(w("b").is_cyclically_reduced());
        assert!(!w("aAb").is_cyclically_reduced());
    }

    #[test]
    fn rotations_deduplicate() {
        let rots = w("aa").rotations();
        assert_eq!(rots, vec![w("aa")]);
        let rots = w("aab").rotations();
        assert_eq!(rots, vec![w("aab"), w("aba"), w("baa")]);
    }

    #[test]
    fn rotations_of_cyclically_reduced_stay_cyclically_reduced() {
        for text in ["ab", "aab", "abAB", "ba"] {
            for r in w(text).rotations() {
                assert!(r.is_cyclically_reduced(), "{r}");
            }
        }
    }

    #[test]
    fn conjugacy_witnesses() {
        let z = conjugacy_test(&w("ab"), &w("ba")).unwrap();
        assert_eq!(z, w("a"));
        assert!(conjugacy_test(&w("a"), &w("A")).is_none());
        let z = conjugacy_test(&w("Aba"), &w("b")).unwrap();
        assert_eq!(z.inverse().concat(&w("Aba")).concat(&z).reduce(), w("b"));
    }

    #[test]
    fn canonical_form_picks_least_rotation() {
        assert_eq!(conj_canonical(&w("ba")), w("ab"));
        assert_eq!(conj_canonical(&w("Aba")), w("b"));
        assert_eq!(conj_canonical(&w("1")), w("1"));
    }

    #[test]
    fn shortlex_orders_by_length_then_letters() {
        assert!(w("b").shortlex_cmp(&w("aa")).is_lt());
        assert!(w("a").shortlex_cmp(&w("A")).is_lt());
        assert!(w("A").shortlex_cmp(&w("b")).is_lt());
    }
}
