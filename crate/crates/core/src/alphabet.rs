//! Involutive alphabets: free-group generators together with their formal
//! inverses, under a fixed total order `a < a⁻¹ < b < b⁻¹ < …`.
//!
//! Letters are encoded as small integers: generator `i` gets id `2i`, its
//! inverse gets `2i + 1`, so the involution is a single xor. Text form uses
//! `a..z` for generators and `A..Z` for their inverses.

use crate::error::Error;
use std::fmt;

pub const MAX_RANK: u8 = 26;

/// One symbol of an involutive alphabet: a generator or a formal inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn generator(index: u8) -> Letter {
        debug_assert!(index < MAX_RANK);
        Letter(index << 1)
    }

    pub fn inverse_of_generator(index: u8) -> Letter {
        debug_assert!(index < MAX_RANK);
        Letter(index << 1 | 1)
    }

    pub fn from_id(id: u8) -> Letter {
        Letter(id)
    }

    pub fn id(self) -> u8 {
        self.0
    }

    /// The involution. `x.inverse().inverse() == x` and never a fixpoint.
    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn generator_index(self) -> u8 {
        self.0 >> 1
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a'..='z' => Some(Letter::generator(c as u8 - b'a')),
            'A'..='Z' => Some(Letter::inverse_of_generator(c as u8 - b'A')),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        let g = self.generator_index();
        if self.is_inverse() {
            (b'A' + g) as char
        } else {
            (b'a' + g) as char
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A rank-`r` free-group alphabet `X ∪ X⁻¹` with its involution and the
/// fixed shortlex order on letters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct InvolutiveAlphabet {
    rank: u8,
}

impl InvolutiveAlphabet {
    pub fn new(rank: u8) -> Result<InvolutiveAlphabet, Error> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::BadRank(rank));
        }
        Ok(InvolutiveAlphabet { rank })
    }

    /// Rank-`r` alphabet; panics outside `1..=26`. Use [`new`](Self::new)
    /// for fallible construction.
    pub fn of_rank(rank: u8) -> InvolutiveAlphabet {
        InvolutiveAlphabet::new(rank).expect("rank must be between 1 and 26")
    }

    pub fn rank(self) -> u8 {
        self.rank
    }

    /// Number of letters, `2 * rank`.
    pub fn size(self) -> usize {
        2 * self.rank as usize
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.generator_index() < self.rank
    }

    /// All letters in the fixed order `a < A < b < B < …`.
    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.size() as u8).map(Letter::from_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_is_fixpoint_free_and_order_two() {
        let ab = InvolutiveAlphabet::of_rank(2);
        for x in ab.letters() {
            assert_ne!(x, x.inverse());
            assert_eq!(x, x.inverse().inverse());
        }
    }

    #[test]
    fn letter_order_interleaves_generators_and_inverses() {
        let ab = InvolutiveAlphabet::of_rank(2);
        let chars: String = ab.letters().map(Letter::to_char).collect();
        assert_eq!(chars, "aAbB");
    }

    #[test]
    fn char_round_trip() {
        for c in ['a', 'z', 'A', 'Z', 'm', 'Q'] {
            assert_eq!(Letter::from_char(c).unwrap().to_char(), c);
        }
        assert!(Letter::from_char('1').is_none());
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(InvolutiveAlphabet::new(0).is_err());
        assert!(InvolutiveAlphabet::new(27).is_err());
        assert!(InvolutiveAlphabet::new(26).is_ok());
    }
}
