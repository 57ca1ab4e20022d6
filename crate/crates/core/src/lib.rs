//! Conjugacy languages relative to rational subsets of finitely generated
//! free groups, together with the semilinear constructions for virtually
//! abelian groups presented as `Z^m` with a finite transversal action.
//!
//! The crate is organized around a small automata toolkit over involutive
//! alphabets ([`nfa`], [`dfa`], [`regex`]), free-group word algebra
//! ([`word`]), saturation of rational subsets ([`benois`]), the conjugacy
//! language constructions ([`conj`]), relative conjugacy growth
//! ([`growth`]), decision procedures ([`gcp`]), and semilinear / virtually
//! abelian machinery ([`semilinear`], [`va`]).

pub mod alphabet;
pub mod autfile;
pub mod benois;
pub mod conj;
pub mod dfa;
pub mod error;
pub mod gcp;
pub mod growth;
pub mod nfa;
pub mod regex;
pub mod semilinear;
pub mod va;
pub mod word;

pub use alphabet::{InvolutiveAlphabet, Letter};
pub use benois::{benois_reduce, reduced_words_dfa, RationalSubset};
pub use dfa::{determinize, determinize_minimize, BoolOp, CountVector, Dfa};
pub use error::Error;
pub use nfa::{rational_op, Nfa, RationalOp};
pub use regex::parse_regex;
pub use word::{conj_canonical, conjugacy_test, cyclic_reduce, CyclicReduction, Word};
