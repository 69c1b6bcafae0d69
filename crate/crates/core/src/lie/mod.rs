//! Free Lie algebra arithmetic over an ordered, weighted alphabet.

pub mod algebra;
pub mod alphabet;
pub mod element;
pub mod grammar;
pub mod monomial;
pub mod words;

pub use algebra::FreeLie;
pub use alphabet::{cmp_weighted_deglex, Alphabet, AssocWord, Letter, Rank};
pub use element::{rat, ratio, LieElement, Rational};
pub use grammar::{format_element, parse_element};
pub use monomial::{is_regular_monomial, standard_bracketing, LieMonomial, Shape};
pub use words::{enumerate_regular_words, is_regular_word, regular_words_of_degree, witt_dim};
