//! Repetitiveness measures of strings, with exact closed forms for the
//! Thue-Morse words `t_n`.
//!
//! The general algorithms work on any byte string:
//!
//! * [`complexity`]: subword complexity `P(k)` and δ as an exact [`Rational`],
//! * [`factorizations`]: self-referencing LZ77, Lyndon factorization, BWT runs,
//! * [`attractors`]: string attractor verification and exhaustive minimum search.
//!
//! Alongside each sits the closed form for `t_n` (z = r = 2n,
//! ℓ = ⌊(3n-2)/2⌋, γ = 4 for n >= 4, δ = 10/(3 + 2^(4-n)) for n >= 3), so the
//! two can be cross-checked. [`reference`] holds brute-force versions of
//! every algorithm for testing.
//!
//! Positions are 1-based everywhere.
//!
//! ```
//! use tm_measures::{attractors, complexity, factorizations, words, Rational};
//!
//! let t6 = words::tm(6);
//! assert_eq!(complexity::delta(&t6)?, Rational::new(40, 13));
//! assert_eq!(factorizations::lz_size(&t6)?, 12);
//! let k6 = attractors::k_attractor(6)?;
//! assert!(attractors::is_attractor(&t6, &k6)?.is_attractor);
//! # Ok::<(), tm_measures::Error>(())
//! ```

pub mod attractors;
pub mod automaton;
pub mod complexity;
mod error;
pub mod factorizations;
mod rational;
pub mod reference;
pub mod report;
pub mod words;

pub use error::{Error, Result};
pub use rational::Rational;
pub use words::{ThueMorseIndex, Word};

// The guide under book/ is compiled here so its snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/complexity.md")]
    mod complexity {}
    #[doc = include_str!("../../../book/src/factorizations.md")]
    mod factorizations {}
    #[doc = include_str!("../../../book/src/attractors.md")]
    mod attractors {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
}
