//! Cyclic avoidance of abelian and ordinary powers in finite words.
//!
//! A finite word `w` avoids abelian `N`-powers *cyclically* if every abelian
//! `N`-power occurring in the periodic infinite word `w^ω` has period at
//! least `|w|`. This crate decides that property (and its circular and
//! linear relatives, for abelian and for ordinary, possibly fractional,
//! powers), constructs avoiders of every length, and exhaustively verifies
//! the combinatorial facts the constructions rest on:
//!
//! * [`word`] — words over small alphabets, Parikh vectors, balance, and the
//!   prefix-count tables every detector uses;
//! * [`avoidance`] — the detectors, witness occurrences, and JSON reports;
//! * [`morphism`] — the builtin morphism catalog (`sigma3`, `sigma4`,
//!   Keränen's abelian-square-free morphism, Thue-Morse, Justin's morphism),
//!   fixed-point prefixes, and exact bounded-length language factors;
//! * [`constructions`] — binary length-`n` words avoiding abelian 8-powers
//!   cyclically, marked words over 3-5 letters, and arbitrarily long morphic
//!   witnesses;
//! * [`search`] — pruned exhaustive counting (OEIS A334831), witness
//!   hunting, nonexistence certificates, fixed-point factor searches, and
//!   the finite balance checks;
//! * [`repro`] — the reproduction suite that re-derives all of the above as
//!   one pass/fail table.

pub mod avoidance;
pub mod constructions;
pub mod error;
pub mod morphism;
pub mod rational;
pub mod repro;
pub mod search;
pub mod word;

pub use avoidance::{
    circular_abelian_avoids, circular_ordinary_avoids, cyclic_abelian_avoids,
    cyclic_ordinary_avoids, find_abelian_power, is_abelian_n_free, linear_abelian_avoids,
    linear_ordinary_avoids, min_avoided_abelian_exponent, AvoidanceReport, Kind, MinExponent,
    Mode, PeriodScan, PowerOccurrence,
};
pub use constructions::{
    a_infinity_witness, build_binary_avoider, build_marked_avoider, ConstructionRecipe, Method,
};
pub use error::{Error, Result};
pub use morphism::{builtin_morphism, Morphism};
pub use rational::{format_exponent, format_rational, parse_exponent, Rational};
pub use search::{
    count_cyclic_avoiders, find_witness, justin_factor_witness, run_search,
    thue_morse_factor_witness, verify_delta_lemmas, LemmaCheckReport, SearchOutcome, SearchTask,
    Want,
};
pub use word::{delta, gcd_criterion, parikh, parse_word_file, ParikhVector, PrefixCountTable, Word};
