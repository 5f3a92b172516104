#![allow(dead_code)]

pub mod props;

use std::path::PathBuf;

use ncgb::cli::{parse_problem, Problem};
use ncgb::words::Letter;
use ncgb::{Coefficient, LLex, NcPolynomial, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(format!("{name}.prob"))
}

pub fn load(name: &str) -> Problem {
    parse_problem(&std::fs::read_to_string(corpus(name)).unwrap()).unwrap()
}

pub fn word(
    letters: usize,
    len: impl Into<proptest::collection::SizeRange>,
) -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(0..letters as Letter, len)
}

pub fn coefficient() -> impl Strategy<Value = Coefficient> {
    (-5i64..=5, 1i64..=3)
        .prop_filter("non-zero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Coefficient::new(BigInt::from(n), BigInt::from(d)))
}

/// A polynomial with leading word `lead` and up to `tail` further terms of
/// smaller degree.
pub fn poly_with_lead(
    lead: Vec<Letter>,
    letters: usize,
    tail: usize,
) -> impl Strategy<Value = NcPolynomial> {
    let below = lead.len();
    (
        coefficient(),
        proptest::collection::vec((word(letters, 0..below.max(1)), coefficient()), 0..=tail),
    )
        .prop_map(move |(c, rest)| {
            let mut terms = vec![(Word::from(lead.clone()), c)];
            terms.extend(
                rest.into_iter()
                    .filter(|(w, _)| w.len() < below)
                    .map(|(w, c)| (Word::from(w), c)),
            );
            NcPolynomial::from_terms(terms, &LLex)
        })
}

/// A polynomial with a random leading word of length `1..=max_len`.
pub fn poly(letters: usize, max_len: usize, tail: usize) -> impl Strategy<Value = NcPolynomial> {
    word(letters, 1..=max_len).prop_flat_map(move |lead| poly_with_lead(lead, letters, tail))
}

/// Any polynomial, possibly zero, of degree at most `max_len`.
pub fn any_poly(
    letters: usize,
    max_len: usize,
    terms: usize,
) -> impl Strategy<Value = NcPolynomial> {
    proptest::collection::vec((word(letters, 0..=max_len), coefficient()), 0..=terms).prop_map(
        |ts| NcPolynomial::from_terms(ts.into_iter().map(|(w, c)| (Word::from(w), c)), &LLex),
    )
}

pub fn split3(w: &[Letter], start: usize, len: usize) -> (Word, Word, Word) {
    (
        Word::from(&w[..start]),
        Word::from(&w[start..start + len]),
        Word::from(&w[start + len..]),
    )
}

/// A random factor `(start, len)` of a word of length `n >= 1`.
pub fn factor_of(n: usize) -> impl Strategy<Value = (usize, usize)> {
    (0..n).prop_flat_map(move |s| (Just(s), 1..=n - s))
}
