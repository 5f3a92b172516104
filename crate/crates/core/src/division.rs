//! The non-commutative division algorithm.
//!
//! Divisors are scanned by ascending index; when the chosen divisor's leading
//! word occurs several times in the current leading word, the leftmost
//! occurrence is used.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polynomial::{merge_sub, Coefficient, NcPolynomial};
use crate::words::{find_factor, Letter, Word, WordOrder};

/// Maps leading words to the smallest divisor index carrying them, so that the
/// reducer for a word is found by probing its factors instead of scanning
/// every divisor.
#[derive(Debug, Clone, Default)]
pub struct LeadIndex {
    first_index: HashMap<Vec<Letter>, usize>,
    lengths: Vec<usize>,
}

impl LeadIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, word: &[Letter], index: usize) {
        self.first_index.entry(word.to_vec()).or_insert(index);
        if let Err(pos) = self.lengths.binary_search(&word.len()) {
            self.lengths.insert(pos, word.len());
        }
    }

    /// Smallest index whose leading word is a factor of `word`, together with
    /// the start of its leftmost occurrence.
    pub fn find_divisor(&self, word: &[Letter]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for &len in &self.lengths {
            if len > word.len() {
                break;
            }
            for start in 0..=word.len() - len {
                if let Some(&idx) = self.first_index.get(&word[start..start + len]) {
                    // strict comparison keeps the first (leftmost) start of the winner
                    if best.is_none_or(|(b, _)| idx < b) {
                        best = Some((idx, start));
                    }
                }
            }
        }
        best
    }

    pub fn is_reducible(&self, word: &[Letter]) -> bool {
        self.lengths
            .iter()
            .take_while(|&&l| l <= word.len())
            .any(|&len| {
                (0..=word.len() - len).any(|s| self.first_index.contains_key(&word[s..s + len]))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTerm {
    pub index: usize,
    pub coefficient: Coefficient,
    pub left: Word,
    pub right: Word,
}

/// Quotient tuples and remainder with `f = Σ c·w·g_i·w' + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<QuotientTerm>,
    pub remainder: NcPolynomial,
}

pub(crate) fn build_index(divisors: &[NcPolynomial]) -> Result<LeadIndex> {
    let mut index = LeadIndex::new();
    for (k, g) in divisors.iter().enumerate() {
        let (_, w) = g.leading().map_err(|_| Error::ZeroDivisor(k))?;
        index.insert(w, k);
    }
    Ok(index)
}

/// Divides `f` by `divisors`.
pub fn divide(
    f: &NcPolynomial,
    divisors: &[NcPolynomial],
    ord: &dyn WordOrder,
) -> Result<DivisionResult> {
    let index = build_index(divisors)?;
    let result = divide_indexed(f, divisors, &index, ord, true);
    #[cfg(test)]
    result
        .check(f, divisors, ord)
        .unwrap_or_else(|e| panic!("division invariant violated: {e}"));
    Ok(result)
}

/// Remainder part of [`divide`].
pub fn normal_remainder(
    f: &NcPolynomial,
    divisors: &[NcPolynomial],
    ord: &dyn WordOrder,
) -> Result<NcPolynomial> {
    let index = build_index(divisors)?;
    Ok(divide_indexed(f, divisors, &index, ord, false).remainder)
}

pub(crate) fn divide_indexed(
    f: &NcPolynomial,
    divisors: &[NcPolynomial],
    index: &LeadIndex,
    ord: &dyn WordOrder,
    record: bool,
) -> DivisionResult {
    let mut quotients = Vec::new();
    let mut remainder = NcPolynomial::zero();
    let mut v: Vec<(Word, Coefficient)> = f.terms().to_vec();
    let mut start = 0;
    while start < v.len() {
        let (lw, lc) = &v[start];
        match index.find_divisor(lw) {
            Some((i, pos)) => {
                let g = &divisors[i];
                let (gc, gw) = g.leading().expect("divisors are non-zero");
                let c = lc / gc;
                let left = Word::from(&lw[..pos]);
                let right = Word::from(&lw[pos + gw.len()..]);
                let reduced = merge_sub(&v[start..], &c, &left, g.terms(), &right, ord);
                debug_assert!(reduced
                    .first()
                    .is_none_or(|(w, _)| ord.cmp_words(w, &v[start].0).is_lt()));
                v = reduced;
                start = 0;
                if record {
                    quotients.push(QuotientTerm {
                        index: i,
                        coefficient: c,
                        left,
                        right,
                    });
                }
            }
            None => {
                let (w, c) = v[start].clone();
                remainder.push_smaller(w, c);
                start += 1;
            }
        }
    }
    DivisionResult {
        quotients,
        remainder,
    }
}

impl DivisionResult {
    /// Checks reconstruction, irreducibility of the remainder, the degree
    /// bounds on quotient terms, and the minimal-index property.
    pub fn check(
        &self,
        f: &NcPolynomial,
        divisors: &[NcPolynomial],
        ord: &dyn WordOrder,
    ) -> std::result::Result<(), String> {
        let mut rebuilt = self.remainder.clone();
        for q in &self.quotients {
            let g = divisors
                .get(q.index)
                .ok_or_else(|| format!("quotient index {} out of range", q.index))?;
            rebuilt =
                rebuilt.sub_scaled_sandwich(&-q.coefficient.clone(), &q.left, g, &q.right, ord);
        }
        if &rebuilt != f {
            return Err("f != Σ c·w·g·w' + remainder".into());
        }
        let leads: Vec<&Word> = divisors
            .iter()
            .map(|g| g.leading_word().ok_or("zero divisor"))
            .collect::<std::result::Result<_, _>>()?;
        for w in self.remainder.support() {
            if leads.iter().any(|lw| find_factor(w, lw).is_some()) {
                return Err(format!("remainder word {w:?} is reducible"));
            }
        }
        let f_lead = f.leading_word();
        for q in &self.quotients {
            let placed = leads[q.index].sandwich(&q.left, &q.right);
            match f_lead {
                Some(fl) if ord.cmp_words(&placed, fl).is_le() => {}
                _ => return Err(format!("quotient term {placed:?} exceeds Lw(f)")),
            }
            if leads[..q.index]
                .iter()
                .any(|lw| find_factor(&placed, lw).is_some())
            {
                return Err(format!(
                    "quotient term {placed:?} divisible by an earlier divisor than {}",
                    q.index
                ));
            }
            if q.coefficient.is_zero() {
                return Err("zero quotient coefficient".into());
            }
        }
        if let (Some(rl), Some(fl)) = (self.remainder.leading_word(), f_lead) {
            if ord.cmp_words(rl, fl).is_gt() {
                return Err("Lw(remainder) exceeds Lw(f)".into());
            }
        }
        Ok(())
    }
}
