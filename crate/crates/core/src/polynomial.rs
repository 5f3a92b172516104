//! Polynomials in non-commuting variables with exact rational coefficients.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{concat3, Letter, Word, WordOrder};

pub type Coefficient = BigRational;

/// A finitely supported map from words to non-zero rationals.
///
/// Terms are kept sorted descending under the word ordering that built the
/// polynomial, so the first term is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPolynomial {
    terms: Vec<(Word, Coefficient)>,
}

impl std::fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){w:?}")?;
        }
        Ok(())
    }
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Coefficient::one(), Word::empty())
    }

    pub fn monomial(c: Coefficient, w: Word) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPolynomial {
            terms: vec![(w, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms: like words are combined,
    /// zeros dropped, and the result sorted under `ord`.
    pub fn from_terms<I>(terms: I, ord: &dyn WordOrder) -> Self
    where
        I: IntoIterator<Item = (Word, Coefficient)>,
    {
        let mut terms: Vec<(Word, Coefficient)> = terms.into_iter().collect();
        terms.sort_by(|a, b| ord.cmp_words(&b.0, &a.0));
        let mut out: Vec<(Word, Coefficient)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => *lc += c,
                _ => out.push((w, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        NcPolynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending word order.
    pub fn terms(&self) -> &[(Word, Coefficient)] {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.iter().map(|(w, _)| w)
    }

    pub fn coefficient(&self, w: &[Letter]) -> Coefficient {
        self.terms
            .iter()
            .find(|(u, _)| u.letters() == w)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coefficient::zero)
    }

    /// Leading coefficient and leading word.
    pub fn leading(&self) -> Result<(&Coefficient, &Word)> {
        self.terms
            .first()
            .map(|(w, c)| (c, w))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    /// Maximal degree of a support word; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(w, _)| w.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((w, _)) => self.terms.iter().all(|(u, _)| u.degree() == w.degree()),
        }
    }

    /// `left · self · right`. Two-sided multiplication by words preserves the
    /// term order, so no re-sorting is needed.
    pub fn sandwich(&self, left: &[Letter], right: &[Letter]) -> Self {
        if left.is_empty() && right.is_empty() {
            return self.clone();
        }
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Word::from(concat3(left, w, right)), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPolynomial {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        NcPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// `self + c·g`
    pub fn add_scaled(&self, c: &Coefficient, g: &NcPolynomial, ord: &dyn WordOrder) -> Self {
        self.sub_scaled_sandwich(&-c, &[], g, &[], ord)
    }

    pub fn add(&self, g: &NcPolynomial, ord: &dyn WordOrder) -> Self {
        self.add_scaled(&Coefficient::one(), g, ord)
    }

    pub fn sub(&self, g: &NcPolynomial, ord: &dyn WordOrder) -> Self {
        self.add_scaled(&-Coefficient::one(), g, ord)
    }

    /// `self − c·left·g·right`, merged in one pass.
    pub fn sub_scaled_sandwich(
        &self,
        c: &Coefficient,
        left: &[Letter],
        g: &NcPolynomial,
        right: &[Letter],
        ord: &dyn WordOrder,
    ) -> Self {
        NcPolynomial {
            terms: merge_sub(&self.terms, c, left, &g.terms, right, ord),
        }
    }

    /// Product in the free algebra.
    pub fn mul(&self, g: &NcPolynomial, ord: &dyn WordOrder) -> Self {
        let mut terms = Vec::with_capacity(self.len() * g.len());
        for (u, a) in &self.terms {
            for (v, b) in &g.terms {
                terms.push((u.concat(v), a * b));
            }
        }
        Self::from_terms(terms, ord)
    }

    pub fn pow(&self, k: u32, ord: &dyn WordOrder) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self, ord);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn make_monic(&self) -> Result<Self> {
        let (lc, _) = self.leading()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.recip()))
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|(_, c)| c.is_one())
    }

    /// Everything except the leading term.
    pub fn tail(&self) -> Self {
        NcPolynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// Appends a term that is smaller than every existing term.
    pub(crate) fn push_smaller(&mut self, w: Word, c: Coefficient) {
        debug_assert!(!c.is_zero());
        self.terms.push((w, c));
    }
}

pub(crate) fn merge_sub(
    a: &[(Word, Coefficient)],
    c: &Coefficient,
    left: &[Letter],
    b: &[(Word, Coefficient)],
    right: &[Letter],
    ord: &dyn WordOrder,
) -> Vec<(Word, Coefficient)> {
    if c.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut p = 0;
    let mut bi = b
        .iter()
        .map(|(w, d)| (concat3(left, w, right), d * c))
        .peekable();
    while p < a.len() {
        let Some((bw, _)) = bi.peek() else { break };
        match ord.cmp_words(&a[p].0, bw) {
            Ordering::Greater => {
                out.push(a[p].clone());
                p += 1;
            }
            Ordering::Less => {
                let (w, d) = bi.next().unwrap();
                out.push((Word::from(w), -d));
            }
            Ordering::Equal => {
                let (_, d) = bi.next().unwrap();
                let s = &a[p].1 - d;
                if !s.is_zero() {
                    out.push((a[p].0.clone(), s));
                }
                p += 1;
            }
        }
    }
    out.extend(a[p..].iter().cloned());
    out.extend(bi.map(|(w, d)| (Word::from(w), -d)));
    out
}
