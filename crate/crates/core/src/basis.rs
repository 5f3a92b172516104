use crate::division::{divide_indexed, DivisionResult, LeadIndex};
use crate::error::{Error, Result};
use crate::polynomial::NcPolynomial;
use crate::words::{Word, WordOrder};

/// Append-only list of monic generators with cached leading words.
#[derive(Debug, Clone, Default)]
pub struct BasisState {
    generators: Vec<NcPolynomial>,
    leading: Vec<Word>,
    index: LeadIndex,
}

impl BasisState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Normalizes every polynomial to monic form; rejects zero.
    pub fn from_polys<I: IntoIterator<Item = NcPolynomial>>(polys: I) -> Result<Self> {
        let mut basis = Self::new();
        for (k, p) in polys.into_iter().enumerate() {
            if p.is_zero() {
                return Err(Error::ZeroDivisor(k));
            }
            basis.push(p)?;
        }
        Ok(basis)
    }

    /// Appends `g` made monic and returns its index.
    pub fn push(&mut self, g: NcPolynomial) -> Result<usize> {
        let g = g.make_monic()?;
        let lw = g.leading_word().expect("non-zero").clone();
        let k = self.generators.len();
        self.index.insert(&lw, k);
        self.leading.push(lw);
        self.generators.push(g);
        Ok(k)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator(&self, i: usize) -> &NcPolynomial {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[NcPolynomial] {
        &self.generators
    }

    pub fn leading_word(&self, i: usize) -> &Word {
        &self.leading[i]
    }

    pub fn leading_words(&self) -> &[Word] {
        &self.leading
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })
        }
    }

    pub fn divide(&self, f: &NcPolynomial, ord: &dyn WordOrder) -> DivisionResult {
        divide_indexed(f, &self.generators, &self.index, ord, true)
    }

    pub fn normal_remainder(&self, f: &NcPolynomial, ord: &dyn WordOrder) -> NcPolynomial {
        divide_indexed(f, &self.generators, &self.index, ord, false).remainder
    }

    /// Whether some leading word is a factor of `w`.
    pub fn is_reducible(&self, w: &[crate::words::Letter]) -> bool {
        self.index.is_reducible(w)
    }

    pub fn into_generators(self) -> Vec<NcPolynomial> {
        self.generators
    }
}
