//! Obstructions (the non-commutative analogue of critical pairs), their
//! S-polynomials, enumeration of the non-trivial ones, and the module term
//! ordering used to compare them.
//!
//! An obstruction `o_{i,j}(w_i, w'_i; w_j, w'_j)` records two placements of
//! leading words inside a common word:
//! `w_i·Lw(g_i)·w'_i = w_j·Lw(g_j)·w'_j`. Indices are zero-based here and
//! printed one-based.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::basis::BasisState;
use crate::error::{Error, Result};
use crate::polynomial::{Coefficient, NcPolynomial};
use crate::words::{
    borders, concat3, factor_positions, suffix_prefix_lengths, Alphabet, Letter, Word, WordOrder,
};

use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionForm {
    /// `o_{i,j}(w_i, 1; 1, w'_j)`
    Left,
    /// `o_{i,j}(1, w'_i; w_j, 1)`
    Right,
    /// `o_{i,j}(w_i, w'_i; 1, 1)`: `Lw(g_i)` inside `Lw(g_j)`
    CenterIinJ,
    /// `o_{i,j}(1, 1; w_j, w'_j)`: `Lw(g_j)` inside `Lw(g_i)`
    CenterJinI,
    /// `o_{i,i}(1, w'_i; w_i, 1)` with both cofactors non-empty
    SelfOverlap,
    /// Any other alignment, including every obstruction without overlap.
    General,
}

impl ObstructionForm {
    pub fn is_nontrivial(self) -> bool {
        self != ObstructionForm::General
    }
}

/// Identity is the tuple `(i, j, w_i, w'_i, w_j, w'_j)`; the form and the
/// common word are derived.
#[derive(Debug, Clone)]
pub struct Obstruction {
    i: usize,
    j: usize,
    left_i: Word,
    right_i: Word,
    left_j: Word,
    right_j: Word,
    form: ObstructionForm,
    common: Word,
}

impl PartialEq for Obstruction {
    fn eq(&self, other: &Self) -> bool {
        self.i == other.i
            && self.j == other.j
            && self.left_i == other.left_i
            && self.right_i == other.right_i
            && self.left_j == other.left_j
            && self.right_j == other.right_j
    }
}

impl Eq for Obstruction {}

impl Hash for Obstruction {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.i.hash(state);
        self.j.hash(state);
        self.left_i.hash(state);
        self.right_i.hash(state);
        self.left_j.hash(state);
        self.right_j.hash(state);
    }
}

impl Obstruction {
    /// Validates indices and the alignment `w_i·Lw(g_i)·w'_i = w_j·Lw(g_j)·w'_j`.
    pub fn new(
        i: usize,
        j: usize,
        left_i: Word,
        right_i: Word,
        left_j: Word,
        right_j: Word,
        basis: &BasisState,
    ) -> Result<Self> {
        basis.check_index(i)?;
        basis.check_index(j)?;
        if i > j {
            return Err(Error::IndexOrder { i, j });
        }
        let common = basis.leading_word(i).sandwich(&left_i, &right_i);
        let other = concat3(&left_j, basis.leading_word(j), &right_j);
        if common.letters() != other.as_slice() {
            return Err(Error::Misaligned(format!(
                "o_{{{},{}}}: {:?} != {:?}",
                i + 1,
                j + 1,
                common,
                Word::from(other)
            )));
        }
        Ok(Self::assemble(
            i, j, left_i, right_i, left_j, right_j, common,
        ))
    }

    /// Builds an obstruction whose alignment is guaranteed by construction.
    pub(crate) fn aligned(
        i: usize,
        j: usize,
        left_i: Word,
        right_i: Word,
        left_j: Word,
        right_j: Word,
        basis: &BasisState,
    ) -> Self {
        debug_assert!(i <= j);
        let common = basis.leading_word(i).sandwich(&left_i, &right_i);
        debug_assert_eq!(
            common.letters(),
            concat3(&left_j, basis.leading_word(j), &right_j).as_slice()
        );
        Self::assemble(i, j, left_i, right_i, left_j, right_j, common)
    }

    fn assemble(
        i: usize,
        j: usize,
        left_i: Word,
        right_i: Word,
        left_j: Word,
        right_j: Word,
        common: Word,
    ) -> Self {
        let mut o = Obstruction {
            i,
            j,
            left_i,
            right_i,
            left_j,
            right_j,
            form: ObstructionForm::General,
            common,
        };
        o.form = o.derive_form();
        o
    }

    fn derive_form(&self) -> ObstructionForm {
        if !self.has_overlap() {
            return ObstructionForm::General;
        }
        let (li, ri, lj, rj) = (
            self.left_i.is_empty(),
            self.right_i.is_empty(),
            self.left_j.is_empty(),
            self.right_j.is_empty(),
        );
        if self.i == self.j {
            return if li && rj && !ri && !lj {
                ObstructionForm::SelfOverlap
            } else {
                ObstructionForm::General
            };
        }
        if lj && rj {
            ObstructionForm::CenterIinJ
        } else if li && ri {
            ObstructionForm::CenterJinI
        } else if ri && lj {
            ObstructionForm::Left
        } else if li && rj {
            ObstructionForm::Right
        } else {
            ObstructionForm::General
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn left_i(&self) -> &Word {
        &self.left_i
    }

    pub fn right_i(&self) -> &Word {
        &self.right_i
    }

    pub fn left_j(&self) -> &Word {
        &self.left_j
    }

    pub fn right_j(&self) -> &Word {
        &self.right_j
    }

    pub fn form(&self) -> ObstructionForm {
        self.form
    }

    pub fn is_nontrivial(&self) -> bool {
        self.form.is_nontrivial()
    }

    /// `w_i·Lw(g_i)·w'_i`
    pub fn common(&self) -> &Word {
        &self.common
    }

    pub fn degree(&self) -> usize {
        self.common.degree()
    }

    pub fn i_term(&self) -> ModuleTerm {
        ModuleTerm {
            left: self.left_i.clone(),
            index: self.i,
            right: self.right_i.clone(),
        }
    }

    pub fn j_term(&self) -> ModuleTerm {
        ModuleTerm {
            left: self.left_j.clone(),
            index: self.j,
            right: self.right_j.clone(),
        }
    }

    /// Whether the two placed leading words share at least one letter position
    /// of the common word.
    pub fn has_overlap(&self) -> bool {
        let n = self.common.len();
        let (si, ei) = (self.left_i.len(), n - self.right_i.len());
        let (sj, ej) = (self.left_j.len(), n - self.right_j.len());
        si.max(sj) < ei.min(ej)
    }

    /// `w·self·w'`
    pub fn multiply(&self, left: &[Letter], right: &[Letter]) -> Obstruction {
        Obstruction::assemble(
            self.i,
            self.j,
            Word::from(concat3(left, &self.left_i, &[])),
            Word::from(concat3(&self.right_i, right, &[])),
            Word::from(concat3(left, &self.left_j, &[])),
            Word::from(concat3(&self.right_j, right, &[])),
            self.common.sandwich(left, right),
        )
    }

    /// Splits off the longest common left and right cofactors, returning
    /// `(w, base, w')` with `self = w·base·w'`.
    pub fn strip(&self) -> (Word, Obstruction, Word) {
        let m = self.left_i.len().min(self.left_j.len());
        let n = self.right_i.len().min(self.right_j.len());
        let left = Word::from(&self.left_i[..m]);
        let right = Word::from(&self.right_i[self.right_i.len() - n..]);
        let base = Obstruction::assemble(
            self.i,
            self.j,
            Word::from(&self.left_i[m..]),
            Word::from(&self.right_i[..self.right_i.len() - n]),
            Word::from(&self.left_j[m..]),
            Word::from(&self.right_j[..self.right_j.len() - n]),
            Word::from(&self.common[m..self.common.len() - n]),
        );
        (left, base, right)
    }

    /// Re-validates the stored cofactors against `basis`.
    pub fn check_alignment(&self, basis: &BasisState) -> Result<()> {
        Obstruction::new(
            self.i,
            self.j,
            self.left_i.clone(),
            self.right_i.clone(),
            self.left_j.clone(),
            self.right_j.clone(),
            basis,
        )
        .map(|_| ())
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        format!(
            "o_{{{},{}}}({}, {}; {}, {})",
            self.i + 1,
            self.j + 1,
            alphabet.render(&self.left_i),
            alphabet.render(&self.right_i),
            alphabet.render(&self.left_j),
            alphabet.render(&self.right_j)
        )
    }
}

/// A placed generator symbol `w·e_index·w'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleTerm {
    pub left: Word,
    pub index: usize,
    pub right: Word,
}

impl ModuleTerm {
    pub fn placed_word(&self, basis: &BasisState) -> Word {
        basis
            .leading_word(self.index)
            .sandwich(&self.left, &self.right)
    }
}

/// Module term ordering induced by the word ordering and the basis: compare the
/// placed words, then prefer the larger generator index, then the larger left
/// cofactor.
pub fn compare_tau(
    a: &ModuleTerm,
    b: &ModuleTerm,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Ordering {
    ord.cmp_words(&a.placed_word(basis), &b.placed_word(basis))
        .then(a.index.cmp(&b.index))
        .then_with(|| ord.cmp_words(&a.left, &b.left))
}

/// Ordering on obstructions: their `j`-side terms under τ, then their
/// `i`-side terms. Both placed words of an obstruction equal its common word,
/// so the basis is not consulted.
pub fn compare_obstructions(a: &Obstruction, b: &Obstruction, ord: &dyn WordOrder) -> Ordering {
    ord.cmp_words(&a.common, &b.common)
        .then(a.j.cmp(&b.j))
        .then_with(|| ord.cmp_words(&a.left_j, &b.left_j))
        .then(a.i.cmp(&b.i))
        .then_with(|| ord.cmp_words(&a.left_i, &b.left_i))
}

/// `w_i·g_i·w'_i − w_j·g_j·w'_j` for monic generators.
pub fn s_polynomial(
    o: &Obstruction,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Result<NcPolynomial> {
    o.check_alignment(basis)?;
    Ok(s_polynomial_unchecked(o, basis, ord))
}

pub(crate) fn s_polynomial_unchecked(
    o: &Obstruction,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> NcPolynomial {
    let a = basis.generator(o.i).sandwich(&o.left_i, &o.right_i);
    a.sub_scaled_sandwich(
        &Coefficient::one(),
        &o.left_j,
        basis.generator(o.j),
        &o.right_j,
        ord,
    )
}

/// All non-trivial obstructions of `g_i` and `g_j` (`i <= j`), in ascending
/// obstruction order.
pub fn nontrivial_obstructions(
    i: usize,
    j: usize,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Result<Vec<Obstruction>> {
    basis.check_index(i)?;
    basis.check_index(j)?;
    if i > j {
        return Err(Error::IndexOrder { i, j });
    }
    let mut out = nontrivial_unsorted(i, j, basis);
    out.sort_by(|a, b| compare_obstructions(a, b, ord));
    out.dedup();
    Ok(out)
}

pub(crate) fn nontrivial_unsorted(i: usize, j: usize, basis: &BasisState) -> Vec<Obstruction> {
    let a = basis.leading_word(i);
    let b = basis.leading_word(j);
    let e = Word::empty;
    let mut out = Vec::new();
    if i == j {
        let n = a.len();
        for k in borders(a) {
            out.push(Obstruction::aligned(
                i,
                i,
                e(),
                Word::from(&a[k..]),
                Word::from(&a[..n - k]),
                e(),
                basis,
            ));
        }
        return out;
    }
    // Left: w_i·A = B·w'_j, suffix of B overlaps prefix of A
    for k in suffix_prefix_lengths(b, a) {
        out.push(Obstruction::aligned(
            i,
            j,
            Word::from(&b[..b.len() - k]),
            e(),
            e(),
            Word::from(&a[k..]),
            basis,
        ));
    }
    // Right: A·w'_i = w_j·B, suffix of A overlaps prefix of B
    for k in suffix_prefix_lengths(a, b) {
        out.push(Obstruction::aligned(
            i,
            j,
            e(),
            Word::from(&b[k..]),
            Word::from(&a[..a.len() - k]),
            e(),
            basis,
        ));
    }
    if a.len() <= b.len() {
        for p in factor_positions(b, a) {
            out.push(Obstruction::aligned(
                i,
                j,
                Word::from(&b[..p]),
                Word::from(&b[p + a.len()..]),
                e(),
                e(),
                basis,
            ));
        }
    } else {
        for p in factor_positions(a, b) {
            out.push(Obstruction::aligned(
                i,
                j,
                e(),
                e(),
                Word::from(&a[..p]),
                Word::from(&a[p + b.len()..]),
                basis,
            ));
        }
    }
    out
}

/// How an obstruction relates to a set of non-trivial obstructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    NoOverlap,
    /// `o = left·base·right` with `base` in the set.
    MultipleOfNontrivial {
        base: Obstruction,
        left: Word,
        right: Word,
    },
    Neither,
}

impl Classification {
    pub fn is_covered(&self) -> bool {
        !matches!(self, Classification::Neither)
    }
}

/// Classifies `o` against the current set of new non-trivial obstructions.
///
/// An obstruction with overlap is a multiple of exactly one obstruction in
/// canonical shape, obtained by stripping common outer cofactors; it is
/// covered only if that base is still present in `current`.
pub fn classify(o: &Obstruction, current: &HashSet<Obstruction>) -> Classification {
    if !o.has_overlap() {
        return Classification::NoOverlap;
    }
    let (left, base, right) = o.strip();
    match current.get(&base) {
        Some(b) if b.is_nontrivial() => Classification::MultipleOfNontrivial {
            base: b.clone(),
            left,
            right,
        },
        _ => Classification::Neither,
    }
}
