//! The free monoid over a finite alphabet.
//!
//! Words are stored as sequences of letter indices. The position of a symbol in
//! the [`Alphabet`] is its precedence: index 0 is the largest variable, so under
//! [`LLex`] the word `x` beats `y` whenever `x` was declared before `y`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

pub type Letter = u16;

/// Ordered list of distinct variable names. Earlier names are larger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(symbols: &[S]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Alphabet("alphabet must not be empty".into()));
        }
        if symbols.len() > Letter::MAX as usize {
            return Err(Error::Alphabet("too many symbols".into()));
        }
        let mut lookup = HashMap::new();
        let mut names = Vec::with_capacity(symbols.len());
        for (k, s) in symbols.iter().enumerate() {
            let s = s.as_ref();
            if !is_identifier(s) {
                return Err(Error::Alphabet(format!("invalid variable name `{s}`")));
            }
            if lookup.insert(s.to_string(), k as Letter).is_some() {
                return Err(Error::Alphabet(format!("duplicate variable `{s}`")));
            }
            names.push(s.to_string());
        }
        Ok(Alphabet {
            symbols: names,
            lookup,
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.symbols[letter as usize]
    }

    /// Parses a whitespace-free product such as `x*y^2*x`; `1` is the empty word.
    pub fn word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((n, p)) => {
                    let p: usize = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Alphabet(format!("bad exponent in `{factor}`")))?;
                    (n.trim(), p)
                }
                None => (factor, 1),
            };
            let l = self
                .letter(name)
                .ok_or_else(|| Error::Alphabet(format!("unknown variable `{name}`")))?;
            letters.extend(std::iter::repeat_n(l, power));
        }
        Ok(Word(letters))
    }

    /// Renders a word as a `*`-separated product with runs collapsed to powers.
    pub fn render(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut k = 0;
        while k < word.len() {
            let l = word[k];
            let mut run = 1;
            while k + run < word.len() && word[k + run] == l {
                run += 1;
            }
            if run == 1 {
                parts.push(self.name(l).to_string());
            } else {
                parts.push(format!("{}^{}", self.name(l), run));
            }
            k += run;
        }
        parts.join("*")
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An element of the free monoid; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &[Letter], right: &[Letter]) -> Word {
        Word(concat3(left, &self.0, right))
    }

    /// Whether `pattern` occurs as a factor of this word.
    pub fn contains(&self, pattern: &[Letter]) -> bool {
        find_factor(&self.0, pattern).is_some()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "λ");
        }
        write!(f, "[")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn concat3(a: &[Letter], b: &[Letter], c: &[Letter]) -> Vec<Letter> {
    let mut v = Vec::with_capacity(a.len() + b.len() + c.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v.extend_from_slice(c);
    v
}

/// A multiplication-compatible well-ordering on words.
pub trait WordOrder: fmt::Debug + Send + Sync {
    fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering;

    fn name(&self) -> &'static str;
}

/// Length-lexicographic ordering: shorter words are smaller, equal lengths are
/// compared letter by letter with lower letter indices being larger.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LLex;

impl WordOrder for LLex {
    #[inline]
    fn cmp_words(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        compare_llex(a, b)
    }

    fn name(&self) -> &'static str {
        "llex"
    }
}

#[inline]
pub fn compare_llex(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| b.cmp(a))
}

/// A placement of a pattern inside a text: `text = left · pattern · right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub left: Word,
    pub right: Word,
}

pub(crate) fn find_factor(text: &[Letter], pattern: &[Letter]) -> Option<usize> {
    if pattern.len() > text.len() {
        return None;
    }
    if pattern.is_empty() {
        return Some(0);
    }
    text.windows(pattern.len()).position(|w| w == pattern)
}

pub(crate) fn factor_positions<'a>(
    text: &'a [Letter],
    pattern: &'a [Letter],
) -> impl Iterator<Item = usize> + 'a {
    let n = if pattern.len() > text.len() || pattern.is_empty() {
        0
    } else {
        text.len() - pattern.len() + 1
    };
    (0..n).filter(move |&k| &text[k..k + pattern.len()] == pattern)
}

/// All placements of `pattern` in `text`, ordered by increasing left cofactor length.
pub fn occurrences(pattern: &[Letter], text: &[Letter]) -> Result<Vec<Occurrence>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(factor_positions(text, pattern)
        .map(|k| Occurrence {
            left: Word::from(&text[..k]),
            right: Word::from(&text[k + pattern.len()..]),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// `w1 = w'·w`, `w2 = w·w''`
    SuffixPrefix,
    /// `w1 = w·w'`, `w2 = w''·w`
    PrefixSuffix,
    /// `w1 = w`, `w2 = w'·w·w''`
    FirstInsideSecond,
    /// `w1 = w'·w·w''`, `w2 = w`
    SecondInsideFirst,
}

/// A non-empty word shared by two words.
///
/// `position` is the start of the witness in `w1` for `SuffixPrefix` and
/// `SecondInsideFirst`, and in `w2` for `PrefixSuffix` and `FirstInsideSecond`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub witness: Word,
    pub position: usize,
}

/// Lengths of the proper non-empty borders of `w` (prefixes equal to suffixes),
/// in increasing order.
pub fn borders(w: &[Letter]) -> Vec<usize> {
    (1..w.len())
        .filter(|&k| w[..k] == w[w.len() - k..])
        .collect()
}

/// Lengths `k` with `0 < k < min(|a|, |b|)` such that the length-`k` suffix of
/// `a` equals the length-`k` prefix of `b`.
pub(crate) fn suffix_prefix_lengths(a: &[Letter], b: &[Letter]) -> Vec<usize> {
    let m = a.len().min(b.len());
    (1..m).filter(|&k| a[a.len() - k..] == b[..k]).collect()
}

/// Every way the two words overlap.
///
/// Suffix/prefix witnesses are strictly shorter than both words; a containment
/// (including `w1 == w2`) is reported only as one of the inside kinds.
pub fn overlaps(w1: &[Letter], w2: &[Letter]) -> Result<Vec<Overlap>> {
    if w1.is_empty() || w2.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut out = Vec::new();
    for k in suffix_prefix_lengths(w1, w2) {
        out.push(Overlap {
            kind: OverlapKind::SuffixPrefix,
            witness: Word::from(&w2[..k]),
            position: w1.len() - k,
        });
    }
    for k in suffix_prefix_lengths(w2, w1) {
        out.push(Overlap {
            kind: OverlapKind::PrefixSuffix,
            witness: Word::from(&w1[..k]),
            position: w2.len() - k,
        });
    }
    if w1.len() <= w2.len() {
        for p in factor_positions(w2, w1) {
            out.push(Overlap {
                kind: OverlapKind::FirstInsideSecond,
                witness: Word::from(w1),
                position: p,
            });
        }
    } else {
        for p in factor_positions(w1, w2) {
            out.push(Overlap {
                kind: OverlapKind::SecondInsideFirst,
                witness: Word::from(w2),
                position: p,
            });
        }
    }
    Ok(out)
}
