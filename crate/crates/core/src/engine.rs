//! Buchberger procedure for two-sided ideals, with optional criteria.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::basis::BasisState;
use crate::criteria::{
    backward_criterion, leading_word_criterion, multiply_criterion, tail_reduction, Criterion,
    Removal,
};
use crate::division::DivisionResult;
use crate::error::{Error, Result};
use crate::obstructions::{
    compare_obstructions, nontrivial_unsorted, s_polynomial_unchecked, Obstruction,
};
use crate::polynomial::NcPolynomial;
use crate::words::{LLex, Word, WordOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Basic,
    #[default]
    Improved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriteriaToggles {
    pub multiply: bool,
    pub leading_word: bool,
    pub tail: bool,
    pub backward: bool,
}

impl CriteriaToggles {
    pub const ALL: Self = Self {
        multiply: true,
        leading_word: true,
        tail: true,
        backward: true,
    };
    pub const NONE: Self = Self {
        multiply: false,
        leading_word: false,
        tail: false,
        backward: false,
    };

    pub fn enabled(&self, c: Criterion) -> bool {
        match c {
            Criterion::Multiply => self.multiply,
            Criterion::LeadingWord => self.leading_word,
            Criterion::TailReduction => self.tail,
            Criterion::Backward => self.backward,
        }
    }
}

impl Default for CriteriaToggles {
    fn default() -> Self {
        Self::ALL
    }
}

/// How the initial obstruction set is formed in improved mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Seeding {
    /// Input generators are added one by one, each running the criteria.
    #[default]
    Incremental,
    /// All non-trivial obstructions of the input, unfiltered.
    Unfiltered,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub mode: Mode,
    pub criteria: CriteriaToggles,
    pub seeding: Seeding,
    /// Let the backward criterion try every occurrence of the new leading word,
    /// not only the leftmost one.
    pub backward_all_occurrences: bool,
    /// Obstructions whose common word exceeds this degree are discarded.
    pub truncation: Option<usize>,
    /// Stop once the basis reaches this many elements.
    pub max_basis: Option<usize>,
    /// Stop when the next selected obstruction exceeds this degree.
    pub max_degree: Option<usize>,
    /// Among obstructions with the same common word, select by the leading word
    /// of the S-polynomial before falling back to the obstruction order.
    pub exact_tiebreak: bool,
    pub record_derivations: bool,
    pub record_removals: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Improved,
            criteria: CriteriaToggles::ALL,
            seeding: Seeding::Incremental,
            backward_all_occurrences: false,
            truncation: None,
            max_basis: None,
            max_degree: None,
            exact_tiebreak: false,
            record_derivations: false,
            record_removals: false,
        }
    }
}

impl EngineConfig {
    pub fn basic() -> Self {
        Self {
            mode: Mode::Basic,
            ..Self::default()
        }
    }

    pub fn improved() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub tot: usize,
    pub sel: usize,
    pub m: usize,
    pub f: usize,
    pub tail: usize,
    pub bk: usize,
    pub zero_reductions: usize,
    pub truncated_discards: usize,
    pub gb_size: usize,
    pub rgb_size: Option<usize>,
}

impl RunStats {
    /// Selected over created obstructions.
    pub fn rho(&self) -> Option<Ratio<u64>> {
        (self.tot > 0).then(|| Ratio::new(self.sel as u64, self.tot as u64))
    }

    pub fn rho_f64(&self) -> Option<f64> {
        self.rho().map(|r| *r.numer() as f64 / *r.denom() as f64)
    }

    pub fn removed(&self) -> usize {
        self.m + self.f + self.tail + self.bk
    }
}

impl fmt::Display for RunStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gb={} RGb={} Tot={} Sel={} M={} F={} Tail={} B_k={} rho={}",
            self.gb_size,
            self.rgb_size.map_or("-".into(), |n| n.to_string()),
            self.tot,
            self.sel,
            self.m,
            self.f,
            self.tail,
            self.bk,
            self.rho_f64().map_or("-".into(), |r| format!("{r:.4}"))
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed,
    CapReached,
}

/// How generator `index` was obtained: the normal remainder of the
/// S-polynomial of `obstruction`, made monic.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub index: usize,
    pub obstruction: Obstruction,
    pub s_polynomial: NcPolynomial,
    pub division: DivisionResult,
}

#[derive(Debug, Clone)]
pub struct Run {
    pub basis: BasisState,
    pub stats: RunStats,
    pub outcome: Outcome,
    /// Number of distinct input generators.
    pub inputs: usize,
    pub derivations: Vec<Derivation>,
    pub removals: Vec<Removal>,
    /// Obstructions still pending when a cap stopped the run.
    pub pending: Vec<Obstruction>,
}

struct Pending {
    obs: Obstruction,
    /// Leading word of the S-polynomial, for exact selection; `None` when zero.
    s_lead: Option<Option<Word>>,
}

fn selection_key(a: &Pending, b: &Pending, ord: &dyn WordOrder) -> Ordering {
    let by_common = a
        .obs
        .degree()
        .cmp(&b.obs.degree())
        .then_with(|| ord.cmp_words(a.obs.common(), b.obs.common()));
    if by_common.is_ne() {
        return by_common;
    }
    if let (Some(x), Some(y)) = (&a.s_lead, &b.s_lead) {
        let by_s = match (x, y) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(u), Some(v)) => u.len().cmp(&v.len()).then_with(|| ord.cmp_words(u, v)),
        };
        if by_s.is_ne() {
            return by_s;
        }
    }
    compare_obstructions(&a.obs, &b.obs, ord)
}

/// Removes and returns the next obstruction to treat: smallest common-word
/// degree, ties broken by the obstruction order.
pub fn select_next(pending: &mut Vec<Obstruction>, ord: &dyn WordOrder) -> Option<Obstruction> {
    let k = (0..pending.len()).min_by(|&a, &b| {
        pending[a]
            .degree()
            .cmp(&pending[b].degree())
            .then_with(|| compare_obstructions(&pending[a], &pending[b], ord))
    })?;
    Some(pending.swap_remove(k))
}

struct Engine<'a> {
    cfg: &'a EngineConfig,
    ord: &'a dyn WordOrder,
    basis: BasisState,
    pending: Vec<Pending>,
    stats: RunStats,
    derivations: Vec<Derivation>,
    removals: Vec<Removal>,
}

impl Engine<'_> {
    fn admit(&mut self, o: Obstruction) {
        if self.cfg.truncation.is_some_and(|d| o.degree() > d) {
            self.stats.truncated_discards += 1;
            return;
        }
        let s_lead = self.cfg.exact_tiebreak.then(|| {
            s_polynomial_unchecked(&o, &self.basis, self.ord)
                .leading_word()
                .cloned()
        });
        self.pending.push(Pending { obs: o, s_lead });
    }

    fn note(&mut self, removed: Vec<Removal>) {
        for r in &removed {
            match r.criterion {
                Criterion::Multiply => self.stats.m += 1,
                Criterion::LeadingWord => self.stats.f += 1,
                Criterion::TailReduction => self.stats.tail += 1,
                Criterion::Backward => self.stats.bk += 1,
            }
        }
        if self.cfg.record_removals {
            self.removals.extend(removed);
        }
    }

    fn new_obstructions(&self, s: usize) -> Vec<Obstruction> {
        let mut news: Vec<Obstruction> = (0..=s)
            .flat_map(|i| nontrivial_unsorted(i, s, &self.basis))
            .collect();
        news.sort_by(|a, b| compare_obstructions(a, b, self.ord));
        news.dedup();
        news
    }

    /// Adds the obstructions created by the newest generator `g_s`.
    fn update(&mut self, s: usize) -> Result<()> {
        let news = self.new_obstructions(s);
        self.stats.tot += news.len();
        if self.cfg.mode == Mode::Basic {
            for o in news {
                self.admit(o);
            }
            return Ok(());
        }
        let on = self.cfg.criteria;
        let ord = self.ord;
        let mut news = news;
        if on.multiply {
            let r = multiply_criterion(news, &self.basis, ord)?;
            news = r.survivors;
            self.note(r.removed);
        }
        if on.leading_word {
            let r = leading_word_criterion(news, &self.basis, ord)?;
            news = r.survivors;
            self.note(r.removed);
        }
        if on.tail {
            let olds: Vec<Obstruction> = self.pending.iter().map(|p| p.obs.clone()).collect();
            let r = tail_reduction(news, &olds, &self.basis, ord)?;
            news = r.survivors;
            self.note(r.removed);
        }
        if on.backward && !self.pending.is_empty() {
            let (olds, leads): (Vec<Obstruction>, Vec<Option<Option<Word>>>) =
                std::mem::take(&mut self.pending)
                    .into_iter()
                    .map(|p| (p.obs, p.s_lead))
                    .unzip();
            let mut leads: HashMap<Obstruction, Option<Option<Word>>> =
                olds.iter().cloned().zip(leads).collect();
            let r = backward_criterion(
                olds,
                &news,
                s,
                self.cfg.backward_all_occurrences,
                &self.basis,
                ord,
            )?;
            self.pending = r
                .survivors
                .into_iter()
                .map(|o| {
                    let s_lead = leads.remove(&o).expect("pending obstruction");
                    Pending { obs: o, s_lead }
                })
                .collect();
            self.note(r.removed);
        }
        for o in news {
            self.admit(o);
        }
        Ok(())
    }

    fn take_next(&mut self) -> Option<Obstruction> {
        let ord = self.ord;
        let k = (0..self.pending.len())
            .min_by(|&a, &b| selection_key(&self.pending[a], &self.pending[b], ord))?;
        Some(self.pending.swap_remove(k).obs)
    }
}

/// Drops zero polynomials and duplicates after making each generator monic.
fn ingest(generators: &[NcPolynomial]) -> Result<Vec<NcPolynomial>> {
    let mut out: Vec<NcPolynomial> = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        let g = g.make_monic()?;
        if !out.contains(&g) {
            out.push(g);
        }
    }
    if out.is_empty() {
        return Err(Error::NoGenerators);
    }
    Ok(out)
}

/// Enumerates a Gröbner basis of the two-sided ideal generated by `generators`.
/// The returned basis is not interreduced.
pub fn buchberger(generators: &[NcPolynomial], cfg: &EngineConfig) -> Result<Run> {
    buchberger_with(generators, cfg, &LLex)
}

pub fn buchberger_with(
    generators: &[NcPolynomial],
    cfg: &EngineConfig,
    ord: &dyn WordOrder,
) -> Result<Run> {
    let input = ingest(generators)?;
    if cfg.truncation.is_some() {
        if let Some(k) = input.iter().position(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(k));
        }
    }
    let inputs = input.len();
    let mut e = Engine {
        cfg,
        ord,
        basis: BasisState::new(),
        pending: Vec::new(),
        stats: RunStats::default(),
        derivations: Vec::new(),
        removals: Vec::new(),
    };
    let incremental = cfg.mode == Mode::Improved && cfg.seeding == Seeding::Incremental;
    for g in input {
        let s = e.basis.push(g)?;
        if incremental {
            e.update(s)?;
        }
    }
    if !incremental {
        let mut all: Vec<Obstruction> = Vec::new();
        for j in 0..inputs {
            for i in 0..=j {
                all.extend(nontrivial_unsorted(i, j, &e.basis));
            }
        }
        all.sort_by(|a, b| compare_obstructions(a, b, ord));
        all.dedup();
        e.stats.tot += all.len();
        for o in all {
            e.admit(o);
        }
    }

    let mut outcome = Outcome::Completed;
    while !e.pending.is_empty() {
        if cfg.max_basis.is_some_and(|m| e.basis.len() >= m) {
            outcome = Outcome::CapReached;
            break;
        }
        let o = e.take_next().expect("non-empty");
        if cfg.max_degree.is_some_and(|d| o.degree() > d) {
            e.pending.push(Pending {
                obs: o,
                s_lead: None,
            });
            outcome = Outcome::CapReached;
            break;
        }
        e.stats.sel += 1;
        let sp = s_polynomial_unchecked(&o, &e.basis, ord);
        let division = e.basis.divide(&sp, ord);
        let r = &division.remainder;
        if r.is_zero() {
            e.stats.zero_reductions += 1;
            continue;
        }
        // homogeneous input keeps remainders within the truncation degree
        if cfg.truncation.is_some_and(|d| r.degree().unwrap_or(0) > d) {
            continue;
        }
        let s = e.basis.push(r.clone())?;
        if cfg.record_derivations {
            e.derivations.push(Derivation {
                index: s,
                obstruction: o,
                s_polynomial: sp,
                division,
            });
        }
        e.update(s)?;
    }

    e.stats.gb_size = e.basis.len();
    Ok(Run {
        basis: e.basis,
        stats: e.stats,
        outcome,
        inputs,
        derivations: e.derivations,
        removals: e.removals,
        pending: e.pending.into_iter().map(|p| p.obs).collect(),
    })
}

/// The reduced Gröbner basis obtained from a Gröbner basis: drop elements whose
/// leading word has another leading word as a factor (on equal leading words the
/// lower index stays), reduce the tails, and sort by ascending leading word.
pub fn interreduce(basis: &BasisState, ord: &dyn WordOrder) -> BasisState {
    let lws = basis.leading_words();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&k| {
            !(0..basis.len()).any(|l| {
                l != k && lws[k].contains(&lws[l]) && (lws[l].len() < lws[k].len() || l < k)
            })
        })
        .collect();
    let minimal =
        BasisState::from_polys(keep.iter().map(|&k| basis.generator(k).clone())).expect("monic");
    let mut reduced: Vec<NcPolynomial> = keep
        .iter()
        .map(|&k| {
            let g = basis.generator(k);
            let (c, w) = g.leading().expect("non-zero");
            let tail = minimal.normal_remainder(&g.tail(), ord);
            NcPolynomial::monomial(c.clone(), w.clone()).add(&tail, ord)
        })
        .collect();
    reduced.sort_by(|a, b| ord.cmp_words(a.leading_word().unwrap(), b.leading_word().unwrap()));
    BasisState::from_polys(reduced).expect("non-zero")
}

/// Runs [`buchberger`] and fills in the size of the reduced basis.
pub fn compute(generators: &[NcPolynomial], cfg: &EngineConfig) -> Result<(Run, BasisState)> {
    let mut run = buchberger(generators, cfg)?;
    let reduced = interreduce(&run.basis, &LLex);
    run.stats.rgb_size = Some(reduced.len());
    Ok((run, reduced))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// An obstruction whose S-polynomial has a non-zero normal remainder.
    Obstruction {
        obstruction: Obstruction,
        remainder: NcPolynomial,
    },
    /// An ideal generator with a non-zero normal remainder.
    Generator {
        index: usize,
        remainder: NcPolynomial,
    },
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub checked: usize,
    pub failure: Option<Certificate>,
}

impl Verification {
    pub fn is_groebner(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that every non-trivial obstruction of `basis` (of degree at most
/// `truncation`, if given) has an S-polynomial reducing to zero. The first
/// failing obstruction in obstruction order is returned as a certificate.
pub fn verify_groebner(
    basis: &BasisState,
    ord: &(dyn WordOrder + Sync),
    truncation: Option<usize>,
) -> Verification {
    let n = basis.len();
    let mut all: Vec<Obstruction> = (0..n)
        .flat_map(|j| (0..=j).flat_map(move |i| nontrivial_unsorted(i, j, basis)))
        .filter(|o| truncation.is_none_or(|d| o.degree() <= d))
        .collect();
    all.sort_by(|a, b| compare_obstructions(a, b, ord));
    all.dedup();
    let failure = all.par_iter().find_map_first(|o| {
        let r = basis.normal_remainder(&s_polynomial_unchecked(o, basis, ord), ord);
        (!r.is_zero()).then(|| Certificate::Obstruction {
            obstruction: o.clone(),
            remainder: r,
        })
    });
    Verification {
        checked: all.len(),
        failure,
    }
}

/// [`verify_groebner`] together with a check that each of `generators` reduces
/// to zero, so that `basis` generates (at least) the ideal they generate.
pub fn verify_basis_of(
    basis: &BasisState,
    generators: &[NcPolynomial],
    ord: &(dyn WordOrder + Sync),
    truncation: Option<usize>,
) -> Verification {
    for (index, g) in generators.iter().enumerate() {
        if truncation.is_some_and(|d| g.degree().unwrap_or(0) > d) {
            continue;
        }
        let r = basis.normal_remainder(g, ord);
        if !r.is_zero() {
            return Verification {
                checked: index + 1,
                failure: Some(Certificate::Generator {
                    index,
                    remainder: r,
                }),
            };
        }
    }
    let mut v = verify_groebner(basis, ord, truncation);
    v.checked += generators.len();
    v
}
