//! Non-commutative Gebauer-Möller criteria.
//!
//! Each criterion takes a set of obstructions and splits it into survivors and
//! removals. A removal records the two obstructions whose S-polynomials
//! together yield a Gröbner representation of the removed one.
//!
//! The criteria run in a fixed order after a new generator `g_s` is appended:
//! multiply and leading word on the new set, tail reduction of the new set
//! against the pending set, and finally the backward criterion on the pending
//! set.

use std::collections::{HashMap, HashSet};

use crate::basis::BasisState;
use crate::error::{Error, Result};
use crate::obstructions::{classify, compare_obstructions, Obstruction};
use crate::words::{factor_positions, Word, WordOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Multiply,
    LeadingWord,
    TailReduction,
    Backward,
}

#[derive(Debug, Clone)]
pub struct Removal {
    pub obstruction: Obstruction,
    pub criterion: Criterion,
    /// The two obstructions in the representation of the removed one.
    pub witnesses: [Obstruction; 2],
}

#[derive(Debug, Clone, Default)]
pub struct CriteriaReport {
    pub survivors: Vec<Obstruction>,
    pub removed: Vec<Removal>,
}

impl CriteriaReport {
    pub fn count(&self, criterion: Criterion) -> usize {
        self.removed
            .iter()
            .filter(|r| r.criterion == criterion)
            .count()
    }

    pub fn removed_m(&self) -> usize {
        self.count(Criterion::Multiply)
    }

    pub fn removed_f(&self) -> usize {
        self.count(Criterion::LeadingWord)
    }

    pub fn removed_tail(&self) -> usize {
        self.count(Criterion::TailReduction)
    }

    pub fn removed_bk(&self) -> usize {
        self.count(Criterion::Backward)
    }
}

fn common_new_index(news: &[Obstruction]) -> Result<Option<usize>> {
    let Some(first) = news.first() else {
        return Ok(None);
    };
    let s = first.j();
    if let Some(o) = news.iter().find(|o| o.j() != s) {
        return Err(Error::MixedNewIndex {
            expected: s,
            i: o.i(),
            found: o.j(),
        });
    }
    Ok(Some(s))
}

/// Given `u_s = w·v_s` and `u'_s = v'_s·w'`, the representation
/// `o_{i,s} = w·o_{j,s}·w' ± o_{min,max}(..)` has this second summand.
fn head_witness(cand: &Obstruction, just: &Obstruction, basis: &BasisState) -> Obstruction {
    let w = &cand.left_j()[..cand.left_j().len() - just.left_j().len()];
    let w2 = &cand.right_j()[just.right_j().len()..];
    let moved_left = Word::from([w, just.left_i().letters()].concat());
    let moved_right = Word::from([just.right_i().letters(), w2].concat());
    if cand.i() <= just.i() {
        Obstruction::aligned(
            cand.i(),
            just.i(),
            cand.left_i().clone(),
            cand.right_i().clone(),
            moved_left,
            moved_right,
            basis,
        )
    } else {
        Obstruction::aligned(
            just.i(),
            cand.i(),
            moved_left,
            moved_right,
            cand.left_i().clone(),
            cand.right_i().clone(),
            basis,
        )
    }
}

/// Shared driver for the two head-reduction criteria: scan candidates in
/// descending obstruction order and remove each one that some other surviving
/// obstruction justifies. Justifiers are looked up by their `s`-side placement,
/// which must be an inner factor of the candidate's.
fn head_reduce(
    news: Vec<Obstruction>,
    basis: &BasisState,
    ord: &dyn WordOrder,
    criterion: Criterion,
) -> Result<CriteriaReport> {
    if common_new_index(&news)?.is_none() {
        return Ok(CriteriaReport::default());
    }
    let mut news = news;
    news.sort_by(|a, b| compare_obstructions(b, a, ord));
    let mut by_placement: HashMap<(&[u16], &[u16]), Vec<usize>> = HashMap::new();
    for (k, o) in news.iter().enumerate() {
        by_placement
            .entry((o.left_j().letters(), o.right_j().letters()))
            .or_default()
            .push(k);
    }
    let mut alive = vec![true; news.len()];
    let mut removed = Vec::new();
    for k in 0..news.len() {
        let cand = &news[k];
        let lj = cand.left_j().letters();
        let rj = cand.right_j().letters();
        let mut found: Option<usize> = None;
        'search: for a in (0..=lj.len()).rev() {
            for b in 0..=rj.len() {
                let trivial_multiplier = a == lj.len() && b == rj.len();
                if criterion == Criterion::Multiply && trivial_multiplier {
                    continue;
                }
                let Some(group) = by_placement.get(&(&lj[lj.len() - a..], &rj[..b])) else {
                    continue;
                };
                for &d in group {
                    if d == k || !alive[d] {
                        continue;
                    }
                    let just = &news[d];
                    let ok = match criterion {
                        Criterion::Multiply => true,
                        _ => {
                            cand.i() > just.i()
                                || (cand.i() == just.i()
                                    && trivial_multiplier
                                    && ord.cmp_words(cand.left_i(), just.left_i()).is_gt())
                        }
                    };
                    if ok && found.is_none_or(|f| compare_obstructions(just, &news[f], ord).is_lt())
                    {
                        found = Some(d);
                    }
                }
                if found.is_some() {
                    break 'search;
                }
            }
        }
        if let Some(d) = found {
            alive[k] = false;
            let witness = head_witness(cand, &news[d], basis);
            removed.push((k, d, witness));
        }
    }
    let removed = removed
        .into_iter()
        .map(|(k, d, witness)| Removal {
            obstruction: news[k].clone(),
            criterion,
            witnesses: [news[d].clone(), witness],
        })
        .collect();
    let survivors = news
        .into_iter()
        .zip(alive)
        .filter_map(|(o, a)| a.then_some(o))
        .collect();
    Ok(CriteriaReport { survivors, removed })
}

/// Removes `o_{i,s}(..; u_s, u'_s)` when another surviving `o_{j,s}(..; v_s, v'_s)`
/// has `u_s = w·v_s`, `u'_s = v'_s·w'` with `w·w'` non-empty.
pub fn multiply_criterion(
    news: Vec<Obstruction>,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Result<CriteriaReport> {
    head_reduce(news, basis, ord, Criterion::Multiply)
}

/// Removes `o_{i,s}(w_i, w'_i; u_s, u'_s)` when another surviving
/// `o_{j,s}(w_j, w'_j; v_s, v'_s)` has `u_s = w·v_s`, `u'_s = v'_s·w'` and either
/// `i > j`, or `i = j`, `w·w' = 1` and `w_i > w_j`.
pub fn leading_word_criterion(
    news: Vec<Obstruction>,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Result<CriteriaReport> {
    head_reduce(news, basis, ord, Criterion::LeadingWord)
}

/// Removes `o_{j,s}(u_j, u'_j; w_s, w'_s)` when some pending
/// `o_{i,j}(w_i, w'_i; v_j, v'_j)` has `u_j = w·v_j`, `u'_j = v'_j·w'` and the
/// induced `o_{i,s}(w·w_i, w'_i·w'; w_s, w'_s)` has no overlap.
pub fn tail_reduction(
    news: Vec<Obstruction>,
    pending: &[Obstruction],
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Result<CriteriaReport> {
    let _ = ord;
    let Some(s) = common_new_index(&news)? else {
        return Ok(CriteriaReport::default());
    };
    let mut by_j: HashMap<usize, Vec<&Obstruction>> = HashMap::new();
    for o in pending.iter().filter(|o| o.j() < s) {
        by_j.entry(o.j()).or_default().push(o);
    }
    let mut report = CriteriaReport::default();
    for cand in news {
        let mut hit = None;
        if let Some(olds) = by_j.get(&cand.i()) {
            let (uj, uj2) = (cand.left_i().letters(), cand.right_i().letters());
            for old in olds {
                let (vj, vj2) = (old.left_j().letters(), old.right_j().letters());
                if !(uj.ends_with(vj) && uj2.starts_with(vj2)) {
                    continue;
                }
                let w = &uj[..uj.len() - vj.len()];
                let w2 = &uj2[vj2.len()..];
                let induced = Obstruction::aligned(
                    old.i(),
                    s,
                    Word::from([w, old.left_i().letters()].concat()),
                    Word::from([old.right_i().letters(), w2].concat()),
                    cand.left_j().clone(),
                    cand.right_j().clone(),
                    basis,
                );
                if !induced.has_overlap() {
                    hit = Some(((*old).clone(), induced));
                    break;
                }
            }
        }
        match hit {
            Some((old, induced)) => report.removed.push(Removal {
                obstruction: cand,
                criterion: Criterion::TailReduction,
                witnesses: [old, induced],
            }),
            None => report.survivors.push(cand),
        }
    }
    Ok(report)
}

/// Removes pending `o_{i,j}(w_i, w'_i; w_j, w'_j)` (with `j < s`) when
/// `Lw(g_s)` occurs in its common word as `w·Lw(g_s)·w'` and both
/// `o_{i,s}(w_i, w'_i; w, w')` and `o_{j,s}(w_j, w'_j; w, w')` either have no
/// overlap or are multiples of an obstruction still present in `news`.
/// Only the leftmost occurrence is tried unless `all_occurrences` is set.
pub fn backward_criterion(
    pending: Vec<Obstruction>,
    news: &[Obstruction],
    s: usize,
    all_occurrences: bool,
    basis: &BasisState,
    ord: &dyn WordOrder,
) -> Result<CriteriaReport> {
    let _ = ord;
    basis.check_index(s)?;
    if let Some(o) = pending.iter().find(|o| o.j() >= s) {
        return Err(Error::InvalidConfig(format!(
            "backward criterion expects pending obstructions with j < {}, found o({}, {})",
            s + 1,
            o.i() + 1,
            o.j() + 1
        )));
    }
    let current: HashSet<Obstruction> = news.iter().cloned().collect();
    let lw_s = basis.leading_word(s).letters();
    let mut report = CriteriaReport::default();
    for o in pending {
        let mut hit = None;
        let mut positions = factor_positions(o.common(), lw_s);
        let leftmost = positions.next();
        let rest = positions.filter(|_| all_occurrences);
        for p in leftmost.into_iter().chain(rest) {
            let w = Word::from(&o.common()[..p]);
            let w2 = Word::from(&o.common()[p + lw_s.len()..]);
            let via_i = Obstruction::aligned(
                o.i(),
                s,
                o.left_i().clone(),
                o.right_i().clone(),
                w.clone(),
                w2.clone(),
                basis,
            );
            if !classify(&via_i, &current).is_covered() {
                continue;
            }
            let via_j = Obstruction::aligned(
                o.j(),
                s,
                o.left_j().clone(),
                o.right_j().clone(),
                w,
                w2,
                basis,
            );
            if classify(&via_j, &current).is_covered() {
                hit = Some([via_i, via_j]);
                break;
            }
        }
        match hit {
            Some(witnesses) => report.removed.push(Removal {
                obstruction: o,
                criterion: Criterion::Backward,
                witnesses,
            }),
            None => report.survivors.push(o),
        }
    }
    Ok(report)
}
