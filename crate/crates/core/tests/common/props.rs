//! Property checks shared by the property test targets and the acceptance run.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use ncgb::division::divide;
use ncgb::obstructions::{
    compare_obstructions, compare_tau, s_polynomial, ModuleTerm, Obstruction,
};
use ncgb::words::{occurrences, overlaps, Letter, Occurrence, Overlap, OverlapKind};
use ncgb::{BasisState, Coefficient, LLex, NcPolynomial, Word, WordOrder};

use super::{any_poly, factor_of, poly, poly_with_lead, split3, word};

pub type Check = Result<(), TestCaseError>;

/// Runs `check` on `cases` inputs drawn from `strategy`.
pub fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    check: impl Fn(S::Value) -> Check,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, check).map_err(|e| e.to_string())
}

fn cat(parts: &[&[Letter]]) -> Word {
    Word::from(parts.concat())
}

fn s(o: &Obstruction, b: &BasisState) -> NcPolynomial {
    s_polynomial(o, b, &LLex).unwrap()
}

// occurrences and overlaps

fn brute_occurrences(p: &[Letter], t: &[Letter]) -> Vec<Occurrence> {
    let mut out = Vec::new();
    for l in 0..=t.len() {
        for r in 0..=t.len() - l {
            if &t[l..t.len() - r] == p {
                out.push(Occurrence {
                    left: Word::from(&t[..l]),
                    right: Word::from(&t[t.len() - r..]),
                });
            }
        }
    }
    out.sort_by_key(|o| o.left.len());
    out
}

/// Slides `b` along `a` and records every consistent placement with a
/// non-empty intersection.
fn brute_overlaps(a: &[Letter], b: &[Letter]) -> Vec<Overlap> {
    let (n, m) = (a.len() as isize, b.len() as isize);
    let mut out = Vec::new();
    for d in (1 - m)..n {
        let (lo, hi) = (d.max(0), (d + m).min(n));
        if (lo..hi).any(|k| a[k as usize] != b[(k - d) as usize]) {
            continue;
        }
        let (kind, witness, position) = if d <= 0 && d + m >= n {
            (OverlapKind::FirstInsideSecond, a, -d)
        } else if d >= 0 && d + m <= n {
            (OverlapKind::SecondInsideFirst, b, d)
        } else if d > 0 {
            (OverlapKind::SuffixPrefix, &a[d as usize..], d)
        } else {
            (OverlapKind::PrefixSuffix, &a[..(m + d) as usize], -d)
        };
        out.push(Overlap {
            kind,
            witness: Word::from(witness),
            position: position as usize,
        });
    }
    out
}

fn sorted(mut v: Vec<Overlap>) -> Vec<Overlap> {
    v.sort_by(|x, y| {
        x.kind
            .cmp(&y.kind)
            .then(x.position.cmp(&y.position))
            .then(x.witness.letters().cmp(y.witness.letters()))
    });
    v
}

pub fn occurrence_input() -> impl Strategy<Value = (Vec<Letter>, Vec<Letter>)> {
    prop_oneof![
        (word(2, 1..=4), word(2, 0..=12)),
        (word(3, 1..=3), word(3, 0..=12)),
    ]
}

pub fn check_occurrences((p, t): (Vec<Letter>, Vec<Letter>)) -> Check {
    prop_assert_eq!(occurrences(&p, &t).unwrap(), brute_occurrences(&p, &t));
    Ok(())
}

pub fn overlap_input() -> impl Strategy<Value = (Vec<Letter>, Vec<Letter>)> {
    prop_oneof![
        (word(2, 1..=12), word(2, 1..=12)),
        // periodic words have many overlaps
        (word(2, 1..=3), 1usize..=4, word(2, 0..=6)).prop_map(|(a, k, b)| {
            let a = a.repeat(k);
            let b = [a.as_slice(), &b].concat();
            (a, b)
        }),
    ]
}

pub fn check_overlaps((a, b): (Vec<Letter>, Vec<Letter>)) -> Check {
    prop_assert_eq!(
        sorted(overlaps(&a, &b).unwrap()),
        sorted(brute_overlaps(&a, &b))
    );
    prop_assert_eq!(
        sorted(overlaps(&b, &a).unwrap()),
        sorted(brute_overlaps(&b, &a))
    );
    Ok(())
}

// division

fn reducible_by(w: &Word, leads: &[&Word]) -> bool {
    leads.iter().any(|lw| {
        w.len() >= lw.len() && (0..=w.len() - lw.len()).any(|s| &w[s..s + lw.len()] == lw.letters())
    })
}

pub fn division_input() -> impl Strategy<Value = (NcPolynomial, Vec<NcPolynomial>)> {
    (
        any_poly(2, 7, 6),
        proptest::collection::vec(poly(2, 3, 2), 1..=4),
    )
}

pub fn check_division((f, divisors): (NcPolynomial, Vec<NcPolynomial>)) -> Check {
    let q = divide(&f, &divisors, &LLex).unwrap();
    let leads: Vec<&Word> = divisors.iter().map(|g| g.leading_word().unwrap()).collect();

    // (a) f = Σ c·w·g·w' + p
    let mut sum = q.remainder.clone();
    for t in &q.quotients {
        let term = divisors[t.index]
            .sandwich(&t.left, &t.right)
            .scale(&t.coefficient);
        sum = sum.add(&term, &LLex);
    }
    prop_assert_eq!(&sum, &f);

    // (b) no support word of p is a multiple of a leading word
    for w in q.remainder.support() {
        prop_assert!(!reducible_by(w, &leads));
    }

    for t in &q.quotients {
        let placed = leads[t.index].sandwich(&t.left, &t.right);
        // (c) quotient terms stay below Lw(f)
        prop_assert!(LLex.cmp_words(&placed, f.leading_word().unwrap()).is_le());
        // (d) and are not multiples of an earlier leading word
        prop_assert!(!reducible_by(&placed, &leads[..t.index]));
    }
    if let Some(rl) = q.remainder.leading_word() {
        prop_assert!(LLex.cmp_words(rl, f.leading_word().unwrap()).is_le());
    }
    Ok(())
}

// identities between S-polynomials

fn basis_for(leads: [Word; 3]) -> impl Strategy<Value = BasisState> {
    let [a, b, c] = leads;
    (
        poly_with_lead(a.into_letters(), 2, 2),
        poly_with_lead(b.into_letters(), 2, 2),
        poly_with_lead(c.into_letters(), 2, 2),
    )
        .prop_map(|(x, y, z)| BasisState::from_polys([x, y, z]).unwrap())
}

/// `g_j` and `g_s` placed in a common word `v·Lw(g_s)·v'`, which is then
/// multiplied by `w, w'`; `g_i` is a factor of the product.
#[derive(Debug, Clone)]
pub struct MultiplyCase {
    lw_s: Vec<Letter>,
    v: Vec<Letter>,
    v2: Vec<Letter>,
    j_at: (usize, usize),
    w: Vec<Letter>,
    w2: Vec<Letter>,
    i_at: (usize, usize),
}

pub fn multiply_input() -> impl Strategy<Value = (MultiplyCase, BasisState)> {
    (
        word(2, 1..=3),
        word(2, 0..=2),
        word(2, 0..=2),
        word(2, 0..=2),
        word(2, 0..=2),
    )
        .prop_filter("w·w' non-empty", |(_, _, _, w, w2)| {
            !(w.is_empty() && w2.is_empty())
        })
        .prop_flat_map(|(lw_s, v, v2, w, w2)| {
            let n = v.len() + lw_s.len() + v2.len();
            let big = n + w.len() + w2.len();
            (Just((lw_s, v, v2, w, w2)), factor_of(n), factor_of(big))
        })
        .prop_flat_map(|((lw_s, v, v2, w, w2), j_at, i_at)| {
            let c = MultiplyCase {
                lw_s,
                v,
                v2,
                j_at,
                w,
                w2,
                i_at,
            };
            let common_js = cat(&[&c.v, &c.lw_s, &c.v2]);
            let (_, lw_j, _) = split3(&common_js, j_at.0, j_at.1);
            let big = cat(&[&c.w, &common_js, &c.w2]);
            let (_, lw_i, _) = split3(&big, i_at.0, i_at.1);
            let leads = [lw_i, lw_j, Word::from(c.lw_s.clone())];
            (Just(c), basis_for(leads))
        })
}

/// `S_{i,s} = w·S_{j,s}·w' + S_{i,j}(w_i, w'_i; w·w_j, w'_j·w')`, and the
/// left side dominates both summands.
pub fn check_multiply((c, b): (MultiplyCase, BasisState)) -> Check {
    let common_js = cat(&[&c.v, &c.lw_s, &c.v2]);
    let (wj, _, wj2) = split3(&common_js, c.j_at.0, c.j_at.1);
    let big = cat(&[&c.w, &common_js, &c.w2]);
    let (wi, _, wi2) = split3(&big, c.i_at.0, c.i_at.1);
    let v = Word::from(c.v.clone());
    let v2 = Word::from(c.v2.clone());
    let uv = cat(&[&c.w, &c.v]);
    let uv2 = cat(&[&c.v2, &c.w2]);
    let o_is = Obstruction::new(0, 2, wi.clone(), wi2.clone(), uv, uv2, &b).unwrap();
    let o_js = Obstruction::new(1, 2, wj.clone(), wj2.clone(), v, v2, &b).unwrap();
    let moved = (cat(&[&c.w, &wj]), cat(&[&wj2, &c.w2]));
    let o_ij = Obstruction::new(0, 1, wi, wi2, moved.0, moved.1, &b).unwrap();
    let rhs = s(&o_js, &b).sandwich(&c.w, &c.w2).add(&s(&o_ij, &b), &LLex);
    prop_assert_eq!(s(&o_is, &b), rhs);
    prop_assert!(compare_obstructions(&o_is, &o_js, &LLex).is_gt());
    prop_assert!(compare_obstructions(&o_is, &o_ij, &LLex).is_gt());
    Ok(())
}

/// `g_i` placed in `v·Lw(g_j)·v'`, multiplied by `w, w'`; `g_s` is a factor of
/// the product.
#[derive(Debug, Clone)]
pub struct TailCase {
    lw_j: Vec<Letter>,
    v: Vec<Letter>,
    v2: Vec<Letter>,
    i_at: (usize, usize),
    w: Vec<Letter>,
    w2: Vec<Letter>,
    s_at: (usize, usize),
}

pub fn tail_input() -> impl Strategy<Value = (TailCase, BasisState)> {
    (
        word(2, 1..=3),
        word(2, 0..=2),
        word(2, 0..=2),
        word(2, 0..=2),
        word(2, 0..=2),
    )
        .prop_flat_map(|(lw_j, v, v2, w, w2)| {
            let n = v.len() + lw_j.len() + v2.len();
            let big = n + w.len() + w2.len();
            (Just((lw_j, v, v2, w, w2)), factor_of(n), factor_of(big))
        })
        .prop_flat_map(|((lw_j, v, v2, w, w2), i_at, s_at)| {
            let c = TailCase {
                lw_j,
                v,
                v2,
                i_at,
                w,
                w2,
                s_at,
            };
            let common_ij = cat(&[&c.v, &c.lw_j, &c.v2]);
            let (_, lw_i, _) = split3(&common_ij, i_at.0, i_at.1);
            let big = cat(&[&c.w, &common_ij, &c.w2]);
            let (_, lw_s, _) = split3(&big, s_at.0, s_at.1);
            let leads = [lw_i, Word::from(c.lw_j.clone()), lw_s];
            (Just(c), basis_for(leads))
        })
}

/// `S_{j,s}(u_j, u'_j; w_s, w'_s) = −w·S_{i,j}·w' + S_{i,s}(w·w_i, w'_i·w'; w_s, w'_s)`.
pub fn check_tail((c, b): (TailCase, BasisState)) -> Check {
    let common_ij = cat(&[&c.v, &c.lw_j, &c.v2]);
    let (wi, _, wi2) = split3(&common_ij, c.i_at.0, c.i_at.1);
    let big = cat(&[&c.w, &common_ij, &c.w2]);
    let (ws, _, ws2) = split3(&big, c.s_at.0, c.s_at.1);
    let uv = cat(&[&c.w, &c.v]);
    let uv2 = cat(&[&c.v2, &c.w2]);
    let o_js = Obstruction::new(1, 2, uv, uv2, ws.clone(), ws2.clone(), &b).unwrap();
    let v = Word::from(c.v.clone());
    let v2 = Word::from(c.v2.clone());
    let o_ij = Obstruction::new(0, 1, wi.clone(), wi2.clone(), v, v2, &b).unwrap();
    let moved = (cat(&[&c.w, &wi]), cat(&[&wi2, &c.w2]));
    let o_is = Obstruction::new(0, 2, moved.0, moved.1, ws, ws2, &b).unwrap();
    let rhs = s(&o_is, &b).sub(&s(&o_ij, &b).sandwich(&c.w, &c.w2), &LLex);
    prop_assert_eq!(s(&o_js, &b), rhs);
    prop_assert!(compare_obstructions(&o_js, &o_ij, &LLex).is_gt());
    prop_assert!(compare_obstructions(&o_js, &o_is, &LLex).is_gt());
    Ok(())
}

pub type BackwardCase = (Vec<Letter>, [(usize, usize); 3], BasisState);

/// Three generators whose leading words are factors of one common word.
pub fn backward_input() -> impl Strategy<Value = BackwardCase> {
    word(2, 1..=8)
        .prop_flat_map(|c| {
            let n = c.len();
            (Just(c), [factor_of(n), factor_of(n), factor_of(n)])
        })
        .prop_flat_map(|(c, at)| {
            let leads = at.map(|(p, l)| Word::from(&c[p..p + l]));
            (Just(c), Just(at), basis_for(leads))
        })
}

/// `S_{i,j} = S_{i,s}(w_i, w'_i; w, w') − S_{j,s}(w_j, w'_j; w, w')`.
pub fn check_backward((common, at, b): BackwardCase) -> Check {
    let (wi, _, wi2) = split3(&common, at[0].0, at[0].1);
    let (wj, _, wj2) = split3(&common, at[1].0, at[1].1);
    let (w, _, w2) = split3(&common, at[2].0, at[2].1);
    let o_ij =
        Obstruction::new(0, 1, wi.clone(), wi2.clone(), wj.clone(), wj2.clone(), &b).unwrap();
    let o_is = Obstruction::new(0, 2, wi, wi2, w.clone(), w2.clone(), &b).unwrap();
    let o_js = Obstruction::new(1, 2, wj, wj2, w, w2, &b).unwrap();
    prop_assert_eq!(s(&o_ij, &b), s(&o_is, &b).sub(&s(&o_js, &b), &LLex));
    Ok(())
}

// module term ordering

pub type TauCase = (
    Vec<Vec<Letter>>,
    Vec<(Vec<Letter>, usize, Vec<Letter>)>,
    Vec<Letter>,
    Vec<Letter>,
);

pub fn tau_input() -> impl Strategy<Value = TauCase> {
    (
        proptest::collection::vec(word(2, 1..=3), 3),
        proptest::collection::vec((word(2, 0..=3), 0usize..3, word(2, 0..=3)), 3),
        word(2, 0..=2),
        word(2, 0..=2),
    )
}

/// Antisymmetry, totality, transitivity and compatibility with two-sided
/// multiplication.
pub fn check_tau((leads, terms, l, r): TauCase) -> Check {
    let one = Coefficient::from_integer(1.into());
    let b = BasisState::from_polys(
        leads
            .into_iter()
            .map(|w| NcPolynomial::monomial(one.clone(), Word::from(w))),
    )
    .unwrap();
    let t: Vec<ModuleTerm> = terms
        .into_iter()
        .map(|(left, index, right)| ModuleTerm {
            left: left.into(),
            index,
            right: right.into(),
        })
        .collect();
    let cmp = |x: &ModuleTerm, y: &ModuleTerm| compare_tau(x, y, &b, &LLex);
    let scale = |m: &ModuleTerm| ModuleTerm {
        left: cat(&[&l, &m.left]),
        index: m.index,
        right: cat(&[&m.right, &r]),
    };
    for x in &t {
        for y in &t {
            prop_assert_eq!(cmp(x, y), cmp(y, x).reverse());
            prop_assert_eq!(cmp(x, y).is_eq(), x == y);
            prop_assert_eq!(cmp(&scale(x), &scale(y)), cmp(x, y));
            for z in &t {
                if cmp(x, y).is_le() && cmp(y, z).is_le() {
                    prop_assert!(cmp(x, z).is_le());
                }
            }
        }
    }
    Ok(())
}
