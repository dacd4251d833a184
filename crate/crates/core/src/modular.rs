//! Q-invariant sets (modules), prime detection and the three base quotients.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::quotient::QuotientMap;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Default vertex cap for [`maximal_invariant_sets`].
pub const MAXIMAL_SETS_CAP: usize = 24;

/// `{z : x ->= z ->= y or y ->= z ->= x}` with non-strict arcs.
pub fn q_set(t: &Tournament, x: usize, y: usize) -> VertexSet {
    let n = t.order();
    let weak = |a: usize, b: usize| a == b || t.arc(a, b);
    VertexSet::from_indices(
        n,
        (0..n).filter(|&z| (weak(x, z) && weak(z, y)) || (weak(y, z) && weak(z, x))),
    )
}

/// Union of `q_set(x, y)` over all `x, y` in `a`.
pub fn q_image(t: &Tournament, a: &VertexSet) -> Result<VertexSet> {
    t.check_set(a)?;
    let mut image = VertexSet::empty(t.order());
    for x in a.iter() {
        for y in a.iter().filter(|&y| y >= x) {
            image.union_with(&q_set(t, x, y));
        }
    }
    Ok(image)
}

/// `z` lies outside `a` but has arcs both into and out of `a`.
#[inline]
fn splits(t: &Tournament, z: usize, a: &VertexSet) -> bool {
    let row = t.out_row(z);
    a.intersects_words(row) && !a.subset_of_words(row)
}

/// Every vertex outside `a` dominates all of `a` or is dominated by all of it.
pub fn is_q_invariant(t: &Tournament, a: &VertexSet) -> Result<bool> {
    t.check_set(a)?;
    Ok(t.vertices().all(|z| a.contains(z) || !splits(t, z, a)))
}

fn closure_in_place(t: &Tournament, a: &mut VertexSet) {
    loop {
        let mut changed = false;
        for z in t.vertices() {
            if !a.contains(z) && splits(t, z, a) {
                a.insert(z);
                changed = true;
            }
        }
        if !changed || a.is_full() {
            return;
        }
    }
}

/// Smallest Q-invariant set containing `a`.
pub fn q_closure(t: &Tournament, a: &VertexSet) -> Result<VertexSet> {
    t.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut c = a.clone();
    closure_in_place(t, &mut c);
    Ok(c)
}

fn pair_closure(t: &Tournament, x: usize, y: usize) -> VertexSet {
    let mut c = VertexSet::from_indices(t.order(), [x, y]);
    closure_in_place(t, &mut c);
    c
}

/// No Q-invariant set with `2 <= size < n`; requires `n >= 2`.
pub fn is_prime(t: &Tournament) -> bool {
    let n = t.order();
    n >= 2 && Tournament::pair_order(n).all(|(x, y)| pair_closure(t, x, y).is_full())
}

/// All maximal proper Q-invariant sets, sorted by their element lists.
pub fn maximal_invariant_sets(t: &Tournament) -> Result<Vec<VertexSet>> {
    maximal_invariant_sets_capped(t, MAXIMAL_SETS_CAP)
}

pub fn maximal_invariant_sets_capped(t: &Tournament, cap: usize) -> Result<Vec<VertexSet>> {
    let n = t.order();
    if n < 2 {
        return Err(Error::Precondition("maximal invariant sets need n >= 2".into()));
    }
    if n > cap {
        return Err(Error::cap("maximal invariant set search order", n as u128, cap as u128));
    }
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut stack = Vec::new();
    let mut maximal = Vec::new();
    for x in 0..n {
        let mut lonely = true;
        for y in (0..n).filter(|&y| y != x) {
            let c = pair_closure(t, x, y);
            if !c.is_full() {
                lonely = false;
                if seen.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        if lonely {
            maximal.push(VertexSet::singleton(n, x));
        }
    }
    while let Some(c) = stack.pop() {
        let mut grows = false;
        for v in c.complement().iter() {
            let mut d = c.clone();
            d.insert(v);
            closure_in_place(t, &mut d);
            if !d.is_full() {
                grows = true;
                if seen.insert(d.clone()) {
                    stack.push(d);
                }
            }
        }
        if !grows {
            maximal.push(c);
        }
    }
    maximal.sort_by_key(|s| s.to_vec());
    Ok(maximal)
}

/// Identifies the Q-invariant set `a` to a single vertex. The merged vertex
/// takes the place of the smallest member of `a`; other vertices keep their
/// relative order.
pub fn smash(t: &Tournament, a: &VertexSet) -> Result<(Tournament, QuotientMap)> {
    t.check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_q_invariant(t, a)? {
        return Err(Error::NotInvariant);
    }
    let rep = a.first().unwrap();
    let mut assignment = vec![0; t.order()];
    let mut reps = Vec::new();
    for x in t.vertices() {
        if a.contains(x) && x != rep {
            continue;
        }
        assignment[x] = reps.len();
        reps.push(x);
    }
    for x in a.iter() {
        assignment[x] = assignment[rep];
    }
    let target = Tournament::from_fn_unchecked(reps.len(), |i, j| t.arc(reps[i], reps[j]));
    let q = QuotientMap::new(t.clone(), target.clone(), assignment);
    Ok((target, q))
}

/// Some proper nonempty set dominates its complement.
pub fn has_arc_quotient(t: &Tournament) -> bool {
    !t.is_strongly_connected()
}

/// Quotient whose fibers are the given disjoint sets, listed in target order.
fn quotient_by_fibers(t: &Tournament, fibers: &[VertexSet]) -> (Tournament, QuotientMap) {
    let mut assignment = vec![0; t.order()];
    for (i, f) in fibers.iter().enumerate() {
        for x in f.iter() {
            assignment[x] = i;
        }
    }
    let reps: Vec<usize> = fibers.iter().map(|f| f.first().unwrap()).collect();
    let target = Tournament::from_fn_unchecked(reps.len(), |i, j| t.arc(reps[i], reps[j]));
    let q = QuotientMap::new(t.clone(), target.clone(), assignment);
    (target, q)
}

/// Condensation onto the transitive tournament of strong components
/// (component `i` -> component `j` iff `i < j`).
pub fn max_order_quotient(t: &Tournament) -> Result<(Tournament, QuotientMap)> {
    let comps = t.strong_components();
    if comps.len() < 2 {
        return Err(Error::NotApplicable("tournament is strongly connected"));
    }
    Ok(quotient_by_fibers(t, &comps))
}

/// The maximal proper Q-invariant sets of a strongly connected tournament,
/// ordered by smallest element. They partition the vertex set.
fn prime_fibers(t: &Tournament) -> Vec<VertexSet> {
    let n = t.order();
    let mut covered = VertexSet::empty(n);
    let mut fibers = Vec::new();
    for x in t.vertices() {
        if covered.contains(x) {
            continue;
        }
        let mut m = VertexSet::singleton(n, x);
        for y in t.vertices() {
            if m.contains(y) {
                continue;
            }
            let c = pair_closure(t, x, y);
            if !c.is_full() {
                m.union_with(&c);
            }
        }
        covered.union_with(&m);
        fibers.push(m);
    }
    fibers
}

/// Quotient onto a prime tournament for a strongly connected input with at
/// least two vertices; the identity when the input is already prime.
pub fn prime_quotient(t: &Tournament) -> Result<(Tournament, QuotientMap)> {
    if t.order() < 2 {
        return Err(Error::NotApplicable("trivial tournament"));
    }
    if has_arc_quotient(t) {
        return Err(Error::NotApplicable("tournament has an arc quotient"));
    }
    Ok(quotient_by_fibers(t, &prime_fibers(t)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseKind {
    Trivial,
    Order,
    Prime,
}

impl BaseKind {
    pub fn tag(self) -> u8 {
        match self {
            BaseKind::Trivial => 0,
            BaseKind::Order => 1,
            BaseKind::Prime => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Trivial => "trivial",
            BaseKind::Order => "order",
            BaseKind::Prime => "prime",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "trivial" => Some(BaseKind::Trivial),
            "order" => Some(BaseKind::Order),
            "prime" => Some(BaseKind::Prime),
            _ => None,
        }
    }
}

/// Trivial, maximum order, or prime quotient, whichever applies.
pub fn base_quotient(t: &Tournament) -> (Tournament, QuotientMap, BaseKind) {
    if t.order() == 1 {
        let q = QuotientMap::constant(t);
        return (Tournament::trivial(), q, BaseKind::Trivial);
    }
    if has_arc_quotient(t) {
        let (b, q) = max_order_quotient(t).expect("not strongly connected");
        return (b, q, BaseKind::Order);
    }
    let (b, q) = prime_quotient(t).expect("strongly connected");
    (b, q, BaseKind::Prime)
}
