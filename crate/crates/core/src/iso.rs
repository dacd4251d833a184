//! Isomorphism search and canonical labeling for small tournaments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Default vertex cap for isomorphism search and canonical labeling.
pub const ISO_CAP: usize = 12;

/// Joint colour refinement of two tournaments. Colours are comparable across
/// both inputs; the seed colour is `(out-degree, 3-cycles through the vertex)`.
fn joint_colours(t1: &Tournament, t2: &Tournament) -> (Vec<usize>, Vec<usize>) {
    let seed = |t: &Tournament| -> Vec<(usize, usize)> {
        let cyc = t.three_cycle_counts();
        t.vertices().map(|x| (t.out_degree(x), cyc[x])).collect()
    };
    let mut ids = BTreeMap::new();
    let s1 = seed(t1);
    let s2 = seed(t2);
    for s in s1.iter().chain(&s2) {
        let next = ids.len();
        ids.entry(*s).or_insert(next);
    }
    let mut c1: Vec<usize> = s1.iter().map(|s| ids[s]).collect();
    let mut c2: Vec<usize> = s2.iter().map(|s| ids[s]).collect();
    let mut classes = ids.len();
    loop {
        let sig = |t: &Tournament, c: &[usize]| -> Vec<(usize, Vec<usize>)> {
            t.vertices()
                .map(|x| {
                    let mut outs: Vec<usize> = t.out_set(x).iter().map(|y| c[y]).collect();
                    outs.sort_unstable();
                    (c[x], outs)
                })
                .collect()
        };
        let g1 = sig(t1, &c1);
        let g2 = sig(t2, &c2);
        let mut ids = BTreeMap::new();
        for s in g1.iter().chain(&g2) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        c1 = g1.iter().map(|s| ids[s]).collect();
        c2 = g2.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (c1, c2);
        }
        classes = ids.len();
    }
}

struct Search<'a, F: FnMut(&[usize]) -> bool> {
    t1: &'a Tournament,
    t2: &'a Tournament,
    mapping: Vec<usize>,
    visit: F,
    stopped: bool,
}

impl<F: FnMut(&[usize]) -> bool> Search<'_, F> {
    fn run(&mut self, domains: Vec<Option<VertexSet>>) {
        // most constrained unassigned vertex first
        let pick = domains
            .iter()
            .enumerate()
            .filter_map(|(u, d)| d.as_ref().map(|d| (d.len(), u)))
            .min();
        let Some((_, u)) = pick else {
            self.stopped = !(self.visit)(&self.mapping);
            return;
        };
        let candidates = domains[u].clone().unwrap();
        for v in candidates.iter() {
            let out_v = self.t2.out_set(v);
            let in_v = self.t2.in_set(v);
            let mut next = domains.clone();
            next[u] = None;
            let mut dead = false;
            for (w, d) in next.iter_mut().enumerate() {
                if let Some(d) = d {
                    d.intersect_with(if self.t1.arc(u, w) { &out_v } else { &in_v });
                    if d.is_empty() {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            self.mapping[u] = v;
            self.run(next);
            if self.stopped {
                return;
            }
        }
    }
}

/// Calls `visit` with every isomorphism `t1 -> t2` (as `mapping[u] = image of u`)
/// until it returns `false`.
pub fn for_each_isomorphism(
    t1: &Tournament,
    t2: &Tournament,
    cap: usize,
    visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    let n = t1.order();
    if n.max(t2.order()) > cap {
        return Err(Error::cap("isomorphism search order", n.max(t2.order()) as u128, cap as u128));
    }
    if n != t2.order() {
        return Ok(());
    }
    let (c1, c2) = joint_colours(t1, t2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(());
    }
    let domains = (0..n)
        .map(|u| Some(VertexSet::from_indices(n, (0..n).filter(|&v| c2[v] == c1[u]))))
        .collect();
    let mut search = Search {
        t1,
        t2,
        mapping: vec![usize::MAX; n],
        visit,
        stopped: false,
    };
    search.run(domains);
    Ok(())
}

/// An arc-preserving bijection `t1 -> t2`, if one exists. Inputs above `cap`
/// vertices are refused.
pub fn find_isomorphism_capped(
    t1: &Tournament,
    t2: &Tournament,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_isomorphism(t1, t2, cap, |m| {
        found = Some(m.to_vec());
        false
    })?;
    Ok(found)
}

pub fn find_isomorphism(t1: &Tournament, t2: &Tournament) -> Result<Option<Vec<usize>>> {
    find_isomorphism_capped(t1, t2, ISO_CAP)
}

/// All automorphisms, each as a vertex permutation.
pub fn automorphisms(t: &Tournament, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut all = Vec::new();
    for_each_isomorphism(t, t, cap, |m| {
        all.push(m.to_vec());
        true
    })?;
    Ok(all)
}

/// Checks that `mapping` is an arc-preserving bijection `t1 -> t2`.
pub fn is_isomorphism(t1: &Tournament, t2: &Tournament, mapping: &[usize]) -> bool {
    let n = t1.order();
    if n != t2.order() || mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in mapping {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    t1.arcs().all(|(x, y)| t2.arc(mapping[x], mapping[y]))
}

/// Minimal labeling code of a tournament.
///
/// The code lists the orientation of pairs `(i, j)`, `i < j`, ordered by `j`
/// then `i` (bit set when `i -> j`), under a labeling of the vertices. The
/// canonical code is the lexicographically smallest over all labelings; the
/// column order lets every partial labeling fix a prefix, so labelings whose
/// prefix is not minimal are dropped level by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabeling {
    pub code: Vec<bool>,
    /// Every labeling reaching the minimal code: `labeling[k]` is the vertex
    /// given label `k`. Two such labelings differ by an automorphism.
    pub labelings: Vec<Vec<usize>>,
}

impl CanonicalLabeling {
    pub fn compute(t: &Tournament, cap: usize) -> Result<Self> {
        let n = t.order();
        if n > cap {
            return Err(Error::cap("canonical labeling order", n as u128, cap as u128));
        }
        let mut states: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let mut code = Vec::with_capacity(Tournament::pair_count(n));
        for k in 1..n {
            let mut best: Option<Vec<bool>> = None;
            let mut next = Vec::new();
            for state in &states {
                for v in 0..n {
                    if state.contains(&v) {
                        continue;
                    }
                    let bits: Vec<bool> = state.iter().map(|&u| t.arc(u, v)).collect();
                    match &best {
                        Some(b) if bits > *b => continue,
                        Some(b) if bits < *b => next.clear(),
                        _ => {}
                    }
                    best = Some(bits);
                    let mut s = state.clone();
                    s.push(v);
                    next.push(s);
                }
            }
            debug_assert_eq!(next.iter().map(|s| s.len()).min(), Some(k + 1));
            code.extend(best.unwrap());
            states = next;
        }
        Ok(CanonicalLabeling {
            code,
            labelings: states,
        })
    }

    /// The tournament relabeled by the first minimal labeling.
    pub fn canonical_form(&self, t: &Tournament) -> Tournament {
        let lab = &self.labelings[0];
        Tournament::from_fn_unchecked(lab.len(), |i, j| t.arc(lab[i], lab[j]))
    }

    /// Code packed MSB-first into bytes.
    pub fn code_bytes(&self) -> Vec<u8> {
        self.code
            .chunks(8)
            .map(|c| c.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b as u8) << (7 - i)))
            .collect()
    }
}
