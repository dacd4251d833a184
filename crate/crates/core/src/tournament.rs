//! Finite tournaments and their elementary predicates.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{words_for, VertexSet};

/// Default limit on the number of candidate subsets scanned by
/// [`Tournament::enumerate_spanning_sets`].
pub const SPANNING_ENUM_CAP: u128 = 10_000_000;

/// A finite tournament on the vertices `0..n`.
///
/// Every ordered pair of distinct vertices has exactly one orientation. The
/// orientation is kept as an out-neighbourhood bit row per vertex; all
/// constructors orient each unordered pair once, so the rows of `i` and `j`
/// always disagree on the pair `{i, j}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Tournament {
    /// Tournament with `i -> j` exactly when `forward(i, j)` holds, queried
    /// once per pair with `i < j`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let stride = words_for(n);
        let mut rows = vec![0u64; n * stride];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = if forward(i, j) { (i, j) } else { (j, i) };
                rows[a * stride + b / 64] |= 1 << (b % 64);
            }
        }
        Ok(Tournament { n, stride, rows })
    }

    pub(crate) fn from_fn_unchecked(n: usize, forward: impl FnMut(usize, usize) -> bool) -> Self {
        Self::from_fn(n, forward).expect("nonempty tournament")
    }

    /// Validating constructor from an explicit arc list covering every pair once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = vec![None::<bool>; n * n];
        for &(i, j) in arcs {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            let (lo, hi) = (i.min(j), i.max(j));
            let slot = &mut seen[lo * n + hi];
            if slot.is_some() {
                return Err(Error::DuplicatePair(lo, hi));
            }
            *slot = Some(i < j);
        }
        for i in 0..n {
            for j in i + 1..n {
                if seen[i * n + j].is_none() {
                    return Err(Error::MissingPair(i, j));
                }
            }
        }
        Self::from_fn(n, |i, j| seen[i * n + j] == Some(true))
    }

    /// Pairs `(i, j)` with `i < j` in row-major order: `(0,1), (0,2), …, (1,2), …`.
    pub fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// Decodes a labeled census code: bit `k` of `code` orients the `k`-th
    /// pair of [`Tournament::pair_order`] forward.
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        if Self::pair_count(n) > 64 {
            return Err(Error::cap("pairs in a u64 code", Self::pair_count(n) as u128, 64u128));
        }
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            let bit = code >> k & 1 == 1;
            k += 1;
            bit
        })
    }

    /// Inverse of [`Tournament::from_code`]; `None` when the order exceeds 11.
    pub fn code(&self) -> Option<u64> {
        if Self::pair_count(self.n) > 64 {
            return None;
        }
        let mut code = 0u64;
        for (k, (i, j)) in Self::pair_order(self.n).enumerate() {
            if self.arc(i, j) {
                code |= 1 << k;
            }
        }
        Some(code)
    }

    /// Row-major packed orientation bits (`true` means `i -> j` for `i < j`).
    pub fn packed_bits(&self) -> Vec<bool> {
        Self::pair_order(self.n).map(|(i, j)| self.arc(i, j)).collect()
    }

    pub fn from_packed(n: usize, bits: &[bool]) -> Result<Self> {
        let need = Self::pair_count(n);
        if bits.len() != need {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {need} orientation bits, got {}", bits.len()),
            });
        }
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            k += 1;
            bits[k - 1]
        })
    }

    pub fn trivial() -> Self {
        Self::transitive(1)
    }

    pub fn arc_tournament() -> Self {
        Self::transitive(2)
    }

    /// Linear order `0 -> 1 -> … -> n-1` (all arcs forward).
    pub fn transitive(n: usize) -> Self {
        Self::from_fn_unchecked(n.max(1), |_, _| true)
    }

    /// The 3-cycle `0 -> 1 -> 2 -> 0`.
    pub fn cycle3() -> Self {
        Self::from_fn_unchecked(3, |i, j| !(i == 0 && j == 2))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn arc(&self, x: usize, y: usize) -> bool {
        x != y && self.rows[x * self.stride + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn out_row(&self, x: usize) -> &[u64] {
        &self.rows[x * self.stride..(x + 1) * self.stride]
    }

    /// Strict out-set `{y : x -> y}`.
    pub fn out_set(&self, x: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.out_row(x).to_vec())
    }

    /// Strict in-set `{y : y -> x}`.
    pub fn in_set(&self, x: usize) -> VertexSet {
        let mut s = self.out_set(x).complement();
        s.remove(x);
        s
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.out_row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, x: usize) -> usize {
        self.n - 1 - self.out_degree(x)
    }

    pub fn scores(&self) -> Vec<usize> {
        self.vertices().map(|x| self.out_degree(x)).collect()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        Self::pair_order(self.n).map(|(i, j)| if self.arc(i, j) { (i, j) } else { (j, i) })
    }

    pub fn reverse(&self) -> Self {
        Self::from_fn_unchecked(self.n, |i, j| !self.arc(i, j))
    }

    /// Relabels vertex `v` as `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![usize::MAX; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        assert!(inv.iter().all(|&v| v != usize::MAX), "relabel needs a permutation");
        Self::from_fn_unchecked(self.n, |i, j| self.arc(inv[i], inv[j]))
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        Ok(())
    }

    /// Induced subtournament on `s`. The second component lists, for each new
    /// vertex, the original vertex it came from (ascending).
    pub fn restrict(&self, s: &VertexSet) -> Result<(Tournament, Vec<usize>)> {
        self.check_set(s)?;
        let verts = s.to_vec();
        if verts.is_empty() {
            return Err(Error::EmptySet);
        }
        let t = Self::from_fn_unchecked(verts.len(), |i, j| self.arc(verts[i], verts[j]));
        Ok((t, verts))
    }

    /// No 3-cycle, equivalently the score sequence is `0, 1, …, n-1`.
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        for x in self.vertices() {
            let d = self.out_degree(x);
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    pub fn is_regular(&self) -> bool {
        self.vertices().all(|x| self.out_degree(x) == self.in_degree(x))
    }

    /// The vertex with empty out-set, if any.
    pub fn terminal_point(&self) -> Option<usize> {
        self.vertices().find(|&x| self.out_degree(x) == 0)
    }

    /// The vertex with empty in-set, if any.
    pub fn initial_point(&self) -> Option<usize> {
        self.vertices().find(|&x| self.in_degree(x) == 0)
    }

    fn in_row_intersects_out_row(&self, x: usize, y: usize) -> bool {
        // some z with y -> z and z -> x, i.e. z in out(y) \ out(x) \ {x}
        let (rx, ry) = (self.out_row(x), self.out_row(y));
        rx.iter().zip(ry).enumerate().any(|(w, (a, b))| {
            let mut m = b & !a;
            if w == x / 64 {
                m &= !(1 << (x % 64));
            }
            m != 0
        })
    }

    /// Whether the arc `x -> y` lies on a 3-cycle.
    pub fn arc_in_3cycle(&self, x: usize, y: usize) -> Result<bool> {
        for v in [x, y] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if !self.arc(x, y) {
            return Err(Error::NotAnArc(x, y));
        }
        Ok(self.in_row_intersects_out_row(x, y))
    }

    pub fn is_arc_cyclic(&self) -> bool {
        self.arcs().all(|(x, y)| self.in_row_intersects_out_row(x, y))
    }

    /// Every vertex lies on a 3-cycle.
    pub fn is_point_cyclic(&self) -> bool {
        self.three_cycle_counts().iter().all(|&c| c > 0)
    }

    /// Number of 3-cycles through each vertex.
    pub fn three_cycle_counts(&self) -> Vec<usize> {
        self.vertices()
            .map(|x| {
                let inx = self.in_set(x);
                self.out_set(x)
                    .iter()
                    .map(|y| {
                        self.out_row(y)
                            .iter()
                            .zip(inx.words())
                            .map(|(a, b)| (a & b).count_ones() as usize)
                            .sum::<usize>()
                    })
                    .sum()
            })
            .collect()
    }

    /// Every arc with both ends in `s` lies on a 3-cycle of the whole tournament.
    pub fn is_arc_cyclic_subset(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|x| {
            s.iter()
                .filter(|&y| self.arc(x, y))
                .all(|y| self.in_row_intersects_out_row(x, y))
        }))
    }

    /// Every pair is jointly dominated by, or jointly dominates, some third vertex.
    /// Tournaments of order one are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        if self.n < 2 {
            return false;
        }
        let rows: Vec<VertexSet> = self.vertices().map(|c| self.out_set(c)).collect();
        Self::pair_order(self.n).all(|(a, b)| {
            rows.iter().enumerate().any(|(c, out)| {
                c != a && c != b && out.contains(a) == out.contains(b)
            })
        })
    }

    /// `s` meets the strict out-set and the strict in-set of every vertex.
    pub fn is_spanning_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.vertices().all(|x| {
            let out = self.out_row(x);
            let meets_out = s.intersects_words(out);
            let mut in_words: Vec<u64> = out.iter().map(|w| !w).collect();
            in_words[x / 64] &= !(1 << (x % 64));
            meets_out && s.intersects_words(&in_words)
        }))
    }

    /// All spanning sets of the given size, in colex order.
    pub fn enumerate_spanning_sets(&self, size: usize, cap: u128) -> Result<Vec<VertexSet>> {
        let total = binomial(self.n as u128, size as u128);
        if total > cap {
            return Err(Error::cap("spanning-set candidates", total, cap));
        }
        if size == 0 || size > self.n {
            return Ok(Vec::new());
        }
        let outs: Vec<VertexSet> = self.vertices().map(|x| self.out_set(x)).collect();
        let ins: Vec<VertexSet> = self.vertices().map(|x| self.in_set(x)).collect();
        let mut found = Vec::new();
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let s = VertexSet::from_indices(self.n, comb.iter().copied());
            if (0..self.n).all(|x| outs[x].intersects(&s) && ins[x].intersects(&s)) {
                found.push(s);
            }
            // colex successor: bump the lowest entry that has room, reset those below
            let Some(i) = (0..size).find(|&i| {
                let limit = if i + 1 == size { self.n } else { comb[i + 1] };
                comb[i] + 1 < limit
            }) else {
                break;
            };
            comb[i] += 1;
            for (j, c) in comb.iter_mut().enumerate().take(i) {
                *c = j;
            }
        }
        Ok(found)
    }

    /// Strong components in the order induced by the arcs between them: every
    /// arc between two components runs from the earlier one to the later one.
    pub fn strong_components(&self) -> Vec<VertexSet> {
        // A vertex set dominates its complement iff it is a prefix of the
        // score-descending order with score sum C(k,2) + k(n-k).
        let scores = self.scores();
        let mut order: Vec<usize> = self.vertices().collect();
        order.sort_by(|&a, &b| scores[b].cmp(&scores[a]).then(a.cmp(&b)));
        let mut comps = Vec::new();
        let mut current = VertexSet::empty(self.n);
        let mut sum = 0usize;
        for (k, &v) in order.iter().enumerate() {
            current.insert(v);
            sum += scores[v];
            let k = k + 1;
            if sum == k * (k - 1) / 2 + k * (self.n - k) {
                comps.push(std::mem::replace(&mut current, VertexSet::empty(self.n)));
            }
        }
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strong_components().len() == 1
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}; ", self.n)?;
        for (k, (x, y)) in self.arcs().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}>{y}")?;
        }
        write!(f, ")")
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}
