//! Building tournaments: lexicographic products, doubles, point additions,
//! attachments and the named finite families.

use crate::error::{Error, Result};
use crate::quotient::QuotientMap;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// A base tournament with one fiber tournament per base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberAssignment {
    pub base: Tournament,
    pub fibers: Vec<Tournament>,
}

impl FiberAssignment {
    pub fn new(base: Tournament, fibers: Vec<Tournament>) -> Result<Self> {
        if fibers.len() != base.order() {
            return Err(Error::Precondition(format!(
                "{} fibers for a base of order {}",
                fibers.len(),
                base.order()
            )));
        }
        Ok(FiberAssignment { base, fibers })
    }

    /// Every base vertex carries a copy of `fiber`.
    pub fn constant(base: Tournament, fiber: &Tournament) -> Self {
        let fibers = vec![fiber.clone(); base.order()];
        FiberAssignment { base, fibers }
    }

    /// First product vertex of each fiber, plus the total order at the end.
    pub fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.fibers.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for f in &self.fibers {
            acc += f.order();
            offsets.push(acc);
        }
        offsets
    }
}

/// Lexicographic product: base arcs decide between fibers, fiber arcs decide
/// within one. Vertices are ordered by base vertex, then fiber vertex. The
/// returned map is the projection onto the base.
pub fn lex_product(fa: &FiberAssignment) -> (Tournament, QuotientMap) {
    let mut owner = Vec::new();
    let mut local = Vec::new();
    for (b, f) in fa.fibers.iter().enumerate() {
        for y in f.vertices() {
            owner.push(b);
            local.push(y);
        }
    }
    let t = Tournament::from_fn_unchecked(owner.len(), |i, j| {
        let (bi, bj) = (owner[i], owner[j]);
        if bi == bj {
            fa.fibers[bi].arc(local[i], local[j])
        } else {
            fa.base.arc(bi, bj)
        }
    });
    let q = QuotientMap::new(t.clone(), fa.base.clone(), owner);
    (t, q)
}

/// The double on `[0, a1-, a1+, a2-, a2+, …]`: `a- -> a+ -> 0 -> a-`, and an arc
/// `a -> b` of `t` gives `a+ -> b+`, `a- -> b-`, `b+ -> a-`, `b- -> a+`.
pub fn double(t: &Tournament) -> Tournament {
    let n = 2 * t.order() + 1;
    // vertex v >= 1 is (a, sign) with a = (v-1)/2, sign + when v is even
    let split = |v: usize| ((v - 1) / 2, v % 2 == 0);
    Tournament::from_fn_unchecked(n, |i, j| {
        if i == 0 {
            return !split(j).1;
        }
        let ((a, ap), (b, bp)) = (split(i), split(j));
        double_arc(t, a, ap, b, bp)
    })
}

fn double_arc(t: &Tournament, a: usize, a_plus: bool, b: usize, b_plus: bool) -> bool {
    if a == b {
        return !a_plus;
    }
    let forward = t.arc(a, b);
    if a_plus == b_plus {
        forward
    } else {
        !forward
    }
}

/// The double without its vertex 0; `a-` is `2a`, `a+` is `2a + 1`.
pub fn reduced_double(t: &Tournament) -> Tournament {
    Tournament::from_fn_unchecked(2 * t.order(), |i, j| {
        double_arc(t, i / 2, i % 2 == 1, j / 2, j % 2 == 1)
    })
}

/// Adds `m = n`, `M = n + 1`, `p = n + 2`: `m` beats everything except `p`, `M`
/// loses to everything, `p` beats `m`, `M` and all of `t` except vertex 0,
/// which beats `p`.
pub fn irreducible_extension(t: &Tournament) -> Tournament {
    let n = t.order();
    let (m, big) = (n, n + 1);
    Tournament::from_fn_unchecked(n + 3, |i, j| {
        if j < n {
            return t.arc(i, j);
        }
        // i < j here, so j is one of the new points
        if j == m {
            false
        } else if j == big {
            true
        } else {
            i == 0
        }
    })
}

/// A new vertex `u = n` with in-set `e` and out-set the complement of `e`.
pub fn add_dominated_point(t: &Tournament, e: &VertexSet) -> Result<Tournament> {
    t.check_set(e)?;
    let n = t.order();
    Ok(Tournament::from_fn_unchecked(n + 1, |i, j| {
        if j < n {
            t.arc(i, j)
        } else {
            e.contains(i)
        }
    }))
}

/// New vertices `u = n`, `v = n + 1` with `u -> v`, `E -> u -> F`, `F -> v -> E`.
pub fn add_pair(t: &Tournament, e: &VertexSet) -> Result<Tournament> {
    t.check_set(e)?;
    let n = t.order();
    Ok(Tournament::from_fn_unchecked(n + 2, |i, j| {
        if j < n {
            t.arc(i, j)
        } else if i == n {
            true
        } else if j == n {
            e.contains(i)
        } else {
            !e.contains(i)
        }
    }))
}

/// `every b in F has an a in E with b -> a`, and `every a in E has such a b`.
pub fn is_surjective_from_complement(t: &Tournament, e: &VertexSet) -> Result<bool> {
    t.check_set(e)?;
    let f = e.complement();
    let from_f = f.iter().all(|b| e.iter().any(|a| t.arc(b, a)));
    let into_e = e.iter().all(|a| f.iter().any(|b| t.arc(b, a)));
    Ok(!f.is_empty() && !e.is_empty() && from_f && into_e)
}

/// Hypothesis of [`add_pair`]'s guarantees: every vertex of `F` has an arc
/// from `E` and an arc into `E`.
pub fn pair_hypothesis(t: &Tournament, e: &VertexSet) -> Result<bool> {
    t.check_set(e)?;
    Ok(e.complement().iter().all(|b| {
        e.iter().any(|a| t.arc(a, b)) && e.iter().any(|a| t.arc(b, a))
    }))
}

/// Gluing data: a partition `{C_i}` of `y` and matching 2-fold partitions
/// `(E_i, F_i)` of `x`, given by their `E_i` sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentSpec {
    pub y: Tournament,
    pub x: Tournament,
    pub parts: Vec<VertexSet>,
    pub e_sides: Vec<VertexSet>,
}

impl AttachmentSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidAttachment(m.to_string()));
        if self.parts.is_empty() {
            return bad("no parts");
        }
        if self.parts.len() != self.e_sides.len() {
            return bad("parts and pairs differ in number");
        }
        let mut covered = VertexSet::empty(self.y.order());
        for c in &self.parts {
            self.y.check_set(c)?;
            if c.is_empty() {
                return bad("empty part");
            }
            if c.intersects(&covered) {
                return bad("parts overlap");
            }
            covered.union_with(c);
        }
        if !covered.is_full() {
            return bad("parts do not cover y");
        }
        for (i, e) in self.e_sides.iter().enumerate() {
            self.x.check_set(e)?;
            if self.e_sides[..i].contains(e) {
                return bad("two pairs share the same E side");
            }
        }
        Ok(())
    }

    /// At least two parts and `R ∩ (F_i × E_i)` surjective for every pair.
    pub fn hypotheses_hold(&self) -> Result<bool> {
        self.validate()?;
        if self.parts.len() < 2 {
            return Ok(false);
        }
        for e in &self.e_sides {
            if !is_surjective_from_complement(&self.x, e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The attachment of `y` to `x`: vertices of `x` first, then those of `y`
/// shifted by `|x|`; cross arcs `E_i -> C_i -> F_i`.
pub fn attach(spec: &AttachmentSpec) -> Result<Tournament> {
    spec.validate()?;
    let nx = spec.x.order();
    let mut part_of = vec![0; spec.y.order()];
    for (i, c) in spec.parts.iter().enumerate() {
        for v in c.iter() {
            part_of[v] = i;
        }
    }
    Ok(Tournament::from_fn_unchecked(nx + spec.y.order(), |i, j| {
        match (i < nx, j < nx) {
            (true, true) => spec.x.arc(i, j),
            (false, false) => spec.y.arc(i - nx, j - nx),
            // i in x, j in y
            _ => spec.e_sides[part_of[j - nx]].contains(i),
        }
    }))
}

/// Both halves of the 2-fold partition are spanning sets.
pub fn is_spanning_partition(t: &Tournament, e: &VertexSet) -> Result<bool> {
    Ok(t.is_spanning_set(e)? && t.is_spanning_set(&e.complement())?)
}

/// Attachment of a copy `t+` (vertices `n..2n`) to a copy `t-` (vertices
/// `0..n`) with `C_1 = E+`, `C_2 = F+`, `(E_1, F_1) = (E-, F-)`,
/// `(E_2, F_2) = (F-, E-)`.
pub fn generalized_reduced_double(t: &Tournament, e: &VertexSet) -> Result<Tournament> {
    if !is_spanning_partition(t, e)? {
        return Err(Error::NotSpanningPartition);
    }
    let f = e.complement();
    attach(&AttachmentSpec {
        y: t.clone(),
        x: t.clone(),
        parts: vec![e.clone(), f.clone()],
        e_sides: vec![e.clone(), f],
    })
}

/// The interval `a..=b` of `N_1`: the linear order with each arc `(i, i+1)`
/// reversed. Vertex `k` is `a + k`.
pub fn n1_interval(a: u64, b: u64) -> Result<Tournament> {
    if b < a {
        return Err(Error::DegenerateRange(format!("{a}..={b}")));
    }
    let n = usize::try_from(b - a + 1).map_err(|_| Error::DegenerateRange(format!("{a}..={b}")))?;
    Ok(Tournament::from_fn_unchecked(n, |i, j| j != i + 1))
}

/// Indices `1..=n` of `2N_0`, laid out `[1-, 1+, 2-, 2+, …]` with `∞` last
/// when requested.
pub fn two_n0(n: usize, with_infinity: bool) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::DegenerateRange("2N0 needs n >= 1".into()));
    }
    // i- -> i+ and i- -> (i+2)+; every other cross pair runs i+ -> j-
    let cross_minus_first = |i_minus: usize, j_plus: usize| j_plus == i_minus || j_plus == i_minus + 2;
    Ok(two_copies(n, with_infinity, |i, j| i < j, cross_minus_first))
}

/// Indices `a..=b` of `2N_1`, laid out `[a-, a+, (a+1)-, …]` with `∞` last
/// when requested.
pub fn two_n1(a: u64, b: u64, with_infinity: bool) -> Result<Tournament> {
    if b < a {
        return Err(Error::DegenerateRange(format!("{a}..={b}")));
    }
    let n = usize::try_from(b - a + 1).map_err(|_| Error::DegenerateRange(format!("{a}..={b}")))?;
    Ok(two_copies(n, with_infinity, |i, j| j != i + 1, |i, j| i == j))
}

/// `+` copy follows `plus(i, j)` for `i < j`, the `-` copy is its reverse,
/// `minus_to_plus(i, j)` decides `i- -> j+`; `∞` beats the `-` copy and loses
/// to the `+` copy.
fn two_copies(
    n: usize,
    with_infinity: bool,
    plus: impl Fn(usize, usize) -> bool,
    minus_to_plus: impl Fn(usize, usize) -> bool,
) -> Tournament {
    let total = 2 * n + with_infinity as usize;
    Tournament::from_fn_unchecked(total, |u, v| {
        if v == 2 * n {
            return u % 2 == 1;
        }
        let (i, ip) = (u / 2, u % 2 == 1);
        let (j, jp) = (v / 2, v % 2 == 1);
        match (ip, jp) {
            (true, true) => plus(i, j),
            (false, false) => !plus(i, j),
            (false, true) => minus_to_plus(i, j),
            (true, false) => !minus_to_plus(j, i),
        }
    })
}

/// `Y_2` on `a1 = 0, a2 = 1, b1 = 2, b2 = 3, c = 4`.
pub fn y2() -> Tournament {
    Tournament::from_arcs(
        5,
        &[(0, 2), (3, 1), (0, 3), (1, 2), (0, 1), (2, 3), (4, 0), (4, 1), (2, 4), (3, 4)],
    )
    .expect("fixed arc list")
}

/// Cyclic group `Z/n` with `x -> y` iff `y - x` lies in `game` (nonzero elements).
pub fn cyclic_game(n: usize, game: &[usize]) -> Result<Tournament> {
    let g = crate::grouptour::FiniteAbelianGroup::cyclic(n)?;
    let subset = crate::grouptour::GameSubset::from_positive(g, game.to_vec())?;
    Ok(crate::grouptour::tournament_from_game(&subset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::is_prime;

    #[test]
    fn double_of_trivial_is_c3() {
        let d = double(&Tournament::trivial());
        assert_eq!(d.order(), 3);
        assert!(d.arc(0, 1) && d.arc(1, 2) && d.arc(2, 0));
    }

    #[test]
    fn double_arc_rules() {
        // a = 0 -> b = 1 in the arc: vertices 0, a- = 1, a+ = 2, b- = 3, b+ = 4
        let d = double(&Tournament::arc_tournament());
        for (x, y) in [(1, 2), (2, 0), (0, 1), (3, 4), (4, 0), (0, 3), (2, 4), (1, 3), (4, 1), (3, 2)] {
            assert!(d.arc(x, y), "{x} -> {y}");
        }
        assert!(d.is_regular());
    }

    #[test]
    fn reduced_double_of_trivial_is_arc() {
        assert_eq!(reduced_double(&Tournament::trivial()), Tournament::arc_tournament());
        assert!(!is_prime(&reduced_double(&Tournament::cycle3())));
    }

    #[test]
    fn irreducible_extension_small() {
        let j2 = irreducible_extension(&Tournament::trivial());
        assert_eq!(j2.order(), 4);
        assert!(j2.is_irreducible());
        // m -> x0, x0 -> M, p -> m, x0 -> p
        assert!(j2.arc(1, 0) && j2.arc(0, 2) && j2.arc(3, 1) && j2.arc(0, 3) && j2.arc(3, 2) && j2.arc(1, 2));
        assert!(irreducible_extension(&Tournament::arc_tournament()).is_irreducible());
        assert!(irreducible_extension(&Tournament::cycle3()).is_irreducible());
    }

    #[test]
    fn point_additions() {
        let t = add_dominated_point(&Tournament::cycle3(), &VertexSet::singleton(3, 0)).unwrap();
        assert!(t.arc(0, 3) && t.arc(3, 1) && t.arc(3, 2));
        let e = VertexSet::from_indices(3, [0, 2]);
        let t = add_pair(&Tournament::cycle3(), &e).unwrap();
        // u = 3, v = 4
        assert!(t.arc(3, 4) && t.arc(0, 3) && t.arc(2, 3) && t.arc(3, 1));
        assert!(t.arc(4, 0) && t.arc(4, 2) && t.arc(1, 4));
    }

    #[test]
    fn attach_reproduces_add_pair() {
        let x = Tournament::cycle3();
        let e = VertexSet::from_indices(3, [0, 2]);
        let spec = AttachmentSpec {
            y: Tournament::arc_tournament(),
            x: x.clone(),
            parts: vec![VertexSet::singleton(2, 0), VertexSet::singleton(2, 1)],
            e_sides: vec![e.clone(), e.complement()],
        };
        assert_eq!(attach(&spec).unwrap(), add_pair(&x, &e).unwrap());
    }

    #[test]
    fn attach_rejects_bad_specs() {
        let spec = AttachmentSpec {
            y: Tournament::arc_tournament(),
            x: Tournament::cycle3(),
            parts: vec![VertexSet::singleton(2, 0), VertexSet::singleton(2, 0)],
            e_sides: vec![VertexSet::singleton(3, 0), VertexSet::singleton(3, 1)],
        };
        assert!(matches!(attach(&spec), Err(Error::InvalidAttachment(_))));
    }

    #[test]
    fn n1_interval_small() {
        let t = n1_interval(1, 3).unwrap();
        // 2 -> 1, 3 -> 2, 1 -> 3 as vertices 1, 0; 2, 1; 0, 2
        assert!(t.arc(1, 0) && t.arc(2, 1) && t.arc(0, 2));
        assert!(is_prime(&t));
        assert!(n1_interval(3, 1).is_err());
    }

    #[test]
    fn two_n1_window() {
        let t = two_n1(1, 3, false).unwrap();
        assert_eq!(t.order(), 6);
        assert!(is_prime(&t) && t.is_arc_cyclic());
        // i- -> i+, i+ -> j- for j != i
        assert!(t.arc(0, 1) && t.arc(1, 2) && t.arc(3, 0));
    }

    #[test]
    fn two_n0_cross_arcs() {
        let t = two_n0(4, true).unwrap();
        // 1- = 0, 1+ = 1, 3+ = 5, ∞ = 8
        assert!(t.arc(0, 1) && t.arc(0, 5) && t.arc(1, 8) && t.arc(8, 0));
        assert!(t.arc(1, 2)); // 1+ -> 2-
    }

    #[test]
    fn y2_arcs_bit_for_bit() {
        let y = y2();
        assert_eq!(y.out_set(4).to_vec(), vec![0, 1]);
        assert_eq!(y.out_set(0).to_vec(), vec![1, 2, 3]);
    }
}
