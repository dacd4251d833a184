//! Quotient maps between tournaments.

use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// A candidate tournament map: `assignment[x]` is the image of source vertex `x`.
///
/// Construction does not validate; [`QuotientMap::is_quotient_map`] decides
/// whether the map is surjective and preserves every arc between distinct images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub source: Tournament,
    pub target: Tournament,
    pub assignment: Vec<usize>,
}

impl QuotientMap {
    pub fn new(source: Tournament, target: Tournament, assignment: Vec<usize>) -> Self {
        QuotientMap {
            source,
            target,
            assignment,
        }
    }

    pub fn identity(t: &Tournament) -> Self {
        Self::new(t.clone(), t.clone(), t.vertices().collect())
    }

    /// The constant map onto the trivial tournament.
    pub fn constant(t: &Tournament) -> Self {
        Self::new(t.clone(), Tournament::trivial(), vec![0; t.order()])
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn is_surjective(&self) -> bool {
        let m = self.target.order();
        let mut hit = vec![false; m];
        for &y in &self.assignment {
            if y >= m {
                return false;
            }
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_quotient_map(&self) -> bool {
        if self.assignment.len() != self.source.order() || !self.is_surjective() {
            return false;
        }
        self.source.arcs().all(|(x, y)| {
            let (hx, hy) = (self.assignment[x], self.assignment[y]);
            hx == hy || self.target.arc(hx, hy)
        })
    }

    /// Preimage of each target vertex.
    pub fn fibers(&self) -> Vec<VertexSet> {
        let mut fibers = vec![VertexSet::empty(self.source.order()); self.target.order()];
        for (x, &y) in self.assignment.iter().enumerate() {
            fibers[y].insert(x);
        }
        fibers
    }

    /// `self` followed by `next` (requires `next.source == self.target`).
    pub fn then(&self, next: &QuotientMap) -> QuotientMap {
        debug_assert_eq!(self.target, next.source);
        QuotientMap::new(
            self.source.clone(),
            next.target.clone(),
            self.assignment.iter().map(|&y| next.assignment[y]).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_constant_are_quotients() {
        let t = Tournament::from_fn(5, |i, j| (i + j) % 3 != 0).unwrap();
        assert!(QuotientMap::identity(&t).is_quotient_map());
        assert!(QuotientMap::constant(&t).is_quotient_map());
    }

    #[test]
    fn merging_two_vertices_of_c3_onto_an_arc_fails() {
        // 0 -> 1 -> 2 -> 0; send 0,1 to a and 2 to b: arcs 1->2 and 2->0 disagree
        for assignment in [vec![0, 0, 1], vec![1, 1, 0]] {
            let q = QuotientMap::new(Tournament::cycle3(), Tournament::arc_tournament(), assignment);
            assert!(!q.is_quotient_map());
        }
    }

    #[test]
    fn non_surjective_is_rejected() {
        let q = QuotientMap::new(Tournament::trivial(), Tournament::arc_tournament(), vec![0]);
        assert!(!q.is_quotient_map());
    }
}
