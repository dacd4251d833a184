//! Tournaments from game subsets of finite abelian groups.

pub mod dyadic;

use std::fmt;

use crate::error::{Error, Result};
use crate::quotient::QuotientMap;
use crate::tournament::Tournament;

/// Largest group order turned into an explicit tournament.
pub const MAX_GROUP_ORDER: usize = 1 << 14;

/// `Z/n_1 × … × Z/n_m`. Elements are indexed in mixed radix with the first
/// factor least significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<usize>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<usize>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("no factors".into()));
        }
        if moduli.iter().any(|&m| m == 0) {
            return Err(Error::InvalidGroup("factor Z/0".into()));
        }
        let mut order: usize = 1;
        for &m in &moduli {
            order = order
                .checked_mul(m)
                .filter(|&o| o <= MAX_GROUP_ORDER)
                .ok_or_else(|| Error::cap("group order", u128::MAX, MAX_GROUP_ORDER as u128))?;
        }
        Ok(FiniteAbelianGroup { moduli })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Parses `Z9`, `Z3^2`, `Z5xZ7`, `Z3^2xZ5`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGroup(format!("cannot parse group spec {s:?}"));
        let mut moduli = Vec::new();
        for factor in s.trim().split(['x', '×']) {
            let body = factor.trim().strip_prefix('Z').ok_or_else(bad)?;
            let (m, e) = match body.split_once('^') {
                Some((m, e)) => (m, e.parse::<usize>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let m: usize = m.parse().map_err(|_| bad())?;
            moduli.extend(std::iter::repeat(m).take(e));
        }
        Self::new(moduli)
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn coords(&self, mut x: usize) -> Vec<usize> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = x % m;
                x /= m;
                c
            })
            .collect()
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.moduli)
            .rev()
            .fold(0, |acc, (&c, &m)| acc * m + c % m)
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> usize {
        self.moduli[..i].iter().product()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.coords(x), self.coords(y));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        self.index(&sum)
    }

    pub fn neg(&self, x: usize) -> usize {
        let c: Vec<usize> = self
            .coords(x)
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| (m - c) % m)
            .collect();
        self.index(&c)
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `k · x`.
    pub fn scale(&self, k: usize, x: usize) -> usize {
        let c: Vec<usize> = self.coords(x).iter().zip(&self.moduli).map(|(&c, &m)| (c * (k % m)) % m).collect();
        self.index(&c)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// `A ⊆ G` with `A ∩ -A = {0}` and `A ∪ -A = G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSubset {
    group: FiniteAbelianGroup,
    members: Vec<bool>,
}

/// Membership check for `elems` as a game subset of `group`.
pub fn validate_game_subset(group: &FiniteAbelianGroup, elems: &[usize]) -> bool {
    GameSubset::new(group.clone(), elems.to_vec()).is_ok()
}

impl GameSubset {
    /// `elems` must contain the identity `0`.
    pub fn new(group: FiniteAbelianGroup, elems: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if n % 2 == 0 {
            return Err(Error::InvalidGroup(format!("{group} has even order")));
        }
        let mut members = vec![false; n];
        for &x in &elems {
            if x >= n {
                return Err(Error::InvalidGameSubset(format!("{x} is not an element of {group}")));
            }
            members[x] = true;
        }
        if !members[0] {
            return Err(Error::InvalidGameSubset("identity missing".into()));
        }
        for x in 1..n {
            if members[x] == members[group.neg(x)] {
                return Err(Error::InvalidGameSubset(format!(
                    "exactly one of {x} and its negative must be present"
                )));
            }
        }
        Ok(GameSubset { group, members })
    }

    /// From the nonzero part `A°`.
    pub fn from_positive(group: FiniteAbelianGroup, positive: Vec<usize>) -> Result<Self> {
        let mut elems = positive;
        if elems.contains(&0) {
            return Err(Error::InvalidGameSubset("A° must not contain the identity".into()));
        }
        elems.push(0);
        Self::new(group, elems)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&x| self.members[x]).collect()
    }

    /// `-A`.
    pub fn negated(&self) -> GameSubset {
        let g = &self.group;
        let members = (0..self.members.len()).map(|x| self.members[g.neg(x)]).collect();
        GameSubset {
            group: g.clone(),
            members,
        }
    }
}

/// `x -> y` iff `y - x ∈ A°`.
pub fn tournament_from_game(a: &GameSubset) -> Tournament {
    let g = &a.group;
    Tournament::from_fn_unchecked(g.order(), |x, y| a.contains(g.sub(y, x)))
}

/// Every game subset of `group`, choosing one of each pair `{x, -x}`.
pub fn enumerate_game_subsets(group: &FiniteAbelianGroup) -> Result<Vec<GameSubset>> {
    let n = group.order();
    if n % 2 == 0 {
        return Err(Error::InvalidGroup(format!("{group} has even order")));
    }
    let reps: Vec<usize> = (1..n).filter(|&x| x < group.neg(x)).collect();
    if reps.len() > 20 {
        return Err(Error::cap("game subsets", 1u128 << reps.len(), 1u128 << 20));
    }
    Ok((0u64..1 << reps.len())
        .map(|mask| {
            let elems = std::iter::once(0)
                .chain(reps.iter().enumerate().map(|(i, &x)| {
                    if mask >> i & 1 == 1 {
                        group.neg(x)
                    } else {
                        x
                    }
                }))
                .collect();
            GameSubset::new(group.clone(), elems).expect("one of each pair")
        })
        .collect())
}

/// `y ↦ x + y`.
pub fn translation_automorphism(group: &FiniteAbelianGroup, x: usize) -> Vec<usize> {
    (0..group.order()).map(|y| group.add(x, y)).collect()
}

/// `y ↦ 2x - y`; fixes `x` and swaps its out-set with its in-set.
pub fn reversal_map(group: &FiniteAbelianGroup, x: usize) -> Vec<usize> {
    let two_x = group.add(x, x);
    (0..group.order()).map(|y| group.sub(two_x, y)).collect()
}

/// A homomorphism given by the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteAbelianGroup,
    target: FiniteAbelianGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FiniteAbelianGroup, target: FiniteAbelianGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::InvalidHomomorphism(format!(
                "{} generator images for a group of rank {}",
                images.len(),
                source.rank()
            )));
        }
        for (i, (&img, &m)) in images.iter().zip(source.moduli()).enumerate() {
            if img >= target.order() {
                return Err(Error::InvalidHomomorphism(format!("image {img} outside {target}")));
            }
            if target.scale(m, img) != 0 {
                return Err(Error::InvalidHomomorphism(format!(
                    "generator {i} has order dividing {m} but its image does not"
                )));
            }
        }
        Ok(GroupHom { source, target, images })
    }

    /// Reduction `Z/n -> Z/m` for `m | n`.
    pub fn reduction(n: usize, m: usize) -> Result<Self> {
        if m == 0 || n % m != 0 {
            return Err(Error::InvalidHomomorphism(format!("{m} does not divide {n}")));
        }
        Self::new(FiniteAbelianGroup::cyclic(n)?, FiniteAbelianGroup::cyclic(m)?, vec![1 % m])
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.source
            .coords(x)
            .iter()
            .zip(&self.images)
            .fold(0, |acc, (&c, &img)| self.target.add(acc, self.target.scale(c, img)))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for x in 0..self.source.order() {
            hit[self.apply(x)] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Kernel elements in ascending order.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&x| self.apply(x) == 0).collect()
    }

    /// `x ↦ (h(x), x - j(h(x)))` where `j` picks the smallest preimage, as a
    /// vertex of the lexicographic product over the target with kernel fibers
    /// (base vertex major, kernel position minor).
    pub fn product_coordinates(&self) -> Vec<usize> {
        let kernel = self.kernel();
        let mut section = vec![usize::MAX; self.target.order()];
        for x in 0..self.source.order() {
            let hx = self.apply(x);
            if section[hx] == usize::MAX {
                section[hx] = x;
            }
        }
        (0..self.source.order())
            .map(|x| {
                let hx = self.apply(x);
                let p = self.source.sub(x, section[hx]);
                hx * kernel.len() + kernel.binary_search(&p).expect("lies in the kernel")
            })
            .collect()
    }
}

/// Tournament of a game subset `b` of the kernel, on the kernel elements in
/// ascending order. `b` lists source-group elements.
pub fn kernel_tournament(hom: &GroupHom, b: &[usize]) -> Result<Tournament> {
    let kernel = hom.kernel();
    validate_kernel_subset(hom, &kernel, b)?;
    let g = hom.source();
    Ok(Tournament::from_fn_unchecked(kernel.len(), |i, j| {
        b.contains(&g.sub(kernel[j], kernel[i]))
    }))
}

fn validate_kernel_subset(hom: &GroupHom, kernel: &[usize], b: &[usize]) -> Result<()> {
    let g = hom.source();
    if !b.contains(&0) {
        return Err(Error::InvalidGameSubset("B must contain the identity".into()));
    }
    for &x in b {
        if kernel.binary_search(&x).is_err() {
            return Err(Error::InvalidGameSubset(format!("{x} is not in the kernel")));
        }
    }
    for &x in kernel.iter().filter(|&&x| x != 0) {
        if b.contains(&x) == b.contains(&g.neg(x)) {
            return Err(Error::InvalidGameSubset(format!(
                "exactly one of {x} and its negative must be in B"
            )));
        }
    }
    Ok(())
}

/// `A_2 = h^{-1}(A_1°) ∪ B`.
pub fn lift_game_subset(hom: &GroupHom, a1: &GameSubset, b: &[usize]) -> Result<GameSubset> {
    if a1.group() != hom.target() {
        return Err(Error::InvalidHomomorphism("A_1 lives in a different group".into()));
    }
    if !hom.is_surjective() {
        return Err(Error::InvalidHomomorphism("not surjective".into()));
    }
    let kernel = hom.kernel();
    validate_kernel_subset(hom, &kernel, b)?;
    let mut elems: Vec<usize> = (0..hom.source().order())
        .filter(|&x| {
            let hx = hom.apply(x);
            hx != 0 && a1.contains(hx)
        })
        .collect();
    elems.extend_from_slice(b);
    GameSubset::new(hom.source().clone(), elems)
}

/// Standard game subset of `Z/3^k`: nonzero elements whose lowest nonzero
/// base-3 digit is 1.
pub fn triadic_game(k: u32) -> Result<GameSubset> {
    let n = 3usize
        .checked_pow(k)
        .filter(|&n| n <= MAX_GROUP_ORDER && k >= 1)
        .ok_or_else(|| Error::cap("triadic order", 3u128.saturating_pow(k), MAX_GROUP_ORDER as u128))?;
    let positive = (1..n).filter(|&y| lowest_nonzero_trit(y) == 1).collect();
    GameSubset::from_positive(FiniteAbelianGroup::cyclic(n)?, positive)
}

fn lowest_nonzero_trit(mut y: usize) -> usize {
    while y % 3 == 0 {
        y /= 3;
    }
    y % 3
}

pub fn triadic_tournament(k: u32) -> Result<Tournament> {
    Ok(tournament_from_game(&triadic_game(k)?))
}

/// Reduction mod `3^j` from depth `k` to depth `j`.
pub fn triadic_reduction(k: u32, j: u32) -> Result<QuotientMap> {
    if j == 0 || j > k {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: k as usize,
        });
    }
    let (big, small) = (triadic_tournament(k)?, triadic_tournament(j)?);
    let m = small.order();
    let assignment = big.vertices().map(|x| x % m).collect();
    Ok(QuotientMap::new(big, small, assignment))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_groups() {
        assert_eq!(FiniteAbelianGroup::parse("Z3^2").unwrap().moduli(), &[3, 3]);
        assert_eq!(FiniteAbelianGroup::parse("Z5xZ7").unwrap().order(), 35);
        assert!(FiniteAbelianGroup::parse("Y5").is_err());
        let g = FiniteAbelianGroup::parse("Z3^2xZ5").unwrap();
        assert_eq!(g.to_string(), "Z3xZ3xZ5");
        for x in 0..g.order() {
            assert_eq!(g.index(&g.coords(x)), x);
            assert_eq!(g.add(x, g.neg(x)), 0);
        }
    }

    #[test]
    fn z5_is_regular() {
        let a = GameSubset::new(FiniteAbelianGroup::cyclic(5).unwrap(), vec![0, 1, 2]).unwrap();
        let t = tournament_from_game(&a);
        assert!(t.is_regular() && t.is_arc_cyclic());
    }

    #[test]
    fn z3_is_c3() {
        let a = GameSubset::new(FiniteAbelianGroup::cyclic(3).unwrap(), vec![0, 1]).unwrap();
        assert_eq!(tournament_from_game(&a), Tournament::cycle3());
    }

    #[test]
    fn invalid_subsets() {
        let g = FiniteAbelianGroup::cyclic(5).unwrap();
        assert!(GameSubset::new(g.clone(), vec![0, 1, 4]).is_err());
        assert!(GameSubset::new(g.clone(), vec![0, 1]).is_err());
        assert!(GameSubset::new(g, vec![1, 2]).is_err());
        assert!(GameSubset::new(FiniteAbelianGroup::cyclic(4).unwrap(), vec![0, 1]).is_err());
    }

    #[test]
    fn counts_of_game_subsets() {
        for (n, count) in [(5, 4), (7, 8), (9, 16)] {
            assert_eq!(enumerate_game_subsets(&FiniteAbelianGroup::cyclic(n).unwrap()).unwrap().len(), count);
        }
    }

    #[test]
    fn reversal_is_an_involution() {
        let g = FiniteAbelianGroup::parse("Z3^2").unwrap();
        for x in 0..9 {
            let h = reversal_map(&g, x);
            assert_eq!(h[x], x);
            assert!((0..9).all(|y| h[h[y]] == y));
        }
    }

    #[test]
    fn hom_validation() {
        let z9 = FiniteAbelianGroup::cyclic(9).unwrap();
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        assert!(GroupHom::new(z3.clone(), z9.clone(), vec![1]).is_err());
        assert!(GroupHom::new(z3, z9, vec![3]).is_ok());
    }

    #[test]
    fn lift_z9_over_z3() {
        let hom = GroupHom::reduction(9, 3).unwrap();
        let a1 = GameSubset::new(hom.target().clone(), vec![0, 1]).unwrap();
        let a2 = lift_game_subset(&hom, &a1, &[0, 3]).unwrap();
        assert_eq!(a2.elements(), vec![0, 1, 3, 4, 7]);
        assert!(lift_game_subset(&hom, &a1, &[0, 3, 6]).is_err());
    }

    #[test]
    fn triadic_small() {
        assert_eq!(triadic_tournament(1).unwrap(), Tournament::cycle3());
        assert!(triadic_reduction(2, 1).unwrap().is_quotient_map());
    }
}
