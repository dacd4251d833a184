//! Exhaustive counts of labeled tournaments and of isomorphism classes.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::classifier::certificate;
use crate::error::{Error, Result};
use crate::modular::is_prime;
use crate::tournament::Tournament;

/// Largest order enumerated label by label unless the caller raises it.
pub const LABELED_CENSUS_CAP: usize = 8;
/// Largest order whose isomorphism classes are generated by default.
pub const UNLABELED_CENSUS_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Prime,
    StronglyConnected,
    ArcCyclic,
    PointCyclic,
    Regular,
    Transitive,
    Irreducible,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::Prime,
        Predicate::StronglyConnected,
        Predicate::ArcCyclic,
        Predicate::PointCyclic,
        Predicate::Regular,
        Predicate::Transitive,
        Predicate::Irreducible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Prime => "prime",
            Predicate::StronglyConnected => "strongly-connected",
            Predicate::ArcCyclic => "arc-cyclic",
            Predicate::PointCyclic => "point-cyclic",
            Predicate::Regular => "regular",
            Predicate::Transitive => "transitive",
            Predicate::Irreducible => "irreducible",
        }
    }

    /// Accepts the canonical names, with or without hyphens.
    pub fn parse(s: &str) -> Option<Self> {
        let key: String = s.trim().to_ascii_lowercase().chars().filter(|c| *c != '-' && *c != '_').collect();
        Self::ALL.into_iter().find(|p| p.name().replace('-', "") == key)
    }

    pub fn eval(self, t: &Tournament) -> bool {
        match self {
            Predicate::Prime => is_prime(t),
            Predicate::StronglyConnected => t.is_strongly_connected(),
            Predicate::ArcCyclic => t.is_arc_cyclic(),
            Predicate::PointCyclic => t.is_point_cyclic(),
            Predicate::Regular => t.is_regular(),
            Predicate::Transitive => t.is_transitive(),
            Predicate::Irreducible => t.is_irreducible(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub order: usize,
    pub labeled: bool,
    /// Labeled tournaments, or isomorphism classes.
    pub total: u64,
    pub counts: Vec<(Predicate, u64)>,
}

impl Census {
    pub fn count(&self, p: Predicate) -> Option<u64> {
        self.counts.iter().find(|(q, _)| *q == p).map(|c| c.1)
    }
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > cap {
        return Err(Error::cap("census order", n as u128, cap as u128));
    }
    Ok(())
}

/// Evaluates the predicates on all `2^(n(n-1)/2)` labeled tournaments of
/// order `n`, in parallel on the current rayon pool.
pub fn labeled_census(n: usize, predicates: &[Predicate], cap: usize) -> Result<Census> {
    check_order(n, cap)?;
    let pairs = Tournament::pair_count(n);
    if pairs >= 64 {
        return Err(Error::cap("pairs in a labeled census", pairs as u128, 63u128));
    }
    let total = 1u64 << pairs;
    let k = predicates.len();
    let counts = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; k],
            |mut acc, code| {
                let t = Tournament::from_code(n, code).expect("code fits");
                for (c, p) in acc.iter_mut().zip(predicates) {
                    *c += p.eval(&t) as u64;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; k],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(Census {
        order: n,
        labeled: true,
        total,
        counts: predicates.iter().copied().zip(counts).collect(),
    })
}

/// One representative per isomorphism class of order `n`, sorted by
/// certificate. Classes of order `n` arise by adding a vertex to classes of
/// order `n - 1` with every possible out-set.
pub fn unlabeled_classes(n: usize, cap: usize) -> Result<Vec<Tournament>> {
    check_order(n, cap)?;
    let mut classes = vec![(certificate(&Tournament::trivial())?, Tournament::trivial())];
    for m in 2..=n {
        let found: Vec<(Vec<u8>, Tournament)> = classes
            .par_iter()
            .flat_map_iter(|(_, t)| (0u64..1 << (m - 1)).map(move |mask| extend(t, mask)))
            .map(|t| certificate(&t).map(|c| (c, t)))
            .collect::<Result<Vec<_>>>()?;
        let mut unique: HashMap<Vec<u8>, Tournament> = HashMap::new();
        for (c, t) in found {
            unique.entry(c).or_insert(t);
        }
        classes = unique.into_iter().collect();
        classes.sort_by(|a, b| a.0.cmp(&b.0));
    }
    Ok(classes.into_iter().map(|(_, t)| t).collect())
}

/// New last vertex beating the vertices whose bit is set in `mask`.
fn extend(t: &Tournament, mask: u64) -> Tournament {
    let n = t.order();
    Tournament::from_fn(n + 1, |i, j| if j == n { mask >> i & 1 == 0 } else { t.arc(i, j) })
        .expect("valid extension")
}

pub fn unlabeled_census(n: usize, predicates: &[Predicate], cap: usize) -> Result<Census> {
    let classes = unlabeled_classes(n, cap)?;
    let counts = predicates
        .iter()
        .map(|&p| (p, classes.par_iter().filter(|t| p.eval(t)).count() as u64))
        .collect();
    Ok(Census {
        order: n,
        labeled: false,
        total: classes.len() as u64,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_names_parse() {
        for p in Predicate::ALL {
            assert_eq!(Predicate::parse(p.name()), Some(p));
        }
        assert_eq!(Predicate::parse("arccyclic"), Some(Predicate::ArcCyclic));
        assert_eq!(Predicate::parse("nope"), None);
    }

    #[test]
    fn order_four_counts() {
        let c = labeled_census(4, &[Predicate::Prime, Predicate::StronglyConnected], LABELED_CENSUS_CAP).unwrap();
        assert_eq!(c.total, 64);
        assert_eq!(c.count(Predicate::Prime), Some(0));
        assert_eq!(c.count(Predicate::StronglyConnected), Some(24));
    }

    #[test]
    fn class_counts_small_orders() {
        let counts: Vec<usize> = (1..=6).map(|n| unlabeled_classes(n, 8).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 12, 56]);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(labeled_census(9, &[], LABELED_CENSUS_CAP).unwrap_err().is_cap_exceeded());
        assert!(matches!(labeled_census(0, &[], 8), Err(Error::NoVertices)));
    }
}
