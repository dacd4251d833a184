//! Recursive base-quotient decomposition, reassembly and canonical certificates.

use std::collections::BTreeMap;

use crate::construct::{lex_product, FiberAssignment};
use crate::error::{Error, Result};
use crate::iso::{CanonicalLabeling, ISO_CAP};
use crate::modular::{base_quotient, is_prime, BaseKind};
use crate::quotient::QuotientMap;
use crate::tournament::Tournament;

/// Version byte leading every certificate.
pub const CERTIFICATE_VERSION: u8 = 0x01;

/// One node of the decomposition: the base quotient of the analyzed
/// tournament and, for every base vertex with a nontrivial fiber, the
/// decomposition of that fiber (vertices renumbered in ascending order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifierTree {
    pub kind: BaseKind,
    pub base: Tournament,
    pub children: BTreeMap<usize, ClassifierTree>,
    pub fiber_map: QuotientMap,
}

pub fn classifier(t: &Tournament) -> ClassifierTree {
    let (base, fiber_map, kind) = base_quotient(t);
    let mut children = BTreeMap::new();
    if kind != BaseKind::Trivial {
        for (b, fiber) in fiber_map.fibers().iter().enumerate() {
            if fiber.len() > 1 {
                let (sub, _) = t.restrict(fiber).expect("fiber is nonempty");
                children.insert(b, classifier(&sub));
            }
        }
    }
    ClassifierTree {
        kind,
        base,
        children,
        fiber_map,
    }
}

impl ClassifierTree {
    /// Checks the shape constraints that make the tree a decomposition.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedTree(m));
        let n = self.base.order();
        match self.kind {
            BaseKind::Trivial => {
                if n != 1 || !self.children.is_empty() {
                    return bad("trivial node must have one vertex and no children".into());
                }
            }
            BaseKind::Order => {
                if n < 2 || !self.base.is_transitive() {
                    return bad("order node needs a transitive base with at least two vertices".into());
                }
            }
            BaseKind::Prime => {
                if n < 3 || !is_prime(&self.base) {
                    return bad("prime node needs a prime base with at least three vertices".into());
                }
            }
        }
        for (&v, child) in &self.children {
            if v >= n {
                return bad(format!("child attached to vertex {v} of a base with {n} vertices"));
            }
            if child.kind == BaseKind::Trivial {
                return bad(format!("child at vertex {v} is trivial"));
            }
            if self.kind == BaseKind::Order && child.kind == BaseKind::Order {
                return bad(format!("order node has an order child at vertex {v}"));
            }
            child.validate()?;
        }
        Ok(())
    }

    /// Number of vertices of the reassembled tournament.
    pub fn order(&self) -> usize {
        (0..self.base.order())
            .map(|v| self.children.get(&v).map_or(1, |c| c.order()))
            .sum()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.values().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Built from a base and child trees; the fiber map becomes the
    /// projection of the reassembled product.
    pub fn from_parts(kind: BaseKind, base: Tournament, children: BTreeMap<usize, ClassifierTree>) -> Result<Self> {
        let mut tree = ClassifierTree {
            kind,
            fiber_map: QuotientMap::constant(&Tournament::trivial()),
            base,
            children,
        };
        tree.validate()?;
        let (_, projection) = tree.product()?;
        tree.fiber_map = projection;
        Ok(tree)
    }

    fn product(&self) -> Result<(Tournament, QuotientMap)> {
        let fibers = (0..self.base.order())
            .map(|v| match self.children.get(&v) {
                Some(c) => c.reassemble_unchecked(),
                None => Ok(Tournament::trivial()),
            })
            .collect::<Result<Vec<_>>>()?;
        let fa = FiberAssignment::new(self.base.clone(), fibers)?;
        Ok(lex_product(&fa))
    }

    fn reassemble_unchecked(&self) -> Result<Tournament> {
        Ok(self.product()?.0)
    }

    /// Recursive lexicographic product of the base with the child reassemblies.
    pub fn reassemble(&self) -> Result<Tournament> {
        self.validate()?;
        self.reassemble_unchecked()
    }

    /// Where each vertex of the analyzed tournament lands in [`Self::reassemble`].
    pub fn reassembly_map(&self) -> Vec<usize> {
        let n = self.base.order();
        let sizes: Vec<usize> = (0..n).map(|v| self.children.get(&v).map_or(1, |c| c.order())).collect();
        let mut offsets = vec![0; n];
        for v in 1..n {
            offsets[v] = offsets[v - 1] + sizes[v - 1];
        }
        let child_maps: BTreeMap<usize, Vec<usize>> =
            self.children.iter().map(|(&v, c)| (v, c.reassembly_map())).collect();
        let mut seen = vec![0; n];
        let source_order = self.fiber_map.assignment.len();
        (0..source_order)
            .map(|x| {
                let b = self.fiber_map.assignment[x];
                let local = seen[b];
                seen[b] += 1;
                offsets[b] + child_maps.get(&b).map_or(0, |m| m[local])
            })
            .collect()
    }

    /// Tournaments of the tower read off the tree: level 1 is the root base,
    /// level `i + 1` the product of level `i` with the bases one step down
    /// (trivial where the tree has ended).
    pub fn levels(&self) -> Vec<Tournament> {
        let mut levels = vec![self.base.clone()];
        // node governing the fiber over each vertex of the last level
        let mut level_nodes: Vec<Option<&ClassifierTree>> = (0..self.base.order())
            .map(|v| self.children.get(&v))
            .collect();
        while level_nodes.iter().any(|n| n.is_some()) {
            let last = levels.last().unwrap().clone();
            let fibers: Vec<Tournament> = level_nodes
                .iter()
                .map(|n| n.map_or_else(Tournament::trivial, |c| c.base.clone()))
                .collect();
            let fa = FiberAssignment::new(last, fibers).expect("one fiber per vertex");
            levels.push(lex_product(&fa).0);
            level_nodes = level_nodes
                .iter()
                .flat_map(|n| match n {
                    Some(c) => (0..c.base.order()).map(|v| c.children.get(&v)).collect::<Vec<_>>(),
                    None => vec![None],
                })
                .collect();
        }
        levels
    }

    /// Canonical byte string; equal for two trees exactly when their
    /// reassemblies are isomorphic. Prime bases above `cap` vertices are refused.
    pub fn certificate(&self, cap: usize) -> Result<Vec<u8>> {
        let mut out = vec![CERTIFICATE_VERSION];
        out.extend(self.node_certificate(cap)?);
        Ok(out)
    }

    fn node_certificate(&self, cap: usize) -> Result<Vec<u8>> {
        let n = self.base.order();
        let mut out = vec![self.kind.tag()];
        out.extend((n as u32).to_be_bytes());
        if self.kind == BaseKind::Trivial {
            return Ok(out);
        }
        let mut child_certs: Vec<Vec<u8>> = Vec::with_capacity(n);
        for v in 0..n {
            child_certs.push(match self.children.get(&v) {
                Some(c) => c.node_certificate(cap)?,
                None => trivial_node_certificate(),
            });
        }
        let (code_bytes, labeling) = match self.kind {
            BaseKind::Order => {
                // ascending score order is the only labeling with an all-zero code
                let scores = self.base.scores();
                let mut lab: Vec<usize> = (0..n).collect();
                lab.sort_by_key(|&v| scores[v]);
                (vec![0u8; Tournament::pair_count(n).div_ceil(8)], lab)
            }
            _ => {
                let canon = CanonicalLabeling::compute(&self.base, cap)?;
                let best = canon
                    .labelings
                    .iter()
                    .min_by(|a, b| {
                        let ka = a.iter().map(|&v| &child_certs[v]);
                        let kb = b.iter().map(|&v| &child_certs[v]);
                        ka.cmp(kb)
                    })
                    .expect("at least one labeling")
                    .clone();
                (canon.code_bytes(), best)
            }
        };
        out.extend(code_bytes);
        for v in labeling {
            let c = &child_certs[v];
            out.extend((c.len() as u32).to_be_bytes());
            out.extend(c);
        }
        Ok(out)
    }
}

fn trivial_node_certificate() -> Vec<u8> {
    let mut out = vec![BaseKind::Trivial.tag()];
    out.extend(1u32.to_be_bytes());
    out
}

pub fn reassemble(tree: &ClassifierTree) -> Result<Tournament> {
    tree.reassemble()
}

/// Certificate with the default leaf cap.
pub fn certificate(t: &Tournament) -> Result<Vec<u8>> {
    certificate_capped(t, ISO_CAP)
}

pub fn certificate_capped(t: &Tournament, cap: usize) -> Result<Vec<u8>> {
    classifier(t).certificate(cap)
}
