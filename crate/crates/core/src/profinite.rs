//! Finite truncations of inverse systems of tournaments: towers of quotient
//! maps, threads through them, and lexicographic towers built from a catalog.

use crate::classifier::{classifier, ClassifierTree};
use crate::construct::{cyclic_game, lex_product, y2, FiberAssignment};
use crate::error::{Error, Result};
use crate::grouptour::{triadic_reduction, triadic_tournament};
use crate::iso::is_isomorphism;
use crate::modular::is_prime;
use crate::quotient::QuotientMap;
use crate::tournament::Tournament;

/// Largest top level a tower may materialize.
pub const TOWER_CAP: usize = 20_000;

/// Levels `X_1, …, X_d` (stored 0-indexed) with `maps[i]` sending level `i + 1`
/// onto level `i`.
#[derive(Clone, Debug)]
pub struct InverseSystem {
    levels: Vec<Tournament>,
    maps: Vec<Vec<usize>>,
}

/// One vertex per level, each the image of the next.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Thread(pub Vec<usize>);

impl Thread {
    pub fn at(&self, level: usize) -> usize {
        self.0[level]
    }
}

impl InverseSystem {
    /// Checks only that the pieces fit together; see [`validate_system`].
    pub fn new(levels: Vec<Tournament>, maps: Vec<Vec<usize>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidSystem {
                level: 0,
                reason: "no levels".into(),
            });
        }
        if maps.len() + 1 != levels.len() {
            return Err(Error::InvalidSystem {
                level: maps.len().min(levels.len()),
                reason: format!("{} levels need {} maps, got {}", levels.len(), levels.len() - 1, maps.len()),
            });
        }
        for (i, m) in maps.iter().enumerate() {
            if m.len() != levels[i + 1].order() {
                return Err(Error::InvalidSystem {
                    level: i,
                    reason: format!("map has {} entries for {} vertices", m.len(), levels[i + 1].order()),
                });
            }
            if let Some(&bad) = m.iter().find(|&&y| y >= levels[i].order()) {
                return Err(Error::InvalidSystem {
                    level: i,
                    reason: format!("image {bad} outside a level of {} vertices", levels[i].order()),
                });
            }
        }
        Ok(InverseSystem { levels, maps })
    }

    pub fn from_quotient_maps(levels: Vec<Tournament>, maps: Vec<QuotientMap>) -> Result<Self> {
        Self::new(levels, maps.into_iter().map(|q| q.assignment).collect())
    }

    pub fn single(t: Tournament) -> Self {
        InverseSystem {
            levels: vec![t],
            maps: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, i: usize) -> &Tournament {
        &self.levels[i]
    }

    pub fn levels(&self) -> &[Tournament] {
        &self.levels
    }

    pub fn top(&self) -> &Tournament {
        self.levels.last().expect("at least one level")
    }

    /// The map from level `i + 1` onto level `i`.
    pub fn map(&self, i: usize) -> QuotientMap {
        QuotientMap::new(self.levels[i + 1].clone(), self.levels[i].clone(), self.maps[i].clone())
    }

    /// Image of a top-level vertex at `level`.
    pub fn project(&self, top_vertex: usize, level: usize) -> usize {
        let mut v = top_vertex;
        for i in (level..self.maps.len()).rev() {
            v = self.maps[i][v];
        }
        v
    }

    /// The thread through a top-level vertex.
    pub fn thread_of_top(&self, v: usize) -> Thread {
        let mut coords = vec![0; self.depth()];
        let mut cur = v;
        for i in (0..self.depth()).rev() {
            coords[i] = cur;
            if i > 0 {
                cur = self.maps[i - 1][cur];
            }
        }
        Thread(coords)
    }

    /// Extends a vertex of `level` to a thread, taking the smallest preimage
    /// at every higher level. `None` if some map misses the path.
    pub fn extend(&self, level: usize, vertex: usize) -> Option<Thread> {
        let mut coords = vec![0; self.depth()];
        coords[level] = vertex;
        for i in (0..level).rev() {
            coords[i] = self.maps[i][coords[i + 1]];
        }
        for i in level..self.maps.len() {
            coords[i + 1] = self.maps[i].iter().position(|&y| y == coords[i])?;
        }
        Some(Thread(coords))
    }

    /// Validates explicit coordinates as a thread.
    pub fn thread(&self, coords: Vec<usize>) -> Result<Thread> {
        if coords.len() != self.depth() {
            return Err(Error::Precondition(format!(
                "thread has {} coordinates for {} levels",
                coords.len(),
                self.depth()
            )));
        }
        for (i, &c) in coords.iter().enumerate() {
            if c >= self.levels[i].order() {
                return Err(Error::VertexOutOfRange {
                    vertex: c,
                    n: self.levels[i].order(),
                });
            }
            if i > 0 && self.maps[i - 1][c] != coords[i - 1] {
                return Err(Error::InvalidSystem {
                    level: i - 1,
                    reason: "thread is inconsistent with the map".into(),
                });
            }
        }
        Ok(Thread(coords))
    }

    /// All threads, one per top-level vertex.
    pub fn threads(&self) -> Vec<Thread> {
        (0..self.top().order()).map(|v| self.thread_of_top(v)).collect()
    }
}

/// Every map must be a surjective quotient map; the error names the first
/// failing level (the lower end of the offending map).
pub fn validate_system(s: &InverseSystem) -> Result<()> {
    for i in 0..s.maps.len() {
        let q = s.map(i);
        if !q.is_surjective() {
            return Err(Error::InvalidSystem {
                level: i,
                reason: "map is not surjective".into(),
            });
        }
        if !q.is_quotient_map() {
            return Err(Error::InvalidSystem {
                level: i,
                reason: "map does not preserve arcs between distinct images".into(),
            });
        }
    }
    Ok(())
}

/// Whether `t1 -> t2`, read at the first level where the threads differ.
pub fn limit_arc(s: &InverseSystem, t1: &Thread, t2: &Thread) -> Result<bool> {
    let i = (0..s.depth())
        .find(|&i| t1.at(i) != t2.at(i))
        .ok_or(Error::Undetermined(s.depth()))?;
    Ok(s.level(i).arc(t1.at(i), t2.at(i)))
}

/// `Z/3 ← Z/9 ← … ← Z/3^depth` with reduction maps.
pub fn triadic_system(depth: u32) -> Result<InverseSystem> {
    if depth == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    let levels = (1..=depth).map(triadic_tournament).collect::<Result<Vec<_>>>()?;
    let maps = (1..depth)
        .map(|j| triadic_reduction(j + 1, j))
        .collect::<Result<Vec<_>>>()?;
    InverseSystem::from_quotient_maps(levels, maps)
}

/// A tower whose levels are iterated lexicographic products.
#[derive(Clone, Debug)]
pub struct LexTower {
    pub system: InverseSystem,
    pub base: Tournament,
    /// `fibers[i][v]`: tournament substituted for vertex `v` of level `i`.
    pub fibers: Vec<Vec<Tournament>>,
    offsets: Vec<Vec<usize>>,
}

impl LexTower {
    pub fn depth(&self) -> usize {
        self.system.depth()
    }

    pub fn top(&self) -> &Tournament {
        self.system.top()
    }

    /// Base vertex followed by the position inside each successive fiber.
    pub fn coordinates(&self, top_vertex: usize) -> Vec<usize> {
        let t = self.system.thread_of_top(top_vertex);
        let mut coords = vec![t.at(0)];
        for i in 0..self.depth() - 1 {
            coords.push(t.at(i + 1) - self.offsets[i][t.at(i)]);
        }
        coords
    }

    /// The level-`coords.len() - 1` vertex with the given coordinates.
    pub fn vertex_at(&self, coords: &[usize]) -> Result<usize> {
        if coords.is_empty() || coords.len() > self.depth() {
            return Err(Error::Precondition("coordinate count out of range".into()));
        }
        let mut v = coords[0];
        if v >= self.base.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.base.order(),
            });
        }
        for (i, &c) in coords.iter().enumerate().skip(1) {
            let size = self.fibers[i - 1][v].order();
            if c >= size {
                return Err(Error::VertexOutOfRange { vertex: c, n: size });
            }
            v = self.offsets[i - 1][v] + c;
        }
        Ok(v)
    }

    /// Every base and fiber of the tower.
    pub fn factors(&self) -> impl Iterator<Item = &Tournament> {
        std::iter::once(&self.base).chain(self.fibers.iter().flatten())
    }
}

/// `X_1 = base`, `X_{i+1} = X_i` with `chooser(i, v)` substituted for each
/// vertex `v` of `X_i` (levels 0-indexed), and the projections as maps.
pub fn lex_tower<F>(base: &Tournament, chooser: F, depth: usize) -> Result<LexTower>
where
    F: FnMut(usize, usize) -> Tournament,
{
    lex_tower_capped(base, chooser, depth, TOWER_CAP)
}

pub fn lex_tower_capped<F>(base: &Tournament, mut chooser: F, depth: usize, cap: usize) -> Result<LexTower>
where
    F: FnMut(usize, usize) -> Tournament,
{
    if depth == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    if base.order() > cap {
        return Err(Error::cap("tower level", base.order() as u128, cap as u128));
    }
    let mut levels = vec![base.clone()];
    let mut maps = Vec::new();
    let mut fibers = Vec::new();
    let mut offsets = Vec::new();
    for i in 0..depth - 1 {
        let last = levels.last().unwrap().clone();
        let chosen: Vec<Tournament> = (0..last.order()).map(|v| chooser(i, v)).collect();
        let size: u128 = chosen.iter().map(|f| f.order() as u128).sum();
        if size > cap as u128 {
            return Err(Error::cap("tower level", size, cap as u128));
        }
        let fa = FiberAssignment::new(last, chosen.clone())?;
        let (next, projection) = lex_product(&fa);
        offsets.push(fa.offsets());
        maps.push(projection.assignment);
        levels.push(next);
        fibers.push(chosen);
    }
    Ok(LexTower {
        system: InverseSystem::new(levels, maps)?,
        base: base.clone(),
        fibers,
        offsets,
    })
}

/// Named tournaments usable in tower descriptions: `1`, `C3`, `T<n>`
/// (transitive), `Y2`, `Z<n>[a,b,…]` (cyclic group with the listed game subset).
pub fn catalog(name: &str) -> Result<Tournament> {
    let name = name.trim();
    let bad = |msg: String| Error::Parse { line: 1, msg };
    match name {
        "1" => return Ok(Tournament::trivial()),
        "C3" => return Ok(Tournament::cycle3()),
        "Y2" => return Ok(y2()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('T') {
        let n: usize = rest.parse().map_err(|_| bad(format!("bad transitive size in {name:?}")))?;
        if n == 0 {
            return Err(bad("transitive tournament needs at least one vertex".into()));
        }
        return Ok(Tournament::transitive(n));
    }
    if let Some(rest) = name.strip_prefix('Z') {
        let (n, list) = rest
            .split_once('[')
            .and_then(|(n, l)| Some((n, l.strip_suffix(']')?)))
            .ok_or_else(|| bad(format!("expected Z<n>[a,b,...], got {name:?}")))?;
        let n: usize = n.parse().map_err(|_| bad(format!("bad group order in {name:?}")))?;
        let game = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad(format!("bad element list in {name:?}")))?;
        return cyclic_game(n, &game);
    }
    Err(bad(format!("unknown catalog entry {name:?}")))
}

/// Parsed tower description.
#[derive(Clone, Debug)]
pub enum TowerSpec {
    /// `base=<name>; fibers=<name>[; depth=<d>]`: one fiber everywhere.
    Constant {
        base: Tournament,
        fiber: Tournament,
        depth: Option<usize>,
    },
    /// `theta=<digits>; Y0=<name>; Y1=<name>…`: level 1 is `Y_{θ_1}` and each
    /// further level substitutes `Y_{θ_i}` at every vertex.
    Theta { theta: Vec<usize>, factors: Vec<Tournament> },
}

pub fn parse_tower(text: &str) -> Result<TowerSpec> {
    let bad = |msg: String| Error::Parse { line: 1, msg };
    let mut base = None;
    let mut fiber = None;
    let mut depth = None;
    let mut theta = None;
    let mut factors: Vec<(usize, Tournament)> = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| bad(format!("expected key=value, got {part:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "base" => base = Some(catalog(value)?),
            "fibers" => fiber = Some(catalog(value)?),
            "depth" => depth = Some(value.parse().map_err(|_| bad(format!("bad depth {value:?}")))?),
            "theta" => {
                let digits = value
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| bad(format!("theta must be digits, got {value:?}")))?;
                if digits.is_empty() {
                    return Err(bad("theta is empty".into()));
                }
                theta = Some(digits);
            }
            _ => {
                let idx = key
                    .strip_prefix('Y')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| bad(format!("unknown key {key:?}")))?;
                factors.push((idx, catalog(value)?));
            }
        }
    }
    match (theta, base, fiber) {
        (Some(theta), None, None) => {
            if depth.is_some() {
                return Err(bad("depth is fixed by theta".into()));
            }
            let width = theta.iter().max().unwrap() + 1;
            let mut table: Vec<Option<Tournament>> = vec![None; width.max(factors.iter().map(|f| f.0 + 1).max().unwrap_or(0))];
            for (i, t) in factors {
                table[i] = Some(t);
            }
            let factors = table
                .into_iter()
                .enumerate()
                .map(|(i, t)| t.ok_or_else(|| bad(format!("Y{i} is not defined"))))
                .collect::<Result<Vec<_>>>()?;
            Ok(TowerSpec::Theta { theta, factors })
        }
        (None, Some(base), Some(fiber)) if factors.is_empty() => Ok(TowerSpec::Constant { base, fiber, depth }),
        _ => Err(bad("expected either base= and fibers=, or theta= with Y<i>= entries".into())),
    }
}

impl TowerSpec {
    /// Materializes the tower. `depth` overrides the stated depth of a
    /// constant tower (default 2) and truncates a theta tower.
    pub fn build(&self, depth: Option<usize>, cap: usize) -> Result<LexTower> {
        match self {
            TowerSpec::Constant { base, fiber, depth: d } => {
                let depth = depth.or(*d).unwrap_or(2);
                lex_tower_capped(base, |_, _| fiber.clone(), depth, cap)
            }
            TowerSpec::Theta { theta, factors } => {
                let depth = depth.unwrap_or(theta.len());
                if depth == 0 || depth > theta.len() {
                    return Err(Error::Precondition(format!(
                        "depth {depth} outside 1..={} allowed by theta",
                        theta.len()
                    )));
                }
                lex_tower_capped(&factors[theta[0]], |i, _| factors[theta[i + 1]].clone(), depth, cap)
            }
        }
    }
}

fn is_admissible_factor(t: &Tournament) -> bool {
    t.order() == 1 || t.is_transitive() || (t.order() >= 3 && is_prime(t))
}

/// Whether the decomposition of the top level reproduces the tower level by
/// level (up to isomorphism, via certificates). Every factor must be trivial,
/// transitive or prime; an order factor may not carry order fibers and a
/// trivial factor only trivial ones. Levels where every fiber is
/// trivial are skipped since they repeat the previous level.
pub fn classifier_cross_check(tower: &LexTower) -> Result<bool> {
    if let Some(bad) = tower.factors().find(|t| !is_admissible_factor(t)) {
        return Err(Error::Precondition(format!(
            "factor with {} vertices is neither trivial, transitive nor prime",
            bad.order()
        )));
    }
    for i in 0..tower.depth() - 1 {
        for (v, fiber) in tower.fibers[i].iter().enumerate() {
            let owner = if i == 0 {
                &tower.base
            } else {
                &tower.fibers[i - 1][tower.system.maps[i - 1][v]]
            };
            if owner.order() == 1 && fiber.order() > 1 {
                return Err(Error::Precondition(format!(
                    "level {} vertex {v}: nontrivial fiber below a trivial factor",
                    i + 1
                )));
            }
            if owner.order() > 1 && owner.is_transitive() && fiber.order() > 1 && fiber.is_transitive() {
                return Err(Error::Precondition(format!(
                    "level {} vertex {v}: order fiber below an order factor",
                    i + 1
                )));
            }
        }
    }
    let top = tower.top();
    let tree: ClassifierTree = classifier(top);
    let rebuilt = tree.reassemble()?;
    if !is_isomorphism(top, &rebuilt, &tree.reassembly_map()) {
        return Ok(false);
    }
    let mut tower_levels: Vec<&Tournament> = vec![tower.system.level(0)];
    for i in 1..tower.depth() {
        if tower.fibers[i - 1].iter().any(|f| f.order() > 1) {
            tower_levels.push(tower.system.level(i));
        }
    }
    if tower_levels.len() == 1 && tower_levels[0].order() == 1 {
        return Ok(tree.kind == crate::modular::BaseKind::Trivial);
    }
    let tree_levels = tree.levels();
    if tree_levels.len() != tower_levels.len() {
        return Ok(false);
    }
    for (a, b) in tree_levels.iter().zip(tower_levels) {
        if a.order() != b.order() || crate::classifier::certificate(a)? != crate::classifier::certificate(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three threads through `vertex` of `level` that split at the next level and
/// form a 3-cycle. `None` if the fiber over `vertex` has no 3-cycle.
pub fn cylinder_cycle_witness(s: &InverseSystem, level: usize, vertex: usize) -> Result<Option<[Thread; 3]>> {
    if level + 1 >= s.depth() {
        return Err(Error::Precondition(format!(
            "a witness at level {level} needs depth at least {}, system has {}",
            level + 2,
            s.depth()
        )));
    }
    if vertex >= s.level(level).order() {
        return Err(Error::VertexOutOfRange {
            vertex,
            n: s.level(level).order(),
        });
    }
    let next = s.level(level + 1);
    let children: Vec<usize> = (0..next.order()).filter(|&w| s.maps[level][w] == vertex).collect();
    for (ai, &a) in children.iter().enumerate() {
        for (bi, &b) in children.iter().enumerate().skip(ai + 1) {
            let (a, b) = if next.arc(a, b) { (a, b) } else { (b, a) };
            for &c in children.iter().skip(bi + 1) {
                if next.arc(b, c) && next.arc(c, a) {
                    let ext = |w| s.extend(level + 1, w).ok_or(Error::InvalidSystem {
                        level: level + 1,
                        reason: "vertex does not extend to a thread".into(),
                    });
                    return Ok(Some([ext(a)?, ext(b)?, ext(c)?]));
                }
            }
        }
    }
    Ok(None)
}

/// Whether some thread closes a 3-cycle with `t1` and `t2` (threads are
/// indexed by the top level).
pub fn threads_on_three_cycle(s: &InverseSystem, t1: &Thread, t2: &Thread) -> Result<bool> {
    let forward = limit_arc(s, t1, t2)?;
    let (a, b) = if forward { (t1, t2) } else { (t2, t1) };
    for t in s.threads() {
        if &t == a || &t == b {
            continue;
        }
        if limit_arc(s, b, &t)? && limit_arc(s, &t, a)? {
            return Ok(true);
        }
    }
    Ok(false)
}
