//! Brute-force reference implementations shared by the integration tests.
//! None of these call into the library beyond reading arcs.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tournament_core::Tournament;

/// Every vertex outside `mask` beats all of it or loses to all of it.
pub fn is_module(t: &Tournament, mask: u64) -> bool {
    let n = t.order();
    let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    (0..n).filter(|&z| mask >> z & 1 == 0).all(|z| {
        let beats = members.iter().filter(|&&a| t.arc(z, a)).count();
        beats == 0 || beats == members.len()
    })
}

/// No module with between 2 and n - 1 vertices, checked over all subsets.
pub fn is_prime(t: &Tournament) -> bool {
    let n = t.order();
    assert!(n <= 20, "subset oracle limited to 20 vertices");
    if n < 2 {
        return false;
    }
    let full = (1u64 << n) - 1;
    (1..full).all(|mask| {
        let size = (mask as u64).count_ones() as usize;
        size < 2 || !is_module(t, mask)
    })
}

/// All modules with between 2 and n - 1 vertices.
pub fn nontrivial_modules(t: &Tournament) -> Vec<u64> {
    let n = t.order();
    let full = (1u64 << n) - 1;
    (1..full)
        .filter(|&m| m.count_ones() >= 2 && is_module(t, m))
        .collect()
}

pub fn reachable_from(t: &Tournament, start: usize, forward: bool) -> Vec<bool> {
    let n = t.order();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if w != v && !seen[w] && (if forward { t.arc(v, w) } else { t.arc(w, v) }) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

pub fn is_strongly_connected(t: &Tournament) -> bool {
    reachable_from(t, 0, true).into_iter().all(|b| b) && reachable_from(t, 0, false).into_iter().all(|b| b)
}

/// Strong components as mutual-reachability classes, each sorted, ordered by
/// smallest member.
pub fn condensation(t: &Tournament) -> Vec<Vec<usize>> {
    let n = t.order();
    let reach: Vec<Vec<bool>> = (0..n).map(|v| reachable_from(t, v, true)).collect();
    let mut assigned = vec![false; n];
    let mut comps = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&w| reach[v][w] && reach[w][v]).collect();
        for &w in &comp {
            assigned[w] = true;
        }
        comps.push(comp);
    }
    comps
}

pub fn arc_on_cycle(t: &Tournament, x: usize, y: usize) -> bool {
    (0..t.order()).any(|z| z != x && z != y && t.arc(y, z) && t.arc(z, x))
}

pub fn is_arc_cyclic(t: &Tournament) -> bool {
    let n = t.order();
    (0..n).all(|x| (0..n).all(|y| x == y || !t.arc(x, y) || arc_on_cycle(t, x, y)))
}

pub fn is_point_cyclic(t: &Tournament) -> bool {
    let n = t.order();
    (0..n).all(|x| (0..n).any(|y| y != x && t.arc(x, y) && arc_on_cycle(t, x, y)))
}

pub fn is_regular(t: &Tournament) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        let out = (0..n).filter(|&y| y != x && t.arc(x, y)).count();
        2 * out == n - 1
    })
}

/// Next permutation in lexicographic order; false after the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn preserves_arcs(t1: &Tournament, t2: &Tournament, map: &[usize]) -> bool {
    let n = t1.order();
    (0..n).all(|x| (0..n).all(|y| x == y || t1.arc(x, y) == t2.arc(map[x], map[y])))
}

/// All isomorphisms by trying every permutation; only for small orders.
pub fn all_isomorphisms(t1: &Tournament, t2: &Tournament) -> Vec<Vec<usize>> {
    assert!(t1.order() <= 9, "permutation oracle limited to 9 vertices");
    if t1.order() != t2.order() {
        return Vec::new();
    }
    let mut p: Vec<usize> = (0..t1.order()).collect();
    let mut out = Vec::new();
    loop {
        if preserves_arcs(t1, t2, &p) {
            out.push(p.clone());
        }
        if !next_permutation(&mut p) {
            return out;
        }
    }
}

pub fn isomorphic(t1: &Tournament, t2: &Tournament) -> bool {
    if t1.order() != t2.order() {
        return false;
    }
    let mut p: Vec<usize> = (0..t1.order()).collect();
    loop {
        if preserves_arcs(t1, t2, &p) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

pub fn random_tournament<R: Rng>(rng: &mut R, n: usize) -> Tournament {
    Tournament::from_fn(n, |_, _| rng.gen()).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Y₂ with a₁ = 0, a₂ = 1, b₁ = 2, b₂ = 3, c = 4, from its arc list.
pub fn y2_from_arcs() -> Tournament {
    Tournament::from_arcs(
        5,
        &[(0, 2), (3, 1), (0, 3), (1, 2), (0, 1), (2, 3), (4, 0), (4, 1), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// The `k`-th tournament on `n` vertices, bit `p` orienting the `p`-th pair
/// (row-major, `i < j`) from `i` to `j`.
pub fn labeled(n: usize, code: u64) -> Tournament {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let arcs: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .map(|(p, &(i, j))| if code >> p & 1 == 1 { (i, j) } else { (j, i) })
        .collect();
    Tournament::from_arcs(n, &arcs).unwrap()
}

/// One representative per isomorphism class, found by the permutation oracle.
pub fn classes_by_brute_force(n: usize) -> Vec<Tournament> {
    let pairs = n * (n - 1) / 2;
    let mut reps: Vec<Tournament> = Vec::new();
    for code in 0..1u64 << pairs {
        let t = labeled(n, code);
        if !reps.iter().any(|r| isomorphic(r, &t)) {
            reps.push(t);
        }
    }
    reps
}
