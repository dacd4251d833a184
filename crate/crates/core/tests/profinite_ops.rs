mod common;

use tournament_core::construct::{lex_product, y2, FiberAssignment};
use tournament_core::grouptour::triadic_tournament;
use tournament_core::iso::{find_isomorphism_capped, is_isomorphism};
use tournament_core::profinite::{
    catalog, classifier_cross_check, cylinder_cycle_witness, lex_tower, limit_arc, parse_tower, threads_on_three_cycle,
    triadic_system, validate_system, InverseSystem, LexTower, Thread, TowerSpec, TOWER_CAP,
};
use tournament_core::{Error, Tournament};

fn tower(text: &str) -> LexTower {
    parse_tower(text).unwrap().build(None, TOWER_CAP).unwrap()
}

/// The factor tournament deciding a pair whose coordinates first differ at `i`.
fn deciding_factor<'a>(t: &'a LexTower, coords: &[usize], i: usize) -> &'a Tournament {
    if i == 0 {
        return &t.base;
    }
    let parent = t.vertex_at(&coords[..i]).unwrap();
    &t.fibers[i - 1][parent]
}

#[test]
fn triadic_system_examples() {
    let s = triadic_system(3).unwrap();
    validate_system(&s).unwrap();
    let sizes: Vec<usize> = s.levels().iter().map(|l| l.order()).collect();
    assert_eq!(sizes, vec![3, 9, 27]);
    for v in 0..27 {
        let t = s.thread_of_top(v);
        assert_eq!(t.0, vec![v % 3, v % 9, v]);
        assert_eq!(s.thread(t.0.clone()).unwrap(), t);
    }
    let (t0, t1) = (s.thread_of_top(0), s.thread_of_top(1));
    assert_eq!(limit_arc(&s, &t0, &t1).unwrap(), s.level(0).arc(0, 1));
    assert!(matches!(limit_arc(&s, &t0, &t0), Err(Error::Undetermined(3))));
    assert!(s.thread(vec![0, 1, 1]).is_err());
}

#[test]
fn invalid_systems_name_the_level() {
    let c3 = Tournament::cycle3();
    let s = InverseSystem::new(
        vec![c3.clone(), c3.clone(), c3.clone()],
        vec![vec![0, 1, 2], vec![0, 0, 1]],
    )
    .unwrap();
    assert!(matches!(validate_system(&s), Err(Error::InvalidSystem { level: 1, .. })));
    // onto but collapsing an arc the wrong way
    let t3 = Tournament::transitive(3);
    let s = InverseSystem::new(vec![Tournament::arc_tournament(), t3], vec![vec![1, 0, 0]]).unwrap();
    assert!(matches!(validate_system(&s), Err(Error::InvalidSystem { level: 0, .. })));
    validate_system(&InverseSystem::single(y2())).unwrap();
    assert!(InverseSystem::new(vec![c3.clone(), c3], vec![]).is_err());
}

#[test]
fn constant_c3_tower_is_the_triadic_tower() {
    let t = tower("base=C3; fibers=C3; depth=3");
    let sizes: Vec<usize> = t.system.levels().iter().map(|l| l.order()).collect();
    assert_eq!(sizes, vec![3, 9, 27]);
    for (k, level) in t.system.levels().iter().enumerate() {
        let tri = triadic_tournament(k as u32 + 1).unwrap();
        let map: Vec<usize> = (0..tri.order())
            .map(|x| {
                let coords: Vec<usize> = (0..=k).map(|i| x / 3usize.pow(i as u32) % 3).collect();
                t.vertex_at(&coords).unwrap()
            })
            .collect();
        assert!(is_isomorphism(&tri, level, &map));
        if k < 2 {
            assert!(find_isomorphism_capped(&tri, level, 27).unwrap().is_some());
        }
    }
}

#[test]
fn theta_and_y2_tower_sizes() {
    let t = tower("theta=101; Y0=C3; Y1=Z5[1,2]");
    let sizes: Vec<usize> = t.system.levels().iter().map(|l| l.order()).collect();
    assert_eq!(sizes, vec![5, 15, 75]);
    assert_eq!(tower("base=Y2; fibers=Y2").top().order(), 25);
    assert_eq!(tower("theta=01; Y0=C3; Y1=Z5[1,2]").build_sizes(), vec![3, 15]);
}

trait Sizes {
    fn build_sizes(&self) -> Vec<usize>;
}

impl Sizes for LexTower {
    fn build_sizes(&self) -> Vec<usize> {
        self.system.levels().iter().map(|l| l.order()).collect()
    }
}

#[test]
fn limit_arc_is_the_first_difference_rule() {
    for text in ["theta=101; Y0=C3; Y1=Z5[1,2]", "base=Y2; fibers=C3; depth=3", "base=C3; fibers=T2; depth=3"] {
        let t = tower(text);
        validate_system(&t.system).unwrap();
        let n = t.top().order();
        let coords: Vec<Vec<usize>> = (0..n).map(|v| t.coordinates(v)).collect();
        for u in 0..n {
            let tu = t.system.thread_of_top(u);
            for i in 0..t.depth() {
                assert_eq!(t.system.project(u, i), tu.at(i));
            }
            for v in (0..n).filter(|&v| v != u) {
                let i = (0..t.depth()).find(|&i| coords[u][i] != coords[v][i]).unwrap();
                let f = deciding_factor(&t, &coords[u], i);
                let expected = f.arc(coords[u][i], coords[v][i]);
                let tv = t.system.thread_of_top(v);
                assert_eq!(limit_arc(&t.system, &tu, &tv).unwrap(), expected);
                assert_eq!(t.top().arc(u, v), expected);
                assert_ne!(limit_arc(&t.system, &tv, &tu).unwrap(), expected);
            }
        }
    }
}

#[test]
fn arc_cyclicity_passes_through_levels() {
    for text in [
        "base=C3; fibers=C3; depth=3",
        "base=C3; fibers=T2; depth=3",
        "base=Y2; fibers=C3; depth=2",
        "theta=101; Y0=C3; Y1=Z5[1,2]",
        "theta=011; Y0=1; Y1=C3",
        "base=Z5[1,2]; fibers=Y2; depth=2",
    ] {
        let t = tower(text);
        let levels: Vec<bool> = t.system.levels().iter().map(common::is_arc_cyclic).collect();
        let top = *levels.last().unwrap();
        assert_eq!(top, levels.iter().all(|&b| b), "{text}");
    }
}

#[test]
fn cross_check_examples() {
    assert!(classifier_cross_check(&tower("theta=01; Y0=C3; Y1=Z5[1,2]")).unwrap());
    assert!(classifier_cross_check(&tower("base=Y2; fibers=Y2")).unwrap());
    assert!(classifier_cross_check(&tower("theta=0101; Y0=C3; Y1=T3")).unwrap());
    for chained in ["base=C3; fibers=T3; depth=3", "base=T2; fibers=T2", "theta=010; Y0=1; Y1=C3"] {
        assert!(matches!(classifier_cross_check(&tower(chained)), Err(Error::Precondition(_))), "{chained}");
    }
    let fiber = lex_product(&FiberAssignment::constant(Tournament::arc_tournament(), &Tournament::cycle3())).0;
    let bad = lex_tower(&Tournament::cycle3(), |_, _| fiber.clone(), 2).unwrap();
    assert!(matches!(classifier_cross_check(&bad), Err(Error::Precondition(_))));
}

#[test]
fn cross_check_with_mixed_fibers() {
    let choices = [Tournament::trivial(), Tournament::cycle3(), catalog("Z5[1,2]").unwrap(), Tournament::transitive(2)];
    let first = lex_tower(&Tournament::cycle3(), |_, v| choices[v % 4].clone(), 2).unwrap();
    // keep trivial fibers under trivial factors and no order under order
    let t = lex_tower(
        &Tournament::cycle3(),
        |i, v| {
            if i == 0 {
                return choices[v % 4].clone();
            }
            let owner = first.fibers[0][first.system.map(0).assignment[v]].order();
            match owner {
                1 => Tournament::trivial(),
                2 => Tournament::cycle3(),
                _ => choices[v % 4].clone(),
            }
        },
        3,
    )
    .unwrap();
    assert!(classifier_cross_check(&t).unwrap());
}

#[test]
fn triadic_witnesses() {
    let s = triadic_system(3).unwrap();
    for level in 0..2 {
        for v in 0..s.level(level).order() {
            let [a, b, c] = cylinder_cycle_witness(&s, level, v).unwrap().unwrap();
            for t in [&a, &b, &c] {
                assert_eq!(t.at(level), v);
            }
            let next: Vec<usize> = [&a, &b, &c].iter().map(|t| t.at(level + 1)).collect();
            assert!(next[0] != next[1] && next[1] != next[2] && next[0] != next[2]);
            assert!(limit_arc(&s, &a, &b).unwrap() && limit_arc(&s, &b, &c).unwrap() && limit_arc(&s, &c, &a).unwrap());
        }
    }
    assert!(cylinder_cycle_witness(&s, 2, 0).is_err());
}

#[test]
fn witnesses_follow_point_cyclic_fibers() {
    let t = tower("theta=011; Y0=C3; Y1=Z5[1,2]");
    for level in 0..2 {
        for v in 0..t.system.level(level).order() {
            assert!(cylinder_cycle_witness(&t.system, level, v).unwrap().is_some());
        }
    }
    let flat = tower("base=C3; fibers=T3; depth=2");
    assert!(cylinder_cycle_witness(&flat.system, 0, 0).unwrap().is_none());
}

#[test]
fn y2_split_arc_is_on_no_cycle() {
    let t = tower("base=Y2; fibers=Y2");
    let s = &t.system;
    // a1 = 0, a2 = 1 inside the fiber over each base vertex x
    for x in 0..5 {
        let t1 = s.thread_of_top(t.vertex_at(&[x, 0]).unwrap());
        let t2 = s.thread_of_top(t.vertex_at(&[x, 1]).unwrap());
        assert!(limit_arc(s, &t1, &t2).unwrap());
        assert!(!threads_on_three_cycle(s, &t1, &t2).unwrap());
        let c = s.thread_of_top(t.vertex_at(&[x, 4]).unwrap());
        assert!(threads_on_three_cycle(s, &t1, &c).unwrap() || threads_on_three_cycle(s, &c, &t1).unwrap());
    }
}

#[test]
fn tower_language() {
    assert!(matches!(parse_tower("base=C3; fibers=Y2; depth=4").unwrap(), TowerSpec::Constant { depth: Some(4), .. }));
    assert!(matches!(parse_tower("theta=0110; Y0=C3; Y1=Z5[1,2]").unwrap(), TowerSpec::Theta { .. }));
    for bad in ["base=C3", "theta=01; Y0=C3", "theta=; Y0=C3", "base=Q; fibers=C3", "theta=0a; Y0=C3", "nonsense"] {
        assert!(parse_tower(bad).is_err(), "{bad}");
    }
    assert_eq!(tower("base=T3; fibers=1").top().order(), 3);
    let err = parse_tower("base=C3; fibers=C3").unwrap().build(Some(12), TOWER_CAP).unwrap_err();
    assert!(err.is_cap_exceeded());
}

#[test]
fn threads_from_coordinates() {
    let t = tower("base=C3; fibers=Y2; depth=3");
    let s = &t.system;
    let th = s.extend(1, 7).unwrap();
    assert_eq!(th.at(1), 7);
    assert_eq!(s.map(0).assignment[7], th.at(0));
    assert_eq!(s.thread(th.0.clone()).unwrap(), th);
    let all: Vec<Thread> = s.threads();
    assert_eq!(all.len(), 75);
}
