//! Independent routes to the same answers.

use num_bigint::BigInt;
use riderlab_core::closed_forms::{triangle_configuration, triangle_denominator};
use riderlab_core::construct::{
    exp_lower_bound_check, fib, fibonacci_spiral_queens, golden_parallelogram, golden_parallelogram_maps,
    golden_rectangle, semiqueen_alternate_map, trident_maps, twisted_spiral,
};
use riderlab_core::exact::moves::catalog_names;
use riderlab_core::trajectory::arvind_denominator;
use riderlab_core::vertex::{
    constraints, enumerate_from_constraints, is_vertex, monotonicity_check, polytope_denominator, EnumOptions,
};
use riderlab_core::{denom, Board, Config, Move, Piece};

fn f(i: i64) -> i64 {
    i64::try_from(fib(i).unwrap()).unwrap()
}

fn mv(c: i64, d: i64) -> Move {
    Move::new(c, d).unwrap()
}

/// Integral positions relative to piece 2.
fn relative(cfg: &Config) -> Vec<(i64, i64)> {
    let base = &cfg.points[1];
    cfg.points
        .iter()
        .map(|p| {
            let d = p.sub(base);
            (
                i64::try_from(d.x.to_integer()).unwrap(),
                i64::try_from(d.y.to_integer()).unwrap(),
            )
        })
        .collect()
}

fn with_origin_at_two(points: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    let (bx, by) = points[1];
    points.into_iter().map(|(x, y)| (x - bx, y - by)).collect()
}

#[test]
fn two_move_trajectories_match_enumeration() {
    let dirs: Vec<Move> = {
        let mut v: Vec<Move> = (0..=3)
            .flat_map(|a| (0..=3).map(move |b| (a, b)))
            .filter(|&(a, b)| (a, b) != (0, 0))
            .map(|(a, b)| mv(a, b))
            .collect();
        v.sort();
        v.dedup();
        v
    };
    let sq = Board::unit_square();
    let opts = EnumOptions::default();
    for (i, a) in dirs.iter().enumerate() {
        for b in &dirs[i + 1..] {
            let piece = Piece::from_moves(&[*a, *b]).unwrap();
            let mut prev = BigInt::from(1);
            for q in 1..=4 {
                let traj = arvind_denominator(&sq, a, b, q).unwrap();
                let enumerated = polytope_denominator(&piece, q, &opts).unwrap().denominator;
                assert_eq!(traj, enumerated, "{a} {b} q={q}");
                assert_eq!(&traj % &prev, BigInt::from(0), "not monotone: {a} {b} q={q}");
                prev = traj;
            }
        }
    }
}

#[test]
fn enumeration_ignores_constraint_order() {
    let opts = EnumOptions::default();
    for name in ["nightrider", "queen", "trident"] {
        let p = Piece::named(name).unwrap();
        for q in 2..=3 {
            let mut cons = constraints(&p, q);
            let (fwd, _) = enumerate_from_constraints(&cons, q, &opts).unwrap();
            cons.reverse();
            let (rev, _) = enumerate_from_constraints(&cons, q, &opts).unwrap();
            let pts = |v: &[riderlab_core::vertex::Vertex]| v.iter().map(|x| x.cfg.clone()).collect::<Vec<_>>();
            assert_eq!(pts(&fwd), pts(&rev), "{name} q={q}");
        }
    }
}

#[test]
fn triangle_formula_matches_solved_system() {
    let mut moves: Vec<Move> = (-3..=3)
        .flat_map(|c| (-3..=3).map(move |d| (c, d)))
        .filter(|&(c, d)| (c, d) != (0, 0))
        .map(|(c, d)| mv(c, d))
        .collect();
    moves.sort();
    moves.dedup();
    let mut checked = 0;
    for i in 0..moves.len() {
        for j in i + 1..moves.len() {
            for k in j + 1..moves.len() {
                let (a, b, c) = (&moves[i], &moves[j], &moves[k]);
                if a.is_parallel(b) || a.is_parallel(c) || b.is_parallel(c) {
                    continue;
                }
                let cfg = triangle_configuration(a, b, c).unwrap();
                assert_eq!(denom(&cfg), triangle_denominator(a, b, c).unwrap(), "{a} {b} {c}");
                checked += 1;
            }
        }
    }
    // 16 directions, no two parallel
    assert_eq!(checked, 560);
}

#[test]
fn constructions_are_vertices() {
    for name in catalog_names() {
        let p = Piece::named(name).unwrap();
        if p.len() < 3 {
            continue;
        }
        let ms = p.moves();
        for q in 4..=13 {
            for a in 0..ms.len() {
                for b in a + 1..ms.len() {
                    for c in b + 1..ms.len() {
                        for map in golden_parallelogram_maps(&ms[a], &ms[b], &ms[c]).unwrap() {
                            let k = golden_parallelogram(&p, &map, q).unwrap();
                            assert!(is_vertex(&p, q, &k.cfg).unwrap().is_vertex, "{name} {map:?} q={q}");
                        }
                    }
                }
            }
        }
    }
    let queen = Piece::named("queen").unwrap();
    let nr = Piece::named("nightrider").unwrap();
    let spiral: Vec<Move> = ["1/2", "-2/1", "2/1", "-1/2"].iter().map(|s| Move::parse_slope(s).unwrap()).collect();
    let kite: Vec<Move> = ["-2/1", "1/2", "2/1", "-1/2"].iter().map(|s| Move::parse_slope(s).unwrap()).collect();
    for q in 5..=13 {
        let k = fibonacci_spiral_queens(q).unwrap();
        assert!(is_vertex(&queen, q, &k.cfg).unwrap().is_vertex, "queen spiral q={q}");
        for a in [&spiral, &kite] {
            let k = twisted_spiral(&nr, &[a[0], a[1], a[2], a[3]], q).unwrap();
            assert!(is_vertex(&nr, q, &k.cfg).unwrap().is_vertex, "{a:?} q={q}");
        }
    }
}

fn trident_a(i: i64) -> (i64, i64) {
    let h = i / 2;
    match i % 4 {
        0 => (0, 2 * f(h) - 1),
        1 => (f(h - 1), f(h + 2) - 1),
        2 => (f(h), f(h) - 1),
        _ => (f(h), f(h + 1) + f(h - 1) - 1),
    }
}

fn trident_c(i: i64) -> (i64, i64) {
    // (c) at i is (a) at i − 2 mod 4, with the same ⌊i/2⌋
    let h = i / 2;
    match i % 4 {
        0 => (f(h), f(h) - 1),
        1 => (f(h), f(h + 1) + f(h - 1) - 1),
        2 => (0, 2 * f(h) - 1),
        _ => (f(h - 1), f(h + 2) - 1),
    }
}

#[test]
fn trident_position_formulas() {
    let t = Piece::named("trident").unwrap();
    let (map_a, map_c) = trident_maps();
    for q in 4..=20i64 {
        let h = q / 2;
        for (map, pos, largest) in [
            (
                &map_a,
                trident_a as fn(i64) -> (i64, i64),
                [2 * f(h) - 1, f(h + 2) - 1, f(h + 1) - 1, f(h + 1) + f(h - 1) - 1],
            ),
            (
                &map_c,
                trident_c,
                [f(h + 1) - 1, f(h + 1) + f(h - 1) - 1, 2 * f(h) - 1, f(h + 2) - 1],
            ),
        ] {
            let k = golden_parallelogram(&t, map, q as usize).unwrap();
            let got = relative(&k.integral);
            let mut want: Vec<(i64, i64)> = vec![(0, 0)];
            want.extend((2..=q).map(pos));
            let want = with_origin_at_two(want);
            assert_eq!(&got[1..], &want[1..], "{map:?} q={q}");
            assert_eq!(k.denominator, BigInt::from(largest[(q % 4) as usize]), "{map:?} q={q}");
        }
    }
}

#[test]
fn semiqueen_alternate_positions() {
    let s = Piece::named("semiqueen").unwrap();
    for q in 4..=20i64 {
        let k = golden_parallelogram(&s, &semiqueen_alternate_map(), q as usize).unwrap();
        let mut want = vec![(0, -1)];
        want.extend((2..=q).map(|i| {
            let h = i / 2;
            match i % 4 {
                0 => (f(h) - 1, -f(h)),
                1 => (f(h + 1) - 1, -f(h)),
                2 => (f(h) - 1, 0),
                _ => (f(h + 1) - 1, -f(h - 1)),
            }
        }));
        assert_eq!(relative(&k.integral), want, "q={q}");
        let rect = golden_rectangle(q as usize).unwrap().denominator;
        if q % 2 == 1 && q >= 7 {
            assert!(k.denominator > rect, "q={q}");
        }
    }
}

#[test]
fn bound_examples() {
    let check = |name: &str, q| exp_lower_bound_check(&Piece::named(name).unwrap(), q).unwrap();
    let s = check("semiqueen", 12);
    assert_eq!((s.construction_delta, s.bound, s.holds), (BigInt::from(13), BigInt::from(12), true));
    let t = check("trident", 12);
    assert_eq!((t.construction_delta, t.bound, t.holds), (BigInt::from(25), BigInt::from(12), true));
    let q8 = check("queen", 8);
    assert_eq!(q8.bound, BigInt::from(4));
    assert!(q8.holds && q8.construction_delta >= BigInt::from(21));
}

#[test]
fn denominators_grow_with_pieces_and_moves() {
    let opts = EnumOptions::default();
    for (small, big) in [("bishop", "queen"), ("semirook", "anassa"), ("rook", "semiqueen")] {
        let r = monotonicity_check(&Piece::named(small).unwrap(), &Piece::named(big).unwrap(), 2, 3, &opts).unwrap();
        assert!(r.holds, "{small} ⊂ {big}: {r:?}");
    }
    let r = monotonicity_check(&Piece::named("rook").unwrap(), &Piece::named("bishop").unwrap(), 2, 3, &opts);
    assert!(r.is_err());
}

#[test]
fn triangle_examples_by_enumeration() {
    // the best triangle is a vertex for three pieces with those moves
    for (a, b, c) in [(mv(2, -1), mv(2, 1), mv(1, 2)), (mv(1, 2), mv(3, 1), mv(4, 3))] {
        let p = Piece::from_moves(&[a, b, c]).unwrap();
        let cfg = triangle_configuration(&a, &b, &c).unwrap();
        assert!(is_vertex(&p, 3, &cfg).unwrap().is_vertex);
        let d = polytope_denominator(&p, 3, &EnumOptions::default()).unwrap();
        assert!(d.spectrum.contains(&triangle_denominator(&a, &b, &c).unwrap()));
    }
}
