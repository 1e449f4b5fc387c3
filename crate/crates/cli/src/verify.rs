//! Cross-validation batteries run by `riderlab verify`.

use num_bigint::BigInt;
use riderlab_core::closed_forms::{one_move_denominator, triangle_denominator, two_move_horizontal_denominator};
use riderlab_core::construct::{fibonacci_spiral_queens, golden_parallelogram, twisted_spiral, LinearMap};
use riderlab_core::counting::count_unlabeled;
use riderlab_core::trajectory::arvind_denominator;
use riderlab_core::vertex::{is_vertex, polytope_denominator, EnumOptions};
use riderlab_core::{Board, Move, Piece};
use serde_json::{json, Value};

use crate::output::csv;
use crate::{invalid, CmdResult, Failure, Outcome};

struct Check {
    name: String,
    expected: String,
    actual: String,
}

impl Check {
    fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn mv(c: i64, d: i64) -> Move {
    Move::new(c, d).expect("nonzero move")
}

fn piece(name: &str) -> Result<Piece, Failure> {
    Ok(Piece::named(name)?)
}

fn slopes(s: &str) -> Result<[Move; 4], Failure> {
    let v = s.split(',').map(Move::parse_slope).collect::<riderlab_core::Result<Vec<_>>>()?;
    Ok([v[0], v[1], v[2], v[3]])
}

fn known_values() -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    let mut push = |name: String, expected: BigInt, actual: BigInt| {
        out.push(Check {
            name,
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    };
    let b = BigInt::from;
    let opts = EnumOptions::default();
    let sq = Board::unit_square();

    let queen = piece("queen")?;
    push("count queen q=2 n=4".into(), b(44), count_unlabeled(&queen, 2, 4));
    push("count queen q=8 n=8".into(), b(92), count_unlabeled(&queen, 8, 8));

    let nr = piece("nightrider")?;
    push("denominator nightrider q=3".into(), b(60), polytope_denominator(&nr, 3, &opts)?.denominator);
    push("denominator bishop q=3".into(), b(2), polytope_denominator(&piece("bishop")?, 3, &opts)?.denominator);
    for name in ["rook", "semirook", "semibishop", "anassa"] {
        push(format!("denominator {name} q=3"), b(1), polytope_denominator(&piece(name)?, 3, &opts)?.denominator);
    }

    push("one move 3/2 q=2".into(), b(3), one_move_denominator(&sq, &mv(2, 3), 2)?);
    push("two moves (13,4) q=7".into(), b(13), arvind_denominator(&sq, &mv(1, 0), &mv(13, 4), 7)?);
    push("two moves (13,4) q=8".into(), b(52), arvind_denominator(&sq, &mv(1, 0), &mv(13, 4), 8)?);
    push("two moves formula (13,4) q=8".into(), b(52), two_move_horizontal_denominator(13, 4, 8)?);

    push("triangle -1/2,1/2,2/1".into(), b(10), triangle_denominator(&mv(2, -1), &mv(2, 1), &mv(1, 2))?);
    push("triangle 2/1,1/3,3/4".into(), b(4), triangle_denominator(&mv(1, 2), &mv(3, 1), &mv(4, 3))?);

    let pn = piece("partial-nightrider")?;
    for (a, bb, want) in [
        ((10, 5), (6, -3), 172),
        ((-6, 3), (4, 8), 110),
        ((10, 5), (4, 8), 158),
        ((6, -3), (10, 5), 152),
        ((4, 8), (-6, 3), 125),
        ((4, 8), (10, 5), 139),
    ] {
        let c = golden_parallelogram(&pn, &LinearMap::new(a, bb), 13)?;
        let certified = is_vertex(&pn, 13, &c.cfg)?.is_vertex;
        push(
            format!("golden parallelogram {a:?}->{bb:?} q=13"),
            b(want),
            if certified { c.denominator } else { b(0) },
        );
    }

    push("queen spiral q=8".into(), b(21), fibonacci_spiral_queens(8)?.denominator);
    let spiral = slopes("1/2,-2/1,2/1,-1/2")?;
    let kite = slopes("-2/1,1/2,2/1,-1/2")?;
    for (q, s, k) in [(5, 286, 346), (6, 1585, 2030), (7, 8914, 11626)] {
        push(format!("nightrider spiral q={q}"), b(s), twisted_spiral(&nr, &spiral, q)?.denominator);
        push(format!("nightrider kite q={q}"), b(k), twisted_spiral(&nr, &kite, q)?.denominator);
    }

    // closed forms against trajectories and enumeration
    let h = mv(1, 0);
    for c in 1..=3i64 {
        for d in 1..=3i64 {
            if num_integer::Integer::gcd(&c, &d) != 1 {
                continue;
            }
            let m = mv(c, d);
            let p = Piece::from_moves(&[h, m])?;
            for q in 1..=3 {
                let closed = two_move_horizontal_denominator(c, d, q)?;
                push(format!("trajectories 0/1,{} q={q}", m.slope()), closed.clone(), arvind_denominator(&sq, &h, &m, q)?);
                push(format!("enumeration 0/1,{} q={q}", m.slope()), closed, polytope_denominator(&p, q, &opts)?.denominator);
            }
        }
    }
    for (c, d) in [(1, 0), (1, 1), (2, 1), (1, -3), (3, 2)] {
        let m = mv(c, d);
        for q in 1..=3 {
            push(
                format!("enumeration {} q={q}", m.slope()),
                one_move_denominator(&sq, &m, q)?,
                polytope_denominator(&Piece::from_moves(&[m])?, q, &opts)?.denominator,
            );
        }
    }
    Ok(out)
}

pub fn run_suite(suite: &str) -> CmdResult {
    let checks = match suite {
        "known" | "paper" => known_values()?,
        other => return Err(invalid(format!("unknown suite `{other}` (available: known)"))),
    };
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({"name": c.name, "expected": c.expected, "actual": c.actual, "pass": c.passed()}))
        .collect();
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![c.name.clone(), c.expected.clone(), c.actual.clone(), c.passed().to_string()])
        .collect();
    let mut outcome = Outcome::new(
        json!({"suite": suite, "checks": list, "passed": checks.len() - failed, "failed": failed}),
        csv(&["name", "expected", "actual", "pass"], &rows),
    );
    if failed > 0 {
        outcome.code = 1;
    }
    Ok(outcome)
}
