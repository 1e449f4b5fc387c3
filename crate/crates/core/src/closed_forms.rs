//! Explicit denominator formulas.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rat::{int, lcd};
use crate::exact::{solve_exact, Board, Config, Move, Piece, Point, Rat, RatMatrix};

/// Denominator for `q` copies of a one-move rider: the least common
/// denominator of the corners, together with their antipodes once `q ≥ 2`.
pub fn one_move_denominator(board: &Board, m: &Move, q: usize) -> Result<BigInt> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be at least 1".into()));
    }
    let mut points: Vec<Point> = board.corners().to_vec();
    if q >= 2 {
        for c in board.corners() {
            points.push(board.boundary_exit(c, m)?);
        }
    }
    Ok(lcd(points.iter().flat_map(|p| [&p.x, &p.y])))
}

/// Denominator for a rider with moves `(1,0)` and `(±c,±d)` on the square.
pub fn two_move_horizontal_denominator(c: i64, d: i64, q: usize) -> Result<BigInt> {
    if c < 1 || d < 1 || q < 1 {
        return Err(Error::InvalidInput("need c, d, q >= 1".into()));
    }
    if c.gcd(&d) != 1 {
        return Err(Error::InvalidInput(format!("({c}, {d}) is not coprime")));
    }
    let v = if q == 1 {
        1
    } else if d >= c {
        d
    } else if q <= 2 * (c / d) as usize + 1 {
        c
    } else {
        c * d
    };
    Ok(BigInt::from(v))
}

/// Integers with `w1·m1 + w2·m2 + w3·m3 = 0`, coprime, `w1 > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleWeights {
    pub w: [i64; 3],
}

pub fn triangle_weights(m1: &Move, m2: &Move, m3: &Move) -> Result<TriangleWeights> {
    let ms = [m1, m2, m3];
    for i in 0..3 {
        if ms[i].is_parallel(ms[(i + 1) % 3]) {
            return Err(Error::InvalidInput(format!(
                "moves {} and {} are parallel",
                ms[i],
                ms[(i + 1) % 3]
            )));
        }
    }
    let mut w = [0i64; 3];
    for (i, wi) in w.iter_mut().enumerate() {
        *wi = ms[(i + 1) % 3].cross(ms[(i + 2) % 3]);
    }
    let g = w[0].gcd(&w[1]).gcd(&w[2]);
    let sign = if w[0] < 0 { -1 } else { 1 };
    Ok(TriangleWeights {
        w: w.map(|v| sign * v / g),
    })
}

/// `max_i max(|w_i c_i|, |w_i d_i|)`.
pub fn triangle_denominator(m1: &Move, m2: &Move, m3: &Move) -> Result<BigInt> {
    let tw = triangle_weights(m1, m2, m3)?;
    let n = [m1, m2, m3]
        .iter()
        .zip(tw.w)
        .map(|(m, w)| (w * m.c()).abs().max((w * m.d()).abs()))
        .max()
        .unwrap_or(0);
    Ok(BigInt::from(n))
}

/// The largest triangle with sides along `m1`, `m2`, `m3` that fits in the
/// unit square, found by solving its attack system exactly and rescaling.
/// Points are `z1, z2, z3` with `z1z2 ∥ m1`, `z1z3 ∥ m2`, `z2z3 ∥ m3`.
pub fn triangle_configuration(m1: &Move, m2: &Move, m3: &Move) -> Result<Config> {
    triangle_weights(m1, m2, m3)?;
    // attacks, z1 = origin, and one unit coordinate along z1z3
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (i, j, m) in [(0, 1, m1), (0, 2, m2), (1, 2, m3)] {
        let (px, py) = m.perp();
        let mut r = vec![0i64; 6];
        r[2 * j] = px;
        r[2 * j + 1] = py;
        r[2 * i] = -px;
        r[2 * i + 1] = -py;
        rows.push(r);
        rhs.push(0);
    }
    rows.push(vec![1, 0, 0, 0, 0, 0]);
    rows.push(vec![0, 1, 0, 0, 0, 0]);
    rhs.extend([0, 0]);
    let mut unit = vec![0i64; 6];
    unit[if m2.c() != 0 { 4 } else { 5 }] = 1;
    rows.push(unit);
    rhs.push(1);
    let b: Vec<Rat> = rhs.into_iter().map(int).collect();
    let sol = solve_exact(&RatMatrix::from_int_rows(&rows), &b)
        .unique()
        .ok_or_else(|| Error::ConstructionFailure("triangle system is singular".into()))?;
    let cfg = Config::from_coords(&sol);
    let (lo, hi) = cfg.bounds().expect("three points");
    let extent = (&hi.x - &lo.x).max(&hi.y - &lo.y);
    if extent.is_zero() {
        return Err(Error::ConstructionFailure("degenerate triangle".into()));
    }
    let shifted = cfg.translate(&Point::new(-lo.x, -lo.y));
    Ok(shifted.scale(&(Rat::one() / extent)))
}

/// Is the piece, up to a symmetry of the square, one of semirook, rook,
/// semibishop or anassa (the pieces whose denominator is 1 for every `q`)?
pub fn is_denominator_one_piece(piece: &Piece) -> bool {
    let targets: Vec<Piece> = ["semirook", "rook", "semibishop", "anassa"]
        .iter()
        .map(|n| Piece::named(n).expect("catalog piece"))
        .collect();
    (0..8).any(|s| {
        let img = piece.symmetric_image(s);
        targets.contains(&img)
    })
}
