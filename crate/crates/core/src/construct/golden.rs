use num_bigint::BigInt;

use super::{family, fib_u, hyperplane_rows, Construction, Hyperplane};
use crate::closed_forms::triangle_weights;
use crate::error::{Error, Result};
use crate::exact::{Config, Move, Piece, Point, Rat};

/// Integer linear map given by the images of `(1,0)` and `(0,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub a: (i64, i64),
    pub b: (i64, i64),
}

impl LinearMap {
    pub fn new(a: (i64, i64), b: (i64, i64)) -> LinearMap {
        LinearMap { a, b }
    }

    pub fn identity() -> LinearMap {
        LinearMap::new((1, 0), (0, 1))
    }

    pub fn det(&self) -> i64 {
        self.a.0 * self.b.1 - self.a.1 * self.b.0
    }

    pub fn apply(&self, p: &Point) -> Point {
        let r = |v: i64| Rat::from_integer(v.into());
        Point::new(
            &p.x * r(self.a.0) + &p.y * r(self.b.0),
            &p.x * r(self.a.1) + &p.y * r(self.b.1),
        )
    }
}

fn position(i: usize) -> (BigInt, BigInt) {
    if i == 1 {
        return (BigInt::from(1), BigInt::from(0));
    }
    let h = i / 2;
    let zero = BigInt::from(0);
    match i % 4 {
        0 => (fib_u(h), zero),
        1 => (fib_u(h), fib_u(h - 1)),
        2 => (zero, fib_u(h)),
        _ => (fib_u(h - 1), fib_u(h)),
    }
}

/// The golden rectangle configuration of `q` semiqueens in integer
/// coordinates, with the side of its enclosing square.
pub fn golden_rectangle(q: usize) -> Result<Construction> {
    if q < 3 {
        return Err(Error::InvalidInput("golden rectangle needs q >= 3".into()));
    }
    let pts: Vec<Point> = (1..=q)
        .map(|i| {
            let (x, y) = position(i);
            Point::new(Rat::from_integer(x), Rat::from_integer(y))
        })
        .collect();
    Ok(Construction::from_integral(Config::new(pts)))
}

/// The defining move equations and fixations of the golden rectangle, as
/// integer rows `(coefficients, rhs)` over `x_1, y_1, …, x_q, y_q`.
pub fn golden_rectangle_system(q: usize) -> Result<Vec<(Vec<i64>, BigInt)>> {
    if q < 3 {
        return Err(Error::InvalidInput("golden rectangle needs q >= 3".into()));
    }
    let vert = Move::new(0, 1)?;
    let horiz = Move::new(1, 0)?;
    let anti = Move::new(1, -1)?;
    let mut hs: Vec<Hyperplane> = Vec::new();
    family(q, 4, 0, 1, vert, &mut hs);
    family(q, 4, 2, 6, vert, &mut hs);
    family(q, 4, 1, 3, vert, &mut hs);
    if q >= 4 {
        hs.push((1, 4, horiz));
    }
    family(q, 4, 0, 4, horiz, &mut hs);
    family(q, 4, 2, 3, horiz, &mut hs);
    family(q, 4, 3, 5, horiz, &mut hs);
    family(q, 2, 1, 2, anti, &mut hs);
    let mut rows: Vec<(Vec<i64>, BigInt)> = hyperplane_rows(q, &hs)
        .into_iter()
        .map(|(r, b)| (r, BigInt::from(b)))
        .collect();
    let fix = |idx: usize, v: BigInt| {
        let mut r = vec![0i64; 2 * q];
        r[idx] = 1;
        (r, v)
    };
    rows.push(fix(1, BigInt::from(0)));
    rows.push(fix(2, BigInt::from(0)));
    let h = q / 2;
    let last = if h.is_multiple_of(2) { 2 * (q - 1) } else { 2 * (q - 1) + 1 };
    rows.push(fix(last, fib_u(h)));
    Ok(rows)
}

fn parallel_to(v: (i64, i64), m: &Move) -> bool {
    v != (0, 0) && v.0 * m.d() - v.1 * m.c() == 0
}

/// The move of `piece` parallel to `v`, if any.
fn move_along(piece: &Piece, v: (i64, i64)) -> Option<Move> {
    piece.moves().iter().copied().find(|m| parallel_to(v, m))
}

/// Applies `map` to the golden rectangle of `q` semiqueens.
///
/// The images `a`, `b` of `(1,0)`, `(0,1)` must run along two moves of the
/// piece and `b − a` along a third, so that pieces 1, 2, 3 form its
/// smallest triangle. If instead `a + b` runs along the third move, `a` is
/// negated to restore the orientation.
pub fn golden_parallelogram(piece: &Piece, map: &LinearMap, q: usize) -> Result<Construction> {
    if piece.len() < 3 {
        return Err(Error::InvalidInput("golden parallelograms need at least three moves".into()));
    }
    if map.det() == 0 {
        return Err(Error::InvalidInput("degenerate linear map".into()));
    }
    let mut map = *map;
    let (Some(ma), Some(mb)) = (move_along(piece, map.a), move_along(piece, map.b)) else {
        return Err(Error::InvalidInput("map images must run along moves of the piece".into()));
    };
    let third = |m: &LinearMap| move_along(piece, (m.b.0 - m.a.0, m.b.1 - m.a.1));
    if third(&map).is_none() {
        map.a = (-map.a.0, -map.a.1);
    }
    match third(&map) {
        Some(mc) if mc != ma && mc != mb => {}
        _ => {
            return Err(Error::InvalidInput(
                "map does not send the unit triangle to a triangle of three moves".into(),
            ))
        }
    }
    let rect = golden_rectangle(q)?;
    let image = Config::new(rect.integral.points.iter().map(|p| map.apply(p)).collect());
    Construction::normalize(&image)
}

/// The six maps for the moves `m1, m2, m3`: for every ordered pair `(i, j)`,
/// `(1,0) ↦ w_i m_i` and `(0,1) ↦ −w_j m_j`.
pub fn golden_parallelogram_maps(m1: &Move, m2: &Move, m3: &Move) -> Result<Vec<LinearMap>> {
    let w = triangle_weights(m1, m2, m3)?.w;
    let ms = [m1, m2, m3];
    let v = |k: usize| (w[k] * ms[k].c(), w[k] * ms[k].d());
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let (a, b) = (v(i), v(j));
                out.push(LinearMap::new(a, (-b.0, -b.1)));
            }
        }
    }
    Ok(out)
}

/// The maps behind the trident's configurations (a) and (c).
pub fn trident_maps() -> (LinearMap, LinearMap) {
    (
        LinearMap::new((0, 2), (1, 1)),
        LinearMap::new((1, 1), (0, 2)),
    )
}

/// The semiqueen's second golden parallelogram.
pub fn semiqueen_alternate_map() -> LinearMap {
    LinearMap::new((1, -1), (1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{solve_exact, RatMatrix};

    #[test]
    fn rectangle_examples() {
        let r = golden_rectangle(12).unwrap();
        assert_eq!(r.integral.points[11], Point::ints(13, 0));
        assert_eq!(r.side, BigInt::from(13));
        assert_eq!(r.denominator, BigInt::from(13));
        let (lo, hi) = r.integral.bounds().unwrap();
        assert_eq!((hi.x - lo.x, hi.y - lo.y), (Rat::from_integer(13.into()), Rat::from_integer(8.into())));
        let r7 = golden_rectangle(7).unwrap();
        assert_eq!(r7.integral.points[1], Point::ints(0, 1));
        assert_eq!(r7.integral.points[6], Point::ints(2, 3));
    }

    #[test]
    fn system_reproduces_positions() {
        for q in 4..=16 {
            let rows = golden_rectangle_system(q).unwrap();
            assert_eq!(rows.len(), 2 * q, "q={q}");
            let a = RatMatrix::from_int_rows(&rows.iter().map(|r| r.0.clone()).collect::<Vec<_>>());
            let b: Vec<Rat> = rows.iter().map(|r| Rat::from_integer(r.1.clone())).collect();
            let sol = solve_exact(&a, &b).unique().expect("unique");
            assert_eq!(Config::from_coords(&sol), golden_rectangle(q).unwrap().integral, "q={q}");
        }
    }

    #[test]
    fn six_partial_nightrider_maps() {
        let p = Piece::named("partial-nightrider").unwrap();
        let cases = [
            ((10, 5), (6, -3), 172),
            ((-6, 3), (4, 8), 110),
            ((10, 5), (4, 8), 158),
            ((6, -3), (10, 5), 152),
            ((4, 8), (-6, 3), 125),
            ((4, 8), (10, 5), 139),
        ];
        for (a, b, want) in cases {
            let c = golden_parallelogram(&p, &LinearMap::new(a, b), 13).unwrap();
            assert_eq!(c.denominator, BigInt::from(want), "{a:?} {b:?}");
        }
    }

    #[test]
    fn identity_on_semiqueen() {
        let p = Piece::named("semiqueen").unwrap();
        let c = golden_parallelogram(&p, &LinearMap::identity(), 12).unwrap();
        assert_eq!(c, golden_rectangle(12).unwrap());
    }

    #[test]
    fn bad_maps() {
        let p = Piece::named("semiqueen").unwrap();
        assert!(golden_parallelogram(&p, &LinearMap::new((1, 0), (2, 0)), 5).is_err());
        assert!(golden_parallelogram(&p, &LinearMap::new((1, 0), (1, 1)), 5).is_err());
        assert!(golden_parallelogram(&Piece::named("rook").unwrap(), &LinearMap::identity(), 5).is_err());
    }
}
