//! Rational convex boards.

use num_traits::{Signed, Zero};

use super::config::Point;
use super::moves::Move;
use super::rat::{self, Rat};
use crate::error::{Error, Result};

/// A strictly convex polygon with rational corners, stored counterclockwise
/// starting from the lexicographically least corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    corners: Vec<Point>,
}

fn cross(ax: &Rat, ay: &Rat, bx: &Rat, by: &Rat) -> Rat {
    ax * by - ay * bx
}

/// Cross product of `b − a` with `p − a`; positive when `p` is left of `a→b`.
fn orient(a: &Point, b: &Point, p: &Point) -> Rat {
    cross(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &a.x), &(&p.y - &a.y))
}

impl Board {
    /// Accepts corners in either cyclic orientation.
    pub fn new(corners: Vec<Point>) -> Result<Board> {
        let n = corners.len();
        if n < 3 {
            return Err(Error::InvalidBoard(format!("{n} corners, need at least 3")));
        }
        let mut corners = corners;
        let area2: Rat = (0..n)
            .map(|i| {
                let (a, b) = (&corners[i], &corners[(i + 1) % n]);
                cross(&a.x, &a.y, &b.x, &b.y)
            })
            .fold(Rat::zero(), |acc, v| acc + v);
        if area2.is_zero() {
            return Err(Error::InvalidBoard("degenerate polygon".into()));
        }
        if area2.is_negative() {
            corners.reverse();
        }
        for i in 0..n {
            let (a, b) = (&corners[i], &corners[(i + 1) % n]);
            for (j, p) in corners.iter().enumerate() {
                if j != i && j != (i + 1) % n && orient(a, b, p) <= Rat::zero() {
                    return Err(Error::InvalidBoard(
                        "corners must form a strictly convex polygon".into(),
                    ));
                }
            }
        }
        let start = (0..n)
            .min_by(|&i, &j| corners[i].cmp(&corners[j]))
            .expect("nonempty");
        corners.rotate_left(start);
        Ok(Board { corners })
    }

    /// The unit square `[0,1]²`.
    pub fn unit_square() -> Board {
        Board::new(vec![
            Point::ints(0, 0),
            Point::ints(1, 0),
            Point::ints(1, 1),
            Point::ints(0, 1),
        ])
        .expect("square is convex")
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    /// Edges as `(start, end)` pairs in counterclockwise order.
    pub fn edges(&self) -> Vec<(&Point, &Point)> {
        let n = self.corners.len();
        (0..n)
            .map(|i| (&self.corners[i], &self.corners[(i + 1) % n]))
            .collect()
    }

    pub fn is_corner(&self, p: &Point) -> bool {
        self.corners.contains(p)
    }

    /// Indices of the edges whose closed segment contains `p`.
    pub fn edges_containing(&self, p: &Point) -> Vec<usize> {
        self.edges()
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| on_segment(a, b, p))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.edges().iter().any(|(a, b)| on_segment(a, b, p))
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.edges().iter().all(|(a, b)| orient(a, b, p) >= Rat::zero())
    }

    /// Strictly inside (off the boundary).
    pub fn contains_interior(&self, p: &Point) -> bool {
        self.edges().iter().all(|(a, b)| orient(a, b, p) > Rat::zero())
    }

    /// Is edge `i` parallel to `m`?
    pub fn edge_parallel(&self, i: usize, m: &Move) -> bool {
        let (a, b) = self.edges()[i];
        cross(
            &(&b.x - &a.x),
            &(&b.y - &a.y),
            &rat::int(m.c()),
            &rat::int(m.d()),
        )
        .is_zero()
    }

    /// The parameter interval `[lo, hi]` of `{p + t·m}` inside the board,
    /// for `p` in the board.
    fn clip(&self, p: &Point, m: &Move) -> (Rat, Rat) {
        let (mx, my) = (rat::int(m.c()), rat::int(m.d()));
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for (a, b) in self.edges() {
            let ex = &b.x - &a.x;
            let ey = &b.y - &a.y;
            let f0 = cross(&ex, &ey, &(&p.x - &a.x), &(&p.y - &a.y));
            let s = cross(&ex, &ey, &mx, &my);
            if s.is_zero() {
                continue;
            }
            let t = -f0 / &s;
            if s.is_positive() {
                if lo.as_ref().is_none_or(|l| t > *l) {
                    lo = Some(t);
                }
            } else if hi.as_ref().is_none_or(|h| t < *h) {
                hi = Some(t);
            }
        }
        (
            lo.expect("bounded board has a lower crossing"),
            hi.expect("bounded board has an upper crossing"),
        )
    }

    /// The other intersection of the line `{p + t·m}` with the boundary.
    ///
    /// Returns `p` itself when the line touches the board only at `p`. When
    /// the line runs along an edge, returns the far endpoint of that edge
    /// (the one in the `+m` direction if `p` is interior to the edge).
    pub fn boundary_exit(&self, p: &Point, m: &Move) -> Result<Point> {
        if !self.on_boundary(p) {
            return Err(Error::NotOnBoundary(p.x.to_string(), p.y.to_string()));
        }
        let (lo, hi) = self.clip(p, m);
        let t = if hi.is_positive() { hi } else { lo };
        Ok(p.along(m, &t))
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if !orient(a, b, p).is_zero() {
        return false;
    }
    let between = |u: &Rat, v: &Rat, w: &Rat| (u <= w && w <= v) || (v <= w && w <= u);
    between(&a.x, &b.x, &p.x) && between(&a.y, &b.y, &p.y)
}
