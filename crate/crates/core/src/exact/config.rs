//! Points and configurations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::moves::Move;
use super::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Point {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Point {
        Point::new(rat::int(x), rat::int(y))
    }

    pub fn rats(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(rat::rat(x.0, x.1), rat::rat(y.0, y.1))
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, s: &Rat) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    /// Point `self + t·m`.
    pub fn along(&self, m: &Move, t: &Rat) -> Point {
        Point::new(
            &self.x + t * Rat::from_integer(m.c().into()),
            &self.y + t * Rat::from_integer(m.d().into()),
        )
    }

    /// Is `other − self` parallel to `m` (or zero)?
    pub fn on_line(&self, other: &Point, m: &Move) -> bool {
        let (px, py) = m.perp();
        let diff = other.sub(self);
        (diff.x * Rat::from_integer(px.into()) + diff.y * Rat::from_integer(py.into())).is_zero()
    }

    pub fn denom(&self) -> BigInt {
        rat::lcd([&self.x, &self.y])
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An ordered list of piece positions `z_1, …, z_q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Config {
    pub points: Vec<Point>,
}

impl Config {
    pub fn new(points: Vec<Point>) -> Config {
        Config { points }
    }

    pub fn from_ints(points: &[(i64, i64)]) -> Config {
        Config::new(points.iter().map(|&(x, y)| Point::ints(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinates in the order `x_1, y_1, x_2, y_2, …`.
    pub fn coords(&self) -> Vec<Rat> {
        self.points
            .iter()
            .flat_map(|p| [p.x.clone(), p.y.clone()])
            .collect()
    }

    pub fn from_coords(coords: &[Rat]) -> Config {
        assert!(coords.len().is_multiple_of(2), "coordinate list must have even length");
        Config::new(
            coords
                .chunks(2)
                .map(|c| Point::new(c[0].clone(), c[1].clone()))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> Config {
        Config::new(self.points.iter().map(|p| p.scale(s)).collect())
    }

    pub fn translate(&self, by: &Point) -> Config {
        Config::new(self.points.iter().map(|p| p.add(by)).collect())
    }

    /// Lower-left and upper-right corners of the bounding box.
    pub fn bounds(&self) -> Option<(Point, Point)> {
        let first = self.points.first()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for p in &self.points[1..] {
            if p.x < lo.x {
                lo.x = p.x.clone();
            }
            if p.y < lo.y {
                lo.y = p.y.clone();
            }
            if p.x > hi.x {
                hi.x = p.x.clone();
            }
            if p.y > hi.y {
                hi.y = p.y.clone();
            }
        }
        Some((lo, hi))
    }

    pub fn in_unit_square(&self) -> bool {
        self.points
            .iter()
            .all(|p| rat::in_unit_interval(&p.x) && rat::in_unit_interval(&p.y))
    }
}

/// Δ(z): the least common multiple of all coordinate denominators, i.e. the
/// least `N` for which `N·z` is integral.
pub fn denom(cfg: &Config) -> BigInt {
    rat::lcd(cfg.points.iter().flat_map(|p| [&p.x, &p.y]))
}
