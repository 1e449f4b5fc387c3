//! Explicit vertex configurations with large denominators: the golden
//! rectangle and its parallelogram images for three-move pieces, and
//! discrete and twisted Fibonacci spirals for four-move pieces.

mod bound;
mod golden;
mod spiral;

pub use bound::{exp_lower_bound_check, BoundCheck};
pub use golden::{
    golden_parallelogram, golden_parallelogram_maps, golden_rectangle, golden_rectangle_system,
    semiqueen_alternate_map, trident_maps, LinearMap,
};
pub use spiral::{
    fibonacci_spiral_queens, queen_assignment, spiral_equations, twisted_spiral, twisted_spiral_moves,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{denom, Config, Move, Point, Rat};

/// Fibonacci numbers indexed so that `F_0 = F_1 = 1`.
pub fn fib(i: i64) -> Result<BigInt> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    Ok(fib_u(i as usize))
}

pub(crate) fn fib_u(i: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// A configuration in two forms: integral, translated to touch both axes,
/// and shrunk into the unit square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub integral: Config,
    /// Side of the smallest enclosing square of `integral`.
    pub side: BigInt,
    /// `integral / side`.
    pub cfg: Config,
    /// Δ of `cfg`.
    pub denominator: BigInt,
}

impl Construction {
    /// Normalizes any configuration with at least two distinct points:
    /// translate to the first quadrant, clear denominators, divide out the
    /// common factor.
    pub fn normalize(raw: &Config) -> Result<Construction> {
        let (lo, _) = raw
            .bounds()
            .ok_or_else(|| Error::ConstructionFailure("empty configuration".into()))?;
        let shifted = raw.translate(&Point::new(-lo.x, -lo.y));
        let coords = shifted.coords();
        let l = crate::exact::rat::lcd(coords.iter());
        let ints: Vec<BigInt> = coords
            .iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        if g.is_zero() {
            return Err(Error::ConstructionFailure("all pieces coincide".into()));
        }
        let integral = Config::from_coords(
            &ints
                .iter()
                .map(|v| Rat::from_integer(v / &g))
                .collect::<Vec<_>>(),
        );
        Ok(Construction::from_integral(integral))
    }

    /// For an integral configuration already touching both axes.
    pub fn from_integral(integral: Config) -> Construction {
        let (lo, hi) = integral.bounds().expect("nonempty");
        let side = (&hi.x - &lo.x).max(&hi.y - &lo.y).to_integer();
        let cfg = integral.scale(&Rat::new(BigInt::one(), side.clone()));
        let denominator = denom(&cfg);
        Construction {
            integral,
            side,
            cfg,
            denominator,
        }
    }
}

/// A hyperplane `H^m_{ij}` with one-based piece indices as written.
pub(crate) type Hyperplane = (usize, usize, Move);

/// `(a·i + b, a·i + c)` for every `i ≥ 0` with both indices in `1..=q`.
pub(crate) fn family(q: usize, step: usize, b: usize, c: usize, m: Move, out: &mut Vec<Hyperplane>) {
    for i in 0..=q {
        let (u, v) = (step * i + b, step * i + c);
        if u >= 1 && v >= 1 && u <= q && v <= q {
            out.push((u, v, m));
        }
    }
}

/// Rows `(coefficients, rhs)` over `x_1, y_1, …` for a hyperplane list.
pub(crate) fn hyperplane_rows(q: usize, hs: &[Hyperplane]) -> Vec<(Vec<i64>, i64)> {
    hs.iter()
        .map(|&(i, j, m)| {
            let (px, py) = m.perp();
            let mut r = vec![0i64; 2 * q];
            r[2 * (j - 1)] += px;
            r[2 * (j - 1) + 1] += py;
            r[2 * (i - 1)] -= px;
            r[2 * (i - 1) + 1] -= py;
            (r, 0)
        })
        .collect()
}
