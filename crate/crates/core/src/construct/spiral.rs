use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{family, hyperplane_rows, Construction, Hyperplane};
use crate::error::{Error, Result};
use crate::exact::{solve_exact, Config, Move, Piece, Rat, RatMatrix, Solution};

/// The spiral move equations for moves `m1..m4`:
/// `H^{m1}_{2i,2i+1}`, `H^{m2}_{2i+1,2i+2}`, `H^{m3}_{1,3}`,
/// `H^{m3}_{2i,2i+3}`, `H^{m4}_{2i+1,2i+4}`, for all indices in `1..=q`.
pub fn spiral_equations(assignment: &[Move; 4], q: usize) -> Vec<(usize, usize, Move)> {
    let [m1, m2, m3, m4] = *assignment;
    let mut hs: Vec<Hyperplane> = Vec::new();
    family(q, 2, 0, 1, m1, &mut hs);
    family(q, 2, 1, 2, m2, &mut hs);
    if q >= 3 {
        hs.push((1, 3, m3));
    }
    family(q, 2, 0, 3, m3, &mut hs);
    family(q, 2, 1, 4, m4, &mut hs);
    hs
}

/// The assignment that turns the spiral equations into the queen's
/// discrete Fibonacci spiral.
pub fn queen_assignment() -> [Move; 4] {
    [
        Move::new(1, 1).expect("valid"),
        Move::new(1, -1).expect("valid"),
        Move::new(0, 1).expect("valid"),
        Move::new(1, 0).expect("valid"),
    ]
}

fn to_rats(rows: Vec<(Vec<i64>, i64)>) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let r = |v: i64| Rat::from_integer(v.into());
    rows.into_iter()
        .map(|(c, b)| (c.into_iter().map(r).collect(), r(b)))
        .unzip()
}

/// The discrete Fibonacci spiral of `q` queens, solved from its move
/// equations and three fixations on the unit square.
pub fn fibonacci_spiral_queens(q: usize) -> Result<Construction> {
    if q < 4 {
        return Err(Error::InvalidInput("the queen spiral needs q >= 4".into()));
    }
    let hs = spiral_equations(&queen_assignment(), q);
    let (mut a, mut b) = to_rats(hyperplane_rows(q, &hs));
    let x = |i: usize| 2 * (i - 1);
    let y = |i: usize| 2 * (i - 1) + 1;
    let fixes: [(usize, i64); 3] = match q % 4 {
        0 => [(x(q), 0), (y(q - 1), 0), (x(q - 2), 1)],
        1 => [(x(q), 0), (y(q), 0), (x(q - 2), 1)],
        2 => [(x(q), 1), (y(q), 0), (x(q - 2), 0)],
        _ => [(y(q), 1), (x(q - 1), 0), (y(q - 2), 0)],
    };
    for (idx, v) in fixes {
        let mut r = vec![Rat::zero(); 2 * q];
        r[idx] = Rat::one();
        a.push(r);
        b.push(Rat::from_integer(v.into()));
    }
    let sol = match solve_exact(&RatMatrix::from_rows(a), &b) {
        Solution::Unique(s) => s,
        other => {
            return Err(Error::ConstructionFailure(format!(
                "queen spiral system for q = {q} is not uniquely solvable: {other:?}"
            )))
        }
    };
    // for q ≡ 1 (mod 4) these fixations put the spiral outside the square;
    // the shape is still determined, so normalizing places it back inside
    Construction::normalize(&Config::from_coords(&sol))
}

/// A twisted Fibonacci spiral for the moves in the given order; the
/// configuration is the smallest integral one, placed in the first
/// quadrant touching both axes.
pub fn twisted_spiral_moves(assignment: &[Move; 4], q: usize) -> Result<Construction> {
    if q < 4 {
        return Err(Error::InvalidInput("twisted spirals need q >= 4".into()));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if assignment[i].is_parallel(&assignment[j]) {
                return Err(Error::InvalidInput("assignment repeats a move".into()));
            }
        }
    }
    let hs = spiral_equations(assignment, q);
    let (base_a, base_b) = to_rats(hyperplane_rows(q, &hs));
    // the equations fix the shape up to translation and scale; pin z_1 at
    // the origin and some other coordinate at 1
    for k in 2..2 * q {
        let mut a = base_a.clone();
        let mut b = base_b.clone();
        for (idx, v) in [(0, 0), (1, 0), (k, 1)] {
            let mut r = vec![Rat::zero(); 2 * q];
            r[idx] = Rat::one();
            a.push(r);
            b.push(Rat::from_integer(BigInt::from(v)));
        }
        match solve_exact(&RatMatrix::from_rows(a), &b) {
            Solution::Unique(s) => {
                let c = Construction::normalize(&Config::from_coords(&s))?;
                // the shape is only defined up to a half turn; pick one
                let turned = Construction::normalize(&c.integral.scale(&-Rat::one()))?;
                return Ok(if turned.integral < c.integral { turned } else { c });
            }
            Solution::Inconsistent => continue,
            Solution::RankDeficient(r) => {
                return Err(Error::ConstructionFailure(format!(
                    "spiral equations leave {} degrees of freedom",
                    2 * q - r
                )))
            }
        }
    }
    Err(Error::ConstructionFailure("spiral collapses to a point".into()))
}

/// [`twisted_spiral_moves`] for a four-move piece and an ordering of its
/// moves.
pub fn twisted_spiral(piece: &Piece, assignment: &[Move; 4], q: usize) -> Result<Construction> {
    if piece.len() != 4 {
        return Err(Error::InvalidInput("twisted spirals need a four-move piece".into()));
    }
    let given: std::collections::BTreeSet<Move> = assignment.iter().copied().collect();
    if given != piece.move_set() {
        return Err(Error::InvalidInput(
            "assignment must be a permutation of the piece's moves".into(),
        ));
    }
    if q < 5 {
        return Err(Error::InvalidInput("twisted spirals need q >= 5".into()));
    }
    twisted_spiral_moves(assignment, q)
}
