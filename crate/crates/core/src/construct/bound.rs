use num_bigint::BigInt;
use num_traits::One;

use super::{fib_u, golden_parallelogram, golden_parallelogram_maps, twisted_spiral_moves, Construction};
use crate::error::{Error, Result};
use crate::exact::{Move, Piece};
use crate::vertex::is_vertex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    /// Largest denominator among certified constructions.
    pub construction_delta: BigInt,
    /// `F_{⌊q/2⌋} − 1`.
    pub bound: BigInt,
    pub holds: bool,
    /// Which construction achieved the maximum.
    pub source: String,
    pub construction: Construction,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(items: &[Move]) -> Vec<Vec<Move>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Builds golden parallelograms (every three moves, all six maps) and, for
/// pieces with four or more moves, twisted spirals (every four moves in
/// every order); keeps the largest denominator among those certified as
/// vertices and compares it with `F_{⌊q/2⌋} − 1`.
pub fn exp_lower_bound_check(piece: &Piece, q: usize) -> Result<BoundCheck> {
    if piece.len() < 3 {
        return Err(Error::InvalidInput("the bound applies to pieces with at least three moves".into()));
    }
    if q < 4 {
        return Err(Error::InvalidInput("need q >= 4".into()));
    }
    let moves = piece.moves();
    let mut candidates: Vec<(String, Construction)> = Vec::new();
    for s in subsets(moves.len(), 3) {
        let (m1, m2, m3) = (&moves[s[0]], &moves[s[1]], &moves[s[2]]);
        for map in golden_parallelogram_maps(m1, m2, m3)? {
            if let Ok(c) = golden_parallelogram(piece, &map, q) {
                candidates.push((format!("golden parallelogram {:?}->{:?}", map.a, map.b), c));
            }
        }
    }
    if moves.len() >= 4 && q >= 5 {
        for s in subsets(moves.len(), 4) {
            let four: Vec<Move> = s.iter().map(|&i| moves[i]).collect();
            for p in permutations(&four) {
                let a = [p[0], p[1], p[2], p[3]];
                if let Ok(c) = twisted_spiral_moves(&a, q) {
                    let label = a.iter().map(Move::slope).collect::<Vec<_>>().join(",");
                    candidates.push((format!("twisted spiral {label}"), c));
                }
            }
        }
    }
    candidates.sort_by(|a, b| b.1.denominator.cmp(&a.1.denominator));
    let bound = fib_u(q / 2) - BigInt::one();
    for (source, c) in candidates {
        if is_vertex(piece, q, &c.cfg)?.is_vertex {
            return Ok(BoundCheck {
                holds: c.denominator >= bound,
                construction_delta: c.denominator.clone(),
                bound,
                source,
                construction: c,
            });
        }
    }
    Err(Error::ConstructionFailure("no construction is a vertex".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_helpers() {
        assert_eq!(subsets(4, 3).len(), 4);
        assert_eq!(permutations(Piece::named("queen").unwrap().moves()).len(), 24);
    }
}
