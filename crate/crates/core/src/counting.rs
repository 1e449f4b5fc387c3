//! Exact counts `u_P(q; n)` of nonattacking configurations of `q`
//! unlabelled pieces on the `n × n` board.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exact::Piece;

/// Do pieces at `z1` and `z2` attack each other? Coincident squares count
/// as an attack.
pub fn attacks(piece: &Piece, z1: (i64, i64), z2: (i64, i64)) -> bool {
    piece.attacks_direction(z2.0 - z1.0, z2.1 - z1.1)
}

/// Per-cell line identifiers for every move, so an attack test is a lookup
/// into per-move occupancy counters.
struct LineIndex {
    cells: usize,
    moves: usize,
    /// `line[cell * moves + k]` is a global line slot for move `k`.
    line: Vec<u32>,
    slots: usize,
}

impl LineIndex {
    fn new(piece: &Piece, n: usize) -> LineIndex {
        let n_i = n as i64;
        let cells = n * n;
        let moves = piece.len();
        let mut line = vec![0u32; cells * moves];
        let mut base = 0usize;
        for (k, m) in piece.moves().iter().enumerate() {
            let (c, d) = (m.c(), m.d());
            // d·x − c·y over the grid
            let lo = (d * (n_i - 1)).min(0) - (c * (n_i - 1)).max(0);
            let hi = (d * (n_i - 1)).max(0) - (c * (n_i - 1)).min(0);
            for y in 0..n_i {
                for x in 0..n_i {
                    let cell = (y * n_i + x) as usize;
                    line[cell * moves + k] = (base as i64 + d * x - c * y - lo) as u32;
                }
            }
            base += (hi - lo + 1) as usize;
        }
        LineIndex {
            cells,
            moves,
            line,
            slots: base,
        }
    }

    fn lines_of(&self, cell: usize) -> &[u32] {
        &self.line[cell * self.moves..(cell + 1) * self.moves]
    }

    /// Sizes of all nonempty lines of move `k`.
    fn line_sizes(&self, k: usize) -> Vec<u64> {
        let mut sizes = vec![0u64; self.slots];
        for cell in 0..self.cells {
            sizes[self.lines_of(cell)[k] as usize] += 1;
        }
        sizes.retain(|&s| s > 0);
        sizes
    }
}

struct Search<'a> {
    index: &'a LineIndex,
    occupied: Vec<u16>,
}

impl Search<'_> {
    fn free(&self, cell: usize) -> bool {
        self.index
            .lines_of(cell)
            .iter()
            .all(|&l| self.occupied[l as usize] == 0)
    }

    fn toggle(&mut self, cell: usize, on: bool) {
        for &l in self.index.lines_of(cell) {
            if on {
                self.occupied[l as usize] += 1;
            } else {
                self.occupied[l as usize] -= 1;
            }
        }
    }

    /// Completions with `left` more pieces on cells `>= start`.
    fn count(&mut self, start: usize, left: usize) -> u64 {
        let cells = self.index.cells;
        if left == 1 {
            return (start..cells).filter(|&c| self.free(c)).count() as u64;
        }
        let mut total = 0;
        for cell in start..cells {
            if cells - cell < left {
                break;
            }
            if self.free(cell) {
                self.toggle(cell, true);
                total += self.count(cell + 1, left - 1);
                self.toggle(cell, false);
            }
        }
        total
    }
}

/// Counts q-subsets of the `n × n` grid with no attacking pair by
/// canonical-order backtracking (cells in row-major order, each new cell
/// after the previous one), parallel over the first cell.
pub fn count_unlabeled(piece: &Piece, q: usize, n: usize) -> BigInt {
    assert!(q >= 1 && n >= 1, "count_unlabeled needs q >= 1 and n >= 1");
    let index = LineIndex::new(piece, n);
    if q == 1 {
        return BigInt::from(index.cells);
    }
    let total: u64 = (0..index.cells)
        .into_par_iter()
        .map(|first| {
            let mut s = Search {
                index: &index,
                occupied: vec![0; index.slots],
            };
            s.toggle(first, true);
            s.count(first + 1, q - 1)
        })
        .sum();
    BigInt::from(total)
}

fn binom2(k: u64) -> BigInt {
    BigInt::from(k) * BigInt::from(k.saturating_sub(1)) / 2
}

/// Counts from the line structure alone, where that determines the answer:
/// `q ≤ 2` for any piece (two squares share at most one move line), and
/// any `q` for a one-move piece (its attack graph is a disjoint union of
/// cliques, so the count is an elementary symmetric polynomial of the line
/// sizes). Returns `None` otherwise.
pub fn count_by_lines(piece: &Piece, q: usize, n: usize) -> Option<BigInt> {
    assert!(q >= 1 && n >= 1, "count_by_lines needs q >= 1 and n >= 1");
    let cells = (n * n) as u64;
    if q == 1 {
        return Some(BigInt::from(cells));
    }
    let index = LineIndex::new(piece, n);
    if q == 2 {
        let attacking: BigInt = (0..piece.len())
            .flat_map(|k| index.line_sizes(k))
            .map(binom2)
            .sum();
        return Some(binom2(cells) - attacking);
    }
    if piece.len() != 1 {
        return None;
    }
    // e[j] = number of ways to pick j pieces on distinct lines so far
    let mut e = vec![BigInt::zero(); q + 1];
    e[0] = BigInt::one();
    for size in index.line_sizes(0) {
        for j in (1..=q).rev() {
            let add = &e[j - 1] * size;
            e[j] += add;
        }
    }
    Some(e[q].clone())
}

/// Exact counts `u_P(q; n)` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub piece: Piece,
    pub q: usize,
    entries: Vec<BigInt>,
}

impl CountTable {
    pub fn from_entries(piece: Piece, q: usize, entries: Vec<BigInt>) -> CountTable {
        CountTable { piece, q, entries }
    }

    /// Builds the table, using [`count_by_lines`] where it applies and
    /// backtracking otherwise.
    pub fn build(piece: &Piece, q: usize, n_max: usize) -> CountTable {
        let entries = (1..=n_max)
            .map(|n| count_by_lines(piece, q, n).unwrap_or_else(|| count_unlabeled(piece, q, n)))
            .collect();
        CountTable::from_entries(piece.clone(), q, entries)
    }

    /// Builds the table by backtracking only.
    pub fn build_backtracking(piece: &Piece, q: usize, n_max: usize) -> CountTable {
        let entries = (1..=n_max).map(|n| count_unlabeled(piece, q, n)).collect();
        CountTable::from_entries(piece.clone(), q, entries)
    }

    pub fn n_max(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    /// `(n, u_P(q; n))` pairs in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.entries.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    /// The same table cut off at `n_max`.
    pub fn truncated(&self, n_max: usize) -> CountTable {
        let keep = n_max.min(self.entries.len());
        CountTable::from_entries(self.piece.clone(), self.q, self.entries[..keep].to_vec())
    }
}
