//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Two squares attack when their difference is a multiple of some move.
pub fn attack(moves: &[(i64, i64)], a: (i64, i64), b: (i64, i64)) -> bool {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let g = gcd(dx, dy);
    let (ux, uy) = (dx / g, dy / g);
    moves.iter().any(|&(c, d)| {
        let h = gcd(c, d);
        let (c, d) = (c / h, d / h);
        (ux, uy) == (c, d) || (ux, uy) == (-c, -d)
    })
}

/// Every q-subset of cells, checked pairwise.
pub fn subsets_oracle(moves: &[(i64, i64)], q: usize, n: i64) -> u64 {
    let cells: Vec<(i64, i64)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    fn go(cells: &[(i64, i64)], moves: &[(i64, i64)], start: usize, left: usize, chosen: &mut Vec<(i64, i64)>) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in start..cells.len() {
            if chosen.iter().all(|&c| !attack(moves, c, cells[i])) {
                chosen.push(cells[i]);
                total += go(cells, moves, i + 1, left - 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    go(&cells, moves, 0, q, &mut Vec::new())
}

/// Classic n-queens by columns and diagonals.
pub fn n_queens(n: usize) -> u64 {
    fn place(row: usize, n: usize, cols: &mut [bool], d1: &mut [bool], d2: &mut [bool]) -> u64 {
        if row == n {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            let (a, b) = (row + c, row + n - c);
            if !cols[c] && !d1[a] && !d2[b] {
                cols[c] = true;
                d1[a] = true;
                d2[b] = true;
                total += place(row + 1, n, cols, d1, d2);
                cols[c] = false;
                d1[a] = false;
                d2[b] = false;
            }
        }
        total
    }
    place(0, n, &mut vec![false; n], &mut vec![false; 2 * n], &mut vec![false; 2 * n + 1])
}
