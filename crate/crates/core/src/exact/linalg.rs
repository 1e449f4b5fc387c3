//! Exact linear algebra over the rationals.
//!
//! Systems are cleared to integer rows and reduced by fraction-free
//! (Bareiss) elimination, so every intermediate entry is a minor of the
//! input and denominators never appear until back substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{self, Rat};

pub type RatVector = Vec<Rat>;

/// A dense `rows × cols` rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RatMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rat]) -> RatVector {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        (0..self.rows)
            .filter(|&i| space.insert_rat(self.row(i)))
            .count()
    }
}

/// Outcome of [`solve_exact`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(RatVector),
    RankDeficient(usize),
    Inconsistent,
}

impl Solution {
    pub fn unique(self) -> Option<RatVector> {
        match self {
            Solution::Unique(x) => Some(x),
            _ => None,
        }
    }
}

/// Scales a rational row to a primitive integer row.
fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let l = rat::lcd(row);
    row.iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

/// Solves `A·x = b` exactly.
///
/// Inconsistency takes precedence over rank deficiency: a system with no
/// solution reports [`Solution::Inconsistent`] whatever its rank.
pub fn solve_exact(a: &RatMatrix, b: &[Rat]) -> Solution {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let (k, m) = (a.rows(), a.cols());
    let mut rows: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let mut r: Vec<Rat> = a.row(i).to_vec();
            r.push(b[i].clone());
            clear_denominators(&r)
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..m {
        if r == k {
            break;
        }
        let Some(p) = (r..k).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let piv = &head[r];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..=m {
                row[j] = (&piv[col] * &row[j] - &f * &piv[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = rows[r][col].clone();
        pivots.push(col);
        r += 1;
    }

    if rows[r..].iter().any(|row| !row[m].is_zero()) {
        return Solution::Inconsistent;
    }
    if r < m {
        return Solution::RankDeficient(r);
    }

    let mut x = vec![Rat::zero(); m];
    for i in (0..m).rev() {
        let row = &rows[i];
        let mut acc = Rat::from_integer(row[m].clone());
        for j in i + 1..m {
            acc -= Rat::from_integer(row[j].clone()) * &x[j];
        }
        x[i] = acc / Rat::from_integer(row[i].clone());
    }
    debug_assert_eq!(pivots, (0..m).collect::<Vec<_>>());
    Solution::Unique(x)
}

/// Incrementally maintained row space of integer vectors, used to track
/// rank and to pick independent subsets.
#[derive(Clone, Debug)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowSpace {
    pub fn new(cols: usize) -> RowSpace {
        RowSpace {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert_rat(&mut self, row: &[Rat]) -> bool {
        self.insert(clear_denominators(row))
    }

    /// Adds `row`; returns false when it is already in the span.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.cols, "dimension mismatch");
        for (p, basis) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let a = basis[*p].clone();
            let f = row[*p].clone();
            for (x, y) in row.iter_mut().zip(basis) {
                *x = &*x * &a - &f * y;
            }
            normalize(&mut row);
        }
        match row.iter().position(|v| !v.is_zero()) {
            Some(p) => {
                if row[p].is_negative() {
                    row.iter_mut().for_each(|v| *v = -&*v);
                }
                self.rows.push((p, row));
                true
            }
            None => false,
        }
    }
}

fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|v| *v = &*v / &g);
    }
}
