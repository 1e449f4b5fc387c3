//! Vertices of the inside-out polytope `([0,1]^{2q}, A_P)` on the square
//! board.
//!
//! A vertex is a point of the closed cube that is the unique solution of
//! `2q` independent constraints, each a move hyperplane `H^{d/c}_{ij}` or a
//! fixation `x_i, y_i ∈ {0, 1}`. The enumerator walks independent subsets
//! of constraints depth first, keeping the partial system in integer
//! reduced row echelon form. A branch dies as soon as
//!
//! - the new constraint is dependent on the chosen ones,
//! - some coordinate is already pinned outside `[0, 1]`, or
//! - the constraints left cannot lift the rank to `2q`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{rat, Config, Move, Piece, Rat, RowSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
}

/// One equation of a vertex system. Piece indices are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    /// `(z_j − z_i)·m⊥ = 0` with `i < j`.
    Attack { i: usize, j: usize, mv: Move },
    /// `x_piece` or `y_piece` equals `value` (0 or 1).
    Fix { piece: usize, axis: Axis, value: u8 },
}

impl Constraint {
    /// Integer coefficients over `x_1, y_1, …, x_q, y_q` and right-hand side.
    pub fn row(&self, q: usize) -> (Vec<i64>, i64) {
        let mut coeffs = vec![0i64; 2 * q];
        match *self {
            Constraint::Attack { i, j, mv } => {
                let (px, py) = mv.perp();
                coeffs[2 * j] += px;
                coeffs[2 * j + 1] += py;
                coeffs[2 * i] -= px;
                coeffs[2 * i + 1] -= py;
                (coeffs, 0)
            }
            Constraint::Fix { piece, axis, value } => {
                coeffs[2 * piece + usize::from(axis == Axis::Y)] = 1;
                (coeffs, i64::from(value))
            }
        }
    }

    /// Does `cfg` satisfy this constraint?
    pub fn holds(&self, cfg: &Config) -> bool {
        match *self {
            Constraint::Attack { i, j, mv } => cfg.points[i].on_line(&cfg.points[j], &mv),
            Constraint::Fix { piece, axis, value } => {
                let p = &cfg.points[piece];
                let v = if axis == Axis::X { &p.x } else { &p.y };
                *v == rat::int(i64::from(value))
            }
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Attack { i, j, mv } => write!(f, "H^{}_{{{},{}}}", mv.slope(), i + 1, j + 1),
            Constraint::Fix { piece, axis, value } => {
                let a = if *axis == Axis::X { "x" } else { "y" };
                write!(f, "{a}_{}={value}", piece + 1)
            }
        }
    }
}

/// Every move hyperplane (pairs in lexicographic order, then moves in piece
/// order) followed by every fixation, `|M|·q(q−1)/2 + 4q` in total.
pub fn constraints(piece: &Piece, q: usize) -> Vec<Constraint> {
    let mut out = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            for &mv in piece.moves() {
                out.push(Constraint::Attack { i, j, mv });
            }
        }
    }
    for p in 0..q {
        for axis in [Axis::X, Axis::Y] {
            for value in [0, 1] {
                out.push(Constraint::Fix { piece: p, axis, value });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub cfg: Config,
    /// `2q` independent constraints whose unique solution is `cfg`.
    pub active: Vec<Constraint>,
    pub delta: BigInt,
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Maximum number of full-rank systems solved.
    pub budget: u64,
    /// Largest `q` accepted without `allow_large_q`.
    pub max_q: usize,
    pub allow_large_q: bool,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Upper limit imposed by the fixed-width search state.
pub const HARD_MAX_Q: usize = 8;

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: DEFAULT_BUDGET,
            max_q: 4,
            allow_large_q: false,
        }
    }
}

impl EnumOptions {
    pub fn with_budget(budget: u64) -> Self {
        EnumOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Partial system in integer reduced row echelon form: each row is
/// primitive, its pivot is positive and it is zero in every other row's
/// pivot column. Column `W − 1` is the right-hand side.
#[derive(Clone)]
struct Echelon<const W: usize> {
    rows: [[i128; W]; W],
    pivots: [usize; W],
    rank: usize,
}

enum Insert {
    Dependent,
    Added,
}

fn mul_sub<const W: usize>(dst: &mut [i128; W], a: i128, src: &[i128; W], f: i128) -> Result<()> {
    // dst = dst·a − src·f
    for k in 0..W {
        let l = dst[k].checked_mul(a).ok_or(Error::Overflow)?;
        let r = src[k].checked_mul(f).ok_or(Error::Overflow)?;
        dst[k] = l.checked_sub(r).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn make_primitive<const W: usize>(row: &mut [i128; W]) {
    let g = row.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g > 1 {
        row.iter_mut().for_each(|v| *v /= g);
    }
}

impl<const W: usize> Echelon<W> {
    fn new() -> Self {
        Echelon {
            rows: [[0; W]; W],
            pivots: [0; W],
            rank: 0,
        }
    }

    fn insert(&mut self, mut row: [i128; W]) -> Result<Insert> {
        let dim = W - 1;
        for r in 0..self.rank {
            let p = self.pivots[r];
            let f = row[p];
            if f != 0 {
                mul_sub(&mut row, self.rows[r][p], &self.rows[r], f)?;
                make_primitive(&mut row);
            }
        }
        let Some(p) = (0..dim).find(|&k| row[k] != 0) else {
            return Ok(Insert::Dependent);
        };
        if row[p] < 0 {
            row.iter_mut().for_each(|v| *v = -*v);
        }
        for r in 0..self.rank {
            let f = self.rows[r][p];
            if f != 0 {
                let mut tmp = self.rows[r];
                mul_sub(&mut tmp, row[p], &row, f)?;
                make_primitive(&mut tmp);
                self.rows[r] = tmp;
            }
        }
        self.rows[self.rank] = row;
        self.pivots[self.rank] = p;
        self.rank += 1;
        Ok(Insert::Added)
    }

    /// False when some coordinate is pinned outside `[0, 1]`.
    fn pinned_in_cube(&self) -> bool {
        let dim = W - 1;
        (0..self.rank).all(|r| {
            let row = &self.rows[r];
            let p = self.pivots[r];
            let pinned = (0..dim).all(|k| k == p || row[k] == 0);
            !pinned || (row[dim] >= 0 && row[dim] <= row[p])
        })
    }

    /// The solution of a full-rank system as reduced `(num, den)` pairs.
    fn solution(&self) -> Vec<(i128, i128)> {
        let dim = W - 1;
        let mut x = vec![(0i128, 1i128); dim];
        for r in 0..self.rank {
            let p = self.pivots[r];
            let (num, den) = (self.rows[r][dim], self.rows[r][p]);
            let g = num.gcd(&den).max(1);
            x[p] = (num / g, den / g);
        }
        x
    }
}

type Found = BTreeMap<Vec<(i128, i128)>, Vec<usize>>;

struct Searcher<'a, const W: usize> {
    rows: Vec<[i128; W]>,
    suffix_rank: Vec<usize>,
    budget: u64,
    solved: &'a AtomicU64,
    over_budget: &'a AtomicBool,
}

impl<const W: usize> Searcher<'_, W> {
    fn dfs(&self, state: &Echelon<W>, next: usize, chosen: &mut Vec<usize>, found: &mut Found) -> Result<()> {
        let dim = W - 1;
        if state.rank == dim {
            let n = self.solved.fetch_add(1, Ordering::Relaxed) + 1;
            if n > self.budget {
                self.over_budget.store(true, Ordering::Relaxed);
                return Err(Error::BudgetExceeded(self.budget));
            }
            found.entry(state.solution()).or_insert_with(|| chosen.clone());
            return Ok(());
        }
        if self.over_budget.load(Ordering::Relaxed) {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let total = self.rows.len();
        for idx in next..total {
            if state.rank + self.suffix_rank[idx] < dim {
                break;
            }
            let mut s = state.clone();
            if let Insert::Dependent = s.insert(self.rows[idx])? {
                continue;
            }
            if !s.pinned_in_cube() {
                continue;
            }
            chosen.push(idx);
            self.dfs(&s, idx + 1, chosen, found)?;
            chosen.pop();
        }
        Ok(())
    }
}

fn search<const W: usize>(rows_i64: &[(Vec<i64>, i64)], budget: u64) -> Result<(Found, u64)> {
    let dim = W - 1;
    let rows: Vec<[i128; W]> = rows_i64
        .iter()
        .map(|(coeffs, rhs)| {
            let mut r = [0i128; W];
            for (k, &v) in coeffs.iter().enumerate() {
                r[k] = i128::from(v);
            }
            r[dim] = i128::from(*rhs);
            r
        })
        .collect();
    let mut suffix_rank = vec![0usize; rows.len() + 1];
    let mut space = RowSpace::new(dim);
    for idx in (0..rows.len()).rev() {
        space.insert(rows_i64[idx].0.iter().map(|&v| BigInt::from(v)).collect());
        suffix_rank[idx] = space.rank();
    }
    let solved = AtomicU64::new(0);
    let over_budget = AtomicBool::new(false);
    let searcher = Searcher {
        rows,
        suffix_rank,
        budget,
        solved: &solved,
        over_budget: &over_budget,
    };
    let parts: Vec<Result<Found>> = (0..searcher.rows.len())
        .into_par_iter()
        .map(|first| {
            let mut found = Found::new();
            if searcher.suffix_rank[first] < dim {
                return Ok(found);
            }
            let mut s = Echelon::<W>::new();
            s.insert(searcher.rows[first])?;
            if s.pinned_in_cube() {
                let mut chosen = vec![first];
                searcher.dfs(&s, first + 1, &mut chosen, &mut found)?;
            }
            Ok(found)
        })
        .collect();
    let mut merged = Found::new();
    // parts are in first-index order, so the first certificate seen for a
    // point is the lexicographically least one
    for part in parts {
        for (k, v) in part? {
            merged.entry(k).or_insert(v);
        }
    }
    Ok((merged, solved.load(Ordering::Relaxed)))
}

fn dispatch(q: usize, rows: &[(Vec<i64>, i64)], budget: u64) -> Result<(Found, u64)> {
    match q {
        1 => search::<3>(rows, budget),
        2 => search::<5>(rows, budget),
        3 => search::<7>(rows, budget),
        4 => search::<9>(rows, budget),
        5 => search::<11>(rows, budget),
        6 => search::<13>(rows, budget),
        7 => search::<15>(rows, budget),
        8 => search::<17>(rows, budget),
        _ => Err(Error::InvalidInput(format!(
            "vertex enumeration supports q <= {HARD_MAX_Q}"
        ))),
    }
}

fn check_q(q: usize, options: &EnumOptions) -> Result<()> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be at least 1".into()));
    }
    if q > options.max_q && !options.allow_large_q {
        return Err(Error::InvalidInput(format!(
            "q = {q} exceeds the feasibility guard q <= {}; override to proceed",
            options.max_q
        )));
    }
    Ok(())
}

/// Statistics from an enumeration run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub constraints: usize,
    pub systems_solved: u64,
}

/// Enumerates the vertices reachable from an explicit constraint list, in
/// lexicographic order of their coordinates.
pub fn enumerate_from_constraints(
    cons: &[Constraint],
    q: usize,
    options: &EnumOptions,
) -> Result<(Vec<Vertex>, SearchStats)> {
    check_q(q, options)?;
    let rows: Vec<(Vec<i64>, i64)> = cons.iter().map(|c| c.row(q)).collect();
    let (found, solved) = dispatch(q, &rows, options.budget)?;
    let mut vertices: Vec<Vertex> = found
        .into_iter()
        .map(|(sol, chosen)| {
            let coords: Vec<Rat> = sol
                .iter()
                .map(|&(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
                .collect();
            let cfg = Config::from_coords(&coords);
            let mut active: Vec<Constraint> = chosen.iter().map(|&i| cons[i]).collect();
            active.sort();
            let delta = crate::exact::denom(&cfg);
            Vertex { cfg, active, delta }
        })
        .collect();
    vertices.sort_by(|a, b| a.cfg.cmp(&b.cfg));
    Ok((
        vertices,
        SearchStats {
            constraints: cons.len(),
            systems_solved: solved,
        },
    ))
}

/// All vertices of `([0,1]^{2q}, A_P)`, deduplicated by position and sorted
/// lexicographically by coordinates.
pub fn enumerate_vertices(piece: &Piece, q: usize, options: &EnumOptions) -> Result<Vec<Vertex>> {
    enumerate_from_constraints(&constraints(piece, q), q, options).map(|(v, _)| v)
}

/// The polytope denominator `D` and the set of vertex denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorSummary {
    pub denominator: BigInt,
    pub spectrum: BTreeSet<BigInt>,
    pub vertex_count: usize,
}

pub fn summarize(vertices: &[Vertex]) -> DenominatorSummary {
    let spectrum: BTreeSet<BigInt> = vertices.iter().map(|v| v.delta.clone()).collect();
    let denominator = spectrum.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
    DenominatorSummary {
        denominator,
        spectrum,
        vertex_count: vertices.len(),
    }
}

pub fn polytope_denominator(piece: &Piece, q: usize, options: &EnumOptions) -> Result<DenominatorSummary> {
    Ok(summarize(&enumerate_vertices(piece, q, options)?))
}

/// Result of [`is_vertex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCheck {
    pub is_vertex: bool,
    /// Rank of the full set of constraints active at the configuration.
    pub rank: usize,
    /// Independent active constraints, chosen greedily in constraint order;
    /// `2q` of them exactly when `is_vertex`.
    pub certificate: Vec<Constraint>,
}

/// Is `cfg` a vertex, i.e. do the constraints active at it have rank `2q`?
pub fn is_vertex(piece: &Piece, q: usize, cfg: &Config) -> Result<VertexCheck> {
    if cfg.len() != q {
        return Err(Error::InvalidInput(format!(
            "configuration has {} points, expected {q}",
            cfg.len()
        )));
    }
    if !cfg.in_unit_square() {
        return Err(Error::InvalidInput(
            "configuration lies outside [0,1]^2q".into(),
        ));
    }
    let mut space = RowSpace::new(2 * q);
    let mut certificate = Vec::new();
    for c in constraints(piece, q) {
        if c.holds(cfg) && space.insert(c.row(q).0.into_iter().map(BigInt::from).collect()) {
            certificate.push(c);
        }
    }
    let rank = space.rank();
    Ok(VertexCheck {
        is_vertex: rank == 2 * q,
        rank,
        certificate,
    })
}

/// Divisibility of denominators under more pieces and more moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub d_small: BigInt,
    pub d_more_pieces: BigInt,
    pub d_more_moves: BigInt,
    pub holds: bool,
}

/// Checks `D_q(P) | D_{q'}(P)` and `D_q(P) | D_q(P')` for `P ⊆ P'`, `q < q'`.
pub fn monotonicity_check(
    piece: &Piece,
    larger: &Piece,
    q: usize,
    q_more: usize,
    options: &EnumOptions,
) -> Result<MonotonicityReport> {
    if !larger.contains_moves_of(piece) {
        return Err(Error::InvalidInput(
            "the larger piece must contain every move of the smaller".into(),
        ));
    }
    if q_more <= q {
        return Err(Error::InvalidInput("need q < q'".into()));
    }
    let d_small = polytope_denominator(piece, q, options)?.denominator;
    let d_more_pieces = polytope_denominator(piece, q_more, options)?.denominator;
    let d_more_moves = polytope_denominator(larger, q, options)?.denominator;
    let holds = d_more_pieces.is_multiple_of(&d_small) && d_more_moves.is_multiple_of(&d_small);
    Ok(MonotonicityReport {
        d_small,
        d_more_pieces,
        d_more_moves,
        holds,
    })
}

/// Scales an integral configuration into the unit square by `1/n`.
pub fn shrink(cfg: &Config, n: &BigInt) -> Config {
    cfg.scale(&Rat::new(BigInt::one(), n.clone()))
}
