//! Trajectories of a two-move rider on a convex board.
//!
//! A trajectory is a sequence of boundary points in which consecutive
//! points lie on a common line of one move, the moves alternating. It must
//! stop when it lands on an edge parallel to a move, when it returns to its
//! first point, or when the next line touches the board in a single point.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rat::lcd;
use crate::exact::{solve_exact, Board, Move, Point, Rat, RatMatrix};

/// Cap on the length of generated maximal trajectories; some never stop.
pub const DEFAULT_MAX_LEN: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Trajectory {
    pub points: Vec<Point>,
    pub moves: [Move; 2],
    /// Index into `moves` of the move relating `z_1` and `z_2`.
    pub start_move: usize,
    /// The stopping rule has fired at the last point.
    pub maximal: bool,
}

impl Trajectory {
    pub fn trivial(start: Point, moves: [Move; 2], start_move: usize) -> Trajectory {
        Trajectory {
            points: vec![start],
            moves,
            start_move: start_move % 2,
            maximal: false,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The move taking `z_{k+1}` to `z_{k+2}` (zero-based `k`).
    pub fn move_at(&self, k: usize) -> Move {
        self.moves[(self.start_move + k) % 2]
    }

    /// Returns to its first point.
    pub fn is_closed(&self) -> bool {
        self.points.len() > 1 && self.points.first() == self.points.last()
    }

    /// Number of distinct points, the length charged for a closed cycle.
    pub fn distinct_len(&self) -> usize {
        if self.is_closed() {
            self.points.len() - 1
        } else {
            self.points.len()
        }
    }
}

fn on_parallel_edge(board: &Board, p: &Point, moves: &[Move; 2]) -> bool {
    board
        .edges_containing(p)
        .into_iter()
        .any(|e| moves.iter().any(|m| board.edge_parallel(e, m)))
}

/// Does arriving at `p` force `t` to stop?
fn forced_stop_at(board: &Board, t: &Trajectory, p: &Point) -> bool {
    on_parallel_edge(board, p, &t.moves) || *p == t.points[0]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// One point longer; `maximal` is set if the new point forces a stop.
    Extended(Trajectory),
    /// No further point: already maximal, or the next line exits at once.
    Stopped(Trajectory),
}

pub fn extend_trajectory(board: &Board, t: &Trajectory) -> Result<Extension> {
    if t.is_empty() {
        return Err(Error::InvalidInput("empty trajectory".into()));
    }
    if t.maximal {
        return Ok(Extension::Stopped(t.clone()));
    }
    let last = t.points.last().expect("nonempty");
    let next = board.boundary_exit(last, &t.move_at(t.len() - 1))?;
    if next == *last {
        let mut s = t.clone();
        s.maximal = true;
        return Ok(Extension::Stopped(s));
    }
    let mut u = t.clone();
    u.maximal = forced_stop_at(board, t, &next);
    u.points.push(next);
    Ok(Extension::Extended(u))
}

fn check_moves(m1: &Move, m2: &Move) -> Result<()> {
    if m1.is_parallel(m2) {
        return Err(Error::InvalidInput(format!("moves {m1} and {m2} are parallel")));
    }
    Ok(())
}

/// Extends until the trajectory stops or reaches `cap` points.
pub fn run_to_stop(board: &Board, t: Trajectory, cap: usize) -> Result<Trajectory> {
    let mut t = t;
    while t.len() < cap {
        match extend_trajectory(board, &t)? {
            Extension::Extended(u) => t = u,
            Extension::Stopped(u) => return Ok(u),
        }
    }
    Ok(t)
}

/// Maximal trajectories starting at each corner, with either move first.
pub fn maximal_corner_trajectories(board: &Board, m1: &Move, m2: &Move) -> Result<Vec<Trajectory>> {
    maximal_corner_trajectories_capped(board, m1, m2, DEFAULT_MAX_LEN)
}

/// As [`maximal_corner_trajectories`]; trajectories still running after
/// `cap` points are returned with `maximal == false`.
pub fn maximal_corner_trajectories_capped(
    board: &Board,
    m1: &Move,
    m2: &Move,
    cap: usize,
) -> Result<Vec<Trajectory>> {
    check_moves(m1, m2)?;
    let mut out = Vec::new();
    for c in board.corners() {
        for s in 0..2 {
            let t = Trajectory::trivial(c.clone(), [*m1, *m2], s);
            out.push(run_to_stop(board, t, cap.max(1))?);
        }
    }
    Ok(out)
}

/// Points visited from `start`, ignoring the return-to-start rule.
fn walk(board: &Board, start: &Point, moves: &[Move; 2], first: usize, cap: usize) -> Result<Vec<Point>> {
    let mut pts = vec![start.clone()];
    while pts.len() < cap {
        let last = pts.last().expect("nonempty");
        let next = board.boundary_exit(last, &moves[(first + pts.len() - 1) % 2])?;
        if next == *last {
            break;
        }
        let stop = on_parallel_edge(board, &next, moves);
        pts.push(next);
        if stop {
            break;
        }
    }
    Ok(pts)
}

/// Is `points` a trajectory with respect to the stopping rule? Returns its
/// `maximal` flag if so.
fn admissible(board: &Board, points: &[Point], moves: &[Move; 2], start_move: usize) -> Result<Option<bool>> {
    let l = points.len();
    for k in 1..l.saturating_sub(1) {
        if on_parallel_edge(board, &points[k], moves) || points[k] == points[0] {
            return Ok(None);
        }
    }
    let t = Trajectory {
        points: points.to_vec(),
        moves: *moves,
        start_move,
        maximal: false,
    };
    for k in 0..l - 1 {
        if board.boundary_exit(&points[k], &t.move_at(k))? != points[k + 1] {
            return Ok(None);
        }
    }
    let last = &points[l - 1];
    let maximal = (l > 1 && forced_stop_at(board, &t, last))
        || board.boundary_exit(last, &t.move_at(l - 1))? == *last;
    Ok(Some(maximal))
}

/// Every trajectory of at most `max_len` points that contains a corner,
/// the corner anywhere along it.
pub fn corner_trajectories(board: &Board, m1: &Move, m2: &Move, max_len: usize) -> Result<Vec<Trajectory>> {
    check_moves(m1, m2)?;
    let moves = [*m1, *m2];
    let mut seen = BTreeSet::new();
    for c in board.corners() {
        for s in 0..2 {
            let fwd = walk(board, c, &moves, s, max_len)?;
            let back = walk(board, c, &moves, 1 - s, max_len)?;
            for i in 1..=back.len() {
                for j in 1..=fwd.len() {
                    if i + j - 1 > max_len {
                        break;
                    }
                    let mut pts: Vec<Point> = back[..i].iter().rev().cloned().collect();
                    pts.extend_from_slice(&fwd[1..j]);
                    let start_move = (1 - s + i) % 2;
                    if let Some(maximal) = admissible(board, &pts, &moves, start_move)? {
                        seen.insert(Trajectory {
                            points: pts,
                            moves,
                            start_move,
                            maximal,
                        });
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A closed, corner-free trajectory whose attack and fixation equations
/// determine it uniquely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidCycle {
    /// Closed list, `points[last] == points[0]`.
    pub points: Vec<Point>,
    pub moves: [Move; 2],
    pub start_move: usize,
    /// Board edge of each distinct point.
    pub edges: Vec<usize>,
    /// The certifying system over `x_1, y_1, …, x_k, y_k`.
    pub system: RatMatrix,
    pub rhs: Vec<Rat>,
}

impl RigidCycle {
    pub fn distinct_len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn as_trajectory(&self) -> Trajectory {
        Trajectory {
            points: self.points.clone(),
            moves: self.moves,
            start_move: self.start_move,
            maximal: true,
        }
    }
}

fn cycle_key(points: &[Point]) -> Vec<Point> {
    let k = points.len();
    let mut best: Option<Vec<Point>> = None;
    for dir in [false, true] {
        let base: Vec<Point> = if dir {
            points.iter().rev().cloned().collect()
        } else {
            points.to_vec()
        };
        for r in 0..k {
            let mut v = base.clone();
            v.rotate_left(r);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap_or_default()
}

/// Cycles with an even number `k ≤ max_len` of distinct points, found by
/// enumerating which edge each point lies on and solving the resulting
/// `2k × 2k` system exactly.
pub fn find_rigid_cycles(board: &Board, m1: &Move, m2: &Move, max_len: usize) -> Result<Vec<RigidCycle>> {
    check_moves(m1, m2)?;
    let moves = [*m1, *m2];
    let edges = board.edges();
    // a point on an edge parallel to a move forces a stop
    let usable: Vec<usize> = (0..edges.len())
        .filter(|&e| !moves.iter().any(|m| board.edge_parallel(e, m)))
        .collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for k in (4..=max_len).step_by(2) {
        let mut seq = vec![0usize; k];
        for_each_sequence(&usable, &mut seq, 0, &mut |seq| {
            for s in 0..2 {
                if let Some(cycle) = solve_cycle(board, &moves, s, seq)? {
                    if seen.insert(cycle_key(&cycle.points[..k])) {
                        out.push(cycle);
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok(out)
}

/// Calls `f` for every cyclic sequence over `usable` without two equal
/// neighbours (two points on one edge would be joined along that edge).
fn for_each_sequence(
    usable: &[usize],
    seq: &mut Vec<usize>,
    pos: usize,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let k = seq.len();
    if pos == k {
        if k > 1 && seq[k - 1] == seq[0] {
            return Ok(());
        }
        return f(seq);
    }
    for &e in usable {
        if pos > 0 && seq[pos - 1] == e {
            continue;
        }
        seq[pos] = e;
        for_each_sequence(usable, seq, pos + 1, f)?;
    }
    Ok(())
}

/// Alternating attack equations around the cycle, then one edge equation
/// per point.
fn cycle_system(board: &Board, moves: &[Move; 2], start_move: usize, seq: &[usize]) -> (RatMatrix, Vec<Rat>) {
    let k = seq.len();
    let edges = board.edges();
    let zero = Rat::zero();
    let mut rows = Vec::with_capacity(2 * k);
    let mut rhs = Vec::with_capacity(2 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        let (px, py) = moves[(start_move + i) % 2].perp();
        let mut r = vec![zero.clone(); 2 * k];
        r[2 * j] += Rat::from_integer(px.into());
        r[2 * j + 1] += Rat::from_integer(py.into());
        r[2 * i] -= Rat::from_integer(px.into());
        r[2 * i + 1] -= Rat::from_integer(py.into());
        rows.push(r);
        rhs.push(zero.clone());
    }
    for (i, &e) in seq.iter().enumerate() {
        // (b − a) × (p − a) = 0
        let (a, b) = edges[e];
        let ex = &b.x - &a.x;
        let ey = &b.y - &a.y;
        let mut r = vec![zero.clone(); 2 * k];
        r[2 * i] = -ey.clone();
        r[2 * i + 1] = ex.clone();
        rows.push(r);
        rhs.push(&ex * &a.y - &ey * &a.x);
    }
    (RatMatrix::from_rows(rows), rhs)
}

fn solve_cycle(board: &Board, moves: &[Move; 2], start_move: usize, seq: &[usize]) -> Result<Option<RigidCycle>> {
    let k = seq.len();
    let (system, rhs) = cycle_system(board, moves, start_move, seq);
    let Some(sol) = solve_exact(&system, &rhs).unique() else {
        return Ok(None);
    };
    let pts: Vec<Point> = (0..k)
        .map(|i| Point::new(sol[2 * i].clone(), sol[2 * i + 1].clone()))
        .collect();
    for (i, p) in pts.iter().enumerate() {
        if !board.edges_containing(p).contains(&seq[i]) || board.is_corner(p) {
            return Ok(None);
        }
    }
    let distinct: BTreeSet<&Point> = pts.iter().collect();
    if distinct.len() != k {
        return Ok(None);
    }
    let mut closed = pts.clone();
    closed.push(pts[0].clone());
    if admissible(board, &closed, moves, start_move)?.is_none() {
        return Ok(None);
    }
    Ok(Some(RigidCycle {
        points: closed,
        moves: *moves,
        start_move,
        edges: seq.to_vec(),
        system,
        rhs,
    }))
}

/// An interior point where two extended trajectories cross. `l1` and `l2`
/// are the shortest lengths of the two trajectories whose extensions
/// contain the crossing segments (for a closed cycle, its number of
/// distinct points).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Crossing {
    pub point: Point,
    pub l1: usize,
    pub l2: usize,
}

/// A segment of an extended trajectory with the length needed to reach it.
#[derive(Clone, Debug)]
struct Segment {
    a: Point,
    b: Point,
    need: usize,
}

fn extended_segments(board: &Board, t: &Trajectory) -> Result<Vec<Segment>> {
    let mut segs = Vec::new();
    let closed = t.is_closed();
    for k in 0..t.len().saturating_sub(1) {
        segs.push(Segment {
            a: t.points[k].clone(),
            b: t.points[k + 1].clone(),
            need: if closed { t.distinct_len() } else { k + 1 },
        });
    }
    if !closed {
        let last = t.points.last().expect("nonempty");
        let next = board.boundary_exit(last, &t.move_at(t.len() - 1))?;
        if next != *last {
            segs.push(Segment {
                a: last.clone(),
                b: next,
                need: t.len(),
            });
        }
    }
    Ok(segs)
}

/// Intersection of two chords if it is a single point inside the board.
fn chord_crossing(board: &Board, s: &Segment, t: &Segment) -> Option<Point> {
    let (dx1, dy1) = (&s.b.x - &s.a.x, &s.b.y - &s.a.y);
    let (dx2, dy2) = (&t.b.x - &t.a.x, &t.b.y - &t.a.y);
    let det = &dx1 * &dy2 - &dy1 * &dx2;
    if det.is_zero() {
        return None;
    }
    let (rx, ry) = (&t.a.x - &s.a.x, &t.a.y - &s.a.y);
    let u = (&rx * &dy2 - &ry * &dx2) / &det;
    let v = (&rx * &dy1 - &ry * &dx1) / &det;
    let unit = |r: &Rat| *r >= Rat::zero() && *r <= Rat::one();
    if !unit(&u) || !unit(&v) {
        return None;
    }
    let p = Point::new(&s.a.x + &u * &dx1, &s.a.y + &u * &dy1);
    board.contains_interior(&p).then_some(p)
}

/// Interior crossings of the extensions of `t1` and `t2`; when they are the
/// same trajectory, its self-crossings.
pub fn crossing_points(board: &Board, t1: &Trajectory, t2: &Trajectory) -> Result<Vec<Crossing>> {
    let s1 = extended_segments(board, t1)?;
    let s2 = extended_segments(board, t2)?;
    let same = t1 == t2;
    let mut out = BTreeSet::new();
    for (i, a) in s1.iter().enumerate() {
        for (j, b) in s2.iter().enumerate() {
            if same && j <= i {
                continue;
            }
            if let Some(p) = chord_crossing(board, a, b) {
                out.insert(Crossing {
                    point: p,
                    l1: a.need,
                    l2: b.need,
                });
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn point_lcd(points: &[Point]) -> BigInt {
    lcd(points.iter().flat_map(|p| [&p.x, &p.y]))
}

/// Components of the two-move denominator, kept apart for reporting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DenominatorSources {
    pub boundary: BigInt,
    pub crossings: BigInt,
    pub corner_trajectories: usize,
    pub rigid_cycles: usize,
}

impl DenominatorSources {
    pub fn total(&self) -> BigInt {
        self.boundary.lcm(&self.crossings)
    }
}

/// The lcm of (1) denominators of boundary points on corner trajectories
/// and rigid cycles with at most `q` points, and (2) denominators of
/// crossing points whose trajectories fit in `q − 1` points (summed over the
/// two trajectories, or for a self-crossing the one trajectory).
pub fn arvind_sources(board: &Board, m1: &Move, m2: &Move, q: usize) -> Result<DenominatorSources> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be at least 1".into()));
    }
    let trajs = corner_trajectories(board, m1, m2, q)?;
    let cycles = find_rigid_cycles(board, m1, m2, q)?;
    let mut boundary = point_lcd(board.corners());
    for t in &trajs {
        boundary = boundary.lcm(&point_lcd(&t.points));
    }
    for c in &cycles {
        boundary = boundary.lcm(&point_lcd(&c.points));
    }

    let mut crossings = BigInt::one();
    // cheapest length at which each chord is available
    let mut chord_cost: BTreeMap<(Point, Point), usize> = BTreeMap::new();
    let all: Vec<Trajectory> = trajs
        .iter()
        .cloned()
        .chain(cycles.iter().map(RigidCycle::as_trajectory))
        .collect();
    for t in all.iter().filter(|t| t.distinct_len() < q) {
        for c in crossing_points(board, t, t)? {
            if c.l1.max(c.l2) < q {
                crossings = crossings.lcm(&c.point.denom());
            }
        }
        let l = t.distinct_len();
        for s in extended_segments(board, t)? {
            let key = if s.a <= s.b { (s.a, s.b) } else { (s.b, s.a) };
            let e = chord_cost.entry(key).or_insert(l);
            *e = (*e).min(l);
        }
    }
    let chords: Vec<(Segment, usize)> = chord_cost
        .into_iter()
        .map(|((a, b), need)| (Segment { a, b, need }, need))
        .collect();
    for (i, (a, ca)) in chords.iter().enumerate() {
        for (b, cb) in &chords[i + 1..] {
            if ca + cb < q {
                if let Some(p) = chord_crossing(board, a, b) {
                    crossings = crossings.lcm(&p.denom());
                }
            }
        }
    }
    Ok(DenominatorSources {
        boundary,
        crossings,
        corner_trajectories: trajs.len(),
        rigid_cycles: cycles.len(),
    })
}

pub fn arvind_denominator(board: &Board, m1: &Move, m2: &Move, q: usize) -> Result<BigInt> {
    Ok(arvind_sources(board, m1, m2, q)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(c: i64, d: i64) -> Move {
        Move::new(c, d).unwrap()
    }

    fn sq() -> Board {
        Board::unit_square()
    }

    #[test]
    fn zigzag_steps() {
        let moves = [mv(1, 0), mv(13, 4)];
        let t = Trajectory::trivial(Point::ints(0, 0), moves, 1);
        let Extension::Extended(t) = extend_trajectory(&sq(), &t).unwrap() else {
            panic!("should extend")
        };
        assert_eq!(t.points[1], Point::rats((1, 1), (4, 13)));
        let Extension::Extended(t) = extend_trajectory(&sq(), &t).unwrap() else {
            panic!("should extend")
        };
        assert_eq!(t.points[2], Point::rats((0, 1), (4, 13)));
        let full = run_to_stop(&sq(), t, 64).unwrap();
        assert_eq!(full.len(), 8);
        assert!(full.maximal);
        assert_eq!(full.points[7], Point::rats((1, 4), (1, 1)));
    }

    #[test]
    fn corner_maximals() {
        let ts = maximal_corner_trajectories(&sq(), &mv(1, 0), &mv(2, 5)).unwrap();
        let want = vec![Point::ints(0, 0), Point::rats((2, 5), (1, 1))];
        assert!(ts.iter().any(|t| t.points == want));
        let ts = maximal_corner_trajectories(&sq(), &mv(1, 0), &mv(1, 1)).unwrap();
        assert!(ts.iter().any(|t| t.points == vec![Point::ints(0, 0), Point::ints(1, 1)]));
    }

    #[test]
    fn bishop_cycle_and_crossing() {
        // the midpoint diamond closes up, but it sits in a one-parameter
        // family of inscribed rectangles, so it is not rigid
        assert!(find_rigid_cycles(&sq(), &mv(1, 1), &mv(1, -1), 8).unwrap().is_empty());
        let (sys, _) = cycle_system(&sq(), &[mv(1, 1), mv(1, -1)], 0, &[0, 1, 2, 3]);
        assert_eq!(sys.rank(), 7);

        let moves = [mv(1, 1), mv(1, -1)];
        let a = Trajectory {
            points: vec![Point::ints(0, 0), Point::ints(1, 1)],
            moves,
            start_move: 0,
            maximal: true,
        };
        let b = Trajectory {
            points: vec![Point::ints(1, 0), Point::ints(0, 1)],
            moves,
            start_move: 1,
            maximal: true,
        };
        let c = crossing_points(&sq(), &a, &b).unwrap();
        assert_eq!(
            c,
            vec![Crossing {
                point: Point::rats((1, 2), (1, 2)),
                l1: 1,
                l2: 1
            }]
        );
        assert_eq!(arvind_denominator(&sq(), &mv(1, 1), &mv(1, -1), 3).unwrap(), BigInt::from(2));
        assert_eq!(arvind_denominator(&sq(), &mv(1, 1), &mv(1, -1), 2).unwrap(), BigInt::one());
    }

    #[test]
    fn no_cycles_with_axis_move() {
        assert!(find_rigid_cycles(&sq(), &mv(1, 0), &mv(3, 2), 8).unwrap().is_empty());
        assert!(find_rigid_cycles(&sq(), &mv(1, 0), &mv(0, 1), 8).unwrap().is_empty());
    }

    #[test]
    fn horizontal_family() {
        assert_eq!(arvind_denominator(&sq(), &mv(1, 0), &mv(13, 4), 8).unwrap(), BigInt::from(52));
        assert_eq!(arvind_denominator(&sq(), &mv(1, 0), &mv(13, 4), 7).unwrap(), BigInt::from(13));
        assert_eq!(arvind_denominator(&sq(), &mv(1, 0), &mv(1, 1), 6).unwrap(), BigInt::one());
    }

    #[test]
    fn parallel_moves_rejected() {
        assert!(maximal_corner_trajectories(&sq(), &mv(1, 1), &mv(2, 2)).is_err());
    }
}
