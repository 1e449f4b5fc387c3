//! The `riderlab` command line.
//!
//! Every command prints (or writes with `--out`) one JSON document with
//! sorted keys, or a CSV table with `--format csv`. Exit codes: 0 success,
//! 1 verification mismatch or I/O failure, 2 invalid input, 3 search budget
//! exceeded.

pub mod output;
pub mod render;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use riderlab_core::closed_forms::{one_move_denominator, two_move_horizontal_denominator};
use riderlab_core::construct::{
    exp_lower_bound_check, fibonacci_spiral_queens, golden_parallelogram, golden_rectangle,
    twisted_spiral, Construction, LinearMap,
};
use riderlab_core::counting::{count_unlabeled, CountTable};
use riderlab_core::quasipoly::detect_period;
use riderlab_core::trajectory::{
    arvind_sources, find_rigid_cycles, maximal_corner_trajectories,
};
use riderlab_core::vertex::{
    enumerate_vertices, is_vertex, polytope_denominator, EnumOptions, DEFAULT_BUDGET,
};
use riderlab_core::{exact::rat, Board, Config, Error, Move, Piece};
use serde_json::{json, Value};

use output::{config_json, csv, int_json, integral_json, rat_str, write_atomic};

#[derive(Parser, Debug)]
#[command(name = "riderlab", version, about = "Exact computations for nonattacking riders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumeration,
    Trajectory,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    GoldenRectangle,
    GoldenParallelogram,
    QueenSpiral,
    TwistedSpiral,
    Bound,
}

#[derive(clap::Args, Debug, Clone)]
struct SearchArgs {
    /// Maximum number of vertex systems solved.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Lift the q <= 4 guard on vertex enumeration.
    #[arg(long)]
    allow_large_q: bool,
}

impl SearchArgs {
    fn options(&self) -> EnumOptions {
        EnumOptions {
            budget: self.budget,
            allow_large_q: self.allow_large_q,
            ..Default::default()
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    piece: Option<String>,
    #[arg(long)]
    q: usize,
    /// Images of (1,0) and (0,1) as `a1,a2,b1,b2`.
    #[arg(long, allow_hyphen_values = true)]
    map: Option<String>,
    /// Four slopes `d/c` in spiral order.
    #[arg(long, allow_hyphen_values = true)]
    assignment: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count nonattacking configurations on n × n boards.
    Count {
        /// Catalog name or comma-separated slopes `d/c`.
        #[arg(long, allow_hyphen_values = true)]
        piece: String,
        #[arg(long)]
        q: usize,
        /// A single n or a range `a..b` (inclusive).
        #[arg(long)]
        n: String,
    },
    /// Fit a quasipolynomial to the counts and report its period.
    Period {
        #[arg(long, allow_hyphen_values = true)]
        piece: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n_max: usize,
        /// Largest period tried (default: as many as the data allows).
        #[arg(long)]
        p_max: Option<usize>,
        /// Skip the polytope denominator comparison.
        #[arg(long)]
        no_denominator: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// List the vertices of the inside-out polytope.
    Vertices {
        #[arg(long, allow_hyphen_values = true)]
        piece: String,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The polytope denominator and vertex denominator spectrum.
    Denominator {
        #[arg(long, allow_hyphen_values = true)]
        piece: String,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Method::Enumeration)]
        method: Method,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Corner trajectories, rigid cycles and the two-move denominator.
    Trajectory {
        #[arg(long, allow_hyphen_values = true)]
        piece: String,
        #[arg(long)]
        q: usize,
    },
    /// Build an explicit high-denominator configuration.
    Construct(ConstructArgs),
    /// Run a cross-validation battery.
    Verify {
        #[arg(long, default_value = "known")]
        suite: String,
    },
    /// Draw a construction or an explicit configuration as SVG.
    Render {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, allow_hyphen_values = true)]
        piece: Option<String>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        map: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        assignment: Option<String>,
        /// Explicit integral points `x,y;x,y;…` instead of a construction.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        /// Grid side for `--points` (default: the bounding square).
        #[arg(long)]
        side: Option<u64>,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if matches!(e, Error::BudgetExceeded(_)) { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: msg.into(),
    }
}

/// What a command produced.
pub struct Outcome {
    pub json: Value,
    pub csv: String,
    /// Raw document that replaces JSON/CSV (used by `render`).
    pub raw: Option<String>,
    pub code: i32,
}

impl Outcome {
    fn new(json: Value, csv: String) -> Outcome {
        Outcome {
            json,
            csv,
            raw: None,
            code: 0,
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn configure_threads() {
    if let Some(n) = std::env::var("RIDERLAB_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // the pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs the command line, writing to standard output and error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    configure_threads();
    let result = dispatch(&cli.command);
    let outcome = match result {
        Ok(o) => o,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    let body = match (&outcome.raw, cli.format) {
        (Some(raw), _) => raw.clone(),
        (None, Format::Json) => format!("{}\n", outcome.json),
        (None, Format::Csv) => outcome.csv.clone(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, body.as_bytes()) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = out.write_all(body.as_bytes());
        }
    }
    outcome.code
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Count { piece, q, n } => cmd_count(&Piece::parse(piece)?, *q, n),
        Command::Period {
            piece,
            q,
            n_max,
            p_max,
            no_denominator,
            search,
        } => cmd_period(&Piece::parse(piece)?, *q, *n_max, *p_max, *no_denominator, search),
        Command::Vertices { piece, q, search } => cmd_vertices(&Piece::parse(piece)?, *q, search),
        Command::Denominator {
            piece,
            q,
            method,
            search,
        } => cmd_denominator(&Piece::parse(piece)?, *q, *method, search),
        Command::Trajectory { piece, q } => cmd_trajectory(&Piece::parse(piece)?, *q),
        Command::Construct(args) => cmd_construct(args),
        Command::Verify { suite } => verify::run_suite(suite),
        Command::Render {
            kind,
            piece,
            q,
            map,
            assignment,
            points,
            side,
        } => cmd_render(kind, piece, q, map, assignment, points, side),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || invalid(format!("malformed n `{s}`, expected N or A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn check_q(q: usize) -> Result<(), Failure> {
    if q == 0 {
        return Err(invalid("q must be at least 1"));
    }
    Ok(())
}

fn cmd_count(piece: &Piece, q: usize, n: &str) -> CmdResult {
    check_q(q)?;
    let (a, b) = parse_range(n)?;
    let counts: Vec<(usize, BigInt)> = (a..=b).map(|n| (n, count_unlabeled(piece, q, n))).collect();
    let rows: Vec<Vec<String>> = counts.iter().map(|(n, c)| vec![n.to_string(), c.to_string()]).collect();
    let json = if a == b {
        json!({ "count": counts[0].1.to_string() })
    } else {
        json!({
            "counts": counts.iter().map(|(n, c)| json!({"n": n, "count": c.to_string()})).collect::<Vec<_>>(),
        })
    };
    Ok(Outcome::new(json, csv(&["n", "count"], &rows)))
}

fn cmd_period(
    piece: &Piece,
    q: usize,
    n_max: usize,
    p_max: Option<usize>,
    no_denominator: bool,
    search: &SearchArgs,
) -> CmdResult {
    check_q(q)?;
    let degree = 2 * q;
    let p_max = p_max.unwrap_or(n_max / (degree + 2)).max(1);
    let denominator = if no_denominator {
        None
    } else {
        Some(polytope_denominator(piece, q, &search.options())?.denominator)
    };
    let table = CountTable::build(piece, q, n_max);
    let qp = detect_period(&table, degree, p_max, denominator.as_ref())?;
    let constituents: Vec<Value> = qp
        .constituents
        .iter()
        .map(|c| Value::Array(c.iter().map(|r| json!(rat_str(r))).collect()))
        .collect();
    let mut obj = json!({
        "period": qp.period,
        "degree": qp.degree,
        "constituents": constituents,
    });
    let mut rows = Vec::new();
    for (r, c) in qp.constituents.iter().enumerate() {
        for (k, v) in c.iter().enumerate() {
            rows.push(vec![r.to_string(), k.to_string(), rat_str(v)]);
        }
    }
    if let Some(d) = &denominator {
        obj["D"] = int_json(d);
        obj["equal"] = json!(BigInt::from(qp.period) == *d);
    }
    Ok(Outcome::new(obj, csv(&["residue", "power", "coefficient"], &rows)))
}

fn cmd_vertices(piece: &Piece, q: usize, search: &SearchArgs) -> CmdResult {
    check_q(q)?;
    let vs = enumerate_vertices(piece, q, &search.options())?;
    let list: Vec<Value> = vs
        .iter()
        .map(|v| {
            json!({
                "points": config_json(&v.cfg),
                "delta": int_json(&v.delta),
                "active": v.active.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let rows: Vec<Vec<String>> = vs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let coords: Vec<String> = v.cfg.coords().iter().map(rat_str).collect();
            vec![i.to_string(), v.delta.to_string(), coords.join(" ")]
        })
        .collect();
    Ok(Outcome::new(
        json!({ "count": vs.len(), "vertices": list }),
        csv(&["index", "delta", "coordinates"], &rows),
    ))
}

fn two_moves(piece: &Piece) -> Result<(Move, Move), Failure> {
    match piece.moves() {
        [a, b] => Ok((*a, *b)),
        _ => Err(invalid("this method needs a piece with exactly two moves")),
    }
}

fn cmd_denominator(piece: &Piece, q: usize, method: Method, search: &SearchArgs) -> CmdResult {
    check_q(q)?;
    let sq = Board::unit_square();
    let (d, spectrum) = match method {
        Method::Enumeration => {
            let s = polytope_denominator(piece, q, &search.options())?;
            (s.denominator, Some(s.spectrum))
        }
        Method::Trajectory => {
            let (a, b) = two_moves(piece)?;
            (arvind_sources(&sq, &a, &b, q)?.total(), None)
        }
        Method::ClosedForm => match piece.moves() {
            [m] => (one_move_denominator(&sq, m, q)?, None),
            [a, b] => {
                let other = if *a == Move::new(1, 0)? {
                    b
                } else if *b == Move::new(1, 0)? {
                    a
                } else {
                    return Err(invalid("closed form needs a one-move piece or moves (1,0) and (c,d)"));
                };
                if other.c() == 0 {
                    return Err(invalid("closed form needs (c,d) with c, d nonzero"));
                }
                (two_move_horizontal_denominator(other.c().abs(), other.d().abs(), q)?, None)
            }
            _ => return Err(invalid("closed form needs a one-move or two-move piece")),
        },
    };
    let mut obj = json!({ "D": int_json(&d) });
    let mut rows = vec![vec!["D".to_string(), d.to_string()]];
    if let Some(spec) = spectrum {
        obj["spectrum"] = Value::Array(spec.iter().map(int_json).collect());
        rows.extend(spec.iter().map(|s| vec!["spectrum".to_string(), s.to_string()]));
    }
    Ok(Outcome::new(obj, csv(&["key", "value"], &rows)))
}

fn trajectory_json(points: &[riderlab_core::Point]) -> Value {
    Value::Array(points.iter().map(output::point_json).collect())
}

fn cmd_trajectory(piece: &Piece, q: usize) -> CmdResult {
    check_q(q)?;
    let (a, b) = two_moves(piece)?;
    let sq = Board::unit_square();
    let maximal = maximal_corner_trajectories(&sq, &a, &b)?;
    let cycles = find_rigid_cycles(&sq, &a, &b, q.max(4))?;
    let sources = arvind_sources(&sq, &a, &b, q)?;
    let mut rows = Vec::new();
    let trajs: Vec<Value> = maximal
        .iter()
        .enumerate()
        .map(|(i, t)| {
            for p in &t.points {
                rows.push(vec!["corner".into(), i.to_string(), rat_str(&p.x), rat_str(&p.y)]);
            }
            json!({
                "points": trajectory_json(&t.points),
                "first_move": t.moves[t.start_move].slope(),
                "maximal": t.maximal,
            })
        })
        .collect();
    let cyc: Vec<Value> = cycles
        .iter()
        .enumerate()
        .map(|(i, c)| {
            for p in &c.points {
                rows.push(vec!["cycle".into(), i.to_string(), rat_str(&p.x), rat_str(&p.y)]);
            }
            json!({ "points": trajectory_json(&c.points), "first_move": c.moves[c.start_move].slope() })
        })
        .collect();
    Ok(Outcome::new(
        json!({
            "corner_trajectories": trajs,
            "rigid_cycles": cyc,
            "D": int_json(&sources.total()),
            "boundary_lcd": int_json(&sources.boundary),
            "crossing_lcd": int_json(&sources.crossings),
        }),
        csv(&["kind", "index", "x", "y"], &rows),
    ))
}

fn parse_map(s: &str) -> Result<LinearMap, Failure> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| invalid(format!("malformed map `{s}`, expected a1,a2,b1,b2")))?;
    match v[..] {
        [a1, a2, b1, b2] => Ok(LinearMap::new((a1, a2), (b1, b2))),
        _ => Err(invalid(format!("malformed map `{s}`, expected a1,a2,b1,b2"))),
    }
}

fn parse_assignment(s: &str) -> Result<[Move; 4], Failure> {
    let v = s
        .split(',')
        .map(Move::parse_slope)
        .collect::<riderlab_core::Result<Vec<_>>>()?;
    match v[..] {
        [a, b, c, d] => Ok([a, b, c, d]),
        _ => Err(invalid("an assignment lists exactly four slopes")),
    }
}

fn need_piece(piece: &Option<String>) -> Result<Piece, Failure> {
    let p = piece.as_deref().ok_or_else(|| invalid("--piece is required for this kind"))?;
    Ok(Piece::parse(p)?)
}

/// Builds the requested construction; also returns the piece used.
fn build(
    kind: Kind,
    piece: &Option<String>,
    q: usize,
    map: &Option<String>,
    assignment: &Option<String>,
) -> Result<(Construction, Piece, Value), Failure> {
    let extra = Value::Null;
    match kind {
        Kind::GoldenRectangle => Ok((golden_rectangle(q)?, Piece::named("semiqueen")?, extra)),
        Kind::GoldenParallelogram => {
            let p = need_piece(piece)?;
            let m = parse_map(map.as_deref().ok_or_else(|| invalid("--map is required"))?)?;
            Ok((golden_parallelogram(&p, &m, q)?, p, extra))
        }
        Kind::QueenSpiral => Ok((fibonacci_spiral_queens(q)?, Piece::named("queen")?, extra)),
        Kind::TwistedSpiral => {
            let p = need_piece(piece)?;
            let a = parse_assignment(
                assignment.as_deref().ok_or_else(|| invalid("--assignment is required"))?,
            )?;
            Ok((twisted_spiral(&p, &a, q)?, p, extra))
        }
        Kind::Bound => {
            let p = need_piece(piece)?;
            let b = exp_lower_bound_check(&p, q)?;
            let info = json!({
                "bound": int_json(&b.bound),
                "holds": b.holds,
                "source": b.source,
            });
            Ok((b.construction, p, info))
        }
    }
}

fn cmd_construct(args: &ConstructArgs) -> CmdResult {
    let (c, piece, extra) = build(args.kind, &args.piece, args.q, &args.map, &args.assignment)?;
    let check = is_vertex(&piece, args.q, &c.cfg)?;
    let mut obj = json!({
        "denominator": int_json(&c.denominator),
        "side": int_json(&c.side),
        "integral": integral_json(&c.integral),
        "points": config_json(&c.cfg),
        "is_vertex": check.is_vertex,
        "piece": piece.label(),
        "q": args.q,
    });
    if let Value::Object(m) = extra {
        for (k, v) in m {
            obj[k] = v;
        }
    }
    let rows: Vec<Vec<String>> = c
        .integral
        .points
        .iter()
        .zip(&c.cfg.points)
        .enumerate()
        .map(|(i, (z, f))| {
            vec![
                (i + 1).to_string(),
                z.x.to_integer().to_string(),
                z.y.to_integer().to_string(),
                rat_str(&f.x),
                rat_str(&f.y),
            ]
        })
        .collect();
    Ok(Outcome::new(obj, csv(&["piece", "x", "y", "x_frac", "y_frac"], &rows)))
}

fn parse_points(s: &str) -> Result<Config, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Config::default());
    }
    let mut pts = Vec::new();
    for part in s.split(';') {
        let (x, y) = part
            .split_once(',')
            .ok_or_else(|| invalid(format!("malformed point `{part}`")))?;
        pts.push(riderlab_core::Point::new(rat::parse(x)?, rat::parse(y)?));
    }
    Ok(Config::new(pts))
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    kind: &Option<Kind>,
    piece: &Option<String>,
    q: &Option<usize>,
    map: &Option<String>,
    assignment: &Option<String>,
    points: &Option<String>,
    side: &Option<u64>,
) -> CmdResult {
    let (cfg, n, p) = match (kind, points) {
        (Some(k), None) => {
            let q = q.ok_or_else(|| invalid("--q is required"))?;
            let (c, p, _) = build(*k, piece, q, map, assignment)?;
            (c.cfg, c.side, Some(p))
        }
        (None, Some(pts)) => {
            let integral = parse_points(pts)?;
            let n = match side {
                Some(s) => BigInt::from(*s),
                None => integral
                    .bounds()
                    .map(|(lo, hi)| (&hi.x - &lo.x).max(&hi.y - &lo.y).ceil().to_integer())
                    .unwrap_or_else(|| BigInt::from(1)),
            };
            if n <= BigInt::from(0) {
                return Err(invalid("grid side must be positive"));
            }
            let cfg = integral.scale(&riderlab_core::Rat::new(BigInt::from(1), n.clone()));
            let p = piece.as_deref().map(Piece::parse).transpose()?;
            (cfg, n, p)
        }
        _ => return Err(invalid("give exactly one of --kind or --points")),
    };
    let svg = render::render_svg(&cfg, &n, p.as_ref());
    Ok(Outcome {
        json: Value::Null,
        csv: String::new(),
        raw: Some(svg),
        code: 0,
    })
}
