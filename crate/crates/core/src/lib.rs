//! Exact computations for nonattacking rider placements on a chessboard.
//!
//! - [`exact`]: rationals, moves, pieces, convex boards, exact solving
//! - [`counting`]: brute-force counts of nonattacking configurations
//! - [`quasipoly`]: quasipolynomial fitting and period detection
//! - [`vertex`]: vertices of the inside-out polytope and their denominators
//! - [`closed_forms`]: explicit denominator formulas
//! - [`trajectory`]: two-move trajectories, rigid cycles and crossings
//! - [`construct`]: golden rectangles, golden parallelograms and Fibonacci
//!   spirals

pub mod closed_forms;
pub mod construct;
pub mod counting;
pub mod error;
pub mod exact;
pub mod quasipoly;
pub mod trajectory;
pub mod vertex;

pub use error::{Error, Result};
pub use exact::{denom, solve_exact, Board, Config, Move, Piece, Point, Rat, Solution};
