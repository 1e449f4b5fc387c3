//! Exact scalars, moves, pieces, boards and linear algebra shared by every
//! other module.

pub mod board;
pub mod config;
pub mod linalg;
pub mod moves;
pub mod rat;

pub use board::Board;
pub use config::{denom, Config, Point};
pub use linalg::{solve_exact, RatMatrix, RatVector, RowSpace, Solution};
pub use moves::{Move, Piece};
pub use rat::Rat;
