//! Basic moves and pieces.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use once_cell::sync::Lazy;
use serde::Deserialize;

use crate::error::{Error, Result};

/// A basic move direction, stored in canonical form: `gcd(|c|,|d|) = 1`
/// and `c > 0`, or `c = 0` and `d = 1`.
///
/// A move and its negation describe the same family of attack lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    c: i64,
    d: i64,
}

impl Move {
    pub fn new(c: i64, d: i64) -> Result<Move> {
        if c == 0 && d == 0 {
            return Err(Error::InvalidMove(c, d));
        }
        let g = c.gcd(&d);
        let (mut c, mut d) = (c / g, d / g);
        if c < 0 || (c == 0 && d < 0) {
            c = -c;
            d = -d;
        }
        Ok(Move { c, d })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `m⊥ = (d, -c)`.
    pub fn perp(&self) -> (i64, i64) {
        (self.d, -self.c)
    }

    /// Cross product `c·d' − d·c'`; zero exactly when the moves are parallel.
    pub fn cross(&self, other: &Move) -> i64 {
        self.c * other.d - self.d * other.c
    }

    pub fn is_parallel(&self, other: &Move) -> bool {
        self.cross(other) == 0
    }

    /// `max(|c|, |d|)`.
    pub fn reach(&self) -> i64 {
        self.c.abs().max(self.d.abs())
    }

    /// Slope notation `d/c` as used for move hyperplanes.
    pub fn slope(&self) -> String {
        format!("{}/{}", self.d, self.c)
    }

    /// Parses slope notation `d/c` (so `1/2` is the move `(2, 1)` and `1/0`
    /// is vertical).
    pub fn parse_slope(s: &str) -> Result<Move> {
        let bad = || Error::InvalidInput(format!("malformed move `{s}`, expected d/c"));
        let (d, c) = s.trim().split_once('/').ok_or_else(bad)?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        let c: i64 = c.trim().parse().map_err(|_| bad())?;
        Move::new(c, d)
    }

    /// Images under the eight symmetries of the square, canonicalized.
    pub fn dihedral_images(&self) -> [Move; 8] {
        let (c, d) = (self.c, self.d);
        let raw = [
            (c, d),
            (-c, d),
            (c, -d),
            (-c, -d),
            (d, c),
            (-d, c),
            (d, -c),
            (-d, -c),
        ];
        raw.map(|(a, b)| Move::new(a, b).expect("nonzero"))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c, self.d)
    }
}

/// A rider: a nonempty set of pairwise non-parallel basic moves.
#[derive(Clone, Debug)]
pub struct Piece {
    moves: Vec<Move>,
    name: Option<String>,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.move_set() == other.move_set()
    }
}

impl Eq for Piece {}

impl Piece {
    /// Canonicalizes each move and rejects parallel duplicates. A move set
    /// matching a catalog entry picks up its name.
    pub fn new(moves: &[(i64, i64)]) -> Result<Piece> {
        if moves.is_empty() {
            return Err(Error::EmptyPiece);
        }
        let mut out: Vec<Move> = Vec::with_capacity(moves.len());
        for &(c, d) in moves {
            let m = Move::new(c, d)?;
            if let Some(prev) = out.iter().find(|p| p.is_parallel(&m)) {
                return Err(Error::DuplicateDirection(prev.c, prev.d, c, d));
            }
            out.push(m);
        }
        let name = lookup_name(&out);
        Ok(Piece { moves: out, name })
    }

    pub fn from_moves(moves: &[Move]) -> Result<Piece> {
        let raw: Vec<(i64, i64)> = moves.iter().map(|m| (m.c, m.d)).collect();
        Piece::new(&raw)
    }

    /// Looks up a catalog name or alias (case-insensitive).
    pub fn named(name: &str) -> Result<Piece> {
        let key = name.trim().to_ascii_lowercase();
        CATALOG
            .iter()
            .find(|e| e.name == key || e.aliases.iter().any(|a| a.to_ascii_lowercase() == key))
            .map(|e| Piece::new(&e.moves).expect("catalog entries are valid"))
            .ok_or_else(|| Error::UnknownPiece(name.to_string()))
    }

    /// A catalog name, or otherwise a comma-separated list of slopes `d/c`.
    pub fn parse(spec: &str) -> Result<Piece> {
        match Piece::named(spec) {
            Ok(p) => Ok(p),
            Err(e) if !spec.contains('/') => Err(e),
            Err(_) => {
                let moves = spec
                    .split(',')
                    .map(Move::parse_slope)
                    .collect::<Result<Vec<_>>>()?;
                Piece::from_moves(&moves)
            }
        }
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn move_set(&self) -> BTreeSet<Move> {
        self.moves.iter().copied().collect()
    }

    pub fn contains_moves_of(&self, other: &Piece) -> bool {
        other.move_set().is_subset(&self.move_set())
    }

    /// The piece transformed by a symmetry of the square, given as the index
    /// into [`Move::dihedral_images`].
    pub fn symmetric_image(&self, sym: usize) -> Piece {
        let moves: Vec<Move> = self.moves.iter().map(|m| m.dihedral_images()[sym]).collect();
        Piece::from_moves(&moves).expect("symmetries preserve non-parallelism")
    }

    /// Does some pair of squares attack along one of the moves?
    pub fn attacks_direction(&self, dx: i64, dy: i64) -> bool {
        (dx == 0 && dy == 0) || self.moves.iter().any(|m| dx * m.d - dy * m.c == 0)
    }

    /// Slopes joined by commas, e.g. `1/2,-2/1`.
    pub fn slopes(&self) -> String {
        self.moves.iter().map(Move::slope).collect::<Vec<_>>().join(",")
    }

    /// A label for reports: the catalog name if any, else the slope list.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.slopes())
    }
}

#[derive(Deserialize)]
struct CatalogFile {
    version: u32,
    pieces: Vec<CatalogEntry>,
}

#[derive(Deserialize)]
struct CatalogEntry {
    name: String,
    aliases: Vec<String>,
    moves: Vec<(i64, i64)>,
}

static CATALOG_FILE: Lazy<CatalogFile> = Lazy::new(|| {
    serde_json::from_str(include_str!("../../data/catalog.json")).expect("catalog.json parses")
});

static CATALOG: Lazy<&'static [CatalogEntry]> = Lazy::new(|| &CATALOG_FILE.pieces);

pub fn catalog_version() -> u32 {
    CATALOG_FILE.version
}

/// All catalog names in file order.
pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name.as_str()).collect()
}

fn lookup_name(moves: &[Move]) -> Option<String> {
    let set: BTreeSet<Move> = moves.iter().copied().collect();
    CATALOG
        .iter()
        .find(|e| {
            let cat: BTreeSet<Move> = e
                .moves
                .iter()
                .map(|&(c, d)| Move::new(c, d).expect("valid"))
                .collect();
            cat == set
        })
        .map(|e| e.name.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moves() {
        assert_eq!(Move::new(4, -6).unwrap(), Move::new(2, -3).unwrap());
        let m = Move::new(4, -6).unwrap();
        assert_eq!((m.c(), m.d()), (2, -3));
        let m = Move::new(0, -5).unwrap();
        assert_eq!((m.c(), m.d()), (0, 1));
        let m = Move::new(2, 1).unwrap();
        assert_eq!((m.c(), m.d()), (2, 1));
        let m = Move::new(-3, 0).unwrap();
        assert_eq!((m.c(), m.d()), (1, 0));
        assert_eq!(Move::new(0, 0), Err(Error::InvalidMove(0, 0)));
    }

    #[test]
    fn pieces_and_names() {
        let n = Piece::new(&[(2, 1), (1, 2), (2, -1), (1, -2)]).unwrap();
        assert_eq!(n.name(), Some("nightrider"));
        let q = Piece::new(&[(1, 0), (0, 1), (1, 1), (1, -1)]).unwrap();
        assert_eq!(q.name(), Some("queen"));
        assert!(matches!(
            Piece::new(&[(1, 2), (2, 4)]),
            Err(Error::DuplicateDirection(..))
        ));
        assert_eq!(Piece::new(&[]), Err(Error::EmptyPiece));
        assert_eq!(Piece::named("Q21").unwrap().name(), Some("semiqueen"));
        assert!(matches!(Piece::named("dragon"), Err(Error::UnknownPiece(_))));
    }

    #[test]
    fn slope_syntax() {
        let p = Piece::parse("1/2,-2/1,2/1,-1/2").unwrap();
        assert_eq!(p.name(), Some("nightrider"));
        assert_eq!(p.moves()[1], Move::new(1, -2).unwrap());
        assert_eq!(Piece::parse("1/0,0/1").unwrap().name(), Some("rook"));
        assert!(Piece::parse("1/x").is_err());
        assert_eq!(catalog_version(), 1);
        assert!(catalog_names().contains(&"trident"));
    }

    #[test]
    fn attack_directions() {
        let n = Piece::named("nightrider").unwrap();
        assert!(n.attacks_direction(4, 2));
        assert!(!n.attacks_direction(3, 3));
        assert!(n.attacks_direction(0, 0));
    }
}
