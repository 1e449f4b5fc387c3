//! Counting checked against brute-force oracles that share nothing with the
//! engine.

use num_bigint::BigInt;
use riderlab_core::counting::{count_by_lines, count_unlabeled, CountTable};
use riderlab_core::Piece;

mod common;

use common::{n_queens, subsets_oracle};

const QUEEN: [(i64, i64); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];

#[test]
fn queens_match_oracles() {
    let queen = Piece::named("queen").unwrap();
    assert_eq!(subsets_oracle(&QUEEN, 2, 4), 44);
    assert_eq!(count_unlabeled(&queen, 2, 4), BigInt::from(44));
    // all 8 queens on 8×8 are unlabeled placements with one per row
    assert_eq!(n_queens(8), 92);
    assert_eq!(count_unlabeled(&queen, 8, 8), BigInt::from(92));
    for n in 4..=8 {
        assert_eq!(count_unlabeled(&queen, n, n), BigInt::from(n_queens(n)), "n={n}");
    }
}

#[test]
fn small_boards_match_subset_oracle() {
    let pieces: [&[(i64, i64)]; 5] = [
        &QUEEN,
        &[(1, 2), (2, 1), (1, -2), (2, -1)],
        &[(1, 1), (1, -1)],
        &[(1, 0), (2, 1)],
        &[(3, 2)],
    ];
    for moves in pieces {
        let p = Piece::new(moves).unwrap();
        for q in 1..=3 {
            for n in 1..=5 {
                let want = BigInt::from(subsets_oracle(moves, q, n as i64));
                assert_eq!(count_unlabeled(&p, q, n), want, "{moves:?} q={q} n={n}");
                if let Some(fast) = count_by_lines(&p, q, n) {
                    assert_eq!(fast, want, "lines {moves:?} q={q} n={n}");
                }
            }
        }
    }
}

#[test]
fn rook_closed_form() {
    // q nonattacking rooks: C(n,q)² q!
    let binom = |n: usize, k: usize| -> BigInt {
        if k > n {
            return BigInt::from(0);
        }
        (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
    };
    let rook = Piece::named("rook").unwrap();
    for q in 1..=4 {
        let fact: BigInt = (1..=q).map(BigInt::from).product();
        for n in 1..=7 {
            let want = binom(n, q) * binom(n, q) * &fact;
            assert_eq!(count_unlabeled(&rook, q, n), want, "q={q} n={n}");
        }
    }
}

#[test]
fn one_move_line_sweep() {
    // a one-move rider: q squares on distinct lines
    for (c, d) in [(1, 0), (1, 1), (2, 1), (3, -2)] {
        let p = Piece::new(&[(c, d)]).unwrap();
        for q in 1..=4 {
            for n in 1..=6 {
                assert_eq!(
                    count_by_lines(&p, q, n).unwrap(),
                    count_unlabeled(&p, q, n),
                    "({c},{d}) q={q} n={n}"
                );
            }
        }
    }
    let t = CountTable::build(&Piece::new(&[(1, 0)]).unwrap(), 2, 5);
    let want: Vec<BigInt> = (1..=5u32).map(|n| BigInt::from(n * n * n * (n - 1) / 2)).collect();
    assert_eq!(t.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(), want);
}
