//! Normal ordering read off rook numbers of the board a word outlines.
//!
//! Under `DU = UD + c` the coefficient of `U^(m-k) D^(n-k)` is `c^k r_k(B_w)`;
//! under `DU = q·UD + 1` it is the q-rook number `R_k(B_w, q)`; under
//! `DU = UD + c·U^i` (i ≥ 1) it is `c^k r_k^(i)(B_w)` on `U^(m+k(i-1)) D^(n-k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::board::{board_from_word, column_scan, for_each_placement, FerrersBoard, Placement};
use crate::error::{Error, Result};
use crate::expr::Word;
use crate::qpoly::{Poly, QPoly};
use crate::rewrite::{AlgebraParams, NormalForm, QMode};

/// Cell limit for q-rook numbers, which enumerate placements.
pub const MAX_Q_ROOK_CELLS: usize = 40;

/// Counts the cells that hold no rook, have no rook below them in their column
/// and no rook to their right in their row.
pub fn inv_statistic(board: &FerrersBoard, placement: &Placement) -> Result<usize> {
    placement.validate(board)?;
    Ok(inv_unchecked(board, placement))
}

fn inv_unchecked(board: &FerrersBoard, placement: &Placement) -> usize {
    // rook_row[c] is the row of the rook in column c+1; rook_col[r] likewise.
    let mut rook_row = vec![0usize; board.columns()];
    let mut rook_col = vec![0usize; board.max_height()];
    for &(c, r) in &placement.rooks {
        rook_row[c - 1] = r;
        rook_col[r - 1] = c;
    }
    let mut inv = 0;
    for (ci, &h) in board.heights().iter().enumerate() {
        let column = ci + 1;
        for row in 1..=h {
            let rook_here_or_below = rook_row[ci] != 0 && rook_row[ci] >= row;
            let rook_right = rook_col[row - 1] > column;
            if !rook_here_or_below && !rook_right {
                inv += 1;
            }
        }
    }
    inv
}

/// `R_k(B, q) = Σ_C q^inv(C)` over placements of `k` rooks.
pub fn q_rook_number(board: &FerrersBoard, k: usize) -> Result<QPoly> {
    let mut by_power = vec![0u64; board.cells() + 1];
    for_each_placement(board, k, MAX_Q_ROOK_CELLS, |c| {
        by_power[inv_unchecked(board, c)] += 1;
    })?;
    Ok(Poly::from_coeffs(
        by_power
            .into_iter()
            .map(|n| BigRational::from_integer(n.into()))
            .collect(),
    ))
}

/// Rook numbers under the `i`-row creation rule: rooks go in right to left,
/// and each one placed leaves `i` fresh rows for the columns to its left
/// while using up its own row.
pub fn i_rook_numbers(board: &FerrersBoard, i: u32) -> Vec<BigInt> {
    column_scan(board, i as i64 - 1)
}

pub fn i_rook_number(board: &FerrersBoard, k: usize, i: u32) -> BigInt {
    i_rook_numbers(board, i)
        .into_iter()
        .nth(k)
        .unwrap_or_else(BigInt::zero)
}

/// Checks that the rook and factorization routes have a theory for `p`.
pub(crate) fn check_combinatorial_params(p: &AlgebraParams) -> Result<()> {
    if p.q_mode() == QMode::Symbolic && !p.c().is_one() {
        return Err(Error::Unsupported(
            "symbolic q is only supported with c = 1".into(),
        ));
    }
    if p.q_mode() == QMode::Symbolic && p.i() >= 1 {
        return Err(Error::Unsupported(
            "symbolic q is only supported with i = 0".into(),
        ));
    }
    Ok(())
}

/// Assembles `Σ_k c^k coeff_k U^(m + k(i-1)) D^(n-k)` for a word with `m` U's
/// and `n` D's.
pub(crate) fn assemble(w: &Word, p: &AlgebraParams, coeffs: &[QPoly]) -> NormalForm {
    let (m, n) = (w.count_u() as i64, w.count_d());
    let mut out = NormalForm::new();
    let mut c_pow = BigRational::one();
    for (k, coeff) in coeffs.iter().enumerate().take(n + 1) {
        if !coeff.is_zero() && !c_pow.is_zero() {
            let u = m + k as i64 * (p.i() as i64 - 1);
            // nonzero coefficients never need more deletions than there are U's
            debug_assert!(u >= 0);
            out.add_term(u as usize, n - k, &coeff.scale(&c_pow));
        }
        c_pow *= p.c();
    }
    out
}

pub fn normal_order_rook(w: &Word, p: &AlgebraParams) -> Result<NormalForm> {
    check_combinatorial_params(p)?;
    let board = board_from_word(w);
    let coeffs: Vec<QPoly> = match (p.q_mode(), p.i()) {
        (QMode::Symbolic, _) => (0..=board.columns())
            .map(|k| q_rook_number(&board, k))
            .collect::<Result<_>>()?,
        (QMode::One, 0) => crate::board::rook_numbers(&board)
            .into_iter()
            .map(Poly::from_int)
            .collect(),
        (QMode::One, i) => i_rook_numbers(&board, i)
            .into_iter()
            .map(Poly::from_int)
            .collect(),
    };
    Ok(assemble(w, p, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::rook_number;
    use crate::board::tests::small_boards;
    use crate::expr::{parse_word, WordSum};
    use crate::rewrite::normal_order_rewrite;

    fn board(h: &[usize]) -> FerrersBoard {
        FerrersBoard::new(h.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inv_of_pinned_example() {
        let b = board(&[4, 4, 3, 1]);
        assert_eq!(
            inv_statistic(&b, &Placement::new(vec![(2, 3), (3, 2)])).unwrap(),
            5
        );
        assert_eq!(inv_statistic(&b, &Placement::default()).unwrap(), 12);
        assert_eq!(inv_statistic(&board(&[1]), &Placement::new(vec![(1, 1)])).unwrap(), 0);
        assert!(inv_statistic(&b, &Placement::new(vec![(2, 3), (3, 3)])).is_err());
        assert!(inv_statistic(&b, &Placement::new(vec![(4, 2)])).is_err());
    }

    #[test]
    fn inv_of_full_placements_counts_permutation_inversions() {
        // rook in column i at row sigma(i)
        let sigma = [3, 1, 4, 2];
        let b = board(&[4, 4, 4, 4]);
        let placement = Placement::new(sigma.iter().enumerate().map(|(i, &r)| (i + 1, r)).collect());
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma[i] > sigma[j])
            .count();
        assert_eq!(inv_statistic(&b, &placement).unwrap(), inversions);
    }

    #[test]
    fn q_rook_numbers() {
        assert_eq!(q_rook_number(&board(&[2]), 1).unwrap(), Poly::from_int_coeffs(&[1, 1]));
        assert_eq!(q_rook_number(&board(&[1, 0]), 0).unwrap(), Poly::var());
        assert_eq!(q_rook_number(&board(&[2, 1]), 1).unwrap().eval_at_one(), rat(3, 1));
        assert!(q_rook_number(&board(&[2]), 2).unwrap().is_zero());
        assert!(matches!(
            q_rook_number(&board(&[7; 6]), 1),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn q_rook_numbers_specialize_to_rook_numbers() {
        for b in small_boards(16) {
            if b.columns() > 10 {
                continue;
            }
            assert_eq!(q_rook_number(&b, 0).unwrap(), Poly::monomial(rat(1, 1), b.cells()));
            for k in 0..=b.columns() {
                assert_eq!(
                    q_rook_number(&b, k).unwrap().eval_at_one(),
                    BigRational::from_integer(rook_number(&b, k)),
                    "board {b}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn i_rook_desk_values() {
        assert_eq!(i_rook_number(&board(&[2, 1]), 1, 1), BigInt::from(3));
        assert_eq!(i_rook_number(&board(&[2, 1]), 2, 1), BigInt::from(2));
        assert_eq!(i_rook_number(&board(&[1, 1]), 2, 1), BigInt::from(1));
        assert_eq!(i_rook_number(&board(&[1, 1]), 2, 0), BigInt::from(0));
        assert_eq!(i_rook_number(&board(&[1, 1]), 3, 1), BigInt::from(0));
    }

    #[test]
    fn zero_row_creation_is_plain_rook_numbers() {
        for b in small_boards(16) {
            for k in 0..=b.columns() + 1 {
                assert_eq!(i_rook_number(&b, k, 0), rook_number(&b, k));
            }
        }
    }

    #[test]
    fn rook_route_desk_values() {
        let w = |s: &str| parse_word(s).unwrap();
        let nf = normal_order_rook(&w("UDUDUD"), &AlgebraParams::weyl()).unwrap();
        assert_eq!(nf.len(), 3);
        assert_eq!(nf.coeff(3, 3), Poly::from_int(1));
        assert_eq!(nf.coeff(2, 2), Poly::from_int(3));
        assert_eq!(nf.coeff(1, 1), Poly::from_int(1));

        let nf = normal_order_rook(&w("DU"), &AlgebraParams::q_weyl()).unwrap();
        assert_eq!(nf.coeff(1, 1), Poly::var());
        assert_eq!(nf.coeff(0, 0), Poly::one());

        let nf = normal_order_rook(&w("DUDU"), &AlgebraParams::with_commutator(rat(1, 1), 1))
            .unwrap();
        assert_eq!(nf.len(), 3);
        assert_eq!(nf.coeff(2, 2), Poly::from_int(1));
        assert_eq!(nf.coeff(2, 1), Poly::from_int(3));
        assert_eq!(nf.coeff(2, 0), Poly::from_int(2));
    }

    #[test]
    fn rook_route_rejects_unsupported_params() {
        let w = parse_word("DU").unwrap();
        let p = AlgebraParams::new(QMode::Symbolic, rat(2, 1), 0).unwrap();
        assert!(matches!(normal_order_rook(&w, &p), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rook_route_matches_rewriting() {
        let params = [
            AlgebraParams::weyl(),
            AlgebraParams::with_commutator(rat(2, 1), 0),
            AlgebraParams::q_weyl(),
            AlgebraParams::with_commutator(rat(1, 1), 1),
            AlgebraParams::with_commutator(rat(1, 1), 2),
            AlgebraParams::with_commutator(rat(2, 1), 2),
            AlgebraParams::with_commutator(rat(1, 2), 3),
        ];
        for p in &params {
            for len in 0..=10 {
                for w in Word::all_of_length(len) {
                    let oracle = normal_order_rewrite(&WordSum::from_word(w.clone()), p).unwrap();
                    assert_eq!(
                        normal_order_rook(&w, p).unwrap(),
                        oracle,
                        "word {w} under {p}"
                    );
                }
            }
        }
    }
}
