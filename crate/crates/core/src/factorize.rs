//! Rook numbers from the factored rook polynomial.
//!
//! For a Ferrers board with heights `h_1 ≥ … ≥ h_n`,
//! `Σ_k r_k(B) x(x-1)…(x-n+k+1) = Π_i (x + h_i - n + i)`, and likewise with
//! q-integers for the q-rook numbers. Recovering the `r_k` from values of the
//! product at `x = 0, …, n` is a finite-difference computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::board::{board_from_word, rook_number, staircase, FerrersBoard};
use crate::error::{Error, Result};
use crate::expr::Word;
use crate::qpoly::{exact_div, q_factorial, q_int, Poly, QPoly, XPoly};
use crate::rewrite::{AlgebraParams, NormalForm, QMode};
use crate::rookorder::{assemble, check_combinatorial_params};

/// Linear factor offsets `h_i - n + i` for i = 1..n.
fn offsets(board: &FerrersBoard) -> impl Iterator<Item = i64> + '_ {
    let n = board.columns() as i64;
    board
        .heights()
        .iter()
        .enumerate()
        .map(move |(idx, &h)| h as i64 - n + idx as i64 + 1)
}

/// `Π_{i=1..n} (x + h_i - n + i)` expanded in powers of `x`.
pub fn factorial_rook_polynomial(board: &FerrersBoard) -> XPoly {
    offsets(board).fold(Poly::one(), |acc, a| {
        &acc * &Poly::from_coeffs(vec![
            BigRational::from_integer(a.into()),
            BigRational::one(),
        ])
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `r_0, …, r_n` via `r_k = (1/(n-k)!) Σ_i (-1)^(n-k-i) C(n-k, i) P(i)`.
pub fn rook_numbers_via_differences(board: &FerrersBoard) -> Result<Vec<BigInt>> {
    let n = board.columns();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|x| offsets(board).map(|a| BigInt::from(x + a)).product())
        .collect();
    (0..=n)
        .map(|k| {
            let j = n - k;
            let mut sum = BigInt::zero();
            for (i, v) in values.iter().enumerate().take(j + 1) {
                let term = binomial(j, i) * v;
                if (j - i).is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            let (r, rem) = sum.div_rem(&factorial(j));
            if !rem.is_zero() || r.is_negative() {
                return Err(Error::Inexact(format!(
                    "difference formula gave {sum}/{j}! for r_{k} of board ({board})"
                )));
            }
            Ok(r)
        })
        .collect()
}

/// `Π_i [x + h_i - n + i]_q`, where any negative argument makes the product 0.
pub fn q_factorial_rook_values(board: &FerrersBoard, x: usize) -> QPoly {
    let mut acc = Poly::one();
    for a in offsets(board) {
        let t = x as i64 + a;
        if t <= 0 {
            return Poly::zero();
        }
        acc = &acc * &q_int(t as usize);
    }
    acc
}

/// `R_0, …, R_n` via iterated q-differences `f(x) ↦ f(x+1) - q^j f(x)`,
/// `j = 0, 1, …`, read at `x = 0` and divided by `[n-k]_q!`.
pub fn q_rook_numbers_via_q_differences(board: &FerrersBoard) -> Result<Vec<QPoly>> {
    let n = board.columns();
    let mut table: Vec<QPoly> = (0..=n).map(|x| q_factorial_rook_values(board, x)).collect();
    // at_zero[j] = (Δ_q^j P)(0)
    let mut at_zero = vec![table[0].clone()];
    for j in 0..n {
        table = table
            .windows(2)
            .map(|w| &w[1] - &w[0].shift(j))
            .collect();
        at_zero.push(table[0].clone());
    }
    (0..=n)
        .map(|k| exact_div(&at_zero[n - k], &q_factorial(n - k)))
        .collect()
}

/// `S_{r,s}(n, k)`, the coefficient of `U^(n(r-s)+k) D^k` in `(U^r D^s)^n`,
/// as the rook number `r_{ns-k}` of the staircase board.
pub fn generalized_stirling(r: usize, s: usize, n: usize, k: usize) -> Result<BigInt> {
    if !(s >= 1 && r >= s && n >= 1 && s <= k && k <= n * s) {
        return Err(Error::Domain(format!(
            "S_{{r,s}}(n,k) needs r >= s >= 1, n >= 1 and s <= k <= ns (got r={r}, s={s}, n={n}, k={k})"
        )));
    }
    Ok(rook_number(&staircase(r, s, n)?, n * s - k))
}

/// Normal ordering through the factorization route; only `i = 0` is covered.
pub fn normal_order_factorize(w: &Word, p: &AlgebraParams) -> Result<NormalForm> {
    check_combinatorial_params(p)?;
    if p.i() != 0 {
        return Err(Error::Unsupported(
            "the factorization route needs i = 0".into(),
        ));
    }
    let board = board_from_word(w);
    let coeffs: Vec<QPoly> = match p.q_mode() {
        QMode::One => rook_numbers_via_differences(&board)?
            .into_iter()
            .map(Poly::from_int)
            .collect(),
        QMode::Symbolic => q_rook_numbers_via_q_differences(&board)?,
    };
    Ok(assemble(w, p, &coeffs))
}
