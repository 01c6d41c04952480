//! Weyl binomial coefficients: the normal order coefficients of `(D+U)^n`.
//!
//! `binom(n, m)_k` is the coefficient of `U^(n-m-k) D^(m-k)`. It is computed
//! here by the closed form, by summing rook numbers over the Ferrers boards in
//! an `m × (n-m)` rectangle, and (for the q-analogue) by weighted Motzkin paths
//! or directly by the crossing/separation statistic on partial pairings.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::board::{enumerate_boards, rook_number};
use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, q_int, Poly, QPoly};
use crate::rookorder::q_rook_number;

/// Largest path length for the Motzkin path recurrence.
pub const MAX_MOTZKIN_LENGTH: usize = 30;
/// Largest ground set for pairing enumeration.
pub const MAX_PAIRING_ELEMENTS: usize = 12;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n! / (2^k k! (m-k)! (n-m-k)!)`, or 0 outside `k ≤ min(m, n-m)`.
pub fn weyl_binomial(n: usize, m: usize, k: usize) -> BigInt {
    if m > n || k > m || k > n - m {
        return BigInt::zero();
    }
    let den = (BigInt::one() << k) * factorial(k) * factorial(m - k) * factorial(n - m - k);
    factorial(n) / den
}

/// Sum of `r_k(B)` over every Ferrers board `B` in the `m × (n-m)` rectangle.
pub fn weyl_binomial_rooksum(n: usize, m: usize, k: usize) -> Result<BigInt> {
    if m > n {
        return Ok(BigInt::zero());
    }
    Ok(enumerate_boards(m, n - m)?
        .iter()
        .map(|b| rook_number(b, k))
        .sum())
}

/// Sum of `R_k(B, q)` over every Ferrers board in the `m × (n-m)` rectangle.
pub fn q_weyl_binomial_rooksum(n: usize, m: usize, k: usize) -> Result<QPoly> {
    if m > n {
        return Ok(Poly::zero());
    }
    let mut acc = Poly::zero();
    for b in enumerate_boards(m, n - m)? {
        acc += &q_rook_number(&b, k)?;
    }
    Ok(acc)
}

/// Total weight of Motzkin paths of length `n` with `k` up steps, where a
/// level step at height `l` weighs `q^l`, an up step 1 and a down step from
/// height `l` weighs `[l]_q`. This is the coefficient of `x^n y^k` in the
/// Jacobi continued fraction with those weights.
pub fn motzkin_coefficient(n: usize, k: usize) -> Result<QPoly> {
    if n > MAX_MOTZKIN_LENGTH {
        return Err(Error::Resource(format!(
            "Motzkin paths are limited to length {MAX_MOTZKIN_LENGTH}, got {n}"
        )));
    }
    if 2 * k > n {
        return Ok(Poly::zero());
    }
    let top = n / 2;
    // paths[level][ups]
    let mut paths = vec![vec![Poly::zero(); k + 1]; top + 1];
    paths[0][0] = Poly::one();
    for step in 0..n {
        let remaining = n - step - 1;
        let mut next = vec![vec![Poly::zero(); k + 1]; top + 1];
        for (level, row) in paths.iter().enumerate() {
            for (ups, w) in row.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                if level <= remaining {
                    next[level][ups] += &w.shift(level);
                }
                if level < remaining && ups < k {
                    next[level + 1][ups + 1] += w;
                }
                if level >= 1 {
                    next[level - 1][ups] += &(w * &q_int(level));
                }
            }
        }
        paths = next;
    }
    Ok(std::mem::take(&mut paths[0][k]))
}

/// `[n-2k brack m-k]_q` times the Motzkin path coefficient of `x^n y^k`.
pub fn q_weyl_binomial_motzkin(n: usize, m: usize, k: usize) -> Result<QPoly> {
    if m > n || k > m || k > n - m {
        if n > MAX_MOTZKIN_LENGTH {
            return Err(Error::Resource(format!(
                "Motzkin paths are limited to length {MAX_MOTZKIN_LENGTH}, got {n}"
            )));
        }
        return Ok(Poly::zero());
    }
    Ok(&q_binomial(n - 2 * k, m - k) * &motzkin_coefficient(n, k)?)
}

/// `k` disjoint pairs `(a, b)`, `a < b`, drawn from `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &(a, b) in &pairs {
            if !(1 <= a && a < b && b <= n) {
                return Err(Error::Domain(format!("({a}, {b}) is not an ordered pair in 1..={n}")));
            }
            for e in [a, b] {
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::Domain(format!("element {e} appears in two pairs")));
                }
            }
        }
        Ok(Pairing { n, pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Pairs of pairs `(a, c), (b, d)` with `a < b < c < d`.
    pub fn crossings(&self) -> usize {
        let mut count = 0;
        for (i, &(a, c)) in self.pairs.iter().enumerate() {
            for &(b, d) in &self.pairs[i + 1..] {
                if (a < b && b < c && c < d) || (b < a && a < d && d < c) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Over all unpaired elements `u`, the number of pairs `(a, b)` with `a < u < b`.
    pub fn separations(&self) -> usize {
        let mut paired = vec![false; self.n + 1];
        for &(a, b) in &self.pairs {
            paired[a] = true;
            paired[b] = true;
        }
        (1..=self.n)
            .filter(|&u| !paired[u])
            .map(|u| self.pairs.iter().filter(|&&(a, b)| a < u && u < b).count())
            .sum()
    }
}

/// Every pairing of `k` pairs on `1..=n`.
pub fn pairings(n: usize, k: usize) -> Result<Vec<Pairing>> {
    if n > MAX_PAIRING_ELEMENTS {
        return Err(Error::Resource(format!(
            "pairing enumeration is limited to {MAX_PAIRING_ELEMENTS} elements, got {n}"
        )));
    }
    fn go(
        n: usize,
        next: usize,
        remaining: usize,
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Pairing>,
    ) {
        if remaining == 0 {
            out.push(Pairing {
                n,
                pairs: current.clone(),
            });
            return;
        }
        if next > n {
            return;
        }
        if used[next] {
            go(n, next + 1, remaining, used, current, out);
            return;
        }
        go(n, next + 1, remaining, used, current, out);
        used[next] = true;
        for partner in next + 1..=n {
            if !used[partner] {
                used[partner] = true;
                current.push((next, partner));
                go(n, next + 1, remaining - 1, used, current, out);
                current.pop();
                used[partner] = false;
            }
        }
        used[next] = false;
    }
    let mut out = Vec::new();
    go(n, 1, k, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Σ_π q^(cross(π) + sep(π))` over pairings of `k` pairs on `1..=n`.
pub fn pairing_statistic_sum(n: usize, k: usize) -> Result<QPoly> {
    let mut acc = Poly::zero();
    for p in pairings(n, k)? {
        acc += &Poly::monomial(One::one(), p.crossings() + p.separations());
    }
    Ok(acc)
}
