//! Normal ordering by exhaustive rewriting with `DU → q·UD + c·U^i`.
//!
//! This is the reference route that the combinatorial methods are checked
//! against.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{Letter, Word, WordSum};
use crate::qpoly::{Poly, QPoly};

/// Longest input word accepted by the rewriter.
pub const MAX_REWRITE_LETTERS: usize = 64;
/// Largest number of pending words during rewriting.
pub const MAX_PENDING_TERMS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QMode {
    /// `q` stays a formal variable.
    Symbolic,
    /// `q = 1`.
    One,
}

/// Parameters of the relation `DU = q·UD + c·U^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    q_mode: QMode,
    c: BigRational,
    i: u32,
}

impl AlgebraParams {
    /// Fails if a symbolic `q` is combined with `i ≥ 1`.
    pub fn new(q_mode: QMode, c: BigRational, i: u32) -> Result<Self> {
        if i >= 1 && q_mode == QMode::Symbolic {
            return Err(Error::Unsupported(
                "a symbolic q cannot be combined with a U^i commutator (i >= 1)".into(),
            ));
        }
        Ok(AlgebraParams { q_mode, c, i })
    }

    /// `DU = UD + 1`
    pub fn weyl() -> Self {
        AlgebraParams {
            q_mode: QMode::One,
            c: BigRational::one(),
            i: 0,
        }
    }

    /// `DU = q·UD + 1`
    pub fn q_weyl() -> Self {
        AlgebraParams {
            q_mode: QMode::Symbolic,
            c: BigRational::one(),
            i: 0,
        }
    }

    /// `DU = UD + c·U^i`
    pub fn with_commutator(c: BigRational, i: u32) -> Self {
        AlgebraParams {
            q_mode: QMode::One,
            c,
            i,
        }
    }

    pub fn q_mode(&self) -> QMode {
        self.q_mode
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn i(&self) -> u32 {
        self.i
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.q_mode {
            QMode::Symbolic => "q",
            QMode::One => "",
        };
        let q_part = if q.is_empty() { "UD".to_string() } else { "q UD".to_string() };
        match self.i {
            0 => write!(f, "DU = {q_part} + {}", self.c),
            1 => write!(f, "DU = {q_part} + {} U", self.c),
            i => write!(f, "DU = {q_part} + {} U^{i}", self.c),
        }
    }
}

/// `Σ c_{u,d} U^u D^d` with nonzero polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalForm {
    terms: BTreeMap<(usize, usize), QPoly>,
}

impl NormalForm {
    pub fn new() -> Self {
        NormalForm::default()
    }

    pub fn add_term(&mut self, u: usize, d: usize, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((u, d)).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(u, d));
        }
    }

    pub fn add_scaled(&mut self, other: &NormalForm, c: &BigRational) {
        for (&(u, d), p) in &other.terms {
            self.add_term(u, d, &p.scale(c));
        }
    }

    /// Coefficient of `U^u D^d` (zero if absent).
    pub fn coeff(&self, u: usize, d: usize) -> QPoly {
        self.terms.get(&(u, d)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &QPoly)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    /// Terms by descending `u`, then descending `d`.
    pub fn sorted_terms(&self) -> impl Iterator<Item = ((usize, usize), &QPoly)> {
        self.terms.iter().rev().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Specializes every coefficient at `q = 1`.
    pub fn eval_at_one(&self) -> NormalForm {
        let mut out = NormalForm::new();
        for (&(u, d), p) in &self.terms {
            out.add_term(u, d, &Poly::constant(p.eval_at_one()));
        }
        out
    }
}

/// Which `DU` factor to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Rightmost,
    Leftmost,
}

pub fn normal_order_rewrite(ws: &WordSum, p: &AlgebraParams) -> Result<NormalForm> {
    normal_order_rewrite_with(ws, p, Strategy::Rightmost)
}

/// Number of `(D, U)` pairs with the `D` to the left.
fn inversions(letters: &[Letter]) -> usize {
    let mut ups = 0;
    let mut inv = 0;
    for &l in letters.iter().rev() {
        match l {
            Letter::U => ups += 1,
            Letter::D => inv += ups,
        }
    }
    inv
}

pub fn normal_order_rewrite_with(
    ws: &WordSum,
    p: &AlgebraParams,
    strategy: Strategy,
) -> Result<NormalForm> {
    // Both branches of a rewrite strictly lower (number of D's, inversions)
    // lexicographically, so popping the largest key first sees every word
    // exactly once with its complete coefficient.
    let mut pending: BTreeMap<(usize, usize, Word), QPoly> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<(usize, usize, Word), QPoly>,
                    w: Word,
                    coeff: QPoly|
     -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        let key = (w.count_d(), inversions(w.letters()), w);
        let slot = pending.entry(key).or_default();
        *slot += &coeff;
        if pending.len() > MAX_PENDING_TERMS {
            return Err(Error::Resource(format!(
                "rewriting exceeds {MAX_PENDING_TERMS} pending terms"
            )));
        }
        Ok(())
    };

    for (w, c) in ws.iter() {
        if w.len() > MAX_REWRITE_LETTERS {
            return Err(Error::Resource(format!(
                "rewriting is limited to words of {MAX_REWRITE_LETTERS} letters, got {}",
                w.len()
            )));
        }
        push(&mut pending, w.clone(), Poly::constant(c.clone()))?;
    }

    let mut out = NormalForm::new();
    while let Some(((_, _, word), coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let letters = word.letters();
        let is_du = |j: usize| letters[j] == Letter::D && letters[j + 1] == Letter::U;
        let pos = match strategy {
            Strategy::Rightmost => (0..letters.len().saturating_sub(1)).rev().find(|&j| is_du(j)),
            Strategy::Leftmost => (0..letters.len().saturating_sub(1)).find(|&j| is_du(j)),
        };
        let Some(pos) = pos else {
            out.add_term(word.count_u(), word.count_d(), &coeff);
            continue;
        };

        let mut swapped = letters.to_vec();
        swapped.swap(pos, pos + 1);
        let swapped_coeff = match p.q_mode {
            QMode::Symbolic => coeff.shift(1),
            QMode::One => coeff.clone(),
        };
        push(&mut pending, Word::new(swapped), swapped_coeff)?;

        if !p.c.is_zero() {
            let mut replaced = Vec::with_capacity(letters.len() + p.i as usize);
            replaced.extend_from_slice(&letters[..pos]);
            replaced.extend(std::iter::repeat_n(Letter::U, p.i as usize));
            replaced.extend_from_slice(&letters[pos + 2..]);
            push(&mut pending, Word::new(replaced), coeff.scale(&p.c))?;
        }
    }
    Ok(out)
}
