//! Operator expressions over the noncommuting letters `D` and `U`.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := integer? factor+
//! factor := ('D' | 'U' | '(' expr ')') ('^' natural)?
//! ```
//!
//! Juxtaposition is the noncommutative product. `^` binds tighter than
//! juxtaposition, which binds tighter than `+`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u32 = 1_000_000;
/// Largest number of distinct words an expansion may produce.
pub const MAX_TERMS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    D,
    U,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::D => 'D',
            Letter::U => 'U',
        }
    }
}

/// A finite sequence of letters; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `U^u D^d`
    pub fn normal(u: usize, d: usize) -> Self {
        let mut letters = vec![Letter::U; u];
        letters.extend(std::iter::repeat_n(Letter::D, d));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_u(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::U).count()
    }

    pub fn count_d(&self) -> usize {
        self.0.len() - self.count_u()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// All `2^len` words of the given length, in lexicographic order (`D < U`).
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << len).map(move |bits| {
            Word(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 1 {
                            Letter::U
                        } else {
                            Letter::D
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Expression tree. `Scaled` attaches an exact rational multiplicatively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Letter(Letter),
    Product(Vec<Expr>),
    Sum(Vec<Expr>),
    Power(Box<Expr>, u32),
    Scaled(BigRational, Box<Expr>),
}

impl Expr {
    pub fn power(base: Expr, exponent: u32) -> Expr {
        Expr::Power(Box::new(base), exponent)
    }

    pub fn scaled(c: impl Into<BigInt>, e: Expr) -> Expr {
        Expr::Scaled(BigRational::from_integer(c.into()), Box::new(e))
    }

    pub fn word(w: &Word) -> Expr {
        Expr::Product(w.letters().iter().map(|&l| Expr::Letter(l)).collect())
    }
}

/// Linear combination of words with nonzero exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, BigRational>,
}

impl WordSum {
    pub fn new() -> Self {
        WordSum::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut s = WordSum::new();
        s.add_term(w, BigRational::one());
        s
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, w: &Word) -> Option<&BigRational> {
        self.terms.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(mut self, other: &WordSum) -> Result<WordSum> {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
            guard_terms(self.len())?;
        }
        Ok(self)
    }

    fn mul(&self, other: &WordSum) -> Result<WordSum> {
        let mut out = WordSum::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
                guard_terms(out.len())?;
            }
        }
        Ok(out)
    }

    fn scale(mut self, c: &BigRational) -> WordSum {
        if c.is_zero() {
            return WordSum::new();
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
        self
    }
}

fn guard_terms(n: usize) -> Result<()> {
    if n > MAX_TERMS {
        Err(Error::Resource(format!(
            "expansion exceeds {MAX_TERMS} distinct words"
        )))
    } else {
        Ok(())
    }
}

/// Parses a bare word such as `"DDUDUUDDU"`; whitespace is skipped.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut letters = Vec::new();
    for (offset, ch) in text.char_indices() {
        match ch {
            'D' => letters.push(Letter::D),
            'U' => letters.push(Letter::U),
            c if c.is_whitespace() => {}
            c => return Err(Error::parse(offset, format!("unexpected character {c:?}"))),
        }
    }
    Ok(Word(letters))
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(Error::parse(p.pos, format!("unexpected character {c:?}"))),
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {wanted}, found {c:?}")),
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.peek() != Some('+') {
                break;
            }
            self.bump();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        self.skip_ws();
        let scalar = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let digits = self.digits();
            Some(BigInt::parse_bytes(digits.as_bytes(), 10).expect("ascii digits"))
        } else {
            None
        };
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('D' | 'U' | '(') => factors.push(self.factor()?),
                _ => break,
            }
        }
        if factors.is_empty() {
            return Err(self.unexpected("'D', 'U' or '('"));
        }
        let body = if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        };
        Ok(match scalar {
            Some(c) => Expr::scaled(c, body),
            None => body,
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = match self.peek() {
            Some('D') => {
                self.bump();
                Expr::Letter(Letter::D)
            }
            Some('U') => {
                self.bump();
                Expr::Letter(Letter::U)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                inner
            }
            _ => return Err(self.unexpected("'D', 'U' or '('")),
        };
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.unexpected("an exponent"));
        }
        let exponent = digits
            .parse::<u64>()
            .ok()
            .filter(|&e| e <= u64::from(MAX_EXPONENT))
            .ok_or_else(|| {
                Error::Resource(format!(
                    "exponent {digits} at offset {start} exceeds the cap of {MAX_EXPONENT}"
                ))
            })?;
        Ok(Expr::power(base, exponent as u32))
    }
}

/// Distributes products over sums, returning the collected word sum.
pub fn expand(e: &Expr) -> Result<WordSum> {
    match e {
        Expr::Letter(l) => Ok(WordSum::from_word(Word(vec![*l]))),
        Expr::Product(factors) => factors
            .iter()
            .try_fold(WordSum::from_word(Word::empty()), |acc, f| {
                acc.mul(&expand(f)?)
            }),
        Expr::Sum(terms) => terms
            .iter()
            .try_fold(WordSum::new(), |acc, t| acc.add(&expand(t)?)),
        Expr::Power(base, exponent) => {
            let mut base = expand(base)?;
            let mut e = *exponent;
            let mut acc = WordSum::from_word(Word::empty());
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&base)?;
                }
                e >>= 1;
                if e > 0 {
                    base = base.mul(&base)?;
                }
            }
            Ok(acc)
        }
        Expr::Scaled(c, inner) => Ok(expand(inner)?.scale(c)),
    }
}
