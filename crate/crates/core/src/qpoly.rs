//! Exact univariate polynomials with arbitrary-precision rational coefficients.
//!
//! The same type carries polynomials in the deformation parameter `q` and the
//! factorial rook polynomials in `x`; only the rendered variable name differs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with exact rational coefficients, stored in ascending powers.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is the
/// empty sequence and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

/// Polynomial in the formal variable `q`.
pub type QPoly = Poly;
/// Polynomial in the formal variable `x`.
pub type XPoly = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Poly::constant(BigRational::from_integer(n.into()))
    }

    /// `c * var^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); degree];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `var^power` (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Returns the constant term if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Renders in ascending powers as `a0 + a1*v + a2*v^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let monomial = match power {
                0 => String::new(),
                1 => var.to_string(),
                p => format!("{var}^{p}"),
            };
            if monomial.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{mag}*{monomial}"));
            }
        }
        out
    }

    /// Coefficient strings in ascending powers; the JSON wire form.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Poly::from_coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Parses `"p/q"` or an integer into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::parse(0, format!("not a rational number: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Long division; fails unless `b` divides `a` exactly.
pub fn exact_div(a: &Poly, b: &Poly) -> Result<Poly> {
    let b_deg = b
        .degree()
        .ok_or_else(|| Error::Inexact("division by the zero polynomial".into()))?;
    let lead = &b.coeffs[b_deg];
    let mut rem = a.coeffs.clone();
    if rem.len() <= b_deg {
        return if a.is_zero() {
            Ok(Poly::zero())
        } else {
            Err(Error::Inexact(format!("({a}) / ({b}) leaves a remainder")))
        };
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b_deg];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b_deg] / lead;
        if !c.is_zero() {
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[i + j] -= &c * bc;
            }
        }
        quot[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::Inexact(format!("({a}) / ({b}) leaves a remainder")));
    }
    Ok(Poly::from_coeffs(quot))
}

/// The q-integer `[t]_q = 1 + q + … + q^(t-1)`; `[0]_q = 0`.
pub fn q_int(t: usize) -> QPoly {
    Poly {
        coeffs: vec![BigRational::one(); t],
    }
}

/// `[k]_q! = [1]_q [2]_q … [k]_q`
pub fn q_factorial(k: usize) -> QPoly {
    (1..=k).fold(Poly::one(), |acc, t| &acc * &q_int(t))
}

/// Gaussian binomial coefficient, by exact division of q-factorials.
/// Zero when `m > n`.
pub fn q_binomial(n: usize, m: usize) -> QPoly {
    if m > n {
        return Poly::zero();
    }
    if m == 0 || m == n {
        return Poly::one();
    }
    let den = &q_factorial(m) * &q_factorial(n - m);
    exact_div(&q_factorial(n), &den).expect("q-factorial quotient is always exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = Poly::from_int_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(Poly::from_int_coeffs(&[0, 0]).is_zero());
        let a = Poly::from_int_coeffs(&[1, 1]);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0), Poly::zero());
        assert_eq!(q_int(1), Poly::one());
        assert_eq!(q_int(3), Poly::from_int_coeffs(&[1, 1, 1]));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0), Poly::one());
        assert_eq!(q_factorial(2), Poly::from_int_coeffs(&[1, 1]));
        assert_eq!(q_factorial(3), Poly::from_int_coeffs(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial(2, 1), Poly::from_int_coeffs(&[1, 1]));
        assert_eq!(q_binomial(4, 2), Poly::from_int_coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, 0), Poly::one());
        assert_eq!(q_binomial(3, 3), Poly::one());
        assert!(q_binomial(2, 3).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = Poly::from_int_coeffs(&[1, 1]);
        assert_eq!(exact_div(&(&a * &a), &a).unwrap(), a);
        assert!(exact_div(&Poly::zero(), &a).unwrap().is_zero());
        assert!(matches!(
            exact_div(&q_int(3), &a),
            Err(Error::Inexact(_))
        ));
        assert!(matches!(
            exact_div(&Poly::one(), &a),
            Err(Error::Inexact(_))
        ));
        assert!(exact_div(&a, &Poly::zero()).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_int_coeffs(&[2, 1]).to_string(), "2 + q");
        assert_eq!(Poly::from_int_coeffs(&[0, 0, 1]).to_string(), "q^2");
        assert_eq!(Poly::from_int_coeffs(&[1, -3]).to_string(), "1 - 3*q");
        assert_eq!(Poly::from_int_coeffs(&[-1, 0, 1]).render("x"), "-1 + x^2");
        assert_eq!(Poly::monomial(rat(1, 2), 1).to_string(), "1/2*q");
        assert_eq!(Poly::monomial(rat(-1, 1), 3).render("x"), "-x^3");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let p = Poly::from_coeffs(vec![rat(1, 2), rat(0, 1), rat(-3, 1)]);
        assert_eq!(Poly::from_strings(&p.to_strings()).unwrap(), p);
    }

    #[test]
    fn evaluation_at_one_specializes() {
        let mut fact = BigInt::one();
        for t in 0..=12usize {
            assert_eq!(q_int(t).eval_at_one(), BigRational::from_integer(t.into()));
            if t > 0 {
                fact *= t;
            }
            assert_eq!(q_factorial(t).eval_at_one(), BigRational::from_integer(fact.clone()));
        }
        // Pascal's rule for the q = 1 binomial check
        let mut row = vec![BigInt::one()];
        for n in 0..=12usize {
            for (m, expected) in row.iter().enumerate() {
                assert_eq!(
                    q_binomial(n, m).eval_at_one(),
                    BigRational::from_integer(expected.clone())
                );
            }
            let mut next = vec![BigInt::one(); n + 2];
            for m in 1..=n {
                next[m] = &row[m - 1] + &row[m];
            }
            row = next;
        }
    }

    #[test]
    fn eval_and_pow() {
        let p = Poly::from_int_coeffs(&[1, 1]);
        assert_eq!(p.pow(3), Poly::from_int_coeffs(&[1, 3, 3, 1]));
        assert_eq!(p.pow(0), Poly::one());
        assert_eq!(p.eval(&rat(2, 1)), rat(3, 1));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = Poly> {
            prop::collection::vec((-20i64..20, 1i64..5), 0..=9).prop_map(|cs| {
                Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn degree_of_product(a in arb_poly(), b in arb_poly()) {
                let p = &a * &b;
                match (a.degree(), b.degree()) {
                    (Some(x), Some(y)) => prop_assert_eq!(p.degree(), Some(x + y)),
                    _ => prop_assert!(p.is_zero()),
                }
            }

            #[test]
            fn division_undoes_multiplication(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
            }
        }
    }
}
