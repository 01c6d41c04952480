//! Command implementations behind the `weylrook` binary.
//!
//! Each command yields a [`Document`] carrying both renderings. Every integer
//! in the JSON form is a decimal string, and every coefficient is an array of
//! rational strings in ascending powers of `q`.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::binom;
use crate::board::{board_from_word, rook_numbers, FerrersBoard};
use crate::error::{Error, Result};
use crate::expr::{expand, parse_expr, parse_word, Expr, Letter, WordSum};
use crate::factorize::{generalized_stirling, normal_order_factorize};
use crate::qpoly::{parse_rational, Poly, QPoly};
use crate::rewrite::{normal_order_rewrite, AlgebraParams, NormalForm, QMode};
use crate::rookorder::{i_rook_numbers, normal_order_rook, q_rook_number};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// How `normal-order` computes coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    Rewrite,
    #[default]
    Rook,
    Factorize,
}

/// How `weyl-binomial` computes its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BinomialMethod {
    Closed,
    Rooksum,
    Motzkin,
    Oracle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub text: String,
    pub json: Value,
}

impl Document {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => self.json.to_string(),
        }
    }
}

/// Process exit status for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Domain(_) => 2,
        Error::Unsupported(_) => 3,
        Error::Resource(_) => 4,
        Error::Inexact(_) => 1,
    }
}

pub fn params_from_flags(q: bool, c: Option<&str>, i: u32) -> Result<AlgebraParams> {
    let c = match c {
        Some(text) => parse_rational(text)?,
        None => BigRational::one(),
    };
    let mode = if q { QMode::Symbolic } else { QMode::One };
    AlgebraParams::new(mode, c, i)
}

pub fn params_to_json(p: &AlgebraParams) -> Value {
    json!({
        "q": match p.q_mode() {
            QMode::Symbolic => "symbolic",
            QMode::One => "1",
        },
        "c": p.c().to_string(),
        "i": p.i().to_string(),
    })
}

fn json_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Domain(format!("missing string field {key:?}")))
}

fn json_nat(v: &Value, key: &str) -> Result<usize> {
    json_str(v, key)?
        .parse()
        .map_err(|_| Error::Domain(format!("field {key:?} is not a natural number")))
}

fn poly_from_json(v: &Value) -> Result<QPoly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Domain("coefficient must be an array".into()))?
        .iter()
        .map(|s| {
            s.as_str()
                .ok_or_else(|| Error::Domain("coefficient entries must be strings".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Poly::from_strings(&items)
}

pub fn params_from_json(v: &Value) -> Result<AlgebraParams> {
    let q = match json_str(v, "q")? {
        "symbolic" => true,
        "1" => false,
        other => return Err(Error::Domain(format!("unknown q mode {other:?}"))),
    };
    let i = json_str(v, "i")?
        .parse()
        .map_err(|_| Error::Domain("field \"i\" is not a natural number".into()))?;
    params_from_flags(q, Some(json_str(v, "c")?), i)
}

pub fn normal_form_to_json(nf: &NormalForm, p: &AlgebraParams) -> Value {
    let terms: Vec<Value> = nf
        .sorted_terms()
        .map(|((u, d), c)| {
            json!({
                "u": u.to_string(),
                "d": d.to_string(),
                "coeff": c.to_strings(),
            })
        })
        .collect();
    json!({ "params": params_to_json(p), "terms": terms })
}

pub fn normal_form_from_json(v: &Value) -> Result<(AlgebraParams, NormalForm)> {
    let params = params_from_json(
        v.get("params")
            .ok_or_else(|| Error::Domain("missing \"params\"".into()))?,
    )?;
    let mut nf = NormalForm::new();
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Domain("missing \"terms\" array".into()))?;
    for t in terms {
        let coeff = poly_from_json(
            t.get("coeff")
                .ok_or_else(|| Error::Domain("term without \"coeff\"".into()))?,
        )?;
        nf.add_term(json_nat(t, "u")?, json_nat(t, "d")?, &coeff);
    }
    Ok((params, nf))
}

fn monomial_text(u: usize, d: usize) -> String {
    let part = |letter: char, e: usize| match e {
        0 => None,
        1 => Some(letter.to_string()),
        e => Some(format!("{letter}^{e}")),
    };
    [part('U', u), part('D', d)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders `Σ c U^u D^d` as e.g. `U^3 D^3 + 3 U^2 D^2 + U D`.
pub fn normal_form_text(nf: &NormalForm) -> String {
    let mut out = String::new();
    for ((u, d), coeff) in nf.sorted_terms() {
        let monomial = monomial_text(u, d);
        let single = coeff.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        let (negative, magnitude) = if single {
            let c = coeff.coeffs().last().expect("nonzero coefficient");
            let mag = if c.is_negative() { -coeff } else { coeff.clone() };
            (c.is_negative(), mag)
        } else {
            (false, coeff.clone())
        };
        let coeff_text = if single {
            magnitude.to_string()
        } else {
            format!("({magnitude})")
        };
        let body = match (monomial.is_empty(), magnitude.is_one()) {
            (true, _) => coeff_text,
            (false, true) => monomial,
            (false, false) => format!("{coeff_text} {monomial}"),
        };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Normal-orders a word sum by the chosen method.
pub fn normal_order(ws: &WordSum, p: &AlgebraParams, method: Method) -> Result<NormalForm> {
    if method == Method::Rewrite {
        return normal_order_rewrite(ws, p);
    }
    let mut out = NormalForm::new();
    for (w, c) in ws.iter() {
        let nf = match method {
            Method::Rook => normal_order_rook(w, p)?,
            Method::Factorize => normal_order_factorize(w, p)?,
            Method::Rewrite => unreachable!(),
        };
        out.add_scaled(&nf, c);
    }
    Ok(out)
}

pub fn cmd_normal_order(expr: &str, p: &AlgebraParams, method: Method) -> Result<Document> {
    let ws = expand(&parse_expr(expr)?)?;
    let nf = normal_order(&ws, p, method)?;
    Ok(Document {
        text: normal_form_text(&nf),
        json: normal_form_to_json(&nf, p),
    })
}

pub fn cmd_board(word: &str) -> Result<Document> {
    let board = board_from_word(&parse_word(word)?);
    Ok(Document {
        text: board.to_string(),
        json: json!({
            "heights": board.heights().iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        }),
    })
}

pub fn cmd_rook_numbers(heights: &str, q: bool, i: u32) -> Result<Document> {
    if q && i >= 1 {
        return Err(Error::Unsupported(
            "q-rook numbers under the row creation rule are not defined".into(),
        ));
    }
    let board: FerrersBoard = heights.parse()?;
    let (label, values): (String, Vec<QPoly>) = if q {
        let values = (0..=board.columns())
            .map(|k| q_rook_number(&board, k))
            .collect::<Result<_>>()?;
        ("R".into(), values)
    } else if i >= 1 {
        let values = i_rook_numbers(&board, i).into_iter().map(Poly::from_int).collect();
        (format!("r^({i})"), values)
    } else {
        let values = rook_numbers(&board).into_iter().map(Poly::from_int).collect();
        ("r".into(), values)
    };
    let text = values
        .iter()
        .enumerate()
        .map(|(k, v)| format!("{label}_{k} = {v}"))
        .collect::<Vec<_>>()
        .join("\n");
    let p = if q {
        AlgebraParams::q_weyl()
    } else {
        AlgebraParams::with_commutator(BigRational::one(), i)
    };
    let json = json!({
        "heights": board.heights().iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        "params": params_to_json(&p),
        "values": values.iter().enumerate().map(|(k, v)| json!({
            "k": k.to_string(),
            "value": v.to_strings(),
        })).collect::<Vec<_>>(),
    });
    Ok(Document { text, json })
}

/// Coefficient of `U^(n-m-k) D^(m-k)` in the rewritten `(D+U)^n`.
pub fn weyl_binomial_oracle(n: usize, m: usize, k: usize, q: bool) -> Result<QPoly> {
    if m > n || k > m || k > n - m {
        return Ok(Poly::zero());
    }
    let exponent = u32::try_from(n).map_err(|_| Error::Resource(format!("n = {n} is too large")))?;
    let sum = Expr::Sum(vec![Expr::Letter(Letter::D), Expr::Letter(Letter::U)]);
    let ws = expand(&Expr::power(sum, exponent))?;
    let p = if q {
        AlgebraParams::q_weyl()
    } else {
        AlgebraParams::weyl()
    };
    Ok(normal_order_rewrite(&ws, &p)?.coeff(n - m - k, m - k))
}

/// Defaults to the closed form, or to Motzkin paths when `q` is symbolic.
pub fn cmd_weyl_binomial(
    n: usize,
    m: usize,
    k: usize,
    q: bool,
    method: Option<BinomialMethod>,
) -> Result<Document> {
    let method = method.unwrap_or(if q {
        BinomialMethod::Motzkin
    } else {
        BinomialMethod::Closed
    });
    let value: QPoly = match (method, q) {
        (BinomialMethod::Closed, false) => Poly::from_int(binom::weyl_binomial(n, m, k)),
        (BinomialMethod::Closed, true) => {
            return Err(Error::Unsupported(
                "no closed form for the q-Weyl binomial; use rooksum, motzkin or oracle".into(),
            ))
        }
        (BinomialMethod::Rooksum, false) => Poly::from_int(binom::weyl_binomial_rooksum(n, m, k)?),
        (BinomialMethod::Rooksum, true) => binom::q_weyl_binomial_rooksum(n, m, k)?,
        (BinomialMethod::Motzkin, true) => binom::q_weyl_binomial_motzkin(n, m, k)?,
        (BinomialMethod::Motzkin, false) => {
            Poly::constant(binom::q_weyl_binomial_motzkin(n, m, k)?.eval_at_one())
        }
        (BinomialMethod::Oracle, q) => weyl_binomial_oracle(n, m, k, q)?,
    };
    let p = if q {
        AlgebraParams::q_weyl()
    } else {
        AlgebraParams::weyl()
    };
    Ok(Document {
        text: value.to_string(),
        json: json!({
            "n": n.to_string(),
            "m": m.to_string(),
            "k": k.to_string(),
            "params": params_to_json(&p),
            "value": value.to_strings(),
        }),
    })
}

pub fn cmd_stirling(r: usize, s: usize, n: usize, k: usize) -> Result<Document> {
    let value: BigInt = generalized_stirling(r, s, n, k)?;
    Ok(Document {
        text: value.to_string(),
        json: json!({
            "r": r.to_string(),
            "s": s.to_string(),
            "n": n.to_string(),
            "k": k.to_string(),
            "value": value.to_string(),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(expr: &str, p: &AlgebraParams) -> String {
        cmd_normal_order(expr, p, Method::Rook).unwrap().text
    }

    #[test]
    fn normal_order_text() {
        let weyl = AlgebraParams::weyl();
        assert_eq!(text("(UD)^3", &weyl), "U^3 D^3 + 3 U^2 D^2 + U D");
        assert_eq!(text("DU", &AlgebraParams::q_weyl()), "q U D + 1");
        assert_eq!(text("(D+U)^2", &weyl), "U^2 + 2 U D + D^2 + 1");
        assert_eq!(text("DDUU", &AlgebraParams::q_weyl()), "q^4 U^2 D^2 + (q + 2*q^2 + q^3) U D + (1 + q)");
        let half = params_from_flags(false, Some("-1/2"), 0).unwrap();
        assert_eq!(text("DU", &half), "U D - 1/2");
        assert_eq!(text("DU", &params_from_flags(false, Some("0"), 0).unwrap()), "U D");
        assert_eq!(text("(D+U)^0", &weyl), "1");
    }

    #[test]
    fn json_shape() {
        let doc = cmd_normal_order("(UD)^2", &AlgebraParams::weyl(), Method::Rook).unwrap();
        assert_eq!(
            doc.json.to_string(),
            r#"{"params":{"q":"1","c":"1","i":"0"},"terms":[{"u":"2","d":"2","coeff":["1"]},{"u":"1","d":"1","coeff":["1"]}]}"#
        );
    }

    #[test]
    fn json_round_trip() {
        let p = params_from_flags(true, None, 0).unwrap();
        let doc = cmd_normal_order("(D+U)^4 + 3 DDU", &p, Method::Rook).unwrap();
        let (p2, nf) = normal_form_from_json(&doc.json).unwrap();
        assert_eq!(normal_form_to_json(&nf, &p2), doc.json);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&cmd_board("DDX").unwrap_err()), 2);
        assert_eq!(exit_code(&cmd_rook_numbers("1,2", false, 0).unwrap_err()), 2);
        assert_eq!(exit_code(&cmd_rook_numbers("2", true, 1).unwrap_err()), 3);
        assert_eq!(exit_code(&params_from_flags(true, None, 2).unwrap_err()), 3);
        let p = params_from_flags(false, None, 1).unwrap();
        assert_eq!(exit_code(&cmd_normal_order("DU", &p, Method::Factorize).unwrap_err()), 3);
        let p = params_from_flags(true, Some("2"), 0).unwrap();
        assert_eq!(exit_code(&cmd_normal_order("DU", &p, Method::Rook).unwrap_err()), 3);
        assert_eq!(
            exit_code(&cmd_normal_order("D^7 U^7", &AlgebraParams::q_weyl(), Method::Rook).unwrap_err()),
            4
        );
        assert_eq!(exit_code(&cmd_stirling(1, 2, 3, 2).unwrap_err()), 2);
    }

    #[test]
    fn board_and_rook_tables() {
        assert_eq!(cmd_board("DDUDUUDDU").unwrap().text, "4,4,3,1,1");
        assert_eq!(cmd_board("UU").unwrap().text, "");
        assert_eq!(
            cmd_rook_numbers("2,1,0", false, 0).unwrap().text,
            "r_0 = 1\nr_1 = 3\nr_2 = 1\nr_3 = 0"
        );
        assert_eq!(cmd_rook_numbers("2", true, 0).unwrap().text, "R_0 = q^2\nR_1 = 1 + q");
        assert_eq!(
            cmd_rook_numbers("2,1", false, 1).unwrap().text,
            "r^(1)_0 = 1\nr^(1)_1 = 3\nr^(1)_2 = 2"
        );
    }

    #[test]
    fn binomial_and_stirling_commands() {
        assert_eq!(cmd_weyl_binomial(4, 2, 1, false, None).unwrap().text, "12");
        assert_eq!(
            cmd_weyl_binomial(3, 1, 1, true, Some(BinomialMethod::Motzkin)).unwrap().text,
            "2 + q"
        );
        for method in [
            BinomialMethod::Closed,
            BinomialMethod::Rooksum,
            BinomialMethod::Motzkin,
            BinomialMethod::Oracle,
        ] {
            assert_eq!(cmd_weyl_binomial(5, 2, 1, false, Some(method)).unwrap().text, "30");
        }
        assert!(cmd_weyl_binomial(3, 1, 1, true, Some(BinomialMethod::Closed)).is_err());
        assert_eq!(cmd_stirling(1, 1, 5, 2).unwrap().text, "15");
    }
}
