//! Canonical text and JSON forms.
//!
//! Text: terms in descending degree, e.g. `8x^3+20x^2+2x`, `1/2*x-3`.
//! A [`BiPolynomial`] wraps multi-term `n`-coefficients in parentheses:
//! `(4n^2-6n)x-n^2`.
//!
//! JSON: an array of coefficient strings `"a/b"`, lowest degree first; a
//! [`BiPolynomial`] is an array of such arrays.
//!
//! The parser accepts a wider grammar than the printer emits (implicit
//! multiplication, `*`, parentheses, `^`, terms in any order) so that
//! hand-transcribed formulas can be read back.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::{BiPolynomial, Coefficient, Indeterminate, NPolynomial, Poly, Polynomial};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Per-coefficient rendering used by [`Poly`]'s `Display` and JSON forms.
pub trait CoeffFormat: Coefficient {
    /// Appends `coefficient * var_part` as one signed term.
    fn write_term(&self, var_part: &str, first: bool, out: &mut String);
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn push_sign(negative: bool, first: bool, out: &mut String) {
    if negative {
        out.push('-');
    } else if !first {
        out.push('+');
    }
}

impl CoeffFormat for Rational {
    fn write_term(&self, var_part: &str, first: bool, out: &mut String) {
        push_sign(self.is_negative(), first, out);
        let a = self.abs();
        if var_part.is_empty() {
            out.push_str(&rational::to_text(&a));
        } else if a.is_one() {
            out.push_str(var_part);
        } else if a.is_integer() {
            out.push_str(&rational::to_text(&a));
            out.push_str(var_part);
        } else {
            out.push_str(&rational::to_text(&a));
            out.push('*');
            out.push_str(var_part);
        }
    }

    fn to_json(&self) -> Value {
        Value::String(rational::to_json_string(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_str()
            .ok_or_else(|| Error::Parse(format!("expected a rational string, got {v}")))
            .and_then(rational::parse)
    }
}

impl CoeffFormat for NPolynomial {
    fn write_term(&self, var_part: &str, first: bool, out: &mut String) {
        let nonzero: Vec<_> = self.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if let [(deg, c)] = nonzero[..] {
            let mut mono = var_power(super::N::SYMBOL, deg);
            mono.push_str(var_part);
            c.write_term(&mono, first, out);
        } else {
            if !first {
                out.push('+');
            }
            out.push('(');
            out.push_str(&self.to_string());
            out.push(')');
            out.push_str(var_part);
        }
    }

    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(CoeffFormat::to_json).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        poly_from_json(v)
    }
}

fn var_power(sym: char, deg: usize) -> String {
    match deg {
        0 => String::new(),
        1 => sym.to_string(),
        d => format!("{sym}^{d}"),
    }
}

impl<C: CoeffFormat, V: Indeterminate> fmt::Display for Poly<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            c.write_term(&var_power(V::SYMBOL, deg), out.is_empty(), &mut out);
        }
        f.write_str(&out)
    }
}

impl<C: CoeffFormat, V: Indeterminate> fmt::Debug for Poly<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl<C: CoeffFormat, V: Indeterminate> Poly<C, V> {
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(CoeffFormat::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        poly_from_json(v)
    }
}

fn poly_from_json<C: CoeffFormat, V: Indeterminate>(v: &Value) -> Result<Poly<C, V>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a coefficient array, got {v}")))?;
    Ok(Poly::from_coeffs(
        items.iter().map(C::from_json).collect::<Result<_>>()?,
    ))
}

impl<C: CoeffFormat, V: Indeterminate> Serialize for Poly<C, V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

// ---- parsing ----

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        Parser { src, chars, pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self) -> Result<BiPolynomial> {
        if self.chars.is_empty() {
            return Err(self.err("empty input"));
        }
        let e = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<BiPolynomial> {
        let mut acc = BiPolynomial::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<BiPolynomial> {
        let mut acc = self.factor()?;
        loop {
            let explicit = self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == 'x' || c == 'n' || c == '(' => {
                    acc = &acc * &self.factor()?;
                }
                _ if explicit => return Err(self.err("expected a factor after '*'")),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BiPolynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<BiPolynomial> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(BiPolynomial::var())
            }
            Some('n') => {
                self.pos += 1;
                Ok(BiPolynomial::constant(NPolynomial::var()))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits();
                let value = if self.eat('/') {
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.err("expected a denominator"));
                    }
                    rational::parse(&format!("{num}/{den}"))?
                } else {
                    rational::parse(&num)?
                };
                Ok(BiPolynomial::constant(NPolynomial::constant(value)))
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn uint(&mut self) -> Result<u64> {
        let d = self.digits();
        d.parse().map_err(|_| self.err("expected an exponent"))
    }
}

impl FromStr for BiPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse_all()
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bi: BiPolynomial = s.parse()?;
        if bi.coeffs().iter().any(|c| c.degree().unwrap_or(0) > 0) {
            return Err(Error::Parse(format!("unexpected 'n' in {s:?}")));
        }
        Ok(bi.map_coeffs(|c| c.coeff(0)))
    }
}

impl FromStr for NPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bi: BiPolynomial = s.parse()?;
        if bi.degree().unwrap_or(0) > 0 {
            return Err(Error::Parse(format!("unexpected 'x' in {s:?}")));
        }
        Ok(bi.coeff(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn canonical_text() {
        assert_eq!(Polynomial::from_ints(&[0, 2, 20, 8]).to_string(), "8x^3+20x^2+2x");
        assert_eq!(Polynomial::from_ints(&[0, -2, -4]).to_string(), "-4x^2-2x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_coeffs(vec![rat(1, 2), int(1)]).to_string(), "x+1/2");
        assert_eq!(
            Polynomial::from_coeffs(vec![int(-3), rat(-1, 2)]).to_string(),
            "-1/2*x-3"
        );
        assert_eq!(NPolynomial::from_ints(&[0, 1]).to_string(), "n");
    }

    #[test]
    fn bipolynomial_text() {
        let a1 = BiPolynomial::from_coeffs(vec![
            NPolynomial::from_ints(&[0, 0, -1]),
            NPolynomial::from_ints(&[0, -6, 4]),
        ]);
        assert_eq!(a1.to_string(), "(4n^2-6n)x-n^2");
        assert_eq!(a1.to_string().parse::<BiPolynomial>().unwrap(), a1);
        let mono = BiPolynomial::from_coeffs(vec![
            NPolynomial::zero(),
            NPolynomial::from_coeffs(vec![int(0), rat(-3, 2)]),
        ]);
        assert_eq!(mono.to_string(), "-3/2*nx");
        assert_eq!(mono.to_string().parse::<BiPolynomial>().unwrap(), mono);
    }

    #[test]
    fn parses_loose_forms() {
        let p: Polynomial = "-2x-4x^2".parse().unwrap();
        assert_eq!(p, Polynomial::from_ints(&[0, -2, -4]));
        let a: BiPolynomial = "(16n^3-40n^2+72n)x^2-(8n^3-10n^2+8n)x+n^3".parse().unwrap();
        assert_eq!(a.coeff(1), NPolynomial::from_ints(&[0, -8, 10, -8]));
        let q: Polynomial = "(4x-1)^2 * 1/2".parse().unwrap();
        assert_eq!(q, Polynomial::from_coeffs(vec![rat(1, 2), int(-4), int(8)]));
        assert!("n+x".parse::<Polynomial>().is_err());
        assert!("n+x".parse::<NPolynomial>().is_err());
        assert!("2x+".parse::<Polynomial>().is_err());
        assert!("(x".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
        assert!("1/0".parse::<Polynomial>().is_err());
    }

    #[test]
    fn json_forms() {
        let p = Polynomial::from_coeffs(vec![rat(1, 2), int(0), int(-3)]);
        assert_eq!(p.to_json().to_string(), r#"["1/2","0/1","-3/1"]"#);
        let a = BiPolynomial::from_coeffs(vec![NPolynomial::zero(), NPolynomial::from_ints(&[0, 1])]);
        assert_eq!(a.to_json().to_string(), r#"[[],["0/1","1/1"]]"#);
        assert_eq!(BiPolynomial::from_json(&a.to_json()).unwrap(), a);
        assert!(Polynomial::from_json(&serde_json::json!([1, 2])).is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(a, b)| rat(a, b))
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPolynomial> {
        prop::collection::vec(prop::collection::vec(arb_rational(), 0..4), 0..4)
            .prop_map(|cs| BiPolynomial::from_coeffs(cs.into_iter().map(NPolynomial::from_coeffs).collect()))
    }

    proptest! {
        #[test]
        fn text_round_trip(a in arb_bipoly()) {
            let text = a.to_string();
            let back: BiPolynomial = text.parse().unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, a);
        }

        #[test]
        fn json_round_trip(a in arb_bipoly()) {
            let json = a.to_json().to_string();
            let back = BiPolynomial::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
            prop_assert_eq!(back.to_json().to_string(), json);
            prop_assert_eq!(back, a);
        }

        #[test]
        fn polynomial_text_round_trip(cs in prop::collection::vec(arb_rational(), 0..6)) {
            let p = Polynomial::from_coeffs(cs);
            prop_assert_eq!(p.to_string().parse::<Polynomial>().unwrap(), p);
        }
    }
}
