//! Ideal specifications: the JSON document `{"p", "vars", "generators"}`
//! and the polynomial expression grammar used for generators.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := [+|-] term { (+|-) term }
//! term   := power { [*] power }        juxtaposition multiplies
//! power  := atom [ ^ integer ]
//! atom   := integer | identifier | ( expr )
//! ```
//!
//! Integer literals are reduced mod `p`; there is no division.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{is_prime, PolynomialFp};

/// Largest accepted characteristic.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// The raw JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub p: u64,
    pub vars: Vec<String>,
    pub generators: Vec<String>,
}

/// A validated ideal: generators parsed into canonical polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub p: u64,
    pub vars: Vec<String>,
    pub generators: Vec<PolynomialFp>,
}

impl Ideal {
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// All nonzero generators are single terms.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero() || g.is_monomial())
    }

    /// The monomial ideal spanned by the generators, if every generator is
    /// a single term.
    pub fn to_monomial(&self) -> Result<MonomialIdeal> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial);
        }
        let exps: Vec<ExponentVector> = self
            .generators
            .iter()
            .filter_map(|g| g.leading_exponent().cloned())
            .collect();
        if exps.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        MonomialIdeal::minimalize(exps)
    }

    /// Serialize back to the JSON document form.
    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec {
            p: self.p,
            vars: self.vars.clone(),
            generators: self.generators.iter().map(|g| g.render(&self.vars)).collect(),
        }
    }

    /// Require the same characteristic and variable list.
    pub fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.p != other.p {
            return Err(Error::CharacteristicMismatch(self.p, other.p));
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }
}

impl IdealSpec {
    pub fn from_monomial(p: u64, vars: &[String], ideal: &MonomialIdeal) -> Self {
        IdealSpec {
            p,
            vars: vars.to_vec(),
            generators: ideal.generators().iter().map(|g| g.render(vars)).collect(),
        }
    }

    pub fn validate(&self) -> Result<Ideal> {
        if !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.p > MAX_CHARACTERISTIC {
            return Err(Error::Guard(format!(
                "characteristic {} above supported bound {MAX_CHARACTERISTIC}",
                self.p
            )));
        }
        if self.generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for (i, v) in self.vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::MalformedJson(format!("invalid variable name `{v}`")));
            }
            if self.vars[..i].contains(v) {
                return Err(Error::MalformedJson(format!("duplicate variable `{v}`")));
            }
        }
        let generators = self
            .generators
            .iter()
            .map(|g| parse_polynomial(g, self.p, &self.vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal { p: self.p, vars: self.vars.clone(), generators })
    }
}

/// Parse a JSON ideal specification into its characteristic and canonical
/// generator polynomials.
pub fn parse_ideal_spec(text: &str) -> Result<Ideal> {
    let spec: IdealSpec =
        serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))?;
    spec.validate()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> std::result::Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Int(chars[start..i].iter().collect()));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(format!("unexpected character `{c}`")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    p: u64,
    vars: &'a [String],
}

enum ParseError {
    Syntax(String),
    Unknown(String),
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn dim(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> PResult<PolynomialFp> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_add(&t).expect("same ring");
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_sub(&t).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<PolynomialFp> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.mul_unchecked(&f);
                }
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let f = self.power()?;
                    acc = acc.mul_unchecked(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> PResult<PolynomialFp> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(s)) => {
                    let n: u64 = s
                        .parse()
                        .map_err(|_| ParseError::Syntax(format!("exponent `{s}` too large")))?;
                    Ok(base.pow(n))
                }
                _ => Err(ParseError::Syntax("expected a nonnegative integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> PResult<PolynomialFp> {
        match self.next() {
            Some(Token::Int(s)) => {
                let c = s
                    .bytes()
                    .fold(0u64, |acc, b| ((acc as u128 * 10 + (b - b'0') as u128) % self.p as u128) as u64);
                Ok(PolynomialFp::constant(self.p, self.dim(), c))
            }
            Some(Token::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(PolynomialFp::variable(self.p, self.dim(), i)),
                None => Err(ParseError::Unknown(name)),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax("missing `)`".into())),
                }
            }
            Some(t) => Err(ParseError::Syntax(format!("unexpected token {t:?}"))),
            None => Err(ParseError::Syntax("unexpected end of expression".into())),
        }
    }
}

/// Parse one generator expression over `F_p` in the given variables.
pub fn parse_polynomial(expr: &str, p: u64, vars: &[String]) -> Result<PolynomialFp> {
    let syntax = |message: String| Error::Parse { expr: expr.to_string(), message };
    let tokens = tokenize(expr).map_err(syntax)?;
    if tokens.is_empty() {
        return Err(syntax("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, p, vars };
    let f = parser.expr().map_err(|e| match e {
        ParseError::Syntax(m) => syntax(m),
        ParseError::Unknown(v) => Error::UnknownVariable(v),
    })?;
    if parser.pos != parser.tokens.len() {
        return Err(syntax(format!("trailing input at token {}", parser.pos)));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_simple_spec() {
        let ideal =
            parse_ideal_spec(r#"{"p":5,"vars":["x","y"],"generators":["x^2 + y^3"]}"#).unwrap();
        assert_eq!(ideal.p, 5);
        assert_eq!(ideal.generators.len(), 1);
        let f = &ideal.generators[0];
        let got: Vec<(Vec<u32>, u64)> =
            f.terms().map(|(e, c)| (e.entries().to_vec(), c)).collect();
        assert_eq!(got, vec![(vec![2, 0], 1), (vec![0, 3], 1)]);
    }

    #[test]
    fn char_two_cancellation() {
        let ideal =
            parse_ideal_spec(r#"{"p":2,"vars":["x","y"],"generators":["x + x + y"]}"#).unwrap();
        assert_eq!(ideal.generators[0], PolynomialFp::variable(2, 2, 1));
    }

    #[test]
    fn distinct_diagnostics() {
        let non_prime = parse_ideal_spec(r#"{"p":4,"vars":["x"],"generators":["x"]}"#);
        assert_eq!(non_prime, Err(Error::NotPrime(4)));
        assert_eq!(non_prime.unwrap_err().to_string(), "p must be prime (got 4)");

        let unknown = parse_ideal_spec(r#"{"p":3,"vars":["x"],"generators":["x*z"]}"#);
        assert_eq!(unknown, Err(Error::UnknownVariable("z".into())));

        let empty = parse_ideal_spec(r#"{"p":3,"vars":["x"],"generators":[]}"#);
        assert_eq!(empty, Err(Error::EmptyGenerators));

        let malformed = parse_ideal_spec(r#"{"p":3,"vars":["x"],"generators":["x"]"#);
        assert!(matches!(malformed, Err(Error::MalformedJson(_))));
    }

    #[test]
    fn grammar_features() {
        let vars = names(&["x", "y"]);
        let a = parse_polynomial("2x^2 - (x+y)(x-y) + 7", 5, &vars).unwrap();
        let b = parse_polynomial("x^2 + y^2 + 2", 5, &vars).unwrap();
        assert_eq!(a, b);
        assert!(parse_polynomial("x^", 5, &vars).is_err());
        assert!(parse_polynomial("(x+y", 5, &vars).is_err());
        assert!(parse_polynomial("x / y", 5, &vars).is_err());
        assert!(parse_polynomial("", 5, &vars).is_err());
    }

    #[test]
    fn large_literals_reduce() {
        let vars = names(&["x"]);
        let f = parse_polynomial("100000000000000000000000000001*x", 7, &vars).unwrap();
        // 10^29 + 1 mod 7: 10 ≡ 3, 3^29 ≡ 3^(29 mod 6) = 3^5 = 243 ≡ 5, so 6.
        assert_eq!(f.coefficient(&ExponentVector::unit(1, 0)), 6);
    }
}
