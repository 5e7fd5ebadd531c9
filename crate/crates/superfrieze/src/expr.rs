//! Text syntax for [`SuperScalar`] values.
//!
//! ```text
//! list       = expr { "," expr } ;
//! expr       = [ "+" | "-" ] term { ( "+" | "-" ) term } ;
//! term       = power { [ "*" | "/" ] power } ;      (* juxtaposition multiplies *)
//! power      = primary [ "^" [ "-" ] integer ] ;
//! primary    = integer | identifier | "(" expr ")" | "-" power ;
//! identifier = letter { letter } [ index ] ;
//! index      = digit { digit } | "_" [ "-" ] digit { digit } ;
//! ```
//!
//! Whether an identifier names an odd generator is decided by its name:
//! see [`is_odd_name`]. Division requires a divisor whose body is a single
//! monomial.

use std::iter::Peekable;
use std::str::CharIndices;

use crate::grassmann::{GeneratorId, GrassmannError, Parity, SuperScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

const ODD_NAMES: &[&str] = &[
    "b", "w", "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "kappa",
    "lambda", "mu", "nu", "xi", "rho", "sigma", "tau", "phi", "chi", "psi", "omega",
];

/// Latin `b` and `w`, spelled-out Greek letter names and Greek characters are
/// odd; every other name is even.
#[must_use]
pub fn is_odd_name(name: &str) -> bool {
    ODD_NAMES.contains(&name) || name.chars().all(|c| ('\u{3b1}'..='\u{3c9}').contains(&c))
}

/// Generator for an identifier name, with parity chosen by [`is_odd_name`].
pub fn generator_for(name: &str, index: i64) -> Result<GeneratorId, GrassmannError> {
    let parity = if is_odd_name(name) {
        Parity::Odd
    } else {
        Parity::Even
    };
    GeneratorId::new(parity, name, index)
}

pub fn parse_scalar(input: &str) -> Result<SuperScalar, ParseError> {
    let mut p = Parser::new(input);
    let value = p.expr()?;
    p.skip_ws();
    if let Some((pos, c)) = p.peek() {
        return Err(p.error_at(pos, format!("unexpected character {c:?}")));
    }
    Ok(value)
}

/// Comma-separated list of expressions.
pub fn parse_list(input: &str) -> Result<Vec<SuperScalar>, ParseError> {
    let mut p = Parser::new(input);
    let mut out = Vec::new();
    p.skip_ws();
    if p.peek().is_none() {
        return Ok(out);
    }
    loop {
        out.push(p.expr()?);
        p.skip_ws();
        match p.peek() {
            None => return Ok(out),
            Some((_, ',')) => {
                p.bump();
            }
            Some((pos, c)) => return Err(p.error_at(pos, format!("unexpected character {c:?}"))),
        }
    }
}

struct Parser<'a> {
    chars: Peekable<CharIndices<'a>>,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            chars: input.char_indices().peekable(),
            input,
        }
    }

    fn char_pos(&self, byte: usize) -> usize {
        self.input[..byte].chars().count()
    }

    fn error_at(&self, byte: usize, message: String) -> ParseError {
        ParseError {
            position: self.char_pos(byte),
            message,
        }
    }

    fn end_pos(&self) -> usize {
        self.input.len()
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        self.chars.next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expr(&mut self) -> Result<SuperScalar, ParseError> {
        self.skip_ws();
        let negate = match self.peek() {
            Some((_, '-')) => {
                self.bump();
                true
            }
            Some((_, '+')) => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            self.skip_ws();
            match self.peek() {
                Some((_, '+')) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some((_, '-')) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SuperScalar, ParseError> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some((_, '*')) => {
                    self.bump();
                    acc = acc * self.power()?;
                }
                Some((pos, '/')) => {
                    self.bump();
                    let rhs = self.power()?;
                    acc = acc.divide(&rhs).map_err(|e| {
                        self.error_at(pos, format!("cannot divide: {e}"))
                    })?;
                }
                Some((_, c)) if c.is_alphanumeric() || c == '(' => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<SuperScalar, ParseError> {
        let base = self.primary()?;
        self.skip_ws();
        if let Some((pos, '^')) = self.peek() {
            self.bump();
            self.skip_ws();
            let negative = if let Some((_, '-')) = self.peek() {
                self.bump();
                true
            } else {
                false
            };
            let (digits_pos, digits) = self.digits();
            if digits.is_empty() {
                return Err(self.error_at(digits_pos, "expected integer exponent".into()));
            }
            let e: i32 = digits
                .parse()
                .map_err(|_| self.error_at(digits_pos, "exponent out of range".into()))?;
            let e = if negative { -e } else { e };
            return base
                .pow(e)
                .map_err(|err| self.error_at(pos, format!("cannot raise to power {e}: {err}")));
        }
        Ok(base)
    }

    fn digits(&mut self) -> (usize, String) {
        let start = self.peek().map_or(self.end_pos(), |(p, _)| p);
        let mut s = String::new();
        while let Some((_, c)) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        (start, s)
    }

    fn primary(&mut self) -> Result<SuperScalar, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error_at(self.end_pos(), "unexpected end of input".into())),
            Some((_, '(')) => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                match self.bump() {
                    Some((_, ')')) => Ok(inner),
                    Some((pos, c)) => Err(self.error_at(pos, format!("expected ')', found {c:?}"))),
                    None => Err(self.error_at(self.end_pos(), "expected ')'".into())),
                }
            }
            Some((_, '-')) => {
                self.bump();
                Ok(-self.power()?)
            }
            Some((pos, c)) if c.is_ascii_digit() => {
                let (_, digits) = self.digits();
                let n: num_bigint::BigInt = digits
                    .parse()
                    .map_err(|_| self.error_at(pos, "invalid integer".into()))?;
                Ok(SuperScalar::from_rational(
                    crate::grassmann::Rational::from_integer(n),
                ))
            }
            Some((pos, c)) if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some((_, c)) = self.peek() {
                    if c.is_alphabetic() {
                        name.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                let index = self.index()?;
                let g = generator_for(&name, index)
                    .map_err(|e| self.error_at(pos, e.to_string()))?;
                Ok(SuperScalar::generator(&g))
            }
            Some((pos, c)) => Err(self.error_at(pos, format!("unexpected character {c:?}"))),
        }
    }

    fn index(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => {
                let (pos, digits) = self.digits();
                digits
                    .parse()
                    .map_err(|_| self.error_at(pos, "index out of range".into()))
            }
            Some((upos, '_')) => {
                self.bump();
                let negative = if let Some((_, '-')) = self.peek() {
                    self.bump();
                    true
                } else {
                    false
                };
                let (pos, digits) = self.digits();
                if digits.is_empty() {
                    return Err(self.error_at(upos, "expected index after '_'".into()));
                }
                let i: i64 = digits
                    .parse()
                    .map_err(|_| self.error_at(pos, "index out of range".into()))?;
                Ok(if negative { -i } else { i })
            }
            _ => Ok(0),
        }
    }
}
