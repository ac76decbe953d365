//! Recursive-descent parser for field-element expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | primary
//! primary  := digits | 't' ['^' exponent] | '(' expr ')'
//! exponent := '(' ['-'] digits ['/' digits] ')' | digits
//! ```
//!
//! A rational literal `a/b` parses as a quotient, which is the same element.

use num_bigint::BigInt;
use thiserror::Error;

use super::{HReal, NonArchError};
use crate::field::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::DivisionByZero { position } => {
                *position
            }
        }
    }
}

/// Parses an expression in `t` into an exact field element.
pub fn parse_hreal(text: &str) -> Result<HReal, NonArchError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input").into());
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<HReal, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<HReal, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let d = self.unary()?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| ParseError::DivisionByZero { position: at })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<HReal, ParseError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<HReal, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b't') => {
                self.pos += 1;
                if self.eat(b'^') {
                    Ok(HReal::t_pow(self.exponent()?))
                } else {
                    Ok(HReal::t())
                }
            }
            Some(c) if c.is_ascii_digit() => {
                Ok(HReal::from_rational(Rational::from_integer(self.digits()?)))
            }
            Some(_) => Err(self.error("expected a number, 't' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        if !self.eat(b'(') {
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Ok(Rational::from_integer(self.digits()?));
            }
            return Err(self.error("expected '(' or digits after '^'"));
        }
        let neg = self.eat(b'-');
        let mut num = self.digits()?;
        if neg {
            num = -num;
        }
        let mut den = BigInt::from(1);
        if self.eat(b'/') {
            let at = self.pos;
            den = self.digits()?;
            if den == BigInt::from(0) {
                return Err(ParseError::DivisionByZero { position: at });
            }
        }
        self.expect(b')')?;
        Ok(Rational::new(num, den))
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn spec_expressions() {
        let a = parse_hreal("3/2 + 2*t^(1/2) - t^2").unwrap();
        assert_eq!(a.valuation().unwrap(), rat(0, 1));
        assert_eq!(a.leading_coefficient().unwrap(), rat(3, 2));

        let b = parse_hreal("1/t").unwrap();
        assert_eq!(b.valuation().unwrap(), rat(-1, 1));

        let c = parse_hreal("(1+t)/(1-t)").unwrap();
        assert_eq!(c.valuation().unwrap(), rat(0, 1));
        assert_eq!(c.shadow().unwrap(), rat(1, 1));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_hreal("1 + * t").unwrap_err();
        assert!(matches!(
            e,
            NonArchError::Parse(ParseError::Syntax { position: 4, .. })
        ));
        let e = parse_hreal("3/(t - t)").unwrap_err();
        assert!(matches!(
            e,
            NonArchError::Parse(ParseError::DivisionByZero { position: 2 })
        ));
        assert!(parse_hreal("(1 + t").is_err());
        assert!(parse_hreal("t^(1/0)").is_err());
        assert!(parse_hreal("2 t").is_err());
        assert!(parse_hreal("").is_err());
    }

    #[test]
    fn negative_exponents_and_unary_minus() {
        assert_eq!(
            parse_hreal("t^(-2)").unwrap(),
            parse_hreal("1/(t*t)").unwrap()
        );
        assert_eq!(
            parse_hreal("-(t - 1)").unwrap(),
            parse_hreal("1 - t").unwrap()
        );
    }
}
