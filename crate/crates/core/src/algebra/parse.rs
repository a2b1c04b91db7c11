//! Recursive-descent parser for polynomial expressions.
//!
//! Accepts the printed form (`3*x^2*y - 1/2*z + 4`) plus parentheses, unary
//! minus and division by nonzero constants. Multiplication must be explicit.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{BigRat, MVPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(src: &str, line0: usize, col0: usize) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (line0, col0);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            toks.push((t, tl, tc));
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n: BigInt = digits.parse().expect("ascii digits");
            col += i - start;
            toks.push((Tok::Num(n), tl, tc));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            toks.push((Tok::Ident(chars[start..i].iter().collect()), tl, tc));
            continue;
        }
        return Err(ParseError {
            line: tl,
            column: tc,
            message: alloc::format!("unexpected character '{c}'"),
        });
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, message: impl ToString) -> ParseError {
        let (_, line, column) = self.toks[self.pos];
        ParseError {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<MVPoly, ParseError> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                -self.term()?
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MVPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.pos;
                    let d = self.unary()?;
                    let c = match d.as_constant() {
                        Some(c) if !c.is_zero() => c,
                        _ => {
                            self.pos = at;
                            return Err(self.err("divisor must be a nonzero constant"));
                        }
                    };
                    acc = acc.scale(&(BigRat::from_integer(1.into()) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MVPoly, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MVPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Num(n) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(self.err("expected a nonnegative integer exponent"));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MVPoly, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(MVPoly::constant(BigRat::from_integer(n)))
            }
            Tok::Ident(v) => {
                self.bump();
                Ok(MVPoly::var(&v))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(self.err("unexpected end of input")),
            t => Err(self.err(alloc::format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a polynomial, reporting positions relative to `(line, column)`.
pub fn parse_poly_at(src: &str, line: usize, column: usize) -> Result<MVPoly, ParseError> {
    let lexer = lex(src, line, column)?;
    let mut p = Parser {
        toks: lexer.toks,
        pos: 0,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_poly(src: &str) -> Result<MVPoly, ParseError> {
    parse_poly_at(src, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_printed_form() {
        let p = parse_poly("s^3*t^3 + 6*s*t^2*x*y + 4*t*x^2*y + 4*t*x*y^2").unwrap();
        assert_eq!(p.to_string(), "s^3*t^3 + 6*s*t^2*x*y + 4*t*x^2*y + 4*t*x*y^2");
        assert_eq!(parse_poly("1/2*x - 3/4").unwrap().to_string(), "1/2*x - 3/4");
    }

    #[test]
    fn parentheses_and_unary_minus() {
        assert_eq!(parse_poly("-(x - 1)^3").unwrap().to_string(), "-x^3 + 3*x^2 - 3*x + 1");
        assert_eq!(parse_poly("t/2").unwrap().to_string(), "1/2*t");
        assert_eq!(parse_poly("0").unwrap(), MVPoly::zero());
    }

    #[test]
    fn error_positions() {
        let e = parse_poly("x + * y").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_poly("x / y").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_poly("x $").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_poly("(x + y").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(parse_poly("x y").is_err());
        assert!(parse_poly("").is_err());
    }
}
