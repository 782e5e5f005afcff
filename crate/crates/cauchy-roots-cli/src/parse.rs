//! Exact parsing of polynomial expressions, points, and rationals.
//!
//! Grammar: integers, exact decimals (`1.25`), rationals via `/`, the
//! imaginary unit `i`, the variable `x`, operators `+ - * / ^`, and
//! parentheses. Multiplication is always explicit and every literal is
//! converted to an exact rational; exponent-style floats such as `1e-3`
//! are rejected rather than approximated.

use std::fmt;
use std::str::FromStr;

use cauchy_roots::exactnum::{GaussianRational, Rational};
use cauchy_roots::poly::{GaussPoly, Poly};

/// Parse failure with byte position and the token classes that would have
/// been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    ImagUnit,
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                toks.push((k, Tok::Plus));
                k += 1;
            }
            '-' => {
                toks.push((k, Tok::Minus));
                k += 1;
            }
            '*' => {
                toks.push((k, Tok::Star));
                k += 1;
            }
            '/' => {
                toks.push((k, Tok::Slash));
                k += 1;
            }
            '^' => {
                toks.push((k, Tok::Caret));
                k += 1;
            }
            '(' => {
                toks.push((k, Tok::LParen));
                k += 1;
            }
            ')' => {
                toks.push((k, Tok::RParen));
                k += 1;
            }
            'i' => {
                toks.push((k, Tok::ImagUnit));
                k += 1;
            }
            'x' => {
                toks.push((k, Tok::Var));
                k += 1;
            }
            '0'..='9' | '.' => {
                let start = k;
                let mut seen_dot = false;
                while k < bytes.len() {
                    match bytes[k] as char {
                        '0'..='9' => k += 1,
                        '.' if !seen_dot => {
                            seen_dot = true;
                            k += 1;
                        }
                        _ => break,
                    }
                }
                let lit = &text[start..k];
                if lit == "." {
                    return Err(ParseError {
                        pos: start,
                        message: "lone '.' is not a number".into(),
                        expected: vec!["digits"],
                    });
                }
                toks.push((start, Tok::Num(lit.to_string())));
            }
            other => {
                return Err(ParseError {
                    pos: k,
                    message: format!("unexpected character '{other}'"),
                    expected: vec!["number", "i", "x", "operator", "parenthesis"],
                });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        t
    }

    fn err(&self, message: impl Into<String>, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            pos: self.pos(),
            message: message.into(),
            expected,
        }
    }

    fn expr(&mut self) -> Result<GaussPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GaussPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(Tok::Slash) => {
                    let at = self.pos();
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(ParseError {
                            pos: at,
                            message: "division by zero".into(),
                            expected: vec![],
                        });
                    }
                    if rhs.degree() != Some(0) {
                        return Err(ParseError {
                            pos: at,
                            message: "division by a non-constant polynomial".into(),
                            expected: vec!["constant divisor"],
                        });
                    }
                    let inv = rhs.coeff(0).recip();
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<GaussPoly, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let inner = self.unary()?;
            return Ok(-&inner);
        }
        self.power()
    }

    fn power(&mut self) -> Result<GaussPoly, ParseError> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.bump();
        let at = self.pos();
        let Some(Tok::Num(lit)) = self.bump() else {
            return Err(ParseError {
                pos: at,
                message: "exponent must be a nonnegative integer literal".into(),
                expected: vec!["integer"],
            });
        };
        if lit.contains('.') {
            return Err(ParseError {
                pos: at,
                message: "exponent must be an integer".into(),
                expected: vec!["integer"],
            });
        }
        let exp: u32 = lit.parse().map_err(|_| ParseError {
            pos: at,
            message: "exponent out of range".into(),
            expected: vec!["integer"],
        })?;
        if exp > 4096 {
            return Err(ParseError {
                pos: at,
                message: "exponent too large".into(),
                expected: vec![],
            });
        }
        let mut acc = GaussPoly::one();
        for _ in 0..exp {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<GaussPoly, ParseError> {
        let at = self.pos();
        match self.bump() {
            Some(Tok::Num(lit)) => {
                let r = Rational::from_str(&lit).map_err(|_| ParseError {
                    pos: at,
                    message: format!("bad numeric literal '{lit}'"),
                    expected: vec!["number"],
                })?;
                Ok(GaussPoly::constant(GaussianRational::from_re(r)))
            }
            Some(Tok::ImagUnit) => Ok(GaussPoly::constant(GaussianRational::i())),
            Some(Tok::Var) => Ok(Poly::x()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError {
                        pos: self.pos().saturating_sub(1),
                        message: "unbalanced parenthesis".into(),
                        expected: vec![")"],
                    }),
                }
            }
            Some(tok) => Err(ParseError {
                pos: at,
                message: format!("unexpected token {tok:?}"),
                expected: vec!["number", "i", "x", "("],
            }),
            None => Err(ParseError {
                pos: at,
                message: "unexpected end of input".into(),
                expected: vec!["number", "i", "x", "("],
            }),
        }
    }
}

/// Parses an exact polynomial expression in `x` over the Gaussian rationals.
pub fn parse_poly(text: &str) -> Result<GaussPoly, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            message: "empty input".into(),
            expected: vec!["expression"],
        });
    }
    let mut p = Parser {
        toks,
        cursor: 0,
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.cursor != p.toks.len() {
        return Err(p.err(
            "trailing input after expression",
            vec!["+", "-", "*", "/", "^", "end of input"],
        ));
    }
    Ok(poly)
}

/// Parses a constant expression into a point of the complex plane.
pub fn parse_point(text: &str) -> Result<GaussianRational, ParseError> {
    let p = parse_poly(text)?;
    match p.degree() {
        None => Ok(GaussianRational::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(ParseError {
            pos: 0,
            message: "expected a constant, found a polynomial in x".into(),
            expected: vec!["constant expression"],
        }),
    }
}

/// Parses a constant real expression into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let z = parse_point(text)?;
    if !z.is_real() {
        return Err(ParseError {
            pos: 0,
            message: "expected a real constant".into(),
            expected: vec!["rational"],
        });
    }
    Ok(z.re().clone())
}

/// Canonical expression text for a polynomial; `parse_poly` inverts it.
pub fn render(p: &GaussPoly) -> String {
    p.to_string()
}
