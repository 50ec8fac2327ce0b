//! Recursive-descent parser for scalars and polynomials.
//!
//! Grammar:
//! ```text
//! expr   := [+|-] term {(+|-) term}
//! term   := factor {(*|/) factor}
//! factor := atom [^ exp]
//! exp    := [-] INT | ( expr )
//! atom   := INT | t | VAR | ( expr )
//! ```
//! Division is only allowed by constants, non-integer exponents only on
//! powers of `t`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeffs::{Coefficient, PuiseuxScalar, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Variable naming: `x1..xn`, then `l1..ll` and `h1..hl` for the λ and θ
/// variables of a projection ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarLayout {
    pub n: usize,
    pub l: usize,
}

impl VarLayout {
    pub fn new(n: usize, l: usize) -> Self {
        VarLayout { n, l }
    }

    pub fn nvars(&self) -> usize {
        self.n + 2 * self.l
    }

    pub fn name(&self, i: usize) -> String {
        if i < self.n {
            format!("x{}", i + 1)
        } else if i < self.n + self.l {
            format!("l{}", i - self.n + 1)
        } else {
            format!("h{}", i - self.n - self.l + 1)
        }
    }

    fn index(&self, name: &str) -> Option<usize> {
        let (head, digits) = name.split_at(1);
        let k: usize = digits.parse().ok()?;
        if k == 0 {
            return None;
        }
        match head {
            "x" if k <= self.n => Some(k - 1),
            "l" if k <= self.l => Some(self.n + k - 1),
            "h" if k <= self.l => Some(self.n + self.l + k - 1),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    T,
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    layout: &'a VarLayout,
}

type Spanned = (Tok, usize);

impl<'a> Lexer<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let col = self.pos + 1;
            if c.is_ascii_whitespace() {
                self.pos += 1;
                continue;
            }
            let single = match c {
                b'+' => Some(Tok::Plus),
                b'-' => Some(Tok::Minus),
                b'*' => Some(Tok::Star),
                b'/' => Some(Tok::Slash),
                b'^' => Some(Tok::Caret),
                b'(' => Some(Tok::LParen),
                b')' => Some(Tok::RParen),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, col));
                self.pos += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                out.push((Tok::Int(s.parse().unwrap()), col));
                continue;
            }
            if c.is_ascii_alphabetic() {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if s == "t" {
                    out.push((Tok::T, col));
                } else if let Some(i) = self.layout.index(s) {
                    out.push((Tok::Var(i), col));
                } else {
                    return Err(self.err(col, format!("unknown identifier `{s}`")));
                }
                continue;
            }
            return Err(self.err(col, format!("unexpected character `{}`", c as char)));
        }
        Ok(out)
    }
}

type P = Polynomial<PuiseuxScalar>;

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
    nvars: usize,
    _layout: &'a VarLayout,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col(),
            message: message.into(),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<P> {
        let neg = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(&Tok::Slash) {
                let col = self.col();
                let d = self.factor()?;
                if !d.is_constant() {
                    return Err(Error::Parse {
                        line: self.line,
                        column: col,
                        message: "division by a non-constant polynomial".into(),
                    });
                }
                let c = d.constant_coefficient();
                if c.is_zero() {
                    return Err(Error::Parse {
                        line: self.line,
                        column: col,
                        message: "division by zero".into(),
                    });
                }
                acc = acc.scale(&c.recip()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<P> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let col = self.col();
        let e = self.exponent()?;
        self.power(base, &e).map_err(|message| Error::Parse {
            line: self.line,
            column: col,
            message,
        })
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(&Tok::LParen) {
            let inner = self.expr()?;
            if !self.eat(&Tok::RParen) {
                return Err(self.err("expected `)`"));
            }
            if !inner.is_constant() {
                return Err(self.err("exponent must be a rational constant"));
            }
            return inner
                .constant_coefficient()
                .as_rational()
                .ok_or_else(|| self.err("exponent must be a rational constant"));
        }
        let neg = self.eat(&Tok::Minus);
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                let q = Rational::from_integer(k);
                Ok(if neg { -q } else { q })
            }
            _ => Err(self.err("expected an exponent")),
        }
    }

    fn power(&self, base: P, e: &Rational) -> std::result::Result<P, String> {
        if base.is_constant() {
            let c = base.constant_coefficient();
            if e.is_integer() {
                let k = e.to_integer().to_i64().ok_or("exponent too large")?;
                let v = c.pow(k).map_err(|_| "zero to a negative power".to_string())?;
                return Ok(P::constant(self.nvars, v));
            }
            // Fractional powers are only defined on t^a here.
            let num = c.numerator();
            let single = c.is_series() && num.len() == 1;
            let (a, coeff) = num.terms().next().ok_or("zero to a fractional power")?;
            if !single || !num_traits::One::is_one(coeff) {
                return Err("fractional exponents apply only to powers of t".into());
            }
            return Ok(P::constant(self.nvars, PuiseuxScalar::t_pow(a * e)));
        }
        if !e.is_integer() || e.is_negative() {
            return Err("polynomials take nonnegative integer exponents".into());
        }
        let k = e.to_integer().to_u32().ok_or("exponent too large")?;
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<P> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(k) => Ok(P::constant(
                self.nvars,
                PuiseuxScalar::from_rational(Rational::from_integer(k)),
            )),
            Tok::T => Ok(P::constant(self.nvars, PuiseuxScalar::t_pow(<Rational as One>::one()))),
            Tok::Var(i) => Ok(P::var(self.nvars, i)),
            Tok::LParen => {
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("expected a number, `t`, a variable or `(`"))
            }
        }
    }
}

/// Parse a polynomial over the valued field. `line` is only used for error
/// positions.
pub fn parse_polynomial(s: &str, layout: &VarLayout, line: usize) -> Result<P> {
    let toks = Lexer {
        src: s.as_bytes(),
        pos: 0,
        line,
        layout,
    }
    .tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_col: s.len() + 1,
        nvars: layout.nvars(),
        _layout: layout,
    };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parse a polynomial whose coefficients must be rational.
pub fn parse_rational_polynomial(s: &str, layout: &VarLayout, line: usize) -> Result<Polynomial<Rational>> {
    let p = parse_polynomial(s, layout, line)?;
    p.to_rational().ok_or_else(|| Error::Parse {
        line,
        column: 1,
        message: "coefficients involve t but the ring is over the rationals".into(),
    })
}

/// Parse a single rational number such as `-3/4` (used for weight vectors).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        return Some(Rational::new(a, b));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let f = Rational::new(frac.parse().ok()?, scale);
        let i = Rational::from_integer(int.abs());
        let v = i + f;
        return Some(if neg { -v } else { v });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}
