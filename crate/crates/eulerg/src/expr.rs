//! Restricted expression grammar for right-hand sides given on the
//! command line: decimal literals, `z`, `+ - * / ^`, `exp() sin() cos()
//! ln()`, parentheses. `^` binds tightest and associates to the right;
//! unary minus sits between `^` and `*`.

use crate::cplx::Cplx;
use crate::nonhomo::RhsFunction;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Z,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Exp(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    Ln(Box<Expr>),
}

impl Expr {
    /// Total evaluation: domain violations (0^w with Re w ≤ 0, ln 0)
    /// yield NaN, which downstream quadrature reports as a failure.
    pub fn eval(&self, z: Cplx) -> Cplx {
        let nan = Cplx::new(f64::NAN, f64::NAN);
        match self {
            Expr::Num(v) => Cplx::new(*v, 0.0),
            Expr::Z => z,
            Expr::Add(a, b) => a.eval(z) + b.eval(z),
            Expr::Sub(a, b) => a.eval(z) - b.eval(z),
            Expr::Mul(a, b) => a.eval(z) * b.eval(z),
            Expr::Div(a, b) => a.eval(z) / b.eval(z),
            Expr::Pow(a, b) => {
                let base = a.eval(z);
                let expo = b.eval(z);
                if base == Cplx::new(0.0, 0.0) {
                    if expo == Cplx::new(0.0, 0.0) {
                        Cplx::new(1.0, 0.0)
                    } else if expo.re > 0.0 {
                        Cplx::new(0.0, 0.0)
                    } else {
                        nan
                    }
                } else if expo.im == 0.0 && expo.re.fract() == 0.0 && expo.re.abs() <= 64.0 {
                    base.powi(expo.re as i32)
                } else {
                    base.powc(expo)
                }
            }
            Expr::Neg(a) => -a.eval(z),
            Expr::Exp(a) => a.eval(z).exp(),
            Expr::Sin(a) => a.eval(z).sin(),
            Expr::Cos(a) => a.eval(z).cos(),
            Expr::Ln(a) => {
                let v = a.eval(z);
                if v == Cplx::new(0.0, 0.0) {
                    nan
                } else {
                    v.ln()
                }
            }
        }
    }

    pub fn into_rhs(self) -> RhsFunction {
        RhsFunction::new(move |z| self.eval(z))
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, text };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} of {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            // right-associative; allow a unary minus in the exponent
            let expo = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(expo)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.ident(),
            _ => Err(self.error("expected a number, 'z', a function call or '('")),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_digit() || self.bytes[self.pos] == b'.')
        {
            self.pos += 1;
        }
        // optional exponent
        if self.pos < self.bytes.len() && matches!(self.bytes[self.pos], b'e' | b'E') {
            let mark = self.pos;
            self.pos += 1;
            if self.pos < self.bytes.len() && matches!(self.bytes[self.pos], b'+' | b'-') {
                self.pos += 1;
            }
            if self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            } else {
                self.pos = mark; // the 'e' belongs to something else
            }
        }
        let s = &self.text[start..self.pos];
        s.parse::<f64>()
            .map(Expr::Num)
            .map_err(|_| self.error("bad numeric literal"))
    }

    fn ident(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        if name == "z" {
            return Ok(Expr::Z);
        }
        let wrap: fn(Box<Expr>) -> Expr = match name {
            "exp" => Expr::Exp,
            "sin" => Expr::Sin,
            "cos" => Expr::Cos,
            "ln" => Expr::Ln,
            _ => return Err(self.error("unknown identifier")),
        };
        if self.peek() != Some(b'(') {
            return Err(self.error("function call needs '('"));
        }
        self.pos += 1;
        let arg = self.expr()?;
        if self.peek() != Some(b')') {
            return Err(self.error("expected ')'"));
        }
        self.pos += 1;
        Ok(wrap(Box::new(arg)))
    }
}
