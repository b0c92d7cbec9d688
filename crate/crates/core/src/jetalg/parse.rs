//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := number | variable | '(' expr ')'
//! number := digits ('/' digits)?
//! ```
//! Variables are `X Y Z W` in four-variable mode and `x y` in two-variable mode.
//! Juxtaposition is rejected: write `2*X`, not `2X`.

use num::{BigInt, One, Zero};

use super::monomial::var_names;
use super::poly::Poly;
use super::{JetError, Rat};

pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly, JetError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, nvars, names: var_names(nvars) };
    let out = p.expr()?;
    p.ws();
    if p.pos < p.s.len() {
        let c = p.s[p.pos] as char;
        let msg = if c.is_ascii_alphanumeric() || c == '(' {
            "implicit multiplication is not allowed; use `*`".to_string()
        } else {
            format!("unexpected character `{c}`")
        };
        return Err(p.err(msg));
    }
    Ok(out)
}

/// Parse a comma-separated list, e.g. a surface `x, x*y, y^2, y^3`.
pub fn parse_poly_list(text: &str, nvars: usize) -> Result<Vec<Poly>, JetError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let p = parse_poly(piece, nvars).map_err(|e| match e {
            JetError::Parse { pos, msg } => JetError::Parse { pos: pos + offset, msg },
            other => other,
        })?;
        out.push(p);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parse a rational literal such as `-2/5`.
pub fn parse_rat(text: &str) -> Result<Rat, JetError> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let r = Parser { s: body.as_bytes(), pos: 0, nvars: 4, names: var_names(4) }.number_only()?;
    Ok(if neg { -r } else { r })
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
    names: &'static [&'static str],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> JetError {
        JetError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, JetError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, JetError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, JetError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, JetError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| JetError::Parse { pos: start, msg: "exponent too large".into() })?;
            return Ok(base.pow_trunc(e, None));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, JetError> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.number()?;
                Ok(Poly::constant(self.nvars, r))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = (c as char).to_string();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => {
                        self.pos += 1;
                        if let Some(n) = self.s.get(self.pos) {
                            if n.is_ascii_alphanumeric() {
                                return Err(self.err("implicit multiplication is not allowed; use `*`"));
                            }
                        }
                        Ok(Poly::var(self.nvars, i))
                    }
                    None => Err(self.err(format!(
                        "unknown variable `{}`; expected one of {}",
                        name,
                        self.names.join(", ")
                    ))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character `{}`", c as char))),
        }
    }

    fn digits(&mut self) -> Result<u64, JetError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| JetError::Parse { pos: start, msg: "integer too large".into() })
    }

    fn bigint(&mut self) -> Result<BigInt, JetError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse::<BigInt>().unwrap())
    }

    fn number(&mut self) -> Result<Rat, JetError> {
        let n = self.bigint()?;
        if self.s.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let d = self.bigint()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Rat::new(n, d));
        }
        Ok(Rat::new(n, BigInt::one()))
    }

    fn number_only(mut self) -> Result<Rat, JetError> {
        let r = self.number()?;
        if self.pos != self.s.len() {
            return Err(self.err("trailing characters after number"));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jetalg::poly::rat;

    #[test]
    fn literals_and_operators() {
        let p = parse_poly("-2/5*X^2 + (Y - Z)*W", 4).unwrap();
        assert_eq!(p.to_string(), "-2/5*X^2 + Y*W - Z*W");
        assert_eq!(parse_rat("-2/5").unwrap(), rat(-2, 5));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
    }

    #[test]
    fn implicit_multiplication_rejected() {
        for bad in ["2X", "X Y", "XY", "2(X+Y)", "(X)(Y)"] {
            let e = parse_poly(bad, 4).unwrap_err();
            assert!(matches!(e, JetError::Parse { .. }), "{bad}");
        }
    }

    #[test]
    fn variables_are_checked() {
        assert!(parse_poly("x + X", 2).is_err());
        assert!(parse_poly("x*y", 4).is_err());
        assert!(parse_poly("x*y^3", 2).is_ok());
    }

    #[test]
    fn errors_report_position() {
        match parse_poly("X + + ", 4) {
            Err(JetError::Parse { pos, .. }) => assert!(pos >= 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("1/0", 4).is_err());
        assert!(parse_poly("(X", 4).is_err());
        assert!(parse_poly("", 4).is_err());
    }

    #[test]
    fn surface_list() {
        let v = parse_poly_list("x, x*y, y^2, y^3", 2).unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v[3].to_string(), "y^3");
    }
}
