//! Canonical text form.
//!
//! Terms are written leading term first as `num/den * x^i y^j`, joined by
//! ` + ` or ` - `. Exponent-one factors drop the `^1`, constant terms drop the
//! monomial, and the zero polynomial is `0`. The parser accepts this grammar
//! and a little more: bare integers, `*` between factors, repeated variables.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{MPoly, Monomial, PolyError, VarTable};
use crate::rat::{format_rat, Rat};

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let body = if c.is_negative() { -c } else { c.clone() };
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&format_rat(&body))?;
            if !m.is_one() {
                f.write_str(" *")?;
                for (j, &e) in m.exponents().iter().enumerate() {
                    match e {
                        0 => {}
                        1 => write!(f, " {}", self.vars().name(j))?,
                        _ => write!(f, " {}^{}", self.vars().name(j), e)?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl MPoly {
    /// Canonical serialization, identical to the `Display` output.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarTable,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
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

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn number(&mut self) -> Result<Rat, PolyError> {
        let n: BigInt = self.digits().ok_or_else(|| self.err("expected digits"))?.parse().unwrap();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let d: BigInt = self
                .digits()
                .ok_or_else(|| self.err("expected denominator"))?
                .parse()
                .unwrap();
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rat::new(n, d))
        } else {
            Ok(Rat::from_integer(n))
        }
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    /// One term: an optional run of factors, at least one present.
    fn term(&mut self, sign: Rat) -> Result<(Monomial, Rat), PolyError> {
        let mut coeff = sign;
        let mut exps = vec![0u32; self.vars.len()];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.number()?;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let at = self.pos;
                    let name = self.ident();
                    let k = self.vars.index_of(name).ok_or(PolyError::Parse {
                        pos: at,
                        msg: format!("unknown variable `{name}`"),
                    })?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self
                            .digits()
                            .ok_or_else(|| self.err("expected exponent"))?
                            .parse()
                            .map_err(|_| self.err("exponent too large"))?;
                    }
                    exps[k] += e;
                }
                _ => break,
            }
            factors += 1;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    return Err(self.err("expected factor after `*`"));
                }
            }
        }
        if factors == 0 {
            return Err(self.err("expected term"));
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn poly(&mut self) -> Result<MPoly, PolyError> {
        let mut out = MPoly::zero(self.vars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty input")),
                Some(b'+') => {
                    self.pos += 1;
                    Rat::one()
                }
                Some(b'-') => {
                    self.pos += 1;
                    -Rat::one()
                }
                Some(_) if first => Rat::one(),
                Some(c) => return Err(self.err(format!("unexpected `{}`", c as char))),
            };
            first = false;
            let (m, c) = self.term(sign)?;
            out.add_term(m, c);
        }
        Ok(out)
    }
}

/// Parses a polynomial over `vars` from the canonical text form.
pub fn parse_poly(s: &str, vars: &VarTable) -> Result<MPoly, PolyError> {
    Parser {
        src: s.as_bytes(),
        pos: 0,
        vars,
    }
    .poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn canonical_form() {
        let v = VarTable::of(&["x", "y"]);
        let x = MPoly::var(&v, "x").unwrap();
        let y = MPoly::var(&v, "y").unwrap();
        let p = &(&x.pow(2) * &y).scale(&rat(-1, 2)) + &MPoly::constant(&v, int(3));
        assert_eq!(p.to_string(), "-1/2 * x^2 y + 3/1");
        let q = &(&x * &y) - &y.pow(2).scale(&int(2));
        assert_eq!(q.to_string(), "1/1 * x y - 2/1 * y^2");
        assert_eq!(MPoly::zero(&v).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        let v = VarTable::of(&["x", "y"]);
        for s in ["-1/2 * x^2 y + 3/1", "1/1 * x y - 2/1 * y^2", "0", "7/3"] {
            assert_eq!(parse_poly(s, &v).unwrap().to_string(), s);
        }
        let loose = parse_poly("2*x*x - x^2 + 3 y", &v).unwrap();
        assert_eq!(loose.to_string(), "1/1 * x^2 + 3/1 * y");
    }

    #[test]
    fn parse_errors() {
        let v = VarTable::of(&["x"]);
        assert!(matches!(parse_poly("", &v), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x +", &v), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("1/0 * x", &v), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("z", &v), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x ^", &v), Err(PolyError::Parse { .. })));
    }
}
