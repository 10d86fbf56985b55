//! Reader for the compact polynomial notation used to transcribe binomials
//! and resolution matrices, e.g. `x1^{E-1}x3 + x1^{E-4}x2^3`.
//!
//! Exponents are integers or `{name}`, `{name+k}`, `{name-k}` with `name`
//! bound in the supplied environment. Coefficients are optional integers.

use super::poly::{Monomial, Polynomial, NVARS};
use crate::error::{Error, Result};

pub(crate) fn parse(src: &str, env: &[(&str, i64)]) -> Result<Polynomial> {
    let mut p = Parser {
        chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        env,
        src,
    };
    let poly = p.poly()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(poly)
}

pub(crate) fn parse_row(srcs: &[&str], env: &[(&str, i64)]) -> Result<Vec<Polynomial>> {
    srcs.iter().map(|s| parse(s, env)).collect()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    env: &'a [(&'a str, i64)],
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Structure(format!("{what} at {} in {:?}", self.pos, self.src))
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

    fn number(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .expect("digits")
        })
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, sign * c));
            sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                break;
            };
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Monomial, i64)> {
        let coefficient = self.number();
        let mut e = [0i64; NVARS];
        let mut any = false;
        while self.eat('x') {
            any = true;
            let k = self.number().ok_or_else(|| self.error("expected variable index"))?;
            if !(1..=NVARS as i64).contains(&k) {
                return Err(self.error("variable index out of range"));
            }
            e[k as usize - 1] += if self.eat('^') { self.exponent()? } else { 1 };
        }
        if !any && coefficient.is_none() {
            return Err(self.error("expected term"));
        }
        let m = Monomial::from_signed(e)
            .map_err(|err| Error::Consistency(format!("{err} in {:?} with {:?}", self.src, self.env)))?;
        Ok((m, coefficient.unwrap_or(1)))
    }

    fn exponent(&mut self) -> Result<i64> {
        if let Some(n) = self.number() {
            return Ok(n);
        }
        if !self.eat('{') {
            return Err(self.error("expected exponent"));
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let mut value = self
            .env
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
            .ok_or_else(|| self.error("unbound exponent name"))?;
        if self.eat('+') {
            value += self.number().ok_or_else(|| self.error("expected offset"))?;
        } else if self.eat('-') {
            value -= self.number().ok_or_else(|| self.error("expected offset"))?;
        }
        if !self.eat('}') {
            return Err(self.error("expected '}'"));
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_terms() {
        let p = parse("x1^{E-1}x3 + x1^{E-4}x2^3", &[("E", 6)]).unwrap();
        assert_eq!(p.to_string(), "x1^5x3 + x1^2x2^3");
        assert_eq!(parse("-x2^3+x1^3x3", &[]).unwrap().to_string(), "x1^3x3 - x2^3");
        assert!(parse("0", &[]).unwrap().is_zero());
        assert_eq!(parse("2x4", &[]).unwrap().to_string(), "2x4");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("x1^{E-6}", &[("E", 5)]), Err(Error::Consistency(_))));
        assert!(parse("x5", &[]).is_err());
        assert!(parse("x1^{F}", &[("E", 1)]).is_err());
        assert!(parse("x1 +", &[]).is_err());
    }
}
