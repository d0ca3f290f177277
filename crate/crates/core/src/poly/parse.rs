//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' integer)*
//! atom   := integer | name | '(' expr ')'
//! name   := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is ignored between tokens. A leading sign is accepted so that
//! every rendered polynomial parses back.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{PolyError, PolyRing, Polynomial};

pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            message: msg.to_string(),
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

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent after '^'"));
            }
            let e: u32 = digits.parse().map_err(|_| PolyError::Syntax {
                pos: start,
                message: "exponent out of range".to_string(),
            })?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(Polynomial::constant(self.ring, n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match self.ring.index_of(name) {
                    Some(idx) => Ok(Polynomial::var(self.ring, idx)),
                    None => Err(PolyError::UnknownGenerator {
                        name: name.to_string(),
                        pos: start,
                    }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{CoefficientRing, Generator};

    fn ring(coeffs: CoefficientRing, names: &[(&str, u32)]) -> Arc<PolyRing> {
        PolyRing::new(
            coeffs,
            names.iter().map(|(n, d)| Generator::new(*n, *d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_terms() {
        let r = ring(CoefficientRing::Integers, &[("S", 2), ("T", 2)]);
        let p = parse("T^2 + S*T", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p, parse("  T T + S T ", &r).unwrap());
    }

    #[test]
    fn cube_over_f2() {
        let r = ring(CoefficientRing::F2, &[("S", 1), ("T", 1)]);
        let p = parse("(T+S)^3", &r).unwrap();
        let s = Polynomial::generator(&r, "S").unwrap();
        let t = Polynomial::generator(&r, "T").unwrap();
        let base = &t + &s;
        let oracle = &(&base * &base) * &base;
        assert_eq!(p, oracle);
        assert_eq!(p, parse("T^3+T^2*S+T*S^2+S^3", &r).unwrap());
    }

    #[test]
    fn declared_class_names() {
        let r = ring(CoefficientRing::F2, &[("w1", 1), ("w2", 2), ("T", 1)]);
        let p = parse("w1*T + w2", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring(CoefficientRing::F2, &[("S", 1)]);
        match parse("S + Q", &r) {
            Err(PolyError::UnknownGenerator { name, pos }) => {
                assert_eq!(name, "Q");
                assert_eq!(pos, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("S +", &r), Err(PolyError::Syntax { pos: 3, .. })));
        assert!(matches!(parse("(S", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("S^", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("S)", &r), Err(PolyError::Syntax { pos: 1, .. })));
    }

    #[test]
    fn integers_reduce_over_f2() {
        let r = ring(CoefficientRing::F2, &[("S", 1)]);
        assert!(parse("2*S", &r).unwrap().is_zero());
        assert_eq!(parse("3*S", &r).unwrap(), parse("S", &r).unwrap());
    }
}
