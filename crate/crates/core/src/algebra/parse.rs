//! Polynomial expression parser.
//!
//! Grammar (whitespace insignificant, implicit multiplication rejected):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'x' | 'y' | 'z' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::field::FieldSpec;
use super::monomial::{Monomial, Var};
use super::poly::Polynomial;
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, field: FieldSpec) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, field, len: text.len() };
    let out = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Parse { pos: t.pos, msg: format!("unexpected {:?}", t.kind) });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Num(BigInt),
    Var(Var),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            out.push(Token { kind: Kind::Num(s.parse().expect("digits")), pos });
        } else if let Some(v) = Var::from_name(c) {
            out.push(Token { kind: Kind::Var(v), pos });
            it.next();
        } else if "+-*^/()".contains(c) {
            out.push(Token { kind: Kind::Op(c), pos });
            it.next();
        } else if c == '\u{2212}' {
            out.push(Token { kind: Kind::Op('-'), pos });
            it.next();
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    // Reject implicit multiplication: two operands side by side.
    for w in out.windows(2) {
        let operand_end = matches!(w[0].kind, Kind::Num(_) | Kind::Var(_) | Kind::Op(')'));
        let operand_start = matches!(w[1].kind, Kind::Num(_) | Kind::Var(_) | Kind::Op('('));
        if operand_end && operand_start {
            return Err(Error::Parse { pos: w[1].pos, msg: "implicit multiplication".into() });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    field: FieldSpec,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Token { kind: Kind::Op(o), .. }) if *o == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn here(&self) -> usize {
        self.peek().map(|t| t.pos).unwrap_or(self.len)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat_op('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat_op('-') {
            Ok(-&self.unary()?)
        } else if self.eat_op('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat_op('^') {
            let pos = self.here();
            match self.peek().map(|t| t.kind.clone()) {
                Some(Kind::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|e| *e <= 1000)
                        .ok_or_else(|| Error::Parse { pos, msg: "exponent too large".into() })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse { pos, msg: "expected integer exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.here();
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| Error::Parse { pos, msg: "unexpected end of input".into() })?;
        self.pos += 1;
        match tok.kind {
            Kind::Num(n) => {
                if self.eat_op('/') {
                    let dpos = self.here();
                    match self.peek().map(|t| t.kind.clone()) {
                        Some(Kind::Num(d)) => {
                            self.pos += 1;
                            let c = self.field.from_ratio(&n, &d)?;
                            Ok(Polynomial::constant(self.field, c))
                        }
                        _ => Err(Error::Parse { pos: dpos, msg: "expected integer denominator".into() }),
                    }
                } else {
                    Ok(Polynomial::constant(self.field, self.field.from_bigint(&n)))
                }
            }
            Kind::Var(v) => Ok(Polynomial::term(self.field, Monomial::var(v, 1), self.field.one())),
            Kind::Op('(') => {
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse { pos: self.here(), msg: "expected ')'".into() });
                }
                Ok(inner)
            }
            Kind::Op(c) => Err(Error::Parse { pos, msg: format!("unexpected '{c}'") }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Result<Polynomial> {
        parse_polynomial(s, FieldSpec::rationals())
    }

    #[test]
    fn reads_terms() {
        let p = q("x^3 - y^2*z").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Monomial::xyz(3, 0, 0)), FieldSpec::rationals().one());
        assert_eq!(p.coeff(&Monomial::xyz(0, 2, 1)), FieldSpec::rationals().from_i64(-1));
    }

    #[test]
    fn cancellation_and_rational_literals() {
        assert!(q("x - x").unwrap().is_zero());
        let p = q("1/2*x*y + 1/2*x*y").unwrap();
        assert_eq!(p.num_terms(), 1);
        assert!(p.coeff(&Monomial::xyz(1, 1, 0)).is_one());
    }

    #[test]
    fn parentheses_and_unicode_minus() {
        assert_eq!(q("(x+y)^2").unwrap(), q("x^2 + 2*x*y + y^2").unwrap());
        assert_eq!(q("x \u{2212} y").unwrap(), q("x - y").unwrap());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match q("x +* y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        match q("2x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(q("x^y"), Err(Error::Parse { .. })));
        assert!(matches!(q("(x"), Err(Error::Parse { .. })));
        assert!(matches!(q("w"), Err(Error::Parse { .. })));
    }

    #[test]
    fn unrepresentable_coefficient() {
        let f = FieldSpec::prime(7).unwrap();
        assert!(matches!(parse_polynomial("1/7*x", f), Err(Error::Unrepresentable(_))));
        assert!(parse_polynomial("1/3*x", f).is_ok());
    }
}
