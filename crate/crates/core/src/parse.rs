//! Text syntax for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | ident | '(' expr ')'
//! ```
//!
//! Products need an explicit `*`; `/` only appears inside rational literals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{format_rational, Rational};

/// Checks that `vars` is a usable variable list.
pub fn validate_vars<S: AsRef<str>>(vars: &[S]) -> Result<()> {
    if vars.is_empty() {
        return Err(Error::InvalidVariables("no variables declared".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        let v = v.as_ref();
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric());
        if !ok {
            return Err(Error::InvalidVariables(format!("bad variable name `{v}`")));
        }
        if vars[..i].iter().any(|w| w.as_ref() == v) {
            return Err(Error::InvalidVariables(format!("duplicate variable `{v}`")));
        }
    }
    Ok(())
}

pub fn parse_poly<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial> {
    validate_vars(vars)?;
    let names: Vec<&str> = vars.iter().map(AsRef::as_ref).collect();
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars: &names,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let e = self
                .integer()?
                .ok_or_else(|| self.error("expected a nonnegative integer exponent"))?;
            let e: u32 = e.try_into().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<Option<BigInt>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(Some(digits.parse().expect("ascii digits")))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?.expect("digit present");
                let mut den = BigInt::one();
                if self.eat(b'/') {
                    let at = self.pos;
                    den = self
                        .integer()?
                        .ok_or_else(|| self.error("expected a denominator"))?;
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                }
                Ok(Polynomial::constant(self.nvars(), Rational::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match self.vars.iter().position(|v| *v == name) {
                    Some(j) => Ok(Polynomial::var(self.nvars(), j)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Renders `f` with terms in descending graded-lex order, e.g.
/// `3/4*x*y - y^2 + 1`. The output parses back to `f`.
pub fn format_poly<S: AsRef<str>>(f: &Polynomial, vars: &[S]) -> String {
    assert_eq!(vars.len(), f.nvars(), "variable names do not match arity");
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_constant() {
            factors.push(format_rational(&abs));
        }
        for (j, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[j].as_ref().to_string()),
                _ => factors.push(format!("{}^{}", vars[j].as_ref(), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Names `l1, ..., ln` used for dual (differential-operator) variables.
pub fn dual_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("l{j}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MultiIndex;
    use crate::rational::{rat, ratio};

    const XY: [&str; 2] = ["x", "y"];

    fn term(e: &[u32], c: Rational) -> (MultiIndex, Rational) {
        (MultiIndex::new(e.to_vec()), c)
    }

    #[test]
    fn parses_examples() {
        let f = parse_poly("x^2 - y", &XY).unwrap();
        assert_eq!(
            f,
            Polynomial::from_terms(2, [term(&[2, 0], rat(1)), term(&[0, 1], rat(-1))])
        );
        let g = parse_poly("3/4*x*y + 1", &XY).unwrap();
        assert_eq!(
            g,
            Polynomial::from_terms(2, [term(&[1, 1], ratio(3, 4)), term(&[0, 0], rat(1))])
        );
        assert_eq!(
            parse_poly("x + z", &XY),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn formats_examples() {
        assert_eq!(format_poly(&Polynomial::zero(2), &XY), "0");
        let f = Polynomial::from_terms(2, [term(&[2, 0], rat(1)), term(&[0, 1], rat(-1))]);
        assert_eq!(format_poly(&f, &XY), "x^2 - y");
        let g = Polynomial::from_terms(2, [term(&[1, 1], ratio(3, 4))]);
        assert_eq!(format_poly(&g, &XY), "3/4*x*y");
        let h = parse_poly("-1 + y - 2*x^3*y", &XY).unwrap();
        assert_eq!(format_poly(&h, &XY), "-2*x^3*y + y - 1");
    }

    #[test]
    fn grammar_details() {
        let p = |s: &str| parse_poly(s, &XY);
        assert_eq!(p("-x^2").unwrap(), p("0 - x*x").unwrap());
        assert_eq!(p("(x+1)^2").unwrap(), p("x^2+2*x+1").unwrap());
        assert_eq!(p("x*-y").unwrap(), p("-x*y").unwrap());
        assert_eq!(p("2^3").unwrap(), p("8").unwrap());
        assert_eq!(p(" 6/4 ").unwrap(), p("3/2").unwrap());
        assert!(matches!(p("2x"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(p("x y"), Err(Error::Syntax { .. })));
        assert!(matches!(p("x/2"), Err(Error::Syntax { .. })));
        assert!(matches!(p("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(p("x^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(p("(x+1"), Err(Error::Syntax { .. })));
        assert!(matches!(p(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(p("x +"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn variable_validation() {
        assert!(parse_poly("1", &[] as &[&str]).is_err());
        assert!(parse_poly("x", &["x", "x"]).is_err());
        assert!(parse_poly("x", &["x", "1y"]).is_err());
        assert!(parse_poly("x1*y2", &["x1", "y2"]).is_ok());
    }
}
