//! A small LP text format.
//!
//! ```text
//! # comment
//! max: 3 x1 + 5 x2;
//! c1: x1 <= 4;
//! c2: x2 >= 6;
//! 3x1 + 2x2 >= 18;        # unnamed rows become R<k>
//! half: 1/2 x1 + 0.25 x2 = 3;
//! ```
//!
//! All variables are nonnegative. Numbers may be integers, decimals or
//! `p/q` fractions and are kept exact. Terms for the same variable are
//! summed.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};
use crate::model::{GeneralProblem, Relation, Sense};
use crate::scalar::parse_rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(BigRational),
    Colon,
    Semi,
    Plus,
    Minus,
    Star,
    Slash,
    Rel(Relation),
    BadRel(String),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let single = |tok| Token { tok, line, column };
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || "_.[]".contains(chars[i])) {
                    i += 1;
                }
                out.push(single(Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            if c.is_ascii_digit() || c == '.' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let value = parse_rational(&lit).ok_or_else(|| err(line, column, format!("bad number `{lit}`")))?;
                out.push(single(Tok::Num(value)));
                continue;
            }
            if "<>=!".contains(c) {
                let start = i;
                while i < chars.len() && "<>=!".contains(chars[i]) {
                    i += 1;
                }
                let op: String = chars[start..i].iter().collect();
                let tok = match op.as_str() {
                    "<=" => Tok::Rel(Relation::LessEq),
                    ">=" => Tok::Rel(Relation::GreaterEq),
                    "=" => Tok::Rel(Relation::Equal),
                    _ => Tok::BadRel(op),
                };
                out.push(single(tok));
                continue;
            }
            let tok = match c {
                ':' => Tok::Colon,
                ';' => Tok::Semi,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                other => return Err(err(line, column, format!("unexpected character `{other}`"))),
            };
            out.push(single(tok));
            i += 1;
        }
    }
    let (line, column) = match out.last() {
        Some(t) => (t.line, t.column + 1),
        None => (1, 1),
    };
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let t = self.peek();
        Err(err(t.line, t.column, message))
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek().tok == want {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    /// `integer | decimal | integer "/" integer`
    fn number(&mut self) -> Result<BigRational, ParseError> {
        let Tok::Num(n) = self.peek().tok.clone() else {
            return self.fail("expected a number");
        };
        self.bump();
        if self.peek().tok == Tok::Slash {
            self.bump();
            let at = self.peek().clone();
            let Tok::Num(d) = at.tok else {
                return self.fail("expected a denominator");
            };
            if !n.is_integer() || !d.is_integer() {
                return Err(err(at.line, at.column, "fractions need integer parts"));
            }
            if d.is_zero() {
                return Err(err(at.line, at.column, "zero denominator"));
            }
            self.bump();
            return Ok(n / d);
        }
        Ok(n)
    }

    fn linexpr(&mut self) -> Result<Vec<(String, BigRational)>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek().tok {
            Tok::Plus => {
                self.bump();
                false
            }
            Tok::Minus => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let coef = if matches!(self.peek().tok, Tok::Num(_)) {
                let c = self.number()?;
                if self.peek().tok == Tok::Star {
                    self.bump();
                }
                c
            } else {
                BigRational::one()
            };
            let Tok::Ident(name) = self.peek().tok.clone() else {
                return self.fail("expected a variable name");
            };
            self.bump();
            terms.push((name, if negative { -coef } else { coef }));
            negative = match self.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(terms)
    }
}

/// Parses LP source text into a [`GeneralProblem`].
pub fn parse_lp(text: &str) -> Result<GeneralProblem> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };

    let sense = match (&p.peek().tok, p.peek_at(1)) {
        (Tok::Ident(k), Tok::Colon) if k == "max" || k == "maximize" => Sense::Maximize,
        (Tok::Ident(k), Tok::Colon) if k == "min" || k == "minimize" => Sense::Minimize,
        _ => return Err(p.fail::<()>("expected `max:` or `min:`").unwrap_err().into()),
    };
    p.bump();
    p.bump();
    let mut gp = GeneralProblem::new(sense);
    if p.peek().tok == Tok::Semi {
        return Err(p.fail::<()>("empty objective").unwrap_err().into());
    }
    for (name, coef) in p.linexpr()? {
        gp.add_objective_term(&name, coef);
    }
    p.expect(Tok::Semi, "`;` after the objective")?;

    let mut count = 0;
    while p.peek().tok != Tok::Eof {
        count += 1;
        let start = p.peek().clone();
        let name = match (&start.tok, p.peek_at(1)) {
            (Tok::Ident(n), Tok::Colon) => {
                let n = n.clone();
                p.bump();
                p.bump();
                n
            }
            _ => format!("R{count}"),
        };
        let terms = p.linexpr()?;
        let relation = match p.peek().tok.clone() {
            Tok::Rel(r) => r,
            Tok::BadRel(op) => return Err(p.fail::<()>(format!("unknown relation `{op}`")).unwrap_err().into()),
            _ => return Err(p.fail::<()>("expected `<=`, `>=` or `=`").unwrap_err().into()),
        };
        p.bump();
        let negative = match p.peek().tok {
            Tok::Minus => {
                p.bump();
                true
            }
            Tok::Plus => {
                p.bump();
                false
            }
            _ => false,
        };
        let rhs = p.number()?;
        p.expect(Tok::Semi, "`;` after the constraint")?;
        let refs: Vec<(&str, BigRational)> = terms.iter().map(|(n, c)| (n.as_str(), c.clone())).collect();
        gp.add_constraint(&name, &refs, relation, if negative { -rhs } else { rhs })
            .map_err(|e| match e {
                Error::DuplicateConstraint(n) => Error::Parse(err(
                    start.line,
                    start.column,
                    format!("duplicate constraint name `{n}`"),
                )),
                other => other,
            })?;
    }
    if gp.constraints().is_empty() {
        return Err(Error::EmptyProblem);
    }
    Ok(gp)
}

fn format_number(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn write_expr(out: &mut String, terms: &[(&str, &BigRational)]) {
    for (k, (name, coef)) in terms.iter().enumerate() {
        let magnitude = coef.abs();
        match (k, coef.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if magnitude == BigRational::one() {
            out.push_str(name);
        } else {
            let _ = write!(out, "{} {}", format_number(&magnitude), name);
        }
    }
}

/// Renders a problem in the LP text format. The objective lists every
/// variable (zeros included) so that variable order survives a round trip.
pub fn print_lp(gp: &GeneralProblem) -> String {
    let names: Vec<&str> = gp.variables().iter().map(|v| v.name.as_str()).collect();
    let mut out = String::new();
    out.push_str(match gp.sense() {
        Sense::Maximize => "max: ",
        Sense::Minimize => "min: ",
    });
    let obj: Vec<(&str, &BigRational)> = names.iter().copied().zip(gp.objective()).collect();
    write_expr(&mut out, &obj);
    out.push_str(";\n");
    let zero = BigRational::from_integer(BigInt::zero());
    for con in gp.constraints() {
        let _ = write!(out, "{}: ", con.name);
        let mut terms: Vec<(&str, &BigRational)> = names
            .iter()
            .copied()
            .zip(&con.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            terms.push((names[0], &zero));
        }
        write_expr(&mut out, &terms);
        let _ = writeln!(out, " {} {};", con.relation, format_number(&con.rhs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::standardize;

    const WORKED: &str =
        "max: 3 x1 + 5 x2; c1: x1 <= 4; c2: x2 >= 6; c3: 3x1 + 2x2 >= 18; c4: x1 + x2 >= 8; c5: 5x1 + 4x2 >= 32;";

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_worked_example() {
        let gp = parse_lp(WORKED).unwrap();
        assert_eq!(gp.sense(), Sense::Maximize);
        assert_eq!(gp.objective(), &[q(3, 1), q(5, 1)]);
        assert_eq!(gp.constraints().len(), 5);
        assert_eq!(gp.constraints()[2].coefficients, vec![q(3, 1), q(2, 1)]);
        assert_eq!(gp.constraints()[2].relation, Relation::GreaterEq);
        let sp = standardize(&gp).unwrap();
        assert_eq!(sp.b()[4], q(-32, 1));
    }

    #[test]
    fn no_constraints_is_empty_problem() {
        assert_eq!(parse_lp("max: x;"), Err(Error::EmptyProblem));
    }

    #[test]
    fn rationals_are_exact() {
        let gp = parse_lp("max: 1/3 x; c: x <= 2/3;").unwrap();
        assert_eq!(gp.objective(), &[q(1, 3)]);
        assert_eq!(gp.constraints()[0].rhs, q(2, 3));
        let again = parse_lp(&print_lp(&gp)).unwrap();
        assert_eq!(again, gp);
    }

    #[test]
    fn comments_signs_and_unnamed_rows() {
        let text = "# header\nmin: -x + 2.5*y; # trailing\n-x - y >= -4;\n2 y - x = 1;\n";
        let gp = parse_lp(text).unwrap();
        assert_eq!(gp.sense(), Sense::Minimize);
        assert_eq!(gp.objective(), &[q(-1, 1), q(5, 2)]);
        assert_eq!(gp.constraints()[0].name, "R1");
        assert_eq!(gp.constraints()[0].rhs, q(-4, 1));
        assert_eq!(gp.constraints()[1].coefficients, vec![q(-1, 1), q(2, 1)]);
    }

    #[test]
    fn repeated_terms_sum() {
        let gp = parse_lp("max: x + x; c: x + 2 x - y <= 1;").unwrap();
        assert_eq!(gp.objective(), &[q(2, 1), q(0, 1)]);
        assert_eq!(gp.constraints()[0].coefficients, vec![q(3, 1), q(-1, 1)]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_lp("max: x;\nc: x =< 3;") {
            Err(Error::Parse(e)) => {
                assert_eq!((e.line, e.column), (2, 6));
                assert!(e.message.contains("unknown relation"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_lp("max: ;"), Err(Error::Parse(e)) if e.message.contains("empty objective")));
        assert!(matches!(parse_lp("maximize x;"), Err(Error::Parse(_))));
        assert!(matches!(parse_lp("max: x; c: x <= 1"), Err(Error::Parse(e)) if e.line == 1));
        assert!(matches!(parse_lp("max: x; c: x <= 1/0;"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_lp("max: x; c: x <= 1; c: x <= 2;"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_lp("max: x; c: x @ 1;"), Err(Error::Parse(_))));
    }

    #[test]
    fn printer_output_is_stable() {
        let gp = parse_lp(WORKED).unwrap();
        let text = print_lp(&gp);
        assert_eq!(
            text,
            "max: 3 x1 + 5 x2;\nc1: x1 <= 4;\nc2: x2 >= 6;\nc3: 3 x1 + 2 x2 >= 18;\nc4: x1 + x2 >= 8;\nc5: 5 x1 + 4 x2 >= 32;\n"
        );
        assert_eq!(parse_lp(&text).unwrap(), gp);
    }
}
