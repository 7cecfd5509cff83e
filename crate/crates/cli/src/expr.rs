//! A small expression grammar for typing field elements: integers,
//! rationals, decimals, the generator symbol `g`, `+ - * / ^` and
//! parentheses. `2*g^3 + (1+g)/2` parses the way it reads.

use anyhow::{anyhow, bail, Result};
use qpflow_core::field::{FieldElement, NumberField};
use qpflow_core::rational::parse_rat;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Generator,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            'g' => {
                out.push(Token::Generator);
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            _ => bail!("unexpected character {c:?} in element expression"),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: &'a NumberField,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.unary()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Star => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Token::Slash => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc
                        .div(&rhs)
                        .map_err(|e| anyhow!("division in expression: {e}"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FieldElement> {
        if self.peek() == Some(&Token::Minus) {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let negative = if self.peek() == Some(&Token::Minus) {
                self.next();
                true
            } else {
                false
            };
            let Some(Token::Number(n)) = self.next() else {
                bail!("expected an integer exponent after '^'");
            };
            let exp: i64 = n
                .parse()
                .map_err(|_| anyhow!("exponent {n:?} is not an integer"))?;
            let exp = if negative { -exp } else { exp };
            return base
                .pow(exp)
                .map_err(|e| anyhow!("exponentiation in expression: {e}"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldElement> {
        match self.next() {
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.next() != Some(Token::RParen) {
                    bail!("missing closing parenthesis");
                }
                Ok(inner)
            }
            Some(Token::Generator) => Ok(self.field.generator()),
            Some(Token::Number(n)) => {
                let r = parse_rat(&n).map_err(|e| anyhow!("bad numeral {n:?}: {e}"))?;
                Ok(self.field.from_rat(r))
            }
            other => bail!("unexpected token {other:?} in element expression"),
        }
    }
}

/// Parses an element expression over the field generator symbol `g`.
pub fn parse_element(field: &NumberField, input: &str) -> Result<FieldElement> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
        field,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        bail!("trailing input in element expression at token {}", p.pos);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qpflow_core::rational::{rat, rat_int};

    #[test]
    fn parses_paper_style_elements() {
        let f = NumberField::quadratic(5).unwrap();
        assert_eq!(
            parse_element(&f, "2 + g").unwrap(),
            f.element(vec![rat_int(2), rat_int(1)]).unwrap()
        );
        assert_eq!(
            parse_element(&f, "(1 + g)/2").unwrap(),
            f.element(vec![rat(1, 2), rat(1, 2)]).unwrap()
        );
        assert_eq!(
            parse_element(&f, "1/2*(1+g)").unwrap(),
            f.element(vec![rat(1, 2), rat(1, 2)]).unwrap()
        );
        assert_eq!(
            parse_element(&f, "((1+g)/2)^3").unwrap(),
            f.element(vec![rat_int(2), rat_int(1)]).unwrap()
        );
        assert_eq!(
            parse_element(&f, "-g^2 + 0.5").unwrap(),
            f.element(vec![rat(1, 2) - rat_int(5), rat_int(0)]).unwrap()
        );
        assert_eq!(
            parse_element(&f, "g^-1").unwrap(),
            f.generator().inv().unwrap()
        );
    }

    #[test]
    fn quartic_combination() {
        // 2*sqrt6 + 4*sqrt3 + 5*sqrt2 + 5 in terms of g = sqrt2 + sqrt3
        let f = NumberField::new(
            qpflow_core::poly::IntPoly::from_i64(&[1, 0, -10, 0, 1]),
            3,
        )
        .unwrap();
        let alpha = parse_element(&f, "(g^3 + 2*g^2 - g)/2").unwrap();
        assert_eq!(
            alpha,
            f.element(vec![rat_int(0), rat(-1, 2), rat_int(1), rat(1, 2)])
                .unwrap()
        );
    }

    #[test]
    fn rejects_malformed() {
        let f = NumberField::quadratic(2).unwrap();
        assert!(parse_element(&f, "2 +").is_err());
        assert!(parse_element(&f, "(1 + g").is_err());
        assert!(parse_element(&f, "q").is_err());
        assert!(parse_element(&f, "1/0").is_err());
        assert!(parse_element(&f, "g^x").is_err());
        assert!(parse_element(&f, "1 2").is_err());
    }
}
