//! Recursive-descent parser.
//!
//! ```text
//! expr    := signed (('+' | '-') signed)*
//! signed  := '-' signed | term
//! term    := factor (('*' | '/') factor)*
//! factor  := primary ('^' NAT)?
//! primary := 'A' | 'B' | 'C' | 'I' | 'q' | NAT
//!          | '(' expr ')' | '[' expr ',' expr ']'
//!          | 'ad' '(' expr ')' ('^' NAT)? '(' expr ')'
//! ```
//!
//! `^` binds tighter than `*` and `/`, which bind tighter than unary minus,
//! which binds tighter than binary `+` and `-`. Juxtaposition is not a
//! product. Division is only meaningful by scalars; that is checked during
//! evaluation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qheis::coeff::RatFun;

use crate::error::SyntaxError;
use crate::lexer::{tokenize, Token, TokenKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    A,
    B,
    C,
    I,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Sum(Vec<Ast>),
    Neg(Box<Ast>),
    Product(Vec<Ast>),
    Quotient(Box<Ast>, Box<Ast>),
    Power(Box<Ast>, u32),
    Bracket(Box<Ast>, Box<Ast>),
    /// `ad(x)^m(y)`
    AdPower(Box<Ast>, u32, Box<Ast>),
    Atom(Atom),
    Scalar(RatFun),
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, name: &str, xs: &[&Ast]) -> fmt::Result {
            write!(f, "{name}(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")
        }
        match self {
            Ast::Sum(xs) => list(f, "Sum", &xs.iter().collect::<Vec<_>>()),
            Ast::Product(xs) => list(f, "Product", &xs.iter().collect::<Vec<_>>()),
            Ast::Neg(x) => list(f, "Neg", &[x]),
            Ast::Quotient(x, y) => list(f, "Quotient", &[x, y]),
            Ast::Bracket(x, y) => list(f, "Bracket", &[x, y]),
            Ast::Power(x, e) => write!(f, "Power({x}, {e})"),
            Ast::AdPower(x, m, y) => write!(f, "AdPower({x}, {m}, {y})"),
            Ast::Atom(a) => write!(f, "{a:?}"),
            Ast::Scalar(c) => write!(f, "Scalar({c})"),
        }
    }
}

pub fn parse(text: &str) -> Result<Ast, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.expr()?;
    p.expect(TokenKind::End, &["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"])?;
    Ok(ast)
}

const PRIMARY_START: &[&str] = &["'A'", "'B'", "'C'", "'I'", "'q'", "number", "'('", "'['", "'ad'"];
const SIGNED_START: &[&str] = &["'-'", "'A'", "'B'", "'C'", "'I'", "'q'", "number", "'('", "'['", "'ad'"];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> SyntaxError {
        let t = self.peek();
        SyntaxError::Unexpected {
            column: t.column,
            found: t.kind.to_string(),
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &[&'static str]) -> Result<Token, SyntaxError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Ast, SyntaxError> {
        let mut terms = vec![self.signed()?];
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.bump();
                    terms.push(self.signed()?);
                }
                TokenKind::Minus => {
                    self.bump();
                    terms.push(Ast::Neg(Box::new(self.signed()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Ast::Sum(terms)
        })
    }

    fn signed(&mut self) -> Result<Ast, SyntaxError> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.signed()?)));
        }
        if !self.starts_primary() {
            return Err(self.error(SIGNED_START));
        }
        self.term()
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek().kind,
            TokenKind::A
                | TokenKind::B
                | TokenKind::C
                | TokenKind::I
                | TokenKind::Q
                | TokenKind::Nat(_)
                | TokenKind::LParen
                | TokenKind::LBracket
                | TokenKind::Ad
        )
    }

    fn term(&mut self) -> Result<Ast, SyntaxError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek().kind {
                TokenKind::Star => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                TokenKind::Slash => {
                    self.bump();
                    let num = collapse(std::mem::take(&mut factors));
                    factors.push(Ast::Quotient(Box::new(num), Box::new(self.factor()?)));
                }
                _ => break,
            }
        }
        Ok(collapse(factors))
    }

    fn factor(&mut self) -> Result<Ast, SyntaxError> {
        let base = self.primary()?;
        if self.peek().kind == TokenKind::Caret {
            self.bump();
            let e = self.nat()?;
            return Ok(Ast::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn nat(&mut self) -> Result<u32, SyntaxError> {
        let t = self.peek().clone();
        match &t.kind {
            TokenKind::Nat(n) => {
                self.bump();
                n.to_u32().ok_or_else(|| SyntaxError::ExponentTooLarge {
                    column: t.column,
                    value: n.to_string(),
                })
            }
            _ => Err(self.error(&["number"])),
        }
    }

    fn primary(&mut self) -> Result<Ast, SyntaxError> {
        let t = self.peek().clone();
        let ast = match t.kind {
            TokenKind::A => Ast::Atom(Atom::A),
            TokenKind::B => Ast::Atom(Atom::B),
            TokenKind::C => Ast::Atom(Atom::C),
            TokenKind::I => Ast::Atom(Atom::I),
            TokenKind::Q => Ast::Scalar(RatFun::q()),
            TokenKind::Nat(ref n) => Ast::Scalar(nat_scalar(n)),
            TokenKind::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, &["'+'", "'-'", "'*'", "'/'", "'^'", "')'"])?;
                return Ok(inner);
            }
            TokenKind::LBracket => {
                self.bump();
                let x = self.expr()?;
                self.expect(TokenKind::Comma, &["'+'", "'-'", "'*'", "'/'", "'^'", "','"])?;
                let y = self.expr()?;
                self.expect(TokenKind::RBracket, &["'+'", "'-'", "'*'", "'/'", "'^'", "']'"])?;
                return Ok(Ast::Bracket(Box::new(x), Box::new(y)));
            }
            TokenKind::Ad => {
                self.bump();
                self.expect(TokenKind::LParen, &["'('"])?;
                let x = self.expr()?;
                self.expect(TokenKind::RParen, &["'+'", "'-'", "'*'", "'/'", "'^'", "')'"])?;
                let m = if self.peek().kind == TokenKind::Caret {
                    self.bump();
                    self.nat()?
                } else {
                    1
                };
                self.expect(TokenKind::LParen, &["'^'", "'('"])?;
                let y = self.expr()?;
                self.expect(TokenKind::RParen, &["'+'", "'-'", "'*'", "'/'", "'^'", "')'"])?;
                return Ok(Ast::AdPower(Box::new(x), m, Box::new(y)));
            }
            _ => return Err(self.error(PRIMARY_START)),
        };
        self.bump();
        Ok(ast)
    }
}

fn collapse(mut factors: Vec<Ast>) -> Ast {
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        Ast::Product(factors)
    }
}

fn nat_scalar(n: &BigInt) -> RatFun {
    RatFun::from_rational(num_rational::BigRational::from_integer(n.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> String {
        parse(s).unwrap().to_string()
    }

    #[test]
    fn precedence_shapes() {
        assert_eq!(
            shape("A*B - q*B*A"),
            "Sum(Product(A, B), Neg(Product(Scalar(q), B, A)))"
        );
        assert_eq!(shape("[A,B]^2 * A"), "Product(Power(Bracket(A, B), 2), A)");
        assert_eq!(shape("ad(A)^2(B)"), "AdPower(A, 2, B)");
        assert_eq!(shape("-A*B"), "Neg(Product(A, B))");
        assert_eq!(shape("-q^2 + 1"), "Sum(Neg(Power(Scalar(q), 2)), Scalar(1))");
        assert_eq!(shape("1/2*q"), "Product(Quotient(Scalar(1), Scalar(2)), Scalar(q))");
        assert_eq!(shape("ad(C)(A)"), "AdPower(C, 1, A)");
    }

    #[test]
    fn errors_carry_column_and_expectation() {
        match parse("A * ) B") {
            Err(SyntaxError::Unexpected {
                column,
                found,
                expected,
            }) => {
                assert_eq!(column, 5);
                assert_eq!(found, "')'");
                assert!(expected.contains(&"'('"));
            }
            other => panic!("{other:?}"),
        }
        match parse("[A, B") {
            Err(SyntaxError::Unexpected { column, found, .. }) => {
                assert_eq!(column, 6);
                assert_eq!(found, "end of input");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("A B"), Err(SyntaxError::Unexpected { column: 3, .. })));
        assert!(matches!(
            parse("A^99999999999"),
            Err(SyntaxError::ExponentTooLarge { column: 3, .. })
        ));
        assert!(matches!(parse(""), Err(SyntaxError::Unexpected { column: 1, .. })));
    }
}
