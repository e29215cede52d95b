use std::fmt;

use num_bigint::BigInt;

use crate::error::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Nat(BigInt),
    A,
    B,
    C,
    I,
    Q,
    Ad,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TokenKind::Nat(n) => return write!(f, "'{n}'"),
            TokenKind::A => "'A'",
            TokenKind::B => "'B'",
            TokenKind::C => "'C'",
            TokenKind::I => "'I'",
            TokenKind::Q => "'q'",
            TokenKind::Ad => "'ad'",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::Caret => "'^'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::LBracket => "'['",
            TokenKind::RBracket => "']'",
            TokenKind::Comma => "','",
            TokenKind::End => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// 1-based character column of the first character.
    pub column: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse().expect("ascii digits");
            out.push(Token {
                kind: TokenKind::Nat(n),
                column,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let ident: String = chars[start..i].iter().collect();
            let kind = match ident.as_str() {
                "A" => TokenKind::A,
                "B" => TokenKind::B,
                "C" => TokenKind::C,
                "I" => TokenKind::I,
                "q" => TokenKind::Q,
                "ad" => TokenKind::Ad,
                _ => return Err(SyntaxError::UnknownName { column, name: ident }),
            };
            out.push(Token { kind, column });
            continue;
        }
        let kind = match c {
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '[' => TokenKind::LBracket,
            ']' => TokenKind::RBracket,
            ',' => TokenKind::Comma,
            _ => return Err(SyntaxError::BadCharacter { column, ch: c }),
        };
        out.push(Token { kind, column });
        i += 1;
    }
    out.push(Token {
        kind: TokenKind::End,
        column: chars.len() + 1,
    });
    Ok(out)
}
