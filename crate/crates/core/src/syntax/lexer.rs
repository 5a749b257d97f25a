use num_bigint::BigInt;

use super::ExprError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Str(String),
    Plus,
    Minus,
    Star,
    Slash,
    Hash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::End => "end of input".into(),
            other => format!(
                "{:?}",
                match other {
                    Tok::Plus => '+',
                    Tok::Minus => '-',
                    Tok::Star => '*',
                    Tok::Slash => '/',
                    Tok::Hash => '#',
                    Tok::Caret => '^',
                    Tok::LParen => '(',
                    Tok::RParen => ')',
                    _ => ',',
                }
            ),
        }
    }
}

/// A token with its 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub col: usize,
}

pub fn tokenize(input: &str) -> Result<Vec<Spanned>, ExprError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '#' => Some(Tok::Hash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, col });
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            let n = digits.parse().expect("ascii digits form an integer");
            out.push(Spanned { tok: Tok::Int(n), col });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..k].iter().collect()),
                col,
            });
        } else if c == '"' {
            let start = k + 1;
            k = start;
            while k < chars.len() && chars[k] != '"' {
                k += 1;
            }
            if k == chars.len() {
                return Err(ExprError::syntax(col, "unterminated string"));
            }
            out.push(Spanned {
                tok: Tok::Str(chars[start..k].iter().collect()),
                col,
            });
            k += 1;
        } else {
            return Err(ExprError::syntax(col, format!("unexpected character {c:?}")));
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        col: chars.len() + 1,
    });
    Ok(out)
}
