//! Shared tokenizer for the two expression languages.

use super::ExprError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    /// Unsigned digit run; signs are handled by the parsers.
    Number(String),
    Punct(char),
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

impl Token {
    pub fn describe(&self) -> String {
        match &self.kind {
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Number(s) => format!("number `{s}`"),
            TokenKind::Punct(c) => format!("`{c}`"),
            TokenKind::Eof => "end of input".to_string(),
        }
    }
}

const PUNCT: &str = "*^()[],;=+-/";

pub fn tokenize(src: &str) -> Result<Vec<Token>, ExprError> {
    let mut out = Vec::new();
    let mut line = 1u32;
    let mut col = 1u32;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token {
                kind: TokenKind::Number(s),
                pos,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token {
                kind: TokenKind::Ident(s),
                pos,
            });
        } else if PUNCT.contains(c) {
            chars.next();
            col += 1;
            out.push(Token {
                kind: TokenKind::Punct(c),
                pos,
            });
        } else {
            return Err(ExprError::syntax(pos, "a token", format!("`{c}`")));
        }
    }
    out.push(Token {
        kind: TokenKind::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

/// Cursor over the token stream with one-token lookahead.
pub struct Cursor {
    tokens: Vec<Token>,
    index: usize,
}

impl Cursor {
    pub fn new(tokens: Vec<Token>) -> Self {
        Cursor { tokens, index: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.index.min(self.tokens.len() - 1)]
    }

    pub fn advance(&mut self) -> Token {
        let t = self.peek().clone();
        if self.index < self.tokens.len() - 1 {
            self.index += 1;
        }
        t
    }

    pub fn eat_punct(&mut self, c: char) -> bool {
        if self.peek().kind == TokenKind::Punct(c) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn expect_punct(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat_punct(c) {
            Ok(())
        } else {
            let t = self.peek();
            Err(ExprError::syntax(t.pos, format!("`{c}`"), t.describe()))
        }
    }

    pub fn expect_eof(&self) -> Result<(), ExprError> {
        let t = self.peek();
        if t.kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(ExprError::syntax(t.pos, "end of input", t.describe()))
        }
    }
}
