//! Text format: `< a, b | a b a^-1 b^-1, a^3 >`.
//!
//! Generators are ASCII identifiers; a term is a generator with an optional
//! signed integer exponent; relators are separated by commas; `1` denotes
//! the empty word and `#` starts a comment running to the end of the line.

use std::collections::HashMap;

use super::word::{FreeWord, Letter};
use super::Presentation;
use crate::error::{Error, Result};

/// Largest absolute exponent accepted in a term.
pub const MAX_EXPONENT: u64 = 1 << 20;
/// Largest total number of letters (after exponent expansion) in one input.
pub const MAX_TOTAL_LETTERS: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Bar,
    Comma,
    Caret,
    Ident(String),
    Int(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<(Vec<Spanned>, (usize, usize))> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        match c {
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            '<' | '>' | '|' | ',' | '^' => {
                bump(&mut chars);
                let tok = match c {
                    '<' => Tok::Open,
                    '>' => Tok::Close,
                    '|' => Tok::Bar,
                    ',' => Tok::Comma,
                    _ => Tok::Caret,
                };
                out.push(Spanned { tok, line: l0, column: c0 });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(s),
                    line: l0,
                    column: c0,
                });
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' => {
                let mut s = String::new();
                s.push(bump(&mut chars));
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                if s == "-" || s == "+" {
                    return Err(syntax(l0, c0, format!("sign `{s}` without digits")));
                }
                out.push(Spanned {
                    tok: Tok::Int(s),
                    line: l0,
                    column: c0,
                });
            }
            other => return Err(syntax(l0, c0, format!("unexpected character `{other}`"))),
        }
    }
    Ok((out, (line, column)))
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t.tok == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => {
                let (l, c) = self.here();
                Err(syntax(l, c, format!("expected {what}")))
            }
        }
    }

    fn at(&self, tok: &Tok) -> bool {
        self.peek().is_some_and(|t| &t.tok == tok)
    }
}

fn parse_exponent(s: &str, line: usize, column: usize) -> Result<i64> {
    let digits = s.trim_start_matches(['+', '-']);
    let mag: u64 = digits
        .parse()
        .ok()
        .filter(|&m| m <= MAX_EXPONENT)
        .ok_or_else(|| syntax(line, column, format!("exponent `{s}` out of range (|e| <= {MAX_EXPONENT})")))?;
    Ok(if s.starts_with('-') { -(mag as i64) } else { mag as i64 })
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let (toks, end) = lex(text)?;
    let mut ps = Parser { toks, pos: 0, end };
    ps.expect(Tok::Open, "`<`")?;

    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    if !ps.at(&Tok::Bar) {
        loop {
            let (l, c) = ps.here();
            match ps.peek().map(|t| t.tok.clone()) {
                Some(Tok::Ident(name)) => {
                    ps.pos += 1;
                    if index.insert(name.clone(), names.len()).is_some() {
                        return Err(Error::DuplicateGenerator(name));
                    }
                    names.push(name);
                }
                _ => return Err(syntax(l, c, "expected a generator name")),
            }
            if ps.at(&Tok::Comma) {
                ps.pos += 1;
            } else {
                break;
            }
        }
    }
    ps.expect(Tok::Bar, "`|` after the generators")?;

    let mut relators = Vec::new();
    let mut total = 0usize;
    if !ps.at(&Tok::Close) {
        loop {
            let mut word = FreeWord::empty();
            let mut terms = 0usize;
            loop {
                let (l, c) = ps.here();
                match ps.peek().map(|t| t.tok.clone()) {
                    Some(Tok::Ident(name)) => {
                        ps.pos += 1;
                        let gen = *index.get(&name).ok_or(Error::UnknownGenerator {
                            name: name.clone(),
                            line: l,
                            column: c,
                        })?;
                        let mut exp = 1i64;
                        if ps.at(&Tok::Caret) {
                            ps.pos += 1;
                            let (el, ec) = ps.here();
                            match ps.peek().map(|t| t.tok.clone()) {
                                Some(Tok::Int(s)) => {
                                    ps.pos += 1;
                                    exp = parse_exponent(&s, el, ec)?;
                                }
                                _ => return Err(syntax(el, ec, "expected an integer exponent after `^`")),
                            }
                        }
                        total += exp.unsigned_abs() as usize;
                        if total > MAX_TOTAL_LETTERS {
                            return Err(syntax(l, c, format!("input expands to more than {MAX_TOTAL_LETTERS} letters")));
                        }
                        for _ in 0..exp.unsigned_abs() {
                            word.push(Letter::new(gen, exp < 0));
                        }
                        terms += 1;
                    }
                    Some(Tok::Int(s)) if s == "1" => {
                        ps.pos += 1;
                        terms += 1;
                    }
                    _ => break,
                }
            }
            if terms == 0 {
                let (l, c) = ps.here();
                return Err(syntax(l, c, "expected a relator word"));
            }
            relators.push(word);
            if ps.at(&Tok::Comma) {
                ps.pos += 1;
            } else {
                break;
            }
        }
    }
    ps.expect(Tok::Close, "`>` or `,`")?;
    if ps.pos != ps.toks.len() {
        let (l, c) = ps.here();
        return Err(syntax(l, c, "trailing input after `>`"));
    }
    Presentation::new(names, relators)
}
