//! Text format for quivers and path expressions.
//!
//! ```text
//! quiver    := "vertices" INT ";" "arrows" (ARROWDECL ("," ARROWDECL)*)? ";"
//! ARROWDECL := ID ":" INT "->" INT
//! path      := "e_" INT | ID "*"? (WS ID "*"?)*
//! ```
//!
//! Vertex indices are 1-based. `#` starts a comment that runs to the end of
//! the line.

use crate::error::{Error, Result};
use crate::path::Path;
use crate::quiver::{DoubledQuiver, Quiver, QuiverRef};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    Colon,
    To,
    Comma,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Colon => "`:`".into(),
            Tok::To => "`->`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
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

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
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
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        let tok = match c {
            ':' => {
                bump(&mut chars);
                Tok::Colon
            }
            ',' => {
                bump(&mut chars);
                Tok::Comma
            }
            ';' => {
                bump(&mut chars);
                Tok::Semi
            }
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    Tok::To
                } else {
                    return Err(syntax(l, col, "expected `->`"));
                }
            }
            '→' => {
                bump(&mut chars);
                Tok::To
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    s.push(bump(&mut chars));
                }
                Tok::Int(s.parse().map_err(|_| syntax(l, col, "integer too large"))?)
            }
            c if is_ident_start(c) => {
                let mut s = String::new();
                while chars.peek().is_some_and(|&c| is_ident_char(c)) {
                    s.push(bump(&mut chars));
                }
                Tok::Ident(s)
            }
            other => return Err(syntax(l, col, format!("unexpected character `{other}`"))),
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

fn is_reserved(id: &str) -> bool {
    id.strip_prefix("e_")
        .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Spanned> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(syntax(
                t.line,
                t.column,
                format!("expected {}, found {}", want.describe(), t.tok.describe()),
            ))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(()),
            other => Err(syntax(
                t.line,
                t.column,
                format!("expected `{kw}`, found {}", other.describe()),
            )),
        }
    }

    fn int(&mut self) -> Result<(usize, Spanned)> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok((n, t)),
            ref other => Err(syntax(
                t.line,
                t.column,
                format!("expected integer, found {}", other.describe()),
            )),
        }
    }

    fn vertex(&mut self, m: usize) -> Result<usize> {
        let (v, _) = self.int()?;
        if v == 0 || v > m {
            return Err(Error::VertexOutOfRange {
                index: v,
                vertex_count: m,
            });
        }
        Ok(v - 1)
    }

    fn quiver(&mut self) -> Result<Quiver> {
        self.keyword("vertices")?;
        let (m, t) = self.int()?;
        if m == 0 {
            return Err(syntax(t.line, t.column, "vertex count must be positive"));
        }
        self.expect(Tok::Semi)?;
        self.keyword("arrows")?;
        let mut decls: Vec<(String, usize, usize)> = Vec::new();
        if self.peek().tok != Tok::Semi {
            loop {
                let t = self.next();
                let id = match t.tok {
                    Tok::Ident(s) => s,
                    ref other => {
                        return Err(syntax(
                            t.line,
                            t.column,
                            format!("expected arrow id, found {}", other.describe()),
                        ))
                    }
                };
                if is_reserved(&id) {
                    return Err(syntax(
                        t.line,
                        t.column,
                        format!("`{id}` is reserved for trivial paths"),
                    ));
                }
                self.expect(Tok::Colon)?;
                let tail = self.vertex(m)?;
                self.expect(Tok::To)?;
                let head = self.vertex(m)?;
                if decls.iter().any(|(d, _, _)| *d == id) {
                    return Err(Error::DuplicateArrow(id));
                }
                decls.push((id, tail, head));
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Semi)?;
        self.expect(Tok::Eof)?;
        Quiver::new(m, decls)
    }
}

/// Parses a base quiver declaration and returns its double.
pub fn parse_quiver(text: &str) -> Result<QuiverRef> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let q = p.quiver()?;
    Ok(DoubledQuiver::new(&q))
}

/// Parses `e_v` or a travel-ordered sequence of arrow ids separated by
/// whitespace or `·`; reversed arrows are written `a*`.
pub fn parse_path(text: &str, dq: &DoubledQuiver) -> Result<Path> {
    let words: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == '·')
        .filter(|w| !w.is_empty())
        .collect();
    match words.as_slice() {
        [] => Err(syntax(1, 1, "empty path expression")),
        [w] if is_reserved(w) => {
            let v: usize = w[2..]
                .parse()
                .map_err(|_| syntax(1, 1, format!("bad vertex in `{w}`")))?;
            if v == 0 || v > dq.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    vertex_count: dq.vertex_count(),
                });
            }
            Ok(Path::trivial(v - 1))
        }
        _ => {
            let arrows = words
                .iter()
                .map(|w| dq.arrow_by_id(w).ok_or_else(|| Error::UnknownArrow(w.to_string())))
                .collect::<Result<Vec<_>>>()?;
            Path::from_arrows(dq, arrows)
        }
    }
}
