//! Parser for graph expressions such as `corona(path(2), cycle(7))`.
//!
//! ```text
//! expr := IDENT '(' arg (',' arg)* ')'
//! arg  := INTEGER | expr
//! ```
//!
//! Identifiers are case-insensitive and whitespace is ignored. Error offsets
//! are 1-based byte positions into the source; running out of input is
//! reported at one past the last byte.

use std::fmt;

use thiserror::Error;

use crate::family::Family;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    IntegerTooLarge,
    UnexpectedEnd,
    Unexpected {
        found: String,
        expected: &'static str,
    },
    UnknownFamily(String),
    Arity {
        family: &'static str,
        expected: &'static str,
    },
    Constraint(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::IntegerTooLarge => f.write_str("integer too large"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnknownFamily(name) => write!(f, "unknown graph family `{name}`"),
            ParseErrorKind::Arity { family, expected } => {
                write!(f, "`{family}` takes {expected}")
            }
            ParseErrorKind::Constraint(msg) => f.write_str(msg),
        }
    }
}

/// Source text together with its parsed descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphExpression {
    pub source: String,
    pub family: Family,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Open,
    Close,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Int(n) => n.to_string(),
            Tok::Open => "(".into(),
            Tok::Close => ")".into(),
            Tok::Comma => ",".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b if b.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            b'(' => {
                out.push((start, Tok::Open));
                i += 1;
            }
            b')' => {
                out.push((start, Tok::Close));
                i += 1;
            }
            b',' => {
                out.push((start, Tok::Comma));
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse().map_err(|_| ParseError {
                    offset: start + 1,
                    kind: ParseErrorKind::IntegerTooLarge,
                })?;
                out.push((start, Tok::Int(n)));
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_ascii_lowercase())));
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start + 1,
                    kind: ParseErrorKind::UnexpectedChar(ch),
                });
            }
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

enum Arg {
    Int(usize),
    Expr(Family),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.pos]
    }

    fn error_here(&self, expected: &'static str) -> ParseError {
        let (at, tok) = self.peek();
        let kind = match tok {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            t => ParseErrorKind::Unexpected {
                found: t.describe(),
                expected,
            },
        };
        ParseError { offset: at + 1, kind }
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek().1 == want {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(expected))
        }
    }

    fn expr(&mut self) -> Result<Family, ParseError> {
        let (at, tok) = self.peek().clone();
        let Tok::Ident(name) = tok else {
            return Err(self.error_here("a graph family name"));
        };
        self.pos += 1;
        self.expect(Tok::Open, "`(`")?;
        let mut args = vec![self.arg()?];
        while self.peek().1 == Tok::Comma {
            self.pos += 1;
            args.push(self.arg()?);
        }
        self.expect(Tok::Close, "`,` or `)`")?;
        let family = build(&name, args).map_err(|kind| ParseError { offset: at + 1, kind })?;
        family.validate().map_err(|e| ParseError {
            offset: at + 1,
            kind: ParseErrorKind::Constraint(e.to_string()),
        })?;
        Ok(family)
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        match self.peek().1 {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Arg::Int(n))
            }
            Tok::Ident(_) => self.expr().map(Arg::Expr),
            _ => Err(self.error_here("an integer or a graph expression")),
        }
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<Family, ParseErrorKind> {
    use Arg::{Expr as E, Int as I};
    let unary = |f: fn(usize) -> Family, family: &'static str, args: Vec<Arg>| match args.as_slice() {
        [I(n)] => Ok(f(*n)),
        _ => Err(ParseErrorKind::Arity {
            family,
            expected: "one integer",
        }),
    };
    match name {
        "path" => unary(Family::Path, "path", args),
        "cycle" => unary(Family::Cycle, "cycle", args),
        "complete" => unary(Family::Complete, "complete", args),
        "empty" => unary(Family::Empty, "empty", args),
        "star" => unary(Family::Star, "star", args),
        "wheel" => unary(Family::Wheel, "wheel", args),
        "fan" => unary(Family::Fan, "fan", args),
        "kst" => match args.as_slice() {
            [I(s), I(t)] => Ok(Family::CompleteBipartite(*s, *t)),
            _ => Err(ParseErrorKind::Arity {
                family: "kst",
                expected: "two integers",
            }),
        },
        "join" | "union" => {
            let mut it = args.into_iter();
            match (it.next(), it.next(), it.next()) {
                (Some(E(a)), Some(E(b)), None) => Ok(if name == "join" {
                    Family::join(a, b)
                } else {
                    Family::union(a, b)
                }),
                _ => Err(ParseErrorKind::Arity {
                    family: if name == "join" { "join" } else { "union" },
                    expected: "two graph expressions",
                }),
            }
        }
        "complement" => {
            let mut it = args.into_iter();
            match (it.next(), it.next()) {
                (Some(E(a)), None) => Ok(Family::complement(a)),
                _ => Err(ParseErrorKind::Arity {
                    family: "complement",
                    expected: "one graph expression",
                }),
            }
        }
        "corona" => {
            let mut it = args.into_iter();
            match (it.next(), it.next(), it.next(), it.next()) {
                (Some(E(g)), Some(E(h)), None, None) => Ok(Family::corona(g, h, 1)),
                (Some(E(g)), Some(E(h)), Some(I(k)), None) => {
                    let k = u32::try_from(k)
                        .map_err(|_| ParseErrorKind::Constraint(format!("iteration count {k} is too large")))?;
                    Ok(Family::corona(g, h, k))
                }
                _ => Err(ParseErrorKind::Arity {
                    family: "corona",
                    expected: "two graph expressions and an optional iteration count",
                }),
            }
        }
        "graph" => {
            let ints: Option<Vec<usize>> = args
                .iter()
                .map(|a| match a {
                    I(n) => Some(*n),
                    E(_) => None,
                })
                .collect();
            match ints.as_deref() {
                Some([n, rest @ ..]) if rest.len() % 2 == 0 => {
                    let edges: Vec<_> = rest.chunks(2).map(|p| (p[0], p[1])).collect();
                    Graph::from_edges(*n, edges.iter().copied())
                        .map_err(|e| ParseErrorKind::Constraint(e.to_string()))?;
                    Ok(Family::Explicit(*n, edges))
                }
                _ => Err(ParseErrorKind::Arity {
                    family: "graph",
                    expected: "an order followed by pairs of vertex ids",
                }),
            }
        }
        other => Err(ParseErrorKind::UnknownFamily(other.to_string())),
    }
}

pub fn parse(text: &str) -> Result<Family, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let family = parser.expr()?;
    if parser.peek().1 != Tok::End {
        return Err(parser.error_here("end of input"));
    }
    Ok(family)
}

pub fn parse_graph_expr(text: &str) -> Result<GraphExpression, ParseError> {
    Ok(GraphExpression {
        source: text.to_string(),
        family: parse(text)?,
    })
}
