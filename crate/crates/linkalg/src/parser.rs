//! Recursive descent parser for the expression language.
//!
//! Grammar, lowest precedence first:
//!
//! ```text
//! expr      := sum EOF
//! sum       := linkchain { "+" linkchain }
//! linkchain := prefix { ("&" | "->" | "<-") prefix }
//! prefix    := "~" prefix | INT "*" prefix | postfix
//! postfix   := primary { "'" }
//! primary   := IDENT | "phi" | "(" expr ")" | call
//! call      := GENNAME "(" names ")"     star: "(" center ";" names ")"
//! ```
//!
//! `+` unions, `&` links, `->` and `<-` are the directed links, `~` is the
//! anti element, `n*` scales (a leading `-` binds to the integer, so `-2*a`
//! scales by minus two), and postfix `'` twists. Binary operators associate
//! to the left. Generator names and `phi` are reserved words.

use std::fmt;

use crate::expr::{Expr, GeneratorError};
use crate::lexer::{tokenize, GenName, Tok, Token};
use crate::atom::VertexAtom;

/// Nesting deeper than this is rejected rather than risking the stack.
const MAX_DEPTH: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character that cannot start any token.
    Lex(char),
    /// An integer literal outside the 64-bit range.
    IntOverflow,
    /// The grammar expected something else here.
    Unexpected { expected: &'static str, found: String },
    /// More than [`MAX_DEPTH`] nested subexpressions.
    Nesting,
    /// A structurally valid generator call with bad arguments.
    Generator(GeneratorError),
}

impl ParseError {
    pub(crate) fn new(line: u32, col: u32, kind: ParseErrorKind) -> Self {
        ParseError { line, col, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::Lex(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::IntOverflow => f.write_str("integer literal out of range"),
            ParseErrorKind::Unexpected { expected, found } => {
                write!(f, "expected {expected}, found {found}")
            }
            ParseErrorKind::Nesting => f.write_str("expression is nested too deeply"),
            ParseErrorKind::Generator(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses one expression spanning the whole input.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens, at: 0, depth: 0 };
    let expr = parser.sum()?;
    parser.expect_eof()?;
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    depth: u32,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let t = self.peek();
        ParseError::new(
            t.line,
            t.col,
            ParseErrorKind::Unexpected { expected, found: t.tok.to_string() },
        )
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let t = self.peek();
            return Err(ParseError::new(t.line, t.col, ParseErrorKind::Nesting));
        }
        Ok(())
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut expr = self.linkchain()?;
        while self.peek().tok == Tok::Plus {
            self.bump();
            expr = Expr::union(expr, self.linkchain()?);
        }
        self.leave();
        Ok(expr)
    }

    fn linkchain(&mut self) -> Result<Expr, ParseError> {
        let mut expr = self.prefix()?;
        loop {
            expr = match self.peek().tok {
                Tok::Amp => {
                    self.bump();
                    Expr::link(expr, self.prefix()?)
                }
                Tok::Arrow => {
                    self.bump();
                    Expr::directed_link(expr, self.prefix()?, false)
                }
                Tok::LArrow => {
                    self.bump();
                    Expr::directed_link(expr, self.prefix()?, true)
                }
                _ => return Ok(expr),
            };
        }
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let expr = match self.peek().tok {
            Tok::Tilde => {
                self.bump();
                Expr::anti(self.prefix()?)
            }
            Tok::Int(n) => {
                self.bump();
                if self.peek().tok != Tok::Star {
                    return Err(self.error("`*` after an integer scalar"));
                }
                self.bump();
                Expr::scale(n, self.prefix()?)
            }
            _ => self.postfix()?,
        };
        self.leave();
        Ok(expr)
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut expr = self.primary()?;
        while self.peek().tok == Tok::Tick {
            self.bump();
            expr = Expr::twist(expr);
        }
        Ok(expr)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::Atom(VertexAtom::new(name).expect("lexer produced a valid name")))
            }
            Tok::Phi => {
                self.bump();
                Ok(Expr::Phi)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Gen(name) => self.call(name),
            _ => Err(self.error("an expression")),
        }
    }

    fn call(&mut self, name: GenName) -> Result<Expr, ParseError> {
        let call_tok = self.bump();
        if self.peek().tok != Tok::LParen {
            return Err(self.error("`(` after a generator name"));
        }
        self.bump();
        let build = |r: Result<Expr, GeneratorError>| {
            r.map_err(|e| {
                ParseError::new(call_tok.line, call_tok.col, ParseErrorKind::Generator(e))
            })
        };
        let fail = |e: GeneratorError| {
            Err(ParseError::new(call_tok.line, call_tok.col, ParseErrorKind::Generator(e)))
        };
        let expr = if name == GenName::Star {
            let center = self.vertex_name()?;
            if self.peek().tok != Tok::Semi {
                return Err(self.error("`;` between the star center and its leaves"));
            }
            self.bump();
            let leaves = self.name_list()?;
            build(Expr::star(center, leaves))?
        } else {
            let args = self.name_list()?;
            let arity = |expected: usize| {
                GeneratorError::WrongArity { name: name.as_str(), expected, got: args.len() }
            };
            match name {
                GenName::Path => build(Expr::path(args))?,
                GenName::Cycle => build(Expr::cycle(args))?,
                GenName::Complete => build(Expr::complete(args))?,
                GenName::Null => build(Expr::null(args))?,
                GenName::Edge | GenName::AntiEdge => {
                    if args.len() != 2 {
                        return fail(arity(2));
                    }
                    let mut it = args.into_iter();
                    let (u, w) = (it.next().expect("len 2"), it.next().expect("len 2"));
                    if name == GenName::Edge { Expr::edge(u, w) } else { Expr::antiedge(u, w) }
                }
                GenName::Loop => {
                    if args.len() != 1 {
                        return fail(arity(1));
                    }
                    Expr::loop_edge(args.into_iter().next().expect("len 1"))
                }
                GenName::Star => unreachable!("handled above"),
            }
        };
        if self.peek().tok != Tok::RParen {
            return Err(self.error("`)`"));
        }
        self.bump();
        Ok(expr)
    }

    fn vertex_name(&mut self) -> Result<VertexAtom, ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(VertexAtom::new(name).expect("lexer produced a valid name"))
            }
            _ => Err(self.error("a vertex name")),
        }
    }

    fn name_list(&mut self) -> Result<Vec<VertexAtom>, ParseError> {
        let mut names = vec![self.vertex_name()?];
        while self.peek().tok == Tok::Comma {
            self.bump();
            names.push(self.vertex_name()?);
        }
        Ok(names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(s: &str) -> Expr {
        Expr::Atom(VertexAtom::new(s).unwrap())
    }

    #[test]
    fn union_binds_loosest() {
        assert_eq!(
            parse("a + b & c").unwrap(),
            Expr::union(atom("a"), Expr::link(atom("b"), atom("c"))),
        );
    }

    #[test]
    fn prefix_binds_tighter_than_binary_operators() {
        assert_eq!(
            parse("~a + b").unwrap(),
            Expr::union(Expr::anti(atom("a")), atom("b")),
        );
        assert_eq!(
            parse("2*a&b").unwrap(),
            Expr::link(Expr::scale(2, atom("a")), atom("b")),
        );
    }

    #[test]
    fn twist_binds_tightest() {
        assert_eq!(
            parse("a -> b'").unwrap(),
            Expr::directed_link(atom("a"), Expr::twist(atom("b")), false),
        );
        assert_eq!(
            parse("(a -> b)'").unwrap(),
            Expr::twist(Expr::directed_link(atom("a"), atom("b"), false)),
        );
        assert_eq!(parse("~a'").unwrap(), Expr::anti(Expr::twist(atom("a"))));
    }

    #[test]
    fn binary_operators_associate_left() {
        assert_eq!(
            parse("a + b + c").unwrap(),
            Expr::union(Expr::union(atom("a"), atom("b")), atom("c")),
        );
        assert_eq!(
            parse("a & b -> c").unwrap(),
            Expr::directed_link(Expr::link(atom("a"), atom("b")), atom("c"), false),
        );
    }

    #[test]
    fn reversed_directed_link_is_kept_in_the_tree() {
        assert_eq!(
            parse("a <- b").unwrap(),
            Expr::directed_link(atom("a"), atom("b"), true),
        );
    }

    #[test]
    fn negative_scalars_attach_to_the_integer() {
        assert_eq!(parse("-2*a").unwrap(), Expr::scale(-2, atom("a")));
        assert_eq!(
            parse("a + -1*b").unwrap(),
            Expr::union(atom("a"), Expr::scale(-1, atom("b"))),
        );
    }

    #[test]
    fn generator_calls_parse() {
        let names = |ns: &[&str]| -> Vec<VertexAtom> {
            ns.iter().map(|n| VertexAtom::new(*n).unwrap()).collect()
        };
        assert_eq!(parse("path(a, b, c)").unwrap(), Expr::path(names(&["a", "b", "c"])).unwrap());
        assert_eq!(
            parse("star(w; a, b)").unwrap(),
            Expr::star(VertexAtom::new("w").unwrap(), names(&["a", "b"])).unwrap(),
        );
        assert_eq!(parse("loop(a)").unwrap(), Expr::loop_edge(VertexAtom::new("a").unwrap()));
    }

    #[test]
    fn generator_argument_errors_carry_the_call_position() {
        let err = parse("a + star(w; w)").unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
        assert!(matches!(
            err.kind,
            ParseErrorKind::Generator(GeneratorError::CenterInLeaves(_))
        ));
        let err = parse("cycle(a, b)").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::Generator(GeneratorError::TooFewAtoms { .. })
        ));
        let err = parse("edge(a, b, c)").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::Generator(GeneratorError::WrongArity { expected: 2, got: 3, .. })
        ));
    }

    #[test]
    fn error_positions_point_at_the_offending_token() {
        let err = parse("a + + b").unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
        let err = parse("(a").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        let err = parse("a)").unwrap_err();
        assert_eq!((err.line, err.col), (1, 2));
        let err = parse("").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
        let err = parse("2a").unwrap_err();
        assert_eq!((err.line, err.col), (1, 2));
    }

    #[test]
    fn keywords_cannot_be_vertex_names() {
        assert!(parse("phi + a").is_ok());
        let err = parse("path + a").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Unexpected { .. }));
        let err = parse("null(phi)").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Unexpected { .. }));
    }

    #[test]
    fn very_deep_nesting_is_rejected_not_crashed() {
        let mut src = String::new();
        for _ in 0..4000 {
            src.push('(');
        }
        src.push('a');
        for _ in 0..4000 {
            src.push(')');
        }
        let err = parse(&src).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Nesting));
    }

    #[test]
    fn trailing_twists_stack() {
        assert_eq!(parse("a''").unwrap(), Expr::twist(Expr::twist(atom("a"))));
    }
}
