use std::fmt;

use crate::parser::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenName {
    Path,
    Cycle,
    Star,
    Complete,
    Null,
    Edge,
    AntiEdge,
    Loop,
}

impl GenName {
    pub fn as_str(self) -> &'static str {
        match self {
            GenName::Path => "path",
            GenName::Cycle => "cycle",
            GenName::Star => "star",
            GenName::Complete => "complete",
            GenName::Null => "null",
            GenName::Edge => "edge",
            GenName::AntiEdge => "antiedge",
            GenName::Loop => "loop",
        }
    }

    fn from_word(word: &str) -> Option<GenName> {
        Some(match word {
            "path" => GenName::Path,
            "cycle" => GenName::Cycle,
            "star" => GenName::Star,
            "complete" => GenName::Complete,
            "null" => GenName::Null,
            "edge" => GenName::Edge,
            "antiedge" => GenName::AntiEdge,
            "loop" => GenName::Loop,
            _ => return None,
        })
    }
}

/// The reserved words of the language: generator names plus `phi`. These are
/// not available as vertex names.
pub fn is_reserved_word(word: &str) -> bool {
    word == "phi" || GenName::from_word(word).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Phi,
    Gen(GenName),
    Plus,
    Amp,
    Arrow,
    LArrow,
    Tilde,
    Star,
    Tick,
    LParen,
    RParen,
    Semi,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Phi => f.write_str("`phi`"),
            Tok::Gen(g) => write!(f, "`{}`", g.as_str()),
            Tok::Plus => f.write_str("`+`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::LArrow => f.write_str("`<-`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Tick => f.write_str("`'`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: u32,
    pub col: u32,
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { chars: src.chars().peekable(), line: 1, col: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
}

/// Splits source text into positioned tokens. Lines and columns are
/// one-based and counted in characters. `#` starts a comment running to the
/// end of the line. The token list always ends with [`Tok::Eof`].
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut sc = Scanner::new(src);
    let mut out = Vec::new();
    loop {
        while let Some(c) = sc.peek() {
            if c == '#' {
                while sc.peek().is_some_and(|c| c != '\n') {
                    sc.bump();
                }
            } else if c.is_whitespace() {
                sc.bump();
            } else {
                break;
            }
        }
        let (line, col) = (sc.line, sc.col);
        let Some(c) = sc.peek() else {
            out.push(Token { tok: Tok::Eof, line, col });
            return Ok(out);
        };
        let tok = match c {
            '+' => {
                sc.bump();
                Tok::Plus
            }
            '&' => {
                sc.bump();
                Tok::Amp
            }
            '~' => {
                sc.bump();
                Tok::Tilde
            }
            '*' => {
                sc.bump();
                Tok::Star
            }
            '\'' => {
                sc.bump();
                Tok::Tick
            }
            '(' => {
                sc.bump();
                Tok::LParen
            }
            ')' => {
                sc.bump();
                Tok::RParen
            }
            ';' => {
                sc.bump();
                Tok::Semi
            }
            ',' => {
                sc.bump();
                Tok::Comma
            }
            '-' => {
                sc.bump();
                match sc.peek() {
                    Some('>') => {
                        sc.bump();
                        Tok::Arrow
                    }
                    Some(d) if d.is_ascii_digit() => scan_int(&mut sc, true, line, col)?,
                    _ => return Err(ParseError::new(line, col, ParseErrorKind::Lex('-'))),
                }
            }
            '<' => {
                sc.bump();
                if sc.peek() == Some('-') {
                    sc.bump();
                    Tok::LArrow
                } else {
                    return Err(ParseError::new(line, col, ParseErrorKind::Lex('<')));
                }
            }
            d if d.is_ascii_digit() => scan_int(&mut sc, false, line, col)?,
            a if a.is_ascii_alphabetic() || a == '_' => {
                let mut word = String::new();
                while sc.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    word.push(sc.bump().expect("peeked"));
                }
                if word == "phi" {
                    Tok::Phi
                } else if let Some(g) = GenName::from_word(&word) {
                    Tok::Gen(g)
                } else {
                    Tok::Ident(word)
                }
            }
            other => return Err(ParseError::new(line, col, ParseErrorKind::Lex(other))),
        };
        out.push(Token { tok, line, col });
    }
}

fn scan_int(sc: &mut Scanner, negative: bool, line: u32, col: u32) -> Result<Tok, ParseError> {
    let mut digits = String::new();
    if negative {
        digits.push('-');
    }
    while sc.peek().is_some_and(|c| c.is_ascii_digit()) {
        digits.push(sc.bump().expect("peeked"));
    }
    digits
        .parse::<i64>()
        .map(Tok::Int)
        .map_err(|_| ParseError::new(line, col, ParseErrorKind::IntOverflow))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn operators_and_names_tokenize() {
        assert_eq!(
            toks("a & b -> c' + ~phi"),
            vec![
                Tok::Ident("a".into()),
                Tok::Amp,
                Tok::Ident("b".into()),
                Tok::Arrow,
                Tok::Ident("c".into()),
                Tok::Tick,
                Tok::Plus,
                Tok::Tilde,
                Tok::Phi,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn generator_words_are_keywords() {
        assert_eq!(
            toks("star(w; a)"),
            vec![
                Tok::Gen(GenName::Star),
                Tok::LParen,
                Tok::Ident("w".into()),
                Tok::Semi,
                Tok::Ident("a".into()),
                Tok::RParen,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn minus_needs_an_arrow_or_digits() {
        assert_eq!(toks("-2*a")[0], Tok::Int(-2));
        assert_eq!(toks("a<-b")[1], Tok::LArrow);
        let err = tokenize("a - b").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        let err = tokenize("a < b").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
    }

    #[test]
    fn comments_run_to_end_of_line() {
        assert_eq!(
            toks("a # the rest is ignored ~ & (\n+ b"),
            vec![Tok::Ident("a".into()), Tok::Plus, Tok::Ident("b".into()), Tok::Eof]
        );
    }

    #[test]
    fn positions_are_one_based_lines_and_columns() {
        let tokens = tokenize("a +\n  b").unwrap();
        assert_eq!((tokens[0].line, tokens[0].col), (1, 1));
        assert_eq!((tokens[1].line, tokens[1].col), (1, 3));
        assert_eq!((tokens[2].line, tokens[2].col), (2, 3));
    }

    #[test]
    fn stray_bytes_are_positioned_errors() {
        let err = tokenize("a + \u{3b5}").unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
        assert!(matches!(err.kind, ParseErrorKind::Lex('\u{3b5}')));
    }

    #[test]
    fn integer_overflow_is_reported() {
        let err = tokenize("99999999999999999999*a").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::IntOverflow));
    }
}
