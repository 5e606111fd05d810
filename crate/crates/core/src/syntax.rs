//! Tokenizer and parser shared by the term and tree notations.
//!
//! Both notations are left-associative juxtaposition of atoms with
//! parentheses for grouping. Atoms are `S`, `K`, `C` and `R<i>` (also
//! written `R_<i>`); which atoms are legal is decided by the caller.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Atom {
    S,
    K,
    C,
    R(u32),
}

#[derive(Debug)]
pub(crate) enum Ast {
    Atom { atom: Atom, pos: usize },
    App(Box<Ast>, Box<Ast>),
}

#[derive(Debug, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Atom(Atom),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            b'S' | b'K' | b'C' => {
                // Atoms are single letters; `SK` is two tokens.
                let atom = match c {
                    b'S' => Atom::S,
                    b'K' => Atom::K,
                    _ => Atom::C,
                };
                out.push((i, Token::Atom(atom)));
                i += 1;
            }
            b'R' => {
                let start = i;
                i += 1;
                if i < bytes.len() && bytes[i] == b'_' {
                    i += 1;
                }
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: "expected grammar index after `R`".into(),
                    });
                }
                let index = text[digits..i].parse::<u32>().map_err(|_| Error::Syntax {
                    pos: digits,
                    msg: "grammar index out of range".into(),
                })?;
                out.push((start, Token::Atom(Atom::R(index))));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    /// expr := primary+
    fn expr(&mut self) -> Result<Ast> {
        let mut acc = self.primary()?;
        while let Some((_, tok)) = self.tokens.get(self.at) {
            if *tok == Token::Close {
                break;
            }
            let arg = self.primary()?;
            acc = Ast::App(Box::new(acc), Box::new(arg));
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Ast> {
        match self.tokens.get(self.at) {
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            }),
            Some((pos, Token::Atom(atom))) => {
                let ast = Ast::Atom {
                    atom: *atom,
                    pos: *pos,
                };
                self.at += 1;
                Ok(ast)
            }
            Some((pos, Token::Open)) => {
                let open = *pos;
                self.at += 1;
                if matches!(self.tokens.get(self.at), Some((_, Token::Close))) {
                    return Err(Error::Syntax {
                        pos: open,
                        msg: "empty parentheses".into(),
                    });
                }
                let inner = self.expr()?;
                match self.tokens.get(self.at) {
                    Some((_, Token::Close)) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Syntax {
                        pos: open,
                        msg: "unbalanced `(`".into(),
                    }),
                }
            }
            Some((pos, Token::Close)) => Err(Error::Syntax {
                pos: *pos,
                msg: "unbalanced `)`".into(),
            }),
        }
    }
}

pub(crate) fn parse(text: &str) -> Result<Ast> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        at: 0,
        end: text.len(),
    };
    let ast = parser.expr()?;
    if let Some((pos, _)) = parser.tokens.get(parser.at) {
        return Err(Error::Syntax {
            pos: *pos,
            msg: "unbalanced `)`".into(),
        });
    }
    Ok(ast)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos_of(text: &str) -> usize {
        match parse(text) {
            Err(Error::Syntax { pos, .. }) => pos,
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn error_positions() {
        assert_eq!(pos_of("S (K"), 2);
        assert_eq!(pos_of("S K)"), 3);
        assert_eq!(pos_of("S x"), 2);
        assert_eq!(pos_of(""), 0);
        assert_eq!(pos_of("S ()"), 2);
        assert_eq!(pos_of("S R"), 2);
    }

    #[test]
    fn grammar_indices() {
        match parse("R_12").unwrap() {
            Ast::Atom { atom, .. } => assert_eq!(atom, Atom::R(12)),
            _ => panic!(),
        }
        match parse("R3").unwrap() {
            Ast::Atom { atom, .. } => assert_eq!(atom, Atom::R(3)),
            _ => panic!(),
        }
    }
}
