//! S-expression syntax for definition trees:
//!
//! ```text
//! def := zero | succ | NAME | (proj i n) | (comp def def+)
//!      | (primrec def def) | (mu def) | (bmu def)
//! ```
//!
//! `NAME` is any standard-library function. `;` starts a line comment.

use super::def::{PRDef, PrError};
use super::stdlib::{stdlib, STDLIB_NAMES};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Word(String),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PrError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        match ch {
            '(' => {
                out.push((i, Tok::Open));
                chars.next();
            }
            ')' => {
                out.push((i, Tok::Close));
                chars.next();
            }
            ';' => {
                while chars.next_if(|&(_, c)| c != '\n').is_some() {}
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while let Some((_, c)) = chars.next_if(|&(_, c)| c.is_ascii_alphanumeric() || c == '_') {
                    word.push(c);
                }
                out.push((i, Tok::Word(word)));
            }
            c => {
                return Err(PrError::SyntaxError {
                    offset: i,
                    message: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PrError> {
        Err(PrError::SyntaxError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn close(&mut self) -> Result<(), PrError> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Close)) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err("expected `)`"),
        }
    }

    fn number(&mut self) -> Result<usize, PrError> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Word(w))) => match w.parse() {
                Ok(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                Err(_) => self.err(format!("expected a number, found `{w}`")),
            },
            _ => self.err("expected a number"),
        }
    }

    fn def(&mut self) -> Result<PRDef, PrError> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Word(w)) => match w.as_str() {
                "zero" => Ok(PRDef::ZeroFn),
                "succ" => Ok(PRDef::Succ),
                name if STDLIB_NAMES.contains(&name) => stdlib(name),
                name if name.starts_with(|c: char| c.is_ascii_digit()) => Err(PrError::SyntaxError {
                    offset: at,
                    message: format!("unexpected number `{name}`"),
                }),
                name => Err(PrError::UnknownName(name.to_string())),
            },
            Some(Tok::Open) => {
                let head_at = self.offset();
                let head = match self.next() {
                    Some(Tok::Word(w)) => w,
                    _ => {
                        self.pos -= 1;
                        return self.err("expected proj, comp, primrec, mu or bmu");
                    }
                };
                let d = match head.as_str() {
                    "proj" => {
                        let i = self.number()?;
                        let n = self.number()?;
                        PRDef::proj(i, n)
                    }
                    "comp" => {
                        let f = self.def()?;
                        let mut gs = vec![self.def()?];
                        while !matches!(self.toks.get(self.pos), Some((_, Tok::Close)) | None) {
                            gs.push(self.def()?);
                        }
                        PRDef::comp(f, gs)
                    }
                    "primrec" => {
                        let f = self.def()?;
                        let g = self.def()?;
                        PRDef::primrec(f, g)
                    }
                    "mu" => PRDef::mu(self.def()?),
                    "bmu" => PRDef::bounded_mu(self.def()?),
                    other => {
                        return Err(PrError::SyntaxError {
                            offset: head_at,
                            message: format!("unknown combinator `{other}`"),
                        })
                    }
                };
                self.close()?;
                Ok(d)
            }
            Some(Tok::Close) => Err(PrError::SyntaxError {
                offset: at,
                message: "unexpected `)`".into(),
            }),
            None => Err(PrError::SyntaxError {
                offset: at,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses one definition and checks its arity discipline.
pub fn parse_def(text: &str) -> Result<PRDef, PrError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let d = p.def()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input after the definition");
    }
    d.arity()?;
    Ok(d)
}
