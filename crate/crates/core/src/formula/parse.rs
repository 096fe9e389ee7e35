use std::fmt;

use super::{Formula, Term, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct SyntaxError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SyntaxError at byte {}: expected one of [{}], found {}",
            self.offset,
            self.expected.join(", "),
            self.found
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Zero,
    One,
    Var(Var),
    Plus,
    Star,
    Eq,
    Lt,
    Arrow,
    Bang,
    Amp,
    Pipe,
    Forall,
    Exists,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(self) -> String {
        match self {
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Var(i) => format!("`x{i}`"),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const OPERAND_START: &[&str] = &["0", "1", "x<i>", "(", "!", "forall", "exists"];
const TERM_TAIL: &[&str] = &["+", "*", "=", "<"];

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'0' => Tok::Zero,
            b'1' => Tok::One,
            b'+' => Tok::Plus,
            b'*' => Tok::Star,
            b'=' => Tok::Eq,
            b'<' => Tok::Lt,
            b'!' => Tok::Bang,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'x' if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let index = text[i + 1..j].parse::<Var>().map_err(|_| SyntaxError {
                    offset: start,
                    expected: vec!["variable index that fits in 32 bits"],
                    found: format!("`{}`", &text[start..j]),
                })?;
                i = j - 1;
                Tok::Var(index)
            }
            b'a'..=b'z' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                let tok = match &text[i..j] {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    word => {
                        return Err(SyntaxError {
                            offset: start,
                            expected: OPERAND_START.to_vec(),
                            found: format!("`{word}`"),
                        })
                    }
                };
                i = j - 1;
                tok
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(SyntaxError {
                    offset: start,
                    expected: OPERAND_START.to_vec(),
                    found: format!("`{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

enum Expr {
    T(Term),
    F(Formula),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> SyntaxError {
        SyntaxError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn formula(&self, e: Expr) -> Result<Formula, SyntaxError> {
        match e {
            Expr::F(f) => Ok(f),
            Expr::T(_) => Err(self.error(TERM_TAIL)),
        }
    }

    fn term(&self, e: Expr, at: usize) -> Result<Term, SyntaxError> {
        match e {
            Expr::T(t) => Ok(t),
            Expr::F(_) => Err(SyntaxError {
                offset: at,
                expected: vec!["term"],
                found: "formula".into(),
            }),
        }
    }

    fn implication(&mut self) -> Result<Expr, SyntaxError> {
        let lhs = self.disjunction()?;
        if self.peek() != Tok::Arrow {
            return Ok(lhs);
        }
        let lhs = self.formula(lhs)?;
        self.bump();
        let rhs = self.implication()?;
        let rhs = self.formula(rhs)?;
        Ok(Expr::F(Formula::implies(lhs, rhs)))
    }

    fn disjunction(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.conjunction()?;
        while self.peek() == Tok::Pipe {
            let l = self.formula(lhs)?;
            self.bump();
            let r = self.conjunction()?;
            let r = self.formula(r)?;
            lhs = Expr::F(Formula::or(l, r));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.peek() == Tok::Amp {
            let l = self.formula(lhs)?;
            self.bump();
            let r = self.unary()?;
            let r = self.formula(r)?;
            lhs = Expr::F(Formula::and(l, r));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                let inner = self.unary()?;
                Ok(Expr::F(Formula::not(self.formula(inner)?)))
            }
            q @ (Tok::Forall | Tok::Exists) => {
                self.bump();
                let Tok::Var(v) = self.peek() else {
                    return Err(self.error(&["x<i>"]));
                };
                self.bump();
                let body = self.unary()?;
                let body = self.formula(body)?;
                Ok(Expr::F(if q == Tok::Forall {
                    Formula::forall(v, body)
                } else {
                    Formula::exists(v, body)
                }))
            }
            _ => self.relation(),
        }
    }

    fn relation(&mut self) -> Result<Expr, SyntaxError> {
        let start = self.offset();
        let lhs = self.sum()?;
        let op = self.peek();
        if !matches!(op, Tok::Eq | Tok::Lt) {
            return Ok(lhs);
        }
        let lhs = self.term(lhs, start)?;
        self.bump();
        let rstart = self.offset();
        let rhs = self.sum()?;
        let rhs = self.term(rhs, rstart)?;
        Ok(Expr::F(if op == Tok::Eq {
            Formula::Eq(lhs, rhs)
        } else {
            Formula::Lt(lhs, rhs)
        }))
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let start = self.offset();
        let mut lhs = self.product()?;
        while self.peek() == Tok::Plus {
            let l = self.term(lhs, start)?;
            self.bump();
            let rstart = self.offset();
            let r = self.product()?;
            let r = self.term(r, rstart)?;
            lhs = Expr::T(Term::add(l, r));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let start = self.offset();
        let mut lhs = self.atom()?;
        while self.peek() == Tok::Star {
            let l = self.term(lhs, start)?;
            self.bump();
            let rstart = self.offset();
            let r = self.atom()?;
            let r = self.term(r, rstart)?;
            lhs = Expr::T(Term::mul(l, r));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Tok::Zero => {
                self.bump();
                Ok(Expr::T(Term::Zero))
            }
            Tok::One => {
                self.bump();
                Ok(Expr::T(Term::One))
            }
            Tok::Var(i) => {
                self.bump();
                Ok(Expr::T(Term::Var(i)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.implication()?;
                if self.peek() != Tok::RParen {
                    let mut expected = vec![")", "->", "|", "&"];
                    if matches!(inner, Expr::T(_)) {
                        expected = vec![")", "+", "*", "=", "<"];
                    }
                    return Err(self.error(&expected));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(OPERAND_START)),
        }
    }
}

/// Parses a formula. Accepts the fully parenthesised canonical form
/// produced by [`super::render`] and also the usual precedence-based
/// infix form (`*` over `+` over relations over `!`/quantifiers over `&`
/// over `|` over `->`, with `->` right associative).
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.implication()?;
    let f = p.formula(e)?;
    if p.peek() != Tok::End {
        return Err(p.error(&["end of input", "->", "|", "&"]));
    }
    Ok(f)
}
