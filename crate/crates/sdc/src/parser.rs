//! Grammar:
//!
//! ```text
//! file   := item*
//! item   := "sig" NAME "{" ("ob" NAME ("," NAME)* ";" | "op" NAME ":" word "->" word ";")* "}"
//!         | "term" NAME "=" expr ";"
//!         | "theory" NAME ("+" NAME)* ";"
//!         | ("orient" | "unorient") "~"? NAME ";"
//!         | "bind" NAME "=" NUMBER ";"
//!         | "script" NAME "=" "[" (step ("," step)*)? "]" ";"
//! step   := "~"? NAME "@" NUMBER
//! word   := NAME*
//! expr   := par (";" par)*
//! par    := atom ("|" atom)*
//! atom   := NAME | "id" "(" word ")" | "sym" "(" NAME "," NAME ")" | "empty" | "(" expr ")"
//! ```
//!
//! A `;` followed by the start of an item or the end of input ends the
//! term instead of composing.

use crate::diagnostic::{Diagnostic, DiagnosticKind, Span};
use crate::lexer::{lex, Tok, Token};

const ITEM_KEYWORDS: [&str; 7] = ["sig", "term", "theory", "orient", "unorient", "bind", "script"];
const RESERVED: [&str; 12] = ["sig", "term", "theory", "orient", "unorient", "bind", "script", "id", "sym", "empty", "ob", "op"];

pub fn is_reserved(name: &str) -> bool {
    RESERVED.contains(&name)
}

pub type Name = (String, Span);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(Name),
    Id(Vec<Name>, Span),
    Sym(Name, Name, Span),
    Empty(Span),
    /// The span is that of the `;` or `|` token.
    Seq(Box<Expr>, Box<Expr>, Span),
    Par(Box<Expr>, Box<Expr>, Span),
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Name((_, s)) | Expr::Id(_, s) | Expr::Sym(_, _, s) | Expr::Empty(s) => *s,
            Expr::Seq(l, _, _) | Expr::Par(l, _, _) => l.span(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpDecl {
    pub name: Name,
    pub arity: Vec<Name>,
    pub coarity: Vec<Name>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Sig { name: Name, obs: Vec<Name>, ops: Vec<OpDecl> },
    Term { name: Name, expr: Expr },
    Theory { parts: Vec<Name> },
    Orient { rule: Name, reversed: bool, oriented: bool },
    Bind { sort: Name, size: usize },
    Script { name: Name, steps: Vec<(String, usize, Span)> },
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn syntax(span: Span, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::Syntax, span, msg)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Number(n) => format!("`{n}`"),
        Tok::Punct(p) => format!("`{p}`"),
        Tok::Eof => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(&self.peek().tok, Tok::Punct(q) if *q == p)
    }

    fn is_keyword(&self, k: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == k)
    }

    fn expect_punct(&mut self, p: &str) -> Result<Span, Diagnostic> {
        if self.is_punct(p) {
            Ok(self.bump().span)
        } else {
            let t = self.peek();
            Err(syntax(t.span, format!("expected `{p}`, found {}", describe(&t.tok))))
        }
    }

    fn name(&mut self, what: &str) -> Result<Name, Diagnostic> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) if !is_reserved(&s) => {
                self.bump();
                Ok((s, t.span))
            }
            Tok::Ident(s) => Err(syntax(t.span, format!("`{s}` is a keyword and cannot name {what}"))),
            other => Err(syntax(t.span, format!("expected {what}, found {}", describe(&other)))),
        }
    }

    fn number(&mut self) -> Result<usize, Diagnostic> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number(n) => {
                self.bump();
                Ok(n)
            }
            other => Err(syntax(t.span, format!("expected a number, found {}", describe(&other)))),
        }
    }

    fn word(&mut self) -> Vec<Name> {
        let mut out = Vec::new();
        while let Tok::Ident(s) = &self.peek().tok {
            if is_reserved(s) {
                break;
            }
            let t = self.bump();
            if let Tok::Ident(s) = t.tok {
                out.push((s, t.span));
            }
        }
        out
    }

    fn item(&mut self) -> Result<Item, Diagnostic> {
        let t = self.peek().clone();
        let kw = match &t.tok {
            Tok::Ident(s) if ITEM_KEYWORDS.contains(&s.as_str()) => s.clone(),
            other => return Err(syntax(t.span, format!("expected a declaration, found {}", describe(other)))),
        };
        self.bump();
        let item = match kw.as_str() {
            "sig" => {
                let name = self.name("a signature")?;
                self.expect_punct("{")?;
                let (mut obs, mut ops) = (Vec::new(), Vec::new());
                while !self.is_punct("}") {
                    if self.is_keyword("ob") {
                        self.bump();
                        obs.push(self.name("a sort")?);
                        while self.is_punct(",") {
                            self.bump();
                            obs.push(self.name("a sort")?);
                        }
                    } else if self.is_keyword("op") {
                        self.bump();
                        let name = self.name("an operation")?;
                        self.expect_punct(":")?;
                        let arity = self.word();
                        self.expect_punct("->")?;
                        let coarity = self.word();
                        ops.push(OpDecl { name, arity, coarity });
                    } else {
                        let t = self.peek();
                        return Err(syntax(t.span, format!("expected `ob`, `op` or `}}`, found {}", describe(&t.tok))));
                    }
                    self.expect_punct(";")?;
                }
                self.bump();
                return Ok(Item::Sig { name, obs, ops });
            }
            "term" => {
                let name = self.name("a term")?;
                self.expect_punct("=")?;
                let expr = self.expr()?;
                Item::Term { name, expr }
            }
            "theory" => {
                let mut parts = vec![self.name("a theory")?];
                while self.is_punct("+") {
                    self.bump();
                    parts.push(self.name("a theory")?);
                }
                Item::Theory { parts }
            }
            "orient" | "unorient" => {
                let reversed = self.is_punct("~");
                if reversed {
                    self.bump();
                }
                Item::Orient {
                    rule: self.name("a rule")?,
                    reversed,
                    oriented: kw == "orient",
                }
            }
            "bind" => {
                let sort = self.name("a sort")?;
                self.expect_punct("=")?;
                Item::Bind { sort, size: self.number()? }
            }
            _ => {
                let name = self.name("a script")?;
                self.expect_punct("=")?;
                self.expect_punct("[")?;
                let mut steps = Vec::new();
                while !self.is_punct("]") {
                    if !steps.is_empty() {
                        self.expect_punct(",")?;
                    }
                    let span = self.peek().span;
                    let tilde = self.is_punct("~");
                    if tilde {
                        self.bump();
                    }
                    let (rule, _) = self.name("a rule")?;
                    self.expect_punct("@")?;
                    let index = self.number()?;
                    steps.push((if tilde { format!("~{rule}") } else { rule }, index, span));
                }
                self.bump();
                Item::Script { name, steps }
            }
        };
        self.expect_punct(";")?;
        Ok(item)
    }

    /// Whether the `;` under the cursor ends the current term.
    fn ends_term(&self) -> bool {
        match self.peek_at(1) {
            Tok::Eof => true,
            Tok::Punct("}") => true,
            Tok::Ident(s) => ITEM_KEYWORDS.contains(&s.as_str()),
            _ => false,
        }
    }

    pub fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let mut e = self.par()?;
        while self.is_punct(";") && !self.ends_term() {
            let span = self.bump().span;
            let r = self.par()?;
            e = Expr::Seq(Box::new(e), Box::new(r), span);
        }
        Ok(e)
    }

    fn par(&mut self) -> Result<Expr, Diagnostic> {
        let mut e = self.atom()?;
        while self.is_punct("|") {
            let span = self.bump().span;
            let r = self.atom()?;
            e = Expr::Par(Box::new(e), Box::new(r), span);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, Diagnostic> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Punct("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect_punct(")")?;
                Ok(e)
            }
            Tok::Ident(s) if s == "id" => {
                self.bump();
                self.expect_punct("(")?;
                let w = self.word();
                self.expect_punct(")")?;
                Ok(Expr::Id(w, t.span))
            }
            Tok::Ident(s) if s == "sym" => {
                self.bump();
                self.expect_punct("(")?;
                let a = self.name("a sort")?;
                self.expect_punct(",")?;
                let b = self.name("a sort")?;
                self.expect_punct(")")?;
                Ok(Expr::Sym(a, b, t.span))
            }
            Tok::Ident(s) if s == "empty" => {
                self.bump();
                Ok(Expr::Empty(t.span))
            }
            Tok::Ident(_) => Ok(Expr::Name(self.name("a generator or term")?)),
            other => Err(syntax(t.span, format!("expected a term, found {}", describe(other)))),
        }
    }
}

/// Parses a whole file into items, stopping at the first syntax error.
pub fn parse_items(src: &str) -> Result<Vec<Item>, Diagnostic> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut out = Vec::new();
    while p.peek().tok != Tok::Eof {
        out.push(p.item()?);
    }
    Ok(out)
}

/// Parses a standalone term expression, with an optional trailing `;`.
pub fn parse_expr(src: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if p.is_punct(";") {
        p.bump();
    }
    match &p.peek().tok {
        Tok::Eof => Ok(e),
        other => Err(syntax(p.peek().span, format!("unexpected {} after term", describe(other)))),
    }
}
