use crate::diagnostic::{Diagnostic, DiagnosticKind, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Number(usize),
    /// One of `{ } ( ) [ ] ; | : , = @ ~ +` or `->`.
    Punct(&'static str),
    Eof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

const PUNCT: [&str; 15] = ["->", "{", "}", "(", ")", "[", "]", ";", "|", ":", ",", "=", "@", "~", "+"];

/// Splits source text into tokens. `//` and `#` start comments that run to
/// the end of the line.
pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let span = Span { line: ln + 1, col: i + 1 };
            if c.is_whitespace() {
                i += 1;
            } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
                break;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    span,
                });
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse()
                    .map_err(|_| Diagnostic::error(DiagnosticKind::Syntax, span, format!("number `{text}` is too large")))?;
                out.push(Token { tok: Tok::Number(n), span });
            } else {
                let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
                let Some(p) = PUNCT.iter().find(|p| rest.starts_with(**p)) else {
                    return Err(Diagnostic::error(DiagnosticKind::Syntax, span, format!("unexpected character `{c}`")));
                };
                i += p.len();
                out.push(Token { tok: Tok::Punct(p), span });
            }
        }
    }
    let last = src.lines().count().max(1);
    let col = src.lines().last().map_or(0, |l| l.chars().count()) + 1;
    out.push(Token {
        tok: Tok::Eof,
        span: Span { line: last, col },
    });
    Ok(out)
}
