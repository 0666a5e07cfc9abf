//! Name resolution and type checking of parsed files.

use std::collections::HashSet;

use sdiag_core::{dual_sort, DualGen, Op, Signature, Sort, StructGen, Term, Word};
use sdiag_rewrite::{builtin_theory, RewriteError, Theory};

use crate::diagnostic::{Diagnostic, DiagnosticKind, Span};
use crate::parser::{parse_expr, parse_items, Expr, Item, Name};

/// A rule orientation override: `orient r;`, `orient ~r;` or `unorient r;`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub rule: String,
    pub reversed: bool,
    pub oriented: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheorySpec {
    pub name: String,
    pub overrides: Vec<Orientation>,
}

/// A checked source file.
#[derive(Clone, Debug)]
pub struct SourceFile {
    pub sig_name: Option<String>,
    /// The declared signature, or a single sort `x` when there is none.
    pub signature: Signature,
    pub terms: Vec<(String, Term)>,
    pub theory: Option<TheorySpec>,
    pub sizes: Vec<(String, usize)>,
    pub scripts: Vec<(String, Vec<(String, usize)>)>,
}

fn unknown(span: Span, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::UnknownName, span, msg)
}

fn duplicate(span: Span, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::DuplicateName, span, msg)
}

/// Applies orientation overrides to a theory's rules. A reversed rule keeps
/// its name, so `~r` in a script then refers to the original direction.
pub fn apply_overrides(mut t: Theory, overrides: &[Orientation]) -> Result<Theory, RewriteError> {
    for o in overrides {
        let r = t
            .rules
            .iter_mut()
            .find(|r| r.name == o.rule)
            .ok_or_else(|| RewriteError::NoSuchRule(o.rule.clone()))?;
        if o.reversed {
            std::mem::swap(&mut r.lhs, &mut r.rhs);
        }
        r.oriented = o.oriented;
    }
    Ok(t)
}

impl SourceFile {
    /// Parses and checks a file. Syntax errors stop at the first one; name
    /// and type errors are collected across items.
    pub fn load(src: &str) -> Result<SourceFile, Vec<Diagnostic>> {
        let items = parse_items(src).map_err(|d| vec![d])?;
        let mut f = SourceFile {
            sig_name: None,
            signature: Signature::empty(),
            terms: Vec::new(),
            theory: None,
            sizes: Vec::new(),
            scripts: Vec::new(),
        };
        let mut errors = Vec::new();
        let mut poisoned: HashSet<String> = HashSet::new();
        let mut theory: Option<Theory> = None;
        if !items.iter().any(|i| matches!(i, Item::Sig { .. })) {
            f.signature.add_sort("x").expect("valid sort");
        }
        for item in &items {
            match item {
                Item::Sig { name, obs, ops } => {
                    if f.sig_name.is_some() {
                        errors.push(duplicate(name.1, "only one signature may be declared"));
                        continue;
                    }
                    if !f.terms.is_empty() || !poisoned.is_empty() {
                        errors.push(Diagnostic::error(
                            DiagnosticKind::Syntax,
                            name.1,
                            "the signature must come before any term",
                        ));
                    }
                    f.sig_name = Some(name.0.clone());
                    f.declare(obs, ops, &mut errors);
                }
                Item::Term { name, expr } => {
                    if f.term(&name.0).is_some() || poisoned.contains(&name.0) {
                        errors.push(duplicate(name.1, format!("term `{}` is already defined", name.0)));
                        continue;
                    }
                    if f.signature.operation(&name.0).is_some() {
                        errors.push(duplicate(name.1, format!("`{}` is already an operation", name.0)));
                        continue;
                    }
                    match f.resolve(expr, &poisoned) {
                        Ok(t) => f.terms.push((name.0.clone(), t)),
                        Err(d) => {
                            errors.extend(d);
                            poisoned.insert(name.0.clone());
                        }
                    }
                }
                Item::Theory { parts } => {
                    if f.theory.is_some() {
                        errors.push(duplicate(parts[0].1, "only one theory may be declared"));
                        continue;
                    }
                    let spec: Vec<&str> = parts.iter().map(|p| p.0.as_str()).collect();
                    let spec = spec.join("+");
                    match builtin_theory(&spec, &f.signature) {
                        Ok(t) => theory = Some(t),
                        Err(RewriteError::UnknownTheory(p)) => {
                            let at = parts.iter().find(|q| q.0 == p).map_or(parts[0].1, |q| q.1);
                            errors.push(unknown(at, format!("unknown theory `{p}`")));
                            continue;
                        }
                        Err(e) => {
                            errors.push(Diagnostic::error(DiagnosticKind::Semantic, parts[0].1, e.to_string()));
                            continue;
                        }
                    }
                    f.theory = Some(TheorySpec {
                        name: spec,
                        overrides: Vec::new(),
                    });
                }
                Item::Orient { rule, reversed, oriented } => {
                    let (Some(spec), Some(t)) = (f.theory.as_mut(), theory.as_ref()) else {
                        errors.push(Diagnostic::error(
                            DiagnosticKind::Semantic,
                            rule.1,
                            "orientation given before any theory",
                        ));
                        continue;
                    };
                    if !t.has_rule(&rule.0) {
                        errors.push(unknown(rule.1, format!("theory `{}` has no rule `{}`", t.name, rule.0)));
                        continue;
                    }
                    spec.overrides.push(Orientation {
                        rule: rule.0.clone(),
                        reversed: *reversed,
                        oriented: *oriented,
                    });
                }
                Item::Bind { sort, size } => {
                    if f.sort(sort).is_err() {
                        errors.push(unknown(sort.1, format!("unknown sort `{}`", sort.0)));
                    } else if f.sizes.iter().any(|(s, _)| *s == sort.0) {
                        errors.push(duplicate(sort.1, format!("sort `{}` is already bound", sort.0)));
                    } else {
                        f.sizes.push((sort.0.clone(), *size));
                    }
                }
                Item::Script { name, steps } => {
                    if f.script(&name.0).is_some() {
                        errors.push(duplicate(name.1, format!("script `{}` is already defined", name.0)));
                        continue;
                    }
                    if let Some(t) = &theory {
                        for (rule, _, span) in steps {
                            if t.rule(rule).is_err() {
                                errors.push(unknown(*span, format!("theory `{}` has no rule `{rule}`", t.name)));
                            }
                        }
                    }
                    f.scripts
                        .push((name.0.clone(), steps.iter().map(|(r, i, _)| (r.clone(), *i)).collect()));
                }
            }
        }
        if errors.is_empty() {
            Ok(f)
        } else {
            Err(errors)
        }
    }

    fn declare(&mut self, obs: &[Name], ops: &[crate::parser::OpDecl], errors: &mut Vec<Diagnostic>) {
        for (o, span) in obs {
            if self.signature.objects().iter().any(|s| s.name() == o) {
                errors.push(duplicate(*span, format!("sort `{o}` is already declared")));
            } else {
                self.signature.add_sort(o).expect("identifiers are valid sorts");
            }
        }
        for d in ops {
            let (name, span) = &d.name;
            if self.signature.operation(name).is_some() {
                errors.push(duplicate(*span, format!("operation `{name}` is already declared")));
                continue;
            }
            let (Ok(a), Ok(c)) = (self.word(&d.arity), self.word(&d.coarity)) else {
                for w in d.arity.iter().chain(d.coarity.iter()) {
                    if self.sort(w).is_err() {
                        errors.push(unknown(w.1, format!("unknown sort `{}`", w.0)));
                    }
                }
                continue;
            };
            self.signature
                .add_op(sdiag_core::op(name, a, c))
                .expect("checked names");
        }
    }

    pub fn term(&self, name: &str) -> Option<&Term> {
        self.terms.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn script(&self, name: &str) -> Option<&[(String, usize)]> {
        self.scripts.iter().find(|(n, _)| n == name).map(|(_, s)| s.as_slice())
    }

    pub fn sorts(&self) -> &[Sort] {
        self.signature.objects()
    }

    /// A declared sort, or the formal dual `s_op` of one.
    fn sort(&self, (name, _): &Name) -> Result<Sort, ()> {
        if let Some(s) = self.sorts().iter().find(|s| s.name() == name) {
            return Ok(s.clone());
        }
        let base = name.strip_suffix("_op").ok_or(())?;
        let s = self.sorts().iter().find(|s| s.name() == base).ok_or(())?;
        Ok(dual_sort(s))
    }

    fn word(&self, names: &[Name]) -> Result<Word, Diagnostic> {
        names
            .iter()
            .map(|n| self.sort(n).map_err(|_| unknown(n.1, format!("unknown sort `{}`", n.0))))
            .collect()
    }

    /// A signature operation or a structural generator on a declared sort.
    fn generator(&self, name: &str) -> Option<Op> {
        if let Some(o) = self.signature.operation(name) {
            return Some(o.clone());
        }
        for s in self.sorts() {
            if let Some(g) = StructGen::ALL.iter().find(|g| g.name_for(s) == name) {
                return Some(g.op(s));
            }
            if let Some(g) = [DualGen::Cup, DualGen::Cap].iter().find(|g| g.name_for(s) == name) {
                return Some(g.op(s));
            }
        }
        None
    }

    /// The theory named by `name`, or the file's own theory with its
    /// orientation overrides when `name` is `None`.
    pub fn build_theory(&self, name: Option<&str>) -> Result<Option<Theory>, RewriteError> {
        match (name, &self.theory) {
            (Some(n), _) => builtin_theory(n, &self.signature).map(Some),
            (None, Some(spec)) => {
                let t = builtin_theory(&spec.name, &self.signature)?;
                apply_overrides(t, &spec.overrides).map(Some)
            }
            (None, None) => Ok(None),
        }
    }

    /// Parses and checks a standalone expression against this file.
    pub fn parse_term(&self, src: &str) -> Result<Term, Vec<Diagnostic>> {
        let e = parse_expr(src).map_err(|d| vec![d])?;
        self.resolve(&e, &HashSet::new())
    }

    /// A term by name, or else the text parsed as an expression.
    pub fn lookup(&self, text: &str) -> Result<Term, Vec<Diagnostic>> {
        match self.term(text) {
            Some(t) => Ok(t.clone()),
            None => self.parse_term(text),
        }
    }

    fn resolve(&self, e: &Expr, poisoned: &HashSet<String>) -> Result<Term, Vec<Diagnostic>> {
        match e {
            Expr::Name((n, span)) => {
                if let Some(t) = self.term(n) {
                    return Ok(t.clone());
                }
                if let Some(o) = self.generator(n) {
                    return Ok(Term::gen(&o));
                }
                if poisoned.contains(n) {
                    return Err(Vec::new());
                }
                Err(vec![unknown(*span, format!("unknown generator or term `{n}`"))])
            }
            Expr::Id(w, _) => self.word(w).map(Term::id).map_err(|d| vec![d]),
            Expr::Sym(a, b, _) => {
                let a = self.word(std::slice::from_ref(a)).map_err(|d| vec![d])?;
                let b = self.word(std::slice::from_ref(b)).map_err(|d| vec![d])?;
                Ok(Term::sym(&a[0], &b[0]))
            }
            Expr::Empty(_) => Ok(Term::empty()),
            Expr::Seq(l, r, span) => {
                let (l, r) = both(self.resolve(l, poisoned), self.resolve(r, poisoned))?;
                Term::seq(&l, &r).map_err(|_| {
                    vec![Diagnostic::error(
                        DiagnosticKind::TypeMismatch,
                        *span,
                        format!("cannot compose: left side ends in {} but right side starts with {}", l.cod(), r.dom()),
                    )
                    .with_words(r.dom().clone(), l.cod().clone())]
                })
            }
            Expr::Par(l, r, _) => {
                let (l, r) = both(self.resolve(l, poisoned), self.resolve(r, poisoned))?;
                Ok(Term::par(&l, &r))
            }
        }
    }
}

fn both(a: Result<Term, Vec<Diagnostic>>, b: Result<Term, Vec<Diagnostic>>) -> Result<(Term, Term), Vec<Diagnostic>> {
    match (a, b) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        (a, b) => {
            let mut out = a.err().unwrap_or_default();
            out.extend(b.err().unwrap_or_default());
            Err(out)
        }
    }
}
