//! Signatures, words and checked term construction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::SyntaxError;

/// A generating object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sort(Arc<str>);

impl Sort {
    pub fn new(name: &str) -> Result<Sort, SyntaxError> {
        if !is_identifier(name) {
            return Err(SyntaxError::InvalidIdentifier(name.to_string()));
        }
        Ok(Sort(Arc::from(name)))
    }

    /// Builds a sort without validating the name. Used for internal sorts.
    pub fn unchecked(name: &str) -> Sort {
        Sort(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A list of sorts; the empty word is the monoidal unit.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Sort>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn single(s: &Sort) -> Word {
        Word(vec![s.clone()])
    }

    pub fn repeat(s: &Sort, n: usize) -> Word {
        Word(vec![s.clone(); n])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

impl Deref for Word {
    type Target = [Sort];
    fn deref(&self) -> &[Sort] {
        &self.0
    }
}

impl From<Vec<Sort>> for Word {
    fn from(v: Vec<Sort>) -> Word {
        Word(v)
    }
}

impl FromIterator<Sort> for Word {
    fn from_iter<I: IntoIterator<Item = Sort>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperationDecl {
    pub name: Arc<str>,
    pub arity: Word,
    pub coarity: Word,
}

impl fmt::Debug for OperationDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.arity, self.coarity)
    }
}

/// Shared handle to an operation declaration.
pub type Op = Arc<OperationDecl>;

pub fn op(name: &str, arity: Word, coarity: Word) -> Op {
    Arc::new(OperationDecl {
        name: Arc::from(name),
        arity,
        coarity,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    objects: Vec<Sort>,
    operations: Vec<Op>,
    by_sort: BTreeMap<String, usize>,
    by_op: BTreeMap<String, usize>,
}

impl Signature {
    pub fn empty() -> Signature {
        Signature::default()
    }

    pub fn objects(&self) -> &[Sort] {
        &self.objects
    }

    pub fn operations(&self) -> &[Op] {
        &self.operations
    }

    pub fn sort(&self, name: &str) -> Result<Sort, SyntaxError> {
        self.by_sort
            .get(name)
            .map(|&i| self.objects[i].clone())
            .ok_or_else(|| SyntaxError::UnknownSort(name.to_string()))
    }

    pub fn operation(&self, name: &str) -> Option<&Op> {
        self.by_op.get(name).map(|&i| &self.operations[i])
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, SyntaxError> {
        names.iter().map(|n| self.sort(n)).collect()
    }

    pub fn add_sort(&mut self, name: &str) -> Result<Sort, SyntaxError> {
        let s = Sort::new(name)?;
        if self.by_sort.contains_key(name) {
            return Err(SyntaxError::DuplicateName(name.to_string()));
        }
        self.by_sort.insert(name.to_string(), self.objects.len());
        self.objects.push(s.clone());
        Ok(s)
    }

    pub fn add_operation(&mut self, name: &str, arity: &[&str], coarity: &[&str]) -> Result<Op, SyntaxError> {
        let a = self.word(arity)?;
        let c = self.word(coarity)?;
        self.add_op(op_checked(name, a, c)?)
    }

    /// Adds an already-built declaration; its sorts must be declared.
    pub fn add_op(&mut self, o: Op) -> Result<Op, SyntaxError> {
        if self.by_op.contains_key(&*o.name) {
            return Err(SyntaxError::DuplicateName(o.name.to_string()));
        }
        for s in o.arity.iter().chain(o.coarity.iter()) {
            if !self.by_sort.contains_key(s.name()) {
                return Err(SyntaxError::UnknownSort(s.name().to_string()));
            }
        }
        self.by_op.insert(o.name.to_string(), self.operations.len());
        self.operations.push(o.clone());
        Ok(o)
    }

    /// Adds `o` unless an identical declaration is already present.
    pub fn ensure_op(&mut self, o: Op) -> Result<Op, SyntaxError> {
        if let Some(existing) = self.operation(&o.name) {
            if **existing == *o {
                return Ok(existing.clone());
            }
            return Err(SyntaxError::DuplicateName(o.name.to_string()));
        }
        self.add_op(o)
    }

    pub fn ensure_sort(&mut self, name: &str) -> Result<Sort, SyntaxError> {
        match self.sort(name) {
            Ok(s) => Ok(s),
            Err(_) => self.add_sort(name),
        }
    }
}

fn op_checked(name: &str, arity: Word, coarity: Word) -> Result<Op, SyntaxError> {
    if !is_identifier(name) {
        return Err(SyntaxError::InvalidIdentifier(name.to_string()));
    }
    Ok(op(name, arity, coarity))
}

pub fn declare_signature(objects: &[&str], operations: &[(&str, &[&str], &[&str])]) -> Result<Signature, SyntaxError> {
    let mut sig = Signature::empty();
    for o in objects {
        sig.add_sort(o)?;
    }
    for (name, a, c) in operations {
        sig.add_operation(name, a, c)?;
    }
    Ok(sig)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term(Arc<Node>);

#[derive(PartialEq, Eq, Hash)]
struct Node {
    kind: TermKind,
    dom: Word,
    cod: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermKind {
    Gen(Op),
    Id(Word),
    Sym(Sort, Sort),
    Empty,
    Seq(Term, Term),
    Par(Term, Term),
}

impl Term {
    fn mk(kind: TermKind, dom: Word, cod: Word) -> Term {
        Term(Arc::new(Node { kind, dom, cod }))
    }

    pub fn gen(o: &Op) -> Term {
        Term::mk(TermKind::Gen(o.clone()), o.arity.clone(), o.coarity.clone())
    }

    pub fn id(w: Word) -> Term {
        Term::mk(TermKind::Id(w.clone()), w.clone(), w)
    }

    pub fn sym(x: &Sort, y: &Sort) -> Term {
        Term::mk(
            TermKind::Sym(x.clone(), y.clone()),
            Word(vec![x.clone(), y.clone()]),
            Word(vec![y.clone(), x.clone()]),
        )
    }

    pub fn empty() -> Term {
        Term::mk(TermKind::Empty, Word::empty(), Word::empty())
    }

    pub fn seq(l: &Term, r: &Term) -> Result<Term, SyntaxError> {
        if l.cod() != r.dom() {
            return Err(SyntaxError::TypeMismatch {
                left_coarity: l.cod().clone(),
                right_arity: r.dom().clone(),
            });
        }
        Ok(Term::mk(TermKind::Seq(l.clone(), r.clone()), l.dom().clone(), r.cod().clone()))
    }

    pub fn par(t: &Term, b: &Term) -> Term {
        Term::mk(TermKind::Par(t.clone(), b.clone()), t.dom().concat(b.dom()), t.cod().concat(b.cod()))
    }

    pub fn kind(&self) -> &TermKind {
        &self.0.kind
    }

    pub fn dom(&self) -> &Word {
        &self.0.dom
    }

    pub fn cod(&self) -> &Word {
        &self.0.cod
    }

    /// Number of generator leaves.
    pub fn generator_count(&self) -> usize {
        match self.kind() {
            TermKind::Gen(_) => 1,
            TermKind::Seq(a, b) | TermKind::Par(a, b) => a.generator_count() + b.generator_count(),
            _ => 0,
        }
    }

    /// Every generator occurring in the term, in left-to-right leaf order.
    pub fn generators(&self) -> Vec<Op> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut Vec<Op>) {
        match self.kind() {
            TermKind::Gen(o) => out.push(o.clone()),
            TermKind::Seq(a, b) | TermKind::Par(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
            _ => {}
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints in the DSL syntax: `;` is left-associative and `|` binds tighter.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f)
    }
}

fn write_atom(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t.kind() {
        TermKind::Seq(..) | TermKind::Par(..) => {
            f.write_str("(")?;
            write_term(t, f)?;
            f.write_str(")")
        }
        _ => write_term(t, f),
    }
}

fn write_term(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t.kind() {
        TermKind::Gen(o) => f.write_str(&o.name),
        TermKind::Id(w) => {
            f.write_str("id(")?;
            for (i, s) in w.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")
        }
        TermKind::Sym(x, y) => write!(f, "sym({x},{y})"),
        TermKind::Empty => f.write_str("empty"),
        TermKind::Seq(l, r) => {
            write_term(l, f)?;
            f.write_str(" ; ")?;
            match r.kind() {
                TermKind::Seq(..) => write_atom(r, f),
                _ => write_term(r, f),
            }
        }
        TermKind::Par(l, r) => {
            match l.kind() {
                TermKind::Seq(..) => write_atom(l, f)?,
                _ => write_term(l, f)?,
            }
            f.write_str(" | ")?;
            write_atom(r, f)
        }
    }
}

pub fn type_of(t: &Term) -> (Word, Word) {
    (t.dom().clone(), t.cod().clone())
}

pub fn seq(l: &Term, r: &Term) -> Result<Term, SyntaxError> {
    Term::seq(l, r)
}

pub fn par(t: &Term, b: &Term) -> Term {
    Term::par(t, b)
}

/// Right-nested parallel composite; `Empty` for an empty list.
pub fn par_all(parts: &[Term]) -> Term {
    match parts {
        [] => Term::empty(),
        [t] => t.clone(),
        [t, rest @ ..] => Term::par(t, &par_all(rest)),
    }
}

/// Left-nested sequential composite; `id_word(w)` for an empty list.
pub fn seq_all(w: &Word, parts: &[Term]) -> Result<Term, SyntaxError> {
    let mut it = parts.iter();
    let Some(first) = it.next() else {
        return Ok(id_word(w));
    };
    let mut acc = first.clone();
    for p in it {
        acc = Term::seq(&acc, p)?;
    }
    Ok(acc)
}

pub fn id_word(w: &Word) -> Term {
    let parts: Vec<Term> = w.iter().map(|s| Term::id(Word::single(s))).collect();
    par_all(&parts)
}

/// The symmetry `v·w → w·v` built from single crossings.
pub fn sym_words(v: &Word, w: &Word) -> Term {
    if v.is_empty() {
        return id_word(w);
    }
    if w.is_empty() {
        return id_word(v);
    }
    if v.len() == 1 && w.len() == 1 {
        return Term::sym(&v[0], &w[0]);
    }
    if v.len() == 1 {
        let x = Word::single(&v[0]);
        let head = Word::single(&w[0]);
        let rest = w.slice(1, w.len());
        let a = Term::par(&Term::sym(&v[0], &w[0]), &id_word(&rest));
        let b = Term::par(&id_word(&head), &sym_words(&x, &rest));
        return Term::seq(&a, &b).expect("crossing layers compose");
    }
    let x = Word::single(&v[0]);
    let rest = v.slice(1, v.len());
    let a = Term::par(&id_word(&x), &sym_words(&rest, w));
    let b = Term::par(&sym_words(&x, w), &id_word(&rest));
    Term::seq(&a, &b).expect("crossing layers compose")
}
