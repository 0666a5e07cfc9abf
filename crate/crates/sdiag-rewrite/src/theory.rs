//! Rewrite rules, theories, and the built-in theories.

use std::collections::BTreeSet;
use std::fmt;

use sdiag_core::{
    from_term, id_word, par_all, sym_words, DualGen, Op, OpenHypergraph, Signature, Sort, StructGen, Term, Word,
};

use crate::error::RewriteError;

/// A pair of graphs with identical boundaries. Oriented rules are used
/// left to right by [`crate::normalize`]; every rule is usable both ways in
/// search and replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: OpenHypergraph,
    pub rhs: OpenHypergraph,
    pub oriented: bool,
}

impl RewriteRule {
    pub fn new(name: &str, lhs: OpenHypergraph, rhs: OpenHypergraph, oriented: bool) -> Result<RewriteRule, RewriteError> {
        if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            return Err(RewriteError::InvalidRule {
                name: name.to_string(),
                reason: format!("{} -> {} vs {} -> {}", lhs.dom(), lhs.cod(), rhs.dom(), rhs.cod()),
            });
        }
        Ok(RewriteRule {
            name: name.to_string(),
            lhs,
            rhs,
            oriented,
        })
    }

    pub fn from_terms(name: &str, lhs: &Term, rhs: &Term, oriented: bool) -> Result<RewriteRule, RewriteError> {
        RewriteRule::new(name, from_term(lhs), from_term(rhs), oriented)
    }

    /// The same equation read right to left, named `~name`.
    pub fn reversed(&self) -> RewriteRule {
        let name = match self.name.strip_prefix('~') {
            Some(n) => n.to_string(),
            None => format!("~{}", self.name),
        };
        RewriteRule {
            name,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            oriented: self.oriented,
        }
    }
}

/// How matches interact with node identifications.
///
/// `Monogamous`: matches are injective, convex and boundary-compatible, and
/// rewriting stays inside the image of terms. `Frobenius`: nodes stand for
/// commutative special Frobenius spiders, boundary nodes may be shared, and
/// gluing merges nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Monogamous,
    Frobenius,
}

#[derive(Clone, Debug)]
pub struct Theory {
    pub name: String,
    pub base_signature: Signature,
    pub extra_generators: Vec<Op>,
    pub rules: Vec<RewriteRule>,
    pub mode: Mode,
    /// Names of the built-in theories this one was assembled from.
    pub parts: Vec<String>,
}

pub const THEORY_NAMES: [&str; 16] = [
    "monoid",
    "comm_monoid",
    "comonoid",
    "cocomm_comonoid",
    "bimonoid",
    "frobenius",
    "special_frobenius",
    "scFrob",
    "extra_special_frobenius",
    "compact_closed",
    "self_dual_compact",
    "cd",
    "cartesian",
    "cocartesian",
    "biproduct",
    "hypergraph_cat",
];

impl Theory {
    /// Assembles a theory, checking that rules only use declared generators
    /// and that non-monogamous rules come with Frobenius mode.
    pub fn new(
        name: &str,
        base_signature: Signature,
        extra_generators: Vec<Op>,
        rules: Vec<RewriteRule>,
        mode: Mode,
    ) -> Result<Theory, RewriteError> {
        let t = Theory {
            name: name.to_string(),
            base_signature,
            extra_generators,
            rules: Vec::new(),
            mode,
            parts: Vec::new(),
        };
        rules.into_iter().try_fold(t, |t, r| t.with_rule(r))
    }

    /// Adds a rule after validating it against the theory.
    pub fn with_rule(mut self, r: RewriteRule) -> Result<Theory, RewriteError> {
        let known: BTreeSet<Op> = self.generators().into_iter().collect();
        let invalid = |reason: String| RewriteError::InvalidRule {
            name: r.name.clone(),
            reason,
        };
        for g in [&r.lhs, &r.rhs] {
            if let Some(o) = g.operations().into_iter().find(|o| !known.contains(o)) {
                return Err(invalid(format!("generator `{}` is not in the theory", o.name)));
            }
            if self.mode == Mode::Monogamous && !g.is_monogamous() {
                return Err(invalid("non-monogamous rule needs Frobenius mode".to_string()));
            }
        }
        if self.rules.iter().any(|q| q.name == r.name) {
            return Err(invalid("duplicate rule name".to_string()));
        }
        self.rules.push(r);
        Ok(self)
    }

    pub fn generators(&self) -> Vec<Op> {
        let mut out: Vec<Op> = self.base_signature.operations().to_vec();
        for o in &self.extra_generators {
            if !out.contains(o) {
                out.push(o.clone());
            }
        }
        out
    }

    /// The base signature extended by the extra generators and their sorts.
    pub fn signature(&self) -> Signature {
        let mut sig = self.base_signature.clone();
        for o in &self.extra_generators {
            for s in o.arity.iter().chain(o.coarity.iter()) {
                sig.ensure_sort(s.name()).expect("sort names are identifiers");
            }
            sig.ensure_op(o.clone()).expect("structural names do not clash");
        }
        sig
    }

    /// Looks a rule up by name; `~name` gives the reversed rule.
    pub fn rule(&self, name: &str) -> Result<RewriteRule, RewriteError> {
        let (base, rev) = match name.strip_prefix('~') {
            Some(b) => (b, true),
            None => (name, false),
        };
        let r = self
            .rules
            .iter()
            .find(|r| r.name == base)
            .ok_or_else(|| RewriteError::NoSuchRule(name.to_string()))?;
        Ok(if rev { r.reversed() } else { r.clone() })
    }

    pub fn has_rule(&self, name: &str) -> bool {
        self.rules.iter().any(|r| r.name == name)
    }

    pub fn has_part(&self, part: &str) -> bool {
        self.parts.iter().any(|p| p == part)
    }

    pub fn oriented_rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.rules.iter().filter(|r| r.oriented)
    }

    /// Sorts the per-sort structure ranges over.
    pub fn sorts(&self) -> Vec<Sort> {
        self.base_signature.objects().to_vec()
    }

    /// Name of a per-sort rule: unsuffixed when there is a single sort.
    pub fn rule_name(&self, base: &str, s: &Sort) -> String {
        suffixed(base, s, self.sorts().len())
    }

    /// Whether decidability via Frobenius canonical graphs applies.
    pub fn is_hypergraph_complete(&self) -> bool {
        ["scFrob", "extra_special_frobenius", "hypergraph_cat"].iter().any(|p| self.has_part(p))
    }

    pub fn is_extra_special(&self) -> bool {
        self.has_part("extra_special_frobenius")
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = if self.oriented { "->" } else { "=" };
        write!(
            f,
            "{} : {} edges {} {} edges ({} -> {})",
            self.name,
            self.lhs.edge_count(),
            arrow,
            self.rhs.edge_count(),
            self.lhs.dom(),
            self.lhs.cod()
        )
    }
}

fn suffixed(base: &str, s: &Sort, sorts: usize) -> String {
    if sorts == 1 {
        base.to_string()
    } else {
        format!("{base}_{s}")
    }
}

fn g(k: StructGen, s: &Sort) -> Term {
    Term::gen(&k.op(s))
}

fn id(s: &Sort) -> Term {
    Term::id(Word::single(s))
}

fn chain(parts: &[Term]) -> Term {
    let mut it = parts.iter();
    let first = it.next().expect("nonempty chain").clone();
    it.fold(first, |acc, t| Term::seq(&acc, t).expect("rule terms are well typed"))
}

fn pair(a: &Term, b: &Term) -> Term {
    Term::par(a, b)
}

/// `comult_w : w → w·w`, built wire by wire.
pub fn comult_word(w: &Word) -> Term {
    match w.len() {
        0 => Term::empty(),
        1 => g(StructGen::Comult, &w[0]),
        _ => {
            let x = Word::single(&w[0]);
            let v = w.slice(1, w.len());
            let split = pair(&g(StructGen::Comult, &w[0]), &comult_word(&v));
            let shuffle = par_all(&[id_word(&x), sym_words(&x, &v), id_word(&v)]);
            chain(&[split, shuffle])
        }
    }
}

/// `counit_w : w → ε`.
pub fn counit_word(w: &Word) -> Term {
    par_all(&w.iter().map(|s| g(StructGen::Counit, s)).collect::<Vec<_>>())
}

/// `mult_w : w·w → w`, the mirror image of [`comult_word`].
pub fn mult_word(w: &Word) -> Term {
    match w.len() {
        0 => Term::empty(),
        1 => g(StructGen::Mult, &w[0]),
        _ => {
            let x = Word::single(&w[0]);
            let v = w.slice(1, w.len());
            let shuffle = par_all(&[id_word(&x), sym_words(&v, &x), id_word(&v)]);
            let join = pair(&g(StructGen::Mult, &w[0]), &mult_word(&v));
            chain(&[shuffle, join])
        }
    }
}

pub fn unit_word(w: &Word) -> Term {
    par_all(&w.iter().map(|s| g(StructGen::Unit, s)).collect::<Vec<_>>())
}

struct Builder {
    rules: Vec<RewriteRule>,
    extras: Vec<Op>,
    sorts: usize,
    frobenius: bool,
}

impl Builder {
    fn rule(&mut self, base: &str, s: Option<&Sort>, lhs: Term, rhs: Term, oriented: bool) {
        let name = match s {
            Some(s) => suffixed(base, s, self.sorts),
            None => base.to_string(),
        };
        if self.rules.iter().any(|r| r.name == name) {
            return;
        }
        let r = RewriteRule::from_terms(&name, &lhs, &rhs, oriented).expect("built-in rules have equal boundaries");
        self.rules.push(r);
    }

    fn extra(&mut self, o: Op) {
        if !self.extras.contains(&o) {
            self.extras.push(o);
        }
    }

    fn monoid(&mut self, s: &Sort, comm: bool) {
        self.extra(StructGen::Mult.op(s));
        self.extra(StructGen::Unit.op(s));
        let (m, u) = (g(StructGen::Mult, s), g(StructGen::Unit, s));
        self.rule(
            "as",
            Some(s),
            chain(&[pair(&m, &id(s)), m.clone()]),
            chain(&[pair(&id(s), &m), m.clone()]),
            true,
        );
        self.rule("unl", Some(s), chain(&[pair(&u, &id(s)), m.clone()]), id(s), true);
        self.rule("unr", Some(s), chain(&[pair(&id(s), &u), m.clone()]), id(s), true);
        if comm {
            self.rule("com", Some(s), chain(&[Term::sym(s, s), m.clone()]), m, false);
        }
    }

    fn comonoid(&mut self, s: &Sort, cocomm: bool) {
        self.extra(StructGen::Comult.op(s));
        self.extra(StructGen::Counit.op(s));
        let (c, e) = (g(StructGen::Comult, s), g(StructGen::Counit, s));
        self.rule(
            "coas",
            Some(s),
            chain(&[c.clone(), pair(&c, &id(s))]),
            chain(&[c.clone(), pair(&id(s), &c)]),
            true,
        );
        self.rule("counl", Some(s), chain(&[c.clone(), pair(&e, &id(s))]), id(s), true);
        self.rule("counr", Some(s), chain(&[c.clone(), pair(&id(s), &e)]), id(s), true);
        if cocomm {
            self.rule("cocom", Some(s), chain(&[c.clone(), Term::sym(s, s)]), c, false);
        }
    }

    fn bimonoid(&mut self, s: &Sort) {
        self.monoid(s, false);
        self.comonoid(s, false);
        let (m, u) = (g(StructGen::Mult, s), g(StructGen::Unit, s));
        let (c, e) = (g(StructGen::Comult, s), g(StructGen::Counit, s));
        let middle = par_all(&[id(s), Term::sym(s, s), id(s)]);
        self.rule(
            "bimon1",
            Some(s),
            chain(&[m.clone(), c.clone()]),
            chain(&[pair(&c, &c), middle, pair(&m, &m)]),
            true,
        );
        self.rule("bimon2", Some(s), chain(&[u.clone(), c]), pair(&u, &u), true);
        self.rule("bimon3", Some(s), chain(&[m, e.clone()]), pair(&e, &e), true);
        self.rule("bimon4", Some(s), chain(&[u, e]), Term::empty(), true);
    }

    fn frob_law(&mut self, s: &Sort) {
        let (m, c) = (g(StructGen::Mult, s), g(StructGen::Comult, s));
        self.rule("frob", Some(s), frob_left(s), chain(&[pair(&id(s), &c), pair(&m, &id(s))]), false);
    }

    fn frobenius(&mut self, s: &Sort, special: bool, comm: bool) {
        self.monoid(s, comm);
        self.comonoid(s, comm);
        self.frob_law(s);
        if comm {
            let (m, c) = (g(StructGen::Mult, s), g(StructGen::Comult, s));
            self.rule("frobm", Some(s), chain(&[m, c]), frob_left(s), false);
        }
        if special {
            let (m, c) = (g(StructGen::Mult, s), g(StructGen::Comult, s));
            self.rule("special", Some(s), chain(&[c, m]), id(s), true);
        }
    }

    fn bone(&mut self, s: &Sort) {
        let (u, e) = (g(StructGen::Unit, s), g(StructGen::Counit, s));
        self.rule("bone", Some(s), chain(&[u, e]), Term::empty(), true);
    }

    fn compact(&mut self, s: &Sort) {
        let (cup, cap) = (DualGen::Cup.op(s), DualGen::Cap.op(s));
        self.extra(cup.clone());
        self.extra(cap.clone());
        let d = sdiag_core::dual_sort(s);
        let (cup, cap) = (Term::gen(&cup), Term::gen(&cap));
        self.rule(
            "S",
            Some(s),
            chain(&[pair(&cup, &id(s)), pair(&id(s), &cap)]),
            id(s),
            true,
        );
        self.rule(
            "Z",
            Some(s),
            chain(&[pair(&id(&d), &cup), pair(&cap, &id(&d))]),
            id(&d),
            true,
        );
    }

    fn self_dual(&mut self, s: &Sort) {
        self.extra(StructGen::Cup.op(s));
        self.extra(StructGen::Cap.op(s));
        let (cup, cap) = (g(StructGen::Cup, s), g(StructGen::Cap, s));
        self.rule(
            "S",
            Some(s),
            chain(&[pair(&cup, &id(s)), pair(&id(s), &cap)]),
            id(s),
            true,
        );
        self.rule(
            "Z",
            Some(s),
            chain(&[pair(&id(s), &cup), pair(&cap, &id(s))]),
            id(s),
            true,
        );
    }

    /// `dup_d` and `del_d` for every operation `d`.
    fn copy_delete(&mut self, ops: &[Op]) {
        for d in ops {
            let dt = Term::gen(d);
            let dup_l = chain(&[dt.clone(), comult_word(&d.coarity)]);
            let dup_r = chain(&[comult_word(&d.arity), pair(&dt, &dt)]);
            self.rule(&format!("dup_{}", d.name), None, dup_l, dup_r, !d.coarity.is_empty());
            let del_l = chain(&[dt.clone(), counit_word(&d.coarity)]);
            self.rule(&format!("del_{}", d.name), None, del_l, counit_word(&d.arity), true);
        }
    }

    /// `codup_d` and `codel_d` for every operation `d`.
    fn cocopy_codelete(&mut self, ops: &[Op]) {
        for d in ops {
            let dt = Term::gen(d);
            let l = chain(&[mult_word(&d.arity), dt.clone()]);
            let r = chain(&[pair(&dt, &dt), mult_word(&d.coarity)]);
            self.rule(&format!("codup_{}", d.name), None, l, r, !d.arity.is_empty());
            let l = chain(&[unit_word(&d.arity), dt.clone()]);
            self.rule(&format!("codel_{}", d.name), None, l, unit_word(&d.coarity), true);
        }
    }
}

fn frob_left(s: &Sort) -> Term {
    let (m, c) = (g(StructGen::Mult, s), g(StructGen::Comult, s));
    chain(&[pair(&c, &id(s)), pair(&id(s), &m)])
}

/// The generators a component contributes, used to instantiate the copy
/// schemes of the other components.
fn contributed(part: &str, sorts: &[Sort]) -> Vec<Op> {
    let mut out = Vec::new();
    for s in sorts {
        let gens: &[StructGen] = match part {
            "monoid" | "comm_monoid" | "cocartesian" => &[StructGen::Mult, StructGen::Unit],
            "comonoid" | "cocomm_comonoid" | "cd" | "cartesian" => &[StructGen::Comult, StructGen::Counit],
            "self_dual_compact" => &[StructGen::Cup, StructGen::Cap],
            "compact_closed" => {
                out.push(DualGen::Cup.op(s));
                out.push(DualGen::Cap.op(s));
                &[]
            }
            "biproduct" | "bimonoid" | "frobenius" | "special_frobenius" | "scFrob" | "extra_special_frobenius"
            | "hypergraph_cat" => &StructGen::FROBENIUS,
            _ => &[],
        };
        out.extend(gens.iter().map(|k| k.op(s)));
    }
    out
}

fn add_part(b: &mut Builder, part: &str, sorts: &[Sort], sigma: &[Op], others: &[Op]) -> Result<(), RewriteError> {
    let mut ops: Vec<Op> = sigma.to_vec();
    ops.extend(others.iter().cloned());
    for s in sorts {
        match part {
            "monoid" => b.monoid(s, false),
            "comm_monoid" => b.monoid(s, true),
            "comonoid" => b.comonoid(s, false),
            "cocomm_comonoid" | "cd" | "cartesian" => b.comonoid(s, true),
            "cocartesian" => b.monoid(s, true),
            "biproduct" => {
                b.comonoid(s, true);
                b.monoid(s, true);
            }
            "bimonoid" => b.bimonoid(s),
            "frobenius" => b.frobenius(s, false, false),
            "special_frobenius" => b.frobenius(s, true, false),
            "scFrob" | "hypergraph_cat" => b.frobenius(s, true, true),
            "extra_special_frobenius" => {
                b.frobenius(s, true, true);
                b.bone(s);
            }
            "compact_closed" => b.compact(s),
            "self_dual_compact" => b.self_dual(s),
            _ => return Err(RewriteError::UnknownTheory(part.to_string())),
        }
    }
    let white: Vec<Op> = sorts.iter().flat_map(|s| [StructGen::Mult.op(s), StructGen::Unit.op(s)]).collect();
    let black: Vec<Op> = sorts.iter().flat_map(|s| [StructGen::Comult.op(s), StructGen::Counit.op(s)]).collect();
    match part {
        "cartesian" => b.copy_delete(&ops),
        "cocartesian" => b.cocopy_codelete(&ops),
        "biproduct" => {
            let mut with_white = ops.clone();
            with_white.extend(white.iter().filter(|o| !ops.contains(o)).cloned());
            b.copy_delete(&with_white);
            let mut with_black = ops.clone();
            with_black.extend(black.iter().filter(|o| !ops.contains(o)).cloned());
            b.cocopy_codelete(&with_black);
        }
        _ => {}
    }
    if matches!(part, "scFrob" | "extra_special_frobenius" | "hypergraph_cat") {
        b.frobenius = true;
    }
    Ok(())
}

/// A built-in theory over the sorts and operations of `sig`, or a sum of
/// built-ins written `a+b`. When `sig` has no sorts a single sort `x` is
/// used. Copy schemes of `cartesian`, `cocartesian` and `biproduct` range
/// over the operations of `sig` and the generators of the other summands.
pub fn builtin_theory(name: &str, sig: &Signature) -> Result<Theory, RewriteError> {
    let parts: Vec<String> = name.split('+').map(|p| p.trim().to_string()).collect();
    for p in &parts {
        if !THEORY_NAMES.contains(&p.as_str()) {
            return Err(RewriteError::UnknownTheory(p.clone()));
        }
    }
    let mut base = sig.clone();
    if base.objects().is_empty() {
        base.add_sort("x")?;
    }
    let sorts = base.objects().to_vec();
    let sigma: Vec<Op> = base.operations().to_vec();
    let mut b = Builder {
        rules: Vec::new(),
        extras: Vec::new(),
        sorts: sorts.len(),
        frobenius: false,
    };
    for (i, p) in parts.iter().enumerate() {
        let mut others: Vec<Op> = Vec::new();
        for (j, q) in parts.iter().enumerate() {
            if i != j {
                others.extend(contributed(q, &sorts).into_iter().filter(|o| !sigma.contains(o)));
            }
        }
        add_part(&mut b, p, &sorts, &sigma, &others)?;
    }
    let mode = if b.frobenius { Mode::Frobenius } else { Mode::Monogamous };
    let mut t = Theory::new(name, base, b.extras, b.rules, mode)?;
    t.parts = parts;
    Ok(t)
}
