//! Randomized checks that evaluation respects the laws of a strict
//! symmetric monoidal functor.

use rand::seq::SliceRandom;
use rand::Rng;
use sdiag_core::random::{perturb, TermGen};
use sdiag_core::{declare_signature, id_word, seq_all, sym_words, Op, Sort, StructGen, Term, Word};

use crate::error::SemanticsError;
use crate::model::{eval, model_finrel_product, Model};
use crate::relation::FinRelation;
use crate::trace::{trace_via_compact, trace_word};

#[derive(Clone, Debug, Default)]
pub struct FunctorReport {
    pub samples: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl FunctorReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, law: &str, ok: bool, witness: &dyn Fn() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(format!("{law}: {}", witness()));
        }
    }
}

/// The structural generators on `s` that `m` interprets.
pub fn supported_structure<M: Model + ?Sized>(m: &M, s: &Sort) -> Vec<Op> {
    StructGen::ALL.iter().map(|g| g.op(s)).filter(|o| m.supports(o)).collect()
}

fn random_word<R: Rng>(rng: &mut R, sorts: &[Sort]) -> Word {
    let n = rng.gen_range(0..=2);
    (0..n).map(|_| sorts.choose(rng).expect("sorts").clone()).collect()
}

/// Draws `samples` rounds of random terms over `ops` and checks composition,
/// tensor, units, interchange, symmetry and invariance under the structural
/// laws, all by exact equality of evaluations.
pub fn functor_check<M: Model + ?Sized, R: Rng>(
    m: &M,
    ops: &[Op],
    samples: usize,
    size: usize,
    rng: &mut R,
) -> Result<FunctorReport, SemanticsError> {
    let mut sorts: Vec<Sort> = ops.iter().flat_map(|o| o.arity.iter().chain(o.coarity.iter()).cloned()).collect();
    sorts.sort();
    sorts.dedup();
    if sorts.is_empty() {
        sorts.push(Sort::unchecked("x"));
    }
    let gen = TermGen {
        max_width: 3,
        ..TermGen::new(ops.to_vec(), size)
    };
    let mut report = FunctorReport::default();
    for _ in 0..samples {
        report.samples += 1;
        let w1 = random_word(rng, &sorts);
        let a = gen.term(rng, &w1);
        let b = gen.term(rng, a.cod());
        let c = gen.term(rng, b.cod());
        let w2 = random_word(rng, &sorts);
        let d = gen.term(rng, &w2);
        let e = gen.term(rng, d.cod());
        let (ea, eb, ec, ed, ee) = (eval(m, &a)?, eval(m, &b)?, eval(m, &c)?, eval(m, &d)?, eval(m, &e)?);
        let show = |ts: &[&Term]| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ; ");

        let ab = Term::seq(&a, &b)?;
        report.check("seq", eval(m, &ab)? == m.compose(&ea, &eb)?, &|| show(&[&a, &b]));
        let ad = Term::par(&a, &d);
        report.check("par", eval(m, &ad)? == m.tensor(&ea, &ed), &|| show(&[&a, &d]));
        report.check(
            "seq-assoc",
            m.compose(&m.compose(&ea, &eb)?, &ec)? == m.compose(&ea, &m.compose(&eb, &ec)?)?,
            &|| show(&[&a, &b, &c]),
        );
        report.check(
            "par-assoc",
            m.tensor(&m.tensor(&ea, &eb), &ec) == m.tensor(&ea, &m.tensor(&eb, &ec)),
            &|| show(&[&a, &b, &c]),
        );
        let unit_ok = m.compose(&m.identity(a.dom()), &ea)? == ea
            && m.compose(&ea, &m.identity(a.cod()))? == ea
            && m.tensor(&m.identity(&Word::empty()), &ea) == ea
            && m.tensor(&ea, &m.identity(&Word::empty())) == ea
            && eval(m, &id_word(a.dom()))? == m.identity(a.dom());
        report.check("unit", unit_ok, &|| show(&[&a]));
        report.check(
            "interchange",
            m.tensor(&m.compose(&ea, &eb)?, &m.compose(&ed, &ee)?) == m.compose(&m.tensor(&ea, &ed), &m.tensor(&eb, &ee))?,
            &|| show(&[&a, &b, &d, &e]),
        );
        let twice = Term::seq(&sym_words(&w1, &w2), &sym_words(&w2, &w1))?;
        report.check(
            "sym-involutive",
            eval(m, &twice)? == m.identity(&w1.concat(&w2)),
            &|| format!("{w1} | {w2}"),
        );
        let lhs = m.compose(&m.tensor(&ea, &ed), &eval(m, &sym_words(a.cod(), d.cod()))?)?;
        let rhs = m.compose(&eval(m, &sym_words(a.dom(), d.dom()))?, &m.tensor(&ed, &ea))?;
        report.check("sym-natural", lhs == rhs, &|| show(&[&a, &d]));
        let whole = Term::seq(&ab, &c)?;
        let (law, moved) = perturb(rng, &whole);
        report.check(
            "structural",
            eval(m, &whole)? == eval(m, &moved)?,
            &|| format!("{law:?} {whole} vs {moved}"),
        );
    }
    Ok(report)
}

/// Outcome of one traced-monoidal axiom over many random instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomTally {
    pub axiom: &'static str,
    pub passed: usize,
    pub total: usize,
}

pub fn random_relation<R: Rng>(rng: &mut R, dom: usize, cod: usize, density: f64) -> FinRelation {
    let pairs = (0..dom).flat_map(|a| (0..cod).map(move |b| (a, b))).filter(|_| rng.gen_bool(density)).collect::<Vec<_>>();
    FinRelation::new(dom, cod, pairs).expect("pairs in range")
}

/// Checks vanishing, superposing, yanking, tightening and sliding for
/// [`trace_via_compact`] in the relational model under products, drawing
/// sort sizes in `1..=max_size` and random relations for every generator.
pub fn traced_axioms<R: Rng>(rng: &mut R, samples: usize, max_size: usize) -> Result<Vec<AxiomTally>, SemanticsError> {
    let sig = declare_signature(
        &["x", "y", "a", "b", "c", "d"],
        &[
            ("cup_x", &[], &["x", "x"]),
            ("cap_x", &["x", "x"], &[]),
            ("cup_y", &[], &["y", "y"]),
            ("cap_y", &["y", "y"], &[]),
            ("f", &["x", "a"], &["x", "b"]),
            ("f2", &["x", "y", "a"], &["x", "y", "b"]),
            ("g", &["c"], &["d"]),
            ("h", &["c"], &["a"]),
            ("k", &["b"], &["d"]),
            ("fs", &["x", "a"], &["y", "b"]),
            ("gs", &["y"], &["x"]),
        ],
    )?;
    let sort = |n: &str| sig.sort(n).expect("declared");
    let (x, y) = (sort("x"), sort("y"));
    let [a, b] = [sort("a"), sort("b")].map(|s| Word::single(&s));
    let op = |n: &str| Term::gen(sig.operation(n).expect("declared"));
    let (f, f2, g, h, k, fs, gs) = (op("f"), op("f2"), op("g"), op("h"), op("k"), op("fs"), op("gs"));
    let id = |s: &Sort| Term::id(Word::single(s));
    let tr = |t: &Term, s: &Sort| trace_via_compact(t, s, &sig);

    let mut instances: Vec<(&'static str, Term, Term)> = Vec::new();
    instances.push(("vanishing-unit", trace_word(&f, &Word::empty(), &sig)?, f.clone()));
    instances.push(("vanishing-tensor", trace_word(&f2, &Word(vec![x.clone(), y.clone()]), &sig)?, tr(&tr(&f2, &x)?, &y)?));
    instances.push(("superposing", Term::par(&tr(&f, &x)?, &g), tr(&Term::par(&f, &g), &x)?));
    instances.push(("yanking", tr(&Term::sym(&x, &x), &x)?, id(&x)));
    let inner = seq_all(
        &Word(vec![x.clone(), sort("c")]),
        &[Term::par(&id(&x), &h), f.clone(), Term::par(&id(&x), &k)],
    )?;
    let outer = seq_all(&Word::single(&sort("c")), &[h.clone(), tr(&f, &x)?, k.clone()])?;
    instances.push(("tightening", tr(&inner, &x)?, outer));
    let left = tr(&Term::seq(&fs, &Term::par(&gs, &id_word(&b)))?, &x)?;
    let right = tr(&Term::seq(&Term::par(&gs, &id_word(&a)), &fs)?, &y)?;
    instances.push(("sliding", left, right));

    let mut tallies: Vec<AxiomTally> = instances
        .iter()
        .map(|(name, _, _)| AxiomTally {
            axiom: name,
            passed: 0,
            total: 0,
        })
        .collect();
    for _ in 0..samples {
        let mut m = model_finrel_product();
        for s in sig.objects() {
            m.bindings_mut().bind_size(s.name(), rng.gen_range(1..=max_size));
        }
        let density = *[0.2, 0.4, 0.6].choose(rng).expect("densities");
        for o in sig.operations() {
            if StructGen::recognize(o).is_none() {
                let (da, db) = (m.carrier(&o.arity), m.carrier(&o.coarity));
                m.bindings_mut().bind_op(&o.name, random_relation(rng, da, db, density));
            }
        }
        for ((_, l, r), tally) in instances.iter().zip(&mut tallies) {
            tally.total += 1;
            if eval(&m, l)? == eval(&m, r)? {
                tally.passed += 1;
            }
        }
    }
    Ok(tallies)
}
