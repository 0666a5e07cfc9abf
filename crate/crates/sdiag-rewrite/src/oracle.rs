//! Semantic countermodels: finite models that satisfy every rule of a
//! theory for all interpretations of the signature, so that differing
//! evaluations prove two diagrams unequal.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdiag_core::{to_term, to_term_frob, Op, OpenHypergraph, Sort, Term};
use sdiag_semantics::{
    eval, model_corelation, model_cospan, model_finrel_product, model_finrel_sum, model_finset_product,
    model_finset_sum, model_matrix, model_span_sum, model_words, random_relation, Corelation, FinCospan, FinFunction,
    FinSpan, Matrix, Model, TensorMode, WordMor, Q,
};

use crate::normal::sigma_ops;
use crate::theory::Theory;

/// Models in which a built-in theory holds under any binding of the
/// signature. `kron1` and `kron2` are Kronecker matrices over ℚ with the
/// Frobenius structure scaled by 1 and 2; `cword`/`ccoword` are the
/// commutative free (co)monoid models.
pub fn valid_models(part: &str) -> &'static [&'static str] {
    const FROB: &[&str] = &["cospan", "corelation", "finrel-product", "kron1"];
    match part {
        "monoid" => &[
            "word", "cword", "finset-sum", "finrel-sum", "span-sum", "matrix-nat", "cospan", "corelation",
            "finrel-product", "kron1", "kron2",
        ],
        "comm_monoid" => &[
            "cword", "finset-sum", "finrel-sum", "span-sum", "matrix-nat", "cospan", "corelation", "finrel-product",
            "kron1", "kron2",
        ],
        "comonoid" => &[
            "coword", "ccoword", "finset-product", "finrel-sum", "span-sum", "matrix-nat", "cospan", "corelation",
            "finrel-product", "kron1", "kron2",
        ],
        "cocomm_comonoid" => &[
            "ccoword", "finset-product", "finrel-sum", "span-sum", "matrix-nat", "cospan", "corelation",
            "finrel-product", "kron1", "kron2",
        ],
        "bimonoid" | "biproduct" => &["finrel-sum", "span-sum", "matrix-nat"],
        "frobenius" => &["cospan", "corelation", "finrel-product", "kron1", "kron2"],
        "special_frobenius" | "scFrob" | "hypergraph_cat" => FROB,
        "extra_special_frobenius" => &["corelation", "finrel-product"],
        "compact_closed" | "self_dual_compact" => &["finrel-product", "cospan", "corelation", "kron1", "kron2"],
        "cd" => &[
            "finset-product", "finrel-product", "span-sum", "cospan", "corelation", "kron1", "kron2", "matrix-nat",
        ],
        "cartesian" => &["finset-product", "finrel-sum", "span-sum", "matrix-nat"],
        "cocartesian" => &["finset-sum", "finrel-sum", "span-sum", "matrix-nat"],
        _ => &[],
    }
}

/// Models valid for every part of the theory, in the order of the first
/// part's list.
pub fn theory_models(t: &Theory) -> Vec<&'static str> {
    let mut parts = t.parts.iter();
    let Some(first) = parts.next() else {
        return Vec::new();
    };
    let mut out: Vec<&'static str> = valid_models(first).to_vec();
    for p in parts {
        let ok = valid_models(p);
        out.retain(|m| ok.contains(m));
    }
    out
}

/// A model, sort sizes and Σ bindings under which two diagrams differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Countermodel {
    pub model: String,
    pub seed: u64,
    pub sizes: Vec<(String, usize)>,
    pub left: String,
    pub right: String,
}

/// The diagram read back as a term that any model of its theory
/// evaluates to the same morphism as the graph's class.
pub fn graph_term(g: &OpenHypergraph) -> Term {
    if g.is_monogamous() && !g.is_cyclic() {
        if let Ok(t) = to_term(g) {
            return t;
        }
    }
    to_term_frob(g)
}

fn random_function<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Option<FinFunction> {
    if dom > 0 && cod == 0 {
        return None;
    }
    FinFunction::new(cod, (0..dom).map(|_| rng.gen_range(0..cod)).collect()).ok()
}

fn random_span<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Option<FinSpan> {
    let apex = if dom == 0 || cod == 0 { 0 } else { rng.gen_range(0..=3) };
    let l = random_function(rng, apex, dom)?;
    let r = random_function(rng, apex, cod)?;
    FinSpan::new(&l, &r).ok()
}

fn random_cospan<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Option<FinCospan> {
    let lo = usize::from(dom + cod > 0);
    let apex = rng.gen_range(lo..=3);
    let l = random_function(rng, dom, apex)?;
    let r = random_function(rng, cod, apex)?;
    FinCospan::new(&l, &r).ok()
}

fn random_words<R: Rng>(rng: &mut R, dom: usize, cod: usize, mirrored: bool, comm: bool) -> WordMor {
    let (count, range) = if mirrored { (dom, cod) } else { (cod, dom) };
    let lists = (0..count)
        .map(|_| {
            let len = if range == 0 { 0 } else { rng.gen_range(0..=2) };
            let mut l: Vec<usize> = (0..len).map(|_| rng.gen_range(0..range)).collect();
            if comm {
                l.sort_unstable();
            }
            l
        })
        .collect();
    WordMor::new(dom, cod, lists)
}

struct Trial<'a> {
    ops: &'a [Op],
    sorts: &'a [Sort],
    a: &'a Term,
    b: &'a Term,
    max_size: usize,
}

impl Trial<'_> {
    /// Binds sizes and Σ, then compares. `None` when no binding exists or
    /// the model cannot evaluate the terms.
    fn run<M: Model, R: Rng>(
        &self,
        mut m: M,
        rng: &mut R,
        draw: &dyn Fn(&mut R, usize, usize) -> Option<M::Mor>,
    ) -> Option<(Vec<(String, usize)>, String, String)> {
        let mut sizes = Vec::new();
        for s in self.sorts {
            let n = rng.gen_range(1..=self.max_size);
            m.bindings_mut().bind_size(s.name(), n);
            sizes.push((s.name().to_string(), n));
        }
        for o in self.ops {
            let f = draw(rng, m.carrier(&o.arity), m.carrier(&o.coarity))?;
            m.bindings_mut().bind_op(&o.name, f);
        }
        let x = eval(&m, self.a).ok()?;
        let y = eval(&m, self.b).ok()?;
        (x != y).then(|| (sizes, x.to_string(), y.to_string()))
    }
}

fn try_model(name: &str, seed: u64, trial: &Trial<'_>) -> Option<(Vec<(String, usize)>, String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = &mut rng;
    let small = Trial { max_size: 2, ..*trial };
    match name {
        "word" | "cword" | "coword" | "ccoword" => {
            let mirrored = name.ends_with("coword");
            let comm = name.starts_with('c') && name != "coword";
            trial.run(model_words(comm, mirrored), r, &|r, d, c| Some(random_words(r, d, c, mirrored, comm)))
        }
        "finset-sum" => trial.run(model_finset_sum(), r, &|r, d, c| random_function(r, d, c)),
        "finset-product" => small.run(model_finset_product(), r, &|r, d, c| random_function(r, d, c)),
        "finrel-sum" => trial.run(model_finrel_sum(), r, &|r, d, c| Some(random_relation(r, d, c, 0.5))),
        "finrel-product" => small.run(model_finrel_product(), r, &|r, d, c| Some(random_relation(r, d, c, 0.5))),
        "span-sum" => trial.run(model_span_sum(), r, &|r, d, c| random_span(r, d, c)),
        "cospan" => trial.run(model_cospan(), r, &|r, d, c| random_cospan(r, d, c)),
        "corelation" => {
            trial.run(model_corelation(), r, &|r, d, c| random_cospan(r, d, c).map(|x| Corelation::from_cospan(&x)))
        }
        "matrix-nat" => trial.run(model_matrix::<u64>(TensorMode::DirectSum), r, &|r, d, c| {
            let entries: Vec<u64> = (0..c * d).map(|_| r.gen_range(0..=2)).collect();
            Some(Matrix::from_fn(c, d, |i, j| entries[i * d + j]))
        }),
        "kron1" | "kron2" => {
            let scale = if name == "kron2" { 2 } else { 1 };
            let m = model_matrix::<Q>(TensorMode::Kronecker).with_frobenius_scale(Q::from_integer(scale)).ok()?;
            small.run(m, r, &|r, d, c| {
                let entries: Vec<i64> = (0..c * d).map(|_| *[0, 1, 1, 2].choose(r).expect("choices")).collect();
                Some(Matrix::from_fn(c, d, |i, j| Q::from_integer(entries[i * d + j])))
            })
        }
        _ => None,
    }
}

/// Searches the theory's valid models with one random binding per seed.
/// Stops at the first model that separates the two diagrams.
pub fn find_countermodel(
    t: &Theory,
    a: &OpenHypergraph,
    b: &OpenHypergraph,
    seeds: std::ops::Range<u64>,
) -> Option<Countermodel> {
    let ta = graph_term(a);
    let tb = graph_term(b);
    let ops: Vec<Op> = sigma_ops(a).union(&sigma_ops(b)).cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let mut sorts = t.sorts();
    for s in a.nodes().iter().chain(b.nodes()) {
        if !sorts.contains(s) && !s.name().ends_with("_op") {
            sorts.push(s.clone());
        }
    }
    let trial = Trial {
        ops: &ops,
        sorts: &sorts,
        a: &ta,
        b: &tb,
        max_size: 3,
    };
    for name in theory_models(t) {
        for seed in seeds.clone() {
            if let Some((sizes, left, right)) = try_model(name, seed, &trial) {
                return Some(Countermodel {
                    model: name.to_string(),
                    seed,
                    sizes,
                    left,
                    right,
                });
            }
        }
    }
    None
}
