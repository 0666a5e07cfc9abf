//! Permutations of wires and their crossings-only terms.

use crate::error::SyntaxError;
use crate::syntax::{id_word, par_all, seq_all, Sort, Term, TermKind, Word};

/// `images[i]` is the right-boundary position receiving left wire `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, SyntaxError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(SyntaxError::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (0..n).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let n = self.size();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + n));
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Permutes a word: the result has `w[i]` at position `images[i]`.
    pub fn apply<T: Clone>(&self, w: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; w.len()];
        for (i, &j) in self.images.iter().enumerate() {
            out[j] = Some(w[i].clone());
        }
        out.into_iter().map(|x| x.expect("bijection")).collect()
    }
}

pub fn perm_to_term(p: &Permutation, sort: &Sort) -> Term {
    perm_word_term(&Word::repeat(sort, p.size()), p)
}

/// Crossings-only term over the mixed-sort word `w` realizing `p`, built
/// from adjacent transpositions.
pub fn perm_word_term(w: &Word, p: &Permutation) -> Term {
    assert_eq!(w.len(), p.size(), "permutation size must match the word");
    let mut wires: Vec<usize> = (0..w.len()).collect();
    let mut layers = Vec::new();
    loop {
        let mut swapped = false;
        for j in 0..wires.len().saturating_sub(1) {
            if p.images[wires[j]] > p.images[wires[j + 1]] {
                let sorts: Vec<Sort> = wires.iter().map(|&i| w[i].clone()).collect();
                layers.push(adjacent_transposition(&sorts, j));
                wires.swap(j, j + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    seq_all(w, &layers).expect("transposition layers compose")
}

fn adjacent_transposition(sorts: &[Sort], j: usize) -> Term {
    let mut parts = Vec::new();
    if j > 0 {
        parts.push(id_word(&Word(sorts[..j].to_vec())));
    }
    parts.push(Term::sym(&sorts[j], &sorts[j + 1]));
    if j + 2 < sorts.len() {
        parts.push(id_word(&Word(sorts[j + 2..].to_vec())));
    }
    par_all(&parts)
}

pub fn term_to_perm(t: &Term) -> Result<Permutation, SyntaxError> {
    match t.kind() {
        TermKind::Gen(_) => Err(SyntaxError::NotPermutationTerm),
        TermKind::Id(w) => Ok(Permutation::identity(w.len())),
        TermKind::Sym(_, _) => Ok(Permutation { images: vec![1, 0] }),
        TermKind::Empty => Ok(Permutation::identity(0)),
        TermKind::Seq(l, r) => Ok(term_to_perm(l)?.then(&term_to_perm(r)?)),
        TermKind::Par(a, b) => Ok(term_to_perm(a)?.tensor(&term_to_perm(b)?)),
    }
}
