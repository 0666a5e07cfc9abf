//! Feedback loops built from self-dual cups and caps.

use sdiag_core::{id_word, par, par_all, perm_word_term, seq_all, Permutation, Signature, Sort, StructGen, Term, Word};

use crate::error::SemanticsError;

fn compact_op(sig: &Signature, g: StructGen, x: &Sort) -> Result<Term, SemanticsError> {
    let want = g.op(x);
    match sig.operation(&want.name) {
        Some(o) if **o == *want => Ok(Term::gen(o)),
        _ => Err(SemanticsError::MissingCompactStructure(x.name().to_string())),
    }
}

/// Pairs wire `i` with wire `|w| + i`.
pub fn cup_word(w: &Word, sig: &Signature) -> Result<Term, SemanticsError> {
    let cups = w.iter().map(|x| compact_op(sig, StructGen::Cup, x)).collect::<Result<Vec<_>, _>>()?;
    let n = w.len();
    let doubled: Word = w.iter().flat_map(|x| [x.clone(), x.clone()]).collect();
    let images = (0..2 * n).map(|k| (k % 2) * n + k / 2).collect();
    let regroup = perm_word_term(&doubled, &Permutation::new(images).expect("interleaving"));
    Ok(seq_all(&Word::empty(), &[par_all(&cups), regroup])?)
}

pub fn cap_word(w: &Word, sig: &Signature) -> Result<Term, SemanticsError> {
    let caps = w.iter().map(|x| compact_op(sig, StructGen::Cap, x)).collect::<Result<Vec<_>, _>>()?;
    let n = w.len();
    let images = (0..2 * n).map(|k| 2 * (k % n) + k / n).collect();
    let regroup = perm_word_term(&w.concat(w), &Permutation::new(images).expect("interleaving"));
    Ok(seq_all(&w.concat(w), &[regroup, par_all(&caps)])?)
}

/// Traces out the leading `w` wires of `t : w·A → w·B`.
pub fn trace_word(t: &Term, w: &Word, sig: &Signature) -> Result<Term, SemanticsError> {
    let n = w.len();
    if t.dom().len() < n || t.cod().len() < n || t.dom().slice(0, n) != *w || t.cod().slice(0, n) != *w {
        return Err(SemanticsError::TraceBoundary { traced: w.to_string() });
    }
    let a = t.dom().slice(n, t.dom().len());
    let b = t.cod().slice(n, t.cod().len());
    let open = par(&cup_word(w, sig)?, &id_word(&a));
    let body = par(&id_word(w), t);
    let close = par(&cap_word(w, sig)?, &id_word(&b));
    Ok(seq_all(&a, &[open, body, close])?)
}

/// `(cup ⊗ id) ; (id ⊗ t) ; (cap ⊗ id)` for `t : x·A → x·B`.
pub fn trace_via_compact(t: &Term, x: &Sort, sig: &Signature) -> Result<Term, SemanticsError> {
    trace_word(t, &Word::single(x), sig)
}
