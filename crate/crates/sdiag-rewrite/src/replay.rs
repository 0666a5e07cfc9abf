//! Scripted derivations: sequences of (rule, match index) steps.

use sdiag_core::OpenHypergraph;

use crate::error::RewriteError;
use crate::matching::{apply_rewrite, find_matches};
use crate::theory::Theory;

/// Applies each step in turn. A rule name may be prefixed with `~` to use
/// the rule right to left; the index refers to [`find_matches`] order.
pub fn replay_derivation(t: &Theory, start: &OpenHypergraph, script: &[(String, usize)]) -> Result<OpenHypergraph, RewriteError> {
    replay_trace(t, start, script).map(|mut gs| gs.pop().expect("trace includes the start"))
}

/// Like [`replay_derivation`], returning every intermediate graph.
pub fn replay_trace(t: &Theory, start: &OpenHypergraph, script: &[(String, usize)]) -> Result<Vec<OpenHypergraph>, RewriteError> {
    let mut out = vec![start.clone()];
    for (name, index) in script {
        let rule = t.rule(name)?;
        let g = out.last().expect("nonempty");
        let sites = find_matches(t, &rule, g);
        let site = sites.get(*index).ok_or_else(|| RewriteError::NoSuchMatch {
            rule: name.clone(),
            index: *index,
            available: sites.len(),
        })?;
        let next = apply_rewrite(t, site, &rule, g)?;
        out.push(next);
    }
    Ok(out)
}
