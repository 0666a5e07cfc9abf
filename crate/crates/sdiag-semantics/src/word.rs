use std::fmt;

use crate::error::{check_dims, SemanticsError};

/// Morphisms of the free (co)monoid model. In the forward reading each
/// output wire carries the ordered list of input wires concatenated into it;
/// the mirrored reading lists, for each input, the outputs it is copied to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordMor {
    dom: usize,
    cod: usize,
    lists: Vec<Vec<usize>>,
}

impl WordMor {
    pub fn new(dom: usize, cod: usize, lists: Vec<Vec<usize>>) -> WordMor {
        WordMor { dom, cod, lists }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub(crate) fn sorted(mut self) -> WordMor {
        for l in &mut self.lists {
            l.sort_unstable();
        }
        self
    }

    /// Substitutes the lists of `inner` into those of `outer`.
    pub(crate) fn substitute(outer: &WordMor, inner: &WordMor, dom: usize, cod: usize) -> WordMor {
        let lists = outer
            .lists
            .iter()
            .map(|l| l.iter().flat_map(|&k| inner.lists[k].iter().copied()).collect())
            .collect();
        WordMor { dom, cod, lists }
    }

    pub fn then(&self, g: &WordMor, mirrored: bool) -> Result<WordMor, SemanticsError> {
        check_dims(self.cod, g.dom)?;
        Ok(if mirrored {
            WordMor::substitute(self, g, self.dom, g.cod)
        } else {
            WordMor::substitute(g, self, self.dom, g.cod)
        })
    }

    pub fn sum(&self, g: &WordMor, mirrored: bool) -> WordMor {
        let shift = if mirrored { self.cod } else { self.dom };
        let mut lists = self.lists.clone();
        lists.extend(g.lists.iter().map(|l| l.iter().map(|&k| k + shift).collect()));
        WordMor {
            dom: self.dom + g.dom,
            cod: self.cod + g.cod,
            lists,
        }
    }

    pub fn permutation(images: &[usize], mirrored: bool) -> WordMor {
        let n = images.len();
        let mut lists = vec![Vec::new(); n];
        for (i, &j) in images.iter().enumerate() {
            if mirrored {
                lists[i].push(j);
            } else {
                lists[j].push(i);
            }
        }
        WordMor { dom: n, cod: n, lists }
    }
}

impl fmt::Display for WordMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lists
            .iter()
            .map(|l| format!("({})", l.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        write!(f, "words {} -> {} : [{}]", self.dom, self.cod, parts.join(","))
    }
}
