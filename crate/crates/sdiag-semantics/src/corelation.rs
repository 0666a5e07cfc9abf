use std::fmt;

use sdiag_core::unionfind::UnionFind;

use crate::cospan::FinCospan;
use crate::error::{check_dims, SemanticsError};

/// A partition of `dom + cod`; left elements are `0..dom`, right elements
/// follow. Blocks are sorted internally and ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corelation {
    dom: usize,
    cod: usize,
    blocks: Vec<Vec<usize>>,
}

impl Corelation {
    pub fn new(dom: usize, cod: usize, blocks: Vec<Vec<usize>>) -> Result<Corelation, SemanticsError> {
        let mut seen = vec![false; dom + cod];
        for b in &blocks {
            if b.is_empty() {
                return Err(SemanticsError::InvalidMorphism("empty block".into()));
            }
            for &e in b {
                if e >= dom + cod || std::mem::replace(&mut seen[e], true) {
                    return Err(SemanticsError::InvalidMorphism(format!("element {e} repeated or out of range")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(SemanticsError::InvalidMorphism("blocks do not cover the boundary".into()));
        }
        Ok(Corelation::canonical(dom, cod, blocks))
    }

    fn canonical(dom: usize, cod: usize, mut blocks: Vec<Vec<usize>>) -> Corelation {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        Corelation { dom, cod, blocks }
    }

    fn from_classes(dom: usize, cod: usize, class: impl Iterator<Item = usize>) -> Corelation {
        let mut by_class: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (e, c) in class.enumerate() {
            by_class.entry(c).or_default().push(e);
        }
        Corelation::canonical(dom, cod, by_class.into_values().collect())
    }

    pub fn identity(n: usize) -> Corelation {
        Corelation::canonical(n, n, (0..n).map(|i| vec![i, n + i]).collect())
    }

    /// The jointly surjective part of a cospan: apex points reached by no
    /// boundary element disappear.
    pub fn from_cospan(c: &FinCospan) -> Corelation {
        let (left, right) = (c.left(), c.right());
        let classes = left.images().iter().chain(right.images()).copied();
        Corelation::from_classes(c.dom(), c.cod(), classes)
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The block structure as a cospan whose apex is the set of blocks.
    pub fn to_cospan(&self) -> FinCospan {
        let mut class = vec![0; self.dom + self.cod];
        for (k, b) in self.blocks.iter().enumerate() {
            for &e in b {
                class[e] = k;
            }
        }
        let n = self.blocks.len();
        let left = crate::function::FinFunction::new(n, class[..self.dom].to_vec()).expect("block ids");
        let right = crate::function::FinFunction::new(n, class[self.dom..].to_vec()).expect("block ids");
        FinCospan::new(&left, &right).expect("same apex")
    }

    /// Glue along the shared middle, close transitively, restrict to the outer boundary.
    pub fn then(&self, d: &Corelation) -> Result<Corelation, SemanticsError> {
        check_dims(self.cod, d.dom)?;
        let (n, m, k) = (self.dom, self.cod, d.cod);
        let mut uf = UnionFind::new(n + m + k);
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for b in &d.blocks {
            for w in b.windows(2) {
                uf.union(n + w[0], n + w[1]);
            }
        }
        let classes: Vec<usize> = (0..n).chain(n + m..n + m + k).map(|e| uf.find(e)).collect();
        Ok(Corelation::from_classes(n, k, classes.into_iter()))
    }

    pub fn sum(&self, d: &Corelation) -> Corelation {
        let (n1, m1, n2) = (self.dom, self.cod, d.dom);
        let shift1 = |e: usize| if e < n1 { e } else { e + n2 };
        let shift2 = |e: usize| if e < n2 { e + n1 } else { e + n1 + m1 };
        let mut blocks: Vec<Vec<usize>> = self.blocks.iter().map(|b| b.iter().map(|&e| shift1(e)).collect()).collect();
        blocks.extend(d.blocks.iter().map(|b| b.iter().map(|&e| shift2(e)).collect()));
        Corelation::canonical(n1 + n2, m1 + d.cod, blocks)
    }
}

impl fmt::Display for Corelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, &e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                if e < self.dom {
                    write!(f, "l{e}")?;
                } else {
                    write!(f, "r{}", e - self.dom)?;
                }
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}
