use std::collections::BTreeSet;
use std::fmt;

use crate::error::{check_dims, SemanticsError};
use crate::function::FinFunction;
use crate::matrix::Matrix;

/// A binary relation between finite ordinals, as a set of (left, right) pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinRelation {
    dom: usize,
    cod: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl FinRelation {
    pub fn new(dom: usize, cod: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<FinRelation, SemanticsError> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= dom || b >= cod) {
            return Err(SemanticsError::InvalidMorphism(format!("pair ({a},{b}) outside {dom} x {cod}")));
        }
        Ok(FinRelation { dom, cod, pairs })
    }

    pub fn empty(dom: usize, cod: usize) -> FinRelation {
        FinRelation {
            dom,
            cod,
            pairs: BTreeSet::new(),
        }
    }

    pub fn identity(n: usize) -> FinRelation {
        FinRelation::graph(&FinFunction::identity(n))
    }

    pub fn graph(f: &FinFunction) -> FinRelation {
        FinRelation {
            dom: f.dom(),
            cod: f.cod(),
            pairs: f.images().iter().copied().enumerate().collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn converse(&self) -> FinRelation {
        FinRelation {
            dom: self.cod,
            cod: self.dom,
            pairs: self.pairs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    pub fn then(&self, s: &FinRelation) -> Result<FinRelation, SemanticsError> {
        check_dims(self.cod, s.dom)?;
        let mut succ = vec![Vec::new(); s.dom];
        for &(b, c) in &s.pairs {
            succ[b].push(c);
        }
        let pairs = self
            .pairs
            .iter()
            .flat_map(|&(a, b)| succ[b].iter().map(move |&c| (a, c)))
            .collect();
        Ok(FinRelation {
            dom: self.dom,
            cod: s.cod,
            pairs,
        })
    }

    pub fn sum(&self, s: &FinRelation) -> FinRelation {
        let mut pairs = self.pairs.clone();
        pairs.extend(s.pairs.iter().map(|&(a, b)| (a + self.dom, b + self.cod)));
        FinRelation {
            dom: self.dom + s.dom,
            cod: self.cod + s.cod,
            pairs,
        }
    }

    pub fn product(&self, s: &FinRelation) -> FinRelation {
        let mut pairs = BTreeSet::new();
        for &(a, b) in &self.pairs {
            for &(c, d) in &s.pairs {
                pairs.insert((a * s.dom + c, b * s.cod + d));
            }
        }
        FinRelation {
            dom: self.dom * s.dom,
            cod: self.cod * s.cod,
            pairs,
        }
    }

    pub fn is_total(&self) -> bool {
        let mut hit = vec![false; self.dom];
        for &(a, _) in &self.pairs {
            hit[a] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_functional(&self) -> bool {
        let mut seen = vec![false; self.dom];
        self.is_total() && self.pairs.iter().all(|&(a, _)| !std::mem::replace(&mut seen[a], true))
    }

    /// Entry (b, a) is set when a is related to b.
    pub fn to_matrix(&self) -> Matrix<bool> {
        let mut m = Matrix::zeros(self.cod, self.dom);
        for &(a, b) in &self.pairs {
            m.set(b, a, true);
        }
        m
    }
}

impl fmt::Display for FinRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}}")
    }
}
