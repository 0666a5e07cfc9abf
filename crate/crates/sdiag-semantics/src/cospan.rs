use std::fmt;

use sdiag_core::unionfind::UnionFind;

use crate::error::{check_dims, SemanticsError};
use crate::function::FinFunction;
use crate::span::list;

/// A cospan `dom → apex ← cod` of finite ordinals, stored up to apex
/// bijection: apex points are numbered in order of first appearance along
/// the left leg then the right leg, with unreached points last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinCospan {
    apex: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl FinCospan {
    pub fn new(left: &FinFunction, right: &FinFunction) -> Result<FinCospan, SemanticsError> {
        check_dims(left.cod(), right.cod())?;
        Ok(FinCospan::canonical(left.cod(), left.images(), right.images()))
    }

    fn canonical(apex: usize, left: &[usize], right: &[usize]) -> FinCospan {
        let mut rename = vec![usize::MAX; apex];
        let mut next = 0;
        let mut relabel = |a: usize| {
            if rename[a] == usize::MAX {
                rename[a] = next;
                next += 1;
            }
            rename[a]
        };
        let left = left.iter().map(|&a| relabel(a)).collect();
        let right = right.iter().map(|&a| relabel(a)).collect();
        FinCospan { apex, left, right }
    }

    pub fn identity(n: usize) -> FinCospan {
        FinCospan::from_function(&FinFunction::identity(n))
    }

    /// The cospan `dom →f cod ←id cod`.
    pub fn from_function(f: &FinFunction) -> FinCospan {
        FinCospan::canonical(f.cod(), f.images(), &(0..f.cod()).collect::<Vec<_>>())
    }

    /// The cospan `cod →id cod ←f dom`.
    pub fn from_cofunction(f: &FinFunction) -> FinCospan {
        FinCospan::canonical(f.cod(), &(0..f.cod()).collect::<Vec<_>>(), f.images())
    }

    pub fn dom(&self) -> usize {
        self.left.len()
    }

    pub fn cod(&self) -> usize {
        self.right.len()
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn left(&self) -> FinFunction {
        FinFunction::new(self.apex, self.left.clone()).expect("leg in range")
    }

    pub fn right(&self) -> FinFunction {
        FinFunction::new(self.apex, self.right.clone()).expect("leg in range")
    }

    /// Apex points hit by neither leg.
    pub fn isolated(&self) -> usize {
        let mut hit = vec![false; self.apex];
        for &a in self.left.iter().chain(&self.right) {
            hit[a] = true;
        }
        hit.iter().filter(|h| !**h).count()
    }

    /// Composition by pushout, computed as a union-find quotient of the two apexes.
    pub fn then(&self, c: &FinCospan) -> Result<FinCospan, SemanticsError> {
        check_dims(self.cod(), c.dom())?;
        let mut uf = UnionFind::new(self.apex + c.apex);
        for (&a, &b) in self.right.iter().zip(&c.left) {
            uf.union(a, self.apex + b);
        }
        let (class, count) = uf.classes();
        let left: Vec<usize> = self.left.iter().map(|&a| class[a]).collect();
        let right: Vec<usize> = c.right.iter().map(|&b| class[self.apex + b]).collect();
        Ok(FinCospan::canonical(count, &left, &right))
    }

    pub fn sum(&self, c: &FinCospan) -> FinCospan {
        let mut left = self.left.clone();
        left.extend(c.left.iter().map(|&a| a + self.apex));
        let mut right = self.right.clone();
        right.extend(c.right.iter().map(|&a| a + self.apex));
        FinCospan::canonical(self.apex + c.apex, &left, &right)
    }
}

impl fmt::Display for FinCospan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cospan {} -> {} <- {} : {} {}",
            self.dom(),
            self.apex,
            self.cod(),
            list(self.left.iter().copied()),
            list(self.right.iter().copied())
        )
    }
}
