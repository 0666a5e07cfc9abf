use std::fmt;

use crate::error::{check_dims, SemanticsError};
use crate::function::FinFunction;
use crate::matrix::Matrix;

/// A span `dom ← apex → cod` of finite ordinals, stored up to apex bijection:
/// apex elements are sorted by their pair of leg images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSpan {
    dom: usize,
    cod: usize,
    legs: Vec<(usize, usize)>,
}

impl FinSpan {
    pub fn new(left: &FinFunction, right: &FinFunction) -> Result<FinSpan, SemanticsError> {
        check_dims(left.dom(), right.dom())?;
        Ok(FinSpan::from_legs(
            left.cod(),
            right.cod(),
            left.images().iter().copied().zip(right.images().iter().copied()).collect(),
        ))
    }

    fn from_legs(dom: usize, cod: usize, mut legs: Vec<(usize, usize)>) -> FinSpan {
        legs.sort_unstable();
        FinSpan { dom, cod, legs }
    }

    pub fn identity(n: usize) -> FinSpan {
        FinSpan::from_function(&FinFunction::identity(n))
    }

    /// The span `dom ←id dom →f cod`.
    pub fn from_function(f: &FinFunction) -> FinSpan {
        FinSpan::from_legs(f.dom(), f.cod(), f.images().iter().copied().enumerate().collect())
    }

    /// The span `cod ←f dom →id dom`.
    pub fn from_cofunction(f: &FinFunction) -> FinSpan {
        FinSpan::from_legs(f.cod(), f.dom(), f.images().iter().copied().enumerate().map(|(a, b)| (b, a)).collect())
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apex(&self) -> usize {
        self.legs.len()
    }

    pub fn left(&self) -> FinFunction {
        FinFunction::new(self.dom, self.legs.iter().map(|l| l.0).collect()).expect("leg in range")
    }

    pub fn right(&self) -> FinFunction {
        FinFunction::new(self.cod, self.legs.iter().map(|l| l.1).collect()).expect("leg in range")
    }

    /// Composition by pullback over the shared boundary.
    pub fn then(&self, s: &FinSpan) -> Result<FinSpan, SemanticsError> {
        check_dims(self.cod, s.dom)?;
        let mut over = vec![Vec::new(); s.dom];
        for &(y, z) in &s.legs {
            over[y].push(z);
        }
        let legs = self
            .legs
            .iter()
            .flat_map(|&(x, y)| over[y].iter().map(move |&z| (x, z)))
            .collect();
        Ok(FinSpan::from_legs(self.dom, s.cod, legs))
    }

    pub fn sum(&self, s: &FinSpan) -> FinSpan {
        let mut legs = self.legs.clone();
        legs.extend(s.legs.iter().map(|&(x, y)| (x + self.dom, y + self.cod)));
        FinSpan::from_legs(self.dom + s.dom, self.cod + s.cod, legs)
    }

    pub fn product(&self, s: &FinSpan) -> FinSpan {
        let mut legs = Vec::with_capacity(self.apex() * s.apex());
        for &(a, b) in &self.legs {
            for &(c, d) in &s.legs {
                legs.push((a * s.dom + c, b * s.cod + d));
            }
        }
        FinSpan::from_legs(self.dom * s.dom, self.cod * s.cod, legs)
    }

    /// Entry (i, j) counts the witnesses relating left j to right i.
    pub fn count_matrix(&self) -> Matrix<u64> {
        let mut m = Matrix::zeros(self.cod, self.dom);
        for &(x, y) in &self.legs {
            let v = m.get(y, x) + 1;
            m.set(y, x, v);
        }
        m
    }
}

impl fmt::Display for FinSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span {} <- {} -> {} : {} {}", self.dom, self.apex(), self.cod, list(self.legs.iter().map(|l| l.0)), list(self.legs.iter().map(|l| l.1)))
    }
}

pub(crate) fn list(it: impl Iterator<Item = usize>) -> String {
    let items: Vec<String> = it.map(|i| i.to_string()).collect();
    format!("[{}]", items.join(","))
}
