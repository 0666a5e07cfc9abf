use std::fmt;

use crate::error::{check_dims, SemanticsError};

/// A total function between finite ordinals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFunction {
    cod: usize,
    images: Vec<usize>,
}

impl FinFunction {
    pub fn new(cod: usize, images: Vec<usize>) -> Result<FinFunction, SemanticsError> {
        if let Some(&bad) = images.iter().find(|&&i| i >= cod) {
            return Err(SemanticsError::InvalidMorphism(format!("image {bad} outside codomain {cod}")));
        }
        Ok(FinFunction { cod, images })
    }

    pub fn identity(n: usize) -> FinFunction {
        FinFunction {
            cod: n,
            images: (0..n).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.images.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// First `self`, then `g`.
    pub fn then(&self, g: &FinFunction) -> Result<FinFunction, SemanticsError> {
        check_dims(self.cod, g.dom())?;
        Ok(FinFunction {
            cod: g.cod,
            images: self.images.iter().map(|&i| g.images[i]).collect(),
        })
    }

    /// Disjoint sum: the second block is shifted past the first.
    pub fn sum(&self, g: &FinFunction) -> FinFunction {
        let mut images = self.images.clone();
        images.extend(g.images.iter().map(|&i| i + self.cod));
        FinFunction {
            cod: self.cod + g.cod,
            images,
        }
    }

    /// Cartesian product on row-major tuple encodings.
    pub fn product(&self, g: &FinFunction) -> FinFunction {
        let mut images = Vec::with_capacity(self.dom() * g.dom());
        for &a in &self.images {
            for &b in &g.images {
                images.push(a * g.cod + b);
            }
        }
        FinFunction {
            cod: self.cod * g.cod,
            images,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.images.iter().all(|&i| !std::mem::replace(&mut seen[i], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.cod == self.dom() && self.is_injective()
    }
}

impl fmt::Display for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "] : {} -> {}", self.dom(), self.cod)
    }
}

/// Images of the block transposition `a + b → b + a`.
pub fn sum_swap(a: usize, b: usize) -> Vec<usize> {
    (0..a).map(|i| i + b).chain(0..b).collect()
}

/// Images of the tuple swap `a × b → b × a` on row-major encodings.
pub fn product_swap(a: usize, b: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            out.push(v * a + u);
        }
    }
    out
}
