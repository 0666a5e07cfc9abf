//! Per-sort structural generators: the Frobenius quadruple and self-dual cups and caps.

use crate::syntax::{op, Op, Sort, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructGen {
    Comult,
    Counit,
    Mult,
    Unit,
    Cup,
    Cap,
}

impl StructGen {
    pub const ALL: [StructGen; 6] = [
        StructGen::Comult,
        StructGen::Counit,
        StructGen::Mult,
        StructGen::Unit,
        StructGen::Cup,
        StructGen::Cap,
    ];

    pub const FROBENIUS: [StructGen; 4] = [StructGen::Comult, StructGen::Counit, StructGen::Mult, StructGen::Unit];

    pub fn prefix(self) -> &'static str {
        match self {
            StructGen::Comult => "comult",
            StructGen::Counit => "counit",
            StructGen::Mult => "mult",
            StructGen::Unit => "unit",
            StructGen::Cup => "cup",
            StructGen::Cap => "cap",
        }
    }

    /// Number of (left, right) wires.
    pub fn shape(self) -> (usize, usize) {
        match self {
            StructGen::Comult => (1, 2),
            StructGen::Counit => (1, 0),
            StructGen::Mult => (2, 1),
            StructGen::Unit => (0, 1),
            StructGen::Cup => (0, 2),
            StructGen::Cap => (2, 0),
        }
    }

    pub fn name_for(self, sort: &Sort) -> String {
        format!("{}_{}", self.prefix(), sort.name())
    }

    pub fn op(self, sort: &Sort) -> Op {
        let (a, c) = self.shape();
        op(&self.name_for(sort), Word::repeat(sort, a), Word::repeat(sort, c))
    }

    pub fn is_frobenius(self) -> bool {
        !matches!(self, StructGen::Cup | StructGen::Cap)
    }

    /// Recognizes `o` by name and type shape.
    pub fn recognize(o: &Op) -> Option<(StructGen, Sort)> {
        let name: &str = &o.name;
        for g in StructGen::ALL {
            let Some(rest) = name.strip_prefix(g.prefix()).and_then(|r| r.strip_prefix('_')) else {
                continue;
            };
            let (a, c) = g.shape();
            let all = o.arity.iter().chain(o.coarity.iter());
            let sort = o.arity.first().or(o.coarity.first())?;
            if o.arity.len() == a && o.coarity.len() == c && sort.name() == rest && all.clone().all(|s| s == sort) {
                return Some((g, sort.clone()));
            }
        }
        None
    }
}

/// Cups and caps between a sort `x` and its formal dual `x_op`, for
/// compact closed structure that is not self-dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualGen {
    /// `ccup_x : ε → x·x_op`
    Cup,
    /// `ccap_x : x_op·x → ε`
    Cap,
}

pub fn dual_sort(s: &Sort) -> Sort {
    Sort::unchecked(&format!("{}_op", s.name()))
}

impl DualGen {
    pub fn prefix(self) -> &'static str {
        match self {
            DualGen::Cup => "ccup",
            DualGen::Cap => "ccap",
        }
    }

    pub fn name_for(self, sort: &Sort) -> String {
        format!("{}_{}", self.prefix(), sort.name())
    }

    pub fn op(self, sort: &Sort) -> Op {
        let d = dual_sort(sort);
        match self {
            DualGen::Cup => op(&self.name_for(sort), Word::empty(), Word(vec![sort.clone(), d])),
            DualGen::Cap => op(&self.name_for(sort), Word(vec![d, sort.clone()]), Word::empty()),
        }
    }

    pub fn recognize(o: &Op) -> Option<(DualGen, Sort)> {
        for g in [DualGen::Cup, DualGen::Cap] {
            let Some(rest) = o.name.strip_prefix(g.prefix()).and_then(|r| r.strip_prefix('_')) else {
                continue;
            };
            let s = Sort::unchecked(rest);
            if **o == *g.op(&s) {
                return Some((g, s));
            }
        }
        None
    }
}
