//! Monomial equivariant modules on `Spec C[x,y]/I` and their submodule lattices.

mod closure;
mod lattice;
mod model;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use closure::{graded_closure_dims, random_combination_check, ClosureReport, Combination};
pub use lattice::{
    enumerate_lattice, quotient_hf, submodule_from_generators, Submodule, SubmoduleLattice,
};
pub use model::ConstellationModel;

/// `x^a y^b`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        Monomial { a, b }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.a + other.a, self.b + other.b)
    }
}

impl From<(u32, u32)> for Monomial {
    fn from((a, b): (u32, u32)) -> Self {
        Monomial { a, b }
    }
}

impl From<Monomial> for (u32, u32) {
    fn from(m: Monomial) -> Self {
        (m.a, m.b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, v: &str, e: u32| match e {
            0 => Ok(()),
            1 => write!(f, "{v}"),
            _ => write!(f, "{v}^{e}"),
        };
        if self.a == 0 && self.b == 0 {
            return write!(f, "1");
        }
        part(f, "x", self.a)?;
        part(f, "y", self.b)
    }
}

/// Monomial ideal of `C[x,y]`, stored by its unique minimal generating set.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Monomial>", into = "Vec<Monomial>")]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Prunes every generator divisible by another one.
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let minimal = all
            .iter()
            .filter(|m| !all.iter().any(|g| g != *m && g.divides(m)))
            .copied()
            .collect();
        MonomialIdeal { gens: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal generated by both generator sets.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().chain(&other.gens).copied())
    }

    pub fn with(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().copied().chain([m]))
    }

    pub fn max_a(&self) -> u32 {
        self.gens.iter().map(|g| g.a).max().unwrap_or(0)
    }

    pub fn max_b(&self) -> u32 {
        self.gens.iter().map(|g| g.b).max().unwrap_or(0)
    }
}

impl From<Vec<Monomial>> for MonomialIdeal {
    fn from(v: Vec<Monomial>) -> Self {
        MonomialIdeal::new(v)
    }
}

impl From<MonomialIdeal> for Vec<Monomial> {
    fn from(i: MonomialIdeal) -> Self {
        i.gens
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_generators_are_pruned() {
        let i = MonomialIdeal::new([Monomial::new(1, 0), Monomial::new(1, 1), Monomial::new(3, 0)]);
        assert_eq!(i.generators(), &[Monomial::new(1, 0)]);
        let i = MonomialIdeal::new([Monomial::new(2, 0), Monomial::new(1, 1), Monomial::new(2, 1)]);
        assert_eq!(i.generators(), &[Monomial::new(1, 1), Monomial::new(2, 0)]);
    }

    #[test]
    fn membership_is_divisibility() {
        let i = MonomialIdeal::new([Monomial::new(1, 2), Monomial::new(3, 1)]);
        assert!(i.contains(&Monomial::new(1, 2)));
        assert!(i.contains(&Monomial::new(4, 1)));
        assert!(!i.contains(&Monomial::new(2, 1)));
        assert!(!i.contains(&Monomial::ONE));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(2, 1).to_string(), "x^2y");
        assert_eq!(MonomialIdeal::new([Monomial::new(2, 0), Monomial::new(1, 1)]).to_string(), "(xy, x^2)");
    }
}
