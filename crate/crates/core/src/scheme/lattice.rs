use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{ConstellationModel, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, Weight};
use crate::theta::DMinus;

/// A monomial submodule of `O_X` generated in `D_-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Submodule {
    generators: MonomialIdeal,
    hf: HilbertFunction,
}

impl Submodule {
    pub fn generators(&self) -> &[Monomial] {
        self.generators.generators()
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.generators
    }

    pub fn hf(&self) -> &HilbertFunction {
        &self.hf
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_zero()
    }

    /// `m` is a nonzero element of this submodule.
    pub fn contains(&self, model: &ConstellationModel, m: &Monomial) -> bool {
        model.is_standard(m) && self.generators.contains(m)
    }

    /// Inclusion as submodules of `O_X`.
    pub fn is_within(&self, other: &Submodule) -> bool {
        self.generators().iter().all(|g| other.generators.contains(g))
    }

    /// Text form such as `(x^2, xy)`, or `0`.
    pub fn label(&self) -> String {
        if self.is_zero() {
            "0".into()
        } else {
            self.generators.to_string()
        }
    }
}

/// Submodule generated by `gens`, each a standard monomial of weight in `D_-`.
pub fn submodule_from_generators(
    model: &ConstellationModel,
    gens: &[Monomial],
    dminus: &DMinus,
) -> Result<Submodule> {
    for g in gens {
        let w = model.weight(g);
        if !dminus.contains(w) {
            return Err(Error::AtWeight {
                weight: w,
                message: format!("generator {g} has weight outside D_-"),
            });
        }
        if !model.is_standard(g) {
            return Err(Error::Domain(format!(
                "generator {g} lies in the ring ideal {}",
                model.ideal()
            )));
        }
    }
    let generators = MonomialIdeal::new(gens.iter().copied());
    let hf = model.hf_of(&generators)?;
    Ok(Submodule { generators, hf })
}

/// `outer.hf − inner.hf`, requiring `inner ⊆ outer`.
pub fn quotient_hf(inner: &Submodule, outer: &Submodule) -> Result<HilbertFunction> {
    if !inner.is_within(outer) {
        return Err(Error::Domain(format!(
            "{} is not contained in {}",
            inner.label(),
            outer.label()
        )));
    }
    outer.hf.checked_sub(&inner.hf)
}

/// Every monomial submodule generated in `D_-`, with its inclusion order.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    elements: Vec<Submodule>,
    leq: Vec<Vec<bool>>,
    dminus: DMinus,
    zero: usize,
    full: usize,
}

/// Breadth-first closure of the zero module under adding one standard
/// monomial of weight in `D_-` at a time.
pub fn enumerate_lattice(model: &ConstellationModel, dminus: &DMinus) -> Result<SubmoduleLattice> {
    if dminus.is_empty() {
        return Err(Error::Validation("D_- is empty".into()));
    }
    if !dminus.contains(Weight(0)) {
        return Err(Error::Validation(
            "0 is not in D_-, so O_X is not generated in D_-".into(),
        ));
    }
    let pool: Vec<Monomial> = dminus
        .iter()
        .flat_map(|&w| model.standard_of_weight(w))
        .collect();
    let mut seen: BTreeSet<MonomialIdeal> = BTreeSet::new();
    let mut queue = VecDeque::from([MonomialIdeal::default()]);
    seen.insert(MonomialIdeal::default());
    while let Some(ideal) = queue.pop_front() {
        for m in &pool {
            if ideal.contains(m) {
                continue;
            }
            let next = ideal.with(*m);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let elements = seen
        .into_iter()
        .map(|gens| {
            let hf = model.hf_of(&gens)?;
            Ok(Submodule {
                generators: gens,
                hf,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubmoduleLattice::from_elements(elements, dminus.clone()))
}

impl SubmoduleLattice {
    /// Sorts by `(r, generators)` and tabulates inclusions.
    fn from_elements(mut elements: Vec<Submodule>, dminus: DMinus) -> Self {
        elements.sort_by(|a, b| {
            (a.hf.r(&dminus), &a.generators).cmp(&(b.hf.r(&dminus), &b.generators))
        });
        Self::with_order(elements, dminus)
    }

    fn with_order(elements: Vec<Submodule>, dminus: DMinus) -> Self {
        let leq = elements
            .iter()
            .map(|a| elements.iter().map(|b| a.is_within(b)).collect())
            .collect();
        let zero = elements.iter().position(Submodule::is_zero).expect("zero module");
        let full = elements
            .iter()
            .position(|e| e.generators() == [Monomial::ONE])
            .expect("full module");
        SubmoduleLattice {
            elements,
            leq,
            dminus,
            zero,
            full,
        }
    }

    /// Same elements listed in the order `perm` (a permutation of indices).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let elements = perm.iter().map(|&i| self.elements[i].clone()).collect();
        Self::with_order(elements, self.dminus.clone())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Submodule] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.elements[i]
    }

    pub fn dminus(&self) -> &DMinus {
        &self.dminus
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn full_index(&self) -> usize {
        self.full
    }

    pub fn full(&self) -> &Submodule {
        &self.elements[self.full]
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.elements.iter().position(|e| e.generators == s.generators)
    }

    /// Index of the element with these minimal generators.
    pub fn find(&self, gens: &[Monomial]) -> Option<usize> {
        let key = MonomialIdeal::new(gens.iter().copied());
        self.elements.iter().position(|e| e.generators == key)
    }

    /// `elements[i] ⊆ elements[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Indices of elements other than zero and the full module.
    pub fn proper_nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != self.zero && i != self.full)
    }

    pub fn r(&self, i: usize) -> u64 {
        self.elements[i].hf.r(&self.dminus)
    }

    /// Length of the longest strictly increasing chain from zero to the full module.
    pub fn height(&self) -> usize {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.r(i));
        let mut best = vec![0usize; self.len()];
        for (k, &j) in order.iter().enumerate() {
            for &i in &order[..k] {
                if self.lt(i, j) {
                    best[j] = best[j].max(best[i] + 1);
                }
            }
        }
        best[self.full]
    }
}
