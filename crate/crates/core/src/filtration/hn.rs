use std::collections::BTreeMap;

use super::{Filtration, Slope, SlopeKind, Term};
use crate::error::{Error, Result};
use crate::hilbert::HfOrdering;
use crate::rational::Q;
use crate::scheme::{enumerate_lattice, ConstellationModel, SubmoduleLattice};
use crate::theta::StabilityFunction;

/// The largest `G ⊋ above` maximizing the slope of `G / above`.
///
/// Returns the full module when `F / above` is semistable. Fails if two
/// maximizers are not both contained in a single maximal one.
pub fn max_destabilizer(lattice: &SubmoduleLattice, slope: &Slope, above: usize) -> Result<usize> {
    if above == lattice.full_index() {
        return Err(Error::Domain("nothing lies strictly above the full module".into()));
    }
    let mut best: Option<Q> = None;
    let mut maximizers: Vec<usize> = Vec::new();
    for g in 0..lattice.len() {
        if !lattice.lt(above, g) {
            continue;
        }
        let s = slope.factor(lattice, above, g)?;
        match &best {
            Some(b) if s < *b => {}
            Some(b) if s == *b => maximizers.push(g),
            _ => {
                best = Some(s);
                maximizers = vec![g];
            }
        }
    }
    let top: Vec<usize> = maximizers
        .iter()
        .copied()
        .filter(|&m| {
            maximizers.iter().all(|&o| {
                !matches!(
                    lattice.get(m).hf().compare(lattice.get(o).hf()),
                    HfOrdering::Le
                )
            })
        })
        .collect();
    match top.as_slice() {
        [m] if maximizers.iter().all(|&o| lattice.leq(o, *m)) => Ok(*m),
        _ => Err(Error::Invariant(format!(
            "maximal destabilizer above {} is not unique: {}",
            lattice.get(above).label(),
            maximizers
                .iter()
                .map(|&m| lattice.get(m).label())
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

/// Assembles terms for the chain `start ⊊ chain[0] ⊊ ... ⊊ chain[k]`.
pub(crate) fn build(
    lattice: &SubmoduleLattice,
    slope: &Slope,
    start: usize,
    chain: &[usize],
) -> Result<Filtration> {
    let mut prev = start;
    let mut terms = Vec::with_capacity(chain.len());
    for &i in chain {
        terms.push(Term {
            submodule: lattice.get(i).clone(),
            r: lattice.r(i),
            slope: slope.eval(lattice.get(i).hf())?,
            factor_slope: slope.factor(lattice, prev, i)?,
        });
        prev = i;
    }
    Ok(Filtration {
        kind: slope.kind().clone(),
        start: lattice.get(start).clone(),
        terms,
    })
}

/// HN filtration of the full module within an enumerated lattice.
pub fn hn_in(lattice: &SubmoduleLattice, slope: &Slope) -> Result<Filtration> {
    let mut chain = Vec::new();
    let mut cur = lattice.zero_index();
    while cur != lattice.full_index() {
        cur = max_destabilizer(lattice, slope, cur)?;
        chain.push(cur);
    }
    let f = build(lattice, slope, lattice.zero_index(), &chain)?;
    if f.terms.windows(2).any(|w| w[0].factor_slope <= w[1].factor_slope) {
        return Err(Error::Invariant(format!(
            "HN factor slopes are not strictly decreasing for {}",
            f.describe()
        )));
    }
    Ok(f)
}

/// HN filtration of `O_X` for the given slope, with default `κ` on `D_-`.
pub fn hn(model: &ConstellationModel, theta: &StabilityFunction, kind: SlopeKind) -> Result<Filtration> {
    theta.validate(model.hf()).into_result()?;
    let lattice = enumerate_lattice(model, &theta.dminus())?;
    let slope = Slope::new(kind, theta, model.hf(), &BTreeMap::new())?;
    hn_in(&lattice, &slope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::scheme::Monomial;
    use crate::stability::DWindow;

    fn m(a: u32, b: u32) -> Monomial {
        Monomial::new(a, b)
    }

    #[test]
    fn ex43_first_terms() {
        let model = builtin::axes_model();
        let theta = builtin::theta_ex43();
        let lat = enumerate_lattice(&model, &theta.dminus()).unwrap();
        let i1 = lat.find(&[m(1, 0)]).unwrap();
        let i2 = lat.find(&[m(2, 0)]).unwrap();
        assert_eq!(max_destabilizer(&lat, &Slope::theta(&theta), lat.zero_index()).unwrap(), i1);
        for n in 1..5i64 {
            let kind = SlopeKind::D(DWindow::interval(-2 * n - 2, 2 * n + 2));
            let slope = Slope::new(kind, &theta, model.hf(), &BTreeMap::new()).unwrap();
            assert_eq!(max_destabilizer(&lat, &slope, lat.zero_index()).unwrap(), i2);
        }
    }

    #[test]
    fn semistable_object_destabilizes_to_full() {
        let model = builtin::axes_model();
        let theta = builtin::theta_ex42();
        let lat = enumerate_lattice(&model, &theta.dminus()).unwrap();
        let got = max_destabilizer(&lat, &Slope::theta(&theta), lat.zero_index()).unwrap();
        assert_eq!(got, lat.full_index());
    }

    #[test]
    fn example_filtrations() {
        let axes = builtin::axes_model();
        let f = hn(&axes, &builtin::theta_ex42(), SlopeKind::Theta).unwrap();
        assert_eq!(f.generator_lists(), vec![vec![m(0, 0)]]);
        let f = hn(&axes, &builtin::theta_ex42(), SlopeKind::D(DWindow::symmetric(4))).unwrap();
        assert_eq!(f.generator_lists(), vec![vec![m(1, 0)], vec![m(0, 0)]]);

        let thick = builtin::thick_model();
        let f = hn(&thick, &builtin::theta_ex44(), SlopeKind::Theta).unwrap();
        assert_eq!(f.generator_lists(), vec![vec![m(1, 0)], vec![m(0, 0)]]);
        let f = hn(&thick, &builtin::theta_ex44(), SlopeKind::D(DWindow::symmetric(10))).unwrap();
        // (xy, x^2) lies on the segment from (x^2) to (x): both steps have slope 1.
        assert_eq!(f.generator_lists(), vec![vec![m(2, 0)], vec![m(1, 0)], vec![m(0, 0)]]);
        assert_eq!(f.describe(), "0 ⊊ (x^2) ⊊ (x) ⊊ (1)");
    }

    #[test]
    fn json_terms() {
        let f = hn(&builtin::axes_model(), &builtin::theta_ex43(), SlopeKind::Theta).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["kind"]["slope"], "theta");
        assert_eq!(v["terms"][0]["generators"], serde_json::json!([[1, 0]]));
        assert_eq!(v["terms"][0]["factor_slope"], "1/1");
        assert_eq!(v["terms"][1]["slope"], "0/1");
        assert_eq!(v["terms"][1]["r"], 3);
    }
}
