use super::hn::build;
use super::{Filtration, Slope};
use crate::error::{Error, Result};
use crate::scheme::SubmoduleLattice;

fn require_semistable(lattice: &SubmoduleLattice, slope: &Slope, inner: usize, outer: usize) -> Result<()> {
    if !lattice.lt(inner, outer) {
        return Err(Error::Domain(format!(
            "{} is not strictly contained in {}",
            lattice.get(inner).label(),
            lattice.get(outer).label()
        )));
    }
    let mu0 = slope.factor(lattice, inner, outer)?;
    for g in 0..lattice.len() {
        if lattice.lt(inner, g) && lattice.leq(g, outer) && slope.factor(lattice, inner, g)? > mu0 {
            return Err(Error::Domain(format!(
                "{} / {} is not semistable: {} destabilizes",
                lattice.get(outer).label(),
                lattice.get(inner).label(),
                lattice.get(g).label()
            )));
        }
    }
    Ok(())
}

/// Minimal `G` with `cur ⊊ G ⊆ outer` and factor slope `μ(outer / inner)`.
fn covers(lattice: &SubmoduleLattice, slope: &Slope, inner: usize, outer: usize, cur: usize) -> Result<Vec<usize>> {
    let mu0 = slope.factor(lattice, inner, outer)?;
    let mut cands = Vec::new();
    for g in 0..lattice.len() {
        if lattice.lt(cur, g) && lattice.leq(g, outer) && slope.factor(lattice, cur, g)? == mu0 {
            cands.push(g);
        }
    }
    let mut minimal: Vec<usize> = cands
        .iter()
        .copied()
        .filter(|&g| !cands.iter().any(|&o| lattice.lt(o, g)))
        .collect();
    minimal.sort_by(|&a, &b| lattice.get(a).generators().cmp(lattice.get(b).generators()));
    Ok(minimal)
}

/// A Jordan–Hölder filtration of the semistable quotient `outer / inner`.
///
/// Among several stable subobjects the one with the smallest generators is
/// taken first.
pub fn jh(lattice: &SubmoduleLattice, slope: &Slope, inner: usize, outer: usize) -> Result<Filtration> {
    require_semistable(lattice, slope, inner, outer)?;
    let mut chain = Vec::new();
    let mut cur = inner;
    while cur != outer {
        cur = *covers(lattice, slope, inner, outer, cur)?
            .first()
            .ok_or_else(|| Error::Invariant("semistable quotient has no stable subobject".into()))?;
        chain.push(cur);
    }
    build(lattice, slope, inner, &chain)
}

/// Every Jordan–Hölder filtration of `outer / inner`.
pub fn jh_all(lattice: &SubmoduleLattice, slope: &Slope, inner: usize, outer: usize) -> Result<Vec<Filtration>> {
    require_semistable(lattice, slope, inner, outer)?;
    let mut out = Vec::new();
    let mut stack = vec![vec![]];
    while let Some(chain) = stack.pop() {
        let cur = chain.last().copied().unwrap_or(inner);
        if cur == outer {
            out.push(build(lattice, slope, inner, &chain)?);
            continue;
        }
        for g in covers(lattice, slope, inner, outer, cur)?.into_iter().rev() {
            let mut next = chain.clone();
            next.push(g);
            stack.push(next);
        }
    }
    Ok(out)
}
