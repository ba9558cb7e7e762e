use std::collections::BTreeSet;

use num_traits::Signed;

use super::slope::mu_theta;
use crate::rational::{q, qi, Q};
use crate::scheme::SubmoduleLattice;
use crate::theta::StabilityFunction;

/// Distinct values of `μ_θ(F''/F')` over lattice pairs `F' ⊊ F''`.
pub fn quotient_slopes(lattice: &SubmoduleLattice, theta: &StabilityFunction) -> BTreeSet<Q> {
    let mut out = BTreeSet::new();
    for i in 0..lattice.len() {
        for j in 0..lattice.len() {
            if !lattice.lt(i, j) {
                continue;
            }
            let hf = lattice
                .get(j)
                .hf()
                .checked_sub(lattice.get(i).hf())
                .expect("inclusion implies pointwise order");
            if let Ok(s) = mu_theta(&hf, theta, lattice.dminus()) {
                out.insert(s);
            }
        }
    }
    out
}

/// A quarter of the smallest gap between distinct quotient slopes, or 1
/// when there is at most one value.
pub fn epsilon0(lattice: &SubmoduleLattice, theta: &StabilityFunction) -> Q {
    let slopes: Vec<Q> = quotient_slopes(lattice, theta).into_iter().collect();
    slopes
        .windows(2)
        .map(|w| (&w[1] - &w[0]).abs())
        .min()
        .map_or_else(|| qi(1), |gap| gap * q(1, 4))
}
