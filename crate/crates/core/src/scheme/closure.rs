//! Randomized check that graded submodules generated by non-monomial
//! elements collapse onto monomial ones.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use super::{ConstellationModel, Monomial, SubmoduleLattice};
use crate::hilbert::Weight;
use crate::rational::{qi, Q};

/// A homogeneous element `Σ c_m m` of `O_X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Combination {
    pub terms: Vec<(Monomial, i64)>,
}

impl Combination {
    fn times(&self, model: &ConstellationModel, mult: &Monomial) -> BTreeMap<Monomial, Q> {
        self.terms
            .iter()
            .map(|(m, c)| (m.times(mult), qi(*c)))
            .filter(|(m, c)| model.is_standard(m) && !c.is_zero())
            .collect()
    }
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let lead: Vec<Q> = rows[r].iter().map(|x| x / &pivot).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, l) in row.iter_mut().zip(&lead) {
                    *x -= &f * l;
                }
            }
        }
        rows[r] = lead;
        r += 1;
    }
    r
}

/// Dimension at each weight of `[lo, hi]` of the submodule generated by `gens`.
pub fn graded_closure_dims(
    model: &ConstellationModel,
    gens: &[Combination],
    lo: i64,
    hi: i64,
) -> BTreeMap<Weight, usize> {
    (lo..=hi)
        .map(|w| {
            let basis = model.standard_of_weight(Weight(w));
            let mut rows = Vec::new();
            for g in gens {
                let mults: BTreeSet<Monomial> = basis
                    .iter()
                    .flat_map(|s| {
                        g.terms.iter().filter(|(t, _)| t.divides(s)).map(move |(t, _)| {
                            Monomial::new(s.a - t.a, s.b - t.b)
                        })
                    })
                    .collect();
                for mult in mults {
                    let v = g.times(model, &mult);
                    rows.push(
                        basis
                            .iter()
                            .map(|b| v.get(b).cloned().unwrap_or_else(Q::zero))
                            .collect(),
                    );
                }
            }
            (Weight(w), rank(rows))
        })
        .collect()
}

/// Outcome of [`random_combination_check`].
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub trials: usize,
    pub collapsed: usize,
    pub counterexamples: Vec<Vec<Combination>>,
}

/// Draws random generator sets of same-weight combinations of standard
/// monomials in `D_-` and checks that each generated submodule has, on the
/// window `[lo, hi]`, the dimensions of some monomial lattice element.
pub fn random_combination_check(
    model: &ConstellationModel,
    lattice: &SubmoduleLattice,
    rng: &mut impl Rng,
    trials: usize,
    lo: i64,
    hi: i64,
) -> ClosureReport {
    let weights: Vec<Weight> = lattice.dminus().iter().copied().collect();
    let targets: Vec<BTreeMap<Weight, usize>> = lattice
        .elements()
        .iter()
        .map(|e| {
            (lo..=hi)
                .map(|w| (Weight(w), e.hf().at(w) as usize))
                .collect()
        })
        .collect();
    let mut report = ClosureReport {
        trials,
        collapsed: 0,
        counterexamples: Vec::new(),
    };
    for _ in 0..trials {
        let count = rng.gen_range(1..=2);
        let gens: Vec<Combination> = (0..count)
            .map(|_| {
                let w = weights[rng.gen_range(0..weights.len())];
                let terms = model
                    .standard_of_weight(w)
                    .into_iter()
                    .map(|m| (m, rng.gen_range(-3i64..=3)))
                    .filter(|(_, c)| *c != 0)
                    .collect();
                Combination { terms }
            })
            .collect();
        let dims = graded_closure_dims(model, &gens, lo, hi);
        if targets.contains(&dims) {
            report.collapsed += 1;
        } else {
            report.counterexamples.push(gens);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::scheme::enumerate_lattice;
    use rand::SeedableRng;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]), 1);
        assert_eq!(rank(vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]), 2);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn mixed_weight_zero_generator_gives_everything() {
        let model = builtin::thick_model();
        let g = Combination {
            terms: vec![(Monomial::ONE, 1), (Monomial::new(1, 1), 2)],
        };
        let dims = graded_closure_dims(&model, &[g], -4, 5);
        for (w, d) in dims {
            assert_eq!(d as u64, model.hf().value(w), "weight {w}");
        }
    }

    #[test]
    fn ex44_non_monomial_generators_collapse() {
        let model = builtin::thick_model();
        let lattice = enumerate_lattice(&model, &builtin::theta_ex44().dminus()).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let report = random_combination_check(&model, &lattice, &mut rng, 200, -4, 5);
        assert_eq!(report.collapsed, report.trials, "{:?}", report.counterexamples);
    }
}
