use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, Weight};

/// The cyclic module `O_X` on `X = Spec C[x,y]/I` with a torus acting on `x`
/// and `y` through the weights `(w_x, w_y)`, `w_x > 0 > w_y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawModel", into = "RawModel")]
pub struct ConstellationModel {
    ideal: MonomialIdeal,
    weights: (i64, i64),
    hf: HilbertFunction,
}

#[derive(Serialize, Deserialize)]
struct RawModel {
    ideal: Vec<Monomial>,
    weights: (i64, i64),
}

impl TryFrom<RawModel> for ConstellationModel {
    type Error = Error;

    fn try_from(raw: RawModel) -> Result<Self> {
        ConstellationModel::build(raw.ideal, raw.weights)
    }
}

impl From<ConstellationModel> for RawModel {
    fn from(m: ConstellationModel) -> Self {
        RawModel {
            ideal: m.ideal.generators().to_vec(),
            weights: m.weights,
        }
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl ConstellationModel {
    pub fn build(ideal_generators: Vec<Monomial>, weights: (i64, i64)) -> Result<Self> {
        let (wx, wy) = weights;
        if !(wx > 0 && wy < 0) {
            return Err(Error::Validation(format!(
                "variable weights ({wx}, {wy}) must satisfy w_x > 0 > w_y"
            )));
        }
        let ideal = MonomialIdeal::new(ideal_generators);
        if ideal.contains(&Monomial::ONE) {
            return Err(Error::Validation("the ring ideal is the unit ideal".into()));
        }
        if ideal.is_zero() {
            // Every power of x^{|w_y|} y^{w_x} survives at weight 0.
            return Err(Error::AtWeight {
                weight: Weight(0),
                message: "infinitely many standard monomials".into(),
            });
        }
        let mut model = ConstellationModel {
            ideal,
            weights,
            hf: HilbertFunction::zero(),
        };
        model.hf = model.hf_of(&MonomialIdeal::new([Monomial::ONE]))?;
        Ok(model)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn weights(&self) -> (i64, i64) {
        self.weights
    }

    pub fn hf(&self) -> &HilbertFunction {
        &self.hf
    }

    pub fn weight(&self, m: &Monomial) -> Weight {
        Weight(m.a as i64 * self.weights.0 + m.b as i64 * self.weights.1)
    }

    /// Not in the ring ideal, hence a basis vector of `O_X`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.ideal.contains(m)
    }

    /// Standard monomials of weight `w`, ordered by increasing `b`.
    pub fn standard_of_weight(&self, w: Weight) -> Vec<Monomial> {
        let (wx, wy) = self.weights;
        let ny = -wy;
        // a·wx = w + b·ny, so b ≥ ceil(-w/ny) keeps a ≥ 0. Each generator x^i y^j
        // forces b < j or a < i; the latter bounds b above.
        let b_min = div_ceil(-w.0, ny).max(0);
        let b_end = self
            .ideal
            .generators()
            .iter()
            .map(|g| (g.b as i64).max(div_ceil(g.a as i64 * wx - w.0, ny)))
            .min()
            .unwrap_or(b_min);
        (b_min..b_end)
            .filter_map(|b| {
                let num = w.0 + b * ny;
                (num % wx == 0).then(|| Monomial::new((num / wx) as u32, b as u32))
            })
            .filter(|m| self.is_standard(m))
            .collect()
    }

    /// Hilbert function of the submodule generated by `gens`, with constant
    /// tails verified over one full period on each side.
    pub fn hf_of(&self, gens: &MonomialIdeal) -> Result<HilbertFunction> {
        let (wx, wy) = self.weights;
        let max_a = self.ideal.max_a().max(gens.max_a()).max(1);
        let max_b = self.ideal.max_b().max(gens.max_b()).max(1);
        let right = wx * max_a as i64;
        let left = wy * max_b as i64;
        let count = |w: i64| {
            self.standard_of_weight(Weight(w))
                .iter()
                .filter(|m| gens.contains(m))
                .count() as u64
        };
        let lo = left - (-wy);
        let hi = right + wx;
        let values: Vec<u64> = (lo..=hi).map(count).collect();
        let left_vals = &values[..=(-wy) as usize];
        let right_vals = &values[values.len() - 1 - wx as usize..];
        for (vals, at) in [(left_vals, left), (right_vals, right)] {
            if vals.iter().any(|v| *v != vals[0]) {
                return Err(Error::Validation(format!(
                    "multiplicities near weight {at} are not eventually constant"
                )));
            }
        }
        let (l, r) = (left_vals[0], right_vals[0]);
        Ok(HilbertFunction::new(l, lo, values, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: u32, b: u32) -> Monomial {
        Monomial::new(a, b)
    }

    /// Counts standard monomials of weight `w` by scanning a box.
    fn staircase_count(model: &ConstellationModel, w: i64) -> u64 {
        let mut n = 0;
        for a in 0..60u32 {
            for b in 0..60u32 {
                let mono = m(a, b);
                if model.weight(&mono).0 == w && model.is_standard(&mono) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn axes_have_constant_one() {
        let model = ConstellationModel::build(vec![m(1, 1)], (1, -1)).unwrap();
        assert_eq!(model.hf(), &HilbertFunction::constant(1));
    }

    #[test]
    fn thick_model_has_two_at_zero_and_one() {
        let model = ConstellationModel::build(vec![m(1, 2), m(3, 1)], (1, -1)).unwrap();
        for w in -6..8 {
            let want = if w == 0 || w == 1 { 2 } else { 1 };
            assert_eq!(model.hf().at(w), want, "weight {w}");
        }
    }

    #[test]
    fn x_squared_staircase() {
        let model = ConstellationModel::build(vec![m(2, 0)], (1, -1)).unwrap();
        for w in -10..10 {
            assert_eq!(model.hf().at(w), staircase_count(&model, w), "weight {w}");
        }
        assert_eq!(model.hf().at(-5), 2);
        assert_eq!(model.hf().at(1), 1);
        assert_eq!(model.hf().at(2), 0);
    }

    #[test]
    fn zero_ideal_is_rejected_at_weight_zero() {
        let err = ConstellationModel::build(vec![], (1, -1)).unwrap_err();
        assert_eq!(
            err,
            Error::AtWeight {
                weight: Weight(0),
                message: "infinitely many standard monomials".into()
            }
        );
    }

    #[test]
    fn bad_weights_are_rejected() {
        assert!(ConstellationModel::build(vec![m(1, 1)], (1, 1)).is_err());
        assert!(ConstellationModel::build(vec![m(0, 0)], (1, -1)).is_err());
    }

    #[test]
    fn nonstandard_weights_agree_with_staircase() {
        for (gens, wts) in [
            (vec![m(1, 1), m(0, 2)], (1, -3)),
            (vec![m(3, 0), m(0, 2)], (1, -2)),
            (vec![m(2, 1), m(0, 3)], (1, -2)),
        ] {
            let model = ConstellationModel::build(gens, wts).unwrap();
            for w in -12..12 {
                assert_eq!(model.hf().at(w), staircase_count(&model, w), "{wts:?} weight {w}");
            }
        }
    }

    #[test]
    fn periodic_tails_are_rejected() {
        assert!(ConstellationModel::build(vec![m(2, 1), m(0, 3)], (2, -1)).is_err());
    }
}
