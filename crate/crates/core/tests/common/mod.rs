#![allow(dead_code)]

pub mod checks;

use constellation::rational::{q, qi, qu, Q};
use constellation::{
    builtin, enumerate_lattice, ConstellationModel, Direction, Monomial, StabilityFunction, TailSpec, Weight,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub struct Case {
    pub name: String,
    pub model: ConstellationModel,
    pub theta: StabilityFunction,
}

pub fn examples() -> Vec<Case> {
    builtin::EXAMPLES
        .iter()
        .map(|n| Case {
            name: n.to_string(),
            model: builtin::model_for(n).unwrap(),
            theta: builtin::theta_for(n).unwrap(),
        })
        .collect()
}

fn random_model(rng: &mut impl Rng) -> Option<ConstellationModel> {
    let weights = *[(1, -1), (1, -1), (1, -2), (2, -1), (2, -3)].choose(rng).unwrap();
    let gens: Vec<Monomial> = (0..rng.gen_range(1..=3))
        .map(|_| Monomial::new(rng.gen_range(0..4), rng.gen_range(0..4)))
        .filter(|m| *m != Monomial::ONE)
        .collect();
    if gens.is_empty() {
        return None;
    }
    let model = ConstellationModel::build(gens, weights).ok()?;
    let h = model.hf();
    (h.right_value() > 0 || h.left_value() > 0).then_some(model)
}

/// An admissible stability function with a geometric positive tail on an
/// infinite side of `h`, a few positive values elsewhere in the support,
/// and negative values on a small `D_-` containing 0 chosen so `θ·h = 0`.
fn random_theta(model: &ConstellationModel, rng: &mut impl Rng) -> Option<StabilityFunction> {
    let h = model.hf();
    let (lo, hi) = (h.left_threshold().0, h.right_threshold().0);
    let span: Vec<i64> = h.support_within(lo - 2, hi + 2).into_iter().map(|w| w.0).collect();
    let mut dminus = vec![0i64];
    for w in span.iter().filter(|w| **w != 0) {
        if dminus.len() < 3 && rng.gen_bool(0.3) {
            dminus.push(*w);
        }
    }
    let right = h.right_value() > 0 && (h.left_value() == 0 || rng.gen_bool(0.5));
    let (tail_dir, tail_start, tail_h) = if right {
        let s = hi.max(*dminus.iter().max().unwrap() + 1) + rng.gen_range(0..3);
        (Direction::Right, s, h.right_value())
    } else {
        let s = (lo).min(*dminus.iter().min().unwrap() - 1) - rng.gen_range(0..3);
        (Direction::Left, s, h.left_value())
    };
    let first = q(rng.gen_range(1..=4), rng.gen_range(1..=4));
    let ratio = q(1, rng.gen_range(2..=3));
    let tail = TailSpec::geometric(tail_dir, tail_start, first.clone(), ratio.clone()).ok()?;
    let mut positive = first / (qi(1) - ratio) * qu(tail_h);
    let mut entries: Vec<(Weight, Q)> = Vec::new();
    for w in &span {
        let inside = match tail_dir {
            Direction::Right => *w < tail_start,
            Direction::Left => *w > tail_start,
        };
        if inside && !dminus.contains(w) && rng.gen_bool(0.3) {
            let v = q(rng.gen_range(1..=3), rng.gen_range(1..=3));
            positive += &v * qu(h.value(Weight(*w)));
            entries.push((Weight(*w), v));
        }
    }
    let shares: Vec<i64> = dminus.iter().map(|_| rng.gen_range(1..=3)).collect();
    let total: i64 = shares.iter().sum();
    for (w, s) in dminus.iter().zip(&shares) {
        let v = -(&positive * q(*s, total)) / qu(h.value(Weight(*w)));
        entries.push((Weight(*w), v));
    }
    let zero_side = |dir| {
        let start = match dir {
            Direction::Left => Weight(lo.min(tail_start) - 1),
            Direction::Right => Weight(hi.max(tail_start) + 1),
        };
        TailSpec::zero(dir, start)
    };
    let (left, right_tail) = match tail_dir {
        Direction::Right => (zero_side(Direction::Left), tail),
        Direction::Left => (tail, zero_side(Direction::Right)),
    };
    let theta = StabilityFunction::new(entries, left, right_tail).ok()?;
    theta.validate(h).is_valid().then_some(theta)
}

/// `count` admissible random cases whose submodules have constant tails.
pub fn random_cases(rng: &mut impl Rng, count: usize) -> Vec<Case> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(model) = random_model(rng) else { continue };
        let Some(theta) = random_theta(&model, rng) else { continue };
        if enumerate_lattice(&model, &theta.dminus()).is_err() {
            continue;
        }
        out.push(Case {
            name: format!("random {} {:?}", model.ideal(), model.weights()),
            model,
            theta,
        });
    }
    out
}
