//! The four worked examples: their stability functions and ambient models.

use crate::hilbert::{HilbertFunction, Weight};
use crate::rational::{q, qi, Q};
use crate::scheme::{ConstellationModel, Monomial};
use crate::theta::{Direction, StabilityFunction, TailSpec};

/// Names accepted by [`model_for`] and [`theta_for`].
pub const EXAMPLES: [&str; 4] = ["ex4.1", "ex4.2", "ex4.3", "ex4.4"];

fn exc(entries: &[(i64, Q)]) -> Vec<(Weight, Q)> {
    entries.iter().map(|(w, v)| (Weight(*w), v.clone())).collect()
}

fn geometric(dir: Direction, start: i64) -> TailSpec {
    TailSpec::geometric(dir, start, q(1, 2), q(1, 2)).expect("valid tail")
}

/// `θ_r = 1/2^{k-2}` at `r = -k ≤ -3`, `0` at `-2, -1`, `-1` at `0, 1`, `1/2^{k-1}` at `k ≥ 2`.
pub fn theta_ex41() -> StabilityFunction {
    StabilityFunction::new(
        exc(&[(0, qi(-1)), (1, qi(-1))]),
        geometric(Direction::Left, -3),
        geometric(Direction::Right, 2),
    )
    .expect("valid")
}

/// `0` for `r ≤ -2`, `1` at `-1`, `-1` at `0, 1`, `1/2^{k-1}` at `k ≥ 2`.
pub fn theta_ex42() -> StabilityFunction {
    StabilityFunction::new(
        exc(&[(-1, qi(1)), (0, qi(-1)), (1, qi(-1))]),
        TailSpec::zero(Direction::Left, Weight(-2)),
        geometric(Direction::Right, 2),
    )
    .expect("valid")
}

/// Period-two tails: `1, 0, 1/2, 0, ...` leftwards from `-2` and
/// `1/2, 0, 1/4, 0, ...` rightwards from `3`; `1, -1, -1, -2` on `-1..=2`.
pub fn theta_ex43() -> StabilityFunction {
    StabilityFunction::new(
        exc(&[(-1, qi(1)), (0, qi(-1)), (1, qi(-1)), (2, qi(-2))]),
        TailSpec::new(Direction::Left, Weight(-2), vec![qi(1), qi(0)], q(1, 2)).expect("valid"),
        TailSpec::new(Direction::Right, Weight(3), vec![q(1, 2), qi(0)], q(1, 2)).expect("valid"),
    )
    .expect("valid")
}

/// `0` for `r ≤ -2`, `5, -1, -1, -2` on `-1..=2`, `1/2^{k-2}` at `k ≥ 3`.
pub fn theta_ex44() -> StabilityFunction {
    StabilityFunction::new(
        exc(&[(-1, qi(5)), (0, qi(-1)), (1, qi(-1)), (2, qi(-2))]),
        TailSpec::zero(Direction::Left, Weight(-2)),
        geometric(Direction::Right, 3),
    )
    .expect("valid")
}

/// Hilbert function of `C[x,y]/(xy², x³y)`: 2 at weights 0 and 1, 1 elsewhere.
pub fn h_ex44() -> HilbertFunction {
    HilbertFunction::new(1, 0, vec![2, 2], 1)
}

/// `C[x,y]/(xy)` with weights `(1, -1)`.
pub fn axes_model() -> ConstellationModel {
    ConstellationModel::build(vec![Monomial::new(1, 1)], (1, -1)).expect("valid model")
}

/// `C[x,y]/(xy², x³y)` with weights `(1, -1)`.
pub fn thick_model() -> ConstellationModel {
    ConstellationModel::build(vec![Monomial::new(1, 2), Monomial::new(3, 1)], (1, -1))
        .expect("valid model")
}

pub fn model_for(name: &str) -> Option<ConstellationModel> {
    match name {
        "ex4.1" | "ex4.2" | "ex4.3" => Some(axes_model()),
        "ex4.4" => Some(thick_model()),
        _ => None,
    }
}

pub fn theta_for(name: &str) -> Option<StabilityFunction> {
    match name {
        "ex4.1" => Some(theta_ex41()),
        "ex4.2" => Some(theta_ex42()),
        "ex4.3" => Some(theta_ex43()),
        "ex4.4" => Some(theta_ex44()),
        _ => None,
    }
}
