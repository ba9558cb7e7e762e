use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, Weight};
use crate::rational::{qi, Q};
use crate::theta::StabilityFunction;

/// A finite set of weights `D` over which the GIT parameters are chosen.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DWindow {
    weights: BTreeSet<Weight>,
}

impl DWindow {
    /// `[-n, n]`.
    pub fn symmetric(n: u64) -> Self {
        Self::interval(-(n as i64), n as i64)
    }

    /// `[a, b]`, empty when `a > b`.
    pub fn interval(a: i64, b: i64) -> Self {
        DWindow {
            weights: (a..=b).map(Weight).collect(),
        }
    }

    pub fn from_weights(ws: impl IntoIterator<Item = Weight>) -> Self {
        DWindow {
            weights: ws.into_iter().collect(),
        }
    }

    /// Drops the weights where `h` vanishes.
    pub fn clip_to_support(&self, h: &HilbertFunction) -> Self {
        DWindow {
            weights: self
                .weights
                .iter()
                .copied()
                .filter(|&w| h.value(w) != 0)
                .collect(),
        }
    }

    pub fn contains(&self, w: Weight) -> bool {
        self.weights.contains(&w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn min(&self) -> Option<Weight> {
        self.weights.first().copied()
    }

    pub fn max(&self) -> Option<Weight> {
        self.weights.last().copied()
    }

    pub fn is_superset(&self, other: &DWindow) -> bool {
        self.weights.is_superset(&other.weights)
    }

    /// `S_D = Σ_{ρ ∉ D} θ_ρ h(ρ)`.
    pub fn tail_mass(&self, theta: &StabilityFunction, h: &HilbertFunction) -> Q {
        theta.dot(h) - theta.dot_on(h, self.iter())
    }
}

/// The machine-checkable clauses a window must satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowCheck {
    pub contains_dminus: bool,
    pub meets_dplus: bool,
    pub within_support: bool,
    /// `None` when no minimum was requested.
    pub minimum_n: Option<bool>,
}

impl WindowCheck {
    pub fn passed(&self) -> bool {
        self.contains_dminus && self.meets_dplus && self.within_support && self.minimum_n != Some(false)
    }

    pub fn into_result(self) -> Result<()> {
        let failed: Vec<&str> = [
            ("window must contain D_-", self.contains_dminus),
            ("window must meet D_+", self.meets_dplus),
            ("window must lie in the support of h", self.within_support),
            ("window must contain the requested minimum", self.minimum_n != Some(false)),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(failed.join("; ")))
        }
    }
}

/// Evaluates each clause; `min_n` asks for `[-n, n] ∩ supp h ⊆ D`.
pub fn check_window(
    window: &DWindow,
    theta: &StabilityFunction,
    h: &HilbertFunction,
    min_n: Option<u64>,
) -> WindowCheck {
    WindowCheck {
        contains_dminus: theta.dminus().iter().all(|&w| window.contains(w)),
        meets_dplus: window.iter().any(|&w| theta.is_positive_at(w)),
        within_support: window.iter().all(|&w| h.value(w) != 0),
        minimum_n: min_n.map(|n| {
            window.is_superset(&DWindow::symmetric(n).clip_to_support(h))
        }),
    }
}

/// Smallest symmetric window (clipped to `supp h`) passing every clause with `2·S_D < eps`.
pub fn find_d_for_epsilon(
    theta: &StabilityFunction,
    h: &HilbertFunction,
    eps: &Q,
) -> Result<(u64, DWindow)> {
    if *eps <= Q::zero() {
        return Err(Error::Domain("epsilon must be positive".into()));
    }
    const LIMIT: u64 = 4096;
    for n in 0..=LIMIT {
        let window = DWindow::symmetric(n).clip_to_support(h);
        if !check_window(&window, theta, h, None).passed() {
            continue;
        }
        if qi(2) * window.tail_mass(theta, h) < *eps {
            return Ok((n, window));
        }
    }
    Err(Error::Invariant(format!(
        "no window up to [-{LIMIT}, {LIMIT}] reaches 2·S_D below the requested epsilon"
    )))
}
