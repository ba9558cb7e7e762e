//! Stability functions: rational weights with periodic-geometric tails.
//!
//! A stability function is stored as a finite table of exceptional values
//! plus one tail on each side. A tail starting at weight `s` with base
//! `v_0..v_{p-1}` and ratio `q` takes the value `v_{i mod p} · q^{⌊i/p⌋}` at
//! the `i`-th weight counted from `s` outward (so `i = 0` is `s` itself).
//! Restricting to `0 ≤ q < 1` keeps every pairing with a Hilbert function
//! a closed-form exact sum.

use std::collections::BTreeSet;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, Weight};
use crate::rational::{self, pow, Q};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

/// One side of a stability function beyond its finite core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTail", into = "RawTail")]
pub struct TailSpec {
    direction: Direction,
    start: Weight,
    base: Vec<Q>,
    ratio: Q,
}

#[derive(Serialize, Deserialize)]
struct RawTail {
    direction: Direction,
    start: Weight,
    period: usize,
    #[serde(with = "rational::serde_q_vec")]
    base: Vec<Q>,
    #[serde(with = "rational::serde_q")]
    ratio: Q,
}

impl TryFrom<RawTail> for TailSpec {
    type Error = Error;

    fn try_from(raw: RawTail) -> Result<Self> {
        if raw.period != raw.base.len() {
            return Err(Error::Validation(format!(
                "tail period {} does not match base length {}",
                raw.period,
                raw.base.len()
            )));
        }
        TailSpec::new(raw.direction, raw.start, raw.base, raw.ratio)
    }
}

impl From<TailSpec> for RawTail {
    fn from(t: TailSpec) -> Self {
        RawTail {
            direction: t.direction,
            start: t.start,
            period: t.base.len(),
            base: t.base,
            ratio: t.ratio,
        }
    }
}

impl TailSpec {
    /// Rejects an empty base, a ratio outside `[0, 1)` and negative base values.
    pub fn new(direction: Direction, start: Weight, base: Vec<Q>, ratio: Q) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::Validation("tail period must be positive".into()));
        }
        if ratio.is_negative() || ratio >= Q::one() {
            return Err(Error::Validation(format!(
                "tail ratio {} outside [0, 1)",
                rational::fmt(&ratio)
            )));
        }
        if let Some(v) = base.iter().find(|v| v.is_negative()) {
            return Err(Error::Validation(format!(
                "tail base value {} is negative",
                rational::fmt(v)
            )));
        }
        Ok(TailSpec {
            direction,
            start,
            base,
            ratio,
        })
    }

    /// The identically zero tail.
    pub fn zero(direction: Direction, start: Weight) -> Self {
        TailSpec {
            direction,
            start,
            base: vec![Q::zero()],
            ratio: Q::zero(),
        }
    }

    /// Geometric tail `v, v·q, v·q², …` from `start`.
    pub fn geometric(direction: Direction, start: i64, first: Q, ratio: Q) -> Result<Self> {
        Self::new(direction, Weight(start), vec![first], ratio)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn start(&self) -> Weight {
        self.start
    }

    pub fn period(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Q] {
        &self.base
    }

    pub fn ratio(&self) -> &Q {
        &self.ratio
    }

    pub fn is_identically_zero(&self) -> bool {
        self.base.iter().all(Zero::is_zero)
    }

    /// Offset of `w` from the start in the tail direction, if `w` lies in the tail.
    fn index_of(&self, w: Weight) -> Option<u64> {
        let d = match self.direction {
            Direction::Right => w.0 - self.start.0,
            Direction::Left => self.start.0 - w.0,
        };
        (d >= 0).then_some(d as u64)
    }

    fn weight_at(&self, i: u64) -> Weight {
        match self.direction {
            Direction::Right => Weight(self.start.0 + i as i64),
            Direction::Left => Weight(self.start.0 - i as i64),
        }
    }

    pub fn value_at_index(&self, i: u64) -> Q {
        let p = self.period() as u64;
        &self.base[(i % p) as usize] * pow(&self.ratio, i / p)
    }

    /// Value at `w`, or `None` when `w` is not in this tail.
    pub fn value(&self, w: Weight) -> Option<Q> {
        self.index_of(w).map(|i| self.value_at_index(i))
    }

    /// Exact sum of tail values at weights strictly beyond `beyond` in the tail direction.
    pub fn sum_beyond(&self, beyond: Weight) -> Q {
        let next = match self.direction {
            Direction::Right => Weight(beyond.0 + 1),
            Direction::Left => Weight(beyond.0 - 1),
        };
        let i0 = self.index_of(next).unwrap_or(0);
        self.sum_from_index(i0)
    }

    /// `Σ_{i ≥ i0} value_at_index(i)` in closed form.
    fn sum_from_index(&self, i0: u64) -> Q {
        let p = self.period() as u64;
        let (k, j0) = (i0 / p, (i0 % p) as usize);
        let block: Q = self.base.iter().cloned().sum();
        let partial: Q = self.base[j0..].iter().cloned().sum();
        let qk = pow(&self.ratio, k);
        let rest = &qk * &self.ratio * block / (Q::one() - &self.ratio);
        qk * partial + rest
    }

    /// First weight strictly beyond `beyond` where the tail is nonzero.
    pub fn first_nonzero_beyond(&self, beyond: Weight, positive_only: bool) -> Option<Weight> {
        let next = match self.direction {
            Direction::Right => Weight(beyond.0 + 1),
            Direction::Left => Weight(beyond.0 - 1),
        };
        let i0 = self.index_of(next).unwrap_or(0);
        let p = self.period() as u64;
        // After one full period past `i0` the pattern only rescales, and a zero
        // ratio leaves nothing past the first period.
        let end = if self.ratio.is_zero() { p } else { i0 + p };
        (i0..end.max(i0)).find_map(|i| {
            let v = self.value_at_index(i);
            let hit = if positive_only { v.is_positive() } else { !v.is_zero() };
            hit.then(|| self.weight_at(i))
        })
    }
}

/// Tail-aware exact sum of a stability function.
pub fn tail_sum(tail: &TailSpec, beyond: Weight) -> Q {
    tail.sum_beyond(beyond)
}

/// Weights `θ_ρ` indexed by the characters of the multiplicative group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityFunction {
    exceptional: BTreeMap<Weight, Q>,
    left: TailSpec,
    right: TailSpec,
}

impl StabilityFunction {
    /// Requires a left-pointing left tail, a right-pointing right tail and
    /// `left.start < right.start`. Exceptional entries override the tails.
    pub fn new(
        exceptional: impl IntoIterator<Item = (Weight, Q)>,
        left: TailSpec,
        right: TailSpec,
    ) -> Result<Self> {
        if left.direction != Direction::Left || right.direction != Direction::Right {
            return Err(Error::Validation(
                "left tail must point left and right tail must point right".into(),
            ));
        }
        if left.start >= right.start {
            return Err(Error::Validation(format!(
                "left tail start {} must be below right tail start {}",
                left.start, right.start
            )));
        }
        let mut theta = StabilityFunction {
            exceptional: BTreeMap::new(),
            left,
            right,
        };
        let entries: Vec<(Weight, Q)> = exceptional.into_iter().collect();
        for (w, v) in entries {
            if theta.default_value(w) != v {
                theta.exceptional.insert(w, v);
            }
        }
        Ok(theta)
    }

    /// Finitely supported stability function (both tails zero).
    pub fn finite(values: impl IntoIterator<Item = (i64, Q)>) -> Result<Self> {
        let entries: Vec<(Weight, Q)> = values.into_iter().map(|(w, v)| (Weight(w), v)).collect();
        let lo = entries.iter().map(|e| e.0 .0).min().unwrap_or(0);
        let hi = entries.iter().map(|e| e.0 .0).max().unwrap_or(0);
        Self::new(
            entries,
            TailSpec::zero(Direction::Left, Weight(lo - 1)),
            TailSpec::zero(Direction::Right, Weight(hi + 1)),
        )
    }

    fn default_value(&self, w: Weight) -> Q {
        if w <= self.left.start {
            self.left.value(w).unwrap_or_default()
        } else if w >= self.right.start {
            self.right.value(w).unwrap_or_default()
        } else {
            Q::zero()
        }
    }

    /// `θ_w`.
    pub fn eval(&self, w: Weight) -> Q {
        match self.exceptional.get(&w) {
            Some(v) => v.clone(),
            None => self.default_value(w),
        }
    }

    pub fn at(&self, w: i64) -> Q {
        self.eval(Weight(w))
    }

    pub fn left_tail(&self) -> &TailSpec {
        &self.left
    }

    pub fn right_tail(&self) -> &TailSpec {
        &self.right
    }

    pub fn exceptional(&self) -> &BTreeMap<Weight, Q> {
        &self.exceptional
    }

    /// Interval outside of which only the tails contribute.
    fn core_span(&self) -> (i64, i64) {
        let mut a = self.left.start.0;
        let mut b = self.right.start.0;
        if let Some((w, _)) = self.exceptional.first_key_value() {
            a = a.min(w.0);
        }
        if let Some((w, _)) = self.exceptional.last_key_value() {
            b = b.max(w.0);
        }
        (a, b)
    }

    /// Same function with `θ_w` replaced.
    pub fn with_value(&self, w: i64, v: Q) -> Self {
        let mut entries = self.exceptional.clone();
        entries.insert(Weight(w), v);
        Self::new(entries, self.left.clone(), self.right.clone())
            .expect("tails unchanged")
    }

    /// `⟨θ, h⟩ = Σ_ρ θ_ρ h(ρ)`, exact.
    pub fn dot(&self, h: &HilbertFunction) -> Q {
        let (ta, tb) = self.core_span();
        let a = ta.min(h.left_threshold().0);
        let b = tb.max(h.right_threshold().0);
        let mut total: Q = (a..=b)
            .filter(|&w| h.at(w) != 0)
            .map(|w| self.at(w) * rational::qu(h.at(w)))
            .sum();
        total += self.left.sum_beyond(Weight(a)) * rational::qu(h.left_value());
        total += self.right.sum_beyond(Weight(b)) * rational::qu(h.right_value());
        total
    }

    /// `Σ_{ρ ∈ weights} θ_ρ h(ρ)` over a finite set.
    pub fn dot_on<'a>(
        &self,
        h: &HilbertFunction,
        weights: impl IntoIterator<Item = &'a Weight>,
    ) -> Q {
        weights
            .into_iter()
            .map(|&w| self.eval(w) * rational::qu(h.value(w)))
            .sum()
    }

    /// Weights with `θ_ρ < 0`; finite since tails are nonnegative.
    pub fn dminus(&self) -> DMinus {
        DMinus(
            self.exceptional
                .iter()
                .filter(|(_, v)| v.is_negative())
                .map(|(w, _)| *w)
                .collect(),
        )
    }

    pub fn is_positive_at(&self, w: Weight) -> bool {
        self.eval(w).is_positive()
    }

    /// Checks the four admissibility conditions against `h`.
    pub fn validate(&self, h: &HilbertFunction) -> ThetaValidation {
        let dminus = self.dminus();
        let finitely_many_negative = Check {
            passed: true,
            witnesses: dminus.iter().copied().collect(),
            detail: format!("{} negative weights, tails nonnegative", dminus.len()),
        };

        let positive_tail = [&self.left, &self.right]
            .into_iter()
            .filter(|t| t.ratio.is_positive())
            .find_map(|t| {
                let beyond = match t.direction {
                    Direction::Left => Weight(t.start.0 + 1),
                    Direction::Right => Weight(t.start.0 - 1),
                };
                t.first_nonzero_beyond(beyond, true)
            });
        let infinitely_many_positive = Check {
            passed: positive_tail.is_some(),
            witnesses: positive_tail.into_iter().collect(),
            detail: if positive_tail.is_some() {
                "a tail with positive ratio has a positive base value".into()
            } else {
                "no tail carries infinitely many positive values".into()
            },
        };

        let (ta, tb) = self.core_span();
        let a = ta.min(h.left_threshold().0);
        let b = tb.max(h.right_threshold().0);
        let mut off_support: Vec<Weight> = (a..=b)
            .filter(|&w| h.at(w) == 0 && !self.at(w).is_zero())
            .map(Weight)
            .collect();
        if h.left_value() == 0 {
            off_support.extend(self.left.first_nonzero_beyond(Weight(a), false));
        }
        if h.right_value() == 0 {
            off_support.extend(self.right.first_nonzero_beyond(Weight(b), false));
        }
        let vanishes_off_support = Check {
            passed: off_support.is_empty(),
            detail: if off_support.is_empty() {
                "θ vanishes wherever h does".into()
            } else {
                "θ is nonzero where h vanishes".into()
            },
            witnesses: off_support,
        };

        let pairing = self.dot(h);
        let pairs_to_zero = Check {
            passed: pairing.is_zero(),
            witnesses: Vec::new(),
            detail: format!("⟨θ, h⟩ = {}", rational::fmt(&pairing)),
        };

        ThetaValidation {
            finitely_many_negative,
            infinitely_many_positive,
            vanishes_off_support,
            pairs_to_zero,
        }
    }
}

/// `⟨θ, h⟩`.
pub fn theta_dot_h(theta: &StabilityFunction, h: &HilbertFunction) -> Q {
    theta.dot(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub passed: bool,
    pub witnesses: Vec<Weight>,
    pub detail: String,
}

/// Per-condition outcome of admissibility checking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaValidation {
    pub finitely_many_negative: Check,
    pub infinitely_many_positive: Check,
    pub vanishes_off_support: Check,
    pub pairs_to_zero: Check,
}

impl ThetaValidation {
    pub fn is_valid(&self) -> bool {
        self.finitely_many_negative.passed
            && self.infinitely_many_positive.passed
            && self.vanishes_off_support.passed
            && self.pairs_to_zero.passed
    }

    pub fn into_result(self) -> Result<()> {
        let failed: Vec<&str> = [
            ("finitely many negative values", &self.finitely_many_negative),
            ("infinitely many positive values", &self.infinitely_many_positive),
            ("vanishing off the support of h", &self.vanishes_off_support),
            ("zero pairing with h", &self.pairs_to_zero),
        ]
        .into_iter()
        .filter(|(_, c)| !c.passed)
        .map(|(name, _)| name)
        .collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(format!(
                "stability function fails: {}",
                failed.join(", ")
            )))
        }
    }
}

/// The finite set of weights where `θ` is negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DMinus(BTreeSet<Weight>);

impl DMinus {
    pub fn from_weights(ws: impl IntoIterator<Item = Weight>) -> Self {
        DMinus(ws.into_iter().collect())
    }

    pub fn contains(&self, w: Weight) -> bool {
        self.0.contains(&w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<Weight> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Weight> {
        self.0.last().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Weight> {
        &self.0
    }
}

/// `Σ_{ρ ∈ D_-} h(ρ)`.
pub fn r_of(h: &HilbertFunction, dminus: &DMinus) -> u64 {
    h.r(dminus)
}

#[derive(Serialize, Deserialize)]
struct RawTheta {
    exceptional: Vec<(i64, String)>,
    left_tail: TailSpec,
    right_tail: TailSpec,
}

impl Serialize for StabilityFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTheta {
            exceptional: self
                .exceptional
                .iter()
                .map(|(w, v)| (w.0, rational::fmt(v)))
                .collect(),
            left_tail: self.left.clone(),
            right_tail: self.right.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StabilityFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawTheta::deserialize(d)?;
        let entries = raw
            .exceptional
            .iter()
            .map(|(w, v)| rational::parse(v).map(|v| (Weight(*w), v)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        StabilityFunction::new(entries, raw.left_tail, raw.right_tail).map_err(D::Error::custom)
    }
}
