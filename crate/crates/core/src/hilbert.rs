//! Weights and Hilbert functions with constant two-sided tails.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::theta::DMinus;

/// Index of an irreducible character `t ↦ t^w` of the multiplicative group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub i64);

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Weight {
    fn from(w: i64) -> Self {
        Weight(w)
    }
}

/// Outcome of comparing two Hilbert functions pointwise.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HfOrdering {
    Le,
    Ge,
    Eq,
    Incomparable,
}

/// A function `Z → N` that is constant to the left of some weight and
/// constant to the right of another.
///
/// The representation is canonical: `values` covers `[lo, lo + values.len())`,
/// its first entry differs from `left` and its last from `right`. Two
/// Hilbert functions are therefore equal as functions iff they are `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    left: u64,
    lo: i64,
    values: Vec<u64>,
    right: u64,
}

impl HilbertFunction {
    /// Builds `left` on `w < lo`, `values` on `[lo, lo+len)`, `right` beyond.
    pub fn new(left: u64, lo: i64, values: Vec<u64>, right: u64) -> Self {
        let mut hf = HilbertFunction {
            left,
            lo,
            values,
            right,
        };
        hf.canonicalize();
        hf
    }

    fn canonicalize(&mut self) {
        let front = self.values.iter().take_while(|&&v| v == self.left).count();
        self.values.drain(..front);
        self.lo += front as i64;
        while self.values.last() == Some(&self.right) {
            self.values.pop();
        }
        if self.values.is_empty() && self.left == self.right {
            self.lo = 0;
        }
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn constant(c: u64) -> Self {
        Self::new(c, 0, Vec::new(), c)
    }

    /// Value 1 on `w ≥ p`, 0 elsewhere.
    pub fn indicator_at_least(p: i64) -> Self {
        Self::new(0, p, Vec::new(), 1)
    }

    /// Value 1 on `w ≤ p`, 0 elsewhere.
    pub fn indicator_at_most(p: i64) -> Self {
        Self::new(1, p + 1, Vec::new(), 0)
    }

    /// Value 1 at `w`, 0 elsewhere.
    pub fn delta(w: i64) -> Self {
        Self::new(0, w, vec![1], 0)
    }

    /// Tabulates `f` on `[lo, hi)` with the given tail values outside.
    pub fn from_fn(left: u64, lo: i64, hi: i64, right: u64, f: impl Fn(i64) -> u64) -> Self {
        Self::new(left, lo, (lo..hi).map(f).collect(), right)
    }

    pub fn value(&self, w: Weight) -> u64 {
        let w = w.0;
        if w < self.lo {
            self.left
        } else if w >= self.hi() {
            self.right
        } else {
            self.values[(w - self.lo) as usize]
        }
    }

    pub fn at(&self, w: i64) -> u64 {
        self.value(Weight(w))
    }

    fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64
    }

    pub fn left_value(&self) -> u64 {
        self.left
    }

    pub fn right_value(&self) -> u64 {
        self.right
    }

    /// Largest weight from which (downwards) the left tail value holds.
    pub fn left_threshold(&self) -> Weight {
        Weight(self.lo - 1)
    }

    /// Smallest weight from which (upwards) the right tail value holds.
    pub fn right_threshold(&self) -> Weight {
        Weight(self.hi())
    }

    /// Entries strictly between the two thresholds.
    pub fn exceptional(&self) -> BTreeMap<Weight, u64> {
        (self.lo..self.hi())
            .map(|w| (Weight(w), self.at(w)))
            .collect()
    }

    /// Smallest interval `[a, b]` outside of which both functions are at their tails.
    pub fn joint_span(&self, other: &HilbertFunction) -> (i64, i64) {
        (self.lo.min(other.lo), self.hi().max(other.hi()))
    }

    pub fn is_zero(&self) -> bool {
        self.left == 0 && self.right == 0 && self.values.is_empty()
    }

    /// Weights with nonzero value inside `[a, b]`.
    pub fn support_within(&self, a: i64, b: i64) -> Vec<Weight> {
        (a..=b).filter(|&w| self.at(w) != 0).map(Weight).collect()
    }

    /// Pointwise partial order.
    pub fn compare(&self, other: &HilbertFunction) -> HfOrdering {
        let (a, b) = self.joint_span(other);
        let mut le = self.left <= other.left && self.right <= other.right;
        let mut ge = self.left >= other.left && self.right >= other.right;
        for w in a..b {
            let (x, y) = (self.at(w), other.at(w));
            le &= x <= y;
            ge &= x >= y;
        }
        match (le, ge) {
            (true, true) => HfOrdering::Eq,
            (true, false) => HfOrdering::Le,
            (false, true) => HfOrdering::Ge,
            (false, false) => HfOrdering::Incomparable,
        }
    }

    pub fn le(&self, other: &HilbertFunction) -> bool {
        matches!(self.compare(other), HfOrdering::Le | HfOrdering::Eq)
    }

    /// `self − other`, requiring `other ≤ self` pointwise.
    pub fn checked_sub(&self, other: &HilbertFunction) -> Result<HilbertFunction> {
        let (a, b) = self.joint_span(other);
        let check = |w: i64, x: u64, y: u64| {
            if y > x {
                Err(Error::AtWeight {
                    weight: Weight(w),
                    message: format!("subtrahend value {y} exceeds minuend value {x}"),
                })
            } else {
                Ok(x - y)
            }
        };
        let left = check(a - 1, self.left, other.left)?;
        let right = check(b, self.right, other.right)?;
        let values = (a..b)
            .map(|w| check(w, self.at(w), other.at(w)))
            .collect::<Result<Vec<_>>>()?;
        Ok(HilbertFunction::new(left, a, values, right))
    }

    /// Total multiplicity over the negative weights of `θ`.
    pub fn r(&self, dminus: &DMinus) -> u64 {
        dminus.iter().map(|&w| self.value(w)).sum()
    }
}

impl Add for &HilbertFunction {
    type Output = HilbertFunction;

    fn add(self, other: &HilbertFunction) -> HilbertFunction {
        let (a, b) = self.joint_span(other);
        HilbertFunction::from_fn(
            self.left + other.left,
            a,
            b,
            self.right + other.right,
            |w| self.at(w) + other.at(w),
        )
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "..{}:{} ", self.lo - 1, self.left)?;
        for (i, v) in self.values.iter().enumerate() {
            write!(f, "{}:{} ", self.lo + i as i64, v)?;
        }
        write!(f, "{}..:{}", self.hi(), self.right)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTail {
    value: u64,
    threshold: i64,
}

#[derive(Serialize, Deserialize)]
struct RawHf {
    exceptional: Vec<(i64, u64)>,
    left_tail: RawTail,
    right_tail: RawTail,
}

impl Serialize for HilbertFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawHf {
            exceptional: (self.lo..self.hi()).map(|w| (w, self.at(w))).collect(),
            left_tail: RawTail {
                value: self.left,
                threshold: self.lo - 1,
            },
            right_tail: RawTail {
                value: self.right,
                threshold: self.hi(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HilbertFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawHf::deserialize(d)?;
        let (lt, rt) = (raw.left_tail.threshold, raw.right_tail.threshold);
        if lt >= rt {
            return Err(D::Error::custom(
                "left tail threshold must be below right tail threshold",
            ));
        }
        let mut values = vec![0; (rt - lt - 1) as usize];
        for (w, v) in raw.exceptional {
            if w <= lt || w >= rt {
                return Err(D::Error::custom(format!(
                    "exceptional weight {w} lies inside a tail"
                )));
            }
            values[(w - lt - 1) as usize] = v;
        }
        Ok(HilbertFunction::new(
            raw.left_tail.value,
            lt + 1,
            values,
            raw.right_tail.value,
        ))
    }
}
