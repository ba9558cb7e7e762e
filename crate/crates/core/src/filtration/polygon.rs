use num_traits::Signed;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::Filtration;
use crate::error::{Error, Result};
use crate::rational::{self, qu, Q};

/// Breakpoints `(r, w)` of a concave piecewise-linear function on `[0, r(h)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub points: Vec<(u64, Q)>,
}

impl Polygon {
    pub fn end(&self) -> u64 {
        self.points.last().map_or(0, |p| p.0)
    }

    pub fn abscissae(&self) -> impl Iterator<Item = u64> + '_ {
        self.points.iter().map(|p| p.0)
    }

    /// Linear interpolation; `None` outside `[0, end]`.
    pub fn eval(&self, x: u64) -> Option<Q> {
        let k = self.points.iter().position(|p| p.0 >= x)?;
        let (x1, y1) = &self.points[k];
        if *x1 == x || k == 0 {
            return (*x1 == x).then(|| y1.clone());
        }
        let (x0, y0) = &self.points[k - 1];
        Some(y0 + (y1 - y0) * qu(x - x0) / qu(x1 - x0))
    }
}

impl Serialize for Polygon {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.points.len()))?;
        for (r, w) in &self.points {
            seq.serialize_element(&(r, rational::fmt(w)))?;
        }
        seq.end()
    }
}

/// The HN polygon through `(0, 0)` and `(r(F_i), r(F_i)·μ(F_i))`.
pub fn polygon(filtration: &Filtration) -> Result<Polygon> {
    let mut points = vec![(0u64, Q::from_integer(0.into()))];
    for t in &filtration.terms {
        points.push((t.r, qu(t.r) * &t.slope));
    }
    let gradients: Vec<Q> = points
        .windows(2)
        .map(|w| {
            if w[1].0 <= w[0].0 {
                Err(Error::Invariant(format!("polygon abscissae not increasing at r = {}", w[1].0)))
            } else {
                Ok((&w[1].1 - &w[0].1) / qu(w[1].0 - w[0].0))
            }
        })
        .collect::<Result<_>>()?;
    if gradients.windows(2).any(|g| g[1] >= g[0]) {
        return Err(Error::Invariant(format!(
            "polygon of {} is not strictly concave",
            filtration.describe()
        )));
    }
    Ok(Polygon { points })
}

/// Maximum of `|f1 - f2|` over the union of breakpoint abscissae.
pub fn polygon_distance(p1: &Polygon, p2: &Polygon) -> Result<Q> {
    if p1.end() != p2.end() {
        return Err(Error::Domain(format!(
            "polygons end at r = {} and r = {}",
            p1.end(),
            p2.end()
        )));
    }
    let mut best = Q::from_integer(0.into());
    for x in p1.abscissae().chain(p2.abscissae()) {
        let (a, b) = (p1.eval(x).unwrap(), p2.eval(x).unwrap());
        best = best.max((a - b).abs());
    }
    Ok(best)
}
