use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, Weight};
use crate::rational::Q;
use crate::scheme::SubmoduleLattice;
use crate::stability::{git_params, mu_theta, DWindow, GitParams};
use crate::theta::{DMinus, StabilityFunction};

/// Which slope a filtration is taken with respect to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "slope", content = "window", rename_all = "lowercase")]
pub enum SlopeKind {
    Theta,
    #[serde(rename = "D")]
    D(DWindow),
}

impl fmt::Display for SlopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeKind::Theta => write!(f, "theta"),
            SlopeKind::D(w) => match (w.min(), w.max()) {
                (Some(a), Some(b)) => write!(f, "D[{a},{b}]"),
                _ => write!(f, "D[]"),
            },
        }
    }
}

/// A slope function on Hilbert functions, resolved from a [`SlopeKind`].
#[derive(Clone, Debug)]
pub struct Slope {
    kind: SlopeKind,
    theta: StabilityFunction,
    dminus: DMinus,
    params: Option<GitParams>,
}

impl Slope {
    pub fn new(
        kind: SlopeKind,
        theta: &StabilityFunction,
        h: &HilbertFunction,
        kappa_neg: &BTreeMap<Weight, Q>,
    ) -> Result<Self> {
        let params = match &kind {
            SlopeKind::Theta => None,
            SlopeKind::D(window) => Some(git_params(theta, h, window, kappa_neg)?),
        };
        Ok(Slope {
            kind,
            theta: theta.clone(),
            dminus: theta.dminus(),
            params,
        })
    }

    pub fn theta(theta: &StabilityFunction) -> Self {
        Slope {
            kind: SlopeKind::Theta,
            theta: theta.clone(),
            dminus: theta.dminus(),
            params: None,
        }
    }

    pub fn kind(&self) -> &SlopeKind {
        &self.kind
    }

    pub fn params(&self) -> Option<&GitParams> {
        self.params.as_ref()
    }

    pub fn eval(&self, hf: &HilbertFunction) -> Result<Q> {
        match &self.params {
            None => mu_theta(hf, &self.theta, &self.dminus),
            Some(p) => p.mu_d(hf),
        }
    }

    /// Slope of `elements[outer] / elements[inner]`.
    pub fn factor(&self, lattice: &SubmoduleLattice, inner: usize, outer: usize) -> Result<Q> {
        if !lattice.leq(inner, outer) {
            return Err(Error::Domain(format!(
                "{} is not contained in {}",
                lattice.get(inner).label(),
                lattice.get(outer).label()
            )));
        }
        let hf = lattice.get(outer).hf().checked_sub(lattice.get(inner).hf())?;
        self.eval(&hf)
    }
}
