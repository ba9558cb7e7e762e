//! Harder–Narasimhan and Jordan–Hölder filtrations and their polygons.

mod compare;
mod hn;
mod jh;
mod polygon;
mod slope;
mod sweep;

use serde::ser::{Serialize, SerializeStruct, Serializer};

pub use compare::{is_subfiltration, Subfiltration};
pub use hn::{hn, hn_in, max_destabilizer};
pub use jh::{jh, jh_all};
pub use polygon::{polygon, polygon_distance, Polygon};
pub use slope::{Slope, SlopeKind};
pub use sweep::{convergence_sweep, SweepRow, SweepTable};

use crate::hilbert::HilbertFunction;
use crate::rational::{self, Q};
use crate::scheme::{Monomial, Submodule};

/// One term `F_i` of a filtration with `μ(F_i)` and `μ(F_i / F_{i-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub submodule: Submodule,
    pub r: u64,
    pub slope: Q,
    pub factor_slope: Q,
}

impl Term {
    pub fn generators(&self) -> &[Monomial] {
        self.submodule.generators()
    }

    pub fn hf(&self) -> &HilbertFunction {
        self.submodule.hf()
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 4)?;
        st.serialize_field("generators", self.generators())?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("slope", &rational::fmt(&self.slope))?;
        st.serialize_field("factor_slope", &rational::fmt(&self.factor_slope))?;
        st.end()
    }
}

/// A strictly increasing chain of submodules ending at the filtered object,
/// listed without the starting term.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Filtration {
    pub kind: SlopeKind,
    #[serde(skip)]
    pub start: Submodule,
    pub terms: Vec<Term>,
}

impl Filtration {
    /// Number of modules in the chain, counting the zero module.
    pub fn chain_length(&self) -> usize {
        self.terms.len() + 1
    }

    pub fn generator_lists(&self) -> Vec<Vec<Monomial>> {
        self.terms.iter().map(|t| t.generators().to_vec()).collect()
    }

    pub fn factor_slopes(&self) -> Vec<Q> {
        self.terms.iter().map(|t| t.factor_slope.clone()).collect()
    }

    /// Text form such as `0 ⊊ (x^2) ⊊ (x) ⊊ (1)`.
    pub fn describe(&self) -> String {
        let mut parts = vec![self.start.label()];
        parts.extend(self.terms.iter().map(|t| t.submodule.label()));
        parts.join(" ⊊ ")
    }
}
