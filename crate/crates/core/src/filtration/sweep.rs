use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{hn_in, polygon, polygon_distance, Filtration, Polygon, Slope, SlopeKind};
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::scheme::{enumerate_lattice, ConstellationModel};
use crate::stability::{check_window, epsilon0, find_d_for_epsilon, DWindow, WindowCheck};
use crate::theta::StabilityFunction;

/// One window of a sweep.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: u64,
    pub window: DWindow,
    pub window_check: WindowCheck,
    pub filtration: Filtration,
    pub polygon: Polygon,
    pub distance: Q,
}

impl Serialize for SweepRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SweepRow", 7)?;
        st.serialize_field("N", &self.n)?;
        st.serialize_field("window", &self.window)?;
        st.serialize_field("window_check", &self.window_check)?;
        st.serialize_field("chain", &self.filtration.terms)?;
        st.serialize_field("chain_length", &self.filtration.chain_length())?;
        st.serialize_field("polygon", &self.polygon)?;
        st.serialize_field("distance", &rational::fmt(&self.distance))?;
        st.end()
    }
}

/// D-HN filtrations and polygon distances over a range of windows.
#[derive(Clone, Debug)]
pub struct SweepTable {
    pub theta_filtration: Filtration,
    pub theta_polygon: Polygon,
    pub epsilon0: Q,
    /// Half-width from `find_d_for_epsilon` at `epsilon0`.
    pub n_epsilon: u64,
    pub rows: Vec<SweepRow>,
}

impl Serialize for SweepTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SweepTable", 5)?;
        st.serialize_field("theta_chain", &self.theta_filtration.terms)?;
        st.serialize_field("theta_polygon", &self.theta_polygon)?;
        st.serialize_field("epsilon0", &rational::fmt(&self.epsilon0))?;
        st.serialize_field("N_epsilon", &self.n_epsilon)?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

/// Windows `[-n, n]` clipped to the support of `h`, for `n_from ≤ n ≤ n_to`.
pub fn convergence_sweep(
    model: &ConstellationModel,
    theta: &StabilityFunction,
    n_from: u64,
    n_to: u64,
    kappa_neg: &BTreeMap<crate::Weight, Q>,
) -> Result<SweepTable> {
    if n_from > n_to {
        return Err(Error::Domain(format!("empty sweep range {n_from}..{n_to}")));
    }
    theta.validate(model.hf()).into_result()?;
    let h = model.hf();
    let lattice = enumerate_lattice(model, &theta.dminus())?;
    let theta_filtration = hn_in(&lattice, &Slope::theta(theta))?;
    let theta_polygon = polygon(&theta_filtration)?;
    let eps = epsilon0(&lattice, theta);
    let (n_epsilon, _) = find_d_for_epsilon(theta, h, &eps)?;
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let window = DWindow::symmetric(n).clip_to_support(h);
        let window_check = check_window(&window, theta, h, None);
        if !window_check.passed() {
            continue;
        }
        let slope = Slope::new(SlopeKind::D(window.clone()), theta, h, kappa_neg)?;
        let filtration = hn_in(&lattice, &slope)?;
        let poly = polygon(&filtration)?;
        let distance = polygon_distance(&theta_polygon, &poly)?;
        rows.push(SweepRow {
            n,
            window,
            window_check,
            filtration,
            polygon: poly,
            distance,
        });
    }
    Ok(SweepTable {
        theta_filtration,
        theta_polygon,
        epsilon0: eps,
        n_epsilon,
        rows,
    })
}
