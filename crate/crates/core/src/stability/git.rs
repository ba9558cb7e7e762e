use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::window::{check_window, DWindow};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, Weight};
use crate::rational::{self, qu, Q};
use crate::scheme::{submodule_from_generators, ConstellationModel, Monomial, Submodule};
use crate::theta::{DMinus, StabilityFunction};

/// The GIT data attached to a stability function and a window `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GitParams {
    pub window: DWindow,
    pub dminus: DMinus,
    /// `κ_ρ` for `ρ ∈ D`.
    pub kappa: BTreeMap<Weight, Q>,
    /// `χ_ρ` for `ρ ∈ D_-`.
    pub chi: BTreeMap<Weight, Q>,
    pub s_d: Q,
    pub d: u64,
    pub kappa_h: Q,
    pub r_h: u64,
    theta_on_window: BTreeMap<Weight, Q>,
    h_on_window: BTreeMap<Weight, u64>,
}

/// Computes `κ`, `χ`, `S_D`, `d`, `κ(h)` and `r(h)`. Missing `kappa_neg`
/// entries default to 1.
pub fn git_params(
    theta: &StabilityFunction,
    h: &HilbertFunction,
    window: &DWindow,
    kappa_neg: &BTreeMap<Weight, Q>,
) -> Result<GitParams> {
    check_window(window, theta, h, None).into_result()?;
    let dminus = theta.dminus();
    for (w, k) in kappa_neg {
        if !dminus.contains(*w) {
            return Err(Error::AtWeight {
                weight: *w,
                message: "kappa override given outside D_-".into(),
            });
        }
        if !k.is_positive() {
            return Err(Error::AtWeight {
                weight: *w,
                message: "kappa must be positive".into(),
            });
        }
    }
    let s_d = window.tail_mass(theta, h);
    if !s_d.is_positive() {
        return Err(Error::Invariant(format!(
            "S_D = {} is not positive",
            rational::fmt(&s_d)
        )));
    }
    let d = window.iter().filter(|w| !dminus.contains(**w)).count() as u64;
    let theta_on_window: BTreeMap<Weight, Q> = window.iter().map(|&w| (w, theta.eval(w))).collect();
    let h_on_window: BTreeMap<Weight, u64> = window.iter().map(|&w| (w, h.value(w))).collect();
    let kappa: BTreeMap<Weight, Q> = window
        .iter()
        .map(|&w| {
            let k = if dminus.contains(w) {
                kappa_neg.get(&w).cloned().unwrap_or_else(Q::one)
            } else {
                &theta_on_window[&w] + &s_d / (qu(d) * qu(h_on_window[&w]))
            };
            (w, k)
        })
        .collect();
    let kappa_h: Q = kappa.iter().map(|(w, k)| k * qu(h_on_window[w])).sum();
    let r_h = h.r(&dminus);
    let chi = dminus
        .iter()
        .map(|&w| (w, &theta_on_window[&w] - &kappa[&w] + &kappa_h / qu(r_h)))
        .collect();
    Ok(GitParams {
        window: window.clone(),
        dminus,
        kappa,
        chi,
        s_d,
        d,
        kappa_h,
        r_h,
        theta_on_window,
        h_on_window,
    })
}

impl GitParams {
    /// `κ_D(h') = Σ_{ρ ∈ D} κ_ρ h'(ρ)`.
    pub fn kappa_d(&self, hf: &HilbertFunction) -> Q {
        self.kappa.iter().map(|(w, k)| k * qu(hf.value(*w))).sum()
    }

    /// `χ(h') = Σ_{ρ ∈ D_-} χ_ρ h'(ρ)`.
    pub fn chi_of(&self, hf: &HilbertFunction) -> Q {
        self.chi.iter().map(|(w, c)| c * qu(hf.value(*w))).sum()
    }

    fn r_checked(&self, hf: &HilbertFunction) -> Result<u64> {
        match hf.r(&self.dminus) {
            0 => Err(Error::Domain(
                "slope undefined: the negative part is zero".into(),
            )),
            r => Ok(r),
        }
    }

    /// D-slope through the closed formula in `θ`, `S_D` and `d`.
    pub fn mu_d(&self, hf: &HilbertFunction) -> Result<Q> {
        let r = self.r_checked(hf)?;
        let theta_part: Q = self
            .theta_on_window
            .iter()
            .map(|(w, t)| t * qu(hf.value(*w)))
            .sum();
        let ratio_part: Q = self
            .h_on_window
            .iter()
            .filter(|(w, _)| !self.dminus.contains(**w))
            .map(|(w, hv)| Q::new(hf.value(*w).into(), (*hv).into()))
            .sum();
        Ok(-(theta_part + &self.s_d / qu(self.d) * ratio_part) / qu(r))
    }

    /// D-slope from its definition `(-κ_D(h') - χ(h'))/r(h') + κ(h)/r(h)`.
    pub fn mu_d_definition(&self, hf: &HilbertFunction) -> Result<Q> {
        let r = self.r_checked(hf)?;
        Ok((-self.kappa_d(hf) - self.chi_of(hf)) / qu(r) + &self.kappa_h / qu(self.r_h))
    }
}

fn q_map(m: &BTreeMap<Weight, Q>) -> Vec<(i64, String)> {
    m.iter().map(|(w, v)| (w.0, rational::fmt(v))).collect()
}

impl Serialize for GitParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GitParams", 7)?;
        st.serialize_field("window", &self.window)?;
        st.serialize_field("kappa", &q_map(&self.kappa))?;
        st.serialize_field("chi", &q_map(&self.chi))?;
        st.serialize_field("S_D", &rational::fmt(&self.s_d))?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("kappa_h", &rational::fmt(&self.kappa_h))?;
        st.serialize_field("r_h", &self.r_h)?;
        st.end()
    }
}

/// A coordinate subspace `A' = ⊕_{ρ ∈ D_-} A'_ρ` of the generating space,
/// spanned by standard monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    parts: BTreeMap<Weight, BTreeSet<Monomial>>,
}

impl GradedSubspace {
    /// Span of `monomials`, each of which must be standard with weight in `D_-`.
    pub fn spanned_by(
        model: &ConstellationModel,
        dminus: &DMinus,
        monomials: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        let mut parts: BTreeMap<Weight, BTreeSet<Monomial>> =
            dminus.iter().map(|&w| (w, BTreeSet::new())).collect();
        for m in monomials {
            let w = model.weight(&m);
            if !model.is_standard(&m) {
                return Err(Error::Domain(format!("{m} is zero in O_X")));
            }
            parts
                .get_mut(&w)
                .ok_or_else(|| Error::AtWeight {
                    weight: w,
                    message: format!("{m} has weight outside D_-"),
                })?
                .insert(m);
        }
        Ok(GradedSubspace { parts })
    }

    /// All of `A`.
    pub fn full(model: &ConstellationModel, dminus: &DMinus) -> Self {
        GradedSubspace {
            parts: dminus
                .iter()
                .map(|&w| (w, model.standard_of_weight(w).into_iter().collect()))
                .collect(),
        }
    }

    pub fn dim_at(&self, w: Weight) -> usize {
        self.parts.get(&w).map_or(0, BTreeSet::len)
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(BTreeSet::len).sum()
    }

    /// `(ρ, dim A'_ρ)` in increasing weight order.
    pub fn dims(&self) -> Vec<(Weight, usize)> {
        self.parts.iter().map(|(w, s)| (*w, s.len())).collect()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.parts.values().flatten()
    }

    pub fn is_within(&self, other: &GradedSubspace) -> bool {
        self.parts
            .iter()
            .all(|(w, s)| other.parts.get(w).is_some_and(|o| s.is_subset(o)))
    }

    /// The submodule `F'` it generates.
    pub fn generated(&self, model: &ConstellationModel, dminus: &DMinus) -> Result<Submodule> {
        let gens: Vec<Monomial> = self.monomials().copied().collect();
        submodule_from_generators(model, &gens, dminus)
    }
}

/// Largest coordinate subspace generating the same submodule.
pub fn saturate(
    model: &ConstellationModel,
    dminus: &DMinus,
    subspace: &GradedSubspace,
) -> Result<GradedSubspace> {
    let sub = subspace.generated(model, dminus)?;
    Ok(saturation_of(model, dminus, &sub))
}

/// `A'` with `A'_ρ` the weight-`ρ` part of `sub`, for `ρ ∈ D_-`.
pub fn saturation_of(model: &ConstellationModel, dminus: &DMinus, sub: &Submodule) -> GradedSubspace {
    GradedSubspace {
        parts: dminus
            .iter()
            .map(|&w| {
                let part = model
                    .standard_of_weight(w)
                    .into_iter()
                    .filter(|m| sub.contains(model, m))
                    .collect();
                (w, part)
            })
            .collect(),
    }
}

/// `dim A·(κ_D(F') + χ(A')) − dim A'·κ(h)` with `F'` generated by `A'`.
pub fn hm_weight(
    model: &ConstellationModel,
    subspace: &GradedSubspace,
    params: &GitParams,
) -> Result<Q> {
    let sub = subspace.generated(model, &params.dminus)?;
    let chi: Q = params
        .chi
        .iter()
        .map(|(w, c)| c * qu(subspace.dim_at(*w) as u64))
        .sum();
    Ok(qu(params.r_h) * (params.kappa_d(sub.hf()) + chi) - qu(subspace.dim() as u64) * &params.kappa_h)
}
