//! Slope stability for torus-equivariant modules on planar monomial schemes.
//!
//! Everything is computed in exact rational arithmetic: θ-slopes and
//! window-dependent D-slopes, GIT parameters and Hilbert–Mumford weights,
//! Harder–Narasimhan and Jordan–Hölder filtrations, and HN polygons.

pub mod builtin;
pub mod commands;
pub mod config;
pub mod error;
pub mod filtration;
pub mod hilbert;
pub mod rational;
pub mod scheme;
pub mod stability;
pub mod svg;
pub mod theta;

pub use config::{Command, Emit, RunConfig, SlopeChoice, WindowSpec};
pub use error::{Error, Result};
pub use filtration::{
    convergence_sweep, hn, hn_in, is_subfiltration, jh, jh_all, max_destabilizer, polygon,
    polygon_distance, Filtration, Polygon, Slope, SlopeKind, Subfiltration, SweepTable,
};
pub use hilbert::{HfOrdering, HilbertFunction, Weight};
pub use rational::Q;
pub use scheme::{
    enumerate_lattice, quotient_hf, submodule_from_generators, ConstellationModel, Monomial,
    MonomialIdeal, Submodule, SubmoduleLattice,
};
pub use theta::{r_of, tail_sum, theta_dot_h, DMinus, Direction, StabilityFunction, TailSpec};
pub use stability::{
    epsilon0, find_d_for_epsilon, git_params, hm_weight, mu_d, mu_theta, saturate,
    stability_report, DWindow, GitParams, GradedSubspace, StabilityReport,
};
