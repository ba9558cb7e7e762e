//! Slopes, GIT parameters, Hilbert–Mumford weights and window selection.

mod epsilon;
mod git;
mod report;
mod slope;
mod window;

pub use epsilon::{epsilon0, quotient_slopes};
pub use git::{git_params, hm_weight, saturate, saturation_of, GitParams, GradedSubspace};
pub use report::{classify, stability_report, Implication, StabilityFlags, StabilityReport};
pub use slope::{mu_d, mu_theta};
pub use window::{check_window, find_d_for_epsilon, DWindow, WindowCheck};
