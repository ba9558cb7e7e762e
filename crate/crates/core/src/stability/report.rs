use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::git::{git_params, hm_weight, saturation_of, GitParams};
use super::slope::mu_theta;
use super::window::{check_window, DWindow, WindowCheck};
use crate::error::Result;
use crate::hilbert::Weight;
use crate::rational::Q;
use crate::scheme::{enumerate_lattice, ConstellationModel, Monomial, SubmoduleLattice};
use crate::theta::StabilityFunction;

/// Stability of the full module under each notion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StabilityFlags {
    pub theta_stable: bool,
    pub theta_semistable: bool,
    pub mu_theta_stable: bool,
    pub mu_theta_semistable: bool,
    pub mu_d_stable: bool,
    pub mu_d_semistable: bool,
    pub git_stable: bool,
    pub git_semistable: bool,
}

/// One arrow `premise ⇒ conclusion` between stability notions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub premise: &'static str,
    pub conclusion: &'static str,
    pub holds: bool,
    /// Only guaranteed once the window is large enough.
    pub needs_large_window: bool,
}

/// Classification of `O_X` over its lattice of submodules generated in `D_-`.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub window: DWindow,
    pub window_check: WindowCheck,
    #[serde(flatten)]
    pub flags: StabilityFlags,
    /// Minimal generators of the submodules violating each failed flag.
    pub witnesses: BTreeMap<&'static str, Vec<Vec<Monomial>>>,
    pub implications: Vec<Implication>,
}

impl StabilityReport {
    /// Every unconditional arrow holds.
    pub fn is_consistent(&self) -> bool {
        self.implications
            .iter()
            .all(|i| i.holds || i.needs_large_window)
    }
}

/// Builds the lattice and GIT data, then classifies.
pub fn stability_report(
    model: &ConstellationModel,
    theta: &StabilityFunction,
    window: &DWindow,
    kappa_neg: &BTreeMap<Weight, Q>,
) -> Result<StabilityReport> {
    theta.validate(model.hf()).into_result()?;
    let lattice = enumerate_lattice(model, &theta.dminus())?;
    let params = git_params(theta, model.hf(), window, kappa_neg)?;
    classify(model, theta, &lattice, &params)
}

/// Classification against precomputed lattice and GIT data.
pub fn classify(
    model: &ConstellationModel,
    theta: &StabilityFunction,
    lattice: &SubmoduleLattice,
    params: &GitParams,
) -> Result<StabilityReport> {
    let dminus = lattice.dminus();
    let full = lattice.full();
    let theta_f = theta.dot(full.hf());
    let mu_theta_f = mu_theta(full.hf(), theta, dminus)?;
    let mu_d_f = params.mu_d(full.hf())?;

    let mut witnesses: BTreeMap<&'static str, Vec<Vec<Monomial>>> = BTreeMap::new();
    let mut flags = StabilityFlags {
        theta_stable: theta_f.is_zero(),
        theta_semistable: theta_f.is_zero(),
        mu_theta_stable: true,
        mu_theta_semistable: true,
        mu_d_stable: true,
        mu_d_semistable: true,
        git_stable: true,
        git_semistable: true,
    };
    let mut fail = |flag: &mut bool, name: &'static str, gens: &[Monomial]| {
        *flag = false;
        witnesses.entry(name).or_default().push(gens.to_vec());
    };
    for i in lattice.proper_nonzero() {
        let sub = lattice.get(i);
        let gens = sub.generators();
        let t = theta.dot(sub.hf());
        if !t.is_positive() {
            fail(&mut flags.theta_stable, "theta_stable", gens);
        }
        if t.is_negative() {
            fail(&mut flags.theta_semistable, "theta_semistable", gens);
        }
        let mt = mu_theta(sub.hf(), theta, dminus)?;
        if mt >= mu_theta_f {
            fail(&mut flags.mu_theta_stable, "mu_theta_stable", gens);
        }
        if mt > mu_theta_f {
            fail(&mut flags.mu_theta_semistable, "mu_theta_semistable", gens);
        }
        let md = params.mu_d(sub.hf())?;
        if md >= mu_d_f {
            fail(&mut flags.mu_d_stable, "mu_d_stable", gens);
        }
        if md > mu_d_f {
            fail(&mut flags.mu_d_semistable, "mu_d_semistable", gens);
        }
        let hm = hm_weight(model, &saturation_of(model, dminus, sub), params)?;
        if !hm.is_positive() {
            fail(&mut flags.git_stable, "git_stable", gens);
        }
        if hm.is_negative() {
            fail(&mut flags.git_semistable, "git_semistable", gens);
        }
    }
    if !theta_f.is_zero() {
        witnesses.entry("theta_stable").or_default().push(full.generators().to_vec());
        witnesses.entry("theta_semistable").or_default().push(full.generators().to_vec());
    }

    let f = flags;
    let arrow = |premise, p: bool, conclusion, c: bool, needs_large_window| Implication {
        premise,
        conclusion,
        holds: !p || c,
        needs_large_window,
    };
    let implications = vec![
        arrow("theta_stable", f.theta_stable, "mu_theta_stable", f.mu_theta_stable, false),
        arrow("mu_theta_stable", f.mu_theta_stable, "theta_stable", f.theta_stable, false),
        arrow("theta_semistable", f.theta_semistable, "mu_theta_semistable", f.mu_theta_semistable, false),
        arrow("mu_theta_semistable", f.mu_theta_semistable, "theta_semistable", f.theta_semistable, false),
        arrow("theta_stable", f.theta_stable, "theta_semistable", f.theta_semistable, false),
        arrow("mu_theta_stable", f.mu_theta_stable, "mu_theta_semistable", f.mu_theta_semistable, false),
        arrow("mu_d_stable", f.mu_d_stable, "mu_d_semistable", f.mu_d_semistable, false),
        arrow("mu_d_stable", f.mu_d_stable, "git_stable", f.git_stable, false),
        arrow("git_stable", f.git_stable, "mu_d_stable", f.mu_d_stable, false),
        arrow("mu_d_semistable", f.mu_d_semistable, "git_semistable", f.git_semistable, false),
        arrow("git_semistable", f.git_semistable, "mu_d_semistable", f.mu_d_semistable, false),
        arrow("theta_stable", f.theta_stable, "mu_d_stable", f.mu_d_stable, true),
        arrow("mu_theta_stable", f.mu_theta_stable, "mu_d_stable", f.mu_d_stable, true),
        arrow("mu_d_semistable", f.mu_d_semistable, "mu_theta_semistable", f.mu_theta_semistable, true),
    ];
    Ok(StabilityReport {
        window: params.window.clone(),
        window_check: check_window(&params.window, theta, model.hf(), None),
        flags,
        witnesses,
        implications,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::rational::{q, qi};
    use crate::theta::{Direction, TailSpec};

    fn report(model: &ConstellationModel, theta: &StabilityFunction, n: u64) -> StabilityReport {
        stability_report(model, theta, &DWindow::symmetric(n), &BTreeMap::new()).unwrap()
    }

    #[test]
    fn ex41_is_strictly_semistable_but_d_stable() {
        for n in 3..=12 {
            let r = report(&builtin::axes_model(), &builtin::theta_ex41(), n);
            assert!(r.flags.mu_theta_semistable && !r.flags.mu_theta_stable);
            assert!(r.flags.mu_d_stable && r.flags.git_stable);
            assert_eq!(r.witnesses["mu_theta_stable"], vec![vec![Monomial::new(1, 0)]]);
            assert!(r.is_consistent());
        }
    }

    #[test]
    fn ex42_is_semistable_but_d_unstable() {
        for n in 2..=12 {
            let r = report(&builtin::axes_model(), &builtin::theta_ex42(), n);
            assert!(r.flags.mu_theta_semistable && r.flags.theta_semistable);
            assert!(!r.flags.mu_d_semistable && !r.flags.git_semistable);
            assert!(r.is_consistent());
            let c = r.implications.iter().find(|i| i.premise == "mu_d_semistable" && i.conclusion == "mu_theta_semistable").unwrap();
            assert!(c.holds);
        }
    }

    #[test]
    fn theta_stable_toy_is_stable_everywhere() {
        let theta = StabilityFunction::new(
            [(Weight(0), qi(-1)), (Weight(1), qi(-1))],
            TailSpec::zero(Direction::Left, Weight(-1)),
            TailSpec::geometric(Direction::Right, 2, qi(1), q(1, 2)).unwrap(),
        )
        .unwrap();
        let r = report(&builtin::axes_model(), &theta, 4);
        let f = r.flags;
        assert!(f.theta_stable && f.theta_semistable && f.mu_theta_stable);
        assert!(f.mu_theta_semistable && f.mu_d_stable && f.mu_d_semistable);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn json_is_flat() {
        let r = report(&builtin::axes_model(), &builtin::theta_ex41(), 3);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["mu_d_stable"], true);
        assert_eq!(v["mu_theta_stable"], false);
        assert_eq!(v["witnesses"]["mu_theta_stable"][0][0], serde_json::json!([1, 0]));
    }

    #[test]
    fn invalid_theta_is_rejected() {
        let bad = builtin::theta_ex41().with_value(0, qi(-2));
        assert!(stability_report(&builtin::axes_model(), &bad, &DWindow::symmetric(3), &BTreeMap::new()).is_err());
    }
}
