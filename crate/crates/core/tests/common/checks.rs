use std::collections::BTreeMap;

use constellation::rational::{self, q, qi, qu, Q};
use constellation::stability::saturation_of;
use constellation::{
    enumerate_lattice, epsilon0, find_d_for_epsilon, git_params, hm_weight, hn_in, is_subfiltration, mu_theta,
    DWindow, Slope, SlopeKind, SubmoduleLattice, Weight,
};
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;

use super::Case;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn lattice(case: &Case) -> Result<SubmoduleLattice, String> {
    enumerate_lattice(&case.model, &case.theta.dminus()).map_err(err)
}

/// Half-widths of admissible windows: the smallest one and two larger ones.
pub fn windows(case: &Case) -> Result<Vec<DWindow>, String> {
    let h = case.model.hf();
    let (n0, _) = find_d_for_epsilon(&case.theta, h, &qi(1_000_000)).map_err(err)?;
    Ok([n0, n0 + 2, n0 + 5]
        .iter()
        .map(|&n| DWindow::symmetric(n).clip_to_support(h))
        .collect())
}

pub fn slopes(case: &Case) -> Result<Vec<Slope>, String> {
    let mut out = vec![Slope::theta(&case.theta)];
    for w in windows(case)? {
        out.push(Slope::new(SlopeKind::D(w), &case.theta, case.model.hf(), &BTreeMap::new()).map_err(err)?);
    }
    Ok(out)
}

/// For `0 ≠ F' ⊊ F''`: `μ(F') < μ(F'') ⟺ μ(F'') < μ(F''/F') ⟺ μ(F') < μ(F''/F')`, and likewise for `=`.
pub fn seesaw(case: &Case) -> Check {
    let lat = lattice(case)?;
    for slope in slopes(case)? {
        for a in lat.proper_nonzero() {
            for b in 0..lat.len() {
                if !lat.lt(a, b) {
                    continue;
                }
                let sa = slope.eval(lat.get(a).hf()).map_err(err)?;
                let sb = slope.eval(lat.get(b).hf()).map_err(err)?;
                let sq = slope.factor(&lat, a, b).map_err(err)?;
                let (x, y, z) = (sa.cmp(&sb), sb.cmp(&sq), sa.cmp(&sq));
                ensure!(
                    x == y && y == z,
                    "{}: seesaw fails for {} ⊊ {} under {}",
                    case.name,
                    lat.get(a).label(),
                    lat.get(b).label(),
                    slope.kind()
                );
            }
        }
    }
    Ok(())
}

pub fn hn_unique_under_permutations(case: &Case, rng: &mut impl Rng, count: usize) -> Check {
    let lat = lattice(case)?;
    for slope in slopes(case)? {
        let reference = hn_in(&lat, &slope).map_err(err)?;
        for _ in 0..count {
            let mut perm: Vec<usize> = (0..lat.len()).collect();
            perm.shuffle(rng);
            let got = hn_in(&lat.permuted(&perm), &slope).map_err(err)?;
            ensure!(got == reference, "{}: HN under {} depends on enumeration order", case.name, slope.kind());
        }
    }
    Ok(())
}

pub fn chain_length_bound(case: &Case) -> Check {
    let lat = lattice(case)?;
    let r = lat.r(lat.full_index()) as usize;
    for slope in slopes(case)? {
        let f = hn_in(&lat, &slope).map_err(err)?;
        ensure!(f.terms.len() <= r, "{}: {} has more than r(F) = {r} steps", case.name, f.describe());
    }
    Ok(())
}

/// θ-HN terms lie in the D-HN filtration, with slope matching, for windows
/// containing the `ε₀` window.
pub fn subfiltration_theorem(case: &Case) -> Check {
    let lat = lattice(case)?;
    let h = case.model.hf();
    let eps = epsilon0(&lat, &case.theta);
    let (n, _) = find_d_for_epsilon(&case.theta, h, &eps).map_err(err)?;
    let theta_slope = Slope::theta(&case.theta);
    let t = hn_in(&lat, &theta_slope).map_err(err)?;
    for m in [n, n + 1, n + 3] {
        let w = DWindow::symmetric(m).clip_to_support(h);
        let slope = Slope::new(SlopeKind::D(w), &case.theta, h, &BTreeMap::new()).map_err(err)?;
        let d = hn_in(&lat, &slope).map_err(err)?;
        let v = is_subfiltration(&t, &d, &theta_slope).map_err(err)?;
        ensure!(
            v.is_sub && v.slope_matching,
            "{}: at N = {m} θ-HN {} is not a matching subfiltration of {}",
            case.name,
            t.describe(),
            d.describe()
        );
    }
    Ok(())
}

pub fn kappa_h_independence(case: &Case) -> Check {
    let mut seen: Option<Q> = None;
    for w in windows(case)? {
        let p = git_params(&case.theta, case.model.hf(), &w, &BTreeMap::new()).map_err(err)?;
        let balance: Q = p.chi.iter().map(|(w, c)| c * qu(case.model.hf().value(*w))).sum();
        ensure!(balance == qi(0), "{}: χ does not balance on D_-", case.name);
        match &seen {
            Some(k) => ensure!(*k == p.kappa_h, "{}: κ(h) changes with the window", case.name),
            None => seen = Some(p.kappa_h),
        }
    }
    Ok(())
}

/// `μ_D` from its definition through `κ` and `χ` does not depend on `κ` on `D_-`.
pub fn mu_d_kappa_invariance(case: &Case, rng: &mut impl Rng, count: usize) -> Check {
    let lat = lattice(case)?;
    let dminus = case.theta.dminus();
    for w in windows(case)? {
        let base = git_params(&case.theta, case.model.hf(), &w, &BTreeMap::new()).map_err(err)?;
        for _ in 0..count {
            let kappa: BTreeMap<Weight, Q> = dminus.iter().map(|&w| (w, q(rng.gen_range(1..=9), rng.gen_range(1..=9)))).collect();
            let p = git_params(&case.theta, case.model.hf(), &w, &kappa).map_err(err)?;
            for i in lat.proper_nonzero().chain([lat.full_index()]) {
                let hf = lat.get(i).hf();
                let got = p.mu_d_definition(hf).map_err(err)?;
                ensure!(
                    got == base.mu_d(hf).map_err(err)?,
                    "{}: μ_D({}) moves with κ",
                    case.name,
                    lat.get(i).label()
                );
            }
        }
    }
    Ok(())
}

/// `|μ_θ(Q) − μ_D(Q)| ≤ 2·S_D / r(Q)` for every lattice quotient `Q`.
pub fn slope_gap(case: &Case) -> Check {
    let lat = lattice(case)?;
    let dminus = case.theta.dminus();
    for w in windows(case)? {
        let p = git_params(&case.theta, case.model.hf(), &w, &BTreeMap::new()).map_err(err)?;
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                if !lat.lt(a, b) {
                    continue;
                }
                let hf = lat.get(b).hf().checked_sub(lat.get(a).hf()).map_err(err)?;
                let r = hf.r(&dminus);
                let mt = mu_theta(&hf, &case.theta, &dminus).map_err(err)?;
                let md = p.mu_d(&hf).map_err(err)?;
                ensure!(
                    (&mt - &md).abs() <= qi(2) * &p.s_d / qu(r),
                    "{}: |μ_θ − μ_D| = {} too large on {}/{}",
                    case.name,
                    rational::fmt(&(mt - md).abs()),
                    lat.get(b).label(),
                    lat.get(a).label()
                );
            }
        }
    }
    Ok(())
}

/// `hm(saturation of F') = −r(h)·r(F')·μ_D(F')`, and its sign is opposite to `μ_D(F') − μ_D(F)`.
pub fn hilbert_mumford(case: &Case, window: &DWindow) -> Check {
    let lat = lattice(case)?;
    let p = git_params(&case.theta, case.model.hf(), window, &BTreeMap::new()).map_err(err)?;
    let mu_full = p.mu_d(lat.full().hf()).map_err(err)?;
    for i in 0..lat.len() {
        let sub = lat.get(i);
        let hm = hm_weight(&case.model, &saturation_of(&case.model, &p.dminus, sub), &p).map_err(err)?;
        if lat.r(i) == 0 {
            ensure!(hm == qi(0), "{}: hm of the zero subspace is {}", case.name, rational::fmt(&hm));
            continue;
        }
        let md = p.mu_d(sub.hf()).map_err(err)?;
        ensure!(
            hm == -(qu(p.r_h) * qu(lat.r(i)) * &md),
            "{}: hm({}) = {} disagrees with μ_D = {}",
            case.name,
            sub.label(),
            rational::fmt(&hm),
            rational::fmt(&md)
        );
        ensure!(
            hm.signum() == (&mu_full - &md).signum(),
            "{}: sign of hm({}) does not match μ_D comparison",
            case.name,
            sub.label()
        );
    }
    Ok(())
}
