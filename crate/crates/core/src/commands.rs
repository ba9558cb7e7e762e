//! The `report`, `hn` and `sweep` commands and their JSON, SVG and text renderings.

use std::fmt::Write;

use serde::Serialize;

use crate::config::{Command, Emit, RunConfig};
use crate::error::{Error, Result};
use crate::filtration::{
    convergence_sweep, hn_in, is_subfiltration, polygon, polygon_distance, Filtration, Polygon, Slope, SlopeKind,
    Subfiltration, SweepTable,
};
use crate::hilbert::HilbertFunction;
use crate::rational;
use crate::scheme::{enumerate_lattice, Monomial};
use crate::stability::{classify, git_params, hm_weight, mu_theta, saturation_of, DWindow, GitParams, StabilityReport};
use crate::svg;

/// Slopes and weights of one lattice element.
#[derive(Clone, Debug, Serialize)]
pub struct SubmoduleEntry {
    pub generators: Vec<Monomial>,
    pub label: String,
    pub r: u64,
    pub proper: bool,
    pub hf: HilbertFunction,
    pub theta: String,
    pub mu_theta: Option<String>,
    pub mu_d: Option<String>,
    pub hm_weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportOutput {
    pub window: DWindow,
    pub git: GitParams,
    pub classification: StabilityReport,
    pub submodules: Vec<SubmoduleEntry>,
}

pub fn cmd_report(cfg: &RunConfig) -> Result<ReportOutput> {
    let model = cfg.build_model()?;
    cfg.theta.validate(model.hf()).into_result()?;
    let window = cfg.window(&model)?;
    let dminus = cfg.theta.dminus();
    let lattice = enumerate_lattice(&model, &dminus)?;
    let git = git_params(&cfg.theta, model.hf(), &window, &cfg.kappa_neg)?;
    let classification = classify(&model, &cfg.theta, &lattice, &git)?;
    let mut submodules = Vec::with_capacity(lattice.len());
    for (i, sub) in lattice.elements().iter().enumerate() {
        let r = lattice.r(i);
        let slopes = r > 0;
        submodules.push(SubmoduleEntry {
            generators: sub.generators().to_vec(),
            label: sub.label(),
            r,
            proper: i != lattice.full_index() && i != lattice.zero_index(),
            hf: sub.hf().clone(),
            theta: rational::fmt(&cfg.theta.dot(sub.hf())),
            mu_theta: slopes
                .then(|| mu_theta(sub.hf(), &cfg.theta, &dminus).map(|s| rational::fmt(&s)))
                .transpose()?,
            mu_d: slopes.then(|| git.mu_d(sub.hf()).map(|s| rational::fmt(&s))).transpose()?,
            hm_weight: rational::fmt(&hm_weight(&model, &saturation_of(&model, &dminus, sub), &git)?),
        });
    }
    Ok(ReportOutput {
        window,
        git,
        classification,
        submodules,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HnEntry {
    pub filtration: Filtration,
    pub chain_length: usize,
    pub polygon: Polygon,
}

impl HnEntry {
    fn new(filtration: Filtration) -> Result<Self> {
        Ok(HnEntry {
            chain_length: filtration.chain_length(),
            polygon: polygon(&filtration)?,
            filtration,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HnOutput {
    pub theta: Option<HnEntry>,
    #[serde(rename = "D")]
    pub d: Option<HnEntry>,
    /// Where the θ-HN terms sit inside the D-HN filtration.
    pub subfiltration: Option<Subfiltration>,
    pub distance: Option<String>,
}

pub fn cmd_hn(cfg: &RunConfig) -> Result<HnOutput> {
    let model = cfg.build_model()?;
    cfg.theta.validate(model.hf()).into_result()?;
    let lattice = enumerate_lattice(&model, &cfg.theta.dminus())?;
    let theta_slope = Slope::theta(&cfg.theta);
    let theta = if cfg.slope.theta() {
        Some(HnEntry::new(hn_in(&lattice, &theta_slope)?)?)
    } else {
        None
    };
    let d = if cfg.slope.d() {
        let kind = SlopeKind::D(cfg.window(&model)?);
        let slope = Slope::new(kind, &cfg.theta, model.hf(), &cfg.kappa_neg)?;
        Some(HnEntry::new(hn_in(&lattice, &slope)?)?)
    } else {
        None
    };
    let (subfiltration, distance) = match (&theta, &d) {
        (Some(t), Some(d)) => (
            Some(is_subfiltration(&t.filtration, &d.filtration, &theta_slope)?),
            Some(rational::fmt(&polygon_distance(&t.polygon, &d.polygon)?)),
        ),
        _ => (None, None),
    };
    Ok(HnOutput {
        theta,
        d,
        subfiltration,
        distance,
    })
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<SweepTable> {
    let model = cfg.build_model()?;
    let (from, to) = cfg.sweep_range()?;
    convergence_sweep(&model, &cfg.theta, from, to, &cfg.kappa_neg)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn filtration_text(out: &mut String, name: &str, e: &HnEntry) {
    let _ = writeln!(out, "{name}-HN: {}", e.filtration.describe());
    for t in &e.filtration.terms {
        let _ = writeln!(
            out,
            "  {:<14} r = {:<3} slope = {:<16} factor slope = {}",
            t.submodule.label(),
            t.r,
            rational::fmt(&t.slope),
            rational::fmt(&t.factor_slope)
        );
    }
}

fn report_text(r: &ReportOutput) -> String {
    let mut out = String::new();
    let c = &r.classification;
    let _ = writeln!(
        out,
        "window {}  S_D = {}  d = {}  r(h) = {}",
        SlopeKind::D(r.window.clone()),
        rational::fmt(&r.git.s_d),
        r.git.d,
        r.git.r_h
    );
    let f = &c.flags;
    for (name, v) in [
        ("theta-stable", f.theta_stable),
        ("theta-semistable", f.theta_semistable),
        ("mu_theta-stable", f.mu_theta_stable),
        ("mu_theta-semistable", f.mu_theta_semistable),
        ("mu_D-stable", f.mu_d_stable),
        ("mu_D-semistable", f.mu_d_semistable),
        ("GIT-stable", f.git_stable),
        ("GIT-semistable", f.git_semistable),
    ] {
        let _ = writeln!(out, "  {name:<20} {v}");
    }
    let _ = writeln!(out, "submodules:");
    for s in &r.submodules {
        let _ = writeln!(
            out,
            "  {:<14} r = {:<3} mu_theta = {:<10} mu_D = {:<24} hm = {}",
            s.label,
            s.r,
            s.mu_theta.as_deref().unwrap_or("-"),
            s.mu_d.as_deref().unwrap_or("-"),
            s.hm_weight
        );
    }
    out
}

fn hn_text(h: &HnOutput) -> String {
    let mut out = String::new();
    if let Some(t) = &h.theta {
        filtration_text(&mut out, "theta", t);
    }
    if let Some(d) = &h.d {
        filtration_text(&mut out, &d.filtration.kind.to_string(), d);
    }
    if let (Some(s), Some(dist)) = (&h.subfiltration, &h.distance) {
        let _ = writeln!(out, "theta terms in D-HN: {} at {:?}", s.is_sub, s.indices);
        let _ = writeln!(out, "polygon distance: {dist}");
    }
    out
}

fn sweep_text(t: &SweepTable) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theta-HN: {}  epsilon0 = {}  N_epsilon = {}",
        t.theta_filtration.describe(),
        rational::fmt(&t.epsilon0),
        t.n_epsilon
    );
    for r in &t.rows {
        let _ = writeln!(
            out,
            "N = {:<3} length {}  distance {:<24} {}",
            r.n,
            r.filtration.chain_length(),
            rational::fmt(&r.distance),
            r.filtration.describe()
        );
    }
    out
}

/// Runs `command` and renders the result in the configured format.
pub fn run(cfg: &RunConfig, command: Command) -> Result<String> {
    match command {
        Command::Report => {
            let r = cmd_report(cfg)?;
            match cfg.emit {
                Emit::Json => Ok(json(&r)),
                Emit::Text => Ok(report_text(&r)),
                Emit::Svg => Err(Error::config("emit", "svg output is available for hn and sweep")),
            }
        }
        Command::Hn => {
            let h = cmd_hn(cfg)?;
            match cfg.emit {
                Emit::Json => Ok(json(&h)),
                Emit::Text => Ok(hn_text(&h)),
                Emit::Svg => {
                    let d: Vec<(String, &Polygon)> = h
                        .d
                        .iter()
                        .map(|e| (e.filtration.kind.to_string(), &e.polygon))
                        .collect();
                    Ok(svg::render(h.theta.as_ref().map(|e| &e.polygon), &d))
                }
            }
        }
        Command::Sweep => {
            let t = cmd_sweep(cfg)?;
            match cfg.emit {
                Emit::Json => Ok(json(&t)),
                Emit::Text => Ok(sweep_text(&t)),
                Emit::Svg => {
                    let d: Vec<(String, &Polygon)> = t
                        .rows
                        .iter()
                        .map(|r| (format!("N={}", r.n), &r.polygon))
                        .collect();
                    Ok(svg::render(Some(&t.theta_polygon), &d))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{SlopeChoice, WindowSpec};

    fn cfg(name: &str) -> RunConfig {
        RunConfig::builtin(name).unwrap()
    }

    #[test]
    fn ex41_report_has_d_slope() {
        let r = cmd_report(&cfg("ex4.1")).unwrap();
        let i1 = r.submodules.iter().find(|s| s.label == "(x)").unwrap();
        assert_eq!(i1.mu_d.as_deref(), Some("-1/20"));
        assert_eq!(i1.theta, "0/1");
    }

    #[test]
    fn ex44_report_lists_five_proper() {
        let r = cmd_report(&cfg("ex4.4")).unwrap();
        let mut rs: Vec<u64> = r.submodules.iter().filter(|s| s.proper).map(|s| s.r).collect();
        rs.sort();
        assert_eq!(rs, vec![1, 2, 2, 3, 4]);
    }

    #[test]
    fn ex43_chain_lengths() {
        let mut c = cfg("ex4.3");
        c.window = WindowSpec::N(6);
        assert_eq!(cmd_hn(&c).unwrap().d.unwrap().chain_length, 4);
        c.window = WindowSpec::N(7);
        assert_eq!(cmd_hn(&c).unwrap().d.unwrap().chain_length, 3);
    }

    #[test]
    fn semistable_theta_hn_is_one_step() {
        let mut c = cfg("ex4.2");
        c.slope = SlopeChoice::Theta;
        let h = cmd_hn(&c).unwrap();
        assert_eq!(h.theta.unwrap().chain_length, 2);
        assert!(h.d.is_none() && h.subfiltration.is_none());
    }

    #[test]
    fn output_is_deterministic() {
        for cmd in [Command::Report, Command::Hn, Command::Sweep] {
            for emit in [Emit::Json, Emit::Text] {
                let mut c = cfg("ex4.4");
                c.emit = emit;
                assert_eq!(run(&c, cmd).unwrap(), run(&c, cmd).unwrap());
            }
        }
    }

    #[test]
    fn svg_of_ex44_has_theta_vertex() {
        let mut c = cfg("ex4.4");
        c.emit = Emit::Svg;
        let s = run(&c, Command::Sweep).unwrap();
        assert!(s.contains(r#"data-exact="0:0/1 4:4/1 5:0/1""#));
        assert!(matches!(run(&c, Command::Report), Err(Error::Config { .. })));
    }
}
