//! Run configuration: JSON input, builtin example configs and CLI overrides.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::builtin;
use crate::error::{Error, Result};
use crate::hilbert::Weight;
use crate::rational::{self, Q};
use crate::scheme::{ConstellationModel, Monomial};
use crate::stability::DWindow;
use crate::theta::StabilityFunction;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    #[default]
    Report,
    Hn,
    Sweep,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Emit {
    #[default]
    Json,
    Svg,
    Text,
}

/// Which slopes `hn` computes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlopeChoice {
    #[serde(rename = "theta")]
    Theta,
    #[serde(rename = "D")]
    D,
    #[default]
    #[serde(rename = "both")]
    Both,
}

impl SlopeChoice {
    pub fn theta(self) -> bool {
        self != SlopeChoice::D
    }

    pub fn d(self) -> bool {
        self != SlopeChoice::Theta
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub ideal: Vec<Monomial>,
    pub weights: (i64, i64),
}

/// `{"N": k}`, `{"set": [..]}` or `{"sweep": {"from": a, "to": b}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowSpec {
    N(u64),
    #[serde(rename = "set")]
    Set(Vec<i64>),
    #[serde(rename = "sweep")]
    Sweep { from: u64, to: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub theta: StabilityFunction,
    pub window: WindowSpec,
    #[serde(default, with = "rational::serde_q_map", skip_serializing_if = "BTreeMap::is_empty")]
    pub kappa_neg: BTreeMap<Weight, Q>,
    #[serde(default)]
    pub command: Command,
    #[serde(default)]
    pub slope: SlopeChoice,
    #[serde(default)]
    pub emit: Emit,
}

impl RunConfig {
    /// Parses JSON, locating any failure by its path in the document.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::config(path, e.into_inner().to_string())
        })?;
        cfg.check()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// The configuration of a builtin example.
    pub fn builtin(name: &str) -> Result<Self> {
        let (model, theta) = builtin::model_for(name)
            .zip(builtin::theta_for(name))
            .ok_or_else(|| {
                Error::config("example", format!("unknown example `{name}`; expected one of {}", builtin::EXAMPLES.join(", ")))
            })?;
        let n = match name {
            "ex4.1" => 3,
            "ex4.2" => 4,
            "ex4.3" => 6,
            _ => 10,
        };
        Ok(RunConfig {
            model: ModelSpec {
                ideal: model.ideal().generators().to_vec(),
                weights: model.weights(),
            },
            theta,
            window: WindowSpec::N(n),
            kappa_neg: BTreeMap::new(),
            command: Command::Report,
            slope: SlopeChoice::Both,
            emit: Emit::Json,
        })
    }

    fn check(&self) -> Result<()> {
        if self.model.ideal.is_empty() {
            return Err(Error::config("model.ideal", "the ideal needs at least one generator"));
        }
        if let WindowSpec::Sweep { from, to } = self.window {
            if from > to {
                return Err(Error::config("window.sweep", format!("empty range {from}..{to}")));
            }
        }
        if let WindowSpec::Set(ws) = &self.window {
            if ws.is_empty() {
                return Err(Error::config("window.set", "the window is empty"));
            }
        }
        Ok(())
    }

    pub fn build_model(&self) -> Result<ConstellationModel> {
        ConstellationModel::build(self.model.ideal.clone(), self.model.weights)
    }

    /// The single window of a report or HN run.
    pub fn window(&self, model: &ConstellationModel) -> Result<DWindow> {
        match &self.window {
            WindowSpec::N(n) => Ok(DWindow::symmetric(*n).clip_to_support(model.hf())),
            WindowSpec::Set(ws) => Ok(DWindow::from_weights(ws.iter().map(|w| Weight(*w)))),
            WindowSpec::Sweep { .. } => Err(Error::config("window", "a single window is needed here, not a sweep range")),
        }
    }

    /// The half-width range of a sweep; a single `N` sweeps one window.
    pub fn sweep_range(&self) -> Result<(u64, u64)> {
        match self.window {
            WindowSpec::N(n) => Ok((n, n)),
            WindowSpec::Sweep { from, to } => Ok((from, to)),
            WindowSpec::Set(_) => Err(Error::config("window", "sweeps need `N` or a `sweep` range, not a weight set")),
        }
    }

    /// Applies `--N`, `--N-from`/`--N-to`, `--slope` and `--emit`.
    pub fn with_overrides(
        mut self,
        n: Option<u64>,
        range: (Option<u64>, Option<u64>),
        slope: Option<SlopeChoice>,
        emit: Option<Emit>,
    ) -> Result<Self> {
        match (n, range) {
            (Some(_), (Some(_), _) | (_, Some(_))) => {
                return Err(Error::config("--N", "give either --N or --N-from/--N-to"))
            }
            (Some(n), _) => self.window = WindowSpec::N(n),
            (None, (Some(from), Some(to))) => self.window = WindowSpec::Sweep { from, to },
            (None, (Some(_), None)) => return Err(Error::config("--N-to", "missing upper end of the sweep")),
            (None, (None, Some(_))) => return Err(Error::config("--N-from", "missing lower end of the sweep")),
            (None, (None, None)) => {}
        }
        if let Some(s) = slope {
            self.slope = s;
        }
        if let Some(e) = emit {
            self.emit = e;
        }
        self.check()?;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    const AXES: &str = r#"{
        "model": {"ideal": [[1, 1]], "weights": [1, -1]},
        "theta": {
            "exceptional": [[0, "-1/1"], [1, "-1/1"]],
            "left_tail": {"direction": "left", "start": -1, "period": 1, "base": ["0/1"], "ratio": "0/1"},
            "right_tail": {"direction": "right", "start": 2, "period": 1, "base": ["1/1"], "ratio": "1/2"}
        },
        "window": {"N": 4},
        "kappa_neg": {"0": "2/1"}
    }"#;

    #[test]
    fn parses_with_defaults() {
        let cfg = RunConfig::from_json(AXES).unwrap();
        assert_eq!(cfg.window, WindowSpec::N(4));
        assert_eq!(cfg.kappa_neg[&Weight(0)], qi(2));
        assert_eq!(cfg.command, Command::Report);
        assert_eq!(cfg.slope, SlopeChoice::Both);
        assert_eq!(cfg.build_model().unwrap().hf().value(Weight(3)), 1);
    }

    #[test]
    fn empty_ideal_is_located() {
        let text = AXES.replace("[[1, 1]]", "[]");
        match RunConfig::from_json(&text) {
            Err(Error::Config { path, .. }) => assert_eq!(path, "model.ideal"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_paths() {
        let text = AXES.replace(r#"["0/1"], "ratio": "0/1""#, r#"["zero"], "ratio": "0/1""#);
        match RunConfig::from_json(&text) {
            Err(Error::Config { path, .. }) => assert_eq!(path, "theta.left_tail.base"),
            other => panic!("{other:?}"),
        }
        let text = AXES.replace(r#""weights": [1, -1]"#, r#""weights": [1]"#);
        match RunConfig::from_json(&text) {
            Err(Error::Config { path, .. }) => assert_eq!(path, "model.weights"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn builtins_round_trip() {
        for name in builtin::EXAMPLES {
            let cfg = RunConfig::builtin(name).unwrap();
            assert_eq!(RunConfig::from_json(&cfg.to_json()).unwrap(), cfg, "{name}");
        }
        assert!(matches!(RunConfig::builtin("ex9"), Err(Error::Config { .. })));
    }

    #[test]
    fn overrides() {
        let cfg = RunConfig::builtin("ex4.2").unwrap();
        let swept = cfg.clone().with_overrides(None, (Some(2), Some(10)), None, Some(Emit::Text)).unwrap();
        assert_eq!(swept.window, WindowSpec::Sweep { from: 2, to: 10 });
        assert_eq!(swept.sweep_range().unwrap(), (2, 10));
        assert_eq!(swept.emit, Emit::Text);
        assert!(cfg.clone().with_overrides(Some(3), (Some(2), None), None, None).is_err());
        assert!(cfg.with_overrides(None, (Some(5), Some(2)), None, None).is_err());
    }
}
