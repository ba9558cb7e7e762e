//! Runs the hn command from a JSON configuration.

use constellation::commands::run;
use constellation::{Command, RunConfig};

const CONFIG: &str = r#"{
    "model": {"ideal": [[1, 1]], "weights": [1, -1]},
    "theta": {
        "exceptional": [[-1, "1/1"], [0, "-1/1"], [1, "-1/1"]],
        "left_tail": {"direction": "left", "start": -2, "period": 1, "base": ["0/1"], "ratio": "0/1"},
        "right_tail": {"direction": "right", "start": 2, "period": 1, "base": ["1/2"], "ratio": "1/2"}
    },
    "window": {"N": 5},
    "emit": "text"
}"#;

fn main() {
    let cfg = RunConfig::from_json(CONFIG).unwrap();
    print!("{}", run(&cfg, Command::Hn).unwrap());
    match RunConfig::from_json(&CONFIG.replace("[[1, 1]]", "[]")) {
        Err(e) => println!("{e} (exit {})", e.exit_code()),
        Ok(_) => unreachable!(),
    }
}
