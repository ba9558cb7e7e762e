//! Classifies O_X under θ-, μ_θ-, μ_D- and GIT-stability for each example.

use std::collections::BTreeMap;

use constellation::{builtin, stability_report, DWindow};

fn main() {
    for name in builtin::EXAMPLES {
        let model = builtin::model_for(name).unwrap();
        let theta = builtin::theta_for(name).unwrap();
        let report = stability_report(&model, &theta, &DWindow::symmetric(6), &BTreeMap::new()).unwrap();
        let f = report.flags;
        println!(
            "{name}: mu_theta {}  mu_D {}  GIT {}  arrows consistent: {}",
            verdict(f.mu_theta_stable, f.mu_theta_semistable),
            verdict(f.mu_d_stable, f.mu_d_semistable),
            verdict(f.git_stable, f.git_semistable),
            report.is_consistent()
        );
        for (flag, subs) in &report.witnesses {
            let labels: Vec<String> = subs
                .iter()
                .map(|g| format!("({})", g.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            println!("    {flag:<20} fails on {}", labels.join(" "));
        }
    }
}

fn verdict(stable: bool, semistable: bool) -> &'static str {
    match (stable, semistable) {
        (true, _) => "stable",
        (false, true) => "strictly semistable",
        _ => "unstable",
    }
}
