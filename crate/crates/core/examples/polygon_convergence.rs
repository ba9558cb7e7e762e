//! D-polygons approaching the θ-polygon; writes an SVG overlay.

use std::collections::BTreeMap;

use constellation::rational;
use constellation::svg;
use constellation::{builtin, convergence_sweep};

fn main() {
    let model = builtin::axes_model();
    let theta = builtin::theta_ex42();
    let table = convergence_sweep(&model, &theta, 2, 12, &BTreeMap::new()).unwrap();
    println!("theta-polygon {}", serde_json::to_string(&table.theta_polygon).unwrap());
    for row in &table.rows {
        println!("N = {:<2} distance {}", row.n, rational::fmt(&row.distance));
    }
    let d: Vec<_> = table.rows.iter().take(4).map(|r| (format!("N={}", r.n), &r.polygon)).collect();
    let path = std::env::temp_dir().join("polygons.svg");
    std::fs::write(&path, svg::render(Some(&table.theta_polygon), &d)).unwrap();
    println!("wrote {}", path.display());
}
