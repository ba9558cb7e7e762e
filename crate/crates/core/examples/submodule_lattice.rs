//! Enumerates the submodules of O_X generated in D_- for C[x,y]/(xy², x³y).

use constellation::{builtin, enumerate_lattice, mu_theta};

fn main() {
    let model = builtin::thick_model();
    let theta = builtin::theta_ex44();
    println!("h = {}", model.hf());
    let dminus = theta.dminus();
    let lattice = enumerate_lattice(&model, &dminus).unwrap();
    println!("{} submodules, longest chain {}", lattice.len(), lattice.height());
    for (i, sub) in lattice.elements().iter().enumerate() {
        let slope = mu_theta(sub.hf(), &theta, &dminus)
            .map(|s| s.to_string())
            .unwrap_or_else(|_| "-".into());
        println!("  {:<12} r = {}  mu_theta = {:<4} hf = {}", sub.label(), lattice.r(i), slope, sub.hf());
    }
}
