//! Random linear combinations generate the same submodules as monomials do.

use constellation::scheme::random_combination_check;
use constellation::{builtin, enumerate_lattice};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() {
    let model = builtin::thick_model();
    let theta = builtin::theta_ex44();
    let lattice = enumerate_lattice(&model, &theta.dminus()).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    let report = random_combination_check(&model, &lattice, &mut rng, 200, -4, 6);
    println!(
        "{} trials, {} landed on a lattice element, {} counterexamples",
        report.trials,
        report.collapsed,
        report.counterexamples.len()
    );
}
