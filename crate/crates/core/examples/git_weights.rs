//! GIT parameters for a window and the Hilbert–Mumford weight of each saturated subspace.

use std::collections::BTreeMap;

use constellation::rational::{self, qu};
use constellation::stability::saturation_of;
use constellation::{builtin, enumerate_lattice, git_params, hm_weight, DWindow};

fn main() {
    let model = builtin::thick_model();
    let theta = builtin::theta_ex44();
    let window = DWindow::symmetric(5);
    let params = git_params(&theta, model.hf(), &window, &BTreeMap::new()).unwrap();
    println!("{}", serde_json::to_string_pretty(&params).unwrap());

    let lattice = enumerate_lattice(&model, &params.dminus).unwrap();
    for (i, sub) in lattice.elements().iter().enumerate() {
        let a = saturation_of(&model, &params.dminus, sub);
        let hm = hm_weight(&model, &a, &params).unwrap();
        let rhs = if lattice.r(i) == 0 {
            qu(0)
        } else {
            -(qu(params.r_h) * qu(lattice.r(i)) * params.mu_d(sub.hf()).unwrap())
        };
        println!("{:<12} dims {:?}  hm = {:<14} -r(h) r mu_D = {}", sub.label(), a.dims().iter().map(|d| d.1).collect::<Vec<_>>(), rational::fmt(&hm), rational::fmt(&rhs));
    }
}
