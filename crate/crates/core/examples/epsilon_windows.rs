//! Windows large enough that θ-HN terms survive in the D-HN filtration.

use constellation::rational;
use constellation::{builtin, enumerate_lattice, epsilon0, find_d_for_epsilon, hn, is_subfiltration, Slope, SlopeKind};

fn main() {
    for name in builtin::EXAMPLES {
        let model = builtin::model_for(name).unwrap();
        let theta = builtin::theta_for(name).unwrap();
        let lattice = enumerate_lattice(&model, &theta.dminus()).unwrap();
        let eps = epsilon0(&lattice, &theta);
        let (n, window) = find_d_for_epsilon(&theta, model.hf(), &eps).unwrap();
        let t = hn(&model, &theta, SlopeKind::Theta).unwrap();
        let d = hn(&model, &theta, SlopeKind::D(window)).unwrap();
        let v = is_subfiltration(&t, &d, &Slope::theta(&theta)).unwrap();
        println!(
            "{name}: epsilon0 = {:<5} N = {n:<3} theta terms at {:?} slope matching {}",
            rational::fmt(&eps),
            v.indices,
            v.slope_matching
        );
    }
}
