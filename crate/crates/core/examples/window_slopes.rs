//! μ_D of the ideal (x) in C[x,y]/(xy) as the window [-N, N] grows.

use constellation::rational::{self, half_pow, qi, qu};
use constellation::{builtin, mu_d, mu_theta, submodule_from_generators, DWindow, Monomial};

fn main() {
    let model = builtin::axes_model();
    let theta = builtin::theta_ex41();
    let dminus = theta.dminus();
    let i1 = submodule_from_generators(&model, &[Monomial::new(1, 0)], &dminus).unwrap();
    println!("mu_theta(I_1) = {}", rational::fmt(&mu_theta(i1.hf(), &theta, &dminus).unwrap()));
    for n in 3..=12u64 {
        let window = DWindow::symmetric(n);
        let slope = mu_d(i1.hf(), &theta, model.hf(), &window).unwrap();
        let closed = half_pow(n - 1) * (qi(2) - qu(n)) / qu(2 * n - 1);
        println!("N = {n:<2} mu_D(I_1) = {:<12} closed form agrees: {}", rational::fmt(&slope), slope == closed);
    }
}
