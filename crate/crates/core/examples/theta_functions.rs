//! Builds a stability function with geometric tails and checks it against a model.

use constellation::rational::{self, q, qi};
use constellation::{builtin, tail_sum, Direction, StabilityFunction, TailSpec, Weight};

fn main() {
    let theta = StabilityFunction::new(
        [(Weight(0), qi(-1)), (Weight(1), qi(-1))],
        TailSpec::geometric(Direction::Left, -3, q(1, 2), q(1, 2)).unwrap(),
        TailSpec::geometric(Direction::Right, 2, q(1, 2), q(1, 2)).unwrap(),
    )
    .unwrap();
    for w in -5..=5 {
        println!("theta_{w:<3} = {}", rational::fmt(&theta.at(w)));
    }
    let right = theta.right_tail();
    for n in [2, 5, 10] {
        println!("right tail beyond {n}: {}", rational::fmt(&tail_sum(right, Weight(n))));
    }

    let model = builtin::axes_model();
    let check = theta.validate(model.hf());
    println!("admissible on C[x,y]/(xy): {}", check.is_valid());
    println!("<theta, h> = {}", rational::fmt(&theta.dot(model.hf())));

    let broken = theta.with_value(0, qi(-2));
    println!("after setting theta_0 = -2: {:?}", broken.validate(model.hf()).into_result().err());
}
