mod common;

use constellation::enumerate_lattice;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_cases_are_admissible() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for case in common::random_cases(&mut rng, 50) {
        assert!(case.theta.validate(case.model.hf()).is_valid(), "{}", case.name);
        let lat = enumerate_lattice(&case.model, &case.theta.dminus()).unwrap();
        println!("{} |lattice| = {}", case.name, lat.len());
    }
}
