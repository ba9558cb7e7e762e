//! Both Jordan–Hölder filtrations of the first θ-HN factor of C[x,y]/(xy², x³y).

use constellation::{builtin, enumerate_lattice, hn_in, jh_all, Slope};

fn main() {
    let model = builtin::thick_model();
    let theta = builtin::theta_ex44();
    let lattice = enumerate_lattice(&model, &theta.dminus()).unwrap();
    let slope = Slope::theta(&theta);
    let hn = hn_in(&lattice, &slope).unwrap();
    println!("theta-HN: {}", hn.describe());
    let first = lattice.index_of(&hn.terms[0].submodule).unwrap();
    for f in jh_all(&lattice, &slope, lattice.zero_index(), first).unwrap() {
        println!("JH: {}", f.describe());
    }
}
