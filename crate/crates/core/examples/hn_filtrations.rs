//! θ- and D-HN filtrations of C[x,y]/(xy) whose D-HN length keeps alternating.

use constellation::{builtin, hn, DWindow, SlopeKind};

fn main() {
    let model = builtin::axes_model();
    let theta = builtin::theta_ex43();
    let f = hn(&model, &theta, SlopeKind::Theta).unwrap();
    println!("theta: {}", f.describe());
    for n in 2..=8i64 {
        for (parity, half) in [("even", 2 * n + 2), ("odd", 2 * n + 3)] {
            let kind = SlopeKind::D(DWindow::interval(-half, half));
            let f = hn(&model, &theta, kind.clone()).unwrap();
            println!("{kind:<10} {parity:<4} length {}  {}", f.chain_length(), f.describe());
        }
    }
}
