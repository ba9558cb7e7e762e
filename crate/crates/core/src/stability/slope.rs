use std::collections::BTreeMap;

use super::git::git_params;
use super::window::DWindow;
use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::rational::{qu, Q};
use crate::theta::{DMinus, StabilityFunction};

/// `μ_θ(h') = −⟨θ, h'⟩ / r(h')`.
pub fn mu_theta(hf: &HilbertFunction, theta: &StabilityFunction, dminus: &DMinus) -> Result<Q> {
    match hf.r(dminus) {
        0 => Err(Error::Domain(
            "slope undefined: the negative part is zero".into(),
        )),
        r => Ok(-theta.dot(hf) / qu(r)),
    }
}

/// `μ_D(h')` for the window `D`, with `h` the ambient Hilbert function.
pub fn mu_d(
    hf: &HilbertFunction,
    theta: &StabilityFunction,
    h: &HilbertFunction,
    window: &DWindow,
) -> Result<Q> {
    if !hf.le(h) {
        return Err(Error::Domain(
            "the Hilbert function is not bounded by the ambient one".into(),
        ));
    }
    git_params(theta, h, window, &BTreeMap::new())?.mu_d(hf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::rational::{half_pow, q, qi};

    #[test]
    fn theta_slopes_of_examples() {
        let t = builtin::theta_ex43();
        let d = t.dminus();
        assert_eq!(mu_theta(&HilbertFunction::indicator_at_least(2), &t, &d).unwrap(), qi(1));
        assert_eq!(mu_theta(&HilbertFunction::indicator_at_least(1), &t, &d).unwrap(), qi(1));
        assert_eq!(mu_theta(&HilbertFunction::constant(1), &t, &d).unwrap(), qi(0));
        assert!(mu_theta(&HilbertFunction::delta(-3), &t, &d).is_err());
    }

    #[test]
    fn d_slopes_match_closed_forms() {
        let one = HilbertFunction::constant(1);
        let i1 = HilbertFunction::indicator_at_least(1);
        for n in 3..=12u64 {
            let w = DWindow::symmetric(n);
            let ni = n as i64;
            let want41 = half_pow(n - 1) * q(2 - ni, 2 * ni - 1);
            assert_eq!(mu_d(&i1, &builtin::theta_ex41(), &one, &w).unwrap(), want41);
            let want42 = half_pow(n - 1) * q(ni, 2 * ni - 1);
            assert_eq!(mu_d(&i1, &builtin::theta_ex42(), &one, &w).unwrap(), want42);
        }
    }

    #[test]
    fn full_module_has_zero_d_slope() {
        let h = builtin::h_ex44();
        for n in 3..8 {
            assert_eq!(mu_d(&h, &builtin::theta_ex44(), &h, &DWindow::symmetric(n)).unwrap(), qi(0));
        }
        let f1 = HilbertFunction::delta(1);
        assert_eq!(mu_d(&f1, &builtin::theta_ex44(), &h, &DWindow::symmetric(5)).unwrap(), qi(1));
        assert!(mu_d(&HilbertFunction::constant(3), &builtin::theta_ex44(), &h, &DWindow::symmetric(5)).is_err());
    }
}
