use serde::Serialize;

use super::{Filtration, Slope};
use crate::error::Result;
use crate::hilbert::HilbertFunction;

/// Whether every term of one filtration occurs in another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subfiltration {
    pub is_sub: bool,
    /// 1-based positions in the outer filtration, one per inner term.
    pub indices: Vec<usize>,
    /// Each outer term between consecutive matched positions has the
    /// factor slope of the corresponding inner step.
    pub slope_matching: bool,
}

/// Compares term sets and checks slope matching under `slope`.
pub fn is_subfiltration(inner: &Filtration, outer: &Filtration, slope: &Slope) -> Result<Subfiltration> {
    let mut indices = Vec::with_capacity(inner.terms.len());
    for t in &inner.terms {
        match outer.terms.iter().position(|o| o.submodule == t.submodule) {
            Some(i) => indices.push(i + 1),
            None => {
                return Ok(Subfiltration {
                    is_sub: false,
                    indices,
                    slope_matching: false,
                })
            }
        }
    }
    let zero = HilbertFunction::zero();
    let outer_hf = |i: usize| if i == 0 { &zero } else { outer.terms[i - 1].hf() };
    let mut slope_matching = indices.windows(2).all(|w| w[0] < w[1]);
    let mut prev = 0;
    for (j, &i) in indices.iter().enumerate() {
        if !slope_matching {
            break;
        }
        let lower = if j == 0 { &zero } else { inner.terms[j - 1].hf() };
        let target = slope.eval(&inner.terms[j].hf().checked_sub(lower)?)?;
        for k in prev + 1..=i {
            if slope.eval(&outer_hf(k).checked_sub(outer_hf(prev))?)? != target {
                slope_matching = false;
                break;
            }
        }
        prev = i;
    }
    Ok(Subfiltration {
        is_sub: true,
        indices,
        slope_matching,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::filtration::{hn, SlopeKind};
    use crate::stability::DWindow;

    #[test]
    fn ex44_theta_terms_sit_in_d_filtration() {
        let model = builtin::thick_model();
        let theta = builtin::theta_ex44();
        let t = hn(&model, &theta, SlopeKind::Theta).unwrap();
        let d = hn(&model, &theta, SlopeKind::D(DWindow::symmetric(10))).unwrap();
        let v = is_subfiltration(&t, &d, &Slope::theta(&theta)).unwrap();
        assert!(v.is_sub && v.slope_matching);
        assert_eq!(v.indices, vec![2, 3]);
        let v = is_subfiltration(&d, &t, &Slope::theta(&theta)).unwrap();
        assert!(!v.is_sub);
    }

    #[test]
    fn self_comparison_is_identity() {
        let model = builtin::thick_model();
        let theta = builtin::theta_ex44();
        let d = hn(&model, &theta, SlopeKind::D(DWindow::symmetric(10))).unwrap();
        let v = is_subfiltration(&d, &d, &Slope::theta(&theta)).unwrap();
        assert!(v.is_sub);
        assert_eq!(v.indices, vec![1, 2, 3]);
    }

    #[test]
    fn ex43_odd_terms_sit_in_even_terms() {
        let model = builtin::axes_model();
        let theta = builtin::theta_ex43();
        let even = hn(&model, &theta, SlopeKind::D(DWindow::interval(-6, 6))).unwrap();
        let odd = hn(&model, &theta, SlopeKind::D(DWindow::interval(-7, 7))).unwrap();
        assert_eq!(even.chain_length(), 4);
        assert_eq!(odd.chain_length(), 3);
        assert!(is_subfiltration(&odd, &even, &Slope::theta(&theta)).unwrap().is_sub);
        assert!(!is_subfiltration(&even, &odd, &Slope::theta(&theta)).unwrap().is_sub);
    }
}
