//! Cohomology of line bundles on F via the Künneth formula, and the
//! predicates built from it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::chow::{Coeff, DivisorClass};

/// `(h⁰, h¹, h², h³)` of a line bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyVector {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub h3: u64,
}

impl CohomologyVector {
    pub fn as_array(&self) -> [u64; 4] {
        [self.h0, self.h1, self.h2, self.h3]
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.h0 as i128 - self.h1 as i128 + self.h2 as i128 - self.h3 as i128
    }
}

/// `h^i(P1, O(d))`.
///
/// # Panics
/// If `i > 1`.
pub fn h_p1(i: usize, d: Coeff) -> u64 {
    match i {
        0 if d >= 0 => d as u64 + 1,
        1 if d <= -2 => d.unsigned_abs() - 1,
        0 | 1 => 0,
        _ => panic!("h^{i}(P1, O(d)) requested; only i = 0, 1 exist"),
    }
}

/// `h^i(F, O_F(D))` as the convolution of the factorwise dimensions.
///
/// # Panics
/// If `i > 3`, or if the dimension does not fit in a `u64`.
pub fn kunneth_h(i: usize, d: &DivisorClass) -> u64 {
    assert!(i <= 3, "h^{i} requested on a threefold");
    let mut total: u64 = 0;
    for i1 in 0..=1 {
        for i2 in 0..=1 {
            let Some(i3) = i.checked_sub(i1 + i2) else {
                continue;
            };
            if i3 > 1 {
                continue;
            }
            let term = h_p1(i1, d[0])
                .checked_mul(h_p1(i2, d[1]))
                .and_then(|x| x.checked_mul(h_p1(i3, d[2])))
                .and_then(|x| total.checked_add(x));
            total = term.expect("cohomology dimension overflows u64");
        }
    }
    total
}

pub fn cohomology(d: &DivisorClass) -> CohomologyVector {
    CohomologyVector {
        h0: kunneth_h(0, d),
        h1: kunneth_h(1, d),
        h2: kunneth_h(2, d),
        h3: kunneth_h(3, d),
    }
}

/// Twists `t` outside this window give vanishing h¹ and h² for `O(D + th)`:
/// a nonzero intermediate Künneth term needs one factor at most −2 and
/// another at least 0.
pub fn acm_window(d: &DivisorClass) -> (Coeff, Coeff) {
    (-d.max_coeff() - 2, -d.min_coeff() + 2)
}

pub fn is_acm_line(d: &DivisorClass) -> bool {
    let (lo, hi) = acm_window(d);
    is_acm_line_over(d, lo, hi)
}

/// The aCM test restricted to twists `lo ..= hi`.
pub fn is_acm_line_over(d: &DivisorClass, lo: Coeff, hi: Coeff) -> bool {
    (lo..=hi).all(|t| {
        let twisted = d.twist_by_hyperplane(t).expect("twist within i64 range");
        kunneth_h(1, &twisted) == 0 && kunneth_h(2, &twisted) == 0
    })
}

pub fn is_initialized_line(d: &DivisorClass) -> bool {
    let closed_form = d.is_effective() && d.min_coeff() == 0;
    debug_assert_eq!(
        closed_form,
        kunneth_h(0, d) > 0 && kunneth_h(0, &d.twist_by_hyperplane(-1).unwrap()) == 0
    );
    closed_form
}

/// Initialized aCM line bundles whose coefficients are at most `bound`.
pub fn initialized_acm_line_bundles_within(bound: Coeff) -> BTreeSet<DivisorClass> {
    let mut out = BTreeSet::new();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let d = DivisorClass::new(a, b, c);
                if is_initialized_line(&d) && is_acm_line(&d) {
                    out.insert(d);
                }
            }
        }
    }
    out
}

/// All initialized aCM line bundles on F.
///
/// A regularity argument bounds every coefficient by 4, so the search box
/// `[0, 4]³` is exhaustive.
pub fn initialized_acm_line_bundles() -> BTreeSet<DivisorClass> {
    initialized_acm_line_bundles_within(4)
}

/// `dim Ext¹(O(target), O(sub)) = h¹(O(sub − target))`.
pub fn ext1_line(target: &DivisorClass, sub: &DivisorClass) -> u64 {
    let diff = sub.checked_sub(target).expect("divisor difference overflows");
    kunneth_h(1, &diff)
}

/// Numerical hypotheses for reconstructing a rank-2 bundle with determinant
/// `L` from a codimension-2 subscheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreConditions {
    /// `H²(L^∨) = 0`
    pub existence_ok: bool,
    /// `H¹(L^∨) = 0`
    pub uniqueness_ok: bool,
}

pub fn serre_conditions(l: &DivisorClass) -> SerreConditions {
    let dual = l.checked_neg().expect("negation overflows");
    SerreConditions {
        existence_ok: kunneth_h(2, &dual) == 0,
        uniqueness_ok: kunneth_h(1, &dual) == 0,
    }
}
