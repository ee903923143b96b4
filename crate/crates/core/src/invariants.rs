//! Numerical invariants of rank-2 bundles on F.

use serde::{Deserialize, Serialize};

use crate::chow::{
    add, divisor_product, intersect_dc, mul, sub, ChowClass, Coeff, CurveClass, DivisorClass,
    Perm,
};
use crate::cohomology::kunneth_h;
use crate::error::{Error, Result};

/// Chern data `(c1, c2)` of a rank-2 bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BundleData {
    pub c1: DivisorClass,
    pub c2: CurveClass,
}

impl BundleData {
    pub const fn new(c1: DivisorClass, c2: CurveClass) -> Self {
        BundleData { c1, c2 }
    }

    pub fn permuted(&self, p: &Perm) -> Self {
        BundleData {
            c1: self.c1.permuted(p),
            c2: self.c2.permuted(p),
        }
    }

    /// Chern data of `L1 ⊕ L2`.
    pub fn split(l1: &DivisorClass, l2: &DivisorClass) -> Result<Self> {
        Ok(BundleData {
            c1: l1.checked_add(l2)?,
            c2: divisor_product(l1, l2)?,
        })
    }
}

/// Constants of F entering Riemann–Roch.
///
/// `ω2` only ever appears through `ω2 · c1 = 4 (α1 + α2 + α3)` and
/// `ω1 ω2 = −24`, so it is stored as those two contractions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FConstants {
    pub omega1: DivisorClass,
    pub omega1_omega2: Coeff,
    pub omega2_dot_unit: Coeff,
    pub degree: Coeff,
    pub rank: Coeff,
}

pub const F: FConstants = FConstants {
    omega1: DivisorClass::new(-2, -2, -2),
    omega1_omega2: -24,
    omega2_dot_unit: 4,
    degree: 6,
    rank: 2,
};

impl FConstants {
    pub fn omega2_dot(&self, c1: &DivisorClass) -> Result<Coeff> {
        let s = add(add(c1[0], c1[1])?, c1[2])?;
        mul(self.omega2_dot_unit, s)
    }
}

fn elementary_symmetric(a: &DivisorClass) -> Result<(Coeff, Coeff, Coeff)> {
    let s1 = add(add(a[0], a[1])?, a[2])?;
    let s2 = add(add(mul(a[0], a[1])?, mul(a[0], a[2])?)?, mul(a[1], a[2])?)?;
    let s3 = mul(mul(a[0], a[1])?, a[2])?;
    Ok((s1, s2, s3))
}

fn require_even_c1c2(b: &BundleData) -> Result<Coeff> {
    let c1c2 = intersect_dc(&b.c1, &b.c2)?;
    if c1c2 % 2 != 0 {
        return Err(Error::NonIntegralChi { c1c2 });
    }
    Ok(c1c2)
}

/// `χ(E)` from the closed form specialised to F:
/// `2 + σ3 + σ2 + σ1 − ½ c1c2 − h c2`.
pub fn chi_rank2(b: &BundleData) -> Result<Coeff> {
    let c1c2 = require_even_c1c2(b)?;
    let (s1, s2, s3) = elementary_symmetric(&b.c1)?;
    let hc2 = b.c2.degree()?;
    let mut chi = add(add(add(2, s3)?, s2)?, s1)?;
    chi = sub(chi, c1c2 / 2)?;
    sub(chi, hc2)
}

/// `χ(E)` by evaluating the general threefold Riemann–Roch formula in `A(F)`
/// with `c3 = 0`.
pub fn chi_rank2_direct(b: &BundleData, k: &FConstants) -> Result<Coeff> {
    let c1 = ChowClass::from(b.c1);
    let c2 = ChowClass::from(b.c2);
    let w1 = ChowClass::from(k.omega1);
    let deg = |x: ChowClass| x.degree();

    let c1_cubed = deg(c1.checked_mul(&c1)?.checked_mul(&c1)?);
    let c1c2 = deg(c1.checked_mul(&c2)?);
    let w1c1sq = deg(w1.checked_mul(&c1)?.checked_mul(&c1)?);
    let w1c2 = deg(w1.checked_mul(&c2)?);
    let w1sq_c1 = deg(w1.checked_mul(&w1)?.checked_mul(&c1)?);
    let w2c1 = k.omega2_dot(&b.c1)?;

    // 24 χ
    let t1 = mul(-k.rank, k.omega1_omega2)?;
    let t2 = mul(4, sub(c1_cubed, mul(3, c1c2)?)?)?;
    let t3 = mul(-6, sub(w1c1sq, mul(2, w1c2)?)?)?;
    let t4 = mul(2, add(w1sq_c1, w2c1)?)?;
    let total = add(add(add(t1, t2)?, t3)?, t4)?;
    if total % 24 != 0 {
        return Err(Error::NonIntegralChi { c1c2 });
    }
    Ok(total / 24)
}

/// `χ(O_F(D)) = (d1+1)(d2+1)(d3+1)`.
pub fn chi_line(d: &DivisorClass) -> Result<Coeff> {
    mul(mul(add(d[0], 1)?, add(d[1], 1)?)?, add(d[2], 1)?)
}

/// Chern data of `E(D)`.
pub fn twist(b: &BundleData, d: &DivisorClass) -> Result<BundleData> {
    Ok(BundleData {
        c1: b.c1.checked_add(&d.checked_scale(2)?)?,
        c2: b
            .c2
            .checked_add(&divisor_product(&b.c1, d)?)?
            .checked_add(&divisor_product(d, d)?)?,
    })
}

/// Chern data of `E^∨`.
pub fn dual(b: &BundleData) -> Result<BundleData> {
    Ok(BundleData {
        c1: b.c1.checked_neg()?,
        c2: b.c2,
    })
}

/// `(deg E, p_a(E))` for the zero locus `E` of a section vanishing in
/// codimension 2.
pub fn zero_locus_invariants(b: &BundleData) -> Result<(Coeff, Coeff)> {
    let c1c2 = intersect_dc(&b.c1, &b.c2)?;
    if c1c2 % 2 != 0 {
        return Err(Error::NonIntegralGenus);
    }
    let degree = b.c2.degree()?;
    Ok((degree, add(sub(c1c2 / 2, degree)?, 1)?))
}

/// The value forced on `c1 · c2` for an initialized aCM bundle: `2 α1 α2 α3`.
pub fn c1c2_constraint(c1: &DivisorClass) -> Result<Coeff> {
    mul(2, mul(mul(c1[0], c1[1])?, c1[2])?)
}

/// `e(c1, D)`: 1 when `D = c1`.
pub fn e_flag(c1: &DivisorClass, d: &DivisorClass) -> u8 {
    u8::from(c1 == d)
}

/// The value forced on `h · c2`:
/// `α1α2α3 + (1−α1)(1−α2)(1−α3) + 1 − e`.
pub fn hc2_constraint(c1: &DivisorClass, e: u8) -> Result<Coeff> {
    let prod = mul(mul(c1[0], c1[1])?, c1[2])?;
    let co = mul(mul(sub(1, c1[0])?, sub(1, c1[1])?)?, sub(1, c1[2])?)?;
    sub(add(add(prod, co)?, 1)?, Coeff::from(e))
}

/// Whether `D` is, up to permutation, one of the six classes allowed for the
/// divisorial part of a zero locus.
pub fn is_divisor_candidate(d: &DivisorClass) -> bool {
    matches!(
        d.sorted().0,
        [0, 0, 0] | [0, 0, 1] | [0, 1, 1] | [0, 0, 2] | [0, 1, 2] | [0, 2, 2]
    )
}

/// A boundary cohomology value together with whether `D` lies in the range
/// where it agrees with the indicator definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eta {
    pub value: u64,
    pub candidate: bool,
}

fn d_minus_2h(d: &DivisorClass) -> DivisorClass {
    d.twist_by_hyperplane(-2).expect("twist within i64 range")
}

/// `η1(D) = h²(O_F(D − 2h))`, which is 1 exactly when `D ∈ |2h_j|` on the
/// candidate list.
pub fn eta1(d: &DivisorClass) -> Eta {
    Eta {
        value: kunneth_h(2, &d_minus_2h(d)),
        candidate: is_divisor_candidate(d),
    }
}

/// `η2(D) = h³(O_F(D − 2h))`, which is 1 exactly when `D = 0`.
pub fn eta2(d: &DivisorClass) -> Eta {
    Eta {
        value: kunneth_h(3, &d_minus_2h(d)),
        candidate: is_divisor_candidate(d),
    }
}

/// The class `c2 − c1·D + D²` of the curve part of the zero locus once the
/// divisorial part `D` is removed.
pub fn residual_class(c1: &DivisorClass, c2: &CurveClass, d: &DivisorClass) -> Result<CurveClass> {
    c2.checked_sub(&divisor_product(c1, d)?)?
        .checked_add(&divisor_product(d, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd(a: [Coeff; 3], b: [Coeff; 3]) -> BundleData {
        BundleData::new(DivisorClass(a), CurveClass(b))
    }

    fn d(a: Coeff, b: Coeff, c: Coeff) -> DivisorClass {
        DivisorClass::new(a, b, c)
    }

    #[test]
    fn chi_values() {
        for (b, want) in [
            (bd([1, 2, 3], [4, 1, 2]), 12),
            (bd([2, 2, 2], [2, 2, 4]), 12),
            (bd([2, 2, 2], [2, 3, 3]), 12),
            (bd([0, 0, 0], [0, 0, 0]), 2),
        ] {
            assert_eq!(chi_rank2(&b).unwrap(), want);
            assert_eq!(chi_rank2_direct(&b, &F).unwrap(), want);
        }
    }

    #[test]
    fn odd_c1c2_rejected() {
        let b = bd([1, 0, 0], [1, 0, 0]);
        assert_eq!(chi_rank2(&b), Err(Error::NonIntegralChi { c1c2: 1 }));
        assert!(chi_rank2_direct(&b, &F).is_err());
        assert_eq!(zero_locus_invariants(&b), Err(Error::NonIntegralGenus));
    }

    #[test]
    fn twists() {
        let b = bd([2, 2, 2], [2, 2, 4]);
        let t = twist(&b, &d(-1, -1, -1)).unwrap();
        assert_eq!(t, bd([0, 0, 0], [0, 0, 2]));
        assert_eq!(twist(&t, &DivisorClass::HYPERPLANE).unwrap(), b);
        assert_eq!(twist(&b, &DivisorClass::ZERO).unwrap(), b);
    }

    #[test]
    fn dual_twist_cases() {
        let h = DivisorClass::HYPERPLANE;
        let s = twist(&dual(&bd([0, 2, 2], [2, 0, 0])).unwrap(), &h).unwrap();
        assert_eq!(s.c2, CurveClass::ZERO);
        let u = twist(&dual(&bd([1, 1, 2], [0, 2, 1])).unwrap(), &h).unwrap();
        assert_eq!(u.c2, CurveClass::new(-1, 1, 1));
        assert_eq!(u.c1, d(1, 1, 0));
    }

    #[test]
    fn zero_loci() {
        assert_eq!(zero_locus_invariants(&bd([2, 2, 2], [2, 3, 3])).unwrap(), (8, 1));
        assert_eq!(zero_locus_invariants(&bd([1, 2, 3], [4, 1, 2])).unwrap(), (7, 0));
        assert_eq!(zero_locus_invariants(&bd([0, 0, 0], [1, 0, 0])).unwrap(), (1, 0));
    }

    #[test]
    fn constraints() {
        assert_eq!(c1c2_constraint(&d(1, 2, 3)).unwrap(), 12);
        assert_eq!(c1c2_constraint(&d(2, 2, 2)).unwrap(), 16);
        assert_eq!(c1c2_constraint(&d(0, 0, 2)).unwrap(), 0);
        assert_eq!(hc2_constraint(&d(1, 2, 3), 0).unwrap(), 7);
        assert_eq!(hc2_constraint(&d(2, 2, 2), 0).unwrap(), 8);
        assert_eq!(hc2_constraint(&d(0, 0, 1), 1).unwrap(), 0);
        assert_eq!(e_flag(&d(0, 0, 1), &d(0, 0, 1)), 1);
        assert_eq!(e_flag(&d(0, 0, 2), &d(0, 0, 1)), 0);
        assert_eq!(e_flag(&d(0, 0, 0), &d(0, 0, 0)), 1);
    }

    #[test]
    fn etas() {
        assert_eq!(eta1(&d(0, 0, 2)), Eta { value: 1, candidate: true });
        assert_eq!(eta2(&d(0, 0, 0)).value, 1);
        assert_eq!(eta1(&d(0, 1, 1)).value, 0);
        assert_eq!(eta2(&d(0, 1, 1)).value, 0);
        assert!(!eta1(&d(3, 0, 0)).candidate);
    }

    #[test]
    fn residuals() {
        let c1 = d(1, 2, 2);
        let dd = d(0, 1, 2);
        assert_eq!(
            residual_class(&c1, &CurveClass::new(2, 1, 2), &dd).unwrap(),
            CurveClass::new(0, -1, 1)
        );
        assert_eq!(
            residual_class(&c1, &CurveClass::new(2, 2, 1), &dd).unwrap(),
            CurveClass::ZERO
        );
        let c2 = CurveClass::new(3, 1, 4);
        assert_eq!(residual_class(&c1, &c2, &DivisorClass::ZERO).unwrap(), c2);
    }
}
