//! The Picard lattice of the degree-6 del Pezzo surface S ⊂ F, the blow-up of
//! the plane at three points.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chow::{Coeff, CurveClass};
use crate::error::{Error, Result};

/// `a ℓ − b1 e1 − b2 e2 − b3 e3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub a: Coeff,
    pub b: [Coeff; 3],
}

impl SurfaceClass {
    pub const LINE: SurfaceClass = SurfaceClass::new(1, [0, 0, 0]);

    pub const fn new(a: Coeff, b: [Coeff; 3]) -> Self {
        SurfaceClass { a, b }
    }

    /// The exceptional curve `e_i`.
    pub fn exceptional(i: usize) -> Self {
        let mut b = [0; 3];
        b[i] = -1;
        SurfaceClass { a: 0, b }
    }

    /// Same class with the `b_i` sorted descending.
    pub fn canonical(&self) -> Self {
        let mut b = self.b;
        b.sort_unstable_by(|x, y| y.cmp(x));
        SurfaceClass { a: self.a, b }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{},{})", self.a, self.b[0], self.b[1], self.b[2])
    }
}

pub fn s_intersect(x: &SurfaceClass, y: &SurfaceClass) -> Coeff {
    x.a * y.a - (0..3).map(|i| x.b[i] * y.b[i]).sum::<Coeff>()
}

/// Degree with respect to the hyperplane class `3ℓ − e1 − e2 − e3`.
pub fn s_degree(c: &SurfaceClass) -> Coeff {
    3 * c.a - c.b.iter().sum::<Coeff>()
}

/// Arithmetic genus by adjunction, `1 + (C² − deg) / 2`.
pub fn s_genus(c: &SurfaceClass) -> Result<Coeff> {
    let twice = s_intersect(c, c) - s_degree(c);
    if twice % 2 != 0 {
        return Err(Error::NonIntegralGenus);
    }
    Ok(1 + twice / 2)
}

/// The range of `a` allowed by Cauchy–Schwarz, `(Σb)² ≤ 3 Σb²`, for curves of
/// the given degree and genus:
/// `6a² − 6·deg·a + deg² + 3·deg + 6g − 6 ≤ 0`.
pub fn schwarz_range(degree: Coeff, genus: Coeff) -> Option<(Coeff, Coeff)> {
    let q = |a: Coeff| 6 * a * a - 6 * degree * a + degree * degree + 3 * degree + 6 * genus - 6;
    let disc = 12 * degree * degree - 72 * degree - 144 * genus + 144;
    if disc < 0 {
        return None;
    }
    let root = (disc as f64).sqrt();
    let lo = ((6 * degree) as f64 - root) / 12.0;
    let hi = ((6 * degree) as f64 + root) / 12.0;
    // float guess, then tighten with the exact polynomial
    let mut lo = (lo.floor() as Coeff - 1).max(0);
    let mut hi = hi.ceil() as Coeff + 1;
    while lo <= hi && q(lo) > 0 {
        lo += 1;
    }
    while hi >= lo && q(hi) > 0 {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

/// Curve classes with `a, b_i ≥ 0` of the given degree and genus, with `a`
/// restricted to `a_lo ..= a_hi`.
pub fn curve_classes_within(degree: Coeff, genus: Coeff, a_lo: Coeff, a_hi: Coeff) -> Vec<SurfaceClass> {
    let mut out = BTreeSet::new();
    for a in a_lo.max(0)..=a_hi {
        let sum = 3 * a - degree;
        let sq = a * a - (degree + 2 * genus - 2);
        if sum < 0 || sq < 0 {
            continue;
        }
        for b1 in 0..=sum {
            for b2 in 0..=b1.min(sum - b1) {
                let b3 = sum - b1 - b2;
                if b3 > b2 {
                    continue;
                }
                if b1 * b1 + b2 * b2 + b3 * b3 == sq {
                    out.insert(SurfaceClass::new(a, [b1, b2, b3]));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Effective-looking classes of the given degree and genus, `b` sorted
/// descending.
pub fn curve_classes(degree: Coeff, genus: Coeff) -> Vec<SurfaceClass> {
    match schwarz_range(degree, genus) {
        Some((lo, hi)) => curve_classes_within(degree, genus, lo, hi),
        None => Vec::new(),
    }
}

/// The quadratic transformation centred at the three blown-up points.
pub fn cremona(c: &SurfaceClass) -> SurfaceClass {
    let [b1, b2, b3] = c.b;
    SurfaceClass {
        a: 2 * c.a - b1 - b2 - b3,
        b: [c.a - b2 - b3, c.a - b1 - b3, c.a - b1 - b2],
    }
}

fn orbit(c: &SurfaceClass) -> BTreeSet<SurfaceClass> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([c.canonical()]);
    while let Some(x) = queue.pop_front() {
        if !seen.insert(x) {
            continue;
        }
        queue.push_back(cremona(&x).canonical());
    }
    seen
}

/// One representative per orbit of the group generated by permutations of
/// the `e_i` and the Cremona involution; the representative is the smallest
/// `(a; b sorted descending)`.
pub fn orbit_reduce(classes: &[SurfaceClass]) -> Vec<SurfaceClass> {
    let reps: BTreeSet<SurfaceClass> = classes
        .iter()
        .map(|c| *orbit(c).iter().next().expect("orbit contains its seed"))
        .collect();
    reps.into_iter().collect()
}

/// Image in `A²(F)`: `ℓ ↦ h2h3 + h1h3 + h1h2`, `e_i ↦` the `i`-th basis curve.
pub fn pushforward(c: &SurfaceClass) -> CurveClass {
    CurveClass::new(c.a - c.b[0], c.a - c.b[1], c.a - c.b[2])
}

/// `(χ(O_S(C)), χ(N_{C|F}))` for a smooth rational or elliptic curve `C ⊂ S`.
pub fn normal_chi(c: &SurfaceClass) -> Result<(Coeff, Coeff)> {
    let genus = s_genus(c)?;
    if !(0..=1).contains(&genus) {
        return Err(Error::UnsupportedGenus(genus));
    }
    let deg = s_degree(c);
    let twice = s_intersect(c, c) + deg;
    if twice % 2 != 0 {
        return Err(Error::NonIntegralGenus);
    }
    let chi_os = 1 + twice / 2;
    // 0 → O_C(C) → N_{C|F} → O_C(h) → 0
    Ok((chi_os, chi_os + (deg + 1 - genus) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: Coeff, b1: Coeff, b2: Coeff, b3: Coeff) -> SurfaceClass {
        SurfaceClass::new(a, [b1, b2, b3])
    }

    #[test]
    fn lattice() {
        assert_eq!(s_intersect(&s(3, 1, 0, 0), &s(3, 1, 0, 0)), 8);
        assert_eq!(s_intersect(&SurfaceClass::LINE, &SurfaceClass::exceptional(0)), 0);
        assert_eq!(s_intersect(&s(3, 0, 0, 2), &s(3, 0, 0, 2)), 5);
        assert_eq!(s_intersect(&SurfaceClass::exceptional(1), &SurfaceClass::exceptional(1)), -1);
    }

    #[test]
    fn degree_genus() {
        for (c, dg) in [(s(3, 1, 0, 0), (8, 1)), (s(4, 2, 2, 0), (8, 1)), (s(3, 0, 0, 2), (7, 0))] {
            assert_eq!((s_degree(&c), s_genus(&c).unwrap()), dg);
        }
        assert_eq!(s_genus(&s(1, 0, 0, 0)).unwrap(), 0);
        // a(a−3) − Σ b(b−1) is even, so every integral class has integral genus
        for a in -4..6 {
            for b in -3..4 {
                assert!(s_genus(&s(a, b, 1 - b, 2)).is_ok());
            }
        }
    }

    #[test]
    fn classes() {
        assert_eq!(curve_classes(8, 1), vec![s(3, 1, 0, 0), s(4, 2, 2, 0), s(5, 3, 2, 2)]);
        assert_eq!(curve_classes(7, 0), vec![s(3, 2, 0, 0), s(4, 3, 1, 1)]);
        assert_eq!(curve_classes(2, 0), vec![s(1, 1, 0, 0)]);
        assert_eq!(schwarz_range(8, 1), Some((3, 5)));
    }

    #[test]
    fn cremona_action() {
        assert_eq!(cremona(&s(5, 3, 2, 2)), s(3, 1, 0, 0));
        assert_eq!(cremona(&SurfaceClass::exceptional(0)), s(1, 0, 1, 1));
        let c = s(7, 2, -1, 4);
        assert_eq!(cremona(&cremona(&c)), c);
    }

    #[test]
    fn orbits() {
        let octics = curve_classes(8, 1);
        assert_eq!(orbit_reduce(&octics), vec![s(3, 1, 0, 0), s(4, 2, 2, 0)]);
        assert_eq!(orbit_reduce(&[s(4, 2, 2, 0)]), vec![s(4, 2, 2, 0)]);
        assert_eq!(orbit_reduce(&curve_classes(7, 0)), vec![s(3, 2, 0, 0)]);
    }

    #[test]
    fn pushforwards() {
        assert_eq!(pushforward(&s(3, 1, 0, 0)), CurveClass::new(2, 3, 3));
        assert_eq!(pushforward(&s(4, 2, 2, 0)), CurveClass::new(2, 2, 4));
        assert_eq!(pushforward(&s(3, 0, 0, 2)), CurveClass::new(3, 3, 1));
        assert_eq!(pushforward(&s(4, 1, 1, 3)), CurveClass::new(3, 3, 1));
    }

    #[test]
    fn normal_bundles() {
        assert_eq!(normal_chi(&s(3, 1, 0, 0)).unwrap(), (9, 16));
        assert_eq!(normal_chi(&s(3, 0, 0, 2)).unwrap(), (7, 14));
        for c in curve_classes(8, 1) {
            assert_eq!(normal_chi(&c).unwrap().1, 16);
        }
        assert_eq!(normal_chi(&s(6, 0, 0, 0)), Err(Error::UnsupportedGenus(10)));
    }
}
