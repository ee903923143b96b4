//! Exact arithmetic in the Chow ring of F = P1 x P1 x P1,
//! `A(F) = Z[h1, h2, h3] / (h1², h2², h3²)`.
//!
//! Divisor classes are stored in the basis `(h1, h2, h3)`, curve classes in
//! the dual basis `(h2h3, h1h3, h1h2)`, so that the `i`-th curve coordinate
//! pairs with the `i`-th divisor coordinate under intersection. All
//! arithmetic is checked; overflow is reported as [`Error::Overflow`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = i64;
pub type Triple = [Coeff; 3];

pub(crate) fn add(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn sub(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

pub(crate) fn mul(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

fn zip3(a: Triple, b: Triple, f: fn(Coeff, Coeff) -> Result<Coeff>) -> Result<Triple> {
    Ok([f(a[0], b[0])?, f(a[1], b[1])?, f(a[2], b[2])?])
}

/// A permutation of the three factors of F.
///
/// Acting on a triple `t` it produces `t'` with `t'[i] = t[p[i]]`. Divisor and
/// curve triples transform the same way since `h_jh_k` is indexed by the
/// missing factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([usize; 3]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2]);

    pub fn all() -> [Perm; 6] {
        [
            Perm([0, 1, 2]),
            Perm([0, 2, 1]),
            Perm([1, 0, 2]),
            Perm([1, 2, 0]),
            Perm([2, 0, 1]),
            Perm([2, 1, 0]),
        ]
    }

    pub fn new(images: [usize; 3]) -> Option<Perm> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    pub fn apply<T: Copy>(&self, t: [T; 3]) -> [T; 3] {
        [t[self.0[0]], t[self.0[1]], t[self.0[2]]]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = [0; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// `self.compose(other).apply(t) == self.apply(other.apply(t))`
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm([other.0[self.0[0]], other.0[self.0[1]], other.0[self.0[2]]])
    }

    pub fn images(&self) -> [usize; 3] {
        self.0
    }
}

macro_rules! triple_class {
    ($name:ident) => {
        impl $name {
            pub const ZERO: $name = $name([0, 0, 0]);

            pub const fn new(a: Coeff, b: Coeff, c: Coeff) -> Self {
                $name([a, b, c])
            }

            pub fn coeffs(&self) -> Triple {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0 == [0, 0, 0]
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                zip3(self.0, other.0, add).map($name)
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self> {
                zip3(self.0, other.0, sub).map($name)
            }

            pub fn checked_neg(&self) -> Result<Self> {
                $name::ZERO.checked_sub(self)
            }

            pub fn checked_scale(&self, k: Coeff) -> Result<Self> {
                Ok($name([mul(k, self.0[0])?, mul(k, self.0[1])?, mul(k, self.0[2])?]))
            }

            pub fn permuted(&self, p: &Perm) -> Self {
                $name(p.apply(self.0))
            }

            pub fn sorted(&self) -> Self {
                let mut t = self.0;
                t.sort_unstable();
                $name(t)
            }

            pub fn min_coeff(&self) -> Coeff {
                *self.0.iter().min().unwrap()
            }

            pub fn max_coeff(&self) -> Coeff {
                *self.0.iter().max().unwrap()
            }
        }

        impl From<Triple> for $name {
            fn from(t: Triple) -> Self {
                $name(t)
            }
        }

        impl std::ops::Index<usize> for $name {
            type Output = Coeff;
            fn index(&self, i: usize) -> &Coeff {
                &self.0[i]
            }
        }
    };
}

/// `d1 h1 + d2 h2 + d3 h3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass(pub Triple);

/// `b1 h2h3 + b2 h1h3 + b3 h1h2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveClass(pub Triple);

triple_class!(DivisorClass);
triple_class!(CurveClass);

impl DivisorClass {
    /// The hyperplane class `h = h1 + h2 + h3`.
    pub const HYPERPLANE: DivisorClass = DivisorClass([1, 1, 1]);

    pub fn unit(i: usize) -> DivisorClass {
        let mut t = [0; 3];
        t[i] = 1;
        DivisorClass(t)
    }

    /// `D ≥ 0`: the class has sections.
    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&d| d >= 0)
    }

    pub fn twist_by_hyperplane(&self, t: Coeff) -> Result<DivisorClass> {
        self.checked_add(&DivisorClass([t, t, t]))
    }
}

impl CurveClass {
    pub fn unit(i: usize) -> CurveClass {
        let mut t = [0; 3];
        t[i] = 1;
        CurveClass(t)
    }

    /// `h · C = b1 + b2 + b3`.
    pub fn degree(&self) -> Result<Coeff> {
        add(add(self.0[0], self.0[1])?, self.0[2])
    }

    pub fn is_effective_candidate(&self) -> bool {
        self.0.iter().all(|&b| b >= 0)
    }
}

/// A general element of `A(F)`, graded by codimension.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChowClass {
    pub c0: Coeff,
    pub c1: DivisorClass,
    pub c2: CurveClass,
    /// Coefficient of the point class `h1h2h3`.
    pub c3: Coeff,
}

impl ChowClass {
    pub const ZERO: ChowClass = ChowClass {
        c0: 0,
        c1: DivisorClass::ZERO,
        c2: CurveClass::ZERO,
        c3: 0,
    };

    pub const ONE: ChowClass = ChowClass {
        c0: 1,
        c1: DivisorClass::ZERO,
        c2: CurveClass::ZERO,
        c3: 0,
    };

    pub fn point(k: Coeff) -> ChowClass {
        ChowClass { c3: k, ..ChowClass::ZERO }
    }

    pub fn checked_add(&self, other: &ChowClass) -> Result<ChowClass> {
        Ok(ChowClass {
            c0: add(self.c0, other.c0)?,
            c1: self.c1.checked_add(&other.c1)?,
            c2: self.c2.checked_add(&other.c2)?,
            c3: add(self.c3, other.c3)?,
        })
    }

    pub fn checked_neg(&self) -> Result<ChowClass> {
        ChowClass::ZERO.checked_sub(self)
    }

    pub fn checked_sub(&self, other: &ChowClass) -> Result<ChowClass> {
        Ok(ChowClass {
            c0: sub(self.c0, other.c0)?,
            c1: self.c1.checked_sub(&other.c1)?,
            c2: self.c2.checked_sub(&other.c2)?,
            c3: sub(self.c3, other.c3)?,
        })
    }

    /// Graded product; every monomial containing some `h_i²` vanishes.
    pub fn checked_mul(&self, other: &ChowClass) -> Result<ChowClass> {
        let (x, y) = (self, other);
        let c0 = mul(x.c0, y.c0)?;

        let mut c1 = [0; 3];
        for (i, slot) in c1.iter_mut().enumerate() {
            *slot = add(mul(x.c0, y.c1[i])?, mul(x.c1[i], y.c0)?)?;
        }

        // coefficient of h_j h_k sits at the index of the missing factor
        let mut c2 = [0; 3];
        for (i, slot) in c2.iter_mut().enumerate() {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let mixed = add(mul(x.c1[j], y.c1[k])?, mul(x.c1[k], y.c1[j])?)?;
            *slot = add(add(mul(x.c0, y.c2[i])?, mul(x.c2[i], y.c0)?)?, mixed)?;
        }

        let mut c3 = add(mul(x.c0, y.c3)?, mul(x.c3, y.c0)?)?;
        for i in 0..3 {
            c3 = add(c3, add(mul(x.c1[i], y.c2[i])?, mul(x.c2[i], y.c1[i])?)?)?;
        }

        Ok(ChowClass {
            c0,
            c1: DivisorClass(c1),
            c2: CurveClass(c2),
            c3,
        })
    }

    pub fn permuted(&self, p: &Perm) -> ChowClass {
        ChowClass {
            c0: self.c0,
            c1: self.c1.permuted(p),
            c2: self.c2.permuted(p),
            c3: self.c3,
        }
    }

    /// The degree of the zero-cycle part.
    pub fn degree(&self) -> Coeff {
        self.c3
    }
}

impl From<DivisorClass> for ChowClass {
    fn from(d: DivisorClass) -> Self {
        ChowClass { c1: d, ..ChowClass::ZERO }
    }
}

impl From<CurveClass> for ChowClass {
    fn from(c: CurveClass) -> Self {
        ChowClass { c2: c, ..ChowClass::ZERO }
    }
}

/// `D1 · D2` as a curve class.
pub fn divisor_product(d1: &DivisorClass, d2: &DivisorClass) -> Result<CurveClass> {
    let (a, b) = (d1.0, d2.0);
    Ok(CurveClass([
        add(mul(a[1], b[2])?, mul(a[2], b[1])?)?,
        add(mul(a[0], b[2])?, mul(a[2], b[0])?)?,
        add(mul(a[0], b[1])?, mul(a[1], b[0])?)?,
    ]))
}

/// The intersection number `D · C`.
pub fn intersect_dc(d: &DivisorClass, c: &CurveClass) -> Result<Coeff> {
    let mut acc: Coeff = 0;
    for i in 0..3 {
        acc = add(acc, mul(d.0[i], c.0[i])?)?;
    }
    Ok(acc)
}

/// Moves `alpha` to ascending order and carries the attached triples along.
///
/// When `alpha` has repeated entries the permutation is chosen among those
/// sorting it so that the attached triples, compared in order, are
/// lexicographically smallest.
pub fn canonicalize_s3(alpha: &DivisorClass, attached: &[Triple]) -> (DivisorClass, Vec<Triple>) {
    let (p, _) = canonical_perm(alpha, attached);
    (alpha.permuted(&p), attached.iter().map(|t| p.apply(*t)).collect())
}

/// The permutation used by [`canonicalize_s3`], together with the stabilizer
/// size of the sorted `alpha`.
pub fn canonical_perm(alpha: &DivisorClass, attached: &[Triple]) -> (Perm, usize) {
    let target = alpha.sorted();
    let mut best: Option<(Vec<Triple>, Perm)> = None;
    let mut count = 0;
    for p in Perm::all() {
        if alpha.permuted(&p) != target {
            continue;
        }
        count += 1;
        let image: Vec<Triple> = attached.iter().map(|t| p.apply(*t)).collect();
        if best.as_ref().is_none_or(|(b, _)| image < *b) {
            best = Some((image, p));
        }
    }
    (best.expect("some permutation sorts any triple").1, count)
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, &self.0, &["h1", "h2", "h3"])
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, &self.0, &["h2h3", "h1h3", "h1h2"])
    }
}

fn write_linear(f: &mut fmt::Formatter<'_>, coeffs: &Triple, names: &[&str; 3]) -> fmt::Result {
    let mut first = true;
    for (c, name) in coeffs.iter().zip(names) {
        if *c == 0 {
            continue;
        }
        let sign = if *c < 0 { "-" } else if first { "" } else { "+" };
        let mag = c.unsigned_abs();
        if mag == 1 {
            write!(f, "{sign}{name}")?;
        } else {
            write!(f, "{sign}{mag}{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
