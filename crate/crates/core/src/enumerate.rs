//! Enumeration of the numerical cases for initialized aCM rank-2 bundles and
//! the resulting classification.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chow::{canonical_perm, intersect_dc, Coeff, CurveClass, DivisorClass, Perm};
use crate::cohomology::{initialized_acm_line_bundles, is_acm_line, is_initialized_line, kunneth_h};
use crate::error::{Error, Result};
use crate::invariants::{
    c1c2_constraint, dual, e_flag, hc2_constraint, residual_class, twist, zero_locus_invariants,
    BundleData,
};

/// All `β` with `α·β = 2α1α2α3`, `Σβ = hc2(α, e)` and `β ≥ lower`, in
/// lexicographic order.
pub fn solve_alpha_beta(alpha: &DivisorClass, e: u8, lower: &CurveClass) -> Result<Vec<CurveClass>> {
    let dot = c1c2_constraint(alpha)?;
    let total = hc2_constraint(alpha, e)?;
    let mut out = Vec::new();
    let slack = total - lower[0] - lower[1] - lower[2];
    if slack < 0 {
        return Ok(out);
    }
    for x in 0..=slack {
        for y in 0..=slack - x {
            let b = CurveClass::new(lower[0] + x, lower[1] + y, lower[2] + slack - x - y);
            if intersect_dc(alpha, &b)? == dot {
                out.push(b);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CandidateStatus {
    /// `D = 0`, handled by the intermediate cases.
    ZeroCase,
    Allowed,
    /// Ruled out for nonzero `D` by a cohomology argument.
    Excluded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorCandidate {
    pub class: DivisorClass,
    pub status: CandidateStatus,
}

/// The possible divisorial parts of a zero locus, up to permutation.
pub fn divisor_candidates() -> Vec<DivisorCandidate> {
    use CandidateStatus::*;
    [
        ([0, 0, 0], ZeroCase),
        ([0, 0, 1], Allowed),
        ([0, 1, 1], Allowed),
        ([0, 0, 2], Allowed),
        ([0, 1, 2], Allowed),
        ([0, 2, 2], Excluded),
    ]
    .into_iter()
    .map(|(t, status)| DivisorCandidate { class: DivisorClass(t), status })
    .collect()
}

fn allowed_nonzero_divisor(d: &DivisorClass) -> bool {
    divisor_candidates()
        .iter()
        .any(|c| c.status == CandidateStatus::Allowed && c.class == d.sorted())
}

/// Sorted first Chern classes inside the box `0 ≤ αi ≤ 2` other than `0` and
/// `2h`.
fn non_extremal_alphas() -> Vec<DivisorClass> {
    let mut out = Vec::new();
    for a in 0..=2 {
        for b in a..=2 {
            for c in b..=2 {
                let alpha = DivisorClass::new(a, b, c);
                if alpha != DivisorClass::ZERO && alpha != DivisorClass::new(2, 2, 2) {
                    out.push(alpha);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DivisorialVerdict {
    NegativeClass,
    EmptyEForbidden,
    GloballyGeneratedContradiction,
}

impl DivisorialVerdict {
    pub const ALL: [DivisorialVerdict; 3] = [
        DivisorialVerdict::NegativeClass,
        DivisorialVerdict::EmptyEForbidden,
        DivisorialVerdict::GloballyGeneratedContradiction,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DivisorialVerdict::NegativeClass => "NegativeClass",
            DivisorialVerdict::EmptyEForbidden => "EmptyEForbidden",
            DivisorialVerdict::GloballyGeneratedContradiction => "GloballyGeneratedContradiction",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for DivisorialVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict for the residual curve class of a zero locus with nonzero
/// divisorial part.
///
/// The effective classes that occur are a line, two disjoint-direction lines
/// or a doubled line; each of them makes `E` globally generated, which is
/// impossible.
pub fn residual_verdict(class_e: &CurveClass) -> Result<DivisorialVerdict> {
    if class_e.min_coeff() < 0 {
        return Ok(DivisorialVerdict::NegativeClass);
    }
    if class_e.is_zero() {
        return Ok(DivisorialVerdict::EmptyEForbidden);
    }
    match class_e.sorted().0 {
        [0, 0, 1] | [0, 1, 1] | [0, 0, 2] => Ok(DivisorialVerdict::GloballyGeneratedContradiction),
        other => Err(Error::UncoveredResidualClass(other)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorialCaseRow {
    pub alpha: DivisorClass,
    pub delta: DivisorClass,
    pub e: u8,
    pub beta: CurveClass,
    pub class_e: CurveClass,
    pub verdict: DivisorialVerdict,
}

impl DivisorialCaseRow {
    /// Builds a row in canonical position, recomputing `e`, the residual
    /// class and the verdict.
    pub fn derive(alpha: &DivisorClass, delta: &DivisorClass, beta: &CurveClass) -> Result<Self> {
        let (p, _) = canonical_perm(alpha, &[delta.0, beta.0]);
        let (alpha, delta, beta) = (alpha.permuted(&p), delta.permuted(&p), beta.permuted(&p));
        let class_e = residual_class(&alpha, &beta, &delta)?;
        Ok(DivisorialCaseRow {
            alpha,
            delta,
            e: e_flag(&alpha, &delta),
            beta,
            class_e,
            verdict: residual_verdict(&class_e)?,
        })
    }

    pub fn key(&self) -> (DivisorClass, DivisorClass, CurveClass) {
        (self.alpha, self.delta, self.beta)
    }
}

/// Every case with nonzero divisorial part `D`, one row per orbit under the
/// permutations fixing `c1`, sorted by `(α, δ, β)`.
pub fn divisorial_table() -> Result<Vec<DivisorialCaseRow>> {
    let mut rows = BTreeSet::new();
    for alpha in non_extremal_alphas() {
        if !(alpha[0] <= 1 && 1 <= alpha[2]) {
            continue;
        }
        for delta in box_classes(0, 2) {
            if !allowed_nonzero_divisor(&delta) {
                continue;
            }
            if !alpha.checked_sub(&delta)?.is_effective() {
                continue;
            }
            let e = e_flag(&alpha, &delta);
            for beta in solve_alpha_beta(&alpha, e, &CurveClass::ZERO)? {
                rows.insert(DivisorialCaseRow::derive(&alpha, &delta, &beta)?);
            }
        }
    }
    Ok(rows.into_iter().collect())
}

fn box_classes(lo: Coeff, hi: Coeff) -> impl Iterator<Item = DivisorClass> {
    (lo..=hi).flat_map(move |a| {
        (lo..=hi).flat_map(move |b| (lo..=hi).map(move |c| DivisorClass::new(a, b, c)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntermediateVerdict {
    Admissible,
    /// `E ≅ O(L1) ⊕ O(L2)`, larger summand first.
    Decomposable(DivisorClass, DivisorClass),
    NonExistent,
    ExcludedEmpty,
    ExcludedDualPositivity,
}

impl IntermediateVerdict {
    pub fn decomposable(l1: DivisorClass, l2: DivisorClass) -> Self {
        if l1 >= l2 {
            IntermediateVerdict::Decomposable(l1, l2)
        } else {
            IntermediateVerdict::Decomposable(l2, l1)
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            IntermediateVerdict::Admissible => "Admissible",
            IntermediateVerdict::Decomposable(..) => "Decomposable",
            IntermediateVerdict::NonExistent => "NonExistent",
            IntermediateVerdict::ExcludedEmpty => "ExcludedEmpty",
            IntermediateVerdict::ExcludedDualPositivity => "ExcludedDualPositivity",
        }
    }

    /// Inverse of the `Display` form, e.g. `Decomposable(0 1 0;0 0 1)`.
    pub fn parse(s: &str) -> Option<Self> {
        let simple = [
            IntermediateVerdict::Admissible,
            IntermediateVerdict::NonExistent,
            IntermediateVerdict::ExcludedEmpty,
            IntermediateVerdict::ExcludedDualPositivity,
        ];
        if let Some(v) = simple.into_iter().find(|v| v.kind() == s) {
            return Some(v);
        }
        let inner = s.strip_prefix("Decomposable(")?.strip_suffix(')')?;
        let (a, b) = inner.split_once(';')?;
        let parse = |t: &str| -> Option<DivisorClass> {
            let v: Vec<Coeff> = t.split_whitespace().map(|x| x.parse().ok()).collect::<Option<_>>()?;
            Some(DivisorClass(v.try_into().ok()?))
        };
        Some(IntermediateVerdict::decomposable(parse(a)?, parse(b)?))
    }
}

impl fmt::Display for IntermediateVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntermediateVerdict::Decomposable(a, b) => write!(
                f,
                "Decomposable({} {} {};{} {} {})",
                a[0], a[1], a[2], b[0], b[1], b[2]
            ),
            other => f.write_str(other.kind()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediateCaseRow {
    pub label: String,
    pub alpha: DivisorClass,
    pub beta: CurveClass,
    pub deg: Coeff,
    pub pa: Coeff,
    pub verdict: IntermediateVerdict,
}

const INTERMEDIATE_LABELS: [&str; 11] = ["L", "M", "N", "P", "Q", "R", "S", "T", "U", "V", "W"];

fn canonical_bundle(b: &BundleData) -> (BundleData, Perm) {
    let (p, _) = canonical_perm(&b.c1, &[b.c2.0]);
    (b.permuted(&p), p)
}

/// Verdicts settled case by case rather than by a numerical criterion, keyed
/// by canonical Chern data.
fn settled_intermediate(b: &BundleData) -> Option<IntermediateVerdict> {
    let d = DivisorClass::new;
    let key = (b.c1.0, b.c2.0);
    Some(match key {
        // a line in the class h2h3 gives an indecomposable aCM bundle
        ([0, 0, 1], [0, 1, 0]) => IntermediateVerdict::Admissible,
        ([0, 1, 1], [1, 0, 0]) => IntermediateVerdict::decomposable(d(0, 1, 0), d(0, 0, 1)),
        ([0, 1, 2], [1, 0, 0]) => IntermediateVerdict::decomposable(d(0, 1, 1), d(0, 0, 1)),
        ([1, 1, 1], [0, 1, 1]) => IntermediateVerdict::decomposable(d(0, 1, 1), d(1, 0, 0)),
        // a double structure on a line would need O_{P1}^2 ->> O_{P1}(-1)
        ([1, 1, 1], [0, 0, 2]) => IntermediateVerdict::NonExistent,
        _ => return None,
    })
}

fn dual_twist(b: &BundleData) -> Result<BundleData> {
    twist(&dual(b)?, &DivisorClass::HYPERPLANE)
}

/// Verdict for canonical Chern data with zero divisorial part.
pub fn intermediate_verdict(b: &BundleData) -> Result<IntermediateVerdict> {
    let (b, p) = canonical_bundle(b);
    let (deg, _) = zero_locus_invariants(&b)?;
    let v = intermediate_verdict_canonical(&b, deg)?;
    // back to the caller's coordinates
    let inv = p.inverse();
    Ok(match v {
        IntermediateVerdict::Decomposable(l1, l2) => {
            IntermediateVerdict::decomposable(l1.permuted(&inv), l2.permuted(&inv))
        }
        other => other,
    })
}

fn intermediate_verdict_canonical(b: &BundleData, deg: Coeff) -> Result<IntermediateVerdict> {
    if deg == 0 {
        return Ok(IntermediateVerdict::ExcludedEmpty);
    }
    let dt = dual_twist(b)?;
    if dt.c2.is_zero() || dt.c2.min_coeff() < 0 {
        return Ok(IntermediateVerdict::ExcludedDualPositivity);
    }
    if let Some(v) = settled_intermediate(b) {
        return Ok(v);
    }
    // E occurs iff E^∨(h) does; a splitting O(L1) ⊕ O(L2) dualizes to
    // O(h − L1) ⊕ O(h − L2)
    let (partner, p) = canonical_bundle(&dt);
    let v = settled_intermediate(&partner).ok_or(Error::UncoveredCase {
        alpha: b.c1.0,
        beta: b.c2.0,
    })?;
    let inv = p.inverse();
    let h = DivisorClass::HYPERPLANE;
    Ok(match v {
        IntermediateVerdict::Decomposable(l1, l2) => IntermediateVerdict::decomposable(
            h.checked_sub(&l1.permuted(&inv))?,
            h.checked_sub(&l2.permuted(&inv))?,
        ),
        other => other,
    })
}

/// The cases with empty divisorial part, labelled `L` to `W` in order of
/// increasing degree, then decreasing genus.
pub fn intermediate_table() -> Result<Vec<IntermediateCaseRow>> {
    let mut found = BTreeSet::new();
    for alpha in non_extremal_alphas() {
        let e = e_flag(&alpha, &DivisorClass::ZERO);
        for beta in solve_alpha_beta(&alpha, e, &CurveClass::ZERO)? {
            found.insert(canonical_bundle(&BundleData::new(alpha, beta)).0);
        }
    }
    let mut rows = Vec::new();
    for b in found {
        let (deg, pa) = zero_locus_invariants(&b)?;
        rows.push((b, deg, pa));
    }
    rows.sort_by(|(x, dx, px), (y, dy, py)| {
        (dx, py, x.c1, y.c2.sorted()).cmp(&(dy, px, y.c1, x.c2.sorted()))
    });
    if rows.len() != INTERMEDIATE_LABELS.len() {
        return Err(Error::Golden(format!(
            "expected {} intermediate cases, found {}",
            INTERMEDIATE_LABELS.len(),
            rows.len()
        )));
    }
    rows.into_iter()
        .zip(INTERMEDIATE_LABELS)
        .map(|((b, deg, pa), label)| {
            Ok(IntermediateCaseRow {
                label: label.to_string(),
                alpha: b.c1,
                beta: b.c2,
                deg,
                pa,
                verdict: intermediate_verdict(&b)?,
            })
        })
        .collect()
}

/// Second Chern classes of an Ulrich bundle with `c1 = 2h`, up to
/// permutation. Each `βi` is the degree of a curve under a projection and is
/// at least 2.
pub fn ulrich_c2_options() -> Vec<CurveClass> {
    let mut out = BTreeSet::new();
    for beta in solve_alpha_beta(&DivisorClass::new(2, 2, 2), 0, &CurveClass::new(2, 2, 2))
        .expect("small coefficients")
    {
        out.insert(beta.sorted());
    }
    out.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OptionVerdict {
    Admissible,
    Excluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalOption {
    /// Admissible options are placed so that `c1 · c2 = 12`; excluded ones
    /// are sorted descending.
    pub c2: CurveClass,
    pub verdict: OptionVerdict,
    /// `(1,2,3) · σ(β)` over all six permutations.
    pub dot_products: Vec<Coeff>,
}

pub const SPORADIC_C1: DivisorClass = DivisorClass::new(1, 2, 3);

/// Candidate `c2` for the sporadic class `c1 = h1 + 2h2 + 3h3`.
pub fn rational_c2_options() -> Vec<RationalOption> {
    let target = c1c2_constraint(&SPORADIC_C1).expect("small coefficients");
    let mut shapes = BTreeSet::new();
    for a in 1..=7 {
        for b in 1..=7 - a {
            let c = 7 - a - b;
            if c >= 1 && a + b >= 3 && a + c >= 3 && b + c >= 3 {
                let mut t = [a, b, c];
                t.sort_unstable_by(|x, y| y.cmp(x));
                shapes.insert(t);
            }
        }
    }
    shapes
        .into_iter()
        .rev()
        .map(|shape| {
            let beta = CurveClass(shape);
            let images: Vec<CurveClass> = Perm::all().iter().map(|p| beta.permuted(p)).collect();
            let dot_products: Vec<Coeff> = images
                .iter()
                .map(|b| intersect_dc(&SPORADIC_C1, b).expect("small coefficients"))
                .collect();
            match images.iter().zip(&dot_products).find(|(_, &d)| d == target) {
                Some((b, _)) => RationalOption {
                    c2: *b,
                    verdict: OptionVerdict::Admissible,
                    dot_products,
                },
                None => RationalOption {
                    c2: beta,
                    verdict: OptionVerdict::Excluded,
                    dot_products,
                },
            }
        })
        .collect()
}

/// Bounds on `c1` for an initialized indecomposable aCM rank-2 bundle.
pub fn theorem_a_filter(c1: &DivisorClass) -> bool {
    c1.0.iter().all(|&a| (0..=2).contains(&a)) || c1.sorted() == SPORADIC_C1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveType {
    Line,
    EllipticNormalOctic,
    RationalNormalSeptic,
    RationalQuintic,
    NotAdmissible,
}

impl CurveType {
    pub fn description(&self) -> &'static str {
        match self {
            CurveType::Line => "line",
            CurveType::EllipticNormalOctic => "elliptic normal curve, deg 8, genus 1",
            CurveType::RationalNormalSeptic => "rational normal curve, deg 7, genus 0",
            CurveType::RationalQuintic => "curve of deg 5, arithmetic genus 0",
            CurveType::NotAdmissible => "not admissible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub c1_sorted: DivisorClass,
    pub c2_canonical: CurveClass,
    pub curve: CurveType,
    /// Canonical `c2` values admissible for this `c1`.
    pub allowed_c2: Vec<CurveClass>,
    pub indecomposability_condition: Option<String>,
}

impl ClassificationVerdict {
    pub fn is_admissible(&self) -> bool {
        self.curve != CurveType::NotAdmissible
    }
}

const ELLIPTIC_CONDITION: &str =
    "E is not the complete intersection of a divisor in |2h2+h3| and one in |2h1+h3|";

fn canonical_pair(c1: &DivisorClass, c2: &CurveClass) -> (DivisorClass, CurveClass) {
    let (b, _) = canonical_bundle(&BundleData::new(*c1, *c2));
    (b.c1, b.c2)
}

/// The admissible canonical Chern data with the type of curve they come from.
pub fn admissible_pairs() -> Result<Vec<(DivisorClass, CurveClass, CurveType)>> {
    let mut out = Vec::new();
    let (c1, c2) = canonical_pair(&DivisorClass::ZERO, &CurveClass::unit(0));
    out.push((c1, c2, CurveType::Line));
    for c2 in ulrich_c2_options() {
        let (c1, c2) = canonical_pair(&DivisorClass::new(2, 2, 2), &c2);
        out.push((c1, c2, CurveType::EllipticNormalOctic));
    }
    for opt in rational_c2_options() {
        if opt.verdict == OptionVerdict::Admissible {
            let (c1, c2) = canonical_pair(&SPORADIC_C1, &opt.c2);
            out.push((c1, c2, CurveType::RationalNormalSeptic));
        }
    }
    for row in intermediate_table()? {
        if row.verdict == IntermediateVerdict::Admissible {
            let kind = match zero_locus_invariants(&BundleData::new(row.alpha, row.beta))? {
                (1, 0) => CurveType::Line,
                _ => CurveType::RationalQuintic,
            };
            out.push((row.alpha, row.beta, kind));
        }
    }
    Ok(out)
}

/// Classifies Chern data against a precomputed admissible set.
#[derive(Clone, Debug)]
pub struct Classifier {
    pairs: Vec<(DivisorClass, CurveClass, CurveType)>,
}

impl Classifier {
    pub fn new() -> Result<Self> {
        Ok(Classifier { pairs: admissible_pairs()? })
    }

    pub fn verdict(&self, c1: &DivisorClass, c2: &CurveClass) -> ClassificationVerdict {
        let (c1s, c2s) = canonical_pair(c1, c2);
        let allowed_c2 = self.pairs.iter().filter(|(a, _, _)| *a == c1s).map(|(_, b, _)| *b).collect();
        let curve = self
            .pairs
            .iter()
            .find(|(a, b, _)| *a == c1s && *b == c2s)
            .map_or(CurveType::NotAdmissible, |(_, _, t)| *t);
        ClassificationVerdict {
            c1_sorted: c1s,
            c2_canonical: c2s,
            curve,
            allowed_c2,
            indecomposability_condition: (curve == CurveType::EllipticNormalOctic)
                .then(|| ELLIPTIC_CONDITION.to_string()),
        }
    }
}

pub fn theorem_b_verdict(c1: &DivisorClass, c2: &CurveClass) -> Result<ClassificationVerdict> {
    Ok(Classifier::new()?.verdict(c1, c2))
}

/// Splittings `O(L1) ⊕ O(L2)` with `L1 + L2 = c1`, both summands aCM, `L1`
/// initialized and `L2` initialized or without sections.
///
/// Pairs of initialized summands are listed larger first; otherwise the
/// initialized summand comes first.
pub fn decomposable_candidates(
    c1: &DivisorClass,
    h0_total: Option<u64>,
    c2_target: Option<&CurveClass>,
) -> Result<Vec<(DivisorClass, DivisorClass)>> {
    let mut out = BTreeSet::new();
    for l1 in initialized_acm_line_bundles() {
        let l2 = c1.checked_sub(&l1)?;
        if !is_acm_line(&l2) {
            continue;
        }
        let pair = if is_initialized_line(&l2) {
            (l1.max(l2), l1.min(l2))
        } else if kunneth_h(0, &l2) == 0 {
            (l1, l2)
        } else {
            continue;
        };
        if let Some(h0) = h0_total {
            if kunneth_h(0, &l1) + kunneth_h(0, &l2) != h0 {
                continue;
            }
        }
        if let Some(target) = c2_target {
            if crate::chow::divisor_product(&l1, &l2)? != *target {
                continue;
            }
        }
        out.insert(pair);
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: Coeff, b: Coeff, c: Coeff) -> DivisorClass {
        DivisorClass::new(a, b, c)
    }

    fn c(a: Coeff, b: Coeff, c: Coeff) -> CurveClass {
        CurveClass::new(a, b, c)
    }

    #[test]
    fn alpha_beta_solutions() {
        let got: BTreeSet<_> = solve_alpha_beta(&d(1, 2, 2), 0, &CurveClass::ZERO)
            .unwrap()
            .into_iter()
            .collect();
        let want: BTreeSet<_> = [c(2, 1, 2), c(2, 2, 1), c(2, 0, 3), c(2, 3, 0)].into();
        assert_eq!(got, want);
        assert_eq!(solve_alpha_beta(&d(0, 0, 1), 1, &CurveClass::ZERO).unwrap(), vec![c(0, 0, 0)]);
        // c1 = 0, e = 0: every β ≥ 0 of degree 2
        assert_eq!(solve_alpha_beta(&d(0, 0, 0), 0, &CurveClass::ZERO).unwrap().len(), 6);
        assert!(solve_alpha_beta(&d(0, 0, 1), 1, &c(1, 0, 0)).unwrap().is_empty());
    }

    #[test]
    fn candidates() {
        let cands = divisor_candidates();
        assert_eq!(cands.len(), 6);
        assert!(allowed_nonzero_divisor(&d(2, 1, 0)));
        assert!(!allowed_nonzero_divisor(&d(2, 2, 0)));
        assert!(!allowed_nonzero_divisor(&d(0, 0, 0)));
    }

    #[test]
    fn divisorial_rows() {
        let rows = divisorial_table().unwrap();
        let find = |a, dl, b| {
            let r = DivisorialCaseRow::derive(&a, &dl, &b).unwrap();
            rows.iter().find(|x| x.key() == r.key()).copied().unwrap()
        };
        let r = find(d(1, 2, 2), d(0, 0, 1), c(2, 2, 1));
        assert_eq!(r.class_e, c(0, 1, 1));
        assert_eq!(r.verdict, DivisorialVerdict::GloballyGeneratedContradiction);
        let r = find(d(0, 1, 2), d(0, 1, 0), c(1, 0, 0));
        assert_eq!(r.class_e, c(-1, 0, 0));
        assert_eq!(r.verdict, DivisorialVerdict::NegativeClass);
        let r = find(d(1, 2, 2), d(0, 1, 2), c(2, 1, 2));
        assert_eq!(r.class_e, c(0, -1, 1));
        // orbit representatives are unique
        let keys: BTreeSet<_> = rows.iter().map(|r| r.key()).collect();
        assert_eq!(keys.len(), rows.len());
    }

    #[test]
    fn intermediate_rows() {
        let rows = intermediate_table().unwrap();
        let labels: Vec<_> = rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, INTERMEDIATE_LABELS);
        let m = &rows[1];
        assert_eq!((m.alpha, m.deg, m.pa), (d(0, 0, 1), 1, 0));
        assert_eq!(m.verdict, IntermediateVerdict::Admissible);
        let r = &rows[5];
        assert_eq!((r.alpha, r.deg, r.pa), (d(1, 1, 1), 2, 0));
        assert_eq!(r.verdict, IntermediateVerdict::NonExistent);
        let s = &rows[6];
        assert_eq!((s.deg, s.pa), (2, -1));
        assert_eq!(s.verdict, IntermediateVerdict::ExcludedDualPositivity);
        assert_eq!(rows[0].verdict, IntermediateVerdict::ExcludedEmpty);
        assert_eq!(rows[0].pa, 1);
    }

    #[test]
    fn split_pairs_reproduce_chern_data() {
        for row in intermediate_table().unwrap() {
            if let IntermediateVerdict::Decomposable(l1, l2) = row.verdict {
                let b = BundleData::split(&l1, &l2).unwrap();
                assert_eq!(b, BundleData::new(row.alpha, row.beta), "row {}", row.label);
                assert!(is_acm_line(&l1) && is_acm_line(&l2));
            }
        }
    }

    #[test]
    fn verdict_round_trip() {
        for row in intermediate_table().unwrap() {
            let s = row.verdict.to_string();
            assert_eq!(IntermediateVerdict::parse(&s), Some(row.verdict));
        }
        assert_eq!(IntermediateVerdict::parse("Decomposable(1 2;0 0 1)"), None);
    }

    #[test]
    fn ulrich_options() {
        assert_eq!(ulrich_c2_options(), vec![c(2, 2, 4), c(2, 3, 3)]);
        assert!(!ulrich_c2_options().contains(&c(1, 3, 4)));
    }

    #[test]
    fn rational_options() {
        let opts = rational_c2_options();
        assert_eq!(opts.len(), 3);
        let by_c2 = |t: CurveClass| opts.iter().find(|o| o.c2 == t).unwrap();
        assert_eq!(by_c2(c(4, 1, 2)).verdict, OptionVerdict::Admissible);
        assert_eq!(by_c2(c(3, 3, 1)).verdict, OptionVerdict::Admissible);
        let ex = by_c2(c(3, 2, 2));
        assert_eq!(ex.verdict, OptionVerdict::Excluded);
        let dots: BTreeSet<_> = ex.dot_products.iter().copied().collect();
        assert_eq!(dots, [13, 14, 15].into());
    }

    #[test]
    fn theorem_a() {
        assert!(theorem_a_filter(&d(2, 0, 1)));
        assert!(theorem_a_filter(&d(3, 2, 1)));
        assert!(!theorem_a_filter(&d(0, 3, 3)));
    }

    #[test]
    fn theorem_b() {
        let v = theorem_b_verdict(&d(2, 2, 2), &c(2, 3, 3)).unwrap();
        assert_eq!(v.curve, CurveType::EllipticNormalOctic);
        assert!(v.indecomposability_condition.is_some());
        assert!(!theorem_b_verdict(&d(1, 2, 3), &c(3, 2, 2)).unwrap().is_admissible());
        assert!(!theorem_b_verdict(&d(1, 1, 1), &c(1, 1, 0)).unwrap().is_admissible());
        assert_eq!(theorem_b_verdict(&d(0, 1, 0), &c(0, 0, 1)).unwrap().curve, CurveType::Line);
        assert_eq!(
            theorem_b_verdict(&d(2, 1, 2), &c(1, 2, 2)).unwrap().curve,
            CurveType::RationalQuintic
        );
        assert_eq!(admissible_pairs().unwrap().len(), 7);
    }

    #[test]
    fn splittings() {
        let got = decomposable_candidates(&d(2, 2, 2), Some(12), None).unwrap();
        let orbits: BTreeSet<_> = got
            .iter()
            .map(|(a, b)| {
                let (p, _) = canonical_perm(&a.checked_add(b).unwrap(), &[a.0, b.0]);
                (a.permuted(&p), b.permuted(&p))
            })
            .collect();
        assert_eq!(orbits.len(), 1);
        assert!(got.contains(&(d(2, 0, 1), d(0, 2, 1))));
        assert!(decomposable_candidates(&d(0, 0, 0), None, Some(&c(1, 0, 0))).unwrap().is_empty());
        // O(h2) ⊕ O(h3 − h2): aCM, the second summand has no sections
        assert_eq!(
            decomposable_candidates(&d(0, 0, 1), None, Some(&c(1, 0, 0))).unwrap(),
            vec![(d(0, 1, 0), d(0, -1, 1))]
        );
    }
}
