use proptest::prelude::*;

use triquad_core::chow::{canonicalize_s3, divisor_product, intersect_dc};
use triquad_core::cohomology::{is_acm_line, kunneth_h};
use triquad_core::delpezzo::{cremona, orbit_reduce, pushforward, s_degree, s_genus, s_intersect, SurfaceClass};
use triquad_core::enumerate::{decomposable_candidates, solve_alpha_beta, Classifier};
use triquad_core::invariants::{chi_line, chi_rank2, chi_rank2_direct, dual, residual_class, twist, F};
use triquad_core::{BundleData, ChowClass, CurveClass, DivisorClass, Perm};

fn triple(r: i64) -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-r..=r)
}

fn divisor(r: i64) -> impl Strategy<Value = DivisorClass> {
    triple(r).prop_map(DivisorClass)
}

fn curve(r: i64) -> impl Strategy<Value = CurveClass> {
    triple(r).prop_map(CurveClass)
}

fn perm() -> impl Strategy<Value = Perm> {
    (0usize..6).prop_map(|i| Perm::all()[i])
}

fn chow() -> impl Strategy<Value = ChowClass> {
    (-9i64..=9, divisor(9), curve(9), -9i64..=9).prop_map(|(c0, c1, c2, c3)| ChowClass { c0, c1, c2, c3 })
}

fn surface() -> impl Strategy<Value = SurfaceClass> {
    (-8i64..=8, triple(8)).prop_map(|(a, b)| SurfaceClass::new(a, b))
}

fn bundle() -> impl Strategy<Value = BundleData> {
    (divisor(6), curve(8)).prop_map(|(a, b)| BundleData::new(a, b))
}

proptest! {
    #[test]
    fn chow_ring_is_commutative_and_associative(x in chow(), y in chow(), z in chow()) {
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy, y.checked_mul(&x).unwrap());
        prop_assert_eq!(xy.checked_mul(&z).unwrap(), x.checked_mul(&y.checked_mul(&z).unwrap()).unwrap());
        let lhs = x.checked_mul(&y.checked_add(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, xy.checked_add(&x.checked_mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn squares_of_generators_vanish(i in 0usize..3) {
        let g = DivisorClass::unit(i);
        prop_assert_eq!(divisor_product(&g, &g).unwrap(), CurveClass::ZERO);
    }

    #[test]
    fn triple_products_are_the_point_degree(a in divisor(6), b in divisor(6), c in divisor(6)) {
        let via_curve = intersect_dc(&a, &divisor_product(&b, &c).unwrap()).unwrap();
        let perm_sum: i64 = Perm::all()
            .iter()
            .map(|p| { let i = p.images(); a[i[0]] * b[i[1]] * c[i[2]] })
            .sum();
        prop_assert_eq!(via_curve, perm_sum);
    }

    #[test]
    fn serre_duality(d in divisor(12), i in 0usize..4) {
        let dual = DivisorClass::new(-2, -2, -2).checked_sub(&d).unwrap();
        prop_assert_eq!(kunneth_h(i, &d), kunneth_h(3 - i, &dual));
    }

    #[test]
    fn alternating_sum_is_chi(d in divisor(12)) {
        let alt = kunneth_h(0, &d) as i64 - kunneth_h(1, &d) as i64 + kunneth_h(2, &d) as i64 - kunneth_h(3, &d) as i64;
        prop_assert_eq!(alt, chi_line(&d).unwrap());
    }

    #[test]
    fn riemann_roch_routes_agree(b in bundle()) {
        let closed = chi_rank2(&b);
        let direct = chi_rank2_direct(&b, &F);
        prop_assert_eq!(closed.is_ok(), direct.is_ok());
        if let (Ok(x), Ok(y)) = (closed, direct) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn split_chi_is_additive(l1 in divisor(5), l2 in divisor(5)) {
        let b = BundleData::split(&l1, &l2).unwrap();
        prop_assert_eq!(chi_rank2(&b).unwrap(), chi_line(&l1).unwrap() + chi_line(&l2).unwrap());
    }

    #[test]
    fn twisting_a_split_bundle_twists_the_summands(l1 in divisor(4), l2 in divisor(4), d in divisor(4)) {
        let b = BundleData::split(&l1, &l2).unwrap();
        let want = BundleData::split(&l1.checked_add(&d).unwrap(), &l2.checked_add(&d).unwrap()).unwrap();
        prop_assert_eq!(twist(&b, &d).unwrap(), want);
        let neg = BundleData::split(&l1.checked_neg().unwrap(), &l2.checked_neg().unwrap()).unwrap();
        prop_assert_eq!(dual(&b).unwrap(), neg);
    }

    #[test]
    fn twist_and_dual_laws(b in bundle(), d in divisor(4), e in divisor(4)) {
        let both = twist(&twist(&b, &d).unwrap(), &e).unwrap();
        prop_assert_eq!(both, twist(&b, &d.checked_add(&e).unwrap()).unwrap());
        prop_assert_eq!(dual(&dual(&b).unwrap()).unwrap(), b);
    }

    #[test]
    fn residual_is_linear_in_c2(c1 in divisor(4), c2 in curve(6), x in curve(6), d in divisor(3)) {
        let r = residual_class(&c1, &c2.checked_add(&x).unwrap(), &d).unwrap();
        prop_assert_eq!(r, residual_class(&c1, &c2, &d).unwrap().checked_add(&x).unwrap());
    }

    #[test]
    fn canonicalization_picks_one_orbit_point(a in divisor(4), b in triple(4), p in perm()) {
        let c = canonicalize_s3(&a, &[b]);
        prop_assert_eq!(&c, &canonicalize_s3(&a.permuted(&p), &[p.apply(b)]));
        prop_assert_eq!(&c, &canonicalize_s3(&c.0, &c.1));
        prop_assert_eq!(c.0, a.sorted());
    }

    #[test]
    fn operations_commute_with_permutations(a in divisor(5), b in divisor(5), c in curve(5), p in perm()) {
        prop_assert_eq!(
            divisor_product(&a.permuted(&p), &b.permuted(&p)).unwrap(),
            divisor_product(&a, &b).unwrap().permuted(&p)
        );
        prop_assert_eq!(intersect_dc(&a.permuted(&p), &c.permuted(&p)), intersect_dc(&a, &c));
        prop_assert_eq!(is_acm_line(&a.permuted(&p)), is_acm_line(&a));
        let bd = BundleData::new(a, c);
        prop_assert_eq!(chi_rank2(&bd.permuted(&p)), chi_rank2(&bd));
    }

    #[test]
    fn solutions_permute_with_alpha(a in prop::array::uniform3(0i64..=3), e in 0u8..=1, p in perm()) {
        let alpha = DivisorClass(a);
        let mut base: Vec<_> = solve_alpha_beta(&alpha, e, &CurveClass::ZERO).unwrap().iter().map(|b| b.permuted(&p)).collect();
        base.sort();
        prop_assert_eq!(base, solve_alpha_beta(&alpha.permuted(&p), e, &CurveClass::ZERO).unwrap());
    }

    #[test]
    fn split_candidates_sum_to_c1(a in prop::array::uniform3(0i64..=3)) {
        let c1 = DivisorClass(a);
        for (l1, l2) in decomposable_candidates(&c1, None, None).unwrap() {
            prop_assert_eq!(l1.checked_add(&l2).unwrap(), c1);
            prop_assert!(is_acm_line(&l1) && is_acm_line(&l2));
        }
    }

    #[test]
    fn cremona_is_an_isometric_involution(x in surface(), y in surface()) {
        let (cx, cy) = (cremona(&x), cremona(&y));
        prop_assert_eq!(cremona(&cx), x);
        prop_assert_eq!(s_intersect(&cx, &cy), s_intersect(&x, &y));
        prop_assert_eq!(s_degree(&cx), s_degree(&x));
        prop_assert_eq!(s_genus(&cx).unwrap(), s_genus(&x).unwrap());
    }

    #[test]
    fn pushforward_preserves_degree(x in surface()) {
        prop_assert_eq!(pushforward(&x).degree().unwrap(), s_degree(&x));
    }

    #[test]
    fn orbit_reduction_is_idempotent(xs in prop::collection::vec(surface(), 1..5)) {
        let once = orbit_reduce(&xs);
        prop_assert_eq!(orbit_reduce(&once), once.clone());
        for r in &once {
            prop_assert!(xs.iter().any(|x| s_degree(x) == s_degree(r)));
        }
    }
}

#[test]
fn classifier_is_permutation_invariant() {
    let classifier = Classifier::new().unwrap();
    for a in [[0, 0, 1], [2, 2, 2], [1, 2, 3], [1, 2, 2], [0, 0, 0]] {
        for b in [[1, 0, 0], [2, 3, 3], [4, 1, 2], [2, 2, 1], [3, 2, 2]] {
            let v = classifier.verdict(&DivisorClass(a), &CurveClass(b));
            for p in Perm::all() {
                let w = classifier.verdict(&DivisorClass(a).permuted(&p), &CurveClass(b).permuted(&p));
                assert_eq!(v, w);
            }
        }
    }
}
