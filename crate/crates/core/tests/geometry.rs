mod common;

use cartan_limits::linalg::{bracket, normalizer_dimension};
use cartan_limits::projective::{join, meet, point_line_sq, sep_sq, shadow_point};
use cartan_limits::Field;
use cartan_limits::{rat, HReal, LimitClass, Plane2, ProjLine, ProjPoint, QMatrix3, Vector3};
use common::{nonzero_hreal, puiseux_poly, rational};
use proptest::prelude::*;

fn hvec() -> impl Strategy<Value = Vector3<HReal>> {
    [puiseux_poly(), puiseux_poly(), puiseux_poly()]
        .prop_map(Vector3)
        .prop_filter("nonzero", |v| !v.is_zero())
}

fn qmat() -> impl Strategy<Value = QMatrix3> {
    prop::array::uniform3(prop::array::uniform3(rational())).prop_map(cartan_limits::Matrix3)
}

fn invertible() -> impl Strategy<Value = QMatrix3> {
    qmat().prop_filter("invertible", |m| !m.det().is_zero())
}

fn traceless() -> impl Strategy<Value = QMatrix3> {
    qmat().prop_map(|mut m| {
        let tr = m.trace();
        m.0[2][2] -= tr;
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn separation_matches_gram_formula(a in hvec(), b in hvec()) {
        let (p, q) = (ProjPoint::new(a.clone()).unwrap(), ProjPoint::new(b.clone()).unwrap());
        let c = a.cross(&b);
        let expected = c.norm_sq() / (a.norm_sq() * b.norm_sq());
        prop_assert_eq!(&sep_sq(&p, &q).value, &expected);
        prop_assert_eq!(&sep_sq(&q, &p).value, &expected);
    }

    #[test]
    fn separation_ignores_representatives(a in hvec(), b in hvec(), s in nonzero_hreal()) {
        let p = ProjPoint::new(a.clone()).unwrap();
        let ps = ProjPoint::new(a.scale(&s)).unwrap();
        prop_assert_eq!(&p, &ps);
        let q = ProjPoint::new(b).unwrap();
        prop_assert_eq!(sep_sq(&p, &q), sep_sq(&ps, &q));
        prop_assert_eq!(shadow_point(&p), shadow_point(&ps));
    }

    #[test]
    fn join_and_meet_are_incident(a in hvec(), b in hvec(), c in hvec()) {
        let (p, q, r) = (
            ProjPoint::new(a).unwrap(),
            ProjPoint::new(b).unwrap(),
            ProjPoint::new(c).unwrap(),
        );
        prop_assume!(p != q && p != r);
        let (l, m) = (join(&p, &q).unwrap(), join(&p, &r).unwrap());
        prop_assert!(p.lies_on(&l) && q.lies_on(&l));
        prop_assert!(point_line_sq(&p, &l).value.is_zero());
        if l != m {
            prop_assert_eq!(meet(&l, &m).unwrap(), p);
        }
    }

    #[test]
    fn incidence_is_self_dual(a in hvec(), b in hvec()) {
        let (p, l) = (ProjPoint::new(a.clone()).unwrap(), ProjLine::new(b.clone()).unwrap());
        let (pd, ld) = (ProjLine::new(a).unwrap(), ProjPoint::new(b).unwrap());
        prop_assert_eq!(p.lies_on(&l), ld.lies_on(&pd));
    }

    #[test]
    fn bracket_is_a_lie_bracket(x in traceless(), y in traceless(), z in traceless()) {
        prop_assert_eq!(bracket(&x, &y), bracket(&y, &x).neg());
        let jacobi = bracket(&x, &bracket(&y, &z))
            .add(&bracket(&y, &bracket(&z, &x)))
            .add(&bracket(&z, &bracket(&x, &y)));
        prop_assert!(jacobi.is_zero());
        prop_assert!(bracket(&x, &y).trace().is_zero());
    }

    #[test]
    fn normalizer_dimension_is_a_conjugacy_invariant(g in invertible()) {
        for class in LimitClass::ALL {
            let plane = class.canonical_algebra();
            let moved = plane.conjugate(&g).unwrap();
            prop_assert_eq!(normalizer_dimension(&moved), normalizer_dimension(&plane));
            prop_assert_eq!(moved.is_abelian(), plane.is_abelian());
        }
    }

    #[test]
    fn plucker_vectors_are_decomposable(x in traceless(), y in traceless()) {
        if let Ok(plane) = Plane2::new(x, y) {
            let pl = plane.plucker();
            prop_assert!(pl.is_decomposable());
            prop_assert_eq!(pl.to_plane().unwrap(), plane);
        }
    }
}

#[test]
fn plane_equality_ignores_basis() {
    let e = |i, j| QMatrix3::unit(i, j);
    let a = Plane2::new(e(0, 1), e(0, 2)).unwrap();
    let b = Plane2::new(e(0, 1).add(&e(0, 2)), e(0, 2).scale(&rat(-3, 1))).unwrap();
    assert_eq!(a, b);
    assert!(a.contains(&e(0, 1).scale(&rat(5, 2))));
    assert!(!a.contains(&e(1, 2)));
}
