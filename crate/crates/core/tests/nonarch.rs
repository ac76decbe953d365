mod common;

use std::cmp::Ordering;

use cartan_limits::nonarch::galaxy_equiv;
use cartan_limits::{parse_hreal, rat, HReal, MagnitudeClass};
use common::{appreciable_hreal, h, hreal, nonzero_hreal};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in hreal(), b in hreal(), c in hreal()) {
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + a.clone() * &c);
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn inverses(a in nonzero_hreal()) {
        prop_assert_eq!(a.clone() * &a.recip().unwrap(), HReal::one());
        prop_assert_eq!(a.recip().unwrap().recip().unwrap(), a);
    }

    #[test]
    fn valuation_is_additive(a in nonzero_hreal(), b in nonzero_hreal()) {
        let v = (a.clone() * &b).valuation().unwrap();
        prop_assert_eq!(v, a.valuation().unwrap() + b.valuation().unwrap());
        if let Ok(s) = (a.clone() + &b).valuation() {
            prop_assert!(s >= a.valuation().unwrap().min(b.valuation().unwrap()));
        }
    }

    #[test]
    fn order_is_compatible(a in hreal(), b in hreal(), c in hreal(), d in nonzero_hreal()) {
        let pos = d.clone() * &d;
        prop_assert_eq!(a.cmp(&b), (a.clone() + &c).cmp(&(b.clone() + &c)));
        prop_assert_eq!(a.cmp(&b), (a.clone() * &pos).cmp(&(b.clone() * &pos)));
        prop_assert_eq!(pos.signum(), Ordering::Greater);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in hreal(), b in hreal(), n in 2i64..50) {
        let t = rat(1, n);
        if let (Some(x), Some(y)) = (a.eval_rational(&t), b.eval_rational(&t)) {
            if let Some(s) = (a.clone() + &b).eval_rational(&t) {
                prop_assert_eq!(s, x.clone() + &y);
            }
            if let Some(p) = (a.clone() * &b).eval_rational(&t) {
                prop_assert_eq!(p, x * y);
            }
        }
    }

    #[test]
    fn appreciable_elements_have_shadows(a in appreciable_hreal()) {
        prop_assert_eq!(a.magnitude(), MagnitudeClass::Appreciable);
        prop_assert!(a.shadow().is_ok());
        prop_assert!((a.clone() - HReal::from_rational(a.shadow().unwrap())).is_infinitesimal());
    }

    #[test]
    fn shadow_is_a_ring_homomorphism(a in appreciable_hreal(), b in appreciable_hreal()) {
        let (sa, sb) = (a.shadow().unwrap(), b.shadow().unwrap());
        prop_assert_eq!((a.clone() * &b).shadow().unwrap(), sa.clone() * &sb);
        prop_assert_eq!((a.clone() + &b).shadow().unwrap(), sa + sb);
    }

    #[test]
    fn galaxies_are_equivalence_classes(
        a in hreal(),
        b in hreal(),
        c in hreal(),
        eps in nonzero_hreal(),
    ) {
        let eq = |x: &HReal, y: &HReal| galaxy_equiv(x, y, &eps).unwrap();
        prop_assert!(eq(&a, &a));
        prop_assert_eq!(eq(&a, &b), eq(&b, &a));
        if eq(&a, &b) && eq(&b, &c) {
            prop_assert!(eq(&a, &c));
        }
        // a point within eps of a is always in its galaxy
        let near = a.clone() + eps.clone() * HReal::from_rational(rat(3, 2));
        prop_assert!(eq(&a, &near));
    }

    #[test]
    fn print_parse_round_trip(a in hreal()) {
        let printed = a.to_string();
        let back = parse_hreal(&printed).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), printed);
    }
}

#[test]
fn parser_accepts_the_documented_grammar() {
    assert_eq!(h("t^(1/2) * t^(1/2)"), HReal::t());
    assert_eq!(h("(1 + t)*(1 + t)"), h("1 + 2*t + t^(2)"));
    assert_eq!(h("1/(1 - t)") * h("1 - t"), HReal::one());
    assert_eq!(h("-1*t^(-1)"), HReal::t().recip().unwrap() * h("-1"));
    assert!(parse_hreal("t^").is_err());
    assert!(parse_hreal("1/0").is_err());
    assert!(parse_hreal("(t").is_err());
}

#[test]
fn magnitude_examples() {
    assert_eq!(h("t").magnitude(), MagnitudeClass::Infinitesimal);
    assert_eq!(h("3 + t").magnitude(), MagnitudeClass::Appreciable);
    assert_eq!(h("1/t").magnitude(), MagnitudeClass::Infinite);
    assert_eq!(h("0").magnitude(), MagnitudeClass::Zero);
    assert!(h("t^(1/3)") > h("t^(1/2)"));
    assert!(h("-1/t") < h("-5"));
}
