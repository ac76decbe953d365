mod common;

use cartan_limits::limits::{
    classify_abelian_subalgebra, conjugated_plane, duality, explicit_paths, grassmann_shadow,
    is_unipotent_algebra, limit_reachable, one_param_path, oracle_classify, random_table_instance,
};
use cartan_limits::linalg::normalizer_dimension;
use cartan_limits::triangle::{classify, normalize, triangle_from_matrix};
use cartan_limits::{full_classify, HMatrix3, HReal, LimitClass, Matrix3};
use common::{appreciable_hreal, rng, table_instances};
use proptest::prelude::*;

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn relabel(m: &HMatrix3, perm: [usize; 3], scale: &[HReal; 3]) -> HMatrix3 {
    Matrix3::from_fn(|i, j| m.0[i][perm[j]].clone() * &scale[j])
}

fn triangle_class(m: &HMatrix3) -> LimitClass {
    classify(&normalize(&triangle_from_matrix(m).unwrap()).unwrap())
}

fn row() -> impl Strategy<Value = LimitClass> {
    prop::sample::select(LimitClass::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classes_survive_relabeling_and_rescaling(
        row in row(),
        seed in any::<u64>(),
        scale in [appreciable_hreal(), appreciable_hreal(), appreciable_hreal()],
    ) {
        let inst = random_table_instance(row, &mut rng(seed));
        for perm in PERMUTATIONS {
            let m = relabel(&inst.matrix, perm, &scale);
            prop_assert_eq!(triangle_class(&m), row);
            prop_assert_eq!(oracle_classify(&m).unwrap().0, row);
        }
    }

    #[test]
    fn infinitesimal_base_gives_unipotent_limits(row in row(), seed in any::<u64>()) {
        let inst = random_table_instance(row, &mut rng(seed));
        let (class, plane) = oracle_classify(&inst.matrix).unwrap();
        prop_assert_eq!(
            is_unipotent_algebra(&plane),
            matches!(class, LimitClass::N1 | LimitClass::N2 | LimitClass::N3)
        );
        if inst.delta.is_infinitesimal() {
            for x in plane.basis() {
                prop_assert!(x.mul(x).mul(x).is_zero());
            }
        }
    }

    #[test]
    fn duality_commutes_with_taking_limits(row in row(), seed in any::<u64>()) {
        let inst = random_table_instance(row, &mut rng(seed));
        let (class, plane) = oracle_classify(&inst.matrix).unwrap();
        prop_assert_eq!(classify_abelian_subalgebra(&plane.dual()).unwrap(), duality(class));
    }

    #[test]
    fn reports_are_consistent(row in row(), seed in any::<u64>()) {
        let inst = random_table_instance(row, &mut rng(seed));
        let r = full_classify(&inst.matrix).unwrap();
        prop_assert!(r.agree);
        prop_assert_eq!(r.normalizer_dim, normalizer_dimension(&row.canonical_algebra()));
        prop_assert!(r.shadow_plane.is_abelian());
    }
}

#[test]
fn duality_swaps_only_the_nilpotent_pencils() {
    let images: Vec<_> = LimitClass::ALL.iter().map(|&c| duality(c)).collect();
    use LimitClass::*;
    assert_eq!(images, vec![C, F, N1, N3, N2]);
    for a in LimitClass::ALL {
        for b in LimitClass::ALL {
            assert_eq!(
                limit_reachable(a, b),
                limit_reachable(duality(a), duality(b))
            );
        }
    }
}

#[test]
fn every_limit_is_realized_by_a_one_parameter_path() {
    for a in LimitClass::ALL {
        for b in LimitClass::ALL {
            match one_param_path(a, b) {
                Ok(path) => {
                    assert!(limit_reachable(a, b));
                    let moved = conjugated_plane(&a.canonical_algebra(), &path.matrix).unwrap();
                    let limit = grassmann_shadow(&moved).unwrap();
                    assert_eq!(
                        classify_abelian_subalgebra(&limit).unwrap(),
                        b,
                        "{a} -> {b}"
                    );
                }
                Err(_) => assert!(!limit_reachable(a, b), "{a} -> {b}"),
            }
        }
    }
    assert_eq!(explicit_paths().len(), 7);
}

#[test]
fn limits_never_raise_the_normalizer() {
    for inst in table_instances(4, 11) {
        let r = full_classify(&inst.matrix).unwrap();
        assert!(r.normalizer_dim >= 2);
        assert!(limit_reachable(LimitClass::C, r.oracle_class));
    }
}
