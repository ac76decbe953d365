#![allow(dead_code)]

use cartan_limits::limits::{random_table_instance, TableInstance};
use cartan_limits::{rat, HReal, LimitClass, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn h(s: &str) -> HReal {
    s.parse().expect("valid element")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `per_row` instances of every row, in row order.
pub fn table_instances(per_row: usize, seed: u64) -> Vec<TableInstance> {
    let mut r = rng(seed);
    LimitClass::ALL
        .iter()
        .flat_map(|&row| {
            (0..per_row)
                .map(|_| random_table_instance(row, &mut r))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=7, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

/// Sums of up to four monomials with exponents in thirds and halves.
pub fn puiseux_poly() -> impl Strategy<Value = HReal> {
    prop::collection::vec(
        (
            nonzero_rational(),
            -6i64..=8,
            prop::sample::select(vec![1i64, 2, 3]),
        ),
        0..4,
    )
    .prop_map(|terms| {
        terms.into_iter().fold(HReal::zero(), |acc, (c, e, r)| {
            acc + HReal::monomial(c, rat(e, r))
        })
    })
}

/// Quotients of Puiseux polynomials, including zero.
pub fn hreal() -> impl Strategy<Value = HReal> {
    (puiseux_poly(), puiseux_poly(), any::<bool>()).prop_map(|(a, b, plain)| {
        if plain || b.is_zero() {
            a
        } else {
            a / b
        }
    })
}

pub fn nonzero_hreal() -> impl Strategy<Value = HReal> {
    hreal().prop_filter("nonzero", |x| !x.is_zero())
}

/// Finite and not infinitesimal, of either sign.
pub fn appreciable_hreal() -> impl Strategy<Value = HReal> {
    (nonzero_rational(), puiseux_poly()).prop_map(|(c, tail)| {
        let tail = tail * HReal::t() * HReal::t().powi(6);
        HReal::from_rational(c) + tail
    })
}
