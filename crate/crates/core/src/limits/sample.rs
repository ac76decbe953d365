//! Random upper-triangular conjugators `[[1,1,1],[0,δ,ε],[0,0,η]]` whose
//! coordinates fall in a prescribed row of the decision table.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;

use super::LimitClass;
use crate::field::{rat, Rational};
use crate::linalg::{HMatrix3, Matrix3};
use crate::nonarch::HReal;

#[derive(Clone, Debug)]
pub struct TableInstance {
    pub row: LimitClass,
    pub delta: HReal,
    pub epsilon: HReal,
    pub eta: HReal,
    pub matrix: HMatrix3,
}

/// The matrix with columns `[1:0:0]`, `[1:δ:0]`, `[1:ε:η]`.
pub fn triangle_matrix(delta: &HReal, epsilon: &HReal, eta: &HReal) -> HMatrix3 {
    let (o, z) = (HReal::one(), HReal::zero());
    Matrix3([
        [o.clone(), o.clone(), o],
        [z.clone(), delta.clone(), epsilon.clone()],
        [z.clone(), z, eta.clone()],
    ])
}

fn coefficient<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(num, rng.gen_range(1..=5))
}

/// Valuation in `{lo, lo + 1/2, ..., hi}`.
fn valuation<R: Rng>(rng: &mut R, lo: Rational, hi: Rational) -> Rational {
    let steps = ((hi.clone() - &lo) * rat(2, 1)).to_integer();
    let steps: i64 = steps.try_into().unwrap_or(0);
    lo + rat(rng.gen_range(0..=steps.max(0)), 2)
}

/// `c t^v`, plus a higher-order term half of the time.
fn element<R: Rng>(rng: &mut R, c: Rational, v: &Rational) -> HReal {
    let mut x = HReal::monomial(c, v.clone());
    if rng.gen_bool(0.5) {
        let bump = rat(rng.gen_range(1..=2), 2);
        x = x + HReal::monomial(coefficient(rng), v.clone() + bump);
    }
    x
}

/// When `ε` and `δ` have the same order, the ratio of leading coefficients
/// keeps the foot of the altitude nearer `p` than `q`.
const SAME_ORDER_RATIOS: [(i64, i64); 7] =
    [(-1, 1), (-2, 3), (-1, 2), (-1, 3), (1, 4), (1, 3), (2, 5)];

pub fn random_table_instance<R: Rng>(row: LimitClass, rng: &mut R) -> TableInstance {
    let zero = rat(0, 1);
    let half = rat(1, 2);
    let (vd, ve, vh, eps_zero) = match row {
        LimitClass::C => (zero.clone(), Some(zero.clone()), zero.clone(), false),
        LimitClass::F => {
            let vh = valuation(rng, half.clone(), rat(2, 1));
            let ve = valuation(rng, vh.clone(), vh.clone() + rat(1, 1));
            (zero.clone(), Some(ve), vh, rng.gen_bool(0.2))
        }
        LimitClass::N1 => {
            let vd = valuation(rng, half.clone(), rat(3, 2));
            let ve = valuation(rng, vd.clone(), vd.clone() + rat(1, 1));
            let vh = vd.clone() + &ve;
            (vd, Some(ve), vh, false)
        }
        LimitClass::N2 => {
            let vd = valuation(rng, half.clone(), rat(3, 2));
            let vh = valuation(rng, vd.clone(), vd.clone() + rat(1, 1));
            // ve + vd > vh
            let lo = (vh.clone() - &vd + &half).max(vd.clone());
            let ve = valuation(rng, lo.clone(), lo + rat(1, 1));
            (vd, Some(ve), vh, rng.gen_bool(0.2))
        }
        LimitClass::N3 => {
            let vd = valuation(rng, zero.clone(), rat(3, 2));
            let ve = valuation(rng, vd.clone(), vd.clone() + rat(1, 1));
            // ve + vd < vh
            let lo = (ve.clone() + &vd + &half).max(half.clone());
            let vh = valuation(rng, lo.clone(), lo + rat(1, 1));
            (vd, Some(ve), vh, false)
        }
    };
    let dc = coefficient(rng).abs();
    let delta = element(rng, dc.clone(), &vd);
    let hc = coefficient(rng);
    let eta = element(rng, hc, &vh);
    let epsilon = match ve {
        _ if eps_zero => HReal::zero(),
        Some(ve) if ve == vd => {
            let &(a, b) = SAME_ORDER_RATIOS.choose(rng).expect("nonempty");
            element(rng, dc * rat(a, b), &ve)
        }
        Some(ve) => {
            let ec = coefficient(rng);
            element(rng, ec, &ve)
        }
        None => HReal::zero(),
    };
    let matrix = triangle_matrix(&delta, &epsilon, &eta);
    TableInstance {
        row,
        delta,
        epsilon,
        eta,
        matrix,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::full_classify;
    use rand::SeedableRng;

    #[test]
    fn rows_match_both_pipelines() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for row in LimitClass::ALL {
            for _ in 0..40 {
                let inst = random_table_instance(row, &mut rng);
                let r = full_classify(&inst.matrix).unwrap();
                assert_eq!(
                    (r.triangle_class, r.oracle_class),
                    (row, row),
                    "δ={} ε={} η={}",
                    inst.delta,
                    inst.epsilon,
                    inst.eta
                );
            }
        }
    }
}
