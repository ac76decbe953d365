//! One-parameter families of conjugators realizing each arrow of the digraph.

use super::{Digraph, LimitClass, LimitsError};
use crate::field::rat;
use crate::linalg::{HMatrix3, Matrix3};
use crate::nonarch::HReal;

/// A conjugator `P(n)` written in `t = 1/n`, so `n -> infinity` is `t -> 0`.
#[derive(Clone, Debug)]
pub struct ParamPath {
    pub from: LimitClass,
    pub to: LimitClass,
    /// Classes visited, endpoints included.
    pub steps: Vec<LimitClass>,
    pub matrix: HMatrix3,
}

impl ParamPath {
    /// `P(n)` at a concrete `n`, evaluated exactly.
    pub fn at(&self, n: i64) -> Option<crate::linalg::QMatrix3> {
        let t = rat(1, n);
        let mut out = crate::linalg::QMatrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.matrix.0[i][j].eval_rational(&t)?;
            }
        }
        Some(out)
    }
}

/// Rate at which the earlier factor of a composite path runs, relative to
/// the later one: `P(n) = Q2(n) Q1(n^r)`.
const INNER_RATE: i64 = 3;

fn n_pow(k: i64) -> HReal {
    HReal::t().powi(-k)
}

fn h(x: i64) -> HReal {
    HReal::from_int(x)
}

fn upper(a: HReal, b: HReal, c: HReal) -> HMatrix3 {
    let (o, z) = (HReal::one(), HReal::zero());
    Matrix3([
        [o.clone(), a, b],
        [z.clone(), o.clone(), c],
        [z.clone(), z, o],
    ])
}

/// Single-step conjugators, in the variable `n` raised to `rate`.
fn direct(from: LimitClass, to: LimitClass, rate: i64) -> Option<HMatrix3> {
    use LimitClass::*;
    let n = n_pow(rate);
    let n2 = n_pow(2 * rate);
    let half = HReal::from_rational(rat(1, 2));
    let z = HReal::zero;
    let m = match (from, to) {
        (C, F) => upper(n, z(), z()),
        (C, N1) => upper(n.clone(), n2 * &half, n),
        (C, N2) => upper(n.clone(), n, z()),
        (C, N3) => upper(z(), n.clone(), n),
        // rescaled so the limit is the canonical N1 plane itself
        (F, N1) => HMatrix3::diag(h(2), h(1), h(1)).mul(&upper(n.clone(), n2 * &half, n)),
        (N1, N2) => HMatrix3::diag(h(1), h(1), n),
        (N1, N3) => HMatrix3::diag(HReal::one() / n, h(1), h(1)),
        _ => return None,
    };
    Some(m)
}

/// Explicit conjugator family from `from` to `to`. Pairs joined by a single
/// displayed family use it; longer paths compose the edges along the
/// shortest path, earlier steps running faster.
pub fn one_param_path(from: LimitClass, to: LimitClass) -> Result<ParamPath, LimitsError> {
    let steps = Digraph::path(from, to, false).ok_or(LimitsError::Unreachable(from, to))?;
    if let Some(m) = direct(from, to, 1) {
        return Ok(ParamPath {
            from,
            to,
            steps,
            matrix: m,
        });
    }
    let mut matrix = HMatrix3::identity();
    let mut rate = 1;
    for w in steps.windows(2).rev() {
        let m = direct(w[0], w[1], rate).expect("every edge has a family");
        matrix = matrix.mul(&m);
        rate *= INNER_RATE;
    }
    Ok(ParamPath {
        from,
        to,
        steps,
        matrix,
    })
}

/// The families shown explicitly for the digraph edges and the degenerations
/// of the diagonal group, with corrections applied.
pub fn explicit_paths() -> Vec<ParamPath> {
    use LimitClass::*;
    [
        (C, F),
        (C, N1),
        (C, N2),
        (C, N3),
        (F, N1),
        (N1, N2),
        (N1, N3),
    ]
    .into_iter()
    .map(|(a, b)| one_param_path(a, b).expect("listed pairs are reachable"))
    .collect()
}
