//! Floating-point cross-checks: substitute `t = 1/n`, follow the conjugated
//! diagonal algebra along a schedule of `n`, and classify the limit plane
//! with tolerance-aware tests.
//!
//! Conjugation and Plücker minors are computed exactly from the sampled
//! matrix and only then rounded, so entries of size `n^2` cannot cancel
//! each other out.

use nalgebra::{DMatrix, Matrix3 as M3};
use num_traits::{FromPrimitive, ToPrimitive};
use rayon::prelude::*;
use thiserror::Error;

use crate::field::{rat, Rational};
use crate::limits::LimitClass;
use crate::linalg::{HMatrix3, LinalgError, Matrix3, Plane2, QMatrix3, PLUCKER_LEN, SL3_DIM};

/// Plücker coordinates with absolute value below this snap to zero.
pub const SNAP_TOL: f64 = 1e-8;
/// Cauchy tolerance on the last step of the schedule.
pub const CAUCHY_TOL: f64 = 1e-6;
/// Relative tolerance for zero tests in the classifier.
pub const CLASSIFY_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("pole at n = {0}")]
    Pole(u64),
    #[error("matrix is numerically singular")]
    NearSingular,
    #[error("schedule needs at least 3 increasing values")]
    BadSchedule,
    #[error("no convergence detected: last Plücker step {0:e}")]
    NoConvergence(f64),
    #[error("limit plane does not match any class")]
    Unclassified,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type RealMatrix = M3<f64>;

/// `P = K N A` with `K` orthogonal, `N` unipotent upper triangular and `A`
/// positive diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Iwasawa {
    pub k: RealMatrix,
    pub n: RealMatrix,
    pub a: RealMatrix,
}

pub fn iwasawa(p: &RealMatrix) -> Result<Iwasawa, NumericError> {
    let qr = p.qr();
    let (mut q, mut r) = (qr.q(), qr.r());
    let scale = r.diagonal().amax();
    if scale == 0.0 || r.diagonal().amin() <= scale * 1e-14 {
        return Err(NumericError::NearSingular);
    }
    for i in 0..3 {
        if r[(i, i)] < 0.0 {
            q.column_mut(i).neg_mut();
            r.row_mut(i).neg_mut();
        }
    }
    let a = RealMatrix::from_diagonal(&r.diagonal());
    let mut n = r;
    for j in 0..3 {
        let d = a[(j, j)];
        n.column_mut(j).unscale_mut(d);
    }
    Ok(Iwasawa { k: q, n, a })
}

/// Entrywise value at `t = 1/n`.
pub fn evaluate_sequence(p: &HMatrix3, n: u64) -> Result<RealMatrix, NumericError> {
    let t = 1.0 / n as f64;
    let mut out = RealMatrix::zeros();
    for i in 0..3 {
        for j in 0..3 {
            out[(i, j)] = p.0[i][j].eval_f64(t).ok_or(NumericError::Pole(n))?;
        }
    }
    Ok(out)
}

/// Exact value at `t = 1/n` when every entry is rational there, otherwise
/// the floating-point value read back exactly.
pub fn evaluate_exact(p: &HMatrix3, n: u64) -> Result<QMatrix3, NumericError> {
    let t = Rational::new(1.into(), n.into());
    let mut out = QMatrix3::zero();
    for i in 0..3 {
        for j in 0..3 {
            let e = &p.0[i][j];
            out.0[i][j] = match e.eval_rational(&t) {
                Some(v) => v,
                None => {
                    let f = e.eval_f64(1.0 / n as f64).ok_or(NumericError::Pole(n))?;
                    Rational::from_f64(f).ok_or(NumericError::Pole(n))?
                }
            };
        }
    }
    Ok(out)
}

pub fn to_rational_matrix(m: &RealMatrix) -> QMatrix3 {
    Matrix3::from_fn(|i, j| Rational::from_f64(m[(i, j)]).expect("finite entries"))
}

/// A sequence of real matrices indexed by `n`.
pub enum RealMatrixSeq {
    /// A hyperreal matrix evaluated at `t = 1/n`.
    Hyperreal(HMatrix3),
    Sampled(Box<dyn Fn(u64) -> Result<RealMatrix, NumericError> + Send + Sync>),
}

impl RealMatrixSeq {
    pub fn at(&self, n: u64) -> Result<RealMatrix, NumericError> {
        match self {
            RealMatrixSeq::Hyperreal(p) => evaluate_sequence(p, n),
            RealMatrixSeq::Sampled(f) => f(n),
        }
    }

    fn exact_at(&self, n: u64) -> Result<QMatrix3, NumericError> {
        match self {
            RealMatrixSeq::Hyperreal(p) => evaluate_exact(p, n),
            RealMatrixSeq::Sampled(f) => Ok(to_rational_matrix(&f(n)?)),
        }
    }
}

/// Outcome of following a plane along a schedule.
#[derive(Clone, Debug)]
pub struct NumericLimit {
    /// Extrapolated, snapped Plücker vector of unit length.
    pub plucker: Vec<f64>,
    /// Unit Plücker vectors at each schedule point.
    pub trajectory: Vec<Vec<f64>>,
    /// Length of the last step before extrapolation.
    pub last_step: f64,
    pub class: LimitClass,
}

fn exact_plucker(source: &Plane2<Rational>, g: &QMatrix3) -> Result<Vec<Rational>, NumericError> {
    Ok(source.conjugate(g)?.plucker().0)
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn unit(v: &[f64]) -> Vec<f64> {
    let n = norm(v);
    v.iter().map(|x| x / n).collect()
}

/// `sqrt(1 - <u, v>^2)` for unit vectors: the sine of the angle between the
/// lines they span.
pub fn plucker_distance(u: &[f64], v: &[f64]) -> f64 {
    let (u, v) = (unit(u), unit(v));
    let d: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
    (1.0 - d * d).max(0.0).sqrt()
}

/// Unit Plücker vector of a rational plane.
pub fn plane_plucker_f64(plane: &Plane2<Rational>) -> Vec<f64> {
    unit(
        &plane
            .plucker()
            .0
            .iter()
            .map(|x| x.to_f64().unwrap_or(0.0))
            .collect::<Vec<_>>(),
    )
}

/// Follows `Ad_{P_n}(source)` along the schedule and classifies the limit.
pub fn detect_limit_plane_from(
    source: &Plane2<Rational>,
    seq: &RealMatrixSeq,
    schedule: &[u64],
) -> Result<NumericLimit, NumericError> {
    if schedule.len() < 3 || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(NumericError::BadSchedule);
    }
    let exact: Vec<Vec<Rational>> = schedule
        .par_iter()
        .map(|&n| exact_plucker(source, &seq.exact_at(n)?))
        .collect::<Result<_, _>>()?;
    // scale every point by the coordinate that dominates at the last one
    let last = exact.last().expect("nonempty");
    let pivot = (0..PLUCKER_LEN)
        .max_by(|&i, &j| {
            let (a, b) = (abs(&last[i]), abs(&last[j]));
            a.cmp(&b)
        })
        .expect("nonempty");
    let trajectory: Vec<Vec<f64>> = exact
        .iter()
        .map(|v| {
            let p = &v[pivot];
            v.iter()
                .map(|x| (x / p).to_f64().unwrap_or(f64::NAN))
                .collect()
        })
        .collect();
    let k = trajectory.len();
    let (v1, v2, v3) = (&trajectory[k - 3], &trajectory[k - 2], &trajectory[k - 1]);
    let d1: Vec<f64> = v2.iter().zip(v1).map(|(a, b)| a - b).collect();
    let d2: Vec<f64> = v3.iter().zip(v2).map(|(a, b)| a - b).collect();
    let (n1, n2) = (norm(&d1), norm(&d2));
    let ratio = if n1 > 0.0 { n2 / n1 } else { 0.0 };
    if n2 > CAUCHY_TOL && ratio > 0.5 {
        return Err(NumericError::NoConvergence(n2));
    }
    // Aitken's delta-squared per coordinate, where the coordinate contracts
    // geometrically
    let limit: Vec<f64> = v3
        .iter()
        .zip(d1.iter().zip(&d2))
        .map(|(&x, (&a, &b))| {
            let r = if a != 0.0 { b / a } else { 0.0 };
            if r > 0.0 && r < 1.0 {
                x + b * r / (1.0 - r)
            } else {
                x
            }
        })
        .collect();
    let limit: Vec<f64> = limit
        .into_iter()
        .map(|x| if x.abs() < SNAP_TOL { 0.0 } else { x })
        .collect();
    let plucker = unit(&limit);
    let class = classify_plucker_f64(&plucker)?;
    Ok(NumericLimit {
        plucker,
        trajectory: trajectory.iter().map(|v| unit(v)).collect(),
        last_step: n2,
        class,
    })
}

fn abs(x: &Rational) -> Rational {
    if x < &rat(0, 1) {
        -x.clone()
    } else {
        x.clone()
    }
}

/// [`detect_limit_plane_from`] starting at the diagonal algebra.
pub fn detect_limit_plane(
    seq: &RealMatrixSeq,
    schedule: &[u64],
) -> Result<NumericLimit, NumericError> {
    detect_limit_plane_from(&LimitClass::C.canonical_algebra(), seq, schedule)
}

fn from_coords(c: &[f64]) -> RealMatrix {
    let mut m = RealMatrix::zeros();
    let off = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    for (k, &(i, j)) in off.iter().enumerate() {
        m[(i, j)] = c[k];
    }
    m[(0, 0)] = c[6];
    m[(1, 1)] = c[7] - c[6];
    m[(2, 2)] = -c[7];
    m
}

/// Orthonormal basis (in sl(3) coordinates) of the plane with Plücker
/// vector `p`, as two matrices.
pub fn plane_from_plucker_f64(p: &[f64]) -> (RealMatrix, RealMatrix) {
    let pairs: Vec<(usize, usize)> = (0..SL3_DIM)
        .flat_map(|i| (i + 1..SL3_DIM).map(move |j| (i, j)))
        .collect();
    let get = |i: usize, j: usize| -> f64 {
        if i == j {
            0.0
        } else if i < j {
            p[pairs.iter().position(|&q| q == (i, j)).unwrap()]
        } else {
            -p[pairs.iter().position(|&q| q == (j, i)).unwrap()]
        }
    };
    let (a, b) = pairs[(0..PLUCKER_LEN)
        .max_by(|&i, &j| p[i].abs().total_cmp(&p[j].abs()))
        .unwrap()];
    let wa: Vec<f64> = (0..SL3_DIM).map(|k| get(a, k)).collect();
    let wb: Vec<f64> = (0..SL3_DIM).map(|k| get(b, k)).collect();
    let ua = unit(&wa);
    let proj: f64 = wb.iter().zip(&ua).map(|(x, y)| x * y).sum();
    let ub = unit(
        &wb.iter()
            .zip(&ua)
            .map(|(x, y)| x - proj * y)
            .collect::<Vec<_>>(),
    );
    (from_coords(&ua), from_coords(&ub))
}

fn fro(m: &RealMatrix) -> f64 {
    m.norm()
}

/// Same decision tree as the exact classifier, with zero tests relative to
/// [`CLASSIFY_TOL`] and ranks read off singular-value gaps.
pub fn classify_plane_f64(x1: &RealMatrix, x2: &RealMatrix) -> Result<LimitClass, NumericError> {
    let tol = CLASSIFY_TOL;
    let combos = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.6, -0.8)];
    let nilpotent = combos.iter().all(|&(a, b)| {
        let m = x1 * a + x2 * b;
        let s = fro(&m);
        (m * m).trace().abs() <= tol * s * s && m.determinant().abs() <= tol * s * s * s
    });
    if nilpotent {
        let products = [x1 * x1, x1 * x2, x2 * x1, x2 * x2];
        if products.iter().any(|m| fro(m) > tol) {
            return Ok(LimitClass::N1);
        }
        let mut stacked = DMatrix::<f64>::zeros(6, 3);
        stacked.view_mut((0, 0), (3, 3)).copy_from(x1);
        stacked.view_mut((3, 0), (3, 3)).copy_from(x2);
        let sv = stacked.singular_values();
        let smax = sv.max();
        let rank = sv.iter().filter(|&&s| s > smax * tol).count();
        return match 3 - rank {
            1 => Ok(LimitClass::N2),
            2 => Ok(LimitClass::N3),
            _ => Err(NumericError::Unclassified),
        };
    }
    // generic elements of F have a repeated eigenvalue; those of C do not
    let disc = |m: &RealMatrix| {
        let s = fro(m);
        let m = m / s;
        let p = -(m * m).trace() / 2.0;
        let q = -m.determinant();
        -4.0 * p * p * p - 27.0 * q * q
    };
    let generic = [
        x1 + x2 * 0.618_033_988_749_895,
        x1 * 0.414_213_562_373_095 - x2,
    ];
    if generic.iter().all(|m| disc(m).abs() <= tol) {
        Ok(LimitClass::F)
    } else if generic.iter().any(|m| disc(m) < -tol) {
        Err(NumericError::Unclassified)
    } else {
        Ok(LimitClass::C)
    }
}

pub fn classify_plucker_f64(p: &[f64]) -> Result<LimitClass, NumericError> {
    let (a, b) = plane_from_plucker_f64(p);
    classify_plane_f64(&a, &b)
}

/// Default schedule `10^2, 10^4, 10^6`.
pub const DEFAULT_SCHEDULE: [u64; 3] = [100, 10_000, 1_000_000];

/// `10^12, 10^15, 10^18`: for conjugators with fractional exponents, whose
/// slowest terms are still far from their asymptotics at `n = 10^2`.
pub const DEEP_SCHEDULE: [u64; 3] = [
    1_000_000_000_000,
    1_000_000_000_000_000,
    1_000_000_000_000_000_000,
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonarch::HReal;

    fn h(s: &str) -> HReal {
        s.parse().unwrap()
    }

    fn upper(d: &str, e: &str, n: &str) -> HMatrix3 {
        Matrix3([
            [h("1"), h("1"), h("1")],
            [h("0"), h(d), h(e)],
            [h("0"), h("0"), h(n)],
        ])
    }

    #[test]
    fn evaluation() {
        let m = evaluate_sequence(&upper("t", "t", "t^2"), 100).unwrap();
        assert!((m[(1, 1)] - 0.01).abs() < 1e-15);
        let mut p = HMatrix3::identity();
        p.0[0][1] = h("(1 + t)/(1 - t)");
        p.0[0][2] = h("1/t");
        let m = evaluate_sequence(&p, 2).unwrap();
        assert_eq!(m[(0, 1)], 3.0);
        let m = evaluate_sequence(&p, 10).unwrap();
        assert_eq!(m[(0, 2)], 10.0);
        assert_eq!(evaluate_sequence(&p, 1), Err(NumericError::Pole(1)));
    }

    #[test]
    fn iwasawa_of_upper_triangular_has_trivial_k() {
        let p = RealMatrix::new(2.0, 1.0, 3.0, 0.0, 0.5, -1.0, 0.0, 0.0, 4.0);
        let f = iwasawa(&p).unwrap();
        assert!((f.k - RealMatrix::identity()).norm() < 1e-12);
        assert!((f.k * f.n * f.a - p).norm() < 1e-12);
        let f = iwasawa(&RealMatrix::identity()).unwrap();
        assert_eq!(f.a, RealMatrix::identity());
    }

    #[test]
    fn identity_sequence_is_cartan() {
        let seq = RealMatrixSeq::Hyperreal(HMatrix3::identity());
        let r = detect_limit_plane(&seq, &DEFAULT_SCHEDULE).unwrap();
        assert_eq!(r.class, LimitClass::C);
    }

    #[test]
    fn upper_triangular_instances() {
        let cases = [
            (upper("1", "t", "t"), LimitClass::F),
            (upper("t", "t/2", "t^2"), LimitClass::N1),
            (upper("t", "t^2", "t^2"), LimitClass::N2),
            (upper("t", "t/2", "t^3"), LimitClass::N3),
        ];
        for (m, class) in cases {
            let r = detect_limit_plane(&RealMatrixSeq::Hyperreal(m), &DEFAULT_SCHEDULE).unwrap();
            assert_eq!(r.class, class);
        }
    }

    #[test]
    fn bad_schedules() {
        let seq = RealMatrixSeq::Hyperreal(HMatrix3::identity());
        assert_eq!(
            detect_limit_plane(&seq, &[10, 100]).unwrap_err(),
            NumericError::BadSchedule
        );
        assert_eq!(
            detect_limit_plane(&seq, &[10, 5, 100]).unwrap_err(),
            NumericError::BadSchedule
        );
    }
}
