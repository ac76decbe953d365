//! Nonstandard triangles: normalization, the (δ, ε, η, α) coordinates and
//! the magnitude-class decision table.

use std::cmp::Ordering;

use thiserror::Error;

use crate::field::{Field, OrderedField, Rational};
use crate::limits::{ConfigClass, LimitClass};
use crate::linalg::{HMatrix3, HVector3, Vector3};
use crate::nonarch::{HReal, MagnitudeClass};
use crate::projective::{
    cmp_points, foot_of_perpendicular, join, point_line_sq, sep_sq, shadow_line, shadow_point,
    OrderSurrogate, ProjLine, ProjPoint, ProjectiveError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangleError {
    #[error("matrix is singular")]
    Singular,
    #[error("points are not in general position")]
    Degenerate,
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Three points of the hyperreal projective plane in general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonstandardTriangle {
    pub p: ProjPoint<HReal>,
    pub q: ProjPoint<HReal>,
    pub x: ProjPoint<HReal>,
}

impl NonstandardTriangle {
    pub fn new(
        p: ProjPoint<HReal>,
        q: ProjPoint<HReal>,
        x: ProjPoint<HReal>,
    ) -> Result<Self, TriangleError> {
        if p.vector().dot(&q.vector().cross(x.vector())).is_zero() {
            return Err(TriangleError::Degenerate);
        }
        Ok(NonstandardTriangle { p, q, x })
    }

    pub fn vertices(&self) -> [&ProjPoint<HReal>; 3] {
        [&self.p, &self.q, &self.x]
    }

    /// Side lines `pq`, `qx`, `xp`.
    pub fn sides(&self) -> [ProjLine<HReal>; 3] {
        let j = |a, b| join(a, b).expect("general position");
        [
            j(&self.p, &self.q),
            j(&self.q, &self.x),
            j(&self.x, &self.p),
        ]
    }
}

/// The triangle of column classes of `m`.
pub fn triangle_from_matrix(m: &HMatrix3) -> Result<NonstandardTriangle, TriangleError> {
    if m.det().is_zero() {
        return Err(TriangleError::Singular);
    }
    let col = |j| ProjPoint::new(m.column(j)).expect("nonsingular matrix has nonzero columns");
    NonstandardTriangle::new(col(0), col(1), col(2))
}

/// A triangle labeled so that the shortest altitude drops from `x` to `y`
/// on `H = pq`, with `y` no farther from `p` than from `q`.
#[derive(Clone, Debug)]
pub struct NormalizedTriangle {
    pub p: ProjPoint<HReal>,
    pub q: ProjPoint<HReal>,
    pub x: ProjPoint<HReal>,
    pub y: ProjPoint<HReal>,
    pub delta_sq: OrderSurrogate<HReal>,
    pub epsilon_sq: OrderSurrogate<HReal>,
    pub eta_sq: OrderSurrogate<HReal>,
    /// Unit monomials carrying the orders of the three lengths.
    pub delta: HReal,
    pub epsilon: HReal,
    pub eta: HReal,
    /// `εδ/η`, or zero when `ε = 0`.
    pub alpha: HReal,
    /// Sides `pq`, `qx`, `xp`.
    pub side_classes: [MagnitudeClass; 3],
    /// Interior angles at `p`, `q`, `x`.
    pub angle_classes: [MagnitudeClass; 3],
}

fn half_order_monomial(s: &OrderSurrogate<HReal>) -> HReal {
    match s.order() {
        Some(o) => HReal::t_pow(o),
        None => HReal::zero(),
    }
}

/// Relabels `t` and computes its coordinates.
pub fn normalize(t: &NonstandardTriangle) -> Result<NormalizedTriangle, TriangleError> {
    let v = t.vertices();
    // altitude from vertex i onto the line through the other two
    let altitudes: Vec<OrderSurrogate<HReal>> = (0..3)
        .map(|i| {
            let (a, b) = (v[(i + 1) % 3], v[(i + 2) % 3]);
            Ok(point_line_sq(v[i], &join(a, b)?))
        })
        .collect::<Result<_, ProjectiveError>>()?;
    let xi = (0..3)
        .min_by(|&i, &j| {
            altitudes[i]
                .value
                .cmp(&altitudes[j].value)
                .then_with(|| cmp_points(v[i], v[j]))
        })
        .expect("three vertices");
    let x = v[xi].clone();
    let (mut p, mut q) = (v[(xi + 1) % 3].clone(), v[(xi + 2) % 3].clone());
    let h = join(&p, &q)?;
    let y = match foot_of_perpendicular(&x, &h) {
        Ok(y) => y,
        // x is the pole of H: every point of H is a foot; take the nearer
        // vertex by the tie-break below.
        Err(ProjectiveError::Pole) => {
            if cmp_points(&q, &p) == Ordering::Less {
                std::mem::swap(&mut p, &mut q);
            }
            p.clone()
        }
        Err(e) => return Err(e.into()),
    };
    let dp = sep_sq(&y, &p).value;
    let dq = sep_sq(&y, &q).value;
    if dq < dp || (dq == dp && cmp_points(&q, &p) == Ordering::Less) {
        std::mem::swap(&mut p, &mut q);
    }

    let delta_sq = sep_sq(&p, &q);
    let epsilon_sq = sep_sq(&p, &y);
    let eta_sq = sep_sq(&x, &y);
    let delta = half_order_monomial(&delta_sq);
    let epsilon = half_order_monomial(&epsilon_sq);
    let eta = half_order_monomial(&eta_sq);
    if delta.is_zero() || eta.is_zero() {
        return Err(TriangleError::Degenerate);
    }
    let alpha = epsilon.clone() * &delta / &eta;

    let side_classes = [
        delta_sq.magnitude(),
        sep_sq(&q, &x).magnitude(),
        sep_sq(&x, &p).magnitude(),
    ];
    let angle_classes = interior_angle_classes(&p, &q, &x);
    Ok(NormalizedTriangle {
        p,
        q,
        x,
        y,
        delta_sq,
        epsilon_sq,
        eta_sq,
        delta,
        epsilon,
        eta,
        alpha,
        side_classes,
        angle_classes,
    })
}

/// Magnitude classes of the interior angles of the spherical triangle
/// spanned by representatives lifted into one hemisphere.
fn interior_angle_classes(
    p: &ProjPoint<HReal>,
    q: &ProjPoint<HReal>,
    x: &ProjPoint<HReal>,
) -> [MagnitudeClass; 3] {
    let pv = p.vector().clone();
    let lift = |v: &HVector3| {
        if v.dot(&pv).sign() == Ordering::Less {
            v.scale(&-HReal::one())
        } else {
            v.clone()
        }
    };
    let pts = [pv.clone(), lift(q.vector()), lift(x.vector())];
    std::array::from_fn(|i| {
        let v = &pts[i];
        let tangent = |a: &HVector3| a.sub(&v.scale(&(a.dot(v) / v.norm_sq())));
        let ta = tangent(&pts[(i + 1) % 3]);
        let tb = tangent(&pts[(i + 2) % 3]);
        let d = ta.dot(&tb);
        if d.sign() != Ordering::Greater {
            return MagnitudeClass::Appreciable;
        }
        let (na, nb) = (ta.norm_sq(), tb.norm_sq());
        let prod = na * nb;
        let s = (prod.clone() - d.square()) / prod;
        s.magnitude()
    })
}

/// Numbers of infinitesimal sides and angles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InfinitesimalCounts {
    pub sides: u8,
    pub angles: u8,
}

/// Counts infinitesimal sides and angles and checks the count is one of the
/// seven realizable combinations.
pub fn count_infinitesimal(t: &NormalizedTriangle) -> Result<InfinitesimalCounts, TriangleError> {
    let count = |c: &[MagnitudeClass; 3]| c.iter().filter(|m| m.is_infinitesimal()).count() as u8;
    let counts = InfinitesimalCounts {
        sides: count(&t.side_classes),
        angles: count(&t.angle_classes),
    };
    let valid = matches!(counts.sides, 0 | 1 | 3)
        && counts.angles <= 2
        && (counts.sides, counts.angles) != (0, 1)
        && (counts.sides, counts.angles) != (1, 0);
    if !valid {
        return Err(TriangleError::InvariantViolation(format!(
            "{} infinitesimal sides and {} infinitesimal angles",
            counts.sides, counts.angles
        )));
    }
    Ok(counts)
}

/// The decision table on magnitude classes of δ, η and α.
pub fn classify_magnitudes(
    delta: MagnitudeClass,
    eta: MagnitudeClass,
    alpha: MagnitudeClass,
) -> LimitClass {
    use MagnitudeClass::*;
    match (delta, eta, alpha) {
        (Appreciable, Appreciable, _) => LimitClass::C,
        (Appreciable, _, Infinite) => LimitClass::N3,
        (Appreciable, _, _) => LimitClass::F,
        (_, _, Appreciable) => LimitClass::N1,
        (_, _, Infinite) => LimitClass::N3,
        _ => LimitClass::N2,
    }
}

/// Applies the table to explicit coordinates `δ, ε, η` (with `α = εδ/η`).
pub fn classify_coordinates(
    delta: &HReal,
    epsilon: &HReal,
    eta: &HReal,
) -> Result<LimitClass, TriangleError> {
    let alpha = epsilon.clone() * delta;
    let alpha = alpha
        .checked_div(eta)
        .map_err(|_| TriangleError::Degenerate)?;
    if delta.is_zero() || !delta.is_finite() {
        return Err(TriangleError::Degenerate);
    }
    Ok(classify_magnitudes(
        delta.magnitude(),
        eta.magnitude(),
        alpha.magnitude(),
    ))
}

pub fn classify(t: &NormalizedTriangle) -> LimitClass {
    classify_magnitudes(t.delta.magnitude(), t.eta.magnitude(), t.alpha.magnitude())
}

/// Classifies the degenerate configuration formed by the shadows of the
/// vertices and sides.
pub fn shadow_config(t: &NonstandardTriangle) -> Result<ConfigClass, TriangleError> {
    let mut points: Vec<ProjPoint<Rational>> = Vec::new();
    for v in t.vertices() {
        let s = shadow_point(v);
        if !points.contains(&s) {
            points.push(s);
        }
    }
    let mut lines: Vec<ProjLine<Rational>> = Vec::new();
    for l in t.sides() {
        let s = shadow_line(&l);
        if !lines.contains(&s) {
            lines.push(s);
        }
    }
    ConfigClass::from_counts(points.len(), lines.len()).ok_or_else(|| {
        TriangleError::InvariantViolation(format!(
            "{} shadow points with {} shadow lines",
            points.len(),
            lines.len()
        ))
    })
}

/// Point from three field entries, for tests and callers building triangles
/// by hand.
pub fn point(a: HReal, b: HReal, c: HReal) -> Result<ProjPoint<HReal>, TriangleError> {
    Ok(ProjPoint::new(Vector3::new(a, b, c))?)
}
