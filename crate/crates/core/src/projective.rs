//! Points and lines of the projective plane over a non-Archimedean field.
//!
//! Distances are never taken directly: [`sep_sq`] returns the squared sine of
//! the spherical distance between representatives, which needs no square
//! roots and has exactly twice the order of the distance itself.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, Rational};
use crate::linalg::Vector3;
use crate::nonarch::{HReal, MagnitudeClass, NonArchimedean};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectiveError {
    #[error("the zero vector is not a projective point or line")]
    ZeroVector,
    #[error("coincident points have no join")]
    CoincidentPoints,
    #[error("coincident lines have no meet")]
    CoincidentLines,
    #[error("point lies on the line")]
    Incident,
    #[error("point is the pole of the line; the perpendicular is not unique")]
    Pole,
}

/// Divides by the first entry of minimal valuation.
fn canonical<F: NonArchimedean>(v: Vector3<F>) -> Result<Vector3<F>, ProjectiveError> {
    let mut best: Option<(usize, Rational)> = None;
    for (i, x) in v.0.iter().enumerate() {
        if let Some(val) = x.valuation() {
            if best.as_ref().is_none_or(|(_, b)| val < *b) {
                best = Some((i, val));
            }
        }
    }
    let (i, _) = best.ok_or(ProjectiveError::ZeroVector)?;
    let inv = F::one() / &v.0[i];
    Ok(v.scale(&inv))
}

macro_rules! proj_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name<F: Field>(Vector3<F>);

        impl<F: NonArchimedean> $name<F> {
            pub fn new(v: Vector3<F>) -> Result<Self, ProjectiveError> {
                canonical(v).map($name)
            }

            pub fn from_coords(a: F, b: F, c: F) -> Result<Self, ProjectiveError> {
                Self::new(Vector3::new(a, b, c))
            }

            /// Canonical representative: finite, with some entry equal to 1.
            pub fn vector(&self) -> &Vector3<F> {
                &self.0
            }
        }

        impl<F: Field + fmt::Display> fmt::Display for $name<F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [a, b, c] = &self.0 .0;
                write!(f, "[{} : {} : {}]", a, b, c)
            }
        }

        impl<F: Field> fmt::Debug for $name<F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({:?})", stringify!($name), self.0)
            }
        }
    };
}

proj_type!(ProjPoint, "A point of the projective plane.");
proj_type!(
    ProjLine,
    "A line of the projective plane, stored by its normal vector."
);

impl<F: NonArchimedean> ProjPoint<F> {
    pub fn lies_on(&self, l: &ProjLine<F>) -> bool {
        self.0.dot(&l.0).is_zero()
    }
}

impl<F: NonArchimedean> ProjLine<F> {
    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        p.lies_on(self)
    }
}

pub fn join<F: NonArchimedean>(
    p: &ProjPoint<F>,
    q: &ProjPoint<F>,
) -> Result<ProjLine<F>, ProjectiveError> {
    ProjLine::new(p.0.cross(&q.0)).map_err(|_| ProjectiveError::CoincidentPoints)
}

pub fn meet<F: NonArchimedean>(
    l: &ProjLine<F>,
    m: &ProjLine<F>,
) -> Result<ProjPoint<F>, ProjectiveError> {
    ProjPoint::new(l.0.cross(&m.0)).map_err(|_| ProjectiveError::CoincidentLines)
}

/// A squared chordal separation, used only through its order and class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderSurrogate<F: Field> {
    pub value: F,
}

impl<F: NonArchimedean> OrderSurrogate<F> {
    pub fn magnitude(&self) -> MagnitudeClass {
        self.value.magnitude()
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.magnitude().is_infinitesimal()
    }

    /// Valuation of the squared quantity; `None` when coincident.
    pub fn valuation(&self) -> Option<Rational> {
        self.value.valuation()
    }

    /// Order of the unsquared distance, half the valuation.
    pub fn order(&self) -> Option<Rational> {
        self.valuation()
            .map(|v| v / Rational::from_integer(2.into()))
    }
}

fn sin_sq<F: NonArchimedean>(a: &Vector3<F>, b: &Vector3<F>) -> F {
    let (a, b) = (Vector3(F::cleared(&a.0)), Vector3(F::cleared(&b.0)));
    let c = a.cross(&b);
    c.norm_sq() / (a.norm_sq() * b.norm_sq())
}

/// `|p x q|^2 / (|p|^2 |q|^2)`: the squared sine of the angle between
/// representatives.
pub fn sep_sq<F: NonArchimedean>(p: &ProjPoint<F>, q: &ProjPoint<F>) -> OrderSurrogate<F> {
    OrderSurrogate {
        value: sin_sq(&p.0, &q.0),
    }
}

/// The dual of [`sep_sq`], on line normals.
pub fn angle_sq<F: NonArchimedean>(l: &ProjLine<F>, m: &ProjLine<F>) -> OrderSurrogate<F> {
    OrderSurrogate {
        value: sin_sq(&l.0, &m.0),
    }
}

/// `sin^2` of the angle between `v` and the plane of `l`, i.e. the squared
/// spherical distance from a point to a line.
pub fn point_line_sq<F: NonArchimedean>(v: &ProjPoint<F>, l: &ProjLine<F>) -> OrderSurrogate<F> {
    let (v, l) = (Vector3(F::cleared(&v.0 .0)), Vector3(F::cleared(&l.0 .0)));
    let d = v.dot(&l);
    OrderSurrogate {
        value: d.clone() * d / (v.norm_sq() * l.norm_sq()),
    }
}

fn shadow_vec(v: &Vector3<HReal>) -> Vector3<Rational> {
    Vector3(v.0.clone().map(|x| {
        x.shadow()
            .expect("canonical representatives have finite entries")
    }))
}

pub fn shadow_point(p: &ProjPoint<HReal>) -> ProjPoint<Rational> {
    ProjPoint::new(shadow_vec(&p.0)).expect("canonical representatives have a unit entry")
}

pub fn shadow_line(l: &ProjLine<HReal>) -> ProjLine<Rational> {
    ProjLine::new(shadow_vec(&l.0)).expect("canonical representatives have a unit entry")
}

/// Orthogonal projection of `x` onto `l` in representative space.
pub fn foot_of_perpendicular<F: NonArchimedean>(
    x: &ProjPoint<F>,
    l: &ProjLine<F>,
) -> Result<ProjPoint<F>, ProjectiveError> {
    let n = &l.0;
    let d = x.0.dot(n);
    if d.is_zero() {
        return Err(ProjectiveError::Incident);
    }
    let y = x.0.sub(&n.scale(&(d / n.norm_sq())));
    ProjPoint::new(y).map_err(|_| ProjectiveError::Pole)
}

/// Lexicographic order of canonical representatives, used for deterministic
/// tie-breaking.
pub fn cmp_points<F: NonArchimedean>(a: &ProjPoint<F>, b: &ProjPoint<F>) -> Ordering {
    for (x, y) in a.0 .0.iter().zip(b.0 .0.iter()) {
        match x.cmp_field(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}
