//! The one-dimensional warm-up: limits of the diagonal group of SL(2, R)
//! conjugated so that it fixes `[1:0]` and `[1:δ]`.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::field::Rational;
use crate::nonarch::{HReal, MagnitudeClass, NonArchError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("delta must be nonzero")]
    ZeroDelta,
    #[error("delta must be finite")]
    InfiniteDelta,
    #[error("group parameter must be positive")]
    NonPositiveParameter,
    #[error("element is not finite")]
    NotFinite(#[from] NonArchError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2LimitClass {
    /// Two fixed points on the projective line.
    Hyperbolic,
    /// One fixed point.
    Parabolic,
}

impl Sl2LimitClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Sl2LimitClass::Hyperbolic => "hyperbolic",
            Sl2LimitClass::Parabolic => "parabolic",
        }
    }

    pub fn fixed_points(self) -> usize {
        match self {
            Sl2LimitClass::Hyperbolic => 2,
            Sl2LimitClass::Parabolic => 1,
        }
    }
}

impl fmt::Display for Sl2LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type Mat2<F> = [[F; 2]; 2];

/// The group `{[[a, (a - 1/a)/δ], [0, 1/a]] : a > 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GDeltaFamily {
    delta: HReal,
}

fn check_delta(delta: &HReal) -> Result<(), Sl2Error> {
    match delta.magnitude() {
        MagnitudeClass::Zero => Err(Sl2Error::ZeroDelta),
        MagnitudeClass::Infinite => Err(Sl2Error::InfiniteDelta),
        _ => Ok(()),
    }
}

pub fn g_delta_family(delta: &HReal) -> Result<GDeltaFamily, Sl2Error> {
    check_delta(delta)?;
    Ok(GDeltaFamily {
        delta: delta.clone(),
    })
}

impl GDeltaFamily {
    pub fn delta(&self) -> &HReal {
        &self.delta
    }

    pub fn element(&self, a: &HReal) -> Result<Mat2<HReal>, Sl2Error> {
        if a.signum() != std::cmp::Ordering::Greater {
            return Err(Sl2Error::NonPositiveParameter);
        }
        let inv = a.recip()?;
        let b = (a.clone() - &inv) / &self.delta;
        Ok([[a.clone(), b], [HReal::zero(), inv]])
    }

    /// A finite element: `a = 1 + cδ`, whose upper-right entry has shadow `2c`.
    pub fn finite_sample(&self, c: &Rational) -> Result<Mat2<HReal>, Sl2Error> {
        let a = HReal::one() + HReal::from_rational(c.clone()) * &self.delta;
        self.element(&a)
    }

    /// Image of `[1 : ε]` under `g`, as the affine coordinate.
    pub fn act(&self, g: &Mat2<HReal>, epsilon: &HReal) -> HReal {
        let top = g[0][0].clone() + g[0][1].clone() * epsilon;
        let bottom = g[1][1].clone() * epsilon;
        bottom / top
    }
}

pub fn classify_sl2(delta: &HReal) -> Result<Sl2LimitClass, Sl2Error> {
    check_delta(delta)?;
    Ok(if delta.is_infinitesimal() {
        Sl2LimitClass::Parabolic
    } else {
        Sl2LimitClass::Hyperbolic
    })
}

pub fn shadow2(m: &Mat2<HReal>) -> Result<Mat2<Rational>, Sl2Error> {
    let s = |x: &HReal| x.shadow().map_err(Sl2Error::from);
    Ok([[s(&m[0][0])?, s(&m[0][1])?], [s(&m[1][0])?, s(&m[1][1])?]])
}

/// Fixed points of `m` acting on the real projective line; `None` when `m`
/// is scalar and fixes everything.
pub fn fixed_points_rp1(m: &Mat2<Rational>) -> Option<usize> {
    let [[a, b], [c, d]] = m;
    if b.is_zero() && c.is_zero() && a == d {
        return None;
    }
    let tr = a + d;
    let det = a * d - b * c;
    let disc = &tr * &tr - Rational::from_integer(4.into()) * det;
    Some(if disc.is_positive() {
        2
    } else if disc.is_zero() {
        1
    } else {
        0
    })
}

/// Displacement of `y = [1 : ε]` under the element of the group at `a`.
pub fn link_displacement(delta: &HReal, epsilon: &HReal, a: &HReal) -> Result<HReal, Sl2Error> {
    let fam = g_delta_family(delta)?;
    let g = fam.element(a)?;
    Ok(fam.act(&g, epsilon) - epsilon)
}
