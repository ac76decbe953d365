//! A computable non-Archimedean ordered field.
//!
//! [`HReal`] models the hyperreals by rational functions in one positive
//! infinitesimal `t`, with rational exponents allowed. Order is decided by
//! the sign of the leading coefficient, valuations by the leading exponent.
//! The classification code only ever asks for magnitude classes and orders,
//! which this field decides exactly.

mod hreal;
mod parse;
mod poly;

use std::fmt;

use thiserror::Error;

pub use hreal::{HReal, PuiseuxPoly};
pub use parse::{parse_hreal, ParseError};

use crate::field::{OrderedField, Rational};
#[allow(unused_imports)]
pub(crate) use poly::UPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NonArchError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("infinite element has no shadow")]
    InfiniteShadow,
    #[error("galaxy scale must be nonzero")]
    ZeroGalaxyScale,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Size of a field element relative to the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MagnitudeClass {
    Zero,
    Infinitesimal,
    Appreciable,
    Infinite,
}

impl MagnitudeClass {
    /// Zero, infinitesimal or appreciable.
    pub fn is_finite(self) -> bool {
        self != MagnitudeClass::Infinite
    }

    /// Zero counts as infinitesimal.
    pub fn is_infinitesimal(self) -> bool {
        matches!(self, MagnitudeClass::Zero | MagnitudeClass::Infinitesimal)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MagnitudeClass::Zero => "zero",
            MagnitudeClass::Infinitesimal => "infinitesimal",
            MagnitudeClass::Appreciable => "appreciable",
            MagnitudeClass::Infinite => "infinite",
        }
    }
}

impl fmt::Display for MagnitudeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An ordered field with a valuation and a standard-part map.
///
/// The rationals are the trivial instance: every nonzero element has
/// valuation 0 and is its own shadow.
pub trait NonArchimedean: OrderedField {
    /// `None` for zero.
    fn valuation(&self) -> Option<Rational>;
    fn shadow(&self) -> Result<Rational, NonArchError>;

    /// A positive multiple of `v` that is cheap to compute with; only
    /// scale-invariant quantities may be derived from it.
    fn cleared(v: &[Self; 3]) -> [Self; 3] {
        v.clone()
    }

    fn magnitude(&self) -> MagnitudeClass {
        use num_traits::Zero;
        match self.valuation() {
            None => MagnitudeClass::Zero,
            Some(v) if v.is_zero() => MagnitudeClass::Appreciable,
            Some(v) if v > Rational::zero() => MagnitudeClass::Infinitesimal,
            Some(_) => MagnitudeClass::Infinite,
        }
    }
}

impl NonArchimedean for Rational {
    fn valuation(&self) -> Option<Rational> {
        use num_traits::Zero;
        (!Zero::is_zero(self)).then(Rational::zero)
    }

    fn shadow(&self) -> Result<Rational, NonArchError> {
        Ok(self.clone())
    }
}

/// Whether `(a - b) / eps` is finite, i.e. `b` lies in the `eps`-galaxy of `a`.
/// With `eps = 1` this is ordinary galaxy equivalence.
pub fn galaxy_equiv(a: &HReal, b: &HReal, eps: &HReal) -> Result<bool, NonArchError> {
    if eps.is_zero() {
        return Err(NonArchError::ZeroGalaxyScale);
    }
    Ok((a - b).checked_div(eps)?.is_finite())
}

/// Two nonzero elements have the same order when their ratio is appreciable.
pub fn same_order(a: &HReal, b: &HReal) -> Result<bool, NonArchError> {
    Ok(a.valuation()? == b.valuation()?)
}
