//! Conjugacy limits of the diagonal Cartan subgroup of SL(3, R), computed
//! exactly over a non-Archimedean field.
//!
//! The classification is read off a "nonstandard triangle": the three
//! column classes of a conjugating matrix over a field with infinitesimals.
//! [`limits::full_classify`] runs the triangle table alongside an
//! independent Grassmannian computation and reports both.

pub mod field;
pub mod limits;
pub mod linalg;
pub mod nonarch;
pub mod numeric;
pub mod projective;
pub mod sl2;
pub mod triangle;

pub use field::{rat, Field, OrderedField, Rational};
pub use limits::{full_classify, ConfigClass, Digraph, FullReport, LimitClass, LimitsError};
pub use linalg::{HMatrix3, Matrix3, Plane2, QMatrix3, Vector3};
pub use nonarch::{parse_hreal, HReal, MagnitudeClass, NonArchError, NonArchimedean};
pub use projective::{ProjLine, ProjPoint};
pub use sl2::Sl2LimitClass;
pub use triangle::{NonstandardTriangle, NormalizedTriangle};
