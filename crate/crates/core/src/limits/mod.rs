//! Conjugacy limits of the positive diagonal group of SL(3, R).
//!
//! Two independent classifiers live here: the triangle table (see
//! [`crate::triangle`]) and the Grassmannian oracle, which takes the limit
//! of the conjugated diagonal Lie algebra directly and identifies it by an
//! exact decision tree. [`full_classify`] runs both.

mod classes;
mod oracle;
mod paths;
mod sample;

use thiserror::Error;

pub use classes::{
    limit_reachable, proper_limit_reachable, ConfigClass, Digraph, LimitClass, UnknownClass,
};
pub use oracle::{
    characteristic_configuration, classify_abelian_subalgebra, configuration_of_plane,
    conjugated_cartan_plane, conjugated_plane, duality, grassmann_shadow, is_nilpotent_plane,
    is_unipotent_algebra,
};
pub use paths::{explicit_paths, one_param_path, ParamPath};
pub use sample::{triangle_matrix, random_table_instance, TableInstance};

use crate::field::Rational;
use crate::linalg::{normalizer_dimension, HMatrix3, LinalgError, Plane2};
use crate::triangle::{
    self, count_infinitesimal, normalize, shadow_config, triangle_from_matrix, InfinitesimalCounts,
    NormalizedTriangle, TriangleError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitsError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error("plane is not abelian")]
    NotAbelian,
    #[error("plane has elements with non-real eigenvalues")]
    NotSplit,
    #[error("shadow of the Plücker vector is not decomposable")]
    ShadowNotDecomposable,
    #[error("{1} is not a limit of {0}")]
    Unreachable(LimitClass, LimitClass),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Both classifications of the triangle spanned by the columns of `P`.
#[derive(Clone, Debug)]
pub struct FullReport {
    pub triangle: NormalizedTriangle,
    pub counts: InfinitesimalCounts,
    pub triangle_class: LimitClass,
    pub shadow_plane: Plane2<Rational>,
    pub oracle_class: LimitClass,
    pub agree: bool,
    pub config_class: ConfigClass,
    pub normalizer_dim: usize,
}

/// Oracle class of the conjugated diagonal algebra, with its limit plane.
pub fn oracle_classify(p: &HMatrix3) -> Result<(LimitClass, Plane2<Rational>), LimitsError> {
    let plane = grassmann_shadow(&conjugated_cartan_plane(p)?)?;
    Ok((classify_abelian_subalgebra(&plane)?, plane))
}

pub fn full_classify(p: &HMatrix3) -> Result<FullReport, LimitsError> {
    let t = triangle_from_matrix(p)?;
    let n = normalize(&t)?;
    let counts = count_infinitesimal(&n)?;
    let triangle_class = triangle::classify(&n);
    let config_class = shadow_config(&t)?;
    let (oracle_class, shadow_plane) = oracle_classify(p)?;
    Ok(FullReport {
        normalizer_dim: normalizer_dimension(&shadow_plane),
        triangle: n,
        counts,
        triangle_class,
        agree: triangle_class == oracle_class,
        shadow_plane,
        oracle_class,
        config_class,
    })
}
