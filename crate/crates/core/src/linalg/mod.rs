//! Exact 3-vectors and 3x3 matrices over any [`Field`], plus the sl(3)
//! machinery in [`sl3`].

pub mod elim;
mod sl3;

use std::fmt;

use thiserror::Error;

pub use sl3::{bracket, normalizer_dimension, Plane2, Plucker, Sl3Element, PLUCKER_LEN, SL3_DIM};

use crate::field::{Field, Rational};
use crate::nonarch::{HReal, NonArchimedean};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has an infinite entry at ({0}, {1}); it is not in Fin")]
    NotFinite(usize, usize),
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("basis is degenerate: the two elements do not span a plane")]
    DegeneratePlane,
    #[error("Plücker vector is not decomposable")]
    NotDecomposable,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector3<F>(pub [F; 3]);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix3<F>(pub [[F; 3]; 3]);

pub type HVector3 = Vector3<HReal>;
pub type HMatrix3 = Matrix3<HReal>;
pub type QVector3 = Vector3<Rational>;
pub type QMatrix3 = Matrix3<Rational>;

impl<F: Field> Vector3<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        Vector3([a, b, c])
    }

    pub fn zero() -> Self {
        Vector3([F::zero(), F::zero(), F::zero()])
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = F::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    pub fn dot(&self, o: &Self) -> F {
        self.0[0].clone() * &o.0[0] + self.0[1].clone() * &o.0[1] + self.0[2].clone() * &o.0[2]
    }

    pub fn norm_sq(&self) -> F {
        self.dot(self)
    }

    pub fn cross(&self, o: &Self) -> Self {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        Vector3([
            a1.clone() * b2 - a2.clone() * b1,
            a2.clone() * b0 - a0.clone() * b2,
            a0.clone() * b1 - a1.clone() * b0,
        ])
    }

    pub fn scale(&self, s: &F) -> Self {
        Vector3(self.0.clone().map(|x| x * s))
    }

    pub fn add(&self, o: &Self) -> Self {
        Vector3([
            self.0[0].clone() + &o.0[0],
            self.0[1].clone() + &o.0[1],
            self.0[2].clone() + &o.0[2],
        ])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Vector3([
            self.0[0].clone() - &o.0[0],
            self.0[1].clone() - &o.0[1],
            self.0[2].clone() - &o.0[2],
        ])
    }

    /// Whether `self` and `o` are proportional (including zero).
    pub fn parallel(&self, o: &Self) -> bool {
        self.cross(o).is_zero()
    }
}

impl<F: Field> Matrix3<F> {
    pub fn from_fn(f: impl Fn(usize, usize) -> F) -> Self {
        Matrix3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| F::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn diag(a: F, b: F, c: F) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    /// Elementary matrix `E_ij` (0-based indices).
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.0[i][j] = F::one();
        m
    }

    pub fn from_columns(c: [&Vector3<F>; 3]) -> Self {
        Self::from_fn(|i, j| c[j].0[i].clone())
    }

    pub fn column(&self, j: usize) -> Vector3<F> {
        Vector3(std::array::from_fn(|i| self.0[i][j].clone()))
    }

    pub fn row(&self, i: usize) -> Vector3<F> {
        Vector3(self.0[i].clone())
    }

    pub fn entry(&self, i: usize, j: usize) -> &F {
        &self.0[i][j]
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix3<G> {
        Matrix3::from_fn(|i, j| f(&self.0[i][j]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() + &o.0[i][j])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() - &o.0[i][j])
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() * s)
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(|i, j| -self.0[i][j].clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = F::zero();
            for k in 0..3 {
                if !self.0[i][k].is_zero() && !o.0[k][j].is_zero() {
                    acc = acc + self.0[i][k].clone() * &o.0[k][j];
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &Vector3<F>) -> Vector3<F> {
        Vector3(std::array::from_fn(|i| self.row(i).dot(v)))
    }

    pub fn trace(&self) -> F {
        self.0[0][0].clone() + &self.0[1][1] + &self.0[2][2]
    }

    pub fn det(&self) -> F {
        self.row(0).dot(&self.row(1).cross(&self.row(2)))
    }

    /// Classical adjoint: `M * adj(M) = det(M) * I`.
    pub fn adjugate(&self) -> Self {
        // columns of the adjugate are cross products of rows
        let r = [self.row(0), self.row(1), self.row(2)];
        let c0 = r[1].cross(&r[2]);
        let c1 = r[2].cross(&r[0]);
        let c2 = r[0].cross(&r[1]);
        Self::from_columns([&c0, &c1, &c2])
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        let d = self.det();
        if d.is_zero() {
            return Err(LinalgError::Singular);
        }
        let inv = F::one() / d;
        Ok(self.adjugate().scale(&inv))
    }

    /// `self * x * self^-1` given the inverse.
    pub fn conjugate(&self, x: &Self, inv: &Self) -> Self {
        self.mul(x).mul(inv)
    }

    fn rows_vec(&self) -> Vec<Vec<F>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        elim::rank(&self.rows_vec(), 3)
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<Vector3<F>> {
        elim::kernel(&self.rows_vec(), 3)
            .into_iter()
            .map(|v| Vector3([v[0].clone(), v[1].clone(), v[2].clone()]))
            .collect()
    }
}

impl<F: NonArchimedean> Matrix3<F> {
    /// Entrywise shadow; fails outside `Fin`.
    pub fn shadow(&self) -> Result<QMatrix3, LinalgError> {
        let mut out = QMatrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.0[i][j]
                    .shadow()
                    .map_err(|_| LinalgError::NotFinite(i, j))?;
            }
        }
        Ok(out)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.magnitude().is_finite())
    }
}

impl QMatrix3 {
    pub fn to_hreal(&self) -> HMatrix3 {
        self.map(|x| HReal::from_rational(x.clone()))
    }
}

impl QVector3 {
    pub fn to_hreal(&self) -> HVector3 {
        Vector3(self.0.clone().map(HReal::from_rational))
    }
}

/// Entrywise shadow of a hyperreal matrix.
pub fn matrix_shadow(m: &HMatrix3) -> Result<QMatrix3, LinalgError> {
    m.shadow()
}

impl<F: Field + fmt::Display> fmt::Display for Matrix3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "[{}, {}, {}]", r[0], r[1], r[2])?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Matrix3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<F: Field> fmt::Debug for Vector3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
