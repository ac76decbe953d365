//! Traceless matrices, 2-planes in sl(3) and their Plücker coordinates.

use std::fmt;

use super::{elim, LinalgError, Matrix3};
use crate::field::Field;

pub const SL3_DIM: usize = 8;
/// Number of Plücker coordinates of a 2-plane in an 8-dimensional space.
pub const PLUCKER_LEN: usize = 28;

/// Basis order: E12, E13, E21, E23, E31, E32, H1 = diag(1,-1,0), H2 = diag(0,1,-1).
const OFF_DIAG: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// A traceless 3x3 matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sl3Element<F: Field>(Matrix3<F>);

impl<F: Field> Sl3Element<F> {
    pub fn new(m: Matrix3<F>) -> Result<Self, LinalgError> {
        if !m.trace().is_zero() {
            return Err(LinalgError::NotTraceless);
        }
        Ok(Sl3Element(m))
    }

    /// The `i`-th element of the fixed basis.
    pub fn basis(i: usize) -> Self {
        let mut c: [F; SL3_DIM] = std::array::from_fn(|_| F::zero());
        c[i] = F::one();
        Self::from_coords(&c)
    }

    pub fn from_coords(c: &[F; SL3_DIM]) -> Self {
        let mut m = Matrix3::zero();
        for (k, &(i, j)) in OFF_DIAG.iter().enumerate() {
            m.0[i][j] = c[k].clone();
        }
        m.0[0][0] = c[6].clone();
        m.0[1][1] = c[7].clone() - &c[6];
        m.0[2][2] = -c[7].clone();
        Sl3Element(m)
    }

    pub fn coords(&self) -> [F; SL3_DIM] {
        coords(&self.0)
    }

    pub fn matrix(&self) -> &Matrix3<F> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix3<F> {
        self.0
    }
}

fn coords<F: Field>(m: &Matrix3<F>) -> [F; SL3_DIM] {
    let mut c: [F; SL3_DIM] = std::array::from_fn(|_| F::zero());
    for (k, &(i, j)) in OFF_DIAG.iter().enumerate() {
        c[k] = m.0[i][j].clone();
    }
    c[6] = m.0[0][0].clone();
    c[7] = -m.0[2][2].clone();
    c
}

/// Lie bracket `[a, b] = ab - ba`.
pub fn bracket<F: Field>(a: &Matrix3<F>, b: &Matrix3<F>) -> Matrix3<F> {
    a.mul(b).sub(&b.mul(a))
}

/// A 2-dimensional subspace of sl(3), stored by a basis in reduced echelon
/// form so that equal planes compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Plane2<F: Field> {
    basis: [Matrix3<F>; 2],
}

impl<F: Field> Plane2<F> {
    pub fn new(a: Matrix3<F>, b: Matrix3<F>) -> Result<Self, LinalgError> {
        if !a.trace().is_zero() || !b.trace().is_zero() {
            return Err(LinalgError::NotTraceless);
        }
        let mut rows = vec![coords(&a).to_vec(), coords(&b).to_vec()];
        if elim::rref(&mut rows, SL3_DIM).len() < 2 {
            return Err(LinalgError::DegeneratePlane);
        }
        let to_m = |r: &Vec<F>| {
            let c: [F; SL3_DIM] = std::array::from_fn(|i| r[i].clone());
            Sl3Element::from_coords(&c).into_matrix()
        };
        Ok(Plane2 {
            basis: [to_m(&rows[0]), to_m(&rows[1])],
        })
    }

    /// Echelon basis of the plane.
    pub fn basis(&self) -> &[Matrix3<F>; 2] {
        &self.basis
    }

    pub fn contains(&self, m: &Matrix3<F>) -> bool {
        if !m.trace().is_zero() {
            return false;
        }
        let rows = vec![
            coords(&self.basis[0]).to_vec(),
            coords(&self.basis[1]).to_vec(),
            coords(m).to_vec(),
        ];
        elim::rank(&rows, SL3_DIM) == 2
    }

    pub fn is_abelian(&self) -> bool {
        bracket(&self.basis[0], &self.basis[1]).is_zero()
    }

    /// Image under `X -> g X g^-1`.
    pub fn conjugate(&self, g: &Matrix3<F>) -> Result<Self, LinalgError> {
        let inv = g.inverse()?;
        Plane2::new(
            g.conjugate(&self.basis[0], &inv),
            g.conjugate(&self.basis[1], &inv),
        )
    }

    /// Image under the Chevalley involution `X -> -X^T`.
    pub fn dual(&self) -> Self {
        Plane2::new(
            self.basis[0].transpose().neg(),
            self.basis[1].transpose().neg(),
        )
        .expect("the involution is a linear automorphism")
    }

    pub fn plucker(&self) -> Plucker<F> {
        let a = coords(&self.basis[0]);
        let b = coords(&self.basis[1]);
        let v = plucker_pairs()
            .map(|(i, j)| a[i].clone() * &b[j] - a[j].clone() * &b[i])
            .collect();
        Plucker(v)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<Plane2<G>, LinalgError> {
        Plane2::new(self.basis[0].map(&f), self.basis[1].map(&f))
    }
}

impl<F: Field + fmt::Display> fmt::Display for Plane2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{{}, {}}}", self.basis[0], self.basis[1])
    }
}

impl<F: Field> fmt::Debug for Plane2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Plane2")
            .field(&self.basis[0])
            .field(&self.basis[1])
            .finish()
    }
}

/// Index pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn plucker_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..SL3_DIM).flat_map(|i| (i + 1..SL3_DIM).map(move |j| (i, j)))
}

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    i * (2 * SL3_DIM - i - 1) / 2 + (j - i - 1)
}

/// Plücker vector `p_ij = a_i b_j - a_j b_i` of a plane, up to scale.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Plucker<F>(pub Vec<F>);

impl<F: Field> Plucker<F> {
    /// `p_ij` for any `i != j`, using antisymmetry.
    pub fn get(&self, i: usize, j: usize) -> F {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.0[pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => -self.0[pair_index(j, i)].clone(),
            std::cmp::Ordering::Equal => F::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    /// Values of the quadratic relations `p_ij p_kl - p_ik p_jl + p_il p_jk`
    /// over all `i < j < k < l`.
    pub fn grassmann_residuals(&self) -> Vec<F> {
        let mut out = Vec::new();
        for i in 0..SL3_DIM {
            for j in i + 1..SL3_DIM {
                for k in j + 1..SL3_DIM {
                    for l in k + 1..SL3_DIM {
                        out.push(
                            self.get(i, j) * self.get(k, l) - self.get(i, k) * self.get(j, l)
                                + self.get(i, l) * self.get(j, k),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn is_decomposable(&self) -> bool {
        !self.is_zero() && self.grassmann_residuals().iter().all(F::is_zero)
    }

    /// Recovers the plane from a decomposable vector.
    pub fn to_plane(&self) -> Result<Plane2<F>, LinalgError> {
        if !self.is_decomposable() {
            return Err(LinalgError::NotDecomposable);
        }
        let (a, b) = plucker_pairs()
            .find(|&(i, j)| !self.get(i, j).is_zero())
            .expect("nonzero vector");
        let wa: [F; SL3_DIM] = std::array::from_fn(|k| self.get(a, k));
        let wb: [F; SL3_DIM] = std::array::from_fn(|k| self.get(b, k));
        Plane2::new(
            Sl3Element::from_coords(&wa).into_matrix(),
            Sl3Element::from_coords(&wb).into_matrix(),
        )
    }
}

/// Dimension of `{X in sl(3) : [X, plane] ⊆ plane}`.
pub fn normalizer_dimension<F: Field>(plane: &Plane2<F>) -> usize {
    let rows: Vec<Vec<F>> = plane.basis.iter().map(|m| coords(m).to_vec()).collect();
    // functionals vanishing on the plane
    let ann = elim::kernel(&rows, SL3_DIM);
    let mut system = Vec::with_capacity(ann.len() * 2);
    for b in &plane.basis {
        let images: Vec<[F; SL3_DIM]> = (0..SL3_DIM)
            .map(|i| coords(&bracket(Sl3Element::<F>::basis(i).matrix(), b)))
            .collect();
        for phi in &ann {
            let row = images
                .iter()
                .map(|img| {
                    phi.iter()
                        .zip(img.iter())
                        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y)
                })
                .collect();
            system.push(row);
        }
    }
    SL3_DIM - elim::rank(&system, SL3_DIM)
}
