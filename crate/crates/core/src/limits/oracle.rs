//! The Grassmannian oracle and the exact classifier of abelian planes.

use num_traits::{One, Zero};

use super::{ConfigClass, LimitClass, LimitsError};
use crate::field::{rat, Rational};
use crate::linalg::{elim, HMatrix3, Plane2, Plucker, QMatrix3};
use crate::nonarch::{HReal, UPoly};

/// Span of `P H1 P^-1` and `P H2 P^-1` for the diagonal basis `H1, H2`.
pub fn conjugated_cartan_plane(p: &HMatrix3) -> Result<Plane2<HReal>, LimitsError> {
    let cartan = LimitClass::C
        .canonical_algebra()
        .map(|x| HReal::from_rational(x.clone()))?;
    Ok(cartan.conjugate(p)?)
}

/// Image of a rational plane under conjugation by a hyperreal matrix.
pub fn conjugated_plane(
    source: &Plane2<Rational>,
    p: &HMatrix3,
) -> Result<Plane2<HReal>, LimitsError> {
    Ok(source
        .map(|x| HReal::from_rational(x.clone()))?
        .conjugate(p)?)
}

/// Limit of a hyperreal plane in the Grassmannian: scale the Plücker vector
/// by its first coordinate of minimal valuation and take shadows.
pub fn grassmann_shadow(plane: &Plane2<HReal>) -> Result<Plane2<Rational>, LimitsError> {
    let v = plane.plucker();
    let pivot =
        v.0.iter()
            .filter(|x| !x.is_zero())
            .min_by_key(|x| x.valuation().expect("nonzero"))
            .ok_or(LimitsError::ShadowNotDecomposable)?
            .clone();
    let shadow =
        v.0.iter()
            .map(|x| {
                x.checked_div(&pivot)
                    .and_then(|y| y.shadow())
                    .map_err(|_| LimitsError::ShadowNotDecomposable)
            })
            .collect::<Result<Vec<_>, _>>()?;
    Plucker(shadow)
        .to_plane()
        .map_err(|_| LimitsError::ShadowNotDecomposable)
}

fn combo(a: &QMatrix3, b: &QMatrix3, x: &Rational, y: &Rational) -> QMatrix3 {
    a.scale(x).add(&b.scale(y))
}

fn tr_sq(m: &QMatrix3) -> Rational {
    m.mul(m).trace()
}

/// Discriminant `-4p^3 - 27q^2` of the characteristic polynomial
/// `λ^3 + pλ + q` of a traceless matrix.
fn discriminant(m: &QMatrix3) -> Rational {
    let p = -tr_sq(m) / rat(2, 1);
    let q = -m.det();
    rat(-4, 1) * &p * &p * &p - rat(27, 1) * &q * &q
}

fn plane_basis(plane: &Plane2<Rational>) -> (QMatrix3, QMatrix3) {
    let [a, b] = plane.basis();
    (a.clone(), b.clone())
}

/// Whether every element of the plane is nilpotent: `tr(X^2)` and `det X`
/// vanish identically as forms in the plane coordinates.
pub fn is_nilpotent_plane(plane: &Plane2<Rational>) -> bool {
    let (a, b) = plane_basis(plane);
    let pts = [(1, 0), (0, 1), (1, 1), (1, 2)];
    pts.iter().all(|&(x, y)| {
        let m = combo(&a, &b, &rat(x, 1), &rat(y, 1));
        tr_sq(&m).is_zero() && m.det().is_zero()
    })
}

/// Whether the plane contains a nonzero nilpotent element.
fn has_nilpotent_member(a: &QMatrix3, b: &QMatrix3) -> bool {
    if tr_sq(a).is_zero() && a.det().is_zero() {
        return true;
    }
    // X(s) = s A + B
    let sample = |f: &dyn Fn(&QMatrix3) -> Rational, k: i64| {
        let pts: Vec<(Rational, Rational)> = (0..=k)
            .map(|s| {
                let s = rat(s, 1);
                let v = f(&combo(a, b, &s, &Rational::one()));
                (s, v)
            })
            .collect();
        UPoly::interpolate(&pts)
    };
    let q = sample(&tr_sq, 2);
    let c = sample(&|m: &QMatrix3| m.det(), 3);
    let g = UPoly::gcd(&q, &c);
    !g.is_zero() && g.degree().unwrap_or(0) > 0 && g.has_real_root()
}

fn common_kernel_dim(ms: &[&QMatrix3]) -> usize {
    let rows: Vec<Vec<Rational>> = ms
        .iter()
        .flat_map(|m| m.0.iter().map(|r| r.to_vec()))
        .collect();
    3 - elim::rank(&rows, 3)
}

/// Conjugacy class of a 2-dimensional abelian subalgebra of sl(3, R).
pub fn classify_abelian_subalgebra(plane: &Plane2<Rational>) -> Result<LimitClass, LimitsError> {
    if !plane.is_abelian() {
        return Err(LimitsError::NotAbelian);
    }
    let (a, b) = plane_basis(plane);
    if is_nilpotent_plane(plane) {
        let products = [a.mul(&a), a.mul(&b), b.mul(&a), b.mul(&b)];
        if products.iter().any(|m| !m.is_zero()) {
            return Ok(LimitClass::N1);
        }
        return match common_kernel_dim(&[&a, &b]) {
            1 => Ok(LimitClass::N2),
            2 => Ok(LimitClass::N3),
            d => Err(LimitsError::InvariantViolation(format!(
                "nilpotent plane with common kernel of dimension {d}"
            ))),
        };
    }
    if has_nilpotent_member(&a, &b) {
        return Ok(LimitClass::F);
    }
    let sum = a.add(&b);
    if [&a, &b, &sum]
        .iter()
        .any(|m| discriminant(m) < Rational::zero())
    {
        return Err(LimitsError::NotSplit);
    }
    Ok(LimitClass::C)
}

/// Conjugacy class of the image under `X -> -X^T`.
pub fn duality(class: LimitClass) -> LimitClass {
    classify_abelian_subalgebra(&class.canonical_algebra().dual())
        .expect("the dual of a canonical algebra is abelian and split")
}

fn rational_eigenvalues(m: &QMatrix3) -> Vec<Rational> {
    // det(λI - M) = λ^3 - tr λ^2 + c1 λ - det, sampled and interpolated
    let pts: Vec<(Rational, Rational)> = (0..4)
        .map(|k| {
            let l = rat(k, 1);
            let shifted = QMatrix3::identity().scale(&l).sub(m);
            (l, shifted.det())
        })
        .collect();
    UPoly::interpolate(&pts).rational_roots()
}

/// Number of common eigendirections of a commuting pair, with a
/// 2-dimensional joint eigenspace counted as 3 (a whole line of them).
fn common_eigendirections(a: &QMatrix3, b: &QMatrix3) -> usize {
    let mut count = 0;
    for la in rational_eigenvalues(a) {
        for lb in rational_eigenvalues(b) {
            let sa = a.sub(&QMatrix3::identity().scale(&la));
            let sb = b.sub(&QMatrix3::identity().scale(&lb));
            count += match common_kernel_dim(&[&sa, &sb]) {
                0 => 0,
                1 => 1,
                _ => 3,
            };
        }
    }
    count.min(3)
}

/// Common fixed points and invariant lines of the group with Lie algebra
/// `plane`, as a configuration class.
pub fn configuration_of_plane(plane: &Plane2<Rational>) -> Result<ConfigClass, LimitsError> {
    let (a, b) = plane_basis(plane);
    let points = common_eigendirections(&a, &b);
    let (da, db) = (a.transpose().neg(), b.transpose().neg());
    let lines = common_eigendirections(&da, &db);
    ConfigClass::from_counts(points, lines).ok_or_else(|| {
        LimitsError::InvariantViolation(format!(
            "{points} fixed points with {lines} invariant lines"
        ))
    })
}

/// The maximal configuration preserved by the class.
pub fn characteristic_configuration(class: LimitClass) -> ConfigClass {
    configuration_of_plane(&class.canonical_algebra())
        .expect("canonical algebras have rational spectra")
}

/// Whether every basis element satisfies `X^3 = 0`.
pub fn is_unipotent_algebra(plane: &Plane2<Rational>) -> bool {
    plane.basis().iter().all(|x| x.mul(x).mul(x).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, j: usize) -> QMatrix3 {
        QMatrix3::unit(i - 1, j - 1)
    }

    #[test]
    fn canonical_planes_classify_to_themselves() {
        for c in LimitClass::ALL {
            assert_eq!(
                classify_abelian_subalgebra(&c.canonical_algebra()).unwrap(),
                c
            );
        }
    }

    #[test]
    fn conjugates_classify_alike() {
        let g = QMatrix3::from_fn(|i, j| rat([[2, 1, 0], [1, 1, 3], [0, -1, 1]][i][j], 1));
        for c in LimitClass::ALL {
            let p = c.canonical_algebra().conjugate(&g).unwrap();
            assert_eq!(classify_abelian_subalgebra(&p).unwrap(), c);
        }
    }

    #[test]
    fn rejections() {
        let p = Plane2::new(e(1, 2), e(2, 1)).unwrap();
        assert_eq!(
            classify_abelian_subalgebra(&p),
            Err(LimitsError::NotAbelian)
        );
        // rotation generator and the complementary diagonal element
        let rot = e(1, 2).sub(&e(2, 1));
        let d = QMatrix3::diag(rat(1, 1), rat(1, 1), rat(-2, 1));
        let p = Plane2::new(rot, d).unwrap();
        assert_eq!(classify_abelian_subalgebra(&p), Err(LimitsError::NotSplit));
    }

    #[test]
    fn duality_swaps_n2_and_n3() {
        assert_eq!(duality(LimitClass::N2), LimitClass::N3);
        assert_eq!(duality(LimitClass::N3), LimitClass::N2);
        for c in [LimitClass::C, LimitClass::F, LimitClass::N1] {
            assert_eq!(duality(c), c);
        }
    }

    #[test]
    fn configurations() {
        use ConfigClass::*;
        let got: Vec<ConfigClass> = LimitClass::ALL
            .into_iter()
            .map(characteristic_configuration)
            .collect();
        assert_eq!(got, vec![TC, TF, TN1, TN2, TN3]);
        assert_eq!(TN2.description(), "invariant pencil through fixed point");
        assert_eq!(TN3.description(), "pointwise-fixed line");
    }

    #[test]
    fn rational_planes_are_their_own_shadow() {
        for c in LimitClass::ALL {
            let p = c.canonical_algebra();
            let h = p.map(|x| HReal::from_rational(x.clone())).unwrap();
            assert_eq!(grassmann_shadow(&h).unwrap(), p);
        }
    }

    #[test]
    fn is_nilpotent_needs_the_whole_plane() {
        // span{E12, diag(1,1,-2)} has a nilpotent member but is not nilpotent
        let p = LimitClass::F.canonical_algebra();
        assert!(!is_nilpotent_plane(&p));
    }
}
