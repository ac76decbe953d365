use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::UPoly;
use super::{MagnitudeClass, NonArchError, NonArchimedean};
use crate::field::{OrderedField, Rational};

/// A finite sum `sum c_k t^(k/N)` with exact rational coefficients.
///
/// Exponents may be negative. The empty map is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PuiseuxPoly {
    ramification: u32,
    terms: BTreeMap<i64, Rational>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly {
            ramification: 1,
            terms: BTreeMap::new(),
        }
    }

    fn from_upoly(ramification: u32, shift: i64, p: &UPoly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (shift + i as i64, c.clone()))
            .collect();
        PuiseuxPoly {
            ramification,
            terms,
        }
    }

    /// Common exponent denominator `N`.
    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        let n = BigInt::from(self.ramification);
        self.terms
            .iter()
            .map(move |(k, c)| (Rational::new(BigInt::from(*k), n.clone()), c))
    }

    /// Minimal exponent; `None` for zero.
    pub fn valuation(&self) -> Option<Rational> {
        self.terms().next().map(|(e, _)| e)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    pub fn to_hreal(&self) -> HReal {
        let Some((&low, _)) = self.terms.iter().next() else {
            return HReal::zero();
        };
        let high = *self.terms.keys().last().unwrap();
        let mut c = vec![Rational::zero(); (high - low) as usize + 1];
        for (k, v) in &self.terms {
            c[(k - low) as usize] = v.clone();
        }
        HReal::canonical(self.ramification, low, UPoly::from_coeffs(c), UPoly::one())
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            } else if i == 0 && c.is_negative() {
                // a bare `-t` is outside the grammar; keep the sign on a rational
                f.write_str("1*")?;
            }
            if e.is_one() {
                f.write_str("t")?;
            } else {
                write!(f, "t^({e})")?;
            }
        }
        Ok(())
    }
}

/// Element of the surrogate hyperreal field: a rational function of the
/// positive infinitesimal `t`, allowing fractional powers of `t`.
///
/// The stored form is `u^shift * num(u) / den(u)` with `u = t^(1/N)`,
/// `num(0) != 0`, `den(0) = 1`, `gcd(num, den) = 1` and `N` minimal. This is
/// unique per field element, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HReal {
    ramification: u32,
    shift: i64,
    num: UPoly,
    den: UPoly,
}

impl HReal {
    pub fn zero() -> Self {
        HReal {
            ramification: 1,
            shift: 0,
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        HReal {
            ramification: 1,
            shift: 0,
            num: UPoly::constant(r),
            den: UPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The infinitesimal `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    /// `coef * t^exponent`.
    pub fn monomial(coef: Rational, exponent: Rational) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        let n = exponent
            .denom()
            .to_u32()
            .expect("exponent denominator too large");
        let k = exponent
            .numer()
            .to_i64()
            .expect("exponent numerator too large");
        HReal {
            ramification: n,
            shift: k,
            num: UPoly::constant(coef),
            den: UPoly::one(),
        }
    }

    pub fn t_pow(exponent: Rational) -> Self {
        Self::monomial(Rational::one(), exponent)
    }

    fn canonical(ramification: u32, shift: i64, num: UPoly, den: UPoly) -> Self {
        let g = UPoly::gcd(&num, &den);
        if g.degree().unwrap_or(0) > 0 {
            return Self::canonical_coprime(
                ramification,
                shift,
                num.div_exact(&g),
                den.div_exact(&g),
            );
        }
        Self::canonical_coprime(ramification, shift, num, den)
    }

    /// As [`Self::canonical`] for a numerator and denominator already known
    /// to be coprime.
    fn canonical_coprime(ramification: u32, shift: i64, num: UPoly, den: UPoly) -> Self {
        let (Some(a), Some(b)) = (num.low_order(), den.low_order()) else {
            assert!(!den.is_zero(), "zero denominator");
            return Self::zero();
        };
        let mut shift = shift + a as i64 - b as i64;
        let mut num = num.shift_down(a);
        let mut den = den.shift_down(b);
        let c0 = den.coeff(0);
        if !c0.is_one() {
            let inv = c0.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        let mut ramification = ramification;
        if ramification > 1 {
            let g = (ramification as usize)
                .gcd(&(shift.unsigned_abs() as usize))
                .gcd(&num.exponent_gcd())
                .gcd(&den.exponent_gcd());
            if g > 1 {
                ramification /= g as u32;
                shift /= g as i64;
                num = num.deflate(g);
                den = den.deflate(g);
            }
        }
        HReal {
            ramification,
            shift,
            num,
            den,
        }
    }

    /// Multiplies by the positive product of the distinct denominators, so
    /// every entry becomes a Laurent polynomial in `u`.
    pub fn clear_denominators(v: &[Self; 3]) -> [Self; 3] {
        let n = v.iter().fold(1u32, |n, x| n.lcm(&x.ramification));
        let dens: Vec<UPoly> = v
            .iter()
            .map(|x| x.den.inflate((n / x.ramification) as usize))
            .collect();
        let mut distinct: Vec<&UPoly> = Vec::new();
        for d in &dens {
            if !d.is_one() && !distinct.contains(&d) {
                distinct.push(d);
            }
        }
        if distinct.is_empty() {
            return v.clone();
        }
        let product = distinct.iter().fold(UPoly::one(), |acc, d| acc.mul(d));
        std::array::from_fn(|i| {
            let x = &v[i];
            if x.is_zero() {
                return Self::zero();
            }
            let r = (n / x.ramification) as usize;
            let num = x.num.inflate(r).mul(&product.div_exact(&dens[i]));
            Self::canonical_coprime(n, x.shift * r as i64, num, UPoly::one())
        })
    }

    /// Rewrites both operands over a common `u = t^(1/N)`.
    fn common(&self, o: &Self) -> (u32, (i64, UPoly, UPoly), (i64, UPoly, UPoly)) {
        let n = self.ramification.lcm(&o.ramification);
        let lift = |x: &Self| {
            let r = (n / x.ramification) as usize;
            (x.shift * r as i64, x.num.inflate(r), x.den.inflate(r))
        };
        (n, lift(self), lift(o))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// Whether the element lies in the rationals.
    pub fn is_rational(&self) -> bool {
        self.is_zero() || (self.shift == 0 && self.num.degree() == Some(0) && self.den.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_rational() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Exponent of the leading term.
    pub fn valuation(&self) -> Result<Rational, NonArchError> {
        if self.is_zero() {
            return Err(NonArchError::ZeroValuation);
        }
        Ok(Rational::new(
            BigInt::from(self.shift),
            BigInt::from(self.ramification),
        ))
    }

    /// Coefficient of the leading term.
    pub fn leading_coefficient(&self) -> Option<Rational> {
        (!self.is_zero()).then(|| self.num.coeff(0))
    }

    pub fn signum(&self) -> Ordering {
        match self.num.coeff(0) {
            c if c.is_zero() => Ordering::Equal,
            c if c.is_positive() => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn magnitude(&self) -> MagnitudeClass {
        if self.is_zero() {
            MagnitudeClass::Zero
        } else {
            match self.shift.cmp(&0) {
                Ordering::Greater => MagnitudeClass::Infinitesimal,
                Ordering::Equal => MagnitudeClass::Appreciable,
                Ordering::Less => MagnitudeClass::Infinite,
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.is_zero() || self.shift >= 0
    }

    /// Zero counts as infinitesimal.
    pub fn is_infinitesimal(&self) -> bool {
        self.is_zero() || self.shift > 0
    }

    pub fn is_appreciable(&self) -> bool {
        self.magnitude() == MagnitudeClass::Appreciable
    }

    /// Standard part of a finite element.
    pub fn shadow(&self) -> Result<Rational, NonArchError> {
        if self.is_zero() || self.shift > 0 {
            Ok(Rational::zero())
        } else if self.shift == 0 {
            Ok(self.num.coeff(0))
        } else {
            Err(NonArchError::InfiniteShadow)
        }
    }

    pub fn recip(&self) -> Result<Self, NonArchError> {
        if self.is_zero() {
            return Err(NonArchError::DivisionByZero);
        }
        // den has constant term 1 and num(0) != 0, so only a rescale is needed
        let c0 = self.num.coeff(0).recip();
        Ok(HReal {
            ramification: self.ramification,
            shift: -self.shift,
            num: self.den.scale(&c0),
            den: self.num.scale(&c0),
        })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, NonArchError> {
        Ok(self.mul_ref(&o.recip()?))
    }

    pub fn powi(&self, e: i64) -> Self {
        if e < 0 {
            return self.recip().expect("negative power of zero").powi(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Numerator as a Puiseux polynomial (the leading power of `t` lives here).
    pub fn numerator(&self) -> PuiseuxPoly {
        if self.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly::from_upoly(self.ramification, self.shift, &self.num)
    }

    /// Denominator as a Puiseux polynomial with constant term 1.
    pub fn denominator(&self) -> PuiseuxPoly {
        PuiseuxPoly::from_upoly(self.ramification, 0, &self.den)
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    /// Evaluates at a concrete positive real `t`; `None` at a pole.
    pub fn eval_f64(&self, t: f64) -> Option<f64> {
        if self.is_zero() {
            return Some(0.0);
        }
        let u = t.powf(1.0 / self.ramification as f64);
        let d = self.den.eval_f64(u);
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        let v = u.powi(self.shift as i32) * self.num.eval_f64(u) / d;
        v.is_finite().then_some(v)
    }

    /// Evaluates at a rational `t`, provided every fractional power is rational.
    pub fn eval_rational(&self, t: &Rational) -> Option<Rational> {
        let u = rational_root(t, self.ramification)?;
        let d = self.den.eval(&u);
        if d.is_zero() {
            return None;
        }
        let upow = num_traits::pow::Pow::pow(&u, self.shift as i32);
        Some(upow * self.num.eval(&u) / d)
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (n, (ka, na, da), (kb, nb, db)) = self.common(o);
        let m = ka.min(kb);
        // with g = gcd(da, db), the sum over lcm(da, db) can only share
        // factors of g
        let (g, da1, db1) = if da == db {
            (da, UPoly::one(), UPoly::one())
        } else {
            let g = UPoly::gcd(&da, &db);
            let (da1, db1) = (da.div_exact(&g), db.div_exact(&g));
            (g, da1, db1)
        };
        let num = na
            .mul(&db1)
            .shift_up((ka - m) as usize)
            .add(&nb.mul(&da1).shift_up((kb - m) as usize));
        if num.is_zero() {
            return Self::zero();
        }
        let den = da1.mul(&db);
        if g.degree().unwrap_or(0) == 0 {
            return Self::canonical_coprime(n, m, num, den);
        }
        let h = UPoly::gcd(&num, &g);
        if h.degree().unwrap_or(0) == 0 {
            return Self::canonical_coprime(n, m, num, den);
        }
        Self::canonical_coprime(n, m, num.div_exact(&h), den.div_exact(&h))
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (n, (ka, na, da), (kb, nb, db)) = self.common(o);
        let cancel = |x: UPoly, y: UPoly| {
            let g = UPoly::gcd(&x, &y);
            if g.degree().unwrap_or(0) == 0 {
                (x, y)
            } else {
                (x.div_exact(&g), y.div_exact(&g))
            }
        };
        let (na, db) = cancel(na, db);
        let (nb, da) = cancel(nb, da);
        Self::canonical_coprime(n, ka + kb, na.mul(&nb), da.mul(&db))
    }

    fn neg_ref(&self) -> Self {
        HReal {
            ramification: self.ramification,
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

fn rational_root(t: &Rational, n: u32) -> Option<Rational> {
    if n == 1 {
        return Some(t.clone());
    }
    if t.is_negative() {
        return None;
    }
    let root = |x: &BigInt| {
        let r = x.nth_root(n);
        (num_traits::pow::Pow::pow(&r, n) == *x).then_some(r)
    };
    Some(Rational::new(root(t.numer())?, root(t.denom())?))
}

impl Default for HReal {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for HReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for HReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HReal({self})")
    }
}

impl FromStr for HReal {
    type Err = NonArchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse_hreal(s)
    }
}

impl PartialOrd for HReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            Ordering::Equal
        } else {
            self.sub_ref(other).signum()
        }
    }
}

impl HReal {
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<HReal> for HReal {
            type Output = HReal;
            fn $m(self, o: HReal) -> HReal {
                self.$imp(&o)
            }
        }
        impl<'a> $tr<&'a HReal> for HReal {
            type Output = HReal;
            fn $m(self, o: &'a HReal) -> HReal {
                self.$imp(o)
            }
        }
        impl<'a> $tr<&'a HReal> for &'a HReal {
            type Output = HReal;
            fn $m(self, o: &'a HReal) -> HReal {
                self.$imp(o)
            }
        }
    };
}

impl HReal {
    fn div_ref(&self, o: &Self) -> Self {
        self.checked_div(o).expect("HReal division by zero")
    }
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl Neg for HReal {
    type Output = HReal;
    fn neg(self) -> HReal {
        self.neg_ref()
    }
}

impl Neg for &HReal {
    type Output = HReal;
    fn neg(self) -> HReal {
        self.neg_ref()
    }
}

impl From<Rational> for HReal {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for HReal {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl crate::field::Field for HReal {
    fn zero() -> Self {
        HReal::zero()
    }
    fn one() -> Self {
        HReal::one()
    }
    fn is_zero(&self) -> bool {
        HReal::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        HReal::from_rational(r.clone())
    }
}

impl OrderedField for HReal {
    fn sign(&self) -> Ordering {
        self.signum()
    }
    fn cmp_field(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

impl NonArchimedean for HReal {
    fn valuation(&self) -> Option<Rational> {
        HReal::valuation(self).ok()
    }
    fn shadow(&self) -> Result<Rational, NonArchError> {
        HReal::shadow(self)
    }
    fn cleared(v: &[Self; 3]) -> [Self; 3] {
        HReal::clear_denominators(v)
    }

    fn magnitude(&self) -> MagnitudeClass {
        HReal::magnitude(self)
    }
}
