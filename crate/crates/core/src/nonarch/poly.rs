//! Dense univariate polynomials over the rationals.
//!
//! Used as the storage for numerators and denominators of [`HReal`]
//! (in the variable `u = t^(1/N)`), so only what the field arithmetic needs
//! is here.
//!
//! [`HReal`]: super::HReal

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Rational;

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub(crate) struct UPoly {
    c: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_coeffs(vec![r])
    }

    pub fn from_coeffs(c: Vec<Rational>) -> Self {
        let mut p = UPoly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.c.last()
    }

    /// Number of vanishing low-order coefficients (the `u`-adic valuation).
    pub fn low_order(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    /// Divides by `u^k`; the caller guarantees `k <= low_order`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        UPoly {
            c: self.c[k.min(self.c.len())..].to_vec(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// `p(u) -> p(u^r)`
    pub fn inflate(&self, r: usize) -> Self {
        if r == 1 || self.c.len() <= 1 {
            return self.clone();
        }
        let mut c = vec![Rational::zero(); (self.c.len() - 1) * r + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i * r] = x.clone();
        }
        UPoly { c }
    }

    /// `p(u^d) -> p(u)`; every nonzero exponent must be divisible by `d`.
    pub fn deflate(&self, d: usize) -> Self {
        if d == 1 {
            return self.clone();
        }
        UPoly {
            c: self.c.iter().step_by(d).cloned().collect(),
        }
    }

    /// gcd of all exponents carrying a nonzero coefficient (0 for constants).
    pub fn exponent_gcd(&self) -> usize {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .fold(0usize, |g, (i, _)| g.gcd(&i))
    }

    pub fn neg(&self) -> Self {
        UPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        UPoly {
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.c[dd].recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &lead_inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &coef * dj;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn make_monic(&self) -> Self {
        match self.lead() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Image modulo the prime `p`, or `None` when a denominator or the
    /// leading coefficient vanishes there.
    fn reduce_mod(&self, p: u64) -> Option<Vec<u64>> {
        let m = BigInt::from(p);
        let residue = |x: &BigInt| x.mod_floor(&m).to_u64().expect("residue fits in u64");
        let mut out = Vec::with_capacity(self.c.len());
        for r in &self.c {
            let d = residue(r.denom());
            if d == 0 {
                return None;
            }
            out.push(mul_mod(residue(r.numer()), inv_mod(d, p), p));
        }
        if out.last() == Some(&0) {
            return None;
        }
        Some(out)
    }

    /// True when `a` and `b` are certainly coprime; `false` is inconclusive.
    fn coprime_by_reduction(a: &Self, b: &Self) -> bool {
        MODULI
            .iter()
            .any(|&p| match (a.reduce_mod(p), b.reduce_mod(p)) {
                (Some(x), Some(y)) => gcd_mod_degree(x, y, p) == 0,
                _ => false,
            })
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::one();
        }
        if !a.is_zero() && !b.is_zero() && Self::coprime_by_reduction(a, b) {
            return Self::one();
        }
        if a.is_zero() || b.is_zero() {
            let x = if a.is_zero() { b } else { a };
            return x.make_monic();
        }
        // primitive remainder sequence over the integers
        let mut x = primitive_integer(a);
        let mut y = primitive_integer(b);
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            if y.len() == 1 {
                return Self::one();
            }
            let r = primitive(pseudo_remainder(x, &y));
            x = y;
            y = r;
        }
        Self::from_coeffs(x.into_iter().map(Rational::from_integer).collect()).make_monic()
    }

    /// Exact division by a known factor.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.c
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.c
            .iter()
            .rev()
            .fold(0.0, |acc, a| acc * x + a.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// The unique polynomial of degree < `points.len()` through `points`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let lin = Self::from_coeffs(vec![-xj.clone(), Rational::one()]);
                    basis = basis.mul(&lin).scale(&(Rational::one() / (xi - xj)));
                }
            }
            acc = acc.add(&basis);
        }
        acc
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(low) = self.low_order() else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(Rational::zero());
        }
        let p = self.shift_down(low);
        if p.degree().unwrap_or(0) > 0 {
            let lcm =
                p.c.iter()
                    .fold(num_bigint::BigInt::one(), |l, a| l.lcm(a.denom()));
            let ints: Vec<num_bigint::BigInt> =
                p.c.iter()
                    .map(|a| (a * Rational::from_integer(lcm.clone())).to_integer())
                    .collect();
            let divisors = |n: &num_bigint::BigInt| {
                let n = n.abs();
                let mut out = Vec::new();
                let mut d = num_bigint::BigInt::one();
                while &d * &d <= n {
                    if (&n % &d).is_zero() {
                        out.push(d.clone());
                        out.push(&n / &d);
                    }
                    d += 1;
                }
                out
            };
            let (a0, an) = (&ints[0], ints.last().unwrap());
            for num in divisors(a0) {
                for den in divisors(an) {
                    for sign in [1i64, -1] {
                        let r = Rational::new(&num * sign, den.clone());
                        if p.eval(&r).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Whether the polynomial has a real root; exact for degree <= 3 and
    /// decided by Sturm sequences otherwise.
    pub fn has_real_root(&self) -> bool {
        match self.degree() {
            None => true,
            Some(0) => false,
            Some(d) if d % 2 == 1 => true,
            Some(2) => {
                let (a, b, c) = (&self.c[2], &self.c[1], &self.c[0]);
                !(b * b - Rational::from_integer(4.into()) * a * c).is_negative()
            }
            Some(_) => self.sturm_real_roots() > 0,
        }
    }

    fn sturm_real_roots(&self) -> usize {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        // sign changes at -inf and +inf from leading coefficients
        let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
        let at_pos: Vec<bool> = seq
            .iter()
            .map(|p| p.lead().unwrap().is_positive())
            .collect();
        let at_neg: Vec<bool> = seq
            .iter()
            .map(|p| {
                let pos = p.lead().unwrap().is_positive();
                if p.degree().unwrap() % 2 == 0 {
                    pos
                } else {
                    !pos
                }
            })
            .collect();
        changes(at_neg) - changes(at_pos)
    }
}

/// `p` scaled to integer coefficients with unit content.
fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    let l = p.c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(p.c.iter().map(|x| x.numer() * (&l / x.denom())).collect())
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Remainder of `lead(b)^k a` on division by `b`, in integer arithmetic.
fn pseudo_remainder(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let coef = a.pop().expect("nonempty");
        for x in a.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b[..b.len() - 1].iter().enumerate() {
            a[shift + j] -= &coef * bj;
        }
        while a.last().is_some_and(|x| x.is_zero()) {
            a.pop();
        }
    }
    a
}

const MODULI: [u64; 2] = [(1 << 61) - 1, 1_000_000_007];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Degree of `gcd(x, y)` over GF(p); inputs have nonzero leading terms.
fn gcd_mod_degree(mut x: Vec<u64>, mut y: Vec<u64>, p: u64) -> usize {
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return 0;
        }
        let lead_inv = inv_mod(*y.last().unwrap(), p);
        while x.len() >= y.len() {
            let shift = x.len() - y.len();
            let coef = mul_mod(*x.last().unwrap(), lead_inv, p);
            for (j, &yj) in y.iter().enumerate() {
                let sub = mul_mod(coef, yj, p);
                x[shift + j] = (x[shift + j] + p - sub) % p;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() - 1
}
