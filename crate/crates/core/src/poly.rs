//! Dense univariate polynomials, ascending storage (`coeffs[j]` multiplies `x^j`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x - r`
    pub fn linear_root(r: T) -> Self {
        Poly::new(vec![-r, T::one()])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^j` (zero past the degree).
    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient of `x^(d-j)`: the descending convention `P = x^d + sum p_j x^(d-j)`.
    pub fn coeff_desc(&self, j: usize) -> T {
        let d = self.degree();
        if j > d {
            T::zero()
        } else {
            self.coeff(d - j)
        }
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Sign of `P(x)` in {-1, 0, 1}.
    pub fn sign_at(&self, x: &T) -> i8 {
        T::sign_at(&self.coeffs, x)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c.clone() / lc.clone()).collect())
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.degree() < divisor.degree() || self.is_zero() {
            return (Poly::zero(), self.clone());
        }
        let dd = divisor.degree();
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            let mut r = r.into_coeffs();
            T::normalize_positive(&mut r);
            a = b;
            b = Poly::new(r);
        }
        a.monic()
    }

    /// True iff `P` has no repeated complex root.
    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// `P / gcd(P, P')`, same roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// `x^d P(1/x)`. Roots become reciprocals, the coefficient sequence is reversed.
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(Poly::new(c))
    }

    /// `chi^(-deg P) P(chi x)`, for `chi > 0`. Roots are divided by `chi`;
    /// coefficient signs are unchanged.
    pub fn scale_x(&self, chi: &T) -> Self {
        assert!(chi.is_positive(), "scale_x needs a positive factor");
        let d = self.degree();
        // coefficient j picks up chi^(j - d)
        let mut out = Vec::with_capacity(self.coeffs.len());
        let inv = T::one() / chi.clone();
        let mut f = T::one();
        for _ in 0..d {
            f = f * inv.clone();
        }
        for c in &self.coeffs {
            out.push(c.clone() * f.clone());
            f = f * chi.clone();
        }
        Poly::new(out)
    }

    /// `P(-x)`.
    pub fn negate_x(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Upper bound on the modulus of every root (Cauchy).
    pub fn root_bound(&self) -> T {
        let lc = self.leading().abs();
        let mut m = T::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let r = c.abs() / lc.clone();
            if r > m {
                m = r;
            }
        }
        m + T::one()
    }
}

/// `e_1, ..., e_k` of the given values.
pub fn elementary_symmetric<T: Scalar>(values: &[T]) -> Vec<T> {
    // coefficients of prod (x + v_i), read from the top
    let mut e = vec![T::one()];
    for v in values {
        let mut next = vec![T::zero(); e.len() + 1];
        for (i, ei) in e.iter().enumerate() {
            next[i] = next[i].clone() + ei.clone();
            next[i + 1] = next[i + 1].clone() + ei.clone() * v.clone();
        }
        e = next;
    }
    e.remove(0);
    e
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

pub type RatPoly = Poly<BigRational>;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Poly<BigRational> {
    /// Integer coefficients of the primitive positive multiple of `self`.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let mut c = self.coeffs.clone();
        BigRational::normalize_positive(&mut c);
        c.into_iter().map(|q| q.to_integer()).collect()
    }

    pub fn to_f64(&self) -> Poly<f64> {
        use num_traits::ToPrimitive;
        Poly::new(self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect())
    }
}

/// Ascending `num/den` list, e.g. `12/1,-2/1,-2/1,1/1`. The zero polynomial is `0/1`.
impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0/1");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Poly<BigRational> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        let coeffs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl Serialize for Poly<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly<BigRational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Real and complex roots describing a monic polynomial.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RootSpec<T> {
    /// Moduli `u` of negative roots: each contributes `x + u`.
    pub neg_roots: Vec<T>,
    /// Positive roots `r`: each contributes `x - r`.
    pub pos_roots: Vec<T>,
    /// `(z, y)` pairs: each contributes `x^2 - z x + y`, with `z^2 < 4y`.
    pub complex_pairs: Vec<(T, T)>,
}

impl<T: Scalar> RootSpec<T> {
    pub fn degree(&self) -> usize {
        self.neg_roots.len() + self.pos_roots.len() + 2 * self.complex_pairs.len()
    }

    /// True when no real root is repeated.
    pub fn reals_distinct(&self) -> bool {
        let mut all: Vec<T> = self.neg_roots.iter().map(|u| -u.clone()).collect();
        all.extend(self.pos_roots.iter().cloned());
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i] == all[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Monic product of all the factors.
    pub fn expand(&self) -> Result<Poly<T>> {
        let mut out = Poly::one();
        for (z, y) in &self.complex_pairs {
            if z.clone() * z.clone() >= T::from_i64(4) * y.clone() {
                return Err(Error::RealQuadratic { z: format!("{z:?}"), y: format!("{y:?}") });
            }
            out = &out * &Poly::new(vec![y.clone(), -z.clone(), T::one()]);
        }
        for u in &self.neg_roots {
            out = &out * &Poly::new(vec![u.clone(), T::one()]);
        }
        for r in &self.pos_roots {
            out = &out * &Poly::linear_root(r.clone());
        }
        Ok(out)
    }
}

pub fn expand_from_spec<T: Scalar>(spec: &RootSpec<T>) -> Result<Poly<T>> {
    spec.expand()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn expand_fixture_cubic() {
        let spec = RootSpec { neg_roots: vec![rat(2, 1)], complex_pairs: vec![(rat(4, 1), rat(6, 1))], ..Default::default() };
        assert_eq!(spec.expand().unwrap(), p(&[12, -2, -2, 1]));
    }

    #[test]
    fn expand_fixture_quadratic() {
        let spec = RootSpec { complex_pairs: vec![(rat(2, 1), rat(2, 1))], ..Default::default() };
        assert_eq!(spec.expand().unwrap(), p(&[2, -2, 1]));
    }

    #[test]
    fn expand_degree_ten_fixture() {
        let spec = RootSpec {
            neg_roots: vec![rat(1, 1); 8],
            complex_pairs: vec![(rat(249, 100), rat(156, 100))],
            ..Default::default()
        };
        let poly = spec.expand().unwrap();
        assert_eq!(poly.degree(), 10);
        assert_eq!(poly.coeff(9), rat(551, 100));
        assert_eq!(poly.constant_term(), rat(39, 25));
    }

    #[test]
    fn expand_rejects_real_pair() {
        let spec = RootSpec { complex_pairs: vec![(rat(4, 1), rat(4, 1))], ..Default::default() };
        assert!(matches!(spec.expand(), Err(Error::RealQuadratic { .. })));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[2, 3, 1]).reverse().unwrap(), p(&[1, 3, 2]));
        assert_eq!(p(&[1, 3, 1]).reverse().unwrap(), p(&[1, 3, 1]));
        assert!(matches!(p(&[0, 1, 1]).reverse(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn scale_x_halves_roots() {
        // (x-1)(x-2) with chi = 2 -> (x-1/2)(x-1)
        let out = p(&[2, -3, 1]).scale_x(&rat(2, 1));
        let want = &RatPoly::linear_root(rat(1, 2)) * &RatPoly::linear_root(rat(1, 1));
        assert_eq!(out, want);
        assert_eq!(p(&[5, -1, 3, 1]).scale_x(&rat(1, 1)), p(&[5, -1, 3, 1]));
    }

    #[test]
    fn elementary_symmetric_examples() {
        let e = elementary_symmetric(&[rat(1, 1), rat(1, 1), rat(1, 1)]);
        assert_eq!(e, vec![rat(3, 1), rat(3, 1), rat(1, 1)]);
        let e = elementary_symmetric(&vec![rat(1, 1); 4]);
        assert_eq!(e, vec![rat(4, 1), rat(6, 1), rat(4, 1), rat(1, 1)]);
        let e = elementary_symmetric(&[rat(1, 1), rat(2, 1), rat(3, 1)]);
        assert_eq!(e, vec![rat(6, 1), rat(11, 1), rat(6, 1)]);
        assert!(&e[0] * &e[1] >= rat(9, 1) * &e[2]);
    }

    #[test]
    fn div_rem_and_gcd() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let sq = &p(&[1, 1]).pow(3) * &p(&[2, 1]);
        assert!(!sq.is_square_free());
        assert_eq!(sq.square_free_part().monic(), p(&[2, 3, 1]));
    }

    #[test]
    fn descending_adapter() {
        let poly = p(&[12, -2, -2, 1]);
        assert_eq!(poly.coeff_desc(0), rat(1, 1));
        assert_eq!(poly.coeff_desc(3), rat(12, 1));
        assert_eq!(poly.coeff_desc(4), rat(0, 1));
    }

    #[test]
    fn text_codec() {
        let poly = p(&[12, -2, -2, 1]);
        assert_eq!(poly.to_string(), "12/1,-2/1,-2/1,1/1");
        assert_eq!("12/1,-2/1,-2/1,1/1".parse::<RatPoly>().unwrap(), poly);
        assert_eq!(RatPoly::zero().to_string().parse::<RatPoly>().unwrap(), RatPoly::zero());
        assert!("1/0".parse::<RatPoly>().is_err());
        assert!("".parse::<RatPoly>().is_err());
    }
}
