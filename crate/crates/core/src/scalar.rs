//! Coefficient types for univariate polynomials.
//!
//! Everything that decides a sign (root counts, sign patterns, certificates)
//! runs on [`BigRational`]. The float impls exist for quick numerical
//! cross-checks and carry no guarantees.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    /// Whether sign decisions made on this type are exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Multiply a coefficient vector by a positive constant chosen to keep
    /// remainder sequences small. Must not change any sign.
    fn normalize_positive(_coeffs: &mut [Self]) {}

    /// Sign of the polynomial with ascending `coeffs` at `x`.
    fn sign_at(coeffs: &[Self], x: &Self) -> i8 {
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        signum_of(&acc)
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }

    /// The Sturm chain continued from `a`, `b`: each further element is a
    /// positive multiple of minus the remainder of the two before it.
    fn sturm_tail(a: &[Self], b: &[Self]) -> Vec<Vec<Self>> {
        remainder_tail(a, b)
    }

    /// A positive multiple of `-(a mod b)` (ascending coefficients, `b` nonzero).
    /// Sturm chains only need the sign structure, so any positive scaling is fine.
    fn neg_remainder(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut r = field_remainder(a, b);
        r.iter_mut().for_each(|c| *c = -c.clone());
        Self::normalize_positive(&mut r);
        r
    }
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn field_remainder<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let db = b.len() - 1;
    let lc = b[db].clone();
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].clone() / lc.clone();
        for (i, bc) in b.iter().enumerate() {
            r[k - db + i] = r[k - db + i].clone() - c.clone() * bc.clone();
        }
        r[k] = T::zero();
        trim(&mut r);
    }
    r
}

pub(crate) fn signum_of<T: Signed>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn normalize_positive(coeffs: &mut [Self]) {
        let mut lcm = BigInt::one();
        for c in coeffs.iter() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in coeffs.iter() {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        if g.is_zero() {
            return;
        }
        for c in coeffs.iter_mut() {
            let n = c.numer() * (&lcm / c.denom()) / &g;
            *c = BigRational::from_integer(n);
        }
    }

    fn sign_at(coeffs: &[Self], x: &Self) -> i8 {
        if coeffs.iter().all(|c| c.denom().is_one()) {
            // Homogeneous integer Horner: sum c_i p^i q^(n-i) has the sign of P(p/q).
            let (p, q) = (x.numer(), x.denom());
            let mut acc = BigInt::zero();
            let mut qpow = BigInt::one();
            for c in coeffs.iter().rev() {
                acc = acc * p + c.numer() * &qpow;
                qpow *= q;
            }
            return signum_of(&acc);
        }
        let mut acc = BigRational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        signum_of(&acc)
    }

    fn sturm_tail(a: &[Self], b: &[Self]) -> Vec<Vec<Self>> {
        if !a.iter().chain(b).all(|c| c.denom().is_one()) {
            let mut a = a.to_vec();
            let mut b = b.to_vec();
            Self::normalize_positive(&mut a);
            Self::normalize_positive(&mut b);
            return Self::sturm_tail(&a, &b);
        }
        let a: Vec<BigInt> = a.iter().map(|c| c.numer().clone()).collect();
        let b: Vec<BigInt> = b.iter().map(|c| c.numer().clone()).collect();
        subresultant_sturm(a, b)
            .into_iter()
            .map(|p| p.into_iter().map(BigRational::from_integer).collect())
            .collect()
    }

    fn neg_remainder(a: &[Self], b: &[Self]) -> Vec<Self> {
        if !a.iter().chain(b).all(|c| c.denom().is_one()) {
            let mut r = field_remainder(a, b);
            r.iter_mut().for_each(|c| *c = -c.clone());
            Self::normalize_positive(&mut r);
            return r;
        }
        // Integer pseudo-remainder: lc(b)^(da-db+1) * a mod b, sign-corrected.
        let a: Vec<BigInt> = a.iter().map(|c| c.numer().clone()).collect();
        let b: Vec<BigInt> = b.iter().map(|c| c.numer().clone()).collect();
        let db = b.len() - 1;
        let lc = &b[db];
        let mut r = a;
        trim(&mut r);
        let mut flips = 0usize;
        while r.len() > db {
            let k = r.len() - 1;
            let c = r[k].clone();
            for x in r.iter_mut() {
                *x *= lc;
            }
            for (i, bc) in b.iter().enumerate() {
                r[k - db + i] -= &c * bc;
            }
            flips += 1;
            trim(&mut r);
            let g = r.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                r.iter_mut().for_each(|x| *x /= &g);
            }
        }
        let negate = !(lc.is_negative() && flips % 2 == 1);
        r.into_iter()
            .map(|x| BigRational::from_integer(if negate { -x } else { x }))
            .collect()
    }
}

fn remainder_tail<T: Scalar>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut b);
    while !b.is_empty() {
        let mut r = T::neg_remainder(&a, &b);
        trim(&mut r);
        if r.is_empty() {
            break;
        }
        out.push(r.clone());
        a = std::mem::replace(&mut b, r);
    }
    out
}

fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - db;
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].clone();
        for x in r.iter_mut() {
            *x *= lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k - db + i] -= &c * bc;
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    // full pseudo-remainder: lc^(da - db + 1) * a mod b
    if steps > 0 {
        let f = num_traits::pow(lc.clone(), steps);
        r.iter_mut().for_each(|x| *x *= &f);
    }
    r
}

/// Subresultant remainder sequence with Sturm signs restored. Each computed
/// `B_(i+1) = prem(B_(i-1), B_i) / (g h^delta)` is `f * rem(B_(i-1), B_i)` with a
/// known factor `f`; the Sturm element is `-eps_(i-1) rem(...)`.
fn subresultant_sturm(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    if b.is_empty() {
        return out;
    }
    let (mut eps_a, mut eps_b) = (1i8, 1i8);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.len() - b.len();
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        let lcb = b.last().expect("nonzero").clone();
        let div = &g * num_traits::pow(h.clone(), delta);
        let next: Vec<BigInt> = r.into_iter().map(|x| x / &div).collect();
        // sign of lc(b)^(delta+1) / (g h^delta)
        let mut f_sign = signum_of(&div);
        if lcb.is_negative() && (delta + 1) % 2 == 1 {
            f_sign = -f_sign;
        }
        let eps_next = -eps_a * f_sign;
        out.push(if eps_next > 0 { next.clone() } else { next.iter().map(|x| -x).collect() });
        g = lcb.clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        a = std::mem::replace(&mut b, next);
        eps_a = eps_b;
        eps_b = eps_next;
    }
    out
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn normalize_positive(coeffs: &mut [Self]) {
                let m = coeffs.iter().fold(0.0 as $t, |m, c| m.max(c.abs()));
                if m > 0.0 {
                    coeffs.iter_mut().for_each(|c| *c /= m);
                }
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subresultant_chain_matches_remainder_chain() {
        let polys: [&[i64]; 5] = [
            &[12, -2, -2, 1],
            &[-1, 0, 3, 0, -5, 2, 1],
            &[30, 61, 41, 11, 1],
            &[1, 0, 0, 0, 0, -7, 0, 0, 3],
            &[-4, 4, 5, -6, -1, 2],
        ];
        for c in polys {
            let p: Vec<BigRational> = c.iter().map(|&v| BigRational::from_i64(v)).collect();
            let dp: Vec<BigRational> = (1..p.len()).map(|i| &p[i] * BigRational::from_i64(i as i64)).collect();
            let fast = BigRational::sturm_tail(&p, &dp);
            let slow = remainder_tail(&p, &dp);
            assert_eq!(fast.len(), slow.len());
            for (f, s) in fast.iter().zip(&slow) {
                assert_eq!(f.len(), s.len());
                assert_eq!(signum_of(f.last().unwrap()), signum_of(s.last().unwrap()));
                for x in -6..=6 {
                    let x = BigRational::new(x.into(), 3.into());
                    assert_eq!(BigRational::sign_at(f, &x), BigRational::sign_at(s, &x));
                }
            }
        }
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_makes_primitive_integers() {
        let mut c = vec![q(1, 2), q(-3, 4), q(3, 2)];
        BigRational::normalize_positive(&mut c);
        assert_eq!(c, vec![q(2, 1), q(-3, 1), q(6, 1)]);
    }

    #[test]
    fn homogeneous_sign_matches_horner() {
        let c = vec![q(12, 1), q(-2, 1), q(-2, 1), q(1, 1)];
        for x in [q(-3, 1), q(-5, 2), q(0, 1), q(7, 3), q(-2, 1)] {
            let direct = c.iter().rev().fold(BigRational::zero(), |acc, ci| acc * &x + ci);
            assert_eq!(BigRational::sign_at(&c, &x), signum_of(&direct));
        }
    }
}
