//! Sturm sequences: exact distinct-root counting and isolation.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{signum_of, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T> From<T> for Endpoint<T> {
    fn from(v: T) -> Self {
        Endpoint::Finite(v)
    }
}

#[derive(Clone, Debug)]
pub struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

impl<T: Scalar> SturmChain<T> {
    pub fn new(p: &Poly<T>) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        let mut a = p.coeffs().to_vec();
        T::normalize_positive(&mut a);
        let mut b = p.derivative().into_coeffs();
        T::normalize_positive(&mut b);
        let b = Poly::new(b).into_coeffs();
        chain.push(Poly::new(a.clone()));
        if b.is_empty() {
            return SturmChain { chain };
        }
        chain.push(Poly::new(b.clone()));
        chain.extend(T::sturm_tail(&a, &b).into_iter().map(Poly::new));
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn sign_at(p: &Poly<T>, at: &Endpoint<T>) -> i8 {
        match at {
            Endpoint::Finite(x) => p.sign_at(x),
            Endpoint::PosInf => signum_of(&p.leading()),
            Endpoint::NegInf => {
                let s = signum_of(&p.leading());
                if p.degree() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Sign variations of the chain at a point, zeros skipped.
    pub fn variations(&self, at: &Endpoint<T>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = Self::sign_at(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the open interval `(lo, hi)`.
    pub fn count(&self, lo: &Endpoint<T>, hi: &Endpoint<T>) -> Result<usize> {
        let p = self.chain.first().ok_or(Error::ZeroPolynomial)?;
        for e in [lo, hi] {
            if let Endpoint::Finite(x) = e {
                if p.sign_at(x) == 0 {
                    return Err(Error::EndpointIsRoot(format!("{x:?}")));
                }
            }
        }
        if !endpoint_lt(lo, hi) {
            return Err(Error::EmptyInterval);
        }
        let (vl, vh) = (self.variations(lo), self.variations(hi));
        Ok(vl.saturating_sub(vh))
    }
}

fn endpoint_lt<T: Scalar>(a: &Endpoint<T>, b: &Endpoint<T>) -> bool {
    match (a, b) {
        (Endpoint::NegInf, Endpoint::NegInf) | (Endpoint::PosInf, _) => false,
        (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => true,
        (Endpoint::Finite(_), Endpoint::NegInf) => false,
        (Endpoint::Finite(x), Endpoint::Finite(y)) => x < y,
    }
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn count_real_roots<T: Scalar>(p: &Poly<T>, lo: &Endpoint<T>, hi: &Endpoint<T>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    SturmChain::new(p).count(lo, hi)
}

/// Distinct positive and negative real roots, `(pos, neg)`.
pub fn count_pos_neg<T: Scalar>(p: &Poly<T>) -> Result<(usize, usize)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::EndpointIsRoot("0".into()));
    }
    let chain = SturmChain::new(p);
    let zero = Endpoint::Finite(T::zero());
    let pos = chain.count(&zero, &Endpoint::PosInf)?;
    let neg = chain.count(&Endpoint::NegInf, &zero)?;
    Ok((pos, neg))
}

/// A point strictly inside `(lo, hi)` where `p` does not vanish.
fn non_root_between<T: Scalar>(p: &Poly<T>, lo: &T, hi: &T) -> T {
    let width = hi.clone() - lo.clone();
    let mut den = 2i64;
    loop {
        for num in 1..den {
            let x = lo.clone() + width.clone() * T::from_i64(num) / T::from_i64(den);
            if p.sign_at(&x) != 0 {
                return x;
            }
        }
        den += 1;
    }
}

/// Disjoint open intervals `(lo, hi)`, in increasing order, each holding
/// exactly one distinct real root of `p`. Endpoints are never roots.
pub fn isolate_real_roots<T: Scalar>(p: &Poly<T>) -> Result<Vec<(T, T)>> {
    isolate_in(p, None)
}

/// As [`isolate_real_roots`], restricted to roots in `(lo, hi)`; the bounds must not be roots.
pub fn isolate_real_roots_in<T: Scalar>(p: &Poly<T>, lo: &T, hi: &T) -> Result<Vec<(T, T)>> {
    isolate_in(p, Some((lo.clone(), hi.clone())))
}

fn isolate_in<T: Scalar>(p: &Poly<T>, range: Option<(T, T)>) -> Result<Vec<(T, T)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf);
    let (lo, hi) = match range {
        Some(r) => r,
        None => {
            let b = sf.root_bound();
            (-b.clone(), b)
        }
    };
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count(&Endpoint::Finite(a.clone()), &Endpoint::Finite(b.clone()))?;
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = non_root_between(&sf, &a, &b);
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("ordered scalars"));
    Ok(out)
}

/// Shrink an isolating interval of a simple root of `p` (odd sign change
/// across the root) to width at most `width`. Returns `(r, r)` when the
/// bisection lands exactly on the root.
pub fn refine<T: Scalar>(p: &Poly<T>, lo: &T, hi: &T, width: &T) -> (T, T) {
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let sa = p.sign_at(&a);
    while b.clone() - a.clone() > *width {
        let mid = (a.clone() + b.clone()).half();
        let sm = p.sign_at(&mid);
        if sm == 0 {
            return (mid.clone(), mid);
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// True iff `p` is a type-P polynomial: positive leading coefficient and no root in `[0, inf)`.
pub fn is_type_p<T: Scalar>(p: &Poly<T>) -> bool {
    if p.is_zero() || !p.leading().is_positive() {
        return false;
    }
    if !p.constant_term().is_positive() {
        return false;
    }
    count_real_roots(p, &Endpoint::Finite(T::zero()), &Endpoint::PosInf).is_ok_and(|n| n == 0)
}

/// Sign of `p` just to the right of `x` (first nonvanishing derivative).
pub fn sign_right_of<T: Scalar>(p: &Poly<T>, x: &T) -> i8 {
    let mut q = p.clone();
    while !q.is_zero() {
        let s = q.sign_at(x);
        if s != 0 {
            return s;
        }
        q = q.derivative();
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, RatPoly};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn counts_on_intervals() {
        let all = (Endpoint::NegInf, Endpoint::PosInf);
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &all.0, &all.1).unwrap(), 0);
        let q = p(&[21, -14, 1]);
        assert_eq!(count_real_roots(&q, &Endpoint::Finite(rat(0, 1)), &Endpoint::PosInf).unwrap(), 2);
        let cubic = p(&[12, -2, -2, 1]);
        assert_eq!(count_pos_neg(&cubic).unwrap(), (0, 1));
    }

    #[test]
    fn endpoint_root_rejected() {
        let q = p(&[-1, 0, 1]);
        let r = count_real_roots(&q, &Endpoint::Finite(rat(1, 1)), &Endpoint::PosInf);
        assert!(matches!(r, Err(Error::EndpointIsRoot(_))));
        assert!(matches!(count_pos_neg(&p(&[0, 1])), Err(Error::EndpointIsRoot(_))));
    }

    #[test]
    fn distinct_roots_only() {
        // (x+1)^3 (x-2)
        let q = &p(&[1, 1]).pow(3) * &p(&[-2, 1]);
        assert_eq!(count_pos_neg(&q).unwrap(), (1, 1));
        let q = &(&p(&[1, 1]) * &p(&[2, 1])) * &p(&[1, 0, 1]);
        assert_eq!(count_pos_neg(&q).unwrap(), (0, 2));
        assert_eq!(count_pos_neg(&p(&[3, -4, 1])).unwrap(), (2, 0));
    }

    #[test]
    fn isolation_and_refinement() {
        // roots 1/5 and 1 and 5
        let q = &(&p(&[-1, 5]) * &p(&[-1, 1])) * &p(&[-5, 1]);
        let iv = isolate_real_roots(&q).unwrap();
        assert_eq!(iv.len(), 3);
        let (a, b) = refine(&q, &iv[0].0, &iv[0].1, &rat(1, 1000));
        assert!(a <= rat(1, 5) && rat(1, 5) <= b);
        for w in iv.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
    }

    #[test]
    fn type_p_examples() {
        assert!(is_type_p(&p(&[221130, -30618, -30618, 221130])));
        assert!(!is_type_p(&p(&[-1, 1])));
        assert!(is_type_p(&p(&[1, 1, 1])));
    }

    #[test]
    fn float_chain_agrees_on_simple_input() {
        let q: Poly<f64> = Poly::from_i64s(&[12, -2, -2, 1]);
        assert_eq!(count_pos_neg(&q).unwrap(), (0, 1));
    }
}
