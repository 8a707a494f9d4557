//! Closed intervals with rational endpoints, used to enclose square roots.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::format_rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &RatInterval) -> bool {
        self.hi < other.lo
    }

    pub fn overlaps(&self, other: &RatInterval) -> bool {
        !(self.strictly_below(other) || other.strictly_below(self))
    }

    pub fn square(&self) -> RatInterval {
        if !self.lo.is_negative() {
            RatInterval::new(&self.lo * &self.lo, &self.hi * &self.hi)
        } else if !self.hi.is_positive() {
            RatInterval::new(&self.hi * &self.hi, &self.lo * &self.lo)
        } else {
            let m = std::cmp::max(&self.lo * &self.lo, &self.hi * &self.hi);
            RatInterval::new(BigRational::zero(), m)
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            RatInterval::new(a, b)
        } else {
            RatInterval::new(b, a)
        }
    }

    pub fn shift(&self, c: &BigRational) -> RatInterval {
        RatInterval::new(&self.lo + c, &self.hi + c)
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, o: &RatInterval) -> RatInterval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().cloned().expect("four products");
        let hi = c.iter().max().cloned().expect("four products");
        RatInterval::new(lo, hi)
    }
}

impl serde::Serialize for RatInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [format_rational(&self.lo), format_rational(&self.hi)].serialize(s)
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

/// Integer square root, rounded down. Panics on negative input.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (isqrt(n), isqrt(d));
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// Enclosure of `sqrt(q)` with dyadic endpoints at resolution `2^-bits`.
pub fn sqrt_dyadic(q: &BigRational, bits: u32) -> RatInterval {
    assert!(!q.is_negative(), "square root of a negative rational");
    if let Some(r) = exact_sqrt(q) {
        return RatInterval::point(r);
    }
    let scale = BigInt::one() << (2 * bits as usize);
    let den = BigInt::one() << bits as usize;
    let scaled = q * BigRational::from_integer(scale);
    let lo_int = isqrt(&scaled.floor().to_integer());
    let mut hi_int = isqrt(&scaled.ceil().to_integer());
    if &hi_int * &hi_int < scaled.ceil().to_integer() {
        hi_int += 1;
    }
    RatInterval::new(BigRational::new(lo_int, den.clone()), BigRational::new(hi_int, den))
}

/// Enclosure of `sqrt(q)` of width at most `width` (`width > 0`).
pub fn sqrt_enclosure(q: &BigRational, width: &BigRational) -> RatInterval {
    let mut bits = 16;
    loop {
        let iv = sqrt_dyadic(q, bits);
        if &iv.width() <= width {
            return iv;
        }
        bits *= 2;
    }
}

/// The rational with the smallest denominator (then numerator) in the open
/// interval `(lo, hi)`, for `0 <= lo < hi`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(!lo.is_negative() && lo < hi, "need 0 <= lo < hi");
    let fl = lo.floor();
    let next = &fl + BigRational::one();
    if &next < hi {
        return next;
    }
    if *lo == fl {
        // (fl, hi) with hi <= fl + 1: fl + 1/y for y > 1/(hi - fl)
        let y = (BigRational::one() / (hi - &fl)).floor() + BigRational::one();
        return fl + BigRational::one() / y;
    }
    let y = simplest_between(&(BigRational::one() / (hi - &fl)), &(BigRational::one() / (lo - &fl)));
    fl + BigRational::one() / y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn sqrt_enclosures_are_rigorous() {
        for (n, d) in [(2, 1), (5, 1), (1, 3), (22, 7), (9, 4)] {
            let q = rat(n, d);
            let iv = sqrt_enclosure(&q, &rat(1, 1_000_000));
            assert!(iv.width() <= rat(1, 1_000_000));
            assert!(&iv.lo * &iv.lo <= q && q <= &iv.hi * &iv.hi);
        }
        assert!(sqrt_dyadic(&rat(9, 4), 4).is_point());
    }

    #[test]
    fn arithmetic_encloses() {
        let a = RatInterval::new(rat(1, 1), rat(2, 1));
        let b = RatInterval::new(rat(-1, 1), rat(3, 1));
        assert_eq!(&a * &b, RatInterval::new(rat(-2, 1), rat(6, 1)));
        assert_eq!(&a - &b, RatInterval::new(rat(-2, 1), rat(3, 1)));
        assert_eq!(b.square(), RatInterval::new(rat(0, 1), rat(9, 1)));
        assert!(a.strictly_below(&RatInterval::point(rat(5, 2))));
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(0, 1), &rat(1, 3)), rat(1, 4));
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_between(&rat(3, 2), &rat(7, 2)), rat(2, 1));
        assert_eq!(simplest_between(&rat(314, 100), &rat(315, 100)), rat(22, 7));
        let (a, b) = (rat(1, 1_000_003), rat(1, 1_000_001));
        let x = simplest_between(&a, &b);
        assert!(a < x && x < b);
    }
}
