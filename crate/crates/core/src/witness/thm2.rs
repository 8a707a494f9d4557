use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Construction, Params, Witness};
use crate::criteria::QValue;
use crate::error::{Error, Result};
use crate::interval::{simplest_between, sqrt_enclosure};
use crate::poly::{rat, RatPoly};
use crate::signpat::{pattern_of, AdmissiblePair, ThreeBlockPattern};
use crate::sturm::count_pos_neg;

#[derive(Clone, Debug, PartialEq)]
pub struct Thm2Params {
    pub y: BigRational,
    pub z: BigRational,
}

/// `(x + 1)^(d - 2) (x^2 - z x + y)`.
pub fn theorem2_coefficients(d: usize, y: &BigRational, z: &BigRational) -> RatPoly {
    let c: Vec<BigRational> = (0..=d - 2)
        .map(|k| BigRational::from_integer(binomial(BigInt::from(d - 2), BigInt::from(k))))
        .collect();
    let quad = RatPoly::new(vec![y.clone(), -z.clone(), BigRational::one()]);
    &RatPoly::new(c) * &quad
}

/// `(x+1)^8 (x^2 - 2.49 x + 1.56)`, realizing `S(3,4,4)`.
pub fn fixture_witness_d10() -> RatPoly {
    theorem2_coefficients(10, &rat(39, 25), &rat(249, 100))
}

/// `(x+1)^9 (x^2 - 4.69 x + 5.5)`, realizing `S(2,4,6)`.
pub fn fixture_witness_d11() -> RatPoly {
    theorem2_coefficients(11, &rat(11, 2), &rat(469, 100))
}

/// Descending coefficient `j` is `C(j) - z C(j-1) + y C(j-2)` with `C(k) = binom(d-2, k)`;
/// it is negative iff `z > a_j + b_j y`.
fn line(d: usize, j: usize) -> (BigRational, BigRational) {
    let c = |k: isize| -> BigRational {
        if k < 0 || k > d as isize - 2 {
            BigRational::zero()
        } else {
            BigRational::from_integer(binomial(BigInt::from(d - 2), BigInt::from(k as usize)))
        }
    };
    let j = j as isize;
    let den = c(j - 1);
    (c(j) / &den, c(j - 2) / den)
}

fn at(l: &(BigRational, BigRational), y: &BigRational) -> BigRational {
    &l.0 + &l.1 * y
}

/// Rational `(y, z)` with `z^2 < 4y` such that `(x+1)^(d-2)(x^2 - zx + y)` has pattern `S(m, n, d+1-m-n)`.
pub fn theorem2_construct(d: usize, m: usize, n: usize) -> Result<(RatPoly, Thm2Params)> {
    if m == 0 || n == 0 || m + n > d {
        return Err(Error::BadBlocks { m, n, q: (d + 1).saturating_sub(m + n) });
    }
    let tb = ThreeBlockPattern::new(m, n, d + 1 - m - n)?;
    let target = tb.pattern();
    let neg: Vec<usize> = (m..m + n).collect();
    let pos: Vec<usize> = (1..d).filter(|j| !neg.contains(j)).collect();
    let neg_lines: Vec<_> = neg.iter().map(|&j| line(d, j)).collect();
    let pos_lines: Vec<_> = pos.iter().map(|&k| line(d, k)).collect();

    // every negative line below every positive line: a linear interval in y
    let mut ylo = BigRational::zero();
    let mut yhi: Option<BigRational> = None;
    for lj in &neg_lines {
        for lk in &pos_lines {
            let db = &lj.1 - &lk.1;
            let da = &lk.0 - &lj.0;
            if db.is_zero() {
                if !da.is_positive() {
                    return Err(Error::Construction(format!("{tb}: incompatible coefficient lines")));
                }
            } else if db.is_positive() {
                let b = da / db;
                yhi = Some(match yhi {
                    Some(h) if h < b => h,
                    _ => b,
                });
            } else {
                let b = da / db;
                if b > ylo {
                    ylo = b;
                }
            }
        }
    }

    let mut tol = rat(1, 1 << 20);
    for _ in 0..6 {
        // sqrt(y) must lie strictly between Q-(j-1) and Q+(j-1) for each negative index j
        let mut lo = ylo.clone();
        let mut hi = yhi.clone();
        for &j in &neg {
            let qm = QValue::new(d, j - 1, false).expect("finite").enclose(&tol);
            let b = &qm.hi * &qm.hi;
            if b > lo {
                lo = b;
            }
            if let Some(qp) = QValue::new(d, j - 1, true) {
                let e = qp.enclose(&tol);
                let b = &e.lo * &e.lo;
                hi = Some(match hi {
                    Some(h) if h < b => h,
                    _ => b,
                });
            }
        }
        let y = match &hi {
            Some(h) if *h <= lo => {
                tol = &tol * &tol;
                continue;
            }
            Some(h) => {
                let q = (h - &lo) / BigRational::from_integer(4.into());
                simplest_between(&(&lo + &q), &(h - &q))
            }
            None => simplest_between(&lo, &(&lo + BigRational::one())),
        };
        let zlo = neg_lines.iter().map(|l| at(l, &y)).max().expect("n >= 1");
        let two_sqrt = sqrt_enclosure(&y, &tol).lo * BigRational::from_integer(2.into());
        let zhi = pos_lines.iter().map(|l| at(l, &y)).fold(two_sqrt, |a, b| if b < a { b } else { a });
        if zhi <= zlo {
            tol = &tol * &tol;
            continue;
        }
        let q = (&zhi - &zlo) / BigRational::from_integer(4.into());
        let z = simplest_between(&(&zlo + &q), &(&zhi - &q));
        let poly = theorem2_coefficients(d, &y, &z);
        if &z * &z < BigRational::from_integer(4.into()) * &y && pattern_of(&poly).is_ok_and(|s| s == target) {
            return Ok((poly, Thm2Params { y, z }));
        }
        tol = &tol * &tol;
    }
    Err(Error::Construction(format!("no (y, z) found for {tb}")))
}

/// Split the repeated root at `-1` of `P = (x+1)^k Q` into `-1, -1-eta, ..., -1-(k-1)eta`.
pub fn perturb_to_distinct(p: &RatPoly) -> Result<Witness> {
    perturb_jittered(p, 0)
}

/// As [`perturb_to_distinct`], with offsets `i + i^2 / (4 k^2 2^(attempt-1))` for `attempt > 0`.
/// Equal spacing gives nearly equal critical levels, which a later shift cannot separate.
pub fn perturb_jittered(p: &RatPoly, attempt: u32) -> Result<Witness> {
    let x1 = RatPoly::from_i64s(&[1, 1]);
    let mut q = p.clone();
    let mut k = 0usize;
    loop {
        let (quot, rem) = q.div_rem(&x1);
        if !rem.is_zero() {
            break;
        }
        q = quot;
        k += 1;
    }
    if k == 0 {
        return Err(Error::Construction("no root at -1 to perturb".into()));
    }
    let target = pattern_of(p)?;
    let (qpos, qneg) = count_pos_neg(&q)?;
    let ap = AdmissiblePair::new(qpos, qneg + k);
    let offsets: Vec<BigRational> = (0..k as i64)
        .map(|i| {
            let base = BigRational::from_integer(i.into());
            if attempt == 0 {
                base
            } else {
                let kk = k as i64;
                base + rat(i * i, 4 * kk * kk) / BigRational::from_integer((BigInt::one() << (attempt - 1) as usize).into())
            }
        })
        .collect();
    const MAX_HALVINGS: u32 = 64;
    let mut eta = rat(1, 2 * p.degree() as i64);
    let half = rat(1, 2);
    for _ in 0..=MAX_HALVINGS {
        let roots: Vec<BigRational> = offsets.iter().map(|o| BigRational::one() + &eta * o).collect();
        let mut r = q.clone();
        for u in &roots {
            r = &r * &RatPoly::new(vec![u.clone(), BigRational::one()]);
        }
        if pattern_of(&r).is_ok_and(|s| s == target) {
            let params = Params { eta: Some(eta.clone()), ..Params::default() };
            if let Ok(w) = Witness::new(r, target.clone(), ap, Construction::Thm2, params) {
                return Ok(if qpos + qneg == 0 { w.with_roots(roots.into_iter().map(|u| -u).collect()) } else { w });
            }
        }
        eta *= &half;
    }
    Err(Error::PerturbationExhausted { halvings: MAX_HALVINGS })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_expansions() {
        let p = fixture_witness_d10();
        assert_eq!(p.coeff(9), rat(551, 100));
        assert_eq!(p.coeff(1), rat(999, 100));
        assert_eq!(p.coeff(0), rat(39, 25));
        assert_eq!(pattern_of(&p).unwrap(), ThreeBlockPattern::new(3, 4, 4).unwrap().pattern());
        let p = fixture_witness_d11();
        assert_eq!(p.coeff(10), rat(431, 100));
        assert_eq!(p.coeff(9), rat(-71, 100));
        assert_eq!(pattern_of(&p).unwrap(), ThreeBlockPattern::new(2, 4, 6).unwrap().pattern());
    }

    #[test]
    fn perturbed_fixture_witnesses() {
        let w = perturb_to_distinct(&fixture_witness_d10()).unwrap();
        assert_eq!(w.ap, AdmissiblePair::new(0, 8));
        let w = perturb_to_distinct(&fixture_witness_d11()).unwrap();
        assert_eq!(w.ap, AdmissiblePair::new(0, 9));
    }

    #[test]
    fn constructs_small_cases() {
        for (d, m, n) in [(11, 2, 4), (10, 3, 4), (4, 1, 2), (5, 1, 3), (12, 4, 4), (3, 1, 1)] {
            let (p, par) = theorem2_construct(d, m, n).unwrap();
            assert!(&par.z * &par.z < rat(4, 1) * &par.y);
            assert_eq!(pattern_of(&p).unwrap(), ThreeBlockPattern::new(m, n, d + 1 - m - n).unwrap().pattern());
        }
    }
}
