use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Construction, Params, Witness};
use crate::error::{Error, Result};
use crate::interval::simplest_between;
use crate::poly::{rat, RatPoly};
use crate::signpat::AdmissiblePair;
use crate::sturm::{isolate_real_roots_in, refine};

/// `P + s t` (with `s` the sign of `P(0)`) having `neg` distinct negative roots.
///
/// Adding `s t` pushes the graph away from the axis; a pair of negative roots
/// disappears each time `t` passes the depth of a dip of `s P` between them.
pub fn shift_to_neg(w: &Witness, neg: usize) -> Result<Witness> {
    if neg > w.ap.neg || (w.ap.neg - neg) % 2 != 0 {
        return Err(Error::OutOfRange(format!("cannot go from {} to {neg} negative roots", w.ap.neg)));
    }
    if neg == w.ap.neg {
        return Ok(w.clone());
    }
    let p = &w.poly;
    let s = p.constant_term().signum();
    if s.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let j = (w.ap.neg - neg) / 2;
    let (lo, hi) = match hinted_factorization(w) {
        Some((roots, cofactor)) => {
            let mut levels = dip_levels_log2(&roots, &cofactor, &s);
            levels.sort_by(f64::total_cmp);
            if levels.len() < j {
                return Err(Error::Construction(format!("only {} dips below the axis, need {j}", levels.len())));
            }
            let margin = 1.001f64.log2();
            let lo = levels[j - 1] + margin;
            let hi = levels.get(j).map_or(levels[j - 1] + 1.0, |l| l - margin);
            if hi <= lo {
                return Err(Error::Construction("critical levels too close to separate".into()));
            }
            (pow2(lo), pow2(hi))
        }
        None => {
            let mut depths = dips_isolated(p, &s)?;
            depths.sort();
            if depths.len() < j {
                return Err(Error::Construction(format!("only {} dips below the axis, need {j}", depths.len())));
            }
            let lo = &depths[j - 1] * rat(1001, 1000);
            let hi = match depths.get(j) {
                Some(next) => next * rat(999, 1000),
                None => &depths[j - 1] * rat(2, 1),
            };
            if hi <= lo {
                return Err(Error::Construction("critical levels too close to separate".into()));
            }
            (lo, hi)
        }
    };
    let t = simplest_between(&lo, &hi);
    let shifted = p + &RatPoly::constant(&s * &t);
    let params = Params { t: Some(t), ..w.params.clone() };
    Witness::new(shifted, w.pattern.clone(), AdmissiblePair::new(w.ap.pos, neg), Construction::Shift, params)
}

/// Shift a witness down to `(pos, d - 2k)`.
pub fn shift_to_ap(w: &Witness, k: usize) -> Result<Witness> {
    let d = w.poly.degree();
    if 2 * k > d {
        return Err(Error::OutOfRange(format!("k = {k} exceeds d / 2 for d = {d}")));
    }
    shift_to_neg(w, d - 2 * k)
}

/// The hinted negative roots, ascending, and the exact cofactor `P / prod (x - r)`,
/// when the hints divide `P` exactly.
fn hinted_factorization(w: &Witness) -> Option<(Vec<BigRational>, RatPoly)> {
    let roots = w.real_roots.as_ref()?;
    let mut neg: Vec<BigRational> = roots.iter().filter(|r| r.is_negative()).cloned().collect();
    neg.sort();
    neg.dedup();
    if neg.len() != w.ap.neg {
        return None;
    }
    let prod = neg.iter().fold(RatPoly::one(), |acc, r| &acc * &RatPoly::linear_root(r.clone()));
    let (cofactor, rem) = w.poly.div_rem(&prod);
    rem.is_zero().then_some((neg, cofactor))
}

/// `log2 |P|` at the critical point of each gap between consecutive roots
/// where `s P < 0`, with `P = cofactor * prod (x - r)` evaluated in factored form.
fn dip_levels_log2(roots: &[BigRational], cofactor: &RatPoly, s: &BigRational) -> Vec<f64> {
    let rf: Vec<f64> = roots.iter().map(to_f64).collect();
    let cf = cofactor.to_f64();
    let dcf = cf.derivative();
    // d/dx log|P|, decreasing across each gap
    let slope = |x: f64| rf.iter().map(|r| 1.0 / (x - r)).sum::<f64>() + dcf.eval(&x) / cf.eval(&x);
    let log_abs = |x: f64| rf.iter().map(|r| (x - r).abs().log2()).sum::<f64>() + cf.eval(&x).abs().log2();
    let mut out = Vec::new();
    for (i, pair) in roots.windows(2).enumerate() {
        let mid = (&pair[0] + &pair[1]) / rat(2, 1);
        let sign = s * cofactor.eval(&mid) * sign_of_product(roots, &mid);
        if sign.is_positive() {
            continue;
        }
        let (mut a, mut b) = (rf[i], rf[i + 1]);
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            if slope(m) > 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
        out.push(log_abs(0.5 * (a + b)));
    }
    out
}

fn sign_of_product(roots: &[BigRational], x: &BigRational) -> BigRational {
    let above = roots.iter().filter(|r| *r > x).count();
    if above % 2 == 0 { BigRational::one() } else { -BigRational::one() }
}

fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().expect("finite")
}

/// A rational close to `2^e`.
fn pow2(e: f64) -> BigRational {
    let fl = e.floor();
    let m = BigRational::from_float((e - fl).exp2()).expect("finite");
    let k = fl as i64;
    let two = BigRational::from_integer(2.into());
    if k >= 0 { m * two.pow(k as i32) } else { m / two.pow((-k) as i32) }
}

fn dips_isolated(p: &RatPoly, s: &BigRational) -> Result<Vec<BigRational>> {
    let dp = p.derivative();
    let bound = dp.root_bound() + BigRational::one();
    let mut out = Vec::new();
    for (a, b) in isolate_real_roots_in(&dp, &-bound, &BigRational::zero())? {
        let width = (&b - &a) * rat(1, 1 << 30) * rat(1, 1 << 20);
        let (x0, x1) = refine(&dp, &a, &b, &width);
        let v = p.eval(&((x0 + x1) / rat(2, 1)));
        if (s * &v).is_negative() {
            out.push(v.abs());
        }
    }
    Ok(out)
}
