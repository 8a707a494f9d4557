use num_rational::BigRational;
use num_traits::One;

use super::{Construction, Params, Witness};
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::signpat::{pattern_of, AdmissiblePair, Sign, SignPattern};
use crate::sturm::count_pos_neg;

/// `eps^d2 * P1(x) * P2(x / eps)`: the roots of `P2` scaled by `eps`, joined to those of `P1`.
pub fn concatenate(p1: &RatPoly, p2: &RatPoly, eps: &BigRational) -> RatPoly {
    p1 * &p2.scale_x(&(BigRational::one() / eps))
}

/// Pattern of a concatenation for small `eps`: the tail of `s2` follows `s1`,
/// flipped when `s1` ends in a minus.
pub fn concat_pattern(s1: &SignPattern, s2: &SignPattern) -> SignPattern {
    let last = s1.last_sign();
    let mut out = s1.clone();
    for &s in &s2.signs()[1..] {
        out = out.extended(if last == Sign::Plus { s } else { s.flip() });
    }
    out
}

/// Halve `eps` from 1 until the concatenation has `target` pattern and counts.
pub fn find_epsilon(
    p1: &RatPoly,
    p2: &RatPoly,
    target: &SignPattern,
    target_ap: AdmissiblePair,
) -> Result<(BigRational, RatPoly)> {
    const MAX_HALVINGS: u32 = 64;
    let mut eps = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    for _ in 0..=MAX_HALVINGS {
        let p = concatenate(p1, p2, &eps);
        if pattern_of(&p).is_ok_and(|s| &s == target)
            && count_pos_neg(&p).is_ok_and(|(a, b)| AdmissiblePair::new(a, b) == target_ap)
        {
            return Ok((eps, p));
        }
        eps *= &half;
    }
    Err(Error::EpsilonExhausted { halvings: MAX_HALVINGS })
}

/// Witness for `(sigma, (c, p))`: one linear factor per sign, chained by concatenation.
pub fn realize_cp(sigma: &SignPattern) -> Result<Witness> {
    let signs = sigma.signs();
    let lin = |s: Sign| match s {
        Sign::Plus => RatPoly::from_i64s(&[1, 1]),
        Sign::Minus => RatPoly::from_i64s(&[-1, 1]),
    };
    let mut poly = lin(signs[1]);
    let mut pattern = pattern_of(&poly)?;
    let mut ap = match signs[1] {
        Sign::Plus => AdmissiblePair::new(0, 1),
        Sign::Minus => AdmissiblePair::new(1, 0),
    };
    let mut roots = vec![if signs[1] == Sign::Plus { -BigRational::one() } else { BigRational::one() }];
    let mut eps_list = Vec::new();
    for &s in &signs[2..] {
        // a preserved sign adds a negative root, a change adds a positive one
        let keep = s == pattern.last_sign();
        let p2 = lin(if keep { Sign::Plus } else { Sign::Minus });
        let target = pattern.extended(s);
        let target_ap = if keep { AdmissiblePair::new(ap.pos, ap.neg + 1) } else { AdmissiblePair::new(ap.pos + 1, ap.neg) };
        let (eps, p) = find_epsilon(&poly, &p2, &target, target_ap)?;
        roots.push(if keep { -eps.clone() } else { eps.clone() });
        eps_list.push(eps);
        poly = p;
        pattern = target;
        ap = target_ap;
    }
    let params = Params { epsilon: eps_list, ..Params::default() };
    Ok(Witness::new(poly, pattern, ap, Construction::Concat, params)?.with_roots(roots))
}
