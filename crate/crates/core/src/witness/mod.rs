//! Certified witness polynomials.
//!
//! Every constructor returns a [`Witness`] that has already passed
//! [`certify`]: its sign pattern and its Sturm root counts are recomputed
//! from the coefficients alone.

mod concat;
mod shift;
mod thm2;

pub use concat::{concat_pattern, concatenate, find_epsilon, realize_cp};
pub use shift::{shift_to_ap, shift_to_neg};
pub use thm2::{fixture_witness_d10, fixture_witness_d11, perturb_jittered, perturb_to_distinct, theorem2_coefficients, theorem2_construct, Thm2Params};

use num_rational::BigRational;
use num_traits::One;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::criteria::{classify_base, L_value, Status};
use crate::error::{Error, Result};
use crate::poly::{format_rational, RatPoly};
use crate::signpat::{pattern_of, AdmissiblePair, SignPattern, ThreeBlockPattern};
use crate::sturm::count_pos_neg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Concat,
    Thm2,
    Shift,
    PaperFixture,
    Search,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::Concat => "concat",
            Construction::Thm2 => "thm2",
            Construction::Shift => "shift",
            Construction::PaperFixture => "paper-fixture",
            Construction::Search => "search",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub epsilon: Vec<BigRational>,
    pub eta: Option<BigRational>,
    pub t: Option<BigRational>,
    pub y: Option<BigRational>,
    pub z: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub pattern: SignPattern,
    pub ap: AdmissiblePair,
    pub poly: RatPoly,
    pub construction: Construction,
    pub params: Params,
    /// Exact real roots, when the construction knows them. Used to speed up shifts.
    pub real_roots: Option<Vec<BigRational>>,
}

impl Witness {
    /// Build and certify.
    pub fn new(poly: RatPoly, pattern: SignPattern, ap: AdmissiblePair, construction: Construction, params: Params) -> Result<Self> {
        certify(&poly, &pattern, ap)?;
        Ok(Witness { pattern, ap, poly, construction, params, real_roots: None })
    }

    pub fn with_roots(mut self, roots: Vec<BigRational>) -> Self {
        self.real_roots = Some(roots);
        self
    }

    /// Re-run the independent checks.
    pub fn certify(&self) -> Result<()> {
        certify(&self.poly, &self.pattern, self.ap)
    }

    /// The reverted witness: pattern and roots reversed, counts unchanged.
    pub fn reversed(&self) -> Result<Witness> {
        let poly = self.poly.reverse()?;
        let lc = poly.leading();
        let poly = poly.scale(&(BigRational::one() / lc));
        let mut w = Witness::new(poly, self.pattern.reversed(), self.ap, self.construction, self.params.clone())?;
        w.real_roots = self
            .real_roots
            .as_ref()
            .map(|r| r.iter().map(|x| BigRational::one() / x).collect());
        Ok(w)
    }
}

/// The pattern of `poly` is `pattern` and its distinct positive/negative root counts are `ap`.
pub fn certify(poly: &RatPoly, pattern: &SignPattern, ap: AdmissiblePair) -> Result<()> {
    let got = pattern_of(poly)?;
    if &got != pattern {
        return Err(Error::Certification(format!("pattern is {got}, expected {pattern}")));
    }
    let (pos, neg) = count_pos_neg(poly)?;
    if AdmissiblePair::new(pos, neg) != ap {
        return Err(Error::Certification(format!("root counts are ({pos},{neg}), expected {ap}")));
    }
    Ok(())
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut params = serde_json::Map::new();
        if !self.params.epsilon.is_empty() {
            let eps: Vec<String> = self.params.epsilon.iter().map(format_rational).collect();
            params.insert("epsilon".into(), eps.into());
        }
        for (k, v) in [("eta", &self.params.eta), ("t", &self.params.t), ("y", &self.params.y), ("z", &self.params.z)] {
            if let Some(v) = v {
                params.insert(k.into(), format_rational(v).into());
            }
        }
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("pattern", &self.pattern)?;
        map.serialize_entry("ap", &self.ap)?;
        map.serialize_entry("coeffs", &self.poly.to_string())?;
        map.serialize_entry("construction", self.construction.as_str())?;
        map.serialize_entry("parameters", &params)?;
        map.end()
    }
}

/// Patterns with at most one sign change, any admissible pair.
pub fn realize_c0_c1(sigma: &SignPattern, ap: AdmissiblePair) -> Result<Witness> {
    sigma.check_admissible(ap)?;
    let (c, _) = sigma.changes_preservations();
    let d = sigma.degree();
    match c {
        0 => {
            let mut last = None;
            // roots -1, ..., -d, re-jittered if the shift cannot separate critical levels
            for attempt in 0..8u32 {
                let roots: Vec<BigRational> = (1..=d as i64)
                    .map(|i| {
                        let jitter = if attempt == 0 {
                            BigRational::from_integer(0.into())
                        } else {
                            BigRational::new((i * i).into(), (4 * d as i64 * d as i64).into())
                                / BigRational::from_integer((1i64 << attempt).into())
                        };
                        BigRational::from_integer(i.into()) + jitter
                    })
                    .collect();
                let spec = crate::poly::RootSpec { neg_roots: roots.clone(), ..Default::default() };
                let poly = spec.expand()?;
                let neg_roots: Vec<BigRational> = roots.iter().map(|r| -r.clone()).collect();
                let base = Witness::new(poly, sigma.clone(), AdmissiblePair::new(0, d), Construction::Concat, Params::default())?
                    .with_roots(neg_roots);
                if ap.neg == d {
                    return Ok(base);
                }
                match shift_to_neg(&base, ap.neg) {
                    Ok(w) => return Ok(w),
                    Err(e) => last = Some(e),
                }
            }
            Err(last.unwrap_or_else(|| Error::Construction("no witness".into())))
        }
        1 => {
            let base = realize_cp(sigma)?;
            if base.ap == ap {
                return Ok(base);
            }
            shift_to_neg(&base, ap.neg)
        }
        _ => Err(Error::Construction(format!("{sigma} has more than one sign change"))),
    }
}

/// The quadratic-factor polynomial for `tb`, built in whichever orientation has
/// `L > 0`; the flag says the result must be reverted to realize `tb`.
fn oriented_thm2(tb: ThreeBlockPattern) -> Result<(RatPoly, Thm2Params, bool)> {
    let d = tb.degree();
    let zero = BigRational::from_integer(0.into());
    let (oriented, flip) = if L_value(d, tb.m, tb.n) > zero {
        (tb, false)
    } else if L_value(d, tb.q, tb.n) > zero {
        (tb.reversed(), true)
    } else {
        return Err(Error::Construction(format!("no construction available for {tb}")));
    };
    let (p, par) = theorem2_construct(d, oriented.m, oriented.n)?;
    Ok((p, par, flip))
}

fn perturbed(p: &RatPoly, par: &Thm2Params, flip: bool, attempt: u32) -> Result<Witness> {
    let mut w = if p.degree() == 2 {
        // nothing to perturb: the quadratic alone
        Witness::new(p.clone(), pattern_of(p)?, AdmissiblePair::new(0, 0), Construction::Thm2, Params::default())?
    } else {
        perturb_jittered(p, attempt)?
    };
    w.params.y = Some(par.y.clone());
    w.params.z = Some(par.z.clone());
    if flip {
        w = w.reversed()?;
    }
    Ok(w)
}

/// Shift a perturbed witness down to `neg`, re-perturbing with jittered offsets
/// when two critical levels are too close to separate.
fn shifted(p: &RatPoly, par: &Thm2Params, flip: bool, neg: usize) -> Result<Witness> {
    let mut last = None;
    for attempt in 0..9 {
        match shift_to_neg(&perturbed(p, par, flip, attempt)?, neg) {
            Ok(w) => return Ok(w),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Witness for `(tb, (0, neg))` from the quadratic-factor construction: perturbed,
/// reverted if needed, then shifted.
pub fn realize_three_block(tb: ThreeBlockPattern, neg: usize) -> Result<Witness> {
    let (p, par, flip) = oriented_thm2(tb)?;
    if neg == tb.degree() - 2 {
        return perturbed(&p, &par, flip, 0);
    }
    shifted(&p, &par, flip, neg)
}

/// One row of the quadratic-factor sweep: the unperturbed polynomial and
/// certified witnesses for `(0, d - 2)` and `(0, d - 4)` (the latter when `d >= 4`).
#[derive(Clone, Debug)]
pub struct SweepCase {
    pub d: usize,
    pub m: usize,
    pub n: usize,
    pub params: Thm2Params,
    pub base: RatPoly,
    pub full: Witness,
    pub reduced: Option<Witness>,
}

pub fn thm2_sweep_case(d: usize, m: usize, n: usize) -> Result<SweepCase> {
    let (base, params) = theorem2_construct(d, m, n)?;
    let full = perturbed(&base, &params, false, 0)?;
    let reduced = if d >= 4 { Some(shifted(&base, &params, false, d - 4)?) } else { None };
    Ok(SweepCase { d, m, n, params, base, full, reduced })
}

/// Every `(d, m, n)` with `2 <= d <= max_d` and `L(d, m, n) > 0`.
pub fn thm2_sweep_triples(max_d: usize) -> Vec<(usize, usize, usize)> {
    let zero = BigRational::from_integer(0.into());
    let mut out = Vec::new();
    for d in 2..=max_d {
        for m in 1..d {
            for n in 1..=d - m {
                if L_value(d, m, n) > zero {
                    out.push((d, m, n));
                }
            }
        }
    }
    out
}

/// A certified witness for any couple the criteria mark realizable.
pub fn construct_witness(sigma: &SignPattern, ap: AdmissiblePair) -> Result<Witness> {
    sigma.check_admissible(ap)?;
    let (c, p) = sigma.changes_preservations();
    if ap == AdmissiblePair::new(c, p) {
        return realize_cp(sigma);
    }
    if c <= 1 {
        return realize_c0_c1(sigma, ap);
    }
    let tb = sigma
        .three_block()
        .filter(|_| ap.pos == 0)
        .ok_or_else(|| Error::Construction(format!("no construction for {sigma} with {ap}")))?;
    let (status, _) = classify_base(tb)?;
    if status != Status::Realizable {
        return Err(Error::Construction(format!("{tb} with (0,{}) is not known to be realizable", tb.degree() - 2)));
    }
    realize_three_block(tb, ap.neg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c0_and_c1_witnesses() {
        let w = realize_c0_c1(&SignPattern::all_plus(3), AdmissiblePair::new(0, 3)).unwrap();
        assert_eq!(w.poly, RatPoly::from_i64s(&[6, 11, 6, 1]));
        let w = realize_c0_c1(&SignPattern::all_plus(4), AdmissiblePair::new(0, 2)).unwrap();
        w.certify().unwrap();
        let sigma: SignPattern = "+----".parse().unwrap();
        for ap in [AdmissiblePair::new(1, 3), AdmissiblePair::new(1, 1)] {
            realize_c0_c1(&sigma, ap).unwrap().certify().unwrap();
        }
        let sigma: SignPattern = "+-----".parse().unwrap();
        realize_c0_c1(&sigma, AdmissiblePair::new(1, 4)).unwrap().certify().unwrap();
    }

    #[test]
    fn json_export() {
        let w = realize_cp(&"+-+".parse().unwrap()).unwrap();
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(v["construction"], "concat");
        assert_eq!(v["ap"], serde_json::json!([2, 0]));
        assert!(v["parameters"]["epsilon"].is_array());
    }

    #[test]
    fn three_block_both_orientations() {
        for (m, n, q) in [(2, 4, 6), (6, 4, 2), (1, 2, 2), (3, 3, 1)] {
            let tb = ThreeBlockPattern::new(m, n, q).unwrap();
            let d = tb.degree();
            for neg in [d - 2, d - 4] {
                let w = realize_three_block(tb, neg).unwrap();
                assert_eq!(w.pattern, tb.pattern());
                assert_eq!(w.ap, AdmissiblePair::new(0, neg));
            }
        }
    }
}
