//! Realizability criteria for `(pattern, pair)` couples and the resulting classification.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::{sqrt_enclosure, RatInterval};
use crate::poly::{format_rational, rat, RatPoly};
use crate::signpat::{AdmissiblePair, SignPattern, ThreeBlockPattern};

pub const SCHEMA: &str = "descartes-lab/1";

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The sufficient-condition quantity `-d n^2 + 4dm + 4dn - 4m^2 - 4mn - 4d + 4m`.
#[allow(non_snake_case)]
pub fn L_value(d: usize, m: usize, n: usize) -> BigRational {
    let (d, m, n) = (d as i64, m as i64, n as i64);
    int(-d * n * n + 4 * d * m + 4 * d * n - 4 * m * m - 4 * m * n - 4 * d + 4 * m)
}

/// `kappa = ((d - m - 1) / m) * ((d - q - 1) / q)`.
pub fn kappa_value(d: usize, m: usize, q: usize) -> BigRational {
    let (d, m, q) = (d as i64, m as i64, q as i64);
    rat(d - m - 1, m) * rat(d - q - 1, q)
}

/// `Q(k) = r (1 + sign * sqrt(s))`, kept symbolic so comparisons can be exact.
#[derive(Clone, Debug, PartialEq)]
pub struct QValue {
    pub r: BigRational,
    pub s: BigRational,
    pub plus: bool,
}

impl QValue {
    /// `None` stands for `+inf` (the upper bound at `k = 0`).
    pub fn new(d: usize, k: usize, plus: bool) -> Option<QValue> {
        assert!(d >= 2 && k <= d - 2, "need 0 <= k <= d - 2");
        let (di, ki) = (d as i64, k as i64);
        if k == 0 {
            // only the lower constraint survives: sqrt(y) > (d - 2) / 2
            return (!plus).then(|| QValue { r: rat(di - 2, 2), s: BigRational::zero(), plus });
        }
        Some(QValue {
            r: rat(di - ki - 1, ki),
            s: rat(di - 1, (ki + 1) * (di - ki - 1)),
            plus,
        })
    }

    pub fn enclose(&self, width: &BigRational) -> RatInterval {
        if self.s.is_zero() || self.r.is_zero() {
            return RatInterval::point(self.r.clone());
        }
        let w = width / &self.r;
        let a = sqrt_enclosure(&self.s, &w);
        let one = BigRational::one();
        if self.plus {
            RatInterval::new(&self.r * (&one + &a.lo), &self.r * (&one + &a.hi))
        } else {
            RatInterval::new(&self.r * (&one - &a.hi), &self.r * (&one - &a.lo))
        }
    }

    /// `(r, t)` with the value equal to `r + t * sqrt(s)`.
    fn parts(&self) -> (BigRational, BigRational) {
        let t = if self.plus { self.r.clone() } else { -self.r.clone() };
        (self.r.clone(), t)
    }
}

/// Exact comparison of `r1 + t1 sqrt(s1)` with `r2 + t2 sqrt(s2)`.
fn cmp_surds(r1: &BigRational, t1: &BigRational, s1: &BigRational, r2: &BigRational, t2: &BigRational, s2: &BigRational) -> Ordering {
    // sign of (r1 - r2) + t1 sqrt(s1) - t2 sqrt(s2)
    let c = r1 - r2;
    let (a, b) = (t1.clone(), -t2.clone());
    sign_of_sum(&c, &a, s1, &b, s2)
}

/// Sign of `c + a sqrt(s) + b sqrt(u)` with `s, u >= 0`.
fn sign_of_sum(c: &BigRational, a: &BigRational, s: &BigRational, b: &BigRational, u: &BigRational) -> Ordering {
    // sign of `x + y sqrt(z)`
    fn sign_surd(x: &BigRational, y: &BigRational, z: &BigRational) -> Ordering {
        let sx = x.cmp(&BigRational::zero());
        let sy = if z.is_zero() { Ordering::Equal } else { y.cmp(&BigRational::zero()) };
        if sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal || sx == sy {
            return sy;
        }
        // opposite signs: compare x^2 with y^2 z
        let lhs = x * x;
        let rhs = y * y * z;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => Ordering::Equal,
        }
    }
    // p = c + a sqrt(s), q = b sqrt(u); sign(p + q)
    let sp = sign_surd(c, a, s);
    let sq = if u.is_zero() { Ordering::Equal } else { b.cmp(&BigRational::zero()) };
    if sq == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal || sp == sq {
        return sq;
    }
    // opposite signs: compare p^2 with q^2, i.e. c^2 + a^2 s - b^2 u + 2ac sqrt(s) against 0
    let x = c * c + a * a * s - b * b * u;
    let y = int(2) * a * c;
    match sign_surd(&x, &y, s) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    }
}

pub fn cmp_q(a: &QValue, b: &QValue) -> Ordering {
    let (r1, t1) = a.parts();
    let (r2, t2) = b.parts();
    cmp_surds(&r1, &t1, &a.s, &r2, &t2, &b.s)
}

/// Rational enclosures of `Q-(k)` and `Q+(k)` of width at most `tol` (`Q+` is `None` at `k = 0`).
pub fn q_bounds(d: usize, k: usize, tol: &BigRational) -> (RatInterval, Option<RatInterval>) {
    let qm = QValue::new(d, k, false).expect("lower value is finite").enclose(tol);
    let qp = QValue::new(d, k, true).map(|q| q.enclose(tol));
    (qm, qp)
}

/// Outcome of comparing `Q-(m-1)` with `Q+(m+n-2)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqE {
    pub holds: bool,
    /// Enclosures used for the decision.
    pub qminus: RatInterval,
    pub qplus: Option<RatInterval>,
    /// True when interval refinement did not separate them and the exact comparison decided.
    pub exact_fallback: bool,
    pub equal: bool,
}

/// Decide `Q-(m-1) < Q+(m+n-2)`, refining enclosures, with an exact fallback.
pub fn eqe(d: usize, m: usize, n: usize) -> EqE {
    let lo = QValue::new(d, m - 1, false).expect("finite");
    let hi = QValue::new(d, m + n - 2, true);
    let mut tol = rat(1, 1_000_000);
    for _ in 0..4 {
        let qm = lo.enclose(&tol);
        let Some(hi) = &hi else {
            return EqE { holds: true, qminus: qm, qplus: None, exact_fallback: false, equal: false };
        };
        let qp = hi.enclose(&tol);
        if qm.strictly_below(&qp) {
            return EqE { holds: true, qminus: qm, qplus: Some(qp), exact_fallback: false, equal: false };
        }
        if qp.strictly_below(&qm) {
            return EqE { holds: false, qminus: qm, qplus: Some(qp), exact_fallback: false, equal: false };
        }
        tol = &tol * &tol;
    }
    let hi = hi.expect("handled above");
    let ord = cmp_q(&lo, &hi);
    EqE {
        holds: ord == Ordering::Less,
        qminus: lo.enclose(&tol),
        qplus: Some(hi.enclose(&tol)),
        exact_fallback: true,
        equal: ord == Ordering::Equal,
    }
}

/// Diagnostic quantities of the squared form of the comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub a: BigRational,
    pub f: BigRational,
    pub b_sq: BigRational,
    pub g_sq: BigRational,
    pub b: RatInterval,
    pub g: RatInterval,
    pub h: BigRational,
    /// `H < 0` or `H^2 < B^2 G^2`, decided exactly.
    pub h_test: bool,
}

/// Defined when `m >= 2` (so both `a` and `f` are finite).
pub fn diagnostics(d: usize, m: usize, n: usize) -> Option<Diagnostics> {
    if m < 2 || m + n > d {
        return None;
    }
    let (di, mi, ni) = (d as i64, m as i64, n as i64);
    let a = rat(di - mi, mi - 1);
    let f = rat(di - mi - ni + 1, mi + ni - 2);
    let one = BigRational::one();
    let b_sq = &one - rat((mi - 1) * (di - mi - 1), mi * (di - mi));
    let g_sq = &one - rat((mi + ni - 2) * (di - mi - ni), (mi + ni - 1) * (di - mi - ni + 1));
    let amf = &a - &f;
    let h = (&amf * &amf - &a * &a * &b_sq - &f * &f * &g_sq) / (int(2) * &a * &f);
    let h_test = h.is_negative() || &h * &h < &b_sq * &g_sq;
    let tol = rat(1, 1_000_000);
    Some(Diagnostics {
        b: sqrt_enclosure(&b_sq, &tol),
        g: sqrt_enclosure(&g_sq, &tol),
        a,
        f,
        b_sq,
        g_sq,
        h,
        h_test,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionTrace {
    pub l_value: BigRational,
    pub kappa_value: BigRational,
    pub eqe: EqE,
    pub diagnostics: Option<Diagnostics>,
}

impl CriterionTrace {
    pub fn new(tb: ThreeBlockPattern) -> Self {
        let d = tb.degree();
        CriterionTrace {
            l_value: L_value(d, tb.m, tb.n),
            kappa_value: kappa_value(d, tb.m, tb.q),
            eqe: eqe(d, tb.m, tb.n),
            diagnostics: diagnostics(d, tb.m, tb.n),
        }
    }
}

impl Serialize for CriterionTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("L", &format_rational(&self.l_value))?;
        map.serialize_entry("kappa", &format_rational(&self.kappa_value))?;
        map.serialize_entry("eqE", &self.eqe.holds)?;
        map.serialize_entry("qminus", &interval_pair(&self.eqe.qminus))?;
        map.serialize_entry("qplus", &self.eqe.qplus.as_ref().map(interval_pair))?;
        if let Some(g) = &self.diagnostics {
            map.serialize_entry("H", &format_rational(&g.h))?;
            map.serialize_entry("H_test", &g.h_test)?;
        }
        map.end()
    }
}

fn interval_pair(iv: &RatInterval) -> [String; 2] {
    [format_rational(&iv.lo), format_rational(&iv.hi)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Realizable,
    NonRealizable,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    Eq2LPositive,
    KappaGe4,
    Thm1Part(u8),
    Prop1,
    Prop3Fact,
    PaperFact,
    WitnessFound,
    OracleExhaustedUnknown,
    NoCriterion,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Eq2LPositive => f.write_str("Eq2-L-positive"),
            Reason::KappaGe4 => f.write_str("Kappa-ge-4"),
            Reason::Thm1Part(k) => write!(f, "Thm1-part({k})"),
            Reason::Prop1 => f.write_str("Prop1"),
            Reason::Prop3Fact => f.write_str("Prop3-fact"),
            Reason::PaperFact => f.write_str("Paper-fact"),
            Reason::WitnessFound => f.write_str("Witness-found"),
            Reason::OracleExhaustedUnknown => f.write_str("Oracle-exhausted-unknown"),
            Reason::NoCriterion => f.write_str("No-criterion"),
        }
    }
}

impl Serialize for Reason {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub pattern: SignPattern,
    pub ap: AdmissiblePair,
    pub status: Status,
    pub reason: Reason,
    pub witness: Option<RatPoly>,
    pub trace: Option<CriterionTrace>,
}

impl Classification {
    pub fn degree(&self) -> usize {
        self.pattern.degree()
    }

    fn realizable(pattern: &SignPattern, ap: AdmissiblePair, reason: Reason) -> Self {
        Classification { pattern: pattern.clone(), ap, status: Status::Realizable, reason, witness: None, trace: None }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("schema", SCHEMA)?;
        map.serialize_entry("degree", &self.degree())?;
        map.serialize_entry("pattern", &self.pattern)?;
        map.serialize_entry("ap", &self.ap)?;
        map.serialize_entry("status", &self.status)?;
        map.serialize_entry("reason", &self.reason)?;
        if let Some(w) = &self.witness {
            map.serialize_entry("witness", &w.to_string())?;
        }
        if let Some(t) = &self.trace {
            map.serialize_entry("trace", t)?;
        }
        map.end()
    }
}

/// A nonrealizability fact for `(tb, (0, d - 2))`, checked in this order.
pub fn nonrealizability(tb: ThreeBlockPattern) -> Option<Reason> {
    let d = tb.degree();
    let either = |f: &dyn Fn(ThreeBlockPattern) -> bool| f(tb) || f(tb.reversed());
    if either(&|t| d == 4 && (t.m, t.n, t.q) == (1, 3, 1)) || (5..=8).contains(&d) && tb.n == 4 {
        return Some(Reason::PaperFact);
    }
    if either(&|t| matches!((d, t.m, t.n, t.q), (9, 3, 4, 3) | (9, 2, 4, 4) | (10, 2, 4, 5))) {
        return Some(Reason::Prop3Fact);
    }
    if kappa_value(d, tb.m, tb.q) >= int(4) {
        return Some(Reason::KappaGe4);
    }
    if either(&|t| t.m == 1 && t.n >= 4) {
        return Some(Reason::Thm1Part(4));
    }
    None
}

/// A sufficient condition for realizability of `(tb, (0, d - 2))`.
pub fn sufficiency(tb: ThreeBlockPattern) -> Option<Reason> {
    let d = tb.degree();
    let (m, n, q) = (tb.m, tb.n, tb.q);
    if (n == 1 && d >= 2) || (n == 2 && d >= 3) {
        return Some(Reason::Thm1Part(1));
    }
    if n == 3 && d >= 5 {
        return Some(Reason::Thm1Part(2));
    }
    if n == 4 && ((m >= 3 && q >= 3 && d >= 10) || (m == 2 && q >= 6) || (q == 2 && m >= 6)) {
        return Some(Reason::Thm1Part(3));
    }
    if L_value(d, m, n).is_positive() || L_value(d, q, n).is_positive() {
        return Some(Reason::Eq2LPositive);
    }
    None
}

/// Status and reason for `(tb, (0, d - 2))`.
pub fn classify_base(tb: ThreeBlockPattern) -> Result<(Status, Reason)> {
    let non = nonrealizability(tb);
    let suf = sufficiency(tb);
    match (non, suf) {
        (Some(a), Some(b)) => Err(Error::Inconsistent(format!("{tb}: {a} vs {b}"))),
        (Some(r), None) => Ok((Status::NonRealizable, r)),
        (None, Some(r)) => Ok((Status::Realizable, r)),
        (None, None) => Ok((Status::Unknown, Reason::NoCriterion)),
    }
}

/// Classify a couple using the closed-form criteria only (no witness construction).
pub fn classify(sigma: &SignPattern, ap: AdmissiblePair) -> Result<Classification> {
    sigma.check_admissible(ap)?;
    let (c, p) = sigma.changes_preservations();
    let d = sigma.degree();
    let tb = sigma.three_block();
    let trace = tb.map(CriterionTrace::new);
    let with_trace = |mut cl: Classification| {
        cl.trace = trace.clone();
        cl
    };
    if ap == AdmissiblePair::new(c, p) || c == 1 {
        return Ok(with_trace(Classification::realizable(sigma, ap, Reason::Prop1)));
    }
    if c == 0 {
        return Ok(with_trace(Classification::realizable(sigma, ap, Reason::PaperFact)));
    }
    let unknown = Classification {
        pattern: sigma.clone(),
        ap,
        status: Status::Unknown,
        reason: Reason::NoCriterion,
        witness: None,
        trace: trace.clone(),
    };
    let Some(tb) = tb else { return Ok(unknown) };
    if ap.pos != 0 {
        return Ok(unknown);
    }
    let (status, reason) = classify_base(tb)?;
    if ap.neg == d - 2 {
        return Ok(Classification { status, reason, ..unknown });
    }
    // downward closure from (0, d - 2)
    if status == Status::Realizable {
        return Ok(Classification { status, reason, ..unknown });
    }
    Ok(unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tb(m: usize, n: usize, q: usize) -> ThreeBlockPattern {
        ThreeBlockPattern::new(m, n, q).unwrap()
    }

    #[test]
    fn l_values() {
        assert_eq!(L_value(9, 3, 4), int(0));
        assert_eq!(L_value(10, 2, 4), int(0));
        assert_eq!(L_value(11, 2, 4), int(4));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa_value(11, 1, 7), rat(27, 7));
        assert_eq!(kappa_value(10, 1, 6), int(4));
        assert_eq!(kappa_value(12, 2, 2), rat(81, 4));
        assert_eq!(kappa_value(9, 3, 3), rat(25, 9));
    }

    #[test]
    fn q_bound_examples() {
        let tol = rat(1, 1_000_000);
        let (qm, _) = q_bounds(11, 1, &tol);
        assert!(qm.width() <= tol);
        assert!(qm.lo > rat(22917, 10000) && qm.hi < rat(22919, 10000));
        let (_, qp) = q_bounds(11, 4, &tol);
        let qp = qp.unwrap();
        assert!(qp.lo > rat(2365, 1000) && qp.hi < rat(2367, 1000));
        let (qm, qp) = q_bounds(9, 7, &tol);
        assert_eq!(qm, RatInterval::point(int(0)));
        assert_eq!(qp.unwrap(), RatInterval::point(rat(2, 7)));
    }

    #[test]
    fn eqe_matches_l_at_equality() {
        let e = eqe(9, 3, 4);
        assert!(!e.holds && e.equal && e.exact_fallback);
        let e = eqe(11, 2, 4);
        assert!(e.holds);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&tb(1, 3, 1).pattern(), AdmissiblePair::new(0, 2)).unwrap();
        assert_eq!((c.status, c.reason), (Status::NonRealizable, Reason::PaperFact));
        let c = classify(&tb(2, 4, 6).pattern(), AdmissiblePair::new(0, 9)).unwrap();
        assert_eq!((c.status, c.reason), (Status::Realizable, Reason::Thm1Part(3)));
        let c = classify(&tb(3, 4, 3).pattern(), AdmissiblePair::new(0, 7)).unwrap();
        assert_eq!((c.status, c.reason), (Status::NonRealizable, Reason::Prop3Fact));
        let c = classify(&tb(5, 3, 5).pattern(), AdmissiblePair::new(0, 10)).unwrap();
        assert_eq!((c.status, c.reason), (Status::Realizable, Reason::Thm1Part(2)));
        assert!(matches!(
            classify(&tb(1, 3, 1).pattern(), AdmissiblePair::new(1, 2)),
            Err(Error::Inadmissible { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let c = classify(&tb(3, 4, 3).pattern(), AdmissiblePair::new(0, 7)).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["ap"], serde_json::json!([0, 7]));
        assert_eq!(v["status"], "NonRealizable");
        assert_eq!(v["reason"], "Prop3-fact");
        assert_eq!(v["trace"]["L"], "0/1");
        assert_eq!(v["trace"]["kappa"], "25/9");
    }
}
