//! Sign patterns, three-block patterns and admissible pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{signum_of, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Signs of the coefficients from `x^d` down to the constant term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPattern {
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.len() < 2 || signs[0] != Sign::Plus {
            return Err(Error::BadPattern);
        }
        Ok(SignPattern { signs })
    }

    /// `d + 1` pluses.
    pub fn all_plus(d: usize) -> Self {
        SignPattern { signs: vec![Sign::Plus; d + 1] }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn degree(&self) -> usize {
        self.signs.len() - 1
    }

    /// Sign of the coefficient of `x^j`.
    pub fn sign_of_power(&self, j: usize) -> Sign {
        self.signs[self.degree() - j]
    }

    pub fn constant_sign(&self) -> Sign {
        *self.signs.last().expect("nonempty")
    }

    pub fn last_sign(&self) -> Sign {
        self.constant_sign()
    }

    /// `(c, p)`: sign changes and sign preservations.
    pub fn changes_preservations(&self) -> (usize, usize) {
        let c = self.signs.windows(2).filter(|w| w[0] != w[1]).count();
        (c, self.degree() - c)
    }

    /// Pattern of the reverted polynomial, normalized to a positive leading sign.
    pub fn reversed(&self) -> SignPattern {
        let mut s = self.signs.clone();
        s.reverse();
        if s[0] == Sign::Minus {
            s.iter_mut().for_each(|x| *x = x.flip());
        }
        SignPattern { signs: s }
    }

    /// Pattern of `P(-x)`, normalized to a positive leading sign. Swaps `c` and `p`.
    pub fn negate_x(&self) -> SignPattern {
        let d = self.degree();
        let mut s: Vec<Sign> = self
            .signs
            .iter()
            .enumerate()
            .map(|(i, &x)| if (d - i) % 2 == 1 { x.flip() } else { x })
            .collect();
        if s[0] == Sign::Minus {
            s.iter_mut().for_each(|x| *x = x.flip());
        }
        SignPattern { signs: s }
    }

    /// Append a sign at the low end (degree grows by one).
    pub fn extended(&self, s: Sign) -> SignPattern {
        let mut signs = self.signs.clone();
        signs.push(s);
        SignPattern { signs }
    }

    /// Block lengths when the pattern has exactly two sign changes starting with `+`.
    pub fn three_block(&self) -> Option<ThreeBlockPattern> {
        let mut runs = Vec::new();
        let mut cur = self.signs[0];
        let mut len = 0;
        for &s in &self.signs {
            if s == cur {
                len += 1;
            } else {
                runs.push(len);
                cur = s;
                len = 1;
            }
        }
        runs.push(len);
        match runs.as_slice() {
            &[m, n, q] => Some(ThreeBlockPattern { m, n, q }),
            _ => None,
        }
    }

    pub fn is_admissible(&self, ap: AdmissiblePair) -> bool {
        let (c, p) = self.changes_preservations();
        let parity_ok = (ap.pos % 2 == 0) == (self.constant_sign() == Sign::Plus);
        ap.pos <= c && ap.neg <= p && (c - ap.pos) % 2 == 0 && (p - ap.neg) % 2 == 0 && parity_ok
    }

    pub fn check_admissible(&self, ap: AdmissiblePair) -> Result<()> {
        if self.is_admissible(ap) {
            Ok(())
        } else {
            Err(Error::Inadmissible { pattern: self.to_string(), pos: ap.pos, neg: ap.neg })
        }
    }
}

/// Every pair satisfying all the admissibility clauses, `pos` then `neg` descending.
pub fn admissible_pairs(sigma: &SignPattern) -> Vec<AdmissiblePair> {
    let (c, p) = sigma.changes_preservations();
    let mut out = Vec::new();
    for pos in (0..=c).rev().step_by(2) {
        for neg in (0..=p).rev().step_by(2) {
            let ap = AdmissiblePair { pos, neg };
            if sigma.is_admissible(ap) {
                out.push(ap);
            }
        }
    }
    out
}

pub fn changes_preservations(sigma: &SignPattern) -> (usize, usize) {
    sigma.changes_preservations()
}

/// All sign patterns of degree `d`, in lexicographic order of their text form.
pub fn all_patterns(d: usize) -> Vec<SignPattern> {
    assert!((1..=24).contains(&d), "degree out of range");
    (0u32..1 << d)
        .map(|bits| {
            let mut signs = vec![Sign::Plus];
            for k in (0..d).rev() {
                signs.push(if bits >> k & 1 == 1 { Sign::Minus } else { Sign::Plus });
            }
            SignPattern { signs }
        })
        .collect()
}

/// Sign pattern of a polynomial with nonzero coefficients, leading sign normalized to `+`.
pub fn pattern_of<T: Scalar>(p: &Poly<T>) -> Result<SignPattern> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    if let Some(j) = coeffs.iter().position(|c| c.is_zero()) {
        return Err(Error::ZeroCoefficient(j));
    }
    if coeffs.len() < 2 {
        return Err(Error::BadPattern);
    }
    let lead = signum_of(&p.leading());
    let signs = coeffs
        .iter()
        .rev()
        .map(|c| if signum_of(c) == lead { Sign::Plus } else { Sign::Minus })
        .collect();
    Ok(SignPattern { signs })
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

/// Accepts `+--+` or the shorthand `S(m,n,q)`.
impl FromStr for SignPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('S') {
            return Ok(s.parse::<ThreeBlockPattern>()?.pattern());
        }
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::Parse(format!("bad sign '{c}' in '{s}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignPattern::new(signs)
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `m` pluses, `n` minuses, `q` pluses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreeBlockPattern {
    pub m: usize,
    pub n: usize,
    pub q: usize,
}

impl ThreeBlockPattern {
    pub fn new(m: usize, n: usize, q: usize) -> Result<Self> {
        if m == 0 || n == 0 || q == 0 {
            return Err(Error::BadBlocks { m, n, q });
        }
        Ok(ThreeBlockPattern { m, n, q })
    }

    pub fn degree(&self) -> usize {
        self.m + self.n + self.q - 1
    }

    pub fn pattern(&self) -> SignPattern {
        let mut signs = vec![Sign::Plus; self.m];
        signs.extend(std::iter::repeat_n(Sign::Minus, self.n));
        signs.extend(std::iter::repeat_n(Sign::Plus, self.q));
        SignPattern { signs }
    }

    pub fn reversed(&self) -> ThreeBlockPattern {
        ThreeBlockPattern { m: self.q, n: self.n, q: self.m }
    }

    /// All three-block patterns of degree `d`, ordered by `(m, n)`.
    pub fn all(d: usize) -> Vec<ThreeBlockPattern> {
        let mut out = Vec::new();
        for m in 1..d {
            for n in 1..=d - m {
                let q = d + 1 - m - n;
                if q >= 1 {
                    out.push(ThreeBlockPattern { m, n, q });
                }
            }
        }
        out
    }
}

impl fmt::Display for ThreeBlockPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{},{})", self.m, self.n, self.q)
    }
}

impl FromStr for ThreeBlockPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected S(m,n,q), got '{s}'"));
        let inner = s
            .trim()
            .strip_prefix('S')
            .and_then(|r| r.trim().strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<usize> = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match parts.as_slice() {
            &[m, n, q] => ThreeBlockPattern::new(m, n, q),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct AdmissiblePair {
    pub pos: usize,
    pub neg: usize,
}

impl AdmissiblePair {
    pub fn new(pos: usize, neg: usize) -> Self {
        AdmissiblePair { pos, neg }
    }

    /// Pair for `P(-x)`.
    pub fn swapped(self) -> Self {
        AdmissiblePair { pos: self.neg, neg: self.pos }
    }
}

impl From<[usize; 2]> for AdmissiblePair {
    fn from([pos, neg]: [usize; 2]) -> Self {
        AdmissiblePair { pos, neg }
    }
}

impl From<AdmissiblePair> for [usize; 2] {
    fn from(ap: AdmissiblePair) -> Self {
        [ap.pos, ap.neg]
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

/// Accepts `pos,neg` with optional parentheses.
impl FromStr for AdmissiblePair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected pos,neg, got '{s}'"));
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once(',').ok_or_else(bad)?;
        Ok(AdmissiblePair {
            pos: a.trim().parse().map_err(|_| bad())?,
            neg: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;

    fn sp(s: &str) -> SignPattern {
        s.parse().unwrap()
    }

    #[test]
    fn changes_and_preservations() {
        assert_eq!(sp("+-+").changes_preservations(), (2, 0));
        assert_eq!(sp("+--+").changes_preservations(), (2, 1));
        assert_eq!(sp("S(3,4,3)").changes_preservations(), (2, 7));
    }

    #[test]
    fn admissible_examples() {
        let ap = |v: &[(usize, usize)]| v.iter().map(|&(p, n)| AdmissiblePair::new(p, n)).collect::<Vec<_>>();
        assert_eq!(admissible_pairs(&sp("+-+")), ap(&[(2, 0), (0, 0)]));
        assert_eq!(admissible_pairs(&SignPattern::all_plus(4)), ap(&[(0, 4), (0, 2), (0, 0)]));
        assert_eq!(
            admissible_pairs(&sp("S(2,4,4)")),
            ap(&[(2, 7), (2, 5), (2, 3), (2, 1), (0, 7), (0, 5), (0, 3), (0, 1)])
        );
    }

    #[test]
    fn pattern_of_examples() {
        assert_eq!(pattern_of(&RatPoly::from_i64s(&[2, -2, 1])).unwrap(), sp("S(1,1,1)"));
        assert_eq!(pattern_of(&RatPoly::from_i64s(&[12, -2, -2, 1])).unwrap(), sp("S(1,2,1)"));
        assert_eq!(pattern_of(&RatPoly::from_i64s(&[1, 3, 3, 1])).unwrap(), sp("++++"));
        assert!(matches!(pattern_of(&RatPoly::from_i64s(&[1, 0, 1])), Err(Error::ZeroCoefficient(1))));
    }

    #[test]
    fn reversal_and_duality() {
        assert_eq!(sp("S(2,4,4)").reversed(), sp("S(4,4,2)"));
        assert_eq!(sp("++-").reversed(), sp("+--"));
        let s = sp("+--+-");
        let (c, p) = s.changes_preservations();
        assert_eq!(s.negate_x().changes_preservations(), (p, c));
    }

    #[test]
    fn codecs() {
        assert!("".parse::<SignPattern>().is_err());
        assert!("-+".parse::<SignPattern>().is_err());
        assert!("S(0,1,2)".parse::<SignPattern>().is_err());
        assert_eq!("0,7".parse::<AdmissiblePair>().unwrap(), AdmissiblePair::new(0, 7));
        assert_eq!("(2,1)".parse::<AdmissiblePair>().unwrap(), AdmissiblePair::new(2, 1));
        assert_eq!(sp("S(1,2,1)").to_string(), "+--+");
        assert_eq!(all_patterns(4).len(), 16);
        assert_eq!(ThreeBlockPattern::all(9).len(), 36);
    }
}
