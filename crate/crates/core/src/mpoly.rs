//! Sparse multivariate polynomials with integer coefficients over a fixed,
//! ordered set of named variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RatPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "v")]
    SmallV,
    #[serde(rename = "w")]
    SmallW,
    V,
    W,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::A, Var::SmallV, Var::SmallW, Var::V, Var::W];

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::SmallV => "v",
            Var::SmallW => "w",
            Var::V => "V",
            Var::W => "W",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variable '{s}'")))
    }
}

fn vars_label(vars: &[Var]) -> String {
    let names: Vec<&str> = vars.iter().map(|v| v.name()).collect();
    format!("[{}]", names.join(", "))
}

type Exps = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Exps, BigInt>,
}

impl IntMPoly {
    pub fn zero(vars: &[Var]) -> Self {
        IntMPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[Var], c: impl Into<BigInt>) -> Self {
        let mut p = IntMPoly::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    pub fn one(vars: &[Var]) -> Self {
        IntMPoly::constant(vars, 1)
    }

    /// The polynomial `x` for a variable `x` in `vars`.
    pub fn var(vars: &[Var], x: Var) -> Self {
        let i = vars.iter().position(|&v| v == x).expect("variable not in the variable set");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = IntMPoly::zero(vars);
        p.add_term(e, BigInt::one());
        p
    }

    /// `c * prod x_i^e_i`.
    pub fn monomial(vars: &[Var], exps: &[u32], c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = IntMPoly::zero(vars);
        p.add_term(exps.to_vec(), c.into());
        p
    }

    pub fn from_terms(vars: &[Var], terms: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut p = IntMPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Univariate polynomial from ascending integer coefficients.
    pub fn univariate(x: Var, coeffs: &[i64]) -> Self {
        IntMPoly::from_terms(
            &[x],
            coeffs.iter().enumerate().map(|(i, &c)| (vec![i as u32], BigInt::from(c))),
        )
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn index_of(&self, x: Var) -> Option<usize> {
        self.vars.iter().position(|&v| v == x)
    }

    fn check_vars(&self, other: &IntMPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(vars_label(&self.vars), vars_label(&other.vars)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &IntMPoly) -> Result<IntMPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &IntMPoly) -> Result<IntMPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &IntMPoly) -> Result<IntMPoly> {
        self.check_vars(other)?;
        let mut out = IntMPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> IntMPoly {
        let mut out = IntMPoly::one(&self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntMPoly {
        IntMPoly::from_terms(&self.vars, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    /// Same polynomial over a larger (or reordered) variable set.
    pub fn with_vars(&self, vars: &[Var]) -> Result<IntMPoly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::VariableMismatch(vars_label(&self.vars), vars_label(vars)))?;
        Ok(IntMPoly::from_terms(
            vars,
            self.terms.iter().map(|(e, c)| {
                let mut ne = vec![0; vars.len()];
                for (i, &k) in map.iter().enumerate() {
                    ne[k] = e[i];
                }
                (ne, c.clone())
            }),
        ))
    }

    /// Remove a variable that does not occur.
    pub fn drop_var(&self, x: Var) -> Result<IntMPoly> {
        let Some(i) = self.index_of(x) else { return Ok(self.clone()) };
        if self.degree_in(x) > 0 {
            return Err(Error::VariableMismatch(vars_label(&self.vars), format!("{x} still occurs")));
        }
        let vars: Vec<Var> = self.vars.iter().copied().filter(|&v| v != x).collect();
        Ok(IntMPoly::from_terms(
            &vars,
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e.remove(i);
                (e, c.clone())
            }),
        ))
    }

    pub fn degree_in(&self, x: Var) -> u32 {
        match self.index_of(x) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficients as a polynomial in `x`: entry `k` multiplies `x^k`.
    /// Each entry keeps the full variable set, with `x` absent.
    pub fn coeffs_in(&self, x: Var) -> Vec<IntMPoly> {
        let Some(i) = self.index_of(x) else { return vec![self.clone()] };
        let deg = self.degree_in(x) as usize;
        let mut out = vec![IntMPoly::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    /// Coefficient of the monomial with exponent vector `exps`.
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Substitute `x -> 1 + y` for each `(x, y)` in `map`; `y` takes the place of `x`
    /// in the variable list and must not already be present.
    pub fn shift_vars(&self, map: &[(Var, Var)]) -> Result<IntMPoly> {
        let mut vars = self.vars.clone();
        let mut idx = Vec::new();
        for &(from, to) in map {
            if vars.contains(&to) {
                return Err(Error::VariableMismatch(vars_label(&vars), format!("{to} is not fresh")));
            }
            let Some(i) = vars.iter().position(|&v| v == from) else { continue };
            vars[i] = to;
            idx.push(i);
        }
        let mut out = IntMPoly::zero(&vars);
        for (e, c) in &self.terms {
            // expand prod (1 + y_i)^e_i binomially
            let mut partial: Vec<(Exps, BigInt)> = vec![(e.clone(), c.clone())];
            for &i in &idx {
                let k = e[i];
                let binoms = binomial_row(k);
                let mut next = Vec::with_capacity(partial.len() * (k as usize + 1));
                for (pe, pc) in &partial {
                    for (j, b) in binoms.iter().enumerate() {
                        let mut ne = pe.clone();
                        ne[i] = j as u32;
                        next.push((ne, pc * b));
                    }
                }
                partial = next;
            }
            for (ne, nc) in partial {
                out.add_term(ne, nc);
            }
        }
        Ok(out)
    }

    /// Value at a full assignment of the variables.
    pub fn eval(&self, values: &[(Var, BigRational)]) -> Result<BigRational> {
        let vals = self.assignment(values, None)?;
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (k, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    t *= num_traits::pow(vals[k].clone().expect("assigned"), ei as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    fn assignment(&self, values: &[(Var, BigRational)], free: Option<Var>) -> Result<Vec<Option<BigRational>>> {
        self.vars
            .iter()
            .map(|&v| {
                if Some(v) == free {
                    return Ok(None);
                }
                values
                    .iter()
                    .find(|(x, _)| *x == v)
                    .map(|(_, q)| Some(q.clone()))
                    .ok_or_else(|| Error::VariableMismatch(vars_label(&self.vars), format!("no value for {v}")))
            })
            .collect()
    }

    /// Univariate polynomial in `x` after assigning every other variable.
    pub fn specialize(&self, x: Var, values: &[(Var, BigRational)]) -> Result<RatPoly> {
        let vals = self.assignment(values, Some(x))?;
        let i = self.index_of(x);
        let deg = self.degree_in(x) as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (k, &ei) in e.iter().enumerate() {
                if Some(k) != i && ei > 0 {
                    t *= num_traits::pow(vals[k].clone().expect("assigned"), ei as usize);
                }
            }
            let j = i.map_or(0, |i| e[i] as usize);
            coeffs[j] += t;
        }
        Ok(RatPoly::new(coeffs))
    }

    /// Ascending integer coefficients, when the polynomial involves at most `x`.
    pub fn as_univariate(&self, x: Var) -> Option<Vec<BigInt>> {
        let i = self.index_of(x);
        let mut out = vec![BigInt::zero(); self.degree_in(x) as usize + 1];
        for (e, c) in &self.terms {
            for (k, &ei) in e.iter().enumerate() {
                if Some(k) != i && ei > 0 {
                    return None;
                }
            }
            out[i.map_or(0, |i| e[i] as usize)] = c.clone();
        }
        Some(out)
    }

    /// Leading term under graded-lex order.
    fn leading_term(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// `self / d` when the division is exact over the integers.
    pub fn div_exact(&self, d: &IntMPoly) -> Result<Option<IntMPoly>> {
        self.check_vars(d)?;
        let Some((de, dc)) = d.leading_term() else { return Err(Error::ZeroPolynomial) };
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = IntMPoly::zero(&self.vars);
        while let Some((re, rc)) = rem.leading_term() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Ok(None);
            }
            let e: Exps = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = IntMPoly::monomial(&self.vars, &e, q);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }

    /// Parse with an explicit variable list.
    pub fn parse_in(s: &str, vars: &[Var]) -> Result<IntMPoly> {
        let s = s.trim();
        let mut out = IntMPoly::zero(vars);
        if s == "0" {
            return Ok(out);
        }
        for term in split_terms(s) {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in '{s}'")));
            }
            let mut factors = term.split('*');
            let first = factors.next().unwrap_or_default().trim();
            let mut e = vec![0u32; vars.len()];
            let mut coeff = BigInt::one();
            let mut pending = Vec::new();
            match first.parse::<BigInt>() {
                Ok(c) => coeff = c,
                Err(_) => {
                    let (neg, rest) = match first.strip_prefix('-') {
                        Some(r) => (true, r),
                        None => (false, first),
                    };
                    if neg {
                        coeff = -coeff;
                    }
                    pending.push(rest.to_string());
                }
            }
            pending.extend(factors.map(|f| f.trim().to_string()));
            for f in pending {
                let (name, pow) = match f.split_once('^') {
                    Some((n, p)) => (n.trim(), p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in '{f}'")))?),
                    None => (f.as_str(), 1),
                };
                let v: Var = name.parse()?;
                let i = vars
                    .iter()
                    .position(|&x| x == v)
                    .ok_or_else(|| Error::VariableMismatch(vars_label(vars), format!("{v} not declared")))?;
                e[i] += pow;
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }

    /// Evaluate at nonnegative integer points of a grid and return the minimum value.
    pub fn min_on_grid(&self, max: u32) -> BigInt {
        let n = self.vars.len();
        let mut best: Option<BigInt> = None;
        let total = (max as usize + 1).pow(n as u32);
        for idx in 0..total {
            let mut k = idx;
            let mut pt = Vec::with_capacity(n);
            for _ in 0..n {
                pt.push(BigInt::from(k % (max as usize + 1)));
                k /= max as usize + 1;
            }
            let mut acc = BigInt::zero();
            for (e, c) in &self.terms {
                let mut t = c.clone();
                for (x, &ei) in pt.iter().zip(e) {
                    t *= num_traits::pow(x.clone(), ei as usize);
                }
                acc += t;
            }
            if best.as_ref().is_none_or(|b| &acc < b) {
                best = Some(acc);
            }
        }
        best.unwrap_or_default()
    }
}

/// Graded-lex comparison: total degree first, then lexicographic.
fn grlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn binomial_row(k: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 0..k {
        let next = row[i as usize].clone() * BigInt::from(k - i) / BigInt::from(i + 1);
        row.push(next);
    }
    row
}

/// Split on `+` that separate terms (not the sign inside `^` exponents, which never occurs).
fn split_terms(s: &str) -> impl Iterator<Item = &str> {
    s.split('+')
}

impl fmt::Display for IntMPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Exps, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex(b.0, a.0));
        let mut first = true;
        for (e, c) in terms {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntMPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, vars_label(&self.vars))
    }
}

/// Infers the variable set from the names that occur, in canonical order.
impl FromStr for IntMPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<IntMPoly> {
        let vars: Vec<Var> = Var::ALL
            .into_iter()
            .filter(|v| {
                s.split(['*', '+', '^'])
                    .any(|tok| tok.trim().trim_start_matches('-') == v.name())
            })
            .collect();
        IntMPoly::parse_in(s, &vars)
    }
}

impl Serialize for IntMPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a IntMPoly> for &'a IntMPoly {
    type Output = IntMPoly;
    fn add(self, rhs: &IntMPoly) -> IntMPoly {
        self.try_add(rhs).expect("variable sets must match")
    }
}

impl<'a> Sub<&'a IntMPoly> for &'a IntMPoly {
    type Output = IntMPoly;
    fn sub(self, rhs: &IntMPoly) -> IntMPoly {
        self.try_sub(rhs).expect("variable sets must match")
    }
}

impl<'a> Mul<&'a IntMPoly> for &'a IntMPoly {
    type Output = IntMPoly;
    fn mul(self, rhs: &IntMPoly) -> IntMPoly {
        self.try_mul(rhs).expect("variable sets must match")
    }
}

impl Neg for &IntMPoly {
    type Output = IntMPoly;
    fn neg(self) -> IntMPoly {
        IntMPoly::from_terms(&self.vars, self.terms.iter().map(|(e, c)| (e.clone(), -c)))
    }
}

/// Resultant of `p` and `q` with respect to `x`: the Sylvester determinant.
/// The result no longer mentions `x`.
pub fn resultant_in(p: &IntMPoly, q: &IntMPoly, x: Var) -> Result<IntMPoly> {
    p.check_vars(q)?;
    let (m, n) = (p.degree_in(x) as usize, q.degree_in(x) as usize);
    if m == 0 || p.index_of(x).is_none() {
        return Err(Error::ConstantInVariable(x.to_string()));
    }
    if n == 0 {
        return Err(Error::ConstantInVariable(x.to_string()));
    }
    let pc = p.coeffs_in(x);
    let qc = q.coeffs_in(x);
    let size = m + n;
    let zero = IntMPoly::zero(p.vars());
    // row i < n: p shifted by i; row n + j: q shifted by j; columns run from x^(m+n-1) down.
    let mut rows: Vec<Vec<IntMPoly>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for k in 0..=m {
            row[i + k] = pc[m - k].clone();
        }
        rows.push(row);
    }
    for j in 0..m {
        let mut row = vec![zero.clone(); size];
        for k in 0..=n {
            row[j + k] = qc[n - k].clone();
        }
        rows.push(row);
    }
    determinant(&rows).drop_var(x)
}

/// Laplace expansion along rows, memoized on the set of remaining columns.
pub fn determinant(rows: &[Vec<IntMPoly>]) -> IntMPoly {
    let n = rows.len();
    assert!(n > 0 && n <= 20, "determinant size");
    let vars = rows[0][0].vars().to_vec();
    let mut memo: HashMap<u32, IntMPoly> = HashMap::new();
    det_rec(rows, 0, (1u32 << n) - 1, &vars, &mut memo)
}

fn det_rec(rows: &[Vec<IntMPoly>], r: usize, cols: u32, vars: &[Var], memo: &mut HashMap<u32, IntMPoly>) -> IntMPoly {
    if r == rows.len() {
        return IntMPoly::one(vars);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = IntMPoly::zero(vars);
    let mut sign_neg = false;
    for c in 0..rows.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &rows[r][c];
        if !entry.is_zero() {
            let minor = det_rec(rows, r + 1, cols & !(1 << c), vars, memo);
            let t = entry * &minor;
            acc = if sign_neg { &acc - &t } else { &acc + &t };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// True iff there is at least one term and every coefficient is positive.
pub fn check_all_coeffs_positive(p: &IntMPoly) -> bool {
    !p.is_zero() && p.terms.values().all(|c| c.is_positive())
}

/// True iff every coefficient is nonnegative (the zero polynomial included).
pub fn check_all_coeffs_nonnegative(p: &IntMPoly) -> bool {
    p.terms.values().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> IntMPoly {
        s.parse().unwrap()
    }

    #[test]
    fn codec_round_trip() {
        let p = q("28224*V^2+-9408*V*W+28224*W^2+5");
        assert_eq!(p.to_string(), "28224*V^2+-9408*V*W+28224*W^2+5");
        assert_eq!(p.to_string().parse::<IntMPoly>().unwrap(), p);
        assert_eq!(IntMPoly::zero(&[Var::V]).to_string(), "0");
        let r = IntMPoly::parse_in("-V+W^3", &[Var::V, Var::W]).unwrap();
        assert_eq!(r.to_string(), "1*W^3+-1*V");
    }

    #[test]
    fn shift_examples() {
        let vars = [Var::SmallV, Var::SmallW];
        let v = IntMPoly::var(&vars, Var::SmallV);
        let w = IntMPoly::var(&vars, Var::SmallW);
        let one = IntMPoly::one(&vars);
        let map = [(Var::SmallV, Var::V), (Var::SmallW, Var::W)];
        assert_eq!(v.pow(2).shift_vars(&map).unwrap(), IntMPoly::parse_in("1+2*V+V^2", &[Var::V, Var::W]).unwrap());
        let prod = &(&v - &one) * &(&w - &one);
        assert_eq!(prod.shift_vars(&map).unwrap(), IntMPoly::parse_in("V*W", &[Var::V, Var::W]).unwrap());
    }

    #[test]
    fn resultant_of_shared_root() {
        // (a-1)(a-2) and (a-1)(a+3) share a = 1
        let p = IntMPoly::univariate(Var::A, &[2, -3, 1]);
        let r = IntMPoly::univariate(Var::A, &[-3, 2, 1]);
        assert!(resultant_in(&p, &r, Var::A).unwrap().is_zero());
        // Res(a - 2, a^2 + 1) = 5
        let p = IntMPoly::univariate(Var::A, &[-2, 1]);
        let r = IntMPoly::univariate(Var::A, &[1, 0, 1]);
        assert_eq!(resultant_in(&p, &r, Var::A).unwrap().to_string(), "5");
        assert!(matches!(
            resultant_in(&IntMPoly::univariate(Var::A, &[3]), &r, Var::A),
            Err(Error::ConstantInVariable(_))
        ));
    }

    #[test]
    fn mismatched_vars_rejected() {
        let a = IntMPoly::var(&[Var::V], Var::V);
        let b = IntMPoly::var(&[Var::W], Var::W);
        assert!(matches!(a.try_add(&b), Err(Error::VariableMismatch(..))));
    }

    #[test]
    fn exact_division() {
        let f = q("V^2+2*V+1");
        let g = q("V+1");
        assert_eq!(f.div_exact(&g).unwrap().unwrap(), g);
        assert!(q("V^2+1").div_exact(&g).unwrap().is_none());
    }

    #[test]
    fn positivity_flags() {
        assert!(check_all_coeffs_positive(&q("3+2*V*W")));
        assert!(!check_all_coeffs_positive(&q("V^2+-1*W^2")));
        assert!(!check_all_coeffs_positive(&IntMPoly::zero(&[Var::V])));
    }
}
