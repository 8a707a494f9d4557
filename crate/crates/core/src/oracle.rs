//! Brute-force witness search by root placement.
//!
//! A search only ever finds witnesses. Running out of candidates says nothing
//! about realizability.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::poly::{rat, RootSpec};
use crate::signpat::{AdmissiblePair, Sign, SignPattern};
use crate::witness::{Construction, Params, Witness};

pub const DEFAULT_BUDGET: usize = 200_000;
const BATCH: usize = 2048;

/// Candidate root moduli and complex pairs `(z, y)` with `z^2 < 4y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub reals: Vec<BigRational>,
    pub pairs: Vec<(BigRational, BigRational)>,
}

impl Default for Grid {
    /// Reals `1/2, 1, ..., 5`; `z` in `+-1/2, ..., +-5`; `y` in `1/2, 1, ..., 10`.
    fn default() -> Self {
        Grid::uniform(2, 10, 20)
    }
}

impl Grid {
    /// Reals `k/den` for `k = 1..=reals`; `z = +-k/den` for the same `k`; `y = k/den` for `k = 1..=ys`.
    pub fn uniform(den: i64, reals: i64, ys: i64) -> Self {
        let real: Vec<BigRational> = (1..=reals).map(|k| rat(k, den)).collect();
        let mut pairs = Vec::new();
        for z in real.iter().flat_map(|r| [-r.clone(), r.clone()]) {
            for y in (1..=ys).map(|k| rat(k, den)) {
                if &z * &z < rat(4, 1) * &y {
                    pairs.push((z.clone(), y));
                }
            }
        }
        Grid { reals: real, pairs }
    }

    /// Quarter steps up to 10 for all parameters, `y` up to 25.
    pub fn dense() -> Self {
        Grid::uniform(4, 40, 100)
    }
}

/// Lexicographic `k`-subsets (or multisets, with `repeat`) of `0..n`.
#[derive(Clone, Debug)]
struct Combos {
    n: usize,
    idx: Vec<usize>,
    repeat: bool,
    done: bool,
}

impl Combos {
    fn new(n: usize, k: usize, repeat: bool) -> Self {
        let idx: Vec<usize> = if repeat { vec![0; k] } else { (0..k).collect() };
        let done = if repeat { k > 0 && n == 0 } else { k > n };
        Combos { n, idx, repeat, done }
    }

    fn advance(&mut self) -> bool {
        let k = self.idx.len();
        for i in (0..k).rev() {
            let max = if self.repeat { self.n - 1 } else { self.n - k + i };
            if self.idx[i] < max {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = if self.repeat { self.idx[i] } else { self.idx[j - 1] + 1 };
                }
                return true;
            }
        }
        false
    }
}

/// Odometer over (pairs, positive roots, negative roots), negative roots fastest.
struct Enumeration {
    slots: [Combos; 3],
    started: bool,
}

impl Enumeration {
    fn new(grid: &Grid, ap: AdmissiblePair, pairs: usize) -> Self {
        let slots = [
            Combos::new(grid.pairs.len(), pairs, true),
            Combos::new(grid.reals.len(), ap.pos, false),
            Combos::new(grid.reals.len(), ap.neg, false),
        ];
        Enumeration { slots, started: false }
    }
}

impl Iterator for Enumeration {
    type Item = [Vec<usize>; 3];
    fn next(&mut self) -> Option<Self::Item> {
        if self.slots.iter().any(|s| s.done) {
            return None;
        }
        if self.started {
            let mut moved = false;
            for i in (0..3).rev() {
                if self.slots[i].advance() {
                    moved = true;
                    break;
                }
                let (n, k, r) = (self.slots[i].n, self.slots[i].idx.len(), self.slots[i].repeat);
                self.slots[i] = Combos::new(n, k, r);
            }
            if !moved {
                for s in &mut self.slots {
                    s.done = true;
                }
                return None;
            }
        }
        self.started = true;
        Some([self.slots[0].idx.clone(), self.slots[1].idx.clone(), self.slots[2].idx.clone()])
    }
}

fn pair_count(sigma: &SignPattern, ap: AdmissiblePair) -> Option<usize> {
    let d = sigma.degree();
    if !sigma.is_admissible(ap) || ap.pos + ap.neg > d {
        return None;
    }
    Some((d - ap.pos - ap.neg) / 2)
}

/// Cheap rejection: `false` only when the floating expansion has a coefficient
/// whose sign is certainly wrong.
fn may_match(spec: &RootSpec<BigRational>, sigma: &SignPattern) -> bool {
    let f = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);
    let spec = RootSpec {
        neg_roots: spec.neg_roots.iter().map(f).collect(),
        pos_roots: spec.pos_roots.iter().map(f).collect(),
        complex_pairs: spec.complex_pairs.iter().map(|(z, y)| (f(z), f(y))).collect(),
    };
    may_match_f64(&spec, sigma)
}

fn may_match_f64(spec: &RootSpec<f64>, sigma: &SignPattern) -> bool {
    let mut p = vec![1.0f64];
    let mut bound = vec![1.0f64];
    let mut mul = |c: &[f64]| {
        let mut np = vec![0.0; p.len() + c.len() - 1];
        let mut nb = vec![0.0; p.len() + c.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in c.iter().enumerate() {
                np[i + j] += a * b;
                nb[i + j] += bound[i].abs() * b.abs();
            }
        }
        p = np;
        bound = nb;
    };
    for (z, y) in &spec.complex_pairs {
        mul(&[*y, -z, 1.0]);
    }
    for u in &spec.neg_roots {
        mul(&[*u, 1.0]);
    }
    for r in &spec.pos_roots {
        mul(&[-r, 1.0]);
    }
    p.iter().zip(&bound).enumerate().all(|(j, (c, b))| {
        let want = sigma.sign_of_power(j);
        let wrong = match want {
            Sign::Plus => *c < 0.0,
            Sign::Minus => *c > 0.0,
        };
        !(wrong && c.abs() > 1e-9 * b)
    })
}

fn try_spec(spec: RootSpec<BigRational>, sigma: &SignPattern, ap: AdmissiblePair) -> Option<Witness> {
    if !may_match(&spec, sigma) {
        return None;
    }
    let poly = spec.expand().ok()?;
    if poly.coeffs().iter().any(Zero::is_zero) {
        return None;
    }
    let mut roots: Vec<BigRational> = spec.neg_roots.iter().map(|u| -u.clone()).collect();
    roots.extend(spec.pos_roots.iter().cloned());
    Witness::new(poly, sigma.clone(), ap, Construction::Search, Params::default())
        .ok()
        .map(|w| w.with_roots(roots))
}

/// First witness in enumeration order among at most `budget` candidates.
pub fn grid_search(sigma: &SignPattern, ap: AdmissiblePair, grid: &Grid, budget: usize) -> Option<Witness> {
    let pairs = pair_count(sigma, ap)?;
    let mut it = Enumeration::new(grid, ap, pairs).take(budget);
    loop {
        let batch: Vec<[Vec<usize>; 3]> = it.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            return None;
        }
        let found = batch.par_iter().find_map_first(|[c, p, n]| {
            let spec = RootSpec {
                neg_roots: n.iter().map(|&i| grid.reals[i].clone()).collect(),
                pos_roots: p.iter().map(|&i| grid.reals[i].clone()).collect(),
                complex_pairs: c.iter().map(|&i| grid.pairs[i].clone()).collect(),
            };
            try_spec(spec, sigma, ap)
        });
        if found.is_some() {
            return found;
        }
    }
}

const SCALE: f64 = (1u64 << 24) as f64;

/// `center * 2^(spread * u)`, rounded to a positive multiple of `2^-24`.
fn random_dyadic(rng: &mut ChaCha8Rng, center: f64, spread: f64) -> f64 {
    let x = center * (spread * rng.gen_range(-1.0..1.0f64)).exp2();
    (x * SCALE).round().max(1.0) / SCALE
}

fn dyadic(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// Real moduli and complex pairs `(re, im)`, all dyadic. `None` if the draw collides.
fn random_draw(rng: &mut ChaCha8Rng, ap: AdmissiblePair, pairs: usize) -> Option<(Vec<f64>, Vec<f64>, Vec<(f64, f64)>)> {
    // roots clustered at a random scale, with a random spread
    let center = rng.gen_range(-4.0..4.0f64).exp2();
    let spread = [1.0 / 64.0, 1.0 / 8.0, 1.0, 4.0][rng.gen_range(0..4)];
    let mut distinct = |k: usize| {
        let mut out: Vec<f64> = Vec::new();
        for _ in 0..4 * k + 8 {
            if out.len() == k {
                break;
            }
            let r = random_dyadic(rng, center, spread);
            if !out.contains(&r) {
                out.push(r);
            }
        }
        (out.len() == k).then_some(out)
    };
    let neg = distinct(ap.neg)?;
    let pos = distinct(ap.pos)?;
    // imaginary parts log-uniform down to 2^-16 of the real part: near-real pairs matter
    let complex = (0..pairs)
        .map(|_| {
            let re = random_dyadic(rng, center, 4.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let im = random_dyadic(rng, re.abs() * (-8.0f64).exp2(), 8.0);
            (re, im)
        })
        .collect();
    Some((neg, pos, complex))
}

fn random_candidate(rng: &mut ChaCha8Rng, sigma: &SignPattern, ap: AdmissiblePair, pairs: usize) -> Option<Witness> {
    let (neg, pos, complex) = random_draw(rng, ap, pairs)?;
    let f64_spec = RootSpec {
        neg_roots: neg.clone(),
        pos_roots: pos.clone(),
        complex_pairs: complex.iter().map(|(re, im)| (2.0 * re, re * re + im * im)).collect(),
    };
    if !may_match_f64(&f64_spec, sigma) {
        return None;
    }
    let spec = RootSpec {
        neg_roots: neg.into_iter().map(dyadic).collect(),
        pos_roots: pos.into_iter().map(dyadic).collect(),
        complex_pairs: complex
            .into_iter()
            .map(|(re, im)| {
                let (re, im) = (dyadic(re), dyadic(im));
                (&re * rat(2, 1), &re * &re + &im * &im)
            })
            .collect(),
    };
    try_spec(spec, sigma, ap)
}

/// Seeded random root placement. Candidate `i` depends only on `(seed, i)`.
pub fn random_search(sigma: &SignPattern, ap: AdmissiblePair, seed: u64, budget: usize) -> Option<Witness> {
    let pairs = pair_count(sigma, ap)?;
    let mut start = 0;
    while start < budget {
        let end = budget.min(start + BATCH);
        let found = (start..end).into_par_iter().find_map_first(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            random_candidate(&mut rng, sigma, ap, pairs)
        });
        if found.is_some() {
            return found;
        }
        start = end;
    }
    None
}
