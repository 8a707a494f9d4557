//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see them.

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use descartes_lab::catalog::{build_catalog, CatalogOptions};
use descartes_lab::criteria::{classify, cmp_q, eqe, L_value, QValue, Reason, Status};
use descartes_lab::oracle::{grid_search, random_search, Grid, DEFAULT_BUDGET};
use descartes_lab::poly::rat;
use descartes_lab::prop3_verifier::{
    all_cases, case_resultant, check_root_ordering, inequality_battery, two_block_resultants, verify_suite, CaseKind,
    QuadraticInA, Ordering as RootOrder,
};
use descartes_lab::signpat::{pattern_of, AdmissiblePair, SignPattern, ThreeBlockPattern};
use descartes_lab::sturm::count_pos_neg;
use descartes_lab::witness::{fixture_witness_d10, fixture_witness_d11, perturb_to_distinct};
use descartes_lab::witness::{thm2_sweep_case, thm2_sweep_triples};
use descartes_lab::{RatPoly, Var};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn tb(m: usize, n: usize, q: usize) -> ThreeBlockPattern {
    ThreeBlockPattern::new(m, n, q).unwrap()
}

fn within(start: Instant, limit: Duration) {
    let t = start.elapsed();
    assert!(t < limit, "took {t:?}, limit {limit:?}");
}

/// Coefficients in hundredths, descending from the leading one.
fn hundredths(p: &RatPoly) -> Vec<i64> {
    use num_traits::ToPrimitive;
    (0..=p.degree())
        .rev()
        .map(|j| {
            let c = p.coeff(j) * rat(100, 1);
            assert!(c.is_integer(), "coefficient {c} is not in hundredths");
            c.to_integer().to_i64().unwrap()
        })
        .collect()
}

fn criterion_1() {
    let t = Instant::now();
    let p = fixture_witness_d10();
    let expected = [100, 551, 964, -124, -2576, -3094, -224, 2564, 2476, 999, 156];
    assert_eq!(hundredths(&p), expected);
    assert_eq!(pattern_of(&p).unwrap(), tb(3, 4, 4).pattern());
    let w = perturb_to_distinct(&p).unwrap();
    assert_eq!(count_pos_neg(&w.poly).unwrap(), (0, 8));
    assert_eq!(w.pattern, tb(3, 4, 4).pattern());
    within(t, Duration::from_secs(1));
}

fn criterion_2() {
    let t = Instant::now();
    let p = fixture_witness_d11();
    let expected = [100, 431, -71, -3534, -6996, -294, 18606, 33504, 30216, 15679, 4481, 550];
    assert_eq!(hundredths(&p), expected);
    assert_eq!(pattern_of(&p).unwrap(), tb(2, 4, 6).pattern());
    let w = perturb_to_distinct(&p).unwrap();
    assert_eq!(count_pos_neg(&w.poly).unwrap(), (0, 9));
    within(t, Duration::from_secs(1));
}

fn criterion_3() {
    let t = Instant::now();
    let fixtures = two_block_resultants();
    assert_eq!(fixtures.len(), 3);
    for (case, expected) in fixtures {
        assert_eq!(case_resultant(&case).unwrap(), expected, "{:?} {}", case.blocks, case.pattern);
    }
    within(t, Duration::from_secs(1));
}

fn criterion_4() {
    let t = Instant::now();
    let reports = verify_suite();
    let count = |d: usize, p: ThreeBlockPattern| {
        all_cases().iter().filter(|c| c.d == d && c.pattern == p && c.kind() == CaseKind::Generic).count()
    };
    assert_eq!(count(9, tb(2, 4, 4)), 9);
    assert_eq!(count(9, tb(3, 4, 3)), 9);
    assert_eq!(count(10, tb(2, 4, 5)), 12);
    for r in &reports {
        assert!(r.pass, "{:?} {}: {:?}", r.blocks, r.pattern, r.failures);
    }
    for r in reports.iter().filter(|r| r.d == 9 && r.pattern == tb(2, 4, 4) && r.blocks[1] > 0) {
        assert_eq!(r.certificate, "all-positive");
    }
    // ordering at (v, w) = (2, 2) for every generic case
    let at = vec![(Var::SmallV, rat(2, 1)), (Var::SmallW, rat(2, 1))];
    for c in all_cases().into_iter().filter(|c| c.kind() == CaseKind::Generic) {
        let p = c.p_coeffs();
        let pm = QuadraticInA::from_poly(c.mu, p[c.mu].clone()).unwrap();
        let pn = QuadraticInA::from_poly(c.nu, p[c.nu].clone()).unwrap();
        assert_eq!(check_root_ordering(&pm, &pn, &at).unwrap(), RootOrder::Disjoint, "{:?}", c.blocks);
    }
    within(t, Duration::from_secs(30));
}

fn criterion_5() {
    assert_eq!(L_value(9, 3, 4), rat(0, 1));
    assert_eq!(L_value(10, 2, 4), rat(0, 1));
    for (sigma, ap) in [(tb(3, 4, 3), (0, 7)), (tb(2, 4, 5), (0, 8)), (tb(5, 4, 2), (0, 8)), (tb(2, 4, 4), (0, 7))] {
        let c = classify(&sigma.pattern(), AdmissiblePair::new(ap.0, ap.1)).unwrap();
        assert_eq!(c.status, Status::NonRealizable, "{sigma}");
        assert_eq!(c.reason, Reason::Prop3Fact, "{sigma}");
    }
    assert!(!eqe(9, 3, 4).holds && eqe(9, 3, 4).equal);
    assert!(!eqe(10, 2, 4).holds && eqe(10, 2, 4).equal);
}

fn criterion_6() {
    let t = Instant::now();
    let triples = thm2_sweep_triples(30);
    assert!(triples.len() > 1000);
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&(d, m, n)| {
            let q = d + 1 - m - n;
            let check = || -> Result<(), String> {
                let case = thm2_sweep_case(d, m, n).map_err(|e| e.to_string())?;
                let target = tb(m, n, q).pattern();
                if pattern_of(&case.base).map_err(|e| e.to_string())? != target {
                    return Err("base pattern".into());
                }
                let got = count_pos_neg(&case.full.poly).map_err(|e| e.to_string())?;
                if got != (0, d - 2) || case.full.pattern != target {
                    return Err(format!("full counts {got:?}"));
                }
                if let Some(r) = &case.reduced {
                    let got = count_pos_neg(&r.poly).map_err(|e| e.to_string())?;
                    if got != (0, d - 4) || r.pattern != target {
                        return Err(format!("reduced counts {got:?}"));
                    }
                }
                Ok(())
            };
            check().err().map(|e| format!("({d},{m},{n}): {e}"))
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
    within(t, Duration::from_secs(120));
}

fn criterion_7() {
    let tol = rat(1, 1_000_000);
    for d in 3..=100 {
        for plus in [false, true] {
            let start = usize::from(plus);
            for k in start..d - 2 {
                let a = QValue::new(d, k, plus).unwrap();
                let b = QValue::new(d, k + 1, plus).unwrap();
                let (ea, eb) = (a.enclose(&tol), b.enclose(&tol));
                let decreasing = eb.strictly_below(&ea) || cmp_q(&b, &a) == Ordering::Less;
                assert!(decreasing, "d={d} k={k} plus={plus}");
            }
        }
    }
    let grid: Vec<(usize, usize, usize)> =
        (2..=60).flat_map(|d| (1..d).flat_map(move |m| (1..=d - m).map(move |n| (d, m, n)))).collect();
    let bad: Vec<_> = grid
        .par_iter()
        .filter(|&&(d, m, n)| eqe(d, m, n).holds != L_value(d, m, n).is_positive())
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

fn random_poly(rng: &mut ChaCha8Rng) -> RatPoly {
    let d = rng.gen_range(2..=8);
    let mut c: Vec<i64> = (0..d).map(|_| {
        let v = rng.gen_range(1..=60);
        if rng.gen_bool(0.5) { v } else { -v }
    }).collect();
    c.push(1);
    RatPoly::from_i64s(&c)
}

fn criterion_8() {
    let t = Instant::now();
    const TRIALS: usize = 10_000;
    let bad: Vec<String> = (0..TRIALS)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(8);
            rng.set_stream(i as u64);
            let p = random_poly(&mut rng);
            let sigma = pattern_of(&p).unwrap();
            let (pos, neg) = count_pos_neg(&p).unwrap();
            let ap = AdmissiblePair::new(pos, neg);
            if !sigma.is_admissible(ap) {
                return Some(format!("{p}: {ap} not admissible for {sigma}"));
            }
            // reversion reverses the pattern and keeps the counts
            let r = p.reverse().unwrap();
            let rp = pattern_of(&r).unwrap();
            if rp != sigma.reversed() || count_pos_neg(&r).unwrap() != (pos, neg) {
                return Some(format!("{p}: reversal"));
            }
            // x -> -x swaps the counts
            let m = p.negate_x();
            if pattern_of(&m).unwrap() != sigma.negate_x() || count_pos_neg(&m).unwrap() != (neg, pos) {
                return Some(format!("{p}: negation"));
            }
            // x -> x / chi keeps signs and counts
            let chi = rat(rng.gen_range(1..=9), rng.gen_range(1..=9));
            let s = p.scale_x(&chi);
            if pattern_of(&s).unwrap() != sigma || count_pos_neg(&s).unwrap() != (pos, neg) {
                return Some(format!("{p}: scaling by {chi}"));
            }
            None
        })
        .collect();
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(5)]);
    let report = inequality_battery(88, TRIALS);
    assert!(report.pass(), "{:?}", report.failures);
    assert_eq!(report.e_inequality, TRIALS);
    within(t, Duration::from_secs(60));
}

fn criterion_9() {
    let t = Instant::now();
    let mut couples = Vec::new();
    for d in 2..=10 {
        let cat = build_catalog(d, CatalogOptions { c2_only: true, ..Default::default() }).unwrap();
        couples.extend(cat.rows.into_iter().filter(|r| r.status == Status::NonRealizable).map(|r| (r.pattern, r.ap)));
    }
    assert!(couples.len() >= 10);
    for (sigma, ap) in &couples {
        assert!(grid_search(sigma, *ap, &Grid::default(), DEFAULT_BUDGET).is_none(), "{sigma} {ap}");
        assert!(random_search(sigma, *ap, 0, DEFAULT_BUDGET).is_none(), "{sigma} {ap}");
    }
    let s131: SignPattern = "+---+".parse().unwrap();
    assert!(grid_search(&s131, AdmissiblePair::new(0, 2), &Grid::dense(), usize::MAX).is_none());
    within(t, Duration::from_secs(120));
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 9] = [
        ("degree-10 witness reproduction", criterion_1),
        ("degree-11 witness reproduction", criterion_2),
        ("resultant fixtures", criterion_3),
        ("Prop-3 suite", criterion_4),
        ("criterion sharpness", criterion_5),
        ("quadratic-factor sweep d <= 30", criterion_6),
        ("monotonicity and interval comparison", criterion_7),
        ("randomized property battery", criterion_8),
        ("oracle consistency", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let tag = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("{tag} {}: {name} ({:.2?})", i + 1, t.elapsed());
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
