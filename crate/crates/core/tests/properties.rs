use descartes_lab::poly::{rat, RootSpec};
use descartes_lab::prop3_verifier::{check_e_inequality, check_induction_inequality, check_newton_quadratic};
use descartes_lab::signpat::{admissible_pairs, pattern_of, AdmissiblePair, SignPattern};
use descartes_lab::sturm::count_pos_neg;
use descartes_lab::witness::{concat_pattern, find_epsilon};
use descartes_lab::{F64Poly, RatPoly, Rational};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..500, 1i64..50).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_coeffs(max_degree: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((1i64..40, any::<bool>()), 2..=max_degree).prop_map(|v| {
        let mut c: Vec<i64> = v.into_iter().map(|(a, neg)| if neg { -a } else { a }).collect();
        c.push(1);
        RatPoly::from_i64s(&c)
    })
}

fn pattern(max_degree: usize) -> impl Strategy<Value = SignPattern> {
    prop::collection::vec(any::<bool>(), 1..=max_degree).prop_map(|v| {
        let s: String = std::iter::once('+').chain(v.into_iter().map(|b| if b { '-' } else { '+' })).collect();
        s.parse().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn root_counts_are_admissible(p in nonzero_coeffs(7)) {
        let sigma = pattern_of(&p).unwrap();
        let (pos, neg) = count_pos_neg(&p).unwrap();
        prop_assert!(admissible_pairs(&sigma).contains(&AdmissiblePair::new(pos, neg)));
    }

    #[test]
    fn reversal_is_an_involution(sigma in pattern(12)) {
        prop_assert_eq!(sigma.reversed().reversed(), sigma.clone());
        prop_assert_eq!(sigma.negate_x().negate_x(), sigma);
    }

    #[test]
    fn admissible_pairs_reverse(sigma in pattern(10)) {
        let mut a: Vec<_> = admissible_pairs(&sigma);
        let mut b: Vec<_> = admissible_pairs(&sigma.reversed());
        a.sort_by_key(|x| (x.pos, x.neg));
        b.sort_by_key(|x| (x.pos, x.neg));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn negative_rooted_expansions_satisfy_newton(roots in prop::collection::vec(positive_rational(), 1..9)) {
        let p = RootSpec { neg_roots: roots, ..Default::default() }.expand().unwrap();
        prop_assert!(check_newton_quadratic(&p));
    }

    #[test]
    fn symmetric_function_inequalities(values in prop::collection::vec(positive_rational(), 4..13), a in positive_rational()) {
        prop_assert!(check_e_inequality(&values));
        prop_assert!(check_induction_inequality(&a, &values));
    }

    #[test]
    fn float_and_exact_evaluation_agree(p in nonzero_coeffs(6), x in -30i64..30) {
        let exact = p.eval(&rat(x, 10)).to_f64().unwrap();
        let f: F64Poly = p.to_f64();
        let approx = f.eval(&(x as f64 / 10.0));
        prop_assert!((exact - approx).abs() <= 1e-9 * (1.0 + exact.abs()));
    }

    #[test]
    fn concatenation_pattern(p1 in nonzero_coeffs(4), p2 in nonzero_coeffs(3)) {
        let (s1, s2) = (pattern_of(&p1).unwrap(), pattern_of(&p2).unwrap());
        let (a1, b1) = count_pos_neg(&p1).unwrap();
        let (a2, b2) = count_pos_neg(&p2).unwrap();
        let target = concat_pattern(&s1, &s2);
        let ap = AdmissiblePair::new(a1 + a2, b1 + b2);
        let (_, p) = find_epsilon(&p1, &p2, &target, ap).unwrap();
        prop_assert_eq!(pattern_of(&p).unwrap(), target);
    }
}
