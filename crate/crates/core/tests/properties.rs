use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use padic_invariant::padic::{
    digit_sum, val_binomial_digits, val_factorial, val_integer, val_rational, Prime, Valuation,
};
use padic_invariant::rational::{self, Rational};
use padic_invariant::{BiPolynomial, NPolynomial, Polynomial};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| rational::rat(a, b))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..6).prop_map(Polynomial::from_coeffs)
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn bipoly() -> impl Strategy<Value = BiPolynomial> {
    prop::collection::vec(prop::collection::vec(small_rational(), 0..4), 0..4)
        .prop_map(|rows| BiPolynomial::from_coeffs(rows.into_iter().map(NPolynomial::from_coeffs).collect()))
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]).prop_map(|p| Prime::new(p).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), d in nonzero_poly()) {
        prop_assert_eq!((&a * &d).divide_exact(&d).unwrap(), a);
    }

    #[test]
    fn division_with_remainder(a in poly(), d in nonzero_poly()) {
        let (quot, rem) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&quot * &d) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < d.degree());
    }

    #[test]
    fn degree_of_product(a in nonzero_poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in small_rational()) {
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
    }

    #[test]
    fn bipolynomial_evaluation_order(f in bipoly(), n in small_rational(), x in small_rational()) {
        prop_assert_eq!(f.eval_n(&n).eval(&x), f.eval_x(&x).eval(&n));
    }

    #[test]
    fn bipolynomial_text_round_trip(f in bipoly()) {
        prop_assert_eq!(f.to_string().parse::<BiPolynomial>().unwrap(), f);
    }

    #[test]
    fn valuation_is_additive(a in small_rational(), b in small_rational(), p in prime()) {
        prop_assert_eq!(val_rational(&(&a * &b), p), val_rational(&a, p) + val_rational(&b, p));
    }

    #[test]
    fn valuation_is_ultrametric(a in small_rational(), b in small_rational(), p in prime()) {
        let sum = val_rational(&(&a + &b), p);
        prop_assert!(sum >= val_rational(&a, p).min(val_rational(&b, p)));
    }

    #[test]
    fn legendre_matches_digit_sums(n in 0u64..5000, p in prime()) {
        let v = val_factorial(n, p);
        prop_assert_eq!(v, Valuation::Finite(((n - digit_sum(n, p)) / (p.get() - 1)) as i64));
        let f: BigInt = (1..=n.min(300)).fold(BigInt::one(), |acc, i| acc * i);
        if n <= 300 {
            prop_assert_eq!(val_integer(&f, p), v);
        }
    }
}

#[test]
fn central_binomials_are_p_integral() {
    for p in [2, 3, 5, 7, 11, 13].map(|p| Prime::new(p).unwrap()) {
        for n in 0..=1000 {
            assert!(
                val_binomial_digits(2 * n, n, p).unwrap() >= 0,
                "C({}, {n}) at {p}",
                2 * n
            );
        }
    }
}

#[test]
fn zero_has_infinite_valuation() {
    let two = Prime::new(2).unwrap();
    assert_eq!(val_rational(&Rational::zero(), two), Valuation::Infinite);
    assert!(Valuation::Infinite > Valuation::Finite(i64::MAX));
}
