use padic_invariant::invariant::{compute_a, s_closed, s_direct, s_via_recurrence};
use padic_invariant::padic::{val_binomial_digits, val_binomial_kummer};
use padic_invariant::rational::rat;
use padic_invariant::series::invariant_partial_sum;
use padic_invariant::{Error, InvariantTable, Prime};

#[test]
fn quarter_is_singular() {
    let t = InvariantTable::build(2).unwrap();
    let x = rat(1, 4);
    assert!(matches!(s_via_recurrence(2, 5, &x), Err(Error::SingularPoint)));
    assert!(matches!(s_closed(&t, 2, 5, &x), Err(Error::SingularPoint)));
    assert!(matches!(invariant_partial_sum(&t, 2, &x, 5), Err(Error::SingularPoint)));
    // The literal sum does not divide by 4x - 1.
    assert!(s_direct(2, 5, &x).is_ok());
}

#[test]
fn empty_sums_are_rejected() {
    assert!(matches!(s_direct(1, 0, &rat(1, 2)), Err(Error::InvalidArgument(_))));
}

#[test]
fn non_primes_are_rejected() {
    for n in [0, 1, 4, 9, 561] {
        assert!(matches!(Prime::new(n), Err(Error::NotPrime(_))), "{n}");
    }
}

#[test]
fn binomial_range() {
    let p = Prime::new(3).unwrap();
    assert!(matches!(
        val_binomial_digits(3, 4, p),
        Err(Error::BinomialOutOfRange { .. })
    ));
    assert!(matches!(
        val_binomial_kummer(3, 4, p),
        Err(Error::BinomialOutOfRange { .. })
    ));
}

#[test]
fn table_bounds() {
    assert!(compute_a(0).is_err());
    let t = InvariantTable::build(3).unwrap();
    assert!(t.u(4).is_err());
    assert!(t.a(3).is_err());
    assert_eq!(Error::SingularPoint.code(), "SINGULAR_POINT");
}
