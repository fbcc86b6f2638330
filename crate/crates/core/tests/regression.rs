//! Values computed once with an independent exact-fraction implementation
//! and frozen here.

use padic_invariant::bernoulli::{generate_bernoulli_relation, volkenborn_trace};
use padic_invariant::invariant::{s_direct, s_via_recurrence};
use padic_invariant::padic::Valuation;
use padic_invariant::rational::{self, rat};
use padic_invariant::series::valuation_trace;
use padic_invariant::{BiPolynomial, InvariantTable, Polynomial, Prime};

const I: Option<i64> = None;

/// `(k, x as (num, den), p, valuations for N = 1..=20)`.
type TraceCase = (usize, (i64, i64), u64, [i64; 20]);

fn vals(v: &[Option<i64>]) -> Vec<Valuation> {
    v.iter()
        .map(|v| v.map_or(Valuation::Infinite, Valuation::Finite))
        .collect()
}

fn fin(v: &[i64]) -> Vec<Valuation> {
    v.iter().copied().map(Valuation::Finite).collect()
}

fn p(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

#[test]
fn generated_tables() {
    let t = InvariantTable::build(6).unwrap();
    let u5: Polynomial = "32x^5+928x^4+1032x^3+148x^2+2x".parse().unwrap();
    let u6: Polynomial = "-64x^6-5728x^5-14032x^4-5168x^3-332x^2-2x".parse().unwrap();
    assert_eq!(t.u(5).unwrap(), &u5);
    assert_eq!(t.u(6).unwrap(), &u6);
    let a1: BiPolynomial = "(4n^2-6n)x-n^2".parse().unwrap();
    let a2: BiPolynomial = "(16n^3-40n^2+28n)x^2+(-8n^3+10n^2+8n)x+n^3".parse().unwrap();
    assert_eq!(t.a(1).unwrap(), &a1);
    assert_eq!(t.a(2).unwrap(), &a2);
}

#[test]
fn series_traces() {
    let t = InvariantTable::build(2).unwrap();
    let cases: [TraceCase; 3] = [
        (
            1,
            (2, 7),
            2,
            [2, 4, 5, 7, 7, 9, 10, 12, 11, 13, 14, 16, 16, 18, 19, 21, 19, 21, 22, 24],
        ),
        (
            1,
            (1, 1),
            2,
            [1, 2, 2, 3, 2, 3, 3, 4, 2, 3, 3, 4, 3, 4, 4, 5, 2, 3, 3, 4],
        ),
        (
            2,
            (3, 4),
            3,
            [1, 3, 5, 4, 7, 9, 8, 10, 14, 10, 12, 14, 13, 17, 19, 18, 20, 23, 20, 22],
        ),
    ];
    for (k, (a, b), prime, want) in cases {
        let st = valuation_trace(&t, k, &rat(a, b), p(prime), 20).unwrap();
        assert_eq!(st.trace.valuations(), fin(&want), "k={k} x={a}/{b} p={prime}");
    }
}

#[test]
fn relation_partial_valuations() {
    let t = InvariantTable::build(2).unwrap();
    let k1 = generate_bernoulli_relation(&t, 1).unwrap();
    let k2 = generate_bernoulli_relation(&t, 2).unwrap();
    let s = Some;
    let cases: [(&_, u64, Vec<Option<i64>>); 3] = [
        (
            &k1,
            2,
            vec![
                s(0),
                s(1),
                I,
                s(2),
                I,
                s(2),
                I,
                s(3),
                I,
                s(2),
                I,
                s(3),
                I,
                s(3),
                I,
                s(4),
                I,
                s(2),
                I,
                s(3),
                I,
                s(3),
                I,
                s(4),
                I,
                s(3),
                I,
                s(4),
                I,
                s(4),
            ],
        ),
        (
            &k1,
            5,
            vec![
                s(0),
                s(0),
                I,
                s(0),
                I,
                s(0),
                I,
                s(0),
                I,
                s(2),
                I,
                s(-1),
                I,
                s(2),
                I,
                s(0),
                I,
                s(2),
                I,
                s(1),
                I,
                s(1),
                I,
                s(1),
                I,
                s(0),
                I,
                s(0),
                I,
                s(2),
            ],
        ),
        (
            &k2,
            3,
            [
                -1, 0, 1, -1, 1, 2, 0, 1, 2, -1, 0, 1, -1, 2, 5, 1, 2, 4, 0, 1, 2, 0, 2, 3, 1, 2, 3, -1, 0, 1,
            ]
            .into_iter()
            .map(Some)
            .collect(),
        ),
    ];
    for (rel, prime, want) in cases {
        let trace = rel.partial_valuations(p(prime), 30).unwrap();
        assert_eq!(trace.valuations(), vals(&want), "k={} p={prime}", rel.k);
    }
}

#[test]
fn partial_sum_values() {
    let cases = [
        (0, 3, rat(1, 2), "7/2"),
        (1, 2, rat(1, 3), "2/3"),
        (2, 3, rat(1, 1), "26"),
        (2, 3, rat(1, 2), "7"),
        (3, 10, rat(-2, 3), "-524623660/729"),
        (
            5,
            30,
            rat(2, 7),
            "177619117497036538055130520082684/459986536544739960976801",
        ),
    ];
    for (k, n, x, want) in cases {
        let want = rational::parse(want).unwrap();
        assert_eq!(s_direct(k, n, &x).unwrap(), want, "S_{k}({n}, {x})");
        assert_eq!(s_via_recurrence(k, n, &x).unwrap(), want, "S_{k}({n}, {x})");
    }
}

#[test]
fn volkenborn_differences() {
    let trace = volkenborn_trace(2, p(3), 8).unwrap();
    let want = [3, 45, 459, 4293, 39123, 353565, 3186459, 28691253].map(|a| rat(a, 2));
    let got: Vec<_> = trace.entries.iter().map(|e| e.value.clone()).collect();
    assert_eq!(got, want);
}
