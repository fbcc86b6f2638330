//! The infinite series `sum_n C(2n,n) [n^k (4x-1)^k + U_k(x)] x^n`, whose
//! p-adic sum is 0 on the convergence set, studied through exact partial sums.
//!
//! Every partial sum is computed twice: by literal summation and as
//! `C(2N,N) x^N A_{k-1}(N, x)`. The two must agree exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariant::{central_binomials, InvariantTable};
use crate::padic::{val_binomial_digits, val_rational, Prime, Valuation};
use crate::rational::{self, binomial, from_bigint, Rational};
use crate::trace::ValuationTrace;

use num_traits::{One, Signed, Zero};

/// Which of the three membership conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainFailure {
    /// `|u| > |v|` in the archimedean sense.
    NumeratorExceedsDenominator,
    PDoesNotDivideNumerator,
    PDividesDenominator,
}

/// Membership of `x = u/v` in `{ |u| <= |v|, p | u, p ∤ v }`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergencePoint {
    #[serde(serialize_with = "ser_rational")]
    pub x: Rational,
    #[serde(serialize_with = "ser_prime")]
    pub p: Prime,
    pub in_domain: bool,
    pub reasons: Vec<DomainFailure>,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::to_json_string(r))
}

fn ser_prime<S: serde::Serializer>(p: &Prime, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(p.get())
}

pub fn in_convergence_set(x: &Rational, p: Prime) -> ConvergencePoint {
    let pb = p.as_bigint();
    let mut reasons = Vec::new();
    if x.numer().abs() > *x.denom() {
        reasons.push(DomainFailure::NumeratorExceedsDenominator);
    }
    if !(x.numer() % &pb).is_zero() {
        reasons.push(DomainFailure::PDoesNotDivideNumerator);
    }
    if (x.denom() % &pb).is_zero() {
        reasons.push(DomainFailure::PDividesDenominator);
    }
    ConvergencePoint {
        x: x.clone(),
        p,
        in_domain: reasons.is_empty(),
        reasons,
    }
}

fn require_regular(x: &Rational) -> Result<()> {
    if *x == rational::rat(1, 4) {
        Err(Error::SingularPoint)
    } else {
        Ok(())
    }
}

/// `C(2N,N) x^N A_{k-1}(N, x)`.
pub fn closed_partial_sum(table: &InvariantTable, k: usize, x: &Rational, n_terms: u64) -> Result<Rational> {
    let a = table.a(k - 1)?.eval_n(&rational::int(n_terms as i64)).eval(x);
    Ok(from_bigint(binomial(2 * n_terms, n_terms)) * rational::pow_i(x, n_terms as i64) * a)
}

/// `T_1, ..., T_{n_max}`, each checked against its closed form.
pub fn invariant_partial_sums(table: &InvariantTable, k: usize, x: &Rational, n_max: u64) -> Result<Vec<Rational>> {
    require_regular(x)?;
    let u = table.u(k)?.eval(x);
    let fk = rational::pow_i(&(x * rational::int(4) - Rational::one()), k as i64);
    let mut sum = Rational::zero();
    let mut xn = Rational::one();
    let mut out = Vec::with_capacity(n_max as usize);
    for (n, c) in central_binomials().take(n_max as usize) {
        let nk = rational::pow_i(&rational::int(n as i64), k as i64);
        sum += from_bigint(c) * (nk * &fk + &u) * &xn;
        xn *= x;
        let closed = closed_partial_sum(table, k, x, n + 1)?;
        if closed != sum {
            return Err(Error::Inconsistent(format!(
                "partial sum T_{} = {} but closed form gives {}",
                n + 1,
                rational::to_text(&sum),
                rational::to_text(&closed)
            )));
        }
        out.push(sum.clone());
    }
    Ok(out)
}

/// The exact partial sum `T_N`.
pub fn invariant_partial_sum(table: &InvariantTable, k: usize, x: &Rational, n_terms: u64) -> Result<Rational> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(invariant_partial_sums(table, k, x, n_terms)?
        .pop()
        .expect("n_terms >= 1"))
}

/// A valuation trace together with the domain verdict for its point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesTrace {
    pub k: usize,
    pub point: ConvergencePoint,
    /// Set when `x` lies outside the convergence set.
    pub warning: Option<String>,
    pub trace: ValuationTrace,
}

/// `(N, T_N, v_p(T_N))` for `N = 1..=n_max`.
pub fn valuation_trace(table: &InvariantTable, k: usize, x: &Rational, p: Prime, n_max: u64) -> Result<SeriesTrace> {
    let point = in_convergence_set(x, p);
    let warning = (!point.in_domain).then(|| {
        format!(
            "x = {} is outside the p-adic convergence set for p = {}",
            rational::to_text(x),
            p
        )
    });
    let mut trace = ValuationTrace::new(p, "N", "partial_sum");
    for (i, t) in invariant_partial_sums(table, k, x, n_max)?.into_iter().enumerate() {
        trace.push(i as u64 + 1, t);
    }
    Ok(SeriesTrace {
        k,
        point,
        warning,
        trace,
    })
}

/// Largest p-adic valuation of a denominator among the coefficients of
/// `A_{k-1}`; the offset in `v_p(T_N) >= N v_p(x) - d_k`.
pub fn denominator_offset(table: &InvariantTable, k: usize, p: Prime) -> Result<i64> {
    Ok(table.a(k - 1)?.max_denominator_valuation(p))
}

/// Valuation data for the `n`-th term `C(2n,n) q_k(n,x) x^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TermBound {
    /// `n v_p(x) + v_p(C(2n,n))`.
    pub bound: Valuation,
    /// `v_p(q_k(n, x))`.
    pub polynomial_part: Valuation,
    /// The valuation of the full term.
    pub exact: Valuation,
}

fn scaled(v: Valuation, n: u64) -> Valuation {
    match (v, n) {
        (_, 0) => Valuation::Finite(0),
        (Valuation::Finite(a), n) => Valuation::Finite(a * n as i64),
        (Valuation::Infinite, _) => Valuation::Infinite,
    }
}

pub fn term_valuation_bound(table: &InvariantTable, k: usize, n: u64, x: &Rational, p: Prime) -> Result<TermBound> {
    let bound = scaled(val_rational(x, p), n) + val_binomial_digits(2 * n, n, p)?;
    let q = table.summand(k, n)?.eval(x);
    let polynomial_part = val_rational(&q, p);
    let term = from_bigint(binomial(2 * n, n)) * q * rational::pow_i(x, n as i64);
    let exact = val_rational(&term, p);
    if exact != bound + polynomial_part {
        return Err(Error::Inconsistent(format!(
            "term {n}: valuation {exact} differs from {bound} + {polynomial_part}"
        )));
    }
    if polynomial_part >= 0 && exact < bound {
        return Err(Error::Inconsistent(format!("term {n}: valuation below its bound")));
    }
    Ok(TermBound {
        bound,
        polynomial_part,
        exact,
    })
}

/// `P(n, x) = sum_j w_j [n^j (4x-1)^j + U_j(x)]`, a rational combination of
/// single-`k` summands. Its series inherits the invariant sum 0.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantCombination {
    pub weights: Vec<(usize, Rational)>,
}

impl InvariantCombination {
    pub fn new(weights: Vec<(usize, Rational)>) -> Self {
        InvariantCombination { weights }
    }

    /// Literal partial sum `sum_{n<N} C(2n,n) P(n,x) x^n`.
    pub fn partial_sum(&self, table: &InvariantTable, x: &Rational, n_terms: u64) -> Result<Rational> {
        require_regular(x)?;
        let mut sum = Rational::zero();
        let mut xn = Rational::one();
        for (n, c) in central_binomials().take(n_terms as usize) {
            let mut p = Rational::zero();
            for (j, w) in &self.weights {
                p += w * table.summand(*j, n)?.eval(x);
            }
            sum += from_bigint(c) * p * &xn;
            xn *= x;
        }
        Ok(sum)
    }

    /// `sum_j w_j C(2N,N) x^N A_{j-1}(N,x)`.
    pub fn closed_partial_sum(&self, table: &InvariantTable, x: &Rational, n_terms: u64) -> Result<Rational> {
        require_regular(x)?;
        let mut sum = Rational::zero();
        for (j, w) in &self.weights {
            sum += w * closed_partial_sum(table, *j, x, n_terms)?;
        }
        Ok(sum)
    }
}
