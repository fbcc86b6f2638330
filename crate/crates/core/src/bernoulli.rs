//! Bernoulli numbers and polynomials, Volkenborn sums, and the relations
//! obtained by integrating the invariant series term by term.
//!
//! Conventions: `B_1 = -1/2`, and `B_n(x) = sum_j C(n,j) B_j x^(n-j)`, so that
//! `B_n(0) = B_n` and `B_n(x+1) - B_n(x) = n x^(n-1)`.
//!
//! Integrating `[n^k (4x-1)^k + U_k(x)] x^n` over `Z_p` with `x^m -> B_m`
//! turns each coefficient `a_j(n)` of `x^j` into a coefficient of `B_{n+j}`.
//! Rewriting `x^m = (B_{m+1}(x+1) - B_{m+1}(x)) / (m+1)` instead gives the
//! polynomial form of the same relation.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariant::{central_binomials, InvariantTable};
use crate::padic::Prime;
use crate::poly::{four_x_minus_one, BiPolynomial, NPolynomial, Polynomial};
use crate::published::{self, ComparisonEntry, Status};
use crate::rational::{self, binomial, from_bigint, Rational};
use crate::trace::ValuationTrace;

/// `B_0..B_{n_max}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Solves `sum_{i=0}^{m} C(m+1, i) B_i = 0` for `B_m`, `m = 1..=n_max`.
    pub fn build(n_max: usize) -> Self {
        let mut values = vec![Rational::one()];
        for m in 1..=n_max as u64 {
            let s: Rational = values
                .iter()
                .enumerate()
                .map(|(i, b)| from_bigint(binomial(m + 1, i as u64)) * b)
                .sum();
            values.push(-s / rational::int(m as i64 + 1));
        }
        BernoulliTable { values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    fn at(&self, n: usize) -> Result<&Rational> {
        self.get(n)
            .ok_or_else(|| Error::InvalidArgument(format!("B_{n} is beyond the table (n_max = {})", self.n_max())))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `sum_{i=0}^{m} C(m+1, i) B_i`; zero for every `1 <= m <= n_max`.
    pub fn recurrence_residual(&self, m: usize) -> Result<Rational> {
        self.at(m)?;
        Ok((0..=m)
            .map(|i| from_bigint(binomial(m as u64 + 1, i as u64)) * &self.values[i])
            .sum())
    }

    /// `B_n(x)`.
    pub fn polynomial(&self, n: usize) -> Result<Polynomial> {
        self.at(n)?;
        Ok(Polynomial::from_coeffs(
            (0..=n)
                .map(|i| from_bigint(binomial(n as u64, i as u64)) * &self.values[n - i])
                .collect(),
        ))
    }

    /// `B_n(x+1) - B_n(x) - n x^(n-1)`, identically zero.
    pub fn difference_residual(&self, n: usize) -> Result<Polynomial> {
        if n == 0 {
            return Err(Error::InvalidArgument("difference identity needs n >= 1".into()));
        }
        let b = self.polynomial(n)?;
        let delta = &b.shift(&Rational::one()) - &b;
        Ok(&delta - &Polynomial::monomial(rational::int(n as i64), n - 1))
    }

    /// The Volkenborn integral of a polynomial: `x^m -> B_m`, extended linearly.
    pub fn integrate(&self, f: &Polynomial) -> Result<Rational> {
        f.coeffs().iter().enumerate().map(|(m, c)| Ok(c * self.at(m)?)).sum()
    }
}

/// `sum_{j=0}^{count-1} j^n` by iteration, with `0^0 = 1`.
pub fn power_sum_direct(n: u32, count: u64) -> BigInt {
    (0..count).map(|j| BigInt::from(j).pow(n)).sum()
}

/// `sum_{j=0}^{count-1} j^n = (B_{n+1}(count) - B_{n+1}) / (n+1)`.
pub fn power_sum_faulhaber(table: &BernoulliTable, n: u32, count: u64) -> Result<Rational> {
    let m = n as usize + 1;
    let b = table.polynomial(m)?;
    Ok((b.eval(&rational::int(count as i64)) - table.at(m)?) / rational::int(m as i64))
}

/// Sums up to this many terms are iterated; larger ones use Faulhaber.
pub const DIRECT_SUM_LIMIT: u64 = 10_000;

fn p_power(p: Prime, m: u32) -> Result<u64> {
    p.get()
        .checked_pow(m)
        .filter(|v| *v <= i64::MAX as u64)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{m} is too large")))
}

/// `p^{-m} sum_{j=0}^{p^m - 1} j^n`, the level-`m` Volkenborn sum of `x^n`.
pub fn volkenborn_approx(n: u32, p: Prime, m: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let count = p_power(p, m)?;
    let sum = if count <= DIRECT_SUM_LIMIT {
        from_bigint(power_sum_direct(n, count))
    } else {
        power_sum_faulhaber(&BernoulliTable::build(n as usize + 1), n, count)?
    };
    Ok(sum / rational::int(count as i64))
}

/// `(m, approx_m - B_n, v_p(approx_m - B_n))` for `m = 1..=m_max`.
pub fn volkenborn_trace(n: u32, p: Prime, m_max: u32) -> Result<ValuationTrace> {
    let table = BernoulliTable::build(n as usize + 1);
    let target = table.at(n as usize)?.clone();
    let mut trace = ValuationTrace::new(p, "m", "difference");
    for m in 1..=m_max {
        trace.push(m as u64, volkenborn_approx(n, p, m)? - &target);
    }
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationTerm {
    pub offset: usize,
    #[serde(rename = "n_polynomial")]
    pub coefficient: NPolynomial,
    pub text: String,
}

/// `sum_n C(2n,n) sum_j c_j(n) B_{n+j} = 0`. Terms are ordered by descending
/// offset and zero coefficients are omitted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BernoulliRelation {
    pub k: usize,
    pub terms: Vec<RelationTerm>,
}

fn term_label(coefficient: &NPolynomial, symbol: &str, offset: usize) -> String {
    let index = if offset == 0 {
        "n".to_string()
    } else {
        format!("n+{offset}")
    };
    format!("({coefficient}){symbol}_{{{index}}}")
}

impl BernoulliRelation {
    fn from_pairs(k: usize, mut pairs: Vec<(usize, NPolynomial)>) -> Self {
        pairs.retain(|(_, c)| !c.is_zero());
        pairs.sort_by_key(|(offset, _)| std::cmp::Reverse(*offset));
        BernoulliRelation {
            k,
            terms: pairs
                .into_iter()
                .map(|(offset, coefficient)| RelationTerm {
                    text: coefficient.to_string(),
                    offset,
                    coefficient,
                })
                .collect(),
        }
    }

    pub fn coefficient(&self, offset: usize) -> NPolynomial {
        self.terms
            .iter()
            .find(|t| t.offset == offset)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(NPolynomial::zero)
    }

    pub fn max_offset(&self) -> usize {
        self.terms.iter().map(|t| t.offset).max().unwrap_or(0)
    }

    /// Human-readable form, e.g. `(4n+2)B_{n+1} + (-n)B_{n}`.
    pub fn display(&self) -> String {
        self.terms
            .iter()
            .map(|t| term_label(&t.coefficient, "B", t.offset))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `sum_{n<N} C(2n,n) sum_j c_j(n) B_{n+j}` for `N = 1..=n_max`, with the
    /// p-adic valuation of each partial sum.
    pub fn partial_valuations(&self, p: Prime, n_max: u64) -> Result<ValuationTrace> {
        let table = BernoulliTable::build(n_max as usize + self.max_offset());
        let mut trace = ValuationTrace::new(p, "N", "partial_sum");
        let mut sum = Rational::zero();
        for (n, c) in central_binomials().take(n_max as usize) {
            let nv = rational::int(n as i64);
            let mut inner = Rational::zero();
            for t in &self.terms {
                inner += t.coefficient.eval(&nv) * table.at(n as usize + t.offset)?;
            }
            sum += from_bigint(c) * inner;
            trace.push(n + 1, sum.clone());
        }
        Ok(trace)
    }
}

/// `n^k (4x-1)^k + U_k(x)` as a polynomial in `x` with coefficients in `n`.
pub fn invariant_summand(table: &InvariantTable, k: usize) -> Result<BiPolynomial> {
    let lead =
        BiPolynomial::lift(&four_x_minus_one().pow(k as u32)).mul_coeff(&NPolynomial::monomial(Rational::one(), k));
    Ok(&lead + &BiPolynomial::lift(table.u(k)?))
}

/// Expands the summand in powers of `x` and maps `x^{n+j} -> B_{n+j}`.
pub fn generate_bernoulli_relation(table: &InvariantTable, k: usize) -> Result<BernoulliRelation> {
    let q = invariant_summand(table, k)?;
    Ok(BernoulliRelation::from_pairs(
        k,
        q.coeffs().iter().cloned().enumerate().collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolyRelationTerm {
    pub offset: usize,
    pub numerator: NPolynomial,
    /// `n + offset + 1`.
    pub denominator: NPolynomial,
    pub text: String,
}

/// `sum_n C(2n,n) sum_j [c_j(n) / (n+j+1)] (B_{n+j+1}(x+1) - B_{n+j+1}(x)) = 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BernoulliPolyRelation {
    pub k: usize,
    pub terms: Vec<PolyRelationTerm>,
}

impl BernoulliPolyRelation {
    pub fn display(&self) -> String {
        self.terms
            .iter()
            .map(|t| {
                let m = t.offset + 1;
                format!("({})/({})(B_{{n+{m}}}(x+1)-B_{{n+{m}}}(x))", t.numerator, t.denominator)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The bracketed sum at a fixed `n`, expanded as a polynomial in `x`.
    pub fn expand_at(&self, bernoulli: &BernoulliTable, n: u64) -> Result<Polynomial> {
        let nv = rational::int(n as i64);
        let mut acc = Polynomial::zero();
        for t in &self.terms {
            let degree = n as usize + t.offset + 1;
            let b = bernoulli.polynomial(degree)?;
            let bracket = &b.shift(&Rational::one()) - &b;
            let factor = t.numerator.eval(&nv) / t.denominator.eval(&nv);
            acc = &acc + &bracket.scale(&factor);
        }
        Ok(acc)
    }

    /// Checks that substituting the difference identity back gives the
    /// original integrand `q_k(n, x) x^n` for every `n <= n_max`.
    pub fn verify_substitution(&self, table: &InvariantTable, n_max: u64) -> Result<()> {
        let max_offset = self.terms.iter().map(|t| t.offset).max().unwrap_or(0);
        let bernoulli = BernoulliTable::build(n_max as usize + max_offset + 1);
        let q = invariant_summand(table, self.k)?;
        for n in 0..=n_max {
            let want = q.eval_n(&rational::int(n as i64)).shift_up(n as usize);
            let got = self.expand_at(&bernoulli, n)?;
            if got != want {
                return Err(Error::Inconsistent(format!(
                    "k = {}, n = {n}: bracket expansion {got} differs from integrand {want}",
                    self.k
                )));
            }
        }
        Ok(())
    }

    /// Collapses each bracket to its value: `B_{m+1}(x+1) - B_{m+1}(x)` is
    /// `(m+1) x^m`, so at `x = 0` only the factor `c_j(n)` of `0^{n+j}`
    /// survives, and integrating instead sends it to `c_j(n) B_{n+j}`. Either
    /// way the number relation's coefficients come back.
    pub fn reduce_to_number_relation(&self) -> Result<BernoulliRelation> {
        let pairs = self
            .terms
            .iter()
            .map(|t| {
                let scale = NPolynomial::from_ints(&[t.offset as i64 + 1, 1]);
                Ok((t.offset, (&t.numerator * &scale).divide_exact(&t.denominator)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BernoulliRelation::from_pairs(self.k, pairs))
    }
}

/// Rewrites every `x^{n+j}` via `x^m = (B_{m+1}(x+1) - B_{m+1}(x)) / (m+1)`.
pub fn generate_bernoulli_poly_relation(table: &InvariantTable, k: usize) -> Result<BernoulliPolyRelation> {
    let relation = generate_bernoulli_relation(table, k)?;
    Ok(BernoulliPolyRelation {
        k,
        terms: relation
            .terms
            .into_iter()
            .map(|t| PolyRelationTerm {
                offset: t.offset,
                denominator: NPolynomial::from_ints(&[t.offset as i64 + 1, 1]),
                text: t.text,
                numerator: t.coefficient,
            })
            .collect(),
    })
}

/// Compares generated relations with the printed number relations
/// (`k = 1..=6`) and polynomial relations (`k = 1..=3`).
pub fn compare_relations_with_published(table: &InvariantTable) -> Result<Vec<ComparisonEntry>> {
    let mut out = Vec::new();
    for (i, printed) in published::NUMBER_RELATIONS.iter().enumerate() {
        let k = i + 1;
        if k > table.k_max() {
            break;
        }
        let printed = BernoulliRelation::from_pairs(
            k,
            printed
                .iter()
                .map(|(j, c)| Ok((*j, c.parse()?)))
                .collect::<Result<_>>()?,
        );
        let generated = generate_bernoulli_relation(table, k)?;
        out.push(ComparisonEntry {
            k,
            quantity: "bernoulli_relation".into(),
            status: Status::of(printed == generated),
            paper_value: printed.display(),
            generated_value: generated.display(),
        });
    }
    for (i, printed) in published::POLY_RELATIONS.iter().enumerate() {
        let k = i + 1;
        if k > table.k_max() {
            break;
        }
        let printed = BernoulliPolyRelation {
            k,
            terms: printed
                .iter()
                .map(|(j, num, den)| {
                    let numerator: NPolynomial = num.parse()?;
                    Ok(PolyRelationTerm {
                        offset: *j,
                        text: numerator.to_string(),
                        numerator,
                        denominator: den.parse()?,
                    })
                })
                .collect::<Result<_>>()?,
        };
        let generated = generate_bernoulli_poly_relation(table, k)?;
        out.push(ComparisonEntry {
            k,
            quantity: "bernoulli_poly_relation".into(),
            status: Status::of(printed == generated),
            paper_value: printed.display(),
            generated_value: generated.display(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Valuation;
    use crate::rational::{int, rat};

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn first_numbers() {
        let b = BernoulliTable::build(12);
        assert_eq!(b.get(0), Some(&int(1)));
        assert_eq!(b.get(1), Some(&rat(-1, 2)));
        assert_eq!(b.get(2), Some(&rat(1, 6)));
        assert_eq!(b.get(3), Some(&int(0)));
        assert_eq!(b.get(12), Some(&rat(-691, 2730)));
        for m in 1..=12 {
            assert!(b.recurrence_residual(m).unwrap().is_zero());
        }
        assert!(b.get(13).is_none());
    }

    #[test]
    fn first_polynomials() {
        let b = BernoulliTable::build(4);
        assert_eq!(b.polynomial(0).unwrap(), Polynomial::one());
        assert_eq!(b.polynomial(1).unwrap().to_string(), "x-1/2");
        assert_eq!(b.polynomial(2).unwrap().to_string(), "x^2-x+1/6");
        for n in 1..=4 {
            assert!(b.difference_residual(n).unwrap().is_zero());
        }
        assert!(b.difference_residual(0).is_err());
    }

    #[test]
    fn volkenborn_examples() {
        assert_eq!(volkenborn_approx(0, p(7), 2).unwrap(), int(1));
        assert_eq!(volkenborn_approx(2, p(3), 1).unwrap(), rat(5, 3));
        assert_eq!(volkenborn_approx(1, p(5), 3).unwrap(), rat(124, 2));
        let tr = volkenborn_trace(1, p(5), 4).unwrap();
        let v: Vec<_> = tr.valuations();
        assert_eq!(v, (1..=4).map(Valuation::Finite).collect::<Vec<_>>());
        assert!(volkenborn_approx(1, p(5), 0).is_err());
    }

    #[test]
    fn faulhaber_matches_iteration() {
        let b = BernoulliTable::build(8);
        for n in 0..=7u32 {
            for count in [1u64, 2, 7, 25, 243] {
                assert_eq!(
                    power_sum_faulhaber(&b, n, count).unwrap(),
                    from_bigint(power_sum_direct(n, count)),
                    "n = {n}, count = {count}"
                );
            }
        }
    }

    #[test]
    fn integration_functional() {
        let b = BernoulliTable::build(10);
        // (B_{m+1}(x+1) - B_{m+1}(x)) integrates to (m+1) B_m.
        for m in 0..9 {
            let poly = b.polynomial(m + 1).unwrap();
            let delta = &poly.shift(&Rational::one()) - &poly;
            assert_eq!(
                b.integrate(&delta).unwrap(),
                rational::int(m as i64 + 1) * b.get(m).unwrap()
            );
        }
    }

    #[test]
    fn first_relations() {
        let t = InvariantTable::build(3).unwrap();
        let r1 = generate_bernoulli_relation(&t, 1).unwrap();
        assert_eq!(r1.display(), "(4n+2)B_{n+1} + (-n)B_{n}");
        let r2 = generate_bernoulli_relation(&t, 2).unwrap();
        assert_eq!(r2.coefficient(2).to_string(), "16n^2-4");
        assert_eq!(r2.coefficient(1).to_string(), "-8n^2-2");
        assert_eq!(r2.coefficient(0).to_string(), "n^2");
        let pr = generate_bernoulli_poly_relation(&t, 1).unwrap();
        assert_eq!(pr.terms[0].denominator.to_string(), "n+2");
        assert_eq!(pr.reduce_to_number_relation().unwrap(), r1);
        pr.verify_substitution(&t, 6).unwrap();
    }
}
