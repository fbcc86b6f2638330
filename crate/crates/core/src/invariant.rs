//! The companion polynomials `U_k(x)` and remainder polynomials `A_{k-1}(N, x)`
//! behind the finite identity
//!
//! ```text
//! sum_{n=0}^{N-1} C(2n,n) [n^k (4x-1)^k + U_k(x)] x^n = C(2N,N) x^N A_{k-1}(N,x)
//! ```
//!
//! Both families come from the same triangular recurrence. For `T_k` standing
//! for either `U_k` or `A_{k-1}`, and a forcing term `F_k`,
//!
//! ```text
//! (4x-1) T_k = F_k - sum_{u<k} 4x C(k,u) (4x-1)^(k-u) T_u
//!                  + sum_{v<k} 2x C(k-1,v) (4x-1)^(k-v) T_v
//! ```
//!
//! with `F_k = 2x (4x-1)^k` for `U` and `F_k = N^k (4x-1)^k` for `A`. The
//! division by `4x - 1` is always exact; a remainder signals a bug.
//!
//! The partial sums `S_k(N, x) = sum_{n<N} C(2n,n) n^k x^n` are available three
//! ways (literal sum, the linear recurrence in `S_0..S_k`, and the closed form
//! through `U_k` and `A_{k-1}`) so each can police the others.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{four_x_minus_one, BiPolynomial, Coefficient, NPolynomial, Poly, Polynomial, X};
use crate::published::{self, ComparisonEntry, Status};
use crate::rational::{self, binomial, from_bigint, Rational};

/// `U_1..U_k_max` and `A_0..A_{k_max-1}`, built bottom-up and immutable after.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantTable {
    u: Vec<Polynomial>,
    a: Vec<BiPolynomial>,
}

fn recurrence_weights(k: usize, j: usize) -> (Polynomial, Polynomial) {
    let fx = four_x_minus_one();
    let x = Polynomial::var();
    let pow = fx.pow((k - j) as u32);
    let lhs = (&x * &pow).scale(&from_bigint(binomial(k as u64, j as u64) * 4));
    let rhs = (&x * &pow).scale(&from_bigint(binomial(k as u64 - 1, j as u64) * 2));
    (lhs, rhs)
}

/// Right-hand side of the isolated recurrence, before dividing by `4x - 1`.
fn isolated_rhs<C: Coefficient>(
    prev: &[Poly<C, X>],
    k: usize,
    forcing: Poly<C, X>,
    lift: impl Fn(&Polynomial) -> Poly<C, X>,
) -> Poly<C, X> {
    let mut acc = forcing;
    for j in 1..k {
        let (four, two) = recurrence_weights(k, j);
        acc = &acc - &(&lift(&four) * &prev[j - 1]);
        acc = &acc + &(&lift(&two) * &prev[j - 1]);
    }
    acc
}

/// The full recurrence with `T_k` substituted; zero when the table is right.
fn recurrence_residual<C: Coefficient>(
    terms: &[Poly<C, X>],
    k: usize,
    forcing: Poly<C, X>,
    lift: impl Fn(&Polynomial) -> Poly<C, X>,
) -> Poly<C, X> {
    let mut acc = Poly::zero();
    for u in 1..=k {
        let (four, _) = recurrence_weights(k, u);
        acc = &acc + &(&lift(&four) * &terms[u - 1]);
    }
    for v in 1..k {
        let (_, two) = recurrence_weights(k, v);
        acc = &acc - &(&lift(&two) * &terms[v - 1]);
    }
    &(&acc - &terms[k - 1]) - &forcing
}

fn u_forcing(k: usize) -> Polynomial {
    &Polynomial::var().scale(&rational::int(2)) * &four_x_minus_one().pow(k as u32)
}

fn a_forcing(k: usize) -> BiPolynomial {
    BiPolynomial::lift(&four_x_minus_one().pow(k as u32)).mul_coeff(&NPolynomial::monomial(Rational::one(), k))
}

impl InvariantTable {
    /// Builds `U_1..U_k_max` and `A_0..A_{k_max-1}`.
    pub fn build(k_max: usize) -> Result<Self> {
        let fx = four_x_minus_one();
        let mut u: Vec<Polynomial> = Vec::with_capacity(k_max);
        let mut a: Vec<BiPolynomial> = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let next_u = isolated_rhs(&u, k, u_forcing(k), Polynomial::clone).divide_exact(&fx)?;
            let next_a = isolated_rhs(&a, k, a_forcing(k), BiPolynomial::lift).divide_exact(&fx)?;
            u.push(next_u);
            a.push(next_a);
        }
        Ok(InvariantTable { u, a })
    }

    pub fn k_max(&self) -> usize {
        self.u.len()
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.k_max() {
            Err(Error::InvalidArgument(format!(
                "k = {k} outside the table range 1..={}",
                self.k_max()
            )))
        } else {
            Ok(())
        }
    }

    /// `U_k(x)`, for `1 <= k <= k_max`.
    pub fn u(&self, k: usize) -> Result<&Polynomial> {
        self.check_k(k)?;
        Ok(&self.u[k - 1])
    }

    /// `A_j(n, x)`, for `0 <= j < k_max`.
    pub fn a(&self, j: usize) -> Result<&BiPolynomial> {
        self.check_k(j + 1)?;
        Ok(&self.a[j])
    }

    /// The `U` recurrence with every generated polynomial substituted back.
    pub fn u_recurrence_residual(&self, k: usize) -> Result<Polynomial> {
        self.check_k(k)?;
        Ok(recurrence_residual(&self.u[..k], k, u_forcing(k), Polynomial::clone))
    }

    /// The `A` recurrence with every generated polynomial substituted back.
    pub fn a_recurrence_residual(&self, k: usize) -> Result<BiPolynomial> {
        self.check_k(k)?;
        Ok(recurrence_residual(&self.a[..k], k, a_forcing(k), BiPolynomial::lift))
    }

    /// `2x A_{k-1}(1,x) - A_{k-1}(0,x) - U_k(x)`.
    pub fn consistency_residual(&self, k: usize) -> Result<Polynomial> {
        let a = self.a(k - 1)?;
        let two_x = Polynomial::from_ints(&[0, 2]);
        let lhs = &(&two_x * &a.eval_n(&Rational::one())) - &a.eval_n(&Rational::zero());
        Ok(&lhs - self.u(k)?)
    }

    /// `n^k (4x-1)^k + U_k(x)` at a fixed integer `n`.
    pub fn summand(&self, k: usize, n: u64) -> Result<Polynomial> {
        let nk = rational::pow_i(&rational::int(n as i64), k as i64);
        Ok(&four_x_minus_one().pow(k as u32).scale(&nk) + self.u(k)?)
    }
}

/// `U_k` alone; builds a table up to `k`.
pub fn compute_u(k: usize) -> Result<Polynomial> {
    InvariantTable::build(k)?.u(k).cloned()
}

/// `A_{k-1}` alone; builds a table up to `k`.
pub fn compute_a(k: usize) -> Result<BiPolynomial> {
    let j = k
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidArgument("k must be at least 1".into()))?;
    InvariantTable::build(k)?.a(j).cloned()
}

fn require_positive_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("N must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn require_regular(x: &Rational) -> Result<()> {
    if *x == rational::rat(1, 4) {
        Err(Error::SingularPoint)
    } else {
        Ok(())
    }
}

/// Iterates `(n, C(2n,n))` for `n = 0, 1, ...`.
pub fn central_binomials() -> impl Iterator<Item = (u64, BigInt)> {
    (0u64..).scan(BigInt::one(), |c, n| {
        let out = (n, c.clone());
        // C(2n+2, n+1) = C(2n, n) * 2(2n+1) / (n+1)
        *c = &*c * (2 * (2 * n + 1)) / (n + 1);
        Some(out)
    })
}

/// `S_k(N, x)` by literal summation, with `0^0 = 1`.
pub fn s_direct(k: u32, n_terms: u64, x: &Rational) -> Result<Rational> {
    require_positive_n(n_terms)?;
    let mut sum = Rational::zero();
    let mut xn = Rational::one();
    for (n, c) in central_binomials().take(n_terms as usize) {
        let nk = BigInt::from(n).pow(k);
        sum += from_bigint(c * nk) * &xn;
        xn *= x;
    }
    Ok(sum)
}

/// `S_k(N, x)` from `S_0` by solving the recurrence
/// `S_j = 2x S_0 + 4x sum_{u=1}^{j} C(j,u) S_u - 2x sum_{v=1}^{j-1} C(j-1,v) S_v - C(2N,N) N^j x^N`
/// for `j = 1..k` in turn.
pub fn s_via_recurrence(k: u32, n_terms: u64, x: &Rational) -> Result<Rational> {
    require_regular(x)?;
    let s0 = s_direct(0, n_terms, x)?;
    if k == 0 {
        return Ok(s0);
    }
    let tail = from_bigint(binomial(2 * n_terms, n_terms)) * rational::pow_i(x, n_terms as i64);
    let four_x = x * rational::int(4);
    let two_x = x * rational::int(2);
    let self_coeff = Rational::one() - &four_x;
    let mut s = vec![s0];
    for j in 1..=k as u64 {
        let mut rhs = &two_x * &s[0] - &tail * rational::pow_i(&rational::int(n_terms as i64), j as i64);
        for u in 1..j {
            rhs += &four_x * from_bigint(binomial(j, u)) * &s[u as usize];
            rhs -= &two_x * from_bigint(binomial(j - 1, u)) * &s[u as usize];
        }
        s.push(rhs / &self_coeff);
    }
    Ok(s.pop().expect("k >= 1"))
}

/// `S_k(N, x) = (4x-1)^{-k} [C(2N,N) x^N A_{k-1}(N,x) - U_k(x) S_0(N,x)]`.
pub fn s_closed(table: &InvariantTable, k: usize, n_terms: u64, x: &Rational) -> Result<Rational> {
    require_regular(x)?;
    let s0 = s_direct(0, n_terms, x)?;
    let u = table.u(k)?.eval(x);
    let a = table.a(k - 1)?.eval_n(&rational::int(n_terms as i64)).eval(x);
    let tail = from_bigint(binomial(2 * n_terms, n_terms)) * rational::pow_i(x, n_terms as i64) * a;
    let scale = rational::pow_i(&(x * rational::int(4) - Rational::one()), -(k as i64));
    Ok(scale * (tail - u * s0))
}

/// Result of checking the finite identity as a polynomial in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub k: usize,
    pub n_terms: u64,
    pub residual: Polynomial,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Forms `sum_{n<N} C(2n,n) [n^k (4x-1)^k + U_k] x^n - C(2N,N) x^N A_{k-1}(N,x)`
/// symbolically in `x`.
pub fn check_finite_identity(table: &InvariantTable, k: usize, n_terms: u64) -> Result<IdentityCheck> {
    let mut lhs = Polynomial::zero();
    for (n, c) in central_binomials().take(n_terms as usize) {
        let term = table.summand(k, n)?.scale(&from_bigint(c)).shift_up(n as usize);
        lhs = &lhs + &term;
    }
    let rhs = table
        .a(k - 1)?
        .eval_n(&rational::int(n_terms as i64))
        .scale(&from_bigint(binomial(2 * n_terms, n_terms)))
        .shift_up(n_terms as usize);
    Ok(IdentityCheck {
        k,
        n_terms,
        residual: &lhs - &rhs,
    })
}

/// Compares the generated `U_1..U_6` and `A_0..A_5` (or as many as the table
/// holds) with the printed values, coefficient by coefficient.
pub fn compare_with_published(table: &InvariantTable) -> Result<Vec<ComparisonEntry>> {
    let mut out = Vec::new();
    for k in 1..=table.k_max().min(published::U.len()) {
        let printed_u: Polynomial = published::U[k - 1].parse()?;
        let generated_u = table.u(k)?;
        out.push(ComparisonEntry {
            k,
            quantity: format!("U_{k}"),
            status: Status::of(printed_u == *generated_u),
            paper_value: printed_u.to_string(),
            generated_value: generated_u.to_string(),
        });
        let printed_a: BiPolynomial = published::A[k - 1].parse()?;
        let generated_a = table.a(k - 1)?;
        out.push(ComparisonEntry {
            k,
            quantity: format!("A_{}", k - 1),
            status: Status::of(printed_a == *generated_a),
            paper_value: printed_a.to_string(),
            generated_value: generated_a.to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn table() -> InvariantTable {
        InvariantTable::build(8).unwrap()
    }

    #[test]
    fn first_companions() {
        let t = table();
        assert_eq!(t.u(1).unwrap().to_string(), "2x");
        assert_eq!(t.u(2).unwrap().to_string(), "-4x^2-2x");
        assert_eq!(t.u(3).unwrap().to_string(), "8x^3+20x^2+2x");
    }

    #[test]
    fn first_remainders() {
        let t = table();
        assert_eq!(t.a(0).unwrap().to_string(), "n");
        // Frozen from an independent computer-algebra run of the recurrence.
        assert_eq!(t.a(1).unwrap().to_string(), "(4n^2-6n)x-n^2");
        assert_eq!(
            t.a(2).unwrap().to_string(),
            "(16n^3-40n^2+28n)x^2+(-8n^3+10n^2+8n)x+n^3"
        );
    }

    #[test]
    fn degree_laws() {
        let t = table();
        for k in 1..=8 {
            assert_eq!(t.u(k).unwrap().degree(), Some(k));
            let a = t.a(k - 1).unwrap();
            assert_eq!(a.degree(), Some(k - 1));
            assert_eq!(a.n_degree_of(k - 1), Some(k));
        }
    }

    #[test]
    fn table_bounds() {
        let t = InvariantTable::build(3).unwrap();
        assert!(t.u(0).is_err());
        assert!(t.u(4).is_err());
        assert!(t.a(3).is_err());
        assert!(InvariantTable::build(0).unwrap().u(1).is_err());
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(s_direct(0, 3, &rat(1, 2)).unwrap(), rat(7, 2));
        assert_eq!(s_direct(1, 2, &rat(1, 3)).unwrap(), rat(2, 3));
        assert_eq!(s_direct(2, 3, &int(1)).unwrap(), int(26));
        assert_eq!(s_via_recurrence(1, 2, &rat(1, 3)).unwrap(), rat(2, 3));
        assert_eq!(s_via_recurrence(2, 3, &rat(1, 2)).unwrap(), int(7));
        assert_eq!(s_via_recurrence(2, 3, &rat(1, 4)), Err(Error::SingularPoint));
        assert_eq!(
            s_direct(1, 0, &int(1)),
            Err(Error::InvalidArgument("N must be at least 1".into()))
        );
    }

    #[test]
    fn closed_form_examples() {
        let t = table();
        assert_eq!(s_closed(&t, 1, 1, &rat(5, 9)).unwrap(), int(0));
        assert_eq!(s_closed(&t, 1, 2, &int(1)).unwrap(), int(2));
        assert_eq!(s_closed(&t, 1, 2, &rat(1, 4)), Err(Error::SingularPoint));
    }

    #[test]
    fn identity_small_cases() {
        let t = table();
        let c = check_finite_identity(&t, 1, 2).unwrap();
        assert!(c.holds(), "residual {}", c.residual);
        assert!(check_finite_identity(&t, 1, 1).unwrap().holds());
    }

    #[test]
    fn published_comparison() {
        let t = InvariantTable::build(6).unwrap();
        let report = compare_with_published(&t).unwrap();
        assert_eq!(report.len(), 12);
        let status = |q: &str| report.iter().find(|e| e.quantity == q).unwrap().status;
        for q in ["U_1", "U_2", "U_3", "U_4", "A_0"] {
            assert_eq!(status(q), Status::Match, "{q}");
        }
        for q in ["A_1", "A_2", "A_3", "A_4", "A_5", "U_5", "U_6"] {
            assert_eq!(status(q), Status::Mismatch, "{q}");
        }
    }

    #[test]
    fn central_binomial_iterator() {
        let got: Vec<_> = central_binomials().take(6).map(|(_, c)| c).collect();
        let want: Vec<BigInt> = [1, 2, 6, 20, 70, 252].into_iter().map(BigInt::from).collect();
        assert_eq!(got, want);
    }
}
