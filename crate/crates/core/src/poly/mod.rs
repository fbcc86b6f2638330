//! Dense univariate polynomials over exact rationals, and polynomials in `x`
//! whose coefficients are themselves polynomials in `n`.
//!
//! All three user-facing types are instances of [`Poly`]:
//!
//! | alias            | coefficients   | indeterminate |
//! |------------------|----------------|---------------|
//! | [`Polynomial`]   | [`Rational`]   | `x`           |
//! | [`NPolynomial`]  | [`Rational`]   | `n`           |
//! | [`BiPolynomial`] | [`NPolynomial`]| `x`           |
//!
//! Coefficient vectors are stored lowest degree first and trimmed after every
//! operation, so `==` is mathematical equality.

mod text;

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use text::CoeffFormat;

/// Marker naming the variable a [`Poly`] is written in.
pub trait Indeterminate: Copy + Default + fmt::Debug + PartialEq + Eq + 'static {
    const SYMBOL: char;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct X;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct N;

impl Indeterminate for X {
    const SYMBOL: char = 'x';
}

impl Indeterminate for N {
    const SYMBOL: char = 'n';
}

/// The commutative-ring operations a coefficient must support, including
/// scaling by a rational.
pub trait Coefficient: Clone + PartialEq + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
}

/// Dense polynomial in the indeterminate `V` with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C, V> {
    coeffs: Vec<C>,
    var: PhantomData<V>,
}

pub type Polynomial = Poly<Rational, X>;
pub type NPolynomial = Poly<Rational, N>;
pub type BiPolynomial = Poly<NPolynomial, X>;

impl<C: Coefficient, V: Indeterminate> Poly<C, V> {
    pub fn zero() -> Self {
        Poly {
            coeffs: Vec::new(),
            var: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c * var^degree`.
    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds from coefficients, lowest degree first. Trailing zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly {
            coeffs,
            var: PhantomData,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(C::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rational) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.scale(at).add_ref(c))
    }

    /// Long division by a rational-coefficient polynomial; fails unless the
    /// remainder is zero.
    pub fn divide_exact(&self, den: &Poly<Rational, V>) -> Result<Self> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Quotient and remainder of long division by `den`.
    pub fn div_rem(&self, den: &Poly<Rational, V>) -> Result<(Self, Self)> {
        let dd = den.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lead = den.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = rem[i + dd].scale(&inv_lead);
            if q.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&q.scale(d));
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> Poly<D, V> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<V: Indeterminate> Poly<Rational, V> {
    /// Parses a coefficient list given as small integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// `var + a`.
    pub fn linear_shift(a: &Rational) -> Self {
        Self::from_coeffs(vec![a.clone(), Rational::one()])
    }

    /// Substitutes `var := other`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * other) + &Self::constant(c.clone()))
    }

    /// `p(var + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose(&Self::linear_shift(a))
    }

    /// The largest p-adic denominator valuation among coefficients, or 0.
    pub fn max_denominator_valuation(&self, p: crate::padic::Prime) -> i64 {
        self.coeffs
            .iter()
            .filter_map(|c| crate::padic::val_integer(c.denom(), p).finite())
            .max()
            .unwrap_or(0)
    }
}

impl<C: Coefficient, V: Indeterminate> Zero for Poly<C, V> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<C: Coefficient, V: Indeterminate> One for Poly<C, V> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coefficient, V: Indeterminate> Coefficient for Poly<C, V> {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rational) -> Self {
        Poly::scale(self, s)
    }
}

impl BiPolynomial {
    /// Lifts a polynomial in `x` to one with constant `n`-coefficients.
    pub fn lift(p: &Polynomial) -> Self {
        p.map_coeffs(|c| NPolynomial::constant(c.clone()))
    }

    /// Substitutes an integer value for `n`.
    pub fn eval_n(&self, n: &Rational) -> Polynomial {
        self.map_coeffs(|c| c.eval(n))
    }

    /// Substitutes a rational value for `x`.
    pub fn eval_x(&self, x: &Rational) -> NPolynomial {
        self.eval(x)
    }

    /// Degree in `n` of the coefficient of `x^i`.
    pub fn n_degree_of(&self, i: usize) -> Option<usize> {
        self.coeffs.get(i).and_then(Poly::degree)
    }

    pub fn max_denominator_valuation(&self, p: crate::padic::Prime) -> i64 {
        self.coeffs
            .iter()
            .map(|c| c.max_denominator_valuation(p))
            .max()
            .unwrap_or(0)
    }
}

impl<C: Coefficient, V: Indeterminate> Add for &Poly<C, V> {
    type Output = Poly<C, V>;

    fn add(self, rhs: &Poly<C, V>) -> Poly<C, V> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<C: Coefficient, V: Indeterminate> Sub for &Poly<C, V> {
    type Output = Poly<C, V>;

    fn sub(self, rhs: &Poly<C, V>) -> Poly<C, V> {
        self + &(-rhs)
    }
}

impl<C: Coefficient, V: Indeterminate> Neg for &Poly<C, V> {
    type Output = Poly<C, V>;

    fn neg(self) -> Poly<C, V> {
        Poly {
            coeffs: self.coeffs.iter().map(C::neg_ref).collect(),
            var: PhantomData,
        }
    }
}

impl<C: Coefficient, V: Indeterminate> Mul for &Poly<C, V> {
    type Output = Poly<C, V>;

    fn mul(self, rhs: &Poly<C, V>) -> Poly<C, V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<C: Coefficient, V: Indeterminate> $tr for Poly<C, V> {
            type Output = Poly<C, V>;
            fn $m(self, rhs: Poly<C, V>) -> Poly<C, V> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<C: Coefficient, V: Indeterminate> Neg for Poly<C, V> {
    type Output = Poly<C, V>;

    fn neg(self) -> Poly<C, V> {
        -&self
    }
}

impl<C: Coefficient, V: Indeterminate> std::iter::Sum for Poly<C, V> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

/// `4x - 1`, the factor every solve in the crate divides by.
pub fn four_x_minus_one() -> Polynomial {
    Polynomial::from_ints(&[-1, 4])
}
