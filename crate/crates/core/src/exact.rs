//! Exact scalars, dense integer polynomials, and the combinatorial primitives
//! every closed form in this crate is built from.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{domain, invariant, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn rat_of(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// `n!`
pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `n!!`, with `(-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<Integer> {
    if n < -1 {
        return domain(format!("double factorial of {n}"));
    }
    let mut acc = Integer::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `top! / (parts[0]! * parts[1]! * ...)`; the parts must sum to `top`.
pub fn multinomial(top: u64, parts: &[u64]) -> Result<Integer> {
    let sum: u64 = parts.iter().sum();
    if sum != top {
        return domain(format!("multinomial parts {parts:?} do not sum to {top}"));
    }
    let mut acc = Integer::one();
    let mut remaining = top;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc)
}

/// Selector for [`primitive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    Factorial,
    DoubleFactorial,
    Binomial,
    Multinomial,
}

/// Uniform entry point over the four primitives.
///
/// `Multinomial` takes the top argument first, followed by the parts.
pub fn primitive(kind: Primitive, args: &[i64]) -> Result<Integer> {
    let nonneg =
        |v: i64| -> Result<u64> { u64::try_from(v).or_else(|_| domain(format!("negative argument {v} to {kind:?}"))) };
    let arity = |want: usize| -> Result<()> {
        if args.len() == want {
            Ok(())
        } else {
            domain(format!("{kind:?} takes {want} argument(s), got {}", args.len()))
        }
    };
    match kind {
        Primitive::Factorial => {
            arity(1)?;
            Ok(factorial(nonneg(args[0])?))
        }
        Primitive::DoubleFactorial => {
            arity(1)?;
            double_factorial(args[0])
        }
        Primitive::Binomial => {
            arity(2)?;
            Ok(binomial(nonneg(args[0])?, nonneg(args[1])?))
        }
        Primitive::Multinomial => {
            if args.is_empty() {
                return domain("multinomial needs a top argument");
            }
            let top = nonneg(args[0])?;
            let parts = args[1..].iter().map(|&p| nonneg(p)).collect::<Result<Vec<_>>>()?;
            multinomial(top, &parts)
        }
    }
}

/// Exact `base^exp` for a signed exponent.
pub fn int_power(base: &Rational, exp: i64) -> Result<Rational> {
    if exp >= 0 {
        return Ok(Pow::pow(base, exp.unsigned_abs()));
    }
    if base.is_zero() {
        return domain(format!("0 raised to negative exponent {exp}"));
    }
    Ok(Pow::pow(base.recip(), exp.unsigned_abs()))
}

/// `int_power` for an integer base.
pub fn ipow(base: i64, exp: i64) -> Result<Rational> {
    int_power(&rat(base), exp)
}

/// Converts a rational that must be integral; a fractional value signals a
/// transcription error in the formula that produced it.
pub fn expect_integer(value: &Rational, what: &str) -> Result<Integer> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        invariant(format!("{what} evaluated to non-integral {value}"))
    }
}

/// Dense univariate polynomial with integer coefficients; `coeffs[i]` is the
/// coefficient of `t^i`. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `t`
    pub fn t() -> Self {
        Self::from_coeffs(vec![Integer::zero(), Integer::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `t^d * p(1/t)`.
    pub fn reversal(&self, d: usize) -> Result<Self> {
        match self.degree() {
            Some(deg) if deg > d => domain(format!("reversal to degree {d} of a degree-{deg} polynomial")),
            None => Ok(Self::zero()),
            Some(_) => {
                let mut coeffs = vec![Integer::zero(); d + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[d - i] = c.clone();
                }
                Ok(Self::from_coeffs(coeffs))
            }
        }
    }

    pub fn eval(&self, t: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * t + c)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $f(self, rhs: IntPoly) -> IntPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Exact `a / b` for integers, `b != 0`.
pub fn ratio(a: Integer, b: Integer) -> Rational {
    Rational::new(a, b)
}

/// Small helper for signs `(-1)^k`.
pub fn sign(k: i64) -> Integer {
    if k.is_even() {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Lossy conversion used only for display of sizes.
pub fn to_u64(v: &Integer) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primitives_small_cases() {
        assert_eq!(primitive(Primitive::Factorial, &[5]).unwrap(), int(120));
        assert_eq!(primitive(Primitive::DoubleFactorial, &[-1]).unwrap(), int(1));
        assert_eq!(primitive(Primitive::DoubleFactorial, &[7]).unwrap(), int(105));
        assert_eq!(primitive(Primitive::Binomial, &[7, 4]).unwrap(), int(35));
        assert_eq!(primitive(Primitive::Multinomial, &[5, 2, 2, 1]).unwrap(), int(30));
        assert_eq!(binomial(3, 5), int(0));
    }

    #[test]
    fn primitive_domain_errors() {
        assert!(primitive(Primitive::Factorial, &[-2]).is_err());
        assert!(primitive(Primitive::DoubleFactorial, &[-3]).is_err());
        assert!(primitive(Primitive::Binomial, &[4, -1]).is_err());
        assert!(primitive(Primitive::Multinomial, &[5, 2, 2]).is_err());
    }

    #[test]
    fn double_factorial_cross_identity() {
        for k in 1..=12u64 {
            let lhs = factorial(2 * k);
            let rhs = Integer::from(2u32).pow(k as u32) * factorial(k) * double_factorial(2 * k as i64 - 1).unwrap();
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn int_power_cases() {
        assert_eq!(ipow(3, -1).unwrap(), Rational::new(int(1), int(3)));
        assert_eq!(ipow(-1, -3).unwrap(), rat(-1));
        assert_eq!(ipow(2, 10).unwrap(), rat(1024));
        assert_eq!(ipow(0, 0).unwrap(), rat(1));
        assert!(matches!(ipow(0, -1), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn poly_examples() {
        let one_t = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(&one_t * &one_t, IntPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(IntPoly::from_i64s(&[1, 5]).coeff(1), int(5));
        assert_eq!(IntPoly::from_i64s(&[1, 5]).coeff(9), int(0));
        assert_eq!(one_t.reversal(3).unwrap(), IntPoly::from_i64s(&[0, 0, 1, 1]));
        assert!(IntPoly::from_i64s(&[1, 2, 3]).reversal(1).is_err());
        assert_eq!(IntPoly::from_i64s(&[0, 0, 0]).degree(), None);
        assert_eq!(IntPoly::from_i64s(&[2, -3, 1]).to_string(), "2 - 3t + t^2");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn distributive(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        }

        #[test]
        fn reversal_involution(p in small_poly(), extra in 0usize..4) {
            let d = p.degree().unwrap_or(0) + extra;
            // only polynomials with a nonzero constant term survive a double reversal unchanged
            prop_assume!(!p.coeff(0).is_zero());
            prop_assert_eq!(p.reversal(d).unwrap().reversal(d).unwrap(), p);
        }

        #[test]
        fn eval_is_ring_hom(p in small_poly(), q in small_poly(), t in -5i64..5) {
            let t = int(t);
            prop_assert_eq!((&p * &q).eval(&t), p.eval(&t) * q.eval(&t));
        }
    }
}
