//! Big-integer and exact rational primitives.
//!
//! Every count in this crate is a [`Nat`]; every coefficient that can be
//! fractional (the `γ_k`, the `α_s(p, q)`, series coefficients) is a
//! [`Rational`] kept in lowest terms by `num-rational`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;
/// Arbitrary-precision signed integer, used for alternating sums.
pub type Int = BigInt;
/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n!`
pub fn factorial(n: u64) -> Nat {
    (2..=n).fold(Nat::one(), |acc, i| acc * i)
}

/// `m!! = m (m-2) (m-4) ...`, with `0!! = (-1)!! = 1`.
///
/// Arguments below `-1` are rejected: the recurrences in this crate only
/// ever reach `-1`, and anything lower means a caller left its domain.
pub fn double_factorial(m: i64) -> Result<Nat> {
    if m < -1 {
        return Err(Error::Domain(format!("double factorial of {m}")));
    }
    let mut acc = Nat::one();
    let mut i = m;
    while i > 1 {
        acc *= i as u64;
        i -= 2;
    }
    Ok(acc)
}

/// Binomial coefficient, zero-extended: returns 0 whenever `k < 0`, `k > n`
/// or `n < 0`. Alternating transforms rely on the vanishing terms.
pub fn binomial(n: i64, k: i64) -> Nat {
    if n < 0 || k < 0 || k > n {
        return Nat::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // exact at every step: the running product is C(n-k+i, i)
    let mut acc = Nat::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// `Cat(n) = C(2n, n) / (n + 1)`
pub fn catalan(n: u64) -> Nat {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// Normalized fraction `num / den`.
pub fn rat(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::Domain("zero denominator".into()));
    }
    Ok(Rational::new(Int::from(num), Int::from(den)))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

pub fn nat_to_rat(n: &Nat) -> Rational {
    Rational::from_integer(Int::from_biguint(Sign::Plus, n.clone()))
}

pub fn nat_to_int(n: &Nat) -> Int {
    Int::from_biguint(Sign::Plus, n.clone())
}

/// `1 / m!` with the reciprocal-gamma convention `1 / m! = 0` for `m < 0`.
pub fn inv_factorial(m: i64) -> Rational {
    if m < 0 {
        Rational::zero()
    } else {
        Rational::new(Int::one(), nat_to_int(&factorial(m as u64)))
    }
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let p = Int::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(Int::one(), p)
    }
}

/// Converts a rational that must be a nonnegative integer.
pub fn to_nat(value: &Rational, context: &str) -> Result<Nat> {
    if !value.is_integer() {
        return Err(Error::NotIntegral {
            context: context.to_string(),
            value: value.to_string(),
        });
    }
    int_to_nat(&value.to_integer(), context)
}

pub fn int_to_nat(value: &Int, context: &str) -> Result<Nat> {
    if value.is_negative() {
        return Err(Error::Negative {
            context: context.to_string(),
            value: value.to_string(),
        });
    }
    Ok(value.magnitude().clone())
}

/// Exact quotient `num / den`, failing if `den` does not divide `num`.
pub fn exact_div(num: &Nat, den: &Nat, context: &str) -> Result<Nat> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() || den.is_zero() {
        return Err(Error::InexactDivision {
            context: context.to_string(),
        });
    }
    Ok(q)
}

/// Natural logarithm of a big integer, accurate to double precision even far
/// beyond the `f64` range.
pub fn ln_nat(n: &Nat) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
