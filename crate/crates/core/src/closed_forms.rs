//! Rational coefficient tables and the semi-closed formulas built on them.
//!
//! The `γ_k` drive everything here:
//!
//! ```text
//! γ_0 = 1,   γ_k = -1/(3k-3)!! · Σ_{i=1..k} γ_{k-i}/i! · (3k+i-3)!!
//! a(n,k) = Σ_{i=0..k} γ_{k-i}/i! · (2n+k+i-1)!!
//! b(n,k) = Σ_{i=0..k} γ_{k-i}/i! · 2^(n-k)/(n-k+1)! · (2n+k+i-1)!!
//! ```
//!
//! Each evaluator sums exactly and then insists on an integral result.

use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{
    binomial, double_factorial, factorial, inv_factorial, nat_to_rat, pow2, to_nat, Nat, Rational,
};

static GAMMA: LazyLock<RwLock<Vec<Rational>>> = LazyLock::new(|| RwLock::new(Vec::new()));

fn dfact(m: i64) -> Rational {
    nat_to_rat(&double_factorial(m).expect("double factorial argument stays >= -1"))
}

fn fact(n: u64) -> Rational {
    nat_to_rat(&factorial(n))
}

fn next_gamma(prev: &[Rational]) -> Rational {
    let k = prev.len() as i64;
    if k == 0 {
        return Rational::one();
    }
    let sum = (1..=k).fold(Rational::zero(), |acc, i| {
        acc + &prev[(k - i) as usize] / fact(i as u64) * dfact(3 * k + i - 3)
    });
    -sum / dfact(3 * k - 3)
}

/// `γ_k`, cached process-wide.
pub fn gamma(k: usize) -> Rational {
    if let Some(v) = GAMMA.read().expect("gamma cache poisoned").get(k) {
        return v.clone();
    }
    let mut table = GAMMA.write().expect("gamma cache poisoned");
    while table.len() <= k {
        let next = next_gamma(&table);
        table.push(next);
    }
    table[k].clone()
}

/// `γ_0, ..., γ_kmax`.
pub fn gamma_table(kmax: usize) -> Vec<Rational> {
    gamma(kmax);
    GAMMA.read().expect("gamma cache poisoned")[..=kmax].to_vec()
}

/// `Σ_{i=0..k} γ_{k-i}/i! · (3k+i-3)!!`, which vanishes for every `k >= 1`.
pub fn gamma_residual(k: usize) -> Rational {
    let g = gamma_table(k);
    let k = k as i64;
    (0..=k).fold(Rational::zero(), |acc, i| {
        acc + &g[(k - i) as usize] / fact(i as u64) * dfact(3 * k + i - 3)
    })
}

/// `δ_j = j! · γ_j`
pub fn delta(j: usize) -> Rational {
    fact(j as u64) * gamma(j)
}

/// `δ_0 ..= δ_jmax` from their own recursion,
/// `δ_i = -Σ_{j=1..i} C(i,j) · (3i+j-3)!!/(3i-3)!! · δ_{i-j}`.
pub fn delta_by_recursion(jmax: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(jmax + 1);
    for i in 0..=jmax as i64 {
        if i == 0 {
            out.push(Rational::one());
            continue;
        }
        let sum = (1..=i).fold(Rational::zero(), |acc, j| {
            acc + nat_to_rat(&binomial(i, j)) * dfact(3 * i + j - 3) * &out[(i - j) as usize]
        });
        out.push(-sum / dfact(3 * i - 3));
    }
    out
}

fn semi_closed_sum(n: i64, k: i64) -> Rational {
    let g = gamma_table(k as usize);
    (0..=k).fold(Rational::zero(), |acc, i| {
        acc + &g[(k - i) as usize] / fact(i as u64) * dfact(2 * n + k + i - 1)
    })
}

fn check_range(n: usize, k: usize, what: &str) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("{what} needs 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Semi-closed evaluation of `a(n, k)`.
pub fn a_closed(n: usize, k: usize) -> Result<Nat> {
    check_range(n, k, "a_closed")?;
    to_nat(&semi_closed_sum(n as i64, k as i64), &format!("a_closed({n},{k})"))
}

/// Diagonal `a(n, n)`.
pub fn a_diag(n: usize) -> Result<Nat> {
    a_closed(n, n)
}

/// Semi-closed evaluation of `b(n, k)`.
pub fn b_closed(n: usize, k: usize) -> Result<Nat> {
    check_range(n, k, "b_closed")?;
    let (n, k) = (n as i64, k as i64);
    let value = semi_closed_sum(n, k) * pow2(n - k) * inv_factorial(n - k + 1);
    to_nat(&value, &format!("b_closed({n},{k})"))
}

/// Initial layer `ω(0, m, k)` of the ω recurrence. Integral for `k <= m`,
/// zero for `k = m + 1`, and zero for larger `k` through `1/(negative)! = 0`.
pub fn omega_init(m: usize, k: usize) -> Rational {
    let (m, k) = (m as i64, k as i64);
    let scale = pow2(m - k) * inv_factorial(m - k + 1);
    if scale.is_zero() {
        return scale;
    }
    semi_closed_sum(m, k) * scale
}

/// `α_s(p, q) = (-1)^(q-p+1) (s-1+q-p)! / ((s-q-2p+2)! (q-1)! 2^(q-1) (p-1)!)`
pub fn alpha(s: i64, p: i64, q: i64) -> Result<Rational> {
    if p < 1 || q < 1 || s - q - 2 * p + 2 < 0 || s - 1 + q - p < 0 {
        return Err(Error::Domain(format!("alpha_{s}({p},{q}) has a negative factorial")));
    }
    let magnitude = fact((s - 1 + q - p) as u64)
        / (fact((s - q - 2 * p + 2) as u64) * fact((q - 1) as u64) * pow2(q - 1) * fact((p - 1) as u64));
    Ok(if (q - p + 1).rem_euclid(2) == 1 { -magnitude } else { magnitude })
}

/// Anything that can supply `ω(n, m, k)` values for the `α`-expansion.
///
/// Implementations return zero outside their domain (negative third index,
/// `n = -1`).
pub trait OmegaSource {
    fn omega(&mut self, n: i64, m: i64, k: i64) -> Result<Rational>;
}

/// Right-hand side of the `s`-step expansion of `ω(n, k-1, k)`:
///
/// ```text
///   Σ_{p=1..⌊(s+1)/2⌋} Σ_{q=1..s+2-2p}  α_s(p,q)     · ω(n-s-1, k+s-p, k+1-q)
/// - Σ_{p=1..⌈(s+1)/2⌉} Σ_{q=1..s+3-2p}  α_{s+1}(p,q) · ω(n-s,   k+s-p, k+1-q)
/// ```
pub fn lemma28_rhs(n: i64, k: i64, s: i64, source: &mut impl OmegaSource) -> Result<Rational> {
    if s < 1 || s > n {
        return Err(Error::Domain(format!("expansion depth s={s} outside 1..={n}")));
    }
    let mut total = Rational::zero();
    for p in 1..=(s + 1) / 2 {
        for q in 1..=s + 2 - 2 * p {
            total += alpha(s, p, q)? * source.omega(n - s - 1, k + s - p, k + 1 - q)?;
        }
    }
    for p in 1..=(s + 2) / 2 {
        for q in 1..=s + 3 - 2 * p {
            total -= alpha(s + 1, p, q)? * source.omega(n - s, k + s - p, k + 1 - q)?;
        }
    }
    Ok(total)
}

/// The triple-sum side of the `i`-independent identity whose value is
/// `2^(n-1) C(n+3k-2, n)`.
pub fn lemma29_lhs(n: i64, k: i64, i: i64) -> Result<Rational> {
    if n < 1 || k < 1 || i < 0 || i > k {
        return Err(Error::Domain(format!("lemma29 needs n>=1, k>=1, 0<=i<=k; got ({n},{k},{i})")));
    }
    let mut total = Rational::zero();
    for p in 1..=(n + 2) / 2 {
        for q in 1..=(n + 3 - 2 * p).min(k + 1 - i) {
            let sign = if (q - p).rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
            let term = sign * pow2(n - p) * inv_factorial(n + 3 - 2 * p - q) * inv_factorial(p - 1)
                * nat_to_rat(&binomial(k - i, q - 1))
                * nat_to_rat(&double_factorial(2 * n + 4 * k - 2 * p - 2 * q + 1 - i)?)
                / nat_to_rat(&double_factorial(4 * k - 3 - i)?);
            total += term;
        }
    }
    Ok(total)
}

pub fn lemma29_check(n: i64, k: i64, i: i64) -> Result<bool> {
    let rhs = pow2(n - 1) * nat_to_rat(&binomial(n + 3 * k - 2, n));
    Ok(lemma29_lhs(n, k, i)? == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, rat_int};

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(0), rat_int(1));
        assert_eq!(gamma(1), rat_int(-1));
        assert_eq!(gamma(2), rat(1, 6).unwrap());
        // the table must be identical however it is reached
        assert_eq!(gamma_table(6)[2], gamma(2));
    }

    #[test]
    fn gamma_defining_relation() {
        for k in 1..=40 {
            assert!(gamma_residual(k).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn delta_values_and_recursion() {
        assert_eq!(delta(0), rat_int(1));
        assert_eq!(delta(1), rat_int(-1));
        assert_eq!(delta(2), rat(1, 3).unwrap());
        let rec = delta_by_recursion(20);
        for (j, d) in rec.iter().enumerate() {
            assert_eq!(*d, delta(j), "j = {j}");
        }
    }

    #[test]
    fn a_closed_examples() {
        assert_eq!(a_closed(2, 1).unwrap(), Nat::from(7u32));
        assert_eq!(a_closed(3, 3).unwrap(), Nat::from(106u32));
        for n in 0..=10 {
            assert_eq!(a_closed(n, 0).unwrap(), double_factorial(2 * n as i64 - 1).unwrap());
        }
        assert!(a_closed(2, 3).is_err());
    }

    #[test]
    fn a_diag_examples() {
        assert_eq!(a_diag(0).unwrap(), Nat::from(1u32));
        assert_eq!(a_diag(4).unwrap(), Nat::from(2575u32));
        assert_eq!(a_diag(6).unwrap(), Nat::from(3_864_040u32));
    }

    #[test]
    fn b_closed_examples() {
        assert_eq!(b_closed(3, 2).unwrap(), Nat::from(106u32));
        assert_eq!(b_closed(6, 6).unwrap(), Nat::from(3_864_040u32));
        for n in 0..=10u64 {
            assert_eq!(b_closed(n as usize, 0).unwrap(), crate::exact_arith::catalan(n));
        }
    }

    #[test]
    fn b_closed_hand_expansion() {
        // γ_2·7!! + γ_1·8!! + γ_0/2·9!!, all times 2^1/2!
        let by_hand = (gamma(2) * rat_int(105) + gamma(1) * rat_int(384) + rat(945, 2).unwrap())
            * rat(2, 2).unwrap();
        assert_eq!(by_hand, rat_int(106));
    }

    #[test]
    fn omega_init_examples() {
        assert_eq!(omega_init(2, 1), rat_int(7));
        assert_eq!(omega_init(3, 0), rat_int(5));
        for k in 1..=8 {
            assert!(omega_init(k - 1, k).is_zero(), "k = {k}");
        }
        assert!(omega_init(1, 5).is_zero());
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(1, 1, 1).unwrap(), rat_int(-1));
        assert_eq!(alpha(2, 1, 1).unwrap(), rat_int(-1));
        assert_eq!(alpha(2, 1, 2).unwrap(), rat_int(1));
        assert!(alpha(1, 1, 2).is_err());
        assert!(alpha(3, 0, 1).is_err());
    }

    #[test]
    fn alpha_step_identities() {
        // the coefficient identities behind the induction on s, p = 1
        for s in 2..10i64 {
            assert_eq!(alpha(s, 1, 1).unwrap(), alpha(s + 1, 1, 1).unwrap());
            assert_eq!(alpha(s, 1, s).unwrap() * rat_int(2 * s - 1), -alpha(s + 1, 1, s + 1).unwrap());
            for q in 2..=s {
                let lhs = -alpha(s, 1, q).unwrap() + alpha(s, 1, q - 1).unwrap() * rat_int(s + q - 2);
                assert_eq!(lhs, -alpha(s + 1, 1, q).unwrap(), "s={s} q={q}");
            }
        }
    }

    #[test]
    fn lemma29_examples() {
        assert!(lemma29_check(1, 1, 0).unwrap());
        assert!(lemma29_check(4, 2, 1).unwrap());
        assert!(lemma29_check(6, 3, 3).unwrap());
        assert!(lemma29_check(1, 0, 0).is_err());
    }

    #[test]
    fn lemma29_full_range() {
        for n in 1..=8 {
            for k in 1..=6 {
                for i in 0..=k {
                    assert!(lemma29_check(n, k, i).unwrap(), "({n},{k},{i})");
                }
            }
        }
    }

    struct Nothing;
    impl OmegaSource for Nothing {
        fn omega(&mut self, _: i64, _: i64, _: i64) -> Result<Rational> {
            Ok(Rational::zero())
        }
    }

    #[test]
    fn lemma28_rejects_bad_depth() {
        assert!(lemma28_rhs(2, 1, 0, &mut Nothing).is_err());
        assert!(lemma28_rhs(2, 1, 3, &mut Nothing).is_err());
        assert!(lemma28_rhs(2, 1, 2, &mut Nothing).unwrap().is_zero());
    }
}
