//! Tree-child network counts `|TC(n,k)|` (`n` leaves, `k` reticulations).
//!
//! Six exact routes are kept: the `a` table, the `b` table, two recurrences
//! in `n`, a recurrence in `k`, and the `δ` sum. [`tc_asym_ln`] gives the
//! large-`n` expansion.

use num_traits::{One, Zero};

use crate::closed_forms::delta;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, double_factorial, exact_div, factorial, ln_nat, nat_to_rat, rat_int, to_nat, Nat, Rational};
use crate::memo::MemoStore;
use crate::wall_tables::{ATable, B3Table};

/// Holds the tables every route draws on.
#[derive(Debug, Default)]
pub struct TreeChildCounter {
    a: ATable,
    b: B3Table,
    rec: MemoStore<Nat>,
    sum: MemoStore<Nat>,
    chain: MemoStore<Nat>,
}

fn out_of_range(n: usize, k: usize) -> bool {
    n == 0 || k >= n
}

impl TreeChildCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n!/(n-k)! · a(n-1, k)`
    pub fn tc(&mut self, n: usize, k: usize) -> Nat {
        if out_of_range(n, k) {
            return Nat::zero();
        }
        let falling = (n - k + 1..=n).fold(Nat::one(), |acc, i| acc * i as u64);
        falling * self.a.get(n as i64 - 1, k as i64)
    }

    /// `n! · b(n-1, k) / 2^(n-k-1)`
    pub fn tc_via_b(&mut self, n: usize, k: usize) -> Result<Nat> {
        if out_of_range(n, k) {
            return Ok(Nat::zero());
        }
        let num = factorial(n as u64) * self.b.b(n as i64 - 1, k as i64);
        exact_div(&num, &(Nat::one() << (n - k - 1)), &format!("tc_via_b({n},{k})"))
    }

    /// `(n-k) TC(n,k) = (n+1-k)(n-k) TC(n,k-1) + n(2n+k-3) TC(n-1,k)`, `TC(1,0) = 1`.
    pub fn tc_rec(&mut self, n: usize, k: usize) -> Result<Nat> {
        if out_of_range(n, k) {
            return Ok(Nat::zero());
        }
        for row in 1..=n {
            for col in 0..=k.min(row - 1) {
                if self.rec.get((row, col, 0)).is_some() {
                    continue;
                }
                let value = if row == 1 {
                    Nat::one()
                } else {
                    let left = if col == 0 { Nat::zero() } else { self.rec_cached(row, col - 1) };
                    let below = self.rec_cached(row - 1, col);
                    let num = left * ((row + 1 - col) * (row - col)) as u64
                        + below * (row * (2 * row + col - 3)) as u64;
                    exact_div(&num, &Nat::from(row - col), &format!("tc_rec({row},{col})"))?
                };
                self.rec.insert((row, col, 0), value);
            }
        }
        Ok(self.rec_cached(n, k))
    }

    fn rec_cached(&self, n: usize, k: usize) -> Nat {
        if out_of_range(n, k) {
            return Nat::zero();
        }
        self.rec.get((n, k, 0)).cloned().expect("filled before use")
    }

    /// `(n-k)! TC(n,k) = Σ_{i=0..k} n(2n+i-3)(n-1-i)! TC(n-1,i)`, `TC(1,0) = 1`.
    pub fn tc_sum(&mut self, n: usize, k: usize) -> Result<Nat> {
        if out_of_range(n, k) {
            return Ok(Nat::zero());
        }
        if n == 1 {
            return Ok(Nat::one());
        }
        if let Some(v) = self.sum.get((n, k, 0)) {
            return Ok(v.clone());
        }
        let mut total = Nat::zero();
        for i in 0..=k.min(n - 2) {
            let prev = self.tc_sum(n - 1, i)?;
            total += prev * (n * (2 * n + i - 3)) as u64 * factorial((n - 1 - i) as u64);
        }
        let value = exact_div(&total, &factorial((n - k) as u64), &format!("tc_sum({n},{k})"))?;
        self.sum.insert((n, k, 0), value.clone());
        Ok(value)
    }

    /// `TC(k+m+1, k) = Σ_{ℓ=0..m} (ℓ+2) [Π_{i=ℓ+1..m} (1 + k/(i+1))(2i+3k-1)] TC(k+ℓ+1, k-1)`,
    /// recursing in `k` down to `TC(n,0) = (2n-3)!!`.
    pub fn tc_chain(&mut self, k: usize, m: usize) -> Result<Nat> {
        if k == 0 {
            return Err(Error::Domain("tc_chain needs k >= 1".into()));
        }
        if let Some(v) = self.chain.get((k, m, 0)) {
            return Ok(v.clone());
        }
        let mut total = Rational::zero();
        for l in 0..=m {
            let mut product = rat_int(l as i64 + 2);
            for i in l + 1..=m {
                product *= (rat_int(1) + rat_int(k as i64) / rat_int(i as i64 + 1)) * rat_int((2 * i + 3 * k) as i64 - 1);
            }
            let lower = if k == 1 {
                double_factorial(2 * (l as i64 + 2) - 3)?
            } else {
                self.tc_chain(k - 1, l + 1)?
            };
            total += product * nat_to_rat(&lower);
        }
        let value = to_nat(&total, &format!("tc_chain({k},{m})"))?;
        self.chain.insert((k, m, 0), value.clone());
        Ok(value)
    }

    /// `C(n,k) Σ_{i=0..k} C(k,i) (2n+2k-i-3)!! δ_i`
    pub fn tc_closed(&mut self, n: usize, k: usize) -> Result<Nat> {
        if out_of_range(n, k) {
            return Ok(Nat::zero());
        }
        let (ni, ki) = (n as i64, k as i64);
        let mut total = Rational::zero();
        for i in 0..=ki {
            let weight = binomial(ki, i) * double_factorial(2 * ni + 2 * ki - i - 3)?;
            total += nat_to_rat(&weight) * delta(i as usize);
        }
        to_nat(&(nat_to_rat(&binomial(ni, ki)) * total), &format!("tc_closed({n},{k})"))
    }
}

/// Sum with a running compensation term.
fn compensated_sum(terms: &[f64]) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &x in terms {
        let t = sum + x;
        comp += if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
        sum = t;
    }
    sum + comp
}

/// The bracketed correction factor of the expansion, through `(2n)^(-2)`.
pub fn tc_asym_correction(n: usize, k: usize) -> f64 {
    let x = 2.0 * n as f64;
    let k = k as f64;
    let c = (std::f64::consts::PI / 2.0).sqrt();
    compensated_sum(&[
        1.0,
        -c * k * x.powf(-0.5),
        (14.0 * k * k - 26.0 * k + 11.0) / 12.0 / x,
        -c * k * (31.0 * k * k - 93.0 * k + 70.0) / 48.0 * x.powf(-1.5),
        (2900.0 * k.powi(4) - 14376.0 * k.powi(3) + 25264.0 * k * k - 19332.0 * k + 5565.0) / 6048.0 / (x * x),
    ])
}

/// Natural log of `C(n,k) √2 e^(-n) (2n)^(n+k-1) · correction`.
pub fn tc_asym_ln(n: usize, k: usize) -> f64 {
    let nf = n as f64;
    ln_nat(&binomial(n as i64, k as i64)) + 0.5 * std::f64::consts::LN_2 - nf
        + (nf + k as f64 - 1.0) * (2.0 * nf).ln()
        + tc_asym_correction(n, k).ln()
}

/// The expansion itself; infinite once it leaves the `f64` range.
pub fn tc_asym(n: usize, k: usize) -> f64 {
    tc_asym_ln(n, k).exp()
}

/// `|asym / exact - 1|`, formed from logarithms so huge counts are fine.
pub fn tc_asym_relative_error(n: usize, k: usize, exact: &Nat) -> f64 {
    (tc_asym_ln(n, k) - ln_nat(exact)).exp_m1().abs()
}
