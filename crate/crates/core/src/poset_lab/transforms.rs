//! Alternating-sum transforms between `b`, `u` and `r`, and the closed
//! recurrence for `b(n,k)` that falls out of them.

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::families::{build_r, f_closed, ftilde};
use super::poset::count_linear_extensions;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, int_to_nat, inv_factorial, nat_to_int, nat_to_rat, pow2, to_nat, Int, Nat};
use crate::memo::MemoStore;
use crate::wall_tables::B3Table;

fn check(n: usize, k: usize, what: &str) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("{what} needs 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// `Σ_{i=0..k} (-1)^i C(2n+k, k-i) C(n-i, k-i) (k-i)! · row[i]`, the kernel
/// shared by both directions of the `b ↔ u` transform.
fn alternating(n: usize, k: usize, row: &[Nat]) -> Int {
    let (n, k) = (n as i64, k as i64);
    (0..=k).fold(Int::zero(), |acc, i| {
        let weight = binomial(2 * n + k, k - i) * binomial(n - i, k - i) * factorial((k - i) as u64);
        let term = nat_to_int(&(weight * &row[i as usize]));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `u(n,k) = Σ_i (-1)^i C(2n+k, k-i) C(n-i, k-i) (k-i)! · b(n,i)`.
pub fn u_from_b(n: usize, k: usize, table: &mut B3Table) -> Result<Nat> {
    check(n, k, "u_from_b")?;
    let row: Vec<Nat> = (0..=k).map(|i| table.b(n as i64, i as i64)).collect();
    int_to_nat(&alternating(n, k, &row), &format!("u({n},{k})"))
}

/// The inverse transform, reading `u(n,0..=k)` from `u_row`.
pub fn b_from_u_row(n: usize, k: usize, u_row: &[Nat]) -> Result<Nat> {
    check(n, k, "b_from_u")?;
    if u_row.len() <= k {
        return Err(Error::Domain(format!("b_from_u({n},{k}) needs u({n},0..={k})")));
    }
    int_to_nat(&alternating(n, k, u_row), &format!("b_from_u({n},{k})"))
}

/// `b(n,k)` recovered from the `u` values, which are themselves taken from `b`.
pub fn b_from_u(n: usize, k: usize, table: &mut B3Table) -> Result<Nat> {
    let u_row = (0..=k).map(|i| u_from_b(n, i, table)).collect::<Result<Vec<_>>>()?;
    b_from_u_row(n, k, &u_row)
}

/// `r(n,k) = Σ_{j=1..n} Σ_{s=0..k} f̃(j, k-s) · Σ_i (-1)^i C(2n+k, s-i) C(n-j-i, s-i) (s-i)! · u(n-j, i)`.
pub fn r_sum(n: usize, k: usize, table: &mut B3Table) -> Result<Nat> {
    check(n, k, "r_sum")?;
    let (ni, ki) = (n as i64, k as i64);
    let mut total = Int::zero();
    for j in 1..=n {
        for s in 0..=k {
            let left = ftilde(j, k - s);
            if left.is_zero() {
                continue;
            }
            let mut inner = Int::zero();
            for i in 0..=s.min(n - j) {
                let weight = binomial(2 * ni + ki, (s - i) as i64)
                    * binomial(ni - j as i64 - i as i64, (s - i) as i64)
                    * factorial((s - i) as u64);
                let term = nat_to_int(&(weight * u_from_b(n - j, i, table)?));
                inner += if i % 2 == 0 { term } else { -term };
            }
            total += nat_to_int(&left) * inner;
        }
    }
    int_to_nat(&total, &format!("r({n},{k})"))
}

/// `r(n,k)` by summing `e(R)` over every split column `j`, every split `s`
/// and every choice of `k-s` pendants left of `j` and `s` to its right.
pub fn r_brute(n: usize, k: usize) -> Result<Nat> {
    check(n, k, "r_brute")?;
    let mut jobs = Vec::new();
    for j in 1..=n {
        for s in 0..=k {
            for left in (1..=j).combinations(k - s) {
                for right in (j + 1..=n).combinations(s) {
                    jobs.push((j, left.clone(), right));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|(j, left, right)| count_linear_extensions(&build_r(n, left, *j, right)?))
        .try_reduce(Nat::zero, |a, b| Ok(a + b))
}

/// `C(2n+k, n) f(n,k) - r(n,k)`, the count of `D`-posets by the position of
/// the rightmost up arrow.
pub fn b_by_decomposition(n: usize, k: usize, table: &mut B3Table) -> Result<Nat> {
    check(n, k, "b_by_decomposition")?;
    let whole = nat_to_int(&(binomial((2 * n + k) as i64, n as i64) * f_closed(n, k)));
    int_to_nat(&(whole - nat_to_int(&r_sum(n, k, table)?)), &format!("b_by_decomposition({n},{k})"))
}

/// `b(n,k)` from the closed recurrence in `f` and the earlier rows of `b`,
/// starting from `b(0,0) = 1` and nothing else.
#[derive(Debug, Default, Clone)]
pub struct MonsterTable {
    memo: MemoStore<Nat>,
}

impl MonsterTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: usize, k: usize) -> Result<Nat> {
        if k > n {
            return Ok(Nat::zero());
        }
        if n == 0 {
            return Ok(Nat::one());
        }
        if let Some(v) = self.memo.get((n, k, 0)) {
            return Ok(v.clone());
        }
        let (ni, ki) = (n as i64, k as i64);
        let mut total = nat_to_rat(&(binomial(2 * ni + ki, ni) * f_closed(n, k)));
        for j in 1..=ni {
            for s in 0..=ki {
                if j - ki + s < 0 || ni - j - s < 0 {
                    continue;
                }
                for m in 0..=s {
                    let coeff = nat_to_rat(&(factorial((ni - j - m) as u64) * factorial((ki + 2 * j - m - 1) as u64)))
                        * Int::from(j + ki - s)
                        * pow2(s - ki)
                        * inv_factorial(j - ki + s)
                        * inv_factorial(ki - s)
                        * inv_factorial(j)
                        * inv_factorial(s - m)
                        * inv_factorial(ni - j - s);
                    total -= coeff * nat_to_rat(&self.get((ni - j) as usize, m as usize)?);
                }
            }
        }
        let value = to_nat(&total, &format!("b_monster({n},{k})"))?;
        self.memo.insert((n, k, 0), value.clone());
        Ok(value)
    }
}

/// `b(n,k)` through [`MonsterTable`].
pub fn b_monster(n: usize, k: usize) -> Result<Nat> {
    if n == 0 {
        return Err(Error::Domain("b_monster needs n >= 1".into()));
    }
    MonsterTable::new().get(n, k)
}

#[cfg(test)]
mod tests {
    use super::super::families::{build_u, family_sum};
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn u_examples() {
        let mut t = B3Table::new();
        for n in 0..=6 {
            assert_eq!(u_from_b(n, 0, &mut t).unwrap(), t.b(n as i64, 0));
        }
        assert_eq!(u_from_b(2, 1, &mut t).unwrap(), nat(13));
        assert_eq!(b_from_u(2, 1, &mut t).unwrap(), nat(7));
        assert_eq!(family_sum(2, 1, build_u).unwrap(), nat(13));
    }

    #[test]
    fn r_examples() {
        let mut t = B3Table::new();
        for (n, k) in [(2, 1), (1, 0), (3, 2)] {
            assert_eq!(r_sum(n, k, &mut t).unwrap(), r_brute(n, k).unwrap(), "({n},{k})");
        }
    }

    #[test]
    fn monster_examples() {
        assert_eq!(b_monster(2, 1).unwrap(), nat(7));
        assert_eq!(b_monster(4, 3).unwrap(), nat(2575));
        assert_eq!(b_monster(6, 2).unwrap(), nat(52122));
        assert!(b_monster(0, 0).is_err());
    }

    #[test]
    fn decomposition_small() {
        let mut t = B3Table::new();
        for n in 1..=5 {
            for k in 0..=n {
                assert_eq!(b_by_decomposition(n, k, &mut t).unwrap(), t.b(n as i64, k as i64));
            }
        }
    }
}
