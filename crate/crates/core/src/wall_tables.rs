//! Memoized tables for `a(n,k)`, `b(n,m,k)`, `b(n,k)` and `ω(n,m,k)`.
//!
//! All tables answer zero outside their index domain, so recurrences can
//! reach past the boundary without special cases.

use num_traits::{One, Zero};

use crate::closed_forms::{omega_init, OmegaSource};
use crate::error::{Error, Result};
use crate::exact_arith::{double_factorial, exact_div, factorial, nat_to_rat, rat_int, to_nat, Nat, Rational};
use crate::memo::MemoStore;

fn key2(n: i64, k: i64) -> (usize, usize, usize) {
    (n as usize, k as usize, 0)
}

fn key3(n: i64, m: i64, k: i64) -> (usize, usize, usize) {
    (n as usize, m as usize, k as usize)
}

/// `a(n,k)` from `a(n,k) = a(n,k-1) + (2n+k-1) a(n-1,k)`, `a(n,0) = (2n-1)!!`.
#[derive(Debug, Default, Clone)]
pub struct ATable {
    memo: MemoStore<Nat>,
}

impl ATable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_dense_threshold(threshold: usize) -> Self {
        Self { memo: MemoStore::with_threshold(threshold) }
    }

    pub fn get(&mut self, n: i64, k: i64) -> Nat {
        if n < 0 || k < 0 || k > n {
            return Nat::zero();
        }
        // fill rows bottom-up so the recursion depth stays bounded
        for row in 0..=n {
            for col in 0..=k.min(row) {
                if self.memo.get(key2(row, col)).is_some() {
                    continue;
                }
                let value = if col == 0 {
                    double_factorial(2 * row - 1).expect("row >= 0")
                } else {
                    let left = self.cached(row, col - 1);
                    let below = self.cached(row - 1, col);
                    left + below * (2 * row + col - 1) as u64
                };
                self.memo.insert(key2(row, col), value);
            }
        }
        self.cached(n, k)
    }

    fn cached(&self, n: i64, k: i64) -> Nat {
        if n < 0 || k < 0 || k > n {
            return Nat::zero();
        }
        self.memo.get(key2(n, k)).cloned().expect("filled before use")
    }

    /// Cells `(n, k, a(n,k))` for `0 <= k <= n <= nmax`, row-major.
    pub fn cells(&mut self, nmax: usize) -> Vec<(usize, usize, Nat)> {
        let mut out = Vec::new();
        for n in 0..=nmax {
            for k in 0..=n {
                out.push((n, k, self.get(n as i64, k as i64)));
            }
        }
        out
    }
}

/// `a(n,k)` along a second path: each column is built from the previous one by
/// `a(n,k) = a(n,k-1) + Σ_{i=k..n-1} Π_{j=i..n-1} (2(j+1)+k-1) · a(i,k-1)`.
pub fn a_alt(n: usize, k: usize) -> Result<Nat> {
    if k == 0 || n < k {
        return Err(Error::Domain(format!("a_alt needs 1 <= k <= n, got n={n}, k={k}")));
    }
    let mut column: Vec<Nat> = (0..=n as i64)
        .map(|i| double_factorial(2 * i - 1).expect("i >= 0"))
        .collect();
    for c in 1..=k {
        let mut next = vec![Nat::zero(); n + 1];
        for row in c..=n {
            let mut acc = column[row].clone();
            let mut prod = Nat::one();
            for i in (c..row).rev() {
                prod *= (2 * (i + 1) + c - 1) as u64;
                acc += &prod * &column[i];
            }
            next[row] = acc;
        }
        column = next;
    }
    Ok(column[n].clone())
}

/// `b(n,m,k)` from `b(n,m,k) = (m-k+1) b(n,m,k-1) + b(n,m-1,k) + b(n-1,m,k)`,
/// applied for every `n >= 1` with `b(0,0,0) = 1`.
#[derive(Debug, Default, Clone)]
pub struct B3Table {
    memo: MemoStore<Nat>,
}

impl B3Table {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_dense_threshold(threshold: usize) -> Self {
        Self { memo: MemoStore::with_threshold(threshold) }
    }

    pub fn b3(&mut self, n: i64, m: i64, k: i64) -> Nat {
        if n < 0 || m < 0 || k < 0 || k > m || m > n {
            return Nat::zero();
        }
        for row in 0..=n {
            for mid in 0..=m.min(row) {
                for top in 0..=k.min(mid) {
                    if self.memo.get(key3(row, mid, top)).is_some() {
                        continue;
                    }
                    let value = if row == 0 {
                        Nat::one()
                    } else {
                        self.cached(row, mid, top - 1) * (mid - top + 1) as u64
                            + self.cached(row, mid - 1, top)
                            + self.cached(row - 1, mid, top)
                    };
                    self.memo.insert(key3(row, mid, top), value);
                }
            }
        }
        self.cached(n, m, k)
    }

    fn cached(&self, n: i64, m: i64, k: i64) -> Nat {
        if n < 0 || m < 0 || k < 0 || k > m || m > n {
            return Nat::zero();
        }
        self.memo.get(key3(n, m, k)).cloned().expect("filled before use")
    }

    /// `b(n,k) = b(n,n,k)`
    pub fn b(&mut self, n: i64, k: i64) -> Nat {
        self.b3(n, n, k)
    }

    /// Cells `(n, k, b(n,k))` for `0 <= k <= n <= nmax`, row-major.
    pub fn b_cells(&mut self, nmax: usize) -> Vec<(usize, usize, Nat)> {
        let mut out = Vec::new();
        for n in 0..=nmax {
            for k in 0..=n {
                out.push((n, k, self.b(n as i64, k as i64)));
            }
        }
        out
    }

    /// Cells `(n, m, k, b(n,m,k))` for `0 <= k <= m <= n <= nmax`.
    pub fn b3_cells(&mut self, nmax: usize) -> Vec<(usize, usize, usize, Nat)> {
        let mut out = Vec::new();
        for n in 0..=nmax {
            for m in 0..=n {
                for k in 0..=m {
                    out.push((n, m, k, self.b3(n as i64, m as i64, k as i64)));
                }
            }
        }
        out
    }
}

/// Hook-length value `b(n,m,0) = (n+m)! (n-m+1) / (m! (n+1)!)`.
pub fn b3_hook(n: usize, m: usize) -> Result<Nat> {
    if m > n {
        return Err(Error::Domain(format!("b3_hook needs m <= n, got n={n}, m={m}")));
    }
    let num = factorial((n + m) as u64) * (n - m + 1) as u64;
    let den = factorial(m as u64) * factorial(n as u64 + 1);
    exact_div(&num, &den, &format!("b3_hook({n},{m})"))
}

/// `b(n,k)` through the two-term recurrence with rational coefficients,
/// `b(n,k) = (n-k+2)/2 · b(n,k-1) + 2(2n+k-1)/(n-k+1) · b(n-1,k)`.
#[derive(Debug, Default, Clone)]
pub struct BCorTable {
    memo: MemoStore<Nat>,
}

impl BCorTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: i64, k: i64) -> Result<Nat> {
        if n < 0 || k < 0 || k > n {
            return Ok(Nat::zero());
        }
        for row in 0..=n {
            for col in 0..=k.min(row) {
                if self.memo.get(key2(row, col)).is_some() {
                    continue;
                }
                let value = if row == 0 {
                    Nat::one()
                } else {
                    let left = nat_to_rat(&self.cached(row, col - 1));
                    let below = nat_to_rat(&self.cached(row - 1, col));
                    let r = rat_int(row - col + 2) / rat_int(2) * left
                        + rat_int(2 * (2 * row + col - 1)) / rat_int(row - col + 1) * below;
                    to_nat(&r, &format!("b_cor_rec({row},{col})"))?
                };
                self.memo.insert(key2(row, col), value);
            }
        }
        Ok(self.cached(n, k))
    }

    fn cached(&self, n: i64, k: i64) -> Nat {
        if n < 0 || k < 0 || k > n {
            return Nat::zero();
        }
        self.memo.get(key2(n, k)).cloned().expect("filled before use")
    }
}

/// `ω(n,m,k)` from
/// `ω(n,m,k) = ω(n-1,m+1,k) - (m-k+2) ω(n-1,m+1,k-1) - ω(n-2,m+1,k)`,
/// closed at `n = 0` by [`omega_init`] and at `n = -1` by zero.
///
/// Values are kept as rationals; [`OmegaTable::get`] insists on integers.
#[derive(Debug, Default, Clone)]
pub struct OmegaTable {
    memo: MemoStore<Rational>,
}

impl OmegaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn raw(&mut self, n: i64, m: i64, k: i64) -> Rational {
        if n < 0 || m < 0 || k < 0 || k > m + 1 {
            return Rational::zero();
        }
        if n == 0 {
            return omega_init(m as usize, k as usize);
        }
        if n == 1 && m == 0 {
            return if k == 0 { Rational::one() } else { Rational::zero() };
        }
        if let Some(v) = self.memo.get(key3(n, m, k)) {
            return v.clone();
        }
        let value = self.raw(n - 1, m + 1, k)
            - rat_int(m - k + 2) * self.raw(n - 1, m + 1, k - 1)
            - self.raw(n - 2, m + 1, k);
        self.memo.insert(key3(n, m, k), value.clone());
        value
    }

    pub fn get(&mut self, n: i64, m: i64, k: i64) -> Result<Nat> {
        to_nat(&self.raw(n, m, k), &format!("omega({n},{m},{k})"))
    }
}

impl OmegaSource for OmegaTable {
    fn omega(&mut self, n: i64, m: i64, k: i64) -> Result<Rational> {
        Ok(self.raw(n, m, k))
    }
}

/// `ω(n,m,k)` read off the `b(n+m,m,k)` table.
pub struct B3Omega<'a>(pub &'a mut B3Table);

impl OmegaSource for B3Omega<'_> {
    fn omega(&mut self, n: i64, m: i64, k: i64) -> Result<Rational> {
        if n < 0 {
            return Ok(Rational::zero());
        }
        Ok(nat_to_rat(&self.0.b3(n + m, m, k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{binomial, catalan};

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn a_rec_examples() {
        let mut a = ATable::new();
        assert_eq!(a.get(2, 1), nat(7));
        assert_eq!(a.get(4, 2), nat(1515));
        assert_eq!(a.get(6, 6), nat(3_864_040));
        assert_eq!(a.get(2, 3), nat(0));
    }

    #[test]
    fn a_table_boundaries() {
        let mut a = ATable::new();
        for n in 0..=12 {
            assert_eq!(a.get(n, 0), double_factorial(2 * n - 1).unwrap());
            assert!(a.get(n, n + 1).is_zero());
        }
        let first = a.get(9, 4);
        assert_eq!(a.get(9, 4), first);
    }

    #[test]
    fn a_alt_examples() {
        assert_eq!(a_alt(2, 1).unwrap(), nat(7));
        assert_eq!(a_alt(3, 2).unwrap(), nat(106));
        assert_eq!(a_alt(5, 3).unwrap(), nat(54120));
        assert!(a_alt(3, 0).is_err());
    }

    #[test]
    fn a_alt_matches_recurrence() {
        let mut a = ATable::new();
        for n in 1..=20 {
            for k in 1..=n {
                assert_eq!(a_alt(n, k).unwrap(), a.get(n as i64, k as i64), "({n},{k})");
            }
        }
    }

    #[test]
    fn b3_examples() {
        let mut b = B3Table::new();
        assert_eq!(b.b3(1, 1, 1), nat(1));
        assert_eq!(b.b3(2, 1, 0), nat(2));
        assert_eq!(b.b3(2, 1, 1), nat(3));
        assert!(b.b3(2, 3, 1).is_zero());
        assert!(b.b3(3, 1, 2).is_zero());
    }

    #[test]
    fn b_examples() {
        let mut b = B3Table::new();
        assert_eq!(b.b(3, 1), nat(38));
        assert_eq!(b.b(4, 2), nat(1010));
        assert_eq!(b.b(5, 4), nat(87595));
    }

    #[test]
    fn b_first_column_is_catalan() {
        let mut b = B3Table::new();
        for n in 0..=30 {
            assert_eq!(b.b(n, 0), catalan(n as u64));
            assert_eq!(b.b(n, 0), binomial(2 * n, n) / (n as u64 + 1));
        }
    }

    #[test]
    fn hook_length_base() {
        let mut b = B3Table::new();
        assert_eq!(b3_hook(2, 2).unwrap(), nat(2));
        assert_eq!(b3_hook(2, 1).unwrap(), nat(2));
        assert_eq!(b3_hook(9, 7).unwrap(), b.b3(9, 7, 0));
        assert!(b3_hook(1, 2).is_err());
        for n in 0..=15 {
            for m in 0..=n {
                assert_eq!(b3_hook(n, m).unwrap(), b.b3(n as i64, m as i64, 0));
            }
        }
    }

    #[test]
    fn main_identity() {
        let mut a = ATable::new();
        let mut b = B3Table::new();
        for n in 0..=30i64 {
            for k in 0..=n {
                let lhs = a.get(n, k) << (n - k) as usize;
                let rhs = factorial((n - k + 1) as u64) * b.b(n, k);
                assert_eq!(lhs, rhs, "({n},{k})");
            }
        }
    }

    #[test]
    fn b_cor_rec_examples() {
        let mut c = BCorTable::new();
        assert_eq!(c.get(2, 1).unwrap(), nat(7));
        assert_eq!(c.get(1, 0).unwrap(), nat(1));
        assert_eq!(c.get(6, 3).unwrap(), nat(382_865));
    }

    #[test]
    fn b_cor_rec_matches_table() {
        let mut c = BCorTable::new();
        let mut b = B3Table::new();
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(c.get(n, k).unwrap(), b.b(n, k));
            }
        }
    }

    #[test]
    fn omega_examples() {
        let mut w = OmegaTable::new();
        assert_eq!(w.get(0, 2, 1).unwrap(), nat(7));
        assert_eq!(w.get(1, 1, 1).unwrap(), nat(3));
        assert_eq!(w.get(1, 0, 0).unwrap(), nat(1));
        assert!(w.get(1, 0, 2).unwrap().is_zero());
        assert!(w.get(5, 2, 3).unwrap().is_zero());
    }

    #[test]
    fn omega_equals_shifted_b3() {
        let mut w = OmegaTable::new();
        let mut b = B3Table::new();
        for total in 0..=14i64 {
            for m in 0..=total {
                let n = total - m;
                for k in 0..=m + 1 {
                    assert_eq!(w.get(n, m, k).unwrap(), b.b3(n + m, m, k), "({n},{m},{k})");
                }
            }
        }
    }

    #[test]
    fn omega_vanishes_below_diagonal() {
        let mut w = OmegaTable::new();
        for n in 0..=10 {
            for k in 1..=6 {
                assert!(w.get(n, k - 1, k).unwrap().is_zero(), "({n},{k})");
            }
        }
    }

    #[test]
    fn tables_reproduce_printed_rows() {
        let table1: [&[u64]; 7] = [
            &[1],
            &[1, 1],
            &[3, 7, 7],
            &[15, 57, 106, 106],
            &[105, 561, 1515, 2575, 2575],
            &[945, 6555, 23220, 54120, 87595, 87595],
            &[10395, 89055, 390915, 1148595, 2462520, 3864040, 3864040],
        ];
        let table2: [&[u64]; 7] = [
            &[1],
            &[1, 1],
            &[2, 7, 7],
            &[5, 38, 106, 106],
            &[14, 187, 1010, 2575, 2575],
            &[42, 874, 7740, 36080, 87595, 87595],
            &[132, 3958, 52122, 382865, 1641680, 3864040, 3864040],
        ];
        let mut a = ATable::new();
        for (n, row) in table1.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(a.get(n as i64, k as i64), nat(*v), "a({n},{k})");
            }
        }
        let mut b = B3Table::new();
        for (n, row) in table2.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(b.b(n as i64, k as i64), nat(*v), "b({n},{k})");
            }
        }
    }
}
