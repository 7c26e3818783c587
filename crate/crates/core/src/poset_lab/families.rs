//! The poset families `F`, `F̃`, `D`, `U`, `R` and the counts attached to them.
//!
//! Columns are 1-based. Every family has a middle chain `m_1 → … → m_n`; an
//! index set `I` hangs one pendant on each `m_i` with `i ∈ I`. Elements are
//! labeled pendants first (left to right), then the middle chain, then the
//! top chain.

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::poset::{count_linear_extensions, Poset};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, exact_div, factorial, Nat};

fn check_index_set(n: usize, set: &[usize], lo: usize) -> Result<()> {
    if set.iter().any(|&i| i <= lo || i > n) || set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidPoset(format!(
            "index set {set:?} must increase strictly within {}..={n}",
            lo + 1
        )));
    }
    Ok(())
}

/// Labels for `n` columns placed after `pendants` pendant labels.
struct Layout {
    pendants: usize,
    n: usize,
}

impl Layout {
    fn m(&self, col: usize) -> usize {
        self.pendants + col - 1
    }

    fn t(&self, col: usize) -> usize {
        self.pendants + self.n + col - 1
    }

    fn chain(&self, label: impl Fn(usize) -> usize, from: usize, to: usize) -> Vec<(usize, usize)> {
        (from..to).map(|c| (label(c), label(c + 1))).collect()
    }
}

/// `F(n; I)`: the middle chain with a pendant `p_i → m_i` for each `i ∈ I`.
pub fn build_f(n: usize, set: &[usize]) -> Result<Poset> {
    check_index_set(n, set, 0)?;
    let l = Layout { pendants: set.len(), n };
    let mut covers = l.chain(|c| l.m(c), 1, n);
    covers.extend(set.iter().enumerate().map(|(p, &i)| (p, l.m(i))));
    Poset::new(set.len() + n, covers)
}

/// `F̃(n; I)`: `F(n; I)` plus a top chain `t_1 → … → t_n` feeding `t_n → m_n`.
pub fn build_ftilde(n: usize, set: &[usize]) -> Result<Poset> {
    check_index_set(n, set, 0)?;
    let l = Layout { pendants: set.len(), n };
    let mut covers = l.chain(|c| l.m(c), 1, n);
    covers.extend(set.iter().enumerate().map(|(p, &i)| (p, l.m(i))));
    covers.extend(l.chain(|c| l.t(c), 1, n));
    if n > 0 {
        covers.push((l.t(n), l.m(n)));
    }
    Poset::new(set.len() + 2 * n, covers)
}

/// `D(n; I)`: pendants `p_i → m_i`, both chains, and `m_j → t_j` for every column.
pub fn build_d(n: usize, set: &[usize]) -> Result<Poset> {
    check_index_set(n, set, 0)?;
    let l = Layout { pendants: set.len(), n };
    let mut covers = l.chain(|c| l.m(c), 1, n);
    covers.extend(set.iter().enumerate().map(|(p, &i)| (p, l.m(i))));
    covers.extend(l.chain(|c| l.t(c), 1, n));
    covers.extend((1..=n).map(|c| (l.m(c), l.t(c))));
    Poset::new(set.len() + 2 * n, covers)
}

/// `U(n; I)`: like `D(n; I)` but each pendant sits above its column, `m_i → p_i`.
pub fn build_u(n: usize, set: &[usize]) -> Result<Poset> {
    check_index_set(n, set, 0)?;
    let l = Layout { pendants: set.len(), n };
    let mut covers = l.chain(|c| l.m(c), 1, n);
    covers.extend(set.iter().enumerate().map(|(p, &i)| (l.m(i), p)));
    covers.extend(l.chain(|c| l.t(c), 1, n));
    covers.extend((1..=n).map(|c| (l.m(c), l.t(c))));
    Poset::new(set.len() + 2 * n, covers)
}

/// `R`: `F̃(j; I_left)` on columns `1..=j` joined to `D(n-j; I_right - j)` on
/// columns `j+1..=n` by the cover `m_j → m_{j+1}`.
pub fn build_r(n: usize, left: &[usize], j: usize, right: &[usize]) -> Result<Poset> {
    if j == 0 || j > n {
        return Err(Error::InvalidPoset(format!("split column {j} outside 1..={n}")));
    }
    check_index_set(j, left, 0)?;
    check_index_set(n, right, j)?;
    let l = Layout { pendants: left.len() + right.len(), n };
    let mut covers = l.chain(|c| l.m(c), 1, n);
    covers.extend(left.iter().chain(right).enumerate().map(|(p, &i)| (p, l.m(i))));
    covers.extend(l.chain(|c| l.t(c), 1, j));
    covers.push((l.t(j), l.m(j)));
    covers.extend(l.chain(|c| l.t(c), j + 1, n));
    covers.extend((j + 1..=n).map(|c| (l.m(c), l.t(c))));
    Poset::new(l.pendants + 2 * n, covers)
}

/// `Σ_{|I| = k} e(build(n, I))` over all `k`-subsets of `1..=n`.
pub fn family_sum(n: usize, k: usize, build: impl Fn(usize, &[usize]) -> Result<Poset> + Sync) -> Result<Nat> {
    if k > n {
        return Ok(Nat::zero());
    }
    let sets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    sets.par_iter()
        .map(|set| count_linear_extensions(&build(n, set)?))
        .try_reduce(Nat::zero, |a, b| Ok(a + b))
}

/// `f(n,k) = (n-k+1)(n-k+2)…(n+k) / (2^k k!)`, zero when `k > n`.
pub fn f_closed(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let num = (n - k + 1..=n + k).fold(Nat::one(), |acc, i| acc * i as u64);
    let den = factorial(k as u64) << k;
    exact_div(&num, &den, "f_closed").expect("the product of 2k consecutive integers is divisible by 2^k k!")
}

/// `f(n,k) = Σ_{i_1 < … < i_k} i_1 (i_2+1) … (i_k+k-1)`.
pub fn f_sum(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    // row[i]: sum over sequences of the current length whose last entry is at most i
    let mut row = vec![Nat::one(); n + 1];
    for r in 1..=k {
        let mut next = vec![Nat::zero(); n + 1];
        for i in 1..=n {
            next[i] = &next[i - 1] + &row[i - 1] * (i + r - 1) as u64;
        }
        row = next;
    }
    row[n].clone()
}

/// `f̃(n,k) = C(2n+k-1, n) · f(n,k)`.
pub fn ftilde(n: usize, k: usize) -> Nat {
    binomial((2 * n + k) as i64 - 1, n as i64) * f_closed(n, k)
}
