//! Truncated power series with exact coefficients, and the three routes to
//! `D_k(t) = Σ_n b(n,k) t^n`.
//!
//! Bivariate series `B_k(x,t) = Σ b(n,m,k) x^(n-m) t^m` are stored on the
//! triangle `j + m <= N` (`j` the power of `x`): the kernel scheme divides by
//! `t` once per `x`-level, so each level is known to one order less than the
//! previous one.

use std::fmt;

use num_traits::{One, Zero};

use crate::closed_forms::gamma;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, catalan, factorial, nat_to_rat, pow2, rat, rat_int, Rational};
use crate::wall_tables::B3Table;

/// `Σ_{n=0..N} c_n t^n`; the order is `coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<Rational>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        Self { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_coeffs(values.iter().map(|&v| rat_int(v)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`, zero past the truncation.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `t · d/dt`
    pub fn t_deriv(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c * rat_int(n as i64)).collect(),
        }
    }

    /// Multiplication by `t^s`, keeping the order.
    pub fn shift(&self, s: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + s > self.order() {
                break;
            }
            out.coeffs[i + s] = c.clone();
        }
        out
    }

    /// Division by `t`; the order drops by one. Fails unless the constant
    /// term vanishes.
    pub fn div_t(&self, context: &str) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::InexactDivision { context: context.to_string() });
        }
        Ok(Self { coeffs: self.coeffs[1..].to_vec() })
    }

    /// `self(inner(t))` for an inner series with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain("composition needs an inner series without constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut out = Self::zero(order);
        let mut power = Self::one(order);
        for c in self.coeffs.iter().take(order + 1) {
            out = out.add(&power.scale(c));
            power = power.mul(&inner);
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Bivariate series on the triangle `j + m <= N`; row `j` is the coefficient
/// of `x^j` as a series in `t` of order `N - j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XTSeries {
    rows: Vec<TSeries>,
}

impl XTSeries {
    pub fn zero(order: usize) -> Self {
        Self { rows: (0..=order).map(|j| TSeries::zero(order - j)).collect() }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0] = TSeries::one(order);
        s
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, j: usize) -> &TSeries {
        &self.rows[j]
    }

    /// Coefficient of `x^j t^m`, zero off the triangle.
    pub fn get(&self, j: usize, m: usize) -> Rational {
        self.rows.get(j).map(|r| r.coeff(m)).unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, j: usize, m: usize, value: Rational) {
        assert!(j + m <= self.order(), "({j},{m}) lies outside the truncation triangle");
        self.rows[j].coeffs[m] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(TSeries::is_zero)
    }

    /// `(j, m, coefficient)` over the whole triangle, `j` outermost.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(j, r)| r.coeffs.iter().enumerate().map(move |(m, c)| (j, m, c)))
    }
}

/// `C(t) = Σ Cat(n) t^n`
pub fn catalan_series(order: usize) -> TSeries {
    TSeries::from_coeffs((0..=order as u64).map(|n| nat_to_rat(&catalan(n))).collect())
}

/// `X_2(t) = t C(t)`, the small root of `x - x² - t`.
pub fn x2_series(order: usize) -> TSeries {
    catalan_series(order).shift(1)
}

/// `(1 - 4t)^(-α)` from the term ratio `c_{n+1} = c_n · 4(α+n)/(n+1)`.
pub fn neg_pow_series(alpha: &Rational, order: usize) -> TSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    for n in 0..=order as i64 {
        coeffs.push(c.clone());
        c = c * rat_int(4) * (alpha + rat_int(n)) / rat_int(n + 1);
    }
    TSeries::from_coeffs(coeffs)
}

/// `D_k` read off the `b` table.
pub fn dk_from_table(k: usize, order: usize, table: &mut B3Table) -> TSeries {
    TSeries::from_coeffs((0..=order as i64).map(|n| nat_to_rat(&table.b(n, k as i64))).collect())
}

fn fact(n: i64) -> Rational {
    nat_to_rat(&factorial(n as u64))
}

fn binom(n: i64, k: i64) -> Rational {
    nat_to_rat(&binomial(n, k))
}

/// `D_k` from the explicit two-sum expression in the `γ`'s and powers of
/// `(1-4t)`, one expression per parity of `k`.
pub fn dk_closed(k: usize, order: usize) -> Result<TSeries> {
    if k == 0 {
        return Err(Error::Domain(
            "the closed expression for D_k needs k >= 1: at k = 0 it contains (-1)!; use the Catalan series".into(),
        ));
    }
    let k = k as i64;
    // (coefficient, twice the exponent of (1-4t)^(-1))
    let mut terms: Vec<(Rational, i64)> = Vec::new();
    if k % 2 == 1 {
        for j in 0..=(k - 1) / 2 {
            let top = j + (3 * k - 1) / 2;
            let c = gamma((k - 2 * j - 1) as usize) / (fact(2 * j + 1) * pow2(j + (3 * k + 1) / 2))
                * fact(top)
                * binom(2 * j + 3 * k - 1, top);
            terms.push((c, 2 * j + 3 * k));
        }
        for j in 0..=(k - 1) / 2 {
            let c = gamma((k - 2 * j) as usize) * pow2(j + (3 * k - 5) / 2) / fact(2 * j)
                * fact(j + (3 * k - 3) / 2);
            terms.push((c, 3 * k - 1 + 2 * j));
        }
    } else {
        for j in 0..=k / 2 {
            let top = j + (3 * k - 2) / 2;
            let c = gamma((k - 2 * j) as usize) / (fact(2 * j) * pow2(j + 3 * k / 2))
                * fact(top)
                * binom(2 * j + 3 * k - 2, top);
            terms.push((c, 2 * j + 3 * k - 1));
        }
        for j in 0..k / 2 {
            let c = gamma((k - 2 * j - 1) as usize) * pow2(j + (3 * k - 4) / 2) / fact(2 * j + 1)
                * fact(j + (3 * k - 2) / 2);
            terms.push((c, 3 * k + 2 * j));
        }
    }
    let mut sum = TSeries::zero(order);
    for (c, twice) in terms {
        sum = sum.add(&neg_pow_series(&rat(twice, 2)?, order).scale(&c));
    }
    Ok(sum.shift((k - 1) as usize))
}

/// `F_k = t ∂B_{k-1}/∂t + (1-k) B_{k-1}`, i.e. entry `(j,m)` scaled by `m+1-k`.
pub fn fk_next(b_prev: &XTSeries, k: usize) -> XTSeries {
    let mut out = XTSeries::zero(b_prev.order());
    for (j, m, c) in b_prev.entries() {
        out.set(j, m, c * rat_int(m as i64 + 1 - k as i64));
    }
    out
}

/// `D_k = ((x/t) F_k)(x = X_2(t))`.
pub fn dk_kernel(f_k: &XTSeries) -> Result<TSeries> {
    let order = f_k.order();
    let x2 = x2_series(order);
    let mut power = x2.clone();
    let mut sum = TSeries::zero(order);
    for j in 0..=order {
        for (m, c) in f_k.row(j).coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if m == 0 {
                return Err(Error::InexactDivision {
                    context: format!("x^{j} t^0 term of F survives the division by t"),
                });
            }
            sum = sum.add(&power.shift(m - 1).scale(c));
        }
        power = power.mul(&x2);
    }
    Ok(sum)
}

/// Solves `(1 - x - t/x) B_k = F_k - (t/x) D_k` level by level:
/// `B_0 = D_k`, `B_j = (B_{j-1} - B_{j-2} - F_{k,j-1}) / t`.
pub fn bk_solve(f_k: &XTSeries, d_k: &TSeries) -> Result<XTSeries> {
    let order = f_k.order().min(d_k.order());
    let mut rows: Vec<TSeries> = vec![d_k.truncate(order)];
    for j in 1..=order {
        let prev = &rows[j - 1];
        let mut num = prev.sub(&f_k.row(j - 1).truncate(prev.order()));
        if j >= 2 {
            num = num.sub(&rows[j - 2].truncate(prev.order()));
        }
        rows.push(num.div_t(&format!("kernel level {j}"))?);
    }
    Ok(XTSeries { rows })
}

/// `B_k` read off the `b(n,m,k)` table: entry `(j, m) = b(m+j, m, k)`.
pub fn bk_from_table(k: usize, order: usize, table: &mut B3Table) -> XTSeries {
    let mut out = XTSeries::zero(order);
    for j in 0..=order {
        for m in 0..=order - j {
            out.set(j, m, nat_to_rat(&table.b3((m + j) as i64, m as i64, k as i64)));
        }
    }
    out
}

/// `(x - x² - t) B - (x F - t D)` on the triangle; zero for a consistent triple.
pub fn kernel_residual(b: &XTSeries, f: &XTSeries, d: &TSeries) -> XTSeries {
    let order = b.order().min(f.order()).min(d.order());
    let mut out = XTSeries::zero(order);
    for j in 0..=order {
        for m in 0..=order - j {
            let mut r = Rational::zero();
            if j >= 1 {
                r += b.get(j - 1, m) - f.get(j - 1, m);
            }
            if j >= 2 {
                r -= b.get(j - 2, m);
            }
            if m >= 1 {
                r -= b.get(j, m - 1);
                if j == 0 {
                    r += d.coeff(m - 1);
                }
            }
            out.set(j, m, r);
        }
    }
    out
}

/// One level of the kernel chain.
#[derive(Debug, Clone)]
pub struct KernelLevel {
    pub k: usize,
    pub f: XTSeries,
    pub d: TSeries,
    pub b: XTSeries,
}

/// Runs `B_{k-1} → F_k → D_k → B_k` from `F_0 = 1`, `D_0 = C(t)` through
/// `k = kmax`, without touching any table.
pub fn kernel_chain(kmax: usize, order: usize) -> Result<Vec<KernelLevel>> {
    let f0 = XTSeries::one(order);
    let d0 = catalan_series(order);
    let b0 = bk_solve(&f0, &d0)?;
    let mut levels = vec![KernelLevel { k: 0, f: f0, d: d0, b: b0 }];
    for k in 1..=kmax {
        let f = fk_next(&levels[k - 1].b, k);
        let d = dk_kernel(&f)?;
        let b = bk_solve(&f, &d)?;
        levels.push(KernelLevel { k, f, d, b });
    }
    Ok(levels)
}

/// `D_k` by the kernel route alone.
pub fn dk_by_kernel(k: usize, order: usize) -> Result<TSeries> {
    let mut levels = kernel_chain(k, order)?;
    Ok(levels.swap_remove(k).d)
}
