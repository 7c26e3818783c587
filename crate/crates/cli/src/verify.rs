//! The registry of identity checks run by `verify`.

use num_traits::Zero;
use walls::closed_forms::{a_closed, alpha, b_closed, lemma28_rhs, lemma29_check, omega_init};
use walls::exact_arith::{double_factorial, factorial, nat_to_rat, rat, rat_int, Nat};
use walls::poset_lab::{
    a_brute, b3_brute, b_brute, b_by_decomposition, b_from_u_row, build_f, build_ftilde, build_u, f_closed, f_sum,
    family_sum, ftilde, u_from_b, MonsterTable,
};
use walls::series_engine::{bk_from_table, dk_closed, dk_from_table, kernel_chain, kernel_residual, neg_pow_series};
use walls::tree_child::{tc_asym_relative_error, TreeChildCounter};
use walls::wall_tables::{ATable, B3Omega, B3Table, BCorTable, OmegaTable};

/// Bounds a check runs over. A check only reads the bounds set in its defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub nmax: Option<usize>,
    pub kmax: Option<usize>,
    pub order: Option<usize>,
}

impl Bounds {
    const fn new(nmax: Option<usize>, kmax: Option<usize>, order: Option<usize>) -> Self {
        Self { nmax, kmax, order }
    }

    /// `self` with any bound this check uses replaced by `over`.
    pub fn overridden(self, over: Bounds) -> Self {
        Self {
            nmax: self.nmax.map(|v| over.nmax.unwrap_or(v)),
            kmax: self.kmax.map(|v| over.kmax.unwrap_or(v)),
            order: self.order.map(|v| over.order.unwrap_or(v)),
        }
    }

    fn n(&self) -> usize {
        self.nmax.expect("check declares nmax")
    }

    fn k(&self) -> usize {
        self.kmax.expect("check declares kmax")
    }

    fn order(&self) -> usize {
        self.order.expect("check declares order")
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = [("nmax", self.nmax), ("kmax", self.kmax), ("order", self.order)]
            .iter()
            .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
            .collect();
        parts.join(" ")
    }
}

/// `Err` carries the first counterexample.
pub type Outcome = Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub about: &'static str,
    pub defaults: Bounds,
    pub run: fn(&Bounds) -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn core<T>(r: walls::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

const fn n(nmax: usize) -> Bounds {
    Bounds::new(Some(nmax), None, None)
}

const NONE: Bounds = Bounds::new(None, None, None);

pub const REGISTRY: &[Check] = &[
    Check { name: "main-identity", about: "2^(n-k) a(n,k) = (n-k+1)! b(n,k)", defaults: n(30), run: main_identity },
    Check { name: "omega-bridge", about: "omega(n,m,k) = b(n+m,m,k) for n+m <= nmax", defaults: n(14), run: omega_bridge },
    Check {
        name: "omega-vanishing",
        about: "omega(n,k-1,k) = 0",
        defaults: Bounds::new(Some(10), Some(6), None),
        run: omega_vanishing,
    },
    Check {
        name: "omega-init",
        about: "omega_init(k-1,k) = 0",
        defaults: Bounds::new(None, Some(8), None),
        run: omega_init_vanishes,
    },
    Check { name: "b-cor-rec", about: "rational recurrence for b(n,k)", defaults: n(25), run: b_cor_rec },
    Check { name: "semi-closed", about: "a_closed = a and b_closed = b", defaults: n(25), run: semi_closed },
    Check { name: "appendix-a", about: "explicit a(n,k), b(n,k) for k <= 3", defaults: n(12), run: appendix_a },
    Check {
        name: "lemma29",
        about: "binomial-sum identity",
        defaults: Bounds::new(Some(8), Some(6), None),
        run: lemma29,
    },
    Check {
        name: "lemma28",
        about: "omega expansion vanishes, both omega sources",
        defaults: Bounds::new(Some(8), Some(5), None),
        run: lemma28,
    },
    Check { name: "alpha-fixtures", about: "alpha_1(1,1), alpha_2(1,1), alpha_2(1,2)", defaults: NONE, run: alpha_fixtures },
    Check {
        name: "dk-threeway",
        about: "D_k from the table, the closed form and the kernel chain",
        defaults: Bounds::new(None, Some(8), Some(20)),
        run: dk_threeway,
    },
    Check {
        name: "kernel-residual",
        about: "kernel solutions equal the b3 slices and satisfy the equation",
        defaults: Bounds::new(None, Some(5), Some(12)),
        run: kernel_residual_check,
    },
    Check {
        name: "d1-closed",
        about: "D_1 = (1/2)(1-4t)^(-3/2) - (1/2)(1-4t)^(-1)",
        defaults: Bounds::new(None, None, Some(10)),
        run: d1_closed,
    },
    Check { name: "oracle", about: "brute-force tableau counts equal a, b, b3", defaults: n(6), run: oracle },
    Check { name: "f-family", about: "f_closed = f_sum = sum of e(F)", defaults: n(6), run: f_family },
    Check { name: "ftilde-family", about: "ftilde = sum of e(F~)", defaults: n(5), run: ftilde_family },
    Check { name: "u-family", about: "u_from_b = sum of e(U)", defaults: n(5), run: u_family },
    Check { name: "bu-roundtrip", about: "b_from_u after u_from_b is the identity", defaults: n(8), run: bu_roundtrip },
    Check { name: "decomposition", about: "C(2n+k,n) f(n,k) - r(n,k) = b(n,k)", defaults: n(12), run: decomposition },
    Check { name: "monster", about: "closed recurrence for b(n,k) from b(0,0)", defaults: n(12), run: monster },
    Check { name: "tc-routes", about: "all exact routes to TC(n,k) agree", defaults: n(15), run: tc_routes },
    Check { name: "tc-zero", about: "TC(n,0) = (2n-3)!!", defaults: n(15), run: tc_zero },
    Check {
        name: "asym",
        about: "expansion error decreases over n = 50, 100, 200; below 1e-3 at (200,0)",
        defaults: Bounds::new(None, Some(3), None),
        run: asym,
    },
];

pub fn find(name: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.name == name)
}

fn main_identity(b: &Bounds) -> Outcome {
    let (mut a, mut t) = (ATable::new(), B3Table::new());
    for n in 0..=b.n() as i64 {
        for k in 0..=n {
            let left = a.get(n, k) << (n - k);
            let right = factorial((n - k + 1) as u64) * t.b(n, k);
            ensure!(left == right, "(n,k)=({n},{k}): {left} != {right}");
        }
    }
    Ok(())
}

fn omega_bridge(b: &Bounds) -> Outcome {
    let (mut w, mut t) = (OmegaTable::new(), B3Table::new());
    let top = b.n() as i64;
    for n in 0..=top {
        for m in 0..=top - n {
            for k in 0..=m + 1 {
                let omega = core(w.get(n, m, k))?;
                let b3 = t.b3(n + m, m, k);
                ensure!(omega == b3, "(n,m,k)=({n},{m},{k}): omega {omega} != b3 {b3}");
            }
        }
    }
    Ok(())
}

fn omega_vanishing(b: &Bounds) -> Outcome {
    let mut w = OmegaTable::new();
    for n in 0..=b.n() as i64 {
        for k in 1..=b.k() as i64 {
            let v = w.raw(n, k - 1, k);
            ensure!(v.is_zero(), "omega({n},{},{k}) = {v}", k - 1);
        }
    }
    Ok(())
}

fn omega_init_vanishes(b: &Bounds) -> Outcome {
    for k in 1..=b.k() {
        let v = omega_init(k - 1, k);
        ensure!(v.is_zero(), "omega_init({},{k}) = {v}", k - 1);
    }
    Ok(())
}

fn b_cor_rec(b: &Bounds) -> Outcome {
    let (mut c, mut t) = (BCorTable::new(), B3Table::new());
    for n in 0..=b.n() as i64 {
        for k in 0..=n {
            let v = core(c.get(n, k))?;
            ensure!(v == t.b(n, k), "(n,k)=({n},{k}): {v} != {}", t.b(n, k));
        }
    }
    Ok(())
}

fn semi_closed(b: &Bounds) -> Outcome {
    let (mut a, mut t) = (ATable::new(), B3Table::new());
    for n in 0..=b.n() {
        for k in 0..=n {
            let (ni, ki) = (n as i64, k as i64);
            let ac = core(a_closed(n, k))?;
            ensure!(ac == a.get(ni, ki), "a_closed({n},{k}) = {ac} != {}", a.get(ni, ki));
            let bc = core(b_closed(n, k))?;
            ensure!(bc == t.b(ni, ki), "b_closed({n},{k}) = {bc} != {}", t.b(ni, ki));
        }
    }
    Ok(())
}

fn appendix_a(b: &Bounds) -> Outcome {
    let df = |m: i64| nat_to_rat(&double_factorial(m).expect("m >= -1"));
    let fact = |m: i64| nat_to_rat(&factorial(m as u64));
    let third = |p: i64, q: i64| rat(p, q).expect("nonzero denominator");
    let (mut a, mut t) = (ATable::new(), B3Table::new());
    for n in 2..=b.n() as i64 {
        let nn = rat_int(n);
        let central = fact(2 * n + 1) / (fact(n) * fact(n));
        let pow4 = |e: i64| nat_to_rat(&(Nat::from(1u32) << (2 * n + e)));
        let expected_a = [
            df(2 * n + 1) - df(2 * n),
            (&nn + third(5, 3)) * df(2 * n + 1) - df(2 * n + 2),
            (&nn + rat_int(3)) / rat_int(3) * df(2 * n + 3) - (&nn + third(79, 48)) * df(2 * n + 2),
        ];
        let expected_b = [
            fact(2 * n) / (fact(n) * fact(n)) / rat_int(n + 1),
            &central / rat_int(2) - pow4(-1),
            &nn * (&nn + third(5, 3)) / rat_int(4) * &central - rat_int(n * (n + 1)) * pow4(-1),
            (&nn + rat_int(3)) / rat_int(48) * fact(2 * n + 3) / (fact(n - 2) * fact(n + 1))
                - rat_int((n - 1) * n * (n + 1)) * (&nn + third(79, 48)) * pow4(-2),
        ];
        for (k, want) in expected_a.iter().enumerate() {
            let got = nat_to_rat(&a.get(n, k as i64 + 1));
            ensure!(got == *want, "a({n},{}) = {got}, formula gives {want}", k + 1);
        }
        for (k, want) in expected_b.iter().enumerate() {
            let got = nat_to_rat(&t.b(n, k as i64));
            ensure!(got == *want, "b({n},{k}) = {got}, formula gives {want}");
        }
    }
    Ok(())
}

fn lemma29(b: &Bounds) -> Outcome {
    for n in 1..=b.n() as i64 {
        for k in 1..=b.k() as i64 {
            for i in 0..=k {
                ensure!(core(lemma29_check(n, k, i))?, "(n,k,i)=({n},{k},{i})");
            }
        }
    }
    Ok(())
}

fn lemma28(b: &Bounds) -> Outcome {
    let (mut w, mut t) = (OmegaTable::new(), B3Table::new());
    for n in 1..=b.n() as i64 {
        for k in 1..=b.k() as i64 {
            for s in 1..=n {
                let v = core(lemma28_rhs(n, k, s, &mut w))?;
                ensure!(v.is_zero(), "(n,k,s)=({n},{k},{s}) with the omega recursion: {v}");
                let v = core(lemma28_rhs(n, k, s, &mut B3Omega(&mut t)))?;
                ensure!(v.is_zero(), "(n,k,s)=({n},{k},{s}) with b3 values: {v}");
            }
        }
    }
    Ok(())
}

fn alpha_fixtures(_: &Bounds) -> Outcome {
    for (s, p, q, want) in [(1, 1, 1, -1), (2, 1, 1, -1), (2, 1, 2, 1)] {
        let got = core(alpha(s, p, q))?;
        ensure!(got == rat_int(want), "alpha_{s}({p},{q}) = {got}, expected {want}");
    }
    Ok(())
}

fn dk_threeway(b: &Bounds) -> Outcome {
    let (kmax, order) = (b.k(), b.order());
    let chain = core(kernel_chain(kmax, order))?;
    ensure!(chain.len() == kmax + 1, "kernel chain stopped at level {}", chain.len());
    let mut t = B3Table::new();
    for level in &chain[1..] {
        let k = level.k;
        let table = dk_from_table(k, order, &mut t);
        let closed = core(dk_closed(k, order))?;
        ensure!(closed == table, "k={k}: closed {closed} != table {table}");
        ensure!(level.d == table, "k={k}: kernel {} != table {table}", level.d);
    }
    Ok(())
}

fn kernel_residual_check(b: &Bounds) -> Outcome {
    let order = b.order();
    let mut t = B3Table::new();
    for level in core(kernel_chain(b.k(), order))? {
        ensure!(level.b == bk_from_table(level.k, order, &mut t), "k={}: B_k differs from the b3 slice", level.k);
        ensure!(kernel_residual(&level.b, &level.f, &level.d).is_zero(), "k={}: nonzero residual", level.k);
    }
    Ok(())
}

fn d1_closed(b: &Bounds) -> Outcome {
    let order = b.order();
    let half = rat(1, 2).expect("nonzero denominator");
    let expected = neg_pow_series(&rat(3, 2).expect("nonzero denominator"), order)
        .scale(&half)
        .sub(&neg_pow_series(&rat_int(1), order).scale(&half));
    let got = core(dk_closed(1, order))?;
    ensure!(got == expected, "D_1 = {got}, expected {expected}");
    Ok(())
}

fn oracle(b: &Bounds) -> Outcome {
    let (mut a, mut t) = (ATable::new(), B3Table::new());
    for n in 0..=b.n() {
        let ni = n as i64;
        for k in 0..=n {
            let ki = k as i64;
            let v = core(a_brute(n, k))?;
            ensure!(v == a.get(ni, ki), "a({n},{k}): brute {v} != {}", a.get(ni, ki));
            let v = core(b_brute(n, k))?;
            ensure!(v == t.b(ni, ki), "b({n},{k}): brute {v} != {}", t.b(ni, ki));
        }
        for m in 0..=n {
            for k in 0..=m {
                let v = core(b3_brute(n, m, k))?;
                let fast = t.b3(ni, m as i64, k as i64);
                ensure!(v == fast, "b3({n},{m},{k}): brute {v} != {fast}");
            }
        }
    }
    Ok(())
}

fn f_family(b: &Bounds) -> Outcome {
    for n in 0..=b.n() {
        for k in 0..=n {
            let brute = core(family_sum(n, k, build_f))?;
            ensure!(f_closed(n, k) == brute, "f({n},{k}): closed {} != posets {brute}", f_closed(n, k));
            ensure!(f_sum(n, k) == brute, "f({n},{k}): sum {} != posets {brute}", f_sum(n, k));
        }
    }
    Ok(())
}

fn ftilde_family(b: &Bounds) -> Outcome {
    for n in 1..=b.n() {
        for k in 0..=n {
            let brute = core(family_sum(n, k, build_ftilde))?;
            ensure!(ftilde(n, k) == brute, "ftilde({n},{k}) = {} != posets {brute}", ftilde(n, k));
        }
    }
    Ok(())
}

fn u_family(b: &Bounds) -> Outcome {
    let mut t = B3Table::new();
    for n in 0..=b.n() {
        for k in 0..=n {
            let u = core(u_from_b(n, k, &mut t))?;
            let brute = core(family_sum(n, k, build_u))?;
            ensure!(u == brute, "u({n},{k}) = {u} != posets {brute}");
        }
    }
    Ok(())
}

fn bu_roundtrip(b: &Bounds) -> Outcome {
    let mut t = B3Table::new();
    for n in 0..=b.n() {
        let row = (0..=n).map(|k| u_from_b(n, k, &mut t)).collect::<walls::Result<Vec<_>>>();
        let row = core(row)?;
        for k in 0..=n {
            let back = core(b_from_u_row(n, k, &row))?;
            let want = t.b(n as i64, k as i64);
            ensure!(back == want, "b({n},{k}): round trip gives {back}, expected {want}");
        }
    }
    Ok(())
}

fn decomposition(b: &Bounds) -> Outcome {
    let mut t = B3Table::new();
    for n in 1..=b.n() {
        for k in 0..=n {
            let v = core(b_by_decomposition(n, k, &mut t))?;
            let want = t.b(n as i64, k as i64);
            ensure!(v == want, "b({n},{k}): decomposition gives {v}, expected {want}");
        }
    }
    Ok(())
}

fn monster(b: &Bounds) -> Outcome {
    let (mut memo, mut t) = (MonsterTable::new(), B3Table::new());
    for n in 1..=b.n() {
        for k in 0..=n {
            let v = core(memo.get(n, k))?;
            let want = t.b(n as i64, k as i64);
            ensure!(v == want, "b({n},{k}): recurrence gives {v}, expected {want}");
        }
    }
    Ok(())
}

fn tc_routes(b: &Bounds) -> Outcome {
    let mut t = TreeChildCounter::new();
    let top = b.n();
    for n in 1..=top {
        for k in 0..n {
            let v = t.tc(n, k);
            let routes = [
                ("via b", t.tc_via_b(n, k)),
                ("recurrence", t.tc_rec(n, k)),
                ("sum", t.tc_sum(n, k)),
                ("closed", t.tc_closed(n, k)),
            ];
            for (route, got) in routes {
                let got = core(got)?;
                ensure!(got == v, "TC({n},{k}): {route} gives {got}, expected {v}");
            }
        }
    }
    for k in 1..top {
        for m in 0..=top - 1 - k {
            let got = core(t.tc_chain(k, m))?;
            let want = t.tc(k + m + 1, k);
            ensure!(got == want, "TC({},{k}): chain gives {got}, expected {want}", k + m + 1);
        }
    }
    Ok(())
}

fn tc_zero(b: &Bounds) -> Outcome {
    let mut t = TreeChildCounter::new();
    for n in 2..=b.n() {
        let want = core(double_factorial(2 * n as i64 - 3))?;
        ensure!(t.tc(n, 0) == want, "TC({n},0) = {} != {want}", t.tc(n, 0));
    }
    Ok(())
}

fn asym(b: &Bounds) -> Outcome {
    let mut t = TreeChildCounter::new();
    for k in 0..=b.k() {
        let errs: Vec<f64> = [50, 100, 200].iter().map(|&n| tc_asym_relative_error(n, k, &t.tc(n, k))).collect();
        ensure!(errs[0] > errs[1] && errs[1] > errs[2], "k={k}: errors at n=50,100,200 are {errs:?}");
        if k == 0 && errs[2] >= 1e-3 {
            return Err(format!("k=0: error at n=200 is {}", errs[2]));
        }
    }
    Ok(())
}

/// Runs the whole registry at default bounds.
pub fn run_all() -> Vec<(&'static Check, Bounds, Outcome)> {
    REGISTRY.iter().map(|c| (c, c.defaults, (c.run)(&c.defaults))).collect()
}
