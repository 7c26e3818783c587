use walls::exact_arith::{nat_to_rat, rat, rat_int};
use walls::series_engine::{
    bk_from_table, bk_solve, catalan_series, dk_by_kernel, dk_closed, dk_from_table, fk_next, kernel_chain,
    kernel_residual, neg_pow_series, x2_series, TSeries, XTSeries,
};
use walls::wall_tables::{b3_hook, B3Table};

#[test]
fn three_routes_agree() {
    let mut table = B3Table::new();
    let chain = kernel_chain(8, 20).unwrap();
    assert_eq!(chain.len(), 9);
    for level in &chain[1..] {
        let k = level.k;
        let from_table = dk_from_table(k, 20, &mut table);
        assert_eq!(dk_closed(k, 20).unwrap(), from_table, "closed, k = {k}");
        assert_eq!(level.d, from_table, "kernel, k = {k}");
    }
}

#[test]
fn kernel_solution_matches_b3() {
    let mut table = B3Table::new();
    let chain = kernel_chain(5, 12).unwrap();
    for level in &chain {
        assert_eq!(level.b, bk_from_table(level.k, 12, &mut table), "k = {}", level.k);
        assert!(kernel_residual(&level.b, &level.f, &level.d).is_zero(), "k = {}", level.k);
    }
}

#[test]
fn table_slices_satisfy_kernel_equation() {
    let mut table = B3Table::new();
    let mut prev = XTSeries::one(12);
    for k in 0..=5 {
        let f = if k == 0 { XTSeries::one(12) } else { fk_next(&prev, k) };
        let b = bk_from_table(k, 12, &mut table);
        let d = dk_from_table(k, 12, &mut table);
        assert!(kernel_residual(&b, &f, &d).is_zero());
        assert_eq!(bk_solve(&f, &d).unwrap(), b);
        prev = b;
    }
}

#[test]
fn first_slice_is_hook_length() {
    let b0 = bk_solve(&XTSeries::one(12), &catalan_series(12)).unwrap();
    for n in 0..=12usize {
        for m in 0..=n {
            assert_eq!(b0.get(n - m, m), nat_to_rat(&b3_hook(n, m).unwrap()));
        }
    }
}

#[test]
fn d1_reduction_at_order_ten() {
    let expected = neg_pow_series(&rat(3, 2).unwrap(), 10)
        .scale(&rat(1, 2).unwrap())
        .sub(&neg_pow_series(&rat_int(1), 10).scale(&rat(1, 2).unwrap()));
    assert_eq!(dk_closed(1, 10).unwrap(), expected);
}

#[test]
fn kernel_examples_and_rendering() {
    assert_eq!(dk_by_kernel(1, 4).unwrap().to_string(), "0 1 7 38 187");
    assert_eq!(dk_by_kernel(2, 4).unwrap().to_string(), "0 0 7 106 1010");
    assert_eq!(dk_closed(2, 4).unwrap().to_string(), "0 0 7 106 1010");
    assert_eq!(catalan_series(4).to_string(), "1 1 2 5 14");
}

#[test]
fn series_algebra() {
    let x2 = x2_series(20);
    let t = TSeries::from_ints(&[0, 1]).truncate(20);
    assert!(x2.sub(&x2.pow(2)).sub(&t).is_zero());
    let c = catalan_series(20);
    // C = 1 + t C²
    assert_eq!(TSeries::one(20).add(&c.mul(&c).shift(1)), c);
    // t C' + C/2 ... checked through the derivative of (1-4t)^(-1/2)
    let inv_sqrt = neg_pow_series(&rat(1, 2).unwrap(), 20);
    let lhs = inv_sqrt.t_deriv().mul(&TSeries::from_ints(&[1, -4]).truncate(20));
    assert_eq!(lhs, inv_sqrt.shift(1).scale(&rat_int(2)));
}
