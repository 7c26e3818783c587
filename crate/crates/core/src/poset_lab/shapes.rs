//! Three-row Young diagrams with walls and their brute-force tableau counts.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;

use super::poset::{count_linear_extensions, Poset};
use crate::error::{Error, Result};
use crate::exact_arith::Nat;

pub const BOTTOM: usize = 0;
pub const MIDDLE: usize = 1;
pub const TOP: usize = 2;

/// A three-row diagram, rows listed bottom first. A wall `(r, c)` sits between
/// columns `c` and `c + 1` of row `r`; removed cells are `(r, c)` pairs, all in
/// one row. Coordinates are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallShape {
    rows: [usize; 3],
    walls: BTreeSet<(usize, usize)>,
    removed: BTreeSet<(usize, usize)>,
}

impl WallShape {
    pub fn new(
        rows: [usize; 3],
        walls: impl IntoIterator<Item = (usize, usize)>,
        removed: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if rows[0] < rows[1] || rows[1] < rows[2] {
            return Err(Error::InvalidShape(format!("row lengths {rows:?} increase upward")));
        }
        let walls: BTreeSet<_> = walls.into_iter().collect();
        let removed: BTreeSet<_> = removed.into_iter().collect();
        for &(r, c) in &walls {
            if r > 2 || c + 1 >= rows[r] {
                return Err(Error::InvalidShape(format!("wall ({r},{c}) outside the row")));
            }
        }
        for &(r, c) in &removed {
            if r > 2 || c >= rows[r] {
                return Err(Error::InvalidShape(format!("removed cell ({r},{c}) outside the diagram")));
            }
        }
        if removed.iter().map(|&(r, _)| r).dedup().count() > 1 {
            return Err(Error::InvalidShape("removed cells span several rows".into()));
        }
        Ok(Self { rows, walls, removed })
    }

    fn walled_row(rows: [usize; 3], row: usize) -> Vec<(usize, usize)> {
        (0..rows[row].saturating_sub(1)).map(|c| (row, c)).collect()
    }

    /// Shape `(n, n, k)` with walls along the whole bottom row; counted by `a(n,k)`.
    pub fn a_shape(n: usize, k: usize) -> Result<Self> {
        let rows = [n, n, k];
        Self::new(rows, Self::walled_row(rows, BOTTOM), [])
    }

    /// Shape `(n, n, n)` with a walled bottom row keeping only the 1-based
    /// columns in `kept`.
    pub fn b_shape(n: usize, kept: &[usize]) -> Result<Self> {
        let rows = [n, n, n];
        Self::new(rows, Self::walled_row(rows, BOTTOM), Self::complement(n, BOTTOM, kept)?)
    }

    /// Shape `(n, m, m)` with a walled top row keeping only the 1-based
    /// columns in `kept`.
    pub fn b3_shape(n: usize, m: usize, kept: &[usize]) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidShape(format!("middle row {m} longer than bottom row {n}")));
        }
        let rows = [n, m, m];
        Self::new(rows, Self::walled_row(rows, TOP), Self::complement(m, TOP, kept)?)
    }

    fn complement(len: usize, row: usize, kept: &[usize]) -> Result<Vec<(usize, usize)>> {
        if kept.iter().any(|&c| c == 0 || c > len) || kept.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidShape(format!("kept columns {kept:?} not increasing within 1..={len}")));
        }
        Ok((1..=len).filter(|c| !kept.contains(c)).map(|c| (row, c - 1)).collect())
    }

    pub fn rows(&self) -> [usize; 3] {
        self.rows
    }

    fn present(&self, r: usize, c: usize) -> bool {
        c < self.rows[r] && !self.removed.contains(&(r, c))
    }

    /// Present cells in canonical order: bottom row left to right, then the
    /// middle row, then the top row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..3)
            .flat_map(|r| (0..self.rows[r]).map(move |c| (r, c)))
            .filter(|&(r, c)| self.present(r, c))
            .collect()
    }
}

/// The poset whose linear extensions are the fillings of `shape`: each cell
/// sits below its right neighbour (unless a wall separates them) and below the
/// cell directly above it.
pub fn tableau_poset(shape: &WallShape) -> Result<Poset> {
    let cells = shape.cells();
    let index = |cell: (usize, usize)| cells.iter().position(|&x| x == cell);
    let mut covers = Vec::new();
    for (i, &(r, c)) in cells.iter().enumerate() {
        if !shape.walls.contains(&(r, c)) {
            if let Some(j) = index((r, c + 1)) {
                covers.push((i, j));
            }
        }
        if r < 2 {
            if let Some(j) = index((r + 1, c)) {
                covers.push((i, j));
            }
        }
    }
    Poset::new(cells.len(), covers)
}

fn sum_over(shapes: Vec<Result<WallShape>>) -> Result<Nat> {
    shapes
        .into_par_iter()
        .map(|shape| count_linear_extensions(&tableau_poset(&shape?)?))
        .try_reduce(Nat::zero, |a, b| Ok(a + b))
}

/// `a(n,k)` by counting fillings; zero outside `0 <= k <= n`.
pub fn a_brute(n: usize, k: usize) -> Result<Nat> {
    if k > n {
        return Ok(Nat::zero());
    }
    count_linear_extensions(&tableau_poset(&WallShape::a_shape(n, k)?)?)
}

/// `b(n,k)` by counting fillings over every choice of `k` kept bottom cells.
pub fn b_brute(n: usize, k: usize) -> Result<Nat> {
    if k > n {
        return Ok(Nat::zero());
    }
    sum_over((1..=n).combinations(k).map(|kept| WallShape::b_shape(n, &kept)).collect())
}

/// `b(n,m,k)` by counting fillings over every choice of `k` kept top cells.
pub fn b3_brute(n: usize, m: usize, k: usize) -> Result<Nat> {
    if k > m || m > n {
        return Ok(Nat::zero());
    }
    sum_over((1..=m).combinations(k).map(|kept| WallShape::b3_shape(n, m, &kept)).collect())
}
