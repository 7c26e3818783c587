use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{exact_div, factorial, Nat};

/// Largest poset the linear-extension counter accepts by default.
pub const DEFAULT_CAPACITY: usize = 24;

/// A finite poset on `0..size`, given by its cover relations. A cover `(s, t)`
/// means `s ≺ t` with nothing in between.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset, rejecting out-of-range labels, cycles and covers that
    /// are implied by other covers.
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        let mut succ = vec![Vec::new(); size];
        for &(s, t) in &covers {
            if s >= size || t >= size {
                return Err(Error::InvalidPoset(format!("cover {s}>{t} outside 0..{size}")));
            }
            if s == t {
                return Err(Error::InvalidPoset(format!("self-cover at {s}")));
            }
            if succ[s].contains(&t) {
                return Err(Error::InvalidPoset(format!("duplicate cover {s}>{t}")));
            }
            succ[s].push(t);
        }
        if !is_acyclic(size, &succ) {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }
        for &(s, t) in &covers {
            if reaches_avoiding(&succ, s, t) {
                return Err(Error::InvalidPoset(format!("cover {s}>{t} is implied by transitivity")));
            }
        }
        Ok(Self { size, covers })
    }

    pub fn chain(m: usize) -> Self {
        Self { size: m, covers: (1..m).map(|i| (i - 1, i)).collect() }
    }

    pub fn antichain(m: usize) -> Self {
        Self { size: m, covers: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Disjoint union; `other` is relabeled after `self`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.size;
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(s, t)| (s + shift, t + shift)));
        Self { size: self.size + other.size, covers }
    }

    /// Every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Self) -> Self {
        let mut out = self.direct_sum(other);
        let shift = self.size;
        for top in self.maximal() {
            for bottom in other.minimal() {
                out.covers.push((top, bottom + shift));
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.size).filter(|&v| self.covers.iter().all(|&(_, t)| t != v)).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.size).filter(|&v| self.covers.iter().all(|&(s, _)| s != v)).collect()
    }

    fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut preds = vec![Vec::new(); self.size];
        for &(s, t) in &self.covers {
            preds[t].push(s);
        }
        preds
    }
}

fn is_acyclic(size: usize, succ: &[Vec<usize>]) -> bool {
    let mut indegree = vec![0usize; size];
    for targets in succ {
        for &t in targets {
            indegree[t] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..size).filter(|&v| indegree[v] == 0).collect();
    let mut visited = 0;
    while let Some(v) = ready.pop() {
        visited += 1;
        for &t in &succ[v] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(t);
            }
        }
    }
    visited == size
}

/// Whether `t` is reachable from `s` by a path that skips the direct edge.
fn reaches_avoiding(succ: &[Vec<usize>], s: usize, t: usize) -> bool {
    let mut seen = vec![false; succ.len()];
    let mut stack: Vec<usize> = succ[s].iter().copied().filter(|&v| v != t).collect();
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        stack.extend(succ[v].iter().copied());
    }
    false
}

/// `"p; s>t; s>t; ..."`, each `s>t` an arrow from the smaller element `s` to
/// the larger `t`. Covers are listed in sorted order.
impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut covers = self.covers.clone();
        covers.sort_unstable();
        write!(f, "{}", self.size)?;
        for (s, t) in covers {
            write!(f, "; {s}>{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let mut parts = line.split(';').map(str::trim).filter(|p| !p.is_empty());
        let bad = |what: &str| Error::InvalidPoset(format!("cannot parse {what:?}"));
        let size = parts.next().ok_or_else(|| bad(line))?.parse().map_err(|_| bad(line))?;
        let mut covers = Vec::new();
        for part in parts {
            let (s, t) = part.split_once('>').ok_or_else(|| bad(part))?;
            covers.push((s.trim().parse().map_err(|_| bad(part))?, t.trim().parse().map_err(|_| bad(part))?));
        }
        Self::new(size, covers)
    }
}

/// `e(P)` with the default capacity.
pub fn count_linear_extensions(poset: &Poset) -> Result<Nat> {
    count_linear_extensions_with_limit(poset, DEFAULT_CAPACITY)
}

/// `e(P)` by dynamic programming over order ideals. The ideals are processed
/// one size at a time, so only two layers are alive at once.
pub fn count_linear_extensions_with_limit(poset: &Poset, limit: usize) -> Result<Nat> {
    let p = poset.size();
    if p > limit.min(32) {
        return Err(Error::Capacity { size: p, limit: limit.min(32) });
    }
    let preds: Vec<u32> = poset
        .predecessors()
        .iter()
        .map(|ps| ps.iter().fold(0u32, |m, &s| m | 1 << s))
        .collect();
    let mut layer: HashMap<u32, Nat> = HashMap::from([(0u32, Nat::one())]);
    for _ in 0..p {
        let mut next: HashMap<u32, Nat> = HashMap::with_capacity(layer.len() * 2);
        for (ideal, ways) in &layer {
            for (v, &need) in preds.iter().enumerate() {
                let bit = 1u32 << v;
                if ideal & bit == 0 && need & !ideal == 0 {
                    *next.entry(ideal | bit).or_insert_with(Nat::zero) += ways;
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_values().next().unwrap_or_else(Nat::one))
}

/// `ω(v)` for every element: the number of elements (itself included) from
/// which `v` can be reached. Only defined when every element has at most one
/// upper cover.
pub fn hook_denominators(poset: &Poset) -> Result<Vec<usize>> {
    let mut up: Vec<Option<usize>> = vec![None; poset.size()];
    for &(s, t) in poset.covers() {
        if up[s].replace(t).is_some() {
            return Err(Error::InvalidPoset(format!("element {s} has more than one upper cover")));
        }
    }
    let mut omega = vec![0usize; poset.size()];
    for start in 0..poset.size() {
        let mut v = Some(start);
        while let Some(u) = v {
            omega[u] += 1;
            v = up[u];
        }
    }
    Ok(omega)
}

/// `e(P) = p! / Π ω(v)` for posets whose Hasse diagram has out-degree at most one.
pub fn forest_hook_count(poset: &Poset) -> Result<Nat> {
    let denominator = hook_denominators(poset)?.iter().fold(Nat::one(), |acc, &w| acc * w as u64);
    exact_div(&factorial(poset.size() as u64), &denominator, "forest hook product")
}
