//! Table generation, slicing, output layouts and the on-disk cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use walls::poset_lab::{f_closed, ftilde, u_from_b};
use walls::tree_child::TreeChildCounter;
use walls::wall_tables::{ATable, B3Table, OmegaTable};
use walls::Nat;

use crate::args::{Format, Seq};
use crate::error::{usage, Result};

/// One table entry; `index` is `[n, k]`, or `[n, m, k]` for `b3` and `omega`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub index: Vec<usize>,
    #[serde(with = "decimal")]
    pub value: Nat,
}

mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use walls::Nat;

    pub fn serialize<S: Serializer>(value: &Nat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Nat, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {text:?}")))
    }
}

pub fn columns(seq: Seq) -> &'static [&'static str] {
    if seq.is_three_dimensional() {
        &["n", "m", "k"]
    } else {
        &["n", "k"]
    }
}

/// Every cell with `n <= nmax`, row-major. `tc` and `ftilde` start at `n = 1`;
/// `omega` covers `n + m <= nmax`.
pub fn compute(seq: Seq, nmax: usize) -> Result<Vec<Cell>> {
    let two = |n: usize, k: usize, value: Nat| Cell { index: vec![n, k], value };
    let three = |n: usize, m: usize, k: usize, value: Nat| Cell { index: vec![n, m, k], value };
    let lower = |from: usize| (from..=nmax).flat_map(|n| (0..=n).map(move |k| (n, k)));
    let cells = match seq {
        Seq::A => ATable::new().cells(nmax).into_iter().map(|(n, k, v)| two(n, k, v)).collect(),
        Seq::B => B3Table::new().b_cells(nmax).into_iter().map(|(n, k, v)| two(n, k, v)).collect(),
        Seq::B3 => B3Table::new().b3_cells(nmax).into_iter().map(|(n, m, k, v)| three(n, m, k, v)).collect(),
        Seq::Omega => {
            let mut table = OmegaTable::new();
            let mut out = Vec::new();
            for n in 0..=nmax {
                for m in 0..=nmax - n {
                    for k in 0..=m {
                        out.push(three(n, m, k, table.get(n as i64, m as i64, k as i64)?));
                    }
                }
            }
            out
        }
        Seq::Tc => {
            let mut counter = TreeChildCounter::new();
            (1..=nmax).flat_map(|n| (0..n).map(move |k| (n, k))).map(|(n, k)| two(n, k, counter.tc(n, k))).collect()
        }
        Seq::F => lower(0).map(|(n, k)| two(n, k, f_closed(n, k))).collect(),
        Seq::Ftilde => lower(1).map(|(n, k)| two(n, k, ftilde(n, k))).collect(),
        Seq::U => {
            let mut table = B3Table::new();
            lower(0).map(|(n, k)| Ok(two(n, k, u_from_b(n, k, &mut table)?))).collect::<Result<_>>()?
        }
    };
    Ok(cells)
}

/// Which cells of a table to emit.
#[derive(Debug, Clone, Copy, Default)]
pub struct Slice {
    pub kmax: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub diagonal: bool,
}

impl Slice {
    pub fn validate(&self, seq: Seq, format: Format) -> Result<()> {
        if seq.is_three_dimensional() {
            if self.diagonal {
                return usage(format!("--diagonal applies to two-index tables, not {}", seq.name()));
            }
            if format == Format::Bfile && (self.m.is_none() || self.k.is_none()) {
                return usage(format!("bfile output of {} needs both --m and --k", seq.name()));
            }
        } else {
            if self.m.is_some() {
                return usage(format!("--m applies to b3 and omega, not {}", seq.name()));
            }
            if format == Format::Bfile && self.k.is_none() && !self.diagonal {
                return usage("bfile output needs a one-index slice: --k or --diagonal");
            }
        }
        if self.diagonal && self.k.is_some() {
            return usage("--diagonal and --k cannot be combined");
        }
        Ok(())
    }

    pub fn keeps(&self, seq: Seq, cell: &Cell) -> bool {
        let n = cell.index[0];
        let k = *cell.index.last().expect("cells have an index");
        let offset = usize::from(seq == Seq::Tc);
        self.kmax.is_none_or(|kmax| k <= kmax)
            && self.k.is_none_or(|want| k == want)
            && self.m.is_none_or(|want| cell.index[1] == want)
            && (!self.diagonal || k + offset == n)
    }
}

pub fn write_cells(seq: Seq, cells: &[Cell], format: Format, out: &mut dyn Write) -> Result<()> {
    let cols = columns(seq);
    match format {
        Format::Csv => {
            writeln!(out, "{},value", cols.join(","))?;
            for cell in cells {
                let index: Vec<String> = cell.index.iter().map(usize::to_string).collect();
                writeln!(out, "{},{}", index.join(","), cell.value)?;
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = cells
                .iter()
                .map(|cell| {
                    let mut row = serde_json::Map::new();
                    for (name, i) in cols.iter().zip(&cell.index) {
                        row.insert((*name).into(), (*i).into());
                    }
                    row.insert("value".into(), cell.value.to_string().into());
                    row.into()
                })
                .collect();
            let doc = serde_json::json!({ "seq": seq.name(), "cells": rows });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"))?;
        }
        Format::Bfile => {
            for cell in cells {
                writeln!(out, "{} {}", cell.index[0], cell.value)?;
            }
        }
        Format::Text => {
            // one line per fixed leading index, values in k order
            let lead = cols.len() - 1;
            let mut line: Vec<String> = Vec::new();
            let mut current: Option<&[usize]> = None;
            for cell in cells {
                let key = &cell.index[..lead];
                if current.is_some_and(|c| c != key) {
                    writeln!(out, "{}", line.join(" "))?;
                    line.clear();
                }
                current = Some(key);
                line.push(cell.value.to_string());
            }
            if !line.is_empty() {
                writeln!(out, "{}", line.join(" "))?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    seq: String,
    nmax: usize,
    sha256: String,
    cells: Vec<Cell>,
}

pub fn digest(cells: &[Cell]) -> String {
    let bytes = serde_json::to_vec(cells).expect("cells serialize");
    format!("{:x}", Sha256::digest(bytes))
}

pub fn cache_path(dir: &Path, seq: Seq, nmax: usize) -> PathBuf {
    dir.join(format!("{}-n{nmax}.json", seq.name()))
}

fn read_cache(path: &Path, seq: Seq, nmax: usize) -> std::result::Result<Vec<Cell>, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if file.seq != seq.name() || file.nmax != nmax {
        return Err("it holds a different table".into());
    }
    if digest(&file.cells) != file.sha256 {
        return Err("its hash does not match its cells".into());
    }
    Ok(file.cells)
}

/// The full table, read from `dir` when a valid cached copy exists and
/// written there otherwise. A cached copy that fails its hash is recomputed.
pub fn load_or_compute(seq: Seq, nmax: usize, dir: Option<&Path>, err: &mut dyn Write) -> Result<Vec<Cell>> {
    let Some(dir) = dir else {
        return compute(seq, nmax);
    };
    let path = cache_path(dir, seq, nmax);
    if path.exists() {
        match read_cache(&path, seq, nmax) {
            Ok(cells) => return Ok(cells),
            Err(why) => writeln!(err, "warning: ignoring cache file {}: {why}", path.display())?,
        }
    }
    let cells = compute(seq, nmax)?;
    let file = CacheFile { seq: seq.name().into(), nmax, sha256: digest(&cells), cells };
    fs::create_dir_all(dir)?;
    fs::write(&path, serde_json::to_string_pretty(&file).expect("cache serializes"))?;
    Ok(file.cells)
}
