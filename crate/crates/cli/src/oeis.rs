//! OEIS b-files: the slice map, the parser, fetching and bundled copies.

use std::time::Duration;

use walls::wall_tables::{ATable, B3Table};
use walls::Nat;

use crate::args::SliceName;
use crate::error::{CliError, Result};

/// A one-index slice of `a` or `b` and the OEIS entry it should equal.
/// `offset` is the first index of the OEIS entry, recorded rather than guessed.
#[derive(Debug, Clone, Copy)]
pub struct SliceMap {
    pub name: SliceName,
    pub label: &'static str,
    pub oeis: &'static str,
    pub offset: usize,
    pub fixture: &'static str,
}

pub const MAPS: [SliceMap; 4] = [
    SliceMap {
        name: SliceName::BK0,
        label: "b-k0",
        oeis: "A000108",
        offset: 0,
        fixture: include_str!("../fixtures/b000108.txt"),
    },
    SliceMap {
        name: SliceName::ADiag,
        label: "a-diag",
        oeis: "A213863",
        offset: 0,
        fixture: include_str!("../fixtures/b213863.txt"),
    },
    SliceMap {
        name: SliceName::AK1,
        label: "a-k1",
        oeis: "A122649",
        offset: 1,
        fixture: include_str!("../fixtures/b122649.txt"),
    },
    SliceMap {
        name: SliceName::BK1,
        label: "b-k1",
        oeis: "A000531",
        offset: 1,
        fixture: include_str!("../fixtures/b000531.txt"),
    },
];

pub fn by_name(name: SliceName) -> &'static SliceMap {
    MAPS.iter().find(|m| m.name == name).expect("every slice is mapped")
}

pub fn by_oeis(id: &str) -> Option<&'static SliceMap> {
    MAPS.iter().find(|m| m.oeis.eq_ignore_ascii_case(id))
}

/// Our value of the slice at index `n`.
pub struct SliceValues {
    a: ATable,
    b: B3Table,
}

impl SliceValues {
    pub fn new() -> Self {
        Self { a: ATable::new(), b: B3Table::new() }
    }

    pub fn get(&mut self, name: SliceName, n: usize) -> Nat {
        let n = n as i64;
        match name {
            SliceName::BK0 => self.b.b(n, 0),
            SliceName::ADiag => self.a.get(n, n),
            SliceName::AK1 => self.a.get(n, 1),
            SliceName::BK1 => self.b.b(n, 1),
        }
    }
}

impl Default for SliceValues {
    fn default() -> Self {
        Self::new()
    }
}

/// Parses `index value` lines. Blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, Nat)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || CliError::BFile(format!("line {}: {line:?}", lineno + 1));
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad());
        };
        out.push((index.parse().map_err(|_| bad())?, value.parse().map_err(|_| bad())?));
    }
    Ok(out)
}

/// `https://oeis.org/A000108/b000108.txt` for `A000108`.
pub fn bfile_url(id: &str) -> String {
    format!("https://oeis.org/{id}/b{}.txt", &id[1..])
}

pub fn fetch(id: &str, timeout: Duration) -> std::result::Result<String, String> {
    let agent = ureq::AgentBuilder::new().timeout(timeout).build();
    let response = agent.get(&bfile_url(id)).call().map_err(|e| e.to_string())?;
    response.into_string().map_err(|e| e.to_string())
}

/// Result of comparing a b-file against our slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub compared: usize,
    pub first: Option<usize>,
    pub last: Option<usize>,
    pub mismatch: Option<(usize, Nat, Nat)>,
}

/// Compares every entry with `offset <= index <= limit`.
pub fn compare(map: &SliceMap, entries: &[(usize, Nat)], limit: usize, values: &mut SliceValues) -> Comparison {
    let mut result = Comparison { compared: 0, first: None, last: None, mismatch: None };
    for (index, expected) in entries.iter().filter(|(i, _)| (map.offset..=limit).contains(i)) {
        let ours = values.get(map.name, *index);
        result.compared += 1;
        result.first.get_or_insert(*index);
        result.last = Some(*index);
        if ours != *expected {
            result.mismatch = Some((*index, expected.clone(), ours));
            break;
        }
    }
    result
}
