use std::collections::HashMap;

/// Default edge length of the dense block.
pub const DEFAULT_DENSE_THRESHOLD: usize = 32;

/// Memo storage keyed by index triples.
///
/// Keys whose coordinates all lie below the threshold live in a flat vector
/// (allocated on first insert); anything larger spills into a hash map.
/// Two-index tables use a zero third coordinate.
#[derive(Debug, Clone)]
pub struct MemoStore<V> {
    threshold: usize,
    dense: Vec<Option<V>>,
    sparse: HashMap<(usize, usize, usize), V>,
}

impl<V> Default for MemoStore<V> {
    fn default() -> Self {
        Self::with_threshold(DEFAULT_DENSE_THRESHOLD)
    }
}

impl<V> MemoStore<V> {
    pub fn with_threshold(threshold: usize) -> Self {
        Self {
            threshold,
            dense: Vec::new(),
            sparse: HashMap::new(),
        }
    }

    fn slot(&self, key: (usize, usize, usize)) -> Option<usize> {
        let t = self.threshold;
        (key.0 < t && key.1 < t && key.2 < t).then(|| (key.0 * t + key.1) * t + key.2)
    }

    pub fn get(&self, key: (usize, usize, usize)) -> Option<&V> {
        match self.slot(key) {
            Some(i) => self.dense.get(i).and_then(Option::as_ref),
            None => self.sparse.get(&key),
        }
    }

    /// Stores a value. Entries are write-once; a second insert for the same
    /// key is ignored so recomputation can never change a published value.
    pub fn insert(&mut self, key: (usize, usize, usize), value: V) {
        match self.slot(key) {
            Some(i) => {
                if self.dense.is_empty() {
                    let t = self.threshold;
                    self.dense.resize_with(t * t * t, || None);
                }
                self.dense[i].get_or_insert(value);
            }
            None => {
                self.sparse.entry(key).or_insert(value);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.dense.iter().filter(|v| v.is_some()).count() + self.sparse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
