//! Sparse Gaussian elimination for the large, mostly-zero homogeneous systems
//! that arise when solving for morphisms (naturality squares, centres).

use std::collections::BTreeMap;

use super::matrix::Vector;
use super::scalar::{Field, Scalar};

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Incremental row reducer over `cols` unknowns.
#[derive(Debug, Clone)]
pub struct SparseEliminator {
    field: Field,
    cols: usize,
    /// Pivot column -> row whose leading entry (equal to 1) sits there.
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEliminator {
    pub fn new(field: Field, cols: usize) -> SparseEliminator {
        SparseEliminator {
            field,
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds an equation given as `(column, coefficient)` pairs in any order;
    /// repeated columns are summed. Returns whether the rank grew.
    pub fn push(&mut self, entries: impl IntoIterator<Item = (usize, Scalar)>) -> bool {
        let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, x) in entries {
            assert!(c < self.cols, "column {c} out of range");
            if x.is_zero() {
                continue;
            }
            let slot = row.entry(c).or_insert_with(|| self.field.zero());
            *slot += &x;
        }
        row.retain(|_, x| !x.is_zero());

        let mut cursor = 0;
        loop {
            let Some((&c, _)) = row.range(cursor..).next() else {
                return false;
            };
            match self.pivots.get(&c) {
                Some(prow) => {
                    let factor = row[&c].clone();
                    for (pc, px) in prow {
                        let slot = row.entry(*pc).or_insert_with(|| self.field.zero());
                        *slot -= &(&factor * px);
                        if slot.is_zero() {
                            row.remove(pc);
                        }
                    }
                    cursor = c + 1;
                }
                None => {
                    let inv = row[&c].inv();
                    let normalized: SparseRow = row.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                    self.pivots.insert(c, normalized);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space of all equations pushed so far.
    pub fn kernel(&self) -> Vec<Vector> {
        let reduced = self.back_substitute();
        let free: Vec<usize> = (0..self.cols).filter(|c| !reduced.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (&p, row) in &reduced {
                    if let Ok(i) = row.binary_search_by_key(&f, |(c, _)| *c) {
                        v[p] = -&row[i].1;
                    }
                }
                v
            })
            .collect()
    }

    /// Fully reduced rows: every pivot column is zero in every other row.
    fn back_substitute(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut acc: BTreeMap<usize, Scalar> = row.iter().cloned().collect();
            let targets: Vec<usize> = acc.keys().copied().filter(|&c| c != p && done.contains_key(&c)).collect();
            for c in targets {
                let Some(factor) = acc.get(&c).cloned() else {
                    continue;
                };
                for (dc, dx) in &done[&c] {
                    let slot = acc.entry(*dc).or_insert_with(|| self.field.zero());
                    *slot -= &(&factor * dx);
                    if slot.is_zero() {
                        acc.remove(dc);
                    }
                }
            }
            done.insert(p, acc.into_iter().collect());
        }
        done
    }
}
