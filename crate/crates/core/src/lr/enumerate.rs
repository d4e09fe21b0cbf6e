//! Depth-first enumeration of Littlewood-Richardson fillings.
//!
//! Boxes are visited in reverse row word order (rows top to bottom, each row
//! right to left). In that order both neighbours a box is compared against,
//! the one to its right and the one above it, are already filled, and the
//! lattice condition only ever looks at the prefix, so every constraint is
//! checked the moment a value is placed.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Restrictions on the content of the fillings that are visited.
#[derive(Clone, Debug, Default)]
pub(crate) struct ContentFilter {
    /// Visit only fillings with exactly this content.
    pub exact: Option<Partition>,
    /// Content must fit in `width` columns and `height` rows.
    pub fits_in: Option<(usize, usize)>,
}

struct Cell {
    right: Option<usize>,
    above: Option<usize>,
}

pub(crate) struct Enumerator {
    cells: Vec<Cell>,
    /// Zero-based `(row, col)` of each cell, in visiting order.
    positions: Vec<(usize, usize)>,
    max_value: usize,
    max_count: Vec<usize>,
}

impl Enumerator {
    /// Prepares the cells of `outer/inner`; the partitions need not be in
    /// canonical skew form.
    pub fn new(outer: &Partition, inner: &Partition, filter: &ContentFilter) -> Self {
        let mut positions = Vec::new();
        for i in 0..outer.len() {
            for j in (inner.part(i)..outer.part(i)).rev() {
                positions.push((i, j));
            }
        }
        let index_of = |row: usize, col: usize| -> Option<usize> {
            if col < inner.part(row) || col >= outer.part(row) {
                return None;
            }
            positions.iter().position(|&p| p == (row, col))
        };
        let cells = positions
            .iter()
            .map(|&(i, j)| Cell {
                right: index_of(i, j + 1),
                above: if i == 0 { None } else { index_of(i - 1, j) },
            })
            .collect();

        let n = positions.len();
        let mut max_value = n.max(1);
        let mut max_count = vec![usize::MAX; n + 2];
        if let Some(nu) = &filter.exact {
            max_value = max_value.min(nu.len());
            for (v, slot) in max_count.iter_mut().enumerate().skip(1) {
                *slot = nu.part(v - 1);
            }
        }
        if let Some((width, height)) = filter.fits_in {
            max_value = max_value.min(height);
            // Lattice words have at least as many 1s as any other letter.
            max_count[1] = max_count[1].min(width);
        }
        Enumerator {
            cells,
            positions,
            max_value,
            max_count,
        }
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Calls `visit(values, content)` once per LR filling; `values` follows
    /// [`Self::positions`] and `content[v]` counts the entries equal to `v`.
    pub fn run<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(&[usize], &[usize]) -> Result<()>,
    {
        let n = self.cells.len();
        let mut values = vec![0usize; n];
        let mut counts = vec![0usize; n + 2];
        if n == 0 {
            return visit(&values, &counts);
        }
        self.descend(0, &mut values, &mut counts, &mut visit)
    }

    fn descend<F>(
        &self,
        k: usize,
        values: &mut [usize],
        counts: &mut [usize],
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[usize], &[usize]) -> Result<()>,
    {
        if k == self.cells.len() {
            return visit(values, counts);
        }
        let cell = &self.cells[k];
        let lo = cell.above.map_or(1, |a| values[a] + 1);
        let hi = cell.right.map_or(self.max_value, |r| values[r].min(self.max_value));
        for v in lo..=hi {
            if v > 1 && counts[v - 1] <= counts[v] {
                // Placing v would give more v's than (v-1)'s in this prefix;
                // larger values are even less supported once counts[v] is 0.
                if counts[v - 1] == 0 {
                    break;
                }
                continue;
            }
            if counts[v] >= self.max_count[v] {
                continue;
            }
            values[k] = v;
            counts[v] += 1;
            let r = self.descend(k + 1, values, counts, visit);
            counts[v] -= 1;
            r?;
        }
        Ok(())
    }
}

/// Content vector (indexed from 1) as a partition.
pub(crate) fn content_partition(counts: &[usize]) -> Partition {
    let parts: Vec<usize> = counts.iter().skip(1).copied().take_while(|&c| c > 0).collect();
    Partition::from_trusted(parts)
}

pub(crate) fn checked_inc(total: &mut u64) -> Result<()> {
    *total = total.checked_add(1).ok_or(Error::Overflow)?;
    Ok(())
}
