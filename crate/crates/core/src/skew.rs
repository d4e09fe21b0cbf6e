//! Skew diagrams `outer/inner` and the diagram operations on them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};

/// A skew diagram in canonical (translation-free) form.
///
/// Constructors strip empty rows at the top and bottom and empty columns on
/// the left, so two diagrams that differ only by a translation compare equal.
/// Empty rows or columns strictly inside a disconnected diagram are kept.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained { outer, inner });
        }
        Ok(Self::canonical(outer.parts(), &inner))
    }

    /// The straight shape `p/()`.
    pub fn straight(p: Partition) -> Self {
        Self::canonical(p.parts(), &Partition::empty())
    }

    pub fn empty() -> Self {
        SkewShape {
            outer: Partition::empty(),
            inner: Partition::empty(),
        }
    }

    /// `p` in the lower-left block and `q` in the upper-right block, sharing
    /// no row and no column.
    pub fn disjoint_union(p: &Partition, q: &Partition) -> Self {
        let shift = p.first();
        let outer: Vec<usize> = q
            .parts()
            .iter()
            .map(|&x| x + shift)
            .chain(p.parts().iter().copied())
            .collect();
        let inner = Partition::from_trusted(vec![shift; q.len()]);
        Self::canonical(&outer, &inner)
    }

    fn canonical(outer: &[usize], inner: &Partition) -> Self {
        let nonempty = |i: &usize| outer[*i] > inner.part(*i);
        let (Some(top), Some(bottom)) = (
            (0..outer.len()).find(nonempty),
            (0..outer.len()).rfind(nonempty),
        ) else {
            return Self::empty();
        };
        let shift = inner.part(bottom);
        let rows = top..=bottom;
        SkewShape {
            outer: Partition::from_trusted(rows.clone().map(|i| outer[i] - shift).collect()),
            inner: Partition::from_trusted(rows.map(|i| inner.part(i) - shift).collect()),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.first()
    }

    /// Half-open column range `[inner_i, outer_i)` of zero-based row `i`.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }

    /// Row lengths top to bottom, in position (zeros kept).
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows()).map(|i| self.row_range(i).len()).collect()
    }

    /// Zero-based `(row, col)` of every box, row by row, left to right.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .flat_map(|i| self.row_range(i).map(move |j| (i, j)))
            .collect()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        self.row_range(row).contains(&col)
    }

    /// Rotation by 180 degrees.
    pub fn rotate(&self) -> SkewShape {
        let l = self.num_rows();
        let w = self.num_cols();
        let outer: Vec<usize> = (0..l).map(|i| w - self.inner.part(l - 1 - i)).collect();
        let inner = Partition::from_trusted((0..l).map(|i| w - self.outer.part(l - 1 - i)).collect());
        Self::canonical(&outer, &inner)
    }

    /// Transpose: `(outer/inner)^c = outer^c/inner^c`.
    pub fn conjugate(&self) -> SkewShape {
        Self::canonical(self.outer.conjugate().parts(), &self.inner.conjugate())
    }

    /// Connected components, top-right first. Components share no row and no
    /// column; a connected shape yields a single-element list.
    pub fn decay(&self) -> Vec<SkewShape> {
        let mut components = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        for i in (0..self.num_rows()).filter(|&i| !self.row_range(i).is_empty()) {
            if let Some(&prev) = current.last() {
                // Consecutive nonempty rows touch iff their column ranges overlap.
                if self.outer.part(i) <= self.inner.part(prev) {
                    components.push(self.sub_rows(&current));
                    current.clear();
                }
            }
            current.push(i);
        }
        if !current.is_empty() {
            components.push(self.sub_rows(&current));
        }
        components
    }

    fn sub_rows(&self, rows: &[usize]) -> SkewShape {
        let (first, last) = (rows[0], rows[rows.len() - 1]);
        let outer: Vec<usize> = (first..=last).map(|i| self.outer.part(i)).collect();
        let inner = Partition::from_trusted((first..=last).map(|i| self.inner.part(i)).collect());
        Self::canonical(&outer, &inner)
    }

    pub fn is_connected(&self) -> bool {
        self.decay().len() <= 1
    }

    /// Row lengths of the diagram left after deleting the top `i - 1` boxes
    /// of every column, as a descending multiset with zeros dropped.
    ///
    /// Row `j` of that diagram has length `max(0, outer[i+j-1] - inner[j])`.
    ///
    /// # Panics
    /// If `i == 0`.
    pub fn rho(&self, i: usize) -> Vec<usize> {
        assert!(i >= 1, "rho is indexed from 1");
        let mut rows: Vec<usize> = (0..self.num_rows())
            .map(|j| self.outer.part(i - 1 + j).saturating_sub(self.inner.part(j)))
            .filter(|&x| x > 0)
            .collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        rows
    }

    /// Every rectangle placement that cannot grow by a row or a column in
    /// any direction while staying inside the diagram.
    ///
    /// Rows `r..=e` admit a rectangle exactly on columns
    /// `inner[r]+1 ..= outer[e]`; such a block is maximal when the row above
    /// is indented further and the row below is shorter.
    pub fn max_rectangle_placements(&self) -> Vec<RectanglePlacement> {
        let l = self.num_rows();
        let can_start = |r: usize| r == 0 || self.inner.part(r - 1) > self.inner.part(r);
        let can_end = |e: usize| e + 1 == l || self.outer.part(e + 1) < self.outer.part(e);
        let mut out = Vec::new();
        for r in (0..l).filter(|&r| can_start(r)) {
            for e in (r..l).filter(|&e| can_end(e)) {
                let left = self.inner.part(r);
                let right = self.outer.part(e);
                if right > left {
                    out.push(RectanglePlacement {
                        rect: Rectangle::new(right - left, e - r + 1)
                            .expect("positive sides"),
                        top_row: r + 1,
                        left_col: left + 1,
                    });
                }
            }
        }
        out
    }

    /// The row lengths sorted into a partition.
    pub fn row_lengths_partition(&self) -> Partition {
        Partition::from_unsorted(self.row_lengths()).expect("row lengths are nonnegative")
    }

    /// ASCII picture: `.` for cells of the inner diagram, `#` for boxes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.num_rows() {
            out.push_str(&".".repeat(self.inner.part(i)));
            out.push_str(&"#".repeat(self.row_range(i).len()));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"OUTER/INNER"`, e.g. `"11,6,5^3,4/3^2"`; a bare partition is a
/// straight shape.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = s.split_once('/').unwrap_or((s, "-"));
        SkewShape::new(outer.parse()?, inner.parse()?)
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SkewShape", 2)?;
        st.serialize_field("outer", &self.outer)?;
        st.serialize_field("inner", &self.inner)?;
        st.end()
    }
}

/// A rectangle sitting inside a skew diagram; rows and columns are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectanglePlacement {
    pub top_row: usize,
    pub left_col: usize,
    pub rect: Rectangle,
}

impl RectanglePlacement {
    pub fn as_partition(&self) -> Partition {
        Partition::rectangle(self.rect)
    }

    /// Zero-based boxes covered by the placement.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let rows = self.top_row - 1..self.top_row - 1 + self.rect.height();
        rows.flat_map(move |i| {
            (self.left_col - 1..self.left_col - 1 + self.rect.width()).map(move |j| (i, j))
        })
    }
}

impl fmt::Display for RectanglePlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{},{}", self.rect, self.top_row, self.left_col)
    }
}

impl Serialize for RectanglePlacement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("RectanglePlacement", 4)?;
        st.serialize_field("width", &self.rect.width())?;
        st.serialize_field("height", &self.rect.height())?;
        st.serialize_field("top_row", &self.top_row)?;
        st.serialize_field("left_col", &self.left_col)?;
        st.end()
    }
}
