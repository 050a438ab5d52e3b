//! Partitions, skew shapes and the row geometry used by the Bender-Knuth move.
//!
//! Rows and columns are 1-based everywhere in the public API.

use alloc::vec::Vec;
use core::fmt;

/// A weakly decreasing sequence of positive parts. Trailing zeros are never
/// stored, so structural equality is partition equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// `parts[row] < parts[row + 1]` (row is 1-based).
    NotDecreasing { row: usize },
    /// The inner partition of a skew shape does not fit inside the outer one.
    NotContained,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotDecreasing { row } => {
                write!(f, "parts are not weakly decreasing at row {row}")
            }
            PartitionError::NotContained => write!(f, "inner partition is not contained in outer"),
        }
    }
}

impl core::error::Error for PartitionError {}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(k) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing { row: k + 1 });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a zero-padded, already decreasing slice.
    pub(crate) fn from_padded(parts: &[u32]) -> Self {
        let len = parts.iter().take_while(|&&p| p > 0).count();
        debug_assert!(parts[len..].iter().all(|&p| p == 0));
        Partition {
            parts: parts[..len].iter().map(|&p| p as usize).collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `k` (1-based); rows past the end have length 0.
    pub fn row_len(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Parts as a zero-padded vector of length `width`.
    pub(crate) fn padded(&self, width: usize) -> Vec<u32> {
        let mut out = alloc::vec![0u32; width];
        for (o, &p) in out.iter_mut().zip(&self.parts) {
            *o = p as u32;
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A box of a diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `inner ⊆ outer`, rowwise.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.num_rows() <= outer.num_rows()
        && inner.parts.iter().zip(&outer.parts).all(|(i, o)| i <= o)
}

/// Whether `outer / inner` is a horizontal strip: `inner ⊆ outer` and no
/// column holds two cells of the difference.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    contains(inner, outer)
        && (1..outer.num_rows()).all(|k| outer.row_len(k + 1) <= inner.row_len(k))
}

/// A skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Contiguous run of columns `first..=last` in one row. Empty when
/// `last < first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub row: usize,
    pub first: usize,
    pub last: usize,
}

impl Segment {
    pub fn is_empty(&self) -> bool {
        self.last < self.first
    }

    pub fn len(&self) -> usize {
        (self.last + 1).saturating_sub(self.first)
    }

    pub fn contains_col(&self, col: usize) -> bool {
        self.first <= col && col <= self.last
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.first..=self.last).map(move |c| Cell::new(self.row, c))
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if !contains(&inner, &outer) {
            return Err(PartitionError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for k in 1..=self.outer.num_rows() {
            for j in self.inner.row_len(k) + 1..=self.outer.row_len(k) {
                out.push(Cell::new(k, j));
            }
        }
        out
    }

    /// The free sub-row of row `k`: cells of the shape with no cell of the
    /// shape directly above or below. Cells covered from below form a prefix
    /// of the row and cells covered from above a suffix, so what remains is a
    /// single interval.
    pub fn free_row_segment(&self, k: usize) -> Segment {
        let (first, last) = free_bounds(
            self.inner.row_len(k),
            self.outer.row_len(k),
            self.outer.row_len(k + 1),
            if k <= 1 {
                None
            } else {
                Some(self.inner.row_len(k - 1))
            },
        );
        let first = first + 1;
        Segment {
            row: k,
            first,
            last: last.max(first - 1),
        }
    }
}

/// Exclusive lower and inclusive upper column bound of the free part of a
/// row, given the inner/outer lengths of the row, the outer length of the
/// row below, and the inner length of the row above (`None` for row 1).
#[inline]
pub(crate) fn free_bounds(
    inner: usize,
    outer: usize,
    outer_below: usize,
    inner_above: Option<usize>,
) -> (usize, usize) {
    let lo = inner.max(outer_below);
    let hi = match inner_above {
        Some(a) => outer.min(a),
        None => outer,
    };
    (lo, hi)
}

/// Every partition with at most `max_rows` parts, each at most `max_cols`.
/// Ordered by size, then lexicographically decreasing within a size.
pub fn partitions_in_box(max_rows: usize, max_cols: usize) -> PartitionsInBox {
    PartitionsInBox {
        rows: max_rows,
        cols: max_cols,
        next_size: 0,
        pending: Vec::new().into_iter(),
    }
}

pub struct PartitionsInBox {
    rows: usize,
    cols: usize,
    next_size: usize,
    pending: alloc::vec::IntoIter<Partition>,
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.pending.next() {
                return Some(p);
            }
            if self.next_size > self.rows * self.cols {
                return None;
            }
            let mut batch = Vec::new();
            let mut cur = Vec::new();
            fill_size(self.next_size, self.rows, self.cols, &mut cur, &mut batch);
            self.next_size += 1;
            self.pending = batch.into_iter();
        }
    }
}

fn fill_size(
    remaining: usize,
    rows: usize,
    cap: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if rows == 0 {
        return;
    }
    for p in (1..=cap.min(remaining)).rev() {
        // the rest must fit in rows-1 rows of width p
        if remaining - p > (rows - 1) * p {
            continue;
        }
        cur.push(p);
        fill_size(remaining - p, rows - 1, p, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[0]), Partition::empty());
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing { row: 1 })
        );
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&Partition::empty(), &p(&[3, 1])));
        assert!(!contains(&p(&[2, 2]), &p(&[3, 1])));
        assert!(contains(&p(&[2, 1]), &p(&[3, 1])));
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[2])));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &p(&[1])));
        assert!(is_horizontal_strip(&p(&[2]), &p(&[2])));
    }

    #[test]
    fn skew_cells_examples() {
        let s = SkewShape::new(p(&[3, 1]), p(&[2])).unwrap();
        assert_eq!(s.cells(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
        let s = SkewShape::new(p(&[3, 1]), p(&[3, 1])).unwrap();
        assert!(s.cells().is_empty());
        let s = SkewShape::new(p(&[2, 2]), Partition::empty()).unwrap();
        assert_eq!(
            s.cells(),
            vec![
                Cell::new(1, 1),
                Cell::new(1, 2),
                Cell::new(2, 1),
                Cell::new(2, 2)
            ]
        );
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }

    #[test]
    fn free_segment_examples() {
        let s = SkewShape::new(p(&[3, 1]), Partition::empty()).unwrap();
        let seg = s.free_row_segment(1);
        assert_eq!((seg.first, seg.last), (2, 3));
        let s = SkewShape::new(p(&[2, 2]), Partition::empty()).unwrap();
        assert!(s.free_row_segment(1).is_empty());
        let s = SkewShape::new(p(&[2]), Partition::empty()).unwrap();
        let seg = s.free_row_segment(1);
        assert_eq!((seg.first, seg.last), (1, 2));
        // a row outside the shape is empty
        assert!(s.free_row_segment(3).is_empty());
    }

    #[test]
    fn box_enumeration_examples() {
        assert_eq!(
            partitions_in_box(0, 5).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(
            partitions_in_box(1, 2).collect::<Vec<_>>(),
            vec![Partition::empty(), p(&[1]), p(&[2])]
        );
        assert_eq!(
            partitions_in_box(2, 2).collect::<Vec<_>>(),
            vec![
                Partition::empty(),
                p(&[1]),
                p(&[2]),
                p(&[1, 1]),
                p(&[2, 1]),
                p(&[2, 2])
            ]
        );
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", p(&[3, 1])), "(3,1)");
        assert_eq!(alloc::format!("{}", Partition::empty()), "∅");
    }
}
