//! Semistandard tableaux stored as chains of partitions
//! `∅ = Λ_0 ⊆ Λ_1 ⊆ … ⊆ Λ_n`, each step a horizontal strip.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::partition::{is_horizontal_strip, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauError {
    /// The entry bound must be at least 1.
    InvalidBound,
    ChainLength {
        expected: usize,
        found: usize,
    },
    /// `Λ_0` is not the empty partition.
    NonEmptyBase,
    /// `Λ_{level-1} ⊄ Λ_level`.
    NotNested {
        level: usize,
    },
    /// `Λ_level / Λ_{level-1}` has two cells in one column.
    NotHorizontalStrip {
        level: usize,
    },
    /// Grid input violates row/column/shape monotonicity at this cell (1-based).
    NotSemistandard {
        row: usize,
        col: usize,
    },
    /// Grid entry outside `1..=n`.
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
    },
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauError::InvalidBound => write!(f, "entry bound n must be positive"),
            TableauError::ChainLength { expected, found } => {
                write!(f, "chain has {found} partitions, expected {expected}")
            }
            TableauError::NonEmptyBase => write!(f, "chain must start with the empty partition"),
            TableauError::NotNested { level } => {
                write!(f, "level {} is not contained in level {level}", level - 1)
            }
            TableauError::NotHorizontalStrip { level } => {
                write!(f, "difference at level {level} is not a horizontal strip")
            }
            TableauError::NotSemistandard { row, col } => {
                write!(f, "not semistandard at cell ({row},{col})")
            }
            TableauError::EntryOutOfRange { row, col, entry } => {
                write!(f, "entry {entry} at cell ({row},{col}) is out of range")
            }
        }
    }
}

impl core::error::Error for TableauError {}

/// Weight vector `β` with `β_i = |Λ_i / Λ_{i-1}|`. Always has length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Exchanges coordinates `i` and `i + 1` (1-based).
    pub fn swapped(&self, i: usize) -> Weight {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Weight(w)
    }

    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// A tableau in `Tab_n`.
///
/// Levels are stored flat and zero-padded to the number of rows of the
/// shape, which keeps the operators allocation free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    width: usize,
    levels: Vec<u32>,
}

impl Tableau {
    /// Validates a chain `Λ_0, …, Λ_n`.
    pub fn from_chain(n: usize, chain: &[Partition]) -> Result<Tableau, TableauError> {
        if n == 0 {
            return Err(TableauError::InvalidBound);
        }
        if chain.len() != n + 1 {
            return Err(TableauError::ChainLength {
                expected: n + 1,
                found: chain.len(),
            });
        }
        if !chain[0].is_empty() {
            return Err(TableauError::NonEmptyBase);
        }
        for i in 1..=n {
            if !crate::partition::contains(&chain[i - 1], &chain[i]) {
                return Err(TableauError::NotNested { level: i });
            }
            if !is_horizontal_strip(&chain[i], &chain[i - 1]) {
                return Err(TableauError::NotHorizontalStrip { level: i });
            }
        }
        let width = chain[n].num_rows();
        let mut levels = Vec::with_capacity(width * (n + 1));
        for lam in chain {
            levels.extend(lam.padded(width));
        }
        Ok(Tableau { n, width, levels })
    }

    /// Reads a filling: `Λ_k` is the set of cells with entry `≤ k`.
    pub fn from_grid(grid: &[Vec<usize>], n: usize) -> Result<Tableau, TableauError> {
        if n == 0 {
            return Err(TableauError::InvalidBound);
        }
        let rows: Vec<&Vec<usize>> = {
            let len = grid
                .iter()
                .rposition(|r| !r.is_empty())
                .map_or(0, |k| k + 1);
            grid[..len].iter().collect()
        };
        for (r, row) in rows.iter().enumerate() {
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(TableauError::NotSemistandard {
                    row: r + 1,
                    col: rows[r - 1].len() + 1,
                });
            }
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n {
                    return Err(TableauError::EntryOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        entry: e,
                    });
                }
                if c > 0 && row[c - 1] > e {
                    return Err(TableauError::NotSemistandard {
                        row: r + 1,
                        col: c + 1,
                    });
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(TableauError::NotSemistandard {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        let width = rows.len();
        let mut levels = vec![0u32; width * (n + 1)];
        for i in 1..=n {
            for (r, row) in rows.iter().enumerate() {
                levels[i * width + r] = row.iter().take_while(|&&e| e <= i).count() as u32;
            }
        }
        Ok(Tableau { n, width, levels })
    }

    pub(crate) fn from_levels(n: usize, width: usize, levels: Vec<u32>) -> Tableau {
        debug_assert_eq!(levels.len(), width * (n + 1));
        Tableau { n, width, levels }
    }

    /// The entry bound.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows of the shape.
    pub fn num_rows(&self) -> usize {
        self.width
    }

    pub fn level(&self, i: usize) -> Partition {
        Partition::from_padded(self.level_slice(i))
    }

    pub fn chain(&self) -> Vec<Partition> {
        (0..=self.n).map(|i| self.level(i)).collect()
    }

    #[inline]
    pub(crate) fn level_slice(&self, i: usize) -> &[u32] {
        &self.levels[i * self.width..(i + 1) * self.width]
    }

    /// Mutable access to `Λ_i` together with read access to `Λ_{i-1}` and
    /// `Λ_{i+1}`.
    #[inline]
    pub(crate) fn triple_mut(&mut self, i: usize) -> (&[u32], &mut [u32], &[u32]) {
        let w = self.width;
        let (below, rest) = self.levels.split_at_mut(i * w);
        let (mid, above) = rest.split_at_mut(w);
        (&below[(i - 1) * w..], mid, &above[..w])
    }

    pub fn shape(&self) -> Partition {
        self.level(self.n)
    }

    pub fn weight(&self) -> Weight {
        let mut w = Vec::with_capacity(self.n);
        let mut prev = 0usize;
        for i in 1..=self.n {
            let s: usize = self.level_slice(i).iter().map(|&p| p as usize).sum();
            w.push(s - prev);
            prev = s;
        }
        Weight(w)
    }

    /// The filling, one vector per row.
    pub fn to_grid(&self) -> Vec<Vec<usize>> {
        let mut grid: Vec<Vec<usize>> = (0..self.width)
            .map(|r| Vec::with_capacity(self.levels[self.n * self.width + r] as usize))
            .collect();
        for i in 1..=self.n {
            let (lo, hi) = (self.level_slice(i - 1), self.level_slice(i));
            for r in 0..self.width {
                for _ in lo[r]..hi[r] {
                    grid[r].push(i);
                }
            }
        }
        grid
    }
}

impl Ord for Tableau {
    /// Compares `n`, then the levels from `Λ_n` downwards, each
    /// lexicographically. This is the enumeration order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for i in (0..=self.n).rev() {
                let o = cmp_padded(self.level_slice(i), other.level_slice(i));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn cmp_padded(a: &[u32], b: &[u32]) -> Ordering {
    let len = a.len().max(b.len());
    for k in 0..len {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl fmt::Display for Tableau {
    /// One row per line, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.to_grid().iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau(n={}, {:?})", self.n, self.to_grid())
    }
}

/// Every tableau of shape `shape` with entries at most `n`, in increasing
/// [`Ord`] order. Empty when the shape has more than `n` rows.
pub fn enumerate_tableaux(shape: &Partition, n: usize) -> Tableaux {
    Tableaux::new(shape, n, None)
}

/// The tableaux of shape `shape` and weight `weight` (so `n = weight.len()`).
/// The number of items is the Kostka number.
pub fn enumerate_tableaux_weight(shape: &Partition, weight: &Weight) -> Tableaux {
    let n = weight.len();
    let mut sizes = Vec::with_capacity(n + 1);
    let mut acc = 0;
    sizes.push(0);
    for &b in weight.as_slice() {
        acc += b;
        sizes.push(acc);
    }
    let feasible = acc == shape.size();
    let mut it = Tableaux::new(shape, n, Some(sizes));
    if !feasible {
        it.done = true;
    }
    it
}

/// Depth-first stream over chains, choosing `Λ_{n-1}, Λ_{n-2}, …, Λ_1` in
/// turn, each lexicographically increasing among the horizontal-strip
/// predecessors of the level above.
pub struct Tableaux {
    n: usize,
    width: usize,
    levels: Vec<u32>,
    sizes: Option<Vec<usize>>,
    level: usize,
    fresh: bool,
    done: bool,
}

impl Tableaux {
    fn new(shape: &Partition, n: usize, sizes: Option<Vec<usize>>) -> Tableaux {
        let width = shape.num_rows();
        let mut levels = vec![0u32; width * (n + 1)];
        let done = n == 0 || width > n;
        if !done {
            levels[n * width..].copy_from_slice(&shape.padded(width));
        }
        Tableaux {
            n,
            width,
            levels,
            sizes,
            level: n.saturating_sub(1),
            fresh: true,
            done,
        }
    }

    /// Sets `Λ_level` to its first admissible value (`fresh`) or the next one
    /// after its current value. Returns false when exhausted.
    fn step(&mut self, fresh: bool) -> bool {
        let w = self.width;
        let i = self.level;
        let target = self.sizes.as_ref().map(|s| s[i]);
        let (_, mid, upper) = {
            let (lo, rest) = self.levels.split_at_mut(i * w);
            let (mid, hi) = rest.split_at_mut(w);
            (lo, mid, &hi[..w])
        };
        // bounds: upper[k+1] <= mid[k] <= upper[k]; rows k >= i are empty
        let lo_k = |k: usize| if k + 1 < w { upper[k + 1] } else { 0 };
        let hi_k = |k: usize| if k >= i { 0 } else { upper[k] };
        if (0..w).any(|k| lo_k(k) > hi_k(k)) {
            return false;
        }
        let mut started = !fresh;
        loop {
            if !started {
                for (k, m) in mid.iter_mut().enumerate().take(w) {
                    *m = lo_k(k);
                }
                started = true;
            } else {
                // odometer increment, last row fastest
                let mut k = w;
                loop {
                    if k == 0 {
                        return false;
                    }
                    k -= 1;
                    if mid[k] < hi_k(k) {
                        mid[k] += 1;
                        for (j, m) in mid.iter_mut().enumerate().take(w).skip(k + 1) {
                            *m = lo_k(j);
                        }
                        break;
                    }
                }
            }
            match target {
                Some(t) if mid.iter().map(|&p| p as usize).sum::<usize>() != t => continue,
                _ => return true,
            }
        }
    }
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        loop {
            if self.level == 0 {
                // Λ_0 = ∅ is forced; Λ_1 has at most one row by construction.
                let t = Tableau::from_levels(self.n, self.width, self.levels.clone());
                if self.n == 1 {
                    self.done = true;
                    return Some(t);
                }
                self.level = 1;
                self.fresh = false;
                return Some(t);
            }
            if self.step(self.fresh) {
                self.level -= 1;
                self.fresh = true;
            } else {
                self.level += 1;
                self.fresh = false;
                if self.level == self.n {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}
