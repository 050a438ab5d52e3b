//! Domino tableaux and their identification with the fixed points of `D`.
//!
//! A skew 2-tableau fixed by the involution `t` and a covering of its skew
//! diagram by dominoes, none of which shares a horizontal edge with another
//! box of the diagram, determine each other. Applying this to the layers
//! `Λ_{i+1} / Λ_{i-1}` for `i = n-1, n-3, …` turns a `D`-fixed tableau into a
//! domino tableau and back.
//!
//! Layer labels follow the weight: label `k` marks the dominoes of
//! `Λ_{n-2k+2} / Λ_{n-2k}`, so the outermost layer is labelled 1. For odd `n`
//! the single cells of `Λ_1` carry label `(n+1)/2`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::operators::{apply_t_in_place, bk_skew};
use crate::partition::{contains, is_horizontal_strip, Cell, Partition, SkewShape};
use crate::tableau::{enumerate_tableaux_weight, Tableau, TableauError, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominoError {
    /// `t_generator` moves the tableau, so it is not fixed by `D`.
    NotDominoFixed {
        generator: usize,
    },
    /// The skew 2-tableau is not a fixed point of `t`.
    NotFixed,
    InvalidTwoTableau,
    /// Overlap, gap, bad domino or a shared horizontal edge.
    InvalidTiling {
        domino: Option<DominoPlacement>,
        reason: &'static str,
    },
    InvalidChain {
        reason: &'static str,
    },
    Tableau(TableauError),
}

impl fmt::Display for DominoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominoError::NotDominoFixed { generator } => {
                write!(f, "tableau is not fixed by D: t{generator} moves it")
            }
            DominoError::NotFixed => write!(f, "skew 2-tableau is not fixed by t"),
            DominoError::InvalidTwoTableau => write!(f, "partitions do not form a skew 2-tableau"),
            DominoError::InvalidTiling { domino, reason } => match domino {
                Some(d) => write!(f, "invalid tiling at domino {d}: {reason}"),
                None => write!(f, "invalid tiling: {reason}"),
            },
            DominoError::InvalidChain { reason } => write!(f, "invalid domino chain: {reason}"),
            DominoError::Tableau(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for DominoError {}

impl From<TableauError> for DominoError {
    fn from(e: TableauError) -> Self {
        DominoError::Tableau(e)
    }
}

/// Two edge-adjacent cells with a label. The first cell is the upper or the
/// left one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoPlacement {
    cells: [Cell; 2],
    label: usize,
}

impl DominoPlacement {
    /// `None` unless the cells share an edge.
    pub fn new(a: Cell, b: Cell, label: usize) -> Option<Self> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let horizontal = a.row == b.row && a.col + 1 == b.col;
        let vertical = a.col == b.col && a.row + 1 == b.row;
        (horizontal || vertical).then_some(DominoPlacement {
            cells: [a, b],
            label,
        })
    }

    pub fn cells(&self) -> [Cell; 2] {
        self.cells
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn is_horizontal(&self) -> bool {
        self.cells[0].row == self.cells[1].row
    }

    pub fn with_label(mut self, label: usize) -> Self {
        self.label = label;
        self
    }
}

impl fmt::Display for DominoPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}#{}", self.cells[0], self.cells[1], self.label)
    }
}

/// Domino weight `β′`, of length `⌊(n+1)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoWeight(pub Vec<usize>);

impl DominoWeight {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells of a tableau of this weight.
    pub fn cells(&self, n: usize) -> usize {
        let pairs = n / 2;
        2 * self.0.iter().take(pairs).sum::<usize>() + self.0.iter().skip(pairs).sum::<usize>()
    }

    /// Exchanges coordinates `i` and `i + 1` (1-based).
    pub fn swapped(&self, i: usize) -> DominoWeight {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        DominoWeight(w)
    }

    /// Weight of the corresponding `D`-fixed tableau:
    /// `(β′_m, …, β′_2, β′_2, β′_1, β′_1)`, with `β′_m` once for odd `n`.
    pub fn fixed_tableau_weight(&self, n: usize) -> Weight {
        debug_assert_eq!(self.0.len(), n.div_ceil(2));
        let mut w = vec![0; n];
        for k in 1..=n / 2 {
            w[n - 2 * k] = self.0[k - 1];
            w[n - 2 * k + 1] = self.0[k - 1];
        }
        if n % 2 == 1 {
            w[0] = self.0[n.div_ceil(2) - 1];
        }
        Weight(w)
    }

    /// Palindromic weight `(β′_1, …, β′_{⌈n/2⌉}, β′_{⌊n/2⌋}, …, β′_1)` of the
    /// matching self-evacuating tableaux.
    pub fn self_evacuating_weight(&self, n: usize) -> Weight {
        debug_assert_eq!(self.0.len(), n.div_ceil(2));
        let mut w: Vec<usize> = self.0.clone();
        w.extend(self.0[..n / 2].iter().rev());
        Weight(w)
    }
}

impl fmt::Display for DominoWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Weight(self.0.clone()).fmt(f)
    }
}

/// A domino tableau `Λ_ε ⊆ Λ_{ε+2} ⊆ … ⊆ Λ_n` with a tiling per layer.
/// `tilings[j]` covers `chain[j+1] / chain[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominoTableau {
    n: usize,
    chain: Vec<Partition>,
    tilings: Vec<Vec<DominoPlacement>>,
}

impl DominoTableau {
    /// Validates the chain and every layer tiling. Tilings are stored sorted.
    pub fn new(
        n: usize,
        chain: Vec<Partition>,
        mut tilings: Vec<Vec<DominoPlacement>>,
    ) -> Result<Self, DominoError> {
        if n == 0 {
            return Err(TableauError::InvalidBound.into());
        }
        let layers = n / 2;
        if chain.len() != layers + 1 {
            return Err(DominoError::InvalidChain {
                reason: "chain length must be floor(n/2) + 1",
            });
        }
        if tilings.len() != layers {
            return Err(DominoError::InvalidChain {
                reason: "one tiling per layer is required",
            });
        }
        if n.is_multiple_of(2) && !chain[0].is_empty() {
            return Err(DominoError::InvalidChain {
                reason: "innermost partition must be empty for even n",
            });
        }
        if chain[0].num_rows() > 1 {
            return Err(DominoError::InvalidChain {
                reason: "innermost partition must be a single row",
            });
        }
        for j in 0..layers {
            if !contains(&chain[j], &chain[j + 1]) {
                return Err(DominoError::InvalidChain {
                    reason: "chain is not nested",
                });
            }
            let shape = SkewShape::new(chain[j + 1].clone(), chain[j].clone())
                .expect("containment checked above");
            two_tableau_of_tiling(&shape, &tilings[j])?;
            let label = layers - j;
            if let Some(d) = tilings[j].iter().find(|d| d.label != label) {
                return Err(DominoError::InvalidTiling {
                    domino: Some(*d),
                    reason: "label does not match its layer",
                });
            }
            tilings[j].sort();
        }
        Ok(DominoTableau { n, chain, tilings })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn tilings(&self) -> &[Vec<DominoPlacement>] {
        &self.tilings
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chain is never empty")
    }

    /// Label of every cell of the shape, row by row. Single cells of the odd
    /// bottom strip get label `(n+1)/2`.
    pub fn label_grid(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        if self.n % 2 == 1 {
            let m = self.chain[0].row_len(1);
            grid[0][..m].fill(self.n.div_ceil(2));
        }
        for d in self.tilings.iter().flatten() {
            for c in d.cells {
                grid[c.row - 1][c.col - 1] = d.label;
            }
        }
        grid
    }
}

/// Whether no domino shares a horizontal edge with a box of `shape` outside
/// the domino.
fn horizontal_edges_ok(
    shape: &SkewShape,
    owner: &OwnerGrid,
    idx: usize,
    d: &DominoPlacement,
) -> bool {
    d.cells.iter().all(|c| {
        let above = Cell::new(c.row.wrapping_sub(1), c.col);
        let below = Cell::new(c.row + 1, c.col);
        [above, below]
            .iter()
            .all(|nb| !shape.contains_cell(*nb) || owner.get(*nb) == Some(idx))
    })
}

struct OwnerGrid {
    cols: usize,
    owner: Vec<Option<usize>>,
}

impl OwnerGrid {
    fn new(shape: &SkewShape) -> Self {
        let rows = shape.outer().num_rows();
        let cols = shape.outer().row_len(1);
        OwnerGrid {
            cols,
            owner: vec![None; rows * cols],
        }
    }

    fn slot(&self, c: Cell) -> Option<usize> {
        if c.row == 0 || c.col == 0 || c.col > self.cols {
            return None;
        }
        let k = (c.row - 1) * self.cols + c.col - 1;
        (k < self.owner.len()).then_some(k)
    }

    fn get(&self, c: Cell) -> Option<usize> {
        self.slot(c).and_then(|k| self.owner[k])
    }
}

/// Whether `tiling` exactly covers `shape` and satisfies the horizontal-edge
/// condition.
pub fn is_valid_tiling(shape: &SkewShape, tiling: &[DominoPlacement]) -> bool {
    check_tiling(shape, tiling).is_ok()
}

fn check_tiling(shape: &SkewShape, tiling: &[DominoPlacement]) -> Result<OwnerGrid, DominoError> {
    let mut grid = OwnerGrid::new(shape);
    for (idx, d) in tiling.iter().enumerate() {
        for c in d.cells {
            if !shape.contains_cell(c) {
                return Err(DominoError::InvalidTiling {
                    domino: Some(*d),
                    reason: "domino leaves the skew shape",
                });
            }
            let k = grid.slot(c).expect("cell inside shape");
            if grid.owner[k].is_some() {
                return Err(DominoError::InvalidTiling {
                    domino: Some(*d),
                    reason: "dominoes overlap",
                });
            }
            grid.owner[k] = Some(idx);
        }
    }
    if 2 * tiling.len() != shape.size() {
        return Err(DominoError::InvalidTiling {
            domino: None,
            reason: "dominoes do not cover the skew shape",
        });
    }
    for (idx, d) in tiling.iter().enumerate() {
        if !horizontal_edges_ok(shape, &grid, idx, d) {
            return Err(DominoError::InvalidTiling {
                domino: Some(*d),
                reason: "domino shares a horizontal edge with another box",
            });
        }
    }
    Ok(grid)
}

/// The covering attached to a `t`-fixed skew 2-tableau
/// `lower ⊆ middle ⊆ upper`: cells with a box of the diagram below them pair
/// vertically with that box, and each free sub-row, which holds as many
/// a-cells as b-cells, is cut into consecutive horizontal dominoes.
pub fn tiling_of_fixed(
    lower: &Partition,
    middle: &Partition,
    upper: &Partition,
    label: usize,
) -> Result<Vec<DominoPlacement>, DominoError> {
    let image = bk_skew(lower, middle, upper).map_err(|_| DominoError::InvalidTwoTableau)?;
    if &image != middle {
        return Err(DominoError::NotFixed);
    }
    let shape = SkewShape::new(upper.clone(), lower.clone()).expect("2-tableau is nested");
    let mut out = Vec::new();
    for k in 1..=upper.num_rows() {
        let inner = lower.row_len(k);
        let covered_below = upper.row_len(k + 1).min(upper.row_len(k));
        for j in inner + 1..=covered_below {
            out.push(
                DominoPlacement::new(Cell::new(k, j), Cell::new(k + 1, j), label)
                    .expect("adjacent"),
            );
        }
        let seg = shape.free_row_segment(k);
        let mut j = seg.first;
        while j < seg.last {
            out.push(
                DominoPlacement::new(Cell::new(k, j), Cell::new(k, j + 1), label)
                    .expect("adjacent"),
            );
            j += 2;
        }
        debug_assert!(seg.len().is_multiple_of(2));
    }
    out.sort();
    Ok(out)
}

/// Inverse of [`tiling_of_fixed`]: vertical dominoes are `a` over `b`, and
/// the horizontal dominoes of a row hold `a`s in their left half and `b`s in
/// their right half. Returns the middle partition.
pub fn two_tableau_of_tiling(
    shape: &SkewShape,
    tiling: &[DominoPlacement],
) -> Result<Partition, DominoError> {
    check_tiling(shape, tiling)?;
    let rows = shape.outer().num_rows();
    let mut mid: Vec<usize> = (1..=rows).map(|k| shape.inner().row_len(k)).collect();
    let mut horizontal = vec![0usize; rows];
    for d in tiling {
        let r = d.cells[0].row - 1;
        if d.is_horizontal() {
            horizontal[r] += 2;
        } else {
            mid[r] += 1;
        }
    }
    for (m, h) in mid.iter_mut().zip(&horizontal) {
        *m += h / 2;
    }
    let middle = Partition::new(mid).map_err(|_| DominoError::InvalidTiling {
        domino: None,
        reason: "tiling does not come from a skew 2-tableau",
    })?;
    if !is_horizontal_strip(&middle, shape.inner()) || !is_horizontal_strip(shape.outer(), &middle)
    {
        return Err(DominoError::InvalidTiling {
            domino: None,
            reason: "tiling does not come from a skew 2-tableau",
        });
    }
    debug_assert_eq!(
        bk_skew(shape.inner(), &middle, shape.outer()).ok().as_ref(),
        Some(&middle)
    );
    Ok(middle)
}

/// The first factor `t_i` of `D = t_{n-1} t_{n-3} ⋯` that moves `t`.
pub fn first_unfixed_factor(t: &Tableau) -> Option<usize> {
    let n = t.n();
    let mut i = n.saturating_sub(1);
    while i >= 1 {
        let mut u = t.clone();
        apply_t_in_place(&mut u, i);
        if &u != t {
            return Some(i);
        }
        i = i.saturating_sub(2);
    }
    None
}

/// `D(t) = t`. The factors of `D` act on disjoint levels of the chain, so
/// this holds iff each factor fixes `t`; both are computed and must agree.
pub fn is_domino_fixed(t: &Tableau) -> bool {
    let whole = &crate::operators::d_operator(t) == t;
    let factorwise = first_unfixed_factor(t).is_none();
    assert_eq!(whole, factorwise, "D-fixedness must agree with its factors");
    whole
}

/// The domino tableau of a `D`-fixed tableau.
pub fn domino_from_tableau(t: &Tableau) -> Result<DominoTableau, DominoError> {
    if let Some(i) = first_unfixed_factor(t) {
        return Err(DominoError::NotDominoFixed { generator: i });
    }
    let n = t.n();
    let eps = n % 2;
    let layers = n / 2;
    let chain: Vec<Partition> = (0..=layers).map(|j| t.level(eps + 2 * j)).collect();
    let mut tilings = Vec::with_capacity(layers);
    for j in 0..layers {
        let i = eps + 2 * j + 1;
        tilings.push(tiling_of_fixed(
            &t.level(i - 1),
            &t.level(i),
            &t.level(i + 1),
            layers - j,
        )?);
    }
    Ok(DominoTableau { n, chain, tilings })
}

/// Rebuilds the `D`-fixed tableau by reinserting every middle level.
pub fn tableau_from_domino(dt: &DominoTableau) -> Result<Tableau, DominoError> {
    let n = dt.n;
    let eps = n % 2;
    let mut chain = Vec::with_capacity(n + 1);
    if eps == 1 {
        chain.push(Partition::empty());
    }
    chain.push(dt.chain[0].clone());
    for j in 0..n / 2 {
        let shape = SkewShape::new(dt.chain[j + 1].clone(), dt.chain[j].clone()).map_err(|_| {
            DominoError::InvalidChain {
                reason: "chain is not nested",
            }
        })?;
        chain.push(two_tableau_of_tiling(&shape, &dt.tilings[j])?);
        chain.push(dt.chain[j + 1].clone());
    }
    let t = Tableau::from_chain(n, &chain)?;
    debug_assert!(first_unfixed_factor(&t).is_none());
    Ok(t)
}

/// `β′_k = |Λ_{n-2k+2} / Λ_{n-2k}| / 2`, and `β′_{(n+1)/2} = |Λ_1|` for odd n.
pub fn domino_weight(dt: &DominoTableau) -> DominoWeight {
    let layers = dt.n / 2;
    let mut w: Vec<usize> = (1..=layers)
        .map(|k| (dt.chain[layers - k + 1].size() - dt.chain[layers - k].size()) / 2)
        .collect();
    if dt.n % 2 == 1 {
        w.push(dt.chain[0].size());
    }
    DominoWeight(w)
}

/// Domino tableaux of shape `shape` and weight `weight`, via the `D`-fixed
/// tableaux of the matching ordinary weight.
pub fn enumerate_domino<'a>(
    shape: &Partition,
    weight: &DominoWeight,
    n: usize,
) -> impl Iterator<Item = DominoTableau> + 'a {
    let stream = if weight.len() == n.div_ceil(2) && n > 0 {
        Some(enumerate_tableaux_weight(
            shape,
            &weight.fixed_tableau_weight(n),
        ))
    } else {
        None
    };
    stream
        .into_iter()
        .flatten()
        .filter(is_domino_fixed)
        .map(|t| domino_from_tableau(&t).expect("D-fixed tableau converts"))
}

/// Every covering of `shape` by dominoes, with no further condition, in a
/// deterministic order. Exponential; meant for small shapes.
pub fn enumerate_tilings(shape: &SkewShape) -> Vec<Vec<DominoPlacement>> {
    let cells = shape.cells();
    let mut covered = vec![false; cells.len()];
    let index_of = |c: Cell| cells.binary_search(&c).ok();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        cells: &[Cell],
        covered: &mut [bool],
        index_of: &dyn Fn(Cell) -> Option<usize>,
        cur: &mut Vec<DominoPlacement>,
        out: &mut Vec<Vec<DominoPlacement>>,
    ) {
        let Some(first) = covered.iter().position(|c| !c) else {
            out.push(cur.clone());
            return;
        };
        let c = cells[first];
        covered[first] = true;
        for nb in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
            if let Some(k) = index_of(nb) {
                if !covered[k] {
                    covered[k] = true;
                    cur.push(DominoPlacement::new(c, nb, 1).expect("adjacent"));
                    go(cells, covered, index_of, cur, out);
                    cur.pop();
                    covered[k] = false;
                }
            }
        }
        covered[first] = false;
    }
    go(&cells, &mut covered, &index_of, &mut cur, &mut out);
    out
}
