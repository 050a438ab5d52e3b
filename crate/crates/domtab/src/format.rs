//! JSON and text formats.

use std::time::Duration;

use domtab_core::{
    Bounds, Cell, DominoError, DominoPlacement, DominoTableau, Outcome, Partition, PartitionError,
    Report, Tableau, TableauError, Witness,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid partition: {0}")]
    Partition(#[from] PartitionError),
    #[error("invalid tableau: {0}")]
    Tableau(#[from] TableauError),
    #[error("invalid domino tableau: {0}")]
    Domino(#[from] DominoError),
    #[error("{0}")]
    Invalid(String),
}

/// A tableau either as its chain of partitions or as a filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableauJson {
    Chain { n: usize, chain: Vec<Vec<usize>> },
    Grid { grid: Vec<Vec<usize>>, n: usize },
}

impl TableauJson {
    pub fn chain_of(t: &Tableau) -> Self {
        TableauJson::Chain {
            n: t.n(),
            chain: t.chain().iter().map(|p| p.parts().to_vec()).collect(),
        }
    }

    pub fn grid_of(t: &Tableau) -> Self {
        TableauJson::Grid {
            grid: t.to_grid(),
            n: t.n(),
        }
    }

    pub fn to_tableau(&self) -> Result<Tableau, FormatError> {
        match self {
            TableauJson::Chain { n, chain } => {
                let parts = chain
                    .iter()
                    .map(|p| Partition::new(p.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Tableau::from_chain(*n, &parts)?)
            }
            TableauJson::Grid { grid, n } => Ok(Tableau::from_grid(grid, *n)?),
        }
    }
}

pub fn parse_tableau(text: &str) -> Result<Tableau, FormatError> {
    serde_json::from_str::<TableauJson>(text)?.to_tableau()
}

/// A bare filling such as `[[1,2],[3]]`.
pub fn parse_grid(text: &str, n: usize) -> Result<Tableau, FormatError> {
    let grid: Vec<Vec<usize>> = serde_json::from_str(text)?;
    Ok(Tableau::from_grid(&grid, n)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementJson {
    pub cells: [[usize; 2]; 2],
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominoJson {
    pub n: usize,
    pub chain: Vec<Vec<usize>>,
    pub tilings: Vec<Vec<PlacementJson>>,
}

impl DominoJson {
    pub fn of(dt: &DominoTableau) -> Self {
        DominoJson {
            n: dt.n(),
            chain: dt.chain().iter().map(|p| p.parts().to_vec()).collect(),
            tilings: dt
                .tilings()
                .iter()
                .map(|layer| {
                    layer
                        .iter()
                        .map(|d| {
                            let [a, b] = d.cells();
                            PlacementJson {
                                cells: [[a.row, a.col], [b.row, b.col]],
                                label: d.label(),
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_domino(&self) -> Result<DominoTableau, FormatError> {
        let chain = self
            .chain
            .iter()
            .map(|p| Partition::new(p.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut tilings = Vec::with_capacity(self.tilings.len());
        for layer in &self.tilings {
            let mut out = Vec::with_capacity(layer.len());
            for d in layer {
                let [[r1, c1], [r2, c2]] = d.cells;
                let p = DominoPlacement::new(Cell::new(r1, c1), Cell::new(r2, c2), d.label)
                    .ok_or_else(|| {
                        FormatError::Invalid(format!(
                            "cells ({r1},{c1}) and ({r2},{c2}) are not adjacent"
                        ))
                    })?;
                out.push(p);
            }
            tilings.push(out);
        }
        Ok(DominoTableau::new(self.n, chain, tilings)?)
    }
}

pub fn parse_domino(text: &str) -> Result<DominoTableau, FormatError> {
    serde_json::from_str::<DominoJson>(text)?.to_domino()
}

/// Comma separated nonnegative integers; the empty string is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<usize>, FormatError> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim().parse::<usize>().map_err(|_| {
                FormatError::Invalid(format!("'{}' is not a nonnegative integer", s.trim()))
            })
        })
        .collect()
}

pub fn parse_partition(text: &str) -> Result<Partition, FormatError> {
    Ok(Partition::new(parse_list(text)?)?)
}

/// `3x4` as rows and columns.
pub fn parse_box(text: &str) -> Result<(usize, usize), FormatError> {
    let bad = || FormatError::Invalid(format!("box '{text}' is not of the form ROWSxCOLS"));
    let (r, c) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((
        r.trim().parse().map_err(|_| bad())?,
        c.trim().parse().map_err(|_| bad())?,
    ))
}

/// Suite configuration file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: String,
    pub n: usize,
    #[serde(rename = "box")]
    pub bounds: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<usize>>,
}

impl SuiteConfig {
    pub fn to_bounds(&self) -> Result<Bounds, FormatError> {
        let mut b = Bounds::boxed(self.n, self.bounds[0], self.bounds[1]);
        b.max_size = self.max_size;
        b.shape = self.shape.clone().map(Partition::new).transpose()?;
        b.weight = self.weight.clone();
        Ok(b)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DomainJson {
    pub n: usize,
    #[serde(rename = "box")]
    pub bounds: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub relation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau: Option<TableauJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<TableauJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<TableauJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl WitnessJson {
    pub fn of(w: &Witness) -> Self {
        WitnessJson {
            relation: w.relation.clone(),
            lhs_word: w.lhs_word.as_ref().map(|x| x.to_string()),
            rhs_word: w.rhs_word.as_ref().map(|x| x.to_string()),
            tableau: w.tableau.as_ref().map(TableauJson::grid_of),
            lhs: w.lhs.as_ref().map(TableauJson::grid_of),
            rhs: w.rhs.as_ref().map(TableauJson::grid_of),
            detail: w.detail.clone().filter(|d| !d.is_empty()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub required: bool,
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub suite: String,
    pub domain: DomainJson,
    pub checked: u64,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    pub searches: std::collections::BTreeMap<String, SearchJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl ReportJson {
    pub fn of(r: &Report) -> Self {
        let d = &r.domain;
        let (outcome, witness) = match &r.outcome {
            Outcome::Verified => ("verified", None),
            Outcome::NotFound => ("not_found", None),
            Outcome::Counterexample(w) => ("counterexample", Some(WitnessJson::of(w))),
        };
        ReportJson {
            suite: r.suite.clone(),
            domain: DomainJson {
                n: d.n,
                bounds: [d.rows, d.cols],
                max_size: d.max_size,
                shape: d.shape.as_ref().map(|p| p.parts().to_vec()),
                weight: d.weight.clone(),
            },
            checked: r.checked,
            outcome,
            witness,
            searches: r
                .searches
                .iter()
                .map(|(k, s)| {
                    (
                        k.clone(),
                        SearchJson {
                            required: s.expect == domtab_core::Expect::Exists,
                            witness: s.witness.as_ref().map(WitnessJson::of),
                        },
                    )
                })
                .collect(),
            notes: r.notes.clone(),
            elapsed_ms: r.elapsed.map(|e: Duration| e.as_secs_f64() * 1e3),
        }
    }
}

/// One row per line, entries separated by spaces.
pub fn render_grid(t: &Tableau) -> String {
    t.to_string()
}

/// Boxes drawn with `+`, `-` and `|`; each cell shows its label and walls
/// separate different dominoes.
pub fn render_domino(dt: &DominoTableau) -> String {
    let labels = dt.label_grid();
    let rows = labels.len();
    let cols = labels.first().map_or(0, |r| r.len());
    if rows == 0 {
        return String::new();
    }
    // piece id per cell: dominoes share one, odd-strip singles get their own
    let mut piece: Vec<Vec<usize>> = labels.iter().map(|r| vec![usize::MAX; r.len()]).collect();
    let mut next = 0;
    for d in dt.tilings().iter().flatten() {
        for c in d.cells() {
            piece[c.row - 1][c.col - 1] = next;
        }
        next += 1;
    }
    for row in piece.iter_mut() {
        for p in row.iter_mut().filter(|p| **p == usize::MAX) {
            *p = next;
            next += 1;
        }
    }
    let width = labels
        .iter()
        .flatten()
        .map(|l| l.to_string().len())
        .max()
        .unwrap_or(1);
    let at = |r: isize, c: isize| -> Option<usize> {
        if r < 0 || c < 0 {
            return None;
        }
        piece
            .get(r as usize)
            .and_then(|row| row.get(c as usize))
            .copied()
    };
    let wall = |a: Option<usize>, b: Option<usize>| (a.is_some() || b.is_some()) && a != b;
    let mut lines = Vec::with_capacity(2 * rows + 1);
    for r in 0..=rows as isize {
        // boundary above row r
        let mut line = String::new();
        for c in 0..=cols as isize {
            let h = wall(at(r - 1, c - 1), at(r, c - 1)) || wall(at(r - 1, c), at(r, c));
            let v = wall(at(r - 1, c - 1), at(r - 1, c)) || wall(at(r, c - 1), at(r, c));
            line.push(match (h, v) {
                (true, true) => '+',
                (true, false) => '-',
                (false, true) => '|',
                (false, false) => ' ',
            });
            if c < cols as isize {
                let edge = if wall(at(r - 1, c), at(r, c)) {
                    "-"
                } else {
                    " "
                };
                line.push_str(&edge.repeat(width));
            }
        }
        lines.push(line.trim_end().to_string());
        if r == rows as isize {
            break;
        }
        let mut line = String::new();
        for c in 0..=cols as isize {
            line.push(if wall(at(r, c - 1), at(r, c)) {
                '|'
            } else {
                ' '
            });
            if let Some(l) = labels[r as usize].get(c as usize) {
                line.push_str(&format!("{l:>width$}"));
            }
        }
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n")
}
