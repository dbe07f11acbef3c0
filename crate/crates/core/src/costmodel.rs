//! Link-cost matrix, accumulated-cost totals, and the induced node numbering.
//!
//! Nodes enter the pipeline as symbolic labels tied to a symmetric cost
//! matrix. Summing each label's row gives its accumulated cost; sorting the
//! totals in increasing order assigns every label a rank in `1..=n`. All
//! later stages operate on ranks only.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Short symbolic node identifier, e.g. `"A"` or `"F"`.
///
/// Non-empty, free of whitespace and commas so it survives the CSV format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeLabel(String);

impl NodeLabel {
    pub fn new(symbol: impl Into<String>) -> Result<Self, CostMatrixError> {
        let symbol = symbol.into();
        if symbol.is_empty() {
            return Err(CostMatrixError::EmptyLabel);
        }
        if symbol.contains(',') || symbol.chars().any(char::is_whitespace) {
            return Err(CostMatrixError::InvalidLabel(symbol));
        }
        Ok(NodeLabel(symbol))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CostMatrixError {
    #[error("matrix needs at least 2 nodes, got {0}")]
    TooSmall(usize),
    #[error("node label may not be empty")]
    EmptyLabel,
    #[error("node label {0:?} contains whitespace or a comma")]
    InvalidLabel(String),
    #[error("duplicate node label {0:?}")]
    DuplicateLabel(String),
    #[error("cost row for {label:?} has {got} entries, expected {expected}")]
    RowLength {
        label: String,
        expected: usize,
        got: usize,
    },
    #[error("asymmetric costs: [{row},{col}] = {forward} but [{col},{row}] = {backward}")]
    Asymmetric {
        row: String,
        col: String,
        forward: f64,
        backward: f64,
    },
    #[error("diagonal entry [{label},{label}] must be 0, got {value}")]
    NonzeroDiagonal { label: String, value: f64 },
    #[error("cost [{row},{col}] = {value} is negative or not finite")]
    BadCost {
        row: String,
        col: String,
        value: f64,
    },
    #[error("matrix file needs a header line and at least 2 data rows")]
    MissingRows,
    #[error("header must start with \"label\", got {0:?}")]
    HeaderTag(String),
    #[error("line {line}: expected {expected} comma-separated fields, got {got}")]
    FieldCount {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: row label {got:?} does not match header label {expected:?}")]
    RowLabelMismatch {
        line: usize,
        expected: String,
        got: String,
    },
    #[error("line {line}: entry in column {col:?} is not a number: {token:?}")]
    BadNumber {
        line: usize,
        col: String,
        token: String,
    },
    #[error("line {line}: unexpected row after the matrix ended")]
    ExtraRow { line: usize },
}

/// Symmetric n×n table of nonnegative link costs with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    labels: Vec<NodeLabel>,
    costs: Vec<f64>, // row-major n×n
}

impl CostMatrix {
    /// Validates and stores a square cost table.
    ///
    /// Rejects anything smaller than 2×2, duplicate labels, ragged rows,
    /// negative/non-finite entries, nonzero diagonals, and asymmetry; the
    /// error names the offending labels and values.
    pub fn new(labels: Vec<NodeLabel>, rows: Vec<Vec<f64>>) -> Result<Self, CostMatrixError> {
        let n = labels.len();
        if n < 2 {
            return Err(CostMatrixError::TooSmall(n));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(CostMatrixError::DuplicateLabel(label.as_str().to_owned()));
            }
        }
        if rows.len() != n {
            return Err(CostMatrixError::RowLength {
                label: "<matrix>".to_owned(),
                expected: n,
                got: rows.len(),
            });
        }
        let mut costs = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CostMatrixError::RowLength {
                    label: labels[i].as_str().to_owned(),
                    expected: n,
                    got: row.len(),
                });
            }
            costs.extend_from_slice(row);
        }
        let m = CostMatrix { labels, costs };
        m.validate_entries()?;
        Ok(m)
    }

    fn validate_entries(&self) -> Result<(), CostMatrixError> {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let value = self.costs[i * n + j];
                if !value.is_finite() || value < 0.0 {
                    return Err(CostMatrixError::BadCost {
                        row: self.labels[i].as_str().to_owned(),
                        col: self.labels[j].as_str().to_owned(),
                        value,
                    });
                }
            }
            let diag = self.costs[i * n + i];
            if diag != 0.0 {
                return Err(CostMatrixError::NonzeroDiagonal {
                    label: self.labels[i].as_str().to_owned(),
                    value: diag,
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let forward = self.costs[i * n + j];
                let backward = self.costs[j * n + i];
                if forward != backward {
                    return Err(CostMatrixError::Asymmetric {
                        row: self.labels[i].as_str().to_owned(),
                        col: self.labels[j].as_str().to_owned(),
                        forward,
                        backward,
                    });
                }
            }
        }
        Ok(())
    }

    /// Parses the plain-text CSV format:
    /// header `label,<L1>,…,<Ln>`, then one `<Li>,c_i1,…,c_in` row per node.
    /// Whitespace around commas is ignored; blank lines are skipped.
    pub fn parse_csv(text: &str) -> Result<Self, CostMatrixError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (_, header) = lines.next().ok_or(CostMatrixError::MissingRows)?;
        let mut header_cells = header.split(',').map(str::trim);
        let tag = header_cells.next().unwrap_or("");
        if !tag.eq_ignore_ascii_case("label") {
            return Err(CostMatrixError::HeaderTag(tag.to_owned()));
        }
        let labels = header_cells
            .map(NodeLabel::new)
            .collect::<Result<Vec<_>, _>>()?;
        let n = labels.len();
        if n < 2 {
            return Err(CostMatrixError::TooSmall(n));
        }

        let mut rows = Vec::with_capacity(n);
        for label in &labels {
            let (line, raw) = lines.next().ok_or(CostMatrixError::MissingRows)?;
            let cells: Vec<&str> = raw.split(',').map(str::trim).collect();
            if cells.len() != n + 1 {
                return Err(CostMatrixError::FieldCount {
                    line,
                    expected: n + 1,
                    got: cells.len(),
                });
            }
            if cells[0] != label.as_str() {
                return Err(CostMatrixError::RowLabelMismatch {
                    line,
                    expected: label.as_str().to_owned(),
                    got: cells[0].to_owned(),
                });
            }
            let mut row = Vec::with_capacity(n);
            for (j, token) in cells[1..].iter().enumerate() {
                let value: f64 = token.parse().map_err(|_| CostMatrixError::BadNumber {
                    line,
                    col: labels[j].as_str().to_owned(),
                    token: (*token).to_owned(),
                })?;
                row.push(value);
            }
            rows.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(CostMatrixError::ExtraRow { line });
        }
        CostMatrix::new(labels, rows)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[NodeLabel] {
        &self.labels
    }

    /// Cost between the nodes at matrix positions `i` and `j`.
    pub fn cost(&self, i: usize, j: usize) -> f64 {
        self.costs[i * self.n() + j]
    }

    /// Matrix position of `label`, if present.
    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_str() == label)
    }
}

/// Per-label row sums of a cost matrix, in matrix label order.
#[derive(Debug, Clone, PartialEq)]
pub struct AccumulatedCosts {
    entries: Vec<(NodeLabel, f64)>,
}

impl AccumulatedCosts {
    pub fn get(&self, label: &str) -> Option<f64> {
        self.entries
            .iter()
            .find(|(l, _)| l.as_str() == label)
            .map(|(_, c)| *c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NodeLabel, f64)> {
        self.entries.iter().map(|(l, c)| (l, *c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Sum of each label's cost-matrix row.
pub fn accumulated_costs(m: &CostMatrix) -> AccumulatedCosts {
    let n = m.n();
    let entries = m
        .labels()
        .iter()
        .enumerate()
        .map(|(i, label)| (label.clone(), (0..n).map(|j| m.cost(i, j)).sum()))
        .collect();
    AccumulatedCosts { entries }
}

/// Bijection between labels and ranks `1..=n`, ordered by accumulated cost.
///
/// Ties keep the labels' original matrix order (stable sort), so numbering
/// is deterministic for every valid matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Numbering {
    by_rank: Vec<NodeLabel>, // index r-1 holds the label with rank r
}

impl Numbering {
    pub fn n(&self) -> u32 {
        self.by_rank.len() as u32
    }

    pub fn rank_of(&self, label: &str) -> Option<u32> {
        self.by_rank
            .iter()
            .position(|l| l.as_str() == label)
            .map(|p| p as u32 + 1)
    }

    pub fn label_of(&self, rank: u32) -> Option<&NodeLabel> {
        if rank == 0 {
            return None;
        }
        self.by_rank.get(rank as usize - 1)
    }

    /// Iterates `(rank, label)` pairs in rank order.
    pub fn iter_by_rank(&self) -> impl Iterator<Item = (u32, &NodeLabel)> {
        self.by_rank
            .iter()
            .enumerate()
            .map(|(i, l)| (i as u32 + 1, l))
    }
}

/// Ranks the matrix's labels `1..=n` by ascending accumulated cost.
pub fn number_nodes(m: &CostMatrix) -> Numbering {
    let totals = accumulated_costs(m);
    let mut order: Vec<&(NodeLabel, f64)> = totals.entries.iter().collect();
    // sort_by is stable: equal totals keep matrix order
    order.sort_by(|a, b| a.1.total_cmp(&b.1));
    Numbering {
        by_rank: order.into_iter().map(|(l, _)| l.clone()).collect(),
    }
}
