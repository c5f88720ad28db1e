//! Cartesian k-space undersampling masks with autocalibration (ACS) metadata.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undersampling pattern family. Rows are the (first) phase-encode axis;
/// for 2-D patterns columns are the second undersampled axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "kebab-case")]
pub enum PatternKind {
    Full,
    Uniform1d { r: usize },
    Uniform2d { r_row: usize, r_col: usize },
}

/// Binary Cartesian sampling mask. The central `acs_rows x acs_cols` block is
/// fully sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingMask {
    kept: Array2<bool>,
    acs_rows: usize,
    acs_cols: usize,
    pattern: PatternKind,
}

/// Centered extent: the range of length `extent` centered on `floor(n/2)`.
pub(crate) fn centered_range(n: usize, extent: usize) -> std::ops::Range<usize> {
    let start = (n - extent) / 2;
    start..start + extent
}

impl SamplingMask {
    /// Validates that the declared ACS block is fully kept.
    pub fn new(kept: Array2<bool>, acs_rows: usize, acs_cols: usize, pattern: PatternKind) -> Result<Self> {
        let (rows, cols) = kept.dim();
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("mask dimensions must be positive".into()));
        }
        if acs_rows > rows || acs_cols > cols {
            return Err(Error::InvalidArgument(format!(
                "ACS extent {acs_rows}x{acs_cols} exceeds grid {rows}x{cols}"
            )));
        }
        for r in centered_range(rows, acs_rows) {
            for c in centered_range(cols, acs_cols) {
                if !kept[(r, c)] {
                    return Err(Error::InvalidArgument(format!(
                        "ACS location ({r}, {c}) is not kept"
                    )));
                }
            }
        }
        Ok(Self { kept, acs_rows, acs_cols, pattern })
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Self {
            kept: Array2::from_elem((rows, cols), true),
            acs_rows: rows,
            acs_cols: cols,
            pattern: PatternKind::Full,
        }
    }

    pub fn rows(&self) -> usize {
        self.kept.nrows()
    }

    pub fn cols(&self) -> usize {
        self.kept.ncols()
    }

    pub fn kept(&self) -> &Array2<bool> {
        &self.kept
    }

    pub fn is_kept(&self, r: usize, c: usize) -> bool {
        self.kept[(r, c)]
    }

    pub fn num_kept(&self) -> usize {
        self.kept.iter().filter(|&&k| k).count()
    }

    pub fn acs_rows(&self) -> usize {
        self.acs_rows
    }

    pub fn acs_cols(&self) -> usize {
        self.acs_cols
    }

    pub fn acs_row_range(&self) -> std::ops::Range<usize> {
        centered_range(self.rows(), self.acs_rows)
    }

    pub fn acs_col_range(&self) -> std::ops::Range<usize> {
        centered_range(self.cols(), self.acs_cols)
    }

    pub fn pattern(&self) -> PatternKind {
        self.pattern
    }

    /// Ratio of grid locations to kept locations; >= 1.
    pub fn acceleration(&self) -> f64 {
        (self.rows() * self.cols()) as f64 / self.num_kept() as f64
    }

    /// Human-readable summary for reports.
    pub fn description(&self) -> String {
        let pat = match self.pattern {
            PatternKind::Full => "full".to_string(),
            PatternKind::Uniform1d { r } => format!("uniform-1d R={r}"),
            PatternKind::Uniform2d { r_row, r_col } => format!("uniform-2d R={r_row}x{r_col}"),
        };
        format!(
            "{} ({}x{}, acs {}x{}, effective acceleration {:.2})",
            pat,
            self.rows(),
            self.cols(),
            self.acs_rows,
            self.acs_cols,
            self.acceleration()
        )
    }
}
