//! Per-coil complex sensitivity profiles.

use ndarray::{Array2, Array3, ArrayView2, Axis};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on the per-pixel normalization `sum_l |S_l|^2 == 1` on support.
pub const MAP_NORMALIZATION_TOL: f64 = 1e-6;

/// Normalized coil sensitivity maps with an explicit support mask.
///
/// On support pixels the coil profiles satisfy `sum_l |S_l(p)|^2 = 1` (within
/// [`MAP_NORMALIZATION_TOL`]); off support every coil value is zero and the
/// pixel is treated as unobservable.
#[derive(Debug, Clone, PartialEq)]
pub struct SensitivityMaps {
    data: Array3<Complex64>, // (coil, row, col)
    support: Array2<bool>,
}

impl SensitivityMaps {
    pub fn new(data: Array3<Complex64>, support: Array2<bool>) -> Result<Self> {
        let (coils, rows, cols) = data.dim();
        if coils == 0 || rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("map dimensions must be positive".into()));
        }
        if support.dim() != (rows, cols) {
            return Err(Error::DimensionMismatch(format!(
                "support shape {:?} does not match maps {:?}",
                support.dim(),
                (rows, cols)
            )));
        }
        if !data.iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite("sensitivity maps"));
        }
        for r in 0..rows {
            for c in 0..cols {
                let energy: f64 = (0..coils).map(|l| data[(l, r, c)].norm_sqr()).sum();
                if support[(r, c)] {
                    if (energy - 1.0).abs() > MAP_NORMALIZATION_TOL {
                        return Err(Error::InvalidArgument(format!(
                            "maps not normalized at ({r}, {c}): sum |S|^2 = {energy}"
                        )));
                    }
                } else if energy != 0.0 {
                    return Err(Error::InvalidArgument(format!(
                        "nonzero coil values off support at ({r}, {c})"
                    )));
                }
            }
        }
        Ok(Self { data, support })
    }

    /// Single coil with unit sensitivity everywhere; support covers the grid.
    pub fn uniform_single_coil(rows: usize, cols: usize) -> Self {
        Self {
            data: Array3::from_elem((1, rows, cols), Complex64::new(1.0, 0.0)),
            support: Array2::from_elem((rows, cols), true),
        }
    }

    pub fn num_coils(&self) -> usize {
        self.data.shape()[0]
    }

    pub fn rows(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn cols(&self) -> usize {
        self.data.shape()[2]
    }

    pub fn data(&self) -> &Array3<Complex64> {
        &self.data
    }

    pub fn coil(&self, l: usize) -> ArrayView2<'_, Complex64> {
        self.data.index_axis(Axis(0), l)
    }

    pub fn support(&self) -> &Array2<bool> {
        &self.support
    }
}
