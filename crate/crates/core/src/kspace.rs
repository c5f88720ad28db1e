//! Multi-coil k-space data tied to the sampling mask that produced it.

use ndarray::{Array3, ArrayView2, Axis};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mask::SamplingMask;

/// Per-coil complex k-space samples. Every unsampled mask location is exactly
/// zero across all coils.
#[derive(Debug, Clone, PartialEq)]
pub struct KSpaceData {
    data: Array3<Complex64>, // (coil, row, col)
    mask: SamplingMask,
}

impl KSpaceData {
    /// Validates the shape and the unsampled-entries-are-zero invariant.
    pub fn new(data: Array3<Complex64>, mask: SamplingMask) -> Result<Self> {
        let (coils, rows, cols) = data.dim();
        if coils == 0 {
            return Err(Error::InvalidArgument("at least one coil required".into()));
        }
        if (rows, cols) != (mask.rows(), mask.cols()) {
            return Err(Error::DimensionMismatch(format!(
                "k-space grid {:?} does not match mask {:?}",
                (rows, cols),
                (mask.rows(), mask.cols())
            )));
        }
        if !data.iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite("k-space samples"));
        }
        for l in 0..coils {
            for r in 0..rows {
                for c in 0..cols {
                    if !mask.is_kept(r, c) && data[(l, r, c)] != Complex64::new(0.0, 0.0) {
                        return Err(Error::InvalidArgument(format!(
                            "nonzero sample at unsampled location (coil {l}, {r}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Self { data, mask })
    }

    /// Applies the mask to fully-populated data, zeroing unsampled locations.
    pub fn from_full(mut data: Array3<Complex64>, mask: SamplingMask) -> Result<Self> {
        let (_, rows, cols) = data.dim();
        if (rows, cols) != (mask.rows(), mask.cols()) {
            return Err(Error::DimensionMismatch(format!(
                "k-space grid {:?} does not match mask {:?}",
                (rows, cols),
                (mask.rows(), mask.cols())
            )));
        }
        for mut coil in data.axis_iter_mut(Axis(0)) {
            for r in 0..rows {
                for c in 0..cols {
                    if !mask.is_kept(r, c) {
                        coil[(r, c)] = Complex64::new(0.0, 0.0);
                    }
                }
            }
        }
        Self::new(data, mask)
    }

    pub(crate) fn from_raw(data: Array3<Complex64>, mask: SamplingMask) -> Self {
        #[cfg(debug_assertions)]
        {
            let (coils, rows, cols) = data.dim();
            for l in 0..coils {
                for r in 0..rows {
                    for c in 0..cols {
                        debug_assert!(
                            mask.is_kept(r, c) || data[(l, r, c)] == Complex64::new(0.0, 0.0)
                        );
                    }
                }
            }
        }
        Self { data, mask }
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

    pub fn mask(&self) -> &SamplingMask {
        &self.mask
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Standard complex inner product over all coils and locations.
    pub fn inner(&self, other: &KSpaceData) -> Complex64 {
        assert_eq!(self.data.dim(), other.data.dim(), "inner product dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}
