//! Complex images on the reconstruction grid and their two-channel
//! (real/imaginary) representation used by the denoiser path.

use ndarray::{Array2, Array3, ArrayView2};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex-valued 2-D image, row-major. Values are dimensionless intensities.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    data: Array2<Complex64>,
}

impl Image {
    /// Wraps an array after checking the invariants: non-empty grid, all
    /// values finite.
    pub fn new(data: Array2<Complex64>) -> Result<Self> {
        if data.nrows() == 0 || data.ncols() == 0 {
            return Err(Error::InvalidArgument("image dimensions must be positive".into()));
        }
        if !data.iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite("image values"));
        }
        Ok(Self { data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { data: Array2::zeros((rows, cols)) }
    }

    pub fn from_shape_fn(rows: usize, cols: usize, f: impl FnMut((usize, usize)) -> Complex64) -> Self {
        Self { data: Array2::from_shape_fn((rows, cols), f) }
    }

    /// Real-valued input promoted to a complex image with zero imaginary part.
    pub fn from_real(real: &Array2<f64>) -> Self {
        Self { data: real.mapv(|v| Complex64::new(v, 0.0)) }
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn data(&self) -> &Array2<Complex64> {
        &self.data
    }

    pub fn into_data(self) -> Array2<Complex64> {
        self.data
    }

    /// Pixel-wise magnitudes.
    pub fn magnitude(&self) -> Array2<f64> {
        self.data.mapv(|v| v.norm())
    }

    /// Euclidean norm over all pixels.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest pixel magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: f64) -> Image {
        Image { data: self.data.mapv(|v| v * factor) }
    }

    /// Standard complex inner product `sum(conj(self) * other)`.
    pub fn inner(&self, other: &Image) -> Complex64 {
        assert_eq!(self.data.dim(), other.data.dim(), "inner product dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

impl std::ops::Add for &Image {
    type Output = Image;
    fn add(self, rhs: &Image) -> Image {
        Image { data: &self.data + &rhs.data }
    }
}

impl std::ops::Sub for &Image {
    type Output = Image;
    fn sub(self, rhs: &Image) -> Image {
        Image { data: &self.data - &rhs.data }
    }
}

/// Real/imaginary split of a complex image: channel 0 holds the real part,
/// channel 1 the imaginary part. Stored as one `(2, rows, cols)` array so the
/// CNN treats it as an ordinary two-channel feature map.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoChannelTensor {
    data: Array3<f64>,
}

impl TwoChannelTensor {
    pub fn new(data: Array3<f64>) -> Result<Self> {
        let (ch, rows, cols) = data.dim();
        if ch != 2 {
            return Err(Error::DimensionMismatch(format!("expected 2 channels, got {ch}")));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("tensor dimensions must be positive".into()));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("tensor values"));
        }
        Ok(Self { data })
    }

    pub fn from_channels(channel0: Array2<f64>, channel1: Array2<f64>) -> Result<Self> {
        if channel0.dim() != channel1.dim() {
            return Err(Error::DimensionMismatch(format!(
                "channel shapes differ: {:?} vs {:?}",
                channel0.dim(),
                channel1.dim()
            )));
        }
        let (rows, cols) = channel0.dim();
        let mut data = Array3::zeros((2, rows, cols));
        data.index_axis_mut(ndarray::Axis(0), 0).assign(&channel0);
        data.index_axis_mut(ndarray::Axis(0), 1).assign(&channel1);
        Self::new(data)
    }

    pub fn rows(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn cols(&self) -> usize {
        self.data.shape()[2]
    }

    pub fn channel0(&self) -> ArrayView2<'_, f64> {
        self.data.index_axis(ndarray::Axis(0), 0)
    }

    pub fn channel1(&self) -> ArrayView2<'_, f64> {
        self.data.index_axis(ndarray::Axis(0), 1)
    }

    pub fn data(&self) -> &Array3<f64> {
        &self.data
    }

    pub(crate) fn from_raw(data: Array3<f64>) -> Self {
        debug_assert_eq!(data.shape()[0], 2);
        Self { data }
    }
}

/// Splits a complex image into (real, imaginary) channels. Lossless.
pub fn image_to_channels(x: &Image) -> TwoChannelTensor {
    let (rows, cols) = (x.rows(), x.cols());
    let mut data = Array3::zeros((2, rows, cols));
    for r in 0..rows {
        for c in 0..cols {
            let v = x.data()[(r, c)];
            data[(0, r, c)] = v.re;
            data[(1, r, c)] = v.im;
        }
    }
    TwoChannelTensor { data }
}

/// Reassembles a complex image as `channel0 + i * channel1`. Inverse of
/// [`image_to_channels`], bit-exact.
pub fn channels_to_image(t: &TwoChannelTensor) -> Image {
    Image::from_shape_fn(t.rows(), t.cols(), |(r, c)| {
        Complex64::new(t.data[(0, r, c)], t.data[(1, r, c)])
    })
}
