//! The multi-coil Cartesian encoding operator `E = P F S` built from a
//! sampling mask `P`, a unitary centered 2-D DFT `F`, and coil sensitivities
//! `S`, together with its adjoint `E^H`.
//!
//! Convention: unitary normalization (`1/sqrt(rows*cols)` in both directions)
//! and centering by index reordering with the center at `floor(n/2)`, so that
//! the adjoint is the literal conjugate transpose with no hidden scale factor.

use ndarray::{Array2, Array3, Axis};
use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use crate::error::{Error, Result};
use crate::image::Image;
use crate::kspace::KSpaceData;
use crate::maps::SensitivityMaps;
use crate::mask::SamplingMask;

/// Cyclic shift by (dr, dc): out[(i+dr) % rows, (j+dc) % cols] = in[i, j].
fn circshift2(a: &Array2<Complex64>, dr: usize, dc: usize) -> Array2<Complex64> {
    let (rows, cols) = a.dim();
    let mut out = Array2::zeros((rows, cols));
    for i in 0..rows {
        let ti = (i + dr) % rows;
        for j in 0..cols {
            out[(ti, (j + dc) % cols)] = a[(i, j)];
        }
    }
    out
}

fn fftshift2(a: &Array2<Complex64>) -> Array2<Complex64> {
    let (rows, cols) = a.dim();
    circshift2(a, rows / 2, cols / 2)
}

fn ifftshift2(a: &Array2<Complex64>) -> Array2<Complex64> {
    let (rows, cols) = a.dim();
    circshift2(a, rows.div_ceil(2), cols.div_ceil(2))
}

/// In-place unnormalized 2-D FFT: rows first, then columns through a scratch
/// buffer.
fn fft2_inplace(a: &mut Array2<Complex64>, direction: FftDirection) {
    let (rows, cols) = a.dim();
    let mut planner = FftPlanner::new();

    let row_fft = planner.plan_fft(cols, direction);
    for mut row in a.rows_mut() {
        let buf = row.as_slice_mut().expect("row-major layout");
        row_fft.process(buf);
    }

    let col_fft = planner.plan_fft(rows, direction);
    let mut scratch = vec![Complex64::default(); rows];
    for j in 0..cols {
        for i in 0..rows {
            scratch[i] = a[(i, j)];
        }
        col_fft.process(&mut scratch);
        for i in 0..rows {
            a[(i, j)] = scratch[i];
        }
    }
}

pub(crate) fn dft2_centered_raw(a: &Array2<Complex64>) -> Array2<Complex64> {
    let (rows, cols) = a.dim();
    let mut work = ifftshift2(a);
    fft2_inplace(&mut work, FftDirection::Forward);
    let scale = 1.0 / ((rows * cols) as f64).sqrt();
    let mut out = fftshift2(&work);
    out.mapv_inplace(|v| v * scale);
    out
}

pub(crate) fn idft2_centered_raw(a: &Array2<Complex64>) -> Array2<Complex64> {
    let (rows, cols) = a.dim();
    let mut work = ifftshift2(a);
    fft2_inplace(&mut work, FftDirection::Inverse);
    let scale = 1.0 / ((rows * cols) as f64).sqrt();
    let mut out = fftshift2(&work);
    out.mapv_inplace(|v| v * scale);
    out
}

/// Unitary centered 2-D DFT: DC lands at `(floor(rows/2), floor(cols/2))` and
/// `||F x|| == ||x||`.
pub fn dft2_centered(x: &Image) -> Image {
    Image::new(dft2_centered_raw(x.data())).expect("finite input stays finite")
}

/// Exact inverse of [`dft2_centered`].
pub fn idft2_centered(k: &Image) -> Image {
    Image::new(idft2_centered_raw(k.data())).expect("finite input stays finite")
}

/// The encoding operator `E = P F S` and its adjoint.
#[derive(Debug, Clone)]
pub struct EncodingOperator {
    maps: SensitivityMaps,
    mask: SamplingMask,
}

impl EncodingOperator {
    pub fn new(maps: SensitivityMaps, mask: SamplingMask) -> Result<Self> {
        if (maps.rows(), maps.cols()) != (mask.rows(), mask.cols()) {
            return Err(Error::DimensionMismatch(format!(
                "maps grid {:?} does not match mask {:?}",
                (maps.rows(), maps.cols()),
                (mask.rows(), mask.cols())
            )));
        }
        Ok(Self { maps, mask })
    }

    pub fn rows(&self) -> usize {
        self.mask.rows()
    }

    pub fn cols(&self) -> usize {
        self.mask.cols()
    }

    pub fn num_coils(&self) -> usize {
        self.maps.num_coils()
    }

    pub fn maps(&self) -> &SensitivityMaps {
        &self.maps
    }

    pub fn mask(&self) -> &SamplingMask {
        &self.mask
    }

    fn check_image(&self, x: &Image) -> Result<()> {
        if (x.rows(), x.cols()) != (self.rows(), self.cols()) {
            return Err(Error::DimensionMismatch(format!(
                "image {:?} does not match operator grid {:?}",
                (x.rows(), x.cols()),
                (self.rows(), self.cols())
            )));
        }
        Ok(())
    }

    fn check_kspace(&self, d: &KSpaceData) -> Result<()> {
        if (d.rows(), d.cols()) != (self.rows(), self.cols()) || d.num_coils() != self.num_coils() {
            return Err(Error::DimensionMismatch(format!(
                "k-space {:?} coils {} does not match operator {:?} coils {}",
                (d.rows(), d.cols()),
                d.num_coils(),
                (self.rows(), self.cols()),
                self.num_coils()
            )));
        }
        Ok(())
    }

    /// Noiseless application of the imaging model: per coil `l`,
    /// `output_l = P (F (S_l .* x))`. Unsampled entries are exactly zero.
    pub fn forward(&self, x: &Image) -> Result<KSpaceData> {
        self.check_image(x)?;
        let (rows, cols) = (self.rows(), self.cols());
        let coils = self.num_coils();
        let mut out = Array3::zeros((coils, rows, cols));
        for l in 0..coils {
            let weighted = self.maps.coil(l).to_owned() * x.data();
            let k = dft2_centered_raw(&weighted);
            let mut coil_out = out.index_axis_mut(Axis(0), l);
            for r in 0..rows {
                for c in 0..cols {
                    if self.mask.is_kept(r, c) {
                        coil_out[(r, c)] = k[(r, c)];
                    }
                }
            }
        }
        Ok(KSpaceData::from_raw(out, self.mask.clone()))
    }

    /// The adjoint `E^H`: `sum_l conj(S_l) .* F^{-1} (P .* d_l)`.
    pub fn adjoint(&self, d: &KSpaceData) -> Result<Image> {
        self.check_kspace(d)?;
        let (rows, cols) = (self.rows(), self.cols());
        let mut acc = Array2::<Complex64>::zeros((rows, cols));
        for l in 0..self.num_coils() {
            // The KSpaceData invariant guarantees P .* d == d.
            let img = idft2_centered_raw(&d.coil(l).to_owned());
            let coil_map = self.maps.coil(l);
            for r in 0..rows {
                for c in 0..cols {
                    acc[(r, c)] += coil_map[(r, c)].conj() * img[(r, c)];
                }
            }
        }
        Image::new(acc)
    }

    /// `E^H d`: the aliased baseline image and the initializer of the
    /// iterative reconstruction.
    pub fn zero_filled_recon(&self, d: &KSpaceData) -> Result<Image> {
        self.adjoint(d)
    }
}
