//! Quantitative image quality metrics: PSNR and SSIM on magnitude images,
//! optionally restricted to a support mask.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// PSNR value for identical inputs is capped here and flagged.
pub const PSNR_CAP_DB: f64 = 300.0;

/// Peak signal-to-noise ratio result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Psnr {
    pub db: f64,
    /// Set when the inputs were identical (zero MSE).
    pub identical: bool,
}

fn check_dims(reference: &Array2<f64>, test: &Array2<f64>) -> Result<()> {
    if reference.dim() != test.dim() {
        return Err(Error::DimensionMismatch(format!(
            "reference {:?} vs test {:?}",
            reference.dim(),
            test.dim()
        )));
    }
    Ok(())
}

/// `10 log10(MAX^2 / MSE)` with `MAX = max(reference)`. Identical inputs are
/// flagged and capped at [`PSNR_CAP_DB`].
pub fn psnr(reference: &Array2<f64>, test: &Array2<f64>) -> Result<Psnr> {
    psnr_masked(reference, test, None)
}

/// PSNR over the pixels selected by `support` (all pixels when `None`).
pub fn psnr_masked(
    reference: &Array2<f64>,
    test: &Array2<f64>,
    support: Option<&Array2<bool>>,
) -> Result<Psnr> {
    check_dims(reference, test)?;
    if let Some(s) = support {
        if s.dim() != reference.dim() {
            return Err(Error::DimensionMismatch(format!(
                "support {:?} vs image {:?}",
                s.dim(),
                reference.dim()
            )));
        }
    }
    let mut sum_sq = 0.0f64;
    let mut count = 0usize;
    let mut max_ref = 0.0f64;
    for ((idx, &r), &t) in reference.indexed_iter().zip(test.iter()) {
        if support.map_or(true, |s| s[idx]) {
            let d = r - t;
            sum_sq += d * d;
            count += 1;
            max_ref = max_ref.max(r);
        }
    }
    if count == 0 {
        return Err(Error::InvalidArgument("empty support region".into()));
    }
    let mse = sum_sq / count as f64;
    if mse == 0.0 {
        return Ok(Psnr { db: PSNR_CAP_DB, identical: true });
    }
    if max_ref <= 0.0 {
        return Err(Error::InvalidArgument("reference has zero dynamic range".into()));
    }
    Ok(Psnr { db: 10.0 * (max_ref * max_ref / mse).log10(), identical: false })
}

/// Where the SSIM dynamic range comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynamicRange {
    /// `max(reference)`; the default.
    Reference,
    /// `max` over both images; makes the measure symmetric in its inputs.
    Pair,
}

/// Mean local SSIM with a Gaussian window (11x11, sigma 1.5), K1 = 0.01,
/// K2 = 0.03, dynamic range from the reference image.
///
/// The window shrinks to the largest odd size that fits when the image is
/// smaller than 11 in either dimension. Local statistics are taken over
/// fully interior windows only.
pub fn ssim(reference: &Array2<f64>, test: &Array2<f64>) -> Result<f64> {
    ssim_with(reference, test, DynamicRange::Reference, None)
}

pub fn ssim_with(
    reference: &Array2<f64>,
    test: &Array2<f64>,
    range: DynamicRange,
    support: Option<&Array2<bool>>,
) -> Result<f64> {
    check_dims(reference, test)?;
    let (rows, cols) = reference.dim();
    if let Some(s) = support {
        if s.dim() != reference.dim() {
            return Err(Error::DimensionMismatch(format!(
                "support {:?} vs image {:?}",
                s.dim(),
                reference.dim()
            )));
        }
    }

    let mut win = 11usize.min(rows).min(cols);
    if win % 2 == 0 {
        win -= 1;
    }
    if win < 1 {
        return Err(Error::InvalidArgument("image too small for SSIM".into()));
    }
    let half = win / 2;

    // Normalized Gaussian window, sigma 1.5.
    let sigma = 1.5f64;
    let mut weights = Array2::<f64>::zeros((win, win));
    let mut wsum = 0.0;
    for i in 0..win {
        for j in 0..win {
            let di = i as f64 - half as f64;
            let dj = j as f64 - half as f64;
            let w = (-(di * di + dj * dj) / (2.0 * sigma * sigma)).exp();
            weights[(i, j)] = w;
            wsum += w;
        }
    }
    weights.mapv_inplace(|w| w / wsum);

    let max_val = match range {
        DynamicRange::Reference => reference.iter().cloned().fold(0.0, f64::max),
        DynamicRange::Pair => reference
            .iter()
            .chain(test.iter())
            .cloned()
            .fold(0.0, f64::max),
    };
    if max_val <= 0.0 {
        return Err(Error::InvalidArgument("zero dynamic range".into()));
    }
    let c1 = (0.01 * max_val).powi(2);
    let c2 = (0.03 * max_val).powi(2);

    let mut total = 0.0f64;
    let mut count = 0usize;
    for y in half..rows - half {
        for x in half..cols - half {
            if !support.map_or(true, |s| s[(y, x)]) {
                continue;
            }
            let mut mu1 = 0.0;
            let mut mu2 = 0.0;
            let mut e11 = 0.0;
            let mut e22 = 0.0;
            let mut e12 = 0.0;
            for i in 0..win {
                for j in 0..win {
                    let w = weights[(i, j)];
                    let p1 = reference[(y + i - half, x + j - half)];
                    let p2 = test[(y + i - half, x + j - half)];
                    mu1 += w * p1;
                    mu2 += w * p2;
                    e11 += w * p1 * p1;
                    e22 += w * p2 * p2;
                    e12 += w * p1 * p2;
                }
            }
            let var1 = e11 - mu1 * mu1;
            let var2 = e22 - mu2 * mu2;
            let cov = e12 - mu1 * mu2;
            let v = ((2.0 * mu1 * mu2 + c1) * (2.0 * cov + c2))
                / ((mu1 * mu1 + mu2 * mu2 + c1) * (var1 + var2 + c2));
            total += v;
            count += 1;
        }
    }
    if count == 0 {
        return Err(Error::InvalidArgument("no interior windows on support".into()));
    }
    Ok(total / count as f64)
}

/// One evaluated reconstruction, ready for JSON reporting.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricReport {
    pub schema_version: u32,
    pub method: String,
    pub mask_description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    pub psnr_db: f64,
    pub psnr_identical: bool,
    pub ssim: f64,
}

impl MetricReport {
    pub const SCHEMA_VERSION: u32 = 1;

    pub fn new(method: impl Into<String>, mask_description: impl Into<String>, psnr: Psnr, ssim: f64) -> Self {
        Self {
            schema_version: Self::SCHEMA_VERSION,
            method: method.into(),
            mask_description: mask_description.into(),
            lambda: None,
            iterations: None,
            psnr_db: psnr.db,
            psnr_identical: psnr.identical,
            ssim,
        }
    }
}
