//! Synthetic ground truth, coil sensitivities, sampling masks and noisy
//! k-space acquisition: the desk-scale stand-in for scanner data.

use ndarray::{Array2, Array3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::image::Image;
use crate::kspace::KSpaceData;
use crate::maps::SensitivityMaps;
use crate::mask::{centered_range, PatternKind, SamplingMask};
use crate::operators::{idft2_centered_raw, EncodingOperator};

/// Phantom family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhantomKind {
    SheppLogan,
    RandomEllipses,
}

#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct PhantomSpec {
    pub kind: PhantomKind,
    pub rows: usize,
    pub cols: usize,
    /// Number of ellipses for the random kind; ignored for Shepp-Logan.
    pub num_ellipses: usize,
    pub rng_seed: u64,
}

impl PhantomSpec {
    pub fn shepp_logan(rows: usize, cols: usize) -> Self {
        Self { kind: PhantomKind::SheppLogan, rows, cols, num_ellipses: 0, rng_seed: 0 }
    }

    pub fn random_ellipses(rows: usize, cols: usize, num_ellipses: usize, rng_seed: u64) -> Self {
        Self { kind: PhantomKind::RandomEllipses, rows, cols, num_ellipses, rng_seed }
    }
}

#[derive(Debug, Clone, Copy)]
struct Ellipse {
    intensity: f64,
    a: f64,
    b: f64,
    x0: f64,
    y0: f64,
    phi_deg: f64,
}

/// The standard ten-ellipse head phantom geometry with the
/// high-contrast (modified) intensity set.
const SHEPP_LOGAN: [Ellipse; 10] = [
    Ellipse { intensity: 1.0, a: 0.69, b: 0.92, x0: 0.0, y0: 0.0, phi_deg: 0.0 },
    Ellipse { intensity: -0.8, a: 0.6624, b: 0.874, x0: 0.0, y0: -0.0184, phi_deg: 0.0 },
    Ellipse { intensity: -0.2, a: 0.11, b: 0.31, x0: 0.22, y0: 0.0, phi_deg: -18.0 },
    Ellipse { intensity: -0.2, a: 0.16, b: 0.41, x0: -0.22, y0: 0.0, phi_deg: 18.0 },
    Ellipse { intensity: 0.1, a: 0.21, b: 0.25, x0: 0.0, y0: 0.35, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.046, b: 0.046, x0: 0.0, y0: 0.1, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.046, b: 0.046, x0: 0.0, y0: -0.1, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.046, b: 0.023, x0: -0.08, y0: -0.605, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.023, b: 0.023, x0: 0.0, y0: -0.606, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.023, b: 0.046, x0: 0.06, y0: -0.605, phi_deg: 0.0 },
];

fn rasterize(ellipses: &[Ellipse], rows: usize, cols: usize) -> Array2<f64> {
    let mut img = Array2::zeros((rows, cols));
    for e in ellipses {
        let (sin_phi, cos_phi) = (e.phi_deg.to_radians().sin(), e.phi_deg.to_radians().cos());
        for r in 0..rows {
            // Pixel centers mapped into [-1, 1] x [-1, 1]; y grows upward.
            let y = ((rows as f64 - 1.0) / 2.0 - r as f64) / (rows as f64 / 2.0);
            for c in 0..cols {
                let x = (c as f64 - (cols as f64 - 1.0) / 2.0) / (cols as f64 / 2.0);
                let dx = x - e.x0;
                let dy = y - e.y0;
                let u = dx * cos_phi + dy * sin_phi;
                let v = -dx * sin_phi + dy * cos_phi;
                if u * u / (e.a * e.a) + v * v / (e.b * e.b) <= 1.0 {
                    img[(r, c)] += e.intensity;
                }
            }
        }
    }
    img
}

/// Deterministic synthetic phantom with intensities in [0, 1].
pub fn make_phantom(spec: &PhantomSpec) -> Result<Image> {
    if spec.rows < 16 || spec.cols < 16 {
        return Err(Error::InvalidArgument("phantom dimensions must be at least 16".into()));
    }
    let real = match spec.kind {
        PhantomKind::SheppLogan => rasterize(&SHEPP_LOGAN, spec.rows, spec.cols),
        PhantomKind::RandomEllipses => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
            let mut ellipses = Vec::with_capacity(spec.num_ellipses);
            for i in 0..spec.num_ellipses {
                if i == 0 {
                    // A large, roughly centered body so the image resembles
                    // an anatomical slice.
                    ellipses.push(Ellipse {
                        intensity: 0.5 + 0.4 * rng.random::<f64>(),
                        a: 0.55 + 0.25 * rng.random::<f64>(),
                        b: 0.55 + 0.25 * rng.random::<f64>(),
                        x0: 0.2 * (rng.random::<f64>() - 0.5),
                        y0: 0.2 * (rng.random::<f64>() - 0.5),
                        phi_deg: 180.0 * rng.random::<f64>(),
                    });
                } else {
                    ellipses.push(Ellipse {
                        intensity: -0.3 + 0.8 * rng.random::<f64>(),
                        a: 0.05 + 0.3 * rng.random::<f64>(),
                        b: 0.05 + 0.3 * rng.random::<f64>(),
                        x0: 0.9 * (rng.random::<f64>() - 0.5),
                        y0: 0.9 * (rng.random::<f64>() - 0.5),
                        phi_deg: 180.0 * rng.random::<f64>(),
                    });
                }
            }
            rasterize(&ellipses, spec.rows, spec.cols).mapv(|v| v.clamp(0.0, 1.0))
        }
    };
    Ok(Image::from_real(&real))
}

/// Smooth simulated coil profiles: Gaussian magnitude bumps centered on the
/// image border at equal angles with mild random linear phase ramps, then
/// pixel-wise normalized so that `sum_l |S_l|^2 = 1` on support.
pub fn make_sensitivity_maps(
    num_coils: usize,
    rows: usize,
    cols: usize,
    rng_seed: u64,
) -> Result<SensitivityMaps> {
    if num_coils < 1 {
        return Err(Error::InvalidArgument("at least one coil required".into()));
    }
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("map dimensions must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let sigma = 0.6 * rows.max(cols) as f64;
    let mut data = Array3::<Complex64>::zeros((num_coils, rows, cols));
    for l in 0..num_coils {
        let theta = 2.0 * std::f64::consts::PI * l as f64 / num_coils as f64;
        let center_r = rows as f64 * (0.5 + 0.48 * theta.sin());
        let center_c = cols as f64 * (0.5 + 0.48 * theta.cos());
        // Up to ~a third of a cycle of phase across the field of view.
        let ramp_r = (rng.random::<f64>() - 0.5) * 0.7 * 2.0 * std::f64::consts::PI / rows as f64;
        let ramp_c = (rng.random::<f64>() - 0.5) * 0.7 * 2.0 * std::f64::consts::PI / cols as f64;
        let phase0 = rng.random::<f64>() * 2.0 * std::f64::consts::PI;
        for r in 0..rows {
            for c in 0..cols {
                let dr = r as f64 - center_r;
                let dc = c as f64 - center_c;
                let mag = (-(dr * dr + dc * dc) / (2.0 * sigma * sigma)).exp();
                let phase = phase0
                    + ramp_r * (r as f64 - rows as f64 / 2.0)
                    + ramp_c * (c as f64 - cols as f64 / 2.0);
                data[(l, r, c)] = Complex64::from_polar(mag, phase);
            }
        }
    }
    normalize_maps(data)
}

/// Pixel-wise normalization; pixels whose pre-normalization coil energy is
/// below 1e-8 are set off-support with all coil values zeroed.
fn normalize_maps(mut data: Array3<Complex64>) -> Result<SensitivityMaps> {
    let (coils, rows, cols) = data.dim();
    let mut support = Array2::from_elem((rows, cols), false);
    for r in 0..rows {
        for c in 0..cols {
            let energy: f64 = (0..coils).map(|l| data[(l, r, c)].norm_sqr()).sum();
            if energy > 1e-8 {
                support[(r, c)] = true;
                let scale = 1.0 / energy.sqrt();
                for l in 0..coils {
                    data[(l, r, c)] *= scale;
                }
            } else {
                for l in 0..coils {
                    data[(l, r, c)] = Complex64::new(0.0, 0.0);
                }
            }
        }
    }
    SensitivityMaps::new(data, support)
}

/// Builds a Cartesian undersampling mask: every `R`-th phase-encode line
/// (uniform-1d) or every `(R, R')`-th row/column (uniform-2d), plus a fully
/// sampled central ACS block of width `acs` (full-width rows for 1-d
/// patterns, a square block for 2-d ones). `R = 1` degenerates to the full
/// mask.
pub fn make_mask(rows: usize, cols: usize, pattern: PatternKind, acs: usize) -> Result<SamplingMask> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("mask dimensions must be positive".into()));
    }
    if acs > rows || acs > cols {
        return Err(Error::InvalidArgument(format!(
            "ACS width {acs} exceeds grid {rows}x{cols}"
        )));
    }
    match pattern {
        PatternKind::Full => Ok(SamplingMask::full(rows, cols)),
        PatternKind::Uniform1d { r } => {
            if r == 0 {
                return Err(Error::InvalidArgument("acceleration must be >= 1".into()));
            }
            if r == 1 {
                return Ok(SamplingMask::full(rows, cols));
            }
            let acs_range = centered_range(rows, acs);
            let kept = Array2::from_shape_fn((rows, cols), |(row, _)| {
                row % r == 0 || acs_range.contains(&row)
            });
            SamplingMask::new(kept, acs, cols, pattern)
        }
        PatternKind::Uniform2d { r_row, r_col } => {
            if r_row == 0 || r_col == 0 {
                return Err(Error::InvalidArgument("acceleration must be >= 1".into()));
            }
            if r_row == 1 && r_col == 1 {
                return Ok(SamplingMask::full(rows, cols));
            }
            let row_range = centered_range(rows, acs);
            let col_range = centered_range(cols, acs);
            let kept = Array2::from_shape_fn((rows, cols), |(row, col)| {
                (row % r_row == 0 && col % r_col == 0)
                    || (row_range.contains(&row) && col_range.contains(&col))
            });
            SamplingMask::new(kept, acs, acs, pattern)
        }
    }
}

/// Complex Gaussian noise: each real component is N(0, sigma^2), whitened
/// across coils.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct NoiseModel {
    pub sigma: f64,
    pub rng_seed: u64,
}

impl NoiseModel {
    pub fn noiseless() -> Self {
        Self { sigma: 0.0, rng_seed: 0 }
    }
}

/// Retrospectively undersampled acquisition: `d = E x + P .* n`.
///
/// Noise is drawn per grid location in a fixed (coil, row, col) order
/// regardless of the mask, so the same seed yields the same noise pattern
/// under any undersampling.
pub fn simulate_acquisition(
    x: &Image,
    maps: &SensitivityMaps,
    mask: &SamplingMask,
    noise: &NoiseModel,
) -> Result<KSpaceData> {
    if noise.sigma < 0.0 {
        return Err(Error::InvalidArgument("noise sigma must be nonnegative".into()));
    }
    let op = EncodingOperator::new(maps.clone(), mask.clone())?;
    let clean = op.forward(x)?;
    if noise.sigma == 0.0 {
        return Ok(clean);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(noise.rng_seed);
    let normal = StandardNormal;
    let mut data = clean.data().clone();
    for l in 0..data.shape()[0] {
        for r in 0..mask.rows() {
            for c in 0..mask.cols() {
                let re: f64 = normal.sample(&mut rng);
                let im: f64 = normal.sample(&mut rng);
                if mask.is_kept(r, c) {
                    data[(l, r, c)] += Complex64::new(re * noise.sigma, im * noise.sigma);
                }
            }
        }
    }
    KSpaceData::new(data, mask.clone())
}

/// Low-resolution sensitivity estimation from the ACS block: per-coil inverse
/// DFT of the Hann-windowed, zero-padded central block, divided by the
/// root-sum-of-squares of those low-resolution images.
pub fn estimate_maps_lowres(d: &KSpaceData) -> Result<SensitivityMaps> {
    let mask = d.mask();
    let (acs_r, acs_c) = (mask.acs_rows(), mask.acs_cols());
    if acs_r == 0 || acs_c == 0 {
        return Err(Error::InsufficientAcs("mask has no ACS block".into()));
    }
    let (rows, cols) = (d.rows(), d.cols());
    let row_range = mask.acs_row_range();
    let col_range = mask.acs_col_range();
    let hann = |i: usize, n: usize| -> f64 {
        if n == 1 {
            1.0
        } else {
            0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / (n - 1) as f64).cos())
        }
    };

    let coils = d.num_coils();
    let mut lowres = Vec::with_capacity(coils);
    for l in 0..coils {
        let mut padded = Array2::<Complex64>::zeros((rows, cols));
        for (bi, r) in row_range.clone().enumerate() {
            for (bj, c) in col_range.clone().enumerate() {
                padded[(r, c)] = d.data()[(l, r, c)] * hann(bi, acs_r) * hann(bj, acs_c);
            }
        }
        lowres.push(idft2_centered_raw(&padded));
    }

    let mut rss = Array2::<f64>::zeros((rows, cols));
    for r in 0..rows {
        for c in 0..cols {
            rss[(r, c)] = lowres.iter().map(|m| m[(r, c)].norm_sqr()).sum::<f64>().sqrt();
        }
    }
    if rss.iter().cloned().fold(0.0, f64::max) < 1e-8 {
        return Err(Error::InsufficientAcs("ACS block carries no signal".into()));
    }

    let mut data = Array3::<Complex64>::zeros((coils, rows, cols));
    for l in 0..coils {
        for r in 0..rows {
            for c in 0..cols {
                data[(l, r, c)] = lowres[l][(r, c)];
            }
        }
    }
    normalize_maps(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shepp_logan_bounds_and_corners() {
        let x = make_phantom(&PhantomSpec::shepp_logan(128, 128)).unwrap();
        let mag = x.magnitude();
        assert!(mag.iter().cloned().fold(0.0, f64::max) <= 1.0);
        assert_eq!(mag[(0, 0)], 0.0);
        assert_eq!(mag[(0, 127)], 0.0);
        assert_eq!(mag[(127, 0)], 0.0);
        assert_eq!(mag[(127, 127)], 0.0);
        // Skull rim brighter than interior.
        assert!(mag[(64, 64)] > 0.0);
    }

    #[test]
    fn phantoms_are_deterministic() {
        let spec = PhantomSpec::random_ellipses(64, 64, 8, 123);
        let a = make_phantom(&spec).unwrap();
        let b = make_phantom(&spec).unwrap();
        assert_eq!(a, b);
        let sl = PhantomSpec::shepp_logan(64, 64);
        assert_eq!(make_phantom(&sl).unwrap(), make_phantom(&sl).unwrap());
    }

    #[test]
    fn zero_ellipses_gives_zero_image() {
        let x = make_phantom(&PhantomSpec::random_ellipses(32, 32, 0, 5)).unwrap();
        assert_eq!(x.norm(), 0.0);
    }

    #[test]
    fn rejects_tiny_phantom() {
        assert!(make_phantom(&PhantomSpec::shepp_logan(8, 8)).is_err());
    }

    #[test]
    fn single_coil_map_has_unit_magnitude() {
        let maps = make_sensitivity_maps(1, 32, 32, 0).unwrap();
        for r in 0..32 {
            for c in 0..32 {
                if maps.support()[(r, c)] {
                    assert!((maps.data()[(0, r, c)].norm() - 1.0).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn maps_normalized_on_support() {
        for &l in &[1usize, 2, 4, 8] {
            let maps = make_sensitivity_maps(l, 32, 32, 7).unwrap();
            for r in 0..32 {
                for c in 0..32 {
                    if maps.support()[(r, c)] {
                        let e: f64 = (0..l).map(|i| maps.data()[(i, r, c)].norm_sqr()).sum();
                        assert!((e - 1.0).abs() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn maps_are_smooth() {
        // Largest pixel-to-neighbor magnitude jump on a 128x128 grid,
        // regression-pinned well under 0.1.
        let maps = make_sensitivity_maps(4, 128, 128, 9).unwrap();
        let mut max_jump = 0.0f64;
        for l in 0..4 {
            for r in 0..128 {
                for c in 0..127 {
                    let d = (maps.data()[(l, r, c)].norm() - maps.data()[(l, r, c + 1)].norm()).abs();
                    max_jump = max_jump.max(d);
                }
            }
            for r in 0..127 {
                for c in 0..128 {
                    let d = (maps.data()[(l, r, c)].norm() - maps.data()[(l, r + 1, c)].norm()).abs();
                    max_jump = max_jump.max(d);
                }
            }
        }
        assert!(max_jump <= 0.1, "max neighbor jump {max_jump}");
    }

    #[test]
    fn mask_full_when_r_is_one() {
        let m = make_mask(64, 64, PatternKind::Uniform1d { r: 1 }, 16).unwrap();
        assert_eq!(m.pattern(), PatternKind::Full);
        assert_eq!(m.acceleration(), 1.0);
    }

    #[test]
    fn mask_line_count_128_r4_acs24() {
        let m = make_mask(128, 128, PatternKind::Uniform1d { r: 4 }, 24).unwrap();
        let kept_lines = (0..128).filter(|&r| m.is_kept(r, 0)).count();
        assert_eq!(kept_lines, 50); // 32 uniform + (24 - 6) extra ACS lines
        assert!((m.acceleration() - 128.0 / 50.0).abs() < 1e-12);
        // Full-width ACS lines.
        for r in m.acs_row_range() {
            for c in 0..128 {
                assert!(m.is_kept(r, c));
            }
        }
    }

    #[test]
    fn mask_2d_pattern_in_corner_region() {
        let m = make_mask(64, 64, PatternKind::Uniform2d { r_row: 2, r_col: 2 }, 16).unwrap();
        for r in 0..16 {
            for c in 0..16 {
                assert_eq!(m.is_kept(r, c), r % 2 == 0 && c % 2 == 0);
            }
        }
        for r in m.acs_row_range() {
            for c in m.acs_col_range() {
                assert!(m.is_kept(r, c));
            }
        }
    }

    #[test]
    fn noiseless_single_coil_full_mask_acquisition_is_dft() {
        let x = make_phantom(&PhantomSpec::shepp_logan(32, 32)).unwrap();
        let maps = SensitivityMaps::uniform_single_coil(32, 32);
        let mask = SamplingMask::full(32, 32);
        let d = simulate_acquisition(&x, &maps, &mask, &NoiseModel::noiseless()).unwrap();
        let k = crate::operators::dft2_centered(&x);
        for r in 0..32 {
            for c in 0..32 {
                assert!((d.data()[(0, r, c)] - k.data()[(r, c)]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn noiseless_equals_forward_exactly() {
        let x = make_phantom(&PhantomSpec::random_ellipses(32, 32, 5, 3)).unwrap();
        let maps = make_sensitivity_maps(3, 32, 32, 11).unwrap();
        let mask = make_mask(32, 32, PatternKind::Uniform1d { r: 2 }, 12).unwrap();
        let d = simulate_acquisition(&x, &maps, &mask, &NoiseModel::noiseless()).unwrap();
        let op = EncodingOperator::new(maps, mask).unwrap();
        assert_eq!(d.data(), op.forward(&x).unwrap().data());
    }

    #[test]
    fn noise_std_matches_sigma() {
        let x = make_phantom(&PhantomSpec::shepp_logan(128, 128)).unwrap();
        let maps = make_sensitivity_maps(4, 128, 128, 13).unwrap();
        let mask = make_mask(128, 128, PatternKind::Uniform1d { r: 4 }, 24).unwrap();
        let sigma = 0.01;
        let noisy =
            simulate_acquisition(&x, &maps, &mask, &NoiseModel { sigma, rng_seed: 77 }).unwrap();
        let clean = simulate_acquisition(&x, &maps, &mask, &NoiseModel::noiseless()).unwrap();

        let mut samples = Vec::new();
        for l in 0..4 {
            for r in 0..128 {
                for c in 0..128 {
                    if mask.is_kept(r, c) {
                        let n = noisy.data()[(l, r, c)] - clean.data()[(l, r, c)];
                        samples.push(n.re);
                        samples.push(n.im);
                    }
                }
            }
        }
        let var = samples.iter().map(|v| v * v).sum::<f64>() / samples.len() as f64;
        let std = var.sqrt();
        assert!((std - sigma).abs() <= 0.05 * sigma, "empirical std {std}");
    }

    #[test]
    fn acquisition_is_deterministic() {
        let x = make_phantom(&PhantomSpec::shepp_logan(32, 32)).unwrap();
        let maps = make_sensitivity_maps(2, 32, 32, 1).unwrap();
        let mask = make_mask(32, 32, PatternKind::Uniform1d { r: 2 }, 8).unwrap();
        let nm = NoiseModel { sigma: 0.05, rng_seed: 42 };
        let a = simulate_acquisition(&x, &maps, &mask, &nm).unwrap();
        let b = simulate_acquisition(&x, &maps, &mask, &nm).unwrap();
        assert_eq!(a.data(), b.data());
    }

    #[test]
    fn lowres_estimate_recovers_smooth_maps() {
        // Smooth bright object covering the field of view, so the windowed
        // low-resolution ratio is informative everywhere.
        let rows = 64;
        let cols = 64;
        let object = Image::from_real(&Array2::from_shape_fn((rows, cols), |(r, c)| {
            let dr = (r as f64 - 31.5) / 40.0;
            let dc = (c as f64 - 31.5) / 40.0;
            0.4 + 0.6 * (-(dr * dr + dc * dc)).exp()
        }));
        let maps = make_sensitivity_maps(4, rows, cols, 21).unwrap();
        let mask = make_mask(rows, cols, PatternKind::Uniform2d { r_row: 2, r_col: 2 }, 24).unwrap();
        let d = simulate_acquisition(&object, &maps, &mask, &NoiseModel::noiseless()).unwrap();
        let est = estimate_maps_lowres(&d).unwrap();

        let mut num = 0.0f64;
        let mut den = 0.0f64;
        for l in 0..4 {
            for r in 0..rows {
                for c in 0..cols {
                    if est.support()[(r, c)] && maps.support()[(r, c)] {
                        num += (est.data()[(l, r, c)] - maps.data()[(l, r, c)]).norm_sqr();
                        den += maps.data()[(l, r, c)].norm_sqr();
                    }
                }
            }
        }
        let nrmse = (num / den).sqrt();
        assert!(nrmse <= 0.05, "map estimate NRMSE {nrmse}");
    }

    #[test]
    fn lowres_estimate_single_coil_has_unit_magnitude() {
        let x = make_phantom(&PhantomSpec::shepp_logan(64, 64)).unwrap();
        let maps = SensitivityMaps::uniform_single_coil(64, 64);
        let mask = make_mask(64, 64, PatternKind::Uniform1d { r: 2 }, 24).unwrap();
        let d = simulate_acquisition(&x, &maps, &mask, &NoiseModel::noiseless()).unwrap();
        let est = estimate_maps_lowres(&d).unwrap();
        for r in 0..64 {
            for c in 0..64 {
                if est.support()[(r, c)] {
                    assert!((est.data()[(0, r, c)].norm() - 1.0).abs() < 1e-6);
                }
            }
        }
    }

    #[test]
    fn lowres_estimate_rejects_zero_acs() {
        let mask = make_mask(32, 32, PatternKind::Uniform1d { r: 2 }, 8).unwrap();
        let d = KSpaceData::new(Array3::zeros((2, 32, 32)), mask).unwrap();
        assert!(matches!(estimate_maps_lowres(&d), Err(Error::InsufficientAcs(_))));
    }
}
