//! Parallel-MRI reconstruction toolkit.
//!
//! Implements a multi-coil Cartesian encoding model `d = E x + n` with
//! `E = P F S`, a conjugate-gradient data-consistency proximal step, an
//! ADMM plug-and-play loop driven by a pluggable denoiser (including a small
//! trainable encoder-decoder CNN), a GRAPPA baseline, synthetic data
//! generation, and PSNR/SSIM evaluation.

pub mod error;
pub mod image;
pub mod kspace;
pub mod maps;
pub mod mask;
pub mod metrics;
pub mod operators;
pub mod prox;
pub mod simulate;

pub use error::{Error, Result};
pub use image::{channels_to_image, image_to_channels, Image, TwoChannelTensor};
pub use kspace::KSpaceData;
pub use maps::SensitivityMaps;
pub use mask::{PatternKind, SamplingMask};
pub use operators::{dft2_centered, idft2_centered, EncodingOperator};
pub use prox::{cg_solve, normal_apply, prox, CgConfig, ProxResult};
