//! Data-consistency proximal step: solve
//! `(I + lambda E^H E) z = x_tilde + lambda E^H d`
//! by conjugate gradient on the normal equations.

use crate::error::{Error, Result};
use crate::image::Image;
use crate::kspace::KSpaceData;
use crate::operators::EncodingOperator;

/// Conjugate gradient stopping parameters.
#[derive(Debug, Clone, Copy)]
pub struct CgConfig {
    /// Relative residual threshold.
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for CgConfig {
    fn default() -> Self {
        Self { tol: 1e-8, max_iters: 200 }
    }
}

impl CgConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument("cg tol must be positive".into()));
        }
        if self.max_iters < 1 {
            return Err(Error::InvalidArgument("cg max_iters must be >= 1".into()));
        }
        Ok(())
    }
}

/// Solution of one proximal subproblem. `converged == false` flags that the
/// iteration cap was hit with the residual still above tolerance; the result
/// is returned anyway so the outer loop can proceed.
#[derive(Debug, Clone)]
pub struct ProxResult {
    pub z: Image,
    pub iterations_used: usize,
    pub final_relative_residual: f64,
    pub converged: bool,
    /// Relative residual after each iteration (entry 0 is the initial one).
    pub residual_history: Vec<f64>,
}

/// Applies `z -> z + lambda * E^H E z`, the Hermitian positive definite
/// operator of the proximal optimality system.
pub fn normal_apply(op: &EncodingOperator, lambda: f64, z: &Image) -> Result<Image> {
    let ehe = op.adjoint(&op.forward(z)?)?;
    Ok(&z.scale(1.0) + &ehe.scale(lambda))
}

/// Conjugate gradient for a Hermitian positive definite linear map.
///
/// `init` is the starting guess (zero when absent). Residual norms are
/// recorded per iteration.
pub fn cg_solve<F>(apply: F, rhs: &Image, init: Option<&Image>, cfg: &CgConfig) -> Result<ProxResult>
where
    F: Fn(&Image) -> Result<Image>,
{
    cfg.validate()?;
    let rhs_norm = rhs.norm();
    if rhs_norm == 0.0 {
        return Ok(ProxResult {
            z: Image::zeros(rhs.rows(), rhs.cols()),
            iterations_used: 0,
            final_relative_residual: 0.0,
            converged: true,
            residual_history: vec![0.0],
        });
    }

    let mut x = match init {
        Some(x0) => x0.clone(),
        None => Image::zeros(rhs.rows(), rhs.cols()),
    };
    let mut r = match init {
        Some(_) => rhs - &apply(&x)?,
        None => rhs.clone(),
    };
    let mut p = r.clone();
    let mut rs_old = r.inner(&r).re;

    let mut rel = rs_old.sqrt() / rhs_norm;
    let mut history = vec![rel];
    if rel <= cfg.tol {
        return Ok(ProxResult {
            z: x,
            iterations_used: 0,
            final_relative_residual: rel,
            converged: true,
            residual_history: history,
        });
    }

    let mut converged = false;
    let mut iterations = 0;
    for k in 1..=cfg.max_iters {
        let ap = apply(&p)?;
        let pap = p.inner(&ap).re;
        if pap <= 0.0 {
            // Numerically lost positive definiteness; stop with what we have.
            iterations = k - 1;
            break;
        }
        let alpha = rs_old / pap;
        x = &x + &p.scale(alpha);
        r = &r - &ap.scale(alpha);
        let rs_new = r.inner(&r).re;
        rel = rs_new.sqrt() / rhs_norm;
        history.push(rel);
        iterations = k;
        if rel <= cfg.tol {
            converged = true;
            break;
        }
        let beta = rs_new / rs_old;
        p = &r + &p.scale(beta);
        rs_old = rs_new;
    }

    Ok(ProxResult {
        z: x,
        iterations_used: iterations,
        final_relative_residual: rel,
        converged,
        residual_history: history,
    })
}

/// The proximal map of the data-fidelity term: returns the
/// `argmin_z 1/2 ||z - x_tilde||^2 + lambda/2 ||E z - d||^2`, computed via CG
/// on `(I + lambda E^H E) z = x_tilde + lambda E^H d`, warm-started at
/// `x_tilde`.
pub fn prox(
    op: &EncodingOperator,
    d: &KSpaceData,
    x_tilde: &Image,
    lambda: f64,
    cfg: &CgConfig,
) -> Result<ProxResult> {
    if !(lambda > 0.0) {
        return Err(Error::InvalidArgument("lambda must be positive".into()));
    }
    if (x_tilde.rows(), x_tilde.cols()) != (op.rows(), op.cols()) {
        return Err(Error::DimensionMismatch(format!(
            "x_tilde {:?} does not match operator grid {:?}",
            (x_tilde.rows(), x_tilde.cols()),
            (op.rows(), op.cols())
        )));
    }
    let rhs = x_tilde + &op.adjoint(d)?.scale(lambda);
    cg_solve(|z| normal_apply(op, lambda, z), &rhs, Some(x_tilde), cfg)
}
