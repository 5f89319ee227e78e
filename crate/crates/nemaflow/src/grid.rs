//! Periodic grid geometry and spectral tables.
//!
//! The domain is the torus `[0, L)^3` sampled on `n` uniform points per
//! axis. All discrete calculus is Fourier-based: wavenumbers are the signed
//! integer frequencies scaled by `2*pi/L`, and nonlinear products are
//! protected by the classic two-thirds dealiasing mask.

use std::sync::{Arc, OnceLock};

use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Try to honor `NEMAFLOW_THREADS` once; silently keep the default pool if
/// rayon was already initialized.
fn init_thread_pool() {
    static INIT: OnceLock<()> = OnceLock::new();
    INIT.get_or_init(|| {
        if let Ok(v) = std::env::var("NEMAFLOW_THREADS") {
            if let Ok(k) = v.trim().parse::<usize>() {
                if k > 0 {
                    let _ = rayon::ThreadPoolBuilder::new()
                        .num_threads(k)
                        .build_global();
                }
            }
        }
    });
}

struct GridInner {
    n: usize,
    box_length: f64,
    /// Signed frequency table scaled by `2*pi/L`, index-ordered like the FFT
    /// output: `0, 1, ..., n/2-1, -n/2, ..., -1`.
    wavenumbers: Vec<f64>,
    /// First-derivative symbol: same as `wavenumbers` but with the Nyquist
    /// frequency zeroed, so odd-order derivatives of real fields stay real
    /// and `div(grad f) == laplacian(f)` holds exactly.
    deriv: Vec<f64>,
    /// Per-axis dealias keep flags: true iff `|k| <= n/3` in index units.
    keep: Vec<bool>,
    fft_fwd: Arc<dyn Fft<f64>>,
    fft_inv: Arc<dyn Fft<f64>>,
}

/// Cheap handle to shared grid data; clone freely.
#[derive(Clone)]
pub struct Grid {
    inner: Arc<GridInner>,
}

impl std::fmt::Debug for Grid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Grid")
            .field("n", &self.inner.n)
            .field("box_length", &self.inner.box_length)
            .finish()
    }
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.inner.n == other.inner.n && self.inner.box_length == other.inner.box_length
    }
}

impl Grid {
    /// Build a periodic grid with `n` cells per axis on a box of side `l`.
    ///
    /// `n` must be even and at least 8; `l` must be positive and finite.
    pub fn new(n: usize, l: f64) -> Result<Grid> {
        init_thread_pool();
        if n < 8 || n % 2 != 0 {
            return Err(Error::Config(format!(
                "grid resolution must be even and >= 8, got n = {n}"
            )));
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::Config(format!("box length must be positive, got {l}")));
        }
        let scale = 2.0 * std::f64::consts::PI / l;
        let half = n / 2;
        let cut = n / 3; // keep |k| <= n/3 (index units)
        let mut wavenumbers = Vec::with_capacity(n);
        let mut deriv = Vec::with_capacity(n);
        let mut keep = Vec::with_capacity(n);
        for i in 0..n {
            let signed = if i < half { i as i64 } else { i as i64 - n as i64 };
            wavenumbers.push(signed as f64 * scale);
            deriv.push(if i == half { 0.0 } else { signed as f64 * scale });
            keep.push(signed.unsigned_abs() as usize <= cut);
        }
        let mut planner = FftPlanner::new();
        let fft_fwd = planner.plan_fft_forward(n);
        let fft_inv = planner.plan_fft_inverse(n);
        Ok(Grid {
            inner: Arc::new(GridInner {
                n,
                box_length: l,
                wavenumbers,
                deriv,
                keep,
                fft_fwd,
                fft_inv,
            }),
        })
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn box_length(&self) -> f64 {
        self.inner.box_length
    }

    /// Grid spacing `L/n`.
    pub fn spacing(&self) -> f64 {
        self.inner.box_length / self.inner.n as f64
    }

    /// Volume of one cell, `(L/n)^3`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(3)
    }

    /// Total measure `L^3`.
    pub fn volume(&self) -> f64 {
        self.inner.box_length.powi(3)
    }

    /// Physical coordinate of sample index `i` along any axis.
    pub fn coord(&self, i: usize) -> f64 {
        i as f64 * self.spacing()
    }

    /// Scaled signed frequency for FFT index `i`.
    pub fn wavenumber(&self, i: usize) -> f64 {
        self.inner.wavenumbers[i]
    }

    /// First-derivative symbol (Nyquist zeroed).
    pub(crate) fn deriv_symbol(&self, i: usize) -> f64 {
        self.inner.deriv[i]
    }

    /// `|k|^2` built from the derivative symbol, so that the Laplacian is
    /// exactly the divergence of the gradient.
    pub(crate) fn k_squared(&self, i: usize, j: usize, k: usize) -> f64 {
        let d = &self.inner.deriv;
        d[i] * d[i] + d[j] * d[j] + d[k] * d[k]
    }

    /// True iff the mode survives two-thirds dealiasing.
    pub(crate) fn dealias_keep(&self, i: usize, j: usize, k: usize) -> bool {
        let m = &self.inner.keep;
        m[i] && m[j] && m[k]
    }

    pub(crate) fn fft_forward_plan(&self) -> Arc<dyn Fft<f64>> {
        self.inner.fft_fwd.clone()
    }

    pub(crate) fn fft_inverse_plan(&self) -> Arc<dyn Fft<f64>> {
        self.inner.fft_inv.clone()
    }

    /// Error unless `self` and `other` describe the same discretization.
    pub fn check_same(&self, other: &Grid, context: &str) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "{context}: {}^3 (L = {}) vs {}^3 (L = {})",
                self.n(),
                self.box_length(),
                other.n(),
                other.box_length()
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wavenumber_table_n8() {
        let g = Grid::new(8, 2.0 * std::f64::consts::PI).unwrap();
        let ks: Vec<f64> = (0..8).map(|i| g.wavenumber(i)).collect();
        assert_eq!(ks, vec![0.0, 1.0, 2.0, 3.0, -4.0, -3.0, -2.0, -1.0]);
    }

    #[test]
    fn odd_n_rejected() {
        assert!(matches!(
            Grid::new(7, 2.0 * std::f64::consts::PI),
            Err(Error::Config(_))
        ));
        assert!(matches!(Grid::new(6, 1.0), Err(Error::Config(_))));
    }

    #[test]
    fn nonpositive_box_rejected() {
        assert!(matches!(Grid::new(8, 0.0), Err(Error::Config(_))));
        assert!(matches!(Grid::new(8, -1.0), Err(Error::Config(_))));
    }

    #[test]
    fn smallest_wavenumber_scales_with_box() {
        let g = Grid::new(32, 4.0 * std::f64::consts::PI).unwrap();
        assert!((g.wavenumber(1) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cell_volume_and_measure() {
        let l = 2.0 * std::f64::consts::PI;
        let g = Grid::new(16, l).unwrap();
        assert!((g.cell_volume() - (l / 16.0).powi(3)).abs() < 1e-15);
        assert!((g.volume() - l.powi(3)).abs() < 1e-12);
    }

    #[test]
    fn dealias_mask_cuts_above_third() {
        let g = Grid::new(12, 1.0).unwrap();
        // n/3 = 4: |k| in 0..=4 kept, 5 and Nyquist 6 dropped.
        assert!(g.dealias_keep(4, 0, 0));
        assert!(!g.dealias_keep(5, 0, 0));
        assert!(!g.dealias_keep(6, 0, 0));
        assert!(g.dealias_keep(12 - 4, 0, 0));
        assert!(!g.dealias_keep(12 - 5, 0, 0));
    }
}
