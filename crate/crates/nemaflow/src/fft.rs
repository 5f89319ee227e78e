//! Three-dimensional FFT built from 1-D transforms along each axis.
//!
//! Forward transforms are normalized by `1/n^3` so the coefficients are the
//! Fourier coefficients of the trigonometric interpolant; the inverse is the
//! plain unnormalized sum. Lanes transform independently and in parallel.

use ndarray::parallel::prelude::*;
use ndarray::{Array3, Axis};
use num_complex::Complex;
use rustfft::Fft;
use std::sync::Arc;

use crate::grid::Grid;

pub type C64 = Complex<f64>;

fn transform_axis(data: &mut Array3<C64>, axis: usize, plan: &Arc<dyn Fft<f64>>) {
    let n = plan.len();
    let scratch_len = plan.get_inplace_scratch_len();
    data.lanes_mut(Axis(axis))
        .into_par_iter()
        .for_each_init(
            || (vec![C64::new(0.0, 0.0); n], vec![C64::new(0.0, 0.0); scratch_len]),
            |(buf, scratch), mut lane| {
                for (b, v) in buf.iter_mut().zip(lane.iter()) {
                    *b = *v;
                }
                plan.process_with_scratch(buf, scratch);
                for (v, b) in lane.iter_mut().zip(buf.iter()) {
                    *v = *b;
                }
            },
        );
}

/// Physical samples -> normalized spectral coefficients.
pub fn forward(grid: &Grid, samples: &Array3<f64>) -> Array3<C64> {
    let n = grid.n();
    debug_assert_eq!(samples.dim(), (n, n, n));
    let mut out = samples.mapv(|v| C64::new(v, 0.0));
    let plan = grid.fft_forward_plan();
    for axis in 0..3 {
        transform_axis(&mut out, axis, &plan);
    }
    let norm = 1.0 / (n as f64).powi(3);
    out.par_mapv_inplace(|c| c * norm);
    out
}

/// Spectral coefficients -> physical samples (real part; the imaginary
/// residue of a Hermitian-symmetric spectrum is roundoff).
pub fn backward(grid: &Grid, coeffs: &Array3<C64>) -> Array3<f64> {
    let n = grid.n();
    debug_assert_eq!(coeffs.dim(), (n, n, n));
    let mut work = coeffs.clone();
    let plan = grid.fft_inverse_plan();
    for axis in 0..3 {
        transform_axis(&mut work, axis, &plan);
    }
    work.mapv(|c| c.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::new(16, 2.0 * std::f64::consts::PI).unwrap()
    }

    #[test]
    fn round_trip_is_identity() {
        let g = grid();
        let n = g.n();
        let f = Array3::from_shape_fn((n, n, n), |(i, j, k)| {
            (g.coord(i)).sin() * (2.0 * g.coord(j)).cos() + 0.3 * (g.coord(k)).sin()
        });
        let back = backward(&g, &forward(&g, &f));
        let err = f
            .iter()
            .zip(back.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        assert!(err < 1e-13, "round trip error {err}");
    }

    #[test]
    fn single_mode_lands_in_one_bin() {
        let g = grid();
        let n = g.n();
        // cos(2x) splits evenly between bins k = 2 and k = -2.
        let f = Array3::from_shape_fn((n, n, n), |(i, _, _)| (2.0 * g.coord(i)).cos());
        let c = forward(&g, &f);
        assert!((c[[2, 0, 0]].re - 0.5).abs() < 1e-13);
        assert!((c[[n - 2, 0, 0]].re - 0.5).abs() < 1e-13);
        assert!(c[[1, 0, 0]].norm() < 1e-13);
        assert!(c[[0, 0, 0]].norm() < 1e-13);
    }

    #[test]
    fn constant_field_is_pure_dc() {
        let g = grid();
        let n = g.n();
        let f = Array3::from_elem((n, n, n), 2.5);
        let c = forward(&g, &f);
        assert!((c[[0, 0, 0]].re - 2.5).abs() < 1e-14);
        let off_dc: f64 = c
            .indexed_iter()
            .filter(|((i, j, k), _)| !(*i == 0 && *j == 0 && *k == 0))
            .map(|(_, v)| v.norm())
            .fold(0.0, f64::max);
        assert!(off_dc < 1e-14);
    }
}
