//! Array-level spectral kernels shared by the field API and the stepper.
//!
//! Everything here works on raw coefficient arrays so the time stepper can
//! avoid round trips through the field wrappers on its hot path.

use ndarray::Array3;

use crate::fft::C64;
use crate::grid::Grid;

/// Multiply every coefficient by a mode-dependent symbol.
pub(crate) fn apply_symbol(
    grid: &Grid,
    coeffs: &Array3<C64>,
    symbol: impl Fn(&Grid, usize, usize, usize) -> C64,
) -> Array3<C64> {
    let n = grid.n();
    let mut out = coeffs.clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[[i, j, k]] *= symbol(grid, i, j, k);
            }
        }
    }
    out
}

pub(crate) fn gradient(grid: &Grid, coeffs: &Array3<C64>) -> [Array3<C64>; 3] {
    [
        apply_symbol(grid, coeffs, |g, i, _, _| C64::new(0.0, g.deriv_symbol(i))),
        apply_symbol(grid, coeffs, |g, _, j, _| C64::new(0.0, g.deriv_symbol(j))),
        apply_symbol(grid, coeffs, |g, _, _, k| C64::new(0.0, g.deriv_symbol(k))),
    ]
}

pub(crate) fn divergence(grid: &Grid, comps: &[Array3<C64>; 3]) -> Array3<C64> {
    let n = grid.n();
    let mut out = Array3::from_elem((n, n, n), C64::new(0.0, 0.0));
    for i in 0..n {
        let ki = grid.deriv_symbol(i);
        for j in 0..n {
            let kj = grid.deriv_symbol(j);
            for k in 0..n {
                let kk = grid.deriv_symbol(k);
                let d = C64::new(0.0, ki) * comps[0][[i, j, k]]
                    + C64::new(0.0, kj) * comps[1][[i, j, k]]
                    + C64::new(0.0, kk) * comps[2][[i, j, k]];
                out[[i, j, k]] = d;
            }
        }
    }
    out
}

/// Project onto the divergence-free subspace: `v - k (k.v) / |k|^2` mode by
/// mode, leaving `k = 0` (and zero-symbol Nyquist planes) untouched.
pub(crate) fn leray(grid: &Grid, comps: &[Array3<C64>; 3]) -> [Array3<C64>; 3] {
    let n = grid.n();
    let mut out = comps.clone();
    for i in 0..n {
        let ki = grid.deriv_symbol(i);
        for j in 0..n {
            let kj = grid.deriv_symbol(j);
            for k in 0..n {
                let kk = grid.deriv_symbol(k);
                let k2 = ki * ki + kj * kj + kk * kk;
                if k2 == 0.0 {
                    continue;
                }
                let dot = ki * comps[0][[i, j, k]] + kj * comps[1][[i, j, k]]
                    + kk * comps[2][[i, j, k]];
                let factor = dot / k2;
                out[0][[i, j, k]] -= ki * factor;
                out[1][[i, j, k]] -= kj * factor;
                out[2][[i, j, k]] -= kk * factor;
            }
        }
    }
    out
}

/// Potential of the gradient part removed by [`leray`], normalized to zero
/// mean: solves `grad p = (I - P) v` exactly in spectral space.
pub(crate) fn gradient_potential(grid: &Grid, comps: &[Array3<C64>; 3]) -> Array3<C64> {
    let n = grid.n();
    let mut out = Array3::from_elem((n, n, n), C64::new(0.0, 0.0));
    for i in 0..n {
        let ki = grid.deriv_symbol(i);
        for j in 0..n {
            let kj = grid.deriv_symbol(j);
            for k in 0..n {
                let kk = grid.deriv_symbol(k);
                let k2 = ki * ki + kj * kj + kk * kk;
                if k2 == 0.0 {
                    continue;
                }
                let dot = ki * comps[0][[i, j, k]] + kj * comps[1][[i, j, k]]
                    + kk * comps[2][[i, j, k]];
                // i k p = k (k.v)/k^2  =>  p = -i (k.v)/k^2
                out[[i, j, k]] = C64::new(0.0, -1.0) * dot / k2;
            }
        }
    }
    out
}

/// Solve `laplacian p = rhs` with zero-mean `p`.
pub(crate) fn poisson(grid: &Grid, rhs: &Array3<C64>) -> Array3<C64> {
    apply_symbol(grid, rhs, |g, i, j, k| {
        let k2 = g.k_squared(i, j, k);
        if k2 == 0.0 {
            C64::new(0.0, 0.0)
        } else {
            C64::new(-1.0 / k2, 0.0)
        }
    })
}

pub(crate) fn dealias_in_place(grid: &Grid, coeffs: &mut Array3<C64>) {
    let n = grid.n();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !grid.dealias_keep(i, j, k) {
                    coeffs[[i, j, k]] = C64::new(0.0, 0.0);
                }
            }
        }
    }
}

/// Spectral (Parseval) `L^2` norm: `sqrt(L^3 * sum |c_k|^2)`.
pub(crate) fn l2_norm(grid: &Grid, coeffs: &Array3<C64>) -> f64 {
    let sum: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
    (sum * grid.volume()).sqrt()
}

/// Parseval norm of `|k|^(2m) |c_k|^2` summed over components: the `L^2`
/// norm of the m-th derivative tensor of a vector field.
pub(crate) fn sobolev_seminorm(grid: &Grid, comps: &[&Array3<C64>], order: u32) -> f64 {
    let n = grid.n();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let k2 = grid.k_squared(i, j, k);
                let w = k2.powi(order as i32);
                for c in comps {
                    sum += w * c[[i, j, k]].norm_sqr();
                }
            }
        }
    }
    (sum * grid.volume()).sqrt()
}
