//! Sampled scalar/vector/tensor fields with physical and spectral views,
//! spectral differential operators, Leray projection, dealiasing, and
//! uniform-grid quadrature norms.

use ndarray::{Array3, Zip};

use crate::error::{Error, Result};
use crate::fft::{backward, forward, C64};
use crate::grid::Grid;

/// Which view of the data a field currently stores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Repr {
    Physical,
    Spectral,
}

#[derive(Clone, Debug)]
enum Data {
    Phys(Array3<f64>),
    Spec(Array3<C64>),
}

/// A real scalar field sampled on a periodic grid.
#[derive(Clone, Debug)]
pub struct ScalarField {
    grid: Grid,
    data: Data,
}

/// Lebesgue exponents supported by [`ScalarField::lp_norm`]; anything else
/// is rejected at the configuration layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lp {
    ThreeHalves,
    Two,
    Three,
    Four,
    Six,
    Infinity,
}

impl Lp {
    pub fn try_from_f64(p: f64) -> Result<Lp> {
        if p == 1.5 {
            Ok(Lp::ThreeHalves)
        } else if p == 2.0 {
            Ok(Lp::Two)
        } else if p == 3.0 {
            Ok(Lp::Three)
        } else if p == 4.0 {
            Ok(Lp::Four)
        } else if p == 6.0 {
            Ok(Lp::Six)
        } else if p.is_infinite() && p > 0.0 {
            Ok(Lp::Infinity)
        } else {
            Err(Error::Config(format!("unsupported Lp exponent {p}")))
        }
    }

    fn exponent(self) -> f64 {
        match self {
            Lp::ThreeHalves => 1.5,
            Lp::Two => 2.0,
            Lp::Three => 3.0,
            Lp::Four => 4.0,
            Lp::Six => 6.0,
            Lp::Infinity => f64::INFINITY,
        }
    }
}

impl ScalarField {
    pub fn from_samples(grid: Grid, samples: Array3<f64>) -> ScalarField {
        let n = grid.n();
        assert_eq!(samples.dim(), (n, n, n), "sample array does not match grid");
        ScalarField {
            grid,
            data: Data::Phys(samples),
        }
    }

    pub fn from_coefficients(grid: Grid, coeffs: Array3<C64>) -> ScalarField {
        let n = grid.n();
        assert_eq!(coeffs.dim(), (n, n, n), "coefficient array does not match grid");
        ScalarField {
            grid,
            data: Data::Spec(coeffs),
        }
    }

    pub fn constant(grid: &Grid, value: f64) -> ScalarField {
        let n = grid.n();
        ScalarField::from_samples(grid.clone(), Array3::from_elem((n, n, n), value))
    }

    pub fn zeros(grid: &Grid) -> ScalarField {
        ScalarField::constant(grid, 0.0)
    }

    /// Sample `f(x, y, z)` at the grid nodes.
    pub fn from_fn(grid: &Grid, f: impl Fn(f64, f64, f64) -> f64 + Sync) -> ScalarField {
        let n = grid.n();
        let arr = Array3::from_shape_fn((n, n, n), |(i, j, k)| {
            f(grid.coord(i), grid.coord(j), grid.coord(k))
        });
        ScalarField::from_samples(grid.clone(), arr)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn repr(&self) -> Repr {
        match self.data {
            Data::Phys(_) => Repr::Physical,
            Data::Spec(_) => Repr::Spectral,
        }
    }

    /// Physical view, transforming if needed.
    pub fn to_physical(&self) -> ScalarField {
        match &self.data {
            Data::Phys(_) => self.clone(),
            Data::Spec(c) => ScalarField::from_samples(self.grid.clone(), backward(&self.grid, c)),
        }
    }

    /// Spectral view, transforming if needed.
    pub fn to_spectral(&self) -> ScalarField {
        match &self.data {
            Data::Spec(_) => self.clone(),
            Data::Phys(v) => {
                ScalarField::from_coefficients(self.grid.clone(), forward(&self.grid, v))
            }
        }
    }

    /// Borrow the physical samples. Panics if the field is spectral; call
    /// [`ScalarField::to_physical`] first.
    #[track_caller]
    pub fn samples(&self) -> &Array3<f64> {
        match &self.data {
            Data::Phys(v) => v,
            Data::Spec(_) => panic!("field is in spectral representation"),
        }
    }

    /// Borrow the spectral coefficients. Panics if the field is physical.
    #[track_caller]
    pub fn coefficients(&self) -> &Array3<C64> {
        match &self.data {
            Data::Spec(c) => c,
            Data::Phys(_) => panic!("field is in physical representation"),
        }
    }

    pub(crate) fn samples_owned(&self) -> Array3<f64> {
        match &self.data {
            Data::Phys(v) => v.clone(),
            Data::Spec(c) => backward(&self.grid, c),
        }
    }

    pub(crate) fn coefficients_owned(&self) -> Array3<C64> {
        match &self.data {
            Data::Spec(c) => c.clone(),
            Data::Phys(v) => forward(&self.grid, v),
        }
    }

    /// Spectral derivative along `axis` (0, 1 or 2); output keeps the input
    /// representation.
    pub fn derivative(&self, axis: usize) -> ScalarField {
        assert!(axis < 3, "axis out of range");
        let coeffs = self.coefficients_owned();
        let out = crate::spectral::apply_symbol(&self.grid, &coeffs, |g, i, j, k| {
            let kk = match axis {
                0 => g.deriv_symbol(i),
                1 => g.deriv_symbol(j),
                _ => g.deriv_symbol(k),
            };
            C64::new(0.0, kk)
        });
        let f = ScalarField::from_coefficients(self.grid.clone(), out);
        match self.repr() {
            Repr::Physical => f.to_physical(),
            Repr::Spectral => f,
        }
    }

    pub fn gradient(&self) -> VectorField {
        let coeffs = self.coefficients_owned();
        let comps = crate::spectral::gradient(&self.grid, &coeffs);
        let v = VectorField::from_component_coeffs(self.grid.clone(), comps);
        match self.repr() {
            Repr::Physical => v.to_physical(),
            Repr::Spectral => v,
        }
    }

    pub fn laplacian(&self) -> ScalarField {
        let coeffs = self.coefficients_owned();
        let out = crate::spectral::apply_symbol(&self.grid, &coeffs, |g, i, j, k| {
            C64::new(-g.k_squared(i, j, k), 0.0)
        });
        let f = ScalarField::from_coefficients(self.grid.clone(), out);
        match self.repr() {
            Repr::Physical => f.to_physical(),
            Repr::Spectral => f,
        }
    }

    pub fn biharmonic(&self) -> ScalarField {
        let coeffs = self.coefficients_owned();
        let out = crate::spectral::apply_symbol(&self.grid, &coeffs, |g, i, j, k| {
            let k2 = g.k_squared(i, j, k);
            C64::new(k2 * k2, 0.0)
        });
        let f = ScalarField::from_coefficients(self.grid.clone(), out);
        match self.repr() {
            Repr::Physical => f.to_physical(),
            Repr::Spectral => f,
        }
    }

    /// Zero all spectral modes outside the two-thirds mask. Idempotent.
    pub fn dealias(&self) -> ScalarField {
        let mut coeffs = self.coefficients_owned();
        crate::spectral::dealias_in_place(&self.grid, &mut coeffs);
        let f = ScalarField::from_coefficients(self.grid.clone(), coeffs);
        match self.repr() {
            Repr::Physical => f.to_physical(),
            Repr::Spectral => f,
        }
    }

    /// `L^p` norm by uniform-grid quadrature (`L^inf` is the sample max).
    pub fn lp_norm(&self, p: Lp) -> f64 {
        let phys = self.to_physical();
        let v = phys.samples();
        match p {
            Lp::Infinity => v.iter().fold(0.0f64, |m, &x| m.max(x.abs())),
            _ => {
                let e = p.exponent();
                let sum: f64 = v.iter().map(|&x| x.abs().powf(e)).sum();
                (sum * self.grid.cell_volume()).powf(1.0 / e)
            }
        }
    }

    /// `L^2` inner product by uniform-grid quadrature.
    pub fn inner_product(&self, other: &ScalarField) -> Result<f64> {
        self.grid.check_same(&other.grid, "inner_product")?;
        let a = self.to_physical();
        let b = other.to_physical();
        let sum: f64 = a
            .samples()
            .iter()
            .zip(b.samples().iter())
            .map(|(x, y)| x * y)
            .sum();
        Ok(sum * self.grid.cell_volume())
    }

    pub fn min_value(&self) -> f64 {
        self.to_physical()
            .samples()
            .iter()
            .fold(f64::INFINITY, |m, &x| m.min(x))
    }

    pub fn max_value(&self) -> f64 {
        self.to_physical()
            .samples()
            .iter()
            .fold(f64::NEG_INFINITY, |m, &x| m.max(x))
    }

    pub fn is_finite(&self) -> bool {
        match &self.data {
            Data::Phys(v) => v.iter().all(|x| x.is_finite()),
            Data::Spec(c) => c.iter().all(|x| x.re.is_finite() && x.im.is_finite()),
        }
    }

    /// Pointwise combination of two physical fields.
    pub fn zip_with(&self, other: &ScalarField, f: impl Fn(f64, f64) -> f64) -> ScalarField {
        let a = self.to_physical();
        let b = other.to_physical();
        let mut out = a.samples().clone();
        Zip::from(&mut out)
            .and(b.samples())
            .for_each(|o, &y| *o = f(*o, y));
        ScalarField::from_samples(self.grid.clone(), out)
    }

    pub fn scale(&self, c: f64) -> ScalarField {
        match &self.data {
            Data::Phys(v) => ScalarField::from_samples(self.grid.clone(), v.mapv(|x| c * x)),
            Data::Spec(s) => ScalarField::from_coefficients(self.grid.clone(), s.mapv(|x| c * x)),
        }
    }
}

/// A 3-component vector field; components share one grid.
#[derive(Clone, Debug)]
pub struct VectorField {
    components: [ScalarField; 3],
}

impl VectorField {
    pub fn new(components: [ScalarField; 3]) -> VectorField {
        let g = components[0].grid().clone();
        for c in &components[1..] {
            assert_eq!(&g, c.grid(), "vector components on mismatched grids");
        }
        VectorField { components }
    }

    pub fn zeros(grid: &Grid) -> VectorField {
        VectorField::new([
            ScalarField::zeros(grid),
            ScalarField::zeros(grid),
            ScalarField::zeros(grid),
        ])
    }

    pub fn constant(grid: &Grid, v: [f64; 3]) -> VectorField {
        VectorField::new([
            ScalarField::constant(grid, v[0]),
            ScalarField::constant(grid, v[1]),
            ScalarField::constant(grid, v[2]),
        ])
    }

    pub fn from_fn(grid: &Grid, f: impl Fn(f64, f64, f64) -> [f64; 3] + Sync) -> VectorField {
        let n = grid.n();
        let mut arrays = [
            Array3::zeros((n, n, n)),
            Array3::zeros((n, n, n)),
            Array3::zeros((n, n, n)),
        ];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = f(grid.coord(i), grid.coord(j), grid.coord(k));
                    for (c, arr) in arrays.iter_mut().enumerate() {
                        arr[[i, j, k]] = v[c];
                    }
                }
            }
        }
        let [a, b, c] = arrays;
        VectorField::new([
            ScalarField::from_samples(grid.clone(), a),
            ScalarField::from_samples(grid.clone(), b),
            ScalarField::from_samples(grid.clone(), c),
        ])
    }

    pub(crate) fn from_component_coeffs(grid: Grid, coeffs: [Array3<C64>; 3]) -> VectorField {
        let [a, b, c] = coeffs;
        VectorField::new([
            ScalarField::from_coefficients(grid.clone(), a),
            ScalarField::from_coefficients(grid.clone(), b),
            ScalarField::from_coefficients(grid, c),
        ])
    }

    pub fn grid(&self) -> &Grid {
        self.components[0].grid()
    }

    pub fn component(&self, i: usize) -> &ScalarField {
        &self.components[i]
    }

    pub fn components(&self) -> &[ScalarField; 3] {
        &self.components
    }

    pub fn to_physical(&self) -> VectorField {
        VectorField::new([
            self.components[0].to_physical(),
            self.components[1].to_physical(),
            self.components[2].to_physical(),
        ])
    }

    pub fn to_spectral(&self) -> VectorField {
        VectorField::new([
            self.components[0].to_spectral(),
            self.components[1].to_spectral(),
            self.components[2].to_spectral(),
        ])
    }

    pub fn divergence(&self) -> ScalarField {
        let coeffs = [
            self.components[0].coefficients_owned(),
            self.components[1].coefficients_owned(),
            self.components[2].coefficients_owned(),
        ];
        let out = crate::spectral::divergence(self.grid(), &coeffs);
        let f = ScalarField::from_coefficients(self.grid().clone(), out);
        match self.components[0].repr() {
            Repr::Physical => f.to_physical(),
            Repr::Spectral => f,
        }
    }

    pub fn laplacian(&self) -> VectorField {
        VectorField::new([
            self.components[0].laplacian(),
            self.components[1].laplacian(),
            self.components[2].laplacian(),
        ])
    }

    pub fn biharmonic(&self) -> VectorField {
        VectorField::new([
            self.components[0].biharmonic(),
            self.components[1].biharmonic(),
            self.components[2].biharmonic(),
        ])
    }

    pub fn dealias(&self) -> VectorField {
        VectorField::new([
            self.components[0].dealias(),
            self.components[1].dealias(),
            self.components[2].dealias(),
        ])
    }

    /// Orthogonal projection onto divergence-free fields. The mean (k = 0)
    /// component is untouched; Nyquist planes, which carry no derivative
    /// information, are likewise left alone.
    pub fn leray_project(&self) -> VectorField {
        let coeffs = [
            self.components[0].coefficients_owned(),
            self.components[1].coefficients_owned(),
            self.components[2].coefficients_owned(),
        ];
        let out = crate::spectral::leray(self.grid(), &coeffs);
        let v = VectorField::from_component_coeffs(self.grid().clone(), out);
        match self.components[0].repr() {
            Repr::Physical => v.to_physical(),
            Repr::Spectral => v,
        }
    }

    /// Frobenius `L^2` norm over all three components.
    pub fn l2_norm(&self) -> f64 {
        let mut sum = 0.0;
        for c in &self.components {
            let p = c.to_physical();
            sum += p.samples().iter().map(|&x| x * x).sum::<f64>();
        }
        (sum * self.grid().cell_volume()).sqrt()
    }

    /// Pointwise Euclidean magnitude as a scalar field.
    pub fn magnitude(&self) -> ScalarField {
        let p = self.to_physical();
        let n = self.grid().n();
        let mut out = Array3::zeros((n, n, n));
        Zip::from(&mut out)
            .and(p.components[0].samples())
            .and(p.components[1].samples())
            .and(p.components[2].samples())
            .for_each(|o, &a, &b, &c| *o = (a * a + b * b + c * c).sqrt());
        ScalarField::from_samples(self.grid().clone(), out)
    }

    pub fn lp_norm(&self, p: Lp) -> f64 {
        self.magnitude().lp_norm(p)
    }

    pub fn inner_product(&self, other: &VectorField) -> Result<f64> {
        self.grid().check_same(other.grid(), "inner_product")?;
        let mut sum = 0.0;
        for (a, b) in self.components.iter().zip(other.components.iter()) {
            sum += a.inner_product(b)?;
        }
        Ok(sum)
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| c.is_finite())
    }

    pub fn scale(&self, c: f64) -> VectorField {
        VectorField::new([
            self.components[0].scale(c),
            self.components[1].scale(c),
            self.components[2].scale(c),
        ])
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        self.grid().check_same(other.grid(), "vector add")?;
        Ok(VectorField::new([
            self.components[0].zip_with(&other.components[0], |a, b| a + b),
            self.components[1].zip_with(&other.components[1], |a, b| a + b),
            self.components[2].zip_with(&other.components[2], |a, b| a + b),
        ]))
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        self.grid().check_same(other.grid(), "vector sub")?;
        Ok(VectorField::new([
            self.components[0].zip_with(&other.components[0], |a, b| a - b),
            self.components[1].zip_with(&other.components[1], |a, b| a - b),
            self.components[2].zip_with(&other.components[2], |a, b| a - b),
        ]))
    }
}

/// A 3x3 tensor field stored row-major: `component(i, j)` is the `(i, j)`
/// entry.
#[derive(Clone, Debug)]
pub struct TensorField {
    grid: Grid,
    components: Vec<ScalarField>, // 9 entries
}

impl TensorField {
    pub fn new(grid: Grid, components: Vec<ScalarField>) -> TensorField {
        assert_eq!(components.len(), 9, "tensor needs 9 components");
        for c in &components {
            assert_eq!(&grid, c.grid(), "tensor components on mismatched grids");
        }
        TensorField { grid, components }
    }

    pub fn zeros(grid: &Grid) -> TensorField {
        TensorField::new(
            grid.clone(),
            (0..9).map(|_| ScalarField::zeros(grid)).collect(),
        )
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn component(&self, i: usize, j: usize) -> &ScalarField {
        &self.components[3 * i + j]
    }

    pub fn set_component(&mut self, i: usize, j: usize, f: ScalarField) {
        assert_eq!(&self.grid, f.grid());
        self.components[3 * i + j] = f;
    }

    /// Row-wise divergence: `(div T)_i = d_j T_ij`.
    pub fn divergence(&self) -> VectorField {
        let rows: Vec<ScalarField> = (0..3)
            .map(|i| {
                VectorField::new([
                    self.component(i, 0).clone(),
                    self.component(i, 1).clone(),
                    self.component(i, 2).clone(),
                ])
                .divergence()
            })
            .collect();
        let mut it = rows.into_iter();
        VectorField::new([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()])
    }

    pub fn dealias(&self) -> TensorField {
        TensorField::new(
            self.grid.clone(),
            self.components.iter().map(|c| c.dealias()).collect(),
        )
    }

    /// Frobenius `L^2` norm.
    pub fn l2_norm(&self) -> f64 {
        let mut sum = 0.0;
        for c in &self.components {
            let p = c.to_physical();
            sum += p.samples().iter().map(|&x| x * x).sum::<f64>();
        }
        (sum * self.grid.cell_volume()).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| c.is_finite())
    }
}
