//! Uniform 2D tensor grids, nodal fields and their discrete calculus.
//!
//! Fields live at grid nodes ([`GridFunction`]); gradients and weight
//! functions live at cell centers ([`CellGradient`], [`CellField`]). The
//! discrete `H`-norm is the `L²` quadrature over interior nodes (boundary
//! values vanish under the homogeneous Dirichlet condition), and the weighted
//! `V`-seminorms pair cell-center gradients with nonnegative cell weights.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Axis-aligned rectangle `[ax, bx] × [ay, by]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub ax: f64,
    pub bx: f64,
    pub ay: f64,
    pub by: f64,
}

impl Rect {
    pub fn new(ax: f64, bx: f64, ay: f64, by: f64) -> Self {
        Rect { ax, bx, ay, by }
    }

    /// The unit square `[0,1]²`.
    pub fn unit_square() -> Self {
        Rect::new(0.0, 1.0, 0.0, 1.0)
    }

    /// The square `[-1,1]²` used by the reference experiments.
    pub fn symmetric_square() -> Self {
        Rect::new(-1.0, 1.0, -1.0, 1.0)
    }

    pub fn width(&self) -> f64 {
        self.bx - self.ax
    }

    pub fn height(&self) -> f64 {
        self.by - self.ay
    }

    /// Closed-rectangle membership.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.ax && x <= self.bx && y >= self.ay && y <= self.by
    }
}

/// Uniform tensor grid on a rectangle with `nx × ny` nodes.
///
/// Node `(i, j)` sits at `(ax + i·hx, ay + j·hy)`; nodes are stored row-major
/// (`x` fastest), which is the interchange convention for every module in
/// this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialGrid2D {
    pub nx: usize,
    pub ny: usize,
    pub bounds: Rect,
    pub hx: f64,
    pub hy: f64,
}

impl SpatialGrid2D {
    /// Build a grid with `nx × ny` nodes on `bounds`.
    ///
    /// Rejects fewer than 3 nodes per axis (no interior node otherwise) and
    /// inverted bounds.
    pub fn new(nx: usize, ny: usize, bounds: Rect) -> Result<Self> {
        if nx < 3 || ny < 3 {
            return Err(Error::invalid(format!(
                "grid needs at least 3 nodes per axis, got {nx} x {ny}"
            )));
        }
        if bounds.width() <= 0.0 || bounds.height() <= 0.0 {
            return Err(Error::invalid("grid bounds are degenerate or inverted"));
        }
        let hx = bounds.width() / (nx - 1) as f64;
        let hy = bounds.height() / (ny - 1) as f64;
        Ok(SpatialGrid2D {
            nx,
            ny,
            bounds,
            hx,
            hy,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nx * self.ny
    }

    /// Cells of the `(nx-1) × (ny-1)` cell-center lattice.
    pub fn cell_count(&self) -> usize {
        (self.nx - 1) * (self.ny - 1)
    }

    #[inline]
    pub fn node_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    #[inline]
    pub fn cell_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx - 1 && j < self.ny - 1);
        j * (self.nx - 1) + i
    }

    /// Coordinates of node `(i, j)`. The extremes reproduce the bounds
    /// exactly.
    pub fn node_coords(&self, i: usize, j: usize) -> (f64, f64) {
        let x = if i == self.nx - 1 {
            self.bounds.bx
        } else {
            self.bounds.ax + i as f64 * self.hx
        };
        let y = if j == self.ny - 1 {
            self.bounds.by
        } else {
            self.bounds.ay + j as f64 * self.hy
        };
        (x, y)
    }

    /// Center of cell `(i, j)` (corner nodes `(i,j) .. (i+1,j+1)`).
    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.bounds.ax + (i as f64 + 0.5) * self.hx,
            self.bounds.ay + (j as f64 + 0.5) * self.hy,
        )
    }

    #[inline]
    pub fn is_boundary(&self, i: usize, j: usize) -> bool {
        i == 0 || j == 0 || i == self.nx - 1 || j == self.ny - 1
    }

    /// The coarse grid obtained by keeping every `factor`-th node.
    ///
    /// Requires `nx - 1` and `ny - 1` divisible by `factor`.
    pub fn coarsen(&self, factor: usize) -> Result<SpatialGrid2D> {
        if factor == 0 {
            return Err(Error::invalid("coarsening factor must be >= 1"));
        }
        if (self.nx - 1) % factor != 0 || (self.ny - 1) % factor != 0 {
            return Err(Error::invalid(format!(
                "cell counts {} x {} not divisible by coarsening factor {factor}",
                self.nx - 1,
                self.ny - 1
            )));
        }
        SpatialGrid2D::new(
            (self.nx - 1) / factor + 1,
            (self.ny - 1) / factor + 1,
            self.bounds,
        )
    }
}

/// Real nodal field on a [`SpatialGrid2D`].
///
/// With the `dirichlet` flag set, boundary nodes are constrained to zero; all
/// constructors and operations preserve that constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: SpatialGrid2D,
    values: Vec<f64>,
    dirichlet: bool,
}

impl GridFunction {
    pub fn zeros(grid: SpatialGrid2D, dirichlet: bool) -> Self {
        GridFunction {
            grid,
            values: vec![0.0; grid.node_count()],
            dirichlet,
        }
    }

    /// Sample `f(x, y)` at the nodes. With `dirichlet`, boundary nodes are
    /// clamped to exactly zero regardless of `f`.
    pub fn from_fn(grid: SpatialGrid2D, dirichlet: bool, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut values = vec![0.0; grid.node_count()];
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                if dirichlet && grid.is_boundary(i, j) {
                    continue;
                }
                let (x, y) = grid.node_coords(i, j);
                values[grid.node_index(i, j)] = f(x, y);
            }
        }
        GridFunction {
            grid,
            values,
            dirichlet,
        }
    }

    pub fn from_values(grid: SpatialGrid2D, values: Vec<f64>, dirichlet: bool) -> Result<Self> {
        if values.len() != grid.node_count() {
            return Err(Error::invalid("value vector does not match grid size"));
        }
        let mut gf = GridFunction {
            grid,
            values,
            dirichlet,
        };
        if dirichlet {
            gf.zero_boundary();
        }
        Ok(gf)
    }

    pub fn grid(&self) -> &SpatialGrid2D {
        &self.grid
    }

    pub fn dirichlet(&self) -> bool {
        self.dirichlet
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[self.grid.node_index(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let idx = self.grid.node_index(i, j);
        self.values[idx] = v;
    }

    pub fn zero_boundary(&mut self) {
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        for i in 0..nx {
            self.values[self.grid.node_index(i, 0)] = 0.0;
            self.values[self.grid.node_index(i, ny - 1)] = 0.0;
        }
        for j in 0..ny {
            self.values[self.grid.node_index(0, j)] = 0.0;
            self.values[self.grid.node_index(nx - 1, j)] = 0.0;
        }
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Discrete `L²(D)` norm: `sqrt(hx·hy · Σ_interior u_ij²)`.
    ///
    /// Boundary nodes are excluded: they carry homogeneous Dirichlet data.
    pub fn h_norm(&self) -> f64 {
        self.h_inner(self).sqrt()
    }

    /// Discrete `L²` inner product over interior nodes.
    pub fn h_inner(&self, other: &GridFunction) -> f64 {
        assert_eq!(self.grid, other.grid, "grid mismatch in h_inner");
        let g = &self.grid;
        let mut sum = 0.0;
        for j in 1..g.ny - 1 {
            let row = j * g.nx;
            for i in 1..g.nx - 1 {
                sum += self.values[row + i] * other.values[row + i];
            }
        }
        g.hx * g.hy * sum
    }

    /// `self += a * x`.
    pub fn axpy(&mut self, a: f64, x: &GridFunction) {
        assert_eq!(self.grid, x.grid, "grid mismatch in axpy");
        for (s, v) in self.values.iter_mut().zip(&x.values) {
            *s += a * v;
        }
    }

    pub fn scale(&mut self, a: f64) {
        for v in &mut self.values {
            *v *= a;
        }
    }

    /// `self - other` as a new field.
    pub fn sub(&self, other: &GridFunction) -> GridFunction {
        assert_eq!(self.grid, other.grid, "grid mismatch in sub");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        GridFunction {
            grid: self.grid,
            values,
            dirichlet: self.dirichlet && other.dirichlet,
        }
    }
}

/// Scalar field on the cell-center lattice (one value per cell).
#[derive(Debug, Clone, PartialEq)]
pub struct CellField {
    grid: SpatialGrid2D,
    values: Vec<f64>,
}

impl CellField {
    pub fn new(grid: SpatialGrid2D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.cell_count() {
            return Err(Error::invalid("cell value vector does not match grid"));
        }
        Ok(CellField { grid, values })
    }

    pub fn constant(grid: SpatialGrid2D, value: f64) -> Self {
        CellField {
            grid,
            values: vec![value; grid.cell_count()],
        }
    }

    /// Sample `f` at cell centers.
    pub fn from_fn(grid: SpatialGrid2D, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut values = vec![0.0; grid.cell_count()];
        for j in 0..grid.ny - 1 {
            for i in 0..grid.nx - 1 {
                let (x, y) = grid.cell_center(i, j);
                values[grid.cell_index(i, j)] = f(x, y);
            }
        }
        CellField { grid, values }
    }

    pub fn grid(&self) -> &SpatialGrid2D {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }
}

/// Two-component (gradient) field on the cell-center lattice.
#[derive(Debug, Clone)]
pub struct CellGradient {
    grid: SpatialGrid2D,
    pub gx: Vec<f64>,
    pub gy: Vec<f64>,
}

impl CellGradient {
    pub fn grid(&self) -> &SpatialGrid2D {
        &self.grid
    }
}

/// Cell-center gradient by corner-averaged differences.
///
/// For the cell with corners `(i,j), (i+1,j), (i,j+1), (i+1,j+1)` the two
/// x-differences (bottom and top edge) are averaged and divided by `hx`, and
/// analogously in y. This reproduces the gradients of affine functions
/// exactly and makes the diffusion operator in [`crate::operators`] the exact
/// gradient of a convex energy.
pub fn cell_gradient(u: &GridFunction) -> CellGradient {
    let g = *u.grid();
    let v = u.values();
    let mut gx = vec![0.0; g.cell_count()];
    let mut gy = vec![0.0; g.cell_count()];
    let inv2hx = 1.0 / (2.0 * g.hx);
    let inv2hy = 1.0 / (2.0 * g.hy);
    for j in 0..g.ny - 1 {
        let row = j * g.nx;
        let row_up = (j + 1) * g.nx;
        let crow = j * (g.nx - 1);
        for i in 0..g.nx - 1 {
            let ll = v[row + i];
            let lr = v[row + i + 1];
            let ul = v[row_up + i];
            let ur = v[row_up + i + 1];
            gx[crow + i] = ((lr - ll) + (ur - ul)) * inv2hx;
            gy[crow + i] = ((ul - ll) + (ur - lr)) * inv2hy;
        }
    }
    CellGradient { grid: g, gx, gy }
}

/// Weighted `V`-seminorm: `(Σ_cells hx·hy · w_c · |G_c u|^p)^(1/p)`.
///
/// With weight `≡ 1` this is the discrete `W^{1,p}` seminorm. Rejects `p < 2`.
pub fn v_seminorm_p(u: &GridFunction, weight: &CellField, p: f64) -> Result<f64> {
    if p < 2.0 {
        return Err(Error::invalid(format!("seminorm exponent p = {p} < 2")));
    }
    assert_eq!(u.grid(), weight.grid(), "grid mismatch in v_seminorm_p");
    let grad = cell_gradient(u);
    Ok(weighted_seminorm_pow(&grad, weight, p).powf(1.0 / p))
}

/// `Σ_cells hx·hy · w_c · |G_c|^p` for an already computed gradient field.
pub(crate) fn weighted_seminorm_pow(grad: &CellGradient, weight: &CellField, p: f64) -> f64 {
    let g = grad.grid();
    let half_p = 0.5 * p;
    let mut sum = 0.0;
    for ((&gx, &gy), &w) in grad.gx.iter().zip(&grad.gy).zip(weight.values()) {
        if w == 0.0 {
            continue;
        }
        let norm_sq = gx * gx + gy * gy;
        if norm_sq > 0.0 {
            sum += w * norm_sq.powf(half_p);
        }
    }
    g.hx * g.hy * sum
}

/// Restrict a nodal field to the coarse grid by injection: coarse node
/// `(i, j)` takes the value of fine node `(factor·i, factor·j)`.
pub fn restrict_to_coarse(u: &GridFunction, factor: usize) -> Result<GridFunction> {
    let fine = *u.grid();
    let coarse = fine.coarsen(factor)?;
    let mut values = vec![0.0; coarse.node_count()];
    for j in 0..coarse.ny {
        for i in 0..coarse.nx {
            values[coarse.node_index(i, j)] = u.at(i * factor, j * factor);
        }
    }
    GridFunction::from_values(coarse, values, u.dirichlet())
}

/// Temporal grid `0 = t_0 < t_1 < … < t_N = T`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    times: Vec<f64>,
}

impl TimeGrid {
    /// Uniform grid with `n_steps` steps of size `t_end / n_steps`.
    pub fn uniform(t_end: f64, n_steps: usize) -> Result<Self> {
        if !(t_end > 0.0) || n_steps == 0 {
            return Err(Error::invalid("time grid needs t_end > 0 and n_steps >= 1"));
        }
        let h = t_end / n_steps as f64;
        let mut times: Vec<f64> = (0..=n_steps).map(|n| n as f64 * h).collect();
        times[n_steps] = t_end;
        Ok(TimeGrid { times })
    }

    /// Non-uniform grid from explicit node times.
    pub fn from_times(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 || times[0] != 0.0 {
            return Err(Error::invalid("time grid must start at 0 with >= 1 step"));
        }
        if !times.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::invalid("time grid must be strictly increasing"));
        }
        Ok(TimeGrid { times })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn n_steps(&self) -> usize {
        self.times.len() - 1
    }

    pub fn t_end(&self) -> f64 {
        *self.times.last().unwrap()
    }

    /// `(t_n, h_n)` for step `n ∈ 1..=n_steps`.
    pub fn step(&self, n: usize) -> (f64, f64) {
        (self.times[n], self.times[n] - self.times[n - 1])
    }

    pub fn max_step(&self) -> f64 {
        self.times
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_field(grid: SpatialGrid2D, rng: &mut impl Rng) -> GridFunction {
        let values = (0..grid.node_count())
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        GridFunction::from_values(grid, values, true).unwrap()
    }

    #[test]
    fn grid_41_matches_reference_setup() {
        let g = SpatialGrid2D::new(41, 41, Rect::symmetric_square()).unwrap();
        assert_eq!(g.hx, 0.05);
        assert_eq!(g.hy, 0.05);
        assert_eq!(g.node_count(), 1681);
        let (x0, y0) = g.node_coords(0, 0);
        let (x1, y1) = g.node_coords(40, 40);
        assert_eq!((x0, y0), (-1.0, -1.0));
        assert_eq!((x1, y1), (1.0, 1.0));
    }

    #[test]
    fn grid_small_and_rectangular() {
        let g = SpatialGrid2D::new(3, 3, Rect::unit_square()).unwrap();
        assert_eq!((g.hx, g.hy), (0.5, 0.5));
        assert_eq!(g.node_count(), 9);

        let g = SpatialGrid2D::new(5, 3, Rect::new(0.0, 2.0, 0.0, 1.0)).unwrap();
        assert_eq!((g.hx, g.hy), (0.5, 0.5));
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(SpatialGrid2D::new(2, 3, Rect::unit_square()).is_err());
        assert!(SpatialGrid2D::new(3, 2, Rect::unit_square()).is_err());
        assert!(SpatialGrid2D::new(3, 3, Rect::new(1.0, 0.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn h_norm_hand_values() {
        let g = SpatialGrid2D::new(3, 3, Rect::unit_square()).unwrap();
        let zero = GridFunction::zeros(g, true);
        assert_eq!(zero.h_norm(), 0.0);

        // single interior node with value 1: sqrt(hx*hy) = sqrt(0.25)
        let mut u = GridFunction::zeros(g, true);
        u.set(1, 1, 1.0);
        assert_eq!(u.h_norm(), 0.5);

        // 41x41 grid, u = 1 on the 39^2 interior nodes: sqrt(0.0025 * 39^2)
        let g41 = SpatialGrid2D::new(41, 41, Rect::symmetric_square()).unwrap();
        let ones = GridFunction::from_fn(g41, true, |_, _| 1.0);
        assert!((ones.h_norm() - 1.95).abs() < 1e-13);
    }

    #[test]
    fn cell_gradient_hand_values() {
        let g = SpatialGrid2D::new(3, 3, Rect::unit_square()).unwrap();
        let c = GridFunction::from_fn(g, false, |_, _| 7.0);
        let grad = cell_gradient(&c);
        assert!(grad.gx.iter().chain(&grad.gy).all(|&v| v == 0.0));

        let x = GridFunction::from_fn(g, false, |x, _| x);
        let grad = cell_gradient(&x);
        assert!(grad.gx.iter().all(|&v| (v - 1.0).abs() < 1e-15));
        assert!(grad.gy.iter().all(|&v| v.abs() < 1e-15));

        // u = x*y on a cell [0,h]^2: four-corner stencil gives (h/2, h/2).
        let xy = GridFunction::from_fn(g, false, |x, y| x * y);
        let grad = cell_gradient(&xy);
        let h = 0.5;
        assert!((grad.gx[0] - h / 2.0).abs() < 1e-15);
        assert!((grad.gy[0] - h / 2.0).abs() < 1e-15);
    }

    #[test]
    fn seminorm_hand_values() {
        let g = SpatialGrid2D::new(9, 9, Rect::unit_square()).unwrap();
        let one = CellField::constant(g, 1.0);

        let c = GridFunction::from_fn(g, false, |_, _| 3.0);
        assert_eq!(v_seminorm_p(&c, &one, 2.0).unwrap(), 0.0);

        // affine u = x, unit weight, p = 2: gradient (1,0) in every cell and
        // the cell weights sum to the area 1.
        let x = GridFunction::from_fn(g, false, |x, _| x);
        assert!((v_seminorm_p(&x, &one, 2.0).unwrap() - 1.0).abs() < 1e-13);

        let zero_w = CellField::constant(g, 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u = random_field(g, &mut rng);
        assert_eq!(v_seminorm_p(&u, &zero_w, 4.0).unwrap(), 0.0);

        assert!(v_seminorm_p(&x, &one, 1.5).is_err());
    }

    #[test]
    fn seminorm_monotone_in_weight() {
        let g = SpatialGrid2D::new(7, 7, Rect::unit_square()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let u = random_field(g, &mut rng);
            let w_small =
                CellField::from_fn(g, |x, y| 0.5 + 0.4 * (x * y).sin().abs());
            let mut w_big = w_small.clone();
            for v in w_big.values_mut() {
                *v += rng.random_range(0.0..0.5);
            }
            let s = v_seminorm_p(&u, &w_small, 3.0).unwrap();
            let b = v_seminorm_p(&u, &w_big, 3.0).unwrap();
            assert!(b >= s - 1e-14);
        }
    }

    #[test]
    fn restriction_is_injection() {
        let g = SpatialGrid2D::new(41, 41, Rect::symmetric_square()).unwrap();
        let u = GridFunction::from_fn(g, true, |x, y| (x + 2.0 * y).sin());
        let r = restrict_to_coarse(&u, 2).unwrap();
        assert_eq!(r.grid().nx, 21);
        for j in 0..21 {
            for i in 0..21 {
                assert_eq!(r.at(i, j), u.at(2 * i, 2 * j));
            }
        }

        // factor 1 is the identity copy
        let id = restrict_to_coarse(&u, 1).unwrap();
        assert_eq!(id, u);

        // affine data restricts to the same affine function
        let aff = GridFunction::from_fn(g, false, |x, y| 2.0 * x - y + 0.25);
        let r = restrict_to_coarse(&aff, 4).unwrap();
        let expect = GridFunction::from_fn(*r.grid(), false, |x, y| 2.0 * x - y + 0.25);
        for (a, b) in r.values().iter().zip(expect.values()) {
            assert!((a - b).abs() < 1e-13);
        }

        assert!(restrict_to_coarse(&u, 3).is_err());
    }

    #[test]
    fn time_grid_basics() {
        let tg = TimeGrid::uniform(1.0, 8).unwrap();
        assert_eq!(tg.n_steps(), 8);
        assert_eq!(tg.t_end(), 1.0);
        let (t1, h1) = tg.step(1);
        assert_eq!((t1, h1), (0.125, 0.125));
        assert_eq!(tg.max_step(), 0.125);

        assert!(TimeGrid::from_times(vec![0.0, 0.5, 0.5]).is_err());
        assert!(TimeGrid::from_times(vec![0.1, 0.5]).is_err());
    }

    proptest! {
        #[test]
        fn h_norm_absolutely_homogeneous(seed in 0u64..1000, c in -50.0f64..50.0) {
            let g = SpatialGrid2D::new(9, 7, Rect::symmetric_square()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_field(g, &mut rng);
            let mut cu = u.clone();
            cu.scale(c);
            let lhs = cu.h_norm();
            let rhs = c.abs() * u.h_norm();
            prop_assert!((lhs - rhs).abs() <= 1e-13 * rhs.max(1e-300));
        }

        #[test]
        fn h_norm_triangle_inequality(seed in 0u64..1000) {
            let g = SpatialGrid2D::new(9, 7, Rect::symmetric_square()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_field(g, &mut rng);
            let v = random_field(g, &mut rng);
            let mut sum = u.clone();
            sum.axpy(1.0, &v);
            let lhs = sum.h_norm();
            let rhs = u.h_norm() + v.h_norm();
            prop_assert!(lhs <= rhs * (1.0 + 1e-13));
        }

        #[test]
        fn gradient_exact_on_affine(a in -5.0f64..5.0, b in -5.0f64..5.0, c in -5.0f64..5.0) {
            let g = SpatialGrid2D::new(8, 6, Rect::new(-1.0, 2.0, 0.0, 1.5)).unwrap();
            let u = GridFunction::from_fn(g, false, |x, y| a * x + b * y + c);
            let grad = cell_gradient(&u);
            for (&gx, &gy) in grad.gx.iter().zip(&grad.gy) {
                prop_assert!((gx - a).abs() < 1e-13);
                prop_assert!((gy - b).abs() < 1e-13);
            }
        }
    }
}
