//! Randomized operator splitting for parabolic evolution equations.
//!
//! This crate integrates problems of the form `u'(t) + A(t)u(t) = f(t)` with
//! homogeneous Dirichlet conditions on a rectangle, where `A(t)` is a (possibly
//! nonlinear) p-Laplacian-type diffusion operator. The operator is split into
//! weighted sub-operators over an overlapping domain decomposition, and each
//! implicit Euler step uses only a randomly drawn batch of the sub-operators,
//! rescaled so that the randomized operator is unbiased. A deterministic
//! coarse-grid predictor can steer the batch selection towards the subdomains
//! where the solution is active.
//!
//! The crate is organized along the pipeline:
//!
//! - [`grid`]: tensor grids, nodal fields, discrete norms and gradients.
//! - [`decomposition`]: overlapping subdomains, partition-of-unity weights,
//!   batch scaling factors and enumerable batch laws.
//! - [`sampler`]: per-step batch selection strategies and seeded RNG streams.
//! - [`operators`]: the discrete weighted p-Laplacian family (energy, apply,
//!   Jacobian action) and batch assembly.
//! - [`solver`]: the implicit step, the randomized time-marching driver, full
//!   backward Euler, and the per-step energy-inequality diagnostic.
//! - [`harness`]: manufactured problems, the Monte Carlo error estimator,
//!   convergence-order fitting, experiment configuration and CSV output.
//! - [`cli`]: the `randsplit` command line entry point.
//!
//! Start with the runnable programs under `examples/`; each one demonstrates
//! a single capability end to end.

pub mod cli;
pub mod decomposition;
pub mod grid;
pub mod harness;
pub mod operators;
pub mod sampler;
pub mod solver;

mod error;

pub use error::{Error, Result};

pub use decomposition::{BatchLaw, BatchWeights, Decomposition, SplitMode, Subdomain};
pub use grid::{CellField, CellGradient, GridFunction, Rect, SpatialGrid2D, TimeGrid};
pub use harness::{
    fit_order, mc_error, ConvergenceFit, ErrorRecord, ExperimentConfig, ManufacturedProblem,
    ProblemKind, SourceMode,
};
pub use operators::{batch_rhs, BatchOperator, ProblemSpec, SplitOperator};
pub use sampler::{activity_indicator, active_set, draw_batch, BatchDraw, RngStream, Strategy};
pub use solver::{
    check_energy_inequality, run_backward_euler, run_randomized, SolverConfig, StateStorage,
    StepResult, Trajectory,
};
