//! Online identification of discrete-time nonlinear systems with
//! finite-time concurrent learning.
//!
//! The crate implements the full estimation pipeline for systems of the form
//!
//! ```text
//! x(k+1) = f(x(k)) + g(x(k)) u(k)
//! ```
//!
//! where `f` and `g` are unknown but linearly parameterizable over a known
//! basis. The state is never differenced directly; instead the regressor and
//! the state are passed through a stable first-order filter and normalized,
//! which keeps every signal entering the estimators bounded. Four update laws
//! run on that shared data stream:
//!
//! * plain gradient descent (`GD`),
//! * concurrent learning with a recorded-data stack (`CL`),
//! * two finite-time concurrent-learning laws (`FTCL1`, `FTCL2`).
//!
//! The concurrent methods replace persistence of excitation with a one-time
//! rank condition on a small memory stack of past regressors, maintained here
//! by a greedy selection rule that maximizes the stack's eigenvalue ratio
//! λmin(S)/λmax(S).
//!
//! [`analysis`] turns the convergence theory into runtime artifacts: learning
//! rate admissibility bounds, settling-time bound calculators, attractivity
//! radii, and a per-step Lyapunov decrease monitor for benchmark runs where
//! the true parameters are known.
//!
//! [`bench`] and the `ftcl` binary reproduce the two reference experiments
//! end to end and write per-estimator CSV trajectories plus a summary table.
//!
//! ```
//! use ftcl::dynamics::BasisSet;
//! use ftcl::filtering::{FilterConfig, FilterState};
//!
//! let basis = BasisSet::example1();
//! let cfg = FilterConfig::new(0.5).unwrap();
//! let mut state = FilterState::new(basis.dim(), vec![0.0]);
//!
//! // one pipeline step at x = 0, u = 0
//! let z = basis.regressor(&[0.0], &[0.0]).unwrap();
//! let sample = state.normalize(&[0.0]);
//! assert_eq!(sample.n_s, 1.0); // empty filter: d = l = 0
//! state = state.step(&cfg, &z, &[0.0]).unwrap();
//! assert_eq!(state.d(), &[1.0, 1.0, 0.0]); // d(1) = z(x(0), u(0))
//! ```

pub mod analysis;
pub mod bench;
pub mod cli;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod estimators;
pub mod filtering;
pub mod history;
pub mod linalg;
pub mod selftest;

mod guide;

pub use error::{Error, Result};
