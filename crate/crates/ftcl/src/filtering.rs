//! Regressor filtering and normalization.
//!
//! The one-step-ahead state never enters the error signals directly. Instead
//! the regressor and the state run through the stable first-order recursions
//!
//! ```text
//! d(k+1) = c d(k) + z(x(k), u(k)),   d(0) = 0
//! l(k+1) = c l(k) + c x(k),          l(0) = 0
//! ```
//!
//! which satisfy the identity `x(k) = Θ*ᵀd(k) − l(k) + cᵏx₀ + ε_f(k)` along
//! any trajectory of the true system. Dividing through by the normalization
//! signal `n_s = 1 + dᵀd + lᵀl` bounds every resulting signal; in particular
//! `‖d̄‖ < 1` uniformly.

use crate::error::{Error, Result};

/// First-order filter pole `C = cI` with `-1 < c < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterConfig {
    c: f64,
}

impl FilterConfig {
    pub fn new(c: f64) -> Result<Self> {
        if !(c > -1.0 && c < 1.0) {
            return Err(Error::Domain { what: "filter pole", detail: format!("|{c}| >= 1") });
        }
        Ok(FilterConfig { c })
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

impl Default for FilterConfig {
    /// `c = 0.5`; any pole in (-1, 1) is admissible and this balances memory
    /// against conditioning when nothing else is known.
    fn default() -> Self {
        FilterConfig { c: 0.5 }
    }
}

/// Filter state at time `k`: the filtered regressor `d(k)`, the filtered
/// state `l(k)`, and the initial-condition term `cᵏx₀`, which is propagated
/// multiplicatively each step so the prediction and normalization paths can
/// never drift apart.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterState {
    k: usize,
    d: Vec<f64>,
    l: Vec<f64>,
    x0: Vec<f64>,
    ck_x0: Vec<f64>,
}

/// One normalized pipeline sample: `d̄ = d/n_s`, `l̄ = l/n_s`, `x̄ = x/n_s`
/// with `n_s = 1 + dᵀd + lᵀl ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSample {
    pub d_bar: Vec<f64>,
    pub l_bar: Vec<f64>,
    pub x_bar: Vec<f64>,
    pub n_s: f64,
}

impl FilterState {
    /// Fresh state at `k = 0`: `d = 0`, `l = 0`, `c⁰x₀ = x₀`.
    pub fn new(dim_z: usize, x0: Vec<f64>) -> Self {
        let n = x0.len();
        FilterState { k: 0, d: vec![0.0; dim_z], l: vec![0.0; n], ck_x0: x0.clone(), x0 }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> &[f64] {
        &self.d
    }

    pub fn l(&self) -> &[f64] {
        &self.l
    }

    pub fn x0(&self) -> &[f64] {
        &self.x0
    }

    /// Current `cᵏ x₀` term (not normalized).
    pub fn ck_x0(&self) -> &[f64] {
        &self.ck_x0
    }

    fn n_s(&self) -> f64 {
        let dd: f64 = self.d.iter().map(|v| v * v).sum();
        let ll: f64 = self.l.iter().map(|v| v * v).sum();
        1.0 + dd + ll
    }

    /// Advances the recursions with the regressor and state at time `k`,
    /// producing the state at `k+1`.
    pub fn step(&self, cfg: &FilterConfig, z: &[f64], x: &[f64]) -> Result<FilterState> {
        if z.len() != self.d.len() {
            return Err(Error::DimensionMismatch {
                expected: self.d.len(),
                got: z.len(),
                what: "regressor",
            });
        }
        if x.len() != self.l.len() {
            return Err(Error::DimensionMismatch { expected: self.l.len(), got: x.len(), what: "state" });
        }
        if z.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput { what: "regressor" });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput { what: "state" });
        }
        let c = cfg.c();
        let d = self.d.iter().zip(z).map(|(dv, zv)| c * dv + zv).collect();
        let l = self.l.iter().zip(x).map(|(lv, xv)| c * (lv + xv)).collect();
        let ck_x0 = self.ck_x0.iter().map(|v| c * v).collect();
        Ok(FilterState { k: self.k + 1, d, l, x0: self.x0.clone(), ck_x0 })
    }

    /// Normalizes the current filter signals together with the state sample
    /// `x(k)`. `n_s ≥ 1` always, so no error path exists.
    pub fn normalize(&self, x: &[f64]) -> NormalizedSample {
        let ns = self.n_s();
        NormalizedSample {
            d_bar: self.d.iter().map(|v| v / ns).collect(),
            l_bar: self.l.iter().map(|v| v / ns).collect(),
            x_bar: x.iter().map(|v| v / ns).collect(),
            n_s: ns,
        }
    }

    /// The `cᵏx̄₀` term normalized by the same `n_s` as [`Self::normalize`],
    /// which is what the prediction and stack errors consume.
    pub fn ck_x0_bar(&self) -> Vec<f64> {
        let ns = self.n_s();
        self.ck_x0.iter().map(|v| v / ns).collect()
    }
}
