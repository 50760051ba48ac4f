//! The four parameter-update laws and their learning-rate rules.
//!
//! All laws share the same error signals. The prediction error at time `k`
//! compares the approximator against the normalized state,
//!
//! ```text
//! e(k) = Θ̂ᵀ(k) d̄(k) − l̄(k) + cᵏx̄₀ − x̄(k)
//! ```
//!
//! and the stack error replays the same comparison against the `h`-th
//! recorded column, keeping the *current* `cᵏx̄₀` term:
//!
//! ```text
//! e_h(k) = Θ̂ᵀ(k) d̄(τ_h) − l̄(τ_h) + cᵏx̄₀ − x̄(τ_h)
//! ```
//!
//! Until the stack is full, the concurrent weight is held at zero and every
//! law degenerates to plain gradient descent on the current sample.

use crate::error::{Error, Result};
use crate::filtering::NormalizedSample;
use crate::history::{HistoryStack, StackColumn};
use crate::linalg::Mat;

/// Which update law an estimator runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Gd,
    Cl,
    Ftcl1,
    Ftcl2,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Gd => "gd",
            Method::Cl => "cl",
            Method::Ftcl1 => "ftcl1",
            Method::Ftcl2 => "ftcl2",
        }
    }

    pub fn all() -> [Method; 4] {
        [Method::Gd, Method::Cl, Method::Ftcl1, Method::Ftcl2]
    }
}

/// How the learning rate is chosen once the stack fills.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RateMode {
    /// Keep the configured `gamma` for the whole run.
    Fixed,
    /// At warmup completion replace `gamma` by 0.9× the admissibility bound
    /// (FTCL laws) or by the concurrent-learning rate rule (CL).
    Auto,
}

/// Per-method weights. The `gamma` field holds γ_G for GD, γ_C for CL, γ for
/// FTCL1 and γ̄ for FTCL2; `xi_g`/`xi_c` likewise double as σ_G/σ_C for CL.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams {
    pub gamma: f64,
    pub xi_g: f64,
    pub xi_c: f64,
    /// FTCL1 only; must exceed `P·b_ε̄` when that bound is known.
    pub beta: f64,
    /// FTCL2 only; fractional power in (0, 1).
    pub gamma1: f64,
}

impl HyperParams {
    pub fn validate(&self, method: Method) -> Result<()> {
        if !(self.gamma > 0.0) {
            return Err(Error::Domain { what: "gamma", detail: format!("{} <= 0", self.gamma) });
        }
        if !(self.xi_g > 0.0) {
            return Err(Error::Domain { what: "xi_g", detail: format!("{} <= 0", self.xi_g) });
        }
        if self.xi_c < 0.0 {
            return Err(Error::Domain { what: "xi_c", detail: format!("{} < 0", self.xi_c) });
        }
        if method == Method::Ftcl1 && !(self.beta > 0.0) {
            return Err(Error::Domain { what: "beta", detail: format!("{} <= 0", self.beta) });
        }
        if method == Method::Ftcl2 && !(self.gamma1 > 0.0 && self.gamma1 < 1.0) {
            return Err(Error::Domain {
                what: "gamma1",
                detail: format!("{} outside (0, 1)", self.gamma1),
            });
        }
        Ok(())
    }
}

/// Parameter estimate plus the method and weights driving it.
#[derive(Debug, Clone)]
pub struct EstimatorState {
    pub theta_hat: Mat,
    pub method: Method,
    pub hp: HyperParams,
    /// Set once the stack has filled and the concurrent weight is restored.
    pub warmup_done: bool,
}

impl EstimatorState {
    /// Zero-initialized estimate of shape `(p+q) × n`.
    pub fn new(method: Method, hp: HyperParams, dim: usize, n: usize) -> Result<Self> {
        hp.validate(method)?;
        Ok(EstimatorState { theta_hat: Mat::zeros(dim, n), method, hp, warmup_done: false })
    }

    /// One update using the shared pipeline data. Computes the error signals
    /// internally, applies the warmup rule, and dispatches on the method.
    pub fn step(
        &self,
        sample: &NormalizedSample,
        ck_x0_bar: &[f64],
        stack: &HistoryStack,
    ) -> Result<EstimatorState> {
        let e = prediction_error(&self.theta_hat, sample, ck_x0_bar);
        let use_stack = stack.is_full() && self.method != Method::Gd;
        let e_list: Vec<Vec<f64>> = if use_stack {
            stack
                .columns()
                .iter()
                .map(|col| stack_error(&self.theta_hat, col, ck_x0_bar))
                .collect()
        } else {
            Vec::new()
        };
        let cols = if use_stack { stack.columns() } else { &[][..] };
        let next = match self.method {
            Method::Gd => update_gd(self, sample, &e)?,
            Method::Cl => update_cl(self, sample, cols, &e, &e_list)?,
            Method::Ftcl1 => update_ftcl1(self, sample, cols, &e, &e_list)?,
            Method::Ftcl2 => update_ftcl2(self, sample, cols, &e, &e_list)?,
        };
        Ok(EstimatorState { warmup_done: stack.is_full(), ..next })
    }
}

/// `e(k) = Θ̂ᵀd̄ − l̄ + cᵏx̄₀ − x̄`.
pub fn prediction_error(
    theta_hat: &Mat,
    sample: &NormalizedSample,
    ck_x0_bar: &[f64],
) -> Vec<f64> {
    let mut e = theta_hat.tr_mul_vec(&sample.d_bar);
    for i in 0..e.len() {
        e[i] += ck_x0_bar[i] - sample.l_bar[i] - sample.x_bar[i];
    }
    e
}

/// `e_h(k) = Θ̂ᵀd̄(τ_h) − l̄(τ_h) + cᵏx̄₀ − x̄(τ_h)` with the current
/// initial-condition term, not the one stored at `τ_h`.
pub fn stack_error(theta_hat: &Mat, column: &StackColumn, ck_x0_bar: &[f64]) -> Vec<f64> {
    let mut e = theta_hat.tr_mul_vec(&column.d_bar);
    for i in 0..e.len() {
        e[i] += ck_x0_bar[i] - column.l_bar[i] - column.x_bar[i];
    }
    e
}

/// Component-wise signed power `⌊v⌉^γ := |v|^γ · sign(v)` with `sign(0) = 0`.
/// `gamma1 = 1` is the exact identity map.
pub fn power_sign(v: &[f64], gamma1: f64) -> Vec<f64> {
    if gamma1 == 1.0 {
        return v.to_vec();
    }
    v.iter()
        .map(|&x| {
            if x == 0.0 {
                0.0
            } else {
                x.abs().powf(gamma1) * x.signum()
            }
        })
        .collect()
}

fn finite_or_err(theta: Mat, method: &'static str) -> Result<Mat> {
    if theta.is_finite() {
        Ok(theta)
    } else {
        Err(Error::NonFiniteUpdate { method })
    }
}

/// Aggregate stack term `W = Σ_h d̄(τ_h) e_hᵀ(k)`, shape `(p+q) × n`.
fn stack_aggregate(cols: &[StackColumn], e_list: &[Vec<f64>], dim: usize, n: usize) -> Mat {
    let mut w = Mat::zeros(dim, n);
    for (col, eh) in cols.iter().zip(e_list) {
        w.add_outer(&col.d_bar, eh, 1.0);
    }
    w
}

/// Gradient descent: `Θ̂⁺ = Θ̂ − γ_G d̄ eᵀ`.
pub fn update_gd(st: &EstimatorState, sample: &NormalizedSample, e: &[f64]) -> Result<EstimatorState> {
    let mut theta = st.theta_hat.clone();
    theta.add_outer(&sample.d_bar, e, -st.hp.gamma);
    Ok(EstimatorState { theta_hat: finite_or_err(theta, "gd")?, ..st.clone() })
}

/// Concurrent learning: `Θ̂⁺ = Θ̂ − γ_C [σ_G d̄ eᵀ + σ_C Σ_h d̄(τ_h) e_hᵀ]`.
pub fn update_cl(
    st: &EstimatorState,
    sample: &NormalizedSample,
    cols: &[StackColumn],
    e: &[f64],
    e_list: &[Vec<f64>],
) -> Result<EstimatorState> {
    let mut theta = st.theta_hat.clone();
    theta.add_outer(&sample.d_bar, e, -st.hp.gamma * st.hp.xi_g);
    if !cols.is_empty() {
        let w = stack_aggregate(cols, e_list, theta.rows(), theta.cols());
        theta.add_scaled(&w, -st.hp.gamma * st.hp.xi_c);
    }
    Ok(EstimatorState { theta_hat: finite_or_err(theta, "cl")?, ..st.clone() })
}

/// First finite-time law:
/// `Θ̂⁺ = Θ̂ − γ [ξ_G d̄ eᵀ + ξ_C (W + W / (β + ‖W‖))]` where `W` is the
/// stack aggregate and `‖W‖` its induced 2-norm.
pub fn update_ftcl1(
    st: &EstimatorState,
    sample: &NormalizedSample,
    cols: &[StackColumn],
    e: &[f64],
    e_list: &[Vec<f64>],
) -> Result<EstimatorState> {
    let mut theta = st.theta_hat.clone();
    theta.add_outer(&sample.d_bar, e, -st.hp.gamma * st.hp.xi_g);
    if !cols.is_empty() {
        let w = stack_aggregate(cols, e_list, theta.rows(), theta.cols());
        let w_norm = w.induced_2_norm();
        let scale = -st.hp.gamma * st.hp.xi_c * (1.0 + 1.0 / (st.hp.beta + w_norm));
        theta.add_scaled(&w, scale);
    }
    Ok(EstimatorState { theta_hat: finite_or_err(theta, "ftcl1")?, ..st.clone() })
}

/// Second finite-time law:
/// `Θ̂⁺ = Θ̂ − γ̄ [ξ̄_G d̄ ⌊e⌉^{γ₁}ᵀ + ξ̄_C Σ_h d̄(τ_h) ⌊e_h⌉^{γ₁}ᵀ]`.
pub fn update_ftcl2(
    st: &EstimatorState,
    sample: &NormalizedSample,
    cols: &[StackColumn],
    e: &[f64],
    e_list: &[Vec<f64>],
) -> Result<EstimatorState> {
    let mut theta = st.theta_hat.clone();
    let pe = power_sign(e, st.hp.gamma1);
    theta.add_outer(&sample.d_bar, &pe, -st.hp.gamma * st.hp.xi_g);
    if !cols.is_empty() {
        for (col, eh) in cols.iter().zip(e_list) {
            let peh = power_sign(eh, st.hp.gamma1);
            theta.add_outer(&col.d_bar, &peh, -st.hp.gamma * st.hp.xi_c);
        }
    }
    Ok(EstimatorState { theta_hat: finite_or_err(theta, "ftcl2")?, ..st.clone() })
}

/// Admissible-rate bound for FTCL1:
/// `γ < 2 ξ_C λmin(S) / (ξ_G + ξ_C λmax(S)(1 + 1/β))²`.
pub fn gamma_bound_ftcl1(
    xi_g: f64,
    xi_c: f64,
    beta: f64,
    lam_min_s: f64,
    lam_max_s: f64,
) -> Result<f64> {
    if !(lam_min_s > 0.0) {
        return Err(Error::RankCondition);
    }
    let denom = xi_g + xi_c * lam_max_s * (1.0 + 1.0 / beta);
    Ok(2.0 * xi_c * lam_min_s / (denom * denom))
}

/// Admissible-rate bound for FTCL2 with the conservative per-step choice
/// λmin(D) = 0, λmax(D) = 1 for the rank-one current-data matrix:
///
/// ```text
/// A = 2 ξ̄_C λmin(S)^{(γ₁+1)/2}
/// B = n^{1−γ₁} (ξ̄_G² + (ξ̄_C² + 2 ξ̄_C ξ̄_G) λmax(S)^{(γ₁+1)/2})
/// γ̄ < A / B
/// ```
pub fn gamma_bound_ftcl2(
    xi_g: f64,
    xi_c: f64,
    gamma1: f64,
    n: usize,
    lam_min_s: f64,
    lam_max_s: f64,
) -> Result<f64> {
    if !(lam_min_s > 0.0) {
        return Err(Error::RankCondition);
    }
    if !(gamma1 > 0.0 && gamma1 < 1.0) {
        return Err(Error::Domain { what: "gamma1", detail: format!("{gamma1} outside (0, 1)") });
    }
    let ex = (gamma1 + 1.0) / 2.0;
    let nf = (n as f64).powf(1.0 - gamma1);
    let a = 2.0 * xi_c * lam_min_s.powf(ex);
    let b = nf * (xi_g * xi_g + (xi_c * xi_c + 2.0 * xi_c * xi_g) * lam_max_s.powf(ex));
    Ok(a / b)
}

/// Concurrent-learning rate rule `γ_C = 1 / (2σ_G + σ_C λmax(S))`.
pub fn gamma_c_rule(sigma_g: f64, sigma_c: f64, lam_max_s: f64) -> f64 {
    1.0 / (2.0 * sigma_g + sigma_c * lam_max_s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_sample(d: f64, l: f64, x: f64) -> NormalizedSample {
        NormalizedSample { d_bar: vec![d], l_bar: vec![l], x_bar: vec![x], n_s: 1.0 }
    }

    fn scalar_column(d: f64, l: f64, x: f64) -> StackColumn {
        StackColumn { d_bar: vec![d], l_bar: vec![l], x_bar: vec![x], tau: 1 }
    }

    fn scalar_state(method: Method, theta: f64, gamma: f64, xi_g: f64, xi_c: f64) -> EstimatorState {
        let hp = HyperParams { gamma, xi_g, xi_c, beta: 1.0, gamma1: 0.5 };
        let mut st = EstimatorState::new(method, hp, 1, 1).unwrap();
        st.theta_hat.set(0, 0, theta);
        st
    }

    #[test]
    fn prediction_error_scalar_cases() {
        // Θ̂ = Θ* with consistent sample gives zero error
        let theta = Mat::column(&[1.5]);
        let s = scalar_sample(0.4, 0.1, 1.5 * 0.4 - 0.1);
        let e = prediction_error(&theta, &s, &[0.0]);
        assert!(e[0].abs() < 1e-15);

        // Θ̃ = 2, d̄ = 0.3, ε̄ = 0  =>  e = 0.6
        let theta_hat = Mat::column(&[2.0]); // Θ* = 0
        let s = scalar_sample(0.3, 0.1, -0.1); // x̄ = 0·0.3 − 0.1 + 0
        let e = prediction_error(&theta_hat, &s, &[0.0]);
        assert!((e[0] - 0.6).abs() < 1e-15);

        // d̄ = 0 with matched l̄ and cᵏx̄₀ leaves only the noise residue
        let s = scalar_sample(0.0, 0.2, -0.2 + 0.05);
        let e = prediction_error(&theta_hat, &s, &[0.0]);
        assert!((e[0] + 0.05).abs() < 1e-15);
    }

    #[test]
    fn stack_error_scalar_cases() {
        // Θ̃ = 1, d̄(τ) = 0.5, ε̄ = 0  =>  e_h = 0.5
        let theta_hat = Mat::column(&[1.0]); // Θ* = 0
        let col = scalar_column(0.5, 0.2, -0.2);
        let e = stack_error(&theta_hat, &col, &[0.0]);
        assert!((e[0] - 0.5).abs() < 1e-15);

        // zero regressor column: error independent of Θ̂
        let col0 = scalar_column(0.0, 0.2, 0.3);
        let e1 = stack_error(&Mat::column(&[5.0]), &col0, &[0.1]);
        let e2 = stack_error(&Mat::column(&[-7.0]), &col0, &[0.1]);
        assert_eq!(e1, e2);
        assert!((e1[0] - (0.1 - 0.2 - 0.3)).abs() < 1e-15);
    }

    #[test]
    fn power_sign_cases() {
        assert_eq!(power_sign(&[0.0], 0.5), vec![0.0]);
        assert_eq!(power_sign(&[-3.7, 0.0, 2.2], 1.0), vec![-3.7, 0.0, 2.2]);
        let v = power_sign(&[-4.0], 0.5);
        assert!((v[0] + 2.0).abs() < 1e-15);
    }

    #[test]
    fn power_sign_odd_symmetry() {
        let v = [0.3, -1.7, 0.0, 4.2];
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        let a = power_sign(&v, 0.6);
        let b = power_sign(&neg, 0.6);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(*x, -*y);
        }
    }

    #[test]
    fn power_sign_norm_identity() {
        // ‖⌊v⌉^γ‖₂ = ‖v‖_{2γ}^γ
        let v = [0.3, -1.7, 0.2, 4.2];
        let g = 0.7;
        let lhs: f64 = power_sign(&v, g).iter().map(|x| x * x).sum::<f64>().sqrt();
        let p = 2.0 * g;
        let rhs = v.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p).powf(g);
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn gd_hand_example() {
        // Θ̂ = 0, Θ* = 1, d̄ = 1, γ_G = 0.7  =>  Θ̂⁺ = 0.7
        let st = scalar_state(Method::Gd, 0.0, 0.7, 1.0, 0.0);
        let s = scalar_sample(1.0, 0.0, 1.0); // x̄ = Θ*ᵀd̄ = 1
        let e = prediction_error(&st.theta_hat, &s, &[0.0]);
        let next = update_gd(&st, &s, &e).unwrap();
        assert!((next.theta_hat.get(0, 0) - 0.7).abs() < 1e-15);

        // e = 0 and d̄ = 0 both leave the estimate unchanged
        let fixed = update_gd(&st, &scalar_sample(1.0, 0.0, 0.0), &[0.0]).unwrap();
        assert_eq!(fixed.theta_hat.get(0, 0), 0.0);
        let nod = update_gd(&st, &scalar_sample(0.0, 0.0, 0.0), &[1.0 - 0.0]).unwrap();
        assert_eq!(nod.theta_hat.get(0, 0), 0.0);
    }

    #[test]
    fn cl_hand_example() {
        // γ_C = 0.1, σ_G = σ_C = 1, one column, Θ* = 1  =>  Θ̂⁺ = 0.2
        let st = scalar_state(Method::Cl, 0.0, 0.1, 1.0, 1.0);
        let s = scalar_sample(1.0, 0.0, 1.0);
        let col = scalar_column(1.0, 0.0, 1.0);
        let e = prediction_error(&st.theta_hat, &s, &[0.0]);
        let eh = stack_error(&st.theta_hat, &col, &[0.0]);
        let next = update_cl(&st, &s, &[col], &e, &[eh]).unwrap();
        assert!((next.theta_hat.get(0, 0) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn cl_without_stack_term_matches_gd() {
        let st_cl = scalar_state(Method::Cl, 0.35, 0.7, 1.0, 0.0);
        let st_gd = scalar_state(Method::Gd, 0.35, 0.7, 1.0, 0.0);
        let s = scalar_sample(0.4, 0.05, 0.3);
        let e = prediction_error(&st_cl.theta_hat, &s, &[0.0]);
        let col = scalar_column(0.9, 0.0, 0.0);
        let eh = stack_error(&st_cl.theta_hat, &col, &[0.0]);
        let a = update_cl(&st_cl, &s, &[col], &e, &[eh.clone()]).unwrap();
        // σ_C = 0: the stack term drops out entirely
        let b = update_gd(&st_gd, &s, &e).unwrap();
        assert!((a.theta_hat.get(0, 0) - b.theta_hat.get(0, 0)).abs() < 1e-15);
    }

    #[test]
    fn ftcl1_hand_example() {
        // Θ̂ = 0, Θ* = 1, γ = 0.1, ξ_G = ξ_C = 1, β = 1, one unit column:
        // W = −1, update = −0.1·(−1 − 1 − 1/2)  =>  Θ̂⁺ = 0.25
        let mut st = scalar_state(Method::Ftcl1, 0.0, 0.1, 1.0, 1.0);
        st.hp.beta = 1.0;
        let s = scalar_sample(1.0, 0.0, 1.0);
        let col = scalar_column(1.0, 0.0, 1.0);
        let e = prediction_error(&st.theta_hat, &s, &[0.0]);
        let eh = stack_error(&st.theta_hat, &col, &[0.0]);
        let next = update_ftcl1(&st, &s, &[col], &e, &[eh]).unwrap();
        assert!((next.theta_hat.get(0, 0) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn ftcl1_warmup_reduces_to_gradient() {
        let st = scalar_state(Method::Ftcl1, 0.0, 0.1, 1.0, 1.0);
        let s = scalar_sample(1.0, 0.0, 1.0);
        let e = prediction_error(&st.theta_hat, &s, &[0.0]);
        let next = update_ftcl1(&st, &s, &[], &e, &[]).unwrap();
        assert!((next.theta_hat.get(0, 0) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn ftcl2_hand_example() {
        // γ̄ = 0.1, ξ̄_G = ξ̄_C = 1, γ₁ = 0.5, e = e₁ = −1  =>  Θ̂⁺ = 0.2
        let st = scalar_state(Method::Ftcl2, 0.0, 0.1, 1.0, 1.0);
        let s = scalar_sample(1.0, 0.0, 1.0);
        let col = scalar_column(1.0, 0.0, 1.0);
        let e = prediction_error(&st.theta_hat, &s, &[0.0]);
        let eh = stack_error(&st.theta_hat, &col, &[0.0]);
        let next = update_ftcl2(&st, &s, &[col], &e, &[eh]).unwrap();
        assert!((next.theta_hat.get(0, 0) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn truth_is_fixed_point_of_all_laws() {
        // with ε̄ = 0 and Θ̂ = Θ*, every error vanishes and no law moves
        let theta_star = 1.3_f64;
        let s = scalar_sample(0.45, 0.2, theta_star * 0.45 - 0.2);
        let cols =
            vec![scalar_column(0.3, 0.1, theta_star * 0.3 - 0.1), scalar_column(0.5, 0.0, theta_star * 0.5)];
        for method in Method::all() {
            let st = scalar_state(method, theta_star, 0.4, 1.0, 0.6);
            let e = prediction_error(&st.theta_hat, &s, &[0.0]);
            let e_list: Vec<Vec<f64>> =
                cols.iter().map(|c| stack_error(&st.theta_hat, c, &[0.0])).collect();
            let next = match method {
                Method::Gd => update_gd(&st, &s, &e).unwrap(),
                Method::Cl => update_cl(&st, &s, &cols, &e, &e_list).unwrap(),
                Method::Ftcl1 => update_ftcl1(&st, &s, &cols, &e, &e_list).unwrap(),
                Method::Ftcl2 => update_ftcl2(&st, &s, &cols, &e, &e_list).unwrap(),
            };
            assert!((next.theta_hat.get(0, 0) - theta_star).abs() < 1e-14, "{method:?}");
        }
    }

    #[test]
    fn gamma_bound_ftcl1_cases() {
        // ξ_G = ξ_C = β = 1, S = I  =>  2/9
        let b = gamma_bound_ftcl1(1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((b - 2.0 / 9.0).abs() < 1e-15);
        // no concurrent weight, no admissible rate
        assert_eq!(gamma_bound_ftcl1(1.0, 0.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
        // numerator is linear in λmin
        let b2 = gamma_bound_ftcl1(1.0, 1.0, 1.0, 2.0, 1.0).unwrap();
        assert!((b2 - 2.0 * b).abs() < 1e-15);
        assert!(gamma_bound_ftcl1(1.0, 1.0, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn gamma_bound_ftcl2_cases() {
        // n = 1, ξ̄_G = ξ̄_C = 1, γ₁ = 0.5, S = I: A = 2, B = 4  =>  0.5
        let b = gamma_bound_ftcl2(1.0, 1.0, 0.5, 1, 1.0, 1.0).unwrap();
        assert!((b - 0.5).abs() < 1e-15);
        // increasing λmin increases the bound
        let b2 = gamma_bound_ftcl2(1.0, 1.0, 0.5, 1, 1.5, 1.5).unwrap();
        assert!(b2 > b);
        // γ₁ → 1 limit equals the same expression with exponents 1
        let b3 = gamma_bound_ftcl2(1.0, 1.0, 1.0 - 1e-12, 1, 0.7, 0.9).unwrap();
        let expect = 2.0 * 0.7 / (1.0 + (1.0 + 2.0) * 0.9);
        assert!((b3 - expect).abs() < 1e-9);
    }

    #[test]
    fn gamma_c_rule_cases() {
        assert!((gamma_c_rule(1.0, 0.3, 1.0) - 1.0 / 2.3).abs() < 1e-15);
        assert!((gamma_c_rule(1.0, 0.0, 5.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn hyperparams_validation() {
        let hp = HyperParams { gamma: 0.1, xi_g: 1.0, xi_c: 0.3, beta: 0.0, gamma1: 0.6 };
        assert!(hp.validate(Method::Ftcl1).is_err());
        assert!(hp.validate(Method::Gd).is_ok());
        let hp2 = HyperParams { gamma1: 1.0, ..hp };
        assert!(hp2.validate(Method::Ftcl2).is_err());
    }
}
