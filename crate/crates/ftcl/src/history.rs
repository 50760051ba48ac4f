//! Memory stacks of recorded pipeline samples and the rank condition.
//!
//! Concurrent-learning updates draw on `P` stored triples
//! `(d̄(τ_h), l̄(τ_h), x̄(τ_h))`. The stack caches `S = Σ d̄(τ_h) d̄ᵀ(τ_h)`
//! together with its extreme eigenvalues; once `S ≻ 0` the rank condition
//! holds and stays held, because recording only ever replaces a column when
//! the swap strictly improves λmin(S)/λmax(S).

use crate::error::{Error, Result};
use crate::filtering::NormalizedSample;
use crate::linalg::{self, Mat};

/// Relative improvement a candidate swap must exceed to be accepted.
const IMPROVE_REL_TOL: f64 = 1e-9;
/// Rank threshold: λmin > max(RANK_REL_TOL · λmax, RANK_ABS_FLOOR).
const RANK_REL_TOL: f64 = 1e-10;
const RANK_ABS_FLOOR: f64 = 1e-14;

/// One recorded sample with its recording time.
#[derive(Debug, Clone, PartialEq)]
pub struct StackColumn {
    pub d_bar: Vec<f64>,
    pub l_bar: Vec<f64>,
    pub x_bar: Vec<f64>,
    pub tau: usize,
}

/// Outcome of offering a sample to the stack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecordOutcome {
    pub accepted: bool,
    /// Slot replaced during the selection phase; `None` in the fill phase.
    pub replaced_slot: Option<usize>,
}

/// Fixed-capacity memory stack with cached spectrum.
#[derive(Debug, Clone)]
pub struct HistoryStack {
    capacity: usize,
    dim: usize,
    cols: Vec<StackColumn>,
    s: Mat,
    lam_min: f64,
    lam_max: f64,
}

impl HistoryStack {
    /// `capacity` must be at least the regressor dimension `dim` for the
    /// rank condition to be satisfiable.
    pub fn new(capacity: usize, dim: usize) -> Result<Self> {
        if capacity < dim {
            return Err(Error::Domain {
                what: "stack capacity",
                detail: format!("P = {capacity} must be >= p+q = {dim}"),
            });
        }
        Ok(HistoryStack {
            capacity,
            dim,
            cols: Vec::with_capacity(capacity),
            s: Mat::zeros(dim, dim),
            lam_min: 0.0,
            lam_max: 0.0,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.cols.len() == self.capacity
    }

    pub fn columns(&self) -> &[StackColumn] {
        &self.cols
    }

    /// Cached `S = Σ d̄ d̄ᵀ`.
    pub fn s(&self) -> &Mat {
        &self.s
    }

    pub fn lam_min(&self) -> f64 {
        self.lam_min
    }

    pub fn lam_max(&self) -> f64 {
        self.lam_max
    }

    /// λmin(S)/λmax(S); zero while the stack is empty or rank deficient in
    /// the λmax sense.
    pub fn ratio(&self) -> f64 {
        if self.lam_max > 0.0 {
            (self.lam_min / self.lam_max).max(0.0)
        } else {
            0.0
        }
    }

    /// True iff the recorded data spans the regressor space:
    /// λmin(S) > max(1e-10 · λmax(S), 1e-14).
    pub fn rank_condition(&self) -> bool {
        self.lam_min > (RANK_REL_TOL * self.lam_max).max(RANK_ABS_FLOOR)
    }

    fn rebuild_spectrum(cols: &[StackColumn], dim: usize) -> Result<(Mat, f64, f64)> {
        let mut s = Mat::zeros(dim, dim);
        for col in cols {
            s.add_outer(&col.d_bar, &col.d_bar, 1.0);
        }
        let (lo, hi) = linalg::sym_eig_extremes(&s)?;
        Ok((s, lo.max(0.0), hi))
    }

    /// Offers a sample recorded at time `k`.
    ///
    /// Fill phase: appended unconditionally while the stack has free slots.
    /// Selection phase: the single best column swap is taken iff it improves
    /// λmin(S)/λmax(S) by more than a relative 1e-9; ties go to the lowest
    /// slot index.
    pub fn record(&mut self, sample: &NormalizedSample, k: usize) -> Result<RecordOutcome> {
        if sample.d_bar.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: sample.d_bar.len(),
                what: "stack column",
            });
        }
        if sample.d_bar.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput { what: "stack column" });
        }
        let candidate = StackColumn {
            d_bar: sample.d_bar.clone(),
            l_bar: sample.l_bar.clone(),
            x_bar: sample.x_bar.clone(),
            tau: k,
        };

        if !self.is_full() {
            self.cols.push(candidate);
            let (s, lo, hi) = Self::rebuild_spectrum(&self.cols, self.dim)?;
            self.s = s;
            self.lam_min = lo;
            self.lam_max = hi;
            return Ok(RecordOutcome { accepted: true, replaced_slot: None });
        }

        let current = self.ratio();
        let mut best: Option<(f64, usize)> = None;
        for j in 0..self.capacity {
            let mut trial = self.s.clone();
            trial.add_outer(&self.cols[j].d_bar, &self.cols[j].d_bar, -1.0);
            trial.add_outer(&candidate.d_bar, &candidate.d_bar, 1.0);
            let (lo, hi) = linalg::sym_eig_extremes(&trial)?;
            let ratio = if hi > 0.0 { (lo / hi).max(0.0) } else { 0.0 };
            if ratio > current * (1.0 + IMPROVE_REL_TOL)
                && ratio > current
                && best.map_or(true, |(r, _)| ratio > r)
            {
                best = Some((ratio, j));
            }
        }
        match best {
            Some((_, j)) => {
                self.cols[j] = candidate;
                let (s, lo, hi) = Self::rebuild_spectrum(&self.cols, self.dim)?;
                self.s = s;
                self.lam_min = lo;
                self.lam_max = hi;
                Ok(RecordOutcome { accepted: true, replaced_slot: Some(j) })
            }
            None => Ok(RecordOutcome { accepted: false, replaced_slot: None }),
        }
    }

    /// Stack contents as CSV, one row per stored column:
    /// `tau, d̄ entries, l̄ entries, x̄ entries`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau");
        for i in 0..self.dim {
            out.push_str(&format!(",d{i}"));
        }
        let n = self.cols.first().map_or(0, |c| c.l_bar.len());
        for i in 0..n {
            out.push_str(&format!(",l{i}"));
        }
        for i in 0..n {
            out.push_str(&format!(",x{i}"));
        }
        out.push('\n');
        for col in &self.cols {
            out.push_str(&col.tau.to_string());
            for v in col.d_bar.iter().chain(&col.l_bar).chain(&col.x_bar) {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Extreme eigenvalues of a symmetric matrix; see [`linalg::sym_eig_extremes`].
pub fn eig_extremes(s: &Mat) -> Result<(f64, f64)> {
    linalg::sym_eig_extremes(s)
}
