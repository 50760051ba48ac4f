//! True systems, basis-function sets, and the linearly parameterized
//! approximator used for benchmarking.
//!
//! The two built-in systems come from the reference experiments: a scalar
//! system with known regressor structure and exactly representable dynamics,
//! and a scalar system approximated by Gaussian radial basis functions where
//! the representation error is nonzero.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};

type VecFn = Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
type MatFn = Box<dyn Fn(&[f64]) -> Mat + Send + Sync>;

/// A discrete-time plant `x(k+1) = f(x(k)) + g(x(k)) u(k)` with state
/// dimension `n` and input dimension `m`. The drift and input-gain maps are
/// kept separate so benchmarks can evaluate learning errors against each.
pub struct DiscreteSystem {
    n: usize,
    m: usize,
    drift: VecFn,
    gain: MatFn,
}

impl DiscreteSystem {
    /// Generic closure-backed constructor. `drift(x)` must return an
    /// `n`-vector and `gain(x)` an `n × m` matrix.
    pub fn from_parts(n: usize, m: usize, drift: VecFn, gain: MatFn) -> Self {
        DiscreteSystem { n, m, drift, gain }
    }

    /// Scalar plant `x⁺ = p₁e⁻ˣ + p₂e⁻ˣcos x + p₃ u/(1+x)` with
    /// `p = [-1, 1.5, 1]`.
    pub fn example1() -> Self {
        let p = example1_params();
        DiscreteSystem {
            n: 1,
            m: 1,
            drift: Box::new(move |x| {
                let ex = (-x[0]).exp();
                vec![p[0] * ex + p[1] * ex * x[0].cos()]
            }),
            gain: Box::new(move |x| Mat::from_rows(&[vec![p[2] / (1.0 + x[0])]])),
        }
    }

    /// Scalar plant `x⁺ = 0.5 x sin(0.5x) + (2 + cos x) u`.
    pub fn example2() -> Self {
        DiscreteSystem {
            n: 1,
            m: 1,
            drift: Box::new(|x| vec![0.5 * x[0] * (0.5 * x[0]).sin()]),
            gain: Box::new(|x| Mat::from_rows(&[vec![2.0 + x[0].cos()]])),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn drift(&self, x: &[f64]) -> Vec<f64> {
        (self.drift)(x)
    }

    pub fn gain(&self, x: &[f64]) -> Mat {
        (self.gain)(x)
    }

    /// One step of the true dynamics, `f(x) + g(x) u`.
    pub fn step(&self, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len(), what: "state" });
        }
        if u.len() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, got: u.len(), what: "input" });
        }
        let mut out = (self.drift)(x);
        let g = (self.gain)(x);
        let gu = g.mul_vec(u);
        linalg::axpy(&mut out, &gu, 1.0);
        Ok(out)
    }
}

/// True parameters of the first example system.
pub fn example1_params() -> [f64; 3] {
    [-1.0, 1.5, 1.0]
}

/// Basis functions for the linear parameterization: `φ(x)` (p drift terms)
/// and `χ(x)` (q × m input terms). The stacked regressor is
/// `z(x,u) = [φᵀ(x), uᵀχᵀ(x)]ᵀ ∈ ℝ^{p+q}`.
pub struct BasisSet {
    p: usize,
    q: usize,
    m: usize,
    phi: VecFn,
    chi: MatFn,
}

impl BasisSet {
    pub fn new(p: usize, q: usize, m: usize, phi: VecFn, chi: MatFn) -> Self {
        BasisSet { p, q, m, phi, chi }
    }

    /// Known regressor structure of the first example:
    /// `z = [e⁻ˣ, e⁻ˣcos x, u/(1+x)]`.
    pub fn example1() -> Self {
        BasisSet {
            p: 2,
            q: 1,
            m: 1,
            phi: Box::new(|x| {
                let ex = (-x[0]).exp();
                vec![ex, ex * x[0].cos()]
            }),
            chi: Box::new(|x| Mat::from_rows(&[vec![1.0 / (1.0 + x[0])]])),
        }
    }

    /// The radial-basis set of the second example: five Gaussians with
    /// centers uniform on [-2, 2] and spread 1.2, shared between drift and
    /// input blocks.
    pub fn example2() -> Self {
        let centers: Vec<Vec<f64>> = (0..5).map(|i| vec![-2.0 + i as f64]).collect();
        make_rbf_basis(&centers, 1.2, 1).expect("valid spread")
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Regressor dimension p + q.
    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn phi(&self, x: &[f64]) -> Vec<f64> {
        (self.phi)(x)
    }

    pub fn chi(&self, x: &[f64]) -> Mat {
        (self.chi)(x)
    }

    /// Stacked regressor `z(x,u) = [φ(x); χ(x)u]`. Non-finite components are
    /// rejected with the offending index (drift block first, then input
    /// block).
    pub fn regressor(&self, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
        if u.len() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, got: u.len(), what: "input" });
        }
        let mut z = (self.phi)(x);
        if z.len() != self.p {
            return Err(Error::DimensionMismatch { expected: self.p, got: z.len(), what: "phi" });
        }
        let chi = (self.chi)(x);
        z.extend(chi.mul_vec(u));
        for (i, v) in z.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteBasis { index: i });
            }
        }
        Ok(z)
    }
}

/// Gaussian RBF basis with kernels `exp(-‖x - cᵢ‖²/(2σ²))`. The same kernel
/// vector serves as both `φ` and the columns of `χ` (replicated across the
/// `m` input channels), so `p = q = centers.len()`.
pub fn make_rbf_basis(centers: &[Vec<f64>], spread: f64, m: usize) -> Result<BasisSet> {
    if spread <= 0.0 {
        return Err(Error::Domain { what: "spread", detail: format!("{spread} <= 0") });
    }
    if centers.is_empty() {
        return Err(Error::Domain { what: "centers", detail: "empty".into() });
    }
    let k = centers.len();
    let denom = 2.0 * spread * spread;
    let cs: Vec<Vec<f64>> = centers.to_vec();
    let kernels = move |x: &[f64]| -> Vec<f64> {
        cs.iter()
            .map(|c| {
                let d2: f64 = x.iter().zip(c.iter()).map(|(a, b)| (a - b) * (a - b)).sum();
                (-d2 / denom).exp()
            })
            .collect()
    };
    let kern_phi = kernels.clone();
    let kern_chi = kernels;
    Ok(BasisSet {
        p: k,
        q: k,
        m,
        phi: Box::new(move |x| kern_phi(x)),
        chi: Box::new(move |x| {
            let kv = kern_chi(x);
            let mut chi = Mat::zeros(k, m);
            for (i, v) in kv.iter().enumerate() {
                for j in 0..m {
                    chi.set(i, j, *v);
                }
            }
            chi
        }),
    })
}

/// Linearly parameterized approximator `x̂⁺ = Θ̂ᵀ z(x,u)` with
/// `Θ̂ ∈ ℝ^{(p+q) × n}`, row-partitioned at `p` into drift and input blocks.
pub struct Approximator<'a> {
    theta: Mat,
    basis: &'a BasisSet,
}

impl<'a> Approximator<'a> {
    pub fn new(theta: Mat, basis: &'a BasisSet) -> Result<Self> {
        if theta.rows() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                got: theta.rows(),
                what: "theta rows",
            });
        }
        Ok(Approximator { theta, basis })
    }

    pub fn theta(&self) -> &Mat {
        &self.theta
    }

    /// `f̂(x) = Θ̂_fᵀ φ(x)` using the first `p` parameter rows.
    pub fn f_hat(&self, x: &[f64]) -> Vec<f64> {
        let phi = self.basis.phi(x);
        let n = self.theta.cols();
        let mut out = vec![0.0; n];
        for j in 0..n {
            let mut acc = 0.0;
            for (i, ph) in phi.iter().enumerate() {
                acc += self.theta.get(i, j) * ph;
            }
            out[j] = acc;
        }
        out
    }

    /// `ĝ(x) = Θ̂_gᵀ χ(x)` using the last `q` parameter rows; `n × m`.
    pub fn g_hat(&self, x: &[f64]) -> Mat {
        let chi = self.basis.chi(x);
        let p = self.basis.p();
        let n = self.theta.cols();
        let m = self.basis.m();
        let mut out = Mat::zeros(n, m);
        for r in 0..n {
            for cidx in 0..m {
                let mut acc = 0.0;
                for i in 0..self.basis.q() {
                    acc += self.theta.get(p + i, r) * chi.get(i, cidx);
                }
                out.set(r, cidx, acc);
            }
        }
        out
    }

    /// Full prediction `Θ̂ᵀ z(x,u)`.
    pub fn predict(&self, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
        let z = self.basis.regressor(x, u)?;
        Ok(self.theta.tr_mul_vec(&z))
    }
}

/// Evaluates `f(x) + g(x) u` for a system; thin wrapper kept for symmetry
/// with the other pipeline entry points.
pub fn eval_system(sys: &DiscreteSystem, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
    sys.step(x, u)
}

/// Evaluates the stacked regressor for a basis set.
pub fn eval_regressor(basis: &BasisSet, x: &[f64], u: &[f64]) -> Result<Vec<f64>> {
    basis.regressor(x, u)
}

/// State-domain box with the benchmark grid quantization. `grid` is the
/// number of intervals per dimension, giving `grid + 1` sample points.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub x_low: Vec<f64>,
    pub x_high: Vec<f64>,
    pub grid: usize,
}

impl DomainSpec {
    pub fn new(x_low: Vec<f64>, x_high: Vec<f64>, grid: usize) -> Result<Self> {
        if x_low.len() != x_high.len() {
            return Err(Error::DimensionMismatch {
                expected: x_low.len(),
                got: x_high.len(),
                what: "domain bounds",
            });
        }
        if grid == 0 {
            return Err(Error::Domain { what: "grid", detail: "zero intervals".into() });
        }
        for (lo, hi) in x_low.iter().zip(&x_high) {
            if !(lo < hi) {
                return Err(Error::Domain {
                    what: "domain bounds",
                    detail: format!("x_low {lo} must be < x_high {hi}"),
                });
            }
        }
        Ok(DomainSpec { x_low, x_high, grid })
    }

    pub fn dim(&self) -> usize {
        self.x_low.len()
    }

    /// Grid points along dimension `d`.
    pub fn axis(&self, d: usize) -> Vec<f64> {
        let (lo, hi) = (self.x_low[d], self.x_high[d]);
        let h = (hi - lo) / self.grid as f64;
        (0..=self.grid).map(|i| lo + i as f64 * h).collect()
    }

    pub fn spacing(&self, d: usize) -> f64 {
        (self.x_high[d] - self.x_low[d]) / self.grid as f64
    }
}

/// Least-squares fit of the optimal parameters `Θ* = [Θ_f*; Θ_g*]` for a
/// system over the domain grid: each block solves its own normal equations
/// against the true `f` and `g` sampled on the grid. For a basis that spans
/// the truth exactly this recovers the true parameters; otherwise it defines
/// the zero-mean-residual reference used to reconstruct the approximation
/// error in benchmarks.
pub fn fit_optimal_parameters(
    sys: &DiscreteSystem,
    basis: &BasisSet,
    domain: &DomainSpec,
) -> Result<Mat> {
    if domain.dim() != sys.n() {
        return Err(Error::DimensionMismatch {
            expected: sys.n(),
            got: domain.dim(),
            what: "domain dim",
        });
    }
    if sys.n() != 1 {
        return Err(Error::Domain {
            what: "fit_optimal_parameters",
            detail: "grid fitting implemented for scalar state".into(),
        });
    }
    let xs = domain.axis(0);
    let (p, q) = (basis.p(), basis.q());
    let n = sys.n();
    let m = sys.m();

    // drift block: min Σ (f(x) - Θ_fᵀφ(x))²
    let mut a_f = Mat::zeros(p, p);
    let mut b_f = vec![vec![0.0; p]; n];
    // input block: min Σ ‖g(x) - Θ_gᵀχ(x)‖², column-wise over m
    let mut a_g = Mat::zeros(q, q);
    let mut b_g = vec![vec![0.0; q]; n];
    for &x in &xs {
        let xv = [x];
        let phi = basis.phi(&xv);
        let fv = sys.drift(&xv);
        for i in 0..p {
            for j in 0..p {
                let v = a_f.get(i, j) + phi[i] * phi[j];
                a_f.set(i, j, v);
            }
            for r in 0..n {
                b_f[r][i] += phi[i] * fv[r];
            }
        }
        let chi = basis.chi(&xv);
        let gv = sys.gain(&xv);
        // sum over input channels so the shared-kernel layout stays square
        for i in 0..q {
            for j in 0..q {
                let mut acc = 0.0;
                for cidx in 0..m {
                    acc += chi.get(i, cidx) * chi.get(j, cidx);
                }
                let v = a_g.get(i, j) + acc;
                a_g.set(i, j, v);
            }
            for r in 0..n {
                for cidx in 0..m {
                    b_g[r][i] += chi.get(i, cidx) * gv.get(r, cidx);
                }
            }
        }
    }
    let mut theta = Mat::zeros(p + q, n);
    for r in 0..n {
        let tf = linalg::solve(&a_f, &b_f[r])?;
        for i in 0..p {
            theta.set(i, r, tf[i]);
        }
        let tg = linalg::solve(&a_g, &b_g[r])?;
        for i in 0..q {
            theta.set(p + i, r, tg[i]);
        }
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_at_origin() {
        // -1·e⁰ + 1.5·e⁰cos0 + 0 = 0.5
        let sys = DiscreteSystem::example1();
        let x1 = sys.step(&[0.0], &[0.0]).unwrap();
        assert!((x1[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn example2_at_origin() {
        let sys = DiscreteSystem::example2();
        assert_eq!(sys.step(&[0.0], &[0.0]).unwrap()[0], 0.0);
        // (2 + cos 0)·1 = 3
        assert!((sys.step(&[0.0], &[1.0]).unwrap()[0] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn step_rejects_dimension_mismatch() {
        let sys = DiscreteSystem::example1();
        assert!(sys.step(&[0.0, 1.0], &[0.0]).is_err());
        assert!(sys.step(&[0.0], &[]).is_err());
    }

    #[test]
    fn example1_regressor_at_origin() {
        let basis = BasisSet::example1();
        let z = basis.regressor(&[0.0], &[0.0]).unwrap();
        assert_eq!(z, vec![1.0, 1.0, 0.0]);
    }

    #[test]
    fn regressor_input_block_vanishes_without_input() {
        let basis = BasisSet::example2();
        let z = basis.regressor(&[0.7], &[0.0]).unwrap();
        for v in &z[basis.p()..] {
            assert_eq!(*v, 0.0);
        }
    }

    #[test]
    fn regressor_reports_nonfinite_component() {
        // 1/(1+x) blows up at x = -1; the offending index is the input block
        let basis = BasisSet::example1();
        match basis.regressor(&[-1.0], &[1.0]) {
            Err(Error::NonFiniteBasis { index }) => assert_eq!(index, 2),
            other => panic!("expected NonFiniteBasis, got {other:?}"),
        }
    }

    #[test]
    fn rbf_counts_and_center_value() {
        let centers: Vec<Vec<f64>> = (0..5).map(|i| vec![-2.0 + i as f64]).collect();
        let b = make_rbf_basis(&centers, 1.2, 1).unwrap();
        assert_eq!(b.dim(), 10);
        // kernel equals 1 at its own center
        let phi = b.phi(&[-2.0]);
        assert_eq!(phi[0], 1.0);

        let single = make_rbf_basis(&[vec![0.0]], 0.7, 1).unwrap();
        assert_eq!(single.dim(), 2);
    }

    #[test]
    fn rbf_value_at_sigma_sqrt2() {
        let sigma = 1.2;
        let b = make_rbf_basis(&[vec![0.0]], sigma, 1).unwrap();
        let phi = b.phi(&[sigma * 2f64.sqrt()]);
        assert!((phi[0] - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn rbf_rejects_bad_spread() {
        assert!(make_rbf_basis(&[vec![0.0]], 0.0, 1).is_err());
        assert!(make_rbf_basis(&[], 1.0, 1).is_err());
    }

    #[test]
    fn rbf_depends_only_on_distance() {
        let b = make_rbf_basis(&[vec![0.3]], 0.9, 1).unwrap();
        let left = b.phi(&[0.3 - 0.47]);
        let right = b.phi(&[0.3 + 0.47]);
        assert!((left[0] - right[0]).abs() < 1e-15);
    }

    #[test]
    fn partition_consistency() {
        // Θ̂ᵀz(x,u) must equal f̂(x) + ĝ(x)u for random-ish parameters.
        let basis = BasisSet::example2();
        let mut theta = Mat::zeros(basis.dim(), 1);
        for i in 0..basis.dim() {
            theta.set(i, 0, (i as f64 * 0.37 + 0.1).sin());
        }
        let approx = Approximator::new(theta, &basis).unwrap();
        for step in 0..20 {
            let x = [-2.0 + 0.21 * step as f64];
            let u = [(step as f64 * 0.71).cos()];
            let direct = approx.predict(&x, &u).unwrap();
            let f = approx.f_hat(&x);
            let gu = approx.g_hat(&x).mul_vec(&u);
            assert!((direct[0] - (f[0] + gu[0])).abs() < 1e-12);
        }
    }

    #[test]
    fn example1_fit_recovers_true_parameters() {
        let sys = DiscreteSystem::example1();
        let basis = BasisSet::example1();
        let dom = DomainSpec::new(vec![0.0], vec![2.0], 500).unwrap();
        let theta = fit_optimal_parameters(&sys, &basis, &dom).unwrap();
        let p = example1_params();
        for i in 0..3 {
            assert!((theta.get(i, 0) - p[i]).abs() < 1e-9, "component {i}");
        }
    }

    #[test]
    fn domain_rejects_inverted_bounds() {
        assert!(DomainSpec::new(vec![1.0], vec![0.0], 10).is_err());
    }
}
