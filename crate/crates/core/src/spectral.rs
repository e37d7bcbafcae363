//! Adjacency spectra: a cyclic Jacobi eigensolver, inertia classification,
//! and the positive/negative square-sum invariants with trace-identity
//! self-checks.
//!
//! Graphs in scope are dense and small (hundreds of vertices at most), so
//! Jacobi rotations are the whole solver: robust, dependency-free, and with
//! residuals far below the classification thresholds.

use crate::error::{GraphError, SpectralError};
use crate::generators::binomial;
use crate::graph::Graph;

/// Resolved numeric thresholds for one eigensolve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Eigenvalues with magnitude at or below this classify as zero.
    pub zero_eig_tol: f64,
    /// Allowed residual in the trace identities.
    pub identity_tol: f64,
    /// Maximum Jacobi sweeps before giving up.
    pub solver_sweep_limit: usize,
}

/// Per-graph scale factors that produce a [`ToleranceConfig`]. These are what
/// the CLI flags override.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceScales {
    /// Zero-classification threshold per vertex: `zero_eig_tol = scale * n`.
    pub zero_scale: f64,
    /// Identity residual per unit of trace: `identity_tol = scale * max(1, 2m)`.
    pub identity_scale: f64,
    pub sweep_limit: usize,
}

impl Default for ToleranceScales {
    fn default() -> Self {
        ToleranceScales {
            zero_scale: 1e-8,
            identity_scale: 1e-6,
            sweep_limit: 64,
        }
    }
}

impl ToleranceScales {
    pub fn resolve(&self, n: usize, m: usize) -> Result<ToleranceConfig, SpectralError> {
        let cfg = ToleranceConfig {
            zero_eig_tol: self.zero_scale * n.max(1) as f64,
            identity_tol: self.identity_scale * (2 * m).max(1) as f64,
            solver_sweep_limit: self.sweep_limit,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl ToleranceConfig {
    pub fn for_graph(g: &Graph) -> Self {
        ToleranceScales::default()
            .resolve(g.vertex_count(), g.edge_count())
            .expect("default scales are valid")
    }

    /// Copy with the zero-classification threshold divided by `factor`;
    /// used to re-verify counterexample candidates.
    pub fn tightened(&self, factor: f64) -> Self {
        ToleranceConfig {
            zero_eig_tol: self.zero_eig_tol / factor,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<(), SpectralError> {
        let usable = |x: f64| x.is_finite() && x > 0.0;
        if !usable(self.zero_eig_tol) || !usable(self.identity_tol) {
            return Err(SpectralError::BadTolerance(
                "tolerances must be positive and finite".into(),
            ));
        }
        // adjacency spectra have no nonzero eigenvalue below ~0.618 in
        // magnitude, so anything approaching 0.5 would misclassify
        if self.zero_eig_tol >= 0.5 {
            return Err(SpectralError::BadTolerance(format!(
                "zero_eig_tol {} must stay below 0.5",
                self.zero_eig_tol
            )));
        }
        if self.solver_sweep_limit == 0 {
            return Err(SpectralError::BadTolerance(
                "sweep limit must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Counts of positive, negative, and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Adjacency spectrum summary of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// All eigenvalues, sorted descending.
    pub eigenvalues: Vec<f64>,
    pub inertia: Inertia,
    /// Spectral radius (largest eigenvalue).
    pub mu: f64,
    /// Smallest eigenvalue.
    pub mu_min: f64,
    /// Sum of squares of the eigenvalues classified positive.
    pub s_plus: f64,
    /// Sum of squares of the eigenvalues classified negative.
    pub s_minus: f64,
}

impl Spectrum {
    pub fn sqrt_s_plus(&self) -> f64 {
        self.s_plus.sqrt()
    }

    /// Sum of cubes, `tr(A^3)`.
    pub fn trace_cube_value(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l * l * l).sum()
    }
}

fn off_diagonal_frobenius(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}

/// Eigenvalues of a dense real symmetric matrix, sorted descending.
///
/// Cyclic Jacobi with the Numerical Recipes thresholding schedule. The input
/// must be symmetric to 1e-12; convergence drives the off-diagonal Frobenius
/// norm below `zero_eig_tol * 1e-3`.
pub fn symmetric_eigenvalues(
    matrix: &[f64],
    n: usize,
    cfg: &ToleranceConfig,
) -> Result<Vec<f64>, SpectralError> {
    if n == 0 || matrix.len() != n * n {
        return Err(SpectralError::BadShape);
    }
    cfg.validate()?;
    for i in 0..n {
        for j in (i + 1)..n {
            let delta = (matrix[i * n + j] - matrix[j * n + i]).abs();
            if delta > 1e-12 {
                return Err(SpectralError::NotSymmetric { i, j, delta });
            }
        }
    }
    if n == 1 {
        return Ok(vec![matrix[0]]);
    }

    let target = cfg.zero_eig_tol * 1e-3;
    let mut a = matrix.to_vec();
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 1..=cfg.solver_sweep_limit {
        let off = off_diagonal_frobenius(&a, n);
        if off <= target {
            d.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
            return Ok(d);
        }
        let sm: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].abs())
            .sum();
        let tresh = if sweep < 4 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };

        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let g = 100.0 * a[p * n + q].abs();
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if a[p * n + q].abs() <= tresh {
                    continue;
                }
                let mut h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    a[p * n + q] / h
                } else {
                    let theta = 0.5 * h / a[p * n + q];
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                h = t * a[p * n + q];
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p * n + q] = 0.0;
                let rotate = |a: &mut [f64], i: usize, j: usize, k: usize, l: usize| {
                    let g = a[i * n + j];
                    let h = a[k * n + l];
                    a[i * n + j] = g - s * (h + g * tau);
                    a[k * n + l] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, p, j, q, j);
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }

    Err(SpectralError::NoConvergence {
        sweeps: cfg.solver_sweep_limit,
        residual: off_diagonal_frobenius(&a, n),
    })
}

/// Splits a descending eigenvalue list into (positive, negative, zero) counts;
/// magnitudes at or below `zero_eig_tol` count as zero.
pub fn classify_inertia(eigenvalues: &[f64], cfg: &ToleranceConfig) -> Inertia {
    let positive = eigenvalues
        .iter()
        .filter(|&&l| l > cfg.zero_eig_tol)
        .count();
    let negative = eigenvalues
        .iter()
        .filter(|&&l| l < -cfg.zero_eig_tol)
        .count();
    Inertia {
        positive,
        negative,
        zero: eigenvalues.len() - positive - negative,
    }
}

/// Full spectrum of a graph, with the `tr(A)` and `tr(A^2)` identities
/// enforced. A violation here means solver trouble, not bad input.
pub fn spectrum_of(g: &Graph, cfg: &ToleranceConfig) -> Result<Spectrum, SpectralError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SpectralError::BadShape);
    }
    let eigenvalues = symmetric_eigenvalues(&g.adjacency_matrix(), n, cfg)?;
    assemble_spectrum(eigenvalues, g.edge_count(), cfg)
}

fn assemble_spectrum(
    eigenvalues: Vec<f64>,
    m: usize,
    cfg: &ToleranceConfig,
) -> Result<Spectrum, SpectralError> {
    let inertia = classify_inertia(&eigenvalues, cfg);
    let s_plus: f64 = eigenvalues
        .iter()
        .filter(|&&l| l > cfg.zero_eig_tol)
        .map(|l| l * l)
        .sum();
    let s_minus: f64 = eigenvalues
        .iter()
        .filter(|&&l| l < -cfg.zero_eig_tol)
        .map(|l| l * l)
        .sum();

    let trace: f64 = eigenvalues.iter().sum();
    if trace.abs() > cfg.identity_tol {
        return Err(SpectralError::IdentityViolation {
            identity: "tr(A) = 0",
            residual: trace.abs(),
            tolerance: cfg.identity_tol,
        });
    }
    let square_residual = (s_plus + s_minus - 2.0 * m as f64).abs();
    if square_residual > cfg.identity_tol {
        return Err(SpectralError::IdentityViolation {
            identity: "tr(A^2) = 2m",
            residual: square_residual,
            tolerance: cfg.identity_tol,
        });
    }

    let mu = eigenvalues[0];
    let mu_min = *eigenvalues.last().expect("n >= 1");
    Ok(Spectrum {
        eigenvalues,
        inertia,
        mu,
        mu_min,
        s_plus,
        s_minus,
    })
}

/// `tr(A^3)`, cross-checked against six times the combinatorial triangle
/// count within `identity_tol * n`.
pub fn trace_cube(
    g: &Graph,
    spectrum: &Spectrum,
    cfg: &ToleranceConfig,
) -> Result<f64, SpectralError> {
    let value = spectrum.trace_cube_value();
    let expected = 6.0 * g.triangle_count() as f64;
    let tolerance = cfg.identity_tol * g.vertex_count().max(1) as f64;
    let residual = (value - expected).abs();
    if residual > tolerance {
        return Err(SpectralError::IdentityViolation {
            identity: "tr(A^3) = 6t",
            residual,
            tolerance,
        });
    }
    Ok(value)
}

/// Exact spectrum of the Kneser graph on 2-subsets of a p-set: eigenvalue
/// `C(p-2,2)` once, `1` with multiplicity `C(p,2) - p`, and `-(p-3)` with
/// multiplicity `p - 1`.
pub fn kneser2_closed_form(p: usize) -> Result<Spectrum, GraphError> {
    if p < 4 {
        return Err(GraphError::BadKneserParameters { p, k: 2 });
    }
    let n = binomial(p, 2) as usize;
    let top = binomial(p - 2, 2) as f64;
    let negative = -((p - 3) as f64);
    let ones = n - p;

    let mut eigenvalues = Vec::with_capacity(n);
    eigenvalues.push(top);
    eigenvalues.extend(std::iter::repeat(1.0).take(ones));
    eigenvalues.extend(std::iter::repeat(negative).take(p - 1));
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).expect("finite"));

    let s_plus = top * top + ones as f64;
    let s_minus = (p - 1) as f64 * negative * negative;
    Ok(Spectrum {
        mu: eigenvalues[0],
        mu_min: negative,
        inertia: Inertia {
            positive: 1 + ones,
            negative: p - 1,
            zero: 0,
        },
        eigenvalues,
        s_plus,
        s_minus,
    })
}
