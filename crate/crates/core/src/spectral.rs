//! Adjacency spectral radius: power iteration for arbitrary graphs, an exact
//! quotient-matrix route for `K_a ∨ (K_b + I_c)`, and two upper bounds.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Default residual tolerance of [`spectral_radius`].
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap of [`spectral_radius`].
pub const MAX_ITERATIONS: usize = 1_000_000;

const BISECTION_STEPS: usize = 200;

/// Largest adjacency eigenvalue.
///
/// Power iteration runs on `A + I` (primitive on connected graphs, so
/// bipartite graphs do not oscillate) from the indicator vector of each
/// component, and stops once the 2-norm residual of the normalised iterate is
/// at most `tol`. Disconnected graphs report the maximum over components.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    let mut best = 0.0f64;
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        best = best.max(component_radius(g, comp.mask(), tol)?);
    }
    Ok(best)
}

fn component_radius(g: &Graph, comp: u64, tol: f64) -> Result<f64> {
    let n = g.n();
    let members: Vec<usize> = bits(comp).collect();
    let scale = 1.0 / (members.len() as f64).sqrt();
    let mut x = vec![0.0f64; n];
    for &v in &members {
        x[v] = scale;
    }
    let mut y = vec![0.0f64; n];
    for _ in 0..MAX_ITERATIONS {
        for &v in &members {
            y[v] = x[v] + bits(g.row(v)).map(|u| x[u]).sum::<f64>();
        }
        let lambda: f64 = members.iter().map(|&v| x[v] * y[v]).sum();
        let residual: f64 =
            members.iter().map(|&v| (y[v] - lambda * x[v]).powi(2)).sum::<f64>().sqrt();
        if residual <= tol {
            return Ok(lambda - 1.0);
        }
        let norm = members.iter().map(|&v| y[v] * y[v]).sum::<f64>().sqrt();
        for &v in &members {
            x[v] = y[v] / norm;
        }
    }
    Err(Error::NoConvergence(MAX_ITERATIONS))
}

/// The equitable 3-part quotient of `K_a ∨ (K_b + I_c)` and its Perron pair.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientSystem {
    pub parts: (usize, usize, usize),
    pub matrix: [[f64; 3]; 3],
    pub rho: f64,
    /// Constant eigenvector values on the three parts, normalised so the
    /// lifted vector on the graph has unit length.
    pub eigvec: [f64; 3],
}

impl QuotientSystem {
    /// `‖M y − ρ y‖_∞`.
    pub fn residual(&self) -> f64 {
        (0..3)
            .map(|i| {
                let my: f64 = (0..3).map(|j| self.matrix[i][j] * self.eigvec[j]).sum();
                (my - self.rho * self.eigvec[i]).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Coefficients `[1, c2, c1, c0]` of the characteristic polynomial of the
/// quotient matrix `[[a-1, b, c], [a, b-1, 0], [a, 0, 0]]`.
fn characteristic(a: f64, b: f64, c: f64) -> [f64; 4] {
    [1.0, -(a + b - 2.0), 1.0 - a - b - a * c, a * c * (b - 1.0)]
}

fn horner(p: &[f64], x: f64) -> f64 {
    p.iter().fold(0.0, |acc, &coef| acc * x + coef)
}

/// Perron root and eigenvector of the quotient of `K_a ∨ (K_b + I_c)`.
///
/// The root is the unique zero of the characteristic cubic above `b - 1`;
/// it is isolated by bisection on `(b - 1, a + b + c - 1]`.
pub fn quotient_rho(a: usize, b: usize, c: usize) -> Result<QuotientSystem> {
    if a == 0 || b == 0 {
        return Err(Error::Range(format!("quotient needs a >= 1 and b >= 1, got a={a}, b={b}")));
    }
    let (af, bf, cf) = (a as f64, b as f64, c as f64);
    let poly = characteristic(af, bf, cf);
    let mut lo = bf - 1.0;
    let mut hi = af + bf + cf - 1.0;
    let rho = if horner(&poly, hi) == 0.0 {
        hi
    } else {
        if horner(&poly, hi) < 0.0 {
            return Err(Error::Bracket(format!("cubic negative at upper end {hi}")));
        }
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if horner(&poly, mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    if rho <= bf - 1.0 {
        return Err(Error::Bracket(format!("root {rho} not above b - 1 = {}", bf - 1.0)));
    }

    // Deflate by (λ - ρ); the remaining quadratic must have no root above ρ.
    let q1 = poly[1] + rho;
    let q0 = poly[2] + rho * q1;
    let disc = q1 * q1 - 4.0 * q0;
    if disc >= 0.0 {
        let top = (-q1 + disc.sqrt()) / 2.0;
        if top > rho + 1e-9 * rho.max(1.0) {
            return Err(Error::Bracket(format!("second root {top} exceeds {rho}")));
        }
    }

    let y1 = 1.0;
    let y2 = af * y1 / (rho - (bf - 1.0));
    let y3 = af * y1 / rho;
    let norm = (af * y1 * y1 + bf * y2 * y2 + cf * y3 * y3).sqrt();
    Ok(QuotientSystem {
        parts: (a, b, c),
        matrix: [[af - 1.0, bf, cf], [af, bf - 1.0, 0.0], [af, 0.0, 0.0]],
        rho,
        eigvec: [y1 / norm, y2 / norm, y3 / norm],
    })
}

/// `sqrt(2e - n + 1)`, an upper bound on ρ for connected graphs.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(((2 * g.edge_count() + 1 - g.n()) as f64).sqrt())
}

/// `(δ-1)/2 + sqrt(2e - δn + (δ+1)²/4)` with `δ = δ(G)`.
pub fn hong_shu_fang_bound(g: &Graph) -> f64 {
    hong_shu_fang_value(g.n() as f64, g.edge_count() as f64, g.min_degree() as f64)
}

/// The same bound as a function of `(n, e, δ)`.
pub fn hong_shu_fang_value(n: f64, e: f64, delta: f64) -> f64 {
    (delta - 1.0) / 2.0 + (2.0 * e - delta * n + (delta + 1.0).powi(2) / 4.0).sqrt()
}
