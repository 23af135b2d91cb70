//! Multi-start numeric search for critical values at small genus.
//!
//! Each start is a random point `x = exp(w)` with `|x|` log-uniform and a
//! uniform argument. A Levenberg–Marquardt iteration on the logarithmic
//! gradient `x_a ∂W/∂x_a = 0` (in the coordinates `w`) either converges or
//! is discarded after a fixed budget. Converged values are clustered.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::spectrum::expected_spectrum;
use super::CriticalError;
use crate::graphs::necklace;
use crate::laurent::LaurentPoly;
use crate::potential::graph_potential;

pub const MAX_BRUTE_FORCE_GENUS: usize = 3;

const MAX_ITER: usize = 300;
const RESIDUAL: f64 = 1e-13;
const ESCAPE: f64 = 40.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cluster {
    pub re: f64,
    pub im: f64,
    pub count: usize,
    /// Within the tolerance of a value in the expected spectrum.
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BruteForceReport {
    pub genus: usize,
    pub seed: u64,
    pub starts: usize,
    pub tolerance: f64,
    pub converged: usize,
    pub discarded: usize,
    pub clusters: Vec<Cluster>,
    /// Expected values no start converged to.
    pub missing: Vec<String>,
}

impl BruteForceReport {
    pub fn extra_clusters(&self) -> usize {
        self.clusters.iter().filter(|c| !c.expected).count()
    }

    pub fn within_expected(&self) -> bool {
        self.extra_clusters() == 0
    }
}

struct Compiled {
    exps: Vec<Vec<f64>>,
    coeffs: Vec<Complex64>,
    n: usize,
}

impl Compiled {
    fn new(f: &LaurentPoly) -> Self {
        let (exps, coeffs) =
            f.terms().map(|(e, c)| (e.0.iter().map(|&k| k as f64).collect(), c.to_complex())).unzip();
        Self { exps, coeffs, n: f.vars().len() }
    }

    fn monomials(&self, w: &[Complex64]) -> Vec<Complex64> {
        self.exps
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| c * e.iter().zip(w).map(|(k, wi)| wi * k).sum::<Complex64>().exp())
            .collect()
    }

    fn value(&self, w: &[Complex64]) -> Complex64 {
        self.monomials(w).iter().sum()
    }

    fn gradient(&self, m: &[Complex64]) -> Vec<Complex64> {
        let mut g = vec![Complex64::new(0.0, 0.0); self.n];
        for (e, t) in self.exps.iter().zip(m) {
            for (a, ea) in e.iter().enumerate() {
                g[a] += t * ea;
            }
        }
        g
    }

    fn jacobian(&self, m: &[Complex64]) -> Vec<Vec<Complex64>> {
        let mut j = vec![vec![Complex64::new(0.0, 0.0); self.n]; self.n];
        for (e, t) in self.exps.iter().zip(m) {
            for a in 0..self.n {
                if e[a] == 0.0 {
                    continue;
                }
                for b in 0..self.n {
                    j[a][b] += t * (e[a] * e[b]);
                }
            }
        }
        j
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

/// Gaussian elimination with partial pivoting; `None` if singular.
fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[p][col].norm() < 1e-300 {
            return None;
        }
        a.swap(col, p);
        b.swap(col, p);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let v = b[col];
            b[r] -= f * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for r in (0..n).rev() {
        let s: Complex64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

fn run_start(f: &Compiled, seed: u64) -> Option<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w: Vec<Complex64> = (0..f.n)
        .map(|_| Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(0.0..std::f64::consts::TAU)))
        .collect();
    let mut lambda = 1e-3;
    let mut grad = f.gradient(&f.monomials(&w));
    let mut r = norm(&grad);
    for _ in 0..MAX_ITER {
        if r < RESIDUAL {
            return Some(f.value(&w));
        }
        let j = f.jacobian(&f.monomials(&w));
        // (JᴴJ + λI) Δ = −Jᴴ F
        let n = f.n;
        let mut a = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        let mut rhs = vec![Complex64::new(0.0, 0.0); n];
        for p in 0..n {
            for q in 0..n {
                a[p][q] = (0..n).map(|k| j[k][p].conj() * j[k][q]).sum();
            }
            a[p][p] += lambda;
            rhs[p] = -(0..n).map(|k| j[k][p].conj() * grad[k]).sum::<Complex64>();
        }
        let step = solve(a, rhs)?;
        let trial: Vec<Complex64> = w.iter().zip(&step).map(|(a, b)| a + b).collect();
        if trial.iter().any(|t| t.re.abs() > ESCAPE) {
            return None;
        }
        let tg = f.gradient(&f.monomials(&trial));
        let tr = norm(&tg);
        if tr < r {
            w = trial;
            grad = tg;
            r = tr;
            lambda = (lambda / 3.0).max(1e-15);
        } else {
            lambda *= 4.0;
            if lambda > 1e12 {
                return None;
            }
        }
    }
    (r < RESIDUAL).then(|| f.value(&w))
}

/// Per-start seeds are derived from `seed` and the start index.
fn start_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Run `starts` independent searches on the genus-`g` necklace potential and
/// cluster the converged critical values within `tol`.
pub fn brute_force_values(
    g: usize,
    starts: usize,
    seed: u64,
    tol: f64,
    threads: Option<usize>,
) -> Result<BruteForceReport, CriticalError> {
    if !(2..=MAX_BRUTE_FORCE_GENUS).contains(&g) {
        return Err(CriticalError::GenusOutOfRange { g, min: 2, max: MAX_BRUTE_FORCE_GENUS });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(CriticalError::BadTolerance(tol));
    }
    if starts == 0 {
        return Err(CriticalError::NoStarts);
    }
    let pb = graph_potential(&necklace(g)?);
    let compiled = Compiled::new(&pb.potential);
    let work = || -> Vec<Option<Complex64>> {
        (0..starts).into_par_iter().map(|i| run_start(&compiled, start_seed(seed, i))).collect()
    };
    let results = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };

    let spectrum = expected_spectrum(g)?;
    let expected: Vec<Complex64> = spectrum.values().iter().map(|v| v.to_complex()).collect();
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    let mut converged = 0;
    for v in results.iter().flatten() {
        converged += 1;
        match clusters.iter_mut().find(|(c, _)| (c - v).norm() <= tol) {
            Some(c) => c.1 += 1,
            None => clusters.push((*v, 1)),
        }
    }
    clusters.sort_by(|a, b| b.0.re.total_cmp(&a.0.re).then(b.0.im.total_cmp(&a.0.im)));
    let clusters: Vec<Cluster> = clusters
        .into_iter()
        .map(|(c, count)| Cluster {
            re: c.re,
            im: c.im,
            count,
            expected: expected.iter().any(|e| (e - c).norm() <= tol),
        })
        .collect();
    let missing = spectrum
        .values()
        .iter()
        .filter(|v| !clusters.iter().any(|c| (Complex64::new(c.re, c.im) - v.to_complex()).norm() <= tol))
        .map(ToString::to_string)
        .collect();
    Ok(BruteForceReport {
        genus: g,
        seed,
        starts,
        tolerance: tol,
        converged,
        discarded: starts - converged,
        clusters,
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(brute_force_values(2, 10, 0, 0.0, None), Err(CriticalError::BadTolerance(0.0)));
        assert!(matches!(brute_force_values(4, 10, 0, 1e-8, None), Err(CriticalError::GenusOutOfRange { .. })));
        assert_eq!(brute_force_values(2, 0, 0, 1e-8, None), Err(CriticalError::NoStarts));
    }

    #[test]
    fn small_run_is_deterministic() {
        let a = brute_force_values(2, 200, 7, 1e-8, Some(2)).unwrap();
        let b = brute_force_values(2, 200, 7, 1e-8, Some(1)).unwrap();
        assert_eq!(a, b);
        assert!(a.converged > 0);
        assert!(a.within_expected(), "{:?}", a.clusters);
    }
}
