use super::subspace::SingularData;
use super::GeneralError;
use num_complex::{Complex, Complex64};
use num_traits::Num;
use serde::{Deserialize, Serialize};

/// Shape of the master function: colour counts `k`, singular points and
/// weights, with the type-A Cartan matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MasterFunctionSpec {
    pub rank: usize,
    pub degrees: Vec<usize>,
    pub points: Vec<Complex64>,
    pub weights: Vec<Vec<usize>>,
}

impl MasterFunctionSpec {
    pub fn new(degrees: Vec<usize>, points: Vec<Complex64>, weights: Vec<Vec<usize>>) -> Result<Self, GeneralError> {
        let rank = degrees.len();
        if points.len() != weights.len() || weights.iter().any(|w| w.len() != rank) {
            return Err(GeneralError::Shape);
        }
        Ok(MasterFunctionSpec { rank, degrees, points, weights })
    }

    pub fn from_singular_data(degrees: Vec<usize>, data: &SingularData) -> Result<Self, GeneralError> {
        let points = data.points().iter().map(|z| Complex64::new(crate::exactpoly::rational::to_f64(z), 0.0)).collect();
        MasterFunctionSpec::new(degrees, points, data.weights().to_vec())
    }

    /// `a_{ij}` for `1 ≤ i, j ≤ r`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }
}

/// Roots grouped by colour.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub roots: Vec<Vec<Complex64>>,
}

impl CriticalPoint {
    pub fn new(spec: &MasterFunctionSpec, roots: Vec<Vec<Complex64>>) -> Result<Self, GeneralError> {
        if roots.iter().map(Vec::len).ne(spec.degrees.iter().copied()) {
            return Err(GeneralError::Shape);
        }
        Ok(CriticalPoint { roots })
    }
}

/// Gradient of `log Φ`: for colour `i` and root `t`,
/// `−Σ_a μ_i^{(a)}/(t − z_a) + Σ_j a_{ij} Σ_{t' ≠ t} 1/(t − t')`
/// over roots `t'` of colour `j`. Generic so it runs both in floating point
/// and in exact complex rationals.
pub fn log_gradient<T>(points: &[Complex<T>], weights: &[Vec<usize>], roots: &[Vec<Complex<T>>]) -> Result<Vec<Vec<Complex<T>>>, GeneralError>
where
    T: Clone + Num,
{
    let zero = || Complex::new(T::zero(), T::zero());
    let from_int = |n: i64| {
        let mut acc = T::zero();
        for _ in 0..n.unsigned_abs() {
            acc = acc + T::one();
        }
        Complex::new(if n < 0 { T::zero() - acc } else { acc }, T::zero())
    };
    let r = roots.len();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Vec::with_capacity(roots[i].len());
        for (m, t) in roots[i].iter().enumerate() {
            let mut g = zero();
            for (z, w) in points.iter().zip(weights) {
                if w[i] == 0 {
                    continue;
                }
                let d = t.clone() - z.clone();
                if d == zero() {
                    return Err(GeneralError::Coincident);
                }
                g = g - from_int(w[i] as i64) / d;
            }
            for j in i.saturating_sub(1)..(i + 2).min(r) {
                let a = if i == j { 2 } else { -1 };
                for (l, s) in roots[j].iter().enumerate() {
                    if i == j && l == m {
                        continue;
                    }
                    let d = t.clone() - s.clone();
                    if d == zero() {
                        return Err(GeneralError::Coincident);
                    }
                    g = g + from_int(a) / d;
                }
            }
            row.push(g);
        }
        out.push(row);
    }
    Ok(out)
}

/// `log|Φ|` and the gradient of `log Φ` with respect to each root.
pub fn master_function(spec: &MasterFunctionSpec, u: &CriticalPoint) -> Result<(f64, Vec<Vec<Complex64>>), GeneralError> {
    let grad = log_gradient(&spec.points, &spec.weights, &u.roots)?;
    let mut value = 0.0;
    let r = u.roots.len();
    for i in 0..r {
        for t in &u.roots[i] {
            for (z, w) in spec.points.iter().zip(&spec.weights) {
                value -= w[i] as f64 * (t - z).norm().ln();
            }
        }
        for (l, s) in u.roots[i].iter().enumerate() {
            for t in &u.roots[i][l + 1..] {
                value += 2.0 * (s - t).norm().ln();
            }
        }
        if i + 1 < r {
            for s in &u.roots[i] {
                for t in &u.roots[i + 1] {
                    value -= (s - t).norm().ln();
                }
            }
        }
    }
    Ok((value, grad))
}
