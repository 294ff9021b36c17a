use super::master::log_gradient;
use super::reduced::{fertility_check, genericity_check};
use super::rootfind::{complex_to_f64, polished_roots, ComplexQ, RootOptions};
use super::subspace::SingularData;
use crate::exactpoly::{PolyTuple, Rational};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BetheStatus {
    Ok,
    /// Some `y_i` has a repeated root or shares a root with its neighbours.
    Degenerate,
    NotFertile,
    RootFailure,
    ResidualTooLarge,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BetheReport {
    pub status: BetheStatus,
    /// `|∂ log Φ / ∂t|` per root, grouped by colour.
    pub residuals: Vec<Vec<f64>>,
    pub max: f64,
    /// The same residual divided by the largest term in its sum.
    pub max_relative: f64,
    /// Roots as `(re, im)` pairs, grouped by colour.
    pub roots: Vec<Vec<(f64, f64)>>,
}

impl BetheReport {
    fn status_only(status: BetheStatus) -> Self {
        BetheReport { status, residuals: Vec::new(), max: f64::NAN, max_relative: f64::NAN, roots: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.status == BetheStatus::Ok
    }
}

fn norm(z: &ComplexQ) -> f64 {
    complex_to_f64(z).norm()
}

/// Largest single term in the gradient sum for one root, for scaling.
fn term_scale(t: &ComplexQ, points: &[ComplexQ], weights: &[Vec<usize>], roots: &[Vec<ComplexQ>], i: usize) -> f64 {
    let tf = complex_to_f64(t);
    let mut scale: f64 = 0.0;
    for (z, w) in points.iter().zip(weights) {
        if w[i] > 0 {
            scale = scale.max(w[i] as f64 / (tf - complex_to_f64(z)).norm());
        }
    }
    for j in i.saturating_sub(1)..(i + 2).min(roots.len()) {
        for s in &roots[j] {
            let d = (tf - complex_to_f64(s)).norm();
            if d > 0.0 {
                scale = scale.max(if i == j { 2.0 } else { 1.0 } / d);
            }
        }
    }
    scale
}

/// Checks that the roots of `y` are a critical point of the master function
/// twisted by `data`. Roots are found in floating point, polished in exact
/// arithmetic, and the gradient is evaluated exactly before rounding.
pub fn bethe_verify(y: &PolyTuple, data: &SingularData, tol: f64, opts: &RootOptions) -> BetheReport {
    let twists = data.twists();
    if !fertility_check(y, twists) {
        return BetheReport::status_only(BetheStatus::NotFertile);
    }
    if !genericity_check(y, twists) {
        return BetheReport::status_only(BetheStatus::Degenerate);
    }
    let mut groups: Vec<Vec<ComplexQ>> = Vec::with_capacity(y.rank());
    for p in y.entries() {
        if p.is_constant() {
            groups.push(Vec::new());
            continue;
        }
        match polished_roots(p, opts) {
            Some(roots) => groups.push(roots),
            None => return BetheReport::status_only(BetheStatus::RootFailure),
        }
    }
    let points: Vec<ComplexQ> = data.points().iter().map(|z| ComplexQ::new(z.clone(), Rational::zero())).collect();
    let grad = match log_gradient(&points, data.weights(), &groups) {
        Ok(g) => g,
        Err(_) => return BetheReport::status_only(BetheStatus::Degenerate),
    };
    let residuals: Vec<Vec<f64>> = grad.iter().map(|row| row.iter().map(norm).collect()).collect();
    let relative = grad.iter().enumerate().flat_map(|(i, row)| {
        let (groups, points) = (&groups, &points);
        row.iter().zip(&groups[i]).map(move |(g, t)| norm(g) / term_scale(t, points, data.weights(), groups, i).max(f64::MIN_POSITIVE))
    });
    let max_relative = relative.fold(0.0, f64::max);
    let max = residuals.iter().flatten().copied().fold(0.0, f64::max);
    let roots = groups.iter().map(|g| g.iter().map(|z| (complex_to_f64(z).re, complex_to_f64(z).im)).collect()).collect();
    let status = if max < tol { BetheStatus::Ok } else { BetheStatus::ResidualTooLarge };
    BetheReport { status, residuals, max, max_relative, roots }
}
