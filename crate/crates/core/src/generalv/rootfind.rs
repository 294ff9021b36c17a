//! Numerical roots of rational polynomials, refined in exact arithmetic.

use crate::exactpoly::rational::{from_f64, to_f64};
use crate::exactpoly::{Poly, Rational};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};

/// Exact complex rational.
pub type ComplexQ = Complex<Rational>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    /// Backward-error target for the simultaneous iteration.
    pub tol: f64,
    pub max_iter: usize,
    /// Newton steps in exact arithmetic after the floating-point solve.
    pub polish_steps: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { tol: 1e-12, max_iter: 200, polish_steps: 4 }
    }
}

fn horner_f64(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn backward_error(c: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner_f64(c, z);
    let scale: f64 = c.iter().rev().fold(0.0, |acc, a| acc * z.norm() + a.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Aberth–Ehrlich iteration on ascending coefficients. `None` when the
/// iteration limit is reached first.
pub fn aberth(coeffs: &[f64], opts: &RootOptions) -> Option<Vec<Complex64>> {
    let n = coeffs.len().checked_sub(1)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = coeffs[n];
    let c: Vec<Complex64> = coeffs.iter().map(|&a| Complex64::new(a / lead, 0.0)).collect();
    let center = -c[n - 1] / n as f64;
    let radius = (0..n)
        .map(|k| c[k].norm().powf(1.0 / (n - k) as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| center + Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..opts.max_iter {
        if z.iter().all(|&zi| backward_error(&c, zi) <= opts.tol) {
            return Some(z);
        }
        for k in 0..n {
            let (p, dp) = horner_f64(&c, z[k]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::one() / (z[k] - z[j]))
                .sum();
            z[k] -= ratio / (Complex64::one() - ratio * repulsion);
        }
    }
    z.iter().all(|&zi| backward_error(&c, zi) <= opts.tol).then_some(z)
}

/// Eigenvalues of the companion matrix.
pub fn companion_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i] / lead;
    }
    m.complex_eigenvalues().iter().copied().collect()
}

/// Floating-point roots of `p` with multiplicity: Aberth, falling back to
/// companion eigenvalues.
pub fn float_roots(p: &Poly, opts: &RootOptions) -> Vec<Complex64> {
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    aberth(&coeffs, opts).unwrap_or_else(|| companion_roots(&coeffs))
}

fn round_to_grid(q: &Rational, bits: usize) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = q * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(1.into(), 2.into())).floor().to_integer();
    Rational::new(rounded, scale)
}

pub fn eval_complex(p: &Poly, z: &ComplexQ) -> ComplexQ {
    p.coeffs()
        .iter()
        .rev()
        .fold(ComplexQ::zero(), |acc, a| acc * z.clone() + ComplexQ::new(a.clone(), Rational::zero()))
}

pub fn complex_from_f64(z: Complex64) -> Option<ComplexQ> {
    Some(ComplexQ::new(from_f64(z.re)?, from_f64(z.im)?))
}

pub fn complex_to_f64(z: &ComplexQ) -> Complex64 {
    Complex64::new(to_f64(&z.re), to_f64(&z.im))
}

/// Newton steps `z ← z − p(z)/p'(z)` in exact arithmetic, rounding to a
/// `2^-200` grid after each step to bound the size of the rationals.
pub fn polish_exact(p: &Poly, start: &ComplexQ, steps: usize) -> ComplexQ {
    let dp = p.derivative();
    let mut z = start.clone();
    for _ in 0..steps {
        let d = eval_complex(&dp, &z);
        if d.is_zero() {
            break;
        }
        let next = z.clone() - eval_complex(p, &z) / d;
        z = ComplexQ::new(round_to_grid(&next.re, 200), round_to_grid(&next.im, 200));
    }
    z
}

/// Roots of `p`, polished in exact arithmetic. Roots should be simple for
/// the polish to converge quadratically.
pub fn polished_roots(p: &Poly, opts: &RootOptions) -> Option<Vec<ComplexQ>> {
    float_roots(p, opts)
        .into_iter()
        .map(|z| complex_from_f64(z).map(|q| polish_exact(p, &q, opts.polish_steps)))
        .collect()
}

/// Continued-fraction convergents of `x` with denominators at most `max_den`.
pub fn convergents(x: f64, max_den: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..64 {
        if !v.is_finite() || v.abs() > 1e15 {
            break;
        }
        let a = v.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    out
}

/// Rational roots of `p` with multiplicities, sorted. The second value is
/// whether they account for the full degree.
pub fn rational_roots(p: &Poly) -> (Vec<(Rational, usize)>, bool) {
    let Some(deg) = p.degree() else {
        return (Vec::new(), false);
    };
    let squarefree = p.exact_div(&p.gcd(&p.derivative())).expect("gcd divides");
    let opts = RootOptions::default();
    let mut found: Vec<Rational> = Vec::new();
    for z in float_roots(&squarefree, &opts) {
        if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            continue;
        }
        let hit = convergents(z.re, 1_000_000_000)
            .into_iter()
            .rev()
            .find(|q| squarefree.eval(q).is_zero());
        if let Some(q) = hit {
            if !found.contains(&q) {
                found.push(q);
            }
        }
    }
    found.sort();
    let mut total = 0;
    let roots: Vec<(Rational, usize)> = found
        .into_iter()
        .map(|q| {
            let f = Poly::linear_factor(&q);
            let mut m = 0;
            let mut rest = p.clone();
            while let Some(next) = rest.exact_div(&f) {
                rest = next;
                m += 1;
            }
            total += m;
            (q, m)
        })
        .collect();
    (roots, total == deg)
}
