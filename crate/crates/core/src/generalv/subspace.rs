use super::rootfind::rational_roots;
use super::GeneralError;
use crate::exactpoly::linear::{rank, row_reduce};
use crate::exactpoly::rational::seq_as_strings;
use crate::exactpoly::{factorial, wronskian, Poly, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// An `(r+1)`-dimensional space of polynomials without base points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Subspace {
    basis: Vec<Poly>,
}

impl Subspace {
    pub fn new(basis: Vec<Poly>) -> Result<Self, GeneralError> {
        if basis.len() < 2 {
            return Err(GeneralError::TooSmall(basis.len()));
        }
        let width = basis.iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
        let rows: Vec<Vec<Rational>> = basis.iter().map(|p| (0..width).map(|k| p.coeff(k)).collect()).collect();
        if rank(&rows) != basis.len() {
            return Err(GeneralError::Dependent);
        }
        let g = basis.iter().fold(Poly::zero(), |g, p| g.gcd(p));
        if !g.is_constant() {
            return Err(GeneralError::BasePoint(g.to_text()));
        }
        Ok(Subspace { basis })
    }

    /// `C[x]_{≤r}` with basis `x^{i-1}/(i-1)!`.
    pub fn polynomials_up_to(rank: usize) -> Self {
        Subspace { basis: (0..=rank).map(Poly::divided_power).collect() }
    }

    pub fn from_ints(basis: &[&[i64]]) -> Result<Self, GeneralError> {
        Subspace::new(basis.iter().map(|c| Poly::from_ints(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// Whether `p` lies in the span.
    pub fn contains(&self, p: &Poly) -> bool {
        let mut all = self.basis.clone();
        all.push(p.clone());
        let width = all.iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
        let rows: Vec<Vec<Rational>> = all.iter().map(|q| (0..width).map(|k| q.coeff(k)).collect()).collect();
        rank(&rows) == self.basis.len()
    }

    /// Whether `b` is a basis of this space.
    pub fn is_basis(&self, b: &[Poly]) -> bool {
        b.len() == self.basis.len()
            && b.iter().all(|p| self.contains(p))
            && Subspace::new(b.to_vec()).is_ok()
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let basis = Vec::<Poly>::deserialize(d)?;
        Subspace::new(basis).map_err(serde::de::Error::custom)
    }
}

/// Taylor coefficients of the basis at `z`, row-reduced.
fn taylor_rref(v: &Subspace, z: &Rational) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let shifted: Vec<Poly> = v.basis.iter().map(|p| p.taylor_shift(z)).collect();
    let width = shifted.iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
    let mut rows: Vec<Vec<Rational>> = shifted.iter().map(|p| (0..width).map(|k| p.coeff(k)).collect()).collect();
    let pivots = row_reduce(&mut rows, width);
    (rows, pivots)
}

/// Orders of vanishing `λ_0 < … < λ_r` realized by `V` at `z`, and the
/// weight `μ_i = λ_i − λ_{i−1} − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exponents {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl Exponents {
    pub fn is_regular(&self) -> bool {
        self.mu.iter().all(|&m| m == 0)
    }
}

pub fn exponents_at(v: &Subspace, z: &Rational) -> Exponents {
    let (_, lambda) = taylor_rref(v, z);
    let mu = lambda.windows(2).map(|w| w[1] - w[0] - 1).collect();
    Exponents { lambda, mu }
}

/// The basis `b_i = (x−z)^{i−1}/(i−1)! + O((x−z)^i)` of `V`.
pub fn unipotent_basis(v: &Subspace, z: &Rational) -> Result<Vec<Poly>, GeneralError> {
    let (rows, pivots) = taylor_rref(v, z);
    if pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(GeneralError::SingularPoint(z.clone()));
    }
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(i, row)| Poly::from_coeffs(row).scale(&factorial(i).recip()).compose_shift(z))
        .collect())
}

pub fn unipotent_basis_check(v: &Subspace, b: &[Poly], z: &Rational) -> bool {
    if !v.is_basis(b) {
        return false;
    }
    b.iter().enumerate().all(|(i, p)| {
        let t = p.taylor_shift(z);
        (0..i).all(|k| t.coeff(k).is_zero()) && t.coeff(i) == factorial(i).recip()
    })
}

/// Singular points of `V`, their weights, and the twists
/// `T_i = ∏_a (x − z_a)^{μ_i^{(a)}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularData {
    #[serde(with = "seq_as_strings")]
    points: Vec<Rational>,
    weights: Vec<Vec<usize>>,
    twists: Vec<Poly>,
}

#[derive(Deserialize)]
struct RawSingularData {
    rank: Option<usize>,
    #[serde(with = "seq_as_strings")]
    points: Vec<Rational>,
    weights: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for SingularData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawSingularData::deserialize(d)?;
        let rank = raw.rank.or_else(|| raw.weights.first().map(Vec::len)).unwrap_or(0);
        SingularData::from_explicit(rank, raw.points, raw.weights).map_err(serde::de::Error::custom)
    }
}

impl SingularData {
    /// No singular points; every twist is 1.
    pub fn trivial(rank: usize) -> Self {
        SingularData { points: Vec::new(), weights: Vec::new(), twists: vec![Poly::one(); rank] }
    }

    pub fn from_explicit(rank: usize, points: Vec<Rational>, weights: Vec<Vec<usize>>) -> Result<Self, GeneralError> {
        if points.len() != weights.len() || weights.iter().any(|w| w.len() != rank) {
            return Err(GeneralError::Shape);
        }
        for (k, z) in points.iter().enumerate() {
            if points[..k].contains(z) {
                return Err(GeneralError::Shape);
            }
        }
        let twists = (0..rank)
            .map(|i| {
                points
                    .iter()
                    .zip(&weights)
                    .fold(Poly::one(), |t, (z, w)| &t * &Poly::linear_factor(z).pow(w[i]))
            })
            .collect();
        Ok(SingularData { points, weights, twists })
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn weights(&self) -> &[Vec<usize>] {
        &self.weights
    }

    pub fn twists(&self) -> &[Poly] {
        &self.twists
    }

    /// `T_i` for `1 ≤ i ≤ r`.
    pub fn twist(&self, i: usize) -> &Poly {
        &self.twists[i - 1]
    }

    pub fn is_regular(&self, z: &Rational) -> bool {
        !self.points.contains(z)
    }

    /// `∏_i T_i^{r+1−i}`, the Wronskian of any basis up to a constant.
    pub fn wronskian_shape(&self) -> Poly {
        let r = self.rank();
        self.twists.iter().enumerate().fold(Poly::one(), |acc, (k, t)| &acc * &t.pow(r - k))
    }
}

/// Singular points from the rational roots of the Wronskian.
pub fn singular_data(v: &Subspace) -> Result<SingularData, GeneralError> {
    let w = wronskian(v.basis());
    let (roots, complete) = rational_roots(&w);
    if !complete {
        return Err(GeneralError::IrrationalSingularity(w.to_text()));
    }
    let (points, weights): (Vec<_>, Vec<_>) = roots
        .into_iter()
        .map(|(z, _)| {
            let mu = exponents_at(v, &z).mu;
            (z, mu)
        })
        .unzip();
    let data = SingularData::from_explicit(v.rank(), points, weights)?;
    let shape = data.wronskian_shape();
    match w.exact_div(&shape) {
        Some(c) if c.is_constant() => Ok(data),
        _ => Err(GeneralError::Inconsistent),
    }
}
