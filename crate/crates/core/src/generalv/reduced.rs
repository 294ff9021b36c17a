use super::subspace::{unipotent_basis, SingularData, Subspace};
use super::GeneralError;
use crate::exactpoly::linear::{solve, LinearSolution};
use crate::exactpoly::{wronskian, wronskian2, Poly, PolyTuple, Rational};
use crate::mutations::{normalized_solution, wronskian_solve, MutationError};
use crate::words::Word;
use num_traits::Zero;
use serde::Serialize;

/// `∏_{j<i} T_j^{i−j}`, the factor removed from `Wr(b_1, …, b_i)`.
fn reduction_factor(data: &SingularData, i: usize) -> Poly {
    (1..i.min(data.rank() + 1)).fold(Poly::one(), |acc, j| &acc * &data.twist(j).pow(i - j))
}

fn reduction_value(data: &SingularData, i: usize, z: &Rational) -> Rational {
    reduction_factor(data, i).eval(z)
}

/// `Wd(b_1, …, b_i) = Wr(b_1, …, b_i) / ∏_{j<i} T_j^{i−j}`.
pub fn reduced_wronskian(data: &SingularData, b: &[Poly]) -> Result<Poly, GeneralError> {
    let w = wronskian(b);
    w.exact_div(&reduction_factor(data, b.len())).ok_or(GeneralError::NotExact { index: b.len() })
}

/// `(Wd(b_1), Wd(b_1, b_2), …, Wd(b_1, …, b_r))`.
pub fn reduced_wronski_map(data: &SingularData, b: &[Poly]) -> Result<PolyTuple, GeneralError> {
    check_basis_len(data, b)?;
    (1..=data.rank()).map(|i| reduced_wronskian(data, &b[..i])).collect::<Result<_, _>>().map(PolyTuple::new)
}

/// The reduced Wronski map rescaled by `∏_{j<i} T_j(z)^{i−j}`, so that a
/// unipotent basis at `z` maps to a tuple with `y_i(z) = 1`.
pub fn reduced_wronski_map_at(data: &SingularData, b: &[Poly], z: &Rational) -> Result<PolyTuple, GeneralError> {
    if !data.is_regular(z) {
        return Err(GeneralError::SingularPoint(z.clone()));
    }
    let y = reduced_wronski_map(data, b)?;
    Ok(PolyTuple::new(
        y.into_entries()
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.scale(&reduction_value(data, k + 1, z)))
            .collect(),
    ))
}

fn check_basis_len(data: &SingularData, b: &[Poly]) -> Result<(), GeneralError> {
    if b.len() != data.rank() + 1 {
        return Err(GeneralError::RankMismatch { expected: data.rank() + 1, got: b.len() });
    }
    Ok(())
}

/// `Wd(b_1, …, b_{r+1})`, which is constant on a basis of `V`.
pub fn volume(data: &SingularData, b: &[Poly]) -> Result<Rational, GeneralError> {
    check_basis_len(data, b)?;
    let w = reduced_wronskian(data, b)?;
    if !w.is_constant() || w.is_zero() {
        return Err(GeneralError::NotBasis);
    }
    Ok(w.coeff(0))
}

/// Checks `Wr(y_i, ỹ_i) = const·T_i y_{i−1} y_{i+1}` with
/// `ỹ_i = Wd(b_1, …, b_{i−1}, b_{i+1})` and returns the constant.
pub fn twisted_pair_constant(data: &SingularData, b: &[Poly], i: usize) -> Result<Rational, GeneralError> {
    check_basis_len(data, b)?;
    let r = data.rank();
    if i == 0 || i > r {
        return Err(GeneralError::InvalidIndex { index: i, rank: r });
    }
    let y = reduced_wronski_map(data, b)?;
    let mut skipped: Vec<Poly> = b[..i - 1].to_vec();
    skipped.push(b[i].clone());
    let y_tilde = reduced_wronskian(data, &skipped)?;
    let lhs = wronskian2(&y.get(i), &y_tilde);
    let next = if i == r { reduced_wronskian(data, b)? } else { y.get(i + 1) };
    let rhs = &(data.twist(i) * &y.get(i - 1)) * &next;
    let (Some(l), Some(rr)) = (lhs.leading_coeff(), rhs.leading_coeff()) else {
        return Err(GeneralError::NotBasis);
    };
    let c = l / rr;
    if lhs == rhs.scale(&c) {
        Ok(c)
    } else {
        Err(GeneralError::TwistIdentity { index: i })
    }
}

fn lift(e: MutationError) -> GeneralError {
    GeneralError::Mutation(e)
}

/// The normalized solution `ŷ` of `Wr(y_i, ŷ) = (T_i / T_i(z)) y_{i−1} y_{i+1}`
/// with `ŷ(z) = 0`, `ŷ'(z) = 1`.
pub fn normalized_direction_v(data: &SingularData, y: &PolyTuple, i: usize, z: &Rational) -> Result<Poly, GeneralError> {
    let r = data.rank();
    if y.rank() != r {
        return Err(GeneralError::RankMismatch { expected: r, got: y.rank() });
    }
    if i == 0 || i > r {
        return Err(GeneralError::InvalidIndex { index: i, rank: r });
    }
    let tz = data.twist(i).eval(z);
    if tz.is_zero() {
        return Err(GeneralError::SingularPoint(z.clone()));
    }
    let h = (&(data.twist(i) * &y.get(i - 1)) * &y.get(i + 1)).scale(&tz.recip());
    normalized_solution(&y.get(i), &h, z).map(|(hat, _)| hat).map_err(lift)
}

/// `ν_i(c)`: replaces `y_i` by `y_i + c ŷ_i`.
pub fn normalized_mutation_v(
    data: &SingularData,
    y: &PolyTuple,
    i: usize,
    c: &Rational,
    z: &Rational,
) -> Result<PolyTuple, GeneralError> {
    let hat = normalized_direction_v(data, y, i, z)?;
    Ok(y.with_entry(i, &y.get(i) + &hat.scale(c)))
}

/// `ν_{i_q}(c_q) ⋯ ν_{i_1}(c_1) y0`, consuming letters from the right.
pub fn wronskian_chart(
    data: &SingularData,
    z: &Rational,
    y0: &PolyTuple,
    h: &Word,
    c: &[Rational],
) -> Result<PolyTuple, GeneralError> {
    if h.len() != c.len() {
        return Err(GeneralError::Mutation(MutationError::LengthMismatch { word: h.len(), params: c.len() }));
    }
    h.applied().zip(c).try_fold(y0.clone(), |y, (i, ci)| normalized_mutation_v(data, &y, i, ci, z))
}

/// For every `i`, `Wr(y_i, ŷ) = T_i y_{i−1} y_{i+1}` has a polynomial solution.
pub fn fertility_check(y: &PolyTuple, twists: &[Poly]) -> bool {
    twist_rhs(y, twists).all(|(yi, h)| wronskian_solve(&yi, &h).is_ok())
}

/// Each `y_i` is squarefree and coprime to `T_i y_{i−1} y_{i+1}`.
pub fn genericity_check(y: &PolyTuple, twists: &[Poly]) -> bool {
    twist_rhs(y, twists).all(|(yi, h)| {
        !yi.is_zero() && yi.gcd(&yi.derivative()).is_constant() && yi.gcd(&h).is_constant()
    })
}

fn twist_rhs<'a>(y: &'a PolyTuple, twists: &'a [Poly]) -> impl Iterator<Item = (Poly, Poly)> + 'a {
    (1..=y.rank()).map(move |i| {
        let t = twists.get(i - 1).cloned().unwrap_or_else(Poly::one);
        (y.get(i), &(&t * &y.get(i - 1)) * &y.get(i + 1))
    })
}

/// The pencil `(y_1 : … : y_i + c ŷ_i : … : y_r)` generated in direction `i`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationCurve {
    pub tuple: PolyTuple,
    pub index: usize,
    pub direction: Poly,
}

impl GenerationCurve {
    pub fn at(&self, c: &Rational) -> PolyTuple {
        self.tuple.with_entry(self.index, &self.tuple.get(self.index) + &self.direction.scale(c))
    }
}

pub fn generation_curve(y: &PolyTuple, i: usize, twists: &[Poly]) -> Result<GenerationCurve, GeneralError> {
    if i == 0 || i > y.rank() {
        return Err(GeneralError::InvalidIndex { index: i, rank: y.rank() });
    }
    let (yi, h) = twist_rhs(y, twists).nth(i - 1).expect("index checked");
    let sol = wronskian_solve(&yi, &h).map_err(lift)?;
    Ok(GenerationCurve { tuple: y.clone(), index: i, direction: sol.particular })
}

/// Recovers the basis `b ∈ N·u` (with `u` the unipotent basis at `z`) whose
/// normalized reduced Wronski image is `y`. Each `b_i = u_i + Σ_{j>i} g_{ij} u_j`
/// is solved for in turn, since `y_i` is linear in `b_i`.
pub fn bethe_cell_inverse(
    v: &Subspace,
    data: &SingularData,
    z: &Rational,
    y: &PolyTuple,
) -> Result<Vec<Poly>, GeneralError> {
    let r = v.rank();
    if y.rank() != r {
        return Err(GeneralError::RankMismatch { expected: r, got: y.rank() });
    }
    let u = unipotent_basis(v, z)?;
    let mut b: Vec<Poly> = Vec::with_capacity(r + 1);
    for i in 1..=r {
        let scale = reduction_value(data, i, z);
        let image = |p: &Poly| -> Result<Poly, GeneralError> {
            let mut args = b.clone();
            args.push(p.clone());
            Ok(reduced_wronskian(data, &args)?.scale(&scale))
        };
        let base = image(&u[i - 1])?;
        let columns: Vec<Poly> = u[i..].iter().map(&image).collect::<Result<_, _>>()?;
        let target = &y.get(i) - &base;
        let height = columns.iter().chain([&target]).filter_map(Poly::degree).max().map_or(0, |d| d + 1);
        let a: Vec<Vec<Rational>> = (0..height).map(|k| columns.iter().map(|c| c.coeff(k)).collect()).collect();
        let rhs: Vec<Rational> = (0..height).map(|k| target.coeff(k)).collect();
        let g = match solve(&a, &rhs) {
            LinearSolution::Solved { particular, .. } if height > 0 => particular,
            LinearSolution::Solved { .. } => vec![Rational::zero(); columns.len()],
            LinearSolution::Inconsistent => return Err(GeneralError::NotInBetheCell),
        };
        let bi = u[i..].iter().zip(&g).fold(u[i - 1].clone(), |acc, (uj, gj)| &acc + &uj.scale(gj));
        b.push(bi);
    }
    b.push(u[r].clone());
    if reduced_wronski_map_at(data, &b, z)? != *y {
        return Err(GeneralError::NotInBetheCell);
    }
    Ok(b)
}
