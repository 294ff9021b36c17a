use crate::exactpoly::linear::{solve, LinearSolution};
use crate::exactpoly::{wronskian2, Poly, Rational};
use num_traits::{One, Zero};

use super::MutationError;

/// A particular solution of `Wr(y, g) = h` and the shape of its system.
#[derive(Clone, Debug, PartialEq)]
pub struct WronskianSolution {
    pub particular: Poly,
    /// Coefficient equations in the linear system.
    pub equations: usize,
    /// Rank of the system; `equations - rank` equations were redundant.
    pub rank: usize,
}

impl WronskianSolution {
    /// Equations beyond those fixing the unknowns. They hold automatically
    /// for a consistent system; along evolutions these are the Bethe equations.
    pub fn surplus(&self) -> usize {
        self.equations - self.rank
    }
}

/// Solves `Wr(y, g) = y g' − y' g = h` for a polynomial `g` by undetermined
/// coefficients. Every solution is `particular + c·y`.
pub fn wronskian_solve(y: &Poly, h: &Poly) -> Result<WronskianSolution, MutationError> {
    let dy = y.degree().ok_or(MutationError::ZeroPolynomial)?;
    let dh = h.degree().unwrap_or(0);
    let d = (dh + 1).saturating_sub(dy).max(dy + 1);
    let equations = dy + d;
    // column k holds the coefficients of Wr(y, x^k)
    let columns: Vec<Poly> = (0..=d).map(|k| wronskian2(y, &Poly::monomial(Rational::one(), k))).collect();
    let a: Vec<Vec<Rational>> = (0..equations)
        .map(|row| columns.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let b: Vec<Rational> = (0..equations).map(|row| h.coeff(row)).collect();
    match solve(&a, &b) {
        LinearSolution::Inconsistent => Err(MutationError::NotFertile),
        LinearSolution::Solved { particular, rank } => {
            let g = Poly::from_coeffs(particular);
            debug_assert_eq!(wronskian2(y, &g), *h);
            Ok(WronskianSolution { particular: g, equations, rank })
        }
    }
}

/// The solution `ŷ` of `Wr(y, ŷ) = h` with `ŷ(z) = 0` and `ŷ'(z) = 1`.
pub fn normalized_solution(y: &Poly, h: &Poly, z: &Rational) -> Result<(Poly, WronskianSolution), MutationError> {
    let sol = wronskian_solve(y, h)?;
    let yz = y.eval(z);
    if yz.is_zero() {
        return Err(MutationError::NormalizationImpossible);
    }
    let shift = sol.particular.eval(z) / yz;
    let hat = &sol.particular - &y.scale(&shift);
    if !hat.derivative().eval(z).is_one() {
        return Err(MutationError::NormalizationImpossible);
    }
    Ok((hat, sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};

    #[test]
    fn constant_y() {
        let s = wronskian_solve(&Poly::one(), &Poly::one()).unwrap();
        assert_eq!(wronskian2(&Poly::one(), &s.particular), Poly::one());
        assert_eq!(s.particular.degree(), Some(1));
    }

    #[test]
    fn linear_y() {
        let b1 = rat(3, 7);
        let y = Poly::from_coeffs(vec![int(1), b1.clone()]);
        let (hat, _) = normalized_solution(&y, &Poly::one(), &int(0)).unwrap();
        assert_eq!(hat, Poly::x());
        let (hat, _) = normalized_solution(&Poly::one(), &y, &int(0)).unwrap();
        assert_eq!(hat, Poly::from_coeffs(vec![int(0), int(1), &b1 / int(2)]));
    }

    #[test]
    fn infertile() {
        // Wr(x², g) = 1 forces a residue at 0
        assert_eq!(
            wronskian_solve(&Poly::from_ints(&[0, 0, 1]), &Poly::one()),
            Err(MutationError::NotFertile)
        );
        assert_eq!(wronskian_solve(&Poly::zero(), &Poly::one()), Err(MutationError::ZeroPolynomial));
    }

    #[test]
    fn normalization_fails_at_a_root() {
        let y = Poly::from_ints(&[0, 1]);
        assert_eq!(
            normalized_solution(&y, &Poly::one(), &int(0)),
            Err(MutationError::NormalizationImpossible)
        );
    }
}
