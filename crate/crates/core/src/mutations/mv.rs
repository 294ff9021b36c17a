use crate::exactpoly::{Poly, PolyTuple, Rational};
use crate::words::Word;

use super::solve::wronskian_solve;
use super::MutationError;

/// The line `(y_1 : … : ỹ + v·y_i : … : y_r)` of one unnormalized mutation.
///
/// `base` is the monic solution of `Wr(y_i, ỹ) ∝ y_{i−1}y_{i+1}` whose
/// coefficient at `x^{deg y_i}` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvFamily {
    pub tuple: PolyTuple,
    pub index: usize,
    pub base: Poly,
}

impl MvFamily {
    pub fn direction(&self) -> Poly {
        self.tuple.get(self.index)
    }

    pub fn at(&self, v: &Rational) -> PolyTuple {
        let entry = &self.base + &self.direction().scale(v);
        self.tuple.with_entry(self.index, entry)
    }
}

pub fn mv_mutation(y: &PolyTuple, i: usize) -> Result<MvFamily, MutationError> {
    if i == 0 || i > y.rank() {
        return Err(MutationError::InvalidIndex { index: i, rank: y.rank() });
    }
    let yi = y.get(i);
    let k = yi.degree().ok_or(MutationError::ZeroPolynomial)?;
    let rhs = &y.get(i - 1) * &y.get(i + 1);
    let g = wronskian_solve(&yi, &rhs)?.particular;
    let lead = yi.leading_coeff().expect("nonzero").clone();
    let g = &g - &yi.scale(&(g.coeff(k) / lead));
    if g.is_zero() {
        return Err(MutationError::NormalizationImpossible);
    }
    Ok(MvFamily { tuple: y.clone(), index: i, base: g.monic() })
}

/// The unnormalized evolution from `(1, …, 1)`, rightmost letter first.
pub fn mv_evolve(word: &Word, params: &[Rational]) -> Result<PolyTuple, MutationError> {
    if params.len() != word.len() {
        return Err(MutationError::LengthMismatch { word: word.len(), params: params.len() });
    }
    word.applied()
        .zip(params)
        .try_fold(PolyTuple::ones(word.rank()), |y, (i, v)| Ok(mv_mutation(&y, i)?.at(v)))
}

/// `a₂b₀ − ½a₁b₁ + a₀b₂` for quadratics `(a, b)`.
pub fn sl3_relation(a: &Poly, b: &Poly) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    a.coeff(2) * b.coeff(0) - half * a.coeff(1) * b.coeff(1) + a.coeff(0) * b.coeff(2)
}

/// `(c₁, c₂, c₃) ↦ (c₃/2, c₁c₃ − c₂, 2c₁)`, the change of parameters from
/// the `(121)` cell to the `(212)` cell.
pub fn mv_cell_transition(c: &[Rational; 3]) -> [Rational; 3] {
    let two = Rational::from_integer(2.into());
    [&c[2] / &two, &c[0] * &c[2] - &c[1], &c[0] * &two]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};
    use num_traits::Zero;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    #[test]
    fn first_step() {
        let f = mv_mutation(&PolyTuple::ones(2), 1).unwrap();
        assert_eq!(f.base, Poly::x());
        let c1 = rat(5, 3);
        assert_eq!(f.at(&c1).entries(), &[Poly::from_coeffs(vec![c1, int(1)]), Poly::one()]);
    }

    #[test]
    fn cells_121_and_212() {
        let (c1, c2, c3) = (rat(2, 3), rat(-1, 4), rat(7, 5));
        let y = mv_evolve(&w("121"), &[c1.clone(), c2.clone(), c3.clone()]).unwrap();
        assert_eq!(y.get(1), Poly::from_coeffs(vec![&c1 * &c3 - &c2, c3.clone(), int(1)]));
        assert_eq!(y.get(2), Poly::from_coeffs(vec![c2.clone(), &c1 * int(2), int(1)]));
        assert!(sl3_relation(&y.get(1), &y.get(2)).is_zero());
        let d = mv_cell_transition(&[c1.clone(), c2.clone(), c3.clone()]);
        assert_eq!(mv_evolve(&w("212"), &d).unwrap(), y);
        assert_eq!(mv_cell_transition(&d), [c1, c2, c3]);
    }
}
