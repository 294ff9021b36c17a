use crate::exactpoly::{int, Poly, PolyTuple, Rational};
use crate::words::Word;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::solve::{normalized_solution, WronskianSolution};
use super::MutationError;

/// A point of the Bethe cell for `V = C[x]_{≤r}`: every `y_i(0) = 1` and
/// `deg y_i ≤ i(r+1−i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BetheTuple {
    tuple: PolyTuple,
}

impl BetheTuple {
    pub fn new(tuple: PolyTuple) -> Result<Self, MutationError> {
        let r = tuple.rank();
        if r == 0 {
            return Err(MutationError::InvalidTuple("rank must be positive".into()));
        }
        for (k, y) in tuple.entries().iter().enumerate() {
            let i = k + 1;
            if !y.eval(&Rational::zero()).is_one() {
                return Err(MutationError::InvalidTuple(format!("y_{i}(0) ≠ 1")));
            }
            if y.degree().unwrap_or(0) > i * (r + 1 - i) {
                return Err(MutationError::InvalidTuple(format!("deg y_{i} exceeds {}", i * (r + 1 - i))));
            }
        }
        Ok(BetheTuple { tuple })
    }

    /// `(1, …, 1)`.
    pub fn ones(rank: usize) -> Self {
        BetheTuple { tuple: PolyTuple::ones(rank) }
    }

    pub fn rank(&self) -> usize {
        self.tuple.rank()
    }

    pub fn tuple(&self) -> &PolyTuple {
        &self.tuple
    }

    pub fn into_tuple(self) -> PolyTuple {
        self.tuple
    }

    pub fn entries(&self) -> &[Poly] {
        self.tuple.entries()
    }

    /// `y_i`, 1-based, with `y_0 = y_{r+1} = 1`.
    pub fn get(&self, i: usize) -> Poly {
        self.tuple.get(i)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.tuple.degrees().into_iter().map(|d| d.unwrap_or(0)).collect()
    }
}

impl fmt::Display for BetheTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tuple.fmt(f)
    }
}

impl<'de> Deserialize<'de> for BetheTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let t = PolyTuple::deserialize(d)?;
        BetheTuple::new(t).map_err(serde::de::Error::custom)
    }
}

/// The `i`-th normalized mutation with amount `c`, written `ν_i(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationDirection {
    pub index: usize,
    #[serde(with = "crate::exactpoly::rational::as_string")]
    pub amount: Rational,
}

impl MutationDirection {
    pub fn new(index: usize, amount: Rational) -> Self {
        MutationDirection { index, amount }
    }
}

/// One mutation of an evolution together with the solve behind it.
#[derive(Clone, Debug)]
pub struct EvolutionStep {
    pub letter: usize,
    pub amount: Rational,
    /// The normalized solution `ỹ_i` with `ỹ_i(0) = 0`, `ỹ_i'(0) = 1`.
    pub normalized: Poly,
    pub solve: WronskianSolution,
    pub after: BetheTuple,
}

/// `ỹ_i`: the solution of `Wr(y_i, ỹ) = y_{i−1} y_{i+1}` with `ỹ(0) = 0`,
/// `ỹ'(0) = 1`.
pub fn normalized_direction(y: &BetheTuple, i: usize) -> Result<(Poly, WronskianSolution), MutationError> {
    if i == 0 || i > y.rank() {
        return Err(MutationError::InvalidIndex { index: i, rank: y.rank() });
    }
    let rhs = &y.get(i - 1) * &y.get(i + 1);
    normalized_solution(&y.get(i), &rhs, &int(0))
}

/// `ν_i(c)`: replaces `y_i` by `y_i + c·ỹ_i`.
pub fn normalized_mutation(y: &BetheTuple, d: &MutationDirection) -> Result<BetheTuple, MutationError> {
    Ok(mutate_traced(y, d.index, &d.amount)?.after)
}

fn mutate_traced(y: &BetheTuple, i: usize, c: &Rational) -> Result<EvolutionStep, MutationError> {
    let (hat, solve) = normalized_direction(y, i)?;
    let entry = &y.get(i) + &hat.scale(c);
    let after = BetheTuple::new(y.tuple().with_entry(i, entry))?;
    Ok(EvolutionStep { letter: i, amount: c.clone(), normalized: hat, solve, after })
}

/// Every step of `ν_{i_m}(c_m) ⋯ ν_{i_1}(c_1)(1, …, 1)`.
pub fn evolve_traced(word: &Word, params: &[Rational]) -> Result<Vec<EvolutionStep>, MutationError> {
    if params.len() != word.len() {
        return Err(MutationError::LengthMismatch { word: word.len(), params: params.len() });
    }
    let mut y = BetheTuple::ones(word.rank());
    let mut steps = Vec::with_capacity(word.len());
    for (i, c) in word.applied().zip(params) {
        let step = mutate_traced(&y, i, c)?;
        y = step.after.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// `y_h(c) = ν_{i_m}(c_m) ⋯ ν_{i_1}(c_1)(1, …, 1)` for `h = (i_m … i_1)`;
/// `params[0] = c_1` drives the rightmost letter.
pub fn evolve(word: &Word, params: &[Rational]) -> Result<BetheTuple, MutationError> {
    Ok(evolve_traced(word, params)?
        .pop()
        .map_or_else(|| BetheTuple::ones(word.rank()), |s| s.after))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn poly(c: &[Rational]) -> Poly {
        Poly::from_coeffs(c.to_vec())
    }

    #[test]
    fn sl3_first_steps() {
        let (b1, b2) = (rat(2, 5), rat(-7, 3));
        let y = normalized_mutation(&BetheTuple::ones(2), &MutationDirection::new(1, b1.clone())).unwrap();
        assert_eq!(y.entries(), &[poly(&[int(1), b1.clone()]), Poly::one()]);
        let y = normalized_mutation(&y, &MutationDirection::new(2, b2.clone())).unwrap();
        assert_eq!(y.get(2), poly(&[int(1), b2.clone(), &b2 * &b1 / int(2)]));
        let same = normalized_mutation(&y, &MutationDirection::new(1, int(0))).unwrap();
        assert_eq!(same, y);
    }

    #[test]
    fn evolve_212() {
        let (c1, c2, c3) = (rat(1, 3), rat(5, 2), rat(-4, 7));
        let y = evolve(&Word::parse("212", 2).unwrap(), &[c1.clone(), c2.clone(), c3.clone()]).unwrap();
        assert_eq!(y.get(1), poly(&[int(1), c2.clone(), &c2 * &c1 / int(2)]));
        assert_eq!(y.get(2), poly(&[int(1), &c1 + &c3, &c3 * &c2 / int(2)]));
    }

    #[test]
    fn empty_and_errors() {
        assert_eq!(evolve(&Word::empty(3), &[]).unwrap(), BetheTuple::ones(3));
        assert!(evolve(&Word::parse("12", 2).unwrap(), &[int(1)]).is_err());
        assert!(normalized_mutation(&BetheTuple::ones(2), &MutationDirection::new(3, int(1))).is_err());
        assert!(BetheTuple::new(PolyTuple::new(vec![Poly::from_ints(&[2, 1])])).is_err());
        assert!(BetheTuple::new(PolyTuple::new(vec![Poly::from_ints(&[1, 1, 1])])).is_err());
    }

    #[test]
    fn one_parameter_law() {
        let y = evolve(&Word::parse("121", 2).unwrap(), &[int(1), int(2), int(3)]).unwrap();
        let (c, c2) = (rat(3, 4), rat(-2, 9));
        for i in 1..=2 {
            let twice = normalized_mutation(
                &normalized_mutation(&y, &MutationDirection::new(i, c.clone())).unwrap(),
                &MutationDirection::new(i, c2.clone()),
            )
            .unwrap();
            let once = normalized_mutation(&y, &MutationDirection::new(i, &c + &c2)).unwrap();
            assert_eq!(twice, once);
        }
    }
}
