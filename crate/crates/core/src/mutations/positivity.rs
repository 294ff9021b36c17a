use crate::cells::{is_totally_positive, to_unimatrix};
use crate::exactpoly::Rational;
use num_traits::Signed;
use serde::Serialize;

use super::{triangular_coords, wronski_inverse, BetheTuple, MutationError};

/// Positivity of a Bethe tuple, decided through its matrix, with the
/// closed-form inequalities alongside for `r ≤ 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub positive: bool,
    /// The inequality test in the tuple's own coefficients, where known.
    pub closed_form: Option<bool>,
    /// For `r = 3`: `α₁β₂ − α₂` and `β₃ − (α₁β₂ − α₂)`.
    #[serde(serialize_with = "witness_strings")]
    pub witnesses: Option<(Rational, Rational)>,
}

fn witness_strings<S: serde::Serializer>(w: &Option<(Rational, Rational)>, s: S) -> Result<S::Ok, S::Error> {
    use crate::exactpoly::format_rational;
    match w {
        None => s.serialize_none(),
        Some((a, b)) => s.collect_seq([format_rational(a), format_rational(b)]),
    }
}

impl PositivityReport {
    pub fn consistent(&self) -> bool {
        self.closed_form.is_none_or(|c| c == self.positive)
    }
}

/// Whether `y` is the Wronski image of a totally positive matrix.
pub fn positivity_check(y: &BetheTuple, seed: u64) -> Result<PositivityReport, MutationError> {
    let g = to_unimatrix(&wronski_inverse(y)?)?;
    let positive = is_totally_positive(&g, seed);
    let (closed_form, witnesses) = match y.rank() {
        1 => (Some(y.get(1).coeff(1).is_positive()), None),
        2 => {
            let e = y.get(1);
            let f = y.get(2);
            (Some([e.coeff(1), e.coeff(2), f.coeff(1), f.coeff(2)].iter().all(Signed::is_positive)), None)
        }
        3 => {
            let (ok, w) = sl4_inequalities(y);
            (Some(ok), Some(w))
        }
        _ => (None, None),
    };
    Ok(PositivityReport { positive, closed_form, witnesses })
}

/// All `α_i, β_i, γ_i > 0` and `β₃ > α₁β₂ − α₂ > 0`, in divided-power
/// coefficients of a rank-3 tuple.
pub fn sl4_inequalities(y: &BetheTuple) -> (bool, (Rational, Rational)) {
    assert_eq!(y.rank(), 3, "inequalities are stated for rank 3");
    let a = triangular_coords(y);
    let (a1, a2, b2, b3) = (a.get(1, 1), a.get(1, 2), a.get(2, 1), a.get(2, 2));
    let inner = a1 * b2 - a2;
    let outer = b3 - &inner;
    let coeffs_positive = (1..=3).all(|i| {
        let yi = y.get(i);
        (1..=yi.degree().unwrap_or(0)).all(|j| yi.coeff(j).is_positive())
    }) && (1..=3).all(|i| y.get(i).degree().is_some_and(|d| d == [3, 4, 3][i - 1]));
    let ok = coeffs_positive && inner.is_positive() && outer.is_positive();
    (ok, (inner, outer))
}

/// Every coefficient up to the exact degree of every entry is positive.
pub fn all_positive_coeffs(y: &BetheTuple) -> bool {
    y.entries().iter().all(|p| !p.is_constant() && p.coeffs().iter().all(Signed::is_positive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{act, standard_column, totally_positive_sample};
    use crate::exactpoly::int;
    use crate::mutations::{evolve, wronski_map};
    use crate::sampling::rng_from_seed;
    use crate::words::Word;

    #[test]
    fn totally_positive_images() {
        let mut rng = rng_from_seed(4);
        for r in 1..=3 {
            let g = totally_positive_sample(r, &mut rng);
            let y = wronski_map(&act(&g, &standard_column(r)).unwrap()).unwrap();
            let rep = positivity_check(&y, 1).unwrap();
            assert!(rep.positive && rep.consistent(), "rank {r}");
            assert!(all_positive_coeffs(&y));
        }
    }

    #[test]
    fn boundary_and_negative() {
        let rep = positivity_check(&BetheTuple::ones(3), 0).unwrap();
        assert!(!rep.positive && rep.consistent());
        assert!(!all_positive_coeffs(&BetheTuple::ones(2)));
        let y = evolve(&Word::parse("121", 2).unwrap(), &[int(1), int(-1), int(1)]).unwrap();
        let rep = positivity_check(&y, 0).unwrap();
        assert!(!rep.positive && rep.consistent());
        let y = evolve(&Word::parse("121", 2).unwrap(), &[int(1), int(1), int(1)]).unwrap();
        assert!(all_positive_coeffs(&y));
        let half = crate::exactpoly::rat(1, 2);
        assert_eq!(y.get(1), crate::exactpoly::Poly::from_coeffs(vec![int(1), int(2), half.clone()]));
        assert_eq!(y.get(2), crate::exactpoly::Poly::from_coeffs(vec![int(1), int(1), half]));
    }
}
