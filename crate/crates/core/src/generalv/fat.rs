use super::reduced::bethe_cell_inverse;
use super::subspace::{SingularData, Subspace};
use super::GeneralError;
use crate::exactpoly::{Poly, PolyTuple, Rational};
use num_traits::Zero;

fn check_factors(d: &[Rational]) -> Result<(), GeneralError> {
    if d.iter().any(Zero::is_zero) {
        return Err(GeneralError::ZeroScaling);
    }
    Ok(())
}

/// `(d_1 y_1, …, d_r y_r)`.
pub fn scale_tuple(y: &PolyTuple, d: &[Rational]) -> Result<PolyTuple, GeneralError> {
    check_factors(d)?;
    if d.len() != y.rank() {
        return Err(GeneralError::RankMismatch { expected: y.rank(), got: d.len() });
    }
    Ok(PolyTuple::new(y.entries().iter().zip(d).map(|(p, c)| p.scale(c)).collect()))
}

/// `(b_1 d_1, b_2 d_2/d_1, …, b_r d_r/d_{r−1}, b_{r+1}/d_r)`, under which
/// `Wd(b_1, …, b_i)` picks up exactly `d_i`.
pub fn scale_basis(b: &[Poly], d: &[Rational]) -> Result<Vec<Poly>, GeneralError> {
    check_factors(d)?;
    if d.len() + 1 != b.len() {
        return Err(GeneralError::RankMismatch { expected: b.len() - 1, got: d.len() });
    }
    let one = Rational::from_integer(1.into());
    Ok(b.iter()
        .enumerate()
        .map(|(k, p)| {
            let up = d.get(k).unwrap_or(&one);
            let down = if k == 0 { &one } else { &d[k - 1] };
            p.scale(&(up / down))
        })
        .collect())
}

/// Splits a fat tuple into its torus coordinates `d_i = y_i(z)` and the
/// normalized tuple with `y_i(z) = 1`.
pub fn fiber_coordinates(y: &PolyTuple, z: &Rational) -> Result<(PolyTuple, Vec<Rational>), GeneralError> {
    let d: Vec<Rational> = y.entries().iter().map(|p| p.eval(z)).collect();
    check_factors(&d)?;
    let base = PolyTuple::new(y.entries().iter().zip(&d).map(|(p, c)| p.scale(&c.recip())).collect());
    Ok((base, d))
}

/// Whether `y` is a torus rescaling of a point of the Bethe cell at `z`.
pub fn in_fat_cell(v: &Subspace, data: &SingularData, z: &Rational, y: &PolyTuple) -> bool {
    match fiber_coordinates(y, z) {
        Ok((base, _)) => bethe_cell_inverse(v, data, z, &base).is_ok(),
        Err(_) => false,
    }
}

/// Whether two fat tuples lie over the same projective point, i.e. differ
/// by a torus element.
pub fn same_fiber(a: &PolyTuple, b: &PolyTuple, z: &Rational) -> bool {
    match (fiber_coordinates(a, z), fiber_coordinates(b, z)) {
        (Ok((x, _)), Ok((y, _))) => x == y,
        _ => false,
    }
}

/// `α_1 β_1 − α_0 β_2 − α_2 β_0` for `y_1 = α_0 + α_1 x + α_2 x²/2`,
/// `y_2 = β_0 + β_1 x + β_2 x²/2`. Zero on the fat cell of `C[x]_{≤2}` at 0.
pub fn plucker_defect(y: &PolyTuple) -> Result<Rational, GeneralError> {
    if y.rank() != 2 {
        return Err(GeneralError::RankMismatch { expected: 2, got: y.rank() });
    }
    let (a, b) = (y.get(1), y.get(2));
    if a.degree().unwrap_or(0) > 2 || b.degree().unwrap_or(0) > 2 {
        return Err(GeneralError::Shape);
    }
    let (a0, a1, a2) = (a.divided_coeff(0), a.divided_coeff(1), a.divided_coeff(2));
    let (b0, b1, b2) = (b.divided_coeff(0), b.divided_coeff(1), b.divided_coeff(2));
    Ok(a1 * b1 - a0 * b2 - a2 * b0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{act, chart, standard_column};
    use crate::exactpoly::int;
    use crate::generalv::reduced::{reduced_wronski_map, volume};
    use crate::mutations::wronski_map;
    use crate::sampling::{rng_from_seed, signed_vec};
    use crate::words::Word;

    #[test]
    fn torus_actions_agree() {
        let mut rng = rng_from_seed(21);
        let data = SingularData::trivial(3);
        let g = chart(&Word::longest(3), &signed_vec(&mut rng, 6)).unwrap();
        let b = act(&g, &standard_column(3)).unwrap();
        let d = signed_vec(&mut rng, 3);
        let scaled = scale_basis(b.entries(), &d).unwrap();
        assert_eq!(
            reduced_wronski_map(&data, &scaled).unwrap(),
            scale_tuple(&reduced_wronski_map(&data, b.entries()).unwrap(), &d).unwrap()
        );
        assert_eq!(volume(&data, &scaled).unwrap(), int(1));
    }

    #[test]
    fn fat_membership_and_fibers() {
        let mut rng = rng_from_seed(5);
        let v = Subspace::polynomials_up_to(2);
        let data = SingularData::trivial(2);
        let z = int(0);
        let g = chart(&Word::longest(2), &signed_vec(&mut rng, 3)).unwrap();
        let y = wronski_map(&act(&g, &standard_column(2)).unwrap()).unwrap().into_tuple();
        let fat = scale_tuple(&y, &signed_vec(&mut rng, 2)).unwrap();
        assert!(in_fat_cell(&v, &data, &z, &fat));
        assert!(same_fiber(&fat, &y, &z));
        assert_eq!(plucker_defect(&fat).unwrap(), int(0));
        // y_2 = 1 + x² violates the Plücker relation with y_1 = 1
        let off = PolyTuple::new(vec![Poly::one(), Poly::from_ints(&[1, 0, 1])]);
        assert!(!in_fat_cell(&v, &data, &z, &off));
        assert_ne!(plucker_defect(&off).unwrap(), int(0));
        assert_eq!(scale_tuple(&y, &[int(1), int(0)]), Err(GeneralError::ZeroScaling));
    }
}
